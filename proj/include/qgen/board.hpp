#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qgen/errors.hpp"
#include "qgen/rng.hpp"

namespace qgen {

// Game geometry: 6x6 grid, three ships (blue/red/purple), each horizontal or
// vertical and 2-4 tiles long. Tile occupancy is kept as a 36-bit mask so
// consistency checks over the full hypothesis space are a handful of ANDs.

inline constexpr int kGridSize = 6;
inline constexpr int kCellCount = 36;

using TileMask = std::uint64_t;  // bits 0..35, row-major from top-left
inline constexpr TileMask kAllCells = (TileMask{1} << kCellCount) - 1;

// 1-based board coordinate, row 1 at the top.
struct Coord {
    std::uint8_t row = 1;
    std::uint8_t col = 1;
    auto operator<=>(const Coord&) const = default;
};

inline bool coord_in_bounds(int row, int col) {
    return row >= 1 && row <= kGridSize && col >= 1 && col <= kGridSize;
}

inline int cell_index(Coord c) { return (c.row - 1) * kGridSize + (c.col - 1); }
inline Coord coord_of(int index) {
    return Coord{static_cast<std::uint8_t>(index / kGridSize + 1),
                 static_cast<std::uint8_t>(index % kGridSize + 1)};
}
inline TileMask tile_bit(Coord c) { return TileMask{1} << cell_index(c); }

enum class ShipColor : std::uint8_t { Blue, Red, Purple };
inline constexpr std::array<ShipColor, 3> kShipColors = {ShipColor::Blue, ShipColor::Red,
                                                         ShipColor::Purple};

enum class Orientation : std::uint8_t { H, V };

// Cell observation. Enumerator order fixes the feature channel order and the
// board text characters {-, W, B, R, P}.
enum class CellState : std::uint8_t { Hidden, Water, Blue, Red, Purple };

const char* to_string(ShipColor c);
const char* to_string(Orientation o);

// One ship placement. `tiles` is derived from the other fields and cached.
struct ShipSpec {
    ShipColor color = ShipColor::Blue;
    Coord topleft;
    Orientation orient = Orientation::H;
    std::uint8_t size = 2;
    TileMask tiles = 0;

    bool operator==(const ShipSpec&) const = default;
};

// Builds a ShipSpec, computing the occupancy mask. Throws DataError if any
// tile would fall outside the grid or size is not in 2..4.
ShipSpec make_ship(ShipColor color, Coord topleft, Orientation orient, int size);

// A complete ship configuration: the latent game state.
struct Hypothesis {
    ShipSpec blue;
    ShipSpec red;
    ShipSpec purple;

    const ShipSpec& ship(ShipColor c) const {
        switch (c) {
            case ShipColor::Red: return red;
            case ShipColor::Purple: return purple;
            default: return blue;
        }
    }
    TileMask occupied() const { return blue.tiles | red.tiles | purple.tiles; }
    bool operator==(const Hypothesis&) const = default;
};

// A 6x6 grid of observations. May be inconsistent with every hypothesis;
// that is detected by hypothesis_space, not prevented here.
class Board {
  public:
    Board() { cells_.fill(CellState::Hidden); }

    static Board fully_hidden() { return Board(); }

    // Parses the 6-line text form: rows of exactly 6 characters from
    // {-, W, B, R, P}, each newline-terminated. Anything else is rejected
    // with a FormatError carrying the offending line number.
    static Board parse(std::string_view text);

    // Single-line form used inside corpus/dump records: rows joined by '/'.
    static Board parse_line(std::string_view text);

    std::string to_text() const;
    std::string to_line() const;

    CellState at(Coord c) const { return cells_[cell_index(c)]; }
    CellState at(int index) const { return cells_[index]; }
    void set(Coord c, CellState s) { cells_[cell_index(c)] = s; }
    void set(int index, CellState s) { cells_[index] = s; }

    TileMask mask_of(CellState s) const;
    TileMask revealed() const { return kAllCells & ~mask_of(CellState::Hidden); }

    bool operator==(const Board&) const = default;

  private:
    std::array<CellState, kCellCount> cells_;
};

// All in-bounds placements for one ship color in canonical order:
// size ascending, H before V, then row-major topleft. Always 144 entries.
std::vector<ShipSpec> enumerate_placements(ShipColor color);

// Every non-overlapping (blue, red, purple) placement triple, ordered
// lexicographically by the placement indices. Computed once and cached;
// subsequent calls return the cached vector.
const std::vector<Hypothesis>& enumerate_hypotheses();

// Fully revealed board for a hypothesis: ship tiles colored, the rest Water.
Board render(const Hypothesis& h);

// Board showing `revealed` cells of render(h); everything else Hidden.
Board partial_render(const Hypothesis& h, TileMask revealed);

// True iff every revealed cell of b matches render(h).
bool consistent(const Hypothesis& h, const Board& b);

// The hypotheses consistent with a board, in canonical enumeration order.
struct HypothesisSpace {
    std::vector<Hypothesis> hypotheses;
    Board source_board;
    std::size_t size() const { return hypotheses.size(); }
};

// Filters the full enumeration by consistency. Throws EmptySpaceError if no
// hypothesis survives (impossible board).
HypothesisSpace hypothesis_space(const Board& b);

// Same filter kept as indices into enumerate_hypotheses(); the cheap
// representation used by training loops that hold many boards at once.
std::vector<std::uint32_t> hypothesis_space_indices(const Board& b);

// |hypothesis_space(b)| without materializing it. If cap > 0, counting stops
// at cap + 1 so callers can test "exceeds cap" cheaply.
std::size_t count_consistent(const Board& b, std::size_t cap = 0);

struct SampleBoardOptions {
    // Resample boards whose consistent space exceeds this cap; 0 disables the
    // cap (evaluation use).
    std::size_t max_space_size = 100000;
};

struct SampledBoard {
    Board board;
    Hypothesis truth;
};

// Draws a hypothesis uniformly, reveals k ~ U{1..35} uniformly chosen cells,
// and rejection-resamples the whole draw until at least one revealed cell is
// a ship tile (and the space cap, if any, is met).
SampledBoard sample_board(Rng& rng, const SampleBoardOptions& opts = {});

// log2 |hypothesis_space(b)|: entropy in bits of the uniform prior.
double board_entropy(const Board& b);

}  // namespace qgen
