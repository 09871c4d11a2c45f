#include "qgen/board.hpp"

#include <cmath>

namespace qgen {

const char* to_string(ShipColor c) {
    switch (c) {
        case ShipColor::Blue: return "Blue";
        case ShipColor::Red: return "Red";
        case ShipColor::Purple: return "Purple";
    }
    return "?";
}

const char* to_string(Orientation o) { return o == Orientation::H ? "H" : "V"; }

ShipSpec make_ship(ShipColor color, Coord topleft, Orientation orient, int size) {
    if (size < 2 || size > 4) throw DataError("ship size must be 2..4");
    ShipSpec s;
    s.color = color;
    s.topleft = topleft;
    s.orient = orient;
    s.size = static_cast<std::uint8_t>(size);
    for (int i = 0; i < size; ++i) {
        const int row = topleft.row + (orient == Orientation::V ? i : 0);
        const int col = topleft.col + (orient == Orientation::H ? i : 0);
        if (!coord_in_bounds(row, col)) throw DataError("ship extends outside the grid");
        s.tiles |= tile_bit(Coord{static_cast<std::uint8_t>(row), static_cast<std::uint8_t>(col)});
    }
    return s;
}

static char cell_char(CellState s) {
    switch (s) {
        case CellState::Hidden: return '-';
        case CellState::Water: return 'W';
        case CellState::Blue: return 'B';
        case CellState::Red: return 'R';
        case CellState::Purple: return 'P';
    }
    return '?';
}

static CellState cell_from_char(char c, std::size_t line) {
    switch (c) {
        case '-': return CellState::Hidden;
        case 'W': return CellState::Water;
        case 'B': return CellState::Blue;
        case 'R': return CellState::Red;
        case 'P': return CellState::Purple;
    }
    throw FormatError(std::string("invalid board character '") + c + "'", line);
}

Board Board::parse(std::string_view text) {
    Board b;
    std::size_t pos = 0;
    for (int row = 0; row < kGridSize; ++row) {
        const std::size_t line_no = static_cast<std::size_t>(row) + 1;
        if (text.size() - pos < kGridSize + 1) throw FormatError("board row truncated", line_no);
        for (int col = 0; col < kGridSize; ++col)
            b.cells_[row * kGridSize + col] = cell_from_char(text[pos + col], line_no);
        if (text[pos + kGridSize] != '\n') throw FormatError("board row not newline-terminated", line_no);
        pos += kGridSize + 1;
    }
    if (pos != text.size()) throw FormatError("trailing data after board", 7);
    return b;
}

Board Board::parse_line(std::string_view text) {
    if (text.size() != kCellCount + kGridSize - 1)
        throw FormatError("board line has wrong length", 1);
    Board b;
    std::size_t pos = 0;
    for (int row = 0; row < kGridSize; ++row) {
        for (int col = 0; col < kGridSize; ++col)
            b.cells_[row * kGridSize + col] = cell_from_char(text[pos++], 1);
        if (row + 1 < kGridSize) {
            if (text[pos] != '/') throw FormatError("expected '/' between board rows", 1);
            ++pos;
        }
    }
    return b;
}

std::string Board::to_text() const {
    std::string out;
    out.reserve(kCellCount + kGridSize);
    for (int row = 0; row < kGridSize; ++row) {
        for (int col = 0; col < kGridSize; ++col) out += cell_char(cells_[row * kGridSize + col]);
        out += '\n';
    }
    return out;
}

std::string Board::to_line() const {
    std::string out;
    out.reserve(kCellCount + kGridSize - 1);
    for (int row = 0; row < kGridSize; ++row) {
        if (row) out += '/';
        for (int col = 0; col < kGridSize; ++col) out += cell_char(cells_[row * kGridSize + col]);
    }
    return out;
}

TileMask Board::mask_of(CellState s) const {
    TileMask m = 0;
    for (int i = 0; i < kCellCount; ++i)
        if (cells_[i] == s) m |= TileMask{1} << i;
    return m;
}

std::vector<ShipSpec> enumerate_placements(ShipColor color) {
    std::vector<ShipSpec> out;
    out.reserve(144);
    for (int size = 2; size <= 4; ++size) {
        for (Orientation orient : {Orientation::H, Orientation::V}) {
            for (int row = 1; row <= kGridSize; ++row) {
                for (int col = 1; col <= kGridSize; ++col) {
                    const int end_row = orient == Orientation::V ? row + size - 1 : row;
                    const int end_col = orient == Orientation::H ? col + size - 1 : col;
                    if (!coord_in_bounds(end_row, end_col)) continue;
                    out.push_back(make_ship(
                        color, Coord{static_cast<std::uint8_t>(row), static_cast<std::uint8_t>(col)},
                        orient, size));
                }
            }
        }
    }
    return out;
}

const std::vector<Hypothesis>& enumerate_hypotheses() {
    static const std::vector<Hypothesis> space = [] {
        const auto blues = enumerate_placements(ShipColor::Blue);
        const auto reds = enumerate_placements(ShipColor::Red);
        const auto purples = enumerate_placements(ShipColor::Purple);
        std::vector<Hypothesis> out;
        out.reserve(1700000);
        for (const ShipSpec& b : blues) {
            for (const ShipSpec& r : reds) {
                if (b.tiles & r.tiles) continue;
                const TileMask br = b.tiles | r.tiles;
                for (const ShipSpec& p : purples) {
                    if (br & p.tiles) continue;
                    out.push_back(Hypothesis{b, r, p});
                }
            }
        }
        return out;
    }();
    return space;
}

Board render(const Hypothesis& h) {
    Board b;
    for (int i = 0; i < kCellCount; ++i) b.set(i, CellState::Water);
    for (ShipColor c : kShipColors) {
        const ShipSpec& ship = h.ship(c);
        const CellState state = c == ShipColor::Blue  ? CellState::Blue
                                : c == ShipColor::Red ? CellState::Red
                                                      : CellState::Purple;
        for (int i = 0; i < kCellCount; ++i)
            if (ship.tiles >> i & 1) b.set(i, state);
    }
    return b;
}

Board partial_render(const Hypothesis& h, TileMask revealed) {
    const Board full = render(h);
    Board b;
    for (int i = 0; i < kCellCount; ++i)
        if (revealed >> i & 1) b.set(i, full.at(i));
    return b;
}

namespace {

// Revealed cells split by value; consistency is then four mask tests.
struct RevealedMasks {
    TileMask blue, red, purple, water;

    explicit RevealedMasks(const Board& b)
        : blue(b.mask_of(CellState::Blue)),
          red(b.mask_of(CellState::Red)),
          purple(b.mask_of(CellState::Purple)),
          water(b.mask_of(CellState::Water)) {}

    bool matches(const Hypothesis& h) const {
        return !(blue & ~h.blue.tiles) && !(red & ~h.red.tiles) && !(purple & ~h.purple.tiles) &&
               !(water & h.occupied());
    }
};

}  // namespace

bool consistent(const Hypothesis& h, const Board& b) { return RevealedMasks(b).matches(h); }

HypothesisSpace hypothesis_space(const Board& b) {
    const RevealedMasks masks(b);
    HypothesisSpace space;
    space.source_board = b;
    for (const Hypothesis& h : enumerate_hypotheses())
        if (masks.matches(h)) space.hypotheses.push_back(h);
    if (space.hypotheses.empty()) throw EmptySpaceError("no hypothesis is consistent with the board");
    return space;
}

std::vector<std::uint32_t> hypothesis_space_indices(const Board& b) {
    const RevealedMasks masks(b);
    const auto& all = enumerate_hypotheses();
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 0; i < all.size(); ++i)
        if (masks.matches(all[i])) out.push_back(i);
    if (out.empty()) throw EmptySpaceError("no hypothesis is consistent with the board");
    return out;
}

std::size_t count_consistent(const Board& b, std::size_t cap) {
    const RevealedMasks masks(b);
    std::size_t count = 0;
    for (const Hypothesis& h : enumerate_hypotheses()) {
        if (masks.matches(h)) {
            ++count;
            if (cap && count > cap) return count;
        }
    }
    return count;
}

SampledBoard sample_board(Rng& rng, const SampleBoardOptions& opts) {
    const auto& all = enumerate_hypotheses();
    std::array<int, kCellCount> cells;
    for (;;) {
        const Hypothesis& h = all[rng.index(all.size())];
        const int k = static_cast<int>(rng.uniform_int(1, kCellCount - 1));
        // k distinct reveal positions via partial Fisher-Yates.
        for (int i = 0; i < kCellCount; ++i) cells[i] = i;
        TileMask revealed = 0;
        for (int i = 0; i < k; ++i) {
            const int j = i + static_cast<int>(rng.index(kCellCount - i));
            std::swap(cells[i], cells[j]);
            revealed |= TileMask{1} << cells[i];
        }
        if (!(revealed & h.occupied())) continue;  // no ship tile observed
        Board b = partial_render(h, revealed);
        if (opts.max_space_size && count_consistent(b, opts.max_space_size) > opts.max_space_size)
            continue;
        return SampledBoard{std::move(b), h};
    }
}

double board_entropy(const Board& b) {
    const std::size_t n = count_consistent(b);
    if (n == 0) throw EmptySpaceError("no hypothesis is consistent with the board");
    return std::log2(static_cast<double>(n));
}

}  // namespace qgen
