#include "qgen/board.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "doctest.h"

using namespace qgen;

// Full hypothesis count, frozen from the brute-force oracle below.
static constexpr std::size_t kTotalHypotheses = 1653456;

TEST_CASE("placement enumeration matches the closed-form count") {
    // 2 orientations x 6 lines x (7 - s) offsets per size.
    std::size_t expected = 0;
    for (int s : {2, 3, 4}) expected += 2 * 6 * (7 - s);
    for (ShipColor c : kShipColors) {
        const auto placements = enumerate_placements(c);
        CHECK(placements.size() == 144);
        CHECK(placements.size() == expected);
    }
}

TEST_CASE("placement list details") {
    const auto placements = enumerate_placements(ShipColor::Red);

    std::size_t size2_h = 0;
    for (const auto& p : placements)
        if (p.size == 2 && p.orient == Orientation::H) ++size2_h;
    CHECK(size2_h == 30);  // 6 rows x 5 starting columns

    // Out-of-bounds placement never appears.
    for (const auto& p : placements) {
        CHECK_FALSE((p.topleft == Coord{6, 6} && p.orient == Orientation::H && p.size == 2));
        CHECK((p.tiles & ~kAllCells) == 0);
        CHECK(std::popcount(p.tiles) == p.size);
    }

    // No duplicates; canonical order is by size, then orientation, then topleft.
    std::set<TileMask> seen;
    for (const auto& p : placements) CHECK(seen.insert(p.tiles).second);
    for (std::size_t i = 1; i < placements.size(); ++i) {
        const auto& a = placements[i - 1];
        const auto& b = placements[i];
        const auto key = [](const ShipSpec& s) {
            return std::tuple(s.size, s.orient, s.topleft.row, s.topleft.col);
        };
        CHECK(key(a) < key(b));
    }

    // Identical lists across colors, up to the color field.
    const auto blues = enumerate_placements(ShipColor::Blue);
    for (std::size_t i = 0; i < placements.size(); ++i) {
        CHECK(blues[i].tiles == placements[i].tiles);
        CHECK(blues[i].color == ShipColor::Blue);
        CHECK(placements[i].color == ShipColor::Red);
    }
}

TEST_CASE("ship construction rejects out-of-bounds and bad sizes") {
    CHECK_THROWS_AS(make_ship(ShipColor::Blue, Coord{6, 6}, Orientation::H, 2), DataError);
    CHECK_THROWS_AS(make_ship(ShipColor::Blue, Coord{1, 1}, Orientation::H, 5), DataError);
    CHECK_THROWS_AS(make_ship(ShipColor::Blue, Coord{1, 1}, Orientation::H, 1), DataError);
}

TEST_CASE("full hypothesis enumeration has the oracle count") {
    const auto& space = enumerate_hypotheses();
    CHECK(space.size() == kTotalHypotheses);

    // Independent recount with ship roles permuted (purple outer, red inner),
    // relabeled back to the same total.
    const auto placements = enumerate_placements(ShipColor::Blue);
    std::size_t permuted = 0;
    for (const auto& p : placements) {
        for (const auto& b : placements) {
            if (p.tiles & b.tiles) continue;
            const TileMask pb = p.tiles | b.tiles;
            for (const auto& r : placements)
                if (!(pb & r.tiles)) ++permuted;
        }
    }
    CHECK(permuted == kTotalHypotheses);
}

TEST_CASE("enumerated hypotheses are disjoint and canonically ordered") {
    const auto& space = enumerate_hypotheses();
    // Exhaustive disjointness on a strided sample.
    for (std::size_t i = 0; i < space.size(); i += 997) {
        const Hypothesis& h = space[i];
        CHECK((h.blue.tiles & h.red.tiles) == 0);
        CHECK((h.blue.tiles & h.purple.tiles) == 0);
        CHECK((h.red.tiles & h.purple.tiles) == 0);
        CHECK(h.blue.color == ShipColor::Blue);
        CHECK(h.red.color == ShipColor::Red);
        CHECK(h.purple.color == ShipColor::Purple);
    }
}

TEST_CASE("render produces a fully revealed, correctly colored board") {
    const Hypothesis h{make_ship(ShipColor::Blue, Coord{1, 1}, Orientation::H, 2),
                       make_ship(ShipColor::Red, Coord{3, 2}, Orientation::V, 3),
                       make_ship(ShipColor::Purple, Coord{6, 3}, Orientation::H, 4)};
    const Board b = render(h);

    CHECK(b.at(Coord{1, 1}) == CellState::Blue);
    CHECK(b.at(Coord{1, 2}) == CellState::Blue);
    CHECK(b.at(Coord{3, 2}) == CellState::Red);
    CHECK(b.at(Coord{6, 3}) == CellState::Purple);
    CHECK(b.mask_of(CellState::Hidden) == 0);

    int colored = 0;
    for (int i = 0; i < kCellCount; ++i)
        if (b.at(i) != CellState::Water) ++colored;
    CHECK(colored == h.blue.size + h.red.size + h.purple.size);
}

TEST_CASE("consistency basics") {
    const auto& space = enumerate_hypotheses();
    const Hypothesis& h = space[123456];
    CHECK(consistent(h, render(h)));
    CHECK(consistent(h, Board::fully_hidden()));

    // A water cell on top of a ship tile breaks consistency.
    Board b;
    b.set(h.blue.topleft, CellState::Water);
    CHECK_FALSE(consistent(h, b));
}

TEST_CASE("hypothesis_space of a fully revealed board is a singleton") {
    const auto& space = enumerate_hypotheses();
    for (std::size_t i = 0; i < space.size(); i += 165345) {
        const auto filtered = hypothesis_space(render(space[i]));
        REQUIRE(filtered.size() == 1);
        CHECK(filtered.hypotheses[0] == space[i]);
    }
}

TEST_CASE("hypothesis_space of the fully hidden board is the full enumeration") {
    const auto filtered = hypothesis_space(Board::fully_hidden());
    CHECK(filtered.size() == kTotalHypotheses);
    CHECK(count_consistent(Board::fully_hidden()) == kTotalHypotheses);
    const auto idx = hypothesis_space_indices(Board::fully_hidden());
    CHECK(idx.size() == kTotalHypotheses);
}

TEST_CASE("impossible board raises EmptySpaceError") {
    Board b;
    for (int col = 1; col <= 5; ++col) b.set(Coord{1, static_cast<std::uint8_t>(col)}, CellState::Blue);
    CHECK_THROWS_AS(hypothesis_space(b), EmptySpaceError);
    CHECK_THROWS_AS(board_entropy(b), EmptySpaceError);
}

TEST_CASE("board entropy") {
    const auto& space = enumerate_hypotheses();
    CHECK(board_entropy(render(space[42])) == 0.0);
    CHECK(board_entropy(Board::fully_hidden()) ==
          doctest::Approx(std::log2(double(kTotalHypotheses))).epsilon(1e-12));
}

TEST_CASE("revealing more cells never grows the space") {
    Rng rng(7);
    const auto& space = enumerate_hypotheses();
    for (int trial = 0; trial < 20; ++trial) {
        const Hypothesis& h = space[rng.index(space.size())];
        TileMask small = 0, large = 0;
        for (int i = 0; i < kCellCount; ++i) {
            const bool in_large = rng.uniform_real() < 0.5;
            const bool in_small = in_large && rng.uniform_real() < 0.5;
            if (in_large) large |= TileMask{1} << i;
            if (in_small) small |= TileMask{1} << i;
        }
        const std::size_t n_small = count_consistent(partial_render(h, small));
        const std::size_t n_large = count_consistent(partial_render(h, large));
        CHECK(n_large <= n_small);
    }
}

TEST_CASE("sampled boards observe a ship tile and stay consistent") {
    Rng rng(11);
    for (int i = 0; i < 12; ++i) {
        const SampledBoard s = sample_board(rng);
        const TileMask ships = s.board.mask_of(CellState::Blue) | s.board.mask_of(CellState::Red) |
                               s.board.mask_of(CellState::Purple);
        CHECK(ships != 0);
        CHECK(consistent(s.truth, s.board));
        CHECK(count_consistent(s.board, 100000) <= 100000);
    }
}

TEST_CASE("board sampling is deterministic under a fixed seed") {
    Rng a(99), b(99);
    for (int i = 0; i < 5; ++i) {
        const SampledBoard sa = sample_board(a);
        const SampledBoard sb = sample_board(b);
        CHECK(sa.board == sb.board);
        CHECK(sa.truth == sb.truth);
    }
}

TEST_CASE("board text round-trips and rejects malformed input") {
    Rng rng(3);
    const SampledBoard s = sample_board(rng);
    CHECK(Board::parse(s.board.to_text()) == s.board);
    CHECK(Board::parse_line(s.board.to_line()) == s.board);

    const std::string good = s.board.to_text();
    CHECK_THROWS_AS(Board::parse(good.substr(0, good.size() - 1)), FormatError);  // no final newline
    CHECK_THROWS_AS(Board::parse(good + "-"), FormatError);                       // trailing data

    std::string bad = good;
    bad[0] = 'x';
    CHECK_THROWS_AS(Board::parse(bad), FormatError);

    std::string short_row = good;
    short_row.erase(2, 1);
    CHECK_THROWS_AS(Board::parse(short_row), FormatError);
}
