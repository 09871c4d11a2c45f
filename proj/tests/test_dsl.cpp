#include "qgen/dsl.hpp"

#include <bit>

#include "doctest.h"
#include "qgen/grammar.hpp"

using namespace qgen;

namespace {

Hypothesis example_hypothesis() {
    return Hypothesis{make_ship(ShipColor::Blue, Coord{1, 1}, Orientation::H, 3),
                      make_ship(ShipColor::Red, Coord{2, 3}, Orientation::H, 2),
                      make_ship(ShipColor::Purple, Coord{4, 2}, Orientation::V, 3)};
}

Expr substitute_x(Expr e, Coord l) {
    if (e.kind == Expr::Kind::Var) return Expr::location(l);
    for (Expr& arg : e.args) arg = substitute_x(std::move(arg), l);
    return e;
}

}  // namespace

TEST_CASE("parse builds the expected trees") {
    const Expr e = parse_program("(> (size Blue) 3)");
    REQUIRE(e.kind == Expr::Kind::Call);
    CHECK(e.op == ExprOp::Greater);
    REQUIRE(e.args.size() == 2);
    CHECK(e.args[0].op == ExprOp::Size);
    CHECK(e.args[0].args[0].kind == Expr::Kind::ColorLit);
    CHECK(e.args[1].kind == Expr::Kind::NumLit);
    CHECK(e.args[1].num_value == 3);

    const Expr unary = parse_program("(size Red)");
    CHECK(unary.op == ExprOp::Size);
    CHECK(unary.args.size() == 1);
}

TEST_CASE("parse rejects malformed input") {
    CHECK_THROWS_AS(parse_program("(size Blue"), SyntaxError);
    CHECK_THROWS_AS(parse_program("(size Blue))"), SyntaxError);
    CHECK_THROWS_AS(parse_program(""), SyntaxError);
    CHECK_THROWS_AS(parse_program"(sizze Blue)"[0] ? "(sizze Blue)" : "", SyntaxError);
    CHECK_THROWS_AS(parse_program("(size Blue Red)"), SyntaxError);
    CHECK_THROWS_AS(parse_program("size"), SyntaxError);
    CHECK_THROWS_AS(parse_program("12"), SyntaxError);
    CHECK_THROWS_AS(parse_program("7-1"), SyntaxError);
    CHECK_THROWS_AS(parse_program("(lambda x TRUE)"), SyntaxError);
    CHECK_THROWS_AS(parse_program("(map TRUE (coloredTiles Red))"), SyntaxError);

    try {
        parse_program("(size Blue");
    } catch (const SyntaxError& err) {
        CHECK(err.position == 10);
    }
}

TEST_CASE("print normalizes whitespace and round-trips") {
    CHECK(print_program(parse_program("(size  Red)")) == "(size Red)");
    CHECK(print_program(parse_program("( >  (size\nBlue)   3 )")) == "(> (size Blue) 3)");
    CHECK(print_program(Expr::location(Coord{2, 5})) == "2-5");

    const char* programs[] = {
        "(size Red)",
        "(> (size Blue) 3)",
        "(== (orient Blue) H)",
        "(topleft (coloredTiles Red))",
        "(+ (size Blue) (size Purple))",
        "(any (map (lambda x (== (color x) Red)) (coloredTiles Water)))",
        "(all (map (lambda x (not (== x 1-1))) (union (coloredTiles Red) (coloredTiles Blue))))",
        "(setSize (union (coloredTiles Red) (coloredTiles Purple)))",
    };
    for (const char* text : programs) {
        const Expr e = parse_program(text);
        CHECK(print_program(e) == text);
        CHECK(parse_program(print_program(e)) == e);
    }
}

TEST_CASE("typechecker accepts the paper forms and rejects ill-typed trees") {
    CHECK(typecheck(parse_program("(== (orient Blue) H)")) == TypeTag::Bool);
    CHECK(typecheck(parse_program("(size Red)")) == TypeTag::Num);
    CHECK(typecheck(parse_program("(coloredTiles Water)")) == TypeTag::LocSet);
    CHECK(typecheck(parse_program("(map (lambda x (== (color x) Red)) (coloredTiles Blue))")) ==
          TypeTag::BoolSet);

    CHECK_THROWS_AS(typecheck(parse_program("(> (orient Blue) 3)")), TypeError);
    CHECK_THROWS_AS(typecheck(parse_program("x")), ScopeError);
    CHECK_THROWS_AS(typecheck(parse_program("(== (size Red) H)")), TypeError);
    CHECK_THROWS_AS(typecheck(parse_program("(and TRUE 3)")), TypeError);
    CHECK_THROWS_AS(typecheck(parse_program("(== TRUE FALSE)")), TypeError);
    CHECK_THROWS_AS(
        typecheck(parse_program(
            "(any (map (lambda x (any (map (lambda x TRUE) (coloredTiles Red)))) (coloredTiles Blue)))")),
        ScopeError);
}

TEST_CASE("evaluation matches hand-computed answers") {
    const Hypothesis h = example_hypothesis();

    CHECK(evaluate(parse_program("(size Blue)"), h).number == 3);
    CHECK(evaluate(parse_program("(size Red)"), h).number == 2);
    CHECK(evaluate(parse_program("(+ (size Red) (size Blue))"), h).number == 5);
    CHECK(evaluate(parse_program("(orient Purple)"), h).orient == Orientation::V);
    CHECK(evaluate(parse_program("(== (orient Blue) H)"), h).boolean);
    CHECK(evaluate(parse_program("(> (size Blue) 3)"), h).boolean == false);

    // Red at (2,3) H size 2 occupies (2,3) and (2,4).
    const Value br = evaluate(parse_program("(bottomright (coloredTiles Red))"), h);
    CHECK(br.loc == Coord{2, 4});
    const Value tl = evaluate(parse_program("(topleft (coloredTiles Red))"), h);
    CHECK(tl.loc == Coord{2, 3});

    CHECK(evaluate(parse_program("(color 2-3)"), h).color == ColorValue::Red);
    CHECK(evaluate(parse_program("(color 6-6)"), h).color == ColorValue::Water);
    CHECK(evaluate(parse_program("(setSize (union (coloredTiles Red) (coloredTiles Blue)))"), h)
              .number == 5);
}

TEST_CASE("water behaves as a color value, not a ship") {
    const Hypothesis h = example_hypothesis();
    CHECK(evaluate(parse_program("(size Water)"), h).number == 0);
    CHECK(evaluate(parse_program("(orient Water)"), h).orient == Orientation::H);
    const Value tiles = evaluate(parse_program("(coloredTiles Water)"), h);
    CHECK(tiles.locset == (kAllCells & ~h.occupied()));
    CHECK(std::popcount(tiles.locset) == 36 - 8);
}

TEST_CASE("topleft and bottomright follow row-major order on ship tiles") {
    Rng rng(17);
    const auto& space = enumerate_hypotheses();
    for (int trial = 0; trial < 100; ++trial) {
        const Hypothesis& h = space[rng.index(space.size())];
        for (ShipColor c : kShipColors) {
            const std::string name = to_string(c);
            const Value tl = evaluate(parse_program("(topleft (coloredTiles " + name + "))"), h);
            const Value br = evaluate(parse_program("(bottomright (coloredTiles " + name + "))"), h);
            int lo = 64, hi = -1;
            for (int i = 0; i < kCellCount; ++i)
                if (h.ship(c).tiles >> i & 1) {
                    lo = std::min(lo, i);
                    hi = std::max(hi, i);
                }
            CHECK(cell_index(tl.loc) == lo);
            CHECK(cell_index(br.loc) == hi);
        }
    }
}

TEST_CASE("any/all agree with explicit substitution") {
    const char* bodies[] = {
        "(== (color x) Red)",
        "(not (== (color x) Blue))",
        "(== x 3-3)",
        "(> (size (color x)) 2)",
        "(or (== (color x) Purple) (== x 1-1))",
    };
    const char* sets[] = {
        "(coloredTiles Blue)",
        "(coloredTiles Water)",
        "(union (coloredTiles Red) (coloredTiles Purple))",
    };
    Rng rng(23);
    const auto& space = enumerate_hypotheses();
    for (int trial = 0; trial < 200; ++trial) {
        const Hypothesis& h = space[rng.index(space.size())];
        const std::string body = bodies[rng.index(std::size(bodies))];
        const std::string set = sets[rng.index(std::size(sets))];
        const std::string quant = rng.index(2) ? "any" : "all";

        const Expr program =
            parse_program("(" + quant + " (map (lambda x " + body + ") " + set + "))");
        REQUIRE(typecheck(program) == TypeTag::Bool);
        const bool folded = evaluate(program, h).boolean;

        const TileMask mask = evaluate(parse_program(set), h).locset;
        const Expr body_expr = parse_program("(not (not " + body + "))").args[0].args[0];
        bool expected = quant == "all";
        for (int i = 0; i < kCellCount; ++i) {
            if (!(mask >> i & 1)) continue;
            const bool v = evaluate(substitute_x(body_expr, coord_of(i)), h).boolean;
            expected = quant == "any" ? (expected || v) : (expected && v);
        }
        CHECK(folded == expected);
    }
}

TEST_CASE("evaluation is total and matches the static type on random programs") {
    Rng rng(31);
    const auto& space = enumerate_hypotheses();
    int checked = 0;
    while (checked < 200) {
        const auto program = sample_random(Grammar::dsl(), rng);
        if (!program) continue;
        const TypeTag t = typecheck(*program);
        const Hypothesis& h = space[rng.index(space.size())];
        const Value v = evaluate(*program, h);
        CHECK(v.tag == t);
        ++checked;
    }
}

TEST_CASE("token counting") {
    CHECK(token_count(parse_program("(size Red)")) == 4);
    CHECK(token_count(parse_program("(> (size Blue) 3)")) == 8);
    CHECK(token_count(parse_program("(map (lambda x TRUE) (coloredTiles Red))")) == 12);
    CHECK(token_count(parse_program("3")) == 1);

    // Structural count equals the token count of the printed form.
    Rng rng(41);
    int checked = 0;
    while (checked < 100) {
        const auto program = sample_random(Grammar::dsl(), rng);
        if (!program) continue;
        const std::string text = print_program(*program);
        int printed_tokens = 0;
        for (std::size_t i = 0; i < text.size(); ++i) {
            const char c = text[i];
            if (c == '(' || c == ')') {
                ++printed_tokens;
            } else if (c != ' ' && (i == 0 || text[i - 1] == ' ' || text[i - 1] == '(')) {
                ++printed_tokens;
            }
        }
        CHECK(token_count(*program) == printed_tokens);
        CHECK(token_count(parse_program(text)) == token_count(*program));
        ++checked;
    }
}

TEST_CASE("answer domains") {
    CHECK(answer_domain(TypeTag::Bool).size() == 2);
    CHECK(answer_domain(TypeTag::Orient).size() == 2);
    CHECK(answer_domain(TypeTag::Color).size() == 4);
    CHECK(answer_domain(TypeTag::Loc).size() == 36);
    CHECK(answer_domain(TypeTag::Num).size() == 13);  // declared 0..12
    CHECK_THROWS_AS(answer_domain(TypeTag::LocSet), UnsupportedAnswerTypeError);
    CHECK_THROWS_AS(answer_domain(TypeTag::BoolSet), UnsupportedAnswerTypeError);

    // Observed answers of (size Blue) stay inside {2,3,4}.
    Rng rng(5);
    const auto& space = enumerate_hypotheses();
    const Expr q = parse_program("(size Blue)");
    for (int i = 0; i < 200; ++i) {
        const int v = evaluate(q, space[rng.index(space.size())]).number;
        CHECK(v >= 2);
        CHECK(v <= 4);
    }
}
