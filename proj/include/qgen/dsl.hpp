#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qgen/board.hpp"
#include "qgen/errors.hpp"

namespace qgen {

// The typed question language. Programs are LISP-like s-expressions executed
// against a Hypothesis to produce an answer, e.g. (> (size Blue) 3).

enum class TypeTag : std::uint8_t { Bool, Num, Color, Orient, Loc, LocSet, BoolSet };

const char* to_string(TypeTag t);

// Color *values*: the three ship colors plus Water. Water is not a ship:
// (size Water) evaluates to 0, (orient Water) to H, and (coloredTiles Water)
// to the set of non-ship tiles.
enum class ColorValue : std::uint8_t { Blue, Red, Purple, Water };

const char* to_string(ColorValue c);

enum class ExprOp : std::uint8_t {
    Size,         // (size C) -> Num
    OrientOf,     // (orient C) -> Orient
    ColoredTiles, // (coloredTiles C) -> LocSet
    ColorAt,      // (color L) -> Color
    TopLeft,      // (topleft S) -> Loc
    BottomRight,  // (bottomright S) -> Loc
    SetSize,      // (setSize S) -> Num
    Union,        // (union S S) -> LocSet
    Plus,         // (+ N N) -> Num
    Greater,      // (> N N) -> Bool
    Less,         // (< N N) -> Bool
    Equals,       // (== a a), a in {Num, Orient, Color, Loc} -> Bool
    And,          // (and B B) -> Bool
    Or,           // (or B B) -> Bool
    Not,          // (not B) -> Bool
    Any,          // (any SB) -> Bool
    All,          // (all SB) -> Bool
    Map,          // (map (lambda x B) S) -> BoolSet; args = [body, set]
};

// Expression tree. Literals carry their payload directly; Call nodes own
// their arguments. The lambda of a map is implicit: Map's first argument is
// the body, with the single variable `x` bound to each location of the set.
struct Expr {
    enum class Kind : std::uint8_t { BoolLit, NumLit, ColorLit, OrientLit, LocLit, Var, Call };

    Kind kind = Kind::BoolLit;
    bool bool_value = false;
    int num_value = 0;
    ColorValue color_value = ColorValue::Blue;
    Orientation orient_value = Orientation::H;
    Coord loc_value{};
    ExprOp op = ExprOp::Size;
    std::vector<Expr> args;

    bool operator==(const Expr&) const = default;

    static Expr boolean(bool v);
    static Expr number(int v);
    static Expr color(ColorValue v);
    static Expr orientation(Orientation v);
    static Expr location(Coord v);
    static Expr var();
    static Expr call(ExprOp op, std::vector<Expr> args);
};

// Runtime value. LocSet is a 36-bit mask; BoolSet is ordered by the canonical
// (row-major) location order of its source set.
struct Value {
    TypeTag tag = TypeTag::Bool;
    bool boolean = false;
    int number = 0;
    ColorValue color = ColorValue::Blue;
    Orientation orient = Orientation::H;
    Coord loc{};
    TileMask locset = 0;
    std::vector<bool> boolset{};

    // Dense ordering key for atomic answers; throws UnsupportedAnswerTypeError
    // on sets.
    std::int64_t key() const;
    std::string to_string() const;
    bool operator==(const Value&) const = default;
};

// Parses the canonical s-expression syntax. Whitespace-insensitive between
// tokens; throws SyntaxError with a byte offset on malformed input.
Expr parse_program(std::string_view text);

// Canonical single-space-separated form; parse_program(print_program(e)) == e.
std::string print_program(const Expr& e);

// Returns the unique type of a well-formed expression. Throws TypeError with
// the node path, or ScopeError for `x` outside a lambda / nested lambdas.
TypeTag typecheck(const Expr& e);

// Executes a well-typed program against a hypothesis. Total for every
// well-typed program; EmptySetError is unreachable through the current
// constructs (coloredTiles and union never produce an empty set).
Value evaluate(const Expr& e, const Hypothesis& h);

// Token count of the canonical printed form: every '(', ')' and atom is one
// token.
int token_count(const Expr& e);

// The declared answer set for a top-level question type. Num is declared as
// 0..12; EIG never consults this (it partitions on observed answers only).
std::vector<Value> answer_domain(TypeTag t);

}  // namespace qgen
