#include "qgen/dsl.hpp"

#include <bit>
#include <cctype>
#include <optional>
#include <utility>

namespace qgen {

const char* to_string(TypeTag t) {
    switch (t) {
        case TypeTag::Bool: return "Bool";
        case TypeTag::Num: return "Num";
        case TypeTag::Color: return "Color";
        case TypeTag::Orient: return "Orient";
        case TypeTag::Loc: return "Loc";
        case TypeTag::LocSet: return "LocSet";
        case TypeTag::BoolSet: return "BoolSet";
    }
    return "?";
}

const char* to_string(ColorValue c) {
    switch (c) {
        case ColorValue::Blue: return "Blue";
        case ColorValue::Red: return "Red";
        case ColorValue::Purple: return "Purple";
        case ColorValue::Water: return "Water";
    }
    return "?";
}

Expr Expr::boolean(bool v) {
    Expr e;
    e.kind = Kind::BoolLit;
    e.bool_value = v;
    return e;
}
Expr Expr::number(int v) {
    Expr e;
    e.kind = Kind::NumLit;
    e.num_value = v;
    return e;
}
Expr Expr::color(ColorValue v) {
    Expr e;
    e.kind = Kind::ColorLit;
    e.color_value = v;
    return e;
}
Expr Expr::orientation(Orientation v) {
    Expr e;
    e.kind = Kind::OrientLit;
    e.orient_value = v;
    return e;
}
Expr Expr::location(Coord v) {
    Expr e;
    e.kind = Kind::LocLit;
    e.loc_value = v;
    return e;
}
Expr Expr::var() {
    Expr e;
    e.kind = Kind::Var;
    return e;
}
Expr Expr::call(ExprOp op, std::vector<Expr> args) {
    Expr e;
    e.kind = Kind::Call;
    e.op = op;
    e.args = std::move(args);
    return e;
}

std::int64_t Value::key() const {
    switch (tag) {
        case TypeTag::Bool: return boolean ? 1 : 0;
        case TypeTag::Num: return number;
        case TypeTag::Color: return static_cast<std::int64_t>(color);
        case TypeTag::Orient: return static_cast<std::int64_t>(orient);
        case TypeTag::Loc: return cell_index(loc);
        default: throw UnsupportedAnswerTypeError("set-valued answers have no ordering key");
    }
}

std::string Value::to_string() const {
    switch (tag) {
        case TypeTag::Bool: return boolean ? "TRUE" : "FALSE";
        case TypeTag::Num: return std::to_string(number);
        case TypeTag::Color: return qgen::to_string(color);
        case TypeTag::Orient: return qgen::to_string(orient);
        case TypeTag::Loc:
            return std::to_string(loc.row) + "-" + std::to_string(loc.col);
        case TypeTag::LocSet: {
            std::string out = "{";
            bool first = true;
            for (int i = 0; i < kCellCount; ++i) {
                if (!(locset >> i & 1)) continue;
                if (!first) out += ' ';
                first = false;
                const Coord c = coord_of(i);
                out += std::to_string(c.row) + "-" + std::to_string(c.col);
            }
            return out + "}";
        }
        case TypeTag::BoolSet: {
            std::string out = "{";
            for (std::size_t i = 0; i < boolset.size(); ++i) {
                if (i) out += ' ';
                out += boolset[i] ? "TRUE" : "FALSE";
            }
            return out + "}";
        }
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Operator table

namespace {

struct OpInfo {
    ExprOp op;
    const char* name;
    int arity;
};

constexpr OpInfo kOps[] = {
    {ExprOp::Size, "size", 1},
    {ExprOp::OrientOf, "orient", 1},
    {ExprOp::ColoredTiles, "coloredTiles", 1},
    {ExprOp::ColorAt, "color", 1},
    {ExprOp::TopLeft, "topleft", 1},
    {ExprOp::BottomRight, "bottomright", 1},
    {ExprOp::SetSize, "setSize", 1},
    {ExprOp::Union, "union", 2},
    {ExprOp::Plus, "+", 2},
    {ExprOp::Greater, ">", 2},
    {ExprOp::Less, "<", 2},
    {ExprOp::Equals, "==", 2},
    {ExprOp::And, "and", 2},
    {ExprOp::Or, "or", 2},
    {ExprOp::Not, "not", 1},
    {ExprOp::Any, "any", 1},
    {ExprOp::All, "all", 1},
    {ExprOp::Map, "map", 2},
};

const OpInfo* op_by_name(std::string_view name) {
    for (const OpInfo& info : kOps)
        if (name == info.name) return &info;
    return nullptr;
}

const OpInfo& op_info(ExprOp op) {
    for (const OpInfo& info : kOps)
        if (info.op == op) return info;
    throw Error("unknown operator");
}

// ---------------------------------------------------------------------------
// Parser

struct Token {
    enum class Kind { LParen, RParen, Atom, End } kind;
    std::string_view text;
    std::size_t offset;
};

class Lexer {
  public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Token next() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ >= text_.size()) return {Token::Kind::End, {}, pos_};
        const std::size_t start = pos_;
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            return {Token::Kind::LParen, text_.substr(start, 1), start};
        }
        if (c == ')') {
            ++pos_;
            return {Token::Kind::RParen, text_.substr(start, 1), start};
        }
        while (pos_ < text_.size() && text_[pos_] != '(' && text_[pos_] != ')' &&
               !std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        return {Token::Kind::Atom, text_.substr(start, pos_ - start), start};
    }

    Token peek() {
        const std::size_t save = pos_;
        Token t = next();
        pos_ = save;
        return t;
    }

  private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

std::optional<Expr> classify_atom(std::string_view a) {
    if (a == "TRUE") return Expr::boolean(true);
    if (a == "FALSE") return Expr::boolean(false);
    if (a.size() == 1 && a[0] >= '0' && a[0] <= '9') return Expr::number(a[0] - '0');
    if (a == "Blue") return Expr::color(ColorValue::Blue);
    if (a == "Red") return Expr::color(ColorValue::Red);
    if (a == "Purple") return Expr::color(ColorValue::Purple);
    if (a == "Water") return Expr::color(ColorValue::Water);
    if (a == "H") return Expr::orientation(Orientation::H);
    if (a == "V") return Expr::orientation(Orientation::V);
    if (a == "x") return Expr::var();
    if (a.size() == 3 && a[1] == '-' && a[0] >= '1' && a[0] <= '6' && a[2] >= '1' && a[2] <= '6')
        return Expr::location(Coord{static_cast<std::uint8_t>(a[0] - '0'),
                                    static_cast<std::uint8_t>(a[2] - '0')});
    return std::nullopt;
}

class Parser {
  public:
    explicit Parser(std::string_view text) : lex_(text) {}

    Expr parse() {
        Expr e = expr();
        const Token t = lex_.next();
        if (t.kind != Token::Kind::End)
            throw SyntaxError("trailing input after program", t.offset);
        return e;
    }

  private:
    Expr expr() {
        const Token t = lex_.next();
        switch (t.kind) {
            case Token::Kind::Atom: {
                if (auto lit = classify_atom(t.text)) return *lit;
                if (op_by_name(t.text) || t.text == "lambda")
                    throw SyntaxError("operator '" + std::string(t.text) + "' used as an atom",
                                      t.offset);
                throw SyntaxError("unknown atom '" + std::string(t.text) + "'", t.offset);
            }
            case Token::Kind::LParen: return application(t.offset);
            case Token::Kind::RParen: throw SyntaxError("unexpected ')'", t.offset);
            case Token::Kind::End: throw SyntaxError("unexpected end of input", t.offset);
        }
        throw SyntaxError("unreachable", t.offset);
    }

    Expr application(std::size_t open_offset) {
        const Token head = lex_.next();
        if (head.kind != Token::Kind::Atom)
            throw SyntaxError("expected an operator after '('", head.offset);
        if (head.text == "lambda")
            throw SyntaxError("lambda is only allowed as the first argument of map", head.offset);
        const OpInfo* info = op_by_name(head.text);
        if (!info)
            throw SyntaxError("unknown operator '" + std::string(head.text) + "'", head.offset);
        if (info->op == ExprOp::Map) return map_form();

        std::vector<Expr> args;
        for (;;) {
            const Token t = lex_.peek();
            if (t.kind == Token::Kind::RParen) {
                lex_.next();
                break;
            }
            if (t.kind == Token::Kind::End)
                throw SyntaxError("unbalanced parenthesis", t.offset);
            args.push_back(expr());
        }
        if (static_cast<int>(args.size()) != info->arity)
            throw SyntaxError("operator '" + std::string(head.text) + "' expects " +
                                  std::to_string(info->arity) + " argument(s), got " +
                                  std::to_string(args.size()),
                              open_offset);
        return Expr::call(info->op, std::move(args));
    }

    // (map (lambda x BODY) SET)
    Expr map_form() {
        expect(Token::Kind::LParen, "expected '(lambda x ...)' after map");
        const Token kw = lex_.next();
        if (kw.kind != Token::Kind::Atom || kw.text != "lambda")
            throw SyntaxError("expected 'lambda' as the first argument of map", kw.offset);
        const Token var = lex_.next();
        if (var.kind != Token::Kind::Atom || var.text != "x")
            throw SyntaxError("lambda variable must be 'x'", var.offset);
        Expr body = expr();
        expect(Token::Kind::RParen, "unclosed lambda");
        Expr set = expr();
        expect(Token::Kind::RParen, "unclosed map");
        return Expr::call(ExprOp::Map, {std::move(body), std::move(set)});
    }

    void expect(Token::Kind kind, const char* msg) {
        const Token t = lex_.next();
        if (t.kind != kind) throw SyntaxError(msg, t.offset);
    }

    Lexer lex_;
};

}  // namespace

Expr parse_program(std::string_view text) { return Parser(text).parse(); }

namespace {

void print_rec(const Expr& e, std::string& out) {
    switch (e.kind) {
        case Expr::Kind::BoolLit: out += e.bool_value ? "TRUE" : "FALSE"; return;
        case Expr::Kind::NumLit: out += static_cast<char>('0' + e.num_value); return;
        case Expr::Kind::ColorLit: out += to_string(e.color_value); return;
        case Expr::Kind::OrientLit: out += to_string(e.orient_value); return;
        case Expr::Kind::LocLit:
            out += static_cast<char>('0' + e.loc_value.row);
            out += '-';
            out += static_cast<char>('0' + e.loc_value.col);
            return;
        case Expr::Kind::Var: out += 'x'; return;
        case Expr::Kind::Call: break;
    }
    if (e.op == ExprOp::Map) {
        out += "(map (lambda x ";
        print_rec(e.args[0], out);
        out += ") ";
        print_rec(e.args[1], out);
        out += ')';
        return;
    }
    out += '(';
    out += op_info(e.op).name;
    for (const Expr& arg : e.args) {
        out += ' ';
        print_rec(arg, out);
    }
    out += ')';
}

}  // namespace

std::string print_program(const Expr& e) {
    std::string out;
    print_rec(e, out);
    return out;
}

// ---------------------------------------------------------------------------
// Type checking

namespace {

TypeTag check_rec(const Expr& e, bool in_lambda, const std::string& path) {
    const auto arg_path = [&path](int i) { return path + "/" + std::to_string(i); };
    const auto require = [&](const Expr& arg, int i, TypeTag want) {
        const TypeTag got = check_rec(arg, in_lambda, arg_path(i));
        if (got != want)
            throw TypeError(std::string("expected ") + to_string(want) + ", got " + to_string(got),
                            arg_path(i));
    };

    switch (e.kind) {
        case Expr::Kind::BoolLit: return TypeTag::Bool;
        case Expr::Kind::NumLit: return TypeTag::Num;
        case Expr::Kind::ColorLit: return TypeTag::Color;
        case Expr::Kind::OrientLit: return TypeTag::Orient;
        case Expr::Kind::LocLit: return TypeTag::Loc;
        case Expr::Kind::Var:
            if (!in_lambda) throw ScopeError("variable x outside a lambda (at node " + path + ")");
            return TypeTag::Loc;
        case Expr::Kind::Call: break;
    }

    switch (e.op) {
        case ExprOp::Size:
            require(e.args[0], 0, TypeTag::Color);
            return TypeTag::Num;
        case ExprOp::OrientOf:
            require(e.args[0], 0, TypeTag::Color);
            return TypeTag::Orient;
        case ExprOp::ColoredTiles:
            require(e.args[0], 0, TypeTag::Color);
            return TypeTag::LocSet;
        case ExprOp::ColorAt:
            require(e.args[0], 0, TypeTag::Loc);
            return TypeTag::Color;
        case ExprOp::TopLeft:
        case ExprOp::BottomRight:
            require(e.args[0], 0, TypeTag::LocSet);
            return TypeTag::Loc;
        case ExprOp::SetSize:
            require(e.args[0], 0, TypeTag::LocSet);
            return TypeTag::Num;
        case ExprOp::Union:
            require(e.args[0], 0, TypeTag::LocSet);
            require(e.args[1], 1, TypeTag::LocSet);
            return TypeTag::LocSet;
        case ExprOp::Plus:
        case ExprOp::Greater:
        case ExprOp::Less:
            require(e.args[0], 0, TypeTag::Num);
            require(e.args[1], 1, TypeTag::Num);
            return e.op == ExprOp::Plus ? TypeTag::Num : TypeTag::Bool;
        case ExprOp::Equals: {
            const TypeTag lhs = check_rec(e.args[0], in_lambda, arg_path(0));
            if (lhs != TypeTag::Num && lhs != TypeTag::Orient && lhs != TypeTag::Color &&
                lhs != TypeTag::Loc)
                throw TypeError(std::string("== does not apply to ") + to_string(lhs), arg_path(0));
            require(e.args[1], 1, lhs);
            return TypeTag::Bool;
        }
        case ExprOp::And:
        case ExprOp::Or:
            require(e.args[0], 0, TypeTag::Bool);
            require(e.args[1], 1, TypeTag::Bool);
            return TypeTag::Bool;
        case ExprOp::Not:
            require(e.args[0], 0, TypeTag::Bool);
            return TypeTag::Bool;
        case ExprOp::Any:
        case ExprOp::All:
            require(e.args[0], 0, TypeTag::BoolSet);
            return TypeTag::Bool;
        case ExprOp::Map: {
            if (in_lambda) throw ScopeError("nested lambda (at node " + path + ")");
            const TypeTag body = check_rec(e.args[0], true, arg_path(0));
            if (body != TypeTag::Bool)
                throw TypeError(std::string("lambda body must be Bool, got ") + to_string(body),
                                arg_path(0));
            require(e.args[1], 1, TypeTag::LocSet);
            return TypeTag::BoolSet;
        }
    }
    throw TypeError("malformed expression", path);
}

}  // namespace

TypeTag typecheck(const Expr& e) { return check_rec(e, false, ""); }

// ---------------------------------------------------------------------------
// Evaluation

namespace {

// Allocation-free result for the hot path; BoolSet is folded inline by
// any/all and only materialized by the public evaluate().
struct Scalar {
    TypeTag tag;
    bool b;
    int num;
    ColorValue color;
    Orientation orient;
    std::uint8_t loc;  // cell index 0..35
    TileMask mask;
};

ColorValue color_at(const Hypothesis& h, int cell) {
    const TileMask bit = TileMask{1} << cell;
    if (h.blue.tiles & bit) return ColorValue::Blue;
    if (h.red.tiles & bit) return ColorValue::Red;
    if (h.purple.tiles & bit) return ColorValue::Purple;
    return ColorValue::Water;
}

Scalar eval_rec(const Expr& e, const Hypothesis& h, int bound_x) {
    Scalar out{};
    switch (e.kind) {
        case Expr::Kind::BoolLit:
            out.tag = TypeTag::Bool;
            out.b = e.bool_value;
            return out;
        case Expr::Kind::NumLit:
            out.tag = TypeTag::Num;
            out.num = e.num_value;
            return out;
        case Expr::Kind::ColorLit:
            out.tag = TypeTag::Color;
            out.color = e.color_value;
            return out;
        case Expr::Kind::OrientLit:
            out.tag = TypeTag::Orient;
            out.orient = e.orient_value;
            return out;
        case Expr::Kind::LocLit:
            out.tag = TypeTag::Loc;
            out.loc = static_cast<std::uint8_t>(cell_index(e.loc_value));
            return out;
        case Expr::Kind::Var:
            out.tag = TypeTag::Loc;
            out.loc = static_cast<std::uint8_t>(bound_x);
            return out;
        case Expr::Kind::Call: break;
    }

    switch (e.op) {
        case ExprOp::Size: {
            const ColorValue c = eval_rec(e.args[0], h, bound_x).color;
            out.tag = TypeTag::Num;
            out.num = c == ColorValue::Water ? 0 : h.ship(static_cast<ShipColor>(c)).size;
            return out;
        }
        case ExprOp::OrientOf: {
            const ColorValue c = eval_rec(e.args[0], h, bound_x).color;
            out.tag = TypeTag::Orient;
            out.orient =
                c == ColorValue::Water ? Orientation::H : h.ship(static_cast<ShipColor>(c)).orient;
            return out;
        }
        case ExprOp::ColoredTiles: {
            const ColorValue c = eval_rec(e.args[0], h, bound_x).color;
            out.tag = TypeTag::LocSet;
            out.mask = c == ColorValue::Water ? kAllCells & ~h.occupied()
                                              : h.ship(static_cast<ShipColor>(c)).tiles;
            return out;
        }
        case ExprOp::ColorAt: {
            const int cell = eval_rec(e.args[0], h, bound_x).loc;
            out.tag = TypeTag::Color;
            out.color = color_at(h, cell);
            return out;
        }
        case ExprOp::TopLeft:
        case ExprOp::BottomRight: {
            const TileMask m = eval_rec(e.args[0], h, bound_x).mask;
            if (!m) throw EmptySetError("topleft/bottomright of an empty set");
            out.tag = TypeTag::Loc;
            out.loc = static_cast<std::uint8_t>(e.op == ExprOp::TopLeft ? std::countr_zero(m)
                                                                        : 63 - std::countl_zero(m));
            return out;
        }
        case ExprOp::SetSize: {
            out.tag = TypeTag::Num;
            out.num = std::popcount(eval_rec(e.args[0], h, bound_x).mask);
            return out;
        }
        case ExprOp::Union: {
            out.tag = TypeTag::LocSet;
            out.mask = eval_rec(e.args[0], h, bound_x).mask | eval_rec(e.args[1], h, bound_x).mask;
            return out;
        }
        case ExprOp::Plus: {
            out.tag = TypeTag::Num;
            out.num = eval_rec(e.args[0], h, bound_x).num + eval_rec(e.args[1], h, bound_x).num;
            return out;
        }
        case ExprOp::Greater:
        case ExprOp::Less: {
            const int a = eval_rec(e.args[0], h, bound_x).num;
            const int b = eval_rec(e.args[1], h, bound_x).num;
            out.tag = TypeTag::Bool;
            out.b = e.op == ExprOp::Greater ? a > b : a < b;
            return out;
        }
        case ExprOp::Equals: {
            const Scalar a = eval_rec(e.args[0], h, bound_x);
            const Scalar b = eval_rec(e.args[1], h, bound_x);
            out.tag = TypeTag::Bool;
            switch (a.tag) {
                case TypeTag::Num: out.b = a.num == b.num; break;
                case TypeTag::Orient: out.b = a.orient == b.orient; break;
                case TypeTag::Color: out.b = a.color == b.color; break;
                default: out.b = a.loc == b.loc; break;
            }
            return out;
        }
        case ExprOp::And:
        case ExprOp::Or: {
            const bool a = eval_rec(e.args[0], h, bound_x).b;
            const bool b = eval_rec(e.args[1], h, bound_x).b;
            out.tag = TypeTag::Bool;
            out.b = e.op == ExprOp::And ? (a && b) : (a || b);
            return out;
        }
        case ExprOp::Not: {
            out.tag = TypeTag::Bool;
            out.b = !eval_rec(e.args[0], h, bound_x).b;
            return out;
        }
        case ExprOp::Any:
        case ExprOp::All: {
            // The argument is a map; fold its results without materializing.
            const Expr& map = e.args[0];
            const TileMask set = eval_rec(map.args[1], h, bound_x).mask;
            bool acc = e.op == ExprOp::All;
            for (TileMask m = set; m; m &= m - 1) {
                const bool v = eval_rec(map.args[0], h, std::countr_zero(m)).b;
                acc = e.op == ExprOp::Any ? (acc || v) : (acc && v);
            }
            out.tag = TypeTag::Bool;
            out.b = acc;
            return out;
        }
        case ExprOp::Map: break;  // handled by evaluate()
    }
    throw Error("map evaluated outside any/all context");
}

Value to_value(const Scalar& s) {
    Value v;
    v.tag = s.tag;
    switch (s.tag) {
        case TypeTag::Bool: v.boolean = s.b; break;
        case TypeTag::Num: v.number = s.num; break;
        case TypeTag::Color: v.color = s.color; break;
        case TypeTag::Orient: v.orient = s.orient; break;
        case TypeTag::Loc: v.loc = coord_of(s.loc); break;
        case TypeTag::LocSet: v.locset = s.mask; break;
        case TypeTag::BoolSet: break;
    }
    return v;
}

}  // namespace

Value evaluate(const Expr& e, const Hypothesis& h) {
    if (e.kind == Expr::Kind::Call && e.op == ExprOp::Map) {
        const TileMask set = eval_rec(e.args[1], h, -1).mask;
        Value v;
        v.tag = TypeTag::BoolSet;
        for (TileMask m = set; m; m &= m - 1)
            v.boolset.push_back(eval_rec(e.args[0], h, std::countr_zero(m)).b);
        return v;
    }
    return to_value(eval_rec(e, h, -1));
}

// Scalar answer key for the partition hot loop (consumed by the eig module).
std::int64_t evaluate_key(const Expr& e, const Hypothesis& h) {
    const Scalar s = eval_rec(e, h, -1);
    switch (s.tag) {
        case TypeTag::Bool: return s.b ? 1 : 0;
        case TypeTag::Num: return s.num;
        case TypeTag::Color: return static_cast<std::int64_t>(s.color);
        case TypeTag::Orient: return static_cast<std::int64_t>(s.orient);
        case TypeTag::Loc: return s.loc;
        default: throw UnsupportedAnswerTypeError("set-valued answers cannot be partitioned");
    }
}

Value value_from_key(TypeTag tag, std::int64_t key) {
    Value v;
    v.tag = tag;
    switch (tag) {
        case TypeTag::Bool: v.boolean = key != 0; break;
        case TypeTag::Num: v.number = static_cast<int>(key); break;
        case TypeTag::Color: v.color = static_cast<ColorValue>(key); break;
        case TypeTag::Orient: v.orient = static_cast<Orientation>(key); break;
        case TypeTag::Loc: v.loc = coord_of(static_cast<int>(key)); break;
        default: throw UnsupportedAnswerTypeError("set-valued answers cannot be partitioned");
    }
    return v;
}

int token_count(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::BoolLit:
        case Expr::Kind::NumLit:
        case Expr::Kind::ColorLit:
        case Expr::Kind::OrientLit:
        case Expr::Kind::LocLit:
        case Expr::Kind::Var: return 1;
        case Expr::Kind::Call: break;
    }
    if (e.op == ExprOp::Map)  // ( map ( lambda x BODY ) SET )
        return 7 + token_count(e.args[0]) + token_count(e.args[1]);
    int n = 3;  // parens + operator atom
    for (const Expr& arg : e.args) n += token_count(arg);
    return n;
}

std::vector<Value> answer_domain(TypeTag t) {
    std::vector<Value> out;
    const auto add = [&out](TypeTag tag, auto set) {
        Value v;
        v.tag = tag;
        set(v);
        out.push_back(v);
    };
    switch (t) {
        case TypeTag::Bool:
            for (bool b : {true, false}) add(t, [b](Value& v) { v.boolean = b; });
            return out;
        case TypeTag::Num:
            for (int i = 0; i <= 12; ++i) add(t, [i](Value& v) { v.number = i; });
            return out;
        case TypeTag::Color:
            for (ColorValue c :
                 {ColorValue::Blue, ColorValue::Red, ColorValue::Purple, ColorValue::Water})
                add(t, [c](Value& v) { v.color = c; });
            return out;
        case TypeTag::Orient:
            for (Orientation o : {Orientation::H, Orientation::V})
                add(t, [o](Value& v) { v.orient = o; });
            return out;
        case TypeTag::Loc:
            for (int i = 0; i < kCellCount; ++i) add(t, [i](Value& v) { v.loc = coord_of(i); });
            return out;
        default:
            throw UnsupportedAnswerTypeError(std::string(to_string(t)) +
                                             " is not a valid top-level question type");
    }
}

}  // namespace qgen
