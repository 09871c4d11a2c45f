#include "qgen/grammar.hpp"

#include <algorithm>
#include <limits>

namespace qgen {

const char* to_string(NonTerminal nt) {
    switch (nt) {
        case NonTerminal::A: return "A";
        case NonTerminal::B: return "B";
        case NonTerminal::N: return "N";
        case NonTerminal::C: return "C";
        case NonTerminal::O: return "O";
        case NonTerminal::L: return "L";
        case NonTerminal::S: return "S";
        case NonTerminal::SB: return "SB";
    }
    return "?";
}

Symbol Symbol::nonterminal(NonTerminal nt) {
    Symbol s;
    s.is_nonterminal = true;
    s.nt = nt;
    return s;
}

Symbol Symbol::terminal(std::string token) {
    Symbol s;
    s.token = std::move(token);
    return s;
}

const std::string& Symbol::text() const {
    static const std::string names[] = {"A", "B", "N", "C", "O", "L", "S", "SB"};
    return is_nonterminal ? names[static_cast<int>(nt)] : token;
}

int Production::nonterminal_count() const {
    int n = 0;
    for (const Symbol& s : rhs)
        if (s.is_nonterminal) ++n;
    return n;
}

std::string Production::display() const {
    std::string out = to_string(lhs);
    out += " ->";
    for (const Symbol& s : rhs) {
        out += ' ';
        out += s.text();
    }
    return out;
}

namespace {

std::optional<NonTerminal> nonterminal_by_name(std::string_view name) {
    static constexpr std::pair<std::string_view, NonTerminal> names[] = {
        {"A", NonTerminal::A}, {"B", NonTerminal::B},  {"N", NonTerminal::N},
        {"C", NonTerminal::C}, {"O", NonTerminal::O},  {"L", NonTerminal::L},
        {"S", NonTerminal::S}, {"SB", NonTerminal::SB}};
    for (const auto& [n, nt] : names)
        if (n == name) return nt;
    return std::nullopt;
}

std::uint64_t fnv1a(std::string_view text) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (char c : text) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ull;
    }
    return h;
}

// The leftmost nonterminal is inside a lambda body iff an enclosing
// "( lambda" group is still open where it sits. Everything left of the
// leftmost nonterminal is terminal, so a single depth scan suffices.
bool leftmost_in_lambda(const std::vector<Symbol>& symbols, std::size_t leftmost) {
    int lambda_depth = -1;
    int depth = 0;
    for (std::size_t i = 0; i < leftmost; ++i) {
        const Symbol& sym = symbols[i];
        if (sym.is_nonterminal) continue;
        if (sym.token == "(") {
            ++depth;
        } else if (sym.token == ")") {
            --depth;
            if (lambda_depth >= 0 && depth < lambda_depth) lambda_depth = -1;
        } else if (sym.token == "lambda") {
            lambda_depth = depth;
        }
    }
    return lambda_depth >= 0;
}

}  // namespace

Grammar::Grammar(std::vector<std::pair<NonTerminal, std::vector<Symbol>>> rules) {
    productions_.reserve(rules.size());
    for (auto& [lhs, rhs] : rules) {
        if (rhs.empty()) throw DataError("empty production rhs");
        Production p;
        p.id = static_cast<int>(productions_.size());
        p.lhs = lhs;
        p.rhs = std::move(rhs);
        p.requires_lambda = p.rhs.size() == 1 && !p.rhs[0].is_nonterminal && p.rhs[0].token == "x";
        p.forbidden_in_lambda = std::any_of(p.rhs.begin(), p.rhs.end(), [](const Symbol& s) {
            return s.is_nonterminal && s.nt == NonTerminal::SB;
        });
        by_lhs_[static_cast<int>(lhs)].push_back(p.id);
        productions_.push_back(std::move(p));
    }

    // min_tokens by fixed point; unreachable nonterminals keep the sentinel.
    constexpr int kUnbounded = std::numeric_limits<int>::max() / 4;
    min_tokens_.fill(kUnbounded);
    for (bool changed = true; changed;) {
        changed = false;
        for (const Production& p : productions_) {
            int total = 0;
            for (const Symbol& s : p.rhs)
                total = std::min(kUnbounded,
                                 total + (s.is_nonterminal ? min_tokens_[static_cast<int>(s.nt)] : 1));
            int& entry = min_tokens_[static_cast<int>(p.lhs)];
            if (total < entry) {
                entry = total;
                changed = true;
            }
        }
    }

    for (const Production& p : productions_)
        for (const Symbol& s : p.rhs)
            if (!s.is_nonterminal &&
                !std::binary_search(terminal_tokens_.begin(), terminal_tokens_.end(), s.token)) {
                terminal_tokens_.insert(
                    std::upper_bound(terminal_tokens_.begin(), terminal_tokens_.end(), s.token),
                    s.token);
            }

    hash_ = fnv1a(dump());
}

const std::vector<int>& Grammar::productions_of(NonTerminal lhs) const {
    return by_lhs_[static_cast<int>(lhs)];
}

int Grammar::min_tokens(NonTerminal nt) const { return min_tokens_[static_cast<int>(nt)]; }

bool Grammar::is_terminal_token(std::string_view token) const {
    return std::binary_search(terminal_tokens_.begin(), terminal_tokens_.end(), token);
}

std::string Grammar::dump() const {
    std::string out;
    for (const Production& p : productions_) {
        out += std::to_string(p.id);
        out += ": ";
        out += p.display();
        out += '\n';
    }
    return out;
}

namespace {

// Ids of the standard productions, filled while the table is built. The
// derivation of an expression walks these directly.
struct DslIds {
    int a_b, a_n, a_c, a_o, a_l;
    int b_greater, b_less, b_eq_num, b_eq_orient, b_eq_color, b_eq_loc;
    int b_and, b_or, b_not, b_any, b_all, b_true, b_false;
    int n_size, n_setsize, n_plus;
    int n_digit[10];
    int c_color_at, c_lit[4];  // Blue, Red, Purple, Water
    int o_orient, o_lit[2];    // H, V
    int l_topleft, l_bottomright, l_var;
    int l_lit[36];  // row-major
    int s_colored_tiles, s_union;
    int sb_map;
};

struct DslTable {
    Grammar grammar;
    DslIds ids;
};

std::vector<Symbol> parse_rhs(std::string_view pattern) {
    std::vector<Symbol> rhs;
    std::size_t pos = 0;
    while (pos < pattern.size()) {
        while (pos < pattern.size() && pattern[pos] == ' ') ++pos;
        if (pos >= pattern.size()) break;
        std::size_t end = pos;
        while (end < pattern.size() && pattern[end] != ' ') ++end;
        const std::string_view tok = pattern.substr(pos, end - pos);
        if (auto nt = nonterminal_by_name(tok))
            rhs.push_back(Symbol::nonterminal(*nt));
        else
            rhs.push_back(Symbol::terminal(std::string(tok)));
        pos = end;
    }
    return rhs;
}

DslTable build_dsl_table() {
    std::vector<std::pair<NonTerminal, std::vector<Symbol>>> rules;
    DslIds ids{};
    const auto add = [&rules](NonTerminal lhs, std::string_view rhs) {
        rules.emplace_back(lhs, parse_rhs(rhs));
        return static_cast<int>(rules.size()) - 1;
    };

    ids.a_b = add(NonTerminal::A, "B");
    ids.a_n = add(NonTerminal::A, "N");
    ids.a_c = add(NonTerminal::A, "C");
    ids.a_o = add(NonTerminal::A, "O");
    ids.a_l = add(NonTerminal::A, "L");

    ids.b_greater = add(NonTerminal::B, "( > N N )");
    ids.b_less = add(NonTerminal::B, "( < N N )");
    ids.b_eq_num = add(NonTerminal::B, "( == N N )");
    ids.b_eq_orient = add(NonTerminal::B, "( == O O )");
    ids.b_eq_color = add(NonTerminal::B, "( == C C )");
    ids.b_eq_loc = add(NonTerminal::B, "( == L L )");
    ids.b_and = add(NonTerminal::B, "( and B B )");
    ids.b_or = add(NonTerminal::B, "( or B B )");
    ids.b_not = add(NonTerminal::B, "( not B )");
    ids.b_any = add(NonTerminal::B, "( any SB )");
    ids.b_all = add(NonTerminal::B, "( all SB )");
    ids.b_true = add(NonTerminal::B, "TRUE");
    ids.b_false = add(NonTerminal::B, "FALSE");

    ids.n_size = add(NonTerminal::N, "( size C )");
    ids.n_setsize = add(NonTerminal::N, "( setSize S )");
    ids.n_plus = add(NonTerminal::N, "( + N N )");
    for (int d = 0; d <= 9; ++d)
        ids.n_digit[d] = add(NonTerminal::N, std::string(1, static_cast<char>('0' + d)));

    ids.c_color_at = add(NonTerminal::C, "( color L )");
    ids.c_lit[0] = add(NonTerminal::C, "Blue");
    ids.c_lit[1] = add(NonTerminal::C, "Red");
    ids.c_lit[2] = add(NonTerminal::C, "Purple");
    ids.c_lit[3] = add(NonTerminal::C, "Water");

    ids.o_orient = add(NonTerminal::O, "( orient C )");
    ids.o_lit[0] = add(NonTerminal::O, "H");
    ids.o_lit[1] = add(NonTerminal::O, "V");

    ids.l_topleft = add(NonTerminal::L, "( topleft S )");
    ids.l_bottomright = add(NonTerminal::L, "( bottomright S )");
    ids.l_var = add(NonTerminal::L, "x");
    for (int i = 0; i < kCellCount; ++i) {
        const Coord c = coord_of(i);
        ids.l_lit[i] = add(NonTerminal::L, std::to_string(c.row) + "-" + std::to_string(c.col));
    }

    ids.s_colored_tiles = add(NonTerminal::S, "( coloredTiles C )");
    ids.s_union = add(NonTerminal::S, "( union S S )");

    ids.sb_map = add(NonTerminal::SB, "( map ( lambda x B ) S )");

    return DslTable{Grammar(std::move(rules)), ids};
}

const DslTable& dsl_table() {
    static const DslTable table = build_dsl_table();
    return table;
}

}  // namespace

const Grammar& Grammar::dsl() { return dsl_table().grammar; }

const std::vector<Production>& rule_table() { return Grammar::dsl().productions(); }

// ---------------------------------------------------------------------------
// Derivation state

DerivationState DerivationState::start(NonTerminal nt) {
    DerivationState s;
    s.symbols.push_back(Symbol::nonterminal(nt));
    return s;
}

DerivationState DerivationState::seeded(const Grammar& g, std::string_view text) {
    DerivationState s;
    std::size_t pos = 0;
    const auto push_token = [&](std::string_view tok) {
        if (auto nt = nonterminal_by_name(tok)) {
            s.symbols.push_back(Symbol::nonterminal(*nt));
            return;
        }
        if (!g.is_terminal_token(tok))
            throw DataError("unknown symbol '" + std::string(tok) + "' in seed");
        s.symbols.push_back(Symbol::terminal(std::string(tok)));
    };
    while (pos < text.size()) {
        const char c = text[pos];
        if (c == ' ' || c == '\t' || c == '\n') {
            ++pos;
            continue;
        }
        if (c == '(' || c == ')') {
            push_token(text.substr(pos, 1));
            ++pos;
            continue;
        }
        std::size_t end = pos;
        while (end < text.size() && text[end] != '(' && text[end] != ')' && text[end] != ' ' &&
               text[end] != '\t' && text[end] != '\n')
            ++end;
        push_token(text.substr(pos, end - pos));
        pos = end;
    }
    if (s.symbols.empty()) throw DataError("empty seed");
    if (auto lm = s.leftmost()) s.in_lambda = leftmost_in_lambda(s.symbols, *lm);
    return s;
}

bool DerivationState::complete() const {
    return std::none_of(symbols.begin(), symbols.end(),
                        [](const Symbol& s) { return s.is_nonterminal; });
}

std::optional<std::size_t> DerivationState::leftmost() const {
    for (std::size_t i = 0; i < symbols.size(); ++i)
        if (symbols[i].is_nonterminal) return i;
    return std::nullopt;
}

std::array<int, kNonTerminalCount> DerivationState::nonterminal_counts() const {
    std::array<int, kNonTerminalCount> counts{};
    for (const Symbol& s : symbols)
        if (s.is_nonterminal) ++counts[static_cast<int>(s.nt)];
    return counts;
}

std::string DerivationState::text() const {
    std::string out;
    for (const Symbol& s : symbols) {
        if (!out.empty()) out += ' ';
        out += s.text();
    }
    return out;
}

int DerivationState::projected_min_tokens(const Grammar& g) const {
    int total = 0;
    for (const Symbol& s : symbols) total += s.is_nonterminal ? g.min_tokens(s.nt) : 1;
    return total;
}

// ---------------------------------------------------------------------------
// Derivation engine

ActionMask applicable(const Grammar& g, const DerivationState& s) {
    const auto lm = s.leftmost();
    if (!lm) throw CompleteStateError("derivation is already complete");
    const NonTerminal nt = s.symbols[*lm].nt;
    ActionMask mask(g.size(), 0);
    for (int id : g.productions_of(nt)) {
        const Production& p = g.productions()[id];
        if (p.requires_lambda && !s.in_lambda) continue;
        if (p.forbidden_in_lambda && s.in_lambda) continue;
        mask[id] = 1;
    }
    return mask;
}

DerivationState apply_rule(const Grammar& g, const DerivationState& s, const Production& p) {
    if (p.id < 0 || static_cast<std::size_t>(p.id) >= g.size())
        throw IllegalActionError("production id out of range");
    const ActionMask mask = applicable(g, s);
    if (!mask[p.id])
        throw IllegalActionError("production " + std::to_string(p.id) + " (" + p.display() +
                                 ") is not applicable");
    const std::size_t lm = *s.leftmost();
    const Production& own = g.productions()[p.id];

    DerivationState next;
    next.symbols.reserve(s.symbols.size() + own.rhs.size() - 1);
    next.symbols.assign(s.symbols.begin(), s.symbols.begin() + lm);
    next.symbols.insert(next.symbols.end(), own.rhs.begin(), own.rhs.end());
    next.symbols.insert(next.symbols.end(), s.symbols.begin() + lm + 1, s.symbols.end());
    next.applied_rules = s.applied_rules;
    next.applied_rules.push_back(p.id);
    if (auto next_lm = next.leftmost()) next.in_lambda = leftmost_in_lambda(next.symbols, *next_lm);
    return next;
}

namespace {

// Syntactic category of a node: the nonterminal that derives it.
NonTerminal category_of(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::BoolLit: return NonTerminal::B;
        case Expr::Kind::NumLit: return NonTerminal::N;
        case Expr::Kind::ColorLit: return NonTerminal::C;
        case Expr::Kind::OrientLit: return NonTerminal::O;
        case Expr::Kind::LocLit:
        case Expr::Kind::Var: return NonTerminal::L;
        case Expr::Kind::Call: break;
    }
    switch (e.op) {
        case ExprOp::Greater:
        case ExprOp::Less:
        case ExprOp::Equals:
        case ExprOp::And:
        case ExprOp::Or:
        case ExprOp::Not:
        case ExprOp::Any:
        case ExprOp::All: return NonTerminal::B;
        case ExprOp::Size:
        case ExprOp::SetSize:
        case ExprOp::Plus: return NonTerminal::N;
        case ExprOp::ColorAt: return NonTerminal::C;
        case ExprOp::OrientOf: return NonTerminal::O;
        case ExprOp::TopLeft:
        case ExprOp::BottomRight: return NonTerminal::L;
        case ExprOp::ColoredTiles:
        case ExprOp::Union: return NonTerminal::S;
        case ExprOp::Map: return NonTerminal::SB;
    }
    throw Error("unreachable");
}

void derive_node(const Expr& e, std::vector<int>& out) {
    const DslIds& ids = dsl_table().ids;
    switch (e.kind) {
        case Expr::Kind::BoolLit: out.push_back(e.bool_value ? ids.b_true : ids.b_false); return;
        case Expr::Kind::NumLit: out.push_back(ids.n_digit[e.num_value]); return;
        case Expr::Kind::ColorLit: out.push_back(ids.c_lit[static_cast<int>(e.color_value)]); return;
        case Expr::Kind::OrientLit: out.push_back(ids.o_lit[static_cast<int>(e.orient_value)]); return;
        case Expr::Kind::LocLit: out.push_back(ids.l_lit[cell_index(e.loc_value)]); return;
        case Expr::Kind::Var: out.push_back(ids.l_var); return;
        case Expr::Kind::Call: break;
    }

    switch (e.op) {
        case ExprOp::Greater: out.push_back(ids.b_greater); break;
        case ExprOp::Less: out.push_back(ids.b_less); break;
        case ExprOp::Equals:
            switch (category_of(e.args[0])) {
                case NonTerminal::N: out.push_back(ids.b_eq_num); break;
                case NonTerminal::O: out.push_back(ids.b_eq_orient); break;
                case NonTerminal::C: out.push_back(ids.b_eq_color); break;
                default: out.push_back(ids.b_eq_loc); break;
            }
            break;
        case ExprOp::And: out.push_back(ids.b_and); break;
        case ExprOp::Or: out.push_back(ids.b_or); break;
        case ExprOp::Not: out.push_back(ids.b_not); break;
        case ExprOp::Any: out.push_back(ids.b_any); break;
        case ExprOp::All: out.push_back(ids.b_all); break;
        case ExprOp::Size: out.push_back(ids.n_size); break;
        case ExprOp::SetSize: out.push_back(ids.n_setsize); break;
        case ExprOp::Plus: out.push_back(ids.n_plus); break;
        case ExprOp::ColorAt: out.push_back(ids.c_color_at); break;
        case ExprOp::OrientOf: out.push_back(ids.o_orient); break;
        case ExprOp::TopLeft: out.push_back(ids.l_topleft); break;
        case ExprOp::BottomRight: out.push_back(ids.l_bottomright); break;
        case ExprOp::ColoredTiles: out.push_back(ids.s_colored_tiles); break;
        case ExprOp::Union: out.push_back(ids.s_union); break;
        case ExprOp::Map: out.push_back(ids.sb_map); break;
    }
    // Any/All wrap the map production's SB; the map node itself is e.args[0].
    if (e.op == ExprOp::Any || e.op == ExprOp::All) {
        derive_node(e.args[0], out);
        return;
    }
    for (const Expr& arg : e.args) derive_node(arg, out);
}

}  // namespace

std::vector<int> derivation_of(const Expr& e) {
    const DslIds& ids = dsl_table().ids;
    std::vector<int> out;
    switch (category_of(e)) {
        case NonTerminal::B: out.push_back(ids.a_b); break;
        case NonTerminal::N: out.push_back(ids.a_n); break;
        case NonTerminal::C: out.push_back(ids.a_c); break;
        case NonTerminal::O: out.push_back(ids.a_o); break;
        case NonTerminal::L: out.push_back(ids.a_l); break;
        default:
            throw DataError("expression of type " + std::string(to_string(typecheck(e))) +
                            " cannot start from A");
    }
    derive_node(e, out);
    return out;
}

Expr replay(const Grammar& g, std::span<const int> rules, const DerivationState& start) {
    DerivationState s = start;
    for (int id : rules) {
        if (id < 0 || static_cast<std::size_t>(id) >= g.size())
            throw IllegalActionError("production id out of range in replay");
        s = apply_rule(g, s, g.productions()[id]);
    }
    if (!s.complete()) throw DataError("derivation incomplete after replay");
    return parse_program(s.text());
}

std::optional<Expr> sample_random(const Grammar& g, Rng& rng, const SampleOptions& opts) {
    DerivationState s = DerivationState::start(NonTerminal::A);
    std::vector<int> depths{0};

    while (!s.complete()) {
        if (s.projected_min_tokens(g) > opts.max_tokens) return std::nullopt;
        const std::size_t lm = *s.leftmost();
        const ActionMask mask = applicable(g, s);

        std::vector<int> candidates;
        for (std::size_t id = 0; id < mask.size(); ++id)
            if (mask[id]) candidates.push_back(static_cast<int>(id));

        if (depths[lm] >= opts.depth_bound) {
            int fewest = std::numeric_limits<int>::max();
            for (int id : candidates)
                fewest = std::min(fewest, g.productions()[id].nonterminal_count());
            std::erase_if(candidates, [&](int id) {
                return g.productions()[id].nonterminal_count() != fewest;
            });
        }

        const Production& p = g.productions()[candidates[rng.index(candidates.size())]];
        s = apply_rule(g, s, p);

        std::vector<int> next_depths;
        next_depths.reserve(depths.size() + p.rhs.size() - 1);
        next_depths.assign(depths.begin(), depths.begin() + lm);
        next_depths.insert(next_depths.end(), p.rhs.size(), depths[lm] + 1);
        next_depths.insert(next_depths.end(), depths.begin() + lm + 1, depths.end());
        depths = std::move(next_depths);
    }
    return parse_program(s.text());
}

}  // namespace qgen
