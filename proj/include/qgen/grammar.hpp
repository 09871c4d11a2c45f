#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qgen/dsl.hpp"
#include "qgen/errors.hpp"
#include "qgen/rng.hpp"

namespace qgen {

// Context-free grammar over the question DSL. Production ids are the policy's
// action ids; they are dense, stable, and versioned through Grammar::hash().

enum class NonTerminal : std::uint8_t { A, B, N, C, O, L, S, SB };
inline constexpr int kNonTerminalCount = 8;

const char* to_string(NonTerminal nt);

struct Symbol {
    bool is_nonterminal = false;
    NonTerminal nt = NonTerminal::A;
    std::string token;  // terminal text when !is_nonterminal

    static Symbol nonterminal(NonTerminal nt);
    static Symbol terminal(std::string token);
    const std::string& text() const;
    bool operator==(const Symbol&) const = default;
};

struct Production {
    int id = 0;
    NonTerminal lhs = NonTerminal::A;
    std::vector<Symbol> rhs;

    // Scope flags derived from the rhs: a lone `x` may only be used inside a
    // lambda body, and a production that introduces SB (and with it a new
    // lambda) may not fire inside one. Both are state constraints, not part
    // of the CFG itself.
    bool requires_lambda = false;
    bool forbidden_in_lambda = false;

    int nonterminal_count() const;
    std::string display() const;  // e.g. "B -> ( > N N )"
};

class Grammar {
  public:
    // Builds a grammar from (lhs, rhs) pairs; ids are assigned densely in the
    // given order and scope flags are derived.
    explicit Grammar(std::vector<std::pair<NonTerminal, std::vector<Symbol>>> rules);

    // The standard table covering the full DSL. Built once, then shared.
    static const Grammar& dsl();

    const std::vector<Production>& productions() const { return productions_; }
    std::size_t size() const { return productions_.size(); }
    const std::vector<int>& productions_of(NonTerminal lhs) const;

    // Fewest tokens any complete expansion of `nt` can have.
    int min_tokens(NonTerminal nt) const;

    bool is_terminal_token(std::string_view token) const;

    // One production per line, "id: LHS -> RHS".
    std::string dump() const;

    // FNV-1a over dump(); embedded in corpora and checkpoints so artifacts
    // built against a different table fail loudly.
    std::uint64_t hash() const { return hash_; }

  private:
    std::vector<Production> productions_;
    std::array<std::vector<int>, kNonTerminalCount> by_lhs_;
    std::array<int, kNonTerminalCount> min_tokens_;
    std::vector<std::string> terminal_tokens_;
    std::uint64_t hash_ = 0;
};

// The standard rule table (shorthand for Grammar::dsl().productions()).
const std::vector<Production>& rule_table();

// A partially derived symbol string. Everything left of the leftmost
// nonterminal is terminal; `in_lambda` is recomputed from the symbols after
// every rule application. The applied-rule history doubles as the step count
// and feeds the policy's recent-action features.
struct DerivationState {
    std::vector<Symbol> symbols;
    std::vector<int> applied_rules;
    bool in_lambda = false;

    static DerivationState start(NonTerminal nt = NonTerminal::A);

    // Builds a state from a partial program like "(and B B)": uppercase
    // nonterminal names become nonterminals, everything else must be a
    // terminal token of the grammar.
    static DerivationState seeded(const Grammar& g, std::string_view text);

    int steps() const { return static_cast<int>(applied_rules.size()); }
    bool complete() const;
    std::optional<std::size_t> leftmost() const;
    std::array<int, kNonTerminalCount> nonterminal_counts() const;

    // Space-joined symbol text; for complete states this parses as a program.
    std::string text() const;

    // Lower bound on the final token count if this state is derived to
    // completion.
    int projected_min_tokens(const Grammar& g) const;
};

// Bit i set iff production i may be applied to the leftmost nonterminal.
using ActionMask = std::vector<std::uint8_t>;

// Throws CompleteStateError when no nonterminal remains.
ActionMask applicable(const Grammar& g, const DerivationState& s);

// Replaces the leftmost nonterminal with p.rhs. Throws IllegalActionError if
// the mask forbids p (a policy or masking bug upstream).
DerivationState apply_rule(const Grammar& g, const DerivationState& s, const Production& p);

// The unique leftmost derivation of a well-typed program under the standard
// grammar; replaying it reproduces print_program(e).
std::vector<int> derivation_of(const Expr& e);

// Applies a rule sequence from `start` and parses the resulting program.
// Throws DataError if the sequence leaves nonterminals unexpanded.
Expr replay(const Grammar& g, std::span<const int> rules,
            const DerivationState& start = DerivationState::start());

struct SampleOptions {
    int max_tokens = 80;
    // Once the leftmost nonterminal sits this deep, only least-expanding
    // productions (fewest nonterminals in the rhs) are sampled, which forces
    // termination.
    int depth_bound = 12;
};

// Uniform random derivation from A; nullopt means the token budget cannot be
// met (Overflow).
std::optional<Expr> sample_random(const Grammar& g, Rng& rng, const SampleOptions& opts = {});

}  // namespace qgen
