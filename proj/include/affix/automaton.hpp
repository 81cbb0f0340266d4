#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "affix/errors.hpp"
#include "affix/state_set.hpp"

namespace affix {

/// Position of a token in its Alphabet.
using Symbol = std::uint32_t;

/// A finite word as a sequence of symbol indices; the empty vector is epsilon.
using Word = std::vector<Symbol>;

inline constexpr State kNoState = std::numeric_limits<State>::max();

/// Ordered set of distinct symbol tokens. The order fixes the symbol indices
/// and the tie-break order of every witness search.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> tokens);

    std::size_t size() const { return tokens_.size(); }
    const std::string& token(Symbol a) const { return tokens_.at(a); }
    const std::vector<std::string>& tokens() const { return tokens_; }

    std::optional<Symbol> find(std::string_view token) const;
    /// Throws InputError for tokens outside the alphabet.
    Symbol index_of(std::string_view token) const;
    bool contains(std::string_view token) const { return find(token).has_value(); }

    Word parse_word(std::span<const std::string> tokens) const;
    /// Whitespace-separated tokens; an empty string yields epsilon.
    Word parse_word(std::string_view text) const;
    /// Space-joined tokens, or "(empty word)" for epsilon.
    std::string format(const Word& w) const;

    /// Copy of this alphabet with `extra` appended; throws on a clash.
    Alphabet extended(const std::vector<std::string>& extra) const;

    friend bool operator==(const Alphabet& x, const Alphabet& y) { return x.tokens_ == y.tokens_; }

private:
    std::vector<std::string> tokens_;
    std::unordered_map<std::string, Symbol> index_;
};

/// Throws unless `token` is usable as a symbol (non-empty, no whitespace, no leading '#').
void validate_token(std::string_view token);

/// Complete deterministic automaton over states 0..state_count-1. Transitions
/// start out unset; algorithms that need a total delta call require_complete().
class Dfa {
public:
    Dfa(Alphabet alphabet, std::size_t state_count, State start = 0);

    const Alphabet& alphabet() const { return alphabet_; }
    std::size_t state_count() const { return finals_.size(); }
    std::size_t symbol_count() const { return alphabet_.size(); }
    State start() const { return start_; }

    bool is_final(State q) const { return finals_.at(q); }
    std::vector<State> final_states() const;
    void set_final(State q, bool final = true);
    void set_start(State q);

    /// kNoState when unset.
    State next(State q, Symbol a) const { return delta_[index(q, a)]; }
    void set_next(State from, Symbol a, State to);

    State run(State from, const Word& w) const;

    bool is_complete() const;
    void require_complete() const;

    friend bool operator==(const Dfa&, const Dfa&) = default;

private:
    std::size_t index(State q, Symbol a) const;

    Alphabet alphabet_;
    State start_;
    std::vector<bool> finals_;
    std::vector<State> delta_;
};

/// Generalized NFA: any set of initial states and optional epsilon edges.
/// A zero-state Nfa is legal and accepts nothing.
class Nfa {
public:
    Nfa(Alphabet alphabet, std::size_t state_count);

    const Alphabet& alphabet() const { return alphabet_; }
    std::size_t state_count() const { return initial_.size(); }
    std::size_t symbol_count() const { return alphabet_.size(); }

    State add_state();
    void add_transition(State from, Symbol a, State to);
    void add_epsilon(State from, State to);
    void set_initial(State q, bool initial = true);
    void set_final(State q, bool final = true);

    bool is_initial(State q) const { return initial_.at(q); }
    bool is_final(State q) const { return final_.at(q); }
    std::vector<State> initial_states() const;
    std::vector<State> final_states() const;
    StateSet initial_set() const;
    StateSet final_set() const;

    /// Sorted, duplicate-free.
    const std::vector<State>& targets(State q, Symbol a) const { return moves_[q * symbol_count() + a]; }
    const std::vector<State>& epsilon_targets(State q) const { return eps_[q]; }

    bool has_epsilon() const;
    std::size_t transition_count() const;

    friend bool operator==(const Nfa&, const Nfa&) = default;

private:
    void check_state(State q) const;

    Alphabet alphabet_;
    std::vector<bool> initial_;
    std::vector<bool> final_;
    std::vector<std::vector<State>> moves_;
    std::vector<std::vector<State>> eps_;
};

using Automaton = std::variant<Dfa, Nfa>;

const Alphabet& alphabet_of(const Automaton& m);
std::size_t state_count_of(const Automaton& m);

/// Verdict of a universality (or mortality) question. When `witness` is set
/// the verdict is negative and the witness is the shortest counterexample,
/// ties broken lexicographically by alphabet order.
struct Decision {
    bool universal = false;
    std::optional<Word> witness;

    static Decision yes() { return {true, std::nullopt}; }
    static Decision no(std::optional<Word> w = std::nullopt) { return {false, std::move(w)}; }

    friend bool operator==(const Decision&, const Decision&) = default;
};

/// Caps for the exponential searches.
struct SearchBudget {
    std::size_t max_subsets = std::size_t{1} << 20;
    std::optional<std::size_t> max_word_len;
    /// Prune subsets that contain an already-visited subset. Keeps the
    /// canonical shortest witness.
    bool antichains = false;
};

void check_word(const Alphabet& sigma, const Word& w);

bool accepts(const Dfa& m, const Word& w);
bool accepts(const Nfa& m, const Word& w);
bool accepts(const Automaton& m, const Word& w);

/// States reachable from `from` through epsilon edges, `from` included.
StateSet epsilon_closure(const Nfa& m, StateSet from);
/// One symbol step without epsilon closure.
StateSet step(const Nfa& m, const StateSet& from, Symbol a);

/// States reachable from `from` (symbol and epsilon edges).
StateSet forward_reachable(const Nfa& m, const StateSet& from);
/// States that can reach some state of `to`.
StateSet backward_reachable(const Nfa& m, const StateSet& to);

/// Keeps the states that are reachable and co-reachable, renumbered in order.
Nfa trim(const Nfa& m);
/// Restriction to `keep`, renumbered in increasing state order.
Nfa restrict_to(const Nfa& m, const StateSet& keep);

Nfa reverse(const Nfa& m);
/// Same states, no epsilon edges, same language.
Nfa remove_epsilon(const Nfa& m);
/// Adds one fresh initial state when there is not exactly one initial state.
Nfa single_start(const Nfa& m);

Nfa nfa_of_dfa(const Dfa& m);
Nfa as_nfa(const Automaton& m);

/// Reachable part of a complete DFA, renumbered in BFS order from the start.
Dfa reachable_part(const Dfa& m);

} // namespace affix
