#pragma once

#include <optional>

#include "affix/automaton.hpp"
#include "affix/closures.hpp"

namespace affix {

/// Pref(L(m)) = Sigma* test in time linear in states x symbols. The witness is
/// the canonical shortest word accepted by pref_complement_dfa(m).
Decision pref_universal_dfa(const Dfa& m);

/// Universality of L(m) by breadth-first search over determinization subsets.
/// The first subset without a final state (the empty subset included) gives
/// the canonical shortest rejected word. Epsilon edges are removed first.
/// Throws ResourceError when the budget is exhausted before a verdict.
Decision nfa_universal(const Nfa& m, const SearchBudget& budget = {});

/// Intermediate machine and bookkeeping of the polynomial factor test.
struct FactorAnalysis {
    /// Reachable part with all dead states merged into one sink.
    Dfa reduced;
    /// The merged dead state, when there is one.
    std::optional<State> dead;
    bool has_universal_state = false;
    /// Set only when the synchronization check actually ran.
    bool sync_checked = false;
    bool universal = false;
};

/// Fact(L(m)) = Sigma* for a complete DFA in polynomial time:
///   1. keep reachable states;
///   2. merge the dead states (no final state reachable) into one sink;
///   3. any universal state (no dead state reachable) -> universal;
///   4. otherwise universal iff the reduced machine is not synchronizing.
FactorAnalysis analyze_factor_universality(const Dfa& m);

/// Verdict only; see shortest_missing() for a witness.
Decision fact_universal_dfa(const Dfa& m);

/// Subw(L(m)) = Sigma* in linear time: after trimming, some strongly connected
/// component must carry an internal edge for every symbol. Verdict only,
/// except for the empty language, whose witness is epsilon.
Decision subw_universal(const Nfa& m);

/// Strongly connected components of the transition graph (symbol and epsilon
/// edges), as a component id per state. Ids are in reverse topological order.
std::vector<std::size_t> strongly_connected_components(const Nfa& m, std::size_t* component_count = nullptr);

/// A word missing from Subw(L(m)) built from the component count N of the
/// trimmed machine: (a_1 ... a_k)^(N+1). Only meaningful when
/// subw_universal(m) is negative.
Word subword_omitted_word(const Nfa& m);

enum class Route {
    /// Polynomial deciders where they apply.
    specialized,
    /// Always closure_nfa followed by nfa_universal.
    generic,
};

/// Dispatches pref on a DFA, fact on a DFA and subw on anything to the
/// polynomial deciders; everything else goes through the closure NFA and the
/// subset search.
Decision closure_universal(const Automaton& m, ClosureKind kind, const SearchBudget& budget = {},
                           Route route = Route::specialized);

} // namespace affix
