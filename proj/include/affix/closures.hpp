#pragma once

#include <string_view>

#include "affix/automaton.hpp"

namespace affix {

enum class ClosureKind { pref, suff, fact, subw };

std::string_view to_string(ClosureKind kind);
/// Accepts "pref", "suff", "fact", "subw".
ClosureKind parse_closure_kind(std::string_view name);

/// NFA for Pref/Suff/Fact/Subw of L(m).
///
/// pref marks as final every state that can reach a final state; suff marks
/// as initial every state reachable from an initial state (a generalized NFA,
/// use single_start() for one start state at the cost of one extra state);
/// fact trims and makes every remaining state initial and final; subw adds an
/// epsilon edge beside every symbol edge and removes epsilon edges again.
/// Only fact can change the state count, and only downwards.
Nfa closure_nfa(const Nfa& m, ClosureKind kind);

/// Complement of Pref(L(m)) as a DFA on the same states: the finals become the
/// states from which no final state is reachable.
Dfa pref_complement_dfa(const Dfa& m);

/// States of a complete DFA from which some final state is reachable.
StateSet coreachable_states(const Dfa& m);

} // namespace affix
