#pragma once

#include <optional>

#include "affix/automaton.hpp"

namespace affix {

/// Graph on unordered state pairs {p,q} (p < q) and singletons {p} of a
/// complete DFA; symbol a maps {p,q} to {delta(p,a), delta(q,a)}.
class PairGraph {
public:
    explicit PairGraph(const Dfa& m);

    std::size_t state_count() const { return n_; }
    /// n(n+1)/2.
    std::size_t node_count() const { return n_ * (n_ + 1) / 2; }
    std::size_t node(State p, State q) const;
    bool is_singleton(std::size_t node) const;
    std::size_t successor(std::size_t node, Symbol a) const { return succ_[node * k_ + a]; }
    std::size_t symbol_count() const { return k_; }

    /// Nodes from which some singleton is reachable.
    std::vector<bool> mergeable() const;

private:
    std::size_t n_;
    std::size_t k_;
    std::vector<std::size_t> succ_;
    std::vector<bool> singleton_;
};

/// Whether some word sends every state to one state: every pair must be
/// able to reach a singleton in the pair graph.
bool is_synchronizing(const Dfa& m);

/// Shortest reset word by breadth-first search over subsets, starting from
/// the full state set. Empty optional when m is not synchronizing; throws
/// ResourceError when the budget runs out first.
std::optional<Word> shortest_reset_word(const Dfa& m, const SearchBudget& budget = {});

} // namespace affix
