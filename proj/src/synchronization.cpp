#include "affix/synchronization.hpp"

#include <unordered_map>

namespace affix {

PairGraph::PairGraph(const Dfa& m) : n_(m.state_count()), k_(m.symbol_count())
{
    m.require_complete();
    succ_.assign(node_count() * k_, 0);
    singleton_.assign(node_count(), false);
    for (State p = 0; p < n_; ++p) {
        for (State q = p; q < n_; ++q) {
            const std::size_t v = node(p, q);
            singleton_[v] = (p == q);
            for (Symbol a = 0; a < k_; ++a) {
                succ_[v * k_ + a] = node(m.next(p, a), m.next(q, a));
            }
        }
    }
}

std::size_t PairGraph::node(State p, State q) const
{
    if (p > q) {
        std::swap(p, q);
    }
    // Row p holds the pairs {p, p..n-1}.
    return p * n_ - (static_cast<std::size_t>(p) * (p - 1)) / 2 + (q - p);
}

bool PairGraph::is_singleton(std::size_t v) const
{
    return singleton_[v];
}

std::vector<bool> PairGraph::mergeable() const
{
    const std::size_t nodes = node_count();
    std::vector<std::vector<std::size_t>> preds(nodes);
    for (std::size_t v = 0; v < nodes; ++v) {
        for (Symbol a = 0; a < k_; ++a) {
            preds[successor(v, a)].push_back(v);
        }
    }
    std::vector<bool> good(nodes, false);
    std::vector<std::size_t> stack;
    for (std::size_t v = 0; v < nodes; ++v) {
        if (singleton_[v]) {
            good[v] = true;
            stack.push_back(v);
        }
    }
    while (!stack.empty()) {
        const std::size_t v = stack.back();
        stack.pop_back();
        for (std::size_t u : preds[v]) {
            if (!good[u]) {
                good[u] = true;
                stack.push_back(u);
            }
        }
    }
    return good;
}

bool is_synchronizing(const Dfa& m)
{
    const PairGraph g(m);
    const auto good = g.mergeable();
    for (bool b : good) {
        if (!b) {
            return false;
        }
    }
    return true;
}

std::optional<Word> shortest_reset_word(const Dfa& m, const SearchBudget& budget)
{
    m.require_complete();
    const std::size_t n = m.state_count();
    struct Visit {
        std::size_t parent;
        Symbol via;
        std::size_t depth;
    };
    std::vector<StateSet> sets{StateSet::full(n)};
    std::vector<Visit> info{{0, 0, 0}};
    std::unordered_map<StateSet, std::size_t, StateSetHash> index{{sets[0], 0}};

    auto unwind = [&](std::size_t id) {
        Word w(info[id].depth);
        for (std::size_t i = w.size(); i > 0; --i) {
            w[i - 1] = info[id].via;
            id = info[id].parent;
        }
        return w;
    };

    if (sets[0].count() <= 1) {
        return Word{};
    }
    bool truncated = false;
    for (std::size_t head = 0; head < sets.size(); ++head) {
        if (budget.max_word_len && info[head].depth >= *budget.max_word_len) {
            truncated = true;
            continue;
        }
        for (Symbol a = 0; a < m.symbol_count(); ++a) {
            StateSet image(n);
            sets[head].for_each([&](State q) { image.insert(m.next(q, a)); });
            if (index.contains(image)) {
                continue;
            }
            if (sets.size() >= budget.max_subsets) {
                throw ResourceError("reset word search exceeded " + std::to_string(budget.max_subsets) +
                                    " subsets");
            }
            const std::size_t id = sets.size();
            index.emplace(image, id);
            info.push_back({head, a, info[head].depth + 1});
            const bool done = image.count() == 1;
            sets.push_back(std::move(image));
            if (done) {
                return unwind(id);
            }
        }
    }
    if (truncated) {
        throw ResourceError("reset word search hit the word length cap");
    }
    return std::nullopt;
}

} // namespace affix
