#include "affix/deciders.hpp"

#include <unordered_map>

#include "affix/synchronization.hpp"

namespace affix {

namespace {

/// Canonical shortest word accepted by a complete DFA, if any.
std::optional<Word> shortest_accepted(const Dfa& m)
{
    struct Visit {
        State parent;
        Symbol via;
    };
    std::vector<std::optional<Visit>> seen(m.state_count());
    std::vector<State> queue{m.start()};
    seen[m.start()] = Visit{kNoState, 0};

    auto unwind = [&](State q) {
        Word w;
        while (seen[q]->parent != kNoState) {
            w.push_back(seen[q]->via);
            q = seen[q]->parent;
        }
        return Word(w.rbegin(), w.rend());
    };

    for (std::size_t head = 0; head < queue.size(); ++head) {
        const State p = queue[head];
        if (m.is_final(p)) {
            return unwind(p);
        }
        for (Symbol a = 0; a < m.symbol_count(); ++a) {
            const State q = m.next(p, a);
            if (!seen[q]) {
                seen[q] = Visit{p, a};
                queue.push_back(q);
            }
        }
    }
    return std::nullopt;
}

} // namespace

Decision pref_universal_dfa(const Dfa& m)
{
    const Dfa complement = pref_complement_dfa(m);
    if (auto w = shortest_accepted(complement)) {
        return Decision::no(std::move(*w));
    }
    return Decision::yes();
}

Decision nfa_universal(const Nfa& input, const SearchBudget& budget)
{
    const Nfa m = remove_epsilon(input);
    const StateSet finals = m.final_set();

    struct Visit {
        std::size_t parent;
        Symbol via;
        std::size_t depth;
    };
    std::vector<StateSet> sets{m.initial_set()};
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

    if (!sets[0].intersects(finals)) {
        return Decision::no(Word{});
    }

    bool truncated = false;
    for (std::size_t head = 0; head < sets.size(); ++head) {
        if (budget.max_word_len && info[head].depth >= *budget.max_word_len) {
            truncated = true;
            continue;
        }
        for (Symbol a = 0; a < m.symbol_count(); ++a) {
            StateSet image = step(m, sets[head], a);
            if (index.contains(image)) {
                continue;
            }
            if (budget.antichains) {
                // Anything rejected from image is rejected from a smaller,
                // earlier subset by a word that is no longer and no larger.
                bool covered = false;
                for (const auto& s : sets) {
                    if (s.is_subset_of(image)) {
                        covered = true;
                        break;
                    }
                }
                if (covered) {
                    continue;
                }
            }
            if (sets.size() >= budget.max_subsets) {
                throw ResourceError("subset search exceeded " + std::to_string(budget.max_subsets) + " subsets");
            }
            const std::size_t id = sets.size();
            const bool rejecting = !image.intersects(finals);
            index.emplace(image, id);
            sets.push_back(std::move(image));
            info.push_back({head, a, info[head].depth + 1});
            if (rejecting) {
                return Decision::no(unwind(id));
            }
        }
    }
    if (truncated) {
        throw ResourceError("subset search hit the word length cap before a verdict");
    }
    return Decision::yes();
}

FactorAnalysis analyze_factor_universality(const Dfa& m)
{
    const Dfa reach = reachable_part(m);
    const StateSet live = coreachable_states(reach);
    const std::size_t n = reach.state_count();
    const std::size_t live_count = live.count();

    if (live_count == n) {
        // No dead state at all, so every state is universal.
        return FactorAnalysis{reach, std::nullopt, true, false, true};
    }

    std::vector<State> renum(n);
    State next = 0;
    for (State q = 0; q < n; ++q) {
        renum[q] = live.contains(q) ? next++ : kNoState;
    }
    const auto dead = static_cast<State>(live_count);
    for (State q = 0; q < n; ++q) {
        if (renum[q] == kNoState) {
            renum[q] = dead;
        }
    }

    Dfa reduced(reach.alphabet(), live_count + 1, renum[reach.start()]);
    for (State q = 0; q < n; ++q) {
        if (!live.contains(q)) {
            continue;
        }
        reduced.set_final(renum[q], reach.is_final(q));
        for (Symbol a = 0; a < reach.symbol_count(); ++a) {
            reduced.set_next(renum[q], a, renum[reach.next(q, a)]);
        }
    }
    for (Symbol a = 0; a < reach.symbol_count(); ++a) {
        reduced.set_next(dead, a, dead);
    }

    // A state is universal when the sink is not reachable from it.
    const Nfa graph = nfa_of_dfa(reduced);
    StateSet sink(graph.state_count());
    sink.insert(dead);
    const StateSet doomed = backward_reachable(graph, sink);

    FactorAnalysis result{reduced, dead, false, false, false};
    result.has_universal_state = doomed.count() < reduced.state_count();
    if (result.has_universal_state) {
        result.universal = true;
        return result;
    }
    result.sync_checked = true;
    result.universal = !is_synchronizing(reduced);
    return result;
}

Decision fact_universal_dfa(const Dfa& m)
{
    return analyze_factor_universality(m).universal ? Decision::yes() : Decision::no();
}

std::vector<std::size_t> strongly_connected_components(const Nfa& m, std::size_t* component_count)
{
    const std::size_t n = m.state_count();
    std::vector<std::vector<State>> succ(n);
    for (State p = 0; p < n; ++p) {
        for (Symbol a = 0; a < m.symbol_count(); ++a) {
            for (State q : m.targets(p, a)) {
                succ[p].push_back(q);
            }
        }
        for (State q : m.epsilon_targets(p)) {
            succ[p].push_back(q);
        }
    }

    // Iterative Tarjan.
    constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
    std::vector<std::size_t> order(n, unvisited);
    std::vector<std::size_t> low(n, 0);
    std::vector<std::size_t> comp(n, unvisited);
    std::vector<bool> on_stack(n, false);
    std::vector<State> stack;
    std::vector<std::pair<State, std::size_t>> call;
    std::size_t counter = 0;
    std::size_t components = 0;

    for (State root = 0; root < n; ++root) {
        if (order[root] != unvisited) {
            continue;
        }
        call.emplace_back(root, 0);
        order[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
            auto& [v, edge] = call.back();
            if (edge < succ[v].size()) {
                const State w = succ[v][edge++];
                if (order[w] == unvisited) {
                    order[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.emplace_back(w, 0);
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], order[w]);
                }
                continue;
            }
            const State done = v;
            call.pop_back();
            if (!call.empty()) {
                const State parent = call.back().first;
                low[parent] = std::min(low[parent], low[done]);
            }
            if (low[done] == order[done]) {
                State w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp[w] = components;
                } while (w != done);
                ++components;
            }
        }
    }
    if (component_count != nullptr) {
        *component_count = components;
    }
    return comp;
}

Decision subw_universal(const Nfa& m)
{
    const Nfa t = trim(m);
    if (t.state_count() == 0) {
        return Decision::no(Word{});
    }
    std::size_t count = 0;
    const auto comp = strongly_connected_components(t, &count);
    const std::size_t k = t.symbol_count();
    std::vector<bool> labels(count * k, false);
    std::vector<std::size_t> covered(count, 0);
    for (State p = 0; p < t.state_count(); ++p) {
        for (Symbol a = 0; a < k; ++a) {
            for (State q : t.targets(p, a)) {
                const std::size_t c = comp[p];
                if (comp[q] == c && !labels[c * k + a]) {
                    labels[c * k + a] = true;
                    if (++covered[c] == k) {
                        return Decision::yes();
                    }
                }
            }
        }
    }
    return Decision::no();
}

Word subword_omitted_word(const Nfa& m)
{
    std::size_t count = 0;
    strongly_connected_components(trim(m), &count);
    Word w;
    for (std::size_t rep = 0; rep <= count; ++rep) {
        for (Symbol a = 0; a < m.symbol_count(); ++a) {
            w.push_back(a);
        }
    }
    return w;
}

Decision closure_universal(const Automaton& m, ClosureKind kind, const SearchBudget& budget, Route route)
{
    if (route == Route::specialized) {
        if (const auto* d = std::get_if<Dfa>(&m)) {
            if (kind == ClosureKind::pref) {
                return pref_universal_dfa(*d);
            }
            if (kind == ClosureKind::fact) {
                return fact_universal_dfa(*d);
            }
        }
        if (kind == ClosureKind::subw) {
            return subw_universal(as_nfa(m));
        }
    }
    return nfa_universal(closure_nfa(as_nfa(m), kind), budget);
}

} // namespace affix
