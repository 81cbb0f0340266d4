#include "affix/closures.hpp"

#include <string>

namespace affix {

std::string_view to_string(ClosureKind kind)
{
    switch (kind) {
    case ClosureKind::pref: return "pref";
    case ClosureKind::suff: return "suff";
    case ClosureKind::fact: return "fact";
    case ClosureKind::subw: return "subw";
    }
    return "?";
}

ClosureKind parse_closure_kind(std::string_view name)
{
    if (name == "pref") return ClosureKind::pref;
    if (name == "suff") return ClosureKind::suff;
    if (name == "fact") return ClosureKind::fact;
    if (name == "subw") return ClosureKind::subw;
    throw InputError("unknown closure kind: " + std::string(name));
}

Nfa closure_nfa(const Nfa& m, ClosureKind kind)
{
    switch (kind) {
    case ClosureKind::pref: {
        Nfa out = m;
        const StateSet co = backward_reachable(m, m.final_set());
        for (State q = 0; q < m.state_count(); ++q) {
            out.set_final(q, co.contains(q));
        }
        return out;
    }
    case ClosureKind::suff: {
        Nfa out = m;
        const StateSet reach = forward_reachable(m, m.initial_set());
        for (State q = 0; q < m.state_count(); ++q) {
            out.set_initial(q, reach.contains(q));
        }
        return out;
    }
    case ClosureKind::fact: {
        Nfa out = trim(m);
        for (State q = 0; q < out.state_count(); ++q) {
            out.set_initial(q);
            out.set_final(q);
        }
        return out;
    }
    case ClosureKind::subw: {
        Nfa with_skips = m;
        for (State p = 0; p < m.state_count(); ++p) {
            for (Symbol a = 0; a < m.symbol_count(); ++a) {
                for (State q : m.targets(p, a)) {
                    with_skips.add_epsilon(p, q);
                }
            }
        }
        return remove_epsilon(with_skips);
    }
    }
    throw InputError("unknown closure kind");
}

StateSet coreachable_states(const Dfa& m)
{
    m.require_complete();
    // Reverse every arrow and search from the final states.
    std::vector<std::vector<State>> preds(m.state_count());
    for (State p = 0; p < m.state_count(); ++p) {
        for (Symbol a = 0; a < m.symbol_count(); ++a) {
            preds[m.next(p, a)].push_back(p);
        }
    }
    StateSet seen(m.state_count());
    std::vector<State> stack;
    for (State q = 0; q < m.state_count(); ++q) {
        if (m.is_final(q)) {
            seen.insert(q);
            stack.push_back(q);
        }
    }
    while (!stack.empty()) {
        const State q = stack.back();
        stack.pop_back();
        for (State p : preds[q]) {
            if (!seen.contains(p)) {
                seen.insert(p);
                stack.push_back(p);
            }
        }
    }
    return seen;
}

Dfa pref_complement_dfa(const Dfa& m)
{
    const StateSet live = coreachable_states(m);
    Dfa out = m;
    for (State q = 0; q < m.state_count(); ++q) {
        out.set_final(q, !live.contains(q));
    }
    return out;
}

} // namespace affix
