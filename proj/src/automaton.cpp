#include "affix/automaton.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <sstream>

namespace affix {

void validate_token(std::string_view token)
{
    if (token.empty()) {
        throw InputError("empty symbol token");
    }
    if (token.front() == '#') {
        throw InputError("symbol token may not start with '#': " + std::string(token));
    }
    for (char ch : token) {
        if (std::isspace(static_cast<unsigned char>(ch)) != 0) {
            throw InputError("symbol token contains whitespace: '" + std::string(token) + "'");
        }
    }
}

Alphabet::Alphabet(std::vector<std::string> tokens) : tokens_(std::move(tokens))
{
    if (tokens_.empty()) {
        throw InputError("alphabet must not be empty");
    }
    for (std::size_t i = 0; i < tokens_.size(); ++i) {
        validate_token(tokens_[i]);
        if (!index_.emplace(tokens_[i], static_cast<Symbol>(i)).second) {
            throw InputError("duplicate symbol token: " + tokens_[i]);
        }
    }
}

std::optional<Symbol> Alphabet::find(std::string_view token) const
{
    auto it = index_.find(std::string(token));
    if (it == index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

Symbol Alphabet::index_of(std::string_view token) const
{
    if (auto a = find(token)) {
        return *a;
    }
    throw InputError("symbol not in alphabet: " + std::string(token));
}

Word Alphabet::parse_word(std::span<const std::string> tokens) const
{
    Word w;
    w.reserve(tokens.size());
    for (const auto& t : tokens) {
        w.push_back(index_of(t));
    }
    return w;
}

Word Alphabet::parse_word(std::string_view text) const
{
    std::istringstream in{std::string(text)};
    std::vector<std::string> tokens;
    for (std::string t; in >> t;) {
        tokens.push_back(std::move(t));
    }
    return parse_word(tokens);
}

std::string Alphabet::format(const Word& w) const
{
    if (w.empty()) {
        return "(empty word)";
    }
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i != 0) {
            out += ' ';
        }
        out += token(w[i]);
    }
    return out;
}

Alphabet Alphabet::extended(const std::vector<std::string>& extra) const
{
    auto tokens = tokens_;
    tokens.insert(tokens.end(), extra.begin(), extra.end());
    return Alphabet(std::move(tokens));
}

void check_word(const Alphabet& sigma, const Word& w)
{
    for (Symbol a : w) {
        if (a >= sigma.size()) {
            throw InputError("word symbol index " + std::to_string(a) + " outside alphabet of size " +
                             std::to_string(sigma.size()));
        }
    }
}

// ---------------------------------------------------------------------------
// Dfa

Dfa::Dfa(Alphabet alphabet, std::size_t state_count, State start)
    : alphabet_(std::move(alphabet)), start_(start), finals_(state_count, false),
      delta_(state_count * alphabet_.size(), kNoState)
{
    if (state_count == 0) {
        throw InputError("a DFA needs at least one state");
    }
    if (start >= state_count) {
        throw InputError("DFA start state out of range");
    }
}

std::size_t Dfa::index(State q, Symbol a) const
{
    if (q >= state_count() || a >= symbol_count()) {
        throw InputError("DFA transition index out of range");
    }
    return static_cast<std::size_t>(q) * symbol_count() + a;
}

std::vector<State> Dfa::final_states() const
{
    std::vector<State> out;
    for (State q = 0; q < state_count(); ++q) {
        if (finals_[q]) {
            out.push_back(q);
        }
    }
    return out;
}

void Dfa::set_final(State q, bool final)
{
    if (q >= state_count()) {
        throw InputError("DFA final state out of range");
    }
    finals_[q] = final;
}

void Dfa::set_start(State q)
{
    if (q >= state_count()) {
        throw InputError("DFA start state out of range");
    }
    start_ = q;
}

void Dfa::set_next(State from, Symbol a, State to)
{
    if (to >= state_count()) {
        throw InputError("DFA transition target out of range");
    }
    delta_[index(from, a)] = to;
}

State Dfa::run(State from, const Word& w) const
{
    State q = from;
    for (Symbol a : w) {
        q = next(q, a);
        if (q == kNoState) {
            throw InputError("DFA is not complete");
        }
    }
    return q;
}

bool Dfa::is_complete() const
{
    return std::find(delta_.begin(), delta_.end(), kNoState) == delta_.end();
}

void Dfa::require_complete() const
{
    for (State q = 0; q < state_count(); ++q) {
        for (Symbol a = 0; a < symbol_count(); ++a) {
            if (next(q, a) == kNoState) {
                throw InputError("DFA is not complete: no transition from state " + std::to_string(q) +
                                 " on '" + alphabet_.token(a) + "'");
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Nfa

Nfa::Nfa(Alphabet alphabet, std::size_t state_count)
    : alphabet_(std::move(alphabet)), initial_(state_count, false), final_(state_count, false),
      moves_(state_count * alphabet_.size()), eps_(state_count)
{
}

void Nfa::check_state(State q) const
{
    if (q >= state_count()) {
        throw InputError("NFA state " + std::to_string(q) + " out of range");
    }
}

State Nfa::add_state()
{
    const auto q = static_cast<State>(state_count());
    initial_.push_back(false);
    final_.push_back(false);
    moves_.resize(moves_.size() + symbol_count());
    eps_.emplace_back();
    return q;
}

namespace {

void insert_sorted(std::vector<State>& v, State q)
{
    auto it = std::lower_bound(v.begin(), v.end(), q);
    if (it == v.end() || *it != q) {
        v.insert(it, q);
    }
}

} // namespace

void Nfa::add_transition(State from, Symbol a, State to)
{
    check_state(from);
    check_state(to);
    if (a >= symbol_count()) {
        throw InputError("NFA transition symbol out of range");
    }
    insert_sorted(moves_[from * symbol_count() + a], to);
}

void Nfa::add_epsilon(State from, State to)
{
    check_state(from);
    check_state(to);
    insert_sorted(eps_[from], to);
}

void Nfa::set_initial(State q, bool initial)
{
    check_state(q);
    initial_[q] = initial;
}

void Nfa::set_final(State q, bool final)
{
    check_state(q);
    final_[q] = final;
}

std::vector<State> Nfa::initial_states() const
{
    std::vector<State> out;
    for (State q = 0; q < state_count(); ++q) {
        if (initial_[q]) {
            out.push_back(q);
        }
    }
    return out;
}

std::vector<State> Nfa::final_states() const
{
    std::vector<State> out;
    for (State q = 0; q < state_count(); ++q) {
        if (final_[q]) {
            out.push_back(q);
        }
    }
    return out;
}

StateSet Nfa::initial_set() const
{
    StateSet s(state_count());
    for (State q = 0; q < state_count(); ++q) {
        if (initial_[q]) {
            s.insert(q);
        }
    }
    return s;
}

StateSet Nfa::final_set() const
{
    StateSet s(state_count());
    for (State q = 0; q < state_count(); ++q) {
        if (final_[q]) {
            s.insert(q);
        }
    }
    return s;
}

bool Nfa::has_epsilon() const
{
    return std::any_of(eps_.begin(), eps_.end(), [](const auto& v) { return !v.empty(); });
}

std::size_t Nfa::transition_count() const
{
    std::size_t n = 0;
    for (const auto& v : moves_) {
        n += v.size();
    }
    return n;
}

const Alphabet& alphabet_of(const Automaton& m)
{
    return std::visit([](const auto& x) -> const Alphabet& { return x.alphabet(); }, m);
}

std::size_t state_count_of(const Automaton& m)
{
    return std::visit([](const auto& x) { return x.state_count(); }, m);
}

// ---------------------------------------------------------------------------
// Acceptance and reachability

bool accepts(const Dfa& m, const Word& w)
{
    check_word(m.alphabet(), w);
    return m.is_final(m.run(m.start(), w));
}

StateSet epsilon_closure(const Nfa& m, StateSet from)
{
    std::vector<State> stack = from.to_vector();
    while (!stack.empty()) {
        const State p = stack.back();
        stack.pop_back();
        for (State q : m.epsilon_targets(p)) {
            if (!from.contains(q)) {
                from.insert(q);
                stack.push_back(q);
            }
        }
    }
    return from;
}

StateSet step(const Nfa& m, const StateSet& from, Symbol a)
{
    StateSet out(m.state_count());
    from.for_each([&](State p) {
        for (State q : m.targets(p, a)) {
            out.insert(q);
        }
    });
    return out;
}

bool accepts(const Nfa& m, const Word& w)
{
    check_word(m.alphabet(), w);
    StateSet current = epsilon_closure(m, m.initial_set());
    for (Symbol a : w) {
        current = epsilon_closure(m, step(m, current, a));
    }
    return current.intersects(m.final_set());
}

bool accepts(const Automaton& m, const Word& w)
{
    return std::visit([&](const auto& x) { return accepts(x, w); }, m);
}

StateSet forward_reachable(const Nfa& m, const StateSet& from)
{
    StateSet seen = from;
    std::vector<State> stack = from.to_vector();
    auto visit = [&](State q) {
        if (!seen.contains(q)) {
            seen.insert(q);
            stack.push_back(q);
        }
    };
    while (!stack.empty()) {
        const State p = stack.back();
        stack.pop_back();
        for (Symbol a = 0; a < m.symbol_count(); ++a) {
            for (State q : m.targets(p, a)) {
                visit(q);
            }
        }
        for (State q : m.epsilon_targets(p)) {
            visit(q);
        }
    }
    return seen;
}

StateSet backward_reachable(const Nfa& m, const StateSet& to)
{
    std::vector<std::vector<State>> preds(m.state_count());
    for (State p = 0; p < m.state_count(); ++p) {
        for (Symbol a = 0; a < m.symbol_count(); ++a) {
            for (State q : m.targets(p, a)) {
                preds[q].push_back(p);
            }
        }
        for (State q : m.epsilon_targets(p)) {
            preds[q].push_back(p);
        }
    }
    StateSet seen = to;
    std::vector<State> stack = to.to_vector();
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

// ---------------------------------------------------------------------------
// Transformations

Nfa restrict_to(const Nfa& m, const StateSet& keep)
{
    std::vector<State> renum(m.state_count(), kNoState);
    State next = 0;
    keep.for_each([&](State q) { renum[q] = next++; });

    Nfa out(m.alphabet(), next);
    keep.for_each([&](State p) {
        const State np = renum[p];
        out.set_initial(np, m.is_initial(p));
        out.set_final(np, m.is_final(p));
        for (Symbol a = 0; a < m.symbol_count(); ++a) {
            for (State q : m.targets(p, a)) {
                if (renum[q] != kNoState) {
                    out.add_transition(np, a, renum[q]);
                }
            }
        }
        for (State q : m.epsilon_targets(p)) {
            if (renum[q] != kNoState) {
                out.add_epsilon(np, renum[q]);
            }
        }
    });
    return out;
}

Nfa trim(const Nfa& m)
{
    StateSet keep = forward_reachable(m, m.initial_set());
    const StateSet co = backward_reachable(m, m.final_set());
    StateSet both(m.state_count());
    keep.for_each([&](State q) {
        if (co.contains(q)) {
            both.insert(q);
        }
    });
    return restrict_to(m, both);
}

Nfa reverse(const Nfa& m)
{
    Nfa out(m.alphabet(), m.state_count());
    for (State p = 0; p < m.state_count(); ++p) {
        out.set_initial(p, m.is_final(p));
        out.set_final(p, m.is_initial(p));
        for (Symbol a = 0; a < m.symbol_count(); ++a) {
            for (State q : m.targets(p, a)) {
                out.add_transition(q, a, p);
            }
        }
        for (State q : m.epsilon_targets(p)) {
            out.add_epsilon(q, p);
        }
    }
    return out;
}

Nfa remove_epsilon(const Nfa& m)
{
    if (!m.has_epsilon()) {
        return m;
    }
    const std::size_t n = m.state_count();
    const StateSet finals = m.final_set();
    Nfa out(m.alphabet(), n);
    for (State p = 0; p < n; ++p) {
        StateSet single(n);
        single.insert(p);
        const StateSet closure = epsilon_closure(m, single);
        out.set_initial(p, m.is_initial(p));
        out.set_final(p, closure.intersects(finals));
        closure.for_each([&](State r) {
            for (Symbol a = 0; a < m.symbol_count(); ++a) {
                for (State q : m.targets(r, a)) {
                    out.add_transition(p, a, q);
                }
            }
        });
    }
    return out;
}

Nfa single_start(const Nfa& m)
{
    const auto initials = m.initial_states();
    if (initials.size() == 1) {
        return m;
    }
    Nfa with_hub = m;
    const State hub = with_hub.add_state();
    for (State q : initials) {
        with_hub.set_initial(q, false);
        with_hub.add_epsilon(hub, q);
    }
    with_hub.set_initial(hub);
    return remove_epsilon(with_hub);
}

Nfa nfa_of_dfa(const Dfa& m)
{
    m.require_complete();
    Nfa out(m.alphabet(), m.state_count());
    out.set_initial(m.start());
    for (State p = 0; p < m.state_count(); ++p) {
        out.set_final(p, m.is_final(p));
        for (Symbol a = 0; a < m.symbol_count(); ++a) {
            out.add_transition(p, a, m.next(p, a));
        }
    }
    return out;
}

Nfa as_nfa(const Automaton& m)
{
    if (const auto* d = std::get_if<Dfa>(&m)) {
        return nfa_of_dfa(*d);
    }
    return std::get<Nfa>(m);
}

Dfa reachable_part(const Dfa& m)
{
    m.require_complete();
    std::vector<State> renum(m.state_count(), kNoState);
    std::vector<State> order{m.start()};
    renum[m.start()] = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (Symbol a = 0; a < m.symbol_count(); ++a) {
            const State q = m.next(order[i], a);
            if (renum[q] == kNoState) {
                renum[q] = static_cast<State>(order.size());
                order.push_back(q);
            }
        }
    }
    Dfa out(m.alphabet(), order.size(), 0);
    for (std::size_t i = 0; i < order.size(); ++i) {
        const auto p = static_cast<State>(i);
        out.set_final(p, m.is_final(order[i]));
        for (Symbol a = 0; a < m.symbol_count(); ++a) {
            out.set_next(p, a, renum[m.next(order[i], a)]);
        }
    }
    return out;
}

} // namespace affix
