#pragma once

#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "affix/automaton.hpp"
#include "affix/closures.hpp"
#include "affix/oracle.hpp"

namespace affix::testing {

using Edge = std::tuple<State, std::string, State>;

inline Dfa make_dfa(std::vector<std::string> sigma, std::size_t n, State start, const std::vector<State>& finals,
                    const std::vector<Edge>& edges)
{
    Dfa m(Alphabet(std::move(sigma)), n, start);
    for (State q : finals) {
        m.set_final(q);
    }
    for (const auto& [p, a, q] : edges) {
        m.set_next(p, m.alphabet().index_of(a), q);
    }
    m.require_complete();
    return m;
}

inline Nfa make_nfa(std::vector<std::string> sigma, std::size_t n, const std::vector<State>& initials,
                    const std::vector<State>& finals, const std::vector<Edge>& edges,
                    const std::vector<std::pair<State, State>>& eps = {})
{
    Nfa m(Alphabet(std::move(sigma)), n);
    for (State q : initials) {
        m.set_initial(q);
    }
    for (State q : finals) {
        m.set_final(q);
    }
    for (const auto& [p, a, q] : edges) {
        m.add_transition(p, m.alphabet().index_of(a), q);
    }
    for (const auto& [p, q] : eps) {
        m.add_epsilon(p, q);
    }
    return m;
}

/// Parses "a b a" style words against a machine's alphabet.
inline Word word(const Alphabet& sigma, std::string_view text)
{
    return sigma.parse_word(text);
}

inline Alphabet binary() { return Alphabet({"a", "b"}); }

inline Dfa random_dfa(std::mt19937& rng, std::size_t n, const Alphabet& sigma, double final_prob = 0.4)
{
    std::uniform_int_distribution<State> target(0, static_cast<State>(n - 1));
    std::bernoulli_distribution final(final_prob);
    Dfa m(sigma, n, 0);
    for (State p = 0; p < n; ++p) {
        m.set_final(p, final(rng));
        for (Symbol a = 0; a < sigma.size(); ++a) {
            m.set_next(p, a, target(rng));
        }
    }
    return m;
}

inline Nfa random_nfa(std::mt19937& rng, std::size_t n, const Alphabet& sigma, double edge_prob = 0.3,
                      double eps_prob = 0.0, double final_prob = 0.4)
{
    std::bernoulli_distribution edge(edge_prob);
    std::bernoulli_distribution eps(eps_prob);
    std::bernoulli_distribution final(final_prob);
    std::uniform_int_distribution<State> pick(0, static_cast<State>(n - 1));
    Nfa m(sigma, n);
    m.set_initial(pick(rng));
    for (State p = 0; p < n; ++p) {
        m.set_final(p, final(rng));
        for (State q = 0; q < n; ++q) {
            for (Symbol a = 0; a < sigma.size(); ++a) {
                if (edge(rng)) {
                    m.add_transition(p, a, q);
                }
            }
            if (p != q && eps(rng)) {
                m.add_epsilon(p, q);
            }
        }
    }
    return m;
}

/// Every complete DFA with n states over sigma, start state 0, all final sets.
template <typename F>
void for_each_dfa(std::size_t n, const Alphabet& sigma, F&& f)
{
    const std::size_t cells = n * sigma.size();
    std::size_t tables = 1;
    for (std::size_t i = 0; i < cells; ++i) {
        tables *= n;
    }
    for (std::size_t t = 0; t < tables; ++t) {
        for (std::size_t finals = 0; finals < (std::size_t{1} << n); ++finals) {
            Dfa m(sigma, n, 0);
            std::size_t code = t;
            for (State p = 0; p < n; ++p) {
                m.set_final(p, ((finals >> p) & 1U) != 0);
                for (Symbol a = 0; a < sigma.size(); ++a) {
                    m.set_next(p, a, static_cast<State>(code % n));
                    code /= n;
                }
            }
            f(m);
        }
    }
}

inline std::set<Word> language_upto(const Automaton& m, std::size_t len)
{
    const auto words = oracle::enum_language(m, {len, std::nullopt});
    return {words.begin(), words.end()};
}

inline bool same_language_upto(const Automaton& x, const Automaton& y, std::size_t len)
{
    return language_upto(x, len) == language_upto(y, len);
}

/// Affixes of length <= len of the accepted words of length <= len + extra,
/// taken by slicing the words themselves (no subword support: gaps are unbounded).
inline std::set<Word> sliced_closure(const Automaton& m, ClosureKind kind, std::size_t len, std::size_t extra)
{
    std::set<Word> out;
    for (const auto& w : language_upto(m, len + extra)) {
        for (std::size_t i = 0; i <= w.size(); ++i) {
            for (std::size_t j = i; j <= w.size() && j - i <= len; ++j) {
                const bool ok = (kind == ClosureKind::fact) || (kind == ClosureKind::pref && i == 0) ||
                                (kind == ClosureKind::suff && j == w.size());
                if (ok) {
                    out.insert(Word(w.begin() + static_cast<std::ptrdiff_t>(i), w.begin() + static_cast<std::ptrdiff_t>(j)));
                }
            }
        }
    }
    return out;
}

/// Shortlex comparison, the canonical witness order.
inline bool shortlex_less(const Word& x, const Word& y)
{
    if (x.size() != y.size()) {
        return x.size() < y.size();
    }
    return x < y;
}

} // namespace affix::testing
