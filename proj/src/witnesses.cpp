#include "affix/witnesses.hpp"

#include <string>

#include "affix/deciders.hpp"

namespace affix {

std::optional<Word> shortest_missing(const Automaton& m, ClosureKind kind, const SearchBudget& budget)
{
    return nfa_universal(closure_nfa(as_nfa(m), kind), budget).witness;
}

std::string_view to_string(FamilyKind kind)
{
    switch (kind) {
    case FamilyKind::pref_line: return "pref-line";
    case FamilyKind::suffix_primes: return "suffix-primes";
    case FamilyKind::subword_chain: return "subword-chain";
    case FamilyKind::factor_wordset: return "factor-wordset";
    case FamilyKind::cerny: return "cerny";
    }
    return "?";
}

FamilyKind parse_family_kind(std::string_view name)
{
    if (name == "pref-line") return FamilyKind::pref_line;
    if (name == "suffix-primes") return FamilyKind::suffix_primes;
    if (name == "subword-chain") return FamilyKind::subword_chain;
    if (name == "factor-wordset") return FamilyKind::factor_wordset;
    if (name == "cerny") return FamilyKind::cerny;
    throw InputError("unknown family: " + std::string(name));
}

Dfa pref_line(std::size_t n)
{
    if (n < 2) {
        throw InputError("pref-line needs n >= 2");
    }
    Dfa m(Alphabet({"a"}), n, 0);
    // 0 -> 1 -> ... -> n-2 (final) -> n-1 (sink).
    for (State q = 0; q + 1 < n; ++q) {
        m.set_next(q, 0, q + 1);
    }
    m.set_next(static_cast<State>(n - 1), 0, static_cast<State>(n - 1));
    m.set_final(static_cast<State>(n - 2));
    return m;
}

Dfa unary_residue_complement(std::size_t p)
{
    if (p < 2) {
        throw InputError("residue modulus must be at least 2");
    }
    Dfa m(Alphabet({"b"}), p, 0);
    for (State q = 0; q < p; ++q) {
        m.set_next(q, 0, static_cast<State>((q + 1) % p));
        m.set_final(q, q != p - 1);
    }
    return m;
}

std::vector<std::size_t> first_primes(std::size_t n)
{
    std::vector<std::size_t> out;
    for (std::size_t c = 2; out.size() < n; ++c) {
        bool prime = true;
        for (std::size_t p : out) {
            if (p * p > c) {
                break;
            }
            if (c % p == 0) {
                prime = false;
                break;
            }
        }
        if (prime) {
            out.push_back(c);
        }
    }
    return out;
}

Gadget<Dfa> suffix_primes(const std::vector<std::size_t>& primes)
{
    if (primes.empty()) {
        throw InputError("suffix-primes needs at least one prime");
    }
    GadgetSpec spec;
    for (std::size_t i = 0; i < primes.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (primes[i] == primes[j]) {
                throw InputError("suffix-primes moduli must be distinct");
            }
        }
        spec.machines.push_back(unary_residue_complement(primes[i]));
    }
    return suffix_gadget(spec);
}

Nfa subword_chain(std::size_t n)
{
    if (n < 1) {
        throw InputError("subword-chain needs n >= 1");
    }
    std::vector<std::string> tokens;
    for (std::size_t i = 0; i < n; ++i) {
        tokens.push_back("a" + std::to_string(i));
    }
    Nfa m(Alphabet(std::move(tokens)), n + 1);
    m.set_initial(0);
    m.set_final(static_cast<State>(n));
    for (State q = 0; q < n; ++q) {
        for (Symbol a = 0; a < n; ++a) {
            if (a != q) {
                m.add_transition(q, a, q);
            }
        }
        m.add_transition(q, q, q + 1);
    }
    return m;
}

WordSet factor_wordset(std::size_t n)
{
    if (n < 1) {
        throw InputError("factor-wordset needs n >= 1");
    }
    if (n > 20) {
        throw InputError("factor-wordset n too large");
    }
    WordSet s(Alphabet({"0", "1"}));
    Word excluded(n, 0);
    excluded.back() = 1;
    for (std::size_t bits = 0; bits < (std::size_t{1} << n); ++bits) {
        Word w(n);
        for (std::size_t i = 0; i < n; ++i) {
            w[i] = static_cast<Symbol>((bits >> (n - 1 - i)) & 1U);
        }
        if (w != excluded) {
            s.insert(std::move(w));
        }
    }
    return s;
}

Dfa cerny(std::size_t n)
{
    if (n < 1) {
        throw InputError("cerny needs n >= 1");
    }
    Dfa m(Alphabet({"a", "b"}), n, 0);
    for (State q = 0; q < n; ++q) {
        m.set_next(q, 0, static_cast<State>((q + 1) % n));
        m.set_next(q, 1, q == n - 1 ? 0 : q);
    }
    return m;
}

FamilyMember gen_family(FamilyKind kind, std::size_t n, const std::vector<std::size_t>& primes)
{
    switch (kind) {
    case FamilyKind::pref_line: return pref_line(n);
    case FamilyKind::suffix_primes: return suffix_primes(primes.empty() ? first_primes(n) : primes).machine;
    case FamilyKind::subword_chain: return subword_chain(n);
    case FamilyKind::factor_wordset: return factor_wordset(n);
    case FamilyKind::cerny: return cerny(n);
    }
    throw InputError("unknown family");
}

} // namespace affix
