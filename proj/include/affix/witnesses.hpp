#pragma once

#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "affix/automaton.hpp"
#include "affix/closures.hpp"
#include "affix/finite_sets.hpp"
#include "affix/reductions.hpp"

namespace affix {

/// Canonical shortest word outside the closure of L(m), or nothing when the
/// closure is universal. Always goes through closure_nfa and nfa_universal.
std::optional<Word> shortest_missing(const Automaton& m, ClosureKind kind, const SearchBudget& budget = {});

enum class FamilyKind { pref_line, suffix_primes, subword_chain, factor_wordset, cerny };

std::string_view to_string(FamilyKind kind);
FamilyKind parse_family_kind(std::string_view name);

/// n-state unary DFA accepting exactly a^(n-2). Requires n >= 2.
Dfa pref_line(std::size_t n);

/// Unary DFA over {b} accepting the words b^m with m != p-1 (mod p).
Dfa unary_residue_complement(std::size_t p);

/// Suffix gadget over unary_residue_complement(p) for each prime p. The
/// union of those languages misses exactly b^(P-1) (b^P)* with P the product
/// of the primes, so the shortest missing suffix has length P + 2.
Gadget<Dfa> suffix_primes(const std::vector<std::size_t>& primes);

/// First n primes.
std::vector<std::size_t> first_primes(std::size_t n);

/// (n+1)-state NFA over a0..a{n-1}: q_i loops on every symbol but a_i and
/// moves to q_{i+1} on a_i; only q_n is final. Requires n >= 1.
Nfa subword_chain(std::size_t n);

/// {0,1}^n without 0^(n-1) 1. Requires n >= 1.
WordSet factor_wordset(std::size_t n);

/// n-state Cerny automaton: "a" rotates q -> q+1 mod n, "b" sends n-1 to 0
/// and fixes everything else. Requires n >= 1.
Dfa cerny(std::size_t n);

using FamilyMember = std::variant<Dfa, Nfa, WordSet>;

/// Dispatch by kind. For suffix_primes an empty `primes` means the first n primes.
FamilyMember gen_family(FamilyKind kind, std::size_t n, const std::vector<std::size_t>& primes = {});

} // namespace affix
