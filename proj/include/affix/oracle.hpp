#pragma once

#include <optional>

#include "affix/automaton.hpp"
#include "affix/closures.hpp"

// Brute-force ground truth. Nothing here calls the closure constructions or
// the deciders; membership is decided from the definitions by simulating
// the machine on explicit words and context bounds.

namespace affix::oracle {

struct EnumBound {
    std::size_t max_len = 0;
    std::optional<std::size_t> max_words;
};

/// Every word of length <= max_len in shortlex order (length first, then
/// lexicographic by alphabet order).
std::vector<Word> all_words(const Alphabet& sigma, const EnumBound& b);

/// Accepted words of length <= max_len in shortlex order. Throws
/// ResourceError when more than max_words words would be returned.
std::vector<Word> enum_language(const Automaton& m, const EnumBound& b);

/// w in closure(L(m)) with every context word (x or z, and each gap between
/// letters for subw) no longer than `pad`. Exact once pad >= state_count - 1.
bool closure_member_bruteforce(const Automaton& m, ClosureKind kind, const Word& w, std::size_t pad);

/// 2 x state_count.
std::size_t default_pad(const Automaton& m);

/// Checks every word of length <= max_len; the first missing one in shortlex
/// order is the witness. Throws ResourceError past max_words candidates.
Decision universal_up_to(const Automaton& m, ClosureKind kind, const EnumBound& b, std::size_t pad);

} // namespace affix::oracle
