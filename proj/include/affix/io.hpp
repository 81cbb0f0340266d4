#pragma once

#include <string>
#include <string_view>

#include "affix/automaton.hpp"
#include "affix/finite_sets.hpp"
#include "affix/reductions.hpp"

// Line-based text formats. '#' starts a comment that runs to the end of the
// line; blank lines are ignored.
//
// Automaton:
//   type dfa|nfa
//   alphabet s1 s2 ...
//   states N
//   initial i [j ...]        (dfa: exactly one)
//   final [i ...]
//   trans from sym to        (repeated; a dfa must be complete)
//
// Word list:
//   alphabet s1 s2 ...
//   one word per line as space-separated tokens; the line "eps" is the empty word
//
// Matrix set:
//   dim N
//   matrix sym               (per symbol, followed by N rows of N 0/1 entries)

namespace affix::io {

Automaton parse_automaton(std::string_view text);
/// A DFA is written as is. An NFA with epsilon edges is written after
/// remove_epsilon, which keeps its states and language.
std::string serialize(const Dfa& m);
std::string serialize(const Nfa& m);
std::string serialize(const Automaton& m);

WordSet parse_word_set(std::string_view text);
/// Words in lexicographic order.
std::string serialize(const WordSet& s);

MatrixSet parse_matrix_set(std::string_view text);
std::string serialize(const MatrixSet& ms);

/// Whole file contents; InputError when it cannot be read.
std::string read_file(const std::string& path);

} // namespace affix::io
