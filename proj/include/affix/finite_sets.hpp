#pragma once

#include <map>
#include <set>
#include <string_view>

#include "affix/automaton.hpp"

namespace affix {

/// Finite set of words over an alphabet; duplicates collapse.
class WordSet {
public:
    explicit WordSet(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}
    WordSet(Alphabet alphabet, const std::vector<Word>& words);

    const Alphabet& alphabet() const { return alphabet_; }
    const std::set<Word>& words() const { return words_; }
    std::size_t size() const { return words_.size(); }

    void insert(Word w);
    bool contains(const Word& w) const { return words_.contains(w); }

    /// Every word reversed.
    WordSet reversed() const;

    friend bool operator==(const WordSet&, const WordSet&) = default;

private:
    Alphabet alphabet_;
    std::set<Word> words_;
};

/// Prefix tree that only keeps the prefix-minimal words: a word with an
/// inserted prefix is dropped, and a word that is a prefix of inserted words
/// replaces them.
class Trie {
public:
    explicit Trie(std::size_t symbol_count);

    void insert(const Word& w);

    static constexpr std::size_t root = 0;
    bool is_terminal(std::size_t node) const { return nodes_[node].terminal; }
    const std::map<Symbol, std::size_t>& children(std::size_t node) const { return nodes_[node].children; }
    std::size_t degree(std::size_t node) const { return nodes_[node].children.size(); }

    /// Nodes reachable from the root, breadth first, children in symbol order.
    std::vector<std::size_t> live_nodes() const;
    /// Words currently stored, in lexicographic order.
    std::vector<Word> words() const;

private:
    struct Node {
        std::map<Symbol, std::size_t> children;
        bool terminal = false;
    };
    std::size_t symbol_count_;
    std::vector<Node> nodes_;
};

/// Pref(S*) = Sigma* in linear time: build the pruned trie of S without
/// epsilon and check that every node has degree 0 or |Sigma|. The witness is
/// the canonical shortest word that no word of S* extends.
Decision pref_star_universal(const WordSet& s);

/// Suff(S*) = Sigma*, via pref_star_universal on the reversed words.
Decision suff_star_universal(const WordSet& s);

/// Linear-size NFA for S*: a hub state (initial and final) and one loop of
/// fresh states per nonempty word.
Nfa star_nfa(const WordSet& s);

/// Fact(S*) = Sigma* through star_nfa, the factor closure and the subset search.
Decision fact_star_universal(const WordSet& s, const SearchBudget& budget = {});

enum class OmegaSide { right, left, bi };

std::string_view to_string(OmegaSide side);
OmegaSide parse_omega_side(std::string_view name);

/// Whether S generates every right-infinite (left-infinite, bi-infinite)
/// word; equivalent to Pref (Suff, Fact) of S* being universal.
Decision omega_universal(const WordSet& s, OmegaSide side, const SearchBudget& budget = {});

} // namespace affix
