#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "affix/automaton.hpp"

namespace affix {

/// Square 0/1 matrix with Boolean (or, and) arithmetic.
class BoolMatrix {
public:
    BoolMatrix() = default;
    explicit BoolMatrix(std::size_t dim) : dim_(dim), cells_(dim * dim, 0) {}

    static BoolMatrix identity(std::size_t dim);

    std::size_t dim() const { return dim_; }
    bool at(std::size_t row, std::size_t col) const { return cells_[row * dim_ + col] != 0; }
    void set(std::size_t row, std::size_t col, bool value = true) { cells_[row * dim_ + col] = value ? 1 : 0; }
    bool is_zero() const;

    friend BoolMatrix operator*(const BoolMatrix& x, const BoolMatrix& y);
    friend bool operator==(const BoolMatrix&, const BoolMatrix&) = default;

    std::size_t hash() const;

private:
    std::size_t dim_ = 0;
    std::vector<std::uint8_t> cells_;
};

/// One square Boolean matrix per symbol, all of the same dimension.
class MatrixSet {
public:
    MatrixSet(Alphabet alphabet, std::vector<BoolMatrix> matrices);

    const Alphabet& alphabet() const { return alphabet_; }
    std::size_t dim() const { return matrices_.front().dim(); }
    const BoolMatrix& matrix(Symbol a) const { return matrices_.at(a); }
    const std::vector<BoolMatrix>& matrices() const { return matrices_; }

    /// Left-to-right product; the empty word gives the identity.
    BoolMatrix product(const Word& w) const;

    friend bool operator==(const MatrixSet&, const MatrixSet&) = default;

private:
    Alphabet alphabet_;
    std::vector<BoolMatrix> matrices_;
};

/// Whether the union of the languages covers Sigma*, by a product search for
/// a tuple of non-final states. The witness is the shortest word outside the
/// union. Budget caps the number of product tuples.
Decision union_universal(const std::vector<Dfa>& machines, const SearchBudget& budget = {});

/// Input to the hardness gadgets: DFAs over a common alphabet and two fresh
/// marker symbols.
struct GadgetSpec {
    std::vector<Dfa> machines;
    std::string a = "_a";
    std::string c = "_c";
};

template <typename Machine>
struct Gadget {
    Machine machine;
    /// First state of each embedded machine copy, in input order.
    std::vector<State> offsets;
    /// Human-readable remarks (preprocessing applied, layout).
    std::vector<std::string> notes;
};

/// Equivalent DFA without transitions into its start state: when some edge
/// enters the start, a fresh start state copying its row is added.
Dfa detach_start(const Dfa& m);

/// Complete DFA over Sigma + {a, c} whose suffix closure is universal iff the
/// union of the input languages is Sigma*. State 0 is the start state q.
Gadget<Dfa> suffix_gadget(const GadgetSpec& spec);

/// NFA over Sigma + {a, c} whose factor closure is universal iff the union of
/// the input languages is Sigma*. States 0, 1, 2 are the control states
/// q, r, s accepting the words without a factor in a Sigma* c; state 3 is the
/// guess state t, entered on a and left by epsilon edges to every embedded
/// start state.
Gadget<Nfa> factor_gadget(const GadgetSpec& spec);

/// M_a[i][j] = 1 iff j is in delta(i, a). Requires an epsilon-free NFA.
MatrixSet matrices_of_nfa(const Nfa& m);

/// Whether some nonempty product of the matrices is all zeros. Decision::universal
/// carries "mortal"; the witness is the canonical shortest such word.
Decision is_mortal(const MatrixSet& ms, const SearchBudget& budget = {});

} // namespace affix
