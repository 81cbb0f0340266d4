#include "affix/reductions.hpp"

#include <unordered_map>

namespace affix {

BoolMatrix BoolMatrix::identity(std::size_t dim)
{
    BoolMatrix out(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        out.set(i, i);
    }
    return out;
}

bool BoolMatrix::is_zero() const
{
    for (auto c : cells_) {
        if (c != 0) {
            return false;
        }
    }
    return true;
}

BoolMatrix operator*(const BoolMatrix& x, const BoolMatrix& y)
{
    if (x.dim_ != y.dim_) {
        throw InputError("matrix dimensions differ");
    }
    const std::size_t n = x.dim_;
    BoolMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            if (!x.at(i, k)) {
                continue;
            }
            for (std::size_t j = 0; j < n; ++j) {
                if (y.at(k, j)) {
                    out.cells_[i * n + j] = 1;
                }
            }
        }
    }
    return out;
}

std::size_t BoolMatrix::hash() const
{
    std::size_t h = 1469598103934665603ULL;
    for (auto c : cells_) {
        h = (h ^ c) * 1099511628211ULL;
    }
    return h;
}

MatrixSet::MatrixSet(Alphabet alphabet, std::vector<BoolMatrix> matrices)
    : alphabet_(std::move(alphabet)), matrices_(std::move(matrices))
{
    if (matrices_.empty() || matrices_.size() != alphabet_.size()) {
        throw InputError("matrix set needs exactly one matrix per symbol");
    }
    const std::size_t dim = matrices_.front().dim();
    if (dim == 0) {
        throw InputError("matrix dimension must be positive");
    }
    for (const auto& m : matrices_) {
        if (m.dim() != dim) {
            throw InputError("all matrices must have the same dimension");
        }
    }
}

BoolMatrix MatrixSet::product(const Word& w) const
{
    check_word(alphabet_, w);
    BoolMatrix acc = BoolMatrix::identity(dim());
    for (Symbol a : w) {
        acc = acc * matrices_[a];
    }
    return acc;
}

// ---------------------------------------------------------------------------

namespace {

struct TupleHash {
    std::size_t operator()(const std::vector<State>& t) const
    {
        std::size_t h = 0;
        for (State q : t) {
            h = h * 1000003U ^ q;
        }
        return h;
    }
};

} // namespace

Decision union_universal(const std::vector<Dfa>& machines, const SearchBudget& budget)
{
    if (machines.empty()) {
        throw InputError("union_universal needs at least one machine");
    }
    const Alphabet& sigma = machines.front().alphabet();
    for (const auto& m : machines) {
        if (!(m.alphabet() == sigma)) {
            throw InputError("all machines must share one alphabet");
        }
        m.require_complete();
    }

    auto all_rejecting = [&](const std::vector<State>& t) {
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (machines[i].is_final(t[i])) {
                return false;
            }
        }
        return true;
    };

    struct Visit {
        std::size_t parent;
        Symbol via;
        std::size_t depth;
    };
    std::vector<std::vector<State>> tuples;
    std::vector<Visit> info;
    std::unordered_map<std::vector<State>, std::size_t, TupleHash> index;

    std::vector<State> start;
    for (const auto& m : machines) {
        start.push_back(m.start());
    }
    if (all_rejecting(start)) {
        return Decision::no(Word{});
    }
    tuples.push_back(start);
    info.push_back({0, 0, 0});
    index.emplace(start, 0);

    for (std::size_t head = 0; head < tuples.size(); ++head) {
        for (Symbol a = 0; a < sigma.size(); ++a) {
            std::vector<State> next(machines.size());
            for (std::size_t i = 0; i < machines.size(); ++i) {
                next[i] = machines[i].next(tuples[head][i], a);
            }
            if (index.contains(next)) {
                continue;
            }
            if (tuples.size() >= budget.max_subsets) {
                throw ResourceError("product search exceeded " + std::to_string(budget.max_subsets) + " tuples");
            }
            const std::size_t id = tuples.size();
            index.emplace(next, id);
            info.push_back({head, a, info[head].depth + 1});
            const bool rejecting = all_rejecting(next);
            tuples.push_back(std::move(next));
            if (rejecting) {
                Word w(info[id].depth);
                std::size_t cur = id;
                for (std::size_t i = w.size(); i > 0; --i) {
                    w[i - 1] = info[cur].via;
                    cur = info[cur].parent;
                }
                return Decision::no(std::move(w));
            }
        }
    }
    return Decision::yes();
}

// ---------------------------------------------------------------------------

Dfa detach_start(const Dfa& m)
{
    m.require_complete();
    bool entered = false;
    for (State p = 0; p < m.state_count() && !entered; ++p) {
        for (Symbol a = 0; a < m.symbol_count(); ++a) {
            if (m.next(p, a) == m.start()) {
                entered = true;
                break;
            }
        }
    }
    if (!entered) {
        return m;
    }
    const auto fresh = static_cast<State>(m.state_count());
    Dfa out(m.alphabet(), m.state_count() + 1, fresh);
    for (State p = 0; p < m.state_count(); ++p) {
        out.set_final(p, m.is_final(p));
        for (Symbol a = 0; a < m.symbol_count(); ++a) {
            out.set_next(p, a, m.next(p, a));
        }
    }
    out.set_final(fresh, m.is_final(m.start()));
    for (Symbol a = 0; a < m.symbol_count(); ++a) {
        out.set_next(fresh, a, m.next(m.start(), a));
    }
    return out;
}

namespace {

struct Prepared {
    Alphabet sigma;
    Alphabet delta;
    Symbol a;
    Symbol c;
    std::vector<Dfa> machines;
    std::vector<std::string> notes;
};

Prepared prepare(const GadgetSpec& spec)
{
    if (spec.machines.empty()) {
        throw InputError("gadget needs at least one machine");
    }
    validate_token(spec.a);
    validate_token(spec.c);
    if (spec.a == spec.c) {
        throw InputError("gadget marker symbols must differ");
    }
    const Alphabet& sigma = spec.machines.front().alphabet();
    if (sigma.contains(spec.a) || sigma.contains(spec.c)) {
        throw InputError("gadget marker symbol clashes with the input alphabet");
    }
    Prepared p{sigma, sigma.extended({spec.a, spec.c}), static_cast<Symbol>(sigma.size()),
               static_cast<Symbol>(sigma.size() + 1), {}, {}};
    for (std::size_t i = 0; i < spec.machines.size(); ++i) {
        const Dfa& m = spec.machines[i];
        if (!(m.alphabet() == sigma)) {
            throw InputError("gadget machines must share one alphabet");
        }
        Dfa d = detach_start(m);
        if (d.state_count() != m.state_count()) {
            p.notes.push_back("machine " + std::to_string(i) + ": added a fresh start state");
        }
        p.machines.push_back(std::move(d));
    }
    return p;
}

} // namespace

Gadget<Dfa> suffix_gadget(const GadgetSpec& spec)
{
    Prepared in = prepare(spec);
    const std::size_t n = in.machines.size();
    const std::size_t k = in.sigma.size();

    // Layout: q, then per machine its states followed by r_i and s_i.
    std::vector<State> offsets;
    std::size_t total = 1;
    for (const auto& m : in.machines) {
        offsets.push_back(static_cast<State>(total));
        total += m.state_count() + 2;
    }
    auto first = [&](std::size_t i) { return offsets[i] + in.machines[i].start(); };
    auto reject_sink = [&](std::size_t i) { return static_cast<State>(offsets[i] + in.machines[i].state_count()); };
    auto accept_sink = [&](std::size_t i) { return static_cast<State>(reject_sink(i) + 1); };

    Dfa g(in.delta, total, 0);
    const State q = 0;
    g.set_final(q);
    for (Symbol x = 0; x < k; ++x) {
        g.set_next(q, x, q);
    }
    g.set_next(q, in.c, q);
    g.set_next(q, in.a, first(0));

    for (std::size_t i = 0; i < n; ++i) {
        const Dfa& m = in.machines[i];
        for (State p = 0; p < m.state_count(); ++p) {
            const State gp = offsets[i] + p;
            g.set_final(gp);
            for (Symbol x = 0; x < k; ++x) {
                g.set_next(gp, x, offsets[i] + m.next(p, x));
            }
            g.set_next(gp, in.c, m.is_final(p) ? accept_sink(i) : reject_sink(i));
            g.set_next(gp, in.a, p == m.start() ? first((i + 1) % n) : first(i));
        }
        for (State sink : {reject_sink(i), accept_sink(i)}) {
            for (Symbol x = 0; x < k; ++x) {
                g.set_next(sink, x, accept_sink(i));
            }
            g.set_next(sink, in.c, accept_sink(i));
            g.set_next(sink, in.a, first(i));
        }
        g.set_final(accept_sink(i));
    }
    g.require_complete();

    in.notes.push_back("suffix gadget: " + std::to_string(n) + " machines, " + std::to_string(total) + " states");
    return {std::move(g), std::move(offsets), std::move(in.notes)};
}

Gadget<Nfa> factor_gadget(const GadgetSpec& spec)
{
    Prepared in = prepare(spec);
    const std::size_t k = in.sigma.size();

    std::vector<State> offsets;
    std::size_t total = 4;
    for (const auto& m : in.machines) {
        offsets.push_back(static_cast<State>(total));
        total += m.state_count();
    }

    Nfa g(in.delta, total);
    const State q = 0;
    const State r = 1;
    const State s = 2;
    const State t = 3;
    g.set_initial(q);
    for (State x : {q, r, s}) {
        g.set_final(x);
        g.add_transition(x, in.a, r);
        g.add_transition(x, in.a, t);
    }
    // q: no pending a; r: just read a; s: a followed by Sigma+.
    for (Symbol x = 0; x < k; ++x) {
        g.add_transition(q, x, q);
        g.add_transition(r, x, s);
        g.add_transition(s, x, s);
    }
    g.add_transition(q, in.c, q);

    for (std::size_t i = 0; i < in.machines.size(); ++i) {
        const Dfa& m = in.machines[i];
        g.add_epsilon(t, offsets[i] + m.start());
        for (State p = 0; p < m.state_count(); ++p) {
            const State gp = offsets[i] + p;
            for (Symbol x = 0; x < k; ++x) {
                g.add_transition(gp, x, offsets[i] + m.next(p, x));
            }
            if (m.is_final(p)) {
                g.add_transition(gp, in.c, q);
            }
        }
    }

    in.notes.push_back("factor gadget: " + std::to_string(in.machines.size()) + " machines, " +
                       std::to_string(total) + " states");
    return {std::move(g), std::move(offsets), std::move(in.notes)};
}

MatrixSet matrices_of_nfa(const Nfa& m)
{
    if (m.has_epsilon()) {
        throw InputError("matrices_of_nfa needs an epsilon-free NFA");
    }
    std::vector<BoolMatrix> mats(m.symbol_count(), BoolMatrix(m.state_count()));
    for (State p = 0; p < m.state_count(); ++p) {
        for (Symbol a = 0; a < m.symbol_count(); ++a) {
            for (State q : m.targets(p, a)) {
                mats[a].set(p, q);
            }
        }
    }
    return MatrixSet(m.alphabet(), std::move(mats));
}

Decision is_mortal(const MatrixSet& ms, const SearchBudget& budget)
{
    struct Hash {
        std::size_t operator()(const BoolMatrix& m) const { return m.hash(); }
    };
    struct Visit {
        std::size_t parent;
        Symbol via;
        std::size_t depth;
    };
    constexpr std::size_t root = static_cast<std::size_t>(-1);
    std::vector<BoolMatrix> products;
    std::vector<Visit> info;
    std::unordered_map<BoolMatrix, std::size_t, Hash> index;

    auto unwind = [&](std::size_t id) {
        Word w(info[id].depth);
        for (std::size_t i = w.size(); i > 0; --i) {
            w[i - 1] = info[id].via;
            id = info[id].parent;
        }
        return w;
    };
    auto discover = [&](BoolMatrix m, std::size_t parent, Symbol a, std::size_t depth) -> std::optional<Word> {
        if (index.contains(m)) {
            return std::nullopt;
        }
        if (products.size() >= budget.max_subsets) {
            throw ResourceError("matrix monoid search exceeded " + std::to_string(budget.max_subsets) + " products");
        }
        const std::size_t id = products.size();
        const bool zero = m.is_zero();
        index.emplace(m, id);
        products.push_back(std::move(m));
        info.push_back({parent, a, depth});
        if (zero) {
            return unwind(id);
        }
        return std::nullopt;
    };

    for (Symbol a = 0; a < ms.alphabet().size(); ++a) {
        if (auto w = discover(ms.matrix(a), root, a, 1)) {
            return Decision{true, std::move(w)};
        }
    }
    for (std::size_t head = 0; head < products.size(); ++head) {
        for (Symbol a = 0; a < ms.alphabet().size(); ++a) {
            if (auto w = discover(products[head] * ms.matrix(a), head, a, info[head].depth + 1)) {
                return Decision{true, std::move(w)};
            }
        }
    }
    return Decision{false, std::nullopt};
}

} // namespace affix
