#include "affix/oracle.hpp"

#include <string>

namespace affix::oracle {

namespace {

/// Plain set simulation, independent of the library's NFA helpers.
class Simulator {
public:
    explicit Simulator(const Automaton& m) : m_(as_nfa(m)), n_(m_.state_count()) {}

    std::vector<bool> initial() const
    {
        std::vector<bool> s(n_, false);
        for (State q = 0; q < n_; ++q) {
            s[q] = m_.is_initial(q);
        }
        return close(std::move(s));
    }

    std::vector<bool> read(const std::vector<bool>& from, Symbol a) const
    {
        std::vector<bool> out(n_, false);
        for (State p = 0; p < n_; ++p) {
            if (from[p]) {
                for (State q : m_.targets(p, a)) {
                    out[q] = true;
                }
            }
        }
        return close(std::move(out));
    }

    std::vector<bool> read(std::vector<bool> from, const Word& w) const
    {
        for (Symbol a : w) {
            from = read(from, a);
        }
        return from;
    }

    /// States reachable from `from` by some word of length <= bound.
    std::vector<bool> within(std::vector<bool> from, std::size_t bound) const
    {
        std::vector<bool> acc = from;
        for (std::size_t i = 0; i < bound; ++i) {
            std::vector<bool> next(n_, false);
            for (Symbol a = 0; a < m_.symbol_count(); ++a) {
                const auto img = read(from, a);
                for (State q = 0; q < n_; ++q) {
                    next[q] = next[q] || img[q];
                }
            }
            bool grew = false;
            for (State q = 0; q < n_; ++q) {
                if (next[q] && !acc[q]) {
                    acc[q] = true;
                    grew = true;
                }
            }
            if (!grew) {
                break;
            }
            from = acc;
        }
        return acc;
    }

    bool any_final(const std::vector<bool>& s) const
    {
        for (State q = 0; q < n_; ++q) {
            if (s[q] && m_.is_final(q)) {
                return true;
            }
        }
        return false;
    }

    const Nfa& machine() const { return m_; }

private:
    std::vector<bool> close(std::vector<bool> s) const
    {
        std::vector<State> stack;
        for (State q = 0; q < n_; ++q) {
            if (s[q]) {
                stack.push_back(q);
            }
        }
        while (!stack.empty()) {
            const State p = stack.back();
            stack.pop_back();
            for (State q : m_.epsilon_targets(p)) {
                if (!s[q]) {
                    s[q] = true;
                    stack.push_back(q);
                }
            }
        }
        return s;
    }

    Nfa m_;
    std::size_t n_;
};

} // namespace

std::vector<Word> all_words(const Alphabet& sigma, const EnumBound& b)
{
    std::vector<Word> out{Word{}};
    std::size_t layer_begin = 0;
    for (std::size_t len = 1; len <= b.max_len; ++len) {
        const std::size_t layer_end = out.size();
        for (std::size_t i = layer_begin; i < layer_end; ++i) {
            for (Symbol a = 0; a < sigma.size(); ++a) {
                if (b.max_words && out.size() >= *b.max_words) {
                    throw ResourceError("word enumeration exceeded " + std::to_string(*b.max_words) + " words");
                }
                Word w = out[i];
                w.push_back(a);
                out.push_back(std::move(w));
            }
        }
        layer_begin = layer_end;
    }
    return out;
}

std::vector<Word> enum_language(const Automaton& m, const EnumBound& b)
{
    const Simulator sim(m);
    std::vector<Word> out;
    // Shortlex layers of (word, state set); dead branches are cut.
    std::vector<std::pair<Word, std::vector<bool>>> layer{{Word{}, sim.initial()}};
    for (std::size_t len = 0; len <= b.max_len && !layer.empty(); ++len) {
        std::vector<std::pair<Word, std::vector<bool>>> next;
        for (auto& [w, states] : layer) {
            if (sim.any_final(states)) {
                if (b.max_words && out.size() >= *b.max_words) {
                    throw ResourceError("language enumeration exceeded " + std::to_string(*b.max_words) + " words");
                }
                out.push_back(w);
            }
            if (len == b.max_len) {
                continue;
            }
            for (Symbol a = 0; a < sim.machine().symbol_count(); ++a) {
                auto img = sim.read(states, a);
                bool alive = false;
                for (bool x : img) {
                    alive = alive || x;
                }
                if (alive) {
                    Word v = w;
                    v.push_back(a);
                    next.emplace_back(std::move(v), std::move(img));
                }
            }
        }
        layer = std::move(next);
    }
    return out;
}

namespace {

bool member(const Simulator& sim, ClosureKind kind, const Word& w, std::size_t pad)
{
    switch (kind) {
    case ClosureKind::pref:
        // exists z, |z| <= pad: wz in L
        return sim.any_final(sim.within(sim.read(sim.initial(), w), pad));
    case ClosureKind::suff:
        // exists x, |x| <= pad: xw in L
        return sim.any_final(sim.read(sim.within(sim.initial(), pad), w));
    case ClosureKind::fact:
        return sim.any_final(sim.within(sim.read(sim.within(sim.initial(), pad), w), pad));
    case ClosureKind::subw: {
        // x0 w1 x1 w2 ... wk xk in L with every |xi| <= pad
        auto states = sim.within(sim.initial(), pad);
        for (Symbol a : w) {
            states = sim.within(sim.read(states, a), pad);
        }
        return sim.any_final(states);
    }
    }
    return false;
}

} // namespace

bool closure_member_bruteforce(const Automaton& m, ClosureKind kind, const Word& w, std::size_t pad)
{
    check_word(alphabet_of(m), w);
    return member(Simulator(m), kind, w, pad);
}

std::size_t default_pad(const Automaton& m)
{
    return 2 * state_count_of(m);
}

Decision universal_up_to(const Automaton& m, ClosureKind kind, const EnumBound& b, std::size_t pad)
{
    const Simulator sim(m);
    for (const auto& w : all_words(alphabet_of(m), b)) {
        if (!member(sim, kind, w, pad)) {
            return Decision::no(w);
        }
    }
    return Decision::yes();
}

} // namespace affix::oracle
