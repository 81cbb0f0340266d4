#include <doctest.h>

#include "affix/deciders.hpp"
#include "affix/oracle.hpp"
#include "affix/reductions.hpp"
#include "affix/synchronization.hpp"
#include "affix/witnesses.hpp"
#include "fixtures.hpp"

using namespace affix;
using namespace affix::testing;

namespace {

Dfa sigma_star() { return make_dfa({"a", "b"}, 1, 0, {0}, {{0, "a", 0}, {0, "b", 0}}); }

// Words over {0,1} without the factor 11; state 2 is the sink.
Dfa no_11()
{
    return make_dfa({"0", "1"}, 3, 0, {0, 1},
                    {{0, "0", 0}, {0, "1", 1}, {1, "0", 0}, {1, "1", 2}, {2, "0", 2}, {2, "1", 2}});
}

Dfa ab_star()
{
    return make_dfa({"a", "b"}, 3, 0, {0}, {{0, "a", 1}, {0, "b", 2}, {1, "a", 2}, {1, "b", 0}, {2, "a", 2}, {2, "b", 2}});
}

// Words ending in ab.
Dfa ends_ab()
{
    return make_dfa({"a", "b"}, 3, 0, {2}, {{0, "a", 1}, {0, "b", 0}, {1, "a", 1}, {1, "b", 2}, {2, "a", 1}, {2, "b", 0}});
}

/// Compares a decision with the oracle's answer on words up to `len`; a
/// witness longer than `len` is invisible to the oracle.
void check_against_oracle(const Automaton& m, ClosureKind kind, const Decision& d, std::size_t len)
{
    const Decision truth = oracle::universal_up_to(m, kind, {len, std::nullopt}, oracle::default_pad(m));
    if (d.universal || (d.witness && d.witness->size() > len)) {
        CHECK(truth.universal);
    } else {
        CHECK(truth == d);
    }
}

/// The witness is missing and every shorter word is present, per the oracle.
void check_witness(const Automaton& m, ClosureKind kind, const Word& w)
{
    const std::size_t pad = oracle::default_pad(m);
    CHECK_FALSE(oracle::closure_member_bruteforce(m, kind, w, pad));
    if (!w.empty()) {
        const auto shorter = oracle::universal_up_to(m, kind, {w.size() - 1, std::nullopt}, pad);
        CHECK(shorter.universal);
    }
}

} // namespace

TEST_CASE("pref_universal_dfa examples")
{
    const Dfa a_star = make_dfa({"a"}, 1, 0, {0}, {{0, "a", 0}});
    CHECK(pref_universal_dfa(a_star) == Decision::yes());

    const Dfa line = pref_line(4);
    const Decision d = pref_universal_dfa(line);
    CHECK_FALSE(d.universal);
    CHECK(d.witness == Word{0, 0, 0});

    CHECK(pref_universal_dfa(ends_ab()).universal);
    CHECK(oracle::universal_up_to(ends_ab(), ClosureKind::pref, {6, std::nullopt}, 6).universal);
}

TEST_CASE("nfa_universal examples")
{
    const Nfa all = nfa_of_dfa(sigma_star());
    CHECK(nfa_universal(all) == Decision::yes());

    const Nfa plus = make_nfa({"a", "b"}, 2, {0}, {1}, {{0, "a", 1}, {0, "b", 1}, {1, "a", 1}, {1, "b", 1}});
    CHECK(nfa_universal(plus) == Decision::no(Word{}));

    // Contains aa: state 2 is reached after aa.
    const Nfa has_aa = make_nfa({"a", "b"}, 3, {0}, {2},
                                {{0, "a", 0}, {0, "b", 0}, {0, "a", 1}, {1, "a", 2}, {2, "a", 2}, {2, "b", 2}});
    CHECK(nfa_universal(has_aa) == Decision::no(Word{}));

    // Avoids aa.
    const Nfa no_aa = make_nfa({"a", "b"}, 2, {0}, {0, 1}, {{0, "b", 0}, {0, "a", 1}, {1, "b", 0}});
    CHECK(nfa_universal(no_aa) == Decision::no(Word{0, 0}));

    const Nfa zero(binary(), 0);
    CHECK(nfa_universal(zero) == Decision::no(Word{}));
}

TEST_CASE("nfa_universal against enumeration on random NFAs")
{
    std::mt19937 rng(61);
    int negative = 0;
    for (int i = 0; i < 600; ++i) {
        const std::size_t n = 1 + static_cast<std::size_t>(i % 4);
        Nfa m = random_nfa(rng, n, binary(), 0.45, 0.1, 0.6);
        const Decision d = nfa_universal(m);
        const auto lang = language_upto(m, 7);
        const auto words = oracle::all_words(m.alphabet(), {7, std::nullopt});
        const auto missing = std::find_if(words.begin(), words.end(), [&](const Word& w) { return !lang.contains(w); });
        if (d.universal) {
            CHECK(missing == words.end());
        } else {
            ++negative;
            REQUIRE(d.witness.has_value());
            REQUIRE(missing != words.end());
            CHECK(*d.witness == *missing);
        }
        SearchBudget pruned;
        pruned.antichains = true;
        CHECK(nfa_universal(m, pruned) == d);
    }
    CHECK(negative > 50);
}

TEST_CASE("nfa_universal budget")
{
    // Sigma* as a two-state cycle: the second subset already exceeds the cap.
    const Nfa m = make_nfa({"a"}, 2, {0}, {0, 1}, {{0, "a", 1}, {1, "a", 0}});
    SearchBudget tiny;
    tiny.max_subsets = 1;
    CHECK_THROWS_AS(nfa_universal(m, tiny), ResourceError);
    SearchBudget short_words;
    short_words.max_word_len = 0;
    CHECK_THROWS_AS(nfa_universal(nfa_of_dfa(sigma_star()), short_words), ResourceError);
    // A verdict found within the cap is still returned.
    const Nfa plus = make_nfa({"a"}, 2, {0}, {1}, {{0, "a", 1}, {1, "a", 1}});
    CHECK(nfa_universal(plus, short_words) == Decision::no(Word{}));
}

TEST_CASE("fact_universal_dfa examples")
{
    CHECK(fact_universal_dfa(sigma_star()).universal);
    CHECK_FALSE(fact_universal_dfa(no_11()).universal);
    CHECK_FALSE(fact_universal_dfa(ab_star()).universal);
    CHECK(shortest_missing(no_11(), ClosureKind::fact) == Word{1, 1});
    CHECK(shortest_missing(ab_star(), ClosureKind::fact) == Word{0, 0});
    CHECK(oracle::universal_up_to(ab_star(), ClosureKind::fact, {4, std::nullopt}, 6) == Decision::no(Word{0, 0}));
}

TEST_CASE("fact_universal_dfa step order")
{
    SUBCASE("reachable universal state stops before synchronization")
    {
        // 0 -a-> 1 with 1 looping on everything and final.
        const Dfa m = make_dfa({"a", "b"}, 3, 0, {1}, {{0, "a", 1}, {0, "b", 2}, {1, "a", 1}, {1, "b", 1}, {2, "a", 2}, {2, "b", 2}});
        const FactorAnalysis fa = analyze_factor_universality(m);
        CHECK(fa.has_universal_state);
        CHECK_FALSE(fa.sync_checked);
        CHECK(fa.universal);
    }
    SUBCASE("no dead state means every state is universal")
    {
        const FactorAnalysis fa = analyze_factor_universality(ends_ab());
        CHECK_FALSE(fa.dead.has_value());
        CHECK(fa.has_universal_state);
        CHECK_FALSE(fa.sync_checked);
    }
    SUBCASE("no universal state runs the synchronization check")
    {
        const FactorAnalysis fa = analyze_factor_universality(no_11());
        CHECK_FALSE(fa.has_universal_state);
        CHECK(fa.sync_checked);
        REQUIRE(fa.dead.has_value());
        CHECK(*fa.dead == fa.reduced.state_count() - 1);
    }
}

TEST_CASE("merged machine keeps the language, reset words end in the dead state")
{
    std::mt19937 rng(67);
    int step4 = 0;
    for (int i = 0; i < 400; ++i) {
        const Dfa d = random_dfa(rng, 5, binary(), 0.25);
        const FactorAnalysis fa = analyze_factor_universality(d);
        CHECK(same_language_upto(d, fa.reduced, 6));
        CHECK(fa.universal == fact_universal_dfa(d).universal);
        if (!fa.sync_checked) {
            continue;
        }
        ++step4;
        REQUIRE(fa.dead.has_value());
        const auto reset = shortest_reset_word(fa.reduced);
        CHECK(reset.has_value() != fa.universal);
        if (reset) {
            for (State p = 0; p < fa.reduced.state_count(); ++p) {
                CHECK(fa.reduced.run(p, *reset) == *fa.dead);
            }
            // A reset word is missing from the factors; a shorter one cannot be.
            const auto missing = shortest_missing(d, ClosureKind::fact);
            REQUIRE(missing.has_value());
            CHECK(missing->size() == reset->size());
        }
    }
    CHECK(step4 > 20);
}

TEST_CASE("subw_universal examples")
{
    const Nfa abc_star = make_nfa({"a", "b", "c"}, 3, {0}, {0}, {{0, "a", 1}, {1, "b", 2}, {2, "c", 0}});
    CHECK(subw_universal(abc_star).universal);
    CHECK(oracle::universal_up_to(abc_star, ClosureKind::subw, {5, std::nullopt}, 6).universal);

    const Nfa chain = subword_chain(2);
    CHECK_FALSE(subw_universal(chain).universal);
    CHECK(shortest_missing(chain, ClosureKind::subw) == chain.alphabet().parse_word("a0 a1 a0"));

    const Nfa empty = make_nfa({"a"}, 2, {0}, {}, {{0, "a", 1}});
    CHECK(subw_universal(empty) == Decision::no(Word{}));
}

TEST_CASE("strongly connected components")
{
    // 0 <-> 1, 1 -> 2, 2 self loop.
    const Nfa m = make_nfa({"a"}, 3, {0}, {2}, {{0, "a", 1}, {1, "a", 0}, {1, "a", 2}, {2, "a", 2}});
    std::size_t count = 0;
    const auto comp = strongly_connected_components(m, &count);
    CHECK(count == 2);
    CHECK(comp[0] == comp[1]);
    CHECK(comp[0] != comp[2]);
    // Reverse topological order: the sink component comes first.
    CHECK(comp[2] < comp[0]);
}

TEST_CASE("subword_omitted_word is missing")
{
    std::mt19937 rng(71);
    for (int i = 0; i < 300; ++i) {
        const Nfa m = random_nfa(rng, 4, binary(), 0.2, 0.1);
        if (subw_universal(m).universal) {
            continue;
        }
        const Word w = subword_omitted_word(m);
        CHECK_FALSE(accepts(closure_nfa(m, ClosureKind::subw), w));
    }
}

TEST_CASE("closure_universal examples")
{
    CHECK(closure_universal(sigma_star(), ClosureKind::fact).universal);
    const Decision d = closure_universal(pref_line(4), ClosureKind::pref);
    CHECK(d == Decision::no(Word{0, 0, 0}));

    const Dfa a_star = make_dfa({"a", "b"}, 2, 0, {0}, {{0, "a", 0}, {0, "b", 1}, {1, "a", 1}, {1, "b", 1}});
    const Dfa b_star = make_dfa({"a", "b"}, 2, 0, {0}, {{0, "b", 0}, {0, "a", 1}, {1, "a", 1}, {1, "b", 1}});
    const Gadget<Dfa> g = suffix_gadget({{a_star, b_star}});
    CHECK_FALSE(closure_universal(g.machine, ClosureKind::suff).universal);
}

TEST_CASE("deciders agree with the oracle on every 2-state DFA and on random 3- and 4-state DFAs")
{
    auto check_all = [](const Dfa& d) {
        for (auto kind : {ClosureKind::pref, ClosureKind::suff, ClosureKind::fact, ClosureKind::subw}) {
            CAPTURE(to_string(kind));
            const Decision spec = closure_universal(d, kind);
            const Decision gen = closure_universal(d, kind, {}, Route::generic);
            CHECK(spec.universal == gen.universal);
            check_against_oracle(d, kind, gen, 6);
            if (!gen.universal) {
                REQUIRE(gen.witness.has_value());
                check_witness(d, kind, *gen.witness);
            }
            if (spec.witness) {
                CHECK(spec.witness == gen.witness);
            }
        }
    };
    for_each_dfa(1, binary(), check_all);
    for_each_dfa(2, binary(), check_all);
    std::mt19937 rng(73);
    for (int i = 0; i < 300; ++i) {
        check_all(random_dfa(rng, 3 + static_cast<std::size_t>(i % 2), binary(), 0.3));
    }
}

TEST_CASE("deciders agree with the oracle on random NFAs")
{
    std::mt19937 rng(79);
    for (int i = 0; i < 500; ++i) {
        const std::size_t n = 1 + static_cast<std::size_t>(i % 4);
        const Nfa m = random_nfa(rng, n, binary(), 0.3, 0.1, 0.4);
        for (auto kind : {ClosureKind::pref, ClosureKind::suff, ClosureKind::fact, ClosureKind::subw}) {
            CAPTURE(to_string(kind));
            const Decision spec = closure_universal(m, kind);
            const Decision gen = closure_universal(m, kind, {}, Route::generic);
            CHECK(spec.universal == gen.universal);
            check_against_oracle(m, kind, gen, 6);
        }
    }
}
