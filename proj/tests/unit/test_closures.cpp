#include <algorithm>
#include <map>

#include <doctest.h>

#include "affix/closures.hpp"
#include "affix/oracle.hpp"
#include "fixtures.hpp"

using namespace affix;
using namespace affix::testing;

namespace {

constexpr ClosureKind kKinds[] = {ClosureKind::pref, ClosureKind::suff, ClosureKind::fact, ClosureKind::subw};

Nfa nfa_ab()
{
    return make_nfa({"a", "b"}, 3, {0}, {2}, {{0, "a", 1}, {1, "b", 2}});
}

std::set<Word> words_of(const Alphabet& sigma, std::initializer_list<std::string_view> texts)
{
    std::set<Word> out;
    for (auto t : texts) {
        out.insert(sigma.parse_word(t));
    }
    return out;
}

bool subset_of(const std::set<Word>& x, const std::set<Word>& y)
{
    return std::includes(y.begin(), y.end(), x.begin(), x.end());
}

} // namespace

TEST_CASE("closure kind names")
{
    for (auto k : kKinds) {
        CHECK(parse_closure_kind(to_string(k)) == k);
    }
    CHECK_THROWS_AS(parse_closure_kind("infix"), InputError);
}

TEST_CASE("closures of {ab}")
{
    const Nfa m = nfa_ab();
    const Alphabet& s = m.alphabet();
    CHECK(language_upto(closure_nfa(m, ClosureKind::pref), 4) == words_of(s, {"", "a", "a b"}));
    CHECK(language_upto(closure_nfa(m, ClosureKind::suff), 4) == words_of(s, {"", "b", "a b"}));
    CHECK(language_upto(closure_nfa(m, ClosureKind::fact), 4) == words_of(s, {"", "a", "b", "a b"}));
    CHECK(language_upto(closure_nfa(m, ClosureKind::subw), 4) == words_of(s, {"", "a", "b", "a b"}));
}

TEST_CASE("subword closure of {abc}")
{
    const Nfa m = make_nfa({"a", "b", "c"}, 4, {0}, {3}, {{0, "a", 1}, {1, "b", 2}, {2, "c", 3}});
    const auto sub = language_upto(closure_nfa(m, ClosureKind::subw), 5);
    CHECK(sub == words_of(m.alphabet(), {"", "a", "b", "c", "a b", "a c", "b c", "a b c"}));
}

TEST_CASE("closures of the empty language are empty")
{
    const Nfa empty = make_nfa({"a", "b"}, 2, {0}, {}, {{0, "a", 1}, {1, "b", 0}});
    for (auto k : kKinds) {
        CAPTURE(to_string(k));
        CHECK(language_upto(closure_nfa(empty, k), 5).empty());
    }
    CHECK(closure_nfa(empty, ClosureKind::fact).state_count() == 0);
}

TEST_CASE("pref, suff and fact agree with slicing accepted words")
{
    std::mt19937 rng(41);
    for (int i = 0; i < 150; ++i) {
        const std::size_t n = 2 + static_cast<std::size_t>(i % 3);
        const Nfa m = random_nfa(rng, n, binary(), 0.3, 0.1);
        for (auto k : {ClosureKind::pref, ClosureKind::suff, ClosureKind::fact}) {
            CAPTURE(to_string(k));
            CHECK(language_upto(closure_nfa(m, k), 4) == sliced_closure(m, k, 4, 2 * n));
        }
    }
}

TEST_CASE("subword closure agrees with the brute-force oracle")
{
    std::mt19937 rng(43);
    for (int i = 0; i < 100; ++i) {
        const Nfa m = random_nfa(rng, 3, binary(), 0.25, 0.1);
        const Nfa sub = closure_nfa(m, ClosureKind::subw);
        for (const auto& w : oracle::all_words(m.alphabet(), {4, std::nullopt})) {
            CHECK(accepts(sub, w) == oracle::closure_member_bruteforce(m, ClosureKind::subw, w, oracle::default_pad(m)));
        }
    }
}

TEST_CASE("closure laws on random machines")
{
    std::mt19937 rng(47);
    for (int i = 0; i < 120; ++i) {
        const Nfa m = random_nfa(rng, 4, binary(), 0.25, 0.1);
        const auto base = language_upto(m, 5);
        std::map<ClosureKind, std::set<Word>> lang;
        for (auto k : kKinds) {
            const Nfa c = closure_nfa(m, k);
            lang[k] = language_upto(c, 5);
            CHECK(subset_of(base, lang[k]));
            CHECK(same_language_upto(closure_nfa(c, k), c, 5));
        }
        CHECK(subset_of(lang[ClosureKind::pref], lang[ClosureKind::fact]));
        CHECK(subset_of(lang[ClosureKind::suff], lang[ClosureKind::fact]));
        CHECK(subset_of(lang[ClosureKind::fact], lang[ClosureKind::subw]));
    }
}

TEST_CASE("closure state counts")
{
    std::mt19937 rng(53);
    for (int i = 0; i < 200; ++i) {
        const Nfa m = random_nfa(rng, 5, binary(), 0.2, 0.15);
        const Nfa suff = closure_nfa(m, ClosureKind::suff);
        CHECK(suff.state_count() <= m.state_count());
        CHECK(single_start(suff).state_count() <= m.state_count() + 1);
        CHECK(closure_nfa(m, ClosureKind::subw).state_count() == m.state_count());
        CHECK(closure_nfa(m, ClosureKind::pref).state_count() == m.state_count());
        CHECK(closure_nfa(m, ClosureKind::fact).state_count() <= m.state_count());
    }
}

TEST_CASE("pref_complement_dfa")
{
    SUBCASE("sigma star has an empty complement")
    {
        const Dfa all = make_dfa({"a", "b"}, 1, 0, {0}, {{0, "a", 0}, {0, "b", 0}});
        const Dfa c = pref_complement_dfa(all);
        CHECK(c.state_count() == 1);
        CHECK(language_upto(c, 5).empty());
    }
    SUBCASE("line DFA for aa")
    {
        const Dfa line = make_dfa({"a"}, 4, 0, {2}, {{0, "a", 1}, {1, "a", 2}, {2, "a", 3}, {3, "a", 3}});
        const Dfa c = pref_complement_dfa(line);
        CHECK(c.state_count() == 4);
        const auto words = oracle::enum_language(c, {6, std::nullopt});
        REQUIRE(words.size() == 4);
        CHECK(words.front() == Word{0, 0, 0});
        CHECK(words.back() == Word(6, 0));
    }
    SUBCASE("random DFAs: exact complement of the prefix closure")
    {
        std::mt19937 rng(59);
        for (int i = 0; i < 200; ++i) {
            const Dfa d = random_dfa(rng, 4, binary(), 0.25);
            const Dfa c = pref_complement_dfa(d);
            const Nfa pref = closure_nfa(nfa_of_dfa(d), ClosureKind::pref);
            for (const auto& w : oracle::all_words(d.alphabet(), {6, std::nullopt})) {
                CHECK(accepts(c, w) != oracle::closure_member_bruteforce(d, ClosureKind::pref, w, 8));
                CHECK(accepts(c, w) != accepts(pref, w));
            }
        }
    }
}
