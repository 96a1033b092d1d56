#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "ooeval/langkit.hpp"
#include "ooeval/semigroup.hpp"

using namespace ooo;

namespace {

word to_word(const dfa& d, const std::string& s) {
    word w;
    for (char c : s) {
        int i = d.letter_index(c);
        REQUIRE(i >= 0);
        w.push_back(i);
    }
    return w;
}

bool same_tables(const finite_semigroup& a, const finite_semigroup& b) {
    if (a.size() != b.size() || a.names() != b.names()) return false;
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < a.size(); ++j)
            if (a.mul(i, j) != b.mul(i, j)) return false;
    return true;
}

}  // namespace

TEST_CASE("regex parsing") {
    CHECK_NOTHROW(parse_regex("(ab)*"));
    CHECK_NOTHROW(parse_regex(""));
    CHECK_NOTHROW(parse_regex("a|"));
    CHECK_NOTHROW(parse_regex("a**"));
    CHECK_THROWS_AS(parse_regex("(a"), error);
    CHECK_THROWS_AS(parse_regex("a)"), error);
    CHECK_THROWS_AS(parse_regex("*a"), error);
    CHECK_THROWS_AS(parse_regex("a(*)"), error);

    CHECK(regex_letters("(ab)*ba") == "ab");
    CHECK(regex_letters("c|ba") == "abc");
    CHECK(regex_letters("(.)*").empty());
    CHECK(regex_uses_dot("a.b"));
    CHECK_FALSE(regex_uses_dot("ab"));
}

TEST_CASE("compile and run") {
    dfa d = compile_regex("(ab)*", "ab");
    CHECK(d.states() == 3);  // start/accept, after-a, dead
    CHECK(d.alphabet_size() == 2);
    CHECK(d.letter_index('a') == 0);
    CHECK(d.letter_index('b') == 1);
    CHECK(d.letter_index('c') == -1);

    CHECK(d.run(to_word(d, "")));
    CHECK(d.run(to_word(d, "ab")));
    CHECK(d.run(to_word(d, "abab")));
    CHECK_FALSE(d.run(to_word(d, "a")));
    CHECK_FALSE(d.run(to_word(d, "ba")));
    CHECK_FALSE(d.run(to_word(d, "aba")));

    // Letters outside the alphabet are rejected at compile time.
    CHECK_THROWS_AS(compile_regex("abc", "ab"), error);
    CHECK_THROWS_AS(compile_regex("a", ""), error);
    CHECK_THROWS_AS(compile_regex("a", "aa"), error);

    // The alphabet argument fixes the letter order.
    dfa r = compile_regex("(ab)*", "ba");
    CHECK(r.letters == std::vector<char>{'b', 'a'});
    CHECK(r.run(to_word(r, "ab")));

    // Dot expands to the whole alphabet.
    dfa dot = compile_regex(".", "ab");
    CHECK(dot.run(to_word(dot, "a")));
    CHECK(dot.run(to_word(dot, "b")));
    CHECK_FALSE(dot.run(to_word(dot, "")));
    CHECK_FALSE(dot.run(to_word(dot, "ab")));
}

TEST_CASE("compilation is canonical") {
    dfa a = compile_regex("(ab)*", "ab");
    dfa b = compile_regex("((ab)*)*", "ab");
    CHECK(a.delta == b.delta);
    CHECK(a.accepting == b.accepting);
    CHECK(a.initial == b.initial);

    // Already-minimal DFAs pass through minimize unchanged.
    dfa m = minimize(a);
    CHECK(m.delta == a.delta);
    CHECK(m.accepting == a.accepting);
}

TEST_CASE("minimize merges redundant states") {
    // Hand-built 3-state DFA for a+ with two mergeable accepting states.
    dfa d;
    d.letters = {'a'};
    d.initial = 0;
    d.delta = {1, 2, 1};
    d.accepting = {false, true, true};
    dfa m = minimize(d);
    CHECK(m.states() == 2);
    CHECK(equivalent(m, compile_regex("a+", "a")));
    CHECK(equivalent(d, compile_regex("a+", "a")));
}

TEST_CASE("equivalence") {
    CHECK(equivalent(compile_regex("a+", "ab"), compile_regex("aa*", "ab")));
    CHECK(equivalent(compile_regex("a?b", "ab"), compile_regex("ab|b", "ab")));
    CHECK_FALSE(equivalent(compile_regex("(ab)*", "ab"), compile_regex("a*", "ab")));
    // Different letter vectors never compare equivalent.
    CHECK_FALSE(equivalent(compile_regex("a*", "ab"), compile_regex("a*", "a")));
}

TEST_CASE("syntactic monoid of ab") {
    syntactic_structure st = syntactic_monoid(compile_regex("ab", "ab"));
    CHECK(st.monoid);
    // Discovery order: empty word, a, b, then aa hits the zero before ab.
    CHECK(st.algebra.names() == std::vector<std::string>{"1", "a", "b", "0", "ab"});
    REQUIRE(st.algebra.has_identity());
    CHECK(*st.algebra.identity() == 0);
    CHECK(st.algebra.idempotent_power() == 2);

    // Cross-check against the independently written table.
    finite_semigroup hand = parse_semigroup_table(
        "elements: 1 a b 0 ab\n"
        "identity: 1\n"
        "1 a b 0 ab\n"
        "a 0 ab 0 0\n"
        "b 0 0 0 0\n"
        "0 0 0 0 0\n"
        "ab 0 0 0 0\n",
        "hand");
    CHECK(same_tables(st.algebra, hand));

    // Only the ab class accepts; the empty word does not.
    for (int e = 0; e < st.algebra.size(); ++e)
        CHECK(st.accepting_elem[e] == (st.algebra.name(e) == "ab"));
    CHECK(st.morphism(0) == st.algebra.index_of("a"));
    CHECK(st.morphism(1) == st.algebra.index_of("b"));
}

TEST_CASE("syntactic monoid of a*bba*") {
    syntactic_structure st = syntactic_monoid(compile_regex("a*bba*", "ab"));
    CHECK(st.algebra.names() == std::vector<std::string>{"1", "a", "b", "ab", "ba", "bb", "0"});
    CHECK(st.algebra.idempotent_power() == 3);

    finite_semigroup hand = parse_semigroup_table(
        "elements: 1 a b ab ba bb 0\n"
        "identity: 1\n"
        "1 a b ab ba bb 0\n"
        "a a ab ab 0 bb 0\n"
        "b ba bb 0 bb 0 0\n"
        "ab 0 bb 0 bb 0 0\n"
        "ba ba 0 0 0 0 0\n"
        "bb bb 0 0 0 0 0\n"
        "0 0 0 0 0 0 0\n",
        "hand");
    CHECK(same_tables(st.algebra, hand));
    for (int e = 0; e < st.algebra.size(); ++e)
        CHECK(st.accepting_elem[e] == (st.algebra.name(e) == "bb"));
}

TEST_CASE("syntactic semigroups") {
    syntactic_structure abba = syntactic_semigroup(compile_regex("a*bba*", "ab"));
    CHECK_FALSE(abba.monoid);
    CHECK(abba.algebra.names() == std::vector<std::string>{"a", "b", "ab", "ba", "bb", "0"});
    CHECK_FALSE(abba.algebra.has_identity());
    CHECK(abba.algebra.idempotent_power() == 3);

    syntactic_structure abc = syntactic_semigroup(compile_regex("a*bc*", "abc"));
    CHECK(abc.algebra.names() == std::vector<std::string>{"a", "b", "c", "0"});
    finite_semigroup hand = parse_semigroup_table(
        "elements: a b c 0\n"
        "a b 0 0\n"
        "0 0 b 0\n"
        "0 0 c 0\n"
        "0 0 0 0\n",
        "hand");
    CHECK(same_tables(abc.algebra, hand));

    syntactic_structure baca = syntactic_semigroup(compile_regex("a*ba+ca*", "abc"));
    CHECK(baca.algebra.names() ==
          std::vector<std::string>{"a", "b", "c", "ac", "ba", "0", "bac"});

    syntactic_structure abstar = syntactic_semigroup(compile_regex("(ab)*", "ab"));
    CHECK(abstar.algebra.names() == std::vector<std::string>{"a", "b", "0", "ab", "ba"});

    syntactic_structure fl = syntactic_semigroup(compile_regex("a(a|b)*b", "ab"));
    CHECK(fl.algebra.names() == std::vector<std::string>{"a", "b", "ab", "ba"});
    CHECK(fl.algebra.idempotent_power() == 1);
}

TEST_CASE("classification through the syntactic algebra") {
    // The membership regimes of the worked subjects.
    CHECK(classify_monoid(syntactic_monoid(compile_regex("(aa)*", "a")).algebra).r ==
          regime::constant);
    CHECK(classify_monoid(syntactic_monoid(compile_regex("ab", "ab")).algebra).r ==
          regime::logarithmic);
    CHECK(classify_monoid(syntactic_monoid(compile_regex("a*bba*", "ab")).algebra).r ==
          regime::linear);

    CHECK(classify_semigroup(syntactic_semigroup(compile_regex("a(a|b)*b", "ab")).algebra).r ==
          regime::constant);
    for (const char* pat : {"a*bc*", "a*bba*", "(ab)*"}) {
        auto st = syntactic_semigroup(compile_regex(pat, regex_letters(pat)));
        CHECK(classify_semigroup(st.algebra).r == regime::at_least_logarithmic);
    }

    // S(a*ba+ca*) fails the second diagnostic first: s^w x s^w y s^w vs
    // s^w x y s^w at s=a, x=b, y=c separates bac from 0 (bc = 0 without an
    // a in between).
    auto baca = syntactic_semigroup(compile_regex("a*ba+ca*", "abc"));
    regime_report rep = classify_semigroup(baca.algebra);
    CHECK(rep.r == regime::at_least_logarithmic);
    REQUIRE(rep.witness.has_value());
    CHECK(rep.witness->id == equation_id::licom2);
    CHECK(rep.witness->assignment ==
          std::vector<int>{baca.algebra.index_of("a"), baca.algebra.index_of("b"),
                           baca.algebra.index_of("c")});
    CHECK(baca.algebra.name(rep.witness->lhs) == "bac");
    CHECK(baca.algebra.name(rep.witness->rhs) == "0");

    // Local commutation fails on the same triple, with the operands swapped
    // on the right-hand side this time.
    auto lc = check_equation(baca.algebra, equation_id::local_com);
    REQUIRE(lc.has_value());
    CHECK(lc->assignment ==
          std::vector<int>{baca.algebra.index_of("a"), baca.algebra.index_of("b"),
                           baca.algebra.index_of("c")});
    CHECK(baca.algebra.name(lc->lhs) == "bac");
    CHECK(baca.algebra.name(lc->rhs) == "0");

    // S((ab)*) already fails the first diagnostic.
    auto abstar = syntactic_semigroup(compile_regex("(ab)*", "ab"));
    regime_report rep2 = classify_semigroup(abstar.algebra);
    REQUIRE(rep2.witness.has_value());
    CHECK(rep2.witness->id == equation_id::licom1);
    CHECK(rep2.witness->assignment ==
          std::vector<int>{abstar.algebra.index_of("ab"), abstar.algebra.index_of("a"),
                           abstar.algebra.index_of("ba")});
    CHECK(abstar.algebra.name(rep2.witness->lhs) == "0");
    CHECK(abstar.algebra.name(rep2.witness->rhs) == "a");
}

TEST_CASE("morphism matches the automaton") {
    const char* patterns[] = {"(ab)*", "a*bba*", "a(a|b)*b", "a*b*a*", "(a|b)*aa(a|b)*"};
    rng_t rng(20260823);
    for (const char* pat : patterns) {
        dfa d = compile_regex(pat, "ab");
        syntactic_structure mon = syntactic_monoid(d);
        syntactic_structure sem = syntactic_semigroup(d);
        for (int t = 0; t < 200; ++t) {
            long long len = static_cast<long long>(rng_below(rng, 13));
            word w;
            for (long long i = 0; i < len; ++i) w.push_back(static_cast<int>(rng_below(rng, 2)));
            bool truth = d.run(w);
            CHECK(mon.member_by_algebra(w) == truth);
            if (!w.empty()) CHECK(sem.member_by_algebra(w) == truth);
        }
        CHECK(mon.member_by_algebra(word{}) == d.run(word{}));
        CHECK_THROWS_AS(sem.member_by_algebra(word{}), error);
    }
}

TEST_CASE("neutral letters collapse in the monoid but not the semigroup") {
    dfa d = compile_regex("e*ae*", "ae");
    // Monoid view: e acts like the empty word, so it maps to the identity.
    syntactic_structure mon = syntactic_monoid(d);
    CHECK(mon.algebra.names() == std::vector<std::string>{"1", "a", "0"});
    CHECK(mon.morphism(d.letter_index('e')) == *mon.algebra.identity());

    // Semigroup view: the e class survives as a neutral element that keeps
    // its word name.
    syntactic_structure sem = syntactic_semigroup(d);
    CHECK(sem.algebra.names() == std::vector<std::string>{"a", "e", "0"});
    REQUIRE(sem.algebra.has_identity());
    CHECK(sem.algebra.name(*sem.algebra.identity()) == "e");

    // Both views agree with the automaton on nonempty words.
    for (const char* s : {"a", "e", "ea", "ae", "aa", "eae", "aea"}) {
        word w = to_word(d, s);
        CHECK(mon.member_by_algebra(w) == d.run(w));
        CHECK(sem.member_by_algebra(w) == d.run(w));
    }
}

TEST_CASE("syntactic element cap") {
    CHECK_THROWS_AS(syntactic_monoid(compile_regex("ab", "ab"), 3), error);
    try {
        syntactic_monoid(compile_regex("ab", "ab"), 3);
        FAIL("expected error");
    } catch (const error& e) {
        CHECK(e.code() == errc::cap_exceeded);
    }
}

TEST_CASE("commutative language detection") {
    CHECK(is_commutative_language(compile_regex("(aa)*", "a")));
    CHECK(is_commutative_language(compile_regex("(a|b)*a(a|b)*", "ab")));
    CHECK_FALSE(is_commutative_language(compile_regex("(a|b)*aa(a|b)*", "ab")));
    CHECK_FALSE(is_commutative_language(compile_regex("(ab)*", "ab")));
}
