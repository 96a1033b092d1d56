#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "ooeval/langkit.hpp"
#include "ooeval/oracles.hpp"
#include "ooeval/semigroup.hpp"

using namespace ooo;

namespace {

finite_semigroup z2() { return finite_semigroup({"e", "g"}, {0, 1, 1, 0}); }

finite_semigroup z4() {
    std::vector<int> t(16);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) t[a * 4 + b] = (a + b) % 4;
    return finite_semigroup({"0", "1", "2", "3"}, t);
}

finite_semigroup left_zero() { return finite_semigroup({"x", "y"}, {0, 0, 1, 1}); }

finite_semigroup m_ab() {
    return parse_semigroup_table(
        "elements: 1 a b 0 ab\n"
        "identity: 1\n"
        "1 a b 0 ab\n"
        "a 0 ab 0 0\n"
        "b 0 0 0 0\n"
        "0 0 0 0 0\n"
        "ab 0 0 0 0\n",
        "m_ab");
}

errc code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return errc::parse_error;
}

}  // namespace

TEST_CASE("one-way lower bound") {
    finite_semigroup z = z2();
    auto parity = [&z](std::span<const int> w) { return z.evaluate_word(w); };
    lower_bound_report r = one_way_lower_bound(parity, 2, 4, {1, 2});
    CHECK(r.domain_size == 2);
    CHECK(r.assignments == 4);
    CHECK(r.completions == 4);
    CHECK(r.classes == 2);  // only the parity of the prefix survives
    CHECK(r.bits == 1);

    // Z4 keeps the full residue: four classes, two bits.
    finite_semigroup q = z4();
    auto mod4 = [&q](std::span<const int> w) { return q.evaluate_word(w); };
    lower_bound_report r4 = one_way_lower_bound(mod4, 4, 4, {1, 2});
    CHECK(r4.assignments == 16);
    CHECK(r4.completions == 16);
    CHECK(r4.classes == 4);
    CHECK(r4.bits == 2);

    // Language verdicts work the same way: for (ab)* with positions {1,2}
    // fixed, only "ab" keeps any completion alive.
    dfa d = compile_regex("(ab)*", "ab");
    auto member = [&d](std::span<const int> w) { return d.run(w) ? 1 : 0; };
    lower_bound_report rl = one_way_lower_bound(member, 2, 4, {1, 2});
    CHECK(rl.classes == 2);
    CHECK(rl.bits == 1);

    // Empty domain: a single assignment, nothing to distinguish.
    lower_bound_report re = one_way_lower_bound(parity, 2, 3, {});
    CHECK(re.assignments == 1);
    CHECK(re.classes == 1);
    CHECK(re.bits == 0);

    CHECK(code_of([&] { one_way_lower_bound(parity, 2, 4, {0}); }) == errc::contract_error);
    CHECK(code_of([&] { one_way_lower_bound(parity, 2, 4, {5}); }) == errc::contract_error);
    CHECK(code_of([&] { one_way_lower_bound(parity, 2, 4, {1, 1}); }) == errc::contract_error);

    std::vector<long long> half;
    for (long long p = 1; p <= 25; ++p) half.push_back(p);
    CHECK(code_of([&] { one_way_lower_bound(parity, 2, 50, half); }) == errc::cap_exceeded);
}

TEST_CASE("first-last preservation") {
    // M(ab) with k = |M| = 5: replacing any word of length <= 6 by its
    // first-last subword never changes the product.
    fl_preservation_report ok = check_fl_preservation(m_ab(), 5, 6);
    CHECK(ok.holds);
    CHECK(ok.words_checked == 19531);  // 5^0 + ... + 5^6
    CHECK(ok.counterexample.empty());

    // Z2 with k = 2 fails at g^5: the subword keeps g^4 = e but the word is g.
    fl_preservation_report bad = check_fl_preservation(z2(), 2, 5);
    CHECK_FALSE(bad.holds);
    CHECK(bad.counterexample == word{1, 1, 1, 1, 1});
    CHECK(bad.words_checked == 63);  // everything up to and including g^5

    // A window large enough to retain every position always holds.
    fl_preservation_report wide = check_fl_preservation(z2(), 6, 5);
    CHECK(wide.holds);
    CHECK(wide.words_checked == 63);

    CHECK(code_of([] { check_fl_preservation(z4(), 2, 15); }) == errc::cap_exceeded);
}

TEST_CASE("sum of squares lemma") {
    sum_of_squares_report r = check_sum_of_squares_lemma(10);
    CHECK(r.holds);
    CHECK(r.subsets_checked == 1023);  // nonempty subsets of {1..10}
    CHECK(r.intervals_checked == 55);
    CHECK(r.failure.empty());

    CHECK(code_of([] { check_sum_of_squares_lemma(0); }) == errc::cap_exceeded);
    CHECK(code_of([] { check_sum_of_squares_lemma(23); }) == errc::cap_exceeded);
}

TEST_CASE("pumping claim") {
    pumping_report a = check_pumping_claim(z2());
    CHECK(a.holds);
    CHECK(a.words_checked == 8);  // 2^3

    pumping_report b = check_pumping_claim(m_ab());
    CHECK(b.holds);
    CHECK(b.words_checked == 15625);  // 5^6

    pumping_report c = check_pumping_claim(left_zero());
    CHECK(c.holds);
    CHECK(c.words_checked == 8);

    // 16 elements would need 16^17 words.
    CHECK(code_of([] { check_pumping_claim(direct_product(z4(), z4())); }) == errc::cap_exceeded);
}
