#include "ooeval/oracles.hpp"

#include <algorithm>
#include <set>

namespace ooo {

namespace {

// pow with an overflow-safe cap check against limit; returns -1 on overflow.
long long checked_pow(long long base, long long exp, long long limit) {
    long long v = 1;
    for (long long i = 0; i < exp; ++i) {
        if (v > limit / base) return -1;
        v *= base;
    }
    return v;
}

// Odometer increment over symbol indices; returns false after the last word.
bool next_word(word& w, int symbol_count) {
    for (std::size_t i = w.size(); i-- > 0;) {
        if (++w[i] < symbol_count) return true;
        w[i] = 0;
    }
    return false;
}

}  // namespace

lower_bound_report one_way_lower_bound(const std::function<int(std::span<const int>)>& verdict,
                                       int symbol_count, long long n,
                                       const std::vector<long long>& domain, long long cap) {
    if (symbol_count < 1) fail(errc::contract_error, "need at least one symbol");
    std::vector<bool> in_domain(static_cast<std::size_t>(n) + 1, false);
    for (long long p : domain) {
        if (p < 1 || p > n) fail(errc::contract_error, "domain position out of range");
        if (in_domain[static_cast<std::size_t>(p)]) fail(errc::contract_error, "duplicate domain position");
        in_domain[static_cast<std::size_t>(p)] = true;
    }
    std::vector<long long> rest;
    for (long long p = 1; p <= n; ++p)
        if (!in_domain[static_cast<std::size_t>(p)]) rest.push_back(p);

    lower_bound_report r;
    r.domain_size = static_cast<long long>(domain.size());
    r.assignments = checked_pow(symbol_count, r.domain_size, cap);
    r.completions = checked_pow(symbol_count, static_cast<long long>(rest.size()), cap);
    if (r.assignments < 0 || r.completions < 0 || r.assignments > cap / std::max(1LL, r.completions))
        fail(errc::cap_exceeded, "one-way bound: assignments * completions exceeds the cap");

    word full(static_cast<std::size_t>(n), 0);
    word alpha(static_cast<std::size_t>(r.domain_size), 0);
    std::set<std::vector<int>> signatures;
    do {
        for (std::size_t i = 0; i < alpha.size(); ++i)
            full[static_cast<std::size_t>(domain[i] - 1)] = alpha[i];
        std::vector<int> sig;
        sig.reserve(static_cast<std::size_t>(r.completions));
        word beta(rest.size(), 0);
        do {
            for (std::size_t i = 0; i < beta.size(); ++i)
                full[static_cast<std::size_t>(rest[i] - 1)] = beta[i];
            sig.push_back(verdict(full));
        } while (next_word(beta, symbol_count));
        signatures.insert(std::move(sig));
    } while (next_word(alpha, symbol_count));

    r.classes = static_cast<long long>(signatures.size());
    r.bits = index_bits(r.classes);
    return r;
}

fl_preservation_report check_fl_preservation(const finite_semigroup& m, int k, int max_len) {
    long long budget = 0;
    for (int len = 0; len <= max_len; ++len) {
        long long c = checked_pow(m.size(), len, 200'000'000 - budget);
        if (c < 0) fail(errc::cap_exceeded, "first-last preservation check: too many words");
        budget += c;
    }
    fl_preservation_report r;
    for (int len = 0; len <= max_len; ++len) {
        word w(static_cast<std::size_t>(len), 0);
        do {
            ++r.words_checked;
            word sub = fl_subword(w, m.size(), k);
            if (m.evaluate_word(w) != m.evaluate_word(sub)) {
                r.holds = false;
                r.counterexample = w;
                return r;
            }
        } while (next_word(w, m.size()));
    }
    return r;
}

sum_of_squares_report check_sum_of_squares_lemma(int m) {
    if (m < 1 || m > 22) fail(errc::cap_exceeded, "sum-of-squares check supports 1 <= m <= 22");
    sum_of_squares_report r;
    // Bucket all subsets of {1..m} by (size, sum); then every interval must
    // have the strictly smallest sum of squares in its bucket.
    struct entry {
        long long sq;
        unsigned mask;
    };
    std::vector<std::vector<entry>> buckets(static_cast<std::size_t>((m + 1) * (m * (m + 1) / 2 + 1)));
    auto bucket_of = [m](long long size, long long sum) {
        return static_cast<std::size_t>(size * (m * (m + 1) / 2 + 1) + sum);
    };
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
        long long size = 0, sum = 0, sq = 0;
        for (int i = 1; i <= m; ++i)
            if (mask & (1u << (i - 1))) {
                ++size;
                sum += i;
                sq += static_cast<long long>(i) * i;
            }
        buckets[bucket_of(size, sum)].push_back({sq, mask});
        ++r.subsets_checked;
    }
    for (int l = 1; l <= m && r.holds; ++l)
        for (int rr = l; rr <= m && r.holds; ++rr) {
            ++r.intervals_checked;
            unsigned imask = ((1u << (rr - l + 1)) - 1u) << (l - 1);
            long long size = rr - l + 1;
            long long sum = static_cast<long long>(size) * (l + rr) / 2;
            long long isq = 0;
            for (int i = l; i <= rr; ++i) isq += static_cast<long long>(i) * i;
            for (const entry& e : buckets[bucket_of(size, sum)]) {
                bool same = e.mask == imask;
                if ((same && e.sq != isq) || (!same && e.sq <= isq)) {
                    r.holds = false;
                    r.failure = "interval [" + std::to_string(l) + "," + std::to_string(rr) +
                                "] not the unique minimizer in its (size, sum) bucket";
                    break;
                }
            }
        }
    return r;
}

pumping_report check_pumping_claim(const finite_semigroup& s) {
    if (checked_pow(s.size(), s.size() + 1, 200'000'000) < 0)
        fail(errc::cap_exceeded, "pumping check: too many words for |S|^(|S|+1) enumeration");
    pumping_report r;
    int len = s.size() + 1;
    word w(static_cast<std::size_t>(len), 0);
    do {
        ++r.words_checked;
        // First collision among prefix products pi(w[1..l]), l = 1..len.
        std::vector<int> pref;
        int acc = -1;
        for (int c : w) {
            acc = acc < 0 ? c : s.mul(acc, c);
            pref.push_back(acc);
        }
        int i = -1, j = -1;
        for (int b = 0; b < len && i < 0; ++b)
            for (int a = 0; a < b; ++a)
                if (pref[static_cast<std::size_t>(a)] == pref[static_cast<std::size_t>(b)]) {
                    i = a;
                    j = b;
                    break;
                }
        if (i < 0) fail(errc::contract_error, "no prefix collision in a word of length |S|+1");
        int head = pref[static_cast<std::size_t>(i)];
        int loop = -1;
        for (int p = i + 1; p <= j; ++p) {
            int c = w[static_cast<std::size_t>(p)];
            loop = loop < 0 ? c : s.mul(loop, c);
        }
        int pumped = s.mul(head, s.omega_power(loop));
        for (int p = j + 1; p < len; ++p) pumped = s.mul(pumped, w[static_cast<std::size_t>(p)]);
        if (pumped != pref.back()) {
            r.holds = false;
            r.counterexample = w;
            return r;
        }
    } while (next_word(w, s.size()));
    return r;
}

}  // namespace ooo
