#include "ooeval/fooling.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <memory>

#include "ooeval/langkit.hpp"

namespace ooo {

std::vector<long long> partial_word::defined_positions() const {
    std::vector<long long> out;
    for (std::size_t i = 0; i < cells.size(); ++i)
        if (cells[i] >= 0) out.push_back(static_cast<long long>(i) + 1);
    return out;
}

partial_word superpose(const partial_word& a, const partial_word& b) {
    if (a.cells.size() != b.cells.size()) fail(errc::contract_error, "superpose length mismatch");
    partial_word out = a;
    for (std::size_t i = 0; i < b.cells.size(); ++i) {
        if (b.cells[i] < 0) continue;
        if (out.cells[i] >= 0) fail(errc::contract_error, "superpose overlap at position " + std::to_string(i + 1));
        out.cells[i] = b.cells[i];
    }
    return out;
}

namespace {

std::string describe_pair(const fooling_family& f, long long i, long long j, const std::string& why) {
    return f.name + ": pair (" + std::to_string(i) + ", " + std::to_string(j) + "): " + why;
}

}  // namespace

fooling_report verify_fooling(const fooling_family& f, long long pair_cap, unsigned long long seed) {
    fooling_report r;
    if (f.members < 2) {
        r.pairs_total = 0;
        return r;
    }
    __int128 total = static_cast<__int128>(f.members) * (f.members - 1) / 2;
    r.pairs_total = total > std::numeric_limits<long long>::max()
                        ? std::numeric_limits<long long>::max()
                        : static_cast<long long>(total);

    std::vector<long long> complement;
    {
        std::vector<bool> in_domain(static_cast<std::size_t>(f.length) + 1, false);
        for (long long p : f.domain) in_domain[static_cast<std::size_t>(p)] = true;
        for (long long p = 1; p <= f.length; ++p)
            if (!in_domain[static_cast<std::size_t>(p)]) complement.push_back(p);
    }

    auto check_pair = [&](long long i, long long j) -> bool {
        ++r.pairs_checked;
        partial_word wi = f.member(i);
        partial_word wj = f.member(j);
        if (wi.defined_positions() != f.domain || wj.defined_positions() != f.domain) {
            r.ok = false;
            r.failure = describe_pair(f, i, j, "member defined outside the family domain");
            return false;
        }
        partial_word c = f.witness(i, j);
        if (c.defined_positions() != complement) {
            r.ok = false;
            r.failure = describe_pair(f, i, j, "witness does not cover exactly the complement");
            return false;
        }
        partial_word fi = superpose(wi, c);
        partial_word fj = superpose(wj, c);
        std::string vi = f.verdict(fi.cells);
        std::string vj = f.verdict(fj.cells);
        if (vi == vj) {
            r.ok = false;
            r.failure = describe_pair(f, i, j, "both completions evaluate to " + vi);
            return false;
        }
        return true;
    };

    if (r.pairs_total <= pair_cap) {
        for (long long i = 0; i < f.members && r.ok; ++i)
            for (long long j = i + 1; j < f.members && r.ok; ++j) check_pair(i, j);
    } else {
        r.sampled = true;
        rng_t rng(seed);
        for (long long t = 0; t < pair_cap && r.ok; ++t) {
            long long i = static_cast<long long>(rng_below(rng, static_cast<unsigned long long>(f.members)));
            long long j = static_cast<long long>(rng_below(rng, static_cast<unsigned long long>(f.members - 1)));
            if (j >= i) ++j;
            if (i > j) std::swap(i, j);
            check_pair(i, j);
        }
    }
    return r;
}

// ---------------------------------------------------------------------------

namespace {

partial_word blank(long long length) {
    partial_word w;
    w.cells.assign(static_cast<std::size_t>(length), -1);
    return w;
}

void require_bits_param(long long n) {
    if (n < 1 || n > 32) fail(errc::cap_exceeded, "bit-indexed construction supports 1 <= n <= 32");
}

void require_witness(const equation_witness& w, equation_id want, const char* who) {
    if (w.id != want)
        fail(errc::inapplicable,
             std::string(who) + " needs a " + equation_name(want) + " violation witness");
}

std::function<std::string(std::span<const int>)> algebra_verdict(
    std::shared_ptr<const finite_semigroup> alg) {
    return [alg](std::span<const int> w) { return alg->name(alg->evaluate_word(w)); };
}

std::function<std::string(std::span<const int>)> language_verdict(std::shared_ptr<const dfa> d) {
    return [d](std::span<const int> w) { return d->run(w) ? std::string("accept") : std::string("reject"); };
}

std::function<std::string(int)> algebra_symbols(std::shared_ptr<const finite_semigroup> alg) {
    return [alg](int s) { return alg->name(s); };
}

std::function<std::string(int)> letter_symbols() {
    return [](int s) { return std::string(1, s == 0 ? 'a' : 'b'); };
}

std::vector<long long> odd_positions(long long n) {
    std::vector<long long> d;
    for (long long g = 1; g <= n; ++g) d.push_back(2 * g - 1);
    return d;
}

}  // namespace

fooling_family make_sigma_aa_fooling(long long n) {
    require_bits_param(n);
    auto d = std::make_shared<const dfa>(compile_regex("(a|b)*aa(a|b)*", "ab"));
    fooling_family f;
    f.name = "sigma-aa";
    f.n = n;
    f.length = 3 * n;
    f.members = 1LL << n;
    for (long long g = 0; g < n; ++g) {
        f.domain.push_back(3 * g + 1);
        f.domain.push_back(3 * g + 2);
    }
    f.symbol_count = 2;
    f.member = [n](long long m) {
        partial_word w = blank(3 * n);
        for (long long g = 0; g < n; ++g) {
            w.cells[static_cast<std::size_t>(3 * g)] = 1;  // fixed separator b
            w.cells[static_cast<std::size_t>(3 * g + 1)] = ((m >> g) & 1) ? 0 : 1;
        }
        return w;
    };
    f.witness = [n](long long i, long long j) {
        partial_word w = blank(3 * n);
        long long p = std::countr_zero(static_cast<unsigned long long>(i ^ j));
        for (long long g = 0; g < n; ++g)
            w.cells[static_cast<std::size_t>(3 * g + 2)] = g == p ? 0 : 1;
        return w;
    };
    f.verdict = language_verdict(d);
    f.symbol_name = letter_symbols();
    return f;
}

fooling_family make_noncomm_fooling(const finite_semigroup& m, const equation_witness& com_witness,
                                    long long n) {
    require_witness(com_witness, equation_id::com, "noncomm construction");
    if (!m.has_identity()) fail(errc::inapplicable, "noncomm construction needs a monoid");
    if (n < 2) fail(errc::contract_error, "noncomm construction needs n >= 2");
    auto alg = std::make_shared<const finite_semigroup>(m);
    int x = com_witness.assignment[0], y = com_witness.assignment[1];
    int e = *alg->identity();
    fooling_family f;
    f.name = "noncomm";
    f.n = n;
    f.length = 2 * n;
    f.members = n;
    f.domain = odd_positions(n);
    f.symbol_count = alg->size();
    f.member = [n, x, e](long long i) {
        partial_word w = blank(2 * n);
        for (long long g = 0; g < n; ++g) w.cells[static_cast<std::size_t>(2 * g)] = g == i ? x : e;
        return w;
    };
    f.witness = [n, y, e](long long i, long long) {
        partial_word w = blank(2 * n);
        for (long long g = 0; g < n; ++g) w.cells[static_cast<std::size_t>(2 * g + 1)] = g == i ? y : e;
        return w;
    };
    f.verdict = algebra_verdict(alg);
    f.symbol_name = algebra_symbols(alg);
    return f;
}

fooling_family make_monlin_fooling(const finite_semigroup& m, const equation_witness& flcom_witness,
                                   long long n) {
    require_witness(flcom_witness, equation_id::flcom, "monlin construction");
    if (!m.has_identity()) fail(errc::inapplicable, "monlin construction needs a monoid");
    require_bits_param(n);
    auto alg = std::make_shared<const finite_semigroup>(m);
    const auto& a = flcom_witness.assignment;  // x, a, b, s, t, u
    int x = a[0], s = a[3], t = a[4], u = a[5];
    int e = *alg->identity();
    int xa = alg->mul(x, a[1]), xb = alg->mul(x, a[2]);
    long long omega = alg->idempotent_power();
    fooling_family f;
    f.name = "monlin";
    f.n = n;
    f.length = 5 * n + 2;
    f.members = 1LL << n;
    for (long long g = 1; g <= n; ++g) {
        f.domain.push_back(5 * g - 2);
        f.domain.push_back(5 * g);
    }
    f.symbol_count = alg->size();
    // Group g occupies positions 5g-3 .. 5g+1; members fill the 2nd and 4th
    // cell, the witness the rest plus the two boundary cells.
    f.member = [n, x, e](long long m_bits) {
        partial_word w = blank(5 * n + 2);
        for (long long g = 1; g <= n; ++g) {
            bool bit = (m_bits >> (g - 1)) & 1;
            w.cells[static_cast<std::size_t>(5 * g - 2 - 1)] = bit ? x : e;
            w.cells[static_cast<std::size_t>(5 * g - 1)] = bit ? e : x;
        }
        return w;
    };
    int wa = a[1], wb = a[2];
    f.witness = [n, alg, s, t, u, e, wa, wb, xa, xb, omega](long long i, long long j) {
        partial_word w = blank(5 * n + 2);
        long long iota = std::countr_zero(static_cast<unsigned long long>(i ^ j)) + 1;
        // Boundary powers pad the group products (xa) and (xb) up to the
        // omega power, so only the group at iota distinguishes the pair.
        w.cells[0] = alg->power(xa, n * omega - iota + 1);
        w.cells[static_cast<std::size_t>(5 * n + 1)] = alg->power(xb, n * omega - n + iota);
        for (long long g = 1; g <= n; ++g) {
            int c1 = e, c3 = e, c5 = g < iota ? wa : wb;
            if (g == iota) {
                c1 = s;
                c3 = t;
                c5 = u;
            }
            w.cells[static_cast<std::size_t>(5 * g - 4)] = c1;
            w.cells[static_cast<std::size_t>(5 * g - 2)] = c3;
            w.cells[static_cast<std::size_t>(5 * g)] = c5;
        }
        return w;
    };
    f.verdict = algebra_verdict(alg);
    f.symbol_name = algebra_symbols(alg);
    return f;
}

fooling_family make_stswap_fooling(const finite_semigroup& sg, const equation_witness& licom1_witness,
                                   long long n) {
    require_witness(licom1_witness, equation_id::licom1, "stswap construction");
    if (n < 3) fail(errc::contract_error, "stswap construction needs n >= 3");
    auto alg = std::make_shared<const finite_semigroup>(sg);
    const auto& a = licom1_witness.assignment;  // s, x, t
    int big_e = alg->omega_power(a[0]);
    int x = a[1];
    int big_f = alg->omega_power(a[2]);
    fooling_family f;
    f.name = "stswap";
    f.n = n;
    f.length = 2 * n;
    f.members = n - 2;  // switch index i runs over 2 .. n-1
    f.domain = odd_positions(n);
    f.symbol_count = alg->size();
    f.member = [n, big_e, big_f](long long idx) {
        long long i = idx + 2;
        partial_word w = blank(2 * n);
        for (long long g = 1; g <= n; ++g)
            w.cells[static_cast<std::size_t>(2 * g - 2)] = g <= i ? big_e : big_f;
        return w;
    };
    f.witness = [n, big_e, big_f, x](long long idx_i, long long) {
        long long i = idx_i + 2;
        partial_word w = blank(2 * n);
        for (long long g = 1; g <= n; ++g) {
            int v = g <= i - 1 ? big_e : (g == i ? x : big_f);
            w.cells[static_cast<std::size_t>(2 * g - 1)] = v;
        }
        return w;
    };
    f.verdict = algebra_verdict(alg);
    f.symbol_name = algebra_symbols(alg);
    return f;
}

fooling_family make_xysep_fooling(const finite_semigroup& sg, const equation_witness& licom2_witness,
                                  long long n) {
    require_witness(licom2_witness, equation_id::licom2, "xysep construction");
    if (n < 2) fail(errc::contract_error, "xysep construction needs n >= 2");
    auto alg = std::make_shared<const finite_semigroup>(sg);
    const auto& a = licom2_witness.assignment;  // s, x, y
    int big_e = alg->omega_power(a[0]);
    int x = a[1], y = a[2];
    fooling_family f;
    f.name = "xysep";
    f.n = n;
    f.length = 2 * n;
    f.members = n;
    f.domain = odd_positions(n);
    f.symbol_count = alg->size();
    f.member = [n, big_e, x](long long idx) {
        partial_word w = blank(2 * n);
        for (long long g = 0; g < n; ++g)
            w.cells[static_cast<std::size_t>(2 * g)] = g == idx ? x : big_e;
        return w;
    };
    f.witness = [n, big_e, y](long long, long long idx_j) {
        partial_word w = blank(2 * n);
        for (long long g = 0; g < n; ++g)
            w.cells[static_cast<std::size_t>(2 * g + 1)] = g == idx_j ? y : big_e;
        return w;
    };
    f.verdict = algebra_verdict(alg);
    f.symbol_name = algebra_symbols(alg);
    return f;
}

fooling_family make_abstar_semigroup_fooling(long long n) {
    require_bits_param(n);
    auto st = syntactic_semigroup(compile_regex("(ab)*", "ab"));
    auto alg = std::make_shared<const finite_semigroup>(st.algebra);
    int ia = alg->index_of("a"), ib = alg->index_of("b"), iab = alg->index_of("ab");
    if (ia < 0 || ib < 0 || iab < 0) fail(errc::contract_error, "unexpected (ab)* element names");
    fooling_family f;
    f.name = "ab-semigroup";
    f.n = n;
    f.length = 2 * n;
    f.members = 1LL << n;
    f.domain = odd_positions(n);
    f.symbol_count = alg->size();
    f.member = [n, ia, iab](long long m) {
        partial_word w = blank(2 * n);
        for (long long g = 0; g < n; ++g)
            w.cells[static_cast<std::size_t>(2 * g)] = ((m >> g) & 1) ? ia : iab;
        return w;
    };
    // The witness completes member i's choices: a pairs with b, ab pairs with
    // ab. Member i multiplies out to ab, any differing member hits aa or bb.
    f.witness = [n, ib, iab](long long i, long long) {
        partial_word w = blank(2 * n);
        for (long long g = 0; g < n; ++g)
            w.cells[static_cast<std::size_t>(2 * g + 1)] = ((i >> g) & 1) ? ib : iab;
        return w;
    };
    f.verdict = algebra_verdict(alg);
    f.symbol_name = algebra_symbols(alg);
    return f;
}

fooling_family make_aba_fooling(long long n) {
    if (n < 2) fail(errc::contract_error, "aba construction needs n >= 2");
    auto d = std::make_shared<const dfa>(compile_regex("a*b*a*", "ab"));
    fooling_family f;
    f.name = "aba";
    f.n = n;
    f.length = 2 * n;
    f.members = n;  // member i is a^i b^(n-i) on the odd slots, i = 0 .. n-1
    f.domain = odd_positions(n);
    f.symbol_count = 2;
    f.member = [n](long long i) {
        partial_word w = blank(2 * n);
        for (long long g = 1; g <= n; ++g)
            w.cells[static_cast<std::size_t>(2 * g - 2)] = g <= i ? 0 : 1;
        return w;
    };
    f.witness = [n](long long, long long j) {
        partial_word w = blank(2 * n);
        for (long long g = 1; g <= n; ++g)
            w.cells[static_cast<std::size_t>(2 * g - 1)] = g <= j ? 0 : 1;
        return w;
    };
    f.verdict = language_verdict(d);
    f.symbol_name = letter_symbols();
    return f;
}

}  // namespace ooo
