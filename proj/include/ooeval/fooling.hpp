#ifndef OOEVAL_FOOLING_HPP
#define OOEVAL_FOOLING_HPP

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ooeval/common.hpp"
#include "ooeval/semigroup.hpp"

namespace ooo {

// Word with holes: cells[i] < 0 means position i+1 is unset.
struct partial_word {
    std::vector<int> cells;

    long long length() const { return static_cast<long long>(cells.size()); }
    std::vector<long long> defined_positions() const;  // sorted, 1-based
};

// Merge two partial words with disjoint defined positions.
partial_word superpose(const partial_word& a, const partial_word& b);

// A family of partial words over a common domain, with a shared completion
// for every pair that forces different outcomes. After the domain positions
// have streamed past, an evaluator must still tell any two members apart, so
// it needs at least ceil(log2 members) bits of state at that point.
struct fooling_family {
    std::string name;
    long long n = 0;       // construction size parameter
    long long length = 0;  // common word length
    long long members = 0;
    std::vector<long long> domain;  // sorted, 1-based; members are defined exactly here
    int symbol_count = 0;

    std::function<partial_word(long long)> member;
    // witness(i, j) for i < j: defined exactly on the complement of domain.
    std::function<partial_word(long long, long long)> witness;
    // Printable outcome of a fully defined word: element name or accept/reject.
    std::function<std::string(std::span<const int>)> verdict;
    std::function<std::string(int)> symbol_name;

    long long bits() const { return members <= 1 ? 0 : index_bits(members); }
};

struct fooling_report {
    bool ok = true;
    long long pairs_total = 0;
    long long pairs_checked = 0;
    bool sampled = false;
    std::string failure;  // first structural or distinguishing failure
};

inline constexpr long long default_pair_cap = 2'000'000;

// Checks every pair (or a seeded sample when the pair count exceeds the cap):
// member and witness domains must partition the positions, and the two
// completions must evaluate to different verdicts.
fooling_report verify_fooling(const fooling_family& f, long long pair_cap = default_pair_cap,
                              unsigned long long seed = 0);

// ---------------------------------------------------------------------------
// Constructions. Sizes: sigma-aa and ab-semigroup have 2^n members over a
// domain of 2n positions (a linear lower bound); the others have about n
// members over n positions (a logarithmic lower bound).

// Membership of (a|b)* a a (a|b)*. Group g carries a fixed b, a bit letter,
// and a witness letter; only the pair's lowest differing bit can form "aa".
fooling_family make_sigma_aa_fooling(long long n);

// Element evaluation in a monoid with a commutation violation xy != yx:
// member i puts x at odd slot i, the witness puts y at the smaller index, so
// the completions multiply to xy versus yx.
fooling_family make_noncomm_fooling(const finite_semigroup& m, const equation_witness& com_witness,
                                    long long n);

// Element evaluation in a monoid violating
// (xa)^w s x t u (xb)^w = (xa)^w s t x u (xb)^w: members encode n bits by
// orienting x inside each group; the witness singles out the lowest
// differing group, where the orientation decides between the two sides.
fooling_family make_monlin_fooling(const finite_semigroup& m, const equation_witness& flcom_witness,
                                   long long n);

// Semigroup violating s^w x s^w t^w = s^w x t^w: member i switches the odd
// slots from s^w to t^w after slot i; the witness inserts x at the switch.
fooling_family make_stswap_fooling(const finite_semigroup& s, const equation_witness& licom1_witness,
                                   long long n);

// Semigroup violating s^w x s^w y s^w = s^w x y s^w: member i puts x at odd
// slot i, the witness puts y right after the larger index, separating x and
// y by an idempotent in one completion but not the other.
fooling_family make_xysep_fooling(const finite_semigroup& s, const equation_witness& licom2_witness,
                                  long long n);

// Element evaluation in the syntactic semigroup of (ab)*: members choose a
// or ab per odd slot; the witness complements one member's choices, giving
// ab for that member and the zero for every other.
fooling_family make_abstar_semigroup_fooling(long long n);

// Membership of a*b*a*: member i is a^i b^(n-i) on the odd slots, the
// witness repeats the larger member's pattern on the even slots; equal
// patterns interleave into a*b*, unequal ones alternate.
fooling_family make_aba_fooling(long long n);

}  // namespace ooo

#endif
