#ifndef OOEVAL_ORACLES_HPP
#define OOEVAL_ORACLES_HPP

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ooeval/common.hpp"
#include "ooeval/semigroup.hpp"

namespace ooo {

// ---------------------------------------------------------------------------
// Exact one-way communication bound, independent of any evaluator: fix a set
// of positions D, enumerate every assignment to D, and partition the
// assignments by their verdict vector over all completions of the remaining
// positions. Two assignments in different classes need different states once
// D has streamed past, so any algorithm needs ceil(log2 classes) bits there.

struct lower_bound_report {
    long long domain_size = 0;
    long long assignments = 0;  // symbol_count ^ |D|
    long long completions = 0;  // symbol_count ^ (n - |D|)
    long long classes = 0;
    long long bits = 0;  // ceil(log2 classes)
};

inline constexpr long long default_lower_bound_cap = 1LL << 20;

// verdict maps a fully defined word of length n to an outcome code (element
// index, or 0/1 for membership). domain holds 1-based positions. The product
// assignments * completions must stay within cap; exceeding it is an error.
lower_bound_report one_way_lower_bound(const std::function<int(std::span<const int>)>& verdict,
                                       int symbol_count, long long n,
                                       const std::vector<long long>& domain,
                                       long long cap = default_lower_bound_cap);

// ---------------------------------------------------------------------------
// Replacing a word by its k-first-last subword preserves the product. Checked
// exhaustively for all words up to max_len; a counterexample disproves the
// preservation claim for this algebra and k.

struct fl_preservation_report {
    bool holds = true;
    long long words_checked = 0;
    word counterexample;
};

fl_preservation_report check_fl_preservation(const finite_semigroup& m, int k, int max_len);

// ---------------------------------------------------------------------------
// Among all position sets X inside {1..m} with a given size and sum, the
// contiguous interval uniquely minimizes the sum of squares. Checked by
// enumerating every subset of {1..m}.

struct sum_of_squares_report {
    bool holds = true;
    long long intervals_checked = 0;
    long long subsets_checked = 0;
    std::string failure;
};

sum_of_squares_report check_sum_of_squares_lemma(int m);

// ---------------------------------------------------------------------------
// Every word of length |S|+1 has a prefix value repeating at lengths i < j,
// and cutting the loop w[i+1..j] down to its omega power leaves the product
// unchanged: pi(w) = pi(w[1..i]) * pi(w[i+1..j])^omega * pi(w[j+1..]).
// Checked for every word of that length, using the first such collision.

struct pumping_report {
    bool holds = true;
    long long words_checked = 0;
    word counterexample;
};

pumping_report check_pumping_claim(const finite_semigroup& s);

}  // namespace ooo

#endif
