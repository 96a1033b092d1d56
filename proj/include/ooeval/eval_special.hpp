#ifndef OOEVAL_EVAL_SPECIAL_HPP
#define OOEVAL_EVAL_SPECIAL_HPP

#include <cstdint>
#include <memory>

#include "ooeval/eval_generic.hpp"
#include "ooeval/evaluator.hpp"
#include "ooeval/langkit.hpp"
#include "ooeval/semigroup.hpp"

namespace ooo {

// Language evaluators use alphabet indices as symbols; for the fixed
// two-letter languages below, symbol 0 is 'a' and symbol 1 is 'b'.

// Buffers the word and runs the automaton at the end. Baseline for
// differential testing.
std::unique_ptr<language_evaluator> make_dfa_reference_evaluator(dfa d);

// (ab)*: one violation flag; parity comes from n. Two bits of state.
std::unique_ptr<language_evaluator> make_abstar_evaluator();

// Algebras satisfying xyz = xz: only the letters at positions 1 and n
// matter. Inapplicable otherwise.
std::unique_ptr<element_evaluator> make_firstlast_evaluator(const finite_semigroup& s);

// a*b*a*: least/greatest b-position plus the b-count; membership iff the
// b-positions form one contiguous interval.
std::unique_ptr<language_evaluator> make_aba_evaluator();

// a*b*a*b*a*: b-span endpoints plus count, sum and sum of squares of the
// a-positions. The interior a-positions must form one contiguous interval,
// which the first two moments pin down exactly.
std::unique_ptr<language_evaluator> make_ababa_evaluator();

// a*b*a*b*a*b*: ceil(sqrt(n))-sized blocks; pure blocks keep one letter,
// mixed blocks are memorized cell by cell, and more than six mixed blocks
// commit the run to rejection.
std::unique_ptr<language_evaluator> make_ababab_evaluator();

// Interval merging at letter granularity: per position a run size and, at
// each run's left endpoint, the run's product. A position was never covered
// iff its run size is still zero, so no extra presence bitmap exists.
std::unique_ptr<element_evaluator> make_interval_evaluator(const finite_semigroup& s);

// Interval merging with micro blocks of b = max(1, ceil(log2 n) - 1)
// positions packed into bit vectors; the left endpoint of a run is located
// with one carry propagation instead of a scan.
std::unique_ptr<element_evaluator> make_bitpacked_evaluator(const finite_semigroup& s);

// Membership through an algebra evaluator: letters map through the syntactic
// morphism, the final element is tested for acceptance.
std::unique_ptr<language_evaluator> make_morphism_evaluator(const syntactic_structure& st,
                                                            std::unique_ptr<element_evaluator> inner);

// Bit vector of a micro block, logical bits 0..b. Logical bit j (0 is the
// safety bit, 1..b are positions) lives at machine bit b-j, so an addition
// carry moves toward lower logical indices.
namespace bitpack {

inline std::uint64_t one(int b, int j) { return std::uint64_t{1} << (b - j); }
inline bool test(std::uint64_t v, int b, int j) { return (v >> (b - j)) & 1u; }

// Left endpoint of the run of set bits containing logical bit p (which must
// be set): add one(p), and the single freshly set bit lands one slot left of
// the run.
int carry_left_endpoint(std::uint64_t v, int b, int p);

}  // namespace bitpack

}  // namespace ooo

#endif
