#ifndef OOEVAL_EVAL_GENERIC_HPP
#define OOEVAL_EVAL_GENERIC_HPP

#include <memory>

#include "ooeval/evaluator.hpp"
#include "ooeval/semigroup.hpp"

namespace ooo {

// Saturating counter with a modular tail. Counts below `threshold` are exact;
// beyond that only the residue mod `period` survives. canonical_count() is the
// smallest count >= threshold with the stored residue, so whenever
// threshold >= idempotent-power index and period is a multiple of the element
// period, m^canonical == m^true for every true count.
class threshold_period_counter {
public:
    threshold_period_counter() = default;
    threshold_period_counter(long long threshold, long long period);

    void add();
    long long canonical_count() const;
    bool saturated() const { return head_ >= threshold_; }
    long long bits() const;

    long long threshold() const { return threshold_; }
    long long period() const { return period_; }

private:
    long long threshold_ = 1;
    long long period_ = 1;
    long long head_ = 0;     // min(true count, threshold_)
    long long residue_ = 0;  // true count mod period_
};

// Baseline: buffers the whole word, multiplies in position order at the end.
// State: n presence bits plus one element index per received position.
std::unique_ptr<element_evaluator> make_reference_evaluator(const finite_semigroup& s);

// Commutative algebras: fold events in arrival order into one accumulator.
// Inapplicable unless xy = yx holds.
std::unique_ptr<element_evaluator> make_commutative_evaluator(const finite_semigroup& s);

// Monoids where the product is determined by the first k and last k
// occurrences of every element, k = |M|: keeps two sorted position lists per
// element, capped at k entries each. Inapplicable unless the algebra is a
// monoid satisfying (xy)^w s x t (xz)^w = (xy)^w x s t (xz)^w for the
// two-sided ideal law used here (the "first/last occurrences" law).
std::unique_ptr<element_evaluator> make_fl_evaluator(const finite_semigroup& m);

// First/last lists plus one threshold/period occurrence counter per element.
// At finish the surplus occurrences of each element are reinserted right
// after its k-th retained first occurrence. Inapplicable unless the algebra
// is a monoid satisfying (xa)^w s x t u (xb)^w = (xa)^w s t x u (xb)^w.
std::unique_ptr<element_evaluator> make_flcom_evaluator(const finite_semigroup& m);

// Locally trivial algebras (x^w y x^w = x^w): only the first k+1 and last
// k+1 positions matter, k = |S|.
std::unique_ptr<element_evaluator> make_li_evaluator(const finite_semigroup& s);

// s^w x y t^w = s^w y x t^w: first/last k+1 positions verbatim plus one
// occurrence counter per element for the interior; the interior is replayed
// as sorted element powers at finish.
std::unique_ptr<element_evaluator> make_licom_evaluator(const finite_semigroup& s);

// Runs an evaluator for each factor of a direct product. Pair (i, j) is
// encoded as i * right_size + j, matching direct_product element order.
std::unique_ptr<element_evaluator> make_product_evaluator(std::unique_ptr<element_evaluator> left,
                                                          std::unique_ptr<element_evaluator> right,
                                                          int right_size);

// Evaluates a subalgebra through an evaluator for the ambient algebra.
// `embed[i]` is the ambient index of sub element i. The final ambient result
// must land back inside the image.
std::unique_ptr<element_evaluator> make_sub_evaluator(std::unique_ptr<element_evaluator> ambient,
                                                      std::vector<int> embed);

// Evaluates a quotient by streaming class representatives through an
// evaluator for the source algebra and projecting the result.
std::unique_ptr<element_evaluator> make_quotient_evaluator(std::unique_ptr<element_evaluator> source,
                                                           std::vector<int> class_of,
                                                           std::vector<int> representative);

}  // namespace ooo

#endif
