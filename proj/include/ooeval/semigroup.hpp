#ifndef OOEVAL_SEMIGROUP_HPP
#define OOEVAL_SEMIGROUP_HPP

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ooeval/common.hpp"

namespace ooo {

// Finite semigroup given by a full multiplication table. Element names are
// unique non-empty tokens; an identity is detected automatically and, if one
// is declared by the caller, cross-checked against the detected one.
// Construction validates associativity, so every instance is a semigroup.
class finite_semigroup {
public:
    finite_semigroup(std::vector<std::string> names, std::vector<int> table,
                     std::optional<int> declared_identity = std::nullopt);

    int size() const { return k_; }
    int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * k_ + b]; }
    const std::string& name(int i) const { return names_[static_cast<std::size_t>(i)]; }
    const std::vector<std::string>& names() const { return names_; }
    int index_of(const std::string& name) const;  // -1 when absent

    bool has_identity() const { return identity_.has_value(); }
    std::optional<int> identity() const { return identity_; }

    // Left fold over the table. The empty word maps to the identity and is an
    // error on identity-free semigroups.
    int evaluate_word(std::span<const int> w) const;

    int power(int x, long long e) const;  // e >= 1

    // Smallest positive omega with x^omega = x^(2*omega) for every x:
    // the least multiple of lcm(all periods) that is >= max(all indices).
    long long idempotent_power() const;
    int omega_power(int x) const;  // x^omega, cached
    bool is_idempotent(int x) const { return mul(x, x) == x; }

    // (index, period) of the cyclic subsemigroup generated by x: the least
    // i >= 1, p >= 1 with x^i = x^(i+p).
    std::pair<long long, long long> index_period(int x) const;

private:
    int k_;
    std::vector<std::string> names_;
    std::vector<int> table_;
    std::optional<int> identity_;
    mutable long long omega_ = -1;
    mutable std::vector<int> omega_pow_;

    void validate() const;
    void compute_omega() const;
};

int evaluate_word(const finite_semigroup& s, std::span<const int> w);

// k-first-last subword: keeps, for every element, the first k and last k of
// its occurrence positions. Returns the subword; the _positions variant
// returns the sorted retained positions (0-based).
std::vector<std::size_t> fl_subword_positions(std::span<const int> u, int elem_count, int k);
word fl_subword(std::span<const int> u, int elem_count, int k);

// ---------------------------------------------------------------------------
// Equations over a semigroup, checked exhaustively.

enum class equation_id { com, fl, flcom, li, licom, licom1, licom2, local_com };

const char* equation_name(equation_id id);
std::optional<equation_id> equation_from_name(const std::string& name);

struct eq_factor {
    std::vector<int> vars;  // positions in the variable tuple, multiplied left to right
    bool omega;             // raise the factor's product to the omega power
};

struct equation_def {
    equation_id id;
    std::vector<std::string> var_names;  // also the lexicographic scan order
    std::vector<eq_factor> lhs, rhs;
};

const equation_def& equation(equation_id id);

struct equation_witness {
    equation_id id;
    std::vector<int> assignment;  // element index per variable, in var_names order
    int lhs, rhs;
};

inline constexpr long long default_equation_cap = 100'000'000;  // assignments

// Scans all |S|^v assignments in lexicographic element-declaration order and
// returns the first violating one, or nullopt when the equation holds.
// Exceeding the cap is a hard error, never a silent sample.
std::optional<equation_witness> check_equation(const finite_semigroup& s, equation_id id,
                                               long long cap = default_equation_cap);

// Evaluates one side of an equation under a fixed assignment.
int evaluate_equation_side(const finite_semigroup& s, const std::vector<eq_factor>& side,
                           std::span<const int> assignment);

// ---------------------------------------------------------------------------
// Regime classification.

enum class regime { constant, logarithmic, linear, at_least_logarithmic };

const char* regime_name(regime r);

struct regime_report {
    regime r;
    // For monoids: the violation excluding the next-lower class (COM witness
    // for logarithmic, FLCOM witness for linear). For semigroups above
    // constant: the first failing diagnostic equation's witness.
    std::optional<equation_witness> witness;
};

regime_report classify_monoid(const finite_semigroup& m, long long cap = default_equation_cap);
regime_report classify_semigroup(const finite_semigroup& s, long long cap = default_equation_cap);

// ---------------------------------------------------------------------------
// Constructions.

finite_semigroup direct_product(const finite_semigroup& a, const finite_semigroup& b);

// elements must be closed under the host's multiplication (validated).
finite_semigroup subsemigroup(const finite_semigroup& s, const std::vector<int>& elements);

// class_of maps host elements onto 0..c-1; the partition must be a congruence
// (validated). Class i is represented by its lowest host element.
finite_semigroup quotient(const finite_semigroup& s, const std::vector<int>& class_of);

// ---------------------------------------------------------------------------
// Table file format:
//   elements: <name> <name> ...
//   identity: <name>          (optional line)
//   <k rows of k names each, row i listing the products i*j>
finite_semigroup load_semigroup_file(const std::string& path);
finite_semigroup parse_semigroup_table(const std::string& text, const std::string& origin);
std::string format_semigroup_table(const finite_semigroup& s);

}  // namespace ooo

#endif
