#ifndef OOEVAL_COMMON_HPP
#define OOEVAL_COMMON_HPP

#include <bit>
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace ooo {

// Error taxonomy shared by the library and the CLI exit-code mapping:
//   parse_error    -> malformed regex / table / trace input          (exit 2)
//   cap_exceeded   -> an exhaustive check would exceed its cap       (exit 3)
//   inapplicable   -> evaluator preconditions not met by the subject (exit 4)
//   contract_error -> stream-contract violation or internal misuse
enum class errc { parse_error, cap_exceeded, inapplicable, contract_error };

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

// Words are sequences of symbol indices: alphabet letters for languages,
// element indices for semigroup streams.
using word = std::vector<int>;

// Bits needed to store any value in [0, n] as an unsigned integer.
inline long long value_bits(long long n) {
    return n <= 0 ? 0 : static_cast<long long>(std::bit_width(static_cast<unsigned long long>(n)));
}

// Bits for an index in [0, k): ceil(log2 k).
inline long long index_bits(long long k) { return k <= 1 ? 0 : value_bits(k - 1); }

// Deterministic RNG helpers. mt19937_64 output is pinned by the standard;
// std::uniform_int_distribution is not, so draws go through rng_below to keep
// seeded runs byte-identical across platforms.
using rng_t = std::mt19937_64;

inline std::uint64_t rng_below(rng_t& rng, std::uint64_t bound) {
    // Rejection sampling; bound is tiny everywhere we use this.
    if (bound <= 1) return 0;
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() / bound * bound;
    std::uint64_t v = rng();
    while (v >= limit) v = rng();
    return v % bound;
}

template <class T>
void shuffle_vec(std::vector<T>& v, rng_t& rng) {
    for (std::size_t i = v.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(rng_below(rng, i));
        std::swap(v[i - 1], v[j]);
    }
}

}  // namespace ooo

#endif
