#ifndef OOEVAL_CATALOG_HPP
#define OOEVAL_CATALOG_HPP

#include <optional>
#include <vector>

#include "ooeval/common.hpp"
#include "ooeval/semigroup.hpp"

namespace ooo {

// Closure of the given transformations of {0..points-1} under composition
// (f*g applies f first). Returns nullopt when the closure grows past
// max_size. Element names are the image tuples as digit strings.
std::optional<finite_semigroup> transformation_closure(int points,
                                                       const std::vector<std::vector<int>>& generators,
                                                       int max_size);

// Seeded catalog of distinct subsemigroups of the full transformation
// semigroups on 3 and 4 points, generated by 1-3 random transformations.
// Closures larger than max_size are discarded; max_size defaults to 20 so
// that even 6-variable equations stay under the default assignment cap.
std::vector<finite_semigroup> random_transformation_catalog(int count, std::uint64_t seed,
                                                            int max_size = 20);

}  // namespace ooo

#endif
