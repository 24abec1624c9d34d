// Explicit tables for stems outside the named catalog, used by the check
// suite and the tests.

#ifndef NILPOT_CONSTRUCTIONS_HPP
#define NILPOT_CONSTRUCTIONS_HPP

#include "nilpot/liealg.hpp"

namespace nilpot {

/// L4_3 with `pairs` extra pairs (u, v) and [u, v] = x4. A class-3 stem
/// with dim L^2 = 2 and dimension 4 + 2*pairs.
LieAlgebra l43_with_central_pairs(const FieldSpec& field, std::size_t pairs);

/// L5_5 with `pairs` extra pairs bracketing onto x5; dimension 5 + 2*pairs.
LieAlgebra l55_with_central_pairs(const FieldSpec& field, std::size_t pairs);

/// x1, x2, x3, y1, y2, z1, z2 with [x1,x2] = z1, [x1,x3] = z2, [y1,y2] = z1.
/// A 7-dimensional class-2 stem with L^2 = Z = <z1, z2> that is not L1.
LieAlgebra l58_glued_heisenberg(const FieldSpec& field);

/// Sum of Heisenberg algebras H(m) with their centers identified along the
/// two-dimensional center <z1, z2>: the k-th summand's bracket lands on
/// targets[k] = (a, b) meaning a*z1 + b*z2. Generalized Heisenberg of rank 2
/// whenever the targets span the plane.
LieAlgebra glued_heisenbergs(const FieldSpec& field, const std::vector<std::size_t>& ranks,
                             const std::vector<std::pair<long, long>>& targets);

}  // namespace nilpot

#endif  // NILPOT_CONSTRUCTIONS_HPP
