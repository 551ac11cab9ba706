#pragma once

#include <vector>

#include "gecliff/rational.hpp"

namespace gecliff {

using RatVector = std::vector<Rational>;
using RatMatrix = std::vector<RatVector>;

// Exact Gauss-Jordan inverse. Throws NotInvertible for singular input.
RatMatrix rat_inverse(RatMatrix m);

// Exact determinant by Gaussian elimination.
Rational rat_det(RatMatrix m);

// Row vector times matrix.
RatVector rat_vec_mul(const RatVector& v, const RatMatrix& m);

}  // namespace gecliff
