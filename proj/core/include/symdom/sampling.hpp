#pragma once

#include "symdom/group.hpp"

#include <cstdint>
#include <random>

namespace symdom {

using Rng = std::mt19937_64;

/// Uniform in the ball of the given radius.
Vec random_ball_point(Rng& rng, int d, double radius);

/// Entries uniform in the complex square [-scale, scale]^2.
Vec random_vector(Rng& rng, int d, double scale = 1.0);

/// Haar-distributed unitary (QR of a Ginibre matrix with phase fix).
Mat random_unitary(Rng& rng, int d);

GroupElement random_transvection(Rng& rng, int d, double radius);

/// gamma_x o k with random x and k.
GroupElement random_group_element(Rng& rng, int d, double radius);

/// Coefficients uniform in the unit square; every degree <= deg, or only
/// degree deg when `homogeneous`.
CPolynomial random_polynomial(Rng& rng, int d, int deg, bool homogeneous);

}  // namespace symdom
