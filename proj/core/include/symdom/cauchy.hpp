#pragma once

#include "symdom/poly.hpp"

#include <functional>
#include <vector>

namespace symdom {

/// Taylor coefficients of x -> f(center + x) on a polydisc torus, by a
/// separable discrete Fourier transform. Coefficients with I_i >= nodes[i]
/// alias onto lower ones, so nodes must exceed the degrees of interest.
/// Only indices accepted by `keep` are returned.
CPolynomial torus_taylor(const HoloFn& f, const Vec& center, const std::vector<double>& radii,
                         const std::vector<int>& nodes,
                         const std::function<bool(const MultiIndex&)>& keep);

}  // namespace symdom
