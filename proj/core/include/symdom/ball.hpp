#pragma once

#include "symdom/poly.hpp"

#include <stdexcept>

namespace symdom {

/// Thrown when 1 - (z|w) is too close to zero.
class QuasiSingular : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

inline constexpr double kQuasiEps = 1e-12;

/// {u v* w} = ((u|v) w + (w|v) u) / 2
Vec triple_product(const Vec& u, const Vec& v, const Vec& w);

/// Q_u z = {u z* u} = (u|z) u
Vec quadratic_rep(const Vec& u, const Vec& z);

/// Delta_{z,w} = 1 - (z|w)
Complex quasi_determinant(const Vec& z, const Vec& w);

/// z^w = z / (1 - (z|w))
Vec quasi_inverse(const Vec& z, const Vec& w, double eps = kQuasiEps);

/// B_{z,w} zeta = (1 - (z|w)) (zeta - (zeta|w) z)
Vec bergman_apply(const Vec& z, const Vec& w, const Vec& zeta);

Mat bergman_matrix(const Vec& z, const Vec& w);
Mat bergman_inverse(const Vec& z, const Vec& w, double eps = kQuasiEps);

/// Principal square root B^{1/2}_{z,w} = sqrt(D) (I - z w^H / (1 + sqrt(D))).
/// Requires Re D > 0 so that every eigenvalue stays off the cut.
Mat bergman_sqrt(const Vec& z, const Vec& w);
Mat bergman_inv_sqrt(const Vec& z, const Vec& w);

bool is_interior(const Vec& z);
void require_interior(const Vec& z, const char* what);

/// gamma_x(z) = x + B^{1/2}_{x,x}(z^{-x})
Vec transvection_apply(const Vec& x, const Vec& z);

/// d_z gamma_x = B^{1/2}_{x,x} B^{-1}_{z,-x}
Mat transvection_derivative(const Vec& x, const Vec& z);

/// det(d_z gamma_x)^s on the branch continuous from s*log of a positive
/// number at z = 0: (1-|x|^2)^{ps/2} (1+(z|x))^{-ps}, principal powers.
Complex transvection_det_power(const Vec& x, const Vec& z, double s);

}  // namespace symdom
