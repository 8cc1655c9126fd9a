#pragma once

#include "symdom/ball.hpp"

namespace symdom {

/// Automorphism g = gamma_x o k of the ball, k unitary.
class GroupElement {
public:
    GroupElement() = default;
    GroupElement(Vec x, Mat k);

    static GroupElement identity(int d);
    static GroupElement transvection(const Vec& x);
    static GroupElement linear(const Mat& k);

    int dim() const { return static_cast<int>(x_.size()); }
    const Vec& x() const { return x_; }
    const Mat& k() const { return k_; }

    Vec apply(const Vec& z) const;
    Mat derivative(const Vec& z) const;
    /// det(d_z g)^s, continuous in z, with principal powers of each factor.
    Complex det_derivative_power(const Vec& z, double s) const;
    /// g^{-1}(0) = -k^H x
    Vec inverse_origin() const;

    GroupElement inverse() const;

private:
    Vec x_;
    Mat k_;
};

/// g1 o g2
GroupElement compose(const GroupElement& g1, const GroupElement& g2);

struct CocycleParts {
    Mat linear;  ///< d_z g
    Vec shift;   ///< u = -(g^{-1}(0))^z
};

/// [g]_z = (d_z g) taubar_u, u = -(g^{-1}(0))^z
CocycleParts cocycle_translation_part(const GroupElement& g, const Vec& z);

}  // namespace symdom
