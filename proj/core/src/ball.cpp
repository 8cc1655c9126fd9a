#include "symdom/ball.hpp"

#include <cmath>
#include <string>

namespace symdom {

namespace {

void same_dim(const Vec& a, const Vec& b, const char* what)
{
    if (a.size() != b.size())
        throw std::invalid_argument(std::string(what) + ": dimension mismatch");
}

Complex checked_delta(const Vec& z, const Vec& w, double eps, const char* what)
{
    Complex D = quasi_determinant(z, w);
    if (std::abs(D) <= eps)
        throw QuasiSingular(std::string(what) + ": pair is not quasi-invertible");
    return D;
}

Complex checked_sqrt_delta(const Vec& z, const Vec& w, const char* what)
{
    Complex D = quasi_determinant(z, w);
    if (D.real() <= 0.0)
        throw std::domain_error(std::string(what) + ": Re(1-(z|w)) <= 0, no principal square root");
    return std::sqrt(D);
}

}  // namespace

Vec triple_product(const Vec& u, const Vec& v, const Vec& w)
{
    same_dim(u, v, "triple_product");
    same_dim(u, w, "triple_product");
    return (pairing(u, v) * w + pairing(w, v) * u) / 2.0;
}

Vec quadratic_rep(const Vec& u, const Vec& z)
{
    same_dim(u, z, "quadratic_rep");
    return pairing(u, z) * u;
}

Complex quasi_determinant(const Vec& z, const Vec& w)
{
    same_dim(z, w, "quasi_determinant");
    return 1.0 - pairing(z, w);
}

Vec quasi_inverse(const Vec& z, const Vec& w, double eps)
{
    return z / checked_delta(z, w, eps, "quasi_inverse");
}

Vec bergman_apply(const Vec& z, const Vec& w, const Vec& zeta)
{
    same_dim(z, zeta, "bergman_apply");
    return quasi_determinant(z, w) * (zeta - pairing(zeta, w) * z);
}

Mat bergman_matrix(const Vec& z, const Vec& w)
{
    const auto d = z.size();
    return quasi_determinant(z, w) * (Mat::Identity(d, d) - z * w.adjoint());
}

Mat bergman_inverse(const Vec& z, const Vec& w, double eps)
{
    const auto d = z.size();
    Complex D = checked_delta(z, w, eps, "bergman_inverse");
    return (Mat::Identity(d, d) + z * w.adjoint() / D) / D;
}

Mat bergman_sqrt(const Vec& z, const Vec& w)
{
    const auto d = z.size();
    Complex s = checked_sqrt_delta(z, w, "bergman_sqrt");
    return s * (Mat::Identity(d, d) - z * w.adjoint() / (1.0 + s));
}

Mat bergman_inv_sqrt(const Vec& z, const Vec& w)
{
    const auto d = z.size();
    Complex s = checked_sqrt_delta(z, w, "bergman_inv_sqrt");
    return (Mat::Identity(d, d) + z * w.adjoint() / (s * (1.0 + s))) / s;
}

bool is_interior(const Vec& z)
{
    return z.squaredNorm() < 1.0;
}

void require_interior(const Vec& z, const char* what)
{
    if (!is_interior(z))
        throw std::domain_error(std::string(what) + ": point is not inside the unit ball");
}

Vec transvection_apply(const Vec& x, const Vec& z)
{
    same_dim(x, z, "transvection_apply");
    require_interior(x, "transvection_apply");
    Vec y = quasi_inverse(z, -x);
    return x + bergman_sqrt(x, x) * y;
}

Mat transvection_derivative(const Vec& x, const Vec& z)
{
    same_dim(x, z, "transvection_derivative");
    require_interior(x, "transvection_derivative");
    return bergman_sqrt(x, x) * bergman_inverse(z, -x);
}

Complex transvection_det_power(const Vec& x, const Vec& z, double s)
{
    const double p = static_cast<double>(x.size()) + 1.0;
    double dxx = 1.0 - x.squaredNorm();
    if (dxx <= 0.0)
        throw std::domain_error("transvection_det_power: x is not interior");
    Complex D = quasi_determinant(z, -x);
    if (std::abs(D) <= kQuasiEps)
        throw QuasiSingular("transvection_det_power: pair is not quasi-invertible");
    return std::pow(dxx, p * s / 2.0) * cpow(D, -p * s);
}

}  // namespace symdom
