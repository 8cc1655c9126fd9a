#pragma once

// Independent reference computations shared by the unit and acceptance tests.

#include "symdom/cauchy.hpp"
#include "symdom/group.hpp"
#include "symdom/poly.hpp"
#include "symdom/quadrature.hpp"
#include "symdom/sampling.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <random>

namespace symdom::test {

/// Gauss-Hermite rule for int exp(-x^2) g(x) dx (Golub-Welsch).
inline QuadratureRule gauss_hermite(int n)
{
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
    for (int k = 1; k < n; ++k)
        J(k, k - 1) = J(k - 1, k) = std::sqrt(k / 2.0);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
    QuadratureRule r;
    for (int i = 0; i < n; ++i) {
        r.nodes.push_back(es.eigenvalues()(i));
        double v = es.eigenvectors()(0, i);
        r.weights.push_back(std::sqrt(M_PI) * v * v);
    }
    return r;
}

/// Random polynomial with coefficients in the unit square: all degrees <= deg,
/// or only degree deg when `homogeneous`.
inline CPolynomial random_poly(Rng& rng, int d, int deg, bool homogeneous)
{
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    CPolynomial p(d);
    for (const auto& I : graded_indices(d, deg))
        if (!homogeneous || I.degree() == deg)
            p.add_term(I, Complex(u(rng), u(rng)));
    return p;
}

/// d^k/dt^k f(z + t zeta) at t = 0 from Taylor coefficients on a circle; an
/// alternative to contract_derivative with different radius and node count.
inline Complex line_derivative_oracle(const HoloFn& f, const Vec& z, const Vec& zeta, int k, double radius = 0.05)
{
    CPolynomial c = torus_taylor([&](const Vec& t) { return f(z + t(0) * zeta); }, Vec::Zero(1), {radius}, {48},
                                 [&](const MultiIndex& I) { return I[0] == k; });
    Complex a = c.coefficient(MultiIndex{k});
    double fac = 1.0;
    for (int j = 2; j <= k; ++j)
        fac *= j;
    return a * fac;
}

}  // namespace symdom::test
