#pragma once

#include <vector>

namespace symdom {

struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Gauss-Jacobi rule for int_{-1}^{1} (1-y)^alpha (1+y)^beta g(y) dy via the
/// Golub-Welsch eigenvalue problem. alpha, beta > -1.
QuadratureRule gauss_jacobi(int n, double alpha, double beta);

/// Rule for int_0^1 (1-u)^alpha g(u) du.
QuadratureRule gauss_jacobi_unit(int n, double alpha);

}  // namespace symdom
