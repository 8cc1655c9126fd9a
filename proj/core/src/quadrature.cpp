#include "symdom/quadrature.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <stdexcept>

namespace symdom {

QuadratureRule gauss_jacobi(int n, double alpha, double beta)
{
    if (n <= 0)
        throw std::invalid_argument("gauss_jacobi: need at least one node");
    if (alpha <= -1.0 || beta <= -1.0)
        throw std::domain_error("gauss_jacobi: alpha, beta must exceed -1");
    const double ab = alpha + beta;
    Eigen::VectorXd diag(n), off(n > 1 ? n - 1 : 0);
    diag(0) = (beta - alpha) / (ab + 2.0);
    for (int k = 1; k < n; ++k) {
        const double t = 2.0 * k + ab;
        diag(k) = (beta * beta - alpha * alpha) / (t * (t + 2.0));
        off(k - 1) = std::sqrt(4.0 * k * (k + alpha) * (k + beta) * (k + ab) / (t * t * (t + 1.0) * (t - 1.0)));
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, off, Eigen::ComputeEigenvectors);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("gauss_jacobi: eigensolver failed");
    const double mu0 = std::exp((ab + 1.0) * std::log(2.0) + std::lgamma(alpha + 1.0) + std::lgamma(beta + 1.0) -
                                std::lgamma(ab + 2.0));
    QuadratureRule r;
    for (int i = 0; i < n; ++i) {
        r.nodes.push_back(es.eigenvalues()(i));
        double v0 = es.eigenvectors()(0, i);
        r.weights.push_back(mu0 * v0 * v0);
    }
    return r;
}

QuadratureRule gauss_jacobi_unit(int n, double alpha)
{
    QuadratureRule r = gauss_jacobi(n, alpha, 0.0);
    const double scale = std::pow(2.0, -alpha - 1.0);
    for (std::size_t i = 0; i < r.nodes.size(); ++i) {
        r.nodes[i] = 0.5 * (1.0 + r.nodes[i]);
        r.weights[i] *= scale;
    }
    return r;
}

}  // namespace symdom
