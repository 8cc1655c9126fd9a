#pragma once

#include "symdom/expansion.hpp"
#include "symdom/group.hpp"
#include "symdom/report.hpp"
#include "symdom/sampling.hpp"

#include <functional>

namespace symdom {

struct LittleKernelParams {
    int d = 1;
    double nu = 1.0;
    int lambda = 0;
};

/// Base point z in the ball and fibre argument zeta.
struct JetPoint {
    Vec z;
    Vec zeta;
};

/// Section of a vector bundle over the ball, evaluated through the fibre
/// argument: (z, zeta) -> Phi_z(zeta).
using Section = std::function<Complex(const Vec& z, const Vec& zeta)>;

/// Scalar kernel in doubled variables (z, zeta; w, omega).
using DoubledKernel = std::function<Complex(const Vec& z, const Vec& zeta, const Vec& w, const Vec& omega)>;

/// Delta_{z,w}^{-nu} E^lambda(B^{-1}_{z,w} zeta, omega)
Complex little_kernel(const LittleKernelParams& p, const Vec& z, const Vec& w, const Vec& zeta, const Vec& omega);

DoubledKernel little_kernel_handle(const LittleKernelParams& p);

/// ||z^I||^2 = I! / (nu)_{|I|} in the scalar space with kernel Delta^{-nu}.
double monomial_norm_sq(double nu, const MultiIndex& I);

/// ((nu)_k)_{k <= N}: Delta^{-nu} = sum_k (nu)_k E^k.
std::vector<double> fk_expand(double nu, int N);
Complex fk_partial_sum(double nu, int N, const Vec& z, const Vec& w);
/// sum_{k > N} |(nu)_k| rho^{2k} / k!, summed until the terms are negligible.
double fk_tail_bound(double nu, int N, double rho);

/// (g^{-lambda_nu} Phi)_z(zeta) = det(d_z g)^{nu/p} Phi_{g(z)}((d_z g) zeta)
Complex little_action(const LittleKernelParams& p, const GroupElement& g, const Section& Phi, const Vec& z,
                      const Vec& zeta);

/// Polynomial section in 2d variables (z, zeta).
Section polynomial_section(const CPolynomial& Phi);

/// The same blocks as little_kernel_blocks, in floating point.
struct LittleKernelExpansion {
    LittleKernelParams params;
    std::vector<KernelBlock<Complex>> blocks;

    LittleKernelExpansion(const LittleKernelParams& p, int kmax);
    static Mat block_matrix(const KernelBlock<Complex>& b);
    /// Truncated sum over blocks 0..kmax.
    Complex evaluate(const Vec& z, const Vec& w, const Vec& zeta, const Vec& omega) const;
};

struct CovarianceSamples {
    int count = 20;
    std::uint64_t seed = 7;
    double radius = 0.8;      ///< base points
    double fibre_scale = 1.0; ///< fibre arguments
};

/// K_{z,w}(zeta,omega) = det(J_z)^{nu/p} conj(det J_w)^{nu/p} K_{gz,gw}(J_z zeta, J_w omega),
/// J = d gamma_x. Reports the relative error and the modulus-only error.
CheckRecord check_little_covariance(const LittleKernelParams& p, const Vec& x, const CovarianceSamples& s,
                                    double tol);

/// (Phi | K_w eta) = (Phi_w | eta) for random polynomial sections of z-degree <= cap.
/// The inner product comes from the inverse Gram of the kernel expansion and
/// K_w eta from Taylor coefficients of the closed form, so the two sides use
/// independent code paths.
CheckRecord check_reproducing(const LittleKernelParams& p, int cap, int trials, std::uint64_t seed, double tol);

}  // namespace symdom
