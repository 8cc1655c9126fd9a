#pragma once

#include "symdom/kernels.hpp"

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace symdom {

/// mu_k = (lambda-n)_k / (nu+2 lambda)_k, k = 0..n-lambda: the coefficient of
/// (zeta|dbar)^k / k! in I_lambda.
struct IntertwinerCoeffs {
    double nu = 0.0;
    int n = 0;
    int lambda = 0;
    std::vector<double> mu;
};

IntertwinerCoeffs intertwiner_coeffs(double nu, int n, int lambda);

/// sum_k mu_k/k! ((zeta|dbar)^k f)(z) q(zeta) for polynomial f.
Complex apply_intertwiner(const IntertwinerCoeffs& c, const CPolynomial& f, const CPolynomial& q, const Vec& z,
                          const Vec& zeta);

/// Same for holomorphic f, differentiated by Cauchy integrals.
Complex apply_intertwiner(const IntertwinerCoeffs& c, const HoloFn& f, const CPolynomial& q, const Vec& z,
                          const Vec& zeta, const CauchyOptions& opt = {});

/// General section: sum_k mu_k/k! d^k/dt^k Phi(z + t zeta, zeta) at t = 0.
Complex apply_intertwiner(const IntertwinerCoeffs& c, const Section& Phi, const Vec& z, const Vec& zeta,
                          const CauchyOptions& opt = {});

/// I_lambda on a polynomial section in 2d variables (z, zeta), exactly.
CPolynomial intertwine_polynomial(const IntertwinerCoeffs& c, const CPolynomial& Phi);

/// (K_w q)_z(zeta) = Delta_{z,w}^{-nu} q(B^{-1}_{z,w} zeta)
Complex kernel_section(const LittleKernelParams& p, const Vec& w, const CPolynomial& q, const Vec& z,
                       const Vec& zeta);

/// Delta^n_{z+zeta,w} / Delta^{nu+n}_{z,w} q((z+zeta)^w - z^w)
Complex intertwiner_on_kernel(double nu, int n, const Vec& w, const CPolynomial& q, const Vec& z, const Vec& zeta);

enum class KappaVariant { Theorem, Proof };

std::string to_string(KappaVariant v);
KappaVariant kappa_variant_from_string(const std::string& s);

/// Lower-triangular kappa^lambda_l(nu), rows l, columns lambda.
Eigen::MatrixXd kappa_matrix(double nu, int n, KappaVariant v);

/// a^lambda_l = kappa^lambda_l l! / lambda!
Eigen::MatrixXd a_matrix(double nu, int n, KappaVariant v);

/// sum_m a_m (zeta|omega)^m
struct KInvariantKernel {
    std::vector<double> a;

    Complex evaluate(const Vec& zeta, const Vec& omega) const;
};

struct BigKernelParams {
    int d = 1;
    double nu = 1.0;
    int n = 0;
    std::vector<double> c;  ///< c_0..c_n

    void validate() const;
};

/// a_l = sum_lambda kappa^lambda_l c_lambda / lambda!
KInvariantKernel big_kernel_origin(const BigKernelParams& p, KappaVariant v);

/// Orthonormalize each little space (Cholesky of the kernel Gram) and sum
/// |(I_lambda e_i)_0|^2 weighted by c_lambda. Exact at the origin for N >= n.
KInvariantKernel big_kernel_origin_oracle(const BigKernelParams& p, int N);

struct KappaResolution {
    KInvariantKernel oracle;
    KInvariantKernel theorem;
    KInvariantKernel proof;
    double theorem_error = 0.0;
    double proof_error = 0.0;
    /// "theorem", "proof", "both" or "none" at the given tolerance.
    std::string selected;
};

KappaResolution resolve_kappa_variant(const BigKernelParams& p, double tol);

/// K^{nu,c} in doubled variables from the closed form of each little kernel:
/// sum_lambda c_lambda sum_{j,h} mu_j mu_h [t^j s^h] K^lambda(z + t zeta, zeta; w + s omega, omega).
Complex big_kernel_closed(const BigKernelParams& p, const Vec& z, const Vec& w, const Vec& zeta, const Vec& omega);

struct BigKernelValue {
    Complex value;
    double tail_bound = 0.0;
};

/// Truncated orthonormal-basis sum over little-space monomials of z-degree <= N.
class BigKernel {
public:
    BigKernel(const BigKernelParams& p, int N);

    const BigKernelParams& params() const { return p_; }
    int cap() const { return N_; }

    /// Value of the truncated sum and a Cauchy-estimate bound on the omitted blocks.
    BigKernelValue eval(const Vec& z, const Vec& w, const Vec& zeta, const Vec& omega) const;

private:
    struct Level {
        IntertwinerCoeffs mu;
        std::vector<std::vector<MultiIndex>> monomials;  ///< per block
        std::vector<Mat> coeff;                         ///< per block
    };
    Eigen::VectorXcd intertwined_values(const Level& L, std::size_t block, const Vec& z, const Vec& zeta) const;

    BigKernelParams p_;
    int N_;
    std::vector<Level> levels_;
};

/// Truncated big kernel; throws std::runtime_error when the tail bound exceeds tol.
Complex big_kernel_eval(const BigKernel& K, const Vec& z, const Vec& w, const Vec& zeta, const Vec& omega,
                        double tol);

/// Cauchy-estimate bound for the blocks of z-degree > N.
double big_kernel_tail_bound(const BigKernelParams& p, const Vec& z, const Vec& w, const Vec& zeta, const Vec& omega,
                             int N);

/// K(z,w,zeta,omega) = J(z,zeta) conj(J(w,omega)) K(gz, gw, g(z+zeta)-gz, g(w+omega)-gw),
/// J(z,zeta) = det(d_z g)^{(nu+n)/p} det(d_{z+zeta} g)^{-n/p}, g = gamma_x.
/// `truncation_cap` > 0 evaluates both sides with the truncated basis sum.
CheckRecord check_big_covariance(const BigKernelParams& p, const Vec& x, const CovarianceSamples& s, double tol,
                                 int truncation_cap = 0);

/// Big-space action: det(d_z g)^{(nu+n)/p} det(d_{z+zeta} g)^{-n/p} Psi_{g z}(g(z+zeta) - g z).
Complex big_action(const BigKernelParams& p, const GroupElement& g, const Section& Psi, const Vec& z,
                   const Vec& zeta);

struct DiskQuadrature {
    int radial = 200;
    int angular = 256;
};

/// d = 1 integral intertwiner with weight (1-|x|^2)^{nu-2} dA(x).
Complex intertwine_integral_disk(double nu, int n, int lambda, const CPolynomial& f, const CPolynomial& q,
                                 Complex z, Complex zeta, const DiskQuadrature& quad = {});

}  // namespace symdom
