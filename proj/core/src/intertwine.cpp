#include "symdom/intertwine.hpp"

#include "symdom/quadrature.hpp"

#include <cmath>
#include <numbers>

namespace symdom {

IntertwinerCoeffs intertwiner_coeffs(double nu, int n, int lambda)
{
    if (lambda < 0 || lambda > n)
        throw std::invalid_argument("intertwiner_coeffs: need 0 <= lambda <= n");
    IntertwinerCoeffs c{nu, n, lambda, {1.0}};
    for (int k = 1; k <= n - lambda; ++k) {
        double den = nu + 2 * lambda + k - 1;
        if (den == 0.0)
            throw PochhammerPole("intertwiner_coeffs: (nu+2 lambda)_k vanishes");
        c.mu.push_back(c.mu.back() * (lambda - n + k - 1) / den);
    }
    return c;
}

Complex apply_intertwiner(const IntertwinerCoeffs& c, const CPolynomial& f, const CPolynomial& q, const Vec& z,
                          const Vec& zeta)
{
    Complex s{};
    for (std::size_t k = 0; k < c.mu.size(); ++k)
        s += c.mu[k] / factorial(static_cast<int>(k)) * contract_derivative(zeta, f, z, static_cast<int>(k));
    return s * evaluate(q, zeta);
}

Complex apply_intertwiner(const IntertwinerCoeffs& c, const HoloFn& f, const CPolynomial& q, const Vec& z,
                          const Vec& zeta, const CauchyOptions& opt)
{
    auto der = line_derivatives(zeta, f, z, static_cast<int>(c.mu.size()) - 1, opt);
    Complex s{};
    for (std::size_t k = 0; k < c.mu.size(); ++k)
        s += c.mu[k] / factorial(static_cast<int>(k)) * der[k];
    return s * evaluate(q, zeta);
}

Complex apply_intertwiner(const IntertwinerCoeffs& c, const Section& Phi, const Vec& z, const Vec& zeta,
                          const CauchyOptions& opt)
{
    HoloFn along = [&](const Vec& x) { return Phi(x, zeta); };
    auto der = line_derivatives(zeta, along, z, static_cast<int>(c.mu.size()) - 1, opt);
    Complex s{};
    for (std::size_t k = 0; k < c.mu.size(); ++k)
        s += c.mu[k] / factorial(static_cast<int>(k)) * der[k];
    return s;
}

CPolynomial intertwine_polynomial(const IntertwinerCoeffs& c, const CPolynomial& Phi)
{
    const int D = Phi.dim();
    if (D % 2 != 0)
        throw std::invalid_argument("intertwine_polynomial: expected variables (z, zeta)");
    const int d = D / 2;
    CPolynomial out = Phi;
    CPolynomial term = Phi;
    for (std::size_t k = 1; k < c.mu.size(); ++k) {
        // term <- (zeta|dbar_z) term / k
        CPolynomial next(D);
        for (int i = 0; i < d; ++i)
            next += term.derivative(i) * CPolynomial::variable(D, d + i);
        term = next * Complex(1.0 / static_cast<double>(k));
        out += term * Complex(c.mu[k]);
    }
    return out;
}

Complex kernel_section(const LittleKernelParams& p, const Vec& w, const CPolynomial& q, const Vec& z,
                       const Vec& zeta)
{
    Complex D = quasi_determinant(z, w);
    if (std::abs(D) <= kQuasiEps)
        throw QuasiSingular("kernel_section: (z,w) is not quasi-invertible");
    return cpow(D, -p.nu) * evaluate(q, bergman_inverse(z, w) * zeta);
}

Complex intertwiner_on_kernel(double nu, int n, const Vec& w, const CPolynomial& q, const Vec& z, const Vec& zeta)
{
    Vec zz = z + zeta;
    Complex D1 = quasi_determinant(zz, w);
    Complex D0 = quasi_determinant(z, w);
    Vec diff = quasi_inverse(zz, w) - quasi_inverse(z, w);
    return cpow(D1, n) * cpow(D0, -(nu + n)) * evaluate(q, diff);
}

std::string to_string(KappaVariant v)
{
    return v == KappaVariant::Theorem ? "theorem" : "proof";
}

KappaVariant kappa_variant_from_string(const std::string& s)
{
    if (s == "theorem")
        return KappaVariant::Theorem;
    if (s == "proof")
        return KappaVariant::Proof;
    throw std::invalid_argument("unknown kappa variant '" + s + "'");
}

Eigen::MatrixXd kappa_matrix(double nu, int n, KappaVariant v)
{
    if (n < 0)
        throw std::invalid_argument("kappa_matrix: negative level");
    Eigen::MatrixXd K = Eigen::MatrixXd::Zero(n + 1, n + 1);
    for (int lambda = 0; lambda <= n; ++lambda) {
        auto c = intertwiner_coeffs(nu, n, lambda);
        for (int l = lambda; l <= n; ++l) {
            const int m = l - lambda;
            const double top = v == KappaVariant::Theorem ? nu + lambda - 1 : nu + l - 1;
            double s = 0.0;
            for (int p = 0; p <= m; ++p)
                s += binomial(top, p) * binomial(lambda, m - p);
            K(l, lambda) = c.mu[static_cast<std::size_t>(m)] * c.mu[static_cast<std::size_t>(m)] * s;
        }
    }
    return K;
}

Eigen::MatrixXd a_matrix(double nu, int n, KappaVariant v)
{
    Eigen::MatrixXd A = kappa_matrix(nu, n, v);
    for (int l = 0; l <= n; ++l)
        for (int lambda = 0; lambda <= l; ++lambda)
            A(l, lambda) *= factorial(l) / factorial(lambda);
    return A;
}

Complex KInvariantKernel::evaluate(const Vec& zeta, const Vec& omega) const
{
    Complex x = pairing(zeta, omega);
    Complex s{}, pw{1.0, 0.0};
    for (double am : a) {
        s += am * pw;
        pw *= x;
    }
    return s;
}

void BigKernelParams::validate() const
{
    if (d <= 0)
        throw std::invalid_argument("BigKernelParams: d must be positive");
    if (n < 0)
        throw std::invalid_argument("BigKernelParams: n must be non-negative");
    if (static_cast<int>(c.size()) != n + 1)
        throw std::invalid_argument("BigKernelParams: need n+1 weights c_0..c_n");
    for (double ci : c)
        if (!(ci >= 0.0))
            throw std::invalid_argument("BigKernelParams: weights must be non-negative");
}

KInvariantKernel big_kernel_origin(const BigKernelParams& p, KappaVariant v)
{
    p.validate();
    Eigen::MatrixXd K = kappa_matrix(p.nu, p.n, v);
    KInvariantKernel out;
    for (int l = 0; l <= p.n; ++l) {
        double s = 0.0;
        for (int lambda = 0; lambda <= l; ++lambda)
            s += K(l, lambda) * p.c[static_cast<std::size_t>(lambda)] / factorial(lambda);
        out.a.push_back(s);
    }
    return out;
}

KInvariantKernel big_kernel_origin_oracle(const BigKernelParams& p, int N)
{
    p.validate();
    if (N < p.n)
        throw std::invalid_argument("big_kernel_origin_oracle: need N >= n");
    const int d = p.d;
    KInvariantKernel out;
    out.a.assign(static_cast<std::size_t>(p.n) + 1, 0.0);
    for (int lambda = 0; lambda <= p.n; ++lambda) {
        auto mu = intertwiner_coeffs(p.nu, p.n, lambda);
        LittleKernelExpansion ex({d, p.nu, lambda}, N);
        for (const auto& b : ex.blocks) {
            Mat C = LittleKernelExpansion::block_matrix(b);
            Eigen::LLT<Mat> llt(C);
            if (llt.info() != Eigen::Success)
                throw std::domain_error("big_kernel_origin_oracle: little-space Gram is not positive definite");
            Mat L = llt.matrixL();
            const int l = lambda + b.k;
            // (I_lambda e_i)_0(zeta) keeps only the full contraction of z^I: mu_k zeta^{I+J}.
            const double muk = b.k < static_cast<int>(mu.mu.size()) ? mu.mu[static_cast<std::size_t>(b.k)] : 0.0;
            if (muk == 0.0 || l > p.n)
                continue;
            // Coefficient of zeta_1^l conj(omega_1)^l in sum_i v_i(zeta) conj(v_i(omega)).
            MultiIndex target(2 * d);
            target[0] = b.k;
            target[d] = lambda;
            double acc = 0.0;
            for (std::size_t a = 0; a < b.size(); ++a) {
                if (!(b.monomials[a] == target))
                    continue;
                for (Eigen::Index i = 0; i < L.cols(); ++i)
                    acc += std::norm(muk * L(static_cast<Eigen::Index>(a), i));
            }
            out.a[static_cast<std::size_t>(l)] += p.c[static_cast<std::size_t>(lambda)] * acc;
        }
    }
    return out;
}

KappaResolution resolve_kappa_variant(const BigKernelParams& p, double tol)
{
    KappaResolution r;
    r.oracle = big_kernel_origin_oracle(p, p.n);
    r.theorem = big_kernel_origin(p, KappaVariant::Theorem);
    r.proof = big_kernel_origin(p, KappaVariant::Proof);
    for (std::size_t l = 0; l < r.oracle.a.size(); ++l) {
        double scale = std::max(1.0, std::abs(r.oracle.a[l]));
        r.theorem_error = std::max(r.theorem_error, std::abs(r.theorem.a[l] - r.oracle.a[l]) / scale);
        r.proof_error = std::max(r.proof_error, std::abs(r.proof.a[l] - r.oracle.a[l]) / scale);
    }
    bool t = r.theorem_error <= tol, q = r.proof_error <= tol;
    r.selected = t && q ? "both" : t ? "theorem" : q ? "proof" : "none";
    return r;
}

}  // namespace symdom

namespace symdom {

Complex intertwine_integral_disk(double nu, int n, int lambda, const CPolynomial& f, const CPolynomial& q,
                                 Complex z, Complex zeta, const DiskQuadrature& quad)
{
    if (f.dim() != 1 || q.dim() != 1)
        throw std::invalid_argument("intertwine_integral_disk: d = 1 only");
    if (nu <= 1.0)
        throw std::domain_error("intertwine_integral_disk: need nu > 1");
    if (lambda < 0 || lambda > n || !q.is_homogeneous(lambda))
        throw std::invalid_argument("intertwine_integral_disk: q must be homogeneous of degree lambda <= n");
    if (quad.radial <= 0 || quad.angular <= 0)
        throw std::invalid_argument("intertwine_integral_disk: empty quadrature");
    // x = sqrt(u) e^{i theta}, dA = du dtheta / 2, weight (1-u)^{nu-2}.
    QuadratureRule radial = gauss_jacobi_unit(quad.radial, nu - 2.0);
    const Complex zz = z + zeta;
    Complex total{};
    for (std::size_t i = 0; i < radial.nodes.size(); ++i) {
        const double u = radial.nodes[i];
        const double r = std::sqrt(u);
        const double bxx = (1.0 - u) * (1.0 - u);
        Complex ring{};
        for (int j = 0; j < quad.angular; ++j) {
            Complex x = std::polar(r, 2.0 * std::numbers::pi * j / quad.angular);
            Complex xb = std::conj(x);
            Complex d1 = 1.0 - zz * xb, d0 = 1.0 - z * xb;
            Complex eta = bxx * (zz / d1 - z / d0);
            ring += cpow(d1, n) * cpow(d0, -(nu + n)) * f.evaluate<Complex>(std::vector<Complex>{x}) *
                    q.evaluate<Complex>(std::vector<Complex>{eta});
        }
        total += radial.weights[i] * ring * (std::numbers::pi / quad.angular);
    }
    return total;
}

}  // namespace symdom
