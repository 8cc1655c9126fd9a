#include "symdom/kernels.hpp"

#include "symdom/cauchy.hpp"

#include <cmath>

namespace symdom {

Complex little_kernel(const LittleKernelParams& p, const Vec& z, const Vec& w, const Vec& zeta, const Vec& omega)
{
    Complex D = quasi_determinant(z, w);
    if (std::abs(D) <= kQuasiEps)
        throw QuasiSingular("little_kernel: (z,w) is not quasi-invertible");
    // (B^{-1}_{z,w} zeta | omega) = ((zeta|omega) + (zeta|w)(z|omega)/D) / D
    Complex inner = (pairing(zeta, omega) + pairing(zeta, w) * pairing(z, omega) / D) / D;
    return cpow(D, -p.nu) * cpow(inner, p.lambda) / factorial(p.lambda);
}

DoubledKernel little_kernel_handle(const LittleKernelParams& p)
{
    return [p](const Vec& z, const Vec& zeta, const Vec& w, const Vec& omega) {
        return little_kernel(p, z, w, zeta, omega);
    };
}

double monomial_norm_sq(double nu, const MultiIndex& I)
{
    if (nu <= 0.0)
        throw std::domain_error("monomial_norm_sq: nu must be positive");
    double poch = pochhammer(nu, I.degree());
    if (poch == 0.0)
        throw PochhammerPole("monomial_norm_sq: (nu)_k vanishes");
    return I.factorial() / poch;
}

std::vector<double> fk_expand(double nu, int N)
{
    if (N < 0)
        throw std::invalid_argument("fk_expand: negative truncation");
    return pochhammer_table(nu, N);
}

Complex fk_partial_sum(double nu, int N, const Vec& z, const Vec& w)
{
    Complex x = pairing(z, w);
    Complex term{1.0, 0.0};
    Complex sum = term;
    for (int k = 1; k <= N; ++k) {
        term *= (nu + k - 1) * x / static_cast<double>(k);
        sum += term;
    }
    return sum;
}

double fk_tail_bound(double nu, int N, double rho)
{
    const double r2 = rho * rho;
    if (r2 >= 1.0)
        return INFINITY;
    double term = 1.0;  // |(nu)_k| r2^k / k!
    for (int k = 1; k <= N; ++k)
        term *= std::abs(nu + k - 1) * r2 / k;
    double tail = 0.0;
    for (int k = N + 1; k < N + 1000000; ++k) {
        term *= std::abs(nu + k - 1) * r2 / k;
        tail += term;
        if (term <= 1e-18 * tail && std::abs(nu + k) * r2 / (k + 1) < 1.0)
            break;
    }
    return tail;
}

Complex little_action(const LittleKernelParams& p, const GroupElement& g, const Section& Phi, const Vec& z,
                      const Vec& zeta)
{
    const double genus = g.dim() + 1.0;
    return g.det_derivative_power(z, p.nu / genus) * Phi(g.apply(z), g.derivative(z) * zeta);
}

Section polynomial_section(const CPolynomial& Phi)
{
    return [Phi](const Vec& z, const Vec& zeta) {
        Vec x(z.size() + zeta.size());
        x << z, zeta;
        return evaluate(Phi, x);
    };
}

LittleKernelExpansion::LittleKernelExpansion(const LittleKernelParams& p, int kmax)
    : params(p), blocks(little_kernel_blocks<Complex>(p.d, Complex(p.nu), p.lambda, kmax))
{
}

Mat LittleKernelExpansion::block_matrix(const KernelBlock<Complex>& b)
{
    const auto m = static_cast<Eigen::Index>(b.size());
    Mat M(m, m);
    for (Eigen::Index r = 0; r < m; ++r)
        for (Eigen::Index c = 0; c < m; ++c)
            M(r, c) = b(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
    return M;
}

namespace {

Eigen::VectorXcd monomial_values(const std::vector<MultiIndex>& mons, const Vec& x)
{
    Eigen::VectorXcd v(static_cast<Eigen::Index>(mons.size()));
    for (std::size_t a = 0; a < mons.size(); ++a) {
        Complex m{1.0, 0.0};
        for (int i = 0; i < mons[a].dim(); ++i)
            m *= cpow(x(i), mons[a][i]);
        v(static_cast<Eigen::Index>(a)) = m;
    }
    return v;
}

Vec stack(const Vec& a, const Vec& b)
{
    Vec x(a.size() + b.size());
    x << a, b;
    return x;
}

}  // namespace

Complex LittleKernelExpansion::evaluate(const Vec& z, const Vec& w, const Vec& zeta, const Vec& omega) const
{
    Vec x = stack(z, zeta), y = stack(w, omega);
    Complex s{};
    for (const auto& b : blocks) {
        Eigen::VectorXcd u = monomial_values(b.monomials, x);
        Eigen::VectorXcd v = monomial_values(b.monomials, y);
        s += u.cwiseProduct(block_matrix(b) * v.conjugate()).sum();
    }
    return s;
}

CheckRecord check_little_covariance(const LittleKernelParams& p, const Vec& x, const CovarianceSamples& s,
                                    double tol)
{
    Rng rng(s.seed);
    const double genus = p.d + 1.0;
    GroupElement g = GroupElement::transvection(x);
    double max_rel = 0.0, max_mod = 0.0;
    for (int i = 0; i < s.count; ++i) {
        Vec z = random_ball_point(rng, p.d, s.radius);
        Vec w = random_ball_point(rng, p.d, s.radius);
        Vec zeta = random_vector(rng, p.d, s.fibre_scale);
        Vec omega = random_vector(rng, p.d, s.fibre_scale);
        Complex lhs = little_kernel(p, z, w, zeta, omega);
        Complex rhs = g.det_derivative_power(z, p.nu / genus) * std::conj(g.det_derivative_power(w, p.nu / genus)) *
                      little_kernel(p, g.apply(z), g.apply(w), g.derivative(z) * zeta, g.derivative(w) * omega);
        double scale = std::max(std::abs(lhs), 1e-300);
        max_rel = std::max(max_rel, std::abs(lhs - rhs) / scale);
        max_mod = std::max(max_mod, std::abs(std::abs(lhs) - std::abs(rhs)) / scale);
    }
    CheckRecord r;
    r.name = "little_covariance";
    r.anchor = "K_{gz,gw} = [g]_z K_{z,w} [g]_w^*";
    r.max_error = max_rel;
    r.tol = tol;
    r.pass = max_rel <= tol;
    r.details = {{"d", p.d}, {"nu", p.nu}, {"lambda", p.lambda}, {"samples", s.count}, {"modulus_error", max_mod}};
    return r;
}

CheckRecord check_reproducing(const LittleKernelParams& p, int cap, int trials, std::uint64_t seed, double tol)
{
    if (p.nu <= 0.0)
        throw std::domain_error("check_reproducing: nu must be positive");
    const int d = p.d;
    LittleKernelExpansion ex(p, cap);
    std::vector<Eigen::PartialPivLU<Mat>> gram;  // inner product on block k is C_k^{-1}
    for (const auto& b : ex.blocks)
        gram.emplace_back(LittleKernelExpansion::block_matrix(b));

    Rng rng(seed);
    const double zr = 0.5;
    std::vector<double> radii(static_cast<std::size_t>(2 * d), 1.0);
    std::vector<int> nodes(static_cast<std::size_t>(2 * d), p.lambda + 1);
    for (int i = 0; i < d; ++i) {
        radii[static_cast<std::size_t>(i)] = zr;
        nodes[static_cast<std::size_t>(i)] = 32;
    }
    auto keep = [&](const MultiIndex& I) {
        return I.slice(0, d).degree() <= cap && I.slice(d, d).degree() == p.lambda;
    };

    double max_err = 0.0;
    for (int t = 0; t < trials; ++t) {
        Vec w = t == 0 ? Vec(Vec::Zero(d)) : random_ball_point(rng, d, zr);
        Vec omega = random_vector(rng, d, 1.0);
        CPolynomial kw = torus_taylor(
            [&](const Vec& x) { return little_kernel(p, x.head(d), w, x.tail(d), omega); }, Vec::Zero(2 * d),
            radii, nodes, keep);
        for (int rep = 0; rep < 3; ++rep) {
            Complex lhs{};
            CPolynomial Phi(2 * d);
            for (std::size_t k = 0; k < ex.blocks.size(); ++k) {
                const auto& b = ex.blocks[k];
                const auto m = static_cast<Eigen::Index>(b.size());
                Eigen::VectorXcd a = Eigen::VectorXcd::Zero(m), kv(m);
                for (Eigen::Index i = 0; i < m; ++i) {
                    a(i) = random_vector(rng, 1, 1.0)(0);
                    Phi.add_term(b.monomials[static_cast<std::size_t>(i)], a(i));
                    kv(i) = kw.coefficient(b.monomials[static_cast<std::size_t>(i)]);
                }
                lhs += a.dot(gram[k].solve(kv));
            }
            Complex rhs = std::conj(evaluate(Phi, stack(w, omega)));
            max_err = std::max(max_err, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
        }
    }
    CheckRecord r;
    r.name = "reproducing";
    r.anchor = "(Phi | K_w eta) = (Phi_w | eta)";
    r.max_error = max_err;
    r.tol = tol;
    r.pass = max_err <= tol;
    r.details = {{"d", d}, {"nu", p.nu}, {"lambda", p.lambda}, {"cap", cap}, {"trials", trials}};
    return r;
}

}  // namespace symdom
