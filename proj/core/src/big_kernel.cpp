#include "symdom/intertwine.hpp"

#include <cmath>
#include <numbers>

namespace symdom {

namespace {

/// Truncated bivariate Taylor series sum_{j<=J, h<=H} c_{jh} t^j s^h.
class Jet2 {
public:
    Jet2(int J, int H, Complex c0 = {}) : J_(J), H_(H), c_(static_cast<std::size_t>((J + 1) * (H + 1)))
    {
        c_[0] = c0;
    }

    Complex& at(int j, int h) { return c_[static_cast<std::size_t>(j * (H_ + 1) + h)]; }
    Complex at(int j, int h) const { return c_[static_cast<std::size_t>(j * (H_ + 1) + h)]; }

    Jet2& operator+=(const Jet2& o)
    {
        for (std::size_t i = 0; i < c_.size(); ++i)
            c_[i] += o.c_[i];
        return *this;
    }
    Jet2& operator*=(Complex s)
    {
        for (auto& x : c_)
            x *= s;
        return *this;
    }
    friend Jet2 operator+(Jet2 a, const Jet2& b) { return a += b; }
    friend Jet2 operator*(Jet2 a, Complex s) { return a *= s; }

    friend Jet2 operator*(const Jet2& a, const Jet2& b)
    {
        Jet2 r(a.J_, a.H_);
        for (int j1 = 0; j1 <= a.J_; ++j1)
            for (int h1 = 0; h1 <= a.H_; ++h1) {
                Complex x = a.at(j1, h1);
                if (x == Complex{})
                    continue;
                for (int j2 = 0; j1 + j2 <= a.J_; ++j2)
                    for (int h2 = 0; h1 + h2 <= a.H_; ++h2)
                        r.at(j1 + j2, h1 + h2) += x * b.at(j2, h2);
            }
        return r;
    }

    /// f^alpha = f00^alpha sum_m C(alpha, m) u^m, u = f/f00 - 1 (nilpotent after truncation).
    Jet2 pow(double alpha) const
    {
        Complex f0 = at(0, 0);
        if (std::abs(f0) <= kQuasiEps)
            throw QuasiSingular("jet power: vanishing constant term");
        Jet2 u = *this * (1.0 / f0);
        u.at(0, 0) = 0.0;
        Jet2 r(J_, H_, 1.0);
        Jet2 um(J_, H_, 1.0);
        for (int m = 1; m <= J_ + H_; ++m) {
            um = um * u;
            r += um * binomial(alpha, m);
        }
        return r * cpow(f0, alpha);
    }

private:
    int J_, H_;
    std::vector<Complex> c_;
};

/// Jet of a + b t + c s + e t s.
Jet2 bilinear(int J, int H, Complex a, Complex b, Complex c, Complex e)
{
    Jet2 r(J, H, a);
    if (J >= 1)
        r.at(1, 0) = b;
    if (H >= 1)
        r.at(0, 1) = c;
    if (J >= 1 && H >= 1)
        r.at(1, 1) = e;
    return r;
}

/// sum_lambda c_lambda sum_{j,h} mu_j mu_h [t^j s^h] K^lambda(sigma(z + t zd), zf; w + conj(s) wd, wf).
Complex big_kernel_jet(const BigKernelParams& p, const Vec& z, const Vec& w, const Vec& zd, const Vec& zf,
                       const Vec& wd, const Vec& wf, Complex sigma)
{
    Complex total{};
    for (int lambda = 0; lambda <= p.n; ++lambda) {
        const double cl = p.c[static_cast<std::size_t>(lambda)];
        if (cl == 0.0)
            continue;
        auto mu = intertwiner_coeffs(p.nu, p.n, lambda);
        const int J = p.n - lambda;
        Jet2 delta = bilinear(J, J, 1.0 - sigma * pairing(z, w), -sigma * pairing(zd, w), -sigma * pairing(z, wd),
                              -sigma * pairing(zd, wd));
        Jet2 X = bilinear(J, J, pairing(zf, w), 0.0, pairing(zf, wd), 0.0);
        Jet2 Y = bilinear(J, J, sigma * pairing(z, wf), sigma * pairing(zd, wf), 0.0, 0.0);
        Jet2 inner = Jet2(J, J, pairing(zf, wf)) + X * Y * delta.pow(-1.0);
        Jet2 K = delta.pow(-p.nu - lambda) * inner.pow(lambda) * (1.0 / factorial(lambda));
        Complex s{};
        for (int j = 0; j <= J; ++j)
            for (int h = 0; h <= J; ++h)
                s += mu.mu[static_cast<std::size_t>(j)] * mu.mu[static_cast<std::size_t>(h)] * K.at(j, h);
        total += cl * s;
    }
    return total;
}

/// [I choose K] = prod_i C(I_i, K_i)
double multi_binomial(const MultiIndex& I, const MultiIndex& K)
{
    double r = 1.0;
    for (int i = 0; i < I.dim(); ++i)
        r *= binomial(I[i], K[i]);
    return r;
}

}  // namespace

Complex big_kernel_closed(const BigKernelParams& p, const Vec& z, const Vec& w, const Vec& zeta, const Vec& omega)
{
    p.validate();
    return big_kernel_jet(p, z, w, zeta, zeta, omega, omega, 1.0);
}

double big_kernel_tail_bound(const BigKernelParams& p, const Vec& z, const Vec& w, const Vec& zeta, const Vec& omega,
                             int N)
{
    // G(sigma) = sum_k sigma^k T_k, T_k the image of little-kernel block k; G is
    // analytic for |sigma| < 1/|(z|w)|, so |T_k| <= M(r) r^{-k}.
    const double a = std::abs(pairing(z, w));
    std::vector<double> radii;
    if (a < 1e-12) {
        for (double r = 2.0; r <= 1024.0; r *= 2.0)
            radii.push_back(r);
    } else {
        const double R = 1.0 / a;
        for (double th = 0.5; th < 0.999; th += 0.05)
            if (std::pow(R, th) > 1.0 + 1e-9)
                radii.push_back(std::pow(R, th));
    }
    double best = INFINITY;
    constexpr int kCircle = 64;
    for (double r : radii) {
        double M = 0.0;
        for (int j = 0; j < kCircle; ++j) {
            Complex sigma = std::polar(r, 2.0 * std::numbers::pi * (j + 0.5) / kCircle);
            M = std::max(M, std::abs(big_kernel_jet(p, z, w, zeta, zeta, omega, omega, sigma)));
        }
        // Factor 2 covers the gap between the sampled and the true maximum.
        double bound = 2.0 * M * std::pow(r, -(N + 1)) / (1.0 - 1.0 / r);
        best = std::min(best, bound);
    }
    return best;
}

BigKernel::BigKernel(const BigKernelParams& p, int N) : p_(p), N_(N)
{
    p_.validate();
    if (N < 0)
        throw std::invalid_argument("BigKernel: negative cap");
    for (int lambda = 0; lambda <= p_.n; ++lambda) {
        Level L{intertwiner_coeffs(p_.nu, p_.n, lambda), {}, {}};
        LittleKernelExpansion ex({p_.d, p_.nu, lambda}, N);
        for (const auto& b : ex.blocks) {
            L.monomials.push_back(b.monomials);
            L.coeff.push_back(LittleKernelExpansion::block_matrix(b));
        }
        levels_.push_back(std::move(L));
    }
}

Eigen::VectorXcd BigKernel::intertwined_values(const Level& L, std::size_t block, const Vec& z, const Vec& zeta) const
{
    const int d = p_.d;
    const auto& mons = L.monomials[block];
    Eigen::VectorXcd v(static_cast<Eigen::Index>(mons.size()));
    auto mono = [](const MultiIndex& I, const Vec& x) {
        Complex m{1.0, 0.0};
        for (int i = 0; i < I.dim(); ++i)
            m *= cpow(x(i), I[i]);
        return m;
    };
    for (std::size_t a = 0; a < mons.size(); ++a) {
        MultiIndex I = mons[a].slice(0, d), J = mons[a].slice(d, d);
        // (zeta|dbar)^j z^I / j! = sum_{|K|=j, K<=I} [I choose K] z^{I-K} zeta^K
        Complex s{};
        for (std::size_t j = 0; j < L.mu.mu.size() && static_cast<int>(j) <= I.degree(); ++j)
            for (const auto& K : homogeneous_indices(d, static_cast<int>(j)))
                if (K.divides(I))
                    s += L.mu.mu[j] * multi_binomial(I, K) * mono(I - K, z) * mono(K, zeta);
        v(static_cast<Eigen::Index>(a)) = s * mono(J, zeta);
    }
    return v;
}

BigKernelValue BigKernel::eval(const Vec& z, const Vec& w, const Vec& zeta, const Vec& omega) const
{
    Complex total{};
    for (std::size_t lambda = 0; lambda < levels_.size(); ++lambda) {
        const double cl = p_.c[lambda];
        if (cl == 0.0)
            continue;
        const Level& L = levels_[lambda];
        Complex s{};
        for (std::size_t k = 0; k < L.coeff.size(); ++k) {
            Eigen::VectorXcd u = intertwined_values(L, k, z, zeta);
            Eigen::VectorXcd v = intertwined_values(L, k, w, omega);
            s += u.cwiseProduct(L.coeff[k] * v.conjugate()).sum();
        }
        total += cl * s;
    }
    return {total, big_kernel_tail_bound(p_, z, w, zeta, omega, N_)};
}

Complex big_kernel_eval(const BigKernel& K, const Vec& z, const Vec& w, const Vec& zeta, const Vec& omega, double tol)
{
    BigKernelValue v = K.eval(z, w, zeta, omega);
    if (!(v.tail_bound <= tol))
        throw std::runtime_error("big_kernel_eval: tail bound " + std::to_string(v.tail_bound) +
                                 " exceeds tolerance at cap " + std::to_string(K.cap()));
    return v.value;
}

Complex big_action(const BigKernelParams& p, const GroupElement& g, const Section& Psi, const Vec& z,
                   const Vec& zeta)
{
    const double genus = g.dim() + 1.0;
    Vec gz = g.apply(z);
    return g.det_derivative_power(z, (p.nu + p.n) / genus) * g.det_derivative_power(z + zeta, -p.n / genus) *
           Psi(gz, g.apply(z + zeta) - gz);
}

CheckRecord check_big_covariance(const BigKernelParams& p, const Vec& x, const CovarianceSamples& s, double tol,
                                 int truncation_cap)
{
    p.validate();
    Rng rng(s.seed);
    const double genus = p.d + 1.0;
    GroupElement g = GroupElement::transvection(x);
    std::optional<BigKernel> trunc;
    if (truncation_cap > 0)
        trunc.emplace(p, truncation_cap);
    auto K = [&](const Vec& z, const Vec& w, const Vec& zeta, const Vec& omega) {
        return trunc ? trunc->eval(z, w, zeta, omega).value : big_kernel_closed(p, z, w, zeta, omega);
    };
    auto J = [&](const Vec& z, const Vec& zeta) {
        return g.det_derivative_power(z, (p.nu + p.n) / genus) * g.det_derivative_power(z + zeta, -p.n / genus);
    };
    double max_rel = 0.0, max_mod = 0.0;
    for (int i = 0; i < s.count; ++i) {
        Vec z = random_ball_point(rng, p.d, s.radius);
        Vec w = random_ball_point(rng, p.d, s.radius);
        Vec zeta = random_vector(rng, p.d, s.fibre_scale);
        Vec omega = random_vector(rng, p.d, s.fibre_scale);
        Complex lhs = K(z, w, zeta, omega);
        Vec gz = g.apply(z), gw = g.apply(w);
        Complex rhs = J(z, zeta) * std::conj(J(w, omega)) * K(gz, gw, g.apply(z + zeta) - gz, g.apply(w + omega) - gw);
        double scale = std::max(std::abs(lhs), 1e-300);
        max_rel = std::max(max_rel, std::abs(lhs - rhs) / scale);
        max_mod = std::max(max_mod, std::abs(std::abs(lhs) - std::abs(rhs)) / scale);
    }
    CheckRecord r;
    r.name = "big_covariance";
    r.anchor = "K^{nu,c} covariance under the big-space action";
    r.max_error = max_rel;
    r.tol = tol;
    r.pass = max_rel <= tol;
    r.details = {{"d", p.d},
                 {"nu", p.nu},
                 {"n", p.n},
                 {"c", p.c},
                 {"samples", s.count},
                 {"modulus_error", max_mod},
                 {"evaluation", trunc ? "truncated" : "closed"}};
    if (trunc)
        r.details["cap"] = truncation_cap;
    return r;
}

}  // namespace symdom
