#include "oracles.hpp"

#include "symdom/checks.hpp"
#include "symdom/exact.hpp"
#include "symdom/intertwine.hpp"
#include "symdom/quadrature.hpp"

#include <doctest.h>

using namespace symdom;

namespace {

/// Origin coefficients in d = 1 from the orthogonal basis z^k zeta^lambda,
/// ||z^k zeta^lambda||^2 = k! lambda! / (nu + 2 lambda)_k, in exact arithmetic:
/// a_l = sum_lambda c_lambda mu_{l-lambda}^2 (nu+2 lambda)_{l-lambda} / ((l-lambda)! lambda!).
std::vector<Rational> origin_oracle_d1(const Rational& nu, int n, const std::vector<Rational>& c)
{
    std::vector<Rational> a(static_cast<std::size_t>(n) + 1, Rational(0));
    for (int lambda = 0; lambda <= n; ++lambda)
        for (int k = 0; lambda + k <= n; ++k) {
            Rational shift = nu + 2 * lambda;
            Rational mu = pochhammer_exact(Rational(lambda - n), k) / pochhammer_exact(shift, k);
            a[static_cast<std::size_t>(lambda + k)] += c[static_cast<std::size_t>(lambda)] * mu * mu *
                                                       pochhammer_exact(shift, k) /
                                                       (factorial_exact(k) * factorial_exact(lambda));
        }
    return a;
}

}  // namespace

TEST_CASE("intertwiner coefficients")
{
    auto c = intertwiner_coeffs(4.0, 3, 1);
    REQUIRE(c.mu.size() == 3);
    CHECK(c.mu[0] == 1.0);
    CHECK(c.mu[1] == doctest::Approx(-2.0 / 6.0));
    CHECK(c.mu[2] == doctest::Approx((-2.0 * -1.0) / (6.0 * 7.0)));
    CHECK(intertwiner_coeffs(4.0, 2, 2).mu.size() == 1);
    CHECK_THROWS_AS(intertwiner_coeffs(-1.0, 2, 0), PochhammerPole);
    CHECK_THROWS_AS(intertwiner_coeffs(4.0, 1, 2), std::invalid_argument);
}

TEST_CASE("kappa proof variant matches the exact d = 1 origin oracle")
{
    for (auto [num, den, n] : std::vector<std::tuple<int, int, int>>{{5, 2, 1}, {3, 1, 3}, {7, 3, 2}}) {
        Rational nu(num, den);
        std::vector<Rational> c;
        std::vector<double> cd;
        for (int l = 0; l <= n; ++l) {
            c.emplace_back(l + 2, 3);
            cd.push_back(static_cast<double>(c.back()));
        }
        auto exact = origin_oracle_d1(nu, n, c);
        auto a = big_kernel_origin({1, static_cast<double>(nu), n, cd}, KappaVariant::Proof).a;
        for (int l = 0; l <= n; ++l)
            CHECK(a[static_cast<std::size_t>(l)] ==
                  doctest::Approx(static_cast<double>(exact[static_cast<std::size_t>(l)])).epsilon(1e-13));
    }
    // d = 1, n = 1: a_1 = c_0 / nu + c_1
    auto a = big_kernel_origin({1, 2.5, 1, {0.7, 1.3}}, KappaVariant::Proof).a;
    CHECK(a[1] == doctest::Approx(0.7 / 2.5 + 1.3));
}

TEST_CASE("kappa variants differ off the diagonal and resolve to proof")
{
    Eigen::MatrixXd t = kappa_matrix(2.5, 2, KappaVariant::Theorem), p = kappa_matrix(2.5, 2, KappaVariant::Proof);
    CHECK((t.diagonal() - p.diagonal()).cwiseAbs().maxCoeff() < 1e-15);
    CHECK((t - p).cwiseAbs().maxCoeff() > 1e-3);
    CHECK(t.isLowerTriangular());
    auto r = resolve_kappa_variant({2, 4.0, 2, {1.0, 0.5, 2.0}}, 1e-10);
    CHECK(r.selected == "proof");
    CHECK(kappa_variant_from_string(to_string(KappaVariant::Theorem)) == KappaVariant::Theorem);
    CHECK_THROWS(kappa_variant_from_string("other"));
}

TEST_CASE("intertwiner: polynomial, holomorphic and section routes agree")
{
    Rng rng(3);
    auto mu = intertwiner_coeffs(4.0, 3, 1);
    CPolynomial f = test::random_poly(rng, 2, 4, false), q = test::random_poly(rng, 2, 1, true);
    Vec z = random_ball_point(rng, 2, 0.5), zeta = random_vector(rng, 2, 0.5);
    Complex a = apply_intertwiner(mu, f, q, z, zeta);
    Complex b = apply_intertwiner(mu, HoloFn([&](const Vec& x) { return evaluate(f, x); }), q, z, zeta);
    CPolynomial Phi = f.embed(4, 0) * q.embed(4, 2);
    Complex c = apply_intertwiner(mu, polynomial_section(Phi), z, zeta);
    Vec zz(4);
    zz << z, zeta;
    Complex e = evaluate(intertwine_polynomial(mu, Phi), zz);
    CHECK(std::abs(a - b) < 1e-10 * std::abs(a));
    CHECK(std::abs(a - c) < 1e-10 * std::abs(a));
    CHECK(std::abs(a - e) < 1e-12 * std::abs(a));
}

TEST_CASE("kernel sections")
{
    Rng rng(4);
    LittleKernelParams p{2, 4.0, 2};
    Vec w = random_ball_point(rng, 2, 0.6), omega = random_vector(rng, 2);
    Vec z = random_ball_point(rng, 2, 0.6), zeta = random_vector(rng, 2);
    CPolynomial q = e_kernel_poly(2, omega);
    CHECK(std::abs(kernel_section(p, w, q, z, zeta) - little_kernel(p, z, w, zeta, omega)) < 1e-13);
    auto r = check_intertwiner_on_kernel({2, 4.0, 1}, 2, 8, 3, 1e-9);
    CHECK(r.pass);
    // lambda = n: the intertwiner is the identity on the fibre.
    Complex lhs = intertwiner_on_kernel(4.0, 2, w, q, z, zeta);
    Section K = [&](const Vec& a, const Vec& b) { return kernel_section(p, w, q, a, b); };
    CHECK(std::abs(apply_intertwiner(intertwiner_coeffs(4.0, 2, 2), K, z, zeta) / lhs - 1.0) < 1e-12);
}

TEST_CASE("big kernel: closed form, truncated sum, tail bound, origin")
{
    BigKernelParams p{2, 4.0, 2, {1.0, 0.5, 2.0}};
    Rng rng(5);
    Vec z = random_ball_point(rng, 2, 0.3), w = random_ball_point(rng, 2, 0.3);
    Vec zeta = random_vector(rng, 2, 0.3), omega = random_vector(rng, 2, 0.3);
    Complex closed = big_kernel_closed(p, z, w, zeta, omega);
    BigKernel K(p, 30);
    auto v = K.eval(z, w, zeta, omega);
    CHECK(std::abs(v.value - closed) <= std::max(v.tail_bound, 1e-12 * std::abs(closed)));
    CHECK(std::abs(v.value - closed) < 1e-10 * std::abs(closed));
    BigKernel small(p, 3);
    auto s = small.eval(z, w, zeta, omega);
    CHECK(std::abs(s.value - closed) <= s.tail_bound);
    CHECK_THROWS_AS(big_kernel_eval(small, z, w, zeta, omega, 1e-14), std::runtime_error);

    auto origin = big_kernel_origin(p, KappaVariant::Proof);
    CHECK(std::abs(big_kernel_closed(p, Vec::Zero(2), Vec::Zero(2), zeta, omega) - origin.evaluate(zeta, omega)) <
          1e-13);
    // hermitian symmetry
    CHECK(std::abs(big_kernel_closed(p, w, z, omega, zeta) - std::conj(closed)) < 1e-12 * std::abs(closed));
}

TEST_CASE("big covariance and intertwining checks")
{
    Rng rng(6);
    BigKernelParams p{2, 3.0, 2, {1.0, 1.0, 1.0}};
    CHECK(check_big_covariance(p, random_ball_point(rng, 2, 0.5), {5, 2, 0.5, 0.2}, 1e-9).pass);
    CHECK(check_big_covariance(p, random_ball_point(rng, 2, 0.5), {3, 2, 0.3, 0.1}, 1e-8, 40).pass);
    for (int lambda = 0; lambda <= 2; ++lambda)
        CHECK(check_intertwining(p, lambda, 4, 11, 1e-8).pass);
    CHECK(check_kappa(p, 1e-10).pass);
    CHECK_THROWS_AS(BigKernelParams({2, 3.0, 2, {1.0}}).validate(), std::invalid_argument);
}

TEST_CASE("Gauss-Jacobi rules integrate polynomials exactly")
{
    auto r = gauss_jacobi_unit(10, 2.5);
    // int_0^1 (1-u)^a u^k du = B(k+1, a+1)
    for (int k = 0; k <= 15; ++k) {
        double s = 0.0;
        for (std::size_t i = 0; i < r.nodes.size(); ++i)
            s += r.weights[i] * std::pow(r.nodes[i], k);
        double beta = std::exp(std::lgamma(k + 1.0) + std::lgamma(3.5) - std::lgamma(k + 4.5));
        CHECK(s == doctest::Approx(beta).epsilon(1e-12));
    }
    CHECK_THROWS(gauss_jacobi(5, -1.5, 0.0));
}

TEST_CASE("disk integral is proportional to the differential intertwiner")
{
    Rng rng(7);
    CPolynomial f = test::random_poly(rng, 1, 3, false), q = test::random_poly(rng, 1, 1, true);
    auto mu = intertwiner_coeffs(5.0, 2, 1);
    DiskQuadrature quad{60, 64};
    std::vector<Complex> ratios;
    for (int s = 0; s < 4; ++s) {
        Vec z = random_ball_point(rng, 1, 0.4), zeta = random_vector(rng, 1, 0.2);
        ratios.push_back(intertwine_integral_disk(5.0, 2, 1, f, q, z(0), zeta(0), quad) /
                         apply_intertwiner(mu, f, q, z, zeta));
    }
    for (auto r : ratios)
        CHECK(std::abs(r / ratios.front() - 1.0) < 1e-8);
    CHECK_THROWS_AS(intertwine_integral_disk(0.5, 2, 1, f, q, 0.0, 0.1), std::domain_error);
}
