#include "oracles.hpp"

#include "symdom/exact.hpp"
#include "symdom/kernels.hpp"

#include <doctest.h>

using namespace symdom;

TEST_CASE("little kernel: lambda = 0 is the scalar kernel, hermitian symmetry")
{
    Rng rng(1);
    for (int d = 1; d <= 3; ++d) {
        Vec z = random_ball_point(rng, d, 0.9), w = random_ball_point(rng, d, 0.9);
        Vec zeta = random_vector(rng, d), omega = random_vector(rng, d);
        CHECK(std::abs(little_kernel({d, 2.5, 0}, z, w, zeta, omega) - cpow(quasi_determinant(z, w), -2.5)) < 1e-13);
        for (int lambda = 0; lambda <= 3; ++lambda) {
            LittleKernelParams p{d, 3.3, lambda};
            Complex a = little_kernel(p, z, w, zeta, omega), b = little_kernel(p, w, z, omega, zeta);
            CHECK(std::abs(a - std::conj(b)) < 1e-12 * std::abs(a));
        }
    }
}

TEST_CASE("little kernel at the origin is Delta^{-nu} E^lambda")
{
    Rng rng(2);
    Vec zeta = random_vector(rng, 2), omega = random_vector(rng, 2);
    Vec w = random_ball_point(rng, 2, 0.8);
    for (int lambda = 0; lambda <= 3; ++lambda) {
        Complex k = little_kernel({2, 4.0, lambda}, Vec::Zero(2), w, zeta, omega);
        CHECK(std::abs(k - e_kernel(lambda, zeta, omega)) < 1e-14);
    }
}

TEST_CASE("expansion blocks: exact and floating point agree; truncated sum converges")
{
    const int d = 2, lambda = 1;
    auto exact = little_kernel_blocks<GaussianRational>(d, GaussianRational(Rational(7, 2)), lambda, 3);
    LittleKernelExpansion ex({d, 3.5, lambda}, 3);
    REQUIRE(exact.size() == ex.blocks.size());
    for (std::size_t k = 0; k < exact.size(); ++k) {
        REQUIRE(exact[k].monomials == ex.blocks[k].monomials);
        for (std::size_t i = 0; i < exact[k].coeff.size(); ++i)
            CHECK(std::abs(exact[k].coeff[i].to_complex() - ex.blocks[k].coeff[i]) < 1e-13);
    }
    Rng rng(3);
    LittleKernelExpansion big({d, 3.5, lambda}, 40);
    Vec z = random_ball_point(rng, d, 0.3), w = random_ball_point(rng, d, 0.3);
    Vec zeta = random_vector(rng, d), omega = random_vector(rng, d);
    Complex closed = little_kernel({d, 3.5, lambda}, z, w, zeta, omega);
    CHECK(std::abs(big.evaluate(z, w, zeta, omega) - closed) < 1e-12 * std::abs(closed));
}

TEST_CASE("expansion blocks are hermitian and positive definite for nu > 0")
{
    LittleKernelExpansion ex({2, 1.5, 2}, 4);
    for (const auto& b : ex.blocks) {
        Mat C = LittleKernelExpansion::block_matrix(b);
        CHECK((C - C.adjoint()).cwiseAbs().maxCoeff() < 1e-14);
        Eigen::SelfAdjointEigenSolver<Mat> es(C);
        CHECK(es.eigenvalues().minCoeff() > 0.0);
    }
}

TEST_CASE("FK expansion, monomial norms, tail bound")
{
    auto c = fk_expand(2.5, 5);
    for (int k = 0; k <= 5; ++k)
        CHECK(c[static_cast<std::size_t>(k)] == doctest::Approx(pochhammer(2.5, k)));
    Rng rng(4);
    // sum_{|I|=k} |z^I|^2 / ||z^I||^2 = (nu)_k |z|^{2k} / k!
    const double nu = 3.5;
    Vec z = random_ball_point(rng, 2, 0.9);
    for (int k = 0; k <= 6; ++k) {
        double s = 0.0;
        for (const auto& I : homogeneous_indices(2, k))
            s += std::norm(evaluate(CPolynomial::monomial(I), z)) / monomial_norm_sq(nu, I);
        CHECK(s == doctest::Approx(pochhammer(nu, k) * std::pow(z.squaredNorm(), k) / factorial(k)).epsilon(1e-12));
    }
    CHECK_THROWS_AS(monomial_norm_sq(-1.0, MultiIndex{1, 0}), std::domain_error);
    for (int N : {5, 10, 20}) {
        Vec a = random_ball_point(rng, 2, 0.6), b = random_ball_point(rng, 2, 0.6);
        double actual = std::abs(fk_partial_sum(nu, N, a, b) - cpow(quasi_determinant(a, b), -nu));
        CHECK(actual <= fk_tail_bound(nu, N, 0.6) * (1 + 1e-9));
    }
}

TEST_CASE("little covariance and reproducing checks pass")
{
    Rng rng(5);
    for (int lambda = 0; lambda <= 2; ++lambda) {
        LittleKernelParams p{2, 2.5, lambda};
        auto r = check_little_covariance(p, random_ball_point(rng, 2, 0.8), {10, 7, 0.8, 1.0}, 1e-9);
        CHECK(r.pass);
        auto q = check_reproducing({2, 4.0, lambda}, 3, 2, 9, 1e-9);
        CHECK(q.pass);
    }
    CHECK_THROWS_AS(check_reproducing({2, -1.0, 0}, 2, 1, 1, 1e-9), std::domain_error);
}

TEST_CASE("little action is a representation")
{
    Rng rng(6);
    LittleKernelParams p{2, 4.0, 1};
    GroupElement g1 = random_transvection(rng, 2, 0.5), g2 = random_transvection(rng, 2, 0.5);
    CPolynomial Phi = test::random_poly(rng, 2, 2, false).embed(4, 0) * test::random_poly(rng, 2, 1, true).embed(4, 2);
    Section s = polynomial_section(Phi);
    Vec z = random_ball_point(rng, 2, 0.4), zeta = random_vector(rng, 2);
    // (g2 (g1 Phi)) vs ((g1 g2) Phi) in the right-action convention of little_action
    Section g1Phi = [&](const Vec& a, const Vec& b) { return little_action(p, g1, s, a, b); };
    Complex lhs = little_action(p, g2, g1Phi, z, zeta);
    Complex rhs = little_action(p, compose(g1, g2), s, z, zeta);
    CHECK(std::abs(lhs - rhs) < 1e-11 * std::max(1.0, std::abs(rhs)));
}
