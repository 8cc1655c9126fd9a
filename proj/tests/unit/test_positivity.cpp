#include "oracles.hpp"

#include "symdom/positivity.hpp"

#include <doctest.h>

using namespace symdom;

TEST_CASE("scalar bound coefficients match the product of the two series")
{
    for (auto [nu, b] : std::vector<std::pair<double, double>>{{1.0, 1.0}, {2.0, 0.5}, {0.4, 2.5}, {3.5, 1.2}}) {
        auto c = scalar_bound_coeffs(nu, b, 30);
        // (b^2 - x) sum_j (nu)_j/j! x^j
        for (int j = 0; j < 30; ++j) {
            double expect = b * b * pochhammer(nu, j) / factorial(j);
            if (j > 0)
                expect -= pochhammer(nu, j - 1) / factorial(j - 1);
            CHECK(c[static_cast<std::size_t>(j)] == doctest::Approx(expect).epsilon(1e-12));
        }
    }
    // nu = 2, b = 1: (nu)_j/j! (1 - j/(j+1)) = 1 for all j >= 1 ... and b^2 = 1
    auto c = scalar_bound_coeffs(2.0, 1.0, 5);
    for (double x : c)
        CHECK(x == doctest::Approx(1.0));
    CHECK(scalar_bound_coeffs(2.0, 0.5, 3)[1] < 0.0);
    CHECK_THROWS_AS(scalar_bound_coeffs(0.0, 1.0, 3), std::domain_error);
}

TEST_CASE("Gram PSD verdicts")
{
    GramSpec spec{sample_jet_points(2, 25, 0.8, 1.0, 3), 1e-9};
    CHECK(gram_psd_check(little_kernel_handle({2, 4.0, 1}), spec).verdict == Verdict::PSD);
    auto bad = gram_psd_check(little_kernel_handle({2, -1.5, 1}), spec);
    CHECK(bad.verdict == Verdict::NotPSD);
    CHECK(bad.witness.size() == 25);
    DoubledKernel skew = [](const Vec& z, const Vec&, const Vec& w, const Vec&) { return Complex(0, 1) * (z - w).sum(); };
    CHECK_THROWS_AS(gram_psd_check(skew, spec), std::logic_error);
    CHECK_THROWS_AS(gram_psd_check(little_kernel_handle({2, 4.0, 1}), GramSpec{}), std::invalid_argument);
}

TEST_CASE("boundedness kernel: b = 1 is PSD for the scalar kernel, small b is not")
{
    GramSpec spec{sample_jet_points(1, 30, 0.9, 0.0, 4), 1e-9};
    auto K = little_kernel_handle({1, 2.0, 0});
    CHECK(boundedness_kernel_check(K, 1.0, spec).verdict == Verdict::PSD);
    CHECK(boundedness_kernel_check(K, 0.5, spec).verdict == Verdict::NotPSD);
    CHECK_THROWS(boundedness_kernel_check(K, 0.0, spec));
}

TEST_CASE("Wallach scan of the scalar kernel flips at 0")
{
    GramSpec spec{sample_jet_points(2, 30, 0.8, 1.0, 5), 1e-9};
    auto scan = wallach_scan(2, 0, make_grid(-1.0, 1.0, 0.5), spec);
    REQUIRE(scan.points.size() == 5);
    CHECK(scan.points[0].result.verdict == Verdict::NotPSD);
    CHECK(scan.points[1].result.verdict == Verdict::NotPSD);
    CHECK(scan.points[3].result.verdict == Verdict::PSD);
    CHECK(scan.points[4].result.verdict == Verdict::PSD);
    CHECK_THROWS(make_grid(1.0, 0.0, 0.1));
    CHECK_THROWS(wallach_scan(2, 0, {}, spec));
}

TEST_CASE("weight transfer")
{
    auto same = weight_transfer(4.0, 4.0, 2, {1.0, 2.0, 3.0}, KappaVariant::Proof);
    for (int i = 0; i < 3; ++i)
        CHECK(same.c_prime[static_cast<std::size_t>(i)] == doctest::Approx(i + 1.0));
    CHECK(same.member);
    auto w = weight_transfer(5.0, 3.0, 2, {1.0, 1.0, 1.0}, KappaVariant::Proof);
    Eigen::VectorXd lhs = a_matrix(3.0, 2, KappaVariant::Proof) * Eigen::Map<Eigen::VectorXd>(w.c_prime.data(), 3);
    Eigen::VectorXd rhs = a_matrix(5.0, 2, KappaVariant::Proof) * Eigen::VectorXd::Ones(3);
    CHECK((lhs - rhs).norm() < 1e-12);
    CHECK_THROWS(weight_transfer(5.0, 3.0, 2, {1.0}, KappaVariant::Proof));
}

TEST_CASE("diagonal operator")
{
    auto r = diagonal_operator_check(1, 2.7, 20);
    CHECK(r.paper_d1_error < 1e-12);
    CHECK(r.formula_error < 1e-12);
    auto r2 = diagonal_operator_check(2, 2.7, 8);
    CHECK(r2.formula_error < 1e-12);
    CHECK(r2.paper_d1_error > 0.01);
    CHECK(r2.off_diagonal < 1e-12);
    CHECK(r2.degree_spread < 1e-12);
    CHECK(r2.m_mstar[0] == 0.0);
}

TEST_CASE("commutant probe")
{
    CommutantSpec spec;
    CHECK(commutant_probe(spec).dimension == 1);
    spec.beta = u_invariant_weights(2, 2);
    CHECK(commutant_probe(spec).dimension == 1);
    spec.block_scalar = false;
    spec.samples = 4;
    auto un = commutant_probe(spec);
    CHECK(un.unknowns == 36);
    CHECK(un.dimension == 1);
    spec.block_scalar = true;
    spec.family = CommutantFamily::IdentityOnly;
    CHECK(commutant_probe(spec).dimension == 3);
    CommutantSpec trivial;
    trivial.n = 0;
    trivial.c = {1.0};
    trivial.beta = FibreMetric::fock(0);
    CHECK(commutant_probe(trivial).dimension == 1);
    trivial.c = {1.0, 1.0};
    CHECK_THROWS(commutant_probe(trivial));
}
