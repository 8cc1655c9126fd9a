#include "oracles.hpp"

#include "symdom/cauchy.hpp"
#include "symdom/exact.hpp"
#include "symdom/poly.hpp"
#include "symdom/special.hpp"

#include <doctest.h>
#include <nlohmann/json.hpp>

using namespace symdom;

TEST_CASE("pochhammer, factorial, binomial")
{
    CHECK(pochhammer(3.0, 0) == 1.0);
    CHECK(pochhammer(3.0, 4) == doctest::Approx(3.0 * 4 * 5 * 6));
    CHECK(pochhammer(-2.0, 3) == 0.0);
    CHECK(factorial(6) == 720.0);
    CHECK(binomial(5.0, 2) == doctest::Approx(10.0));
    CHECK(binomial(0.5, 2) == doctest::Approx(-0.125));
    auto t = pochhammer_table(1.5, 4);
    REQUIRE(t.size() == 5);
    for (int k = 0; k <= 4; ++k)
        CHECK(t[static_cast<std::size_t>(k)] == doctest::Approx(pochhammer(1.5, k)));
}

TEST_CASE("cpow is exact for integer exponents")
{
    Complex z(0.3, -1.7);
    CHECK(cpow(z, 3) == z * z * z);
    CHECK(std::abs(cpow(z, -2) - 1.0 / (z * z)) < 1e-15);
    CHECK(std::abs(cpow(z, 0.5) - std::sqrt(z)) < 1e-15);
}

TEST_CASE("multi-index order and counting")
{
    auto idx = graded_indices(2, 2);
    REQUIRE(idx.size() == 6);
    CHECK(idx[0] == MultiIndex{0, 0});
    CHECK(idx[1] == MultiIndex{1, 0});
    CHECK(idx[2] == MultiIndex{0, 1});
    CHECK(idx[3] == MultiIndex{2, 0});
    CHECK(homogeneous_dimension(3, 4) == 15);
    for (int d = 1; d <= 3; ++d)
        for (int k = 0; k <= 5; ++k)
            CHECK(static_cast<long long>(homogeneous_indices(d, k).size()) == homogeneous_dimension(d, k));
    MultiIndex I{2, 1};
    CHECK(I.degree() == 3);
    CHECK(I.factorial() == 2.0);
    CHECK((I + MultiIndex{0, 2}) == MultiIndex{2, 3});
    CHECK(MultiIndex{1, 1}.divides(I));
    CHECK_FALSE(MultiIndex{0, 2}.divides(I));
    CHECK(I.concat(MultiIndex{4}) == MultiIndex{2, 1, 4});
}

TEST_CASE("polynomial arithmetic")
{
    CPolynomial x = CPolynomial::variable(2, 0), y = CPolynomial::variable(2, 1);
    CPolynomial p = (x + y).pow(3);
    CHECK(p.coefficient(MultiIndex{2, 1}) == Complex(3.0));
    CHECK(p.is_homogeneous(3));
    CHECK((p - p).is_zero());
    CHECK(p.derivative(0).coefficient(MultiIndex{1, 1}) == Complex(6.0));
    Vec pt(2);
    pt << Complex(0.2, 0.1), Complex(-0.4, 0.3);
    CHECK(std::abs(evaluate(p, pt) - std::pow(pt(0) + pt(1), 3)) < 1e-15);
    CPolynomial s = p.substitute({x * y, y});
    CHECK(s.coefficient(MultiIndex{3, 3}) == Complex(1.0));
    CHECK(p.embed(4, 1).coefficient(MultiIndex{0, 2, 1, 0}) == Complex(3.0));
    CHECK(p.truncate(2).is_zero());
    CHECK_THROWS_AS(x + CPolynomial::variable(3, 0), std::invalid_argument);
}

TEST_CASE("fock_inner: exact and floating point agree, monomials orthogonal")
{
    ExactPolynomial a(2), b(2);
    a.add_term(MultiIndex{2, 1}, GaussianRational(Rational(1, 3), Rational(2)));
    a.add_term(MultiIndex{0, 1}, GaussianRational(5));
    b.add_term(MultiIndex{2, 1}, GaussianRational(Rational(-1), Rational(1, 7)));
    b.add_term(MultiIndex{1, 0}, GaussianRational(3));
    GaussianRational e = fock_inner(a, b);
    // conj(1/3 + 2i)(-1 + i/7) 2! 1!
    GaussianRational expect = GaussianRational(Rational(1, 3), Rational(-2)) *
                              GaussianRational(Rational(-1), Rational(1, 7)) * GaussianRational(2);
    CHECK(e == expect);
    Complex f = fock_inner(to_polynomial(a), to_polynomial(b));
    CHECK(std::abs(f - expect.to_complex()) < 1e-14);
    CHECK(fock_inner(CPolynomial::monomial(MultiIndex{1, 0}), CPolynomial::monomial(MultiIndex{0, 1})) == Complex{});
}

TEST_CASE("E^k reproduces homogeneous polynomials in the Fock space")
{
    Rng rng(3);
    for (int k = 0; k <= 4; ++k) {
        Vec omega = random_vector(rng, 2, 1.0);
        CPolynomial p = test::random_poly(rng, 2, k, true);
        Complex v = fock_inner(e_kernel_poly(k, omega), p);
        CHECK(std::abs(v - evaluate(p, omega)) < 1e-12 * std::max(1.0, std::abs(v)));
    }
    Vec z = random_vector(rng, 2, 1.0), w = random_vector(rng, 2, 1.0);
    CHECK(std::abs(e_kernel(3, z, w) - std::pow(pairing(z, w), 3) / 6.0) < 1e-15);
    CHECK(std::abs(evaluate(pairing_form(w), z) - pairing(z, w)) < 1e-15);
}

TEST_CASE("contract_derivative: exact polynomial route vs Cauchy route")
{
    Rng rng(5);
    CPolynomial p = test::random_poly(rng, 2, 5, false);
    HoloFn f = [&](const Vec& x) { return evaluate(p, x); };
    Vec z = random_ball_point(rng, 2, 0.5), zeta = random_vector(rng, 2, 1.0);
    for (int k = 0; k <= 5; ++k) {
        Complex exact = contract_derivative(zeta, p, z, k);
        Complex cauchy = contract_derivative(zeta, f, z, k);
        Complex oracle = test::line_derivative_oracle(f, z, zeta, k);
        CHECK(std::abs(exact - cauchy) < 1e-9 * std::max(1.0, std::abs(exact)));
        CHECK(std::abs(exact - oracle) < 1e-8 * std::max(1.0, std::abs(exact)));
    }
    auto all = line_derivatives(zeta, f, z, 5);
    for (int k = 0; k <= 5; ++k)
        CHECK(std::abs(all[static_cast<std::size_t>(k)] - contract_derivative(zeta, p, z, k)) < 1e-9 * 100);
}

TEST_CASE("contract_derivative enforces the domain predicate")
{
    CauchyOptions opt;
    opt.domain = [](const Vec& x) { return x.norm() < 1.0; };
    HoloFn f = [](const Vec& x) { return 1.0 / (1.0 - x(0)); };
    Vec z(1), zeta(1);
    z << 0.95;
    zeta << 1.0;
    CHECK_THROWS_AS(contract_derivative(zeta, f, z, 1, opt), std::domain_error);
}

TEST_CASE("torus_taylor recovers polynomial coefficients")
{
    Rng rng(9);
    CPolynomial p = test::random_poly(rng, 2, 4, false);
    Vec c = Vec::Zero(2);
    CPolynomial q = torus_taylor([&](const Vec& x) { return evaluate(p, x); }, c, {0.7, 0.9}, {8, 8},
                                 [](const MultiIndex&) { return true; });
    for (const auto& I : graded_indices(2, 4))
        CHECK(std::abs(q.coefficient(I) - p.coefficient(I)) < 1e-12);
}

TEST_CASE("polynomial JSON round trip")
{
    Rng rng(1);
    CPolynomial p = test::random_poly(rng, 3, 3, false);
    nlohmann::json j = p;
    CPolynomial q = j.get<CPolynomial>();
    CHECK(q == p);
}
