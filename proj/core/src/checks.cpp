#include "symdom/checks.hpp"

#include "symdom/sampling.hpp"

namespace symdom {

CheckRecord check_factorization(int d, int n, int samples, std::uint64_t seed, double tol)
{
    if (d <= 0 || n < 0 || samples <= 0)
        throw std::invalid_argument("check_factorization: need d > 0, n >= 0, samples > 0");
    Rng rng(seed);
    double worst = 0.0;
    for (int t = 0; t < samples; ++t) {
        GroupElement g = random_group_element(rng, d, 0.8);
        Vec z = random_ball_point(rng, d, 0.8);
        auto r = factorization_check(g, z, n);
        worst = std::max(worst, r.max_error / std::max(1.0, r.lhs.matrix.cwiseAbs().maxCoeff()));
    }
    FibreOperator S = shift_generator(random_vector(rng, d, 1.0), n);
    FibreOperator P = S;
    for (int k = 0; k < n; ++k)
        P = P * S;
    const bool nilpotent = (P.matrix.array() == Complex{}).all();

    CheckRecord r;
    r.name = "factorization";
    r.anchor = "[g]_z = (d_z g) B^{1/2}_{z,a} exp S(a) B^{-1/2}_{z,a}, S^{n+1} = 0";
    r.max_error = worst;
    r.tol = tol;
    r.pass = worst <= tol && nilpotent;
    r.details = {{"d", d}, {"n", n}, {"samples", samples}, {"nilpotent", nilpotent}};
    return r;
}

CheckRecord check_intertwiner_on_kernel(const LittleKernelParams& p, int n, int samples, std::uint64_t seed,
                                        double tol)
{
    if (samples <= 0)
        throw std::invalid_argument("check_intertwiner_on_kernel: samples must be positive");
    Rng rng(seed);
    auto mu = intertwiner_coeffs(p.nu, n, p.lambda);
    Vec w = random_ball_point(rng, p.d, 0.5);
    CPolynomial q = random_polynomial(rng, p.d, p.lambda, true);
    Section K = [&](const Vec& z, const Vec& zeta) { return kernel_section(p, w, q, z, zeta); };
    Complex first{};
    double spread = 0.0;
    for (int s = 0; s < samples; ++s) {
        Vec z = random_ball_point(rng, p.d, 0.5);
        Vec zeta = random_vector(rng, p.d, 0.3);
        Complex ratio = apply_intertwiner(mu, K, z, zeta) / intertwiner_on_kernel(p.nu, n, w, q, z, zeta);
        if (s == 0)
            first = ratio;
        spread = std::max(spread, std::abs(ratio - first) / std::abs(first));
    }
    CheckRecord r;
    r.name = "intertwiner_on_kernel";
    r.anchor = "I_lambda K_w q = Delta^n_{z+zeta,w} Delta^{-nu-n}_{z,w} q((z+zeta)^w - z^w)";
    r.max_error = spread;
    r.tol = tol;
    r.pass = spread <= tol;
    r.details = {{"d", p.d}, {"nu", p.nu}, {"n", n}, {"lambda", p.lambda}, {"samples", samples},
                 {"ratio_re", first.real()}, {"ratio_im", first.imag()}};
    return r;
}

CheckRecord check_intertwining(const BigKernelParams& p, int lambda, int samples, std::uint64_t seed, double tol)
{
    p.validate();
    if (lambda < 0 || lambda > p.n)
        throw std::invalid_argument("check_intertwining: need 0 <= lambda <= n");
    Rng rng(seed);
    LittleKernelParams lp{p.d, p.nu, lambda};
    auto mu = intertwiner_coeffs(p.nu, p.n, lambda);
    double worst = 0.0;
    for (int t = 0; t < samples; ++t) {
        GroupElement g = random_group_element(rng, p.d, 0.6);
        CPolynomial Phi = random_polynomial(rng, p.d, 3, false).embed(2 * p.d, 0) *
                          random_polynomial(rng, p.d, lambda, true).embed(2 * p.d, p.d);
        CPolynomial IPhi = intertwine_polynomial(mu, Phi);
        Section little = [&](const Vec& z, const Vec& zeta) {
            return little_action(lp, g, polynomial_section(Phi), z, zeta);
        };
        Vec z = random_ball_point(rng, p.d, 0.5);
        Vec zeta = random_vector(rng, p.d, 0.15);
        Complex lhs = big_action(p, g, polynomial_section(IPhi), z, zeta);
        Complex rhs = apply_intertwiner(mu, little, z, zeta);
        worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
    }
    CheckRecord r;
    r.name = "intertwining";
    r.anchor = "g^{big} I_lambda = I_lambda g^{little}";
    r.max_error = worst;
    r.tol = tol;
    r.pass = worst <= tol;
    r.details = {{"d", p.d}, {"nu", p.nu}, {"n", p.n}, {"lambda", lambda}, {"samples", samples}};
    return r;
}

CheckRecord check_kappa(const BigKernelParams& p, double tol)
{
    auto res = resolve_kappa_variant(p, tol);
    CheckRecord r;
    r.name = "kappa_variant";
    r.anchor = "K^{nu,c}_{0,0} = sum_l a_l E^l, a_l = sum_lambda kappa^lambda_l c_lambda / lambda!";
    const bool unique = res.selected == "theorem" || res.selected == "proof";
    r.max_error = res.selected == "theorem" ? res.theorem_error : res.proof_error;
    r.tol = tol;
    r.pass = unique && r.max_error <= tol;
    r.details = {{"selected", res.selected},
                 {"theorem_error", json_number(res.theorem_error)},
                 {"proof_error", json_number(res.proof_error)},
                 {"oracle", res.oracle.a},
                 {"theorem", res.theorem.a},
                 {"proof", res.proof.a}};
    return r;
}

}  // namespace symdom
