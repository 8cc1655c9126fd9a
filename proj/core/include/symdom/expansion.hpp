#pragma once

#include "symdom/poly.hpp"

#include <vector>

namespace symdom {

/// One z-degree block of the little kernel written as a sesqui-polynomial
///   K(z, zeta; w, omega) = sum_{a,b} coeff[a][b] m_a(z, zeta) conj(m_b(w, omega)),
/// m_a = z^I zeta^J with |I| = k, |J| = lambda. Indices live in 2d variables.
template <class S>
struct KernelBlock {
    int k = 0;
    std::vector<MultiIndex> monomials;
    std::vector<S> coeff;  ///< row-major, monomials.size()^2

    std::size_t size() const { return monomials.size(); }
    const S& operator()(std::size_t a, std::size_t b) const { return coeff[a * size() + b]; }
};

/// Blocks 0..kmax of Delta^{-nu} E^lambda(B^{-1}_{z,w} zeta, omega), from
///   (1/lambda!) sum_{p,q} C(lambda,q) (nu+lambda+q)_p / p!
///     (z|w)^p (zeta|w)^q (z|omega)^q (zeta|omega)^{lambda-q}.
/// S is Complex or GaussianRational; nu must be exactly representable in S.
template <class S>
std::vector<KernelBlock<S>> little_kernel_blocks(int d, const S& nu, int lambda, int kmax)
{
    using P = BasicPolynomial<S>;
    if (d <= 0 || lambda < 0 || kmax < 0)
        throw std::invalid_argument("little_kernel_blocks: bad arguments");
    // Variables: z (0..d-1), zeta (d..2d-1), conj w (2d..3d-1), conj omega (3d..4d-1).
    const int D = 4 * d;
    auto form = [&](int left, int right) {
        P f(D);
        for (int i = 0; i < d; ++i) {
            MultiIndex I(D);
            I[left * d + i] = 1;
            I[right * d + i] = 1;
            f.add_term(I, S(1));
        }
        return f;
    };
    const P a = form(0, 2), b = form(1, 2), c = form(0, 3), e = form(1, 3);

    S lam_fact(1);
    for (int j = 2; j <= lambda; ++j)
        lam_fact *= S(static_cast<long long>(j));

    std::vector<P> e_pow{P::constant(D, S(1))}, bc_pow{P::constant(D, S(1))}, a_pow{P::constant(D, S(1))};
    for (int j = 1; j <= lambda; ++j) {
        e_pow.push_back(e_pow.back() * e);
        bc_pow.push_back(bc_pow.back() * b * c);
    }

    std::vector<KernelBlock<S>> blocks;
    const auto zs = homogeneous_indices(d, lambda);
    for (int k = 0; k <= kmax; ++k) {
        if (static_cast<int>(a_pow.size()) <= k)
            a_pow.push_back(a_pow.back() * a);
        P block(D);
        for (int q = 0; q <= std::min(lambda, k); ++q) {
            int p = k - q;
            // C(lambda, q) (nu+lambda+q)_p / p!
            S coef(1);
            for (int j = 0; j < q; ++j)
                coef *= S(static_cast<long long>(lambda - j));
            for (int j = 1; j <= q; ++j)
                coef /= S(static_cast<long long>(j));
            for (int j = 0; j < p; ++j)
                coef *= (nu + S(static_cast<long long>(lambda + q + j))) / S(static_cast<long long>(j + 1));
            block += a_pow[static_cast<std::size_t>(p)] * bc_pow[static_cast<std::size_t>(q)] *
                     e_pow[static_cast<std::size_t>(lambda - q)] * (coef / lam_fact);
        }
        KernelBlock<S> kb;
        kb.k = k;
        for (const auto& I : homogeneous_indices(d, k))
            for (const auto& J : zs)
                kb.monomials.push_back(I.concat(J));
        const std::size_t m = kb.monomials.size();
        kb.coeff.assign(m * m, S(0));
        for (std::size_t r = 0; r < m; ++r)
            for (std::size_t s = 0; s < m; ++s)
                kb.coeff[r * m + s] = block.coefficient(kb.monomials[r].concat(kb.monomials[s]));
        blocks.push_back(std::move(kb));
    }
    return blocks;
}

}  // namespace symdom
