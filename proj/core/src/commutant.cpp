#include "symdom/positivity.hpp"

#include <Eigen/SVD>

namespace symdom {

std::vector<FibreOperator> commutant_family(const CommutantSpec& spec)
{
    const int d = spec.d, n = spec.n;
    GradedBasis basis(d, n);
    std::vector<FibreOperator> family;
    if (spec.family == CommutantFamily::IdentityOnly) {
        family.push_back({basis, Mat::Identity(basis.size(), basis.size())});
        return family;
    }
    BigKernelParams bp{d, spec.nu, n, spec.c};
    KInvariantKernel origin = big_kernel_origin(bp, spec.variant);
    Eigen::VectorXcd diag(basis.size());
    for (int i = 0; i < basis.size(); ++i) {
        const int l = basis.degree_of(i);
        const double v = origin.a[static_cast<std::size_t>(l)] * factorial(l);
        if (!(v > 0.0))
            throw std::domain_error("commutant_probe: kernel operator L is not invertible (a_l <= 0)");
        diag(i) = v;
    }
    const FibreOperator L{basis, diag.asDiagonal()};
    const FibreOperator Linv{basis, diag.cwiseInverse().asDiagonal()};
    auto adj = [&](const FibreOperator& A) { return metric_adjoint(A, spec.beta); };

    Rng rng(spec.seed);
    while (static_cast<int>(family.size()) < spec.samples) {
        Vec z = random_ball_point(rng, d, spec.radius);
        Vec w = random_ball_point(rng, d, spec.radius);
        if (std::abs(quasi_determinant(z, w)) <= 1e-6)
            continue;
        Vec zw = quasi_inverse(z, w), wz = quasi_inverse(w, z);
        family.push_back(adj(tau_bar_pi_n(-zw, n)) * Linv * tau_bar_pi_n(w, n) * L * adj(tau_bar_pi_n(z, n)) * Linv *
                         tau_bar_pi_n(-wz, n));
    }
    if (!spec.block_scalar) {
        // K-averaging keeps the commutant inside the degree-block algebra.
        for (int k = 0; k <= n; ++k) {
            Mat P = Mat::Zero(basis.size(), basis.size());
            for (int i = basis.block_begin(k); i < basis.block_begin(k) + basis.block_size(k); ++i)
                P(i, i) = 1.0;
            family.push_back({basis, P});
        }
    }
    return family;
}

CommutantResult commutant_probe(const CommutantSpec& spec)
{
    if (static_cast<int>(spec.c.size()) != spec.n + 1)
        throw std::invalid_argument("commutant_probe: need n+1 weights");
    if (static_cast<int>(spec.beta.beta.size()) != spec.n + 1)
        throw std::invalid_argument("commutant_probe: need n+1 metric weights");
    auto family = commutant_family(spec);
    GradedBasis basis(spec.d, spec.n);
    const int N = basis.size();
    const int unknowns = spec.block_scalar ? spec.n + 1 : N * N;
    const Eigen::Index rows = static_cast<Eigen::Index>(family.size()) * N * N;
    Mat M = Mat::Zero(std::max<Eigen::Index>(rows, unknowns), unknowns);
    Eigen::Index row = 0;
    for (const auto& F : family) {
        const double s = std::max(1e-300, F.matrix.cwiseAbs().maxCoeff());
        Mat A = F.matrix / s;
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j, ++row) {
                // ([P, A])_{ij} = sum_k P_ik A_kj - A_ik P_kj
                if (spec.block_scalar) {
                    M(row, basis.degree_of(i)) += A(i, j);
                    M(row, basis.degree_of(j)) -= A(i, j);
                } else {
                    for (int k = 0; k < N; ++k) {
                        M(row, i * N + k) += A(k, j);
                        M(row, k * N + j) -= A(i, k);
                    }
                }
            }
    }
    Eigen::JacobiSVD<Mat> svd(M, Eigen::ComputeFullV);
    CommutantResult r;
    r.unknowns = unknowns;
    r.family_size = static_cast<int>(family.size());
    const auto& sv = svd.singularValues();
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        r.singular_values.push_back(sv(i));
    const double smax = sv.size() ? sv(0) : 0.0;
    int rank = 0;
    double smin_kept = 0.0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (smax > 0.0 && sv(i) > spec.rank_tol * smax) {
            ++rank;
            smin_kept = sv(i);
        }
    r.dimension = unknowns - rank;
    r.condition = rank > 0 ? smax / smin_kept : 1.0;
    r.basis = svd.matrixV().rightCols(r.dimension);
    return r;
}

}  // namespace symdom
