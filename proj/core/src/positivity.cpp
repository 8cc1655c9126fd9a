#include "symdom/positivity.hpp"

#include "symdom/parallel.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>

namespace symdom {

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::PSD:
        return "PSD";
    case Verdict::NotPSD:
        return "not-PSD";
    default:
        return "indeterminate";
    }
}

std::vector<JetPoint> sample_jet_points(int d, int count, double radius, double fibre_scale, std::uint64_t seed)
{
    Rng rng(seed);
    std::vector<JetPoint> pts;
    for (int i = 0; i < count; ++i) {
        Vec z = random_ball_point(rng, d, radius);
        pts.push_back({z, random_vector(rng, d, fibre_scale)});
    }
    return pts;
}

PsdResult gram_psd_check(const DoubledKernel& K, const GramSpec& spec)
{
    const auto m = static_cast<Eigen::Index>(spec.points.size());
    if (m < 1)
        throw std::invalid_argument("gram_psd_check: no sample points");
    Mat G(m, m);
    for (Eigen::Index h = 0; h < m; ++h)
        for (Eigen::Index k = 0; k < m; ++k) {
            const auto& a = spec.points[static_cast<std::size_t>(h)];
            const auto& b = spec.points[static_cast<std::size_t>(k)];
            G(h, k) = K(a.z, a.zeta, b.z, b.zeta);
        }
    PsdResult r;
    if (!G.allFinite())
        return r;
    const double scale = std::max(1.0, G.cwiseAbs().maxCoeff());
    r.hermitian_defect = (G - G.adjoint()).cwiseAbs().maxCoeff() / scale;
    if (r.hermitian_defect > 1e-8)
        throw std::logic_error("gram_psd_check: Gram matrix is not hermitian (defect " +
                               std::to_string(r.hermitian_defect) + ")");
    Mat H = (G + G.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<Mat> es(H);
    if (es.info() != Eigen::Success)
        return r;
    r.min_eig = es.eigenvalues()(0);
    r.max_eig = es.eigenvalues()(m - 1);
    if (r.min_eig >= -spec.tol_psd * std::max(1.0, r.max_eig)) {
        r.verdict = Verdict::PSD;
    } else {
        r.verdict = Verdict::NotPSD;
        r.witness = es.eigenvectors().col(0);
    }
    return r;
}

PsdResult boundedness_kernel_check(const DoubledKernel& K, double b, const GramSpec& spec)
{
    if (!(b > 0.0))
        throw std::invalid_argument("boundedness_kernel_check: b must be positive");
    DoubledKernel L = [&](const Vec& z, const Vec& zeta, const Vec& w, const Vec& omega) {
        return (b * b - pairing(z, w)) * K(z, zeta, w, omega);
    };
    return gram_psd_check(L, spec);
}

std::vector<double> scalar_bound_coeffs(double nu, double b, int N)
{
    if (!(nu > 0.0))
        throw std::domain_error("scalar_bound_coeffs: nu must be positive");
    std::vector<double> out;
    if (N <= 0)
        return out;
    out.push_back(b * b);
    double poch = 1.0;  // (nu)_j / j!
    for (int j = 1; j < N; ++j) {
        poch *= (nu + j - 1) / j;
        out.push_back(poch * (b * b - j / (nu + j - 1)));
    }
    return out;
}

std::vector<double> make_grid(double lo, double hi, double step)
{
    if (!(step > 0.0) || !(hi >= lo))
        throw std::invalid_argument("make_grid: empty grid");
    std::vector<double> g;
    const auto count = static_cast<long>(std::floor((hi - lo) / step + 1e-9));
    for (long i = 0; i <= count; ++i)
        g.push_back(lo + static_cast<double>(i) * step);
    return g;
}

ScanResult wallach_scan(int d, int lambda, const std::vector<double>& grid, const GramSpec& spec)
{
    if (grid.empty())
        throw std::invalid_argument("wallach_scan: empty grid");
    ScanResult r{d, lambda, std::vector<ScanPoint>(grid.size())};
    parallel_for(grid.size(), [&](std::size_t i) {
        LittleKernelParams p{d, grid[i], lambda};
        r.points[i] = {grid[i], gram_psd_check(little_kernel_handle(p), spec)};
    });
    return r;
}

WeightTransfer weight_transfer(double nu, double nu_star, int n, const std::vector<double>& c, KappaVariant v)
{
    if (static_cast<int>(c.size()) != n + 1)
        throw std::invalid_argument("weight_transfer: need n+1 weights");
    Eigen::MatrixXd A = a_matrix(nu, n, v);
    Eigen::MatrixXd As = a_matrix(nu_star, n, v);
    Eigen::VectorXd cv = Eigen::Map<const Eigen::VectorXd>(c.data(), n + 1);
    Eigen::VectorXd rhs = A * cv;
    Eigen::VectorXd x = As.triangularView<Eigen::Lower>().solve(rhs);
    WeightTransfer w;
    w.member = true;
    for (int i = 0; i <= n; ++i) {
        w.c_prime.push_back(x(i));
        w.member = w.member && x(i) > 0.0;
    }
    return w;
}

DiagonalReport diagonal_operator_check(int d, double nu, int cap)
{
    if (!(nu > 0.0))
        throw std::domain_error("diagonal_operator_check: nu must be positive");
    if (cap < 0)
        throw std::invalid_argument("diagonal_operator_check: negative cap");
    // Orthonormal monomials e_I = z^I / ||z^I||, degrees <= cap + 1.
    GradedBasis basis(d, cap + 1);
    const int N = basis.size();
    std::vector<double> norm(static_cast<std::size_t>(N));
    for (int i = 0; i < N; ++i)
        norm[static_cast<std::size_t>(i)] = std::sqrt(monomial_norm_sq(nu, basis.index(i)));
    Eigen::MatrixXd sum_mm = Eigen::MatrixXd::Zero(N, N), sum_mmt = Eigen::MatrixXd::Zero(N, N);
    for (int v = 0; v < d; ++v) {
        Eigen::MatrixXd M = Eigen::MatrixXd::Zero(N, N);
        for (int j = 0; j < N; ++j) {
            int i = basis.position(basis.index(j) + MultiIndex::unit(d, v));
            if (i >= 0)
                M(i, j) = norm[static_cast<std::size_t>(i)] / norm[static_cast<std::size_t>(j)];
        }
        sum_mm += M.transpose() * M;
        sum_mmt += M * M.transpose();
    }
    DiagonalReport r{d, nu, cap, {}, {}, 0.0, 0.0, 0.0, 0.0};
    const int inner = basis.block_begin(cap + 1);  // degrees <= cap are exact
    for (int k = 0; k <= cap; ++k) {
        double a_min = INFINITY, a_max = -INFINITY, b_min = INFINITY, b_max = -INFINITY;
        for (int i = basis.block_begin(k); i < basis.block_begin(k) + basis.block_size(k); ++i) {
            a_min = std::min(a_min, sum_mm(i, i));
            a_max = std::max(a_max, sum_mm(i, i));
            b_min = std::min(b_min, sum_mmt(i, i));
            b_max = std::max(b_max, sum_mmt(i, i));
        }
        r.mstar_m.push_back(a_max);
        r.m_mstar.push_back(b_max);
        r.degree_spread = std::max({r.degree_spread, a_max - a_min, b_max - b_min});
        r.formula_error = std::max({r.formula_error, std::abs(a_max - (k + d) / (nu + k)),
                                    std::abs(b_max - (k == 0 ? 0.0 : k / (nu + k - 1)))});
        r.paper_d1_error = std::max(r.paper_d1_error, std::abs(a_max - (k + 1) / (nu + k)));
    }
    for (int i = 0; i < inner; ++i)
        for (int j = 0; j < inner; ++j)
            if (i != j)
                r.off_diagonal = std::max({r.off_diagonal, std::abs(sum_mm(i, j)), std::abs(sum_mmt(i, j))});
    return r;
}

}  // namespace symdom
