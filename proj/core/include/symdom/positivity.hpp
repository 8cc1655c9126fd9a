#pragma once

#include "symdom/fibre.hpp"
#include "symdom/intertwine.hpp"

#include <string>
#include <vector>

namespace symdom {

enum class Verdict { PSD, NotPSD, Indeterminate };

std::string to_string(Verdict v);

struct GramSpec {
    std::vector<JetPoint> points;
    double tol_psd = 1e-9;
};

/// `count` points with base in the ball of `radius` and fibre entries in
/// [-fibre_scale, fibre_scale]^2.
std::vector<JetPoint> sample_jet_points(int d, int count, double radius, double fibre_scale, std::uint64_t seed);

struct PsdResult {
    Verdict verdict = Verdict::Indeterminate;
    double min_eig = 0.0;
    double max_eig = 0.0;
    double hermitian_defect = 0.0;
    Eigen::VectorXcd witness;  ///< eigenvector of min_eig when not PSD
};

/// G_{hk} = K(z_h, zeta_h; z_k, zeta_k); PSD iff min eig >= -tol max(1, max eig).
/// A non-PSD verdict is conclusive, a PSD verdict is evidence at the sampled points.
PsdResult gram_psd_check(const DoubledKernel& K, const GramSpec& spec);

/// Same test for (b^2 - (z|w)) K.
PsdResult boundedness_kernel_check(const DoubledKernel& K, double b, const GramSpec& spec);

/// Taylor coefficients of (b^2 - x)(1-x)^{-nu} in x = (z|w), indices 0..N-1:
/// b^2, then (nu)_j/j! (b^2 - j/(nu+j-1)).
std::vector<double> scalar_bound_coeffs(double nu, double b, int N);

struct ScanPoint {
    double nu = 0.0;
    PsdResult result;
};

struct ScanResult {
    int d = 1;
    int lambda = 0;
    std::vector<ScanPoint> points;
};

/// gram_psd_check of the little kernel at each nu of the grid.
ScanResult wallach_scan(int d, int lambda, const std::vector<double>& grid, const GramSpec& spec);

std::vector<double> make_grid(double lo, double hi, double step);

struct WeightTransfer {
    std::vector<double> c_prime;
    bool member = false;  ///< c' > 0 componentwise
};

/// c' = A(nu*)^{-1} A(nu) c by forward substitution.
WeightTransfer weight_transfer(double nu, double nu_star, int n, const std::vector<double>& c, KappaVariant v);

struct DiagonalReport {
    int d = 1;
    double nu = 1.0;
    int cap = 0;
    std::vector<double> mstar_m;  ///< per degree 0..cap, diagonal of sum M_i^* M_i
    std::vector<double> m_mstar;  ///< per degree 0..cap, diagonal of sum M_i M_i^*
    double off_diagonal = 0.0;    ///< largest off-diagonal entry of either sum
    double degree_spread = 0.0;   ///< largest variation of the diagonal within one degree
    double formula_error = 0.0;   ///< vs (k+d)/(nu+k) and k/(nu+k-1)
    double paper_d1_error = 0.0;  ///< vs (k+1)/(nu+k)
};

DiagonalReport diagonal_operator_check(int d, double nu, int cap);

enum class CommutantFamily { Full, IdentityOnly };

struct CommutantSpec {
    int d = 2;
    int n = 2;
    double nu = 4.0;
    std::vector<double> c{1.0, 1.0, 1.0};
    FibreMetric beta = FibreMetric::fock(2);
    int samples = 10;
    std::uint64_t seed = 7;
    double radius = 0.8;
    CommutantFamily family = CommutantFamily::Full;
    /// Restrict to K-invariant candidates (one scalar per degree).
    bool block_scalar = true;
    KappaVariant variant = KappaVariant::Proof;
    double rank_tol = 1e-8;
};

struct CommutantResult {
    int dimension = 0;
    int unknowns = 0;
    int family_size = 0;
    std::vector<double> singular_values;
    Mat basis;  ///< columns span the commutant (unknown coordinates)
    double condition = 0.0;
};

/// Null space of P -> [P, F] over the family
/// F = (taubar_{-z^w})^* L^{-1} taubar_w L (taubar_z)^* L^{-1} taubar_{-w^z}.
CommutantResult commutant_probe(const CommutantSpec& spec);

/// Members of the operator family used by commutant_probe.
std::vector<FibreOperator> commutant_family(const CommutantSpec& spec);

}  // namespace symdom
