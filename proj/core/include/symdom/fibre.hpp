#pragma once

#include "symdom/group.hpp"

#include <nlohmann/json_fwd.hpp>

#include <functional>
#include <map>
#include <optional>
#include <vector>

namespace symdom {

/// Monomials z^I, |I| <= n, in graded lex order; the operator basis is the
/// Fock-orthonormal family z^I / sqrt(I!).
class GradedBasis {
public:
    GradedBasis() = default;
    GradedBasis(int d, int n);

    int dim() const { return d_; }
    int level() const { return n_; }
    int size() const { return static_cast<int>(idx_.size()); }
    const std::vector<MultiIndex>& indices() const { return idx_; }
    const MultiIndex& index(int pos) const { return idx_[static_cast<std::size_t>(pos)]; }
    /// -1 when I is not in the basis.
    int position(const MultiIndex& I) const;
    int degree_of(int pos) const { return idx_[static_cast<std::size_t>(pos)].degree(); }
    int block_begin(int deg) const { return begin_[static_cast<std::size_t>(deg)]; }
    int block_size(int deg) const
    {
        return begin_[static_cast<std::size_t>(deg) + 1] - begin_[static_cast<std::size_t>(deg)];
    }
    /// sqrt(I!)
    double fock_norm(int pos) const { return norm_[static_cast<std::size_t>(pos)]; }

    /// Coordinates of p in the orthonormal basis; throws if p has degree > n.
    Eigen::VectorXcd coordinates(const CPolynomial& p) const;
    CPolynomial polynomial(const Eigen::VectorXcd& coords) const;

    friend bool operator==(const GradedBasis& a, const GradedBasis& b) { return a.d_ == b.d_ && a.n_ == b.n_; }

private:
    int d_ = 0;
    int n_ = 0;
    std::vector<MultiIndex> idx_;
    std::vector<int> begin_;
    std::vector<double> norm_;
    std::map<MultiIndex, int, GradedLex> pos_;
};

struct FibreOperator {
    GradedBasis basis;
    Mat matrix;

    FibreOperator operator*(const FibreOperator& o) const;
    /// Largest |entry| outside the degree blocks (from, to) allowed by `allow`.
    double max_outside(const std::function<bool(int from_deg, int to_deg)>& allow) const;
};

/// Matrix of the linear map z^J -> image(J) in the orthonormal basis.
FibreOperator operator_from_map(const GradedBasis& basis,
                                const std::function<CPolynomial(const MultiIndex&)>& image);

/// h^{pi_n}: phi -> det(h)^{n/p} phi(h^{-1} .). `det_power` overrides the
/// principal value of det(h)^{n/p}.
FibreOperator pi_n_linear(const Mat& h, int n, std::optional<Complex> det_power = std::nullopt);

/// taubar_w: phi -> Delta^n_{zeta,w} phi(zeta^w); degree l goes to (1-(zeta|w))^{n-l} phi.
FibreOperator tau_bar_pi_n(const Vec& w, int n);

/// S(w): degree l -> l+1, phi -> (n-l)(zeta|w) phi.
FibreOperator shift_generator(const Vec& w, int n);

/// sum_{k<=n} A^k / k!, exact for A with A^{n+1} = 0.
FibreOperator nilpotent_exp(const FibreOperator& A, int order);

/// [g]_z^{pi_n} = (d_z g)^{pi_n} taubar_u, with the continuous branch of det(d_z g)^{n/p}.
FibreOperator cocycle_pi_n(const GroupElement& g, const Vec& z, int n);

struct FactorizationReport {
    double max_error = 0.0;
    FibreOperator lhs;
    FibreOperator rhs;
};

/// [g]_z = (d_z g)^pi (B^{1/2}_{z,a})^pi exp(S(a)) (B^{-1/2}_{z,a})^pi, a = g^{-1}(0).
FactorizationReport factorization_check(const GroupElement& g, const Vec& z, int n);

struct FibreMetric {
    std::vector<double> beta;  ///< weight per degree 0..n

    static FibreMetric fock(int n) { return {std::vector<double>(static_cast<std::size_t>(n) + 1, 1.0)}; }
};

/// G^{-1} A^H G with G = diag(beta_deg).
FibreOperator metric_adjoint(const FibreOperator& A, const FibreMetric& beta);

/// beta_l = (n-l)!/n!, the weights making the compact generators skew.
FibreMetric u_invariant_weights(int n, int d);

struct PhaseComparison {
    double max_error = 0.0;  ///< max |phase * A - B|
    double rel_error = 0.0;  ///< max_error / max |B|
    Complex phase{1.0, 0.0};
};

/// Compare A and B up to one unimodular scalar fixed by the largest |A| entry.
PhaseComparison compare_up_to_phase(const Mat& A, const Mat& B);

void to_json(nlohmann::json& j, const FibreOperator& op);

}  // namespace symdom
