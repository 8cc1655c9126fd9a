#include "symdom/fibre.hpp"

#include "symdom/json_io.hpp"

#include <nlohmann/json.hpp>

#include <cmath>

namespace symdom {

GradedBasis::GradedBasis(int d, int n) : d_(d), n_(n)
{
    if (d <= 0 || n < 0)
        throw std::invalid_argument("GradedBasis: need d > 0 and n >= 0");
    for (int k = 0; k <= n; ++k) {
        begin_.push_back(static_cast<int>(idx_.size()));
        auto h = homogeneous_indices(d, k);
        idx_.insert(idx_.end(), h.begin(), h.end());
    }
    begin_.push_back(static_cast<int>(idx_.size()));
    for (int i = 0; i < size(); ++i) {
        pos_.emplace(idx_[static_cast<std::size_t>(i)], i);
        norm_.push_back(std::sqrt(idx_[static_cast<std::size_t>(i)].factorial()));
    }
}

int GradedBasis::position(const MultiIndex& I) const
{
    auto it = pos_.find(I);
    return it == pos_.end() ? -1 : it->second;
}

Eigen::VectorXcd GradedBasis::coordinates(const CPolynomial& p) const
{
    if (p.dim() != d_)
        throw std::invalid_argument("GradedBasis: dimension mismatch");
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(size());
    for (const auto& [I, c] : p.terms()) {
        int pos = position(I);
        if (pos < 0)
            throw std::invalid_argument("GradedBasis: polynomial degree exceeds level");
        v(pos) = c * fock_norm(pos);
    }
    return v;
}

CPolynomial GradedBasis::polynomial(const Eigen::VectorXcd& coords) const
{
    CPolynomial p(d_);
    for (int i = 0; i < size(); ++i)
        p.add_term(index(i), coords(i) / fock_norm(i));
    return p;
}

FibreOperator FibreOperator::operator*(const FibreOperator& o) const
{
    if (!(basis == o.basis))
        throw std::invalid_argument("FibreOperator: basis mismatch");
    return {basis, matrix * o.matrix};
}

double FibreOperator::max_outside(const std::function<bool(int, int)>& allow) const
{
    double m = 0.0;
    for (int i = 0; i < basis.size(); ++i)
        for (int j = 0; j < basis.size(); ++j)
            if (!allow(basis.degree_of(j), basis.degree_of(i)))
                m = std::max(m, std::abs(matrix(i, j)));
    return m;
}

FibreOperator operator_from_map(const GradedBasis& basis,
                                const std::function<CPolynomial(const MultiIndex&)>& image)
{
    const int N = basis.size();
    Mat M = Mat::Zero(N, N);
    for (int j = 0; j < N; ++j) {
        CPolynomial q = image(basis.index(j));
        for (const auto& [I, c] : q.terms()) {
            int i = basis.position(I);
            if (i < 0)
                throw std::invalid_argument("operator_from_map: image leaves the fibre");
            M(i, j) = c * basis.fock_norm(i) / basis.fock_norm(j);
        }
    }
    return {basis, M};
}

FibreOperator pi_n_linear(const Mat& h, int n, std::optional<Complex> det_power)
{
    const int d = static_cast<int>(h.rows());
    if (h.cols() != d)
        throw std::invalid_argument("pi_n_linear: h must be square");
    Eigen::PartialPivLU<Mat> lu(h);
    Complex det = lu.determinant();
    if (std::abs(det) < 1e-300)
        throw std::invalid_argument("pi_n_linear: singular matrix");
    Mat hinv = lu.inverse();
    const double p = d + 1.0;
    Complex scale = det_power ? *det_power : cpow(det, n / p);

    // Coordinate i of h^{-1} zeta as a linear form.
    std::vector<CPolynomial> forms;
    for (int i = 0; i < d; ++i) {
        std::vector<Complex> row(static_cast<std::size_t>(d));
        for (int j = 0; j < d; ++j)
            row[static_cast<std::size_t>(j)] = hinv(i, j);
        forms.push_back(CPolynomial::linear(row));
    }
    GradedBasis basis(d, n);
    return operator_from_map(basis, [&](const MultiIndex& J) {
        return CPolynomial::monomial(J).substitute(forms) * scale;
    });
}

FibreOperator tau_bar_pi_n(const Vec& w, int n)
{
    const int d = static_cast<int>(w.size());
    CPolynomial delta = CPolynomial::constant(d, 1.0) - pairing_form(w);
    GradedBasis basis(d, n);
    std::vector<CPolynomial> powers{CPolynomial::constant(d, 1.0)};
    for (int k = 1; k <= n; ++k)
        powers.push_back(powers.back() * delta);
    return operator_from_map(basis, [&](const MultiIndex& J) {
        return powers[static_cast<std::size_t>(n - J.degree())] * CPolynomial::monomial(J);
    });
}

FibreOperator shift_generator(const Vec& w, int n)
{
    const int d = static_cast<int>(w.size());
    CPolynomial form = pairing_form(w);
    GradedBasis basis(d, n);
    return operator_from_map(basis, [&](const MultiIndex& J) {
        return form * CPolynomial::monomial(J) * Complex(n - J.degree());
    });
}

FibreOperator nilpotent_exp(const FibreOperator& A, int order)
{
    const auto N = A.matrix.rows();
    Mat term = Mat::Identity(N, N);
    Mat sum = term;
    for (int k = 1; k <= order; ++k) {
        term = term * A.matrix / static_cast<double>(k);
        sum += term;
    }
    return {A.basis, sum};
}

FibreOperator cocycle_pi_n(const GroupElement& g, const Vec& z, int n)
{
    const double p = g.dim() + 1.0;
    CocycleParts parts = cocycle_translation_part(g, z);
    return pi_n_linear(parts.linear, n, g.det_derivative_power(z, n / p)) * tau_bar_pi_n(parts.shift, n);
}

FactorizationReport factorization_check(const GroupElement& g, const Vec& z, int n)
{
    const double p = g.dim() + 1.0;
    Vec a = g.inverse_origin();
    Complex D = quasi_determinant(z, a);
    if (std::abs(D) <= kQuasiEps)
        throw QuasiSingular("factorization_check: (z, g^{-1}(0)) is not quasi-invertible");

    FactorizationReport r;
    r.lhs = cocycle_pi_n(g, z, n);
    // det B^{1/2}_{z,a} = sqrt(D)^p, so its n/p power is D^{n/2} on the principal branch.
    FibreOperator half = pi_n_linear(bergman_sqrt(z, a), n, cpow(D, n / 2.0));
    FibreOperator half_inv = pi_n_linear(bergman_inv_sqrt(z, a), n, cpow(D, -n / 2.0));
    r.rhs = pi_n_linear(g.derivative(z), n, g.det_derivative_power(z, n / p)) * half *
            nilpotent_exp(shift_generator(a, n), n) * half_inv;
    r.max_error = (r.lhs.matrix - r.rhs.matrix).cwiseAbs().maxCoeff();
    return r;
}

FibreOperator metric_adjoint(const FibreOperator& A, const FibreMetric& beta)
{
    const auto& b = A.basis;
    if (static_cast<int>(beta.beta.size()) != b.level() + 1)
        throw std::invalid_argument("metric_adjoint: need one weight per degree");
    Mat M = A.matrix.adjoint();
    for (int i = 0; i < b.size(); ++i)
        for (int j = 0; j < b.size(); ++j)
            M(i, j) *= beta.beta[static_cast<std::size_t>(b.degree_of(j))] /
                       beta.beta[static_cast<std::size_t>(b.degree_of(i))];
    return {b, M};
}

FibreMetric u_invariant_weights(int n, int d)
{
    if (n < 0 || d <= 0)
        throw std::invalid_argument("u_invariant_weights: need n >= 0, d > 0");
    FibreMetric m;
    double w = 1.0;
    for (int l = 0; l <= n; ++l) {
        m.beta.push_back(w);
        if (l < n)
            w /= (n - l);
    }
    return m;
}

PhaseComparison compare_up_to_phase(const Mat& A, const Mat& B)
{
    if (A.rows() != B.rows() || A.cols() != B.cols())
        throw std::invalid_argument("compare_up_to_phase: shape mismatch");
    Eigen::Index i = 0, j = 0;
    A.cwiseAbs().maxCoeff(&i, &j);
    PhaseComparison c;
    Complex ratio = A(i, j) == Complex{} ? Complex{1.0, 0.0} : B(i, j) / A(i, j);
    c.phase = std::abs(ratio) > 0 ? ratio / std::abs(ratio) : Complex{1.0, 0.0};
    c.max_error = (c.phase * A - B).cwiseAbs().maxCoeff();
    double scale = B.cwiseAbs().maxCoeff();
    c.rel_error = scale > 0 ? c.max_error / scale : c.max_error;
    return c;
}

void to_json(nlohmann::json& j, const FibreOperator& op)
{
    nlohmann::json m = nlohmann::json::array();
    for (Eigen::Index r = 0; r < op.matrix.rows(); ++r)
        for (Eigen::Index c = 0; c < op.matrix.cols(); ++c)
            m.push_back(complex_json(op.matrix(r, c)));
    j = {{"basis", {{"d", op.basis.dim()}, {"n", op.basis.level()}}}, {"matrix", m}};
}

}  // namespace symdom
