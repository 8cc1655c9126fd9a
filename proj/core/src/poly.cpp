#include "symdom/poly.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace symdom {

MultiIndex::MultiIndex(std::initializer_list<int> entries) : MultiIndex(std::vector<int>(entries)) {}

MultiIndex::MultiIndex(std::vector<int> entries) : e_(std::move(entries))
{
    for (int v : e_)
        if (v < 0)
            throw std::invalid_argument("MultiIndex: negative entry");
}

MultiIndex MultiIndex::unit(int dim, int i)
{
    MultiIndex m(dim);
    m[i] = 1;
    return m;
}

int MultiIndex::degree() const
{
    int s = 0;
    for (int v : e_)
        s += v;
    return s;
}

double MultiIndex::factorial() const
{
    double f = 1.0;
    for (int v : e_)
        f *= symdom::factorial(v);
    return f;
}

MultiIndex MultiIndex::operator+(const MultiIndex& other) const
{
    if (other.dim() != dim())
        throw std::invalid_argument("MultiIndex: dimension mismatch");
    MultiIndex r = *this;
    for (std::size_t i = 0; i < e_.size(); ++i)
        r.e_[i] += other.e_[i];
    return r;
}

MultiIndex MultiIndex::operator-(const MultiIndex& other) const
{
    if (!other.divides(*this))
        throw std::invalid_argument("MultiIndex: difference would be negative");
    MultiIndex r = *this;
    for (std::size_t i = 0; i < e_.size(); ++i)
        r.e_[i] -= other.e_[i];
    return r;
}

bool MultiIndex::divides(const MultiIndex& other) const
{
    if (other.dim() != dim())
        return false;
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > other.e_[i])
            return false;
    return true;
}

MultiIndex MultiIndex::concat(const MultiIndex& tail) const
{
    std::vector<int> v = e_;
    v.insert(v.end(), tail.e_.begin(), tail.e_.end());
    return MultiIndex(std::move(v));
}

MultiIndex MultiIndex::slice(int begin, int count) const
{
    return MultiIndex(std::vector<int>(e_.begin() + begin, e_.begin() + begin + count));
}

bool GradedLex::operator()(const MultiIndex& a, const MultiIndex& b) const
{
    int da = a.degree(), db = b.degree();
    if (da != db)
        return da < db;
    // Larger leading exponent comes first.
    return std::lexicographical_compare(b.entries().begin(), b.entries().end(),
                                        a.entries().begin(), a.entries().end());
}

namespace {

void fill_homogeneous(int dim, int k, int pos, std::vector<int>& cur, std::vector<MultiIndex>& out)
{
    if (pos == dim - 1) {
        cur[static_cast<std::size_t>(pos)] = k;
        out.emplace_back(cur);
        return;
    }
    for (int v = k; v >= 0; --v) {
        cur[static_cast<std::size_t>(pos)] = v;
        fill_homogeneous(dim, k - v, pos + 1, cur, out);
    }
}

}  // namespace

std::vector<MultiIndex> homogeneous_indices(int dim, int k)
{
    if (dim <= 0 || k < 0)
        return dim == 0 && k == 0 ? std::vector<MultiIndex>{MultiIndex(0)} : std::vector<MultiIndex>{};
    std::vector<MultiIndex> out;
    std::vector<int> cur(static_cast<std::size_t>(dim), 0);
    fill_homogeneous(dim, k, 0, cur, out);
    return out;
}

std::vector<MultiIndex> graded_indices(int dim, int n)
{
    std::vector<MultiIndex> out;
    for (int k = 0; k <= n; ++k) {
        auto h = homogeneous_indices(dim, k);
        out.insert(out.end(), h.begin(), h.end());
    }
    return out;
}

long long homogeneous_dimension(int dim, int k)
{
    // C(dim + k - 1, k)
    long long r = 1;
    for (int j = 1; j <= k; ++j)
        r = r * (dim + j - 1) / j;
    return r;
}

CPolynomial homogeneous_component(const CPolynomial& p, int k)
{
    return p.homogeneous_component(k);
}

Complex e_kernel(int k, const Vec& zeta, const Vec& omega)
{
    if (zeta.size() != omega.size())
        throw std::invalid_argument("e_kernel: dimension mismatch");
    return cpow(pairing(zeta, omega), k) / factorial(k);
}

CPolynomial pairing_form(const Vec& w)
{
    std::vector<Complex> c(static_cast<std::size_t>(w.size()));
    for (Eigen::Index i = 0; i < w.size(); ++i)
        c[static_cast<std::size_t>(i)] = std::conj(w(i));
    return CPolynomial::linear(c);
}

CPolynomial e_kernel_poly(int k, const Vec& omega)
{
    return pairing_form(omega).pow(k) * Complex(1.0 / factorial(k));
}

CPolynomial to_polynomial(const ExactPolynomial& p)
{
    return p.map_coefficients([](const GaussianRational& c) { return c.to_complex(); });
}

Complex evaluate(const CPolynomial& p, const Vec& z)
{
    if (z.size() != p.dim())
        throw std::invalid_argument("evaluate: dimension mismatch");
    return p.evaluate<Complex>(z);
}

Complex contract_derivative(const Vec& zeta, const CPolynomial& p, const Vec& z, int k)
{
    if (k < 0)
        throw std::invalid_argument("contract_derivative: negative order");
    std::vector<Complex> dir(zeta.data(), zeta.data() + zeta.size());
    CPolynomial q = p;
    for (int j = 0; j < k && !q.is_zero(); ++j)
        q = q.directional_derivative(dir);
    return evaluate(q, z);
}

std::vector<Complex> line_derivatives(const Vec& zeta, const HoloFn& f, const Vec& z, int kmax,
                                      const CauchyOptions& opt)
{
    if (kmax < 0)
        throw std::invalid_argument("line_derivatives: negative order");
    if (opt.nodes <= kmax)
        throw std::invalid_argument("line_derivatives: need more nodes than derivatives");
    std::vector<Complex> out(static_cast<std::size_t>(kmax) + 1, Complex{});
    double scale = zeta.size() ? zeta.cwiseAbs().maxCoeff() : 0.0;
    if (scale == 0.0) {
        out[0] = f(z);
        return out;
    }
    const double r = opt.radius / scale;
    const int N = opt.nodes;
    std::vector<Complex> vals(static_cast<std::size_t>(N));
    for (int j = 0; j < N; ++j) {
        double th = 2.0 * std::numbers::pi * j / N;
        Vec x = z + std::polar(r, th) * zeta;
        if (opt.domain && !opt.domain(x))
            throw std::domain_error("contract_derivative: Cauchy circle leaves the domain");
        vals[static_cast<std::size_t>(j)] = f(x);
    }
    for (int k = 0; k <= kmax; ++k) {
        Complex s{};
        for (int j = 0; j < N; ++j)
            s += vals[static_cast<std::size_t>(j)] * std::polar(1.0, -2.0 * std::numbers::pi * k * j / N);
        out[static_cast<std::size_t>(k)] = s * factorial(k) / (N * std::pow(r, k));
    }
    return out;
}

Complex contract_derivative(const Vec& zeta, const HoloFn& f, const Vec& z, int k,
                            const CauchyOptions& opt)
{
    return line_derivatives(zeta, f, z, k, opt).back();
}

void to_json(nlohmann::json& j, const CPolynomial& p)
{
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [I, c] : p.terms())
        terms.push_back({{"index", I.entries()}, {"re", c.real()}, {"im", c.imag()}});
    j = {{"dim", p.dim()}, {"terms", terms}};
}

void from_json(const nlohmann::json& j, CPolynomial& p)
{
    int dim = j.at("dim").get<int>();
    if (dim <= 0)
        throw std::invalid_argument("polynomial json: dim must be positive");
    CPolynomial r(dim);
    for (const auto& t : j.at("terms")) {
        MultiIndex I(t.at("index").get<std::vector<int>>());
        if (I.dim() != dim)
            throw std::invalid_argument("polynomial json: index length differs from dim");
        r.add_term(I, {t.value("re", 0.0), t.value("im", 0.0)});
    }
    p = std::move(r);
}

}  // namespace symdom
