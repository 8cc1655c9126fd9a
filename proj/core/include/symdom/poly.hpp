#pragma once

#include "symdom/exact.hpp"
#include "symdom/multi_index.hpp"
#include "symdom/special.hpp"

#include <Eigen/Dense>
#include <nlohmann/json_fwd.hpp>

#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

namespace symdom {

using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;

/// (z|w) = sum_i z_i conj(w_i); linear in z.
inline Complex pairing(const Vec& z, const Vec& w)
{
    return w.dot(z);
}

template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Complex> {
    static bool is_zero(const Complex& c) { return c == Complex{}; }
    static Complex conj(const Complex& c) { return std::conj(c); }
    static Complex from_double(double x) { return {x, 0.0}; }
    static Complex to_complex(const Complex& c) { return c; }
};

template <>
struct ScalarTraits<GaussianRational> {
    static bool is_zero(const GaussianRational& c) { return c.is_zero(); }
    static GaussianRational conj(const GaussianRational& c) { return c.conj(); }
    /// Exact binary value of x.
    static GaussianRational from_double(double x) { return {Rational(x)}; }
    static Complex to_complex(const GaussianRational& c) { return c.to_complex(); }
};

/// Sparse polynomial sum_I p_I z^I in `dim` commuting variables. Zero
/// coefficients are never stored.
template <class S>
class BasicPolynomial {
public:
    using Scalar = S;
    using Terms = std::map<MultiIndex, S, GradedLex>;

    explicit BasicPolynomial(int dim = 1) : dim_(dim)
    {
        if (dim < 0)
            throw std::invalid_argument("polynomial: negative dimension");
    }

    static BasicPolynomial constant(int dim, const S& c)
    {
        BasicPolynomial p(dim);
        p.add_term(MultiIndex(dim), c);
        return p;
    }
    static BasicPolynomial variable(int dim, int i)
    {
        return monomial(MultiIndex::unit(dim, i), S(1));
    }
    static BasicPolynomial monomial(const MultiIndex& I, const S& c = S(1))
    {
        BasicPolynomial p(I.dim());
        p.add_term(I, c);
        return p;
    }
    /// Linear form sum_i coeffs[i] z_i.
    static BasicPolynomial linear(const std::vector<S>& coeffs)
    {
        int d = static_cast<int>(coeffs.size());
        BasicPolynomial p(d);
        for (int i = 0; i < d; ++i)
            p.add_term(MultiIndex::unit(d, i), coeffs[static_cast<std::size_t>(i)]);
        return p;
    }

    int dim() const { return dim_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// Total degree; -1 for the zero polynomial.
    int degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.degree(); }

    S coefficient(const MultiIndex& I) const
    {
        auto it = terms_.find(I);
        return it == terms_.end() ? S(0) : it->second;
    }

    void add_term(const MultiIndex& I, const S& c)
    {
        if (I.dim() != dim_)
            throw std::invalid_argument("polynomial: index dimension mismatch");
        if (ScalarTraits<S>::is_zero(c))
            return;
        auto [it, inserted] = terms_.try_emplace(I, c);
        if (!inserted) {
            it->second += c;
            if (ScalarTraits<S>::is_zero(it->second))
                terms_.erase(it);
        }
    }

    BasicPolynomial& operator+=(const BasicPolynomial& o)
    {
        check_dim(o);
        for (const auto& [I, c] : o.terms_)
            add_term(I, c);
        return *this;
    }
    BasicPolynomial& operator-=(const BasicPolynomial& o)
    {
        check_dim(o);
        for (const auto& [I, c] : o.terms_)
            add_term(I, -c);
        return *this;
    }
    BasicPolynomial& operator*=(const S& s)
    {
        if (ScalarTraits<S>::is_zero(s)) {
            terms_.clear();
            return *this;
        }
        for (auto& kv : terms_)
            kv.second *= s;
        return *this;
    }

    friend BasicPolynomial operator+(BasicPolynomial a, const BasicPolynomial& b) { return a += b; }
    friend BasicPolynomial operator-(BasicPolynomial a, const BasicPolynomial& b) { return a -= b; }
    friend BasicPolynomial operator*(BasicPolynomial a, const S& s) { return a *= s; }
    friend BasicPolynomial operator*(const S& s, BasicPolynomial a) { return a *= s; }
    friend BasicPolynomial operator-(BasicPolynomial a) { return a *= S(-1); }

    friend BasicPolynomial operator*(const BasicPolynomial& a, const BasicPolynomial& b)
    {
        a.check_dim(b);
        BasicPolynomial r(a.dim_);
        for (const auto& [I, x] : a.terms_)
            for (const auto& [J, y] : b.terms_)
                r.add_term(I + J, x * y);
        return r;
    }

    BasicPolynomial pow(int k) const
    {
        if (k < 0)
            throw std::invalid_argument("polynomial: negative power");
        BasicPolynomial r = constant(dim_, S(1));
        BasicPolynomial base = *this;
        while (k) {
            if (k & 1)
                r = r * base;
            k >>= 1;
            if (k)
                base = base * base;
        }
        return r;
    }

    BasicPolynomial homogeneous_component(int k) const
    {
        BasicPolynomial r(dim_);
        for (const auto& [I, c] : terms_)
            if (I.degree() == k)
                r.terms_.emplace(I, c);
        return r;
    }

    BasicPolynomial truncate(int max_degree) const
    {
        BasicPolynomial r(dim_);
        for (const auto& [I, c] : terms_)
            if (I.degree() <= max_degree)
                r.terms_.emplace(I, c);
        return r;
    }

    bool is_homogeneous(int k) const
    {
        for (const auto& kv : terms_)
            if (kv.first.degree() != k)
                return false;
        return true;
    }

    /// d/dz_i
    BasicPolynomial derivative(int i) const
    {
        BasicPolynomial r(dim_);
        for (const auto& [I, c] : terms_) {
            if (I[i] == 0)
                continue;
            MultiIndex J = I;
            J[i] -= 1;
            r.add_term(J, c * S(static_cast<long long>(I[i])));
        }
        return r;
    }

    /// (zeta|dbar) p = sum_i zeta_i d_i p.
    BasicPolynomial directional_derivative(const std::vector<S>& zeta) const
    {
        if (static_cast<int>(zeta.size()) != dim_)
            throw std::invalid_argument("directional_derivative: dimension mismatch");
        BasicPolynomial r(dim_);
        for (int i = 0; i < dim_; ++i)
            if (!ScalarTraits<S>::is_zero(zeta[static_cast<std::size_t>(i)]))
                r += derivative(i) * zeta[static_cast<std::size_t>(i)];
        return r;
    }

    /// Horner-free evaluation; T must accept multiplication by S.
    template <class T, class Point>
    T evaluate(const Point& x) const
    {
        T acc{};
        for (const auto& [I, c] : terms_) {
            T m = T(c);
            for (int i = 0; i < dim_; ++i)
                for (int e = 0; e < I[i]; ++e)
                    m *= x[i];
            acc += m;
        }
        return acc;
    }

    /// Substitute z_i -> images[i]; all images share one target dimension.
    BasicPolynomial substitute(const std::vector<BasicPolynomial>& images) const
    {
        if (static_cast<int>(images.size()) != dim_)
            throw std::invalid_argument("substitute: need one image per variable");
        int target = images.empty() ? 0 : images.front().dim();
        BasicPolynomial r(target);
        std::vector<std::vector<BasicPolynomial>> powers(images.size());
        for (const auto& [I, c] : terms_) {
            BasicPolynomial m = constant(target, c);
            for (int i = 0; i < dim_; ++i) {
                auto& pw = powers[static_cast<std::size_t>(i)];
                if (pw.empty())
                    pw.push_back(constant(target, S(1)));
                while (static_cast<int>(pw.size()) <= I[i])
                    pw.push_back(pw.back() * images[static_cast<std::size_t>(i)]);
                if (I[i] > 0)
                    m = m * pw[static_cast<std::size_t>(I[i])];
            }
            r += m;
        }
        return r;
    }

    /// Place the variables at positions offset.. of a new_dim-variable ring.
    BasicPolynomial embed(int new_dim, int offset) const
    {
        if (offset < 0 || offset + dim_ > new_dim)
            throw std::invalid_argument("embed: variables out of range");
        BasicPolynomial r(new_dim);
        for (const auto& [I, c] : terms_) {
            MultiIndex J(new_dim);
            for (int i = 0; i < dim_; ++i)
                J[offset + i] = I[i];
            r.terms_.emplace(std::move(J), c);
        }
        return r;
    }

    template <class F>
    auto map_coefficients(F&& f) const
    {
        using T = std::decay_t<decltype(f(std::declval<S>()))>;
        BasicPolynomial<T> r(dim_);
        for (const auto& [I, c] : terms_)
            r.add_term(I, f(c));
        return r;
    }

    friend bool operator==(const BasicPolynomial& a, const BasicPolynomial& b)
    {
        return a.dim_ == b.dim_ && a.terms_ == b.terms_;
    }

private:
    void check_dim(const BasicPolynomial& o) const
    {
        if (o.dim_ != dim_)
            throw std::invalid_argument("polynomial: dimension mismatch");
    }

    int dim_;
    Terms terms_;
};

using CPolynomial = BasicPolynomial<Complex>;
using ExactPolynomial = BasicPolynomial<GaussianRational>;

/// Holomorphic function handle C^d -> C.
using HoloFn = std::function<Complex(const Vec&)>;

template <class S>
S fock_inner(const BasicPolynomial<S>& p, const BasicPolynomial<S>& q)
{
    if (p.dim() != q.dim())
        throw std::invalid_argument("fock_inner: dimension mismatch");
    S acc(0);
    const auto& small = p.size() <= q.size() ? p : q;
    const auto& large = p.size() <= q.size() ? q : p;
    for (const auto& [I, c] : small.terms()) {
        auto it = large.terms().find(I);
        if (it == large.terms().end())
            continue;
        S pi = &small == &p ? c : it->second;
        S qi = &small == &p ? it->second : c;
        S fac(1);
        for (int v : I.entries())
            for (int j = 2; j <= v; ++j)
                fac *= S(static_cast<long long>(j));
        acc += ScalarTraits<S>::conj(pi) * qi * fac;
    }
    return acc;
}

CPolynomial homogeneous_component(const CPolynomial& p, int k);

/// E^k(zeta, omega) = (zeta|omega)^k / k!
Complex e_kernel(int k, const Vec& zeta, const Vec& omega);

/// E^k_omega as a polynomial in zeta.
CPolynomial e_kernel_poly(int k, const Vec& omega);

/// Linear form zeta -> (zeta|w) as a polynomial.
CPolynomial pairing_form(const Vec& w);

CPolynomial to_polynomial(const ExactPolynomial& p);

Complex evaluate(const CPolynomial& p, const Vec& z);

/// ((zeta|dbar)^k p)(z), exact for polynomials.
Complex contract_derivative(const Vec& zeta, const CPolynomial& p, const Vec& z, int k);

struct CauchyOptions {
    /// Circle radius in t is radius / max_i |zeta_i|.
    double radius = 0.1;
    int nodes = 64;
    /// Optional domain predicate; every node must satisfy it.
    std::function<bool(const Vec&)> domain;
};

/// ((zeta|dbar)^k f)(z) = d^k/dt^k f(z + t zeta) at t = 0, by the Cauchy
/// integral over a circle in t.
Complex contract_derivative(const Vec& zeta, const HoloFn& f, const Vec& z, int k,
                            const CauchyOptions& opt = {});

/// All derivatives d^j/dt^j f(z + t zeta), j = 0..kmax, from one set of nodes.
std::vector<Complex> line_derivatives(const Vec& zeta, const HoloFn& f, const Vec& z, int kmax,
                                      const CauchyOptions& opt = {});

void to_json(nlohmann::json& j, const CPolynomial& p);
void from_json(const nlohmann::json& j, CPolynomial& p);

}  // namespace symdom
