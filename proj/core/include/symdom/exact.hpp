#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <ostream>
#include <string>

namespace symdom {

using Rational = boost::multiprecision::cpp_rational;

/// Element of Q(i): exact rational real and imaginary parts.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long long re) : re_(re) {}  // NOLINT: implicit on purpose for literals
    GaussianRational(Rational re, Rational im = 0) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }
    static GaussianRational ratio(long long num, long long den) { return {Rational(num, den)}; }

    const Rational& real() const { return re_; }
    const Rational& imag() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    GaussianRational conj() const { return {re_, -im_}; }
    std::complex<double> to_complex() const
    {
        return {static_cast<double>(re_), static_cast<double>(im_)};
    }

    GaussianRational& operator+=(const GaussianRational& o)
    {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o)
    {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o)
    {
        Rational r = re_ * o.re_ - im_ * o.im_;
        Rational m = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(m);
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o)
    {
        Rational n = o.re_ * o.re_ + o.im_ * o.im_;
        if (n == 0)
            throw std::domain_error("GaussianRational: division by zero");
        Rational r = (re_ * o.re_ + im_ * o.im_) / n;
        Rational m = (im_ * o.re_ - re_ * o.im_) / n;
        re_ = std::move(r);
        im_ = std::move(m);
        return *this;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    friend GaussianRational operator-(const GaussianRational& a) { return {-a.re_, -a.im_}; }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b)
    {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    friend std::ostream& operator<<(std::ostream& os, const GaussianRational& g)
    {
        return os << "(" << g.re_ << ")+(" << g.im_ << ")i";
    }

private:
    Rational re_{0};
    Rational im_{0};
};

/// Exact rising factorial for rational arguments.
inline Rational pochhammer_exact(const Rational& a, int k)
{
    Rational r = 1;
    for (int j = 0; j < k; ++j)
        r *= a + j;
    return r;
}

inline Rational factorial_exact(int k)
{
    return pochhammer_exact(Rational(1), k);
}

}  // namespace symdom
