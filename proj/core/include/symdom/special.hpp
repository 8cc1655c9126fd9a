#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

namespace symdom {

using Complex = std::complex<double>;

/// Thrown when a rising factorial in a denominator vanishes.
class PochhammerPole : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Rising factorial (a)_k = a (a+1) ... (a+k-1); (a)_0 = 1.
double pochhammer(double a, int k);

/// (a)_0 .. (a)_n.
std::vector<double> pochhammer_table(double a, int n);

double factorial(int k);

/// Generalized binomial coefficient C(a, k) = (a-k+1)_k / k! for real a.
double binomial(double a, int k);

/// Principal power z^s. Integer exponents are evaluated by repeated
/// multiplication so that no branch is involved.
Complex cpow(Complex z, double s);

bool is_integer(double s, double tol = 1e-12);

}  // namespace symdom
