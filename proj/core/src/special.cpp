#include "symdom/special.hpp"

#include <cmath>

namespace symdom {

double pochhammer(double a, int k)
{
    if (k < 0)
        throw std::invalid_argument("pochhammer: negative order");
    double r = 1.0;
    for (int j = 0; j < k; ++j)
        r *= a + j;
    return r;
}

std::vector<double> pochhammer_table(double a, int n)
{
    std::vector<double> t(static_cast<std::size_t>(n) + 1);
    t[0] = 1.0;
    for (int k = 1; k <= n; ++k)
        t[k] = t[k - 1] * (a + k - 1);
    return t;
}

double factorial(int k)
{
    return pochhammer(1.0, k);
}

double binomial(double a, int k)
{
    if (k < 0)
        return 0.0;
    double r = 1.0;
    for (int j = 0; j < k; ++j)
        r *= (a - j) / (j + 1);
    return r;
}

bool is_integer(double s, double tol)
{
    return std::abs(s - std::round(s)) <= tol;
}

Complex cpow(Complex z, double s)
{
    if (is_integer(s)) {
        long long e = std::llround(s);
        bool invert = e < 0;
        unsigned long long m = static_cast<unsigned long long>(invert ? -e : e);
        Complex result{1.0, 0.0};
        Complex base = z;
        while (m) {
            if (m & 1ULL)
                result *= base;
            base *= base;
            m >>= 1ULL;
        }
        return invert ? Complex{1.0, 0.0} / result : result;
    }
    return std::pow(z, s);
}

}  // namespace symdom
