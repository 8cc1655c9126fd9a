#include "symdom/sampling.hpp"

#include <cmath>

namespace symdom {

Vec random_ball_point(Rng& rng, int d, double radius)
{
    std::normal_distribution<double> g;
    std::uniform_real_distribution<double> u;
    Vec v(d);
    for (int i = 0; i < d; ++i)
        v(i) = {g(rng), g(rng)};
    double r = radius * std::pow(u(rng), 1.0 / (2.0 * d));
    return v.normalized() * r;
}

Vec random_vector(Rng& rng, int d, double scale)
{
    std::uniform_real_distribution<double> u(-scale, scale);
    Vec v(d);
    for (int i = 0; i < d; ++i) {
        double re = u(rng);
        double im = u(rng);
        v(i) = {re, im};
    }
    return v;
}

Mat random_unitary(Rng& rng, int d)
{
    std::normal_distribution<double> g;
    Mat a(d, d);
    for (int c = 0; c < d; ++c)
        for (int r = 0; r < d; ++r) {
            double re = g(rng);
            double im = g(rng);
            a(r, c) = {re, im};
        }
    Eigen::HouseholderQR<Mat> qr(a);
    Mat q = qr.householderQ();
    Mat rr = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int i = 0; i < d; ++i) {
        Complex diag = rr(i, i);
        if (std::abs(diag) > 0)
            q.col(i) *= diag / std::abs(diag);
    }
    return q;
}

GroupElement random_transvection(Rng& rng, int d, double radius)
{
    return GroupElement::transvection(random_ball_point(rng, d, radius));
}

GroupElement random_group_element(Rng& rng, int d, double radius)
{
    Vec x = random_ball_point(rng, d, radius);
    return {x, random_unitary(rng, d)};
}

}  // namespace symdom

namespace symdom {

CPolynomial random_polynomial(Rng& rng, int d, int deg, bool homogeneous)
{
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    CPolynomial p(d);
    for (const auto& I : graded_indices(d, deg))
        if (!homogeneous || I.degree() == deg) {
            double re = u(rng);
            double im = u(rng);
            p.add_term(I, Complex(re, im));
        }
    return p;
}

}  // namespace symdom
