#include "symdom/group.hpp"

namespace symdom {

GroupElement::GroupElement(Vec x, Mat k) : x_(std::move(x)), k_(std::move(k))
{
    if (k_.rows() != x_.size() || k_.cols() != x_.size())
        throw std::invalid_argument("GroupElement: k must be d x d");
    require_interior(x_, "GroupElement");
    const auto d = x_.size();
    if ((k_.adjoint() * k_ - Mat::Identity(d, d)).norm() > 1e-9)
        throw std::invalid_argument("GroupElement: k must be unitary");
}

GroupElement GroupElement::identity(int d)
{
    return {Vec::Zero(d), Mat::Identity(d, d)};
}

GroupElement GroupElement::transvection(const Vec& x)
{
    return {x, Mat::Identity(x.size(), x.size())};
}

GroupElement GroupElement::linear(const Mat& k)
{
    return {Vec::Zero(k.rows()), k};
}

Vec GroupElement::apply(const Vec& z) const
{
    return transvection_apply(x_, k_ * z);
}

Mat GroupElement::derivative(const Vec& z) const
{
    return transvection_derivative(x_, k_ * z) * k_;
}

Complex GroupElement::det_derivative_power(const Vec& z, double s) const
{
    return transvection_det_power(x_, k_ * z, s) * cpow(k_.determinant(), s);
}

Vec GroupElement::inverse_origin() const
{
    return -(k_.adjoint() * x_);
}

GroupElement GroupElement::inverse() const
{
    return compose(linear(k_.adjoint()), transvection(-x_));
}

GroupElement compose(const GroupElement& g1, const GroupElement& g2)
{
    if (g1.dim() != g2.dim())
        throw std::invalid_argument("compose: dimension mismatch");
    Vec o2 = g2.apply(Vec::Zero(g2.dim()));
    Vec x = g1.apply(o2);
    Mat k = transvection_derivative(-x, x) * g1.derivative(o2) * g2.derivative(Vec::Zero(g2.dim()));
    // Round-off drifts k off the unitary group; project back.
    Eigen::JacobiSVD<Mat> svd(k, Eigen::ComputeFullU | Eigen::ComputeFullV);
    return {x, svd.matrixU() * svd.matrixV().adjoint()};
}

CocycleParts cocycle_translation_part(const GroupElement& g, const Vec& z)
{
    return {g.derivative(z), -quasi_inverse(g.inverse_origin(), z)};
}

}  // namespace symdom
