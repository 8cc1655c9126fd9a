#pragma once

#include <initializer_list>
#include <vector>

namespace symdom {

/// Exponent vector I = (i_1, ..., i_d) of a monomial z^I.
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(int dim) : e_(static_cast<std::size_t>(dim), 0) {}
    MultiIndex(std::initializer_list<int> entries);
    explicit MultiIndex(std::vector<int> entries);

    static MultiIndex unit(int dim, int i);

    int dim() const { return static_cast<int>(e_.size()); }
    /// |I|
    int degree() const;
    /// I! = i_1! ... i_d!
    double factorial() const;

    int operator[](int i) const { return e_[static_cast<std::size_t>(i)]; }
    int& operator[](int i) { return e_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& entries() const { return e_; }

    MultiIndex operator+(const MultiIndex& other) const;
    /// Componentwise difference; caller guarantees other <= *this.
    MultiIndex operator-(const MultiIndex& other) const;
    bool divides(const MultiIndex& other) const;

    /// Concatenation (I, J) in dim(I) + dim(J) variables.
    MultiIndex concat(const MultiIndex& tail) const;
    MultiIndex slice(int begin, int count) const;

    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

private:
    std::vector<int> e_;
};

/// Graded lexicographic order: total degree first, then z_1 > z_2 > ... .
struct GradedLex {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const;
};

/// All indices of total degree exactly k, in graded lex order.
std::vector<MultiIndex> homogeneous_indices(int dim, int k);

/// All indices of total degree <= n, in graded lex order.
std::vector<MultiIndex> graded_indices(int dim, int n);

/// C(d+k-1, k), the dimension of the homogeneous polynomials of degree k.
long long homogeneous_dimension(int dim, int k);

}  // namespace symdom
