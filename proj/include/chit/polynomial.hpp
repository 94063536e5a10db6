#pragma once

#include <initializer_list>
#include <span>
#include <vector>

namespace chit {

/// Real polynomial with coefficients in ascending order: coefficient(i) multiplies x^i.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<double> coefficients);
    Polynomial(std::initializer_list<double> coefficients);

    /// prod (x - r) over the given roots; monic.
    static Polynomial from_roots(std::span<const double> roots);

    const std::vector<double> & coefficients() const { return c_; }
    double coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : 0.0; }
    /// Degree of the highest non-zero coefficient; -1 for the zero polynomial.
    int degree() const;

    double operator()(double x) const;

private:
    std::vector<double> c_;
};

}  // namespace chit
