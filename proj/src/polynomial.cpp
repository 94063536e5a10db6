#include <chit/polynomial.hpp>

namespace chit {

Polynomial::Polynomial(std::vector<double> coefficients) : c_(std::move(coefficients)) {}

Polynomial::Polynomial(std::initializer_list<double> coefficients) : c_(coefficients) {}

Polynomial Polynomial::from_roots(std::span<const double> roots)
{
    std::vector<double> c{1.0};
    for (double r : roots) {
        std::vector<double> next(c.size() + 1, 0.0);
        for (std::size_t i = 0; i < c.size(); ++i) {
            next[i + 1] += c[i];
            next[i] -= r * c[i];
        }
        c = std::move(next);
    }
    return Polynomial(std::move(c));
}

int Polynomial::degree() const
{
    for (std::size_t i = c_.size(); i-- > 0;)
        if (c_[i] != 0.0)
            return int(i);
    return -1;
}

double Polynomial::operator()(double x) const
{
    double acc = 0.0;
    for (std::size_t i = c_.size(); i-- > 0;)
        acc = acc * x + c_[i];
    return acc;
}

}  // namespace chit
