#include "hconv/rational.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace hconv {

RationalFunction::RationalFunction(ComplexPolynomial num, ComplexPolynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw InvalidInput("rational function with zero denominator");
}

RationalFunction::RationalFunction(ComplexPolynomial poly) : num_(std::move(poly)), den_{1.0} {}

RationalFunction RationalFunction::derivative() const {
    return {num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_};
}

bool equal_by_evaluation(const RationalFunction& r1, const RationalFunction& r2, int points, double tol,
                         std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> radius(0.0, 0.9);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    for (int i = 0; i < points; ++i) {
        const Complex z = std::polar(radius(rng), angle(rng));
        const Complex lhs = r1.num()(z) * r2.den()(z);
        const Complex rhs = r2.num()(z) * r1.den()(z);
        const double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
        if (std::abs(lhs - rhs) > tol * scale) return false;
    }
    return true;
}

} // namespace hconv
