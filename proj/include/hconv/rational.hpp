#pragma once

#include <cstdint>

#include "hconv/cpoly.hpp"
#include "hconv/series.hpp"

namespace hconv {

/// Quotient num/den of complex polynomials. Common factors are never cancelled.
class RationalFunction {
public:
    RationalFunction() : num_(), den_{1.0} {}
    RationalFunction(ComplexPolynomial num, ComplexPolynomial den);
    /// Polynomial viewed as a rational function with denominator 1.
    RationalFunction(ComplexPolynomial poly); // NOLINT(google-explicit-constructor)

    const ComplexPolynomial& num() const noexcept { return num_; }
    const ComplexPolynomial& den() const noexcept { return den_; }

    Complex operator()(Complex z) const noexcept { return num_(z) / den_(z); }

    /// Quotient rule at the polynomial level: (num' den - num den') / den^2.
    RationalFunction derivative() const;

    PowerSeries to_series(int order) const { return expand_rational(num_, den_, order); }

private:
    ComplexPolynomial num_;
    ComplexPolynomial den_;
};

/// Decides r1 == r2 by cross-multiplied evaluation at random disk points
/// (radius <= 0.9): |n1 d2 - n2 d1| <= tol * max(1, |n1 d2|, |n2 d1|) everywhere.
bool equal_by_evaluation(const RationalFunction& r1, const RationalFunction& r2, int points = 20,
                         double tol = 1e-9, std::uint64_t seed = 0x5eed);

} // namespace hconv
