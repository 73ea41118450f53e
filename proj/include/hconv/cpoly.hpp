#pragma once

#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "hconv/errors.hpp"

namespace hconv {

/// Complex polynomial with coefficients in ascending degree.
///
/// Construction trims trailing coefficients whose modulus is below
/// 1e-15 times the largest modulus, so the leading coefficient is
/// nonzero. The zero polynomial has no coefficients and degree -1.
class ComplexPolynomial {
public:
    ComplexPolynomial() = default;
    explicit ComplexPolynomial(std::vector<Complex> coeffs);
    ComplexPolynomial(std::initializer_list<Complex> coeffs);

    static ComplexPolynomial monomial(int power, Complex coefficient = 1.0);

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    std::span<const Complex> coeffs() const noexcept { return coeffs_; }

    /// Coefficient of z^k; zero beyond the degree.
    Complex operator[](int k) const noexcept;
    Complex leading() const noexcept { return is_zero() ? Complex{} : coeffs_.back(); }
    Complex constant() const noexcept { return (*this)[0]; }

    /// Horner evaluation.
    Complex operator()(Complex z) const noexcept;

    ComplexPolynomial derivative() const;
    double max_modulus() const noexcept;

    friend ComplexPolynomial operator+(const ComplexPolynomial& a, const ComplexPolynomial& b);
    friend ComplexPolynomial operator-(const ComplexPolynomial& a, const ComplexPolynomial& b);
    friend ComplexPolynomial operator*(const ComplexPolynomial& a, const ComplexPolynomial& b);
    friend ComplexPolynomial operator*(Complex s, const ComplexPolynomial& p);
    friend ComplexPolynomial operator-(const ComplexPolynomial& p);

private:
    std::vector<Complex> coeffs_;
};

/// Outcome of locating the zeros of a polynomial relative to |z| = 1.
struct ZeroCountReport {
    int inside = 0;
    int on_circle = 0;
    /// Successive Cohn reductions, each rescaled to unit max coefficient.
    std::vector<ComplexPolynomial> chain;
    /// Set when a reduction was inapplicable and the root oracle decided the rest.
    bool degenerate = false;
};

/// Tolerance band below which |an| - |a0| counts as "not strictly greater".
inline constexpr double kCohnRelativeTolerance = 1e-12;
/// Root moduli within this distance of 1 count as on the circle.
inline constexpr double kOnCircleTolerance = 1e-9;

/// p*(z) = z^n conj(p(1/conj z)), with n = deg p.
ComplexPolynomial reciprocal_adjoint(const ComplexPolynomial& p);

/// (conj(an) p - a0 p*) / z. Throws ReductionNotApplicable unless |a0| < |an|.
ComplexPolynomial cohn_reduce(const ComplexPolynomial& p);

/// True when |a0| < |an| holds with the Cohn tolerance.
bool cohn_applicable(const ComplexPolynomial& p) noexcept;

ZeroCountReport count_zeros_in_disk(const ComplexPolynomial& p);

/// All deg p roots by simultaneous (Durand-Kerner) iteration.
///
/// Starts from points equally spaced on a circle of radius 1 + max |ak/an|.
/// Stops when the largest correction drops below 1e-13 (relative) or when every
/// root's residual is below tol times the evaluation scale sum |ak| |z|^k.
/// Throws NumericFailure after 500 iterations otherwise.
std::vector<Complex> roots(const ComplexPolynomial& p, double tol = 1e-12);

/// Whether every zero of p lies strictly inside the unit disk, which certifies
/// |p/p*| < 1 there. nullopt when some zero sits on the circle.
std::optional<bool> blaschke_bound_certificate(const ComplexPolynomial& p);

} // namespace hconv
