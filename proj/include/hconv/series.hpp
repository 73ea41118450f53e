#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "hconv/cpoly.hpp"

namespace hconv {

/// Default truncation order for series work.
inline constexpr int kDefaultOrder = 128;

/// Truncated Taylor series c0 + c1 z + ... + cN z^N on the unit disk.
///
/// Always holds exactly N+1 coefficients; explicit zeros are kept. Binary
/// operations truncate to the smaller order of their operands.
class PowerSeries {
public:
    /// Zero series of the given order.
    explicit PowerSeries(int order = kDefaultOrder);
    /// Takes ownership of the coefficients; order = size - 1 (size >= 1).
    explicit PowerSeries(std::vector<Complex> coeffs);

    static PowerSeries from_polynomial(const ComplexPolynomial& p, int order);
    /// The identity map z.
    static PowerSeries z(int order);

    int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    std::span<const Complex> coeffs() const noexcept { return coeffs_; }
    Complex operator[](int k) const noexcept;
    Complex& at(int k) { return coeffs_.at(static_cast<std::size_t>(k)); }

    PowerSeries truncated(int order) const;

private:
    std::vector<Complex> coeffs_;
};

PowerSeries hadamard(const PowerSeries& a, const PowerSeries& b);
/// Term-by-term derivative; order drops by one (order 0 gives the zero series of order 0).
PowerSeries differentiate(const PowerSeries& f);
/// Termwise antiderivative with zero constant term; order rises by one.
PowerSeries integrate(const PowerSeries& f);
PowerSeries add(const PowerSeries& a, const PowerSeries& b);
PowerSeries subtract(const PowerSeries& a, const PowerSeries& b);
PowerSeries scale(const PowerSeries& f, Complex s);
PowerSeries multiply(const PowerSeries& a, const PowerSeries& b);
/// Long division a / b; b's constant term must have modulus above 1e-13.
PowerSeries divide(const PowerSeries& a, const PowerSeries& b);
/// z * f, exact, so the order rises by one.
PowerSeries times_z(const PowerSeries& f);
Complex evaluate(const PowerSeries& f, Complex z) noexcept;
/// Series of z -> f(e^{i alpha} z).
PowerSeries rotate(const PowerSeries& f, double alpha);

/// Largest coefficient deviation over the shared indices.
double max_coefficient_deviation(const PowerSeries& a, const PowerSeries& b);

/// Expansion of num/den to the given order.
PowerSeries expand_rational(const ComplexPolynomial& num, const ComplexPolynomial& den, int order);

enum class SeriesKind {
    geometric,             ///< z / (1 - e^{i alpha} z)
    half_plane_analytic,   ///< (z/(1+a) - e^{i alpha} z^2/2) / (1 - e^{i alpha} z)^2
    half_plane_coanalytic, ///< (a e^{2i alpha} z/(1+a) - e^{3i alpha} z^2/2) / (1 - e^{i alpha} z)^2
    log_strip,             ///< (1/2i) log((1+iz)/(1-iz))
    log_half,              ///< log(1/(1-z))
    family_sum,            ///< z(1+z^2)...(1+z^{2^n}+alpha z^{2^{n-1}}) / (1+z^{2^{n+1}})
};

struct NamedSeriesParams {
    double alpha = 0.0;
    double a = 0.0;
    int n = 1;
};

SeriesKind parse_series_kind(std::string_view name);
PowerSeries named_series(SeriesKind kind, const NamedSeriesParams& params, int order);

/// Numerator of the dyadic family's left factor (without the leading z):
/// (1+z^2)(1+z^4)...(1+z^{2^{n-1}}) (1+z^{2^n}+alpha z^{2^{n-1}}).
ComplexPolynomial dyadic_numerator(double alpha, int n);
/// 1 + z^{2^{n+1}}.
ComplexPolynomial dyadic_denominator(int n);

} // namespace hconv
