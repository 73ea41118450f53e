#include "hconv/hmap.hpp"

#include <algorithm>
#include <cmath>

namespace hconv {

namespace {

constexpr double kAlphaSlack = 1e-12;

} // namespace

void SlantParams::validate() const {
    if (!(std::abs(a) < 1.0)) throw InvalidInput("slant parameter a must satisfy |a| < 1");
    if (n < 1) throw InvalidInput("dilatation power n must be >= 1");
}

void FamilyParams::validate() const {
    if (!(std::abs(alpha) <= kDyadicAlphaBound + kAlphaSlack))
        throw InvalidInput("family parameter alpha must lie in [-2(sqrt2-1), 2(sqrt2-1)]");
    if (n < 1) throw InvalidInput("family index n must be >= 1");
    if (!(t >= 0.0 && t <= 1.0)) throw InvalidInput("combination weight t must lie in [0, 1]");
}

HarmonicMap shear(const PowerSeries& F, const PowerSeries& omega, double gamma, int order) {
    if (order < 1) throw InvalidInput("shear needs truncation order >= 1");
    if (std::abs(F[0]) > 1e-12) throw InvalidInput("shear needs F(0) = 0");

    const Complex rot = std::polar(1.0, -2.0 * gamma);
    PowerSeries denom = scale(omega.truncated(order), rot);
    denom.at(0) += 1.0;
    if (std::abs(denom[0]) <= 1e-13)
        throw InvalidInput("shear: 1 + e^{-2i gamma} omega vanishes at the origin");

    const PowerSeries hp = divide(differentiate(F.truncated(order)), denom);
    const PowerSeries gp = multiply(omega, hp);
    return {integrate(hp), integrate(gp)};
}

HarmonicMap shear(const PowerSeries& F, const RationalFunction& omega, double gamma, int order) {
    if (order < 1) throw InvalidInput("shear needs truncation order >= 1");
    if (std::abs(F[0]) > 1e-12) throw InvalidInput("shear needs F(0) = 0");

    const ComplexPolynomial denom_poly = omega.den() + std::polar(1.0, -2.0 * gamma) * omega.num();
    if (std::abs(denom_poly.constant()) <= 1e-13 * std::max(1.0, std::abs(omega.den().constant())))
        throw InvalidInput("shear: 1 + e^{-2i gamma} omega vanishes at the origin");

    const PowerSeries Fp = differentiate(F.truncated(order));
    const PowerSeries denom = PowerSeries::from_polynomial(denom_poly, order - 1);
    const PowerSeries hp = divide(multiply(Fp, PowerSeries::from_polynomial(omega.den(), order - 1)), denom);
    const PowerSeries gp = divide(multiply(Fp, PowerSeries::from_polynomial(omega.num(), order - 1)), denom);
    return {integrate(hp), integrate(gp)};
}

HarmonicMap half_plane_map(double a, double alpha, int order) {
    if (!(std::abs(a) < 1.0)) throw InvalidInput("half-plane map needs |a| < 1");
    const NamedSeriesParams params{.alpha = alpha, .a = a};
    return {named_series(SeriesKind::half_plane_analytic, params, order),
            named_series(SeriesKind::half_plane_coanalytic, params, order)};
}

HarmonicMap slanted_halfplane(double gamma, const PowerSeries& omega, int order) {
    return shear(named_series(SeriesKind::geometric, {.alpha = gamma}, order), omega, gamma, order);
}

HarmonicMap slanted_halfplane(double gamma, const RationalFunction& omega, int order) {
    return shear(named_series(SeriesKind::geometric, {.alpha = gamma}, order), omega, gamma, order);
}

HarmonicMap strip_map(const RationalFunction& omega, int order) {
    return shear(named_series(SeriesKind::log_strip, {}, order), omega, 0.0, order);
}

HarmonicMap strip_map(const PowerSeries& omega, int order) {
    return shear(named_series(SeriesKind::log_strip, {}, order), omega, 0.0, order);
}

PowerSeries dyadic_family_sum(double alpha, int n, int order) {
    FamilyParams{.alpha = alpha, .n = n}.validate();
    const NamedSeriesParams params{.alpha = alpha, .n = n};
    return hadamard(named_series(SeriesKind::family_sum, params, order),
                    named_series(SeriesKind::log_half, {}, order));
}

HarmonicMap dyadic_family_map(double alpha, int n, const PowerSeries& omega, int order) {
    return shear(dyadic_family_sum(alpha, n, order), omega, 0.0, order);
}

HarmonicMap dyadic_family_map(double alpha, int n, const RationalFunction& omega, int order) {
    return shear(dyadic_family_sum(alpha, n, order), omega, 0.0, order);
}

PowerSeries dilatation_series(const HarmonicMap& f) {
    const PowerSeries hp = differentiate(f.h);
    if (std::abs(hp[0]) <= 1e-13) throw InvalidInput("dilatation needs h'(0) != 0");
    return divide(differentiate(f.g), hp);
}

Complex eval_map(const HarmonicMap& f, Complex z) noexcept {
    return evaluate(f.h, z) + std::conj(evaluate(f.g, z));
}

HarmonicMap rotation_conjugate(const HarmonicMap& f, double alpha) {
    return {scale(rotate(f.h, alpha), std::polar(1.0, -alpha)),
            scale(rotate(f.g, alpha), std::polar(1.0, alpha))};
}

} // namespace hconv
