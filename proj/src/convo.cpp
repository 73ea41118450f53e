#include "hconv/convo.hpp"

#include <algorithm>
#include <cmath>

#include "hconv/kernels.hpp"

namespace hconv {

namespace {

using P = ComplexPolynomial;

const P kOne{1.0};
const P kZ{0.0, 1.0};

P coefficients(int degree, std::initializer_list<std::pair<int, Complex>> terms) {
    std::vector<Complex> c(static_cast<std::size_t>(degree + 1));
    for (const auto& [k, v] : terms) c[static_cast<std::size_t>(k)] += v;
    return P(std::move(c));
}

void require_weight(double t) {
    if (!(t >= 0.0 && t <= 1.0)) throw InvalidInput("combination weight t must lie in [0, 1]");
}

} // namespace

HarmonicMap convolve(const HarmonicMap& f1, const HarmonicMap& f2) {
    return {hadamard(f1.h, f2.h), hadamard(f1.g, f2.g)};
}

HarmonicMap combination(const HarmonicMap& f1, const HarmonicMap& f2, double t) {
    require_weight(t);
    return {add(scale(f1.h, t), scale(f2.h, 1.0 - t)), add(scale(f1.g, t), scale(f2.g, 1.0 - t))};
}

RationalFunction monomial_dilatation(double theta, int n) {
    if (n < 0) throw InvalidInput("monomial dilatation needs n >= 0");
    return {P::monomial(n, std::polar(1.0, theta)), kOne};
}

RationalFunction quadratic_mobius(double a) {
    return {P{a, 0.0, -1.0}, P{1.0, 0.0, -a}};
}

RationalFunction squared_mobius(double a) {
    const P num{a, -1.0};
    const P den{1.0, -a};
    return {-(num * num), den * den};
}

RationalFunction power_mobius(double theta, double a, int n) {
    if (n < 1) throw InvalidInput("power_mobius needs n >= 1");
    return {std::polar(1.0, theta) * (P{a} - P::monomial(n)), kOne - P::monomial(n, a)};
}

RationalFunction mobius_power(double theta, double a, int n) {
    if (n < 1) throw InvalidInput("mobius_power needs n >= 1");
    P num{std::polar(1.0, theta)};
    P den{1.0};
    for (int k = 0; k < n; ++k) {
        num = num * P{a, -1.0};
        den = den * P{1.0, -a};
    }
    return {num, den};
}

ComplexPolynomial substitute_power(const ComplexPolynomial& p, int k) {
    if (k < 1) throw InvalidInput("substitute_power needs k >= 1");
    if (p.is_zero()) return p;
    std::vector<Complex> c(static_cast<std::size_t>(p.degree() * k + 1));
    for (int j = 0; j <= p.degree(); ++j) c[static_cast<std::size_t>(j * k)] = p[j];
    return P(std::move(c));
}

RationalFunction convolution_dilatation(double a, double gamma, const RationalFunction& omega) {
    if (!(std::abs(a) < 1.0)) throw InvalidInput("convolution dilatation needs |a| < 1");
    const Complex e = std::polar(1.0, -2.0 * gamma);
    const Complex E = std::polar(1.0, gamma);
    const P& Pn = omega.num();
    const P& Q = omega.den();
    const P W = Pn.derivative() * Q - Pn * Q.derivative();
    const P shifted = Q + e * Pn;
    const P common = (a - 1.0) * (kZ * W * P{1.0, -E});
    const P num = 2.0 * (Pn * shifted * P{a, -E}) + common;
    const P den = 2.0 * (P{1.0, -a * E} * Q * shifted) + e * common;
    return {num, den};
}

RationalFunction monomial_convolution_dilatation(const SlantParams& params) {
    params.validate();
    const double a = params.a;
    const int n = params.n;
    const double c1 = 0.5 * (2.0 - n + a * n);
    const double c2 = 0.5 * (n - 2.0 * a - a * n);
    const Complex eg = std::polar(1.0, params.gamma);
    const Complex et = std::polar(1.0, params.theta);
    const P core = coefficients(n + 1, {{n + 1, 1.0},
                                        {n, -a / eg},
                                        {1, c1 / et * eg * eg},
                                        {0, c2 / et * eg}});
    const P tilde = coefficients(n + 1, {{n + 1, c2 * et / eg},
                                         {n, c1 * et / (eg * eg)},
                                         {1, -a * eg},
                                         {0, 1.0}});
    return {P::monomial(n, -et * et / eg) * core, tilde};
}

ComplexPolynomial quadratic_mobius_quartic(double a) {
    return P{a * a, a * (a - 1.0), 1.0 + a * a - 4.0 * a, 1.0 - a, 1.0};
}

RationalFunction quadratic_mobius_convolution_dilatation(double a) {
    const P p = quadratic_mobius_quartic(a);
    return {p, reciprocal_adjoint(p)};
}

ComplexPolynomial squared_mobius_quartic(double a) {
    const double a2 = a * a;
    const double a3 = a2 * a;
    return P{-a3, -a + 4.0 * a2 - a3, 1.0 - 4.0 * a + 4.0 * a2 - a3, 1.0 - 4.0 * a + a2, 1.0};
}

RationalFunction squared_mobius_convolution_dilatation(double a) {
    if (!(a > 0.0 && a < 1.0)) throw InvalidInput("squared Mobius convolution needs 0 < a < 1");
    const P p = squared_mobius_quartic(a);
    return {p, reciprocal_adjoint(p)};
}

RationalFunction strip_convolution_dilatation(const RationalFunction& omega) {
    const P& Pn = omega.num();
    const P& Q = omega.den();
    const P W = Pn.derivative() * Q - Pn * Q.derivative();
    const P zW = kZ * W * P{1.0, 0.0, 1.0};
    const P num = -(zW - 2.0 * (kZ * kZ * Pn * (Q + Pn)));
    const P den = 2.0 * (Q * (Q + Pn)) - zW;
    return {num, den};
}

RationalFunction combination_dilatation(const FamilyParams& p1, const FamilyParams& p2, const RationalFunction& omega1,
                                        const RationalFunction& omega2, double t) {
    p1.validate();
    p2.validate();
    require_weight(t);
    const int n = p1.n;
    const int m = p2.n;
    if (n < m) throw InvalidInput("combination dilatation needs n >= m for the first map");

    auto last_factor = [](double alpha, int k) {
        return kOne + P::monomial(1 << k) + P::monomial(1 << (k - 1), alpha);
    };
    const P& P1 = omega1.num();
    const P& Q1 = omega1.den();
    const P& P2 = omega2.num();
    const P& Q2 = omega2.den();

    P first = last_factor(p1.alpha, n);
    P second = last_factor(p2.alpha, m);
    if (n > m) {
        for (int k = m; k < n; ++k) first = first * (kOne + P::monomial(1 << k));
        first = first * dyadic_denominator(m);
        second = second * dyadic_denominator(n);
    }
    const P left = t * (first * (Q2 + P2));
    const P right = (1.0 - t) * (second * (Q1 + P1));
    return {left * P1 + right * P2, left * Q1 + right * Q2};
}

std::optional<std::pair<int, Complex>> blaschke_shape(const RationalFunction& r, double tol) {
    const P& N = r.num();
    const P& D = r.den();
    if (N.is_zero()) return std::nullopt;
    const P Dstar = reciprocal_adjoint(D);
    const double scale = N.max_modulus();
    int k = 0;
    while (k <= N.degree() && std::abs(N[k]) <= tol * scale) ++k;
    if (N.degree() != k + Dstar.degree()) return std::nullopt;
    const Complex kappa = N[k] / Dstar[0];
    if (std::abs(std::abs(kappa) - 1.0) > tol) return std::nullopt;
    for (int j = 0; j <= Dstar.degree(); ++j)
        if (std::abs(N[k + j] - kappa * Dstar[j]) > tol * scale) return std::nullopt;
    return std::make_pair(k, kappa);
}

BoundednessReport certify_bounded(const RationalFunction& r, const DiskGrid& grid) {
    BoundednessReport rep;
    const auto points = grid.points();
    const auto ext = kernels::rational_extremes(r.num().coeffs(), r.den().coeffs(), points);
    rep.grid_max = ext.max_ratio.value;
    rep.grid_argmax = points[ext.max_ratio.index];
    const double den_scale = r.den().max_modulus();
    if (ext.min_denominator.value <= 1e-12 * den_scale) rep.pole = points[ext.min_denominator.index];

    if (r.num().is_zero()) {
        rep.method = BoundMethod::blaschke;
        rep.certified = true;
        rep.grid_max = 0.0;
        rep.note = "numerator vanishes identically";
        return rep;
    }
    if (std::abs(r.den().constant()) <= 1e-12 * den_scale) {
        rep.pole = Complex{};
        rep.note = "denominator vanishes at the origin; certificate withheld";
        return rep;
    }

    if (const auto shape = blaschke_shape(r)) {
        rep.method = BoundMethod::blaschke;
        rep.monomial_power = shape->first;
        rep.kappa = shape->second;
        const P core = reciprocal_adjoint(r.den());
        if (core.degree() >= 1) rep.zeros = roots(core);
        const ZeroCountReport count = count_zeros_in_disk(core);
        rep.on_circle = count.on_circle;
        rep.outside = core.degree() - count.inside - count.on_circle;
        rep.certified = rep.outside == 0 && count.inside + rep.monomial_power >= 1;
        if (*rep.certified) rep.pole.reset();
        rep.note = rep.on_circle > 0 ? "blaschke shape; circle zeros cancel between numerator and denominator"
                                     : "blaschke shape";
        return rep;
    }

    bool inner_zero = false;
    if (r.den().degree() >= 1) {
        rep.zeros = roots(r.den());
        for (const Complex& z : rep.zeros) {
            if (std::abs(z) < 1.0 - kOnCircleTolerance) {
                if (!rep.pole) rep.pole = z;
                inner_zero = true;
            }
        }
    }
    rep.note = inner_zero ? "numeric only; denominator has zeros in the disk (possibly cancelled)"
                               : "numeric only";
    return rep;
}

} // namespace hconv
