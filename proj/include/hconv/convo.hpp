#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hconv/grid.hpp"
#include "hconv/hmap.hpp"
#include "hconv/rational.hpp"

namespace hconv {

/// Harmonic convolution (h1 * h2) + conj(g1 * g2).
HarmonicMap convolve(const HarmonicMap& f1, const HarmonicMap& f2);

/// t f1 + (1 - t) f2, componentwise. Throws unless t in [0, 1].
HarmonicMap combination(const HarmonicMap& f1, const HarmonicMap& f2, double t);

// Dilatations used by the constructions.

/// e^{i theta} z^n.
RationalFunction monomial_dilatation(double theta, int n);
/// (a - z^2) / (1 - a z^2).
RationalFunction quadratic_mobius(double a);
/// -(a - z)^2 / (1 - a z)^2.
RationalFunction squared_mobius(double a);
/// e^{i theta} (a - z^n) / (1 - a z^n).
RationalFunction power_mobius(double theta, double a, int n);
/// e^{i theta} (a - z)^n / (1 - a z)^n.
RationalFunction mobius_power(double theta, double a, int n);

/// p(z^k).
ComplexPolynomial substitute_power(const ComplexPolynomial& p, int k);

/// Dilatation of f_{a,0} * f_gamma where f_gamma is the slanted half-plane shear
/// with dilatation omega = P/Q. Assembled over Q^2, so no division by Q occurs:
///   num = 2P(Q + eP)(a - Ez) + zW(a - 1)(1 - Ez)
///   den = 2(1 - aEz)Q(Q + eP) + e zW(a - 1)(1 - Ez)
/// with e = e^{-2i gamma}, E = e^{i gamma}, W = P'Q - PQ'.
RationalFunction convolution_dilatation(double a, double gamma, const RationalFunction& omega);

/// Closed form for omega = e^{i theta} z^n:
///   -e^{2i theta} e^{-i gamma} z^n P(z) / P~(z).
RationalFunction monomial_convolution_dilatation(const SlantParams& params);

/// z^4 + (1-a)z^3 + (1+a^2-4a)z^2 + a(a-1)z + a^2.
ComplexPolynomial quadratic_mobius_quartic(double a);
/// p / p* with the quartic above; equals the convolution dilatation for (a - z^2)/(1 - a z^2).
RationalFunction quadratic_mobius_convolution_dilatation(double a);

/// z^4 + (1-4a+a^2)z^3 + (1-4a+4a^2-a^3)z^2 + (-a+4a^2-a^3)z - a^3.
ComplexPolynomial squared_mobius_quartic(double a);
/// p / p* for the quartic above. Throws unless 0 < a < 1.
RationalFunction squared_mobius_convolution_dilatation(double a);

/// Dilatation of f_{0,0} * (strip shear with dilatation omega):
///   num = -z(W(1+z^2) - 2zP(Q+P)),  den = 2Q(Q+P) - zW(1+z^2).
RationalFunction strip_convolution_dilatation(const RationalFunction& omega);

/// Dilatation of t f_{alpha1,n} + (1-t) f_{alpha2,m} for n >= m, with the
/// family's shared product factor cancelled. For n = m the common
/// (1 + z^{2^{n+1}}) factor is dropped as well.
RationalFunction combination_dilatation(const FamilyParams& p1, const FamilyParams& p2, const RationalFunction& omega1,
                                        const RationalFunction& omega2, double t);

enum class BoundMethod { blaschke, numeric_only };

struct BoundednessReport {
    BoundMethod method = BoundMethod::numeric_only;
    /// true: |w| < 1 on the disk is certified. false: refuted. nullopt: no certificate.
    std::optional<bool> certified;
    /// Blaschke shape num = kappa z^k den*.
    int monomial_power = 0;
    Complex kappa{};
    /// Zeros of den* (the Blaschke core), or of den on the numeric path.
    std::vector<Complex> zeros;
    int outside = 0;
    int on_circle = 0;
    double grid_max = 0.0;
    Complex grid_argmax{};
    std::optional<Complex> pole;
    std::string note;
};

/// Shape test: num == kappa z^k den* with |kappa| within 1e-10 of 1. Returns (k, kappa).
std::optional<std::pair<int, Complex>> blaschke_shape(const RationalFunction& r, double tol = 1e-10);

/// Certifies |r| < 1 on the disk when r has Blaschke shape, via zero location
/// of the core; otherwise reports only the grid maximum.
BoundednessReport certify_bounded(const RationalFunction& r, const DiskGrid& grid = DiskGrid::standard());

} // namespace hconv
