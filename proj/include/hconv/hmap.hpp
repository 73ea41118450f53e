#pragma once

#include <algorithm>
#include <cmath>

#include "hconv/rational.hpp"
#include "hconv/series.hpp"

namespace hconv {

/// Harmonic map f = h + conj(g) on the unit disk; g is stored unconjugated.
struct HarmonicMap {
    PowerSeries h;
    PowerSeries g;

    int order() const noexcept { return std::min(h.order(), g.order()); }
};

/// Slanted half-plane convolution parameters: slant gamma, dilatation e^{i theta} z^n, and a.
struct SlantParams {
    double gamma = 0.0;
    double theta = 0.0;
    int n = 1;
    double a = 0.0;

    /// Throws InvalidInput unless |a| < 1 and n >= 1.
    void validate() const;
};

/// Dyadic family parameters: alpha, generation index n, combination weight t.
struct FamilyParams {
    double alpha = 0.0;
    int n = 1;
    double t = 0.0;

    /// Throws InvalidInput unless alpha lies in [-2(sqrt2-1), 2(sqrt2-1)], n >= 1, t in [0, 1].
    void validate() const;
};

/// Largest |alpha| for which the dyadic family is convex in the imaginary direction.
inline const double kDyadicAlphaBound = 2.0 * (std::sqrt(2.0) - 1.0);

/// Shearing: h' = F' / (1 + e^{-2i gamma} omega), g' = omega h', both with zero constant term.
/// The result satisfies h + e^{-2i gamma} g = F.
HarmonicMap shear(const PowerSeries& F, const PowerSeries& omega, double gamma, int order);
/// Same shear for a rational omega = P/Q: h' = F' Q / (Q + e^{-2i gamma} P). Costs O(N deg) instead of O(N^2).
HarmonicMap shear(const PowerSeries& F, const RationalFunction& omega, double gamma, int order);

/// The half-plane map f_{a,alpha} (|a| < 1).
HarmonicMap half_plane_map(double a, double alpha, int order);

/// Shear of z/(1 - e^{i gamma} z): a member of S^0(H_gamma) for |omega| < 1.
HarmonicMap slanted_halfplane(double gamma, const PowerSeries& omega, int order);
HarmonicMap slanted_halfplane(double gamma, const RationalFunction& omega, int order);

/// Shear of the strip map (1/2i) log((1+iz)/(1-iz)) with gamma = 0.
HarmonicMap strip_map(const PowerSeries& omega, int order);
HarmonicMap strip_map(const RationalFunction& omega, int order);

/// Analytic sum F of the dyadic family: family_sum Hadamard log(1/(1-z)).
PowerSeries dyadic_family_sum(double alpha, int n, int order);

/// Shear of the dyadic family sum with gamma = 0.
HarmonicMap dyadic_family_map(double alpha, int n, const PowerSeries& omega, int order);
HarmonicMap dyadic_family_map(double alpha, int n, const RationalFunction& omega, int order);

/// g' / h'. Throws InvalidInput when h'(0) vanishes.
PowerSeries dilatation_series(const HarmonicMap& f);

/// h(z) + conj(g(z)).
Complex eval_map(const HarmonicMap& f, Complex z) noexcept;

/// The map z -> e^{-i alpha} f(e^{i alpha} z).
HarmonicMap rotation_conjugate(const HarmonicMap& f, double alpha);

} // namespace hconv
