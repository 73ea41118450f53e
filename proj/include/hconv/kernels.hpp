#pragma once

#include <span>
#include <vector>

#include "hconv/errors.hpp"

// Data-parallel grid kernels. Every kernel has a serial reference version and
// an OpenMP version with identical results (reductions break ties on the
// smallest index), so the parallel path can be checked against the serial one.

namespace hconv::kernels {

enum class Backend { serial, parallel };

/// Value of a reduction together with the sample index that attained it.
struct Extremum {
    double value = 0.0;
    std::size_t index = 0;
};

/// Largest |g'/h'| over the points, plus the smallest |h'| (for degeneracy checks).
/// Every kernel below takes polynomial coefficients and evaluates them at the points.
struct DilatationExtremes {
    Extremum max_ratio;
    Extremum min_denominator;
};

namespace serial {

/// out[i] = sum_k coeffs[k] points[i]^k (Horner).
void evaluate_polynomial(std::span<const Complex> coeffs, std::span<const Complex> points, std::span<Complex> out);
DilatationExtremes dilatation_extremes(std::span<const Complex> h_prime, std::span<const Complex> g_prime,
                                       std::span<const Complex> points);
/// min Re((1 - z^2) F'(z)).
Extremum hs_minimum(std::span<const Complex> f_prime, std::span<const Complex> points);
/// max |num/den|, with the smallest |den| reported as min_denominator.
DilatationExtremes rational_extremes(std::span<const Complex> num, std::span<const Complex> den,
                                     std::span<const Complex> points);
/// Sign changes of (y - level) around the closed sampled curve for each level.
/// Samples within tie_band of a level are nudged up by nudge.
std::vector<int> crossing_counts(std::span<const double> y, std::span<const double> levels, double tie_band,
                                 double nudge);

} // namespace serial

namespace parallel {

void evaluate_polynomial(std::span<const Complex> coeffs, std::span<const Complex> points, std::span<Complex> out);
DilatationExtremes dilatation_extremes(std::span<const Complex> h_prime, std::span<const Complex> g_prime,
                                       std::span<const Complex> points);
Extremum hs_minimum(std::span<const Complex> f_prime, std::span<const Complex> points);
DilatationExtremes rational_extremes(std::span<const Complex> num, std::span<const Complex> den,
                                     std::span<const Complex> points);
std::vector<int> crossing_counts(std::span<const double> y, std::span<const double> levels, double tie_band,
                                 double nudge);

} // namespace parallel

// Backend dispatch.
void evaluate_polynomial(std::span<const Complex> coeffs, std::span<const Complex> points, std::span<Complex> out,
                         Backend backend = Backend::parallel);
DilatationExtremes dilatation_extremes(std::span<const Complex> h_prime, std::span<const Complex> g_prime,
                                       std::span<const Complex> points, Backend backend = Backend::parallel);
Extremum hs_minimum(std::span<const Complex> f_prime, std::span<const Complex> points,
                    Backend backend = Backend::parallel);
DilatationExtremes rational_extremes(std::span<const Complex> num, std::span<const Complex> den,
                                     std::span<const Complex> points, Backend backend = Backend::parallel);
std::vector<int> crossing_counts(std::span<const double> y, std::span<const double> levels, double tie_band,
                                 double nudge, Backend backend = Backend::parallel);

} // namespace hconv::kernels
