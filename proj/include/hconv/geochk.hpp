#pragma once

#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "hconv/grid.hpp"
#include "hconv/hmap.hpp"
#include "hconv/kernels.hpp"

namespace hconv {

/// Truncation order used for boundary curves at r = 0.995.
inline constexpr int kBoundaryOrder = 4096;
/// |omega| within this band of 1 is reported as boundary-tight.
inline constexpr double kBoundaryTightBand = 1e-9;

struct DilatationBound {
    double max_modulus = 0.0;
    Complex argmax{};
    /// Grid point where |h'| < 1e-12; sense preservation is then undecided.
    std::optional<Complex> degenerate_point;
    bool boundary_tight = false;
};

/// max |g'/h'| over the grid.
DilatationBound max_dilatation_modulus(const HarmonicMap& f, const DiskGrid& grid,
                                       kernels::Backend backend = kernels::Backend::parallel);

/// min Re((1 - z^2) F'(z)) over the grid.
double hengartner_schober(const PowerSeries& F, const DiskGrid& grid,
                          kernels::Backend backend = kernels::Backend::parallel);

struct ConvexityParams {
    double r_max = 0.995;
    int samples = 4096;
    int levels = 256;
    DiskGrid grid = DiskGrid::standard();
    kernels::Backend backend = kernels::Backend::parallel;
};

struct LineSweep {
    int crossing_max = 0;
    /// Level (in the rotated frame) that attained crossing_max.
    double worst_level = 0.0;
    std::vector<int> counts;
};

/// Crossing counts of horizontal lines against a closed sampled curve.
/// Levels sit at (i + 1/2)/levels of the curve's height; ties are broken in
/// coordinates normalised to the bounding box.
LineSweep line_sweep(std::span<const Complex> curve, int levels,
                     kernels::Backend backend = kernels::Backend::parallel);

struct ConvexityReport {
    double direction = 0.0;
    bool passed = false;
    /// Set when the map is not locally univalent on the grid; then passed is false.
    bool withheld = false;
    std::optional<Complex> univalence_failure;
    double max_dilatation = 0.0;
    int analytic_crossing_max = 0;
    int harmonic_crossing_max = 0;
    int crossing_max = 0;
    std::string worst_line;
    /// Only reported for the imaginary direction, where the criterion applies.
    std::optional<double> min_hs;
    std::vector<int> analytic_counts;
    std::vector<int> harmonic_counts;
    std::string evidence = "numeric evidence (sampled line sweep), not a proof";
};

/// Two-stage check of convexity in direction phi: the analytic h - e^{2i phi} g
/// and the harmonic image itself, both sampled on |z| = r_max.
ConvexityReport convex_in_direction(const HarmonicMap& f, double phi, const ConvexityParams& params = {});

/// f(r e^{i s}) for s equally spaced in [0, 2 pi).
std::vector<Complex> image_curve(const HarmonicMap& f, double r, int samples,
                                 kernels::Backend backend = kernels::Backend::parallel);

/// h(r e^{i s}) for an analytic series.
std::vector<Complex> analytic_curve(const PowerSeries& h, double r, int samples,
                                    kernels::Backend backend = kernels::Backend::parallel);

struct LabelledCurve {
    std::string label;
    std::vector<Complex> points;
};

/// Rows "param-id,t-index,re,im".
void write_curves_csv(std::ostream& out, std::span<const LabelledCurve> curves);

/// Closed polylines in a 1000x1000 viewport, autoscaled to the joint bounding box.
void write_curves_svg(std::ostream& out, std::span<const LabelledCurve> curves, const std::string& title);

} // namespace hconv
