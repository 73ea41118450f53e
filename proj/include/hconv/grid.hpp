#pragma once

#include <vector>

#include "hconv/errors.hpp"

namespace hconv {

/// Polar sample grid on the open unit disk: rings at the given radii, each with
/// angles_per_ring equally spaced points starting on the positive real axis.
class DiskGrid {
public:
    /// Radii must be strictly increasing and lie in (0, 1).
    DiskGrid(std::vector<double> radii, int angles_per_ring);

    /// Radii {0.1, ..., 0.9, 0.95, 0.99} with 720 angles per ring.
    static DiskGrid standard();
    /// Evenly spaced rings (r_max / rings, ..., r_max).
    static DiskGrid uniform(int rings, int angles_per_ring, double r_max);

    const std::vector<double>& radii() const noexcept { return radii_; }
    int angles_per_ring() const noexcept { return angles_; }
    double max_radius() const noexcept { return radii_.back(); }
    std::size_t size() const noexcept { return radii_.size() * static_cast<std::size_t>(angles_); }

    /// Ring-major sample points.
    std::vector<Complex> points() const;

private:
    std::vector<double> radii_;
    int angles_;
};

/// n points equally spaced on |z| = r, starting at z = r.
std::vector<Complex> circle_points(double r, int n);

} // namespace hconv
