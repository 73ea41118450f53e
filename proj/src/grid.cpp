#include "hconv/grid.hpp"

#include <numbers>

namespace hconv {

DiskGrid::DiskGrid(std::vector<double> radii, int angles_per_ring) : radii_(std::move(radii)), angles_(angles_per_ring) {
    if (radii_.empty()) throw InvalidInput("disk grid needs at least one radius");
    if (angles_ < 1) throw InvalidInput("disk grid needs at least one angle per ring");
    for (std::size_t i = 0; i < radii_.size(); ++i) {
        if (!(radii_[i] > 0.0 && radii_[i] < 1.0)) throw InvalidInput("disk grid radii must lie in (0, 1)");
        if (i > 0 && !(radii_[i] > radii_[i - 1])) throw InvalidInput("disk grid radii must be strictly increasing");
    }
}

DiskGrid DiskGrid::standard() {
    return DiskGrid({0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.95, 0.99}, 720);
}

DiskGrid DiskGrid::uniform(int rings, int angles_per_ring, double r_max) {
    if (rings < 1) throw InvalidInput("disk grid needs at least one ring");
    std::vector<double> radii(static_cast<std::size_t>(rings));
    for (int i = 0; i < rings; ++i) radii[std::size_t(i)] = r_max * (i + 1) / rings;
    return DiskGrid(std::move(radii), angles_per_ring);
}

std::vector<Complex> DiskGrid::points() const {
    std::vector<Complex> pts;
    pts.reserve(size());
    for (double r : radii_) {
        const auto ring = circle_points(r, angles_);
        pts.insert(pts.end(), ring.begin(), ring.end());
    }
    return pts;
}

std::vector<Complex> circle_points(double r, int n) {
    std::vector<Complex> pts(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) pts[std::size_t(j)] = std::polar(r, 2.0 * std::numbers::pi * j / n);
    return pts;
}

} // namespace hconv
