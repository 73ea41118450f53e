#include "hconv/kernels.hpp"

#include <cmath>
#include <limits>

#include <omp.h>

namespace hconv::kernels {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Complex horner(std::span<const Complex> c, Complex z) noexcept {
    Complex acc{};
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
    return acc;
}

bool larger(const Extremum& a, const Extremum& b) noexcept {
    return a.value > b.value || (a.value == b.value && a.index < b.index);
}

bool smaller(const Extremum& a, const Extremum& b) noexcept {
    return a.value < b.value || (a.value == b.value && a.index < b.index);
}

void require_same_size(std::span<const Complex> points, std::span<Complex> out) {
    if (points.size() != out.size()) throw InvalidInput("kernel output span has the wrong size");
}

DilatationExtremes ratio_step(DilatationExtremes acc, Complex num, Complex den, std::size_t i) noexcept {
    const double d = std::abs(den);
    const Extremum ratio{std::abs(num) / d, i};
    if (larger(ratio, acc.max_ratio)) acc.max_ratio = ratio;
    const Extremum small{d, i};
    if (smaller(small, acc.min_denominator)) acc.min_denominator = small;
    return acc;
}

void merge(DilatationExtremes& into, const DilatationExtremes& part) noexcept {
    if (larger(part.max_ratio, into.max_ratio)) into.max_ratio = part.max_ratio;
    if (smaller(part.min_denominator, into.min_denominator)) into.min_denominator = part.min_denominator;
}

DilatationExtremes empty_extremes() noexcept { return {{-kInf, 0}, {kInf, 0}}; }

int crossings_at(std::span<const double> y, double level, double tie_band, double nudge) noexcept {
    const std::size_t n = y.size();
    if (n < 2) return 0;
    auto offset = [&](std::size_t i) {
        double d = y[i] - level;
        if (std::abs(d) < tie_band) d += nudge;
        return d;
    };
    int count = 0;
    double prev = offset(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        const double cur = offset(i);
        if ((prev < 0.0) != (cur < 0.0)) ++count;
        prev = cur;
    }
    return count;
}

} // namespace

namespace serial {

void evaluate_polynomial(std::span<const Complex> coeffs, std::span<const Complex> points, std::span<Complex> out) {
    require_same_size(points, out);
    for (std::size_t i = 0; i < points.size(); ++i) out[i] = horner(coeffs, points[i]);
}

DilatationExtremes dilatation_extremes(std::span<const Complex> h_prime, std::span<const Complex> g_prime,
                                       std::span<const Complex> points) {
    DilatationExtremes acc = empty_extremes();
    for (std::size_t i = 0; i < points.size(); ++i)
        acc = ratio_step(acc, horner(g_prime, points[i]), horner(h_prime, points[i]), i);
    return acc;
}

Extremum hs_minimum(std::span<const Complex> f_prime, std::span<const Complex> points) {
    Extremum best{kInf, 0};
    for (std::size_t i = 0; i < points.size(); ++i) {
        const Complex z = points[i];
        const Extremum cur{((1.0 - z * z) * horner(f_prime, z)).real(), i};
        if (smaller(cur, best)) best = cur;
    }
    return best;
}

DilatationExtremes rational_extremes(std::span<const Complex> num, std::span<const Complex> den,
                                     std::span<const Complex> points) {
    DilatationExtremes acc = empty_extremes();
    for (std::size_t i = 0; i < points.size(); ++i)
        acc = ratio_step(acc, horner(num, points[i]), horner(den, points[i]), i);
    return acc;
}

std::vector<int> crossing_counts(std::span<const double> y, std::span<const double> levels, double tie_band,
                                 double nudge) {
    std::vector<int> counts(levels.size());
    for (std::size_t l = 0; l < levels.size(); ++l) counts[l] = crossings_at(y, levels[l], tie_band, nudge);
    return counts;
}

} // namespace serial

namespace parallel {

void evaluate_polynomial(std::span<const Complex> coeffs, std::span<const Complex> points, std::span<Complex> out) {
    require_same_size(points, out);
    const auto n = static_cast<std::ptrdiff_t>(points.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) out[std::size_t(i)] = horner(coeffs, points[std::size_t(i)]);
}

DilatationExtremes dilatation_extremes(std::span<const Complex> h_prime, std::span<const Complex> g_prime,
                                       std::span<const Complex> points) {
    DilatationExtremes result = empty_extremes();
    const auto n = static_cast<std::ptrdiff_t>(points.size());
#pragma omp parallel
    {
        DilatationExtremes local = empty_extremes();
#pragma omp for schedule(static) nowait
        for (std::ptrdiff_t i = 0; i < n; ++i) {
            const Complex z = points[std::size_t(i)];
            local = ratio_step(local, horner(g_prime, z), horner(h_prime, z), std::size_t(i));
        }
#pragma omp critical(hconv_dilatation_extremes)
        merge(result, local);
    }
    return result;
}

Extremum hs_minimum(std::span<const Complex> f_prime, std::span<const Complex> points) {
    Extremum result{kInf, 0};
    const auto n = static_cast<std::ptrdiff_t>(points.size());
#pragma omp parallel
    {
        Extremum local{kInf, 0};
#pragma omp for schedule(static) nowait
        for (std::ptrdiff_t i = 0; i < n; ++i) {
            const Complex z = points[std::size_t(i)];
            const Extremum cur{((1.0 - z * z) * horner(f_prime, z)).real(), std::size_t(i)};
            if (smaller(cur, local)) local = cur;
        }
#pragma omp critical(hconv_hs_minimum)
        if (smaller(local, result)) result = local;
    }
    return result;
}

DilatationExtremes rational_extremes(std::span<const Complex> num, std::span<const Complex> den,
                                     std::span<const Complex> points) {
    DilatationExtremes result = empty_extremes();
    const auto n = static_cast<std::ptrdiff_t>(points.size());
#pragma omp parallel
    {
        DilatationExtremes local = empty_extremes();
#pragma omp for schedule(static) nowait
        for (std::ptrdiff_t i = 0; i < n; ++i) {
            const Complex z = points[std::size_t(i)];
            local = ratio_step(local, horner(num, z), horner(den, z), std::size_t(i));
        }
#pragma omp critical(hconv_rational_extremes)
        merge(result, local);
    }
    return result;
}

std::vector<int> crossing_counts(std::span<const double> y, std::span<const double> levels, double tie_band,
                                 double nudge) {
    std::vector<int> counts(levels.size());
    const auto n = static_cast<std::ptrdiff_t>(levels.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t l = 0; l < n; ++l)
        counts[std::size_t(l)] = crossings_at(y, levels[std::size_t(l)], tie_band, nudge);
    return counts;
}

} // namespace parallel

void evaluate_polynomial(std::span<const Complex> coeffs, std::span<const Complex> points, std::span<Complex> out,
                         Backend backend) {
    backend == Backend::serial ? serial::evaluate_polynomial(coeffs, points, out)
                               : parallel::evaluate_polynomial(coeffs, points, out);
}

DilatationExtremes dilatation_extremes(std::span<const Complex> h_prime, std::span<const Complex> g_prime,
                                       std::span<const Complex> points, Backend backend) {
    return backend == Backend::serial ? serial::dilatation_extremes(h_prime, g_prime, points)
                                      : parallel::dilatation_extremes(h_prime, g_prime, points);
}

Extremum hs_minimum(std::span<const Complex> f_prime, std::span<const Complex> points, Backend backend) {
    return backend == Backend::serial ? serial::hs_minimum(f_prime, points) : parallel::hs_minimum(f_prime, points);
}

DilatationExtremes rational_extremes(std::span<const Complex> num, std::span<const Complex> den,
                                     std::span<const Complex> points, Backend backend) {
    return backend == Backend::serial ? serial::rational_extremes(num, den, points)
                                      : parallel::rational_extremes(num, den, points);
}

std::vector<int> crossing_counts(std::span<const double> y, std::span<const double> levels, double tie_band,
                                 double nudge, Backend backend) {
    return backend == Backend::serial ? serial::crossing_counts(y, levels, tie_band, nudge)
                                      : parallel::crossing_counts(y, levels, tie_band, nudge);
}

} // namespace hconv::kernels
