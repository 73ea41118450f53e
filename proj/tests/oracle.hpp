#pragma once

// Independent reference computations for the tests. Nothing here calls the
// library's root finder or series arithmetic.

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include <Eigen/Eigenvalues>

namespace oracle {

using C = std::complex<double>;

/// Eigenvalues of the companion matrix of c0 + c1 z + ... + cn z^n.
inline std::vector<C> companion_roots(const std::vector<C>& coeffs) {
    int n = static_cast<int>(coeffs.size()) - 1;
    while (n > 0 && coeffs[std::size_t(n)] == C{}) --n;
    if (n < 1) return {};
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 1; i < n; ++i) m(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) m(i, n - 1) = -coeffs[std::size_t(i)] / coeffs[std::size_t(n)];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(m, false);
    std::vector<C> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out[std::size_t(i)] = es.eigenvalues()(i);
    return out;
}

inline int count_inside(const std::vector<C>& coeffs) {
    int k = 0;
    for (const C& z : companion_roots(coeffs)) k += std::abs(z) < 1.0;
    return k;
}

inline double max_root_modulus(const std::vector<C>& coeffs) {
    double m = 0.0;
    for (const C& z : companion_roots(coeffs)) m = std::max(m, std::abs(z));
    return m;
}

inline C horner(const std::vector<C>& c, C z) {
    C acc{};
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
    return acc;
}

/// Taylor coefficients of num/den by direct recurrence (den[0] != 0).
inline std::vector<C> rational_taylor(const std::vector<C>& num, const std::vector<C>& den, int order) {
    std::vector<C> out(std::size_t(order + 1));
    for (int k = 0; k <= order; ++k) {
        C s = k < int(num.size()) ? num[std::size_t(k)] : C{};
        for (int j = 1; j <= k && j < int(den.size()); ++j) s -= den[std::size_t(j)] * out[std::size_t(k - j)];
        out[std::size_t(k)] = s / den[0];
    }
    return out;
}

inline std::vector<C> random_disk_points(int count, double r_max, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<C> pts;
    while (int(pts.size()) < count) {
        const C z(2.0 * u(rng) - 1.0, 2.0 * u(rng) - 1.0);
        if (std::abs(z) <= 1.0) pts.push_back(z * r_max);
    }
    return pts;
}

} // namespace oracle
