#include "hconv/series.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace hconv {

namespace {

constexpr double kDivisorFloor = 1e-13;

int last_nonzero(const PowerSeries& f, int upto) {
    for (int k = upto; k >= 0; --k)
        if (f[k] != Complex{}) return k;
    return -1;
}

void require_order(int order) {
    if (order < 0) throw InvalidInput("series order must be nonnegative");
}

} // namespace

PowerSeries::PowerSeries(int order) {
    require_order(order);
    coeffs_.assign(static_cast<std::size_t>(order) + 1, Complex{});
}

PowerSeries::PowerSeries(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw InvalidInput("a power series needs at least one coefficient");
}

PowerSeries PowerSeries::from_polynomial(const ComplexPolynomial& p, int order) {
    PowerSeries s(order);
    for (int k = 0; k <= std::min(order, p.degree()); ++k) s.at(k) = p[k];
    return s;
}

PowerSeries PowerSeries::z(int order) {
    PowerSeries s(order);
    if (order >= 1) s.at(1) = 1.0;
    return s;
}

Complex PowerSeries::operator[](int k) const noexcept {
    if (k < 0 || k > order()) return {};
    return coeffs_[static_cast<std::size_t>(k)];
}

PowerSeries PowerSeries::truncated(int new_order) const {
    require_order(new_order);
    std::vector<Complex> c(static_cast<std::size_t>(new_order) + 1);
    for (int k = 0; k <= std::min(new_order, order()); ++k) c[std::size_t(k)] = (*this)[k];
    return PowerSeries(std::move(c));
}

PowerSeries hadamard(const PowerSeries& a, const PowerSeries& b) {
    const int n = std::min(a.order(), b.order());
    PowerSeries c(n);
    for (int k = 0; k <= n; ++k) c.at(k) = a[k] * b[k];
    return c;
}

PowerSeries differentiate(const PowerSeries& f) {
    if (f.order() == 0) return PowerSeries(0);
    PowerSeries d(f.order() - 1);
    for (int k = 1; k <= f.order(); ++k) d.at(k - 1) = static_cast<double>(k) * f[k];
    return d;
}

PowerSeries integrate(const PowerSeries& f) {
    PowerSeries s(f.order() + 1);
    for (int k = 0; k <= f.order(); ++k) s.at(k + 1) = f[k] / static_cast<double>(k + 1);
    return s;
}

PowerSeries add(const PowerSeries& a, const PowerSeries& b) {
    const int n = std::min(a.order(), b.order());
    PowerSeries c(n);
    for (int k = 0; k <= n; ++k) c.at(k) = a[k] + b[k];
    return c;
}

PowerSeries subtract(const PowerSeries& a, const PowerSeries& b) {
    const int n = std::min(a.order(), b.order());
    PowerSeries c(n);
    for (int k = 0; k <= n; ++k) c.at(k) = a[k] - b[k];
    return c;
}

PowerSeries scale(const PowerSeries& f, Complex s) {
    PowerSeries c(f.order());
    for (int k = 0; k <= f.order(); ++k) c.at(k) = s * f[k];
    return c;
}

PowerSeries multiply(const PowerSeries& a, const PowerSeries& b) {
    const int n = std::min(a.order(), b.order());
    const int la = last_nonzero(a, n);
    const int lb = last_nonzero(b, n);
    PowerSeries c(n);
    if (la < 0 || lb < 0) return c;
    for (int i = 0; i <= la; ++i) {
        const Complex ai = a[i];
        if (ai == Complex{}) continue;
        for (int j = 0; j <= lb && i + j <= n; ++j) c.at(i + j) += ai * b[j];
    }
    return c;
}

PowerSeries divide(const PowerSeries& a, const PowerSeries& b) {
    const Complex b0 = b[0];
    if (std::abs(b0) <= kDivisorFloor)
        throw InvalidInput("series division needs a divisor with nonzero constant term");
    const int n = std::min(a.order(), b.order());
    const int lb = last_nonzero(b, n);
    PowerSeries c(n);
    for (int k = 0; k <= n; ++k) {
        Complex s = a[k];
        for (int j = 1; j <= std::min(k, lb); ++j) s -= b[j] * c[k - j];
        c.at(k) = s / b0;
    }
    return c;
}

PowerSeries times_z(const PowerSeries& f) {
    PowerSeries s(f.order() + 1);
    for (int k = 0; k <= f.order(); ++k) s.at(k + 1) = f[k];
    return s;
}

Complex evaluate(const PowerSeries& f, Complex z) noexcept {
    Complex acc{};
    for (int k = f.order(); k >= 0; --k) acc = acc * z + f[k];
    return acc;
}

PowerSeries rotate(const PowerSeries& f, double alpha) {
    PowerSeries r(f.order());
    for (int k = 0; k <= f.order(); ++k) r.at(k) = f[k] * std::polar(1.0, k * alpha);
    return r;
}

double max_coefficient_deviation(const PowerSeries& a, const PowerSeries& b) {
    const int n = std::min(a.order(), b.order());
    double m = 0.0;
    for (int k = 0; k <= n; ++k) m = std::max(m, std::abs(a[k] - b[k]));
    return m;
}

PowerSeries expand_rational(const ComplexPolynomial& num, const ComplexPolynomial& den, int order) {
    if (den.is_zero()) throw InvalidInput("rational expansion with zero denominator");
    return divide(PowerSeries::from_polynomial(num, order), PowerSeries::from_polynomial(den, order));
}

SeriesKind parse_series_kind(std::string_view name) {
    if (name == "geometric") return SeriesKind::geometric;
    if (name == "half-plane-analytic") return SeriesKind::half_plane_analytic;
    if (name == "half-plane-coanalytic") return SeriesKind::half_plane_coanalytic;
    if (name == "log-strip") return SeriesKind::log_strip;
    if (name == "log-half") return SeriesKind::log_half;
    if (name == "family-sum") return SeriesKind::family_sum;
    throw InvalidInput("unknown series kind '" + std::string(name) + "'");
}

ComplexPolynomial dyadic_numerator(double alpha, int n) {
    if (n < 1 || n > 16) throw InvalidInput("dyadic family index n must lie in [1, 16]");
    ComplexPolynomial acc{1.0};
    for (int k = 1; k < n; ++k) acc = acc * (ComplexPolynomial{1.0} + ComplexPolynomial::monomial(1 << k));
    const ComplexPolynomial last = ComplexPolynomial{1.0} + ComplexPolynomial::monomial(1 << n) +
                                   ComplexPolynomial::monomial(1 << (n - 1), alpha);
    return acc * last;
}

ComplexPolynomial dyadic_denominator(int n) {
    if (n < 1 || n > 16) throw InvalidInput("dyadic family index n must lie in [1, 16]");
    return ComplexPolynomial{1.0} + ComplexPolynomial::monomial(1 << (n + 1));
}

PowerSeries named_series(SeriesKind kind, const NamedSeriesParams& params, int order) {
    require_order(order);
    PowerSeries s(order);
    switch (kind) {
    case SeriesKind::geometric:
        for (int k = 1; k <= order; ++k) s.at(k) = std::polar(1.0, (k - 1) * params.alpha);
        return s;
    case SeriesKind::half_plane_analytic:
    case SeriesKind::half_plane_coanalytic: {
        const double a = params.a;
        if (!(std::abs(a) < 1.0)) throw InvalidInput("half-plane parameter a must satisfy |a| < 1");
        // Coefficient of z^k: e^{i(k-1)alpha}(k/(1+a) - (k-1)/2), and e^{i(k+1)alpha}(a k/(1+a) - (k-1)/2).
        const bool analytic = kind == SeriesKind::half_plane_analytic;
        for (int k = 1; k <= order; ++k) {
            const double c = (analytic ? k : a * k) / (1.0 + a) - 0.5 * (k - 1);
            s.at(k) = c * std::polar(1.0, (analytic ? k - 1 : k + 1) * params.alpha);
        }
        return s;
    }
    case SeriesKind::log_strip: {
        // (1/2i)(log(1+iz) - log(1-iz)) keeps odd powers with coefficient i^{k-1}/k.
        const Complex i{0.0, 1.0};
        Complex ik = 1.0;
        for (int k = 1; k <= order; ++k) {
            if (k % 2 == 1) s.at(k) = ik / static_cast<double>(k);
            ik *= i;
        }
        return s;
    }
    case SeriesKind::log_half:
        for (int k = 1; k <= order; ++k) s.at(k) = 1.0 / static_cast<double>(k);
        return s;
    case SeriesKind::family_sum: {
        const auto num = ComplexPolynomial::monomial(1) * dyadic_numerator(params.alpha, params.n);
        return expand_rational(num, dyadic_denominator(params.n), order);
    }
    }
    throw InvalidInput("unknown series kind");
}

} // namespace hconv
