#include "hconv/cpoly.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace hconv {

ReductionNotApplicable::ReductionNotApplicable(double constant_modulus, double leading_modulus)
    : Error([&] {
          std::ostringstream os;
          os.precision(17);
          os << "Cohn reduction needs |a0| < |an| strictly (|a0| = " << constant_modulus
             << ", |an| = " << leading_modulus << ")";
          return os.str();
      }()),
      constant_modulus_(constant_modulus),
      leading_modulus_(leading_modulus) {}

NumericFailure::NumericFailure(const std::string& what, std::vector<Complex> best_iterate)
    : Error(what), best_iterate_(std::move(best_iterate)) {}

namespace {

constexpr double kTrimRelative = 1e-15;

void trim(std::vector<Complex>& c) {
    double scale = 0.0;
    for (const auto& x : c) scale = std::max(scale, std::abs(x));
    const double cut = kTrimRelative * scale;
    while (!c.empty() && (std::abs(c.back()) <= cut || c.back() == Complex{})) c.pop_back();
}

ComplexPolynomial rescaled(const ComplexPolynomial& p) {
    const double m = p.max_modulus();
    if (m == 0.0) return p;
    return Complex(1.0 / m) * p;
}

} // namespace

ComplexPolynomial::ComplexPolynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    trim(coeffs_);
}

ComplexPolynomial::ComplexPolynomial(std::initializer_list<Complex> coeffs)
    : ComplexPolynomial(std::vector<Complex>(coeffs)) {}

ComplexPolynomial ComplexPolynomial::monomial(int power, Complex coefficient) {
    if (power < 0) throw InvalidInput("monomial power must be nonnegative");
    std::vector<Complex> c(static_cast<std::size_t>(power) + 1);
    c.back() = coefficient;
    return ComplexPolynomial(std::move(c));
}

Complex ComplexPolynomial::operator[](int k) const noexcept {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return {};
    return coeffs_[static_cast<std::size_t>(k)];
}

Complex ComplexPolynomial::operator()(Complex z) const noexcept {
    Complex acc{};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

ComplexPolynomial ComplexPolynomial::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Complex> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = static_cast<double>(k) * coeffs_[k];
    return ComplexPolynomial(std::move(d));
}

double ComplexPolynomial::max_modulus() const noexcept {
    double m = 0.0;
    for (const auto& x : coeffs_) m = std::max(m, std::abs(x));
    return m;
}

ComplexPolynomial operator+(const ComplexPolynomial& a, const ComplexPolynomial& b) {
    std::vector<Complex> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = a[int(k)] + b[int(k)];
    return ComplexPolynomial(std::move(c));
}

ComplexPolynomial operator-(const ComplexPolynomial& a, const ComplexPolynomial& b) {
    std::vector<Complex> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = a[int(k)] - b[int(k)];
    return ComplexPolynomial(std::move(c));
}

ComplexPolynomial operator*(const ComplexPolynomial& a, const ComplexPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Complex> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return ComplexPolynomial(std::move(c));
}

ComplexPolynomial operator*(Complex s, const ComplexPolynomial& p) {
    std::vector<Complex> c(p.coeffs_);
    for (auto& x : c) x *= s;
    return ComplexPolynomial(std::move(c));
}

ComplexPolynomial operator-(const ComplexPolynomial& p) { return Complex(-1.0) * p; }

ComplexPolynomial reciprocal_adjoint(const ComplexPolynomial& p) {
    if (p.is_zero()) throw InvalidInput("reciprocal adjoint of the zero polynomial");
    const int n = p.degree();
    std::vector<Complex> c(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) c[static_cast<std::size_t>(k)] = std::conj(p[n - k]);
    return ComplexPolynomial(std::move(c));
}

bool cohn_applicable(const ComplexPolynomial& p) noexcept {
    if (p.degree() < 1) return false;
    const double a0 = std::abs(p.constant());
    const double an = std::abs(p.leading());
    return an - a0 > kCohnRelativeTolerance * std::max({a0, an, 1.0});
}

ComplexPolynomial cohn_reduce(const ComplexPolynomial& p) {
    if (p.is_zero()) throw InvalidInput("Cohn reduction of the zero polynomial");
    if (p.degree() < 1) throw InvalidInput("Cohn reduction needs degree >= 1");
    if (!cohn_applicable(p)) throw ReductionNotApplicable(std::abs(p.constant()), std::abs(p.leading()));

    const int n = p.degree();
    const Complex an_bar = std::conj(p.leading());
    const Complex a0 = p.constant();
    // Coefficient k+1 of conj(an) p - a0 p*, whose constant term cancels.
    std::vector<Complex> c(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
        c[static_cast<std::size_t>(k)] = an_bar * p[k + 1] - a0 * std::conj(p[n - k - 1]);
    return ComplexPolynomial(std::move(c));
}

ZeroCountReport count_zeros_in_disk(const ComplexPolynomial& p) {
    if (p.is_zero()) throw InvalidInput("zero count of the zero polynomial");

    ZeroCountReport report;
    ComplexPolynomial current = rescaled(p);
    while (current.degree() >= 1) {
        if (!cohn_applicable(current)) {
            report.degenerate = true;
            break;
        }
        current = rescaled(cohn_reduce(current));
        report.chain.push_back(current);
        ++report.inside;
    }

    if (report.degenerate) {
        for (const auto& r : roots(current)) {
            const double m = std::abs(r);
            if (std::abs(m - 1.0) <= kOnCircleTolerance)
                ++report.on_circle;
            else if (m < 1.0)
                ++report.inside;
        }
    }
    return report;
}

std::vector<Complex> roots(const ComplexPolynomial& p, double tol) {
    if (!(tol > 0.0)) throw InvalidInput("root tolerance must be positive");
    const int n = p.degree();
    if (n < 1) throw InvalidInput("roots need a polynomial of degree >= 1");

    const Complex lead = p.leading();
    std::vector<Complex> monic(static_cast<std::size_t>(n) + 1);
    std::vector<double> abs_coeffs(monic.size());
    double radius = 0.0;
    for (int k = 0; k <= n; ++k) {
        monic[std::size_t(k)] = p[k] / lead;
        abs_coeffs[std::size_t(k)] = std::abs(monic[std::size_t(k)]);
        if (k < n) radius = std::max(radius, abs_coeffs[std::size_t(k)]);
    }
    radius += 1.0;

    auto eval = [&](Complex z) {
        Complex acc{};
        for (int k = n; k >= 0; --k) acc = acc * z + monic[std::size_t(k)];
        return acc;
    };
    auto scale_at = [&](double r) {
        double acc = 0.0;
        for (int k = n; k >= 0; --k) acc = acc * r + abs_coeffs[std::size_t(k)];
        return acc;
    };
    auto residuals_ok = [&](const std::vector<Complex>& zs) {
        for (const auto& z : zs)
            if (std::abs(eval(z)) > tol * scale_at(std::abs(z))) return false;
        return true;
    };

    // Equally spaced start, rotated off the real axis so conjugate pairs separate.
    constexpr double kAngleOffset = 0.4;
    std::vector<Complex> z(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
        z[std::size_t(k)] = std::polar(radius, 2.0 * std::numbers::pi * k / n + kAngleOffset);

    constexpr int kMaxIterations = 500;
    constexpr double kStepTolerance = 1e-13;
    for (int it = 0; it < kMaxIterations; ++it) {
        double max_step = 0.0;
        for (int i = 0; i < n; ++i) {
            Complex denom = 1.0;
            const Complex zi = z[std::size_t(i)];
            for (int j = 0; j < n; ++j)
                if (j != i) denom *= zi - z[std::size_t(j)];
            if (denom == Complex{}) denom = Complex(1e-300, 0.0);
            const Complex step = eval(zi) / denom;
            z[std::size_t(i)] = zi - step;
            max_step = std::max(max_step, std::abs(step) / std::max(1.0, std::abs(z[std::size_t(i)])));
        }
        if (max_step < kStepTolerance) return z;
    }
    // Multiple roots converge linearly and stall at rounding level; accept on backward error.
    if (residuals_ok(z)) return z;
    throw NumericFailure("Durand-Kerner iteration did not converge in 500 iterations", z);
}

std::optional<bool> blaschke_bound_certificate(const ComplexPolynomial& p) {
    if (p.is_zero()) throw InvalidInput("certificate for the zero polynomial");
    if (p.degree() == 0) return false;
    const auto report = count_zeros_in_disk(p);
    if (report.on_circle > 0) return std::nullopt;
    return report.inside == p.degree();
}

} // namespace hconv
