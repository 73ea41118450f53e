#include "hconv/geochk.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <numbers>
#include <sstream>

namespace hconv {

namespace {

constexpr double kTieBand = 1e-9;
constexpr double kNudge = 1e-8;
constexpr double kDegenerateDerivative = 1e-12;

bool imaginary_direction(double phi) {
    const double r = std::remainder(phi - std::numbers::pi / 2.0, std::numbers::pi);
    return std::abs(r) < 1e-12;
}

std::vector<Complex> rotated(std::vector<Complex> pts, double phi) {
    const Complex rot = std::polar(1.0, -phi);
    for (auto& p : pts) p *= rot;
    return pts;
}

std::string describe_line(const char* stage, double level, double phi) {
    std::ostringstream s;
    s << stage << " curve, line Im(e^{-i phi} w) = " << std::setprecision(6) << level << " (phi = " << phi + 0.0 << ")";
    return s.str();
}

} // namespace

DilatationBound max_dilatation_modulus(const HarmonicMap& f, const DiskGrid& grid, kernels::Backend backend) {
    const PowerSeries hp = differentiate(f.h);
    const PowerSeries gp = differentiate(f.g);
    const auto points = grid.points();
    const auto ext = kernels::dilatation_extremes(hp.coeffs(), gp.coeffs(), points, backend);
    DilatationBound out;
    if (ext.min_denominator.value < kDegenerateDerivative) {
        out.degenerate_point = points[ext.min_denominator.index];
        out.max_modulus = std::numeric_limits<double>::infinity();
        out.argmax = *out.degenerate_point;
        return out;
    }
    out.max_modulus = ext.max_ratio.value;
    out.argmax = points[ext.max_ratio.index];
    out.boundary_tight = std::abs(out.max_modulus - 1.0) <= kBoundaryTightBand;
    return out;
}

double hengartner_schober(const PowerSeries& F, const DiskGrid& grid, kernels::Backend backend) {
    const PowerSeries Fp = differentiate(F);
    const auto points = grid.points();
    return kernels::hs_minimum(Fp.coeffs(), points, backend).value;
}

LineSweep line_sweep(std::span<const Complex> curve, int levels, kernels::Backend backend) {
    if (levels < 1) throw InvalidInput("line sweep needs at least one level");
    LineSweep out;
    out.counts.assign(static_cast<std::size_t>(levels), 0);
    if (curve.size() < 2) return out;
    double lo = curve[0].imag();
    double hi = lo;
    for (const Complex& p : curve) {
        lo = std::min(lo, p.imag());
        hi = std::max(hi, p.imag());
    }
    const double height = hi - lo;
    if (!(height > 0.0) || !std::isfinite(height)) return out;

    std::vector<double> y(curve.size());
    for (std::size_t i = 0; i < curve.size(); ++i) y[i] = (curve[i].imag() - lo) / height;
    std::vector<double> lv(static_cast<std::size_t>(levels));
    for (int i = 0; i < levels; ++i) lv[std::size_t(i)] = (i + 0.5) / levels;

    out.counts = kernels::crossing_counts(y, lv, kTieBand, kNudge, backend);
    const auto worst = std::max_element(out.counts.begin(), out.counts.end());
    out.crossing_max = *worst;
    out.worst_level = lo + lv[std::size_t(worst - out.counts.begin())] * height;
    return out;
}

std::vector<Complex> analytic_curve(const PowerSeries& h, double r, int samples, kernels::Backend backend) {
    const auto pts = circle_points(r, samples);
    std::vector<Complex> out(pts.size());
    kernels::evaluate_polynomial(h.coeffs(), pts, out, backend);
    return out;
}

std::vector<Complex> image_curve(const HarmonicMap& f, double r, int samples, kernels::Backend backend) {
    auto hv = analytic_curve(f.h, r, samples, backend);
    const auto gv = analytic_curve(f.g, r, samples, backend);
    for (std::size_t i = 0; i < hv.size(); ++i) hv[i] += std::conj(gv[i]);
    return hv;
}

ConvexityReport convex_in_direction(const HarmonicMap& f, double phi, const ConvexityParams& params) {
    if (!(params.r_max > 0.0 && params.r_max < 1.0)) throw InvalidInput("boundary radius must lie in (0, 1)");
    if (params.samples < 8) throw InvalidInput("boundary curve needs at least 8 samples");

    ConvexityReport rep;
    rep.direction = phi;
    const DilatationBound bound = max_dilatation_modulus(f, params.grid, params.backend);
    rep.max_dilatation = bound.max_modulus;
    if (bound.degenerate_point) {
        rep.withheld = true;
        rep.univalence_failure = bound.degenerate_point;
    } else if (bound.max_modulus > 1.0 + kBoundaryTightBand) {
        rep.withheld = true;
        rep.univalence_failure = bound.argmax;
    }

    const PowerSeries A = subtract(f.h, scale(f.g, std::polar(1.0, 2.0 * phi)));
    const auto analytic = rotated(analytic_curve(A, params.r_max, params.samples, params.backend), phi);
    const auto harmonic = rotated(image_curve(f, params.r_max, params.samples, params.backend), phi);
    const LineSweep sa = line_sweep(analytic, params.levels, params.backend);
    const LineSweep sh = line_sweep(harmonic, params.levels, params.backend);

    rep.analytic_crossing_max = sa.crossing_max;
    rep.harmonic_crossing_max = sh.crossing_max;
    rep.analytic_counts = sa.counts;
    rep.harmonic_counts = sh.counts;
    rep.crossing_max = std::max(sa.crossing_max, sh.crossing_max);
    rep.worst_line = sh.crossing_max >= sa.crossing_max ? describe_line("harmonic", sh.worst_level, phi)
                                                         : describe_line("analytic", sa.worst_level, phi);
    if (imaginary_direction(phi)) rep.min_hs = hengartner_schober(A, params.grid, params.backend);
    rep.passed = !rep.withheld && rep.crossing_max <= 2;
    if (rep.withheld) rep.evidence = "withheld: map is not locally univalent on the grid";
    return rep;
}

void write_curves_csv(std::ostream& out, std::span<const LabelledCurve> curves) {
    out << "param-id,t-index,re,im\n";
    out << std::setprecision(15);
    for (const auto& c : curves)
        for (std::size_t i = 0; i < c.points.size(); ++i)
            out << c.label << ',' << i << ',' << c.points[i].real() << ',' << c.points[i].imag() << '\n';
}

void write_curves_svg(std::ostream& out, std::span<const LabelledCurve> curves, const std::string& title) {
    constexpr double kSize = 1000.0;
    constexpr double kMargin = 40.0;
    static const char* const kColours[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

    double xlo = std::numeric_limits<double>::infinity(), xhi = -xlo, ylo = xlo, yhi = -xlo;
    for (const auto& c : curves)
        for (const Complex& p : c.points) {
            if (!std::isfinite(p.real()) || !std::isfinite(p.imag())) continue;
            xlo = std::min(xlo, p.real());
            xhi = std::max(xhi, p.real());
            ylo = std::min(ylo, p.imag());
            yhi = std::max(yhi, p.imag());
        }
    if (!(xhi > xlo)) xlo -= 1.0, xhi += 1.0;
    if (!(yhi > ylo)) ylo -= 1.0, yhi += 1.0;
    const double s = (kSize - 2.0 * kMargin) / std::max(xhi - xlo, yhi - ylo);
    const double cx = 0.5 * (xlo + xhi);
    const double cy = 0.5 * (ylo + yhi);

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"1000\" height=\"1000\" viewBox=\"0 0 1000 1000\">\n";
    out << "<rect width=\"1000\" height=\"1000\" fill=\"white\"/>\n";
    out << "<text x=\"20\" y=\"28\" font-family=\"monospace\" font-size=\"18\">" << title << "</text>\n";
    out << std::fixed << std::setprecision(2);
    std::size_t k = 0;
    for (const auto& c : curves) {
        out << "<polyline fill=\"none\" stroke-width=\"1\" stroke=\"" << kColours[k++ % std::size(kColours)]
            << "\" data-label=\"" << c.label << "\" points=\"";
        for (std::size_t i = 0; i <= c.points.size() && !c.points.empty(); ++i) {
            const Complex p = c.points[i % c.points.size()];
            if (!std::isfinite(p.real()) || !std::isfinite(p.imag())) continue;
            out << kSize / 2.0 + s * (p.real() - cx) << ',' << kSize / 2.0 - s * (p.imag() - cy) << ' ';
        }
        out << "\"/>\n";
    }
    out << "</svg>\n";
    out.unsetf(std::ios::floatfield);
}

} // namespace hconv
