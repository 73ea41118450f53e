#include <gtest/gtest.h>

#include <numbers>
#include <sstream>

#include "hconv/convo.hpp"
#include "hconv/geochk.hpp"

using hconv::Complex;
using hconv::PowerSeries;

namespace {

constexpr double kPi = std::numbers::pi;

hconv::HarmonicMap analytic_only(const PowerSeries& h) { return {h, PowerSeries(h.order())}; }

std::vector<Complex> ellipse(int samples, double rx, double ry) {
    std::vector<Complex> out;
    for (int i = 0; i < samples; ++i) {
        const double s = 2.0 * kPi * i / samples;
        out.emplace_back(rx * std::cos(s), ry * std::sin(s));
    }
    return out;
}

} // namespace

TEST(Dilatation, HalfPlaneShearMaxIsGridRadius) {
    const int N = hconv::kBoundaryOrder;
    const auto f = hconv::shear(hconv::named_series(hconv::SeriesKind::geometric, {}, N), PowerSeries::z(N), 0.0, N);
    const auto b = hconv::max_dilatation_modulus(f, hconv::DiskGrid::standard());
    EXPECT_NEAR(b.max_modulus, 0.99, 1e-12);
    EXPECT_FALSE(b.degenerate_point.has_value());
    EXPECT_FALSE(b.boundary_tight);
}

TEST(HengartnerSchober, LogHalf) {
    const auto F = hconv::named_series(hconv::SeriesKind::log_half, {}, hconv::kBoundaryOrder);
    EXPECT_NEAR(hconv::hengartner_schober(F, hconv::DiskGrid::standard()), 0.01, 1e-12);
}

TEST(HengartnerSchober, TruncationNearTheCircleIsVisible) {
    // At N = 128 the tail of log(1/(1-z)) dominates on |z| = 0.99.
    const auto F = hconv::named_series(hconv::SeriesKind::log_half, {}, 128);
    EXPECT_LT(hconv::hengartner_schober(F, hconv::DiskGrid::standard()), 0.0);
    EXPECT_GT(hconv::hengartner_schober(F, hconv::DiskGrid::uniform(9, 720, 0.9)), 0.0);
}

TEST(HengartnerSchober, FamilyAtAlphaBound) {
    const auto F = hconv::dyadic_family_sum(hconv::kDyadicAlphaBound, 2, hconv::kBoundaryOrder);
    EXPECT_GT(hconv::hengartner_schober(F, hconv::DiskGrid::standard()), 0.0);
}

TEST(LineSweep, ConvexCurveCrossesTwice) {
    const auto s = hconv::line_sweep(ellipse(1024, 2.0, 1.0), 256);
    EXPECT_EQ(s.crossing_max, 2);
    for (int c : s.counts) EXPECT_EQ(c, 2);
}

TEST(LineSweep, DentedCurveCrossesFourTimes) {
    std::vector<Complex> curve;
    for (int i = 0; i < 2048; ++i) {
        const double s = 2.0 * kPi * i / 2048;
        const double r = 1.0 + 0.6 * std::cos(2.0 * s);
        curve.push_back(std::polar(r, s));
    }
    EXPECT_EQ(hconv::line_sweep(curve, 256).crossing_max, 4);
}

TEST(LineSweep, DegenerateInputs) {
    EXPECT_THROW(hconv::line_sweep(ellipse(16, 1, 1), 0), hconv::InvalidInput);
    const std::vector<Complex> flat{0.0, 1.0, 2.0};
    EXPECT_EQ(hconv::line_sweep(flat, 8).crossing_max, 0);
}

TEST(Convexity, RightHalfPlaneIsHorizontallyConvex) {
    const auto f = hconv::half_plane_map(0.0, 0.0, hconv::kBoundaryOrder);
    const auto rep = hconv::convex_in_direction(f, 0.0);
    EXPECT_TRUE(rep.passed);
    EXPECT_FALSE(rep.withheld);
    EXPECT_LE(rep.crossing_max, 2);
    EXPECT_FALSE(rep.min_hs.has_value());
}

TEST(Convexity, StripConvolutionIsHorizontallyConvex) {
    const int N = hconv::kBoundaryOrder;
    for (double a : {-0.7, 0.0, 0.6}) {
        const auto f = hconv::convolve(hconv::half_plane_map(0.0, 0.0, N),
                                       hconv::strip_map(hconv::quadratic_mobius(a), N));
        EXPECT_TRUE(hconv::convex_in_direction(f, 0.0).passed) << a;
    }
}

TEST(Convexity, CubicPerturbationFailsHorizontally) {
    PowerSeries h(64);
    h.at(1) = 1.0;
    h.at(3) = 0.3;
    const auto rep = hconv::convex_in_direction(analytic_only(h), 0.0);
    EXPECT_FALSE(rep.passed);
    EXPECT_EQ(rep.crossing_max, 4);
    EXPECT_FALSE(rep.worst_line.empty());
}

TEST(Convexity, NonUnivalentIsWithheld) {
    const int N = 256;
    const auto f = hconv::shear(hconv::named_series(hconv::SeriesKind::geometric, {}, N),
                                hconv::RationalFunction(hconv::ComplexPolynomial{0.0, 1.5}), 0.0, N);
    const auto rep = hconv::convex_in_direction(f, 0.0);
    EXPECT_TRUE(rep.withheld);
    EXPECT_FALSE(rep.passed);
    EXPECT_TRUE(rep.univalence_failure.has_value());
}

TEST(Convexity, ImaginaryDirectionReportsHengartnerSchober) {
    const int N = hconv::kBoundaryOrder;
    const auto f = hconv::dyadic_family_map(0.5, 2, hconv::monomial_dilatation(0.0, 2), N);
    const auto rep = hconv::convex_in_direction(f, kPi / 2);
    ASSERT_TRUE(rep.min_hs.has_value());
    EXPECT_GT(*rep.min_hs, 0.0);
    EXPECT_TRUE(rep.passed);
}

TEST(Properties, HengartnerSchoberImpliesSweepPass) {
    const int N = hconv::kBoundaryOrder;
    for (int n = 1; n <= 3; ++n)
        for (double alpha : {-0.8, 0.0, 0.8}) {
            const auto F = hconv::dyadic_family_sum(alpha, n, N);
            if (hconv::hengartner_schober(F, hconv::DiskGrid::standard()) <= 0.0) continue;
            EXPECT_TRUE(hconv::convex_in_direction(analytic_only(F), kPi / 2).passed) << n << " " << alpha;
        }
}

TEST(Properties, VerdictInvariantUnderRotationConjugate) {
    const int N = hconv::kBoundaryOrder;
    const auto f = hconv::half_plane_map(0.3, 0.0, N);
    PowerSeries bad(64);
    bad.at(1) = 1.0;
    bad.at(3) = 0.3;
    for (double alpha : {0.4, 1.3, 2.9}) {
        const auto rf = hconv::rotation_conjugate(f, alpha);
        EXPECT_EQ(hconv::convex_in_direction(f, 0.0).passed, hconv::convex_in_direction(rf, -alpha).passed);
        const auto rb = hconv::rotation_conjugate(analytic_only(bad), alpha);
        EXPECT_EQ(hconv::convex_in_direction(rb, -alpha).passed, false);
    }
}

TEST(Properties, CrossingCountsAreEven) {
    const int N = hconv::kBoundaryOrder;
    const auto f = hconv::convolve(hconv::half_plane_map(0.5, 0.0, N),
                                   hconv::slanted_halfplane(0.3, hconv::monomial_dilatation(0.0, 3), N));
    const auto rep = hconv::convex_in_direction(f, -0.3);
    for (int c : rep.analytic_counts) EXPECT_EQ(c % 2, 0);
    for (int c : rep.harmonic_counts) EXPECT_EQ(c % 2, 0);
}

TEST(Export, CsvAndSvg) {
    const std::vector<hconv::LabelledCurve> curves{{"a=0.5", {Complex(0, 0), Complex(1, 0.5), Complex(0, 1)}}};
    std::ostringstream csv;
    hconv::write_curves_csv(csv, curves);
    EXPECT_EQ(csv.str(), "param-id,t-index,re,im\na=0.5,0,0,0\na=0.5,1,1,0.5\na=0.5,2,0,1\n");
    std::ostringstream svg;
    hconv::write_curves_svg(svg, curves, "demo");
    const std::string s = svg.str();
    EXPECT_NE(s.find("<svg"), std::string::npos);
    EXPECT_NE(s.find("viewBox=\"0 0 1000 1000\""), std::string::npos);
    EXPECT_NE(s.find("</svg>"), std::string::npos);
}
