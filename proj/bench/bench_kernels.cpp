#include <benchmark/benchmark.h>

#include "hconv/convo.hpp"
#include "hconv/geochk.hpp"
#include "hconv/kernels.hpp"

namespace {

using hconv::kernels::Backend;

const hconv::HarmonicMap& boundary_map() {
    static const hconv::HarmonicMap f = hconv::convolve(
        hconv::half_plane_map(0.5, 0.0, hconv::kBoundaryOrder),
        hconv::slanted_halfplane(0.0, hconv::quadratic_mobius(0.5), hconv::kBoundaryOrder));
    return f;
}

Backend backend_of(const benchmark::State& state) { return state.range(0) == 0 ? Backend::serial : Backend::parallel; }

void BM_EvaluateCircle(benchmark::State& state) {
    const auto& f = boundary_map();
    const auto pts = hconv::circle_points(0.995, 4096);
    std::vector<hconv::Complex> out(pts.size());
    for (auto _ : state) {
        hconv::kernels::evaluate_polynomial(f.h.coeffs(), pts, out, backend_of(state));
        benchmark::DoNotOptimize(out.data());
    }
    state.SetLabel(state.range(0) == 0 ? "serial" : "parallel");
}

void BM_DilatationExtremes(benchmark::State& state) {
    const auto& f = boundary_map();
    const auto hp = hconv::differentiate(f.h);
    const auto gp = hconv::differentiate(f.g);
    const auto pts = hconv::DiskGrid::standard().points();
    for (auto _ : state) benchmark::DoNotOptimize(hconv::kernels::dilatation_extremes(hp.coeffs(), gp.coeffs(), pts, backend_of(state)));
    state.SetLabel(state.range(0) == 0 ? "serial" : "parallel");
}

void BM_HsMinimum(benchmark::State& state) {
    const auto F = hconv::dyadic_family_sum(0.5, 3, 1024);
    const auto Fp = hconv::differentiate(F);
    const auto pts = hconv::DiskGrid::standard().points();
    for (auto _ : state) benchmark::DoNotOptimize(hconv::kernels::hs_minimum(Fp.coeffs(), pts, backend_of(state)));
    state.SetLabel(state.range(0) == 0 ? "serial" : "parallel");
}

void BM_RationalExtremes(benchmark::State& state) {
    const auto r = hconv::combination_dilatation({-0.5, 4, 0.0}, {0.5, 4, 0.0},
                                                 hconv::RationalFunction(hconv::ComplexPolynomial::monomial(4, -1.0)),
                                                 hconv::RationalFunction(hconv::ComplexPolynomial::monomial(8)), 0.5);
    const auto pts = hconv::DiskGrid::standard().points();
    for (auto _ : state)
        benchmark::DoNotOptimize(hconv::kernels::rational_extremes(r.num().coeffs(), r.den().coeffs(), pts, backend_of(state)));
    state.SetLabel(state.range(0) == 0 ? "serial" : "parallel");
}

void BM_CrossingCounts(benchmark::State& state) {
    const auto curve = hconv::image_curve(boundary_map(), 0.995, 4096);
    std::vector<double> y(curve.size());
    for (std::size_t i = 0; i < y.size(); ++i) y[i] = curve[i].imag();
    std::vector<double> levels(256);
    const auto [lo, hi] = std::minmax_element(y.begin(), y.end());
    for (int i = 0; i < 256; ++i) levels[std::size_t(i)] = *lo + (i + 0.5) / 256 * (*hi - *lo);
    for (auto _ : state) benchmark::DoNotOptimize(hconv::kernels::crossing_counts(y, levels, 1e-9, 1e-8, backend_of(state)));
    state.SetLabel(state.range(0) == 0 ? "serial" : "parallel");
}

} // namespace

BENCHMARK(BM_EvaluateCircle)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DilatationExtremes)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HsMinimum)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RationalExtremes)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CrossingCounts)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
