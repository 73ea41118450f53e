// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include "hconv/convo.hpp"
#include "hconv/geochk.hpp"
#include "hconv/reference.hpp"
#include "oracle.hpp"

using namespace hconv;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
};

std::string fmt(const char* f, double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, x);
    return buf;
}

std::vector<Complex> as_vector(const ComplexPolynomial& p) { return {p.coeffs().begin(), p.coeffs().end()}; }

double relative_deviation(const ComplexPolynomial& a, const ComplexPolynomial& b) {
    const int d = std::max(a.degree(), b.degree());
    const double scale = std::max({1e-300, a.max_modulus(), b.max_modulus()});
    double worst = 0.0;
    for (int k = 0; k <= d; ++k) worst = std::max(worst, std::abs(a[k] - b[k]) / scale);
    return worst;
}

// Worst relative deviation of the displayed chain from cohn_reduce; negative when a step is not applicable.
double chain_deviation(const reference::DisplayedChain& c) {
    double worst = 0.0;
    ComplexPolynomial prev = c.p;
    for (std::size_t i = 0; i < 3; ++i) {
        if (!cohn_applicable(prev)) return -1.0;
        worst = std::max(worst, relative_deviation(cohn_reduce(prev), c.scalars[i] * c.factors[i]));
        prev = c.factors[i];
    }
    return worst;
}

Complex series_dilatation(const HarmonicMap& f, Complex z) {
    return evaluate(differentiate(f.g), z) / evaluate(differentiate(f.h), z);
}

Outcome strip_identity() {
    Outcome o;
    double worst_series = 0.0;
    const RationalFunction z2(ComplexPolynomial::monomial(2));
    for (int i = -9; i <= 9; ++i) {
        const double a = 0.1 * i;
        const auto omega = quadratic_mobius(a);
        const auto conv = convolve(half_plane_map(0.0, 0.0, 64), strip_map(omega, 64));
        const PowerSeries w = dilatation_series(conv);
        const double dev = max_coefficient_deviation(w, PowerSeries::from_polynomial(z2.num(), w.order()));
        worst_series = std::max(worst_series, dev);
        if (dev >= 1e-10) o.fail("series deviation " + fmt("%.3g", dev) + " at a=" + fmt("%.1f", a));
        if (!equal_by_evaluation(strip_convolution_dilatation(omega), z2, 50, 1e-10))
            o.fail("closed form differs from z^2 at a=" + fmt("%.1f", a));
    }
    if (o.pass) o.detail = "19 values of a, max series deviation " + fmt("%.2e", worst_series);
    return o;
}

Outcome quartic_chain(bool squared) {
    Outcome o;
    double worst = 0.0, max_root = 0.0;
    for (int i = 1; i <= 19; ++i) {
        const double a = 0.05 * i;
        const auto c = squared ? reference::squared_mobius_chain(a) : reference::quadratic_mobius_chain(a);
        const double dev = chain_deviation(c);
        if (dev < 0.0 || dev >= 1e-12) o.fail("chain deviation " + fmt("%.3g", dev) + " at a=" + fmt("%.2f", a));
        worst = std::max(worst, dev);
        const auto zc = count_zeros_in_disk(c.p);
        if (zc.inside != 4 || zc.on_circle != 0) o.fail("inside=" + std::to_string(zc.inside) + " at a=" + fmt("%.2f", a));
        const double m = oracle::max_root_modulus(as_vector(c.p));
        max_root = std::max(max_root, m);
        if (!(m < 1.0)) o.fail("oracle root modulus " + fmt("%.6f", m) + " at a=" + fmt("%.2f", a));
    }
    if (o.pass)
        o.detail = "19 values of a, chain deviation " + fmt("%.2e", worst) + ", max root modulus " + fmt("%.4f", max_root);
    return o;
}

Outcome monomial_case() {
    Outcome o;
    double worst_max = 0.0, worst_sub = 0.0;
    const DiskGrid grid = DiskGrid::standard();
    const auto pts = oracle::random_disk_points(50, 0.99, 202);
    for (int n = 1; n <= 5; ++n) {
        const double lo = double(n - 2) / (n + 2);
        for (double gamma : {0.0, kPi / 4, kPi / 2})
            for (double theta : {0.0, 1.0})
                for (double a : {lo, 0.5 * (lo + 1.0), 0.95}) {
                    const SlantParams sp{gamma, theta, n, a};
                    const auto w = monomial_convolution_dilatation(sp);
                    const double m = certify_bounded(w, grid).grid_max;
                    worst_max = std::max(worst_max, m);
                    if (!(m < 1.0)) o.fail("grid max " + fmt("%.6f", m) + " for n=" + std::to_string(n));
                    const auto straight = monomial_convolution_dilatation({0.0, theta - (n + 2) * gamma, n, a});
                    for (const Complex& z : pts) {
                        const double dev =
                            std::abs(w(z) - std::polar(1.0, 2.0 * gamma) * straight(std::polar(1.0, gamma) * z));
                        worst_sub = std::max(worst_sub, dev);
                    }
                }
    }
    if (worst_sub >= 1e-10) o.fail("substitution identity deviation " + fmt("%.3g", worst_sub));
    if (o.pass)
        o.detail = "90 parameter sets, max |w| " + fmt("%.6f", worst_max) + ", substitution deviation " +
                   fmt("%.2e", worst_sub);
    return o;
}

Outcome closed_form_concordance() {
    Outcome o;
    std::mt19937_64 rng(2112);
    std::uniform_real_distribution<double> ua(0.2, 0.95), ug(0.0, 2.0 * kPi);
    constexpr int N = 512;
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        const double a = ua(rng), gamma = ug(rng), theta = ug(rng);
        const std::vector<RationalFunction> omegas{monomial_dilatation(0.0, 1), monomial_dilatation(0.0, 2),
                                                   monomial_dilatation(theta, 3), quadratic_mobius(a)};
        const HarmonicMap fa = half_plane_map(a, 0.0, N);
        for (const auto& omega : omegas) {
            const auto conv = convolve(fa, slanted_halfplane(gamma, omega, N));
            const auto closed = convolution_dilatation(a, gamma, omega);
            for (const Complex& z : oracle::random_disk_points(100, 0.9, rng())) {
                const Complex s = series_dilatation(conv, z);
                const double dev = std::abs(closed(z) - s) / std::max(1.0, std::abs(s));
                worst = std::max(worst, dev);
            }
        }
    }
    if (worst >= 1e-9) o.fail("max deviation " + fmt("%.3g", worst));
    else o.detail = "80 (a, gamma, omega) triples x 100 points, max deviation " + fmt("%.2e", worst);
    return o;
}

Outcome family_positivity() {
    Outcome o;
    const DiskGrid grid({0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.95, 0.97}, 720);
    double lowest = 1e300;
    for (double alpha : {-kDyadicAlphaBound, -0.5, 0.0, 0.5, kDyadicAlphaBound})
        for (int n = 1; n <= 3; ++n) {
            const double m = hengartner_schober(dyadic_family_sum(alpha, n, 128), grid);
            lowest = std::min(lowest, m);
            if (!(m > 0.0)) o.fail("min " + fmt("%.4g", m) + " at alpha=" + fmt("%.4f", alpha) + " n=" + std::to_string(n));
        }
    if (o.pass) o.detail = "15 (alpha, n) pairs, smallest minimum " + fmt("%.4g", lowest);
    return o;
}

Outcome sextic_case() {
    Outcome o;
    int convex = 0, chains = 0;
    for (double t : {0.1, 0.3, 0.5, 0.7, 0.9})
        for (auto [a1, a2] : {std::pair{-0.5, 0.5}, std::pair{-0.8, -0.2}, std::pair{0.0, 0.8}}) {
            const std::string at = " at t=" + fmt("%.1f", t) + " alpha=(" + fmt("%.1f", a1) + "," + fmt("%.1f", a2) + ")";
            const auto chain = reference::sextic_chain(t, a1, a2);
            if (oracle::count_inside(as_vector(chain.p)) != 6) o.fail("oracle finds a root outside" + at);
            const double dev = chain_deviation(chain);
            if (dev >= 0.0) {
                ++chains;
                if (dev >= 1e-12) o.fail("chain deviation " + fmt("%.3g", dev) + at);
            }
            const int N = kBoundaryOrder;
            const HarmonicMap f = combination(dyadic_family_map(a1, 2, monomial_dilatation(kPi, 1), N),
                                              dyadic_family_map(a2, 2, monomial_dilatation(0.0, 2), N), t);
            const auto rep = convex_in_direction(f, kPi / 2);
            if (rep.passed) ++convex;
            else o.fail("imaginary-direction sweep failed (" + std::to_string(rep.crossing_max) + " crossings)" + at);
        }
    if (o.pass)
        o.detail = "15 cases: six roots inside, " + std::to_string(chains) + " chains concordant, " +
                   std::to_string(convex) + " sweeps passed";
    return o;
}

Outcome cohn_vs_oracle() {
    Outcome o;
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    int tested = 0, skipped = 0;
    while (tested < 1000) {
        std::vector<Complex> c(std::size_t(2 + rng() % 8));
        for (auto& x : c) x = {u(rng), u(rng)};
        const auto rts = oracle::companion_roots(c);
        if (std::any_of(rts.begin(), rts.end(), [](Complex z) { return std::abs(std::abs(z) - 1.0) < 1e-6; })) {
            ++skipped;
            continue;
        }
        int inside = 0;
        for (const Complex& z : rts) inside += std::abs(z) < 1.0;
        if (count_zeros_in_disk(ComplexPolynomial(c)).inside != inside) o.fail("disagreement on case " + std::to_string(tested));
        ++tested;
    }
    if (o.pass) o.detail = "1000 polynomials agree (" + std::to_string(skipped) + " near-circle draws skipped)";
    return o;
}

Outcome structural_identities() {
    Outcome o;
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    double shear_dev = 0.0, sum_dev = 0.0, rot_dev = 0.0;
    for (int i = 0; i < 20; ++i) {
        const double gamma = 3.0 * u(rng);
        const auto F = named_series(SeriesKind::geometric, {.alpha = gamma}, 128);
        const auto f = shear(F, power_mobius(3.0 * u(rng), 0.9 * u(rng), 1 + i % 4), gamma, 128);
        shear_dev = std::max(shear_dev, max_coefficient_deviation(add(f.h, scale(f.g, std::polar(1.0, -2.0 * gamma))), F));

        const double a = 0.95 * u(rng), alpha = 3.0 * u(rng);
        const auto fa = half_plane_map(a, alpha, 128);
        // Coefficients grow like k/(1+a), so the comparison is relative to each coefficient's size.
        const auto sum = add(fa.h, scale(fa.g, std::polar(1.0, -2.0 * alpha)));
        const auto geo = named_series(SeriesKind::geometric, {.alpha = alpha}, 128);
        for (int k = 0; k <= 128; ++k)
            sum_dev = std::max(sum_dev, std::abs(sum[k] - geo[k]) /
                                            std::max({1.0, std::abs(fa.h[k]), std::abs(fa.g[k])}));
    }
    const double a = 0.3, alpha = kPi / 3;
    const auto f = half_plane_map(a, alpha, 256);
    const auto f0 = half_plane_map(a, 0.0, 256);
    for (const Complex& z : oracle::random_disk_points(20, 0.8, 5))
        rot_dev = std::max(rot_dev, std::abs(eval_map(f, z) - std::polar(1.0, -alpha) * eval_map(f0, std::polar(1.0, alpha) * z)));
    if (shear_dev >= 1e-11) o.fail("shear inverse deviation " + fmt("%.3g", shear_dev));
    if (sum_dev >= 1e-11) o.fail("half-plane sum deviation " + fmt("%.3g", sum_dev));
    if (rot_dev >= 1e-10) o.fail("rotation identity deviation " + fmt("%.3g", rot_dev));
    if (o.pass)
        o.detail = "shear " + fmt("%.2e", shear_dev) + ", half-plane sum " + fmt("%.2e", sum_dev) + ", rotation " +
                   fmt("%.2e", rot_dev);
    return o;
}

struct Criterion {
    int id;
    const char* name;
    double budget_s; // 0 means unbounded
    std::function<Outcome()> body;
};

} // namespace

int main() {
    const Criterion criteria[] = {
        {1, "strip convolution dilatation is z^2", 5.0, strip_identity},
        {2, "quartic chain for (a - z^2)/(1 - a z^2)", 2.0, [] { return quartic_chain(false); }},
        {3, "quartic chain for -(a - z)^2/(1 - a z)^2", 2.0, [] { return quartic_chain(true); }},
        {4, "monomial dilatation bound and substitution identity", 30.0, monomial_case},
        {5, "closed-form dilatation matches series", 0.0, closed_form_concordance},
        {6, "family positivity of Re((1 - z^2) F')", 0.0, family_positivity},
        {7, "sextic roots inside and combination convex vertically", 0.0, sextic_case},
        {8, "Cohn count agrees with eigenvalue oracle", 10.0, cohn_vs_oracle},
        {9, "structural identities", 0.0, structural_identities},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.body();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.budget_s > 0.0 && secs > c.budget_s)
            o.fail("runtime " + fmt("%.2f", secs) + " s over budget " + fmt("%.0f", c.budget_s) + " s");
        failures += !o.pass;
        std::printf("%s criterion %d: %s (%s; %.2f s)\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), secs);
    }
    std::printf("%d/9 criteria passed\n", 9 - failures);
    return failures == 0 ? 0 : 1;
}
