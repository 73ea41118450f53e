#include "hconv/sweep.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>

#include "hconv/convo.hpp"
#include "hconv/geochk.hpp"
#include "hconv/reference.hpp"

namespace hconv {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSeriesTolerance = 1e-8;
constexpr double kChainTolerance = 1e-12;
constexpr int kMaxFamilyIndex = 8;

const CaseInfo kCatalog[] = {
    {CaseId::t2_2, "t2.2", "f_{a,0} * slanted half-plane map with omega = e^{i theta} z^n; bounded and convex in direction -gamma for a >= (n-2)/(n+2)", false},
    {CaseId::t2_3, "t2.3", "f_{a,0} * right half-plane map with omega = (a - z^2)/(1 - a z^2); quartic p/p*, 4 zeros inside, convex in the real direction", false},
    {CaseId::t2_4, "t2.4", "f_{a,0} * right half-plane map with omega = -(a - z)^2/(1 - a z)^2; quartic p/p*, 4 zeros inside, convex in the real direction", false},
    {CaseId::t2_5, "t2.5", "f_{0,0} * strip map with omega = (a - z^2)/(1 - a z^2); dilatation is z^2, convex in the real direction", false},
    {CaseId::t3_8, "t3.8", "t f_{alpha,n} + (1-t) f_{alpha,n} with omega1 = -z^{2^{n-1}}, omega2 = z^{2^n}; convex in the imaginary direction", false},
    {CaseId::t3_9, "t3.9", "combination with omega1 = -z^{2^{n-1}}, omega2 = z^{2^{n-1}}; cubic Blaschke quotient, asserted for alpha1 >= alpha2", false},
    {CaseId::t3_10, "t3.10", "combination with omega1 = -z^{2^{n-1}}, omega2 = -z^{2^n} (part 1) or z^{2^n} (part 2)", false},
    {CaseId::t3_11, "t3.11", "combination with omega1 = -z^{2^{n-2}}, omega2 = z^{2^{n-1}}; sextic p/p*, 6 zeros inside, asserted for alpha1 <= alpha2", false},
    {CaseId::oq1, "oq1", "exploratory: f_{a,0} * right half-plane map with omega = e^{i theta}(a - z^n)/(1 - a z^n)", true},
    {CaseId::oq2, "oq2", "exploratory: f_{a,0} * right half-plane map with omega = -e^{i theta}((a - z)/(1 - a z))^n", true},
    {CaseId::oq3, "oq3", "exploratory: f_{0,0} * strip map with omega = e^{i theta}(a - z)^n/(1 - a z)^n", true},
};

std::vector<double> stepped(double lo, double hi, double step) {
    std::vector<double> v;
    for (int i = 0;; ++i) {
        const double x = std::round((lo + i * step) * 1e12) / 1e12;
        if (x > hi + 1e-12) break;
        v.push_back(x);
    }
    return v;
}

Check make_check(std::string name, std::optional<bool> ok, std::string detail, bool asserted = true) {
    return {std::move(name), ok, std::move(detail), asserted};
}

std::string fmt(double x) {
    std::ostringstream s;
    s.precision(6);
    s << x;
    return s.str();
}

/// Largest |closed(z) - series(z)| over seeded random points with |z| <= 0.5.
Check series_concordance(const RationalFunction& closed, const HarmonicMap& f) {
    const PowerSeries omega = dilatation_series(f);
    std::mt19937_64 rng(0x5eed);
    std::uniform_real_distribution<double> radius(0.0, 0.5), angle(0.0, 2.0 * kPi);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        const Complex z = std::polar(radius(rng), angle(rng));
        worst = std::max(worst, std::abs(closed(z) - evaluate(omega, z)));
    }
    return make_check("closed form matches series dilatation", worst <= kSeriesTolerance,
                      "max deviation " + fmt(worst) + " at 20 points, |z| <= 0.5");
}

Check chain_concordance(const reference::DisplayedChain& chain) {
    ComplexPolynomial prev = chain.p;
    double worst = 0.0;
    for (std::size_t i = 0; i < chain.factors.size(); ++i) {
        if (!cohn_applicable(prev))
            return make_check("Cohn chain matches displayed factors", std::nullopt,
                              "reduction " + std::to_string(i + 1) + " not applicable (|a0| >= |an|)", false);
        const ComplexPolynomial q = cohn_reduce(prev);
        const ComplexPolynomial expected = chain.scalars[i] * chain.factors[i];
        const double scale = std::max(expected.max_modulus(), 1e-300);
        for (int k = 0; k <= std::max(q.degree(), expected.degree()); ++k)
            worst = std::max(worst, std::abs(q[k] - expected[k]) / scale);
        prev = chain.factors[i];
    }
    return make_check("Cohn chain matches displayed factors", worst < kChainTolerance,
                      "max relative deviation " + fmt(worst));
}

Check zeros_inside(const ComplexPolynomial& p, SweepRow& row) {
    const ZeroCountReport count = count_zeros_in_disk(p);
    const auto rts = roots(p);
    double max_mod = 0.0;
    for (const Complex& z : rts) max_mod = std::max(max_mod, std::abs(z));
    row.roots = rts;
    const bool ok = count.inside == p.degree() && max_mod < 1.0;
    return make_check(std::to_string(p.degree()) + " roots inside", ok,
                      "Cohn count " + std::to_string(count.inside) + (count.degenerate ? " (oracle fallback)" : "") +
                          ", max root modulus " + fmt(max_mod));
}

Check bounded_check(const RationalFunction& r, const SweepParams& sp, SweepRow& row, bool keep_roots = true) {
    const BoundednessReport rep = certify_bounded(r, sp.grid);
    row.max_omega = rep.grid_max;
    if (keep_roots && row.roots.empty()) row.roots = rep.zeros;
    std::string detail = "grid max " + fmt(rep.grid_max) + "; " + rep.note;
    if (std::abs(rep.grid_max - 1.0) <= kBoundaryTightBand) detail += "; boundary-tight";
    if (rep.method == BoundMethod::blaschke)
        return make_check("|omega~| < 1 (Blaschke certificate)", rep.certified, detail);
    const bool ok = rep.grid_max < 1.0 + kBoundaryTightBand && !rep.pole;
    return make_check("|omega~| < 1 on grid (numeric only)", ok, detail);
}

void convexity(SweepRow& row, const SweepParams& sp, const std::function<HarmonicMap(int)>& build, double phi,
               bool with_hs) {
    if (!sp.convexity) return;
    const HarmonicMap f = build(kBoundaryOrder);
    ConvexityParams cp;
    cp.grid = sp.grid;
    const ConvexityReport rep = convex_in_direction(f, phi, cp);
    std::string detail = "crossings analytic " + std::to_string(rep.analytic_crossing_max) + ", harmonic " +
                         std::to_string(rep.harmonic_crossing_max) + "; worst: " + rep.worst_line + "; " +
                         rep.evidence;
    if (rep.univalence_failure)
        detail += "; local univalence fails near " + fmt(rep.univalence_failure->real()) + "+" +
                  fmt(rep.univalence_failure->imag()) + "i";
    row.checks.push_back(make_check("convex in direction " + fmt(phi + 0.0), rep.passed, detail));
    if (with_hs && rep.min_hs) {
        row.min_hs = rep.min_hs;
        row.checks.push_back(make_check("Re((1-z^2)(h'+g')) > 0", *rep.min_hs > 0.0,
                                        "grid minimum " + fmt(*rep.min_hs)));
    }
    row.curve = image_curve(f, cp.r_max, sp.curve_points);
}

void require(bool ok, const std::string& msg) {
    if (!ok) throw InvalidInput(msg);
}

void require_each(const std::vector<double>& v, const std::function<bool(double)>& pred, const std::string& msg) {
    for (double x : v) require(pred(x), msg + " (got " + fmt(x) + ")");
}

void require_nonempty(const std::vector<double>& v, const char* name) {
    require(!v.empty(), std::string("parameter ") + name + " needs at least one value");
}

bool open_unit(double a) { return std::abs(a) < 1.0; }
bool in_alpha_range(double a) { return std::abs(a) <= kDyadicAlphaBound + 1e-12; }
bool in_weight_range(double t) { return t >= 0.0 && t <= 1.0; }

struct Task {
    std::vector<std::pair<std::string, double>> params;
    bool exploratory = false;
    std::function<void(SweepRow&)> run;
};

using Tasks = std::vector<Task>;

HarmonicMap family_combination(double a1, double a2, int n, const RationalFunction& w1, const RationalFunction& w2,
                               double t, int order) {
    return combination(dyadic_family_map(a1, n, w1, order), dyadic_family_map(a2, n, w2, order), t);
}

void validate_family(const SweepParams& sp, int min_n) {
    require_nonempty(sp.alpha1, "alpha1");
    require_nonempty(sp.t, "t");
    require(!sp.n.empty(), "parameter n needs at least one value");
    require_each(sp.alpha1, in_alpha_range, "alpha1 must lie in [-2(sqrt2-1), 2(sqrt2-1)]");
    require_each(sp.alpha2, in_alpha_range, "alpha2 must lie in [-2(sqrt2-1), 2(sqrt2-1)]");
    require_each(sp.t, in_weight_range, "t must lie in [0, 1]");
    for (int n : sp.n)
        require(n >= min_n && n <= kMaxFamilyIndex,
                "family index n must lie in [" + std::to_string(min_n) + ", " + std::to_string(kMaxFamilyIndex) + "]");
}

Tasks tasks_t2_2(const SweepParams& sp) {
    require_nonempty(sp.a, "a");
    require_nonempty(sp.gamma, "gamma");
    require_nonempty(sp.theta, "theta");
    require(!sp.n.empty(), "parameter n needs at least one value");
    require_each(sp.a, open_unit, "a must satisfy |a| < 1");
    for (int n : sp.n) require(n >= 1 && n <= 32, "n must lie in [1, 32]");
    Tasks tasks;
    for (int n : sp.n)
        for (double g : sp.gamma)
            for (double th : sp.theta)
                for (double a : sp.a) {
                    const bool explore = a < (n - 2.0) / (n + 2.0) - 1e-12;
                    tasks.push_back({{{"n", n}, {"gamma", g}, {"theta", th}, {"a", a}}, explore, [=, &sp](SweepRow& row) {
                        const SlantParams params{g, th, n, a};
                        const RationalFunction w = monomial_convolution_dilatation(params);
                        const RationalFunction omega = monomial_dilatation(th, n);
                        row.checks.push_back(make_check(
                            "display matches general convolution dilatation",
                            equal_by_evaluation(w, convolution_dilatation(a, g, omega)), "20-point evaluation, tol 1e-9"));
                        const RationalFunction base = monomial_convolution_dilatation({0.0, th - (n + 2) * g, n, a});
                        std::mt19937_64 rng(0x5eed);
                        std::uniform_real_distribution<double> radius(0.0, 0.99), angle(0.0, 2.0 * kPi);
                        double worst = 0.0;
                        for (int i = 0; i < 20; ++i) {
                            const Complex z = std::polar(radius(rng), angle(rng));
                            const Complex diff = w(z) - std::polar(1.0, 2.0 * g) * base(std::polar(1.0, g) * z);
                            worst = std::max(worst, std::abs(diff));
                        }
                        row.checks.push_back(make_check("substitution identity w = e^{i gamma} z", worst <= 1e-10,
                                                        "max deviation " + fmt(worst)));
                        row.checks.push_back(bounded_check(w, sp, row));
                        auto build = [=](int order) {
                            return convolve(half_plane_map(a, 0.0, order), slanted_halfplane(g, omega, order));
                        };
                        row.checks.push_back(series_concordance(w, build(sp.order)));
                        convexity(row, sp, build, -g, false);
                        if (row.exploratory) row.note = "exploratory: a below (n-2)/(n+2); no assertion";
                    }});
                }
    return tasks;
}

Tasks tasks_quartic(const SweepParams& sp, bool squared) {
    require_nonempty(sp.a, "a");
    if (squared)
        require_each(sp.a, [](double a) { return a > 0.0 && a < 1.0; }, "a must lie in (0, 1)");
    else
        require_each(sp.a, [](double a) { return a >= 0.0 && a < 1.0; }, "a must lie in [0, 1)");
    require_each(sp.b, open_unit, "b must satisfy |b| < 1");
    Tasks tasks;
    if (!squared && !sp.b.empty()) {
        for (double a : sp.a)
            for (double b : sp.b)
                tasks.push_back({{{"a", a}, {"b", b}}, true, [=, &sp](SweepRow& row) {
                    const RationalFunction omega = quadratic_mobius(b);
                    const RationalFunction w = convolution_dilatation(a, 0.0, omega);
                    row.checks.push_back(bounded_check(w, sp, row));
                    auto build = [=](int order) {
                        return convolve(half_plane_map(a, 0.0, order), slanted_halfplane(0.0, omega, order));
                    };
                    row.checks.push_back(series_concordance(w, build(sp.order)));
                    convexity(row, sp, build, 0.0, false);
                    row.note = "exploratory: independent parameters for the map and the dilatation";
                }});
        return tasks;
    }
    for (double a : sp.a)
        tasks.push_back({{{"a", a}}, false, [=, &sp](SweepRow& row) {
            const RationalFunction omega = squared ? squared_mobius(a) : quadratic_mobius(a);
            const ComplexPolynomial p = squared ? squared_mobius_quartic(a) : quadratic_mobius_quartic(a);
            const RationalFunction w{p, reciprocal_adjoint(p)};
            row.checks.push_back(make_check("p/p* matches general convolution dilatation",
                                            equal_by_evaluation(w, convolution_dilatation(a, 0.0, omega)),
                                            "20-point evaluation, tol 1e-9"));
            row.checks.push_back(chain_concordance(squared ? reference::squared_mobius_chain(a)
                                                           : reference::quadratic_mobius_chain(a)));
            Check inside = zeros_inside(p, row);
            inside.asserted = a > 0.0;
            row.checks.push_back(inside);
            row.checks.push_back(bounded_check(w, sp, row, false));
            auto build = [=](int order) {
                return convolve(half_plane_map(a, 0.0, order), slanted_halfplane(0.0, omega, order));
            };
            row.checks.push_back(series_concordance(w, build(sp.order)));
            convexity(row, sp, build, 0.0, false);
        }});
    return tasks;
}

Tasks tasks_t2_5(const SweepParams& sp) {
    require_nonempty(sp.a, "a");
    require_each(sp.a, open_unit, "a must satisfy |a| < 1");
    Tasks tasks;
    for (double a : sp.a)
        tasks.push_back({{{"a", a}}, false, [=, &sp](SweepRow& row) {
            const RationalFunction omega = quadratic_mobius(a);
            const RationalFunction w = strip_convolution_dilatation(omega);
            const RationalFunction z2{ComplexPolynomial::monomial(2), ComplexPolynomial{1.0}};
            row.checks.push_back(make_check("omega-tilde == z^2", equal_by_evaluation(w, z2, 50, 1e-10),
                                            "closed form, 50-point evaluation, tol 1e-10"));
            auto build = [=](int order) { return convolve(half_plane_map(0.0, 0.0, order), strip_map(omega, order)); };
            const PowerSeries series = dilatation_series(build(sp.order));
            const double dev = max_coefficient_deviation(series, PowerSeries::from_polynomial(z2.num(), series.order()));
            row.checks.push_back(make_check("series dilatation == z^2", dev < 1e-10,
                                            "max coefficient deviation " + fmt(dev)));
            row.checks.push_back(bounded_check(w, sp, row));
            convexity(row, sp, build, 0.0, false);
        }});
    return tasks;
}

/// Shared body of the combination cases: closed form vs general form, bound, series, convexity.
void combination_row(SweepRow& row, const SweepParams& sp, double a1, double a2, int n, double t,
                     const RationalFunction& w1, const RationalFunction& w2,
                     const std::optional<RationalFunction>& display) {
    const RationalFunction general = combination_dilatation({a1, n, 0.0}, {a2, n, 0.0}, w1, w2, t);
    if (display)
        row.checks.push_back(make_check("display matches combination dilatation", equal_by_evaluation(*display, general),
                                        "20-point evaluation, tol 1e-9"));
    row.checks.push_back(bounded_check(display ? *display : general, sp, row));
    auto build = [=](int order) { return family_combination(a1, a2, n, w1, w2, t, order); };
    row.checks.push_back(series_concordance(general, build(sp.order)));
    convexity(row, sp, build, kPi / 2.0, true);
}

RationalFunction signed_monomial(double sign, int power) {
    return {ComplexPolynomial::monomial(power, sign), ComplexPolynomial{1.0}};
}

Tasks tasks_t3_8(const SweepParams& sp) {
    validate_family(sp, 1);
    Tasks tasks;
    for (int n : sp.n)
        for (double al : sp.alpha1)
            for (double t : sp.t)
                tasks.push_back({{{"n", n}, {"alpha", al}, {"t", t}}, false, [=, &sp](SweepRow& row) {
                    const int k = 1 << (n - 1);
                    const RationalFunction w1 = signed_monomial(-1.0, k);
                    const RationalFunction w2 = signed_monomial(1.0, 2 * k);
                    const ComplexPolynomial u = w1.num();
                    const ComplexPolynomial v = w2.num();
                    const RationalFunction reduced{t * u + (1.0 - t) * v + u * v,
                                                   ComplexPolynomial{1.0} + t * v + (1.0 - t) * u};
                    combination_row(row, sp, al, al, n, t, w1, w2, reduced);
                }});
    return tasks;
}

Tasks tasks_t3_9(const SweepParams& sp) {
    validate_family(sp, 1);
    require_nonempty(sp.alpha2, "alpha2");
    Tasks tasks;
    for (int n : sp.n)
        for (double a1 : sp.alpha1)
            for (double a2 : sp.alpha2)
                for (double t : sp.t)
                    tasks.push_back({{{"n", n}, {"alpha1", a1}, {"alpha2", a2}, {"t", t}}, a1 < a2,
                                     [=, &sp](SweepRow& row) {
                        const int k = 1 << (n - 1);
                        const ComplexPolynomial c = reference::combination_cubic(t, a1, a2);
                        const RationalFunction display{
                            substitute_power(ComplexPolynomial::monomial(1, -1.0) * c, k),
                            substitute_power(reciprocal_adjoint(c), k)};
                        combination_row(row, sp, a1, a2, n, t, signed_monomial(-1.0, k), signed_monomial(1.0, k),
                                        display);
                        if (row.exploratory) row.note = "exploratory: alpha1 < alpha2 is outside the hypothesis";
                        else if (a1 > a2 && t > 0.0 && t < 1.0)
                            row.note = "the displayed cubic has zeros outside the disk for alpha1 > alpha2; "
                                       "the stated direction of the hypothesis looks reversed";
                    }});
    return tasks;
}

Tasks tasks_t3_10(const SweepParams& sp) {
    validate_family(sp, 1);
    require_nonempty(sp.alpha2, "alpha2");
    Tasks tasks;
    for (int part : {1, 2})
        for (int n : sp.n)
            for (double a1 : sp.alpha1)
                for (double a2 : sp.alpha2)
                    for (double t : sp.t) {
                        const bool hyp = part == 1 ? a1 > a2 : (std::abs(a1) > std::abs(a2) && a1 * a2 >= 0.0);
                        tasks.push_back({{{"part", part}, {"n", n}, {"alpha1", a1}, {"alpha2", a2}, {"t", t}}, !hyp,
                                         [=, &sp](SweepRow& row) {
                            const int k = 1 << (n - 1);
                            combination_row(row, sp, a1, a2, n, t, signed_monomial(-1.0, k),
                                            signed_monomial(part == 1 ? -1.0 : 1.0, 2 * k), std::nullopt);
                            if (row.exploratory) row.note = "exploratory: parameters outside the hypothesis";
                            else if (part == 1 && t > 0.0 && t < 1.0)
                                row.note = "part 1 is bounded for alpha1 < alpha2 instead; "
                                           "the stated direction of the hypothesis looks reversed";
                        }});
                    }
    return tasks;
}

Tasks tasks_t3_11(const SweepParams& sp) {
    validate_family(sp, 2);
    require_nonempty(sp.alpha2, "alpha2");
    Tasks tasks;
    for (int n : sp.n)
        for (double a1 : sp.alpha1)
            for (double a2 : sp.alpha2)
                for (double t : sp.t)
                    tasks.push_back({{{"n", n}, {"alpha1", a1}, {"alpha2", a2}, {"t", t}}, a1 > a2,
                                     [=, &sp](SweepRow& row) {
                        const int k = 1 << (n - 2);
                        const ComplexPolynomial p = reference::combination_sextic(t, a1, a2);
                        const RationalFunction display{
                            substitute_power(ComplexPolynomial::monomial(1, -1.0) * p, k),
                            substitute_power(reciprocal_adjoint(p), k)};
                        const bool interior = t > 0.0 && t < 1.0 && a1 < a2;
                        Check chain = chain_concordance(reference::sextic_chain(t, a1, a2));
                        chain.asserted = interior && chain.ok.has_value();
                        row.checks.push_back(chain);
                        row.checks.push_back(zeros_inside(p, row));
                        combination_row(row, sp, a1, a2, n, t, signed_monomial(-1.0, k), signed_monomial(1.0, 2 * k),
                                        display);
                        if (row.exploratory) row.note = "exploratory: alpha1 > alpha2 is outside the hypothesis";
                    }});
    return tasks;
}

Tasks tasks_open(const SweepParams& sp, CaseId id) {
    require_nonempty(sp.a, "a");
    require_nonempty(sp.theta, "theta");
    require(!sp.n.empty(), "parameter n needs at least one value");
    require_each(sp.a, open_unit, "a must satisfy |a| < 1");
    for (int n : sp.n) require(n >= 1 && n <= 32, "n must lie in [1, 32]");
    Tasks tasks;
    for (int n : sp.n)
        for (double th : sp.theta)
            for (double a : sp.a)
                tasks.push_back({{{"n", n}, {"theta", th}, {"a", a}}, true, [=, &sp](SweepRow& row) {
                    RationalFunction omega;
                    RationalFunction w;
                    std::function<HarmonicMap(int)> build;
                    if (id == CaseId::oq3) {
                        omega = mobius_power(th, a, n);
                        w = strip_convolution_dilatation(omega);
                        build = [=](int order) {
                            return convolve(half_plane_map(0.0, 0.0, order), strip_map(omega, order));
                        };
                    } else {
                        omega = id == CaseId::oq1 ? power_mobius(th, a, n) : mobius_power(th + kPi, a, n);
                        w = convolution_dilatation(a, 0.0, omega);
                        build = [=](int order) {
                            return convolve(half_plane_map(a, 0.0, order), slanted_halfplane(0.0, omega, order));
                        };
                    }
                    Check bound = bounded_check(w, sp, row);
                    bound.asserted = false;
                    row.checks.push_back(bound);
                    Check series = series_concordance(w, build(sp.order));
                    series.asserted = false;
                    row.checks.push_back(series);
                    convexity(row, sp, build, 0.0, false);
                    for (auto& c : row.checks) c.asserted = false;
                    row.note = "exploratory: no assertion";
                }});
    return tasks;
}

Verdict row_verdict(const SweepRow& row) {
    if (row.exploratory) return Verdict::exploratory;
    bool undecided = false;
    for (const auto& c : row.checks) {
        if (!c.asserted) continue;
        if (!c.ok) undecided = true;
        else if (!*c.ok) return Verdict::fail;
    }
    return undecided ? Verdict::indeterminate : Verdict::pass;
}

} // namespace

std::span<const CaseInfo> case_catalog() { return kCatalog; }

const CaseInfo& case_info(CaseId id) {
    for (const auto& c : kCatalog)
        if (c.id == id) return c;
    throw InvalidInput("unknown case");
}

CaseId parse_case(std::string_view name) {
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
    for (const auto& c : kCatalog)
        if (c.name == lower) return c.id;
    throw InvalidInput("unknown case id '" + std::string(name) + "'");
}

std::string_view verdict_name(Verdict v) {
    switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::exploratory: return "exploratory";
    case Verdict::indeterminate: return "indeterminate";
    }
    return "indeterminate";
}

std::string SweepRow::param_id() const {
    std::ostringstream s;
    s.precision(12);
    for (std::size_t i = 0; i < params.size(); ++i) s << (i ? ";" : "") << params[i].first << '=' << params[i].second;
    return s.str();
}

SweepParams default_params(CaseId id) {
    SweepParams p;
    const auto a_grid = stepped(0.05, 0.95, 0.05);
    switch (id) {
    case CaseId::t2_2:
        p.n = {3};
        p.gamma = {0.0};
        p.theta = {0.0};
        p.a = a_grid;
        break;
    case CaseId::t2_3:
    case CaseId::t2_4: p.a = a_grid; break;
    case CaseId::t2_5: p.a = stepped(-0.9, 0.9, 0.1); break;
    case CaseId::t3_8:
        p.n = {2};
        p.alpha1 = {-0.5, 0.0, 0.5};
        p.t = {0.0, 0.25, 0.5, 0.75, 1.0};
        break;
    case CaseId::t3_9:
        p.n = {2};
        p.alpha1 = {-0.5, 0.0, 0.5};
        p.alpha2 = {-0.5, 0.0, 0.5};
        p.t = {0.25, 0.5, 0.75};
        break;
    case CaseId::t3_10:
        p.n = {2};
        p.alpha1 = {0.5};
        p.alpha2 = {-0.5, 0.2};
        p.t = {0.25, 0.5, 0.75};
        break;
    case CaseId::t3_11:
        p.n = {2};
        p.alpha1 = {-0.5};
        p.alpha2 = {0.5};
        p.t = {0.25, 0.5, 0.75};
        break;
    case CaseId::oq1:
    case CaseId::oq2:
    case CaseId::oq3:
        p.n = {3};
        p.theta = {0.0};
        p.a = {0.5};
        break;
    }
    return p;
}

Verdict SweepReport::overall() const {
    bool any_asserted = false, undecided = false;
    for (const auto& r : rows) {
        if (r.verdict == Verdict::fail) return Verdict::fail;
        if (r.verdict == Verdict::indeterminate) undecided = true;
        if (r.verdict != Verdict::exploratory) any_asserted = true;
    }
    if (undecided) return Verdict::indeterminate;
    return any_asserted ? Verdict::pass : Verdict::exploratory;
}

SweepReport sweep_report(CaseId id, const SweepParams& params) {
    require(params.order >= 16 && params.order <= 512, "truncation order N must lie in [16, 512]");
    require(params.curve_points >= 8, "curve_points must be at least 8");
    Tasks tasks;
    switch (id) {
    case CaseId::t2_2: tasks = tasks_t2_2(params); break;
    case CaseId::t2_3: tasks = tasks_quartic(params, false); break;
    case CaseId::t2_4: tasks = tasks_quartic(params, true); break;
    case CaseId::t2_5: tasks = tasks_t2_5(params); break;
    case CaseId::t3_8: tasks = tasks_t3_8(params); break;
    case CaseId::t3_9: tasks = tasks_t3_9(params); break;
    case CaseId::t3_10: tasks = tasks_t3_10(params); break;
    case CaseId::t3_11: tasks = tasks_t3_11(params); break;
    case CaseId::oq1:
    case CaseId::oq2:
    case CaseId::oq3: tasks = tasks_open(params, id); break;
    }

    SweepReport report;
    report.case_name = std::string(case_info(id).name);
    report.rows.resize(tasks.size());
    const auto count = static_cast<std::ptrdiff_t>(tasks.size());
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        const Task& task = tasks[std::size_t(i)];
        SweepRow& row = report.rows[std::size_t(i)];
        row.case_name = report.case_name;
        row.params = task.params;
        row.exploratory = task.exploratory || case_info(id).exploratory;
        try {
            task.run(row);
        } catch (const std::exception& e) {
            row.checks.push_back(make_check("evaluation", std::nullopt, e.what()));
        }
        row.verdict = row_verdict(row);
    }
    return report;
}

Json to_json(const SweepRow& row) {
    Json params = Json::object();
    for (const auto& [k, v] : row.params) params[k] = v;
    Json checks = Json::array();
    for (const auto& c : row.checks)
        checks.push_back({{"name", c.name},
                          {"ok", c.ok ? Json(*c.ok) : Json(nullptr)},
                          {"asserted", c.asserted},
                          {"detail", c.detail}});
    Json metrics{{"max_omega", row.max_omega},
                 {"min_hs", row.min_hs ? Json(*row.min_hs) : Json(nullptr)},
                 {"roots", to_json(row.roots)}};
    Json out{{"case", row.case_name},
             {"params", params},
             {"verdict", verdict_name(row.verdict)},
             {"metrics", metrics},
             {"checks", checks}};
    if (!row.note.empty()) out["note"] = row.note;
    return out;
}

Json to_json(const SweepReport& report) {
    Json rows = Json::array();
    for (const auto& r : report.rows) rows.push_back(to_json(r));
    return Json{{"case", report.case_name}, {"verdict", verdict_name(report.overall())}, {"rows", rows}};
}

} // namespace hconv
