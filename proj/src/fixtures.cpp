#include <fstream>

#include "hconv/convo.hpp"
#include "hconv/harness.hpp"
#include "hconv/reference.hpp"

namespace hconv {

namespace {

Json chain_json(const reference::DisplayedChain& c) {
    Json factors = Json::array();
    for (const auto& f : c.factors) factors.push_back(to_json(f));
    return Json{{"p", to_json(c.p)}, {"scalars", c.scalars}, {"factors", factors}};
}

Json quadratic_mobius_quartics() {
    Json cases = Json::array();
    for (double a : {0.25, 0.5, 0.75}) {
        const ComplexPolynomial p = quadratic_mobius_quartic(a);
        cases.push_back({{"a", a},
                         {"p", to_json(p)},
                         {"p_star", to_json(reciprocal_adjoint(p))},
                         {"chain", chain_json(reference::quadratic_mobius_chain(a))}});
    }
    return Json{{"description", "quartic numerator for the (a - z^2)/(1 - a z^2) convolution"}, {"cases", cases}};
}

Json squared_mobius_quartics() {
    Json cases = Json::array();
    for (double a : {0.25, 0.5, 0.75})
        cases.push_back({{"a", a},
                         {"p", to_json(squared_mobius_quartic(a))},
                         {"chain", chain_json(reference::squared_mobius_chain(a))}});
    return Json{{"description", "quartic numerator for the -(a - z)^2/(1 - a z)^2 convolution"}, {"cases", cases}};
}

Json half_convolution_identity() {
    constexpr int kOrder = 32;
    constexpr double a = 0.5;
    const HarmonicMap f0 = half_plane_map(a, 0.0, kOrder);
    const HarmonicMap f = slanted_halfplane(0.0, RationalFunction(ComplexPolynomial{0.0, 1.0}, ComplexPolynomial{1.0}),
                                            kOrder);
    const HarmonicMap conv = convolve(f0, f);
    const double c = (1.0 - a) / (1.0 + a);
    const PowerSeries formula_h = scale(add(f.h, scale(times_z(differentiate(f.h)), c)), 0.5);
    const PowerSeries formula_g = scale(subtract(f.g, scale(times_z(differentiate(f.g)), c)), 0.5);
    return Json{{"description", "h_{a,0} * h = (h + c z h')/2 and g_{a,0} * g = (g - c z g')/2, c = (1-a)/(1+a)"},
                {"a", a},
                {"N", kOrder},
                {"map", to_json(f)},
                {"convolution", to_json(conv)},
                {"formula", to_json(HarmonicMap{formula_h, formula_g})}};
}

Json sextic() {
    constexpr double t = 0.5, a1 = -0.5, a2 = 0.5;
    return Json{{"description", "sextic numerator for the -w, w^2 combination"},
                {"t", t},
                {"alpha1", a1},
                {"alpha2", a2},
                {"chain", chain_json(reference::sextic_chain(t, a1, a2))}};
}

Json strip_dilatation() {
    Json cases = Json::array();
    for (double a : {-0.5, 0.0, 0.5})
        cases.push_back({{"a", a}, {"omega_tilde", to_json(strip_convolution_dilatation(quadratic_mobius(a)))}});
    return Json{{"description", "closed-form strip convolution dilatation; equals z^2"}, {"cases", cases}};
}

} // namespace

std::vector<std::filesystem::path> write_fixtures(const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    const std::pair<const char*, Json> files[] = {
        {"quadratic_mobius_quartic.json", quadratic_mobius_quartics()},
        {"squared_mobius_quartic.json", squared_mobius_quartics()},
        {"half_convolution_identity.json", half_convolution_identity()},
        {"sextic_chain.json", sextic()},
        {"strip_dilatation.json", strip_dilatation()},
    };
    std::vector<std::filesystem::path> written;
    for (const auto& [name, doc] : files) {
        const auto path = dir / name;
        std::ofstream out(path, std::ios::binary);
        if (!out) throw std::ios_base::failure("cannot open " + path.string() + " for writing");
        out << dump_stable(doc);
        if (!out) throw std::ios_base::failure("failed writing " + path.string());
        written.push_back(path);
    }
    return written;
}

} // namespace hconv
