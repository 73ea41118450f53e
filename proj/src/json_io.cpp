#include "hconv/json_io.hpp"

#include <charconv>
#include <cmath>

namespace hconv {

double round_significant(double x, int digits) {
    if (!std::isfinite(x) || x == 0.0) return x;
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::scientific, digits - 1);
    double out = 0.0;
    std::from_chars(buf, res.ptr, out);
    return out;
}

Json to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json to_json(std::span<const Complex> values) {
    Json arr = Json::array();
    for (const Complex& z : values) arr.push_back(to_json(z));
    return arr;
}

Json to_json(const ComplexPolynomial& p) { return to_json(p.coeffs()); }

Json to_json(const PowerSeries& s) { return to_json(s.coeffs()); }

Json to_json(const HarmonicMap& f) { return Json{{"h", to_json(f.h)}, {"g", to_json(f.g)}}; }

Json to_json(const RationalFunction& r) { return Json{{"num", to_json(r.num())}, {"den", to_json(r.den())}}; }

Complex complex_from_json(const Json& j) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw InvalidInput("complex value must be a number or a [re, im] pair");
    return {j[0].get<double>(), j[1].get<double>()};
}

std::vector<Complex> complex_array_from_json(const Json& j) {
    if (!j.is_array()) throw InvalidInput("expected an array of [re, im] pairs");
    std::vector<Complex> out;
    out.reserve(j.size());
    for (const auto& v : j) out.push_back(complex_from_json(v));
    return out;
}

ComplexPolynomial polynomial_from_json(const Json& j) { return ComplexPolynomial(complex_array_from_json(j)); }

PowerSeries series_from_json(const Json& j) {
    auto c = complex_array_from_json(j);
    if (c.empty()) throw InvalidInput("series needs at least one coefficient");
    return PowerSeries(std::move(c));
}

HarmonicMap map_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("h") || !j.contains("g")) throw InvalidInput("map needs 'h' and 'g'");
    return {series_from_json(j.at("h")), series_from_json(j.at("g"))};
}

RationalFunction rational_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den"))
        throw InvalidInput("rational function needs 'num' and 'den'");
    return {polynomial_from_json(j.at("num")), polynomial_from_json(j.at("den"))};
}

Json rounded(const Json& j) {
    if (j.is_number_float()) return round_significant(j.get<double>());
    if (j.is_array()) {
        Json out = Json::array();
        for (const auto& v : j) out.push_back(rounded(v));
        return out;
    }
    if (j.is_object()) {
        Json out = Json::object();
        for (const auto& [k, v] : j.items()) out[k] = rounded(v);
        return out;
    }
    return j;
}

std::string dump_stable(const Json& j) { return rounded(j).dump(2) + "\n"; }

} // namespace hconv
