#pragma once

#include <string>

#include <json.hpp>

#include "hconv/hmap.hpp"
#include "hconv/rational.hpp"

namespace hconv {

using Json = nlohmann::ordered_json;

/// x rounded to the given number of significant decimal digits.
double round_significant(double x, int digits = 15);

Json to_json(Complex z);
Json to_json(std::span<const Complex> values);
Json to_json(const ComplexPolynomial& p);
Json to_json(const PowerSeries& s);
/// {"h": [...], "g": [...]}
Json to_json(const HarmonicMap& f);
/// {"num": [...], "den": [...]}
Json to_json(const RationalFunction& r);

Complex complex_from_json(const Json& j);
std::vector<Complex> complex_array_from_json(const Json& j);
ComplexPolynomial polynomial_from_json(const Json& j);
PowerSeries series_from_json(const Json& j);
HarmonicMap map_from_json(const Json& j);
RationalFunction rational_from_json(const Json& j);

/// Copy of j with every floating value rounded to 15 significant digits.
Json rounded(const Json& j);

/// Rounded, two-space indented dump with a trailing newline.
std::string dump_stable(const Json& j);

} // namespace hconv
