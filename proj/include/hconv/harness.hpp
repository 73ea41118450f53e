#pragma once

#include <filesystem>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "hconv/sweep.hpp"

namespace hconv {

enum class Verb { verify, explore, plot };

enum ExitCode : int {
    kExitOk = 0,
    kExitInvalidConfig = 1,
    kExitAssertionFailed = 2,
    kExitIndeterminate = 3,
    kExitIoError = 4,
};

struct RunConfig {
    Verb verb = Verb::verify;
    std::string case_id;
    SweepParams params;
    std::filesystem::path out_dir = "hconv-out";
    std::set<std::string> formats{"json", "csv", "svg"};
};

/// "lo:hi:step" (inclusive, values rounded to 12 decimals), "x", or "x,y,z".
std::vector<double> parse_range(std::string_view text);
/// Same syntax; every value must be an integer.
std::vector<int> parse_int_range(std::string_view text);
/// "json,csv" -> {"json", "csv"}; throws on anything outside {json, csv, svg}.
std::set<std::string> parse_formats(std::string_view text);

/// Throws InvalidInput with an actionable message.
void validate(const RunConfig& config);

/// Applies a --config JSON document on top of the given config.
/// Keys: case, a, b, gamma, theta, n, t, alpha1, alpha2 (range string, number or array),
/// N, grid {radii, angles}, out, formats, convexity.
void apply_config_json(RunConfig& config, const Json& doc);

/// Runs the sweep and writes report.json, samples.csv and <case>.svg as requested.
/// Returns an ExitCode; progress and row summaries go to log.
int run(const RunConfig& config, std::ostream& log);

/// Regenerates the golden JSON fixtures into dir; returns the written paths.
std::vector<std::filesystem::path> write_fixtures(const std::filesystem::path& dir);

} // namespace hconv
