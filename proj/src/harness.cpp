#include "hconv/harness.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "hconv/geochk.hpp"

namespace hconv {

namespace {

constexpr std::size_t kMaxRangeValues = 100000;

double parse_number(std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || res.ec != std::errc{} || res.ptr != s.data() + s.size())
        throw InvalidInput("not a number: '" + std::string(s) + "'");
    return v;
}

double round12(double x) { return std::round(x * 1e12) / 1e12; }

std::vector<double> json_values(const Json& v, const std::string& key) {
    if (v.is_string()) return parse_range(v.get<std::string>());
    if (v.is_number()) return {v.get<double>()};
    if (v.is_array()) {
        std::vector<double> out;
        for (const auto& x : v) {
            if (!x.is_number()) throw InvalidInput("config key '" + key + "' must hold numbers");
            out.push_back(x.get<double>());
        }
        return out;
    }
    throw InvalidInput("config key '" + key + "' must be a range string, a number or an array");
}

std::vector<int> to_ints(const std::vector<double>& v) {
    std::vector<int> out;
    for (double x : v) {
        if (x != std::round(x) || std::abs(x) > 1e6) throw InvalidInput("n must be an integer");
        out.push_back(static_cast<int>(x));
    }
    return out;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::ios_base::failure("cannot open " + path.string() + " for writing");
    out << content;
    if (!out) throw std::ios_base::failure("failed writing " + path.string());
}

std::string row_summary(const SweepRow& row) {
    std::ostringstream s;
    s << verdict_name(row.verdict) << "  " << row.param_id() << "  max|w~|=" << row.max_omega;
    if (row.min_hs) s << "  minHS=" << *row.min_hs;
    std::string passed, failed;
    for (const auto& c : row.checks) {
        if (c.ok && *c.ok) passed += (passed.empty() ? "" : ", ") + c.name;
        else if (c.asserted || row.exploratory) failed += (failed.empty() ? "" : "; ") + c.name + ": " + c.detail;
    }
    if (!passed.empty()) s << "  [" << passed << "]";
    if (!failed.empty()) s << "  {" << failed << "}";
    if (!row.note.empty()) s << "  (" << row.note << ")";
    return s.str();
}

} // namespace

std::vector<double> parse_range(std::string_view text) {
    if (text.find(':') != std::string_view::npos) {
        std::vector<std::string_view> parts;
        std::size_t start = 0;
        for (std::size_t pos; (pos = text.find(':', start)) != std::string_view::npos; start = pos + 1)
            parts.push_back(text.substr(start, pos - start));
        parts.push_back(text.substr(start));
        if (parts.size() != 3) throw InvalidInput("range must look like lo:hi:step, got '" + std::string(text) + "'");
        const double lo = parse_number(parts[0]);
        const double hi = parse_number(parts[1]);
        const double step = parse_number(parts[2]);
        if (!(step > 0.0)) throw InvalidInput("range step must be positive in '" + std::string(text) + "'");
        if (!(lo <= hi)) throw InvalidInput("range needs lo <= hi in '" + std::string(text) + "'");
        if ((hi - lo) / step > double(kMaxRangeValues)) throw InvalidInput("range has too many values");
        std::vector<double> out;
        for (int i = 0;; ++i) {
            const double x = round12(lo + i * step);
            if (x > hi + 1e-12) break;
            out.push_back(x);
        }
        return out;
    }
    std::vector<double> out;
    std::size_t start = 0;
    for (;;) {
        const std::size_t pos = text.find(',', start);
        out.push_back(round12(parse_number(text.substr(start, pos - start))));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

std::vector<int> parse_int_range(std::string_view text) { return to_ints(parse_range(text)); }

std::set<std::string> parse_formats(std::string_view text) {
    std::set<std::string> out;
    std::size_t start = 0;
    for (;;) {
        const std::size_t pos = text.find(',', start);
        const std::string f(text.substr(start, pos - start));
        if (f != "json" && f != "csv" && f != "svg")
            throw InvalidInput("unknown output format '" + f + "' (allowed: json, csv, svg)");
        out.insert(f);
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

void validate(const RunConfig& config) {
    const CaseId id = parse_case(config.case_id);
    const bool open = case_info(id).exploratory;
    if (config.verb == Verb::verify && open)
        throw InvalidInput("case '" + config.case_id + "' is an open question; use 'explore'");
    if (config.verb == Verb::explore && !open)
        throw InvalidInput("'explore' takes an open-question case (oq1, oq2, oq3); use 'verify' for " + config.case_id);
    if (config.params.order < 16 || config.params.order > 512)
        throw InvalidInput("--N must lie in [16, 512]");
    for (const auto& f : config.formats)
        if (f != "json" && f != "csv" && f != "svg") throw InvalidInput("unknown output format '" + f + "'");
}

void apply_config_json(RunConfig& config, const Json& doc) {
    if (!doc.is_object()) throw InvalidInput("config must be a JSON object");
    for (const auto& [key, v] : doc.items()) {
        auto& p = config.params;
        if (key == "case") config.case_id = v.get<std::string>();
        else if (key == "a") p.a = json_values(v, key);
        else if (key == "b") p.b = json_values(v, key);
        else if (key == "gamma") p.gamma = json_values(v, key);
        else if (key == "theta") p.theta = json_values(v, key);
        else if (key == "t") p.t = json_values(v, key);
        else if (key == "alpha1") p.alpha1 = json_values(v, key);
        else if (key == "alpha2") p.alpha2 = json_values(v, key);
        else if (key == "n") p.n = to_ints(json_values(v, key));
        else if (key == "N") p.order = v.get<int>();
        else if (key == "convexity") p.convexity = v.get<bool>();
        else if (key == "out") config.out_dir = v.get<std::string>();
        else if (key == "formats") {
            config.formats.clear();
            for (const auto& f : v) config.formats.insert(f.get<std::string>());
        } else if (key == "grid") {
            std::vector<double> radii = p.grid.radii();
            int angles = p.grid.angles_per_ring();
            if (v.contains("radii")) radii = json_values(v.at("radii"), "grid.radii");
            if (v.contains("angles")) angles = v.at("angles").get<int>();
            p.grid = DiskGrid(radii, angles);
        } else {
            throw InvalidInput("unknown config key '" + key + "'");
        }
    }
}

int run(const RunConfig& config, std::ostream& log) {
    SweepReport report;
    try {
        validate(config);
        report = sweep_report(parse_case(config.case_id), config.params);
    } catch (const InvalidInput& e) {
        log << "invalid configuration: " << e.what() << "\n";
        return kExitInvalidConfig;
    }

    for (const auto& row : report.rows) log << row_summary(row) << "\n";
    const Verdict overall = report.overall();
    log << config.case_id << ": " << report.rows.size() << " rows, verdict " << verdict_name(overall) << "\n";

    try {
        std::filesystem::create_directories(config.out_dir);
        const bool plot = config.verb == Verb::plot;
        if (!plot && config.formats.count("json"))
            write_file(config.out_dir / "report.json", dump_stable(to_json(report)));
        std::vector<LabelledCurve> curves;
        for (const auto& row : report.rows)
            if (!row.curve.empty()) curves.push_back({row.param_id(), row.curve});
        if (config.formats.count("csv") || plot) {
            std::ostringstream csv;
            write_curves_csv(csv, curves);
            write_file(config.out_dir / "samples.csv", csv.str());
        }
        if (config.formats.count("svg") || plot) {
            std::ostringstream svg;
            write_curves_svg(svg, curves, report.case_name + ": image of |z| = 0.995");
            write_file(config.out_dir / (report.case_name + ".svg"), svg.str());
        }
    } catch (const std::exception& e) {
        log << "output error: " << e.what() << "\n";
        return kExitIoError;
    }

    if (config.verb == Verb::plot) return kExitOk;
    switch (overall) {
    case Verdict::fail: return kExitAssertionFailed;
    case Verdict::indeterminate: return kExitIndeterminate;
    default: return kExitOk;
    }
}

} // namespace hconv
