#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hconv/harness.hpp"

namespace {

std::string case_listing() {
    std::ostringstream s;
    s << "Case ids:\n";
    for (const auto& c : hconv::case_catalog()) s << "  " << c.name << "  " << c.summary << "\n";
    s << "Exit status: 0 ok, 1 invalid config, 2 assertion failed, 3 indeterminate, 4 I/O error.\n";
    return s.str();
}

struct CommonFlags {
    std::string a, b, gamma, theta, n, t, alpha1, alpha2;
    int order = hconv::kDefaultOrder;
    std::string grid_radii;
    int grid_angles = 0;
    std::string out = "hconv-out";
    std::string formats;
    std::string config;
    bool no_convexity = false;
};

void add_range(CLI::App* cmd, std::string& target, const std::string& name, const std::string& what) {
    cmd->add_option("--" + name, target, what + " (single value or comma list)");
    cmd->add_option("--" + name + "-range", target, what + " as lo:hi:step, inclusive");
}

void add_common(CLI::App* cmd, CommonFlags& f, std::string& case_id) {
    cmd->add_option("case", case_id, "case id (see list below)")->required();
    add_range(cmd, f.a, "a", "parameter a");
    add_range(cmd, f.b, "b", "independent dilatation parameter for t2.3 (rows become exploratory)");
    add_range(cmd, f.gamma, "gamma", "slant gamma in radians");
    add_range(cmd, f.theta, "theta", "rotation theta in radians");
    add_range(cmd, f.n, "n", "integer power / family index n");
    add_range(cmd, f.t, "t", "combination weight t");
    add_range(cmd, f.alpha1, "alpha1", "family parameter alpha1 (alpha for t3.8)");
    add_range(cmd, f.alpha2, "alpha2", "family parameter alpha2");
    cmd->add_option("--N", f.order, "series truncation order, 16..512")->default_val(hconv::kDefaultOrder);
    cmd->add_option("--grid-radii", f.grid_radii, "comma list of grid radii in (0, 1)");
    cmd->add_option("--grid-angles", f.grid_angles, "angles per grid ring");
    cmd->add_option("--out", f.out, "output directory")->default_val("hconv-out");
    cmd->add_option("--formats", f.formats, "subset of json,csv,svg");
    cmd->add_option("--config", f.config, "JSON config file; explicit flags override it");
    cmd->add_flag("--no-convexity", f.no_convexity, "skip the boundary line-sweep (faster)");
    cmd->footer(case_listing());
}

hconv::RunConfig build_config(hconv::Verb verb, const std::string& case_id, const CommonFlags& f) {
    hconv::RunConfig cfg;
    cfg.verb = verb;
    if (!f.config.empty()) {
        std::ifstream in(f.config);
        if (!in) throw hconv::InvalidInput("cannot read config file " + f.config);
        hconv::apply_config_json(cfg, hconv::Json::parse(in));
    }
    if (!case_id.empty()) cfg.case_id = case_id;
    const hconv::SweepParams defaults = hconv::default_params(hconv::parse_case(cfg.case_id));
    auto& p = cfg.params;
    auto pick = [](std::vector<double>& dst, const std::string& flag, const std::vector<double>& def) {
        if (!flag.empty()) dst = hconv::parse_range(flag);
        else if (dst.empty()) dst = def;
    };
    pick(p.a, f.a, defaults.a);
    pick(p.b, f.b, defaults.b);
    pick(p.gamma, f.gamma, defaults.gamma);
    pick(p.theta, f.theta, defaults.theta);
    pick(p.t, f.t, defaults.t);
    pick(p.alpha1, f.alpha1, defaults.alpha1);
    pick(p.alpha2, f.alpha2, defaults.alpha2);
    if (!f.n.empty()) p.n = hconv::parse_int_range(f.n);
    else if (p.n.empty()) p.n = defaults.n;
    if (f.order != hconv::kDefaultOrder || f.config.empty()) p.order = f.order;
    if (!f.grid_radii.empty() || f.grid_angles > 0) {
        const auto radii = f.grid_radii.empty() ? p.grid.radii() : hconv::parse_range(f.grid_radii);
        p.grid = hconv::DiskGrid(radii, f.grid_angles > 0 ? f.grid_angles : p.grid.angles_per_ring());
    }
    if (f.no_convexity) p.convexity = false;
    if (f.out != "hconv-out" || f.config.empty()) cfg.out_dir = f.out;
    if (!f.formats.empty()) cfg.formats = hconv::parse_formats(f.formats);
    if (verb == hconv::Verb::plot && f.formats.empty()) cfg.formats = {"csv", "svg"};
    return cfg;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"hconv: numerical checks for sheared harmonic maps, their convolutions and convex combinations"};
    app.footer(case_listing());
    app.require_subcommand(1);

    CommonFlags flags;
    std::string case_id;
    auto* verify = app.add_subcommand("verify", "check a case over a parameter sweep");
    auto* explore = app.add_subcommand("explore", "run an open-question case (oq1, oq2, oq3); asserts nothing");
    auto* plot = app.add_subcommand("plot", "write boundary image curves (CSV and SVG) for a case");
    for (auto* cmd : {verify, explore, plot}) add_common(cmd, flags, case_id);

    std::string fixture_dir = "tests/fixtures";
    auto* fixtures = app.add_subcommand("fixtures", "regenerate the golden JSON fixtures");
    fixtures->add_option("--out", fixture_dir, "fixture directory")->default_val("tests/fixtures");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return hconv::kExitInvalidConfig;
    }

    if (fixtures->parsed()) {
        try {
            for (const auto& path : hconv::write_fixtures(fixture_dir)) std::cout << "wrote " << path.string() << "\n";
        } catch (const std::exception& e) {
            std::cerr << "output error: " << e.what() << "\n";
            return hconv::kExitIoError;
        }
        return hconv::kExitOk;
    }

    const hconv::Verb verb = verify->parsed() ? hconv::Verb::verify
                             : explore->parsed() ? hconv::Verb::explore
                                                 : hconv::Verb::plot;
    hconv::RunConfig cfg;
    try {
        cfg = build_config(verb, case_id, flags);
    } catch (const std::exception& e) {
        std::cerr << "invalid configuration: " << e.what() << "\n";
        return hconv::kExitInvalidConfig;
    }
    return hconv::run(cfg, std::cout);
}
