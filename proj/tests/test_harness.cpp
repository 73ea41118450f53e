#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "hconv/harness.hpp"
#include "hconv/json_io.hpp"

namespace fs = std::filesystem;
using hconv::Json;

namespace {

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / ("hconv-test-" + name);
    fs::remove_all(dir);
    return dir;
}

hconv::RunConfig quick_config(hconv::Verb verb, const std::string& id, const fs::path& out) {
    hconv::RunConfig c;
    c.verb = verb;
    c.case_id = id;
    c.params = hconv::default_params(hconv::parse_case(id));
    c.params.convexity = false;
    c.out_dir = out;
    return c;
}

} // namespace

TEST(ParseRange, InclusiveStepsAreRounded) {
    const auto v = hconv::parse_range("-0.9:0.9:0.1");
    ASSERT_EQ(v.size(), 19u);
    EXPECT_EQ(v.front(), -0.9);
    EXPECT_EQ(v[9], 0.0);
    EXPECT_EQ(v[12], 0.3);
    EXPECT_EQ(v.back(), 0.9);
    EXPECT_EQ(hconv::parse_range("0.05:0.95:0.05").size(), 19u);
}

TEST(ParseRange, ListsAndScalars) {
    EXPECT_EQ(hconv::parse_range("0.5"), std::vector<double>{0.5});
    EXPECT_EQ(hconv::parse_range("1,2,3.5"), (std::vector<double>{1, 2, 3.5}));
    EXPECT_EQ(hconv::parse_int_range("1:5:1"), (std::vector<int>{1, 2, 3, 4, 5}));
}

TEST(ParseRange, Rejections) {
    EXPECT_THROW(hconv::parse_range("1:0:0.1"), hconv::InvalidInput);
    EXPECT_THROW(hconv::parse_range("0:1:0"), hconv::InvalidInput);
    EXPECT_THROW(hconv::parse_range("0:1"), hconv::InvalidInput);
    EXPECT_THROW(hconv::parse_range("abc"), hconv::InvalidInput);
    EXPECT_THROW(hconv::parse_int_range("1.5"), hconv::InvalidInput);
    EXPECT_THROW(hconv::parse_formats("json,pdf"), hconv::InvalidInput);
    EXPECT_EQ(hconv::parse_formats("csv,json"), (std::set<std::string>{"csv", "json"}));
}

TEST(JsonIo, RoundSignificant) {
    EXPECT_EQ(hconv::round_significant(0.1 + 0.2), 0.3);
    EXPECT_EQ(hconv::round_significant(1.0 / 3.0), 0.333333333333333);
    EXPECT_EQ(hconv::round_significant(0.0), 0.0);
    EXPECT_EQ(hconv::dump_stable(hconv::rounded(Json{{"x", 0.1 + 0.2}})), "{\n  \"x\": 0.3\n}\n");
}

TEST(JsonIo, RoundTrips) {
    const hconv::ComplexPolynomial p{hconv::Complex(1, 2), 0.5, hconv::Complex(0, -1)};
    const auto back = hconv::polynomial_from_json(hconv::to_json(p));
    ASSERT_EQ(back.degree(), 2);
    for (int k = 0; k <= 2; ++k) EXPECT_EQ(back[k], p[k]);
    const hconv::RationalFunction r(p, hconv::ComplexPolynomial{1.0, 0.25});
    const auto rb = hconv::rational_from_json(hconv::to_json(r));
    EXPECT_EQ(rb.den()[1], hconv::Complex(0.25));
    EXPECT_THROW(hconv::complex_from_json(Json::array({1.0})), hconv::InvalidInput);
}

TEST(Cases, ParseAndCatalog) {
    EXPECT_EQ(hconv::parse_case("T2.5"), hconv::CaseId::t2_5);
    EXPECT_EQ(hconv::parse_case("oq3"), hconv::CaseId::oq3);
    EXPECT_THROW(hconv::parse_case("t9.9"), hconv::InvalidInput);
    EXPECT_EQ(hconv::case_catalog().size(), 11u);
    EXPECT_TRUE(hconv::case_info(hconv::CaseId::oq1).exploratory);
    EXPECT_FALSE(hconv::case_info(hconv::CaseId::t3_11).exploratory);
}

TEST(Validate, VerbMustMatchCase) {
    auto c = quick_config(hconv::Verb::verify, "oq1", "unused");
    EXPECT_THROW(hconv::validate(c), hconv::InvalidInput);
    c = quick_config(hconv::Verb::explore, "t2.5", "unused");
    EXPECT_THROW(hconv::validate(c), hconv::InvalidInput);
    c = quick_config(hconv::Verb::verify, "t2.5", "unused");
    c.params.order = 4;
    EXPECT_THROW(hconv::validate(c), hconv::InvalidInput);
}

TEST(ConfigJson, AppliesKeysAndRejectsUnknown) {
    auto c = quick_config(hconv::Verb::verify, "t2.5", "unused");
    hconv::apply_config_json(c, Json::parse(R"({"case": "t2.3", "a": "0.1:0.3:0.1", "N": 64,
        "grid": {"radii": [0.5, 0.9], "angles": 90}, "formats": ["json"], "convexity": false})"));
    EXPECT_EQ(c.case_id, "t2.3");
    EXPECT_EQ(c.params.a, (std::vector<double>{0.1, 0.2, 0.3}));
    EXPECT_EQ(c.params.order, 64);
    EXPECT_EQ(c.params.grid.size(), 180u);
    EXPECT_EQ(c.formats, std::set<std::string>{"json"});
    EXPECT_THROW(hconv::apply_config_json(c, Json::parse(R"({"bogus": 1})")), hconv::InvalidInput);
}

TEST(Run, VerifyStripCaseWritesStableReport) {
    const fs::path out = scratch("t25");
    auto c = quick_config(hconv::Verb::verify, "t2.5", out);
    c.params.a = hconv::parse_range("-0.9:0.9:0.3");
    std::ostringstream log;
    ASSERT_EQ(hconv::run(c, log), hconv::kExitOk) << log.str();
    const std::string first = slurp(out / "report.json");
    const Json doc = Json::parse(first);
    ASSERT_EQ(doc.at("rows").size(), 7u);
    for (const auto& row : doc.at("rows")) {
        EXPECT_EQ(row.at("verdict"), "pass");
        EXPECT_TRUE(row.at("metrics").contains("max_omega"));
    }
    EXPECT_TRUE(fs::exists(out / "samples.csv"));
    EXPECT_TRUE(fs::exists(out / "t2.5.svg"));

    std::ostringstream again;
    ASSERT_EQ(hconv::run(c, again), hconv::kExitOk);
    EXPECT_EQ(slurp(out / "report.json"), first);
}

TEST(Run, QuarticCaseFindsFourRootsInside) {
    const fs::path out = scratch("t23");
    auto c = quick_config(hconv::Verb::verify, "t2.3", out);
    c.params.a = {0.25, 0.5, 0.75};
    c.formats = {"json"};
    std::ostringstream log;
    ASSERT_EQ(hconv::run(c, log), hconv::kExitOk) << log.str();
    const Json doc = Json::parse(slurp(out / "report.json"));
    for (const auto& row : doc.at("rows")) EXPECT_EQ(row.at("metrics").at("roots").size(), 4u);
}

TEST(Run, ExploreOpenQuestion) {
    const fs::path out = scratch("oq1");
    auto c = quick_config(hconv::Verb::explore, "oq1", out);
    std::ostringstream log;
    EXPECT_EQ(hconv::run(c, log), hconv::kExitOk) << log.str();
    const Json doc = Json::parse(slurp(out / "report.json"));
    EXPECT_EQ(doc.at("rows").at(0).at("verdict"), "exploratory");
}

TEST(Run, ExitCodes) {
    std::ostringstream log;
    auto bad = quick_config(hconv::Verb::verify, "oq2", scratch("bad"));
    EXPECT_EQ(hconv::run(bad, log), hconv::kExitInvalidConfig);

    auto range = quick_config(hconv::Verb::verify, "t3.9", scratch("range"));
    range.params.alpha1 = {2.0};
    EXPECT_EQ(hconv::run(range, log), hconv::kExitInvalidConfig);

    const fs::path blocker = scratch("io");
    { std::ofstream(blocker) << "file"; }
    auto io = quick_config(hconv::Verb::verify, "t2.5", blocker / "sub");
    io.params.a = {0.5};
    EXPECT_EQ(hconv::run(io, log), hconv::kExitIoError);
    fs::remove(blocker);
}

TEST(Run, PlotWritesCurvesOnly) {
    const fs::path out = scratch("plot");
    hconv::RunConfig c;
    c.verb = hconv::Verb::plot;
    c.case_id = "t2.5";
    c.params = hconv::default_params(hconv::CaseId::t2_5);
    c.params.a = {0.0};
    c.out_dir = out;
    std::ostringstream log;
    EXPECT_EQ(hconv::run(c, log), hconv::kExitOk);
    EXPECT_FALSE(fs::exists(out / "report.json"));
    EXPECT_TRUE(fs::exists(out / "samples.csv"));
    const std::string csv = slurp(out / "samples.csv");
    EXPECT_EQ(csv.rfind("param-id,t-index,re,im\n", 0), 0u);
    EXPECT_NE(csv.find("a=0,0,"), std::string::npos);
}

TEST(Fixtures, RegenerationMatchesCommittedFiles) {
    const fs::path out = scratch("fixtures");
    const auto written = hconv::write_fixtures(out);
    ASSERT_EQ(written.size(), 5u);
    for (const auto& p : written) {
        const fs::path committed = fs::path(HCONV_FIXTURE_DIR) / p.filename();
        ASSERT_TRUE(fs::exists(committed)) << committed;
        EXPECT_EQ(slurp(p), slurp(committed)) << p.filename();
    }
}

TEST(Fixtures, QuarticValuesMatchDisplay) {
    const Json doc = Json::parse(slurp(fs::path(HCONV_FIXTURE_DIR) / "quadratic_mobius_quartic.json"));
    const auto& half = doc.at("cases").at(1);
    ASSERT_EQ(half.at("a"), 0.5);
    const auto p = hconv::polynomial_from_json(half.at("p"));
    const std::vector<double> want{0.25, -0.25, -0.75, 0.5, 1.0};
    for (int k = 0; k <= 4; ++k) EXPECT_EQ(p[k], hconv::Complex(want[std::size_t(k)]));
    const auto ps = hconv::polynomial_from_json(half.at("p_star"));
    for (int k = 0; k <= 4; ++k) EXPECT_EQ(ps[k], hconv::Complex(want[std::size_t(4 - k)]));
}

TEST(Fixtures, SexticMatchesDisplay) {
    const Json doc = Json::parse(slurp(fs::path(HCONV_FIXTURE_DIR) / "sextic_chain.json"));
    const auto p = hconv::polynomial_from_json(doc.at("chain").at("p"));
    // t = 0.5, alpha1 = -0.5, alpha2 = 0.5
    const std::vector<double> want{0.5, -0.5, 0.75, -0.25, 0.5, -0.5, 1.0};
    for (int k = 0; k <= 6; ++k) EXPECT_NEAR(std::abs(p[k] - want[std::size_t(k)]), 0.0, 1e-15) << k;
}
