#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hconv/grid.hpp"
#include "hconv/json_io.hpp"

namespace hconv {

enum class CaseId { t2_2, t2_3, t2_4, t2_5, t3_8, t3_9, t3_10, t3_11, oq1, oq2, oq3 };

struct CaseInfo {
    CaseId id;
    std::string_view name;
    std::string_view summary;
    bool exploratory;
};

std::span<const CaseInfo> case_catalog();
const CaseInfo& case_info(CaseId id);
/// Case-insensitive; accepts "t2.5" and "T2.5". Throws InvalidInput otherwise.
CaseId parse_case(std::string_view name);

enum class Verdict { pass, fail, exploratory, indeterminate };
std::string_view verdict_name(Verdict v);

struct Check {
    std::string name;
    /// nullopt: could not be decided.
    std::optional<bool> ok;
    std::string detail;
    /// Informational checks never change the verdict.
    bool asserted = true;
};

struct SweepRow {
    std::string case_name;
    std::vector<std::pair<std::string, double>> params;
    Verdict verdict = Verdict::indeterminate;
    bool exploratory = false;
    double max_omega = 0.0;
    std::optional<double> min_hs;
    std::vector<Complex> roots;
    std::vector<Check> checks;
    /// Harmonic image of |z| = r_max, downsampled for plotting.
    std::vector<Complex> curve;
    std::string note;

    /// "a=0.5;n=3", used as the CSV param-id.
    std::string param_id() const;
};

struct SweepParams {
    std::vector<double> a, b, gamma, theta, t, alpha1, alpha2;
    std::vector<int> n;
    int order = 128;
    DiskGrid grid = DiskGrid::standard();
    bool convexity = true;
    int curve_points = 512;
};

/// Documented default ranges of a case.
SweepParams default_params(CaseId id);

struct SweepReport {
    std::string case_name;
    std::vector<SweepRow> rows;

    /// fail if any row fails, else indeterminate if any row is, else pass;
    /// exploratory when every row is exploratory.
    Verdict overall() const;
};

/// Runs the case's construction and certificates over the parameter grid.
/// Rows are evaluated in parallel and returned in parameter order.
SweepReport sweep_report(CaseId id, const SweepParams& params);

Json to_json(const SweepRow& row);
Json to_json(const SweepReport& report);

} // namespace hconv
