#pragma once

#include <deltakit/scenario.hpp>

#include <iosfwd>
#include <optional>

namespace deltakit {

/// Exact results of one scenario run. Every value is an exact fraction and
/// the verdict is recheckable from the values alone.
struct Report {
    struct ProfileValue {
        std::string name;
        Rat f_o;
        Rat s_o;
    };
    struct Mismatch {
        std::string key;
        Rat expected;
        Rat computed;
    };

    std::string scenario;
    Rat tau;
    Rat s_x;
    std::optional<CurveFlagResult> curve_flag;
    std::optional<Rat> s_wf;
    std::optional<Rat> s_wf_first;
    std::optional<Rat> s_wo_quad;
    std::vector<ProfileValue> profiles;
    bool certified = false;
    std::map<std::string, Rat> computed;
    std::vector<Mismatch> mismatches;
    std::vector<std::string> notes;
    std::optional<ChamberedDecomposition> threefold_chambers;
};

/// Runs one scenario end to end. Computation errors are annotated with the
/// scenario name and rethrown.
Report run_report(const Scenario& s, bool emit_chambers = false);

std::string report_text(const Report& r);
std::string report_json(const Report& r);

struct RegressionSummary {
    int scenarios = 0;
    int matched_values = 0;
    int certified = 0;
    std::vector<std::string> failures;
    bool pass = false;
};

/// Runs every builtin scenario; passes iff every expected fraction matches
/// exactly and every verdict is certified. Progress lines go to `log` when
/// given.
RegressionSummary regression_check(std::ostream* log = nullptr);

} // namespace deltakit
