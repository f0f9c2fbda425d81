#include <deltakit/catalog.hpp>
#include <deltakit/report.hpp>

#include <CLI11.hpp>

#include <exception>
#include <iostream>

namespace {

// Exit codes: 0 all certified / matched, 1 computational error,
// 2 regression or verdict mismatch, 3 input error.
constexpr int kOk = 0;
constexpr int kComputeError = 1;
constexpr int kMismatch = 2;
constexpr int kInputError = 3;

void print_nested(const std::exception& e, int level = 0) {
    std::cerr << std::string(static_cast<std::size_t>(level) * 2, ' ') << e.what() << "\n";
    try {
        std::rethrow_if_nested(e);
    } catch (const std::exception& inner) {
        print_nested(inner, level + 1);
    } catch (...) {
    }
}

int run_check() {
    deltakit::RegressionSummary sum = deltakit::regression_check(&std::cout);
    std::cout << sum.scenarios << " scenarios, " << sum.matched_values
              << " expected fractions matched, " << sum.certified << " certified\n";
    if (sum.pass) {
        std::cout << "regression: pass\n";
        return kOk;
    }
    for (const std::string& f : sum.failures)
        std::cout << "regression: " << f << "\n";
    std::cout << "regression: FAIL\n";
    return kMismatch;
}

int run_list() {
    for (const deltakit::Scenario& s : deltakit::builtin_catalog())
        std::cout << s.name << "\n    " << s.description << "\n";
    return kOk;
}

int run_compute(const std::string& path, const std::string& format, bool emit_chambers) {
    deltakit::Scenario s;
    try {
        const std::string prefix = "builtin:";
        if (path.rfind(prefix, 0) == 0)
            s = deltakit::builtin_scenario(path.substr(prefix.size()));
        else
            s = deltakit::load_scenario(path);
    } catch (const deltakit::ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const deltakit::ValidationError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const deltakit::UnknownClass& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInputError;
    }
    deltakit::Report r = deltakit::run_report(s, emit_chambers);
    if (format == "json")
        std::cout << deltakit::report_json(r);
    else
        std::cout << deltakit::report_text(r);
    return (r.certified && r.mismatches.empty()) ? kOk : kMismatch;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact K-stability certificates for Fano family 2.17"};
    app.require_subcommand(1);

    app.add_subcommand("check", "Run every builtin scenario and compare all expected fractions");

    app.add_subcommand("list", "List the builtin scenario catalog");

    auto* compute = app.add_subcommand("compute", "Compute one scenario from a file");
    std::string path;
    std::string format = "text";
    bool emit_chambers = false;
    compute->add_option("--scenario", path, "Scenario file path, or builtin:<name>")->required();
    compute->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
    compute->add_flag("--emit-chambers", emit_chambers, "Include the chamber tables");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand("check"))
            return run_check();
        if (app.got_subcommand("list"))
            return run_list();
        return run_compute(path, format, emit_chambers);
    } catch (const std::exception& e) {
        std::cerr << "error:\n";
        print_nested(e, 1);
        return kComputeError;
    }
}
