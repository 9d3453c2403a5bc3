#include <charconv>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "uncdyn/scenario_io.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitInputError = 2;

// Pinned from the acceptance thresholds of the equation-of-motion check.
constexpr double kFdStep = 1e-4;
constexpr double kFdThreshold = 1e-7;

std::string format_number(double v) {
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file \"" + path + "\"");
    out << content;
    if (!out) throw std::runtime_error("failed writing output file \"" + path + "\"");
}

struct ToleranceOverrides {
    double ineq = -1.0;
    double oracle = -1.0;

    void apply(uncdyn::Scenario& scenario) const {
        if (ineq > 0.0) scenario.tolerances.ineq = ineq;
        if (oracle > 0.0) scenario.tolerances.oracle = oracle;
    }
};

int cmd_sweep(const std::string& scenario_path, const std::string& out_path, bool demo,
              const ToleranceOverrides& overrides) {
    if (demo) {
        const std::string dir = out_path.empty() ? "." : out_path;
        std::filesystem::create_directories(dir);
        for (auto& [name, scenario] : uncdyn::demo_scenarios()) {
            const uncdyn::SweepReport report = uncdyn::run_sweep(scenario);
            const std::string path = dir + "/" + name + ".csv";
            write_text_file(path, uncdyn::emit_csv(report));
            std::cout << path << "\n";
        }
        return kExitPass;
    }

    uncdyn::Scenario scenario = uncdyn::load_scenario(scenario_path);
    overrides.apply(scenario);
    const uncdyn::SweepReport report = uncdyn::run_sweep(scenario);
    const std::string csv = uncdyn::emit_csv(report);
    if (out_path.empty()) {
        std::cout << csv;
    } else {
        write_text_file(out_path, csv);
    }
    return kExitPass;
}

int cmd_verify(const std::string& scenario_path, const std::string& out_path,
               const ToleranceOverrides& overrides) {
    uncdyn::Scenario scenario = uncdyn::load_scenario(scenario_path);
    overrides.apply(scenario);

    const uncdyn::SweepReport report = uncdyn::run_sweep(scenario);
    if (!out_path.empty()) write_text_file(out_path, uncdyn::emit_csv(report));

    std::cout << "records: " << report.records.size() << "\n";
    std::cout << "min_slack: " << format_number(report.min_slack) << "\n";

    bool pass = true;
    if (report.has_oracle) {
        const uncdyn::OracleErrors err = uncdyn::compare_numeric_analytic(report);
        std::cout << "max_lhs_error: " << format_number(err.lhs_err) << "\n";
        std::cout << "max_rhs_error: " << format_number(err.rhs_err) << "\n";
        if (err.lhs_err > scenario.tolerances.oracle || err.rhs_err > scenario.tolerances.oracle) {
            std::cout << "oracle: FAIL (tolerance " << format_number(scenario.tolerances.oracle)
                      << ")\n";
            pass = false;
        } else {
            std::cout << "oracle: ok\n";
        }
    } else {
        std::cout << "oracle: none (custom scenario)\n";
    }

    const uncdyn::InequalityCheck ineq = uncdyn::check_inequality(report, scenario.tolerances.ineq);
    if (!ineq.pass) {
        std::cout << "inequality: FAIL at " << ineq.violations.size() << " grid points\n";
        for (std::size_t k : ineq.violations) {
            const auto& rec = report.records[k];
            std::cout << "  violation index " << k << " (t1=" << format_number(rec.t1)
                      << ", t2=" << format_number(rec.t2)
                      << ", slack=" << format_number(rec.slack) << ")\n";
        }
        pass = false;
    } else {
        std::cout << "inequality: ok\n";
    }

    std::cout << (pass ? "verify: PASS" : "verify: FAIL") << "\n";
    return pass ? kExitPass : kExitVerificationFailure;
}

int cmd_fdcheck(const std::string& scenario_path, const ToleranceOverrides& overrides) {
    uncdyn::Scenario scenario = uncdyn::load_scenario(scenario_path);
    overrides.apply(scenario);
    const uncdyn::PreparedScenario ps = uncdyn::prepare(scenario);

    double worst = 0.0;
    auto run_points = [&](const uncdyn::ComplexMatrix& obs, const uncdyn::GridSpec& grid,
                          const char* label) {
        double max_defect = 0.0;
        for (std::size_t i = 0; i < grid.count; ++i) {
            const double t = uncdyn::grid_point(grid, i);
            max_defect =
                std::max(max_defect, uncdyn::finite_difference_check(ps.system, obs, t, kFdStep));
        }
        std::cout << label << " max_defect: " << format_number(max_defect)
                  << " (h=" << format_number(kFdStep) << ")\n";
        worst = std::max(worst, max_defect);
    };

    run_points(ps.observable_a, scenario.t1_grid, "observable_a");
    run_points(ps.observable_b, scenario.t2_grid, "observable_b");

    const bool pass = worst <= kFdThreshold;
    std::cout << (pass ? "fdcheck: PASS" : "fdcheck: FAIL") << " (threshold "
              << format_number(kFdThreshold) << ")\n";
    return pass ? kExitPass : kExitVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"uncdyn: two-time uncertainty sweeps for finite quantum systems"};
    app.require_subcommand(1);

    std::string scenario_path;
    std::string out_path;
    ToleranceOverrides overrides;
    bool demo = false;

    CLI::App* sweep = app.add_subcommand("sweep", "run a sweep and emit its CSV");
    CLI::App* verify =
        app.add_subcommand("verify", "run a sweep and check oracle agreement and the inequality");
    CLI::App* fdcheck =
        app.add_subcommand("fdcheck", "finite-difference check of the equation of motion");

    for (CLI::App* sub : {sweep, verify, fdcheck}) {
        sub->add_option("--scenario", scenario_path, "scenario JSON file");
        sub->add_option("--ineq-tol", overrides.ineq, "inequality tolerance override")
            ->check(CLI::PositiveNumber);
        sub->add_option("--oracle-tol", overrides.oracle, "oracle tolerance override")
            ->check(CLI::PositiveNumber);
    }
    sweep->add_option("--out", out_path, "output CSV file (demo: output directory)");
    verify->add_option("--out", out_path, "also write the sweep CSV here");
    sweep->add_flag("--demo", demo, "emit the eight built-in model sweeps");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInputError;
    }

    try {
        if (sweep->parsed()) {
            if (!demo && scenario_path.empty()) {
                std::cerr << "error: sweep needs --scenario or --demo\n";
                return kExitInputError;
            }
            return cmd_sweep(scenario_path, out_path, demo, overrides);
        }
        if (verify->parsed()) {
            if (scenario_path.empty()) {
                std::cerr << "error: verify needs --scenario\n";
                return kExitInputError;
            }
            return cmd_verify(scenario_path, out_path, overrides);
        }
        if (scenario_path.empty()) {
            std::cerr << "error: fdcheck needs --scenario\n";
            return kExitInputError;
        }
        return cmd_fdcheck(scenario_path, overrides);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}
