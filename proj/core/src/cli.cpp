// SPDX-License-Identifier: Apache-2.0
#include "entroprel/cli.hpp"

#include "entroprel/charging.hpp"
#include "entroprel/errors.hpp"
#include "entroprel/grid_search.hpp"
#include "entroprel/maxent.hpp"
#include "entroprel/optimizer.hpp"
#include "entroprel/reliability.hpp"
#include "entroprel/scenario_io.hpp"

#include <CLI11.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

namespace entroprel {

namespace {

enum class LogLevel { quiet = 0, info = 1, trace = 2 };

LogLevel log_level_from_env() {
    const char* raw = std::getenv("ENTROPREL_LOG");
    if (!raw) {
        return LogLevel::info;
    }
    const std::string value(raw);
    if (value == "quiet") {
        return LogLevel::quiet;
    }
    if (value == "trace") {
        return LogLevel::trace;
    }
    return LogLevel::info;
}

struct Log {
    std::ostream& err;
    LogLevel level = log_level_from_env();

    template <typename T> void info(const T& msg) {
        if (level >= LogLevel::info) {
            err << "[entroprel] " << msg << '\n';
        }
    }
    template <typename T> void trace(const T& msg) {
        if (level >= LogLevel::trace) {
            err << "[entroprel:trace] " << msg << '\n';
        }
    }
};

std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

void write_text(const std::string& dir, const std::string& file, const std::string& text,
                std::ostream& out) {
    std::filesystem::create_directories(dir);
    const std::string path = (std::filesystem::path(dir) / file).string();
    std::ofstream stream(path, std::ios::binary);
    if (!stream) {
        throw ParseError(path + ": cannot open for writing");
    }
    stream << text;
    out << "wrote " << path << '\n';
}

void trace_run(const OptimizerRun& run, Log& log) {
    for (std::size_t k = 0; k < run.objective_trace.size(); ++k) {
        std::ostringstream line;
        line << "iter " << k << ": f = " << run.objective_trace[k] << " at ("
             << run.multiplier_trace[k].lambda1 << ", "
             << run.multiplier_trace[k].lambda2 << ")";
        log.trace(line.str());
    }
}

void print_validity(const ValidityReport& validity, std::ostream& out) {
    out << "case2_all: " << (validity.case2_all() ? "true" : "false") << '\n'
        << "exponent_bound: " << (validity.exponent_bound_holds ? "true" : "false") << '\n'
        << "lambda_signs: "
        << (validity.lambda1_negative && validity.lambda2_positive ? "true" : "false")
        << '\n'
        << "overall_valid: " << (validity.overall_valid ? "true" : "false") << '\n';
}

/// Writes the four standard artifacts for one multiplier pair.
void write_artifacts(const std::string& dir, const LoadedScenario& loaded,
                     const MultiplierPair& multipliers, const OptimizerRun* run,
                     std::ostream& out) {
    const Scenario& scenario = loaded.scenario;
    const FailureMatrix matrix = failure_matrix(scenario, multipliers);
    const ValidityReport validity = check_validity(scenario, multipliers);
    const double obj = objective(multipliers, scenario, loaded.optimizer);
    const double f1 = constraint_f1(scenario, matrix);
    const double f2 = constraint_f2(scenario, matrix);
    const std::array<double, 2> residuals{f1 - scenario.network_failure_probability,
                                          f2 - scenario.expected_loss};
    const double penalty =
        obj - residuals[0] * residuals[0] - residuals[1] * residuals[1];

    write_text(dir, "multipliers.json",
               emit_multipliers_json(multipliers, obj, residuals,
                                     penalty > 0.0 ? penalty : 0.0, validity, run),
               out);
    write_text(dir, "failure_table.csv", emit_failure_table_csv(scenario, matrix), out);

    const ReliabilityCurve curve = build_reliability_curve(scenario, matrix);
    const WeakestComponentReport weakest = identify_weakest_component(scenario, matrix);
    write_text(dir, "reliability_curve.csv", emit_reliability_csv(curve), out);
    write_text(dir, "component_failure.csv",
               emit_component_failure_csv(scenario, curve, weakest), out);
}

int exit_code_for(const OptimizerRun& run, const ValidityReport& validity) {
    if (run.convergence_reason == ConvergenceReason::MaxIterations) {
        return 2;
    }
    return validity.overall_valid ? 0 : 3;
}

int cmd_solve(const std::string& path, const std::string& dir, bool with_report,
              std::ostream& out, Log& log) {
    const LoadedScenario loaded = load_scenario(path);
    log.info("scenario loaded: " + std::to_string(loaded.scenario.component_count()) +
             " components, " + std::to_string(loaded.scenario.level_count()) +
             " stress levels");
    const OptimizerRun run = estimate_multipliers(loaded.scenario, loaded.optimizer);
    trace_run(run, log);
    const ValidityReport validity =
        check_validity(loaded.scenario, run.final_multipliers);

    out << "lambda1: " << fixed6(run.final_multipliers.lambda1) << '\n'
        << "lambda2: " << fixed6(run.final_multipliers.lambda2) << '\n'
        << "objective: " << fixed6(run.final_objective) << '\n'
        << "iterations: " << run.iterations << '\n'
        << "convergence: " << to_string(run.convergence_reason) << '\n';
    print_validity(validity, out);

    write_artifacts(dir, loaded, run.final_multipliers, &run, out);

    if (with_report) {
        const FailureMatrix matrix =
            failure_matrix(loaded.scenario, run.final_multipliers);
        const auto points = entropy_reliability_report(loaded.scenario, {matrix});
        write_text(dir, "entropy_reliability.csv",
                   emit_entropy_reliability_csv(points), out);
        if (loaded.charging) {
            const SessionStress stress =
                analyze_session(*loaded.charging, loaded.granularity_h);
            out << "energy_needed_kwh: " << fixed6(stress.energy_kwh) << '\n'
                << "expected_hours: " << fixed6(stress.expected_h) << '\n'
                << "stress_levels: " << stress.stress_levels << '\n';
            if (static_cast<std::size_t>(stress.stress_levels) !=
                loaded.scenario.level_count()) {
                log.info("charging block implies " +
                         std::to_string(stress.stress_levels) +
                         " stress levels but the matrix has " +
                         std::to_string(loaded.scenario.level_count()));
            }
        }
    }
    return exit_code_for(run, validity);
}

int cmd_evaluate(const std::string& path, double lambda1, double lambda2,
                 const std::string& dir, std::ostream& out, Log& log) {
    const LoadedScenario loaded = load_scenario(path);
    const MultiplierPair multipliers{lambda1, lambda2};
    const ValidityReport validity = check_validity(loaded.scenario, multipliers);
    log.info("evaluating fixed multipliers, no optimization");

    out << "lambda1: " << fixed6(lambda1) << '\n'
        << "lambda2: " << fixed6(lambda2) << '\n';
    print_validity(validity, out);
    write_artifacts(dir, loaded, multipliers, nullptr, out);
    return validity.overall_valid ? 0 : 3;
}

int cmd_charging_time(const std::string& path, std::ostream& out) {
    const LoadedScenario loaded = load_scenario(path);
    if (!loaded.charging) {
        throw RangeError(path + ": scenario has no charging block");
    }
    const SessionStress stress = analyze_session(*loaded.charging, loaded.granularity_h);
    out << "energy_needed_kwh: " << fixed6(stress.energy_kwh) << '\n'
        << "expected_hours: " << fixed6(stress.expected_h) << '\n'
        << "actual_hours: " << fixed6(loaded.charging->actual_duration_h) << '\n'
        << "additional_hours: " << fixed6(stress.additional_h) << '\n'
        << "stress_levels: " << stress.stress_levels << '\n';
    return 0;
}

int cmd_oracle(const std::string& path, int steps, std::ostream& out, Log& log) {
    const LoadedScenario loaded = load_scenario(path);
    const OptimizerOptions& opt = loaded.optimizer;

    GridResult grid = grid_search(loaded.scenario, opt,
                                  default_grid(loaded.scenario, opt, steps));
    log.info("coarse grid minimum " + fixed6(grid.objective));
    const GridSpec coarse = default_grid(loaded.scenario, opt, steps);
    double radius1 = (coarse.lambda1_range.hi - coarse.lambda1_range.lo) / (steps - 1);
    double radius2 = (coarse.lambda2_range.hi - coarse.lambda2_range.lo) / (steps - 1);
    for (int round = 0; round < 3; ++round) {
        grid = refine_search(loaded.scenario, opt, grid.best, radius1, radius2, 101);
        radius1 = 2.0 * radius1 / 100.0;
        radius2 = 2.0 * radius2 / 100.0;
        log.trace("refined grid minimum " + fixed6(grid.objective));
    }

    const OptimizerRun run = estimate_multipliers(loaded.scenario, opt);
    trace_run(run, log);

    out << "grid_lambda1: " << fixed6(grid.best.lambda1) << '\n'
        << "grid_lambda2: " << fixed6(grid.best.lambda2) << '\n'
        << "grid_objective: " << fixed6(grid.objective) << '\n'
        << "solve_lambda1: " << fixed6(run.final_multipliers.lambda1) << '\n'
        << "solve_lambda2: " << fixed6(run.final_multipliers.lambda2) << '\n'
        << "solve_objective: " << fixed6(run.final_objective) << '\n'
        << "dominance_gap: " << fixed6(run.final_objective - grid.objective) << '\n';
    if (run.convergence_reason == ConvergenceReason::MaxIterations) {
        return 2;
    }
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Log log{err};

    CLI::App app{"Maximum-entropy failure-probability estimation for "
                 "multi-component networks"};
    app.require_subcommand(1);

    std::string scenario_path;
    std::string out_dir = ".";
    double lambda1 = 0.0;
    double lambda2 = 0.0;
    int steps = 200;

    CLI::App* solve = app.add_subcommand(
        "solve", "Estimate multipliers and write the result tables");
    solve->add_option("scenario", scenario_path, "Scenario JSON file")->required();
    solve->add_option("--out", out_dir, "Output directory");

    CLI::App* evaluate = app.add_subcommand(
        "evaluate", "Skip optimization and emit tables for given multipliers");
    evaluate->add_option("scenario", scenario_path, "Scenario JSON file")->required();
    evaluate->add_option("--lambda1", lambda1, "First multiplier")->required();
    evaluate->add_option("--lambda2", lambda2, "Second multiplier")->required();
    evaluate->add_option("--out", out_dir, "Output directory");

    CLI::App* charging = app.add_subcommand(
        "charging-time", "Energy, expected duration and stress-level count");
    charging->add_option("scenario", scenario_path, "Scenario JSON file")->required();

    CLI::App* oracle = app.add_subcommand(
        "oracle", "Grid-search certification of the optimizer result");
    oracle->add_option("scenario", scenario_path, "Scenario JSON file")->required();
    oracle->add_option("--steps", steps, "Coarse lattice points per axis")
        ->check(CLI::Range(2, 2000));

    CLI::App* report = app.add_subcommand(
        "report", "Full pipeline with plot-ready CSV outputs");
    report->add_option("scenario", scenario_path, "Scenario JSON file")->required();
    report->add_option("--out", out_dir, "Output directory");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("entroprel");
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }

    try {
        if (solve->parsed()) {
            return cmd_solve(scenario_path, out_dir, false, out, log);
        }
        if (evaluate->parsed()) {
            return cmd_evaluate(scenario_path, lambda1, lambda2, out_dir, out, log);
        }
        if (charging->parsed()) {
            return cmd_charging_time(scenario_path, out);
        }
        if (oracle->parsed()) {
            return cmd_oracle(scenario_path, steps, out, log);
        }
        if (report->parsed()) {
            return cmd_solve(scenario_path, out_dir, true, out, log);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}

} // namespace entroprel
