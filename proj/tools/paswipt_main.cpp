// SPDX-License-Identifier: Apache-2.0
// Command-line front end: solve one scenario, run parameter sweeps, or
// validate a previously written report.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "paswipt/driver.hpp"
#include "paswipt/rng.hpp"
#include "paswipt/scenario_io.hpp"
#include "paswipt/sweep.hpp"

namespace {

constexpr int k_exit_ok = 0;
constexpr int k_exit_invalid = 1;
constexpr int k_exit_solver = 2;

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << content;
}

struct CommonOpts {
    std::string scenario_path;
    std::string algo = "elementwise";
    std::uint64_t seed = 1;
    std::string out_path;
    std::size_t grid_points = 4096;
    std::size_t pso_iters = 300;
    std::size_t pso_swarm = 10;
};

paswipt::AlternationConfig make_alt_config(const CommonOpts& o) {
    paswipt::AlternationConfig cfg;
    cfg.seed = o.seed;
    cfg.elementwise.grid_points = o.grid_points;
    cfg.pso.max_iters = o.pso_iters;
    cfg.pso.swarm_size = o.pso_swarm;
    return cfg;
}

int run_solve(const CommonOpts& o) {
    const paswipt::ScenarioConfig cfg = paswipt::load_scenario_config(o.scenario_path);
    const paswipt::Scenario scenario =
        paswipt::materialize(cfg, paswipt::derive_seed(o.seed, 0x5258, 0));
    paswipt::validate(scenario);

    std::vector<std::string> algos;
    if (o.algo == "both") {
        algos = {"elementwise", "pso"};
    } else {
        algos = {o.algo};
    }

    bool solved = true;
    std::vector<std::pair<std::string, paswipt::SolveReport>> reports;
    for (const std::string& algo : algos) {
        paswipt::AlternationConfig acfg = make_alt_config(o);
        acfg.algo =
            algo == "pso" ? paswipt::PositionAlgo::pso : paswipt::PositionAlgo::elementwise;
        const paswipt::SolveReport rep = paswipt::alternate(scenario, acfg);
        solved = solved && rep.status != paswipt::SolveStatus::infeasible;
        std::cerr << algo << ": " << paswipt::to_string(rep.status) << ", objective "
                  << rep.objective_w << " W, " << rep.outer_iterations << " outer iterations, "
                  << rep.wall_time_s << " s\n";
        reports.emplace_back(algo, rep);
    }
    const std::string body = reports.size() == 1
                                 ? paswipt::report_to_json(scenario, reports[0].first,
                                                           reports[0].second)
                                 : paswipt::reports_to_json(scenario, reports);
    write_output(o.out_path, body + "\n");
    return solved ? k_exit_ok : k_exit_solver;
}

int run_sweep_cmd(const CommonOpts& o, const std::string& param,
                  const std::vector<double>& values, std::size_t trials,
                  const std::string& format) {
    const paswipt::ScenarioConfig base = paswipt::load_scenario_config(o.scenario_path);

    paswipt::SweepSpec spec;
    if (param == "D") {
        spec.param = paswipt::SweepParam::grid_points;
    } else if (param == "P_B") {
        spec.param = paswipt::SweepParam::power_budget_dbm;
    } else if (param == "M") {
        spec.param = paswipt::SweepParam::num_antennas;
    } else {
        throw std::invalid_argument("unknown sweep parameter: " + param);
    }
    spec.values = values;
    spec.trials = trials;
    spec.base_seed = o.seed;
    spec.run_elementwise = o.algo == "elementwise" || o.algo == "both";
    spec.run_pso = o.algo == "pso" || o.algo == "both";
    spec.alt = make_alt_config(o);

    const std::vector<paswipt::ResultRow> rows = paswipt::run_sweep(spec, base);
    double total_s = 0.0;
    for (const paswipt::ResultRow& r : rows) total_s += r.wall_time_s;
    std::cerr << rows.size() << " rows, " << total_s << " s solver time\n";

    std::ostringstream body;
    if (format == "csv") {
        paswipt::write_csv(rows, body);
    } else if (format == "json") {
        paswipt::write_json(rows, body);
    } else {
        throw std::invalid_argument("unknown format: " + format);
    }
    write_output(o.out_path, body.str());
    return k_exit_ok;
}

int run_validate(const std::string& report_path) {
    std::ifstream in(report_path);
    if (!in) throw std::runtime_error("cannot open report file: " + report_path);
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string message;
    const bool ok = paswipt::validate_report_json(buf.str(), message);
    std::cerr << message << "\n";
    return ok ? k_exit_ok : k_exit_invalid;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pinching-antenna SWIPT simulation and optimization toolkit"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string param;
    std::vector<double> values;
    std::size_t trials = 100;
    std::string format = "csv";
    std::string report_path;

    const auto add_common = [&](CLI::App* cmd, bool needs_scenario) {
        if (needs_scenario) {
            cmd->add_option("--scenario", opts.scenario_path, "scenario file (JSON)")
                ->required();
        }
        cmd->add_option("--algo", opts.algo, "elementwise | pso | both")
            ->check(CLI::IsMember({"elementwise", "pso", "both"}));
        cmd->add_option("--seed", opts.seed, "base random seed");
        cmd->add_option("--out", opts.out_path, "output path ('-' or empty for stdout)");
        cmd->add_option("--grid-points", opts.grid_points, "element-wise grid resolution D");
        cmd->add_option("--pso-iters", opts.pso_iters, "PSO iteration count");
        cmd->add_option("--pso-swarm", opts.pso_swarm, "PSO swarm size");
    };

    CLI::App* solve = app.add_subcommand("solve", "optimize one scenario and write a report");
    add_common(solve, true);

    CLI::App* sweep = app.add_subcommand("sweep", "run a parameter sweep and export rows");
    add_common(sweep, true);
    sweep->add_option("--param", param, "swept parameter: D | P_B | M")->required();
    sweep->add_option("--values", values, "comma-separated sweep values")
        ->required()
        ->delimiter(',');
    sweep->add_option("--trials", trials, "trials per sweep value");
    sweep->add_option("--format", format, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}));

    CLI::App* validate = app.add_subcommand("validate", "re-evaluate a solve report");
    validate->add_option("--report", report_path, "report file to check")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);  // prints message or help text
        return code == 0 ? k_exit_ok : k_exit_invalid;
    }

    try {
        if (solve->parsed()) return run_solve(opts);
        if (sweep->parsed()) return run_sweep_cmd(opts, param, values, trials, format);
        return run_validate(report_path);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return k_exit_invalid;
    } catch (const std::runtime_error& e) {
        // Unreadable input or output files are invocation problems, not solver failures.
        std::cerr << "error: " << e.what() << "\n";
        return k_exit_invalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return k_exit_solver;
    }
}
