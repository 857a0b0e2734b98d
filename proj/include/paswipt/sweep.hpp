// SPDX-License-Identifier: Apache-2.0
// Pinching-antenna SWIPT toolkit: parameter sweeps and results export.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "paswipt/driver.hpp"
#include "paswipt/scenario_io.hpp"

namespace paswipt {

enum class SweepParam { grid_points, power_budget_dbm, num_antennas };

const char* sweep_param_name(SweepParam p);  // "D", "P_B", "M"

struct SweepSpec {
    SweepParam param = SweepParam::grid_points;
    std::vector<double> values;
    std::size_t trials = 100;
    std::uint64_t base_seed = 1;
    bool run_elementwise = true;
    bool run_pso = true;
    AlternationConfig alt;  // template; algo/seed/grid overridden per row
};

struct ResultRow {
    std::string param;
    double value = 0.0;
    std::string algorithm;  // elementwise | pso | mimo | fixed
    std::size_t trial = 0;
    std::uint64_t seed = 0;  // algorithm seed, for replay
    std::string status;
    double objective_w = 0.0;       // 0 for infeasible runs
    double objective_dbm = 0.0;     // -inf for infeasible runs
    std::size_t outer_iterations = 0;
    double wall_time_s = 0.0;  // in-memory only; exports skip it so bytes are stable
};

// For each value x trial: materialize the scenario (receivers resampled from
// a per-trial seed shared across values, so trend comparisons are paired),
// then run the selected algorithms plus both baselines.  Infeasible runs are
// recorded as rows with zero objective; nothing aborts the sweep.
std::vector<ResultRow> run_sweep(const SweepSpec& spec, const ScenarioConfig& base);

// Re-runs the single (value, algorithm, trial) combination a row came from.
ResultRow replay_row(const SweepSpec& spec, const ScenarioConfig& base, const ResultRow& row);

// CSV: header row, RFC-4180 quoting, '.' decimal, LF endings.  JSON: array of
// row objects.  Doubles are written with up to 17 significant digits so that
// parsing them back is exact; infeasible dBm values appear as -inf (CSV) or
// null (JSON).
void write_csv(const std::vector<ResultRow>& rows, std::ostream& out);
void write_json(const std::vector<ResultRow>& rows, std::ostream& out);
std::vector<ResultRow> read_csv(std::istream& in);
std::vector<ResultRow> read_json(std::istream& in);

}  // namespace paswipt
