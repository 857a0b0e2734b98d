// SPDX-License-Identifier: Apache-2.0
// Pinching-antenna SWIPT toolkit: alternating optimization driver, baselines.
#pragma once

#include <cstdint>

#include "paswipt/position_opt.hpp"
#include "paswipt/power_alloc.hpp"
#include "paswipt/scenario.hpp"

namespace paswipt {

enum class PositionAlgo { elementwise, pso };
enum class SolveStatus { converged, iteration_capped, infeasible };

const char* to_string(SolveStatus st);

struct AlternationConfig {
    PositionAlgo algo = PositionAlgo::elementwise;
    std::size_t max_outer_iters = 20;
    double rel_tol = 1e-4;       // relative objective change between outer iterations
    std::size_t restarts = 5;    // additional random initial layouts if the first
                                 // power subproblem is infeasible
    std::uint64_t seed = 1;      // drives restarts and the per-iteration PSO streams
    bool random_init = false;    // start from a random layout instead of the uniform one
    ElementWiseConfig elementwise;
    PsoConfig pso;               // seed/seed_layouts fields are overridden per iteration
};

struct SolveReport {
    SolveStatus status = SolveStatus::infeasible;
    PaLayout layout;
    PowerAllocation allocation;
    double objective_w = 0.0;               // total harvested power, re-evaluated
    std::vector<double> ir_sinr;
    std::vector<double> er_harvested_w;
    std::vector<double> trajectory_w;       // objective after each outer iteration
    std::size_t outer_iterations = 0;
    std::size_t restarts_used = 0;
    double wall_time_s = 0.0;
};

// Alternates a position step at fixed powers with the exact power LP at the
// resulting layout; every outer iteration ends on an LP optimum, which makes
// the trajectory non-decreasing.  Starts from the uniform layout and the
// equal split p_i = P_B / (num_antennas * num_info); if the first LP is
// infeasible, retries from random layouts before reporting infeasible.
SolveReport alternate(const Scenario& s, const AlternationConfig& cfg);

// Conventional-array baseline: all antennas packed at the feed end with the
// minimum spacing, position optimization disabled, power LP still exact.
SolveReport baseline_mimo(const Scenario& s);

// Single fixed antenna at the feed point, full power budget.
SolveReport baseline_fixed(const Scenario& s);

}  // namespace paswipt
