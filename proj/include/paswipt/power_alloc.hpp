// SPDX-License-Identifier: Apache-2.0
// Pinching-antenna SWIPT toolkit: power allocation at a fixed antenna layout.
#pragma once

#include "paswipt/linprog.hpp"
#include "paswipt/scenario.hpp"
#include "paswipt/system_model.hpp"

namespace paswipt {

// The power subproblem at a fixed layout is linear: with the decoding order
// frozen, each SINR floor becomes
//     p_u g_u - gamma_min g_u sum(p of users decoded later) >= gamma_min sigma_u^2,
// each harvest floor becomes (sum p) G_j >= E_min, the budget is
// num_antennas * sum(p) <= P_B, and the objective sum of harvested powers is
// (sum_j G_j) * sum(p).
struct PowerLp {
    DecodingOrder order;
    std::vector<double> ir_gain;
    std::vector<double> er_gain;
    LinearProgram lp;  // rows: SINR in decoding order, then energy, then budget
};

enum class AllocStatus { optimal, infeasible, numerical_failure };

struct AllocResult {
    AllocStatus status = AllocStatus::numerical_failure;
    PowerAllocation allocation;  // empty unless optimal
    double objective_w = 0.0;
    std::vector<std::size_t> binding;  // binding rows of PowerLp::lp
};

PowerLp build_power_lp(const Scenario& s, const PaLayout& layout);
AllocResult solve_power_lp(const PowerLp& plp);
AllocResult optimize_powers(const Scenario& s, const PaLayout& layout);

}  // namespace paswipt
