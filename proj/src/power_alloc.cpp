// SPDX-License-Identifier: Apache-2.0
#include "paswipt/power_alloc.hpp"

#include <numeric>

namespace paswipt {

PowerLp build_power_lp(const Scenario& s, const PaLayout& layout) {
    PowerLp plp;
    plp.ir_gain = aggregate_gains(s, layout, s.info_receivers);
    plp.er_gain = aggregate_gains(s, layout, s.energy_receivers);
    plp.order = decoding_order(plp.ir_gain);

    const std::size_t ki = s.num_info();
    const double gamma = s.sinr_floor;

    for (std::size_t pos = 0; pos < ki; ++pos) {
        const std::size_t u = plp.order[pos];
        LpConstraint row;
        row.a.assign(ki, 0.0);
        row.a[u] = plp.ir_gain[u];
        for (std::size_t later = pos + 1; later < ki; ++later) {
            row.a[plp.order[later]] = -gamma * plp.ir_gain[u];
        }
        row.kind = LpConstraint::greater_equal;
        row.rhs = gamma * s.noise_power_w[u];
        plp.lp.constraints.push_back(std::move(row));
    }
    for (double gj : plp.er_gain) {
        LpConstraint row;
        row.a.assign(ki, gj);
        row.kind = LpConstraint::greater_equal;
        row.rhs = s.energy_floor_w;
        plp.lp.constraints.push_back(std::move(row));
    }
    {
        LpConstraint row;
        row.a.assign(ki, static_cast<double>(s.num_antennas));
        row.kind = LpConstraint::less_equal;
        row.rhs = s.power_budget_w;
        plp.lp.constraints.push_back(std::move(row));
    }
    const double gain_total = std::accumulate(plp.er_gain.begin(), plp.er_gain.end(), 0.0);
    plp.lp.objective.assign(ki, gain_total);
    return plp;
}

AllocResult solve_power_lp(const PowerLp& plp) {
    const LpResult lr = lp_solve(plp.lp);
    AllocResult res;
    switch (lr.status) {
        case LpStatus::optimal:
            res.status = AllocStatus::optimal;
            res.allocation = lr.x;
            res.objective_w = lr.objective;
            res.binding = lr.binding;
            break;
        case LpStatus::infeasible:
            res.status = AllocStatus::infeasible;
            break;
        default:
            // The budget row bounds every variable, so `unbounded` can only
            // arise from numerical trouble.
            res.status = AllocStatus::numerical_failure;
            break;
    }
    return res;
}

AllocResult optimize_powers(const Scenario& s, const PaLayout& layout) {
    return solve_power_lp(build_power_lp(s, layout));
}

}  // namespace paswipt
