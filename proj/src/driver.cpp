// SPDX-License-Identifier: Apache-2.0
#include "paswipt/driver.hpp"

#include <chrono>
#include <cmath>
#include <limits>

#include "paswipt/rng.hpp"

namespace paswipt {

const char* to_string(SolveStatus st) {
    switch (st) {
        case SolveStatus::converged: return "converged";
        case SolveStatus::iteration_capped: return "iteration_capped";
        case SolveStatus::infeasible: return "infeasible";
    }
    return "unknown";
}

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point t0) {
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

PaLayout random_layout(const Scenario& s, std::mt19937_64& rng) {
    PaLayout xs(s.num_antennas);
    for (double& x : xs) x = uniform01(rng) * s.waveguide_length_m;
    return repair_spacing(xs, s.spacing_m(), s.waveguide_length_m);
}

struct OuterStep {
    PositionResult position;
    AllocResult alloc;
};

OuterStep outer_step(const Scenario& s, const AlternationConfig& cfg, const PaLayout& layout,
                     const PowerAllocation& alloc, std::size_t outer_index) {
    OuterStep step;
    if (cfg.algo == PositionAlgo::elementwise) {
        step.position = elementwise_optimize(s, alloc, layout, cfg.elementwise);
    } else {
        PsoConfig pcfg = cfg.pso;
        pcfg.seed = derive_seed(cfg.seed, 0x50, outer_index);
        pcfg.seed_layouts = {layout};
        const DecodingOrder order =
            decoding_order(aggregate_gains(s, layout, s.info_receivers));
        step.position = pso_optimize(s, alloc, order, pcfg);
    }
    step.alloc = optimize_powers(s, step.position.layout);
    return step;
}

SolveReport finalize(const Scenario& s, SolveReport rep, clock_type::time_point t0) {
    const SystemState st = evaluate(s, rep.layout, rep.allocation);
    rep.objective_w = st.objective_w;
    rep.ir_sinr = st.sinr;
    rep.er_harvested_w = st.harvested_w;
    rep.wall_time_s = seconds_since(t0);
    return rep;
}

}  // namespace

SolveReport alternate(const Scenario& s, const AlternationConfig& cfg) {
    validate(s);
    const auto t0 = clock_type::now();

    const PowerAllocation equal_split(
        s.num_info(), s.power_budget_w /
                          (static_cast<double>(s.num_antennas) * static_cast<double>(s.num_info())));

    SolveReport rep;
    std::mt19937_64 restart_rng(derive_seed(cfg.seed, 0x1717));

    PaLayout layout;
    PowerAllocation alloc;
    bool started = false;
    for (std::size_t attempt = 0; attempt <= cfg.restarts; ++attempt) {
        PaLayout init = (attempt == 0 && !cfg.random_init) ? uniform_layout(s)
                                                           : random_layout(s, restart_rng);
        const OuterStep step = outer_step(s, cfg, init, equal_split, 1);
        if (attempt > 0) ++rep.restarts_used;
        if (step.alloc.status == AllocStatus::optimal) {
            layout = step.position.layout;
            alloc = step.alloc.allocation;
            rep.trajectory_w.push_back(step.alloc.objective_w);
            rep.outer_iterations = 1;
            started = true;
            break;
        }
    }
    if (!started) {
        rep.status = SolveStatus::infeasible;
        rep.layout = uniform_layout(s);
        rep.wall_time_s = seconds_since(t0);
        return rep;
    }

    rep.status = SolveStatus::iteration_capped;
    double last_obj = rep.trajectory_w.back();
    if (std::numeric_limits<double>::infinity() <= cfg.rel_tol) {
        rep.status = SolveStatus::converged;  // rel_tol = inf asks for a single iteration
    } else {
        for (std::size_t t = 2; t <= cfg.max_outer_iters; ++t) {
            const OuterStep step = outer_step(s, cfg, layout, alloc, t);
            if (step.alloc.status != AllocStatus::optimal) break;
            if (step.alloc.objective_w < last_obj * (1.0 - 1e-12)) break;
            layout = step.position.layout;
            alloc = step.alloc.allocation;
            rep.trajectory_w.push_back(step.alloc.objective_w);
            rep.outer_iterations = t;
            const double change = std::fabs(step.alloc.objective_w - last_obj) /
                                  std::max(last_obj, std::numeric_limits<double>::min());
            last_obj = step.alloc.objective_w;
            if (change <= cfg.rel_tol) {
                rep.status = SolveStatus::converged;
                break;
            }
        }
    }

    rep.layout = layout;
    rep.allocation = alloc;
    return finalize(s, std::move(rep), t0);
}

namespace {

SolveReport fixed_layout_report(const Scenario& s, PaLayout layout, clock_type::time_point t0) {
    SolveReport rep;
    rep.layout = std::move(layout);
    const AllocResult ar = optimize_powers(s, rep.layout);
    if (ar.status != AllocStatus::optimal) {
        rep.status = SolveStatus::infeasible;
        rep.wall_time_s = seconds_since(t0);
        return rep;
    }
    rep.status = SolveStatus::converged;
    rep.allocation = ar.allocation;
    rep.trajectory_w.push_back(ar.objective_w);
    rep.outer_iterations = 1;
    return finalize(s, std::move(rep), t0);
}

}  // namespace

SolveReport baseline_mimo(const Scenario& s) {
    validate(s);
    const auto t0 = clock_type::now();
    const double delta = s.spacing_m();
    const double span = static_cast<double>(s.num_antennas - 1) * delta;
    const double start = std::clamp(std::min(s.feed_x_m, s.waveguide_length_m - span), 0.0,
                                    s.waveguide_length_m - span);
    PaLayout layout(s.num_antennas);
    for (std::size_t m = 0; m < s.num_antennas; ++m) {
        layout[m] = start + static_cast<double>(m) * delta;
    }
    return fixed_layout_report(s, std::move(layout), t0);
}

SolveReport baseline_fixed(const Scenario& s) {
    validate(s);
    const auto t0 = clock_type::now();
    Scenario single = s;
    single.num_antennas = 1;
    return fixed_layout_report(single, {s.feed_x_m}, t0);
}

}  // namespace paswipt
