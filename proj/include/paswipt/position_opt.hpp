// SPDX-License-Identifier: Apache-2.0
// Pinching-antenna SWIPT toolkit: antenna-position optimizers at fixed powers.
#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "paswipt/scenario.hpp"
#include "paswipt/system_model.hpp"

namespace paswipt {

// Lexicographic ranking used by both optimizers: any feasible layout beats
// any infeasible one; feasible layouts compare by objective, infeasible ones
// by total relative constraint violation (smaller is better).
struct FitnessValue {
    bool feasible = false;
    double objective_w = 0.0;
    double violation = 0.0;

    bool better_than(const FitnessValue& o) const {
        if (feasible != o.feasible) return feasible;
        return feasible ? objective_w > o.objective_w : violation < o.violation;
    }
};

// Fitness of a layout at fixed allocation under a frozen decoding order.
// Covers the SINR floors, harvest floors and order validity plus the
// geometric spacing/bound deficits; the power budget depends only on the
// allocation and is the caller's invariant.
FitnessValue position_fitness(const Scenario& s, const PowerAllocation& alloc,
                              const DecodingOrder& order, const PaLayout& layout);

struct PositionResult {
    PaLayout layout;
    FitnessValue fitness;
    std::vector<double> trajectory_w;  // objective after each sweep / iteration
    std::size_t iterations = 0;
};

// ---- element-wise exhaustive search --------------------------------------

struct ElementWiseConfig {
    std::size_t grid_points = 4096;  // uniform grid over [0, waveguide_length]
    std::size_t max_sweeps = 32;
    double convergence_tol = 1e-9;   // relative objective change between sweeps
};

// Coordinate-descent over antennas: each antenna in turn is moved to the best
// grid point while the other antennas stay fixed; candidates breaking the
// minimum spacing are skipped, and a move is taken only when strictly better
// under the fitness above.  The decoding order is frozen from `init`.
PositionResult elementwise_optimize(const Scenario& s, const PowerAllocation& alloc,
                                    const PaLayout& init, const ElementWiseConfig& cfg);

// ---- linearly-decreasing-weight PSO ---------------------------------------

struct PsoConfig {
    std::size_t swarm_size = 10;
    std::size_t max_iters = 300;
    double inertia_max = 0.9;
    double inertia_min = 0.4;
    double cognitive_init = 2.0;     // c1 amplitude, drawn fresh each iteration
    double social_init = 2.0;        // c2 amplitude
    double v_max_m = 0.0;            // <= 0 picks 0.2 * waveguide_length
    std::uint64_t seed = 1;
    std::vector<PaLayout> seed_layouts;  // optional warm starts, particle 0 up
};

// Inertia at iteration t of t_max: w_max - (w_max - w_min) * t / t_max.
double inertia_schedule(std::size_t t, std::size_t t_max, double w_max, double w_min);

// Acceleration coefficient redrawn each iteration: c0 * U[0,1).
template <class Rand>
double weight_draw(double c0, Rand&& rand01) {
    return c0 * rand01();
}

// One particle's velocity update with per-dimension random factors r1, r2
// (drawn in dimension order, r1 before r2) and symmetric clamping to v_max.
template <class Rand>
void pso_velocity_update(std::vector<double>& v, const std::vector<double>& x,
                         const std::vector<double>& pbest, const std::vector<double>& gbest,
                         double w, double c1, double c2, double v_max, Rand&& rand01) {
    for (std::size_t d = 0; d < v.size(); ++d) {
        const double r1 = rand01();
        const double r2 = rand01();
        const double vel = w * v[d] + c1 * r1 * (pbest[d] - x[d]) + c2 * r2 * (gbest[d] - x[d]);
        v[d] = std::clamp(vel, -v_max, v_max);
    }
}

// Minimal-disturbance spacing repair: sort the positions, subtract the ramp
// k * spacing, fit the best non-decreasing sequence (pool-adjacent-violators),
// add the ramp back, clamp each slot to the interval that keeps both spacing
// and the waveguide bounds attainable, and write the values back to their
// original indices rank-preservingly.
PaLayout repair_spacing(const PaLayout& layout, double spacing, double length);

// Swarm search over full layouts at fixed allocation and frozen decoding
// order.  Any velocity component zeroed by a bound clamp or spacing repair
// restarts from rest.  Global best is updated once per iteration.
PositionResult pso_optimize(const Scenario& s, const PowerAllocation& alloc,
                            const DecodingOrder& order, const PsoConfig& cfg);

}  // namespace paswipt
