// SPDX-License-Identifier: Apache-2.0
#include "paswipt/position_opt.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "paswipt/channel.hpp"
#include "paswipt/rng.hpp"

namespace paswipt {

namespace {

// Everything about the fitness that does not depend on the layout, folded out
// of the per-candidate loop: the allocation, the frozen order, and for each
// info receiver the total power of users decoded after it.
struct FitnessContext {
    const Scenario* s = nullptr;
    const PowerAllocation* alloc = nullptr;
    const DecodingOrder* order = nullptr;
    std::vector<double> undecoded_after;  // by original info-receiver index
    double total_power = 0.0;

    static FitnessContext make(const Scenario& s, const PowerAllocation& alloc,
                               const DecodingOrder& order) {
        const std::size_t ki = s.num_info();
        if (alloc.size() != ki || order.size() != ki) {
            throw std::invalid_argument("position fitness: allocation/order size mismatch");
        }
        FitnessContext ctx;
        ctx.s = &s;
        ctx.alloc = &alloc;
        ctx.order = &order;
        ctx.undecoded_after.assign(ki, 0.0);
        double tail = 0.0;
        for (std::size_t pos = ki; pos-- > 0;) {
            ctx.undecoded_after[order[pos]] = tail;
            tail += alloc[order[pos]];
        }
        ctx.total_power = tail;
        return ctx;
    }

    // Fitness from precomputed aggregate gains; the geometric constraints are
    // assumed satisfied (the optimizers maintain them by construction).
    FitnessValue from_gains(const double* ir_gain, const double* er_gain) const {
        const Scenario& sc = *s;
        const std::size_t ki = sc.num_info();
        const std::size_t ke = sc.num_energy();
        FitnessValue f;
        f.feasible = true;
        for (std::size_t i = 0; i < ki; ++i) {
            const double sinr = (*alloc)[i] * ir_gain[i] /
                                (ir_gain[i] * undecoded_after[i] + sc.noise_power_w[i]);
            if (sinr < sc.sinr_floor * (1.0 - k_rel_slack)) f.feasible = false;
            f.violation += std::max(0.0, (sc.sinr_floor - sinr) / sc.sinr_floor);
        }
        double gain_total = 0.0;
        for (std::size_t j = 0; j < ke; ++j) {
            gain_total += er_gain[j];
            const double harvested = total_power * er_gain[j];
            if (harvested < sc.energy_floor_w * (1.0 - k_rel_slack)) f.feasible = false;
            if (sc.energy_floor_w > 0.0) {
                f.violation +=
                    std::max(0.0, (sc.energy_floor_w - harvested) / sc.energy_floor_w);
            }
        }
        for (std::size_t pos = 0; pos + 1 < ki; ++pos) {
            const double ga = ir_gain[(*order)[pos]];
            const double gb = ir_gain[(*order)[pos + 1]];
            if (ga > gb * (1.0 + k_rel_slack)) f.feasible = false;
            if (ga > gb && ga + gb > 0.0) f.violation += (ga - gb) / (ga + gb);
        }
        f.objective_w = total_power * gain_total;
        return f;
    }
};

void gains_at(const Scenario& s, const PaLayout& layout, std::vector<double>& ir_gain,
              std::vector<double>& er_gain) {
    ir_gain.resize(s.num_info());
    er_gain.resize(s.num_energy());
    for (std::size_t i = 0; i < s.num_info(); ++i) {
        ir_gain[i] = std::norm(aggregate_channel(s, layout, s.info_receivers[i]));
    }
    for (std::size_t j = 0; j < s.num_energy(); ++j) {
        er_gain[j] = std::norm(aggregate_channel(s, layout, s.energy_receivers[j]));
    }
}

}  // namespace

FitnessValue position_fitness(const Scenario& s, const PowerAllocation& alloc,
                              const DecodingOrder& order, const PaLayout& layout) {
    const FitnessContext ctx = FitnessContext::make(s, alloc, order);
    std::vector<double> ir_gain;
    std::vector<double> er_gain;
    gains_at(s, layout, ir_gain, er_gain);
    FitnessValue f = ctx.from_gains(ir_gain.data(), er_gain.data());

    const double delta = s.spacing_m();
    const double len = s.waveguide_length_m;
    for (std::size_t a = 0; a < layout.size(); ++a) {
        for (std::size_t b = a + 1; b < layout.size(); ++b) {
            const double d = std::fabs(layout[a] - layout[b]);
            if (d < delta) f.violation += (delta - d) / delta;
        }
        f.violation += std::max(0.0, -layout[a]) / len;
        f.violation += std::max(0.0, layout[a] - len) / len;
    }
    if (!layout_spacing_ok(s, layout) || !layout_within_bounds(s, layout)) f.feasible = false;
    return f;
}

// ---- element-wise exhaustive search ----------------------------------------

PositionResult elementwise_optimize(const Scenario& s, const PowerAllocation& alloc,
                                    const PaLayout& init, const ElementWiseConfig& cfg) {
    if (init.size() != s.num_antennas) {
        throw std::invalid_argument("elementwise_optimize: init size != num_antennas");
    }
    if (cfg.grid_points < 2) {
        throw std::invalid_argument("elementwise_optimize: grid_points must be >= 2");
    }
    if (!layout_within_bounds(s, init) || !layout_spacing_ok(s, init)) {
        throw std::invalid_argument("elementwise_optimize: init layout violates geometry");
    }

    const std::size_t npts = cfg.grid_points;
    const std::size_t m_ant = s.num_antennas;
    const double len = s.waveguide_length_m;
    const double delta = s.spacing_m();
    const double step = len / static_cast<double>(npts - 1);

    std::vector<double> grid(npts);
    for (std::size_t k = 0; k < npts; ++k) grid[k] = static_cast<double>(k) * step;

    std::vector<Point3> rxs = s.info_receivers;
    rxs.insert(rxs.end(), s.energy_receivers.begin(), s.energy_receivers.end());
    const std::size_t ki = s.num_info();
    const std::size_t nrx = rxs.size();

    PaLayout layout = init;
    const DecodingOrder order = decoding_order(aggregate_gains(s, layout, s.info_receivers));
    const FitnessContext ctx = FitnessContext::make(s, alloc, order);

    // The candidate channel term depends only on (grid point, receiver), so
    // the whole table is computed once; candidate evaluation then costs one
    // complex add per receiver.  Stored receiver-major per grid point.
    std::vector<std::complex<double>> term(npts * nrx);
    for (std::size_t k = 0; k < npts; ++k) {
        for (std::size_t r = 0; r < nrx; ++r) {
            term[k * nrx + r] = channel_gain(s, grid[k], rxs[r]);
        }
    }

    std::vector<double> ir_gain;
    std::vector<double> er_gain;
    gains_at(s, layout, ir_gain, er_gain);
    FitnessValue cur = ctx.from_gains(ir_gain.data(), er_gain.data());

    PositionResult res;
    std::vector<std::complex<double>> partial(nrx);
    std::vector<double> cand_gain(nrx);

    for (std::size_t sweep = 0; sweep < cfg.max_sweeps; ++sweep) {
        bool moved = false;
        for (std::size_t m = 0; m < m_ant; ++m) {
            std::fill(partial.begin(), partial.end(), std::complex<double>{0.0, 0.0});
            for (std::size_t other = 0; other < m_ant; ++other) {
                if (other == m) continue;
                for (std::size_t r = 0; r < nrx; ++r) {
                    partial[r] += channel_gain(s, layout[other], rxs[r]);
                }
            }
            FitnessValue best = cur;
            std::size_t best_k = npts;
            for (std::size_t k = 0; k < npts; ++k) {
                const double x = grid[k];
                bool spaced = true;
                for (std::size_t other = 0; other < m_ant; ++other) {
                    if (other != m && std::fabs(x - layout[other]) < delta - k_abs_slack_m) {
                        spaced = false;
                        break;
                    }
                }
                if (!spaced) continue;
                const std::complex<double>* tk = &term[k * nrx];
                for (std::size_t r = 0; r < nrx; ++r) {
                    cand_gain[r] = std::norm(partial[r] + tk[r]);
                }
                const FitnessValue fit = ctx.from_gains(cand_gain.data(), cand_gain.data() + ki);
                if (fit.better_than(best)) {
                    best = fit;
                    best_k = k;
                }
            }
            if (best_k < npts) {
                layout[m] = grid[best_k];
                cur = best;
                moved = true;
            }
        }
        res.trajectory_w.push_back(cur.objective_w);
        ++res.iterations;
        if (!moved) break;
        const std::size_t n = res.trajectory_w.size();
        if (n >= 2 && cur.feasible) {
            const double prev = res.trajectory_w[n - 2];
            if (prev > 0.0 && res.trajectory_w[n - 1] - prev <= cfg.convergence_tol * prev) break;
        }
    }
    res.layout = layout;
    res.fitness = cur;
    return res;
}

// ---- linearly-decreasing-weight PSO -----------------------------------------

double inertia_schedule(std::size_t t, std::size_t t_max, double w_max, double w_min) {
    if (t_max == 0) return w_max;
    return w_max - (w_max - w_min) * static_cast<double>(t) / static_cast<double>(t_max);
}

PaLayout repair_spacing(const PaLayout& layout, double spacing, double length) {
    const std::size_t m = layout.size();
    if (m == 0) return {};
    if (spacing < 0.0 || length <= 0.0 ||
        static_cast<double>(m - 1) * spacing > length) {
        throw std::invalid_argument("repair_spacing: spacing does not fit the waveguide");
    }

    std::vector<std::size_t> idx(m);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return layout[a] < layout[b]; });

    // Valid input comes back bit-identical (the ramp round-trip below could
    // otherwise shift entries by an ulp).
    bool valid = true;
    for (std::size_t k = 0; k < m && valid; ++k) {
        const double x = layout[idx[k]];
        valid = x >= 0.0 && x <= length &&
                (k == 0 || x - layout[idx[k - 1]] >= spacing);
    }
    if (valid) return layout;

    // Remove the spacing ramp, project onto non-decreasing sequences
    // (pool-adjacent-violators), and put the ramp back.
    struct Block {
        double sum;
        std::size_t n;
        double mean() const { return sum / static_cast<double>(n); }
    };
    std::vector<Block> stack;
    stack.reserve(m);
    for (std::size_t k = 0; k < m; ++k) {
        Block b{layout[idx[k]] - static_cast<double>(k) * spacing, 1};
        while (!stack.empty() && stack.back().mean() > b.mean()) {
            b.sum += stack.back().sum;
            b.n += stack.back().n;
            stack.pop_back();
        }
        stack.push_back(b);
    }

    PaLayout out(m);
    std::size_t k = 0;
    for (const Block& b : stack) {
        const double z = b.mean();
        for (std::size_t i = 0; i < b.n; ++i, ++k) {
            const double lo = static_cast<double>(k) * spacing;
            const double hi = length - static_cast<double>(m - 1 - k) * spacing;
            out[idx[k]] = std::clamp(z + static_cast<double>(k) * spacing, lo, hi);
        }
    }
    return out;
}

PositionResult pso_optimize(const Scenario& s, const PowerAllocation& alloc,
                            const DecodingOrder& order, const PsoConfig& cfg) {
    if (cfg.swarm_size == 0) {
        throw std::invalid_argument("pso_optimize: swarm_size must be >= 1");
    }
    const FitnessContext ctx = FitnessContext::make(s, alloc, order);
    const std::size_t m_ant = s.num_antennas;
    const double len = s.waveguide_length_m;
    const double delta = s.spacing_m();
    const double v_max = cfg.v_max_m > 0.0 ? cfg.v_max_m : 0.2 * len;

    std::mt19937_64 rng(cfg.seed);
    auto rand01 = [&rng]() { return uniform01(rng); };

    std::vector<double> ir_gain;
    std::vector<double> er_gain;
    auto eval = [&](const PaLayout& x) {
        gains_at(s, x, ir_gain, er_gain);
        return ctx.from_gains(ir_gain.data(), er_gain.data());
    };

    const std::size_t p_cnt = cfg.swarm_size;
    std::vector<PaLayout> pos(p_cnt), vel(p_cnt), best_x(p_cnt);
    std::vector<FitnessValue> best_f(p_cnt);
    for (std::size_t p = 0; p < p_cnt; ++p) {
        PaLayout x(m_ant);
        if (p < cfg.seed_layouts.size()) {
            if (cfg.seed_layouts[p].size() != m_ant) {
                throw std::invalid_argument("pso_optimize: seed layout size != num_antennas");
            }
            x = cfg.seed_layouts[p];
            for (double& xd : x) xd = std::clamp(xd, 0.0, len);
        } else {
            for (std::size_t d = 0; d < m_ant; ++d) x[d] = rand01() * len;
        }
        pos[p] = repair_spacing(x, delta, len);
        vel[p].assign(m_ant, 0.0);
        best_x[p] = pos[p];
        best_f[p] = eval(pos[p]);
    }
    std::size_t g = 0;
    for (std::size_t p = 1; p < p_cnt; ++p) {
        if (best_f[p].better_than(best_f[g])) g = p;
    }
    PaLayout gbest_x = best_x[g];
    FitnessValue gbest_f = best_f[g];

    PositionResult res;
    res.trajectory_w.push_back(gbest_f.objective_w);

    for (std::size_t t = 1; t <= cfg.max_iters; ++t) {
        const double w = inertia_schedule(t, cfg.max_iters, cfg.inertia_max, cfg.inertia_min);
        const double c1 = weight_draw(cfg.cognitive_init, rand01);
        const double c2 = weight_draw(cfg.social_init, rand01);
        for (std::size_t p = 0; p < p_cnt; ++p) {
            pso_velocity_update(vel[p], pos[p], best_x[p], gbest_x, w, c1, c2, v_max, rand01);
            for (std::size_t d = 0; d < m_ant; ++d) {
                pos[p][d] += vel[p][d];
                if (pos[p][d] < 0.0) {
                    pos[p][d] = 0.0;
                    vel[p][d] = 0.0;
                } else if (pos[p][d] > len) {
                    pos[p][d] = len;
                    vel[p][d] = 0.0;
                }
            }
            PaLayout repaired = repair_spacing(pos[p], delta, len);
            for (std::size_t d = 0; d < m_ant; ++d) {
                if (repaired[d] != pos[p][d]) vel[p][d] = 0.0;
            }
            pos[p] = std::move(repaired);
            const FitnessValue f = eval(pos[p]);
            if (f.better_than(best_f[p])) {
                best_f[p] = f;
                best_x[p] = pos[p];
            }
        }
        for (std::size_t p = 0; p < p_cnt; ++p) {
            if (best_f[p].better_than(gbest_f)) {
                gbest_f = best_f[p];
                gbest_x = best_x[p];
            }
        }
        res.trajectory_w.push_back(gbest_f.objective_w);
        ++res.iterations;
    }
    res.layout = gbest_x;
    res.fitness = gbest_f;
    return res;
}

}  // namespace paswipt
