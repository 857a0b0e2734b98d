// SPDX-License-Identifier: Apache-2.0
#include "paswipt/linprog.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace paswipt {

namespace {

constexpr double k_pivot_tol = 1e-11;
constexpr double k_feas_tol = 1e-9;

struct Tableau {
    std::size_t rows = 0;
    std::size_t cols = 0;  // total columns excluding the rhs
    std::vector<double> t;  // rows x (cols + 1), row-major, rhs last
    std::vector<std::size_t> basis;

    double& at(std::size_t r, std::size_t c) { return t[r * (cols + 1) + c]; }
    double at(std::size_t r, std::size_t c) const { return t[r * (cols + 1) + c]; }
    double& rhs(std::size_t r) { return t[r * (cols + 1) + cols]; }
    double rhs(std::size_t r) const { return t[r * (cols + 1) + cols]; }
};

void pivot(Tableau& tb, std::vector<double>& cost, std::size_t pr, std::size_t pc) {
    const double piv = tb.at(pr, pc);
    for (std::size_t c = 0; c <= tb.cols; ++c) {
        tb.at(pr, c) /= piv;
    }
    tb.at(pr, pc) = 1.0;
    for (std::size_t r = 0; r < tb.rows; ++r) {
        if (r == pr) continue;
        const double f = tb.at(r, pc);
        if (f == 0.0) continue;
        for (std::size_t c = 0; c <= tb.cols; ++c) {
            tb.at(r, c) -= f * tb.at(pr, c);
        }
        tb.at(r, pc) = 0.0;
    }
    const double f = cost[pc];
    if (f != 0.0) {
        for (std::size_t c = 0; c <= tb.cols; ++c) {
            cost[c] -= f * tb.t[pr * (tb.cols + 1) + c];
        }
        cost[pc] = 0.0;
    }
    tb.basis[pr] = pc;
}

// Bland's rule: enter the lowest-index improving column, leave by the usual
// ratio test with ties broken toward the lowest basis index.
enum class StepResult { moved, done, unbounded };

StepResult simplex_step(Tableau& tb, std::vector<double>& cost,
                        const std::vector<bool>& allowed) {
    std::size_t pc = tb.cols;
    for (std::size_t c = 0; c < tb.cols; ++c) {
        if (allowed[c] && cost[c] > k_pivot_tol) {
            pc = c;
            break;
        }
    }
    if (pc == tb.cols) return StepResult::done;

    std::size_t pr = tb.rows;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (std::size_t r = 0; r < tb.rows; ++r) {
        const double a = tb.at(r, pc);
        if (a > k_pivot_tol) {
            const double ratio = tb.rhs(r) / a;
            if (pr == tb.rows || ratio < best_ratio ||
                (ratio == best_ratio && tb.basis[r] < tb.basis[pr])) {
                best_ratio = ratio;
                pr = r;
            }
        }
    }
    if (pr == tb.rows) return StepResult::unbounded;
    pivot(tb, cost, pr, pc);
    return StepResult::moved;
}

}  // namespace

LpResult lp_solve(const LinearProgram& lp) {
    const std::size_t n = lp.objective.size();
    const std::size_t m = lp.constraints.size();
    for (const LpConstraint& c : lp.constraints) {
        if (c.a.size() != n) throw std::invalid_argument("lp_solve: constraint width mismatch");
    }

    // Row-scale a working copy so the pivot tolerance is meaningful across
    // the very different magnitudes of the SINR, energy and budget rows.
    std::vector<LpConstraint> cons = lp.constraints;
    for (LpConstraint& c : cons) {
        if (c.rhs < 0.0) {
            for (double& v : c.a) v = -v;
            c.rhs = -c.rhs;
            if (c.kind == LpConstraint::less_equal) c.kind = LpConstraint::greater_equal;
            else if (c.kind == LpConstraint::greater_equal) c.kind = LpConstraint::less_equal;
        }
        double scale = 0.0;
        for (double v : c.a) scale = std::max(scale, std::fabs(v));
        if (scale > 0.0) {
            for (double& v : c.a) v /= scale;
            c.rhs /= scale;
        }
    }

    std::size_t num_slack = 0;
    std::size_t num_art = 0;
    for (const LpConstraint& c : cons) {
        if (c.kind != LpConstraint::equal) ++num_slack;
        if (c.kind != LpConstraint::less_equal) ++num_art;
    }

    Tableau tb;
    tb.rows = m;
    tb.cols = n + num_slack + num_art;
    tb.t.assign(m * (tb.cols + 1), 0.0);
    tb.basis.assign(m, 0);

    std::vector<bool> is_art(tb.cols, false);
    {
        std::size_t slack_col = n;
        std::size_t art_col = n + num_slack;
        for (std::size_t r = 0; r < m; ++r) {
            const LpConstraint& c = cons[r];
            for (std::size_t j = 0; j < n; ++j) tb.at(r, j) = c.a[j];
            tb.rhs(r) = c.rhs;
            if (c.kind == LpConstraint::less_equal) {
                tb.at(r, slack_col) = 1.0;
                tb.basis[r] = slack_col++;
            } else if (c.kind == LpConstraint::greater_equal) {
                tb.at(r, slack_col) = -1.0;
                ++slack_col;
                tb.at(r, art_col) = 1.0;
                is_art[art_col] = true;
                tb.basis[r] = art_col++;
            } else {
                tb.at(r, art_col) = 1.0;
                is_art[art_col] = true;
                tb.basis[r] = art_col++;
            }
        }
    }

    const std::size_t max_iters = 200 * (m + n) + 2000;
    std::vector<bool> allow_no_art(tb.cols, true);
    for (std::size_t c = 0; c < tb.cols; ++c) {
        if (is_art[c]) allow_no_art[c] = false;
    }

    // Phase 1: drive the artificial variables to zero.  The cost row holds
    // reduced costs of maximize(-sum of artificials), canonicalized against
    // the starting basis.
    if (num_art > 0) {
        std::vector<double> cost(tb.cols + 1, 0.0);
        for (std::size_t r = 0; r < m; ++r) {
            if (is_art[tb.basis[r]]) {
                for (std::size_t c = 0; c <= tb.cols; ++c) cost[c] += tb.at(r, c);
            }
        }
        for (std::size_t c = 0; c < tb.cols; ++c) {
            if (is_art[c]) cost[c] = 0.0;
        }
        std::size_t iter = 0;
        for (;; ++iter) {
            if (iter > max_iters) return LpResult{LpStatus::numerical_failure, {}, 0.0, {}};
            const StepResult sr = simplex_step(tb, cost, allow_no_art);
            if (sr == StepResult::done) break;
            if (sr == StepResult::unbounded) {
                return LpResult{LpStatus::numerical_failure, {}, 0.0, {}};
            }
        }
        double residual = 0.0;
        for (std::size_t r = 0; r < m; ++r) {
            if (is_art[tb.basis[r]]) residual += tb.rhs(r);
        }
        if (residual > k_feas_tol) {
            return LpResult{LpStatus::infeasible, {}, 0.0, {}};
        }
        // Pivot surviving zero-valued artificials out where possible; rows
        // with no eligible pivot are redundant and keep a degenerate basic
        // artificial, which phase 2 never re-enters.
        for (std::size_t r = 0; r < m; ++r) {
            if (!is_art[tb.basis[r]]) continue;
            for (std::size_t c = 0; c < tb.cols; ++c) {
                if (!is_art[c] && std::fabs(tb.at(r, c)) > k_pivot_tol) {
                    std::vector<double> dummy(tb.cols + 1, 0.0);
                    pivot(tb, dummy, r, c);
                    break;
                }
            }
        }
    }

    // Phase 2: maximize the true objective from the feasible basis.
    {
        double cscale = 0.0;
        for (double v : lp.objective) cscale = std::max(cscale, std::fabs(v));
        if (cscale == 0.0) cscale = 1.0;
        std::vector<double> cost(tb.cols + 1, 0.0);
        for (std::size_t j = 0; j < n; ++j) cost[j] = lp.objective[j] / cscale;
        for (std::size_t r = 0; r < m; ++r) {
            const double f = cost[tb.basis[r]];
            if (f != 0.0) {
                for (std::size_t c = 0; c <= tb.cols; ++c) cost[c] -= f * tb.at(r, c);
            }
        }
        std::size_t iter = 0;
        for (;; ++iter) {
            if (iter > max_iters) return LpResult{LpStatus::numerical_failure, {}, 0.0, {}};
            const StepResult sr = simplex_step(tb, cost, allow_no_art);
            if (sr == StepResult::done) break;
            if (sr == StepResult::unbounded) {
                return LpResult{LpStatus::unbounded, {}, 0.0, {}};
            }
        }
    }

    LpResult res;
    res.status = LpStatus::optimal;
    res.x.assign(n, 0.0);
    for (std::size_t r = 0; r < m; ++r) {
        if (tb.basis[r] < n) res.x[tb.basis[r]] = std::max(0.0, tb.rhs(r));
    }
    res.objective = 0.0;
    for (std::size_t j = 0; j < n; ++j) res.objective += lp.objective[j] * res.x[j];
    for (std::size_t r = 0; r < m; ++r) {
        double lhs = 0.0;
        for (std::size_t j = 0; j < n; ++j) lhs += lp.constraints[r].a[j] * res.x[j];
        const double scale = std::max({1.0, std::fabs(lhs), std::fabs(lp.constraints[r].rhs)});
        if (std::fabs(lhs - lp.constraints[r].rhs) <= k_feas_tol * scale) {
            res.binding.push_back(r);
        }
    }
    return res;
}

}  // namespace paswipt
