// SPDX-License-Identifier: Apache-2.0
// Pinching-antenna SWIPT toolkit: small dense linear-program solver.
#pragma once

#include <cstddef>
#include <vector>

namespace paswipt {

enum class LpStatus { optimal, infeasible, unbounded, numerical_failure };

struct LpConstraint {
    enum Kind { less_equal, greater_equal, equal };
    std::vector<double> a;
    Kind kind = less_equal;
    double rhs = 0.0;
};

// maximize objective . x   subject to the constraints and x >= 0.
struct LinearProgram {
    std::vector<double> objective;
    std::vector<LpConstraint> constraints;
};

struct LpResult {
    LpStatus status = LpStatus::numerical_failure;
    std::vector<double> x;
    double objective = 0.0;
    std::vector<std::size_t> binding;  // constraints tight at the optimum
};

// Two-phase tableau simplex with Bland's rule, suitable for the few-variable
// programs produced by the power-allocation step.  `infeasible` is reported
// only when phase 1 terminates cleanly with residual infeasibility; running
// into the iteration cap yields `numerical_failure` instead.
LpResult lp_solve(const LinearProgram& lp);

}  // namespace paswipt
