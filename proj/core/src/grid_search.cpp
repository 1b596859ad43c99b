// SPDX-License-Identifier: Apache-2.0
#include "entroprel/grid_search.hpp"

#include "entroprel/errors.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace entroprel {

namespace {

void validate_grid(const GridSpec& grid, const OptimizerOptions& opt) {
    if (grid.steps_per_axis < 2) {
        std::ostringstream msg;
        msg << "grid needs at least 2 steps per axis, got " << grid.steps_per_axis;
        throw RangeError(msg.str());
    }
    if (grid.lambda1_range.lo > grid.lambda1_range.hi ||
        grid.lambda2_range.lo > grid.lambda2_range.hi) {
        throw RangeError("grid range is empty");
    }
    if (!opt.lambda1_bounds.contains(grid.lambda1_range.lo) ||
        !opt.lambda1_bounds.contains(grid.lambda1_range.hi) ||
        !opt.lambda2_bounds.contains(grid.lambda2_range.lo) ||
        !opt.lambda2_bounds.contains(grid.lambda2_range.hi)) {
        throw RangeError("grid range extends outside the optimizer bounds");
    }
}

} // namespace

GridSpec default_grid(const Scenario& scenario, const OptimizerOptions& opt,
                      int steps_per_axis) {
    GridSpec grid;
    grid.steps_per_axis = steps_per_axis;
    grid.lambda2_range.lo = std::max(0.1, opt.lambda2_bounds.lo);
    grid.lambda2_range.hi = std::min(5.0, opt.lambda2_bounds.hi);
    const double reach = -3.0 * scenario.max_unit_loss() * grid.lambda2_range.hi;
    grid.lambda1_range.lo = std::max(reach, opt.lambda1_bounds.lo);
    grid.lambda1_range.hi = std::min(-0.5, opt.lambda1_bounds.hi);
    return grid;
}

GridSpec make_refined_grid(const MultiplierPair& around, double radius1, double radius2,
                           int steps_per_axis, const OptimizerOptions& opt) {
    if (!(radius1 > 0.0) || !(radius2 > 0.0)) {
        throw RangeError("refinement radius must be > 0");
    }
    GridSpec grid;
    grid.steps_per_axis = steps_per_axis;
    grid.lambda1_range.lo = std::max(around.lambda1 - radius1, opt.lambda1_bounds.lo);
    grid.lambda1_range.hi = std::min(around.lambda1 + radius1, opt.lambda1_bounds.hi);
    grid.lambda2_range.lo = std::max(around.lambda2 - radius2, opt.lambda2_bounds.lo);
    grid.lambda2_range.hi = std::min(around.lambda2 + radius2, opt.lambda2_bounds.hi);
    return grid;
}

GridResult grid_search(const Scenario& scenario, const OptimizerOptions& opt,
                       const GridSpec& grid) {
    validate_grid(grid, opt);
    const int n = grid.steps_per_axis;
    const double span1 = grid.lambda1_range.hi - grid.lambda1_range.lo;
    const double span2 = grid.lambda2_range.hi - grid.lambda2_range.lo;

    GridResult best;
    best.objective = std::numeric_limits<double>::infinity();
    for (int a = 0; a < n; ++a) {
        const double l1 = grid.lambda1_range.lo + span1 * a / (n - 1);
        for (int b = 0; b < n; ++b) {
            const double l2 = grid.lambda2_range.lo + span2 * b / (n - 1);
            const MultiplierPair m{l1, l2};
            const double v = objective(m, scenario, opt);
            if (v < best.objective) {
                best.objective = v;
                best.best = m;
            }
        }
    }
    return best;
}

GridResult refine_search(const Scenario& scenario, const OptimizerOptions& opt,
                         const MultiplierPair& around, double radius1, double radius2,
                         int steps_per_axis) {
    return grid_search(scenario, opt,
                       make_refined_grid(around, radius1, radius2, steps_per_axis, opt));
}

} // namespace entroprel
