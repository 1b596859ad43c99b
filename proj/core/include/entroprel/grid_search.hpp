// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "entroprel/optimizer.hpp"
#include "entroprel/scenario.hpp"

namespace entroprel {

/// Lattice specification for the brute-force oracle. Both ranges must lie
/// inside the optimizer bounds; steps_per_axis >= 2.
struct GridSpec {
    Interval lambda1_range;
    Interval lambda2_range;
    int steps_per_axis = 2;
};

struct GridResult {
    MultiplierPair best;
    double objective = 0.0;
};

/// Physics-informed default window: lambda1 in
/// [-3 * max(UL) * lambda2_max, -0.5] and lambda2 in [0.1, 5], each
/// intersected with the optimizer bounds.
GridSpec default_grid(const Scenario& scenario, const OptimizerOptions& options,
                      int steps_per_axis = 200);

/// Clips [around +/- radius] to the optimizer bounds; used by refine_search.
GridSpec make_refined_grid(const MultiplierPair& around, double radius1, double radius2,
                           int steps_per_axis, const OptimizerOptions& options);

/// Evaluates the objective on the full steps^2 lattice (inclusive endpoints,
/// row-major with lambda1 outer) and returns the strict minimum; ties keep
/// the first point in scan order. Deterministic and pure.
GridResult grid_search(const Scenario& scenario, const OptimizerOptions& options,
                       const GridSpec& grid);

/// grid_search on the box [around +/- radius] intersected with the bounds.
GridResult refine_search(const Scenario& scenario, const OptimizerOptions& options,
                         const MultiplierPair& around, double radius1, double radius2,
                         int steps_per_axis);

} // namespace entroprel
