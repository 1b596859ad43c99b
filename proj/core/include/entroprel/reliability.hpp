// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "entroprel/scenario.hpp"

#include <cstddef>
#include <vector>

namespace entroprel {

/// Weakest-component analysis. `exceeds_one[i]` records whether the plain
/// (unweighted) sum of failure probabilities over stress levels passes 1,
/// the paper's signature of the component that fails first.
struct WeakestComponentReport {
    std::size_t index = 0;
    std::vector<double> sum_failure_probability; // sum_j pF_ij per component
    std::vector<bool> exceeds_one;
};

/// Per-stress-level system view derived from one failure matrix.
struct ReliabilityCurve {
    std::vector<double> per_level;             // R_j = prod_i (1 - pF_ij)
    std::vector<double> per_component_failure; // F_i = sum_j p_ij * pF_ij
    std::size_t weakest_component = 0;
    double network_failure_exact = 0.0;
    double network_failure_linear = 0.0;
    double entropy_nats = 0.0;
};

/// Failure probability of component i: sum_j p_ij * pF_ij.
/// Throws ProbabilityOverflowError when the sum exceeds 1 (beyond 1e-9
/// slack), which marks the matrix as unusable for survival arithmetic.
double component_failure_probability(const Scenario& scenario,
                                     const FailureMatrix& matrix,
                                     std::size_t i);

/// Exact series-system failure probability 1 - prod_i (1 - F_i).
double network_failure_exact(const Scenario& scenario, const FailureMatrix& matrix);

/// First-order (union bound) approximation sum_i F_i. Not clipped: values
/// above 1 are meaningful as an upper bound, not as a probability.
double network_failure_linear(const Scenario& scenario, const FailureMatrix& matrix);

/// System reliability at each stress level: R_j = prod_i (1 - pF_ij).
std::vector<double> reliability_per_stress_level(const FailureMatrix& matrix);

/// Diagnostic variant weighting each survival term by the stress
/// probability: prod_i (1 - p_ij * pF_ij).
std::vector<double> reliability_per_stress_level_weighted(const Scenario& scenario,
                                                          const FailureMatrix& matrix);

/// Picks the component with the largest failure probability at the maximum
/// stress level; ties break on larger sum_j pF_ij, then lower index.
WeakestComponentReport identify_weakest_component(const Scenario& scenario,
                                                  const FailureMatrix& matrix);

/// Entropy/reliability pairing for one matrix, for downstream plotting.
struct EntropyReliabilityPoint {
    double entropy_nats = 0.0;
    std::vector<double> reliability_curve;
    double network_failure_exact = 0.0;
};

/// Emits one (H, R-curve, exact PF) triple per matrix. Throws RangeError on
/// an empty list.
std::vector<EntropyReliabilityPoint>
entropy_reliability_report(const Scenario& scenario,
                           const std::vector<FailureMatrix>& matrices);

/// Bundles all of the above for one matrix.
ReliabilityCurve build_reliability_curve(const Scenario& scenario,
                                         const FailureMatrix& matrix);

} // namespace entroprel
