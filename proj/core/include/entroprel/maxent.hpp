// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "entroprel/scenario.hpp"

#include <vector>

namespace entroprel {

/// Outcome of the multiplier-validity analysis. A multiplier pair is usable
/// only when all four conditions hold:
///   - case2: lambda1 + lambda2*UL_i < 0 for every component, the regime in
///     which failure probability rises with stress probability,
///   - exponent bound: p_ij*(lambda1 + lambda2*UL_i) > -1 for every cell, so
///     the closed form stays below 1,
///   - sign regime: lambda2 > 0 and lambda1 < 0.
struct ValidityReport {
    std::vector<bool> case2_holds_per_component;
    bool exponent_bound_holds = false;
    bool lambda2_positive = false;
    bool lambda1_negative = false;
    bool overall_valid = false;

    /// lambda1 < -lambda2 * max(UL_i); equivalent to all of case2.
    bool case2_all() const;
};

/// Closed-form maximum-entropy failure probability
/// exp(-1 - p * (lambda1 + lambda2 * UL)).
///
/// Never clamps: a result touching or exceeding 1 signals an exponent-bound
/// violation, which check_validity reports and the optimizer penalizes.
double failure_probability(double p, const MultiplierPair& multipliers, double unit_loss);

/// Applies the closed form cell-by-cell and records the generating
/// multipliers as provenance.
FailureMatrix failure_matrix(const Scenario& scenario, const MultiplierPair& multipliers);

/// Shannon entropy -sum p*ln(p) over all matrix entries, in nats.
/// Entries equal to 1 contribute zero. Throws DomainError on entries <= 0.
double shannon_entropy(const FailureMatrix& matrix);

/// First constraint functional F1 = sum_ij p_ij * pF_ij (the linearized
/// network failure probability). Throws ShapeError on dimension mismatch.
double constraint_f1(const Scenario& scenario, const FailureMatrix& matrix);

/// Second constraint functional F2 = sum_ij UL_i * p_ij * pF_ij (the
/// expected total loss). Throws ShapeError on dimension mismatch.
double constraint_f2(const Scenario& scenario, const FailureMatrix& matrix);

/// Evaluates all four validity conditions for the given multipliers.
ValidityReport check_validity(const Scenario& scenario, const MultiplierPair& multipliers);

} // namespace entroprel
