// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace entroprel {

/// One network component: a label and its per-failure unit loss UL (>= 1).
/// Higher unit loss marks better-engineered, costlier-to-fail hardware.
struct Component {
    std::string name;
    double unit_loss = 1.0;

    friend bool operator==(const Component&, const Component&) = default;
};

/// Stress-probability grid. rows[i][j] is the probability that component i
/// is responsible for j units of additional charging time; each row sums
/// to 1. Stress levels are indexed 0..m-1: level j means "j units of
/// additional time beyond the first detectable unit".
struct StressMatrix {
    std::vector<std::vector<double>> rows;

    std::size_t component_count() const { return rows.size(); }
    std::size_t level_count() const { return rows.empty() ? 0 : rows.front().size(); }

    friend bool operator==(const StressMatrix&, const StressMatrix&) = default;
};

/// A complete problem instance: the component roster, the stress grid and
/// the two network-wide targets (failure probability PF and expected loss L).
struct Scenario {
    std::vector<Component> components;
    StressMatrix stress;
    double network_failure_probability = 0.0; // PF target, in (0,1)
    double expected_loss = 0.0;               // L target, > 0

    std::size_t component_count() const { return components.size(); }
    std::size_t level_count() const { return stress.level_count(); }
    double max_unit_loss() const;

    friend bool operator==(const Scenario&, const Scenario&) = default;
};

/// The two Lagrange multipliers coupling the entropy maximization to the
/// PF constraint (lambda1) and the loss constraint (lambda2).
struct MultiplierPair {
    double lambda1 = 0.0;
    double lambda2 = 0.0;

    friend bool operator==(const MultiplierPair&, const MultiplierPair&) = default;
};

/// n x m grid of failure probabilities produced by the closed form, plus
/// the multipliers that generated it. Entries are the raw exponential
/// values, never clamped; validity is a separate check.
struct FailureMatrix {
    std::vector<std::vector<double>> entries;
    MultiplierPair provenance;

    std::size_t component_count() const { return entries.size(); }
    std::size_t level_count() const { return entries.empty() ? 0 : entries.front().size(); }
};

/// Validates raw scenario data and returns a normalized copy.
///
/// Stress rows whose sum deviates from 1 by more than 1e-6 are rejected
/// (RowSumError); smaller deviations are renormalized. Rows already within
/// 1e-12 are left untouched, which makes the function idempotent.
///
/// Non-monotone stress rows (p_ij not non-decreasing in j) are legal but
/// reported through `warnings` when a sink is provided.
///
/// Throws ShapeError for dimension mismatches and RangeError for values
/// outside their domain (PF not in (0,1), L <= 0, UL < 1, p outside [0,1],
/// empty or duplicate component names).
Scenario validate_scenario(const Scenario& raw,
                           std::vector<std::string>* warnings = nullptr);

} // namespace entroprel
