// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "entroprel/charging.hpp"
#include "entroprel/maxent.hpp"
#include "entroprel/optimizer.hpp"
#include "entroprel/reliability.hpp"
#include "entroprel/scenario.hpp"

#include <optional>
#include <string>

namespace entroprel {

/// Current scenario-file schema version.
inline constexpr int kSchemaVersion = 1;

/// Everything a scenario file can carry: the validated problem instance
/// plus the optional charging and optimizer blocks.
struct LoadedScenario {
    Scenario scenario;
    std::optional<ChargingSession> charging;
    double granularity_h = kDefaultGranularityHours;
    OptimizerOptions optimizer;
};

/// Parses and validates a scenario JSON document from disk.
/// Throws ParseError for malformed documents (with file/field diagnostics)
/// and passes validate_scenario errors through.
LoadedScenario load_scenario(const std::string& path);

/// Same, from an in-memory JSON text (diagnostics use `name`).
LoadedScenario parse_scenario(const std::string& text,
                              const std::string& name = "<string>");

/// Serializes a scenario back to its JSON document form (full precision;
/// parse_scenario(serialize_scenario(s)).scenario == s for valid s).
std::string serialize_scenario(const Scenario& scenario);

/// Writes serialize_scenario output to `path`.
void save_scenario(const Scenario& scenario, const std::string& path);

/// Failure table as CSV: header `stress_level,<component names...>`, one row
/// per level, cells with 6 decimal places (matching the reference tables).
std::string emit_failure_table_csv(const Scenario& scenario, const FailureMatrix& matrix);

/// Failure table as JSON, full precision, mirroring the grid.
std::string emit_failure_table_json(const Scenario& scenario, const FailureMatrix& matrix);

/// reliability_curve.csv: columns stress_level, R_j.
std::string emit_reliability_csv(const ReliabilityCurve& curve);

/// component_failure.csv: component, failure_probability, sum_pF, is_weakest.
std::string emit_component_failure_csv(const Scenario& scenario,
                                       const ReliabilityCurve& curve,
                                       const WeakestComponentReport& weakest);

/// entropy_reliability.csv: long-format (matrix_index, entropy_nats,
/// network_failure_exact, stress_level, reliability).
std::string emit_entropy_reliability_csv(const std::vector<EntropyReliabilityPoint>& points);

/// multipliers.json for an optimizer run (or a plain evaluation when `run`
/// is null): multipliers, objective, residuals, penalties, convergence and
/// the validity booleans. Fixed key order.
std::string emit_multipliers_json(const MultiplierPair& multipliers,
                                  double objective_value,
                                  const std::array<double, 2>& residuals,
                                  double penalty_total,
                                  const ValidityReport& validity,
                                  const OptimizerRun* run = nullptr);

} // namespace entroprel
