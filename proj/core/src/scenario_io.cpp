// SPDX-License-Identifier: Apache-2.0
#include "entroprel/scenario_io.hpp"

#include "entroprel/errors.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace entroprel {

namespace {

using json = nlohmann::ordered_json;

std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') {
            quoted += '"';
        }
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

[[noreturn]] void fail(const std::string& name, const std::string& what) {
    throw ParseError(name + ": " + what);
}

double require_number(const json& obj, const std::string& field, const std::string& name) {
    if (!obj.contains(field)) {
        fail(name, "missing field '" + field + "'");
    }
    if (!obj[field].is_number()) {
        fail(name, "field '" + field + "' must be a number");
    }
    return obj[field].get<double>();
}

double optional_number(const json& obj, const std::string& field, double fallback,
                       const std::string& name) {
    if (!obj.contains(field)) {
        return fallback;
    }
    if (!obj[field].is_number()) {
        fail(name, "field '" + field + "' must be a number");
    }
    return obj[field].get<double>();
}

ChargingSession parse_charging(const json& block, const std::string& name) {
    ChargingSession s;
    s.battery_capacity_kwh = require_number(block, "battery_capacity_kwh", name);
    s.initial_soc_pct = require_number(block, "initial_soc_pct", name);
    s.desired_soc_pct = require_number(block, "desired_soc_pct", name);
    s.charging_power_kw = require_number(block, "charging_power_kw", name);
    s.charging_efficiency =
        optional_number(block, "charging_efficiency", kDefaultChargingEfficiency, name);
    s.actual_duration_h = require_number(block, "actual_duration_h", name);
    validate_session(s);
    return s;
}

OptimizerOptions parse_optimizer(const json& block, const std::string& name) {
    OptimizerOptions opt;
    opt.lambda1_bounds.lo =
        optional_number(block, "lambda1_min", opt.lambda1_bounds.lo, name);
    opt.lambda1_bounds.hi =
        optional_number(block, "lambda1_max", opt.lambda1_bounds.hi, name);
    opt.lambda2_bounds.lo =
        optional_number(block, "lambda2_min", opt.lambda2_bounds.lo, name);
    opt.lambda2_bounds.hi =
        optional_number(block, "lambda2_max", opt.lambda2_bounds.hi, name);
    opt.constraint_penalty =
        optional_number(block, "constraint_penalty", opt.constraint_penalty, name);
    opt.bound_penalty = optional_number(block, "bound_penalty", opt.bound_penalty, name);
    opt.pf_floor = optional_number(block, "pf_floor", opt.pf_floor, name);
    opt.pf_ceiling = optional_number(block, "pf_ceiling", opt.pf_ceiling, name);
    opt.fd_epsilon = optional_number(block, "fd_epsilon", opt.fd_epsilon, name);
    opt.function_tolerance =
        optional_number(block, "function_tolerance", opt.function_tolerance, name);
    opt.max_iterations = static_cast<int>(optional_number(
        block, "max_iterations", static_cast<double>(opt.max_iterations), name));
    if (block.contains("feasibility_polish")) {
        if (!block["feasibility_polish"].is_boolean()) {
            fail(name, "field 'feasibility_polish' must be a boolean");
        }
        opt.feasibility_polish = block["feasibility_polish"].get<bool>();
    }
    const bool has_l1 = block.contains("initial_lambda1");
    const bool has_l2 = block.contains("initial_lambda2");
    if (has_l1 != has_l2) {
        fail(name, "initial_lambda1 and initial_lambda2 must be given together");
    }
    if (has_l1) {
        opt.initial_guess = MultiplierPair{require_number(block, "initial_lambda1", name),
                                           require_number(block, "initial_lambda2", name)};
    }
    if (!(opt.constraint_penalty > 0.0) || !(opt.bound_penalty > 0.0)) {
        fail(name, "penalty weights must be > 0");
    }
    if (!(opt.pf_floor < opt.pf_ceiling)) {
        fail(name, "pf_floor must be below pf_ceiling");
    }
    if (opt.lambda1_bounds.lo > opt.lambda1_bounds.hi ||
        opt.lambda2_bounds.lo > opt.lambda2_bounds.hi) {
        fail(name, "multiplier bounds interval is empty");
    }
    return opt;
}

} // namespace

LoadedScenario parse_scenario(const std::string& text, const std::string& name) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        fail(name, e.what());
    }
    if (!doc.is_object()) {
        fail(name, "top-level document must be an object");
    }
    if (doc.contains("schema_version") &&
        (!doc["schema_version"].is_number_integer() ||
         doc["schema_version"].get<int>() != kSchemaVersion)) {
        fail(name, "unsupported schema_version (expected " +
                       std::to_string(kSchemaVersion) + ")");
    }
    if (!doc.contains("components") || !doc["components"].is_array()) {
        fail(name, "missing 'components' array");
    }
    if (!doc.contains("stress_matrix") || !doc["stress_matrix"].is_array()) {
        fail(name, "missing 'stress_matrix' array");
    }

    LoadedScenario out;
    Scenario raw;
    std::size_t index = 0;
    for (const auto& entry : doc["components"]) {
        const std::string where = name + ": components[" + std::to_string(index) + "]";
        if (!entry.is_object() || !entry.contains("name") || !entry["name"].is_string()) {
            throw ParseError(where + " must be an object with a string 'name'");
        }
        Component c;
        c.name = entry["name"].get<std::string>();
        c.unit_loss = require_number(entry, "unit_loss", where);
        raw.components.push_back(std::move(c));
        ++index;
    }
    index = 0;
    for (const auto& row : doc["stress_matrix"]) {
        const std::string where = name + ": stress_matrix[" + std::to_string(index) + "]";
        if (!row.is_array()) {
            throw ParseError(where + " must be an array of probabilities");
        }
        std::vector<double> values;
        for (const auto& cell : row) {
            if (!cell.is_number()) {
                throw ParseError(where + " contains a non-numeric entry");
            }
            values.push_back(cell.get<double>());
        }
        raw.stress.rows.push_back(std::move(values));
        ++index;
    }
    raw.network_failure_probability = require_number(doc, "pf_target", name);
    raw.expected_loss = require_number(doc, "loss_target", name);
    out.scenario = validate_scenario(raw);

    if (doc.contains("charging")) {
        if (!doc["charging"].is_object()) {
            fail(name, "'charging' must be an object");
        }
        out.charging = parse_charging(doc["charging"], name + ": charging");
        out.granularity_h = optional_number(doc["charging"], "granularity_h",
                                            kDefaultGranularityHours, name + ": charging");
        if (!(out.granularity_h > 0.0)) {
            fail(name, "charging.granularity_h must be > 0");
        }
    }
    if (doc.contains("optimizer")) {
        if (!doc["optimizer"].is_object()) {
            fail(name, "'optimizer' must be an object");
        }
        out.optimizer = parse_optimizer(doc["optimizer"], name + ": optimizer");
    }
    return out;
}

LoadedScenario load_scenario(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError(path + ": cannot open file");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_scenario(buffer.str(), path);
}

std::string serialize_scenario(const Scenario& scenario) {
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["components"] = json::array();
    for (const auto& c : scenario.components) {
        doc["components"].push_back(json{{"name", c.name}, {"unit_loss", c.unit_loss}});
    }
    doc["stress_matrix"] = scenario.stress.rows;
    doc["pf_target"] = scenario.network_failure_probability;
    doc["loss_target"] = scenario.expected_loss;
    return doc.dump(2) + "\n";
}

void save_scenario(const Scenario& scenario, const std::string& path) {
    std::ofstream outfile(path, std::ios::binary);
    if (!outfile) {
        throw ParseError(path + ": cannot open file for writing");
    }
    outfile << serialize_scenario(scenario);
}

std::string emit_failure_table_csv(const Scenario& scenario, const FailureMatrix& matrix) {
    std::ostringstream out;
    out << "stress_level";
    for (const auto& c : scenario.components) {
        out << ',' << csv_field(c.name);
    }
    out << '\n';
    for (std::size_t j = 0; j < matrix.level_count(); ++j) {
        out << j;
        for (std::size_t i = 0; i < matrix.component_count(); ++i) {
            out << ',' << fixed6(matrix.entries[i][j]);
        }
        out << '\n';
    }
    return out.str();
}

std::string emit_failure_table_json(const Scenario& scenario, const FailureMatrix& matrix) {
    json doc;
    doc["lambda1"] = matrix.provenance.lambda1;
    doc["lambda2"] = matrix.provenance.lambda2;
    doc["components"] = json::array();
    for (const auto& c : scenario.components) {
        doc["components"].push_back(c.name);
    }
    doc["entries"] = matrix.entries;
    return doc.dump(2) + "\n";
}

std::string emit_reliability_csv(const ReliabilityCurve& curve) {
    std::ostringstream out;
    out << "stress_level,R_j\n";
    for (std::size_t j = 0; j < curve.per_level.size(); ++j) {
        out << j << ',' << fixed6(curve.per_level[j]) << '\n';
    }
    return out.str();
}

std::string emit_component_failure_csv(const Scenario& scenario,
                                       const ReliabilityCurve& curve,
                                       const WeakestComponentReport& weakest) {
    std::ostringstream out;
    out << "component,failure_probability,sum_pF,is_weakest\n";
    for (std::size_t i = 0; i < scenario.component_count(); ++i) {
        out << csv_field(scenario.components[i].name) << ','
            << fixed6(curve.per_component_failure[i]) << ','
            << fixed6(weakest.sum_failure_probability[i]) << ','
            << (i == weakest.index ? "true" : "false") << '\n';
    }
    return out.str();
}

std::string emit_entropy_reliability_csv(const std::vector<EntropyReliabilityPoint>& points) {
    std::ostringstream out;
    out << "matrix_index,entropy_nats,network_failure_exact,stress_level,reliability\n";
    for (std::size_t k = 0; k < points.size(); ++k) {
        const auto& point = points[k];
        for (std::size_t j = 0; j < point.reliability_curve.size(); ++j) {
            out << k << ',' << fixed6(point.entropy_nats) << ','
                << fixed6(point.network_failure_exact) << ',' << j << ','
                << fixed6(point.reliability_curve[j]) << '\n';
        }
    }
    return out.str();
}

std::string emit_multipliers_json(const MultiplierPair& multipliers,
                                  double objective_value,
                                  const std::array<double, 2>& residuals,
                                  double penalty_total,
                                  const ValidityReport& validity,
                                  const OptimizerRun* run) {
    json doc;
    doc["lambda1"] = multipliers.lambda1;
    doc["lambda2"] = multipliers.lambda2;
    doc["objective"] = objective_value;
    doc["residual_pf"] = residuals[0];
    doc["residual_loss"] = residuals[1];
    doc["penalty_total"] = penalty_total;
    if (run) {
        doc["iterations"] = run->iterations;
        doc["convergence_reason"] = to_string(run->convergence_reason);
    }
    json v;
    v["case2_per_component"] = validity.case2_holds_per_component;
    v["exponent_bound"] = validity.exponent_bound_holds;
    v["lambda2_positive"] = validity.lambda2_positive;
    v["lambda1_negative"] = validity.lambda1_negative;
    v["overall_valid"] = validity.overall_valid;
    doc["validity"] = v;
    return doc.dump(2) + "\n";
}

} // namespace entroprel
