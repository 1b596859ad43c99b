// SPDX-License-Identifier: Apache-2.0
#include "entroprel/maxent.hpp"

#include "entroprel/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace entroprel {

namespace {

void require_same_shape(const Scenario& scenario, const FailureMatrix& matrix) {
    if (matrix.component_count() != scenario.component_count() ||
        matrix.level_count() != scenario.level_count()) {
        std::ostringstream msg;
        msg << "failure matrix is " << matrix.component_count() << "x"
            << matrix.level_count() << " but the scenario is "
            << scenario.component_count() << "x" << scenario.level_count();
        throw ShapeError(msg.str());
    }
}

} // namespace

bool ValidityReport::case2_all() const {
    return std::all_of(case2_holds_per_component.begin(),
                       case2_holds_per_component.end(),
                       [](bool b) { return b; });
}

double failure_probability(double p, const MultiplierPair& m, double unit_loss) {
    return std::exp(-1.0 - p * (m.lambda1 + m.lambda2 * unit_loss));
}

FailureMatrix failure_matrix(const Scenario& scenario, const MultiplierPair& m) {
    FailureMatrix out;
    out.provenance = m;
    out.entries.reserve(scenario.component_count());
    for (std::size_t i = 0; i < scenario.component_count(); ++i) {
        const double ul = scenario.components[i].unit_loss;
        const auto& row = scenario.stress.rows[i];
        std::vector<double> entries(row.size());
        for (std::size_t j = 0; j < row.size(); ++j) {
            entries[j] = failure_probability(row[j], m, ul);
        }
        out.entries.push_back(std::move(entries));
    }
    return out;
}

double shannon_entropy(const FailureMatrix& matrix) {
    double h = 0.0;
    for (const auto& row : matrix.entries) {
        for (double p : row) {
            if (!(p > 0.0)) {
                std::ostringstream msg;
                msg << "entropy undefined for entry " << p << " <= 0";
                throw DomainError(msg.str());
            }
            h -= p * std::log(p); // p == 1 contributes exactly 0
        }
    }
    return h;
}

double constraint_f1(const Scenario& scenario, const FailureMatrix& matrix) {
    require_same_shape(scenario, matrix);
    double sum = 0.0;
    for (std::size_t i = 0; i < scenario.component_count(); ++i) {
        for (std::size_t j = 0; j < scenario.level_count(); ++j) {
            sum += scenario.stress.rows[i][j] * matrix.entries[i][j];
        }
    }
    return sum;
}

double constraint_f2(const Scenario& scenario, const FailureMatrix& matrix) {
    require_same_shape(scenario, matrix);
    double sum = 0.0;
    for (std::size_t i = 0; i < scenario.component_count(); ++i) {
        const double ul = scenario.components[i].unit_loss;
        for (std::size_t j = 0; j < scenario.level_count(); ++j) {
            sum += ul * scenario.stress.rows[i][j] * matrix.entries[i][j];
        }
    }
    return sum;
}

ValidityReport check_validity(const Scenario& scenario, const MultiplierPair& m) {
    ValidityReport report;
    report.case2_holds_per_component.reserve(scenario.component_count());
    report.exponent_bound_holds = true;
    for (std::size_t i = 0; i < scenario.component_count(); ++i) {
        const double a = m.lambda1 + m.lambda2 * scenario.components[i].unit_loss;
        report.case2_holds_per_component.push_back(a < 0.0);
        for (double p : scenario.stress.rows[i]) {
            if (!(p * a > -1.0)) {
                report.exponent_bound_holds = false;
            }
        }
    }
    report.lambda2_positive = m.lambda2 > 0.0;
    report.lambda1_negative = m.lambda1 < 0.0;
    report.overall_valid = report.case2_all() && report.exponent_bound_holds &&
                           report.lambda2_positive && report.lambda1_negative;
    return report;
}

} // namespace entroprel
