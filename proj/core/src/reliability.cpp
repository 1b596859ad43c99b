// SPDX-License-Identifier: Apache-2.0
#include "entroprel/reliability.hpp"

#include "entroprel/errors.hpp"
#include "entroprel/maxent.hpp"

#include <cmath>
#include <sstream>

namespace entroprel {

namespace {

constexpr double kOverflowSlack = 1e-9;

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

double component_failure_probability(const Scenario& scenario,
                                     const FailureMatrix& matrix,
                                     std::size_t i) {
    require_same_shape(scenario, matrix);
    if (i >= scenario.component_count()) {
        std::ostringstream msg;
        msg << "component index " << i << " out of range (n = "
            << scenario.component_count() << ")";
        throw ShapeError(msg.str());
    }
    double sum = 0.0;
    for (std::size_t j = 0; j < scenario.level_count(); ++j) {
        sum += scenario.stress.rows[i][j] * matrix.entries[i][j];
    }
    if (sum > 1.0 + kOverflowSlack) {
        std::ostringstream msg;
        msg << "component '" << scenario.components[i].name
            << "' failure probability " << sum << " exceeds 1";
        throw ProbabilityOverflowError(msg.str());
    }
    return sum;
}

double network_failure_exact(const Scenario& scenario, const FailureMatrix& matrix) {
    double survival = 1.0;
    for (std::size_t i = 0; i < scenario.component_count(); ++i) {
        survival *= 1.0 - component_failure_probability(scenario, matrix, i);
    }
    return 1.0 - survival;
}

double network_failure_linear(const Scenario& scenario, const FailureMatrix& matrix) {
    return constraint_f1(scenario, matrix);
}

std::vector<double> reliability_per_stress_level(const FailureMatrix& matrix) {
    std::vector<double> r(matrix.level_count(), 1.0);
    for (std::size_t j = 0; j < matrix.level_count(); ++j) {
        for (std::size_t i = 0; i < matrix.component_count(); ++i) {
            r[j] *= 1.0 - matrix.entries[i][j];
        }
    }
    return r;
}

std::vector<double> reliability_per_stress_level_weighted(const Scenario& scenario,
                                                          const FailureMatrix& matrix) {
    require_same_shape(scenario, matrix);
    std::vector<double> r(matrix.level_count(), 1.0);
    for (std::size_t j = 0; j < matrix.level_count(); ++j) {
        for (std::size_t i = 0; i < matrix.component_count(); ++i) {
            r[j] *= 1.0 - scenario.stress.rows[i][j] * matrix.entries[i][j];
        }
    }
    return r;
}

WeakestComponentReport identify_weakest_component(const Scenario& scenario,
                                                  const FailureMatrix& matrix) {
    require_same_shape(scenario, matrix);
    WeakestComponentReport report;
    const std::size_t n = matrix.component_count();
    const std::size_t last = matrix.level_count() - 1;
    report.sum_failure_probability.resize(n, 0.0);
    report.exceeds_one.resize(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        double s = 0.0;
        for (double v : matrix.entries[i]) {
            s += v;
        }
        report.sum_failure_probability[i] = s;
        report.exceeds_one[i] = s > 1.0;
    }
    std::size_t best = 0;
    for (std::size_t i = 1; i < n; ++i) {
        const double a = matrix.entries[i][last];
        const double b = matrix.entries[best][last];
        if (a > b || (a == b && report.sum_failure_probability[i] >
                                    report.sum_failure_probability[best])) {
            best = i;
        }
    }
    report.index = best;
    return report;
}

std::vector<EntropyReliabilityPoint>
entropy_reliability_report(const Scenario& scenario,
                           const std::vector<FailureMatrix>& matrices) {
    if (matrices.empty()) {
        throw RangeError("entropy_reliability_report needs at least one matrix");
    }
    std::vector<EntropyReliabilityPoint> out;
    out.reserve(matrices.size());
    for (const auto& matrix : matrices) {
        require_same_shape(scenario, matrix);
        EntropyReliabilityPoint point;
        point.entropy_nats = shannon_entropy(matrix);
        point.reliability_curve = reliability_per_stress_level(matrix);
        point.network_failure_exact = network_failure_exact(scenario, matrix);
        out.push_back(std::move(point));
    }
    return out;
}

ReliabilityCurve build_reliability_curve(const Scenario& scenario,
                                         const FailureMatrix& matrix) {
    require_same_shape(scenario, matrix);
    ReliabilityCurve curve;
    curve.per_level = reliability_per_stress_level(matrix);
    curve.per_component_failure.reserve(scenario.component_count());
    for (std::size_t i = 0; i < scenario.component_count(); ++i) {
        curve.per_component_failure.push_back(
            component_failure_probability(scenario, matrix, i));
    }
    curve.weakest_component = identify_weakest_component(scenario, matrix).index;
    curve.network_failure_exact = network_failure_exact(scenario, matrix);
    curve.network_failure_linear = network_failure_linear(scenario, matrix);
    curve.entropy_nats = shannon_entropy(matrix);
    return curve;
}

} // namespace entroprel
