// SPDX-License-Identifier: Apache-2.0
#include "entroprel/scenario.hpp"

#include "entroprel/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace entroprel {

namespace {

constexpr double kRowSumReject = 1e-6;  // larger deviations are hard errors
constexpr double kRowSumKeep = 1e-12;   // smaller deviations are left as-is

} // namespace

double Scenario::max_unit_loss() const {
    double m = 0.0;
    for (const auto& c : components) {
        m = std::max(m, c.unit_loss);
    }
    return m;
}

Scenario validate_scenario(const Scenario& raw, std::vector<std::string>* warnings) {
    const std::size_t n = raw.components.size();
    if (n == 0) {
        throw ShapeError("scenario has no components");
    }
    if (raw.stress.rows.size() != n) {
        std::ostringstream msg;
        msg << "stress matrix has " << raw.stress.rows.size()
            << " rows but the scenario lists " << n << " components";
        throw ShapeError(msg.str());
    }

    std::unordered_set<std::string> seen;
    for (std::size_t i = 0; i < n; ++i) {
        const Component& c = raw.components[i];
        if (c.name.empty()) {
            std::ostringstream msg;
            msg << "component " << i << " has an empty name";
            throw RangeError(msg.str());
        }
        if (!seen.insert(c.name).second) {
            throw RangeError("duplicate component name '" + c.name + "'");
        }
        if (!(c.unit_loss >= 1.0) || !std::isfinite(c.unit_loss)) {
            std::ostringstream msg;
            msg << "component '" << c.name << "': unit_loss " << c.unit_loss
                << " must be >= 1";
            throw RangeError(msg.str());
        }
    }

    const std::size_t m = raw.stress.rows.front().size();
    if (m == 0) {
        throw ShapeError("stress matrix has zero stress levels");
    }

    Scenario out = raw;
    for (std::size_t i = 0; i < n; ++i) {
        auto& row = out.stress.rows[i];
        if (row.size() != m) {
            std::ostringstream msg;
            msg << "stress row " << i << " ('" << raw.components[i].name << "') has "
                << row.size() << " entries, expected " << m;
            throw ShapeError(msg.str());
        }
        for (std::size_t j = 0; j < m; ++j) {
            const double p = row[j];
            if (!(p >= 0.0 && p <= 1.0)) {
                std::ostringstream msg;
                msg << "p[" << i << "][" << j << "] = " << p << " outside [0, 1]";
                throw RangeError(msg.str());
            }
        }
        const double sum = std::accumulate(row.begin(), row.end(), 0.0);
        const double dev = std::abs(sum - 1.0);
        if (dev > kRowSumReject) {
            std::ostringstream msg;
            msg << "stress row " << i << " ('" << raw.components[i].name
                << "') sums to " << sum << ", expected 1 within " << kRowSumReject;
            throw RowSumError(msg.str());
        }
        if (dev > kRowSumKeep) {
            for (auto& p : row) {
                p /= sum;
            }
        }
        if (warnings && !std::is_sorted(row.begin(), row.end())) {
            warnings->push_back("stress row for '" + raw.components[i].name +
                                "' is not non-decreasing in the stress level");
        }
    }

    const double pf = out.network_failure_probability;
    if (!(pf > 0.0 && pf < 1.0)) {
        std::ostringstream msg;
        msg << "network failure probability " << pf << " outside (0, 1)";
        throw RangeError(msg.str());
    }
    if (!(out.expected_loss > 0.0) || !std::isfinite(out.expected_loss)) {
        std::ostringstream msg;
        msg << "expected loss " << out.expected_loss << " must be > 0";
        throw RangeError(msg.str());
    }
    return out;
}

} // namespace entroprel
