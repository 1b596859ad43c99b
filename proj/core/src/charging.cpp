// SPDX-License-Identifier: Apache-2.0
#include "entroprel/charging.hpp"

#include "entroprel/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace entroprel {

void validate_session(const ChargingSession& s) {
    std::ostringstream msg;
    if (!(s.battery_capacity_kwh > 0.0)) {
        msg << "battery capacity " << s.battery_capacity_kwh << " kWh must be > 0";
        throw RangeError(msg.str());
    }
    if (!(s.initial_soc_pct >= 0.0 && s.initial_soc_pct <= 100.0) ||
        !(s.desired_soc_pct >= 0.0 && s.desired_soc_pct <= 100.0)) {
        msg << "state of charge must lie in [0, 100] (got " << s.initial_soc_pct
            << " -> " << s.desired_soc_pct << ")";
        throw RangeError(msg.str());
    }
    if (s.desired_soc_pct < s.initial_soc_pct) {
        msg << "desired SOC " << s.desired_soc_pct << " below initial SOC "
            << s.initial_soc_pct;
        throw RangeError(msg.str());
    }
    if (!(s.charging_power_kw > 0.0)) {
        msg << "charging power " << s.charging_power_kw << " kW must be > 0";
        throw RangeError(msg.str());
    }
    if (!(s.charging_efficiency > 0.0 && s.charging_efficiency <= 1.0)) {
        msg << "charging efficiency " << s.charging_efficiency
            << " must lie in (0, 1]";
        throw RangeError(msg.str());
    }
    if (!(s.actual_duration_h >= 0.0)) {
        msg << "observed duration " << s.actual_duration_h << " h must be >= 0";
        throw RangeError(msg.str());
    }
}

double energy_needed(const ChargingSession& s) {
    return s.battery_capacity_kwh / 100.0 * (s.desired_soc_pct - s.initial_soc_pct);
}

double expected_charging_time(double energy_kwh, double power_kw, double efficiency) {
    const double denom = power_kw * efficiency;
    if (denom == 0.0) {
        throw DivisionDomainError("charging power * efficiency is zero");
    }
    return energy_kwh / denom;
}

int derive_stress_levels(double actual_h, double expected_h, double granularity_h) {
    if (!(granularity_h > 0.0)) {
        throw RangeError("granularity must be > 0 hours");
    }
    // Round the expectation onto the granularity lattice first; the
    // difference then counts whole stress units.
    const double rounded = std::round(expected_h / granularity_h) * granularity_h;
    const double additional = actual_h - rounded;
    if (additional <= 0.0) {
        return 1;
    }
    // tiny slack so exact multiples do not spill into an extra level
    const int m = static_cast<int>(std::ceil(additional / granularity_h - 1e-9));
    return std::max(1, m);
}

SessionStress analyze_session(const ChargingSession& s, double granularity_h) {
    validate_session(s);
    SessionStress out;
    out.energy_kwh = energy_needed(s);
    out.expected_h =
        expected_charging_time(out.energy_kwh, s.charging_power_kw, s.charging_efficiency);
    out.additional_h = std::max(0.0, s.actual_duration_h - out.expected_h);
    out.stress_levels = derive_stress_levels(s.actual_duration_h, out.expected_h, granularity_h);
    return out;
}

} // namespace entroprel
