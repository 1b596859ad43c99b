// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace entroprel {

/// Default charging efficiency when a session does not specify one.
inline constexpr double kDefaultChargingEfficiency = 0.90;

/// Default width of one stress level, in hours.
inline constexpr double kDefaultGranularityHours = 1.0;

/// One observed charging session. State of charge is in percent of battery
/// capacity; the observed duration is wall-clock hours.
struct ChargingSession {
    double battery_capacity_kwh = 0.0;
    double initial_soc_pct = 0.0;
    double desired_soc_pct = 0.0;
    double charging_power_kw = 0.0;
    double charging_efficiency = kDefaultChargingEfficiency;
    double actual_duration_h = 0.0;

    friend bool operator==(const ChargingSession&, const ChargingSession&) = default;
};

/// Throws RangeError unless all session invariants hold (BC > 0, SOC in
/// [0,100] with DSOC >= ISOC, CP > 0, CE in (0,1], duration >= 0).
void validate_session(const ChargingSession& session);

/// Energy required to move the battery from ISOC to DSOC, in kWh:
/// BC/100 * (DSOC - ISOC).
double energy_needed(const ChargingSession& session);

/// Hours the session should have taken: energy / (power * efficiency).
/// Throws DivisionDomainError when power * efficiency == 0.
double expected_charging_time(double energy_kwh, double power_kw, double efficiency);

/// Number of stress levels m implied by the gap between observed and
/// expected duration.
///
/// The expected duration is rounded to the nearest granularity unit before
/// differencing, so an expectation of 2.997 h against an 8 h session with
/// 1 h granularity yields m = 5 (not 6). Non-positive additional time
/// yields m = 1, the single baseline level.
int derive_stress_levels(double actual_h, double expected_h, double granularity_h);

/// Derived view of a session: energy, expected hours and the stress-level
/// count, computed in one pass for reporting.
struct SessionStress {
    double energy_kwh = 0.0;
    double expected_h = 0.0;
    double additional_h = 0.0;
    int stress_levels = 1;
};

SessionStress analyze_session(const ChargingSession& session,
                              double granularity_h = kDefaultGranularityHours);

} // namespace entroprel
