// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "entroprel/scenario.hpp"

#include <array>
#include <functional>
#include <optional>
#include <vector>

namespace entroprel {

/// Stand-in magnitude for unbounded interval ends, large enough to never
/// bind yet finite so the projection arithmetic stays total.
inline constexpr double kUnboundedMagnitude = 1e12;

/// Closed interval used for the multiplier box.
struct Interval {
    double lo = -kUnboundedMagnitude;
    double hi = kUnboundedMagnitude;

    double clamp(double v) const { return v < lo ? lo : (v > hi ? hi : v); }
    bool contains(double v) const { return v >= lo && v <= hi; }
};

/// Tuning of the penalized least-squares estimation.
///
/// The penalty weights shape the recovered multipliers: the hinge terms are
/// exterior penalties, so the unconstrained optimum always sits slightly
/// past the lambda1 + lambda2*UL < 0 boundary by an amount proportional to
/// 1/constraint_penalty. The defaults keep that overshoot below 1e-6.
struct OptimizerOptions {
    Interval lambda1_bounds{-kUnboundedMagnitude, -0.5};
    Interval lambda2_bounds{0.1, kUnboundedMagnitude};
    double constraint_penalty = 1e8;
    double bound_penalty = 1e4;
    double pf_floor = 1e-9;
    double pf_ceiling = 0.99;
    double fd_epsilon = 1e-7;         // scaled per coordinate by max(1, |lambda|)
    double function_tolerance = 1e-3; // |f_{k+1} - f_k| stopping threshold
    int max_iterations = 100;
    std::optional<MultiplierPair> initial_guess;
    /// Clamp hair-thin physical-constraint overshoot (the exterior-penalty
    /// artifact) back into the valid region after convergence.
    bool feasibility_polish = true;
};

enum class ConvergenceReason {
    FunctionTolerance,
    MaxIterations,
    GradientVanished,
};

const char* to_string(ConvergenceReason reason);

/// Full diagnostics of one estimation run. objective_trace starts with the
/// objective at the initial point and appends one value per accepted step;
/// it is non-increasing. multiplier_trace holds the matching iterates.
/// final_objective is evaluated at final_multipliers and can exceed the last
/// trace entry by the (tiny) feasibility-polish cost.
struct OptimizerRun {
    MultiplierPair final_multipliers;
    double final_objective = 0.0;
    std::array<double, 2> target_residuals{0.0, 0.0}; // (F1 - PF, F2 - L)
    double penalty_total = 0.0;
    int iterations = 0;
    ConvergenceReason convergence_reason = ConvergenceReason::MaxIterations;
    std::vector<double> objective_trace;
    std::vector<MultiplierPair> multiplier_trace;
};

/// Penalized least-squares objective:
///   (F1-PF)^2 + (F2-L)^2
///   + constraint_penalty * sum_i max(0, lambda1 + lambda2*UL_i)^2
///   + bound_penalty * sum_cells [max(0, floor - pF)^2 + max(0, pF - ceiling)^2]
/// computed on the unclamped failure matrix.
double objective(const MultiplierPair& multipliers, const Scenario& scenario,
                 const OptimizerOptions& options);

/// Forward-difference gradient of an arbitrary function of the multipliers,
/// with per-coordinate step fd_epsilon * max(1, |lambda_k|).
std::array<double, 2>
fd_gradient(const std::function<double(const MultiplierPair&)>& f,
            const MultiplierPair& at, const OptimizerOptions& options);

/// Forward-difference gradient of the estimation objective.
std::array<double, 2> gradient_fd(const Scenario& scenario,
                                  const MultiplierPair& multipliers,
                                  const OptimizerOptions& options);

/// Symmetric 2x2 matrix in row-major order.
struct Matrix2 {
    std::array<double, 4> m{1.0, 0.0, 0.0, 1.0};

    static Matrix2 identity() { return Matrix2{}; }
    double operator()(int r, int c) const { return m[static_cast<std::size_t>(r * 2 + c)]; }
    double& operator()(int r, int c) { return m[static_cast<std::size_t>(r * 2 + c)]; }
    std::array<double, 2> mul(const std::array<double, 2>& v) const;
};

/// BFGS inverse-Hessian update
///   H' = (I - rho s y^T) H (I - rho y s^T) + rho s s^T,  rho = 1/(y.s).
/// Returns h_inv unchanged when the curvature y.s is at or below 1e-12,
/// preserving positive definiteness.
Matrix2 bfgs_update(const Matrix2& h_inv, const std::array<double, 2>& s,
                    const std::array<double, 2>& y);

/// Estimates the multiplier pair by bounded BFGS descent on the penalized
/// objective.
///
/// Starts from options.initial_guess or the physics-informed default
/// (-1.5 * max UL, 1.0) projected into the bound box. Each iteration takes
/// the quasi-Newton direction (components pointing out of an active bound
/// are dropped), runs a backtracking Armijo line search whose trials are
/// projected onto the box, and falls back to steepest descent with a reset
/// inverse Hessian when the quasi-Newton direction yields no acceptable
/// point. Every iterate therefore stays inside the box and the accepted
/// objective values never increase. Deterministic for fixed inputs.
///
/// Throws DegenerateScenarioError when every stress probability is zero.
OptimizerRun estimate_multipliers(const Scenario& scenario,
                                  const OptimizerOptions& options = {});

} // namespace entroprel
