// SPDX-License-Identifier: Apache-2.0
#include "entroprel/optimizer.hpp"

#include "entroprel/errors.hpp"
#include "entroprel/maxent.hpp"

#include <algorithm>
#include <cmath>

namespace entroprel {

namespace {

constexpr double kArmijoC = 1e-4;
constexpr double kCurvatureFloor = 1e-12;
constexpr double kGradientFloor = 1e-10;
constexpr int kMaxBacktracks = 30;

using Vec2 = std::array<double, 2>;

double dot(const Vec2& a, const Vec2& b) { return a[0] * b[0] + a[1] * b[1]; }

double norm(const Vec2& a) { return std::sqrt(dot(a, a)); }

double inf_norm(const Vec2& a) { return std::max(std::abs(a[0]), std::abs(a[1])); }

MultiplierPair project(const MultiplierPair& x, const OptimizerOptions& opt) {
    return MultiplierPair{opt.lambda1_bounds.clamp(x.lambda1),
                          opt.lambda2_bounds.clamp(x.lambda2)};
}

Vec2 as_vec(const MultiplierPair& x) { return {x.lambda1, x.lambda2}; }

MultiplierPair as_pair(const Vec2& v) { return MultiplierPair{v[0], v[1]}; }

// Drop direction components that push out of an active bound; the
// projection would zero them anyway, but masking keeps the line search
// scaled by the movable coordinates only.
Vec2 mask_at_bounds(const MultiplierPair& x, Vec2 d, const OptimizerOptions& opt) {
    if ((x.lambda1 <= opt.lambda1_bounds.lo && d[0] < 0.0) ||
        (x.lambda1 >= opt.lambda1_bounds.hi && d[0] > 0.0)) {
        d[0] = 0.0;
    }
    if ((x.lambda2 <= opt.lambda2_bounds.lo && d[1] < 0.0) ||
        (x.lambda2 >= opt.lambda2_bounds.hi && d[1] > 0.0)) {
        d[1] = 0.0;
    }
    return d;
}

struct LineSearchResult {
    MultiplierPair point;
    double value = 0.0;
    bool accepted = false;
};

LineSearchResult backtracking_search(const std::function<double(const MultiplierPair&)>& f,
                                     const MultiplierPair& x, double fx, const Vec2& g,
                                     const Vec2& d, const OptimizerOptions& opt) {
    const double d_inf = inf_norm(d);
    if (d_inf == 0.0) {
        return {x, fx, false};
    }
    // Cap the first trial displacement; gradients at a cold start can be
    // many orders of magnitude larger than the multiplier scale.
    const double cap = std::max(1.0, std::max(std::abs(x.lambda1), std::abs(x.lambda2)));
    double alpha = std::min(1.0, cap / d_inf);
    for (int k = 0; k < kMaxBacktracks; ++k, alpha *= 0.5) {
        const MultiplierPair trial = project(
            MultiplierPair{x.lambda1 + alpha * d[0], x.lambda2 + alpha * d[1]}, opt);
        const Vec2 step{trial.lambda1 - x.lambda1, trial.lambda2 - x.lambda2};
        if (step[0] == 0.0 && step[1] == 0.0) {
            continue;
        }
        const double ft = f(trial);
        if (ft <= fx + kArmijoC * dot(g, step) && ft <= fx) {
            return {trial, ft, true};
        }
    }
    return {x, fx, false};
}

} // namespace

const char* to_string(ConvergenceReason reason) {
    switch (reason) {
    case ConvergenceReason::FunctionTolerance: return "function_tolerance";
    case ConvergenceReason::MaxIterations: return "max_iterations";
    case ConvergenceReason::GradientVanished: return "gradient_vanished";
    }
    return "unknown";
}

std::array<double, 2> Matrix2::mul(const std::array<double, 2>& v) const {
    return {m[0] * v[0] + m[1] * v[1], m[2] * v[0] + m[3] * v[1]};
}

double objective(const MultiplierPair& multipliers, const Scenario& scenario,
                 const OptimizerOptions& opt) {
    double f1 = 0.0;
    double f2 = 0.0;
    double penalty = 0.0;
    for (std::size_t i = 0; i < scenario.component_count(); ++i) {
        const double ul = scenario.components[i].unit_loss;
        const double a = multipliers.lambda1 + multipliers.lambda2 * ul;
        const double hinge = std::max(0.0, a);
        penalty += opt.constraint_penalty * hinge * hinge;
        for (double p : scenario.stress.rows[i]) {
            const double pf = std::exp(-1.0 - p * a);
            f1 += p * pf;
            f2 += ul * p * pf;
            const double below = std::max(0.0, opt.pf_floor - pf);
            const double above = std::max(0.0, pf - opt.pf_ceiling);
            penalty += opt.bound_penalty * (below * below + above * above);
        }
    }
    const double r1 = f1 - scenario.network_failure_probability;
    const double r2 = f2 - scenario.expected_loss;
    return r1 * r1 + r2 * r2 + penalty;
}

std::array<double, 2>
fd_gradient(const std::function<double(const MultiplierPair&)>& f,
            const MultiplierPair& at, const OptimizerOptions& opt) {
    const double f0 = f(at);
    std::array<double, 2> g{};
    const std::array<double, 2> x = as_vec(at);
    for (int k = 0; k < 2; ++k) {
        const double eps = opt.fd_epsilon * std::max(1.0, std::abs(x[k]));
        Vec2 shifted = x;
        shifted[k] += eps;
        g[k] = (f(as_pair(shifted)) - f0) / eps;
    }
    return g;
}

std::array<double, 2> gradient_fd(const Scenario& scenario,
                                  const MultiplierPair& multipliers,
                                  const OptimizerOptions& opt) {
    return fd_gradient(
        [&](const MultiplierPair& m) { return objective(m, scenario, opt); },
        multipliers, opt);
}

Matrix2 bfgs_update(const Matrix2& h_inv, const std::array<double, 2>& s,
                    const std::array<double, 2>& y) {
    const double ys = dot(y, s);
    if (ys <= kCurvatureFloor) {
        return h_inv;
    }
    const double rho = 1.0 / ys;
    // V = I - rho * s * y^T
    Matrix2 v;
    v(0, 0) = 1.0 - rho * s[0] * y[0];
    v(0, 1) = -rho * s[0] * y[1];
    v(1, 0) = -rho * s[1] * y[0];
    v(1, 1) = 1.0 - rho * s[1] * y[1];
    // H' = V * H * V^T + rho * s * s^T
    Matrix2 vh;
    vh(0, 0) = v(0, 0) * h_inv(0, 0) + v(0, 1) * h_inv(1, 0);
    vh(0, 1) = v(0, 0) * h_inv(0, 1) + v(0, 1) * h_inv(1, 1);
    vh(1, 0) = v(1, 0) * h_inv(0, 0) + v(1, 1) * h_inv(1, 0);
    vh(1, 1) = v(1, 0) * h_inv(0, 1) + v(1, 1) * h_inv(1, 1);
    Matrix2 out;
    out(0, 0) = vh(0, 0) * v(0, 0) + vh(0, 1) * v(0, 1) + rho * s[0] * s[0];
    out(0, 1) = vh(0, 0) * v(1, 0) + vh(0, 1) * v(1, 1) + rho * s[0] * s[1];
    out(1, 0) = vh(1, 0) * v(0, 0) + vh(1, 1) * v(0, 1) + rho * s[1] * s[0];
    out(1, 1) = vh(1, 0) * v(1, 0) + vh(1, 1) * v(1, 1) + rho * s[1] * s[1];
    return out;
}

OptimizerRun estimate_multipliers(const Scenario& scenario, const OptimizerOptions& opt) {
    bool any_stress = false;
    for (const auto& row : scenario.stress.rows) {
        for (double p : row) {
            if (p != 0.0) {
                any_stress = true;
            }
        }
    }
    if (!any_stress) {
        throw DegenerateScenarioError(
            "all stress probabilities are zero; objective does not depend on the multipliers");
    }

    const auto f = [&](const MultiplierPair& m) { return objective(m, scenario, opt); };

    MultiplierPair x = opt.initial_guess.value_or(
        MultiplierPair{-1.5 * scenario.max_unit_loss(), 1.0});
    x = project(x, opt);

    Matrix2 h_inv = Matrix2::identity();
    Vec2 g = fd_gradient(f, x, opt);
    double fx = f(x);

    OptimizerRun run;
    run.objective_trace.push_back(fx);
    run.multiplier_trace.push_back(x);
    run.convergence_reason = ConvergenceReason::MaxIterations;

    for (int it = 0; it < opt.max_iterations; ++it) {
        if (norm(g) < kGradientFloor) {
            run.convergence_reason = ConvergenceReason::GradientVanished;
            break;
        }

        const Vec2 hg = h_inv.mul(g);
        Vec2 d = mask_at_bounds(x, {-hg[0], -hg[1]}, opt);
        if (dot(g, d) >= 0.0 || (d[0] == 0.0 && d[1] == 0.0)) {
            h_inv = Matrix2::identity();
            d = mask_at_bounds(x, {-g[0], -g[1]}, opt);
        }

        LineSearchResult ls = backtracking_search(f, x, fx, g, d, opt);
        if (!ls.accepted) {
            h_inv = Matrix2::identity();
            d = mask_at_bounds(x, {-g[0], -g[1]}, opt);
            ls = backtracking_search(f, x, fx, g, d, opt);
        }
        if (!ls.accepted) {
            // No admissible step in either direction: the function is flat
            // to tolerance around x.
            run.convergence_reason = ConvergenceReason::FunctionTolerance;
            break;
        }

        const Vec2 g_next = fd_gradient(f, ls.point, opt);
        const Vec2 s{ls.point.lambda1 - x.lambda1, ls.point.lambda2 - x.lambda2};
        const Vec2 y{g_next[0] - g[0], g_next[1] - g[1]};
        h_inv = bfgs_update(h_inv, s, y);

        const double f_prev = fx;
        x = ls.point;
        fx = ls.value;
        g = g_next;
        run.iterations = it + 1;
        run.objective_trace.push_back(fx);
        run.multiplier_trace.push_back(x);

        if (std::abs(f_prev - fx) < opt.function_tolerance) {
            run.convergence_reason = ConvergenceReason::FunctionTolerance;
            break;
        }
    }

    if (opt.feasibility_polish) {
        const double violation = x.lambda1 + x.lambda2 * scenario.max_unit_loss();
        if (violation >= 0.0 && violation <= 1e-3 * (1.0 + std::abs(x.lambda1))) {
            x.lambda1 -= violation + 1e-9 * (1.0 + std::abs(x.lambda1));
            x = project(x, opt);
            fx = f(x);
        }
    }

    run.final_multipliers = x;
    run.final_objective = fx;
    const FailureMatrix matrix = failure_matrix(scenario, x);
    const double f1 = constraint_f1(scenario, matrix);
    const double f2 = constraint_f2(scenario, matrix);
    run.target_residuals = {f1 - scenario.network_failure_probability,
                            f2 - scenario.expected_loss};
    const double residual_sq = run.target_residuals[0] * run.target_residuals[0] +
                               run.target_residuals[1] * run.target_residuals[1];
    run.penalty_total = std::max(0.0, fx - residual_sq);
    return run;
}

} // namespace entroprel
