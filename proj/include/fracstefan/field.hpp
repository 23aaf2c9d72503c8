#pragma once

#include <cmath>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "fracstefan/classical.hpp"
#include "fracstefan/errors.hpp"
#include "fracstefan/inverse.hpp"
#include "fracstefan/problem.hpp"
#include "fracstefan/profiles.hpp"
#include "fracstefan/specfun.hpp"

namespace fracstefan {

/// Position of the melt front, s(t) = sigma t^(alpha/2).
inline double moving_boundary(double t, double sigma, double alpha) {
    if (!(t > 0.0)) throw DomainError("moving_boundary: t must be > 0");
    if (!(sigma > 0.0)) throw DomainError("moving_boundary: sigma must be > 0");
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw DomainError("moving_boundary: alpha must lie in (0, 1]");
    return sigma * std::pow(t, alpha / 2.0);
}

/// Closed-form similarity temperature field of a fractional solve:
///   T(x,t) = A + B [1 - W(-x/(sqrt(mu) lambda t^(alpha/2)), -alpha/2, 1)]
/// with A = T_0 and B = (T_m - T_0) / f_alpha(xi). The Wright function is
/// entire, so the formula extends past the front; that extension is what the
/// residual checks evaluate.
struct SimilaritySolution {
    double alpha = 0.5, mu = 1.0, nu = 1.0;
    double xi = 0, lambda = 0;
    double T_0 = 1, T_m = 0;
    double q_0 = 1, sigma = 1;
    Coefficients coefficients;
    double A = 0, B = 0;

    double length_scale(double t) const {
        return std::sqrt(mu) * lambda * std::pow(t, alpha / 2.0);
    }
};

inline SimilaritySolution make_similarity_solution(const ProblemData& data,
                                                   const SolveReport& report,
                                                   const SeriesPolicy& policy = {}) {
    data.validate();
    SimilaritySolution sol;
    sol.alpha = data.alpha;
    sol.mu = data.mu;
    sol.nu = data.nu;
    sol.xi = report.xi;
    sol.lambda = report.lambda;
    sol.T_0 = data.T_0;
    sol.T_m = data.T_m;
    sol.q_0 = data.q_0;
    sol.sigma = data.sigma;
    sol.coefficients = report.coefficients;
    sol.A = data.T_0;
    sol.B = (data.T_m - data.T_0) / f_alpha(report.xi, data.alpha, policy);
    return sol;
}

/// The alpha = 1 field in erf closed form:
///   T(x,t) = T_0 - (T_0 - T_m) erf(x/(2 lambda sqrt(t))) / erf(xi_star).
struct ClassicalField {
    double xi_star = 0, sigma_star = 0, lambda = 0;
    double T_0 = 1, T_m = 0;
    double q_0 = 1, sigma = 1;
    Coefficients coefficients;
};

inline ClassicalField make_classical_field(const ProblemData& data,
                                           const ClassicalSolution& sol) {
    data.validate();
    ClassicalField field;
    field.xi_star = sol.xi_star;
    field.sigma_star = sol.sigma_star;
    const Coefficients& co = sol.coefficients;
    field.lambda = std::sqrt(co.k / (co.rho * co.c));
    field.T_0 = data.T_0;
    field.T_m = data.T_m;
    field.q_0 = data.q_0;
    field.sigma = data.sigma;
    field.coefficients = co;
    return field;
}

inline double temperature(double x, double t, const SimilaritySolution& sol,
                          const SeriesPolicy& policy = {}) {
    if (!(t > 0.0)) throw DomainError("temperature: t must be > 0");
    if (!(x >= 0.0)) throw DomainError("temperature: x must be >= 0");
    const double u = x / sol.length_scale(t);
    const double f = u > 0.0 ? f_alpha(u, sol.alpha, policy) : 0.0;
    return sol.A + sol.B * f;
}

inline double temperature(double x, double t, const ClassicalField& sol) {
    if (!(t > 0.0)) throw DomainError("temperature: t must be > 0");
    if (!(x >= 0.0)) throw DomainError("temperature: x must be >= 0");
    const double u = x / (2.0 * sol.lambda * std::sqrt(t));
    return sol.T_0 - (sol.T_0 - sol.T_m) * std::erf(u) / std::erf(sol.xi_star);
}

/// dT/dx from the derivative identity of the Wright function, which turns the
/// profile derivative into a Mainardi evaluation; no finite differences.
inline double temperature_gradient(double x, double t, const SimilaritySolution& sol,
                                   const SeriesPolicy& policy = {}) {
    if (!(t > 0.0)) throw DomainError("temperature_gradient: t must be > 0");
    const double scale = sol.length_scale(t);
    const double u = x / scale;
    return sol.B * mainardi(u, sol.alpha / 2.0, policy) / scale;
}

inline double temperature_gradient(double x, double t, const ClassicalField& sol) {
    if (!(t > 0.0)) throw DomainError("temperature_gradient: t must be > 0");
    const double lam = sol.lambda;
    return -(sol.T_0 - sol.T_m) * std::exp(-x * x / (4.0 * lam * lam * t)) /
           (std::erf(sol.xi_star) * lam * detail::kSqrtPi * std::sqrt(t));
}

struct ConditionResiduals {
    double t = 0;
    double flux_residual = 0;       // fixed-face flux, relative
    double stefan_residual = 0;     // free-boundary energy balance, relative
    double melt_temperature_error = 0; // |T(s(t), t) - T_m|, absolute
};

/// Verifies the boundary and free-boundary conditions at the given times
/// using closed-form gradients; returns per-time residuals.
inline std::vector<ConditionResiduals> verify_conditions(
    const SimilaritySolution& sol, std::span<const double> t_samples,
    const SeriesPolicy& policy = {}) {
    const Coefficients& co = sol.coefficients;
    std::vector<ConditionResiduals> rows;
    rows.reserve(t_samples.size());
    for (const double t : t_samples) {
        ConditionResiduals row;
        row.t = t;
        const double tpow = std::pow(t, -sol.alpha / 2.0);

        const double flux_lhs = co.k * temperature_gradient(0.0, t, sol, policy);
        const double flux_rhs = -sol.q_0 * tpow;
        row.flux_residual = std::fabs(flux_lhs - flux_rhs) / std::fabs(flux_rhs);

        const double s = moving_boundary(t, sol.sigma, sol.alpha);
        const double stefan_lhs = -co.k * temperature_gradient(s, t, sol, policy);
        const double stefan_rhs =
            sol.nu * co.rho * co.l * sol.sigma * caputo_power(sol.alpha / 2.0, sol.alpha, t);
        row.stefan_residual = std::fabs(stefan_lhs - stefan_rhs) /
                              std::max(std::fabs(stefan_lhs), std::fabs(stefan_rhs));

        row.melt_temperature_error = std::fabs(temperature(s, t, sol, policy) - sol.T_m);
        rows.push_back(row);
    }
    return rows;
}

inline std::vector<ConditionResiduals> verify_conditions(
    const ClassicalField& sol, std::span<const double> t_samples) {
    const Coefficients& co = sol.coefficients;
    std::vector<ConditionResiduals> rows;
    rows.reserve(t_samples.size());
    for (const double t : t_samples) {
        ConditionResiduals row;
        row.t = t;
        const double flux_lhs = co.k * temperature_gradient(0.0, t, sol);
        const double flux_rhs = -sol.q_0 / std::sqrt(t);
        row.flux_residual = std::fabs(flux_lhs - flux_rhs) / std::fabs(flux_rhs);

        const double s = moving_boundary(t, sol.sigma, 1.0);
        const double stefan_lhs = -co.k * temperature_gradient(s, t, sol);
        const double stefan_rhs = co.rho * co.l * sol.sigma * caputo_power(0.5, 1.0, t);
        row.stefan_residual = std::fabs(stefan_lhs - stefan_rhs) /
                              std::max(std::fabs(stefan_lhs), std::fabs(stefan_rhs));

        row.melt_temperature_error = std::fabs(temperature(s, t, sol) - sol.T_m);
        rows.push_back(row);
    }
    return rows;
}

/// |L1-quadrature Caputo time derivative - mu lambda^2 T_xx| at (x, t),
/// normalized by the larger side. The memory integral starts at tau = 0 using
/// the entire extension of the similarity formula; the L1 scheme on a uniform
/// grid converges at order 2 - alpha, which is what refinement tests observe.
inline double pde_residual(const SimilaritySolution& sol, double x, double t,
                           int n_steps, const SeriesPolicy& policy = {}) {
    if (n_steps < 64) throw DomainError("pde_residual: n_steps must be >= 64");
    if (!(x > 0.0 && t > 0.0)) throw DomainError("pde_residual: x, t must be > 0");
    const double alpha = sol.alpha;
    const double dt = t / n_steps;

    // g(tau) = T(x, tau) along the memory axis; g(0) is the tau -> 0 limit of
    // the extension (the Wright profile vanishes as its argument grows).
    auto g = [&](double tau) { return temperature(x, tau, sol, policy); };
    const double g0 = sol.A + sol.B;

    double caputo = 0;
    double prev = g0;
    for (int j = 0; j < n_steps; ++j) {
        const double next = g((j + 1) * dt);
        const double m = n_steps - 1 - j;
        const double weight =
            std::pow(m + 1.0, 1.0 - alpha) - std::pow(m, 1.0 - alpha);
        caputo += weight * (next - prev);
        prev = next;
    }
    caputo *= std::pow(dt, -alpha) * reciprocal_gamma(2.0 - alpha);

    // fourth-order central T_xx, step tied to the similarity length scale and
    // kept clear of both x = 0 and the series domain bound
    const double scale = sol.length_scale(t);
    double h = std::min(0.02 * scale, x / 4.0);
    h = std::min(h, (policy.domain_bound * scale - x) / 4.0);
    if (!(h > 0.0))
        throw DomainError("pde_residual: x too close to the series domain bound");
    auto gx = [&](double xx) { return temperature(xx, t, sol, policy); };
    const double txx =
        (-gx(x + 2 * h) + 16 * gx(x + h) - 30 * gx(x) + 16 * gx(x - h) - gx(x - 2 * h)) /
        (12.0 * h * h);
    const double rhs = sol.mu * sol.lambda * sol.lambda * txx;
    const double denom = std::max(std::fabs(caputo), std::fabs(rhs));
    if (denom == 0.0) return 0.0;
    return std::fabs(caputo - rhs) / denom;
}

/// alpha = 1 path: the Caputo operator degenerates to d/dt, computed here by
/// fourth-order central differencing, against lambda^2 T_xx.
inline double pde_residual(const ClassicalField& sol, double x, double t, int n_steps) {
    if (n_steps < 64) throw DomainError("pde_residual: n_steps must be >= 64");
    if (!(x > 0.0 && t > 0.0)) throw DomainError("pde_residual: x, t must be > 0");
    const double ht = t / n_steps;
    auto gt = [&](double tau) { return temperature(x, tau, sol); };
    const double dT_dt =
        (-gt(t + 2 * ht) + 8 * gt(t + ht) - 8 * gt(t - ht) + gt(t - 2 * ht)) / (12.0 * ht);

    const double hx = std::min(0.02 * sol.lambda * std::sqrt(t), x / 4.0);
    auto gx = [&](double xx) { return temperature(xx, t, sol); };
    const double txx =
        (-gx(x + 2 * hx) + 16 * gx(x + hx) - 30 * gx(x) + 16 * gx(x - hx) - gx(x - 2 * hx)) /
        (12.0 * hx * hx);
    const double rhs = sol.lambda * sol.lambda * txx;
    const double denom = std::max(std::fabs(dT_dt), std::fabs(rhs));
    if (denom == 0.0) return 0.0;
    return std::fabs(dT_dt - rhs) / denom;
}

/// Evaluation request for a plot-ready (x, t, T) grid.
struct FieldSpec {
    std::variant<SimilaritySolution, ClassicalField> solution;
    std::vector<double> x_grid;
    std::vector<double> t_grid;

    void validate() const {
        auto check = [](const std::vector<double>& g, const char* name) {
            if (g.empty()) throw DomainError(std::string("FieldSpec: empty ") + name);
            double prev = 0.0;
            for (double v : g) {
                if (!(v > prev))
                    throw DomainError(std::string("FieldSpec: ") + name +
                                      " must be strictly ascending and positive");
                prev = v;
            }
        };
        check(x_grid, "x_grid");
        check(t_grid, "t_grid");
    }
};

struct FieldSample {
    double x, t, T;
};

/// Row-major over t then x, matching the CSV layout of the field report.
inline std::vector<FieldSample> evaluate_field(const FieldSpec& spec,
                                               const SeriesPolicy& policy = {}) {
    spec.validate();
    std::vector<FieldSample> samples;
    samples.reserve(spec.x_grid.size() * spec.t_grid.size());
    for (const double t : spec.t_grid)
        for (const double x : spec.x_grid) {
            const double T = std::holds_alternative<SimilaritySolution>(spec.solution)
                                 ? temperature(x, t, std::get<SimilaritySolution>(spec.solution),
                                               policy)
                                 : temperature(x, t, std::get<ClassicalField>(spec.solution));
            samples.push_back({x, t, T});
        }
    return samples;
}

} // namespace fracstefan
