#pragma once

#include <cmath>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "fracstefan/errors.hpp"
#include "fracstefan/inverse.hpp"
#include "fracstefan/problem.hpp"
#include "fracstefan/scalar_root.hpp"

namespace fracstefan {

/// Solution of the alpha = 1 (no-memory) problem. Implemented independently of
/// the fractional path, on erf/exp closed forms, so it can serve as the
/// convergence target: sigma_star = sigma/2, and the fractional root
/// approaches 2 xi_star as alpha -> 1.
struct ClassicalSolution {
    CaseId case_id;
    double sigma_star = 0;
    double xi_star = 0;
    Coefficients coefficients;
};

namespace detail {

inline constexpr double kSqrtPi = 1.77245385090551602729816748334114518;

} // namespace detail

/// Strict data conditions of the classical problem. Cases 3 and 6 impose none.
inline Verdict classical_admissibility(CaseId cs, const ProblemData& data) {
    data.validate();
    const double dT = data.delta_T();
    const double sigma_star = data.sigma / 2.0;
    Verdict v;
    switch (cs.id()) {
    case 1:
    case 4:
    case 5: {
        const double k = detail::require_known(data, "k", cs.id());
        v.condition = "Cond-lcClassic";
        v.value = k * dT / (2.0 * sigma_star * data.q_0);
        v.admissible = v.value < 1.0;
        v.detail = detail::ratio_detail("k(T0-Tm)/(2 sigma* q0)", v.value,
                                        v.admissible ? "<" : ">=", 1.0);
        return v;
    }
    case 2: {
        const double rho = detail::require_known(data, "rho", cs.id());
        const double l = detail::require_known(data, "l", cs.id());
        v.condition = "Cond-ckClassic";
        v.value = data.q_0 / (rho * l * sigma_star);
        v.admissible = v.value > 1.0;
        v.detail = detail::ratio_detail("q0/(rho l sigma*)", v.value,
                                        v.admissible ? ">" : "<=", 1.0);
        return v;
    }
    case 3:
    case 6:
        for (const char* name : cs.known_names())
            detail::require_known(data, name, cs.id());
        v.admissible = true;
        v.detail = "no data condition for this case";
        return v;
    }
    throw DomainError("classical_admissibility: unreachable case id");
}

/// Solves the classical determination case on erf/exp closed forms. Only
/// sigma, q0, the temperatures, and the known pair enter; alpha is ignored.
inline ClassicalSolution solve_classical(CaseId cs, const ProblemData& data) {
    data.validate();
    detail::require_exact_known_pair(cs, data);
    const Verdict verdict = classical_admissibility(cs, data);
    if (!verdict.admissible) throw InadmissibleError(verdict.condition, verdict.detail);

    const double dT = data.delta_T(), q0 = data.q_0;
    const double sigma_star = data.sigma / 2.0;
    const double sqrt_pi = detail::kSqrtPi;

    auto solve_lhs = [](std::function<double(double)> lhs, Monotonicity dir,
                        double target) {
        RootProblem rp;
        rp.func = std::move(lhs);
        rp.direction = dir;
        rp.target = target;
        return solve_monotone(rp);
    };

    double xi = 0;
    Coefficients co;
    switch (cs.id()) {
    case 1: {
        co.rho = *data.known.rho;
        co.k = *data.known.k;
        xi = solve_lhs([](double x) { return std::erf(x) / x; },
                       Monotonicity::decreasing, co.k * dT / (q0 * sigma_star * sqrt_pi));
        co.c = (co.k / co.rho) * (xi / sigma_star) * (xi / sigma_star);
        co.l = q0 * std::exp(-xi * xi) / (co.rho * sigma_star);
        break;
    }
    case 2: {
        co.rho = *data.known.rho;
        co.l = *data.known.l;
        xi = std::sqrt(std::log(q0 / (co.rho * co.l * sigma_star)));
        co.c = q0 * sqrt_pi * xi * std::erf(xi) / (co.rho * sigma_star * dT);
        co.k = sigma_star * q0 * sqrt_pi * std::erf(xi) / (dT * xi);
        break;
    }
    case 3: {
        co.rho = *data.known.rho;
        co.c = *data.known.c;
        xi = solve_lhs([](double x) { return x * std::erf(x); }, Monotonicity::increasing,
                       co.rho * co.c * sigma_star * dT / (q0 * sqrt_pi));
        co.l = q0 * std::exp(-xi * xi) / (co.rho * sigma_star);
        co.k = co.rho * co.c * (sigma_star / xi) * (sigma_star / xi);
        break;
    }
    case 4: {
        co.k = *data.known.k;
        co.l = *data.known.l;
        xi = solve_lhs([](double x) { return std::erf(x) / x; },
                       Monotonicity::decreasing, co.k * dT / (q0 * sigma_star * sqrt_pi));
        co.c = co.k * co.l * xi * xi * std::exp(xi * xi) / (q0 * sigma_star);
        co.rho = q0 * std::exp(-xi * xi) / (co.l * sigma_star);
        break;
    }
    case 5: {
        co.k = *data.known.k;
        co.c = *data.known.c;
        xi = solve_lhs([](double x) { return std::erf(x) / x; },
                       Monotonicity::decreasing, co.k * dT / (q0 * sigma_star * sqrt_pi));
        co.l = q0 * co.c * sigma_star * std::exp(-xi * xi) / (co.k * xi * xi);
        co.rho = (co.k / co.c) * (xi / sigma_star) * (xi / sigma_star);
        break;
    }
    case 6: {
        co.c = *data.known.c;
        co.l = *data.known.l;
        xi = solve_lhs([](double x) { return x * std::erf(x) * std::exp(x * x); },
                       Monotonicity::increasing, co.c * dT / (co.l * sqrt_pi));
        co.rho = q0 * std::exp(-xi * xi) / (co.l * sigma_star);
        co.k = q0 * co.c * sigma_star * std::exp(-xi * xi) / (co.l * xi * xi);
        break;
    }
    }

    if (!(co.k > 0 && co.rho > 0 && co.c > 0 && co.l > 0))
        throw ConvergenceError("solve_classical: coefficients not strictly positive");
    return {cs, sigma_star, xi, co};
}

/// Relative residuals of the alpha = 1 specialization of the characterizing
/// system, evaluated on erf/exp closed forms (Gamma(1/2) = sqrt(pi),
/// Gamma(3/2) = sqrt(pi)/2, mu = nu = 1, xi = 2 xi_star):
///   2 xi* erf(xi*) sqrt(pi) exp(xi*^2) = 2 c dT / l
///   erf(xi*) = sqrt(k rho c) dT / (q0 sqrt(pi))
inline std::pair<double, double> classical_system_residuals(const ClassicalSolution& sol,
                                                            const ProblemData& data) {
    const Coefficients& co = sol.coefficients;
    const double dT = data.delta_T();
    const double xs = sol.xi_star;
    const double lhs1 = 2.0 * xs * std::erf(xs) * detail::kSqrtPi * std::exp(xs * xs);
    const double rhs1 = 2.0 * co.c * dT / co.l;
    const double lhs2 = std::erf(xs);
    const double rhs2 = std::sqrt(co.k * co.rho * co.c) * dT / (data.q_0 * detail::kSqrtPi);
    return {std::fabs(lhs1 - rhs1) / std::max(std::fabs(lhs1), std::fabs(rhs1)),
            std::fabs(lhs2 - rhs2) / std::max(std::fabs(lhs2), std::fabs(rhs2))};
}

/// One row of the alpha -> 1 convergence table.
struct ConvergenceRow {
    double alpha = 0;
    double xi = 0;       // fractional similarity root at this alpha
    double xi_star = 0;  // classical root for the same data
    double xi_abs_dev = 0; // |xi - 2 xi_star|
    std::array<double, 2> coeff_rel_dev{}; // order of CaseId::unknown_names()
};

/// Runs the fractional solve and the classical solve on family(alpha) for each
/// sampled alpha and tabulates the deviations. The trend is reported, not
/// asserted; only the final row is checked against `final_tolerance`
/// (relative, both for xi against 2 xi_star and for the coefficients).
inline std::vector<ConvergenceRow> convergence_probe(
    CaseId cs, const std::function<ProblemData(double)>& family,
    std::span<const double> alphas, double final_tolerance = 1e-2,
    const SeriesPolicy& policy = {}) {
    if (alphas.empty()) throw DomainError("convergence_probe: empty alpha list");
    std::vector<ConvergenceRow> rows;
    rows.reserve(alphas.size());
    for (const double alpha : alphas) {
        try {
            const ProblemData data = hide_unknowns(cs, family(alpha));
            const SolveReport rep = solve_case(cs, data, policy);
            const ClassicalSolution limit = solve_classical(cs, data);
            ConvergenceRow row;
            row.alpha = alpha;
            row.xi = rep.xi;
            row.xi_star = limit.xi_star;
            row.xi_abs_dev = std::fabs(rep.xi - 2.0 * limit.xi_star);
            const auto names = cs.unknown_names();
            for (int i = 0; i < 2; ++i) {
                const double got = coefficient_by_name(rep.coefficients, names[i]);
                const double want = coefficient_by_name(limit.coefficients, names[i]);
                row.coeff_rel_dev[i] = std::fabs(got - want) / std::fabs(want);
            }
            rows.push_back(row);
        } catch (const InadmissibleError& e) {
            throw InadmissibleError(e.condition, "at alpha = " + std::to_string(alpha) +
                                                     ": " + e.what());
        } catch (const Error& e) {
            throw ConvergenceError("convergence_probe: solve failed at alpha = " +
                                   std::to_string(alpha) + ": " + e.what());
        }
    }
    const ConvergenceRow& last = rows.back();
    if (last.xi_abs_dev > final_tolerance * 2.0 * last.xi_star ||
        last.coeff_rel_dev[0] > final_tolerance || last.coeff_rel_dev[1] > final_tolerance)
        throw ConvergenceError(
            "convergence_probe: final-row deviation exceeds the requested tolerance");
    return rows;
}

} // namespace fracstefan
