#pragma once

#include <cmath>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "fracstefan/errors.hpp"
#include "fracstefan/problem.hpp"
#include "fracstefan/profiles.hpp"
#include "fracstefan/scalar_root.hpp"
#include "fracstefan/specfun.hpp"

namespace fracstefan {

/// Outcome of the strict data-admissibility inequality of a case.
struct Verdict {
    bool admissible = false;
    std::string condition; // "Cond-lc", "Cond-ck", or "" when no condition applies
    double value = std::numeric_limits<double>::quiet_NaN(); // evaluated ratio
    std::string detail;
};

struct SolveReport {
    explicit SolveReport(CaseId cs) : case_id(cs) {}

    CaseId case_id;
    double xi = 0;     // similarity root, sigma / (sqrt(mu) lambda)
    double lambda = 0; // sqrt(k / (rho c))
    Coefficients coefficients;
    double residual_eq1 = 0; // relative residual of the free-boundary equation
    double residual_eq2 = 0; // relative residual of the flux equation
    bool admissible = true;
    std::string reason;
};

namespace detail {

inline std::string ratio_detail(const char* expr, double value, const char* rel,
                                double bound) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%s = %.6g %s %g", expr, value, rel, bound);
    return buf;
}

inline double require_known(const ProblemData& data, const char* name, int case_id) {
    const auto& v = data.known.by_name(name);
    if (!v)
        throw MissingCoefficientError("case " + std::to_string(case_id) +
                                      " requires known coefficient '" + name + "'");
    return *v;
}

inline void require_exact_known_pair(CaseId cs, const ProblemData& data) {
    for (const char* name : cs.known_names())
        require_known(data, name, cs.id());
    if (data.known.count() != 2)
        throw DomainError("case " + std::to_string(cs.id()) +
                          " expects exactly its two known coefficients to be set");
}

} // namespace detail

/// Evaluates the case's strict data inequality. Cases 3 and 6 impose none.
/// Boundary equality counts as violated (it corresponds to a degenerate root).
inline Verdict admissibility(CaseId cs, const ProblemData& data) {
    data.validate();
    for (const char* name : cs.known_names())
        detail::require_known(data, name, cs.id());
    const double dT = data.delta_T();
    Verdict v;
    switch (cs.id()) {
    case 1:
    case 4:
    case 5: {
        const double k = detail::require_known(data, "k", cs.id());
        v.condition = "Cond-lc";
        v.value = k * dT / (data.sigma * data.q_0);
        v.admissible = v.value < 1.0;
        v.detail = detail::ratio_detail("k(T0-Tm)/(sigma q0)", v.value,
                                        v.admissible ? "<" : ">=", 1.0);
        return v;
    }
    case 2: {
        const double rho = detail::require_known(data, "rho", cs.id());
        const double l = detail::require_known(data, "l", cs.id());
        const double Gn = gamma(1.0 - data.alpha / 2.0);
        const double Gp = gamma(1.0 + data.alpha / 2.0);
        v.condition = "Cond-ck";
        v.value = data.nu * data.sigma * rho * l * Gp / (data.q_0 * Gn);
        v.admissible = v.value < 1.0;
        v.detail = detail::ratio_detail(
            "nu sigma rho l Gamma(1+a/2)/(q0 Gamma(1-a/2))", v.value,
            v.admissible ? "<" : ">=", 1.0);
        return v;
    }
    case 3:
    case 6:
        v.admissible = true;
        v.detail = "no data condition for this case";
        return v;
    }
    throw DomainError("admissibility: unreachable case id");
}

/// Relative residuals of the two-equation characterizing system evaluated at
/// (xi, coefficients): first the free-boundary equation
///   xi f(xi) / M(xi) = c dT Gamma(1-a/2) / (mu nu l Gamma(1+a/2)),
/// then the flux equation
///   f(xi) = sqrt(k rho c) dT / (sqrt(mu) q0 Gamma(1-a/2)).
inline std::pair<double, double> system_residuals(double xi, const Coefficients& co,
                                                  const ProblemData& data,
                                                  const SeriesPolicy& policy = {}) {
    data.validate();
    if (!(co.k > 0 && co.rho > 0 && co.c > 0 && co.l > 0))
        throw DomainError("system_residuals: all four coefficients must be > 0");
    if (!(xi > 0)) throw DomainError("system_residuals: xi must be > 0");
    const double alpha = data.alpha;
    const double dT = data.delta_T();
    const double Gn = gamma(1.0 - alpha / 2.0);
    const double Gp = gamma(1.0 + alpha / 2.0);
    const double f = f_alpha(xi, alpha, policy);
    const double m = mainardi(xi, alpha / 2.0, policy);

    const double lhs1 = xi * f / m;
    const double rhs1 = co.c * dT * Gn / (data.mu * data.nu * co.l * Gp);
    const double r1 = std::fabs(lhs1 - rhs1) / std::max(std::fabs(lhs1), std::fabs(rhs1));

    const double lhs2 = f;
    const double rhs2 = std::sqrt(co.k * co.rho * co.c) * dT /
                        (std::sqrt(data.mu) * data.q_0 * Gn);
    const double r2 = std::fabs(lhs2 - rhs2) / std::max(std::fabs(lhs2), std::fabs(rhs2));
    return {r1, r2};
}

/// Solves one of the six determination cases: admissibility, the case's
/// monotone xi-equation, the closed-form coefficient pair, and a residual
/// verification against the characterizing system (failure is an error).
inline SolveReport solve_case(CaseId cs, const ProblemData& data,
                              const SeriesPolicy& policy = {}) {
    data.validate();
    policy.validate();
    if (!(data.alpha < 1.0))
        throw DomainError("solve_case: alpha must lie in (0, 1); "
                          "the alpha = 1 problem belongs to the classical solver");
    detail::require_exact_known_pair(cs, data);

    const Verdict verdict = admissibility(cs, data);
    if (!verdict.admissible) throw InadmissibleError(verdict.condition, verdict.detail);

    const double alpha = data.alpha, mu = data.mu, nu = data.nu;
    const double dT = data.delta_T(), q0 = data.q_0, sigma = data.sigma;
    const double Gn = gamma(1.0 - alpha / 2.0);
    const double Gp = gamma(1.0 + alpha / 2.0);

    ProfileKind kind{};
    double target = 0;
    switch (cs.id()) {
    case 1:
    case 4:
    case 5: {
        const double k = detail::require_known(data, "k", cs.id());
        kind = ProfileKind::F;
        target = k * dT / (sigma * q0 * Gn);
        break;
    }
    case 2: {
        const double rho = detail::require_known(data, "rho", cs.id());
        const double l = detail::require_known(data, "l", cs.id());
        kind = ProfileKind::M;
        target = nu * sigma * rho * l * Gp / (q0 * Gn * Gn);
        break;
    }
    case 3: {
        const double rho = detail::require_known(data, "rho", cs.id());
        const double c = detail::require_known(data, "c", cs.id());
        kind = ProfileKind::G;
        target = sigma * rho * c * dT / (mu * q0 * Gn);
        break;
    }
    case 6: {
        const double c = detail::require_known(data, "c", cs.id());
        const double l = detail::require_known(data, "l", cs.id());
        kind = ProfileKind::H;
        target = c * dT * Gn / (mu * nu * l * Gp);
        break;
    }
    }

    const ProfileRange range = profile_range(kind, alpha);
    if (!(target > range.lower && target < range.upper))
        throw RangeError("solve_case: xi-equation target " + std::to_string(target) +
                         " outside the attainable profile range");

    // A root beyond the series domain bound is rejected, not extrapolated.
    const double bound = policy.domain_bound;
    const double at_bound = profile_eval(kind, bound, alpha, policy);
    const bool beyond = profile_decreasing(kind) ? target < at_bound : target > at_bound;
    if (beyond)
        throw DomainBoundExceededError(
            "solve_case: similarity root would exceed the domain bound " +
            std::to_string(bound));

    RootProblem rp;
    rp.func = [&](double x) { return profile_eval(kind, x, alpha, policy); };
    rp.direction =
        profile_decreasing(kind) ? Monotonicity::decreasing : Monotonicity::increasing;
    rp.target = target;
    rp.bracket_seed = 1.0;
    rp.tolerance = 1e-12;
    rp.x_max = bound;
    const double xi = solve_monotone(rp);

    const double f = f_alpha(xi, alpha, policy);
    const double m = mainardi(xi, alpha / 2.0, policy);
    const double flux_amp = q0 * std::sqrt(mu) * Gn * f / dT; // sqrt(k rho c)
    auto product_form = [&](double d1, double d2) {
        return q0 * q0 * Gn * Gn * Gn * f * m / (nu * d1 * d2 * dT * Gp * xi);
    };

    Coefficients co;
    switch (cs.id()) {
    case 1: {
        co.rho = *data.known.rho;
        co.k = *data.known.k;
        co.c = flux_amp * flux_amp / (co.rho * co.k);
        co.l = product_form(co.rho, co.k);
        break;
    }
    case 2: {
        co.rho = *data.known.rho;
        co.l = *data.known.l;
        co.c = mu * nu * co.l * Gp * xi * f / (dT * Gn * m);
        co.k = product_form(co.rho, co.l);
        break;
    }
    case 3: {
        co.rho = *data.known.rho;
        co.c = *data.known.c;
        co.k = flux_amp * flux_amp / (co.rho * co.c);
        co.l = co.c * dT * Gn * m / (mu * nu * Gp * xi * f);
        break;
    }
    case 4: {
        co.k = *data.known.k;
        co.l = *data.known.l;
        co.c = mu * nu * co.l * Gp * xi * f / (dT * Gn * m);
        co.rho = product_form(co.k, co.l);
        break;
    }
    case 5: {
        co.k = *data.known.k;
        co.c = *data.known.c;
        co.l = co.c * dT * Gn * m / (mu * nu * Gp * xi * f);
        co.rho = flux_amp * flux_amp / (co.k * co.c);
        break;
    }
    case 6: {
        co.c = *data.known.c;
        co.l = *data.known.l;
        co.rho = mu * q0 * Gn * xi * f / (sigma * co.c * dT);
        co.k = sigma * q0 * Gn * f / (dT * xi);
        break;
    }
    }

    if (!(co.k > 0 && co.rho > 0 && co.c > 0 && co.l > 0))
        throw ConvergenceError("solve_case: recovered coefficients not strictly positive");

    SolveReport report(cs);
    report.xi = xi;
    report.lambda = std::sqrt(co.k / (co.rho * co.c));
    report.coefficients = co;
    auto [r1, r2] = system_residuals(xi, co, data, policy);
    report.residual_eq1 = r1;
    report.residual_eq2 = r2;
    report.admissible = true;
    report.reason = verdict.detail;

    if (std::max(r1, r2) > 1e-8)
        throw ConvergenceError("solve_case: system residuals " + std::to_string(r1) +
                               ", " + std::to_string(r2) + " exceed 1e-8");
    if (std::fabs(xi * std::sqrt(mu) * report.lambda - sigma) > 1e-10 * sigma)
        throw ConvergenceError(
            "solve_case: xi sqrt(mu) lambda does not reproduce sigma to 1e-10");
    return report;
}

/// Builds data exactly consistent with the characterizing system for a fully
/// known coefficient set: the free-boundary equation fixes xi, then sigma and
/// q0 follow. Every case applied to such data must recover its hidden pair.
inline ProblemData make_consistent_data(const Coefficients& truth, double alpha,
                                        double mu = 1.0, double nu = 1.0,
                                        double T_m = 0.0, double T_0 = 1.0,
                                        const SeriesPolicy& policy = {}) {
    if (!(truth.k > 0 && truth.rho > 0 && truth.c > 0 && truth.l > 0))
        throw DomainError("make_consistent_data: coefficients must be > 0");
    const double dT = T_0 - T_m;
    const double Gn = gamma(1.0 - alpha / 2.0);
    const double Gp = gamma(1.0 + alpha / 2.0);
    const double lambda = std::sqrt(truth.k / (truth.rho * truth.c));

    RootProblem rp;
    rp.func = [&](double x) { return profile_eval(ProfileKind::H, x, alpha, policy); };
    rp.direction = Monotonicity::increasing;
    rp.target = truth.c * dT * Gn / (mu * nu * truth.l * Gp);
    rp.x_max = policy.domain_bound;
    if (rp.target > profile_eval(ProfileKind::H, policy.domain_bound, alpha, policy))
        throw DomainBoundExceededError(
            "make_consistent_data: similarity root for this coefficient set would "
            "exceed the domain bound " + std::to_string(policy.domain_bound));
    const double xi = solve_monotone(rp);

    ProblemData data;
    data.alpha = alpha;
    data.mu = mu;
    data.nu = nu;
    data.T_m = T_m;
    data.T_0 = T_0;
    data.sigma = xi * std::sqrt(mu) * lambda;
    data.q_0 = std::sqrt(truth.k * truth.rho * truth.c) * dT /
               (std::sqrt(mu) * f_alpha(xi, alpha, policy) * Gn);
    data.known.k = truth.k;
    data.known.rho = truth.rho;
    data.known.c = truth.c;
    data.known.l = truth.l;
    data.validate();
    return data;
}

/// Copy of `full` retaining only the case's known pair.
inline ProblemData hide_unknowns(CaseId cs, const ProblemData& full) {
    ProblemData data = full;
    data.known = {};
    for (const char* name : cs.known_names())
        data.known.by_name(name) = full.known.by_name(name);
    return data;
}

struct CaseRoundTrip {
    int case_id;
    double xi;
    double max_rel_coeff_err;
    double residual_eq1;
    double residual_eq2;
};

struct RoundTripResult {
    double alpha;
    std::vector<CaseRoundTrip> cases;
    double max_rel_err = 0;
};

/// Self-consistency check: constructs consistent data from `truth`, hides each
/// case's pair, re-solves, and reports the worst relative recovery error.
inline RoundTripResult roundtrip_all_cases(const Coefficients& truth, double alpha,
                                           double mu = 1.0, double nu = 1.0,
                                           double T_m = 0.0, double T_0 = 1.0,
                                           const SeriesPolicy& policy = {}) {
    const ProblemData full = make_consistent_data(truth, alpha, mu, nu, T_m, T_0, policy);
    RoundTripResult result;
    result.alpha = alpha;
    for (int id = 1; id <= 6; ++id) {
        const CaseId cs(id);
        const SolveReport rep = solve_case(cs, hide_unknowns(cs, full), policy);
        double worst = 0;
        for (const char* name : cs.unknown_names()) {
            const double got = coefficient_by_name(rep.coefficients, name);
            const double want = coefficient_by_name(truth, name);
            worst = std::max(worst, std::fabs(got - want) / std::fabs(want));
        }
        result.cases.push_back({id, rep.xi, worst, rep.residual_eq1, rep.residual_eq2});
        result.max_rel_err = std::max(result.max_rel_err, worst);
    }
    return result;
}

} // namespace fracstefan
