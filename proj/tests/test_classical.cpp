#include <catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "fracstefan/classical.hpp"
#include "fracstefan/specfun.hpp"

using namespace fracstefan;

namespace {

const double kSqrtPi = 1.7724538509055160273;

ProblemData classical_data() {
    ProblemData d;
    d.alpha = 1.0;
    d.T_m = 0.0;
    d.T_0 = 1.0;
    d.q_0 = 2.0;
    d.sigma = 2.0; // sigma* = 1
    return d;
}

} // namespace

TEST_CASE("solve_classical case 2: analytic inversion of exp(x^2)", "[classical]") {
    ProblemData d = classical_data();
    d.known.rho = 1.0;
    d.known.l = 1.0; // q0/(rho l sigma*) = 2
    const ClassicalSolution sol = solve_classical(CaseId(2), d);
    CHECK(sol.sigma_star == 1.0);
    CHECK(std::fabs(sol.xi_star - 0.83255461115769776) < 1e-12);
    // recovered pair satisfies the closed forms
    const double c_want = d.q_0 * kSqrtPi * sol.xi_star * std::erf(sol.xi_star) /
                          (1.0 * sol.sigma_star * d.delta_T());
    const double k_want =
        sol.sigma_star * d.q_0 * kSqrtPi * std::erf(sol.xi_star) / (d.delta_T() * sol.xi_star);
    CHECK(std::fabs(sol.coefficients.c - c_want) < 1e-13 * c_want);
    CHECK(std::fabs(sol.coefficients.k - k_want) < 1e-13 * k_want);
    auto [r1, r2] = classical_system_residuals(sol, d);
    CHECK(r1 <= 1e-10);
    CHECK(r2 <= 1e-10);
}

TEST_CASE("solve_classical case 1: erf(x)/x target 0.5", "[classical]") {
    ProblemData d = classical_data();
    d.known.rho = 1.0;
    // choose k so that k dT/(q0 sigma* sqrt(pi)) = 0.5
    d.known.k = 0.5 * d.q_0 * 1.0 * kSqrtPi / d.delta_T();
    const ClassicalSolution sol = solve_classical(CaseId(1), d);
    CHECK(std::fabs(sol.xi_star - 1.9902328376288838) < 1e-10);
    auto [r1, r2] = classical_system_residuals(sol, d);
    CHECK(r1 <= 1e-10);
    CHECK(r2 <= 1e-10);
}

TEST_CASE("solve_classical: every case satisfies the limiting system", "[classical]") {
    for (int id = 1; id <= 6; ++id) {
        ProblemData d = classical_data();
        d.q_0 = 3.0;
        for (const char* name : CaseId(id).known_names())
            d.known.by_name(name) = (std::string_view(name) == "k") ? 1.2 : 0.9;
        const ClassicalSolution sol = solve_classical(CaseId(id), d);
        auto [r1, r2] = classical_system_residuals(sol, d);
        CHECK(r1 <= 1e-10);
        CHECK(r2 <= 1e-10);
        CHECK(sol.coefficients.k > 0);
        CHECK(sol.coefficients.rho > 0);
        CHECK(sol.coefficients.c > 0);
        CHECK(sol.coefficients.l > 0);
    }
}

TEST_CASE("solve_classical case 6: any positive target has a unique root", "[classical]") {
    // x erf(x) exp(x^2) sweeps (0, inf), so the data condition column is empty
    for (double scale : {1e-3, 1.0, 50.0, 2000.0}) {
        ProblemData d = classical_data();
        d.known.c = scale; // target = c dT / (l sqrt(pi))
        d.known.l = 1.0;
        const ClassicalSolution sol = solve_classical(CaseId(6), d);
        const double lhs = sol.xi_star * std::erf(sol.xi_star) *
                           std::exp(sol.xi_star * sol.xi_star);
        const double target = scale * d.delta_T() / (1.0 * kSqrtPi);
        CHECK(std::fabs(lhs - target) <= 1e-10 * std::max(1.0, target));
    }
}

TEST_CASE("classical admissibility is strict", "[classical]") {
    ProblemData d = classical_data();
    d.known.rho = 1.0;
    d.known.l = 2.0; // q0/(rho l sigma*) = 1 exactly
    const Verdict v = classical_admissibility(CaseId(2), d);
    CHECK_FALSE(v.admissible);
    CHECK(v.condition == "Cond-ckClassic");
    CHECK_THROWS_AS(solve_classical(CaseId(2), d), InadmissibleError);

    d.known.l = 0.5;
    CHECK(classical_admissibility(CaseId(2), d).admissible);

    ProblemData f = classical_data();
    f.known.k = 4.0; // k dT/(2 sigma* q0) = 1 exactly
    f.known.rho = 1.0;
    CHECK_FALSE(classical_admissibility(CaseId(1), f).admissible);
    CHECK_THROWS_AS(solve_classical(CaseId(1), f), InadmissibleError);
}

TEST_CASE("fractional profiles reach their erf/gaussian limits", "[classical]") {
    // the a = -1/2 series evaluates the alpha = 1 member of the family exactly
    for (double x = 0.0; x <= 6.0; x += 0.25) {
        const double f = x > 0 ? 1.0 - wright(WrightArgs(-x, -0.5, 1.0)) : 0.0;
        CHECK(std::fabs(f - std::erf(x / 2.0)) <= 1e-10);
        const double m = mainardi(x, 0.5);
        CHECK(std::fabs(m - std::exp(-x * x / 4.0) / kSqrtPi) <= 1e-10);
    }
}

TEST_CASE("convergence_probe: deviations shrink towards alpha = 1", "[classical]") {
    const Coefficients truth{1.5, 0.8, 2.0, 1.2};
    auto family = [&](double alpha) { return make_consistent_data(truth, alpha); };
    const std::vector<double> alphas = {0.9, 0.99, 0.999};

    for (int id = 1; id <= 6; ++id) {
        const auto rows = convergence_probe(CaseId(id), family, alphas, 1e-2);
        REQUIRE(rows.size() == 3);
        // trend is reported; on this family it is monotone
        CHECK(rows[1].xi_abs_dev < rows[0].xi_abs_dev);
        CHECK(rows[2].xi_abs_dev < rows[1].xi_abs_dev);
        CHECK(rows[2].xi_abs_dev <= 1e-2 * 2.0 * rows[2].xi_star);
        CHECK(rows[2].coeff_rel_dev[0] <= 1e-2);
        CHECK(rows[2].coeff_rel_dev[1] <= 1e-2);
    }
}

TEST_CASE("convergence_probe: substituting 2 xi_star into the fractional equation",
          "[classical]") {
    const Coefficients truth{1.5, 0.8, 2.0, 1.2};
    const double alpha = 0.999;
    const ProblemData full = make_consistent_data(truth, alpha);
    const ProblemData d = hide_unknowns(CaseId(1), full);
    const ClassicalSolution limit = solve_classical(CaseId(1), d);
    const double Gn = fracstefan::gamma(1.0 - alpha / 2.0);
    const double lhs = profile_eval(ProfileKind::F, 2.0 * limit.xi_star, alpha);
    const double rhs = *d.known.k * d.delta_T() / (d.sigma * d.q_0 * Gn);
    CHECK(std::fabs(lhs - rhs) <= 1e-2 * rhs);
}

TEST_CASE("convergence_probe: a failing alpha aborts with context", "[classical]") {
    const Coefficients truth{1.5, 0.8, 2.0, 1.2};
    auto family = [&](double alpha) {
        ProblemData d = make_consistent_data(truth, 0.5);
        d.alpha = alpha; // fixed data, varying memory order
        return d;
    };
    const std::vector<double> alphas = {0.5};
    // tolerance nobody can meet at alpha = 0.5
    CHECK_THROWS_AS(convergence_probe(CaseId(1), family, alphas, 1e-9),
                    ConvergenceError);
}
