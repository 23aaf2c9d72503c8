#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>

#include "fracstefan/errors.hpp"

namespace fracstefan {

enum class Monotonicity { increasing, decreasing };

/// A monotone scalar equation func(x) = target on (0, x_max). Solved by
/// geometric bracketing from bracket_seed followed by plain bisection: no
/// derivative steps, so identical inputs give bit-identical roots.
struct RootProblem {
    std::function<double(double)> func;
    Monotonicity direction = Monotonicity::increasing;
    double target = 0.0;
    double bracket_seed = 1.0;
    double tolerance = 1e-12; // relative, on x
    double x_max = std::numeric_limits<double>::infinity(); // search cap
};

inline double solve_monotone(const RootProblem& problem) {
    if (!problem.func) throw DomainError("solve_monotone: empty function");
    if (!(problem.tolerance > 0.0))
        throw DomainError("solve_monotone: tolerance must be > 0");
    if (!(problem.bracket_seed > 0.0))
        throw DomainError("solve_monotone: bracket_seed must be > 0");
    if (!std::isfinite(problem.target))
        throw RangeError("solve_monotone: target must be finite");

    const double sign = problem.direction == Monotonicity::increasing ? 1.0 : -1.0;
    auto g = [&](double x) {
        const double v = problem.func(x);
        if (std::isnan(v)) throw DomainError("solve_monotone: function returned NaN");
        return sign * (v - problem.target);
    };

    constexpr int kMaxExpansions = 60;
    double lo = std::min(problem.bracket_seed, problem.x_max);
    double hi = lo;
    double glo = g(lo);
    if (glo == 0.0) return lo;

    if (glo < 0.0) {
        // root above the seed
        double ghi = glo;
        for (int i = 0; i < kMaxExpansions && ghi < 0.0 && hi < problem.x_max; ++i) {
            hi = std::min(hi * 2.0, problem.x_max);
            ghi = g(hi);
        }
        if (ghi < 0.0)
            throw BracketError("solve_monotone: no sign change up to x = " +
                               std::to_string(hi));
    } else {
        // root below the seed
        for (int i = 0; i < kMaxExpansions && glo > 0.0; ++i) {
            lo = lo / 2.0;
            glo = g(lo);
        }
        if (glo > 0.0)
            throw BracketError("solve_monotone: no sign change down to x = " +
                               std::to_string(lo));
    }

    constexpr int kMaxBisections = 200;
    for (int i = 0; i < kMaxBisections; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break; // interval at floating-point resolution
        const double gm = g(mid);
        if (gm == 0.0) {
            lo = hi = mid;
            break;
        }
        if (gm < 0.0)
            lo = mid;
        else
            hi = mid;
        if (hi - lo <= problem.tolerance * mid) break;
    }

    const double root = 0.5 * (lo + hi);
    const double residual = std::fabs(problem.func(root) - problem.target);
    if (residual > 1e-10 * std::max(1.0, std::fabs(problem.target)))
        throw ConvergenceError("solve_monotone: residual " + std::to_string(residual) +
                               " too large at root " + std::to_string(root));
    return root;
}

} // namespace fracstefan
