#pragma once

#include <cmath>
#include <limits>
#include <string>

#include "fracstefan/errors.hpp"
#include "fracstefan/specfun.hpp"

namespace fracstefan {

/// The scalar profiles that drive every similarity-root equation:
///   f: x -> 1 - W(-x, -alpha/2, 1)        increasing, (0, 1)
///   F: x -> f(x)/x                        decreasing, (0, 1/Gamma(1-alpha/2))
///   G: x -> x f(x)                        increasing, (0, +inf)
///   H: x -> x f(x) / M_{alpha/2}(x)       increasing, (0, +inf)
///   M: x -> M_{alpha/2}(x)                decreasing, (0, 1/Gamma(1-alpha/2))
enum class ProfileKind { F, G, H, M, f };

namespace detail {

inline void check_profile_args(double x, double alpha, const SeriesPolicy& policy) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw DomainError("profiles: alpha must lie in (0, 1)");
    if (!(x > 0.0)) throw DomainError("profiles: x must be > 0");
    if (x > policy.domain_bound)
        throw DomainError("profiles: x = " + std::to_string(x) +
                          " exceeds domain bound " + std::to_string(policy.domain_bound));
}

} // namespace detail

/// f_alpha(x) = 1 - W(-x, -alpha/2, 1). Below x = 1e-3 the two leading series
/// terms x/Gamma(1-alpha/2) - x^2/(2 Gamma(1-alpha)) are used instead of the
/// cancellation-prone 1 - W form.
inline double f_alpha(double x, double alpha, const SeriesPolicy& policy = {}) {
    detail::check_profile_args(x, alpha, policy);
    if (x < 1e-3) {
        return x * reciprocal_gamma(1.0 - alpha / 2.0) -
               0.5 * x * x * reciprocal_gamma(1.0 - alpha);
    }
    return 1.0 - wright(WrightArgs(-x, -alpha / 2.0, 1.0), policy);
}

inline double profile_eval(ProfileKind kind, double x, double alpha,
                           const SeriesPolicy& policy = {}) {
    detail::check_profile_args(x, alpha, policy);
    switch (kind) {
    case ProfileKind::f:
        return f_alpha(x, alpha, policy);
    case ProfileKind::F:
        return f_alpha(x, alpha, policy) / x;
    case ProfileKind::G:
        return x * f_alpha(x, alpha, policy);
    case ProfileKind::H:
        return x * f_alpha(x, alpha, policy) / mainardi(x, alpha / 2.0, policy);
    case ProfileKind::M:
        return mainardi(x, alpha / 2.0, policy);
    }
    throw DomainError("profile_eval: unknown profile kind");
}

struct ProfileRange {
    double lower; // open
    double upper; // open; +inf for G and H
};

/// Open interval of attainable values on (0, +inf) (limits from the shape
/// guarantees of the profiles).
inline ProfileRange profile_range(ProfileKind kind, double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw DomainError("profile_range: alpha must lie in (0, 1)");
    const double inf = std::numeric_limits<double>::infinity();
    switch (kind) {
    case ProfileKind::f:
        return {0.0, 1.0};
    case ProfileKind::F:
    case ProfileKind::M:
        return {0.0, reciprocal_gamma(1.0 - alpha / 2.0)};
    case ProfileKind::G:
    case ProfileKind::H:
        return {0.0, inf};
    }
    throw DomainError("profile_range: unknown profile kind");
}

/// True if the kind decreases in x (F, M); false for the increasing ones.
inline bool profile_decreasing(ProfileKind kind) {
    return kind == ProfileKind::F || kind == ProfileKind::M;
}

} // namespace fracstefan
