#pragma once

#include <cmath>
#include <limits>
#include <string>

#include <quadmath.h>

#include "fracstefan/errors.hpp"

namespace fracstefan {

/// Truncation policy for the Wright/Mainardi power series.
struct SeriesPolicy {
    double relative_term_cutoff = 1e-16;
    int max_terms = 500;
    double domain_bound = 8.0;

    SeriesPolicy() = default;

    SeriesPolicy(double cutoff, int terms, double bound)
        : relative_term_cutoff(cutoff), max_terms(terms), domain_bound(bound) {
        validate();
    }

    void validate() const {
        if (!(relative_term_cutoff > 0.0))
            throw DomainError("SeriesPolicy: relative_term_cutoff must be > 0");
        if (max_terms < 50)
            throw DomainError("SeriesPolicy: max_terms must be >= 50");
        if (!(domain_bound > 0.0))
            throw DomainError("SeriesPolicy: domain_bound must be > 0");
    }
};

/// Arguments of W(z, a, b). The second parameter must lie strictly in (-1, 0);
/// construction rejects anything else.
class WrightArgs {
public:
    WrightArgs(double z, double a, double b) : z_(z), a_(a), b_(b) {
        if (!std::isfinite(z) || !std::isfinite(a) || !std::isfinite(b))
            throw DomainError("WrightArgs: arguments must be finite");
        if (!(a > -1.0 && a < 0.0))
            throw DomainError("WrightArgs: parameter a must lie in (-1, 0), got " +
                              std::to_string(a));
    }

    double z() const { return z_; }
    double a() const { return a_; }
    double b() const { return b_; }

private:
    double z_, a_, b_;
};

namespace detail {

inline double fs_abs(double x) { return std::fabs(x); }
inline double fs_floor(double x) { return std::floor(x); }
inline double fs_nearbyint(double x) { return std::nearbyint(x); }
inline double fs_sin(double x) { return std::sin(x); }
inline double fs_tgamma(double x) { return std::tgamma(x); }
inline bool fs_finite(double x) { return std::isfinite(x); }

inline __float128 fs_abs(__float128 x) { return fabsq(x); }
inline __float128 fs_floor(__float128 x) { return floorq(x); }
inline __float128 fs_nearbyint(__float128 x) { return nearbyintq(x); }
inline __float128 fs_sin(__float128 x) { return sinq(x); }
inline __float128 fs_tgamma(__float128 x) { return tgammaq(x); }
inline bool fs_finite(__float128 x) { return finiteq(x) != 0; }

template <class Real>
inline Real pi_value();
template <>
inline double pi_value<double>() { return 3.14159265358979323846264338327950288; }
template <>
inline __float128 pi_value<__float128>() { return M_PIq; }

// sin(pi*x) with exact zeros at integers: reduce to r = x - round(x), |r| <= 1/2.
template <class Real>
Real sinpi(Real x) {
    const Real n = fs_nearbyint(x);
    const Real r = x - n;
    if (r == Real(0) && x == fs_floor(x)) return Real(0);
    Real s = fs_sin(pi_value<Real>() * r);
    // sin(pi(n+r)) = (-1)^n sin(pi r)
    const long long ni = static_cast<long long>(n);
    if (ni % 2 != 0) s = -s;
    return s;
}

// 1/Gamma as an entire function: exactly zero at 0, -1, -2, ...; positive
// arguments go through tgamma, the rest through the reflection formula.
template <class Real>
Real rgamma_entire(Real x) {
    if (x > Real(0.5)) return Real(1) / fs_tgamma(x);
    if (x == fs_floor(x)) return Real(0);
    return sinpi(x) * fs_tgamma(Real(1) - x) / pi_value<Real>();
}

template <class Real>
struct SeriesOutcome {
    Real value{};
    Real abs_sum{};
    int terms = 0;
    bool converged = false;
    bool finite = true;
};

// Partial sum of W(z,a,b) = sum z^k / (k! Gamma(ak+b)) with Neumaier
// compensation. Stops once |term| <= cutoff*|sum| holds for 3 consecutive
// terms after the magnitudes have started to decay; for |z| > 1 the early
// terms grow before the factorial takes over, so the cutoff is not tested
// until past the peak.
template <class Real>
SeriesOutcome<Real> wright_series(Real z, Real a, Real b, const SeriesPolicy& policy) {
    const Real cutoff = Real(policy.relative_term_cutoff);
    SeriesOutcome<Real> out;
    Real sum = 0, comp = 0, abs_sum = 0;
    Real pow_term = 1; // z^k / k!
    Real prev_mag = -1;
    bool decaying = false;
    int streak = 0;
    for (int k = 0; k < policy.max_terms; ++k) {
        const Real term = pow_term * rgamma_entire(a * Real(k) + b);
        if (!fs_finite(term)) {
            out.finite = false;
            out.terms = k;
            return out;
        }
        abs_sum += fs_abs(term);
        const Real t = sum + term;
        if (fs_abs(sum) >= fs_abs(term))
            comp += (sum - t) + term;
        else
            comp += (term - t) + sum;
        sum = t;

        const Real mag = fs_abs(term);
        if (prev_mag >= Real(0) && mag < prev_mag) decaying = true;
        prev_mag = mag;
        if (decaying && mag <= cutoff * fs_abs(sum + comp)) {
            if (++streak >= 3) {
                out.converged = true;
                out.terms = k + 1;
                break;
            }
        } else {
            streak = 0;
        }
        pow_term *= z / Real(k + 1);
    }
    out.value = sum + comp;
    out.abs_sum = abs_sum;
    if (out.terms == 0) out.terms = policy.max_terms;
    return out;
}

// For |z| of a few units the alternating series cancels heavily: the result
// is only as accurate as abs_sum/|value| times the per-term rounding. Sums
// conditioned worse than this bound are redone in binary128.
inline constexpr double kMaxDoubleCondition = 256.0;

} // namespace detail

/// Gamma function, positive arguments only.
inline double gamma(double x) {
    if (!(x > 0.0)) throw DomainError("gamma: argument must be > 0");
    return std::tgamma(x);
}

/// 1/Gamma on the whole real line; exactly 0 at the poles 0, -1, -2, ...
inline double reciprocal_gamma(double x) {
    return detail::rgamma_entire<double>(x);
}

/// Error function (odd, erf(x) -> 1 as x -> +inf).
inline double erf(double x) { return std::erf(x); }

/// Wright function W(z, a, b) for a in (-1, 0), |z| within the policy bound.
inline double wright(const WrightArgs& args, const SeriesPolicy& policy = {}) {
    policy.validate();
    if (std::fabs(args.z()) > policy.domain_bound)
        throw DomainError("wright: |z| = " + std::to_string(std::fabs(args.z())) +
                          " exceeds domain bound " + std::to_string(policy.domain_bound));

    auto fast = detail::wright_series<double>(args.z(), args.a(), args.b(), policy);
    if (fast.converged && fast.finite) {
        const double mag = std::fabs(fast.value);
        if (mag > 0.0 && fast.abs_sum <= detail::kMaxDoubleCondition * mag)
            return fast.value;
    }

    auto precise = detail::wright_series<__float128>(
        static_cast<__float128>(args.z()), static_cast<__float128>(args.a()),
        static_cast<__float128>(args.b()), policy);
    if (!precise.finite)
        throw DomainError("wright: series term overflowed before convergence");
    if (!precise.converged)
        throw ConvergenceError("wright: stopping rule not met within " +
                               std::to_string(policy.max_terms) + " terms");
    return static_cast<double>(precise.value);
}

/// Mainardi function M_nu(x) = W(-x, -nu, 1-nu) for nu in (0, 1), x >= 0.
inline double mainardi(double x, double nu, const SeriesPolicy& policy = {}) {
    if (!(nu > 0.0 && nu < 1.0))
        throw DomainError("mainardi: nu must lie in (0, 1)");
    if (!(x >= 0.0)) throw DomainError("mainardi: x must be >= 0");
    return wright(WrightArgs(-x, -nu, 1.0 - nu), policy);
}

/// Central-difference probe of d/dz W(z,a,b) = W(z,a,a+b); returns the
/// absolute mismatch, which decays as h^2.
inline double wright_derivative_check(const WrightArgs& args, double h,
                                      const SeriesPolicy& policy = {}) {
    if (!(h > 0.0)) throw DomainError("wright_derivative_check: h must be > 0");
    const double fwd = wright(WrightArgs(args.z() + h, args.a(), args.b()), policy);
    const double bwd = wright(WrightArgs(args.z() - h, args.a(), args.b()), policy);
    const double series = wright(WrightArgs(args.z(), args.a(), args.a() + args.b()), policy);
    return std::fabs((fwd - bwd) / (2.0 * h) - series);
}

/// Caputo derivative of t^p:  Gamma(p+1)/Gamma(p-alpha+1) * t^(p-alpha).
/// Goes through 1/Gamma so arguments landing on Gamma poles yield 0 rather
/// than an overflow.
inline double caputo_power(double p, double alpha, double t) {
    if (!(p > 0.0)) throw DomainError("caputo_power: p must be > 0");
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw DomainError("caputo_power: alpha must lie in (0, 1]");
    if (!(t > 0.0)) throw DomainError("caputo_power: t must be > 0");
    return gamma(p + 1.0) * reciprocal_gamma(p - alpha + 1.0) * std::pow(t, p - alpha);
}

} // namespace fracstefan
