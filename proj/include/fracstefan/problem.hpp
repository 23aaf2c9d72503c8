#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>

#include "fracstefan/errors.hpp"

namespace fracstefan {

/// Complete set of the four thermal coefficients of the phase-change material.
struct Coefficients {
    double k = 0;   // thermal conductivity        [W m^-1 C^-1]
    double rho = 0; // mass density                [kg m^-3]
    double c = 0;   // specific heat               [J kg^-1 C^-1]
    double l = 0;   // latent heat per unit mass   [J kg^-1]
};

inline double coefficient_by_name(const Coefficients& co, std::string_view name) {
    if (name == "k") return co.k;
    if (name == "rho") return co.rho;
    if (name == "c") return co.c;
    if (name == "l") return co.l;
    throw DomainError("unknown coefficient name: " + std::string(name));
}

/// The subset of coefficients known a priori. An inverse solve requires
/// exactly the two the selected case does not determine.
struct KnownCoefficients {
    std::optional<double> k, rho, c, l;

    const std::optional<double>& by_name(std::string_view name) const {
        if (name == "k") return k;
        if (name == "rho") return rho;
        if (name == "c") return c;
        if (name == "l") return l;
        throw DomainError("unknown coefficient name: " + std::string(name));
    }

    std::optional<double>& by_name(std::string_view name) {
        return const_cast<std::optional<double>&>(
            static_cast<const KnownCoefficients&>(*this).by_name(name));
    }

    int count() const {
        return int(k.has_value()) + int(rho.has_value()) + int(c.has_value()) +
               int(l.has_value());
    }
};

/// Which pair of coefficients is being determined:
///   1: (l, c)   2: (c, k)   3: (l, k)   4: (c, rho)   5: (l, rho)   6: (rho, k)
class CaseId {
public:
    explicit CaseId(int id) : id_(id) {
        if (id < 1 || id > 6)
            throw DomainError("CaseId: id must be in 1..6, got " + std::to_string(id));
    }

    int id() const { return id_; }

    std::array<const char*, 2> unknown_names() const {
        static constexpr std::array<std::array<const char*, 2>, 6> table{{
            {"l", "c"}, {"c", "k"}, {"l", "k"}, {"c", "rho"}, {"l", "rho"}, {"rho", "k"}}};
        return table[id_ - 1];
    }

    std::array<const char*, 2> known_names() const {
        static constexpr std::array<std::array<const char*, 2>, 6> table{{
            {"rho", "k"}, {"rho", "l"}, {"rho", "c"}, {"k", "l"}, {"k", "c"}, {"c", "l"}}};
        return table[id_ - 1];
    }

    friend bool operator==(const CaseId& a, const CaseId& b) { return a.id_ == b.id_; }

private:
    int id_;
};

/// All known scalars of the inverse problem. Units follow the SI-based
/// convention of the model; the numerics are unit-agnostic.
struct ProblemData {
    double alpha = 0.5; // memory-retention order, (0, 1]
    double mu = 1.0;    // dimensional-coherence factor of the diffusion equation, (0, 1]
    double nu = 1.0;    // dimensional-coherence factor of the free-boundary condition, (0, 1]
    double T_m = 0.0;   // phase-change temperature [C]
    double T_0 = 1.0;   // fixed-face temperature [C], > T_m
    double q_0 = 1.0;   // heat-flux coefficient at the fixed face, > 0
    double sigma = 1.0; // front coefficient in s(t) = sigma t^(alpha/2), > 0
    KnownCoefficients known;

    double delta_T() const { return T_0 - T_m; }

    void validate() const {
        auto finite = [](double v) { return std::isfinite(v); };
        if (!finite(alpha) || !(alpha > 0.0 && alpha <= 1.0))
            throw DomainError("ProblemData: alpha must lie in (0, 1]");
        if (!finite(mu) || !(mu > 0.0 && mu <= 1.0))
            throw DomainError("ProblemData: mu must lie in (0, 1]");
        if (!finite(nu) || !(nu > 0.0 && nu <= 1.0))
            throw DomainError("ProblemData: nu must lie in (0, 1]");
        if (!finite(T_m) || !finite(T_0) || !(T_0 > T_m))
            throw DomainError("ProblemData: requires T_0 > T_m");
        if (!finite(q_0) || !(q_0 > 0.0))
            throw DomainError("ProblemData: q_0 must be > 0");
        if (!finite(sigma) || !(sigma > 0.0))
            throw DomainError("ProblemData: sigma must be > 0");
        for (const char* name : {"k", "rho", "c", "l"}) {
            const auto& v = known.by_name(name);
            if (v && !(finite(*v) && *v > 0.0))
                throw DomainError(std::string("ProblemData: known coefficient ") + name +
                                  " must be finite and > 0");
        }
    }
};

} // namespace fracstefan
