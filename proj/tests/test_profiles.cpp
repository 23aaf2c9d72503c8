#include <catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "fracstefan/profiles.hpp"
#include "oracle.hpp"

using namespace fracstefan;

namespace {

std::vector<double> log_grid(double lo, double hi, int n) {
    std::vector<double> g;
    g.reserve(n);
    const double ratio = std::log(hi / lo) / (n - 1);
    for (int i = 0; i < n; ++i) g.push_back(lo * std::exp(ratio * i));
    return g;
}

} // namespace

TEST_CASE("f_alpha: endpoints and oracle agreement", "[profiles]") {
    CHECK(f_alpha(1e-8, 0.5) < 1e-7);
    CHECK(f_alpha(1e-8, 0.5) > 0.0);
    // alpha -> 1 limit target: f(x) -> erf(x/2)
    CHECK(std::fabs(f_alpha(2.0, 0.999) - 0.84270079294971487) < 5e-3);
    const double f1 = f_alpha(1.0, 0.5);
    const auto want = 1 - oracle::wright_ref(-1, oracle::mp("-0.25"), 1);
    CHECK(oracle::rel_err(f1, want) < 1e-11);
    CHECK(std::fabs(f1 - 0.57857467196620214) < 1e-12);
}

TEST_CASE("f_alpha: domain checks", "[profiles]") {
    CHECK_THROWS_AS(f_alpha(0.0, 0.5), DomainError);
    CHECK_THROWS_AS(f_alpha(-1.0, 0.5), DomainError);
    CHECK_THROWS_AS(f_alpha(9.0, 0.5), DomainError);
    CHECK_THROWS_AS(f_alpha(1.0, 1.0), DomainError);
    CHECK_THROWS_AS(f_alpha(1.0, 0.0), DomainError);
}

TEST_CASE("profile limits near zero", "[profiles]") {
    for (double alpha : {0.1, 0.3, 0.5, 0.7, 0.9}) {
        const double gn_inv = reciprocal_gamma(1.0 - alpha / 2.0);
        CHECK(std::fabs(profile_eval(ProfileKind::F, 1e-6, alpha) - gn_inv) < 1e-5);
        CHECK(profile_eval(ProfileKind::G, 1e-6, alpha) < 1e-5);
        CHECK(profile_eval(ProfileKind::H, 1e-6, alpha) <
              1e-5 * fracstefan::gamma(1.0 - alpha / 2.0));
    }
    // near the classical limit F(0+) approaches 1/sqrt(pi); the gap at
    // alpha = 0.999 is psi(1/2)/Gamma(1/2) * 5e-4, about 5.5e-4
    CHECK(std::fabs(profile_eval(ProfileKind::F, 1e-6, 0.999) - 0.56418958354775629) <
          1e-3);
}

TEST_CASE("H composes the two series, checked against the oracle", "[profiles]") {
    const double h = profile_eval(ProfileKind::H, 1.0, 0.5);
    const auto want = (1 - oracle::wright_ref(-1, oracle::mp("-0.25"), 1)) /
                      oracle::mainardi_ref(1, oracle::mp("0.25"));
    CHECK(oracle::rel_err(h, want) < 1e-10);
    CHECK(std::fabs(h - 1.5093170287841600) < 1e-11);
}

TEST_CASE("profile_range", "[profiles]") {
    const auto fr = profile_range(ProfileKind::F, 0.5);
    CHECK(fr.lower == 0.0);
    CHECK(std::fabs(fr.upper - 0.81604893909826298) < 1e-13);
    for (double alpha : {0.2, 0.5, 0.8}) {
        CHECK(std::isinf(profile_range(ProfileKind::G, alpha).upper));
        CHECK(std::isinf(profile_range(ProfileKind::H, alpha).upper));
        // upper end of M's range is its value at the origin
        CHECK(std::fabs(profile_range(ProfileKind::M, alpha).upper -
                        mainardi(0.0, alpha / 2.0)) < 1e-10);
    }
    CHECK(profile_range(ProfileKind::f, 0.5).upper == 1.0);
}

TEST_CASE("monotonicity of all five profiles on a log grid", "[profiles]") {
    const auto grid = log_grid(1e-4, 8.0, 500);
    for (double alpha : {0.1, 0.3, 0.5, 0.7, 0.9}) {
        double prevF = std::numeric_limits<double>::infinity();
        double prevM = std::numeric_limits<double>::infinity();
        double prevG = -1, prevH = -1, prevf = -1;
        for (double x : grid) {
            const double f = profile_eval(ProfileKind::f, x, alpha);
            const double m = profile_eval(ProfileKind::M, x, alpha);
            const double F = f / x, G = x * f, H = x * f / m;
            CHECK(F < prevF);
            CHECK(m < prevM);
            CHECK(G > prevG);
            CHECK(H > prevH);
            CHECK(f > prevf);
            prevF = F;
            prevM = m;
            prevG = G;
            prevH = H;
            prevf = f;
        }
    }
}

TEST_CASE("algebraic identities between the profiles", "[profiles]") {
    const auto grid = log_grid(2e-3, 8.0, 50);
    for (double alpha : {0.3, 0.7}) {
        for (double x : grid) {
            const double F = profile_eval(ProfileKind::F, x, alpha);
            const double G = profile_eval(ProfileKind::G, x, alpha);
            const double H = profile_eval(ProfileKind::H, x, alpha);
            const double M = profile_eval(ProfileKind::M, x, alpha);
            CHECK(std::fabs(G - x * x * F) <= 1e-13 * G);
            CHECK(std::fabs(H - G / M) <= 1e-13 * H);
        }
    }
}
