#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "jlogan/jacobi.hpp"
#include "reference_values.hpp"

using namespace jlogan;

namespace {

// Envelope of the oscillatory regime, used to set sensible absolute
// tolerances where phi itself is exponentially small.
double envelope(const JacobiParams& p, double t, double lam) {
    return std::sqrt(2.0 / kPi / (weight_delta(p, t) * spectral_weight(p, lam)));
}

}  // namespace

TEST_CASE("phi matches frozen references across all evaluation regimes") {
    for (std::size_t i = 0; i < jltest::kPhiRefCount; ++i) {
        const auto& r = jltest::kPhiRefs[i];
        JacobiParams p{r.alpha, r.beta};
        INFO("row " << i << ": alpha=" << r.alpha << " beta=" << r.beta << " t=" << r.t
                    << " lam=" << r.lam);
        double scale = std::max(std::fabs(r.phi), 1e-3);
        if (r.lam >= 0.5) scale = std::max(scale, envelope(p, r.t, r.lam));
        CHECK(phi(p, r.t, r.lam) == Catch::Approx(r.phi).margin(1e-9 * scale));

        double dscale = std::max(std::fabs(r.phi_dt), (1.0 + r.lam) * scale);
        CHECK(phi_dt(p, r.t, r.lam) == Catch::Approx(r.phi_dt).margin(1e-9 * dscale));
    }
}

TEST_CASE("phi degenerates to cos(lam t) at alpha = beta = -1/2") {
    JacobiParams p{-0.5, -0.5};
    const double pts[][2] = {{0.6, 2.0}, {0.6, 18.0}, {1.2, 9.0},
                             {3.0, 21.0}, {0.3, 80.0}, {2.5, 0.3}};
    for (auto& q : pts) {
        double t = q[0], lam = q[1];
        INFO("t=" << t << " lam=" << lam);
        CHECK(phi(p, t, lam) == Catch::Approx(std::cos(lam * t)).margin(2e-9));
    }
}

TEST_CASE("phi degenerates to sin(lam t)/(lam sinh t) at (1/2,-1/2)") {
    JacobiParams p{0.5, -0.5};
    const double pts[][2] = {{0.4, 3.0}, {1.5, 7.0}, {2.0, 30.0}, {0.5, 100.0}, {4.0, 0.2}};
    for (auto& q : pts) {
        double t = q[0], lam = q[1];
        INFO("t=" << t << " lam=" << lam);
        double expect = std::sin(lam * t) / (lam * std::sinh(t));
        CHECK(phi(p, t, lam) == Catch::Approx(expect).margin(2e-9));
    }
}

TEST_CASE("adjacent evaluation regimes agree on their overlaps") {
    SeriesConfig cfg{};
    {
        JacobiParams p{1.0, 0.0};
        double a = detail::phi_series_direct(p, 0.55, 3.0, cfg);
        double b = detail::phi_series_pfaff(p, 0.55, 3.0, cfg);
        CHECK(a == Catch::Approx(b).margin(1e-13));
    }
    {
        JacobiParams p{0.3, -0.2};
        double a = detail::phi_series_pfaff(p, 1.5, 8.0, cfg);
        double b = detail::phi_series_connection(p, 1.5, 8.0, cfg);
        CHECK(a == Catch::Approx(b).margin(1e-12));
    }
    {
        JacobiParams p{1.0, 0.0};
        const auto& ps = detail::phase_solution(p, 60.0, cfg);
        CHECK(ps.phi_at(0.6) ==
              Catch::Approx(detail::phi_series_connection(p, 0.6, 60.0, cfg)).margin(1e-10));
        CHECK(ps.phi_at(0.21) ==
              Catch::Approx(detail::phi_series_direct(p, 0.21, 60.0, cfg)).margin(1e-10));
    }
    {
        JacobiParams p{1.0, 0.0};
        double a = detail::phi_ode_continued(p, 2.1, 0.3, cfg, false);
        double b = detail::phi_series_pfaff(p, 2.1, 0.3, cfg);
        CHECK(a == Catch::Approx(b).margin(1e-12));
    }
}

TEST_CASE("phi is bounded by one and normalized at the origin") {
    const JacobiParams params[] = {{0.0, -0.5}, {1.0, 0.0}, {2.0, 1.0}, {0.3, -0.2}};
    for (const auto& p : params) {
        CHECK(phi(p, 0.0, 5.0) == 1.0);
        CHECK(phi_dt(p, 0.0, 5.0) == 0.0);
        for (double t : {0.2, 1.0, 4.0})
            for (double lam : {0.0, 1.4, 12.0, 120.0}) {
                INFO("alpha=" << p.alpha << " t=" << t << " lam=" << lam);
                CHECK(std::fabs(phi(p, t, lam)) <= 1.0 + 1e-12);
            }
    }
}

TEST_CASE("phi_dt is consistent with a finite difference of phi") {
    struct Case { double alpha, beta, t, lam; };
    for (const Case& c : {Case{1.0, 0.0, 1.3, 2.4}, Case{0.3, -0.2, 0.7, 5.0}}) {
        JacobiParams p{c.alpha, c.beta};
        double h = 1e-3;
        double fd = (-phi(p, c.t + 2 * h, c.lam) + 8.0 * phi(p, c.t + h, c.lam) -
                     8.0 * phi(p, c.t - h, c.lam) + phi(p, c.t - 2 * h, c.lam)) /
                    (12.0 * h);
        CHECK(phi_dt(p, c.t, c.lam) == Catch::Approx(fd).margin(1e-8));
    }
}

TEST_CASE("psi normalizes to one at lambda zero") {
    JacobiParams p{1.0, 0.0};
    CHECK(psi(p, 1.7, 0.0) == Catch::Approx(1.0).epsilon(1e-14));
    CHECK(psi(p, 0.0, 3.0) == Catch::Approx(1.0).epsilon(1e-14));
    // psi' vanishes at interior extrema of psi only; at t=0 it always does.
    CHECK(psi_dt(p, 0.0, 3.0) == 0.0);
}

TEST_CASE("spectral density matches frozen references") {
    for (std::size_t i = 0; i < jltest::kSWeightRefCount; ++i) {
        const auto& r = jltest::kSWeightRefs[i];
        INFO("alpha=" << r.alpha << " beta=" << r.beta << " lam=" << r.lam);
        CHECK(spectral_weight({r.alpha, r.beta}, r.lam) ==
              Catch::Approx(r.s).epsilon(5e-12));
    }
}

TEST_CASE("spectral density closed forms") {
    // alpha=1, beta=0: s(lam) = lam^3 / (64 tanh(pi lam / 2)).
    for (double lam : {0.3, 1.0, 5.0}) {
        double expect = lam * lam * lam / (64.0 * std::tanh(kPi * lam / 2.0));
        CHECK(spectral_weight({1.0, 0.0}, lam) == Catch::Approx(expect).epsilon(1e-12));
    }
    // Cosine case: s = 2/pi.
    for (double lam : {0.7, 3.0})
        CHECK(spectral_weight({-0.5, -0.5}, lam) == Catch::Approx(2.0 / kPi).epsilon(1e-12));
    // Three-dimensional case: s = lam^2 / (2 pi).
    for (double lam : {0.9, 6.0})
        CHECK(spectral_weight({0.5, -0.5}, lam) ==
              Catch::Approx(lam * lam / (2.0 * kPi)).epsilon(1e-12));
    CHECK(spectral_weight({1.0, 0.0}, 0.0) == 0.0);
}

TEST_CASE("asymptotic form is exact in the degenerate cases") {
    for (double t : {0.5, 2.0})
        for (double lam : {3.0, 40.0}) {
            CHECK(asymptotic_phi({-0.5, -0.5}, t, lam) ==
                  Catch::Approx(std::cos(lam * t)).epsilon(1e-12));
            double expect = std::sin(lam * t) / (lam * std::sinh(t));
            CHECK(asymptotic_phi({0.5, -0.5}, t, lam) == Catch::Approx(expect).margin(1e-12));
        }
}

TEST_CASE("lambda derivative matches frozen references") {
    for (std::size_t i = 0; i < jltest::kPhiDlamRefCount; ++i) {
        const auto& r = jltest::kPhiDlamRefs[i];
        CHECK(phi_dlambda({r.alpha, r.beta}, r.t, r.lam) ==
              Catch::Approx(r.dphi_dlam).epsilon(1e-8));
    }
    // phi is even in lambda, so the derivative vanishes at lambda = 0.
    CHECK(phi_dlambda({1.0, 0.0}, 1.0, 0.0) == Catch::Approx(0.0).margin(1e-10));
}

TEST_CASE("domain guards reject invalid arguments") {
    JacobiParams good{1.0, 0.0};
    CHECK_THROWS_AS(phi(good, -0.5, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(phi(good, 21.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(phi(good, 1.0, 2.0e4), std::invalid_argument);
    CHECK_THROWS_AS(phi({0.0, 0.5}, 1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(phi({-0.8, -0.9}, 1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(weight_delta(good, -1.0), std::invalid_argument);
}
