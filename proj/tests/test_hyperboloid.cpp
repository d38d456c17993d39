#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <stdexcept>

#include "jlogan/hyperboloid.hpp"

namespace jltest {
namespace {

constexpr double kPi = 3.14159265358979323846;

TEST_CASE("dimension map produces the half-integer parameter family") {
    auto h2 = jlogan::params_for_dim(2);
    CHECK(h2.params.alpha == 0.0);
    CHECK(h2.params.beta == -0.5);
    auto h3 = jlogan::params_for_dim(3);
    CHECK(h3.params.alpha == 0.5);
    CHECK(h3.params.beta == -0.5);
    auto h7 = jlogan::params_for_dim(7);
    CHECK(h7.params.alpha == 2.5);
    CHECK(h7.params.beta == -0.5);
    for (int d : {2, 3, 4, 5, 6, 9}) {
        auto hp = jlogan::params_for_dim(d);
        CHECK(hp.d == d);
        CHECK(hp.params.alpha + hp.params.beta + 1.0 ==
              Catch::Approx(0.5 * (d - 1)).margin(1e-15));
    }
    CHECK_THROWS_AS(jlogan::params_for_dim(1), std::invalid_argument);
    CHECK_THROWS_AS(jlogan::params_for_dim(0), std::invalid_argument);
}

TEST_CASE("the frequency bound reduces to multiples of pi over tau in dimension three") {
    for (double tau : {0.7, 2.0}) {
        for (int m = 1; m <= 4; ++m) {
            CHECK(jlogan::logan_bound(3, m, tau) ==
                  Catch::Approx(m * kPi / tau).margin(1e-8));
        }
    }
    CHECK(jlogan::logan_bound(3, 2, 2.0) == Catch::Approx(kPi).margin(1e-10));

    for (int d : {2, 3, 5}) {
        double prev = 0.0;
        for (int m = 1; m <= 3; ++m) {
            double l = jlogan::logan_bound(d, m, 1.1);
            CHECK(l > prev);
            prev = l;
        }
    }
    CHECK_THROWS_AS(jlogan::logan_bound(1, 1, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(jlogan::logan_bound(3, 0, 1.0), std::invalid_argument);
}

TEST_CASE("spherical extremizer matches the closed form in dimension three") {
    const int m = 2;
    const double tau = 1.3;
    auto f = jlogan::spherical_extremizer(3, m, tau);
    auto closed = [&](double lam) {
        double num = std::sin(lam * tau) / (lam * std::sinh(tau));
        double prod = 1.0;
        for (int k = 1; k <= m; ++k) {
            double zk = k * kPi / tau;
            prod *= 1.0 - lam * lam / (zk * zk);
        }
        return num * num / prod;
    };
    for (double lam : {0.3, 1.1, 2.0, 3.3, 5.9, 8.2, 12.0}) {
        CHECK(f(lam) == Catch::Approx(closed(lam)).margin(1e-9 * std::fabs(closed(lam)) + 1e-12));
    }
    double phi0 = tau / std::sinh(tau);
    CHECK(f(0.0) == Catch::Approx(phi0 * phi0).margin(1e-10));
    CHECK(f(0.0) > 0.0);
    for (double z : f.zeros) CHECK(f(z) == 0.0);
}

TEST_CASE("hyperboloid entry points agree with the direct parameter route") {
    const int m = 3;
    const double tau = 0.9;
    auto via_dim = jlogan::spherical_extremizer(4, m, tau);
    auto direct = jlogan::build_extremizer(jlogan::JacobiParams{1.0, -0.5}, m, tau,
                                           jlogan::ExtremizerKind::SMALL_F_M);
    for (double lam : {0.0, 0.8, 2.7, 4.4, 9.1}) {
        CHECK(via_dim(lam) == direct(lam));
    }
    CHECK(jlogan::logan_bound(4, m, tau) ==
          jlogan::lambda_zeros(jlogan::JacobiParams{1.0, -0.5}, tau, 3).zeros[2]);
}

TEST_CASE("spherical extremizers keep the vanishing moment conditions") {
    auto rep = jlogan::verify_orthogonality(jlogan::params_for_dim(2).params, 2, 0.9);
    CHECK(rep.all_pass);
    for (const auto& c : rep.checks) {
        CAPTURE(c.k, c.value, c.scale);
        CHECK(std::fabs(c.value) <= c.tolerance);
    }
}

}  // namespace
}  // namespace jltest
