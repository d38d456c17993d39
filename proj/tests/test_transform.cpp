#include "catch2/catch_amalgamated.hpp"

#include <cmath>
#include <vector>

#include "jlogan/transform.hpp"
#include "reference_values.hpp"

using namespace jlogan;

namespace {
const JacobiParams kCos{-0.5, -0.5};
const JacobiParams kDim3{0.5, -0.5};
const JacobiParams kOneZero{1.0, 0.0};
}  // namespace

TEST_CASE("forward transform reproduces the cosine closed form") {
    // alpha = beta = -1/2 collapses to the cosine transform with unit weight:
    // the indicator of [0, tau] maps to sin(lam tau)/lam.
    const double tau = 1.2;
    auto one = [](double) { return 1.0; };
    for (double lam : {0.7, 3.3, 11.0}) {
        double got = jacobi_transform(one, kCos, lam, tau);
        double want = std::sin(lam * tau) / lam;
        CHECK(std::fabs(got - want) <= 1e-12);
    }
    CHECK(std::fabs(jacobi_transform(one, kCos, 0.0, tau) - tau) <= 1e-12);
}

TEST_CASE("sampled forward transform matches its callable twin") {
    SampledFunction g;
    g.grid = {0.0, 0.4, 1.0, 1.3};
    g.values = {1.0, 0.55, 0.15, 0.0};
    g.support_hint = 1.3;
    auto hat = [](double t) {
        if (t <= 0.4) return 1.0 + (0.55 - 1.0) * t / 0.4;
        if (t <= 1.0) return 0.55 + (0.15 - 0.55) * (t - 0.4) / 0.6;
        return 0.15 - 0.15 * (t - 1.0) / 0.3;
    };
    const JacobiParams p{0.0, -0.5};
    for (double lam : {0.9, 2.7, 8.0}) {
        double a = jacobi_transform_sampled(g, p, lam);
        double b = jacobi_transform(hat, p, lam, 1.3);
        CHECK(std::fabs(a - b) <= 1e-8 * std::max(1.0, std::fabs(b)));
    }
}

TEST_CASE("inverse transform reproduces Gaussian closed forms") {
    const double rtpi = std::sqrt(kPi);
    // Cosine case: (2/pi) int exp(-lam^2) cos(lam t) dlam = exp(-t^2/4)/sqrt(pi).
    auto gauss = [](double lam) { return std::exp(-lam * lam); };
    for (double t : {0.0, 0.8, 2.0}) {
        double got = inverse_jacobi_transform(gauss, kCos, t);
        double want = std::exp(-0.25 * t * t) / rtpi;
        CHECK(std::fabs(got - want) <= 1e-9 * want);
    }
    // alpha = 1/2, beta = -1/2: phi = sin(lam t)/(lam sinh t), s = lam^2/(2 pi),
    // so the same spectral Gaussian inverts to t exp(-t^2/4)/(8 sqrt(pi) sinh t).
    for (double t : {0.0, 0.9, 1.7}) {
        double got = inverse_jacobi_transform(gauss, kDim3, t);
        double want = t == 0.0 ? 1.0 / (8.0 * rtpi)
                               : t * std::exp(-0.25 * t * t) / (8.0 * rtpi * std::sinh(t));
        CHECK(std::fabs(got - want) <= 1e-9 * want);
    }
}

TEST_CASE("grid inverse agrees with pointwise inverse") {
    auto f = [](double lam) { return std::exp(-0.25 * lam * lam); };
    std::vector<double> ts = {0.0, 0.3, 1.0, 2.2};
    std::vector<double> grid = inverse_transform_grid(f, kOneZero, ts);
    REQUIRE(grid.size() == ts.size());
    for (std::size_t i = 0; i < ts.size(); ++i) {
        double point = inverse_jacobi_transform(f, kOneZero, ts[i]);
        CHECK(std::fabs(grid[i] - point) <= 1e-9 * std::max(1e-3, std::fabs(point)));
    }
    // Supplying interior panel boundaries must not change the value.
    ZeroTable table = lambda_zeros(kOneZero, 1.0, 5);
    HalfLineOptions opt;
    opt.boundaries = table.zeros;
    std::vector<double> with_edges = inverse_transform_grid(f, kOneZero, ts, QuadConfig{}, opt);
    for (std::size_t i = 0; i < ts.size(); ++i)
        CHECK(std::fabs(with_edges[i] - grid[i]) <= 1e-9 * std::max(1e-3, std::fabs(grid[i])));
}

TEST_CASE("gauss rule collapses to the cosine rule") {
    const double tau = 1.0;
    ZeroTable table = lambda_zeros(kCos, tau, 6);
    GaussRule rule = gauss_rule(kCos, table);
    REQUIRE(rule.count == 6);
    CHECK(rule.tau == tau);
    for (std::size_t k = 0; k < rule.count; ++k) {
        double node = (2.0 * static_cast<double>(k) + 1.0) * kPi / (2.0 * tau);
        CHECK(std::fabs(rule.nodes[k] - node) <= 1e-10);
        CHECK(std::fabs(rule.weights[k] - 2.0 / tau) <= 1e-8);
    }
}

TEST_CASE("gauss rule integrates a bandlimited function") {
    // g vanishes to eighth order at the end of its support, so Jg decays fast
    // enough that sixteen nodes cover the sum to well under the tolerance
    // (the weights grow like lambda^(2 alpha + 1), so the decay of Jg has to
    // win before truncation becomes safe). The rule applied to Jg must
    // reproduce int Jg dsigma = g(0) = 1.
    const double tau = 1.0, L = 0.9;
    auto g = [&](double t) {
        if (t >= L) return 0.0;
        double c = std::cos(kPi * t / (2.0 * L));
        double c2 = c * c;
        return c2 * c2 * c2 * c2;
    };
    ZeroTable table = lambda_zeros(kOneZero, tau, 16);
    GaussRule rule = gauss_rule(kOneZero, table);
    double sum = 0.0;
    for (std::size_t k = 0; k < rule.count; ++k) {
        CHECK(rule.weights[k] > 0.0);
        sum += rule.weights[k] * jacobi_transform(g, kOneZero, rule.nodes[k], L);
    }
    CHECK(std::fabs(sum - 1.0) <= 1e-6);
}

TEST_CASE("generalized translation matches the cosine splitting formula") {
    auto fspec = [](double lam) { return std::exp(-lam * lam); };
    const double rtpi = std::sqrt(kPi);
    for (auto [t, x] : {std::pair{0.6, 0.9}, std::pair{0.0, 1.1}, std::pair{1.3, 1.3}}) {
        double got = spectral_translate(fspec, kCos, t, x);
        double want = (std::exp(-0.25 * (t + x) * (t + x)) +
                       std::exp(-0.25 * (t - x) * (t - x))) /
                      (2.0 * rtpi);
        CHECK(std::fabs(got - want) <= 1e-9 * want);
    }
}

TEST_CASE("support test certifies a bandlimited inverse") {
    const double tau = 0.75, L = 0.7;
    // Transform of the triangular hat on [0, L]: nonnegative inverse with
    // support strictly inside [0, tau].
    auto hat_spec = [&](double lam) {
        if (std::fabs(lam) < 1e-6) return 0.5 * L;
        double s = std::sin(0.5 * lam * L);
        return 2.0 * s * s / (lam * lam * L);
    };
    HalfLineOptions opt;
    opt.lambda_cut = 400.0;
    // Tail panels spanning one full period of the support-edge tone cos(L lam)
    // turn the partial sums into a clean monotone sequence for extrapolation.
    opt.panel_hint = kPi / L;
    PaleyWienerReport rep = paley_wiener_test(hat_spec, kCos, tau, 0.02, 1e-4, QuadConfig{}, opt);
    CHECK(rep.supported);
    CHECK(std::fabs(rep.max_inside - 1.0) <= 1e-3);

    // A spectral Gaussian is not bandlimited: its inverse is a Gaussian bump
    // that is nowhere small on (tau, 2 tau].
    auto gauss = [](double lam) { return std::exp(-lam * lam); };
    PaleyWienerReport bad = paley_wiener_test(gauss, kCos, tau);
    CHECK_FALSE(bad.supported);
    CHECK(bad.max_outside > 1e3 * bad.threshold);
}

TEST_CASE("transform input validation") {
    SampledFunction broken;
    broken.grid = {0.0, 1.0};
    broken.values = {1.0};
    CHECK_THROWS_AS(jacobi_transform_sampled(broken, kCos, 1.0), std::invalid_argument);

    ZeroTable mu = mu_zeros(kOneZero, 1.0, 2);
    CHECK_THROWS_AS(gauss_rule(kOneZero, mu), std::invalid_argument);

    auto f = [](double lam) { return std::exp(-lam * lam); };
    CHECK_THROWS_AS(paley_wiener_test(f, kCos, 15.0), std::invalid_argument);
}
