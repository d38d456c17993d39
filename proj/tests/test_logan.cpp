#include "catch2/catch_amalgamated.hpp"

#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "jlogan/logan.hpp"

using namespace jlogan;

namespace {
const JacobiParams kCos{-0.5, -0.5};
const JacobiParams kOneZero{1.0, 0.0};
}  // namespace

TEST_CASE("partial fraction coefficients reproduce the product expansion") {
    // Cosine nodes (2k-1) pi/2; the coefficients satisfy
    // 1/prod(1 - lam^2/lam_i^2) = sum A_i/(lam_i^2 - lam^2) identically.
    std::vector<double> nodes;
    for (int k = 1; k <= 4; ++k) nodes.push_back((2 * k - 1) * kPi / 2.0);
    std::vector<double> a = partial_fraction_coefficients(nodes);
    REQUIRE(a.size() == 4);
    for (std::size_t i = 0; i < a.size(); ++i)
        CHECK((i % 2 == 0 ? a[i] > 0.0 : a[i] < 0.0));

    for (double lam : {0.37, 2.1, 7.9, 12.3}) {
        double lhs = 1.0, rhs = 0.0, spread = 0.0;
        for (double z : nodes) lhs *= 1.0 - lam * lam / (z * z);
        lhs = 1.0 / lhs;
        for (std::size_t i = 0; i < a.size(); ++i) {
            double term = a[i] / (nodes[i] * nodes[i] - lam * lam);
            rhs += term;
            spread += std::fabs(term);
        }
        CHECK(std::fabs(lhs - rhs) <= 1e-12 * spread);
    }

    // Power sums sum A_i lam_i^{2r} vanish for r <= m-2 and the r = -1 sum
    // is exactly one; both follow from expanding the identity at infinity
    // and at zero.
    double inv = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) inv += a[i] / (nodes[i] * nodes[i]);
    CHECK(std::fabs(inv - 1.0) <= 1e-12);
    for (int r = 0; r <= 2; ++r) {
        double sum = 0.0, spread = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            double term = a[i] * std::pow(nodes[i], 2 * r);
            sum += term;
            spread += std::fabs(term);
        }
        CHECK(std::fabs(sum) <= 1e-12 * spread);
    }
}

TEST_CASE("extremizer matches the cosine closed form") {
    const double tau = 1.0;
    const double l1 = kPi / 2.0;
    Extremizer f1 = build_extremizer(kCos, 1, tau, ExtremizerKind::SMALL_F_M);
    Extremizer F1 = build_extremizer(kCos, 1, tau, ExtremizerKind::F_M);
    REQUIRE(f1.zeros.size() == 1);
    CHECK(std::fabs(f1.zeros[0] - l1) <= 1e-12);

    auto closed_f = [&](double lam) {
        double c = std::cos(lam * tau);
        return c * c / (1.0 - lam * lam / (l1 * l1));
    };
    auto closed_F = [&](double lam) {
        return std::cos(lam * tau) / (1.0 - lam * lam / (l1 * l1));
    };
    for (double lam : {0.0, 0.3, 0.9, 1.4, 1.8, 2.5, 4.0, 7.3, 11.0, 30.5, 101.3}) {
        CHECK(std::fabs(f1(lam) - closed_f(lam)) <=
              1e-9 * std::max(1.0, std::fabs(closed_f(lam))));
        CHECK(std::fabs(F1(lam) - closed_F(lam)) <=
              1e-9 * std::max(1.0, std::fabs(closed_F(lam))));
    }

    // Inside the near-node window the quotient switches to a local expansion
    // of phi; the second-order truncation costs a few parts in 1e7.
    for (double lam : {l1 * (1.0 - 5e-4), l1 * (1.0 + 5e-4)}) {
        double want = closed_f(lam);
        CHECK(std::fabs(f1(lam) - want) <= 1e-6 * std::fabs(want));
    }
    CHECK(f1(f1.zeros[0]) == 0.0);
    CHECK(std::fabs(f1(l1)) <= 1e-12);
    CHECK(std::fabs(F1(l1) - kPi / 4.0) <= 1e-8);

    // Even in lambda by construction.
    CHECK(f1(-2.2) == f1(2.2));

    CHECK_THROWS_AS(build_extremizer(kCos, 0, tau, ExtremizerKind::F_M),
                    std::invalid_argument);
    CHECK_THROWS_AS(build_extremizer(kCos, 21, tau, ExtremizerKind::F_M),
                    std::invalid_argument);
    CHECK_THROWS_AS(build_extremizer(kCos, 1, 0.0, ExtremizerKind::F_M),
                    std::invalid_argument);
    CHECK_THROWS_AS(build_extremizer(kCos, 1, 25.0, ExtremizerKind::F_M),
                    std::invalid_argument);
}

TEST_CASE("eigenfunction expansion has positive coefficients and kills the boundary") {
    const double tau = 1.0;
    EigenExpansion p1 = p_polynomial(kCos, 1, tau);
    REQUIRE(p1.coefficients.size() == 1);
    // Cosine case: p_1 = (pi/2 tau) cos(pi t / 2 tau).
    CHECK(std::fabs(p1.coefficients[0] - kPi / (2.0 * tau)) <= 1e-10);
    CHECK(std::fabs(p1(0.0) - p1.coefficients[0]) <= 1e-12);
    CHECK(std::fabs(p1(tau)) <= 1e-10 * p1(0.0));

    EigenExpansion p3 = p_polynomial(kOneZero, 3, tau);
    REQUIRE(p3.coefficients.size() == 3);
    ZeroTable table = lambda_zeros(kOneZero, tau, 3);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(p3.coefficients[i] > 0.0);
        CHECK(p3.frequencies[i] == table.zeros[i]);
    }
    CHECK(std::fabs(p3(tau)) <= 1e-9 * p3(0.0));
    CHECK_THROWS_AS(p_polynomial(kCos, 0, tau), std::invalid_argument);
}

TEST_CASE("transform of the eigenfunction polynomial gives the band-limited quotient") {
    const double tau = 1.0;
    EigenExpansion p2 = p_polynomial(kOneZero, 2, tau);
    Extremizer F2 = build_extremizer(kOneZero, 2, tau, ExtremizerKind::F_M);
    for (double lam : {0.0, 0.45, 1.7, F2.zeros[0], 4.2, 6.8}) {
        double got = jacobi_transform(p2, kOneZero, lam, tau);
        double want = F2(lam);
        CHECK(std::fabs(got - want) <= 1e-10 * std::max(1.0, std::fabs(want)));
    }
}

TEST_CASE("analytic jets at tau match closed forms and vanish to the right order") {
    const double tau = 1.0;
    const double l1 = kPi / 2.0;

    EigenExpansion p1 = p_polynomial(kCos, 1, tau);
    JetReport jc = derivatives_at_tau(kCos, p1, 4);
    REQUIRE(jc.derivatives.size() == 5);
    CHECK(jc.warnings.empty());
    CHECK(std::fabs(jc.derivatives[0]) <= 1e-10);
    CHECK(std::fabs(jc.derivatives[1] + l1 * l1) <= 1e-9);
    CHECK(std::fabs(jc.derivatives[2]) <= 1e-9);
    CHECK(std::fabs(jc.derivatives[3] - l1 * l1 * l1 * l1) <= 1e-8);
    CHECK(std::fabs(jc.derivatives[4]) <= 1e-8);

    // Generic family: orders 0..2m-2 vanish, order 2m-1 does not.
    EigenExpansion p2 = p_polynomial(kOneZero, 2, tau);
    JetReport jg = derivatives_at_tau(kOneZero, p2, 4);
    CHECK(jg.warnings.empty());
    CHECK(std::fabs(jg.derivatives[0]) <= 1e-10);
    CHECK(std::fabs(jg.derivatives[1]) <= 1e-12 * std::max(1.0, jg.scales[1]));
    CHECK(std::fabs(jg.derivatives[2]) <= 1e-10 * std::max(1.0, jg.scales[2]));
    CHECK(std::fabs(jg.derivatives[3]) >= 1e-3 * jg.scales[3]);

    EigenExpansion shifted = p2;
    shifted.basis_kind = EigenBasis::PSI_SHIFTED;
    CHECK_THROWS_AS(derivatives_at_tau(kOneZero, shifted, 2), std::invalid_argument);
    CHECK_THROWS_AS(derivatives_at_tau(kOneZero, p2, 7), std::invalid_argument);
}

TEST_CASE("sign-adjusted spectral sup lands on the last constructed node") {
    const double tau = 1.0;
    Extremizer f1 = build_extremizer(kCos, 1, tau, ExtremizerKind::SMALL_F_M);
    LambdaSupResult s1 = lambda_sup(f1);
    CHECK(std::fabs(s1.value - kPi / 2.0) <= 1e-8);
    CHECK_FALSE(s1.boundary_warning);

    Extremizer f2 = build_extremizer(kOneZero, 2, tau, ExtremizerKind::SMALL_F_M);
    LambdaSupResult s2 = lambda_sup(f2);
    CHECK(std::fabs(s2.value - f2.zeros[1]) <= 1e-8);
    CHECK_FALSE(s2.boundary_warning);

    auto negative = [](double) { return -1.0; };
    LambdaSupResult s3 = lambda_sup(negative, 1, 5.0, 0.1);
    CHECK(s3.value == 0.0);
    CHECK_FALSE(s3.boundary_warning);

    auto positive = [](double) { return 1.0; };
    LambdaSupResult s4 = lambda_sup(positive, 1, 5.0, 0.1);
    CHECK(s4.value == 5.0);
    CHECK(s4.boundary_warning);

    CHECK_THROWS_AS(lambda_sup(positive, 1, -1.0, 0.1), std::invalid_argument);
}

TEST_CASE("vanishing moments hold for the extremal functions") {
    OrthogonalityReport rc = verify_orthogonality(kCos, 1, 1.0);
    REQUIRE(rc.checks.size() == 1);
    CHECK(rc.all_pass);
    CHECK(rc.checks[0].scale > 0.0);
    CHECK(std::fabs(rc.checks[0].value) <= rc.checks[0].tolerance);

    OrthogonalityReport rg = verify_orthogonality(kOneZero, 2, 1.0);
    REQUIRE(rg.checks.size() == 2);
    CHECK(rg.all_pass);
    for (const auto& c : rg.checks) {
        CHECK(c.scale > 0.0);
        CHECK(std::fabs(c.value) <= c.tolerance);
    }

    CHECK_THROWS_AS(verify_orthogonality(kCos, 9, 1.0), std::invalid_argument);
}

TEST_CASE("zero counts follow the Chebyshev system structure") {
    const double tau = 1.0;
    ZeroTable table = lambda_zeros(kOneZero, tau, 4);
    std::vector<std::function<double(double)>> basis;
    for (double z : table.zeros)
        basis.push_back([z](double t) { return phi(kOneZero, t, z); });

    // The k-th eigenfunction alone has exactly k-1 interior zeros.
    for (std::size_t k = 0; k < 4; ++k) {
        std::vector<double> coeff(4, 0.0);
        coeff[k] = 1.0;
        ZeroCountReport rep = chebyshev_zero_count(basis, coeff, 0.0, tau);
        CHECK(rep.count == static_cast<int>(k));
        CHECK_FALSE(rep.resolution_warning);
    }

    // Random three-term combinations stay below the Chebyshev bound. The
    // basis matrix is sampled once and reused across draws.
    const std::size_t n = 10000;
    std::vector<std::vector<double>> values(3, std::vector<double>(n));
    for (std::size_t j = 0; j < n; ++j) {
        double t = tau * static_cast<double>(j) / static_cast<double>(n);
        for (std::size_t i = 0; i < 3; ++i) values[i][j] = basis[i](t);
    }
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    for (int draw = 0; draw < 20; ++draw) {
        std::vector<double> coeff{unit(rng), unit(rng), unit(rng)};
        if (std::fabs(coeff[0]) + std::fabs(coeff[1]) + std::fabs(coeff[2]) < 0.1) continue;
        ZeroCountReport rep = chebyshev_zero_count(values, coeff);
        CHECK(rep.count <= 2);
    }

    // Tangential zeros count twice; a dip resolved by a single opposite
    // sample is two crossings, flagged as under-resolved.
    std::vector<std::function<double(double)>> quad{
        [](double t) { return (t - 1.0 / 3.0) * (t - 1.0 / 3.0); }};
    ZeroCountReport touch = chebyshev_zero_count(quad, {1.0}, 0.0, 1.0);
    CHECK(touch.sign_changes == 0);
    CHECK(touch.tangencies == 1);
    CHECK(touch.count == 2);

    std::vector<std::function<double(double)>> dip{
        [](double t) { return (t - 0.5) * (t - 0.5) - 1e-12; }};
    ZeroCountReport twin = chebyshev_zero_count(dip, {1.0}, 0.0, 1.0);
    CHECK(twin.sign_changes == 2);
    CHECK(twin.tangencies == 0);
    CHECK(twin.count == 2);
    CHECK(twin.resolution_warning);

    CHECK_THROWS_AS(chebyshev_zero_count({{1.0, 2.0}}, {1.0, 2.0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(chebyshev_zero_count(
                        std::vector<std::vector<double>>(13, std::vector<double>(100, 1.0)),
                        std::vector<double>(13, 1.0)),
                    std::invalid_argument);
    CHECK_THROWS_AS(chebyshev_zero_count({{1.0, 2.0, 3.0}}, {1.0}),
                    std::invalid_argument);
}

TEST_CASE("the extremal function keeps one sign beyond the last constructed node") {
    // Inside the band the sign alternates interval by interval; past the
    // m-th node every zero is double and the sign freezes at (-1)^m.
    const double tau = 1.0;
    Extremizer f1 = build_extremizer(kCos, 1, tau, ExtremizerKind::SMALL_F_M);
    ZeroTable zc = lambda_zeros(kCos, tau, 8);
    CHECK(f1(0.5 * zc.zeros[0]) > 0.0);
    for (std::size_t k = 1; k < 8; ++k) {
        double mid = 0.5 * (zc.zeros[k - 1] + zc.zeros[k]);
        CHECK(f1(mid) < 0.0);  // (-1)^1
    }

    Extremizer f2 = build_extremizer(kOneZero, 2, tau, ExtremizerKind::SMALL_F_M);
    ZeroTable zg = lambda_zeros(kOneZero, tau, 9);
    CHECK(f2(0.5 * zg.zeros[0]) > 0.0);
    CHECK(f2(0.5 * (zg.zeros[0] + zg.zeros[1])) < 0.0);
    for (std::size_t k = 2; k < 9; ++k) {
        double mid = 0.5 * (zg.zeros[k - 1] + zg.zeros[k]);
        CHECK(f2(mid) > 0.0);  // (-1)^2
    }
}
