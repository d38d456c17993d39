#pragma once
// Self-contained verification suites behind the CLI `verify` subcommand.
// Each check records the measured quantity and its tolerance; a suite passes
// only when every check does. Pass direction depends on the check: residuals
// must stay below tolerance, leading-order and positivity quantities above.

#include <cmath>
#include <cstddef>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "jlogan/core.hpp"
#include "jlogan/hyperboloid.hpp"
#include "jlogan/jacobi.hpp"
#include "jlogan/logan.hpp"
#include "jlogan/quadrature.hpp"
#include "jlogan/transform.hpp"
#include "jlogan/zerocount.hpp"
#include "jlogan/zeros.hpp"

namespace jlogan {

struct VerifyCheck {
    std::string name;      // short identifier
    std::string quantity;  // what the value measures
    double value = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct VerifyReport {
    std::string suite;
    std::vector<VerifyCheck> checks;
    bool all_pass = true;

    void add(std::string name, std::string quantity, double value, double tolerance,
             bool pass) {
        checks.push_back({std::move(name), std::move(quantity), value, tolerance, pass});
        all_pass = all_pass && checks.back().pass;
    }
    void add_below(std::string name, std::string quantity, double value, double tol) {
        add(std::move(name), std::move(quantity), value, tol, std::fabs(value) <= tol);
    }
    void add_above(std::string name, std::string quantity, double value, double tol) {
        add(std::move(name), std::move(quantity), value, tol, value > tol);
    }
};

// Basic function and zero-table health for one parameter pair.
inline VerifyReport verify_core(const JacobiParams& p, double tau) {
    validate(p);
    VerifyReport rep;
    rep.suite = "core";

    std::mt19937 rng(20240811u);
    std::uniform_real_distribution<double> ut(1e-3, kMaxT);
    std::uniform_real_distribution<double> ul(0.0, 60.0);
    double excess = 0.0;
    for (int i = 0; i < 400; ++i) {
        double v = std::fabs(phi(p, ut(rng), ul(rng)));
        excess = std::max(excess, v - 1.0);
    }
    rep.add_below("phi_bounded", "max over random (t,lambda) of |phi| - 1", excess, 1e-10);

    double ground_min = 1.0;
    for (int i = 1; i <= 50; ++i) ground_min = std::min(ground_min, phi(p, kMaxT * i / 50.0, 0.0));
    rep.add_above("ground_state_positive", "min of phi_0 on (0, 20]", ground_min, 0.0);

    double smin = spectral_weight(p, 0.5);
    for (int i = 1; i <= 50; ++i) smin = std::min(smin, spectral_weight(p, 0.5 + 2.0 * i));
    rep.add_above("spectral_weight_positive", "min of s(lambda) on [0.5, 100.5]", smin, 0.0);

    auto lz = lambda_zeros(p, tau, 8);
    auto sz = lambda_star_zeros(p, tau, 8);
    double resid = 0.0;
    for (double z : lz.zeros) resid = std::max(resid, std::fabs(phi(p, tau, z)));
    rep.add_below("zero_residual", "max |phi(tau, lambda_k)| over the first 8 zeros", resid,
                  1e-9);

    double gap = sz.zeros[0] - lz.zeros[0];
    for (std::size_t k = 0; k + 1 < lz.zeros.size(); ++k) {
        gap = std::min(gap, sz.zeros[k] - lz.zeros[k]);
        gap = std::min(gap, lz.zeros[k + 1] - sz.zeros[k]);
    }
    rep.add_above("interlacing", "min gap in lambda_k < lambda_k* < lambda_{k+1}", gap, 0.0);

    auto qr = integrate([](double x) { return std::exp(-x * x); }, 0.0, 3.0);
    double want = 0.5 * std::sqrt(kPi) * std::erf(3.0);
    rep.add_below("quadrature_reference", "relative error of int_0^3 exp(-x^2)",
                  (qr.value - want) / want, 1e-12);
    return rep;
}

// Extremal function construction for given order and support.
inline VerifyReport verify_logan(const JacobiParams& p, int m, double tau,
                                 const QuadConfig& cfg = {}) {
    validate(p);
    VerifyReport rep;
    rep.suite = "logan";

    auto f = build_extremizer(p, m, tau, ExtremizerKind::SMALL_F_M);
    auto a = partial_fraction_coefficients(f.zeros);
    double unit = -1.0;
    for (std::size_t i = 0; i < a.size(); ++i) unit += a[i] / (f.zeros[i] * f.zeros[i]);
    rep.add_below("partial_fraction_unit", "sum of A_i / lambda_i^2 minus 1", unit, 1e-12);

    auto pm = p_polynomial(p, m, tau);
    double bmin = pm.coefficients[0];
    for (double b : pm.coefficients) bmin = std::min(bmin, b);
    rep.add_above("coefficients_positive", "min eigenfunction coefficient B_i", bmin, 0.0);

    double p0 = pm(0.0);
    rep.add_below("boundary_zero", "p_m(tau) relative to p_m(0)", pm(tau) / p0, 1e-10);

    auto jets = derivatives_at_tau(p, pm, 2 * m - 1);
    double smax = 0.0;
    for (double s : jets.scales) smax = std::max(smax, s);
    double vmax = 0.0;
    for (int s = 0; s + 1 < 2 * m; ++s) vmax = std::max(vmax, std::fabs(jets.derivatives[s]));
    rep.add_below("multiplicity_vanish",
                  "max |p_m^(s)(tau)| for s < 2m-1, relative to the jet scale", vmax / smax,
                  1e-6);
    rep.add_above("multiplicity_lead", "|p_m^(2m-1)(tau)| relative to its jet scale",
                  std::fabs(jets.derivatives[2 * m - 1]) / jets.scales[2 * m - 1], 1e-2);

    auto sup = lambda_sup(f);
    rep.add_below("spectral_sup", "lambda_sup(f_m)/lambda_m - 1",
                  sup.value / f.zeros.back() - 1.0, 1e-8);

    auto F = build_extremizer(p, m, tau, ExtremizerKind::F_M);
    double tmax = 0.0;
    for (double lam : {0.0, 0.37 * f.zeros[0], 0.81 * f.zeros.back()}) {
        // keep probe frequencies clear of the node windows where the
        // quotient switches to its local expansion
        for (double z : f.zeros)
            while (std::fabs(lam - z) < 2e-3 * z) lam *= 1.004;
        double got = jacobi_transform([&](double t) { return pm(t); }, p, lam, tau, cfg);
        tmax = std::max(tmax, std::fabs(got - F(lam)));
    }
    rep.add_below("transform_quotient",
                  "max |J p_m - F_m| at three frequencies, relative to F_m(0)",
                  tmax / F(0.0), 1e-8);

    auto orth = verify_orthogonality(p, m, tau, cfg);
    double worst = 0.0;
    for (const auto& c : orth.checks)
        worst = std::max(worst, std::fabs(c.value) / c.scale);
    rep.add_below("vanishing_moments",
                  "max moment of f_m against dsigma, relative to the absolute moment", worst,
                  1e-6);
    return rep;
}

// Certified zero-interval construction for given count and band edge.
inline VerifyReport verify_zerocount(const JacobiParams& p, int n, double gamma) {
    validate(p);
    VerifyReport rep;
    rep.suite = "zerocount";

    auto cert = build_G(p, n, gamma);
    int m = (n + 1) / 2;
    double back = (n % 2 == 1)
                      ? lambda_zeros(p, cert.theta, static_cast<std::size_t>(m)).zeros[m - 1]
                      : lambda_star_zeros(p, cert.theta, static_cast<std::size_t>(m))
                            .zeros[m - 1];
    rep.add_below("threshold_round_trip", "band edge recovered at theta, relative to gamma",
                  back / gamma - 1.0, 1e-9);

    std::vector<double> nodes;
    for (double fq : cert.expansion.frequencies)
        if (fq > 0.0) nodes.push_back(fq);
    auto a = partial_fraction_coefficients(nodes);
    double unit = -1.0;
    for (std::size_t i = 0; i < a.size(); ++i) unit += a[i] / (nodes[i] * nodes[i]);
    rep.add_below("partial_fraction_unit", "sum of A_i / node^2 minus 1", unit, 1e-10);

    double cmin = cert.expansion.coefficients[0];
    for (double c : cert.expansion.coefficients) cmin = std::min(cmin, c);
    rep.add_above("coefficients_positive", "min expansion coefficient", cmin, 0.0);

    double over = 0.0;
    for (double fq : cert.expansion.frequencies) over = std::max(over, fq - gamma);
    rep.add_below("spectrum_in_band", "max frequency excess over gamma", over, 1e-9);

    const auto& jr = cert.multiplicity_report;
    double smax = 0.0;
    for (double s : jr.scales) smax = std::max(smax, s);
    double vmax = 0.0;
    for (int s = 0; s < n; ++s) vmax = std::max(vmax, std::fabs(jr.derivatives[s]));
    rep.add_below("multiplicity_vanish",
                  "max |G^(s)(theta)| for s < n, relative to the jet scale", vmax / smax, 1e-6);
    rep.add_above("multiplicity_lead", "|G^(n)(theta)| relative to its jet scale",
                  std::fabs(jr.derivatives[n]) / jr.scales[n], 1e-2);

    double g0 = cert.expansion(0.0);
    rep.add_above("positive_at_zero", "G_n(0)", g0, 0.0);
    double gmin = g0;
    double worst_step = -g0;
    double prev = g0;
    for (int j = 1; j <= 240; ++j) {
        double v = cert.expansion(cert.theta * 0.99 * j / 240.0);
        gmin = std::min(gmin, v);
        worst_step = std::max(worst_step, v - prev);
        prev = v;
    }
    // Near the flat zero at theta the expansion sits under a cancellation
    // floor of roughly machine epsilon times G_n(0), so positivity and
    // monotonicity are asserted above that floor rather than at zero.
    rep.add_above("positive_below_zero", "min of G_n on [0, 0.99 theta]", gmin, -1e-9 * g0);
    rep.add("decreasing", "max forward difference of G_n on [0, 0.99 theta]", worst_step,
            1e-12 * g0, worst_step <= 1e-12 * g0);
    return rep;
}

// Zero counting against the eigenfunction Chebyshev system on (0, tau).
inline VerifyReport verify_chebyshev(const JacobiParams& p, int m, double tau) {
    validate(p);
    if (m < 1 || m > kMaxChebyshevBasis)
        throw std::invalid_argument("verify_chebyshev: need 1 <= m <= 12");
    VerifyReport rep;
    rep.suite = "chebyshev";

    auto lz = lambda_zeros(p, tau, static_cast<std::size_t>(m));
    const std::size_t scan = 10000;
    std::vector<std::vector<double>> basis(lz.zeros.size(), std::vector<double>(scan));
    for (std::size_t j = 0; j < scan; ++j) {
        double t = tau * static_cast<double>(j) / static_cast<double>(scan);
        for (std::size_t i = 0; i < lz.zeros.size(); ++i)
            basis[i][j] = phi(p, t, lz.zeros[i]);
    }

    int mismatches = 0;
    for (int k = 1; k <= m; ++k) {
        std::vector<double> coeff(static_cast<std::size_t>(m), 0.0);
        coeff[static_cast<std::size_t>(k) - 1] = 1.0;
        auto r = chebyshev_zero_count(basis, coeff);
        if (r.count != k - 1) ++mismatches;
    }
    rep.add("single_counts", "basis functions whose zero count differs from k-1",
            static_cast<double>(mismatches), 0.0, mismatches == 0);

    std::mt19937 rng(771u);
    std::normal_distribution<double> gauss(0.0, 1.0);
    int worst = 0;
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<double> coeff(static_cast<std::size_t>(m));
        for (double& c : coeff) c = gauss(rng);
        auto r = chebyshev_zero_count(basis, coeff);
        worst = std::max(worst, r.count);
    }
    rep.add("random_counts", "max zero count over 60 random combinations",
            static_cast<double>(worst), static_cast<double>(m - 1), worst <= m - 1);
    return rep;
}

}  // namespace jlogan
