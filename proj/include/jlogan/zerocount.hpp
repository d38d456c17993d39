#pragma once
// Minimal-interval machinery on the time side: the threshold theta_{n,gamma}
// below which a spectrum inside [0, gamma] cannot produce n zeros, the
// mean-normalized polynomial r_m built on the stationary spectrum
// lambda_i^*, and certified functions G_n with an n-fold zero at the
// threshold. Odd counts reuse the band-limited eigenfunction expansion; even
// counts divide out phi_0, which turns the problem into a Neumann one for
// the weight phi_0^2 Delta.

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "jlogan/core.hpp"
#include "jlogan/jacobi.hpp"
#include "jlogan/logan.hpp"
#include "jlogan/taylor.hpp"
#include "jlogan/zeros.hpp"

namespace jlogan {

inline constexpr int kMaxZeroIntervalCount = 16;

// Earliest time at which a nonnegative spectral measure on [0, gamma] can
// concentrate n zeros: the m-th Dirichlet time t_m(gamma) for n = 2m-1, the
// m-th stationary time t_m*(gamma) for n = 2m.
inline double theta(const JacobiParams& p, int n, double gamma,
                    const SeriesConfig& scfg = {}) {
    validate(p);
    if (n < 1) throw std::invalid_argument("theta: need n >= 1");
    std::size_t m = static_cast<std::size_t>((n + 1) / 2);
    ZeroKind kind = (n % 2 == 1) ? ZeroKind::LAMBDA : ZeroKind::LAMBDA_STAR;
    return t_of_gamma(p, gamma, m, kind, scfg);
}

// r_m = 1 + sum_i B_i* psi_{lam_i*}(t) with B_i* = A_i*/Psi_i''(tau), where
// Psi_i = psi_{lam_i*} - psi_{lam_i*}(tau) and Psi_i''(tau) =
// -lam_i*^2 psi_{lam_i*}(tau) by the Neumann eigenvalue equation. The A_i*
// alternate and so do psi_{lam_i*}(tau), making every B_i* positive; the
// constant term is sum_i A_i*/lam_i*^2 = 1.
inline EigenExpansion r_polynomial(const JacobiParams& p, int m, double tau,
                                   const SeriesConfig& scfg = {}) {
    validate(p);
    if (m < 1 || m > kMaxExtremizerOrder)
        throw std::invalid_argument("r_polynomial: need 1 <= m <= 20");
    EigenExpansion e;
    e.basis_kind = EigenBasis::PSI_PLUS_CONST;
    e.tau = tau;
    e.params = p;
    e.scfg = scfg;
    e.frequencies = lambda_star_zeros(p, tau, static_cast<std::size_t>(m), scfg).zeros;
    std::vector<double> a = partial_fraction_coefficients(e.frequencies);
    e.coefficients.resize(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        double z = e.frequencies[i];
        double second = -z * z * psi(p, tau, z, scfg);
        double bi = a[i] / second;
        if (!(bi > 0.0))
            throw std::runtime_error("r_polynomial: coefficient sign violation at index " +
                                     std::to_string(i + 1));
        e.coefficients[i] = bi;
    }
    return e;
}

namespace detail {

// Derivatives of psi_lam at tau up to max_order. psi solves the Neumann-form
// equation (w psi')' + lam^2 w psi = 0 with w = phi_0^2 Delta, i.e.
//   psi'' = -(w'/w) psi' - lam^2 psi,
// and the logarithmic derivative jet of w is Delta'/Delta plus twice the
// quotient jet phi_0'/phi_0, with phi_0 derivatives from the eigenfunction
// recurrence at lam = 0.
inline std::vector<double> psi_derivatives_at(const JacobiParams& p, double tau, double lam,
                                              int max_order, const SeriesConfig& scfg) {
    std::vector<double> d(static_cast<std::size_t>(max_order) + 1);
    double p0 = phi_impl(p, tau, 0.0, scfg);
    double dp0 = phi_dt_impl(p, tau, 0.0, scfg);
    double ph = phi_impl(p, tau, lam, scfg);
    double dph = phi_dt_impl(p, tau, lam, scfg);
    d[0] = ph / p0;
    if (max_order >= 1) d[1] = (dph * p0 - ph * dp0) / (p0 * p0);
    if (max_order < 2) return d;

    std::vector<double> f0 = phi_derivatives_at(p, tau, 0.0, max_order, scfg);
    Jet num(static_cast<std::size_t>(max_order), 0.0);
    Jet den(static_cast<std::size_t>(max_order), 0.0);
    double fact = 1.0;
    for (int k = 0; k + 1 <= max_order; ++k) {
        if (k > 0) fact *= k;
        num[k] = f0[k + 1] / fact;
        den[k] = f0[k] / fact;
    }
    Jet quot = jet_div(num, den);
    std::vector<double> bd = log_delta_derivatives(p, tau, max_order - 2);
    std::vector<double> bw(static_cast<std::size_t>(max_order) - 1);
    fact = 1.0;
    for (int n = 0; n + 2 <= max_order; ++n) {
        if (n > 0) fact *= n;
        bw[n] = bd[n] + 2.0 * fact * quot[n];
    }

    std::vector<std::vector<double>> binom(static_cast<std::size_t>(max_order) - 1);
    for (std::size_t s = 0; s < binom.size(); ++s) {
        binom[s].resize(s + 1);
        binom[s][0] = 1.0;
        for (std::size_t j = 1; j <= s; ++j)
            binom[s][j] = binom[s - 1][j - 1] + (j < s ? binom[s - 1][j] : 0.0);
    }
    const double ev = lam * lam;
    for (int s = 0; s + 2 <= max_order; ++s) {
        double acc = -ev * d[s];
        for (int j = 0; j <= s; ++j) acc -= binom[s][j] * bw[s - j] * d[j + 1];
        d[s + 2] = acc;
    }
    return d;
}

}  // namespace detail

struct ZeroIntervalCert {
    int n = 0;
    double gamma = 0.0;
    double theta = 0.0;
    EigenExpansion expansion;       // G_n as a phi-basis combination
    JetReport multiplicity_report;  // derivative magnitudes at theta
};

// Constructs G_n in L_gamma^+ whose n-fold zero sits at theta_{n,gamma}: the
// band-limited eigenfunction expansion for odd n, and phi_0 times r_m
// (equivalently phi_0 + sum B_i* phi_{lam_i*}) for even n. Derivative orders
// 0..n-1 at theta are reported for multiplicity certification.
inline ZeroIntervalCert build_G(const JacobiParams& p, int n, double gamma,
                                const SeriesConfig& scfg = {}) {
    validate(p);
    if (n < 1 || n > kMaxZeroIntervalCount)
        throw std::invalid_argument("build_G: need 1 <= n <= 16");
    ZeroIntervalCert cert;
    cert.n = n;
    cert.gamma = gamma;
    cert.theta = theta(p, n, gamma, scfg);
    int m = (n + 1) / 2;
    if (n % 2 == 1) {
        cert.expansion = p_polynomial(p, m, cert.theta, scfg);
    } else {
        EigenExpansion r = r_polynomial(p, m, cert.theta, scfg);
        EigenExpansion g;
        g.basis_kind = EigenBasis::PHI;
        g.tau = cert.theta;
        g.params = p;
        g.scfg = scfg;
        g.frequencies.reserve(r.frequencies.size() + 1);
        g.coefficients.reserve(r.coefficients.size() + 1);
        g.frequencies.push_back(0.0);
        g.coefficients.push_back(1.0);
        g.frequencies.insert(g.frequencies.end(), r.frequencies.begin(), r.frequencies.end());
        g.coefficients.insert(g.coefficients.end(), r.coefficients.begin(),
                              r.coefficients.end());
        cert.expansion = g;
    }
    cert.multiplicity_report = derivatives_at_tau(p, cert.expansion, n);
    return cert;
}

}  // namespace jlogan
