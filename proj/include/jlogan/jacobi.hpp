#pragma once
// The Jacobi functions phi_lambda^{(alpha,beta)}(t) on the half-line, their
// t-derivative, the normalized functions psi = phi/phi_0, the spectral
// density s(lambda), and the large-lambda asymptotic form.
//
// phi is evaluated by one of five schemes chosen from explicit cancellation
// bounds: the hypergeometric series in -sinh^2 t, its Pfaff transform in
// tanh^2 t, the connection expansion in 1/cosh^2 t (large argument), a
// phase-amplitude (WKB) solve of the eigenfunction ODE for large lambda in
// the region the expansions cannot reach, and Taylor continuation of the ODE
// for small lambda at large t.

#include <array>
#include <complex>
#include <list>
#include <utility>
#include <vector>

#include "jlogan/core.hpp"
#include "jlogan/specfun.hpp"
#include "jlogan/taylor.hpp"

namespace jlogan {

inline constexpr double kMaxT = 20.0;
inline constexpr double kMaxLambda = 1.0e4;

// Hyperbolic weight Delta(t) = 2^{2 rho} sinh(t)^{2a+1} cosh(t)^{2b+1}.
inline double weight_delta(const JacobiParams& p, double t) {
    validate(p);
    if (!(t >= 0.0)) throw std::invalid_argument("weight_delta: need t >= 0");
    return std::pow(2.0, 2.0 * p.rho()) * std::pow(std::sinh(t), 2.0 * p.alpha + 1.0) *
           std::pow(std::cosh(t), 2.0 * p.beta + 1.0);
}

namespace detail {

// D(t) = Delta'(t)/Delta(t) and its derivative.
inline double log_weight_derivative(const JacobiParams& p, double t) {
    return (2.0 * p.alpha + 1.0) / std::tanh(t) + (2.0 * p.beta + 1.0) * std::tanh(t);
}

inline double log_weight_derivative_dt(const JacobiParams& p, double t) {
    double sh = std::sinh(t), ch = std::cosh(t);
    return -(2.0 * p.alpha + 1.0) / (sh * sh) + (2.0 * p.beta + 1.0) / (ch * ch);
}

// ---- hypergeometric branches -------------------------------------------

inline double phi_series_direct(const JacobiParams& p, double t, double lam,
                                const SeriesConfig& cfg) {
    std::complex<double> a(0.5 * p.rho(), 0.5 * lam);
    double sh = std::sinh(t);
    return gauss_2f1(a, std::conj(a), {p.alpha + 1.0, 0.0}, -sh * sh, cfg).real();
}

inline double phi_series_pfaff(const JacobiParams& p, double t, double lam,
                               const SeriesConfig& cfg) {
    std::complex<double> a(0.5 * p.rho(), 0.5 * lam);
    std::complex<double> b(0.5 * (p.alpha - p.beta + 1.0), 0.5 * lam);
    double th = std::tanh(t);
    std::complex<double> f = gauss_2f1(a, b, {p.alpha + 1.0, 0.0}, th * th, cfg);
    std::complex<double> pre =
        std::exp(-std::complex<double>(p.rho(), lam) * std::log(std::cosh(t)));
    return (pre * f).real();
}

// Expansion around t = infinity: phi = 2 Re[ kappa (cosh t)^{i lam - rho} F ],
// with F = 2F1((rho - i lam)/2, (alpha-beta+1 - i lam)/2; 1 - i lam; cosh^-2 t)
// and kappa = Gamma(a+1) Gamma(i lam) / (Gamma((rho+i lam)/2) Gamma((a-b+1+i lam)/2)).
inline double phi_series_connection(const JacobiParams& p, double t, double lam,
                                    const SeriesConfig& cfg) {
    const std::complex<double> ilam(0.0, lam);
    std::complex<double> kappa =
        std::exp(std::complex<double>(log_gamma(p.alpha + 1.0), 0.0) + log_gamma(ilam) -
                 log_gamma(0.5 * (p.rho() + ilam)) -
                 log_gamma(0.5 * (p.alpha - p.beta + 1.0 + ilam)));
    std::complex<double> b1 = 0.5 * (p.rho() - ilam);
    std::complex<double> b2 = 0.5 * (p.alpha - p.beta + 1.0 - ilam);
    double ch = std::cosh(t);
    std::complex<double> f = gauss_2f1(b1, b2, 1.0 - ilam, 1.0 / (ch * ch), cfg);
    std::complex<double> pre = std::exp((ilam - p.rho()) * std::log(ch));
    return 2.0 * (kappa * pre * f).real();
}

inline double phi_dt_impl(const JacobiParams& p, double t, double lam, const SeriesConfig& cfg);

// Taylor continuation of the ODE from t = 2 outward, for lam < 1/2 beyond the
// comfort zone of the Pfaff series.
inline double phi_ode_continued(const JacobiParams& p, double t, double lam,
                                const SeriesConfig& cfg, bool want_derivative) {
    constexpr double kStart = 2.0;
    constexpr double kStep = 0.5;
    constexpr std::size_t kOrder = 24;
    double u = phi_series_pfaff(p, kStart, lam, cfg);
    double du = phi_dt_impl(p, kStart, lam, cfg);
    double t0 = kStart;
    while (t - t0 > kStep) {
        Jet j = jet_eigen_ode(p, lam, t0, u, du, kOrder);
        u = jet_eval(j, kStep);
        du = jet_eval_derivative(j, kStep);
        t0 += kStep;
    }
    Jet j = jet_eigen_ode(p, lam, t0, u, du, kOrder);
    return want_derivative ? jet_eval_derivative(j, t - t0) : jet_eval(j, t - t0);
}

// ---- Chebyshev helpers for the phase-amplitude solve -------------------

inline std::vector<double> cheb_coeffs(const std::vector<double>& v) {
    const std::size_t n = v.size() - 1;
    std::vector<double> c(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        double acc = 0.5 * (v[0] + ((k % 2) ? -1.0 : 1.0) * v[n]);
        for (std::size_t j = 1; j < n; ++j)
            acc += v[j] * std::cos(kPi * static_cast<double>(j * k) / static_cast<double>(n));
        c[k] = 2.0 * acc / static_cast<double>(n);
    }
    c[0] *= 0.5;
    c[n] *= 0.5;
    return c;
}

inline std::vector<double> cheb_derivative(const std::vector<double>& c, double scale) {
    const std::size_t n = c.size() - 1;
    std::vector<double> b(n + 3, 0.0);
    for (std::size_t k = n; k-- > 0;)
        b[k] = b[k + 2] + 2.0 * static_cast<double>(k + 1) * c[k + 1];
    b[0] *= 0.5;
    b.resize(c.size());
    for (double& x : b) x *= scale;
    return b;
}

inline std::vector<double> cheb_antiderivative(const std::vector<double>& c, double scale) {
    const std::size_t n = c.size() - 1;
    std::vector<double> a(n + 2, 0.0);
    a[1] = scale * (c[0] - (n >= 2 ? 0.5 * c[2] : 0.0));
    for (std::size_t k = 2; k <= n + 1; ++k) {
        double lo = c[k - 1];
        double hi = (k + 1 <= n) ? c[k + 1] : 0.0;
        a[k] = scale * (lo - hi) / (2.0 * static_cast<double>(k));
    }
    double at_minus1 = 0.0;
    for (std::size_t k = 1; k <= n + 1; ++k) at_minus1 += ((k % 2) ? -a[k] : a[k]);
    a[0] = -at_minus1;
    return a;
}

inline double cheb_eval(const std::vector<double>& c, double x) {
    double b1 = 0.0, b2 = 0.0;
    for (std::size_t k = c.size(); k-- > 1;) {
        double t = 2.0 * x * b1 - b2 + c[k];
        b2 = b1;
        b1 = t;
    }
    return x * b1 - b2 + c[0];
}

// Phase-amplitude representation of u = sqrt(Delta) phi, which solves
// u'' + (lam^2 + rho^2 - Q) u = 0 with Q = D^2/4 + D'/2. We compute the
// slowly varying frequency r(t) from the WKB fixed point
//   r = sqrt(W^2 + (3/4)(r'/r)^2 - r''/(2r)),  W^2 = lam^2 + rho^2 - Q,
// on a Chebyshev grid in log t (Q has a 1/t^2 singularity at 0, analytic in
// log t), then u = amp cos(psi + delta)/sqrt(r) with psi' = r, matching
// amplitude and phase to the connection expansion at the right endpoint.
struct PhaseSolution {
    JacobiParams params;
    double lam = 0.0;
    double ua = 0.0, ub = 0.0;  // interval in u = log t
    std::vector<double> r_coef, drdu_coef, psi_coef;
    double amp = 0.0, delta = 0.0;

    double x_of(double u) const { return 2.0 * (u - ua) / (ub - ua) - 1.0; }

    double phi_at(double t) const {
        double x = x_of(std::log(t));
        double r = cheb_eval(r_coef, x);
        double ph = cheb_eval(psi_coef, x) + delta;
        double u = amp * std::cos(ph) / std::sqrt(r);
        return u / std::sqrt(weight_delta(params, t));
    }
};

inline PhaseSolution build_phase_solution(const JacobiParams& p, double lam,
                                          const SeriesConfig& cfg) {
    constexpr std::size_t N = 64;
    PhaseSolution s;
    s.params = p;
    s.lam = lam;
    double ta = 0.9 * std::asinh(14.0 / lam);
    double tb = 1.05 * std::acosh(std::sqrt(std::max(lam / 40.0, 1.3)));
    s.ua = std::log(ta);
    s.ub = std::log(tb);
    const double half = 0.5 * (s.ub - s.ua);
    const double du_dx = half;            // du per unit x
    const double d_dx_to_d_du = 1.0 / du_dx;

    std::array<double, N + 1> uj, tj;
    std::vector<double> w2(N + 1), r(N + 1);
    for (std::size_t j = 0; j <= N; ++j) {
        double x = std::cos(kPi * static_cast<double>(j) / static_cast<double>(N));
        uj[j] = s.ua + (x + 1.0) * half;
        tj[j] = std::exp(uj[j]);
        double d = log_weight_derivative(p, tj[j]);
        double dp = log_weight_derivative_dt(p, tj[j]);
        double q = 0.25 * d * d + 0.5 * dp;
        w2[j] = lam * lam + p.rho() * p.rho() - q;
        if (!(w2[j] > 0.0))
            throw ConvergenceError("phase solve: turning point inside interval");
        r[j] = std::sqrt(w2[j]);
    }

    // The fixed point is reached after one pass (corrections are O(W^-2)
    // relative); further passes only polish second-order terms. High modes
    // are clipped each pass: repeated spectral differentiation would
    // otherwise amplify the rounding floor by ~300x per iteration.
    constexpr std::size_t kClip = 48;
    for (int it = 0; it < 3; ++it) {
        std::vector<double> rc = cheb_coeffs(r);
        for (std::size_t k = kClip; k < rc.size(); ++k) rc[k] = 0.0;
        std::vector<double> d1 = cheb_derivative(rc, d_dx_to_d_du);
        std::vector<double> d2 = cheb_derivative(d1, d_dx_to_d_du);
        for (std::size_t j = 0; j <= N; ++j) {
            double x = std::cos(kPi * static_cast<double>(j) / static_cast<double>(N));
            double ru = cheb_eval(d1, x);
            double ruu = cheb_eval(d2, x);
            double rp = ru / tj[j];
            double rpp = (ruu - ru) / (tj[j] * tj[j]);
            double val = w2[j] + 0.75 * (rp / r[j]) * (rp / r[j]) - 0.5 * rpp / r[j];
            if (!(val > 0.0)) throw ConvergenceError("phase solve: lost positivity");
            r[j] = std::sqrt(val);
        }
    }

    s.r_coef = cheb_coeffs(r);
    for (std::size_t k = kClip; k < s.r_coef.size(); ++k) s.r_coef[k] = 0.0;
    s.drdu_coef = cheb_derivative(s.r_coef, d_dx_to_d_du);
    std::vector<double> integrand(N + 1);
    for (std::size_t j = 0; j <= N; ++j) integrand[j] = r[j] * tj[j];
    s.psi_coef = cheb_antiderivative(cheb_coeffs(integrand), du_dx);

    // Match amplitude and phase to the connection expansion at tb.
    double phi_b = phi_series_connection(p, tb, lam, cfg);
    double dphi_b = phi_dt_impl(p, tb, lam, cfg);
    double delta_b = weight_delta(p, tb);
    double sq = std::sqrt(delta_b);
    double u_b = sq * phi_b;
    double up_b = sq * (dphi_b + 0.5 * log_weight_derivative(p, tb) * phi_b);
    double r_b = cheb_eval(s.r_coef, 1.0);
    double rp_b = cheb_eval(s.drdu_coef, 1.0) / tb;
    double ccos = u_b * std::sqrt(r_b);
    double ssin = -(up_b + 0.5 * (rp_b / r_b) * u_b) / std::sqrt(r_b);
    s.amp = std::hypot(ccos, ssin);
    s.delta = std::atan2(ssin, ccos) - cheb_eval(s.psi_coef, 1.0);
    return s;
}

inline const PhaseSolution& phase_solution(const JacobiParams& p, double lam,
                                           const SeriesConfig& cfg) {
    thread_local std::list<PhaseSolution> cache;
    for (auto it = cache.begin(); it != cache.end(); ++it) {
        if (it->lam == lam && it->params.alpha == p.alpha && it->params.beta == p.beta) {
            cache.splice(cache.begin(), cache, it);
            return cache.front();
        }
    }
    cache.push_front(build_phase_solution(p, lam, cfg));
    if (cache.size() > 8) cache.pop_back();
    return cache.front();
}

enum class PhiBranch { DIRECT, PFAFF, CONNECTION, ODE_CONT, PHASE };

inline PhiBranch select_branch(double t, double lam) {
    double sh = std::sinh(t), th = std::tanh(t), ch = std::cosh(t);
    double ich2 = 1.0 / (ch * ch);
    if (lam < 0.5) {
        if (sh * sh <= 0.5) return PhiBranch::DIRECT;
        if (th * th <= 0.95) return PhiBranch::PFAFF;
        return PhiBranch::ODE_CONT;
    }
    if (sh * sh <= 0.5 && lam * sh <= 14.0) return PhiBranch::DIRECT;
    if (th * th <= 0.95 && lam * th <= 14.0) return PhiBranch::PFAFF;
    if (ich2 <= 0.92 && lam * ich2 <= 44.0) return PhiBranch::CONNECTION;
    if (lam >= 40.0) return PhiBranch::PHASE;
    return PhiBranch::CONNECTION;  // unreachable by the zone coverage bounds
}

inline double phi_impl(const JacobiParams& p, double t, double lam, const SeriesConfig& cfg) {
    if (t == 0.0) return 1.0;
    switch (select_branch(t, lam)) {
        case PhiBranch::DIRECT: return phi_series_direct(p, t, lam, cfg);
        case PhiBranch::PFAFF: return phi_series_pfaff(p, t, lam, cfg);
        case PhiBranch::CONNECTION: return phi_series_connection(p, t, lam, cfg);
        case PhiBranch::ODE_CONT: return phi_ode_continued(p, t, lam, cfg, false);
        case PhiBranch::PHASE: return phase_solution(p, lam, cfg).phi_at(t);
    }
    return 0.0;
}

// phi_t'(t) = -((rho^2 + lam^2) sinh t cosh t / (2(alpha+1))) phi^{(a+1,b+1)}(t).
inline double phi_dt_impl(const JacobiParams& p, double t, double lam, const SeriesConfig& cfg) {
    if (t == 0.0) return 0.0;
    JacobiParams up{p.alpha + 1.0, p.beta + 1.0};
    double rho = p.rho();
    double factor = -(rho * rho + lam * lam) * std::sinh(t) * std::cosh(t) /
                    (2.0 * (p.alpha + 1.0));
    return factor * phi_impl(up, t, lam, cfg);
}

inline void check_domain(double t, double lam) {
    if (!std::isfinite(t) || !std::isfinite(lam))
        throw std::invalid_argument("jacobi: non-finite argument");
    if (!(t >= 0.0) || t > kMaxT)
        throw std::invalid_argument("jacobi: need 0 <= t <= 20");
    if (std::fabs(lam) > kMaxLambda)
        throw std::invalid_argument("jacobi: need |lambda| <= 1e4");
}

}  // namespace detail

// phi_lambda^{(alpha,beta)}(t); even in lambda, phi_lambda(0) = 1.
inline double phi(const JacobiParams& p, double t, double lam, const SeriesConfig& cfg = {}) {
    validate(p);
    detail::check_domain(t, lam);
    return detail::phi_impl(p, t, std::fabs(lam), cfg);
}

// d/dt phi_lambda(t), via the parameter-shift identity.
inline double phi_dt(const JacobiParams& p, double t, double lam, const SeriesConfig& cfg = {}) {
    validate(p);
    detail::check_domain(t, lam);
    return detail::phi_dt_impl(p, t, std::fabs(lam), cfg);
}

// psi_lambda = phi_lambda / phi_0.
inline double psi(const JacobiParams& p, double t, double lam, const SeriesConfig& cfg = {}) {
    return phi(p, t, lam, cfg) / phi(p, t, 0.0, cfg);
}

inline double psi_dt(const JacobiParams& p, double t, double lam, const SeriesConfig& cfg = {}) {
    double p0 = phi(p, t, 0.0, cfg);
    return (phi_dt(p, t, lam, cfg) * p0 - phi(p, t, lam, cfg) * phi_dt(p, t, 0.0, cfg)) /
           (p0 * p0);
}

// Spectral density s(lambda) of the inverse transform measure, computed in
// log space from the Harish-Chandra c-function:
//   s = (2 pi)^{-1} |c|^{-2},
//   c = 2^{rho - i lam} Gamma(a+1) Gamma(i lam) /
//       (Gamma((rho+i lam)/2) Gamma((rho+i lam)/2 - b)).
inline double spectral_weight(const JacobiParams& p, double lam) {
    validate(p);
    lam = std::fabs(lam);
    if (!(lam <= kMaxLambda)) throw std::invalid_argument("spectral_weight: need |lambda| <= 1e4");
    if (lam == 0.0) return 0.0;
    const std::complex<double> ilam(0.0, lam);
    double log_abs_c = p.rho() * std::log(2.0) + log_gamma(p.alpha + 1.0) +
                       log_gamma(ilam).real() - log_gamma(0.5 * (p.rho() + ilam)).real() -
                       log_gamma(0.5 * (p.rho() + ilam) - p.beta).real();
    return std::exp(-2.0 * log_abs_c) / (2.0 * kPi);
}

// Leading large-lambda form: (2/pi)^{1/2} (Delta(t) s(lam))^{-1/2}
// cos(lam t - pi (alpha + 1/2)/2).
inline double asymptotic_phi(const JacobiParams& p, double t, double lam) {
    validate(p);
    if (!(t > 0.0) || !(lam > 0.0))
        throw std::invalid_argument("asymptotic_phi: need t > 0 and lambda > 0");
    double env = std::sqrt(2.0 / kPi / (weight_delta(p, t) * spectral_weight(p, lam)));
    return env * std::cos(lam * t - 0.5 * kPi * (p.alpha + 0.5));
}

// d/dlambda phi_lambda(t), by Richardson-extrapolated central differences
// (the lambda-derivative has no closed form analogous to the t-shift).
inline double phi_dlambda(const JacobiParams& p, double t, double lam,
                          const SeriesConfig& cfg = {}) {
    validate(p);
    detail::check_domain(t, lam);
    lam = std::fabs(lam);
    double h = 0.05 / std::max(1.0, t);
    auto central = [&](double hh) {
        return (detail::phi_impl(p, t, lam + hh, cfg) -
                detail::phi_impl(p, t, std::fabs(lam - hh), cfg)) /
               (2.0 * hh);
    };
    double d0 = central(h), d1 = central(0.5 * h), d2 = central(0.25 * h);
    double r1 = (4.0 * d1 - d0) / 3.0;
    double r2 = (4.0 * d2 - d1) / 3.0;
    return (16.0 * r2 - r1) / 15.0;
}

}  // namespace jlogan
