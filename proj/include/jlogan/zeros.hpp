#pragma once
// Zero tables in the spectral parameter for fixed tau:
//   lambda_k : zeros of lam -> phi_lam(tau)
//   mu_k     : zeros of lam -> phi_lam'(tau) (t-derivative)
//   lambda_k*: zeros of lam -> psi_lam'(tau)
// and the inverse problem in t for fixed gamma: t_m(gamma) is the m-th
// positive zero of t -> phi_gamma(t), etc. All are simple zeros of smooth
// functions with asymptotic spacing pi/tau (resp. pi/gamma), found by a
// sign-change scan at a quarter of that spacing followed by bisection.

#include <vector>

#include "jlogan/core.hpp"
#include "jlogan/jacobi.hpp"

namespace jlogan {

enum class ZeroKind { LAMBDA, MU, LAMBDA_STAR };

struct ZeroTable {
    double tau = 0.0;
    ZeroKind kind = ZeroKind::LAMBDA;
    std::vector<double> zeros;
    double tol = 0.0;  // bound on the absolute error of each entry
};

inline constexpr std::size_t kMaxZeroCount = 200;

namespace detail {

template <class F>
std::vector<double> scan_zeros(F&& f, double start, double step, std::size_t count,
                               double upper_limit, const char* what) {
    std::vector<double> zs;
    zs.reserve(count);
    double x0 = start;
    double f0 = f(x0);
    while (zs.size() < count) {
        double x1 = x0 + step;
        if (x1 > upper_limit)
            throw ConvergenceError(std::string(what) + ": scan limit reached before all zeros");
        double f1 = f(x1);
        if (f0 == 0.0) {
            zs.push_back(x0);
        } else if (f0 * f1 < 0.0) {
            double a = x0, b = x1, fa = f0;
            for (int it = 0; it < 200; ++it) {
                double m = 0.5 * (a + b);
                if (b - a <= 1e-13 * std::max(1.0, std::fabs(m))) break;
                double fm = f(m);
                if (fm == 0.0) {
                    a = b = m;
                    break;
                }
                if (fa * fm < 0.0) {
                    b = m;
                } else {
                    a = m;
                    fa = fm;
                }
            }
            zs.push_back(0.5 * (a + b));
        }
        x0 = x1;
        f0 = f1;
    }
    return zs;
}

inline void check_zero_request(double tau, std::size_t count) {
    if (!(tau > 0.0) || tau > kMaxT)
        throw std::invalid_argument("zeros: need 0 < tau <= 20");
    if (count > kMaxZeroCount)
        throw std::invalid_argument("zeros: at most 200 zeros per table");
}

}  // namespace detail

// Zeros lambda_1 < lambda_2 < ... of lam -> phi_lam(tau).
inline ZeroTable lambda_zeros(const JacobiParams& p, double tau, std::size_t count,
                              const SeriesConfig& cfg = {}) {
    validate(p);
    detail::check_zero_request(tau, count);
    ZeroTable table{tau, ZeroKind::LAMBDA, {}, 0.0};
    auto f = [&](double lam) { return detail::phi_impl(p, tau, lam, cfg); };
    table.zeros = detail::scan_zeros(f, 1e-3, kPi / (4.0 * tau), count, kMaxLambda, "lambda_zeros");
    table.tol = table.zeros.empty() ? 0.0 : 1e-13 * std::max(1.0, table.zeros.back());
    return table;
}

// Zeros mu_1 < mu_2 < ... of lam -> (d/dt) phi_lam(tau).
inline ZeroTable mu_zeros(const JacobiParams& p, double tau, std::size_t count,
                          const SeriesConfig& cfg = {}) {
    validate(p);
    detail::check_zero_request(tau, count);
    ZeroTable table{tau, ZeroKind::MU, {}, 0.0};
    auto f = [&](double lam) { return detail::phi_dt_impl(p, tau, lam, cfg); };
    table.zeros = detail::scan_zeros(f, 1e-3, kPi / (4.0 * tau), count, kMaxLambda, "mu_zeros");
    table.tol = table.zeros.empty() ? 0.0 : 1e-13 * std::max(1.0, table.zeros.back());
    return table;
}

// Zeros lambda_1* < lambda_2* < ... of lam -> (d/dt) psi_lam(tau). The
// normalization by phi_0 only rescales by constants at fixed tau, so the
// defining function is phi_lam'(tau) phi_0(tau) - phi_lam(tau) phi_0'(tau).
inline ZeroTable lambda_star_zeros(const JacobiParams& p, double tau, std::size_t count,
                                   const SeriesConfig& cfg = {}) {
    validate(p);
    detail::check_zero_request(tau, count);
    ZeroTable table{tau, ZeroKind::LAMBDA_STAR, {}, 0.0};
    double p0 = detail::phi_impl(p, tau, 0.0, cfg);
    double dp0 = detail::phi_dt_impl(p, tau, 0.0, cfg);
    auto f = [&](double lam) {
        return detail::phi_dt_impl(p, tau, lam, cfg) * p0 - detail::phi_impl(p, tau, lam, cfg) * dp0;
    };
    table.zeros =
        detail::scan_zeros(f, 1e-3, kPi / (4.0 * tau), count, kMaxLambda, "lambda_star_zeros");
    table.tol = table.zeros.empty() ? 0.0 : 1e-13 * std::max(1.0, table.zeros.back());
    return table;
}

inline ZeroTable zeros(const JacobiParams& p, double tau, std::size_t count, ZeroKind kind,
                       const SeriesConfig& cfg = {}) {
    switch (kind) {
        case ZeroKind::LAMBDA: return lambda_zeros(p, tau, count, cfg);
        case ZeroKind::MU: return mu_zeros(p, tau, count, cfg);
        case ZeroKind::LAMBDA_STAR: return lambda_star_zeros(p, tau, count, cfg);
    }
    throw std::invalid_argument("zeros: unknown kind");
}

// m-th positive zero in t of the function selected by `kind` at fixed
// spectral parameter gamma: phi_gamma(.) for LAMBDA, phi_gamma'(.) for MU,
// psi_gamma'(.) for LAMBDA_STAR. By construction lambda_m(t_m(gamma)) = gamma
// and likewise for the starred variant.
inline double t_of_gamma(const JacobiParams& p, double gamma, std::size_t m, ZeroKind kind,
                         const SeriesConfig& cfg = {}) {
    validate(p);
    if (!(gamma > 0.0) || gamma > kMaxLambda)
        throw std::invalid_argument("t_of_gamma: need 0 < gamma <= 1e4");
    if (m == 0 || m > kMaxZeroCount)
        throw std::invalid_argument("t_of_gamma: need 1 <= m <= 200");
    auto f = [&](double t) -> double {
        switch (kind) {
            case ZeroKind::LAMBDA: return detail::phi_impl(p, t, gamma, cfg);
            case ZeroKind::MU: return detail::phi_dt_impl(p, t, gamma, cfg);
            case ZeroKind::LAMBDA_STAR:
                return detail::phi_dt_impl(p, t, gamma, cfg) * detail::phi_impl(p, t, 0.0, cfg) -
                       detail::phi_impl(p, t, gamma, cfg) * detail::phi_dt_impl(p, t, 0.0, cfg);
        }
        return 0.0;
    };
    double step = std::min(0.5, kPi / (4.0 * gamma));
    auto zs = detail::scan_zeros(f, 1e-3, step, m, kMaxT, "t_of_gamma");
    return zs.back();
}

}  // namespace jlogan
