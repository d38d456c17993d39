#pragma once
// Truncated Taylor (jet) arithmetic around a fixed basepoint, plus the jet of
// the eigenfunction ODE. A jet holds coefficients c[0..n] of sum c_k h^k; all
// jets inside one computation share the same truncation order.

#include <cstddef>
#include <vector>

#include "jlogan/core.hpp"

namespace jlogan {

using Jet = std::vector<double>;

inline Jet jet_const(double v, std::size_t order) {
    Jet j(order + 1, 0.0);
    j[0] = v;
    return j;
}

inline Jet jet_add(const Jet& a, const Jet& b) {
    Jet r(a);
    for (std::size_t k = 0; k < r.size(); ++k) r[k] += b[k];
    return r;
}

inline Jet jet_scale(const Jet& a, double s) {
    Jet r(a);
    for (double& v : r) v *= s;
    return r;
}

inline Jet jet_mul(const Jet& a, const Jet& b) {
    Jet r(a.size(), 0.0);
    for (std::size_t k = 0; k < r.size(); ++k)
        for (std::size_t j = 0; j <= k; ++j) r[k] += a[j] * b[k - j];
    return r;
}

inline Jet jet_div(const Jet& a, const Jet& b) {
    Jet r(a.size(), 0.0);
    r[0] = a[0] / b[0];
    for (std::size_t k = 1; k < r.size(); ++k) {
        double acc = a[k];
        for (std::size_t j = 0; j < k; ++j) acc -= r[j] * b[k - j];
        r[k] = acc / b[0];
    }
    return r;
}

// Jets of sinh and cosh at basepoint t0.
inline Jet jet_sinh(double t0, std::size_t order) {
    Jet r(order + 1);
    double s = std::sinh(t0), c = std::cosh(t0), fact = 1.0;
    for (std::size_t k = 0; k <= order; ++k) {
        if (k > 0) fact *= static_cast<double>(k);
        r[k] = ((k % 2 == 0) ? s : c) / fact;
    }
    return r;
}

inline Jet jet_cosh(double t0, std::size_t order) {
    Jet r(order + 1);
    double s = std::sinh(t0), c = std::cosh(t0), fact = 1.0;
    for (std::size_t k = 0; k <= order; ++k) {
        if (k > 0) fact *= static_cast<double>(k);
        r[k] = ((k % 2 == 0) ? c : s) / fact;
    }
    return r;
}

// Jet of D(t) = Delta'(t)/Delta(t) = (2a+1) coth t + (2b+1) tanh t at t0 > 0.
inline Jet jet_log_weight_derivative(const JacobiParams& p, double t0, std::size_t order) {
    Jet sh = jet_sinh(t0, order), ch = jet_cosh(t0, order);
    return jet_add(jet_scale(jet_div(ch, sh), 2.0 * p.alpha + 1.0),
                   jet_scale(jet_div(sh, ch), 2.0 * p.beta + 1.0));
}

// Jet at t0 > 0 of the solution of u'' + D(t) u' + (lambda^2 + rho^2) u = 0
// with u(t0) = u0 and u'(t0) = du0. The coefficient recurrence is
//   (k+2)(k+1) c_{k+2} = -( sum_j d_j (k+1-j) c_{k+1-j} + (lambda^2+rho^2) c_k ).
inline Jet jet_eigen_ode(const JacobiParams& p, double lam, double t0, double u0, double du0,
                         std::size_t order) {
    Jet d = jet_log_weight_derivative(p, t0, order);
    double omega2 = lam * lam + p.rho() * p.rho();
    Jet c(order + 1, 0.0);
    c[0] = u0;
    if (order >= 1) c[1] = du0;
    for (std::size_t k = 0; k + 2 <= order; ++k) {
        double acc = omega2 * c[k];
        for (std::size_t j = 0; j <= k; ++j)
            acc += d[j] * static_cast<double>(k + 1 - j) * c[k + 1 - j];
        c[k + 2] = -acc / static_cast<double>((k + 2) * (k + 1));
    }
    return c;
}

// Value of the jet at offset h from its basepoint.
inline double jet_eval(const Jet& c, double h) {
    double acc = 0.0;
    for (std::size_t k = c.size(); k-- > 0;) acc = acc * h + c[k];
    return acc;
}

// Value of the jet's first derivative at offset h.
inline double jet_eval_derivative(const Jet& c, double h) {
    double acc = 0.0;
    for (std::size_t k = c.size(); k-- > 1;) acc = acc * h + c[k] * static_cast<double>(k);
    return acc;
}

// k-th derivative at the basepoint itself: k! c_k.
inline double jet_derivative_at_base(const Jet& c, std::size_t k) {
    double fact = 1.0;
    for (std::size_t j = 2; j <= k; ++j) fact *= static_cast<double>(j);
    return (k < c.size()) ? fact * c[k] : 0.0;
}

}  // namespace jlogan
