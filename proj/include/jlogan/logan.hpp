#pragma once
// Extremal functions for the generalized Logan problem and their
// certificates:
//   F_m(lam) = phi_lam(tau) / prod_{k<=m} (1 - lam^2/lam_k^2),
//   f_m(lam) = phi_lam(tau) F_m(lam),
// the eigenfunction polynomial p_m whose transform over [0, tau] is F_m,
// analytic derivatives of such expansions at tau (for zero-multiplicity
// certificates), the sign-adjusted spectral sup Lambda_m, moment
// orthogonality checks, and a zero counter for linear combinations drawn
// from a Chebyshev system.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "jlogan/core.hpp"
#include "jlogan/jacobi.hpp"
#include "jlogan/quadrature.hpp"
#include "jlogan/transform.hpp"
#include "jlogan/zeros.hpp"

namespace jlogan {

inline constexpr int kMaxExtremizerOrder = 20;
inline constexpr int kMaxChebyshevBasis = 12;

// Partial-fraction coefficients of prod_{k}(1 - lam^2/lam_k^2)^{-1}:
//   A_i = lam_i^2 prod_{j != i} lam_j^2 / (lam_j^2 - lam_i^2),
// accumulated as O(1) ratio factors so large node counts cannot overflow.
// Signs alternate: sign A_i = (-1)^{i-1}.
inline std::vector<double> partial_fraction_coefficients(const std::vector<double>& nodes) {
    std::vector<double> a(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        double li2 = nodes[i] * nodes[i];
        double ai = li2;
        for (std::size_t j = 0; j < nodes.size(); ++j) {
            if (j == i) continue;
            double lj2 = nodes[j] * nodes[j];
            ai *= lj2 / (lj2 - li2);
        }
        a[i] = ai;
    }
    return a;
}

enum class ExtremizerKind { F_M, SMALL_F_M };

// Evaluator for F_m or f_m. Within |lam - lam_k| < 1e-3 lam_k of a node the
// quotient 0/0 is replaced by a local expansion of phi around the node (the
// nodes are exactly where these functions get evaluated most, as Gauss
// nodes), using cached first and second lambda-derivatives.
struct Extremizer {
    int m = 0;
    double tau = 0.0;
    JacobiParams params{};
    std::vector<double> zeros;  // lam_1..lam_m
    ExtremizerKind kind = ExtremizerKind::SMALL_F_M;
    SeriesConfig scfg{};
    std::vector<double> dphi1;  // d/dlam phi at each node
    std::vector<double> dphi2;  // d^2/dlam^2 phi at each node

    double operator()(double lam) const {
        lam = std::fabs(lam);
        std::size_t win = zeros.size();
        for (std::size_t k = 0; k < zeros.size(); ++k) {
            if (std::fabs(lam - zeros[k]) < 1e-3 * zeros[k]) {
                win = k;
                break;
            }
        }
        double prod = 1.0;
        for (std::size_t k = 0; k < zeros.size(); ++k) {
            if (k == win) continue;
            prod *= 1.0 - (lam * lam) / (zeros[k] * zeros[k]);
        }
        if (win == zeros.size()) {
            double ph = detail::phi_impl(params, tau, lam, scfg);
            return kind == ExtremizerKind::F_M ? ph / prod : ph * ph / prod;
        }
        // phi(lam) ~ d1 delta + d2 delta^2 / 2 against the vanishing factor
        // (1 - lam^2/z^2) = -delta (z + lam) / z^2.
        double z = zeros[win];
        double delta = lam - z;
        double slope = dphi1[win] + 0.5 * dphi2[win] * delta;
        double factor = -(z + lam) / (z * z);
        if (kind == ExtremizerKind::F_M) return slope / (factor * prod);
        return delta * slope * slope / (factor * prod);
    }
};

inline Extremizer build_extremizer(const JacobiParams& p, int m, double tau,
                                   ExtremizerKind kind, const SeriesConfig& scfg = {}) {
    validate(p);
    if (m < 1 || m > kMaxExtremizerOrder)
        throw std::invalid_argument("build_extremizer: need 1 <= m <= 20");
    if (!(tau > 0.0) || tau > kMaxT)
        throw std::invalid_argument("build_extremizer: need 0 < tau <= 20");
    Extremizer f;
    f.m = m;
    f.tau = tau;
    f.params = p;
    f.kind = kind;
    f.scfg = scfg;
    f.zeros = lambda_zeros(p, tau, static_cast<std::size_t>(m), scfg).zeros;
    f.dphi1.resize(f.zeros.size());
    f.dphi2.resize(f.zeros.size());
    const double h = std::min(0.05 / std::max(1.0, tau), 0.2);
    for (std::size_t k = 0; k < f.zeros.size(); ++k) {
        double z = f.zeros[k];
        f.dphi1[k] = phi_dlambda(p, tau, z, scfg);
        double up = detail::phi_impl(p, tau, z + h, scfg);
        double mid = detail::phi_impl(p, tau, z, scfg);
        double dn = detail::phi_impl(p, tau, std::fabs(z - h), scfg);
        f.dphi2[k] = (up - 2.0 * mid + dn) / (h * h);
    }
    return f;
}

enum class EigenBasis { PHI, PSI_SHIFTED, PSI_PLUS_CONST };

// Linear combination of eigenfunctions, sum_i B_i phi_{lam_i}(t) for the PHI
// basis (the PSI variants belong to the even-index certificates).
struct EigenExpansion {
    std::vector<double> coefficients;
    std::vector<double> frequencies;
    EigenBasis basis_kind = EigenBasis::PHI;
    double tau = 0.0;
    JacobiParams params{};
    SeriesConfig scfg{};

    double operator()(double t) const {
        double acc = 0.0;
        switch (basis_kind) {
            case EigenBasis::PHI:
                for (std::size_t i = 0; i < coefficients.size(); ++i)
                    acc += coefficients[i] * phi(params, t, frequencies[i], scfg);
                break;
            case EigenBasis::PSI_SHIFTED:
                for (std::size_t i = 0; i < coefficients.size(); ++i)
                    acc += coefficients[i] * (psi(params, t, frequencies[i], scfg) -
                                              psi(params, tau, frequencies[i], scfg));
                break;
            case EigenBasis::PSI_PLUS_CONST:
                acc = 1.0;
                for (std::size_t i = 0; i < coefficients.size(); ++i)
                    acc += coefficients[i] * psi(params, t, frequencies[i], scfg);
                break;
        }
        return acc;
    }
};

// p_m = sum_i B_i phi_{lam_i} with B_i = -A_i / (Delta(tau) phi'_{lam_i}(tau)).
// The A_i alternate in sign and so do the boundary slopes, which makes every
// B_i positive; a nonpositive B_i can only mean the ingredients lost their
// sign structure numerically, so it is treated as an error.
inline EigenExpansion p_polynomial(const JacobiParams& p, int m, double tau,
                                   const SeriesConfig& scfg = {}) {
    validate(p);
    if (m < 1 || m > kMaxExtremizerOrder)
        throw std::invalid_argument("p_polynomial: need 1 <= m <= 20");
    EigenExpansion e;
    e.basis_kind = EigenBasis::PHI;
    e.tau = tau;
    e.params = p;
    e.scfg = scfg;
    e.frequencies = lambda_zeros(p, tau, static_cast<std::size_t>(m), scfg).zeros;
    std::vector<double> a = partial_fraction_coefficients(e.frequencies);
    const double dt = weight_delta(p, tau);
    e.coefficients.resize(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        double slope = phi_dt(p, tau, e.frequencies[i], scfg);
        double bi = -a[i] / (dt * slope);
        if (!(bi > 0.0))
            throw std::runtime_error("p_polynomial: coefficient sign violation at index " +
                                     std::to_string(i + 1));
        e.coefficients[i] = bi;
    }
    return e;
}

namespace detail {

// Taylor coefficients in h of w(tau + h) for w' = 1 - w^2 (both tanh and
// coth satisfy this), seeded with w(tau).
inline std::vector<double> riccati_unit_jet(double w0, int order) {
    std::vector<double> c(static_cast<std::size_t>(order) + 1);
    c[0] = w0;
    for (int k = 0; k < order; ++k) {
        double conv = 0.0;
        for (int j = 0; j <= k; ++j) conv += c[j] * c[k - j];
        c[k + 1] = ((k == 0 ? 1.0 : 0.0) - conv) / (k + 1);
    }
    return c;
}

// Derivatives d^n/dt^n of Delta'(t)/Delta(t) = (2a+1) coth t + (2b+1) tanh t
// at tau, for n = 0..order.
inline std::vector<double> log_delta_derivatives(const JacobiParams& p, double tau,
                                                 int order) {
    std::vector<double> ch = riccati_unit_jet(1.0 / std::tanh(tau), order);
    std::vector<double> th = riccati_unit_jet(std::tanh(tau), order);
    std::vector<double> b(static_cast<std::size_t>(order) + 1);
    double fact = 1.0;
    for (int n = 0; n <= order; ++n) {
        if (n > 0) fact *= n;
        b[n] = fact * ((2.0 * p.alpha + 1.0) * ch[n] + (2.0 * p.beta + 1.0) * th[n]);
    }
    return b;
}

// Derivatives of phi_{lam} at tau up to max_order, from the differentiated
// eigenfunction equation
//   phi^(s+2) = -sum_{j<=s} C(s,j) (Delta'/Delta)^(s-j) phi^(j+1)
//               - (lam^2 + rho^2) phi^(s),
// seeded with the evaluated phi(tau) and the shift-identity phi'(tau).
inline std::vector<double> phi_derivatives_at(const JacobiParams& p, double tau, double lam,
                                              int max_order, const SeriesConfig& scfg) {
    std::vector<double> d(static_cast<std::size_t>(max_order) + 1);
    d[0] = phi_impl(p, tau, lam, scfg);
    if (max_order >= 1) d[1] = phi_dt_impl(p, tau, lam, scfg);
    if (max_order < 2) return d;
    std::vector<double> b = log_delta_derivatives(p, tau, max_order - 1);
    double rho = p.rho();
    double ev = lam * lam + rho * rho;
    std::vector<std::vector<double>> binom(static_cast<std::size_t>(max_order) - 1);
    for (std::size_t s = 0; s < binom.size(); ++s) {
        binom[s].resize(s + 1);
        binom[s][0] = 1.0;
        for (std::size_t j = 1; j <= s; ++j)
            binom[s][j] = binom[s - 1][j - 1] + (j < s ? binom[s - 1][j] : 0.0);
    }
    for (int s = 0; s + 2 <= max_order; ++s) {
        double acc = -ev * d[s];
        for (int j = 0; j <= s; ++j) acc -= binom[s][j] * b[s - j] * d[j + 1];
        d[s + 2] = acc;
    }
    return d;
}

}  // namespace detail

struct JetReport {
    std::vector<double> derivatives;  // order 0..max_order of the expansion at tau
    std::vector<double> scales;       // sum_i |B_i| |phi_i^(s)(tau)|, the cancellation scale
    std::vector<std::string> warnings;
};

// Derivatives of a PHI-basis expansion at tau, computed analytically through
// the eigenfunction equation; orders up to four are cross-checked against
// Richardson finite differences of the evaluator.
inline JetReport derivatives_at_tau(const JacobiParams& p, const EigenExpansion& expansion,
                                    int max_order) {
    validate(p);
    if (expansion.basis_kind != EigenBasis::PHI)
        throw std::invalid_argument("derivatives_at_tau: expansion basis must be PHI");
    int m = static_cast<int>(expansion.coefficients.size());
    if (max_order < 0 || max_order > 2 * m + 2)
        throw std::invalid_argument("derivatives_at_tau: need 0 <= max_order <= 2m+2");
    const double tau = expansion.tau;
    JetReport rep;
    rep.derivatives.assign(static_cast<std::size_t>(max_order) + 1, 0.0);
    rep.scales.assign(static_cast<std::size_t>(max_order) + 1, 0.0);
    for (std::size_t i = 0; i < expansion.coefficients.size(); ++i) {
        std::vector<double> jet = detail::phi_derivatives_at(
            p, tau, expansion.frequencies[i], max_order, expansion.scfg);
        for (int s = 0; s <= max_order; ++s) {
            rep.derivatives[s] += expansion.coefficients[i] * jet[s];
            rep.scales[s] += std::fabs(expansion.coefficients[i] * jet[s]);
        }
    }
    if (max_order > 12)
        rep.warnings.push_back("derivative orders above 12 may lose significance");
    // Finite-difference cross-check of the low orders. The comparison scale
    // is a derivative ladder: a vanishing high-order sum still has the
    // natural magnitude scale_u L^(s-u) of its ingredients, and the stencil
    // truncation error itself carries the magnitude of the derivative two
    // orders up, times h^2.
    const double h = std::min({0.04, tau / 5.0, (kMaxT - tau) / 2.5});
    if (h <= 0.0 || max_order < 1) return rep;
    double lad = 1.0;
    for (double lam : expansion.frequencies) lad = std::max(lad, 1.0 + lam);
    auto ladder_scale = [&](int s) {
        double r = 0.0, pw = 1.0;
        int top = std::min(s, max_order);
        for (int e = 0; e < s - top; ++e) pw *= lad;
        for (int u = top; u >= 0; --u) {
            r = std::max(r, rep.scales[u] * pw);
            pw *= lad;
        }
        return r;
    };
    auto eval = [&](double t) { return expansion(t); };
    double e0 = eval(tau);
    double ep1 = eval(tau + h), em1 = eval(tau - h);
    double ep2 = eval(tau + 2.0 * h), em2 = eval(tau - 2.0 * h);
    double eph = eval(tau + 0.5 * h), emh = eval(tau - 0.5 * h);
    auto fd = [&](int s) {
        switch (s) {
            case 1: {
                double c1 = (ep1 - em1) / (2.0 * h);
                double c2 = (eph - emh) / h;
                return (4.0 * c2 - c1) / 3.0;
            }
            case 2: return (ep1 - 2.0 * e0 + em1) / (h * h);
            case 3: return (ep2 - 2.0 * ep1 + 2.0 * em1 - em2) / (2.0 * h * h * h);
            case 4: return (ep2 - 4.0 * ep1 + 6.0 * e0 - 4.0 * em1 + em2) / (h * h * h * h);
        }
        return 0.0;
    };
    for (int s = 1; s <= std::min(4, max_order); ++s) {
        double tol = 1e-3 * ladder_scale(s) + 0.5 * h * h * ladder_scale(s + 2);
        if (std::fabs(fd(s) - rep.derivatives[s]) > tol)
            rep.warnings.push_back("finite-difference cross-check disagrees at order " +
                                   std::to_string(s));
    }
    return rep;
}

struct LambdaSupResult {
    double value = 0.0;
    bool boundary_warning = false;  // last sign change suspiciously near the bound
};

// Largest frequency where (-1)^(m-1) f is still positive, located by a grid
// scan over [0, bound] and refined by bisection. Returns 0 when the adjusted
// function is nowhere positive on the grid.
template <class F>
LambdaSupResult lambda_sup(F&& f, int sign_exponent, double bound, double step) {
    if (!(bound > 0.0) || !(step > 0.0))
        throw std::invalid_argument("lambda_sup: need positive bound and step");
    const double sgn = (sign_exponent % 2 != 0) ? 1.0 : -1.0;
    auto s = [&](double lam) { return sgn * f(lam); };
    std::size_t n = static_cast<std::size_t>(std::ceil(bound / step));
    double last_pos = -1.0, next_after = 0.0;
    double prev_v = s(0.0);
    if (prev_v > 0.0) last_pos = 0.0;
    for (std::size_t j = 1; j <= n; ++j) {
        double x = std::min(bound, step * static_cast<double>(j));
        double v = s(x);
        if (v > 0.0) {
            last_pos = x;
        } else if (prev_v > 0.0) {
            next_after = x;
        }
        prev_v = v;
    }
    LambdaSupResult res;
    if (last_pos < 0.0) return res;
    if (prev_v > 0.0) {
        // still positive at the bound; nothing to refine
        res.value = bound;
        res.boundary_warning = true;
        return res;
    }
    double a = last_pos, b = std::min(bound, last_pos + step);
    if (next_after > a) b = next_after;
    for (int it = 0; it < 200 && b - a > 1e-14 * std::max(1.0, b); ++it) {
        double mid = 0.5 * (a + b);
        if (s(mid) > 0.0)
            a = mid;
        else
            b = mid;
    }
    res.value = 0.5 * (a + b);
    res.boundary_warning = bound - res.value < 2.0 * step;
    return res;
}

// Default search: bound at the (m+8)-th node, grid step pi/(64 tau).
inline LambdaSupResult lambda_sup(const Extremizer& f) {
    ZeroTable ext = lambda_zeros(f.params, f.tau, static_cast<std::size_t>(f.m) + 8, f.scfg);
    return lambda_sup(f, f.m, ext.zeros.back(), kPi / (64.0 * f.tau));
}

struct OrthogonalityCheck {
    int k = 0;
    double value = 0.0;      // int lam^{2k} f_m dsigma
    double scale = 0.0;      // int lam^{2k} |f_m| dsigma
    double tolerance = 0.0;  // 1e-6 * scale
    bool pass = false;
};

struct OrthogonalityReport {
    std::vector<OrthogonalityCheck> checks;
    bool all_pass = true;
};

// The even moments of f_m against dsigma through order 2(m-1) all vanish;
// each is compared against the same moment of |f_m| as scale. The integrand
// decays like lam^(2k-2m) with a monotone mean, which generic tail
// acceleration resolves far too slowly for the tolerance, so the tail is
// split as in the quadrature weights: the mean of phi^2 s is 1/(pi Delta(tau))
// to leading order, and against that constant the model
//   M(lam) = lam^{2k} / (pi Delta(tau) prod_i (1 - lam^2/lam_i^2))
//          = sum_i A_i lam_i^{2k} / (pi Delta(tau) (lam_i^2 - lam^2))
// (the polynomial part of the division cancels through the vanishing moments
// sum_i A_i lam_i^{2r} = 0, r <= m-2) integrates in closed form, while the
// remainder value_int - M is a pure tone mixture summed over resonant
// full-period panels until its envelope bound meets the tolerance.
inline OrthogonalityReport verify_orthogonality(const JacobiParams& p, int m, double tau,
                                                const QuadConfig& cfg = {},
                                                const SeriesConfig& scfg = {}) {
    validate(p);
    if (m < 1 || m > 8) throw std::invalid_argument("verify_orthogonality: need 1 <= m <= 8");
    Extremizer fm = build_extremizer(p, m, tau, ExtremizerKind::SMALL_F_M, scfg);
    const std::vector<double>& nodes = fm.zeros;
    std::vector<double> amom = partial_fraction_coefficients(nodes);
    const double dc = 1.0 / (kPi * weight_delta(p, tau));
    double node_prod = 1.0;
    for (double z : nodes) node_prod *= z * z;
    const double w = kPi / tau;  // full period of the phi^2 oscillation
    const double cut = std::max(32.0 * kPi / tau, 3.0 * nodes.back() + 40.0 / tau);
    // The scale only calibrates the tolerance, so its integral can run at a
    // relaxed relative target instead of chasing head doublings.
    QuadConfig scale_cfg = cfg;
    scale_cfg.rel_tol = std::max(cfg.rel_tol, 1e-4);
    HalfLineOptions scale_opt;
    scale_opt.panel_hint = kPi / (2.0 * tau);
    scale_opt.lambda_cut = cut;
    scale_opt.boundaries = nodes;

    OrthogonalityReport rep;
    for (int k = 0; k < m; ++k) {
        auto scale_int = [&](double lam) {
            return std::pow(lam, 2 * k) * std::fabs(fm(lam)) * spectral_weight(p, lam);
        };
        OrthogonalityCheck c;
        c.k = k;
        c.scale = integrate_half_line(scale_int, scale_cfg, scale_opt).value;
        c.tolerance = 1e-6 * c.scale;

        auto value_int = [&](double lam) {
            return std::pow(lam, 2 * k) * fm(lam) * spectral_weight(p, lam);
        };
        double head = 0.0, prev = 0.0;
        for (double z : nodes) {
            head += integrate(value_int, prev, z, cfg).value;
            prev = z;
        }
        head += integrate(value_int, prev, cut, cfg).value;

        double closed = 0.0;
        for (std::size_t i = 0; i < nodes.size(); ++i)
            closed -= amom[i] * std::pow(nodes[i], 2 * k) / (2.0 * nodes[i]) *
                      std::log((cut + nodes[i]) / (cut - nodes[i]));
        closed *= dc;

        // Far end where the tone envelope |M(far)|/(2 tau) is safely below
        // the tolerance; the remainder panels are plain resonant sums.
        auto diff = [&](double lam) {
            double prod = 1.0;
            for (double z : nodes) prod *= 1.0 - (lam * lam) / (z * z);
            double ph = detail::phi_impl(p, tau, lam, scfg);
            double mean_gap = ph * ph * spectral_weight(p, lam) - dc;
            return std::pow(lam, 2 * k) * mean_gap / prod;
        };
        const double target = std::max(2.5e-7 * c.scale, 1e-300);
        const int drop = 2 * (m - k);
        double far = std::pow(dc * node_prod / (2.0 * tau * target), 1.0 / drop);
        far = std::min(std::max(far, cut + 40.0 * w), 0.9 * kMaxLambda);
        std::size_t panels = static_cast<std::size_t>(std::ceil((far - cut) / w));
        panels = std::min<std::size_t>(panels, 6000);
        double rem = 0.0;
        for (std::size_t j = 0; j < panels; ++j)
            rem += detail::gl15_panel(diff, cut + w * j, cut + w * (j + 1));

        c.value = head + closed + rem;
        c.pass = std::fabs(c.value) <= c.tolerance;
        rep.all_pass = rep.all_pass && c.pass;
        rep.checks.push_back(c);
    }
    return rep;
}

struct ZeroCountReport {
    int count = 0;         // sign changes plus twice the tangential touches
    int sign_changes = 0;
    int tangencies = 0;
    bool resolution_warning = false;  // two zeros closer than 3 scan steps
    double scale = 0.0;               // max |p| over the scan
};

// Zero count of p = sum_i c_i basis_i from precomputed samples on a uniform
// scan grid, where basis_values[i][j] holds basis_i at the j-th scan point.
// Tangential zeros (local minima of |p| below 1e-8 of scale without a sign
// change) count twice, matching even multiplicity.
inline ZeroCountReport chebyshev_zero_count(const std::vector<std::vector<double>>& basis_values,
                                            const std::vector<double>& coefficients) {
    if (basis_values.empty() || basis_values.size() != coefficients.size())
        throw std::invalid_argument("chebyshev_zero_count: basis/coefficient size mismatch");
    if (basis_values.size() > static_cast<std::size_t>(kMaxChebyshevBasis))
        throw std::invalid_argument("chebyshev_zero_count: basis larger than 12");
    const std::size_t n = basis_values[0].size();
    for (const auto& row : basis_values)
        if (row.size() != n)
            throw std::invalid_argument("chebyshev_zero_count: ragged basis values");
    if (n < 8) throw std::invalid_argument("chebyshev_zero_count: scan too short");
    std::vector<double> pvals(n, 0.0);
    for (std::size_t i = 0; i < basis_values.size(); ++i) {
        double ci = coefficients[i];
        if (ci == 0.0) continue;
        const std::vector<double>& row = basis_values[i];
        for (std::size_t j = 0; j < n; ++j) pvals[j] += ci * row[j];
    }
    ZeroCountReport rep;
    for (double v : pvals) rep.scale = std::max(rep.scale, std::fabs(v));
    if (rep.scale == 0.0) return rep;
    std::vector<std::size_t> where;
    int prev_sign = 0;
    for (std::size_t j = 0; j < n; ++j) {
        int sg = pvals[j] > 0.0 ? 1 : (pvals[j] < 0.0 ? -1 : 0);
        if (sg == 0) continue;
        if (prev_sign != 0 && sg != prev_sign) {
            ++rep.sign_changes;
            where.push_back(j);
        }
        prev_sign = sg;
    }
    const double touch_tol = 1e-8 * rep.scale;
    for (std::size_t j = 1; j + 1 < n; ++j) {
        double aj = std::fabs(pvals[j]);
        if (aj >= touch_tol) continue;
        if (aj > std::fabs(pvals[j - 1]) || aj > std::fabs(pvals[j + 1])) continue;
        bool same_side = (pvals[j - 1] > 0.0 && pvals[j + 1] > 0.0) ||
                         (pvals[j - 1] < 0.0 && pvals[j + 1] < 0.0);
        // A touch leaves the sample on (or at) the neighbours' side. A
        // crossing, or a dip resolved by a single sample of the opposite
        // sign, is already present in the sign-change count.
        if (!same_side) continue;
        if (pvals[j] != 0.0 && (pvals[j] > 0.0) != (pvals[j - 1] > 0.0)) continue;
        ++rep.tangencies;
        where.push_back(j);
    }
    rep.count = rep.sign_changes + 2 * rep.tangencies;
    std::sort(where.begin(), where.end());
    for (std::size_t i = 1; i < where.size(); ++i)
        if (where[i] - where[i - 1] < 3) rep.resolution_warning = true;
    return rep;
}

// Convenience overload sampling callable basis functions on the scan grid.
inline ZeroCountReport chebyshev_zero_count(
    const std::vector<std::function<double(double)>>& basis,
    const std::vector<double>& coefficients, double a, double b,
    std::size_t scan_points = 10000) {
    if (basis.size() > static_cast<std::size_t>(kMaxChebyshevBasis))
        throw std::invalid_argument("chebyshev_zero_count: basis larger than 12");
    std::vector<std::vector<double>> values(basis.size(),
                                            std::vector<double>(scan_points));
    for (std::size_t j = 0; j < scan_points; ++j) {
        double t = a + (b - a) * static_cast<double>(j) / static_cast<double>(scan_points);
        for (std::size_t i = 0; i < basis.size(); ++i) values[i][j] = basis[i](t);
    }
    return chebyshev_zero_count(values, coefficients);
}

}  // namespace jlogan
