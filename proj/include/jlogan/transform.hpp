#pragma once
// The Jacobi transform pair and derived spectral machinery:
//   forward:   (Jg)(lam)   = int_0^inf g(t) phi_lam(t) Delta(t) dt
//   inverse:   (J^-1 f)(t) = int_0^inf f(lam) phi_lam(t) s(lam) dlam
// plus a t-grid-amortized inverse (one spectral sweep serves many t), the
// Gauss quadrature rule whose nodes are the zeros lambda_k of phi_.(tau),
// generalized translation in spectral form, and a support test for the
// inverse transform (bandlimitedness certificate).

#include <algorithm>
#include <vector>

#include "jlogan/core.hpp"
#include "jlogan/jacobi.hpp"
#include "jlogan/quadrature.hpp"
#include "jlogan/zeros.hpp"

namespace jlogan {

struct SampledFunction {
    std::vector<double> grid;    // ascending sample points
    std::vector<double> values;  // same length as grid
    double support_hint = 0.0;   // 0 means unknown
};

struct GaussRule {
    double tau = 0.0;
    std::vector<double> nodes;
    std::vector<double> weights;
    std::size_t count = 0;
};

// int_a^b g(t) Delta(t) dt.
template <class G>
double integrate_dmu(G&& g, const JacobiParams& p, double a, double b,
                     const QuadConfig& cfg = {}) {
    validate(p);
    auto f = [&](double t) { return g(t) * weight_delta(p, t); };
    return integrate(f, a, b, cfg).value;
}

// Forward transform of a callable supported on [0, support_end].
template <class G>
double jacobi_transform(G&& g, const JacobiParams& p, double lam, double support_end,
                        const QuadConfig& cfg = {}, const SeriesConfig& scfg = {}) {
    validate(p);
    detail::check_domain(support_end, lam);
    lam = std::fabs(lam);
    auto f = [&](double t) {
        return g(t) * detail::phi_impl(p, t, lam, scfg) * weight_delta(p, t);
    };
    return integrate(f, 0.0, support_end, cfg).value;
}

// Forward transform of a piecewise-linear interpolant through samples.
inline double jacobi_transform_sampled(const SampledFunction& g, const JacobiParams& p,
                                       double lam, const SeriesConfig& scfg = {}) {
    validate(p);
    if (g.grid.size() != g.values.size() || g.grid.size() < 2)
        throw std::invalid_argument("jacobi_transform_sampled: need matching grids, >= 2 samples");
    detail::check_domain(g.grid.back(), lam);
    lam = std::fabs(lam);
    double acc = 0.0;
    const double quarter_period = kPi / (2.0 * std::max(lam, 1.0));
    for (std::size_t i = 0; i + 1 < g.grid.size(); ++i) {
        double a = g.grid[i], b = g.grid[i + 1];
        if (!(b > a)) throw std::invalid_argument("jacobi_transform_sampled: grid not ascending");
        double va = g.values[i], vb = g.values[i + 1];
        auto f = [&](double t) {
            double lin = va + (vb - va) * (t - a) / (b - a);
            return lin * detail::phi_impl(p, t, lam, scfg) * weight_delta(p, t);
        };
        std::size_t nsub = 1 + static_cast<std::size_t>((b - a) / quarter_period);
        double h = (b - a) / static_cast<double>(nsub);
        for (std::size_t j = 0; j < nsub; ++j)
            acc += detail::gl15_panel(f, a + h * j, a + h * (j + 1));
    }
    return acc;
}

// Inverse transform at a single point.
template <class F>
double inverse_jacobi_transform(F&& f, const JacobiParams& p, double t,
                                const QuadConfig& cfg = {}, HalfLineOptions opt = {},
                                const SeriesConfig& scfg = {}) {
    validate(p);
    detail::check_domain(t, 0.0);
    if (opt.panel_hint <= 0.0) opt.panel_hint = kPi / (2.0 * std::max(t, 0.5));
    auto g = [&](double lam) {
        return f(lam) * detail::phi_impl(p, t, lam, scfg) * spectral_weight(p, lam);
    };
    return integrate_half_line(g, cfg, opt).value;
}

// Inverse transform on a whole t-grid with one spectral sweep: each lambda
// node's f(lam) s(lam) weight is computed once and scattered across the
// grid. The head is a fixed composite rule (panel edges at the supplied
// boundaries and at multiples of panel_hint); the tail is extrapolated per
// grid point.
template <class F>
std::vector<double> inverse_transform_grid(F&& f, const JacobiParams& p,
                                           const std::vector<double>& ts,
                                           const QuadConfig& cfg = {},
                                           HalfLineOptions opt = {},
                                           const SeriesConfig& scfg = {}) {
    validate(p);
    if (ts.empty()) return {};
    double tmax = 0.0;
    for (double t : ts) {
        detail::check_domain(t, 0.0);
        tmax = std::max(tmax, t);
    }
    const double hint = opt.panel_hint > 0.0 ? opt.panel_hint : kPi / (2.0 * std::max(tmax, 0.5));
    double cut = opt.lambda_cut > 0.0 ? opt.lambda_cut : 64.0 * hint;
    if (!opt.boundaries.empty()) cut = std::max(cut, opt.boundaries.back() + 2.0 * hint);

    const std::size_t n = ts.size();
    std::vector<double> acc(n, 0.0);
    auto sweep_panel = [&](double a, double b, std::vector<double>& into) {
        double mid = 0.5 * (a + b), half = 0.5 * (b - a);
        for (int i = 0; i < 15; ++i) {
            double lam = mid + half * detail::kGL15Nodes[i];
            double wgt = detail::kGL15Weights[i] * half * f(lam) * spectral_weight(p, lam);
            if (wgt == 0.0) continue;
            for (std::size_t j = 0; j < n; ++j)
                into[j] += wgt * detail::phi_impl(p, ts[j], lam, scfg);
        }
    };

    // Head: merge uniform edges with the supplied interior boundaries.
    double x = 0.0;
    std::size_t bi = 0;
    while (bi < opt.boundaries.size() && opt.boundaries[bi] <= 0.0) ++bi;
    while (x < cut) {
        double next = std::min(x + hint, cut);
        if (bi < opt.boundaries.size() && opt.boundaries[bi] < next - 1e-12 * cut) {
            next = opt.boundaries[bi];
            ++bi;
        }
        if (next <= x) continue;
        sweep_panel(x, next, acc);
        x = next;
    }

    // Tail: accumulate per-point partial sums over fixed panels, then
    // extrapolate each grid point's sequence.
    const double w = 2.0 * hint;
    std::vector<double> run(n, 0.0);
    std::vector<std::vector<double>> partial(n);
    for (std::size_t j = 0; j < n; ++j) partial[j].reserve(opt.tail_panels);
    for (std::size_t k = 0; k < opt.tail_panels; ++k) {
        sweep_panel(cut + w * k, cut + w * (k + 1), run);
        for (std::size_t j = 0; j < n; ++j) partial[j].push_back(run[j]);
    }
    for (std::size_t j = 0; j < n; ++j) {
        if (cfg.tail_accel == TailAccel::AITKEN && opt.tail_panels >= 3)
            acc[j] += detail::aitken_limit(partial[j]).first;
        else
            acc[j] += run[j];
    }
    return acc;
}

// Generalized translation in spectral form:
//   (T^t g)(x) = int fspec(lam) phi_lam(t) phi_lam(x) dsigma,  fspec = Jg.
template <class F>
double spectral_translate(F&& fspec, const JacobiParams& p, double t, double x,
                          const QuadConfig& cfg = {}, HalfLineOptions opt = {},
                          const SeriesConfig& scfg = {}) {
    validate(p);
    detail::check_domain(t, 0.0);
    detail::check_domain(x, 0.0);
    if (opt.panel_hint <= 0.0) opt.panel_hint = kPi / (2.0 * std::max(t + x, 0.5));
    auto g = [&](double lam) {
        return fspec(lam) * detail::phi_impl(p, t, lam, scfg) *
               detail::phi_impl(p, x, lam, scfg) * spectral_weight(p, lam);
    };
    return integrate_half_line(g, cfg, opt).value;
}

// Gauss rule with respect to dsigma whose nodes are the zeros lambda_k of
// lam -> phi_lam(tau). The weight of node k is
//   gamma_k = (int ell_k dsigma) / ell_k(lambda_k),
//   ell_k(lam) = phi_lam(tau)^2 / (1 - lam^2/lambda_k^2)^2,
// with ell_k(lambda_k) = (lambda_k d/dlam phi_lambda_k(tau) / 2)^2. The rule
// integrates even bandlimited functions of exponential type 2 tau exactly.
inline GaussRule gauss_rule(const JacobiParams& p, const ZeroTable& table,
                            const QuadConfig& cfg = {}, const SeriesConfig& scfg = {}) {
    validate(p);
    if (table.kind != ZeroKind::LAMBDA)
        throw std::invalid_argument("gauss_rule: nodes must come from a LAMBDA zero table");
    GaussRule rule;
    rule.tau = table.tau;
    rule.nodes = table.zeros;
    rule.count = table.zeros.size();
    const double tau = table.tau;
    // Mean of phi_lam(tau)^2 s(lam) over one oscillation, exact to leading
    // order in 1/lam; it carries the slow part of each weight's tail.
    const double delta_tau = weight_delta(p, tau);
    const double dc = 1.0 / (kPi * delta_tau);
    for (double lk : table.zeros) {
        // ell_k(lambda_k) = (lambda_k dphi/dlambda / 2)^2. At a node the
        // lambda-derivative follows from Green's identity for the pair
        // (phi_lambda, phi_{lambda_k}) on [0, tau]:
        //   dphi/dlambda|_{lambda_k}
        //     = 2 lambda_k int_0^tau phi_{lambda_k}^2 dmu
        //       / (Delta(tau) d/dt phi_{lambda_k}(tau)),
        // a cancellation-free route; a finite difference in lambda would
        // amplify phi's evaluation noise past the weight tolerance.
        double norm2 = integrate_dmu(
            [&](double t) {
                double ph = phi(p, t, lk, scfg);
                return ph * ph;
            },
            p, 0.0, tau, cfg);
        double dphi = 2.0 * lk * norm2 / (delta_tau * phi_dt(p, tau, lk, scfg));
        double denom = 0.25 * lk * lk * dphi * dphi;
        auto ell = [&](double lam) {
            double d = 1.0 - (lam * lam) / (lk * lk);
            if (d == 0.0) return denom * spectral_weight(p, lam);
            double ph = detail::phi_impl(p, tau, lam, scfg);
            return (ph / d) * (ph / d) * spectral_weight(p, lam);
        };
        // Head: panel edges at the nodes, adaptive in between.
        const double cut = std::max(32.0 / tau, 3.0 * lk + 40.0 / tau);
        double head = 0.0, prev = 0.0;
        for (double z : table.zeros) {
            if (z >= cut) break;
            head += integrate(ell, prev, z, cfg).value;
            prev = z;
        }
        head += integrate(ell, prev, cut, cfg).value;
        // Tail: subtract the closed-form integral of the mean model
        //   dc lk^4/(lam^2 - lk^2)^2,
        // and integrate the remainder over panels spanning one full
        // oscillation period each. The remainder's envelope is known, so the
        // panels are extended until its raw truncation bound meets the
        // target; no extrapolation is applied (extrapolating would amplify
        // evaluation noise past the target).
        double closed = dc * ((lk * lk / 4.0) * (1.0 / (cut - lk) + 1.0 / (cut + lk)) -
                              (lk / 4.0) * std::log((cut + lk) / (cut - lk)));
        auto rem = [&](double lam) {
            double d = lam * lam - lk * lk;
            return ell(lam) - dc * (lk * lk / d) * (lk * lk / d);
        };
        const double w = kPi / tau;
        const double target = 1e-9 * std::fabs(head);
        // |int_X^inf rem| <= E(X)/(2 tau) with E the remainder envelope
        // dc lk^4/(X^2 - lk^2)^2, so stop once X exceeds this bound's root.
        double far = lk * std::sqrt(1.0 + std::sqrt(dc / (2.0 * tau * target)));
        std::size_t panels =
            static_cast<std::size_t>(std::max(0.0, (far - cut) / w)) + 1;
        panels = std::min<std::size_t>(panels, 2000);
        double tail = 0.0;
        for (std::size_t j = 0; j < panels; ++j)
            tail += detail::gl15_panel(rem, cut + w * j, cut + w * (j + 1));
        rule.weights.push_back((head + closed + tail) / denom);
    }
    return rule;
}

struct PaleyWienerReport {
    bool supported = false;   // inverse transform vanishes beyond tau
    double max_inside = 0.0;  // max |J^-1 f| on [0, tau]
    double max_outside = 0.0; // max |J^-1 f| beyond tau (1 + delta)
    double threshold = 0.0;   // eps * max_inside
};

// Tests whether supp J^-1 f is contained in [0, tau], by comparing the
// inverse transform's magnitude beyond tau (1 + delta) against its
// magnitude inside, with relative tolerance eps.
template <class F>
PaleyWienerReport paley_wiener_test(F&& f, const JacobiParams& p, double tau,
                                    double delta = 0.02, double eps = 1e-4,
                                    const QuadConfig& cfg = {}, HalfLineOptions opt = {}) {
    validate(p);
    if (!(tau > 0.0) || 2.0 * tau > kMaxT)
        throw std::invalid_argument("paley_wiener_test: need 0 < 2 tau <= 20");
    const std::size_t ni = 25, no = 25;
    std::vector<double> grid;
    grid.reserve(ni + no);
    for (std::size_t i = 0; i < ni; ++i)
        grid.push_back(tau * static_cast<double>(i) / static_cast<double>(ni - 1));
    const double out_lo = tau * (1.0 + delta), out_hi = 2.0 * tau;
    for (std::size_t i = 0; i < no; ++i)
        grid.push_back(out_lo + (out_hi - out_lo) * static_cast<double>(i) /
                                    static_cast<double>(no - 1));
    std::vector<double> vals = inverse_transform_grid(f, p, grid, cfg, opt);
    PaleyWienerReport rep;
    for (std::size_t i = 0; i < ni; ++i) rep.max_inside = std::max(rep.max_inside, std::fabs(vals[i]));
    for (std::size_t i = ni; i < grid.size(); ++i)
        rep.max_outside = std::max(rep.max_outside, std::fabs(vals[i]));
    rep.threshold = eps * rep.max_inside;
    rep.supported = rep.max_outside <= rep.threshold;
    return rep;
}

}  // namespace jlogan
