#!/usr/bin/env python3
"""Generate frozen reference values for the C++ test suite.

Writes tests/reference_values.hpp. Every value is computed with mpmath at a
working precision chosen from an explicit cancellation model, then recomputed
at 1.25x precision and required to agree, so the frozen doubles are correct to
well below double rounding. Run from the repository root:

    python3 tools/oracles/gen_reference_values.py
"""

import os
import sys

from mpmath import mp, mpf, mpc, inf


def phi_calc(al, be, t, lam):
    """phi_lambda^{(alpha,beta)}(t) via the hypergeometric representation."""
    al, be, t, lam = mpf(al), mpf(be), mpf(t), mpf(lam)
    rho = al + be + 1
    a = (rho + mpc(0, 1) * lam) / 2
    z = -mp.sinh(t) ** 2
    v = mp.hyp2f1(a, mp.conj(a), al + 1, z)
    return v.real


def phi_dt_calc(al, be, t, lam):
    return mp.diff(lambda u: phi_calc(al, be, u, lam), mpf(t))


def phi_dlam_calc(al, be, t, lam):
    return mp.diff(lambda l: phi_calc(al, be, t, l), mpf(lam))


def s_calc(al, be, lam):
    """Spectral density s(lambda) of the inverse measure."""
    al, be, lam = mpf(al), mpf(be), mpf(lam)
    rho = al + be + 1
    il = mpc(0, 1) * lam
    c = (mp.power(2, rho - il) * mp.gamma(al + 1) * mp.gamma(il)
         / (mp.gamma((rho + il) / 2) * mp.gamma((rho + il) / 2 - be)))
    return 1 / (2 * mp.pi * abs(c) ** 2)


def mehler_kernel_calc(al, be, s, t):
    al, be, s, t = mpf(al), mpf(be), mpf(s), mpf(t)
    pre = (mp.power(2, al + 2 * be + mpf(5) / 2) * mp.sinh(2 * t)
           * mp.cosh(t) ** (be - al)
           * (mp.cosh(2 * t) - mp.cosh(2 * s)) ** (al - mpf(1) / 2))
    x = (mp.cosh(t) - mp.cosh(s)) / (2 * mp.cosh(t))
    return pre * mp.hyp2f1(al + be, al - be, al + mpf(1) / 2, x)


def weight_delta_calc(al, be, t):
    al, be, t = mpf(al), mpf(be), mpf(t)
    rho = al + be + 1
    return mp.power(2, 2 * rho) * mp.sinh(t) ** (2 * al + 1) * mp.cosh(t) ** (2 * be + 1)


def stable(fn, dps, tol_exp=-24):
    """Evaluate fn twice (dps and 1.25*dps+15) and require agreement."""
    mp.dps = int(dps)
    v1 = fn()
    mp.dps = int(dps * 1.25) + 15
    v2 = fn()
    err = abs(v1 - v2)
    scale = max(mpf(1), abs(v2))
    if err > scale * mpf(10) ** tol_exp:
        raise RuntimeError(f"unstable value: {v1} vs {v2} (dps={dps})")
    return v2


def phi_dps(t, lam):
    """Working precision for phi: cancellation is bounded by exp(lam*t)."""
    return 60 + int(mpf('0.45') * abs(lam) * min(t, 3.0))


def bracket_zeros(f, start, step, n, max_x=2000.0):
    """First n sign-change roots of f on (start, inf), scanning with step."""
    roots = []
    x0 = mpf(start)
    f0 = f(x0)
    while len(roots) < n:
        x1 = x0 + step
        if x1 > max_x:
            raise RuntimeError("scan exhausted")
        f1 = f(x1)
        if f0 == 0:
            roots.append(x0)
        elif mp.sign(f0) != mp.sign(f1):
            roots.append(mp.findroot(f, (x0, x1), solver='anderson'))
        x0, f0 = x1, f1
    return roots


def fmt(v):
    x = float(v)
    r = repr(x)
    return r


def self_checks():
    mp.dps = 50
    # closed forms at the trigonometric corner
    err = abs(phi_calc('-0.5', '-0.5', '0.8', '3.3') - mp.cos(mpf('3.3') * mpf('0.8')))
    assert err < mpf('1e-40'), err
    t, lam = mpf('1.3'), mpf('2.7')
    err = abs(phi_calc('0.5', '-0.5', t, lam) - mp.sin(lam * t) / (lam * mp.sinh(t)))
    assert err < mpf('1e-40'), err
    # spectral density degenerations
    err = abs(s_calc('-0.5', '-0.5', '1.7') - 2 / mp.pi)
    assert err < mpf('1e-40'), err
    err = abs(s_calc('0.5', '-0.5', '1.7') - mpf('1.7') ** 2 / (2 * mp.pi))
    assert err < mpf('1e-40'), err
    # Mehler representation reproduces phi at (1/2,-1/2)
    t, lam = mpf('0.9'), mpf('4.1')
    al, be = mpf('0.5'), mpf('-0.5')
    ca = mp.gamma(al + 1) / (mp.gamma(mpf('0.5')) * mp.gamma(al + mpf('0.5')))
    integral = mp.quad(lambda s: mehler_kernel_calc(al, be, s, t) * mp.cos(lam * s), [0, t])
    v = ca / weight_delta_calc(al, be, t) * integral
    err = abs(v - phi_calc(al, be, t, lam))
    assert err < mpf('1e-35'), err
    # and at a generic parameter pair
    al, be = mpf('1'), mpf('0')
    t, lam = mpf('0.7'), mpf('2.2')
    ca = mp.gamma(al + 1) / (mp.gamma(mpf('0.5')) * mp.gamma(al + mpf('0.5')))
    integral = mp.quad(lambda s: mehler_kernel_calc(al, be, s, t) * mp.cos(lam * s), [0, t])
    v = ca / weight_delta_calc(al, be, t) * integral
    err = abs(v - phi_calc(al, be, t, lam))
    assert err < mpf('1e-30'), err
    print("self-checks passed", file=sys.stderr)


def main():
    self_checks()

    out = []
    out.append("#pragma once")
    out.append("// Frozen high-precision reference values for the test suite.")
    out.append("// Generated by tools/oracles/gen_reference_values.py; do not edit by hand.")
    out.append("#include <cstddef>")
    out.append("")
    out.append("namespace jltest {")
    out.append("")

    # ---- phi values -----------------------------------------------------
    phi_rows = [
        ('-0.5', '-0.5', '0.9', '17.0'),
        ('0.0', '-0.5', '0.1', '0.3'),
        ('0.0', '-0.5', '1.0', '2.0'),
        ('0.0', '-0.5', '3.0', '5.0'),
        ('0.0', '-0.5', '0.7', '25.0'),
        ('0.0', '-0.5', '6.0', '0.2'),
        ('0.0', '-0.5', '1.0', '80.0'),
        ('0.0', '-0.5', '0.5', '300.0'),
        ('0.0', '-0.5', '8.0', '60.0'),
        ('0.5', '-0.5', '1.5', '0.0'),
        ('0.5', '-0.5', '2.0', '1.0'),
        ('1.0', '0.0', '0.25', '1.2'),
        ('1.0', '0.0', '1.5', '6.0'),
        ('1.0', '0.0', '2.5', '0.1'),
        ('1.0', '0.0', '0.45', '38.0'),
        ('1.0', '0.0', '1.0', '200.0'),
        ('1.0', '0.0', '0.5', '120.0'),
        ('2.0', '1.0', '0.8', '3.0'),
        ('2.0', '1.0', '1.0', '500.0'),
        ('0.3', '-0.2', '0.6', '2.4'),
        ('0.3', '-0.2', '4.0', '1.1'),
    ]
    out.append("struct PhiRef { double alpha, beta, t, lam, phi, phi_dt; };")
    out.append("inline constexpr PhiRef kPhiRefs[] = {")
    for al, be, t, lam in phi_rows:
        d = phi_dps(float(t), float(lam))
        v = stable(lambda: phi_calc(al, be, t, lam), d)
        vdt = stable(lambda: phi_dt_calc(al, be, t, lam), d, tol_exp=-20)
        out.append(f"    {{{al}, {be}, {t}, {lam}, {fmt(v)}, {fmt(vdt)}}},")
        print(f"phi({al},{be};t={t},lam={lam})", file=sys.stderr)
    out.append("};")
    out.append("inline constexpr std::size_t kPhiRefCount = sizeof(kPhiRefs) / sizeof(kPhiRefs[0]);")
    out.append("")

    # ---- d/dlambda of phi ----------------------------------------------
    dlam_rows = [
        ('1.0', '0.0', '0.9', '2.2'),
        ('0.3', '-0.2', '1.4', '4.5'),
    ]
    out.append("struct PhiDlamRef { double alpha, beta, t, lam, dphi_dlam; };")
    out.append("inline constexpr PhiDlamRef kPhiDlamRefs[] = {")
    for al, be, t, lam in dlam_rows:
        v = stable(lambda: phi_dlam_calc(al, be, t, lam), 60, tol_exp=-20)
        out.append(f"    {{{al}, {be}, {t}, {lam}, {fmt(v)}}},")
    out.append("};")
    out.append("inline constexpr std::size_t kPhiDlamRefCount = sizeof(kPhiDlamRefs) / sizeof(kPhiDlamRefs[0]);")
    out.append("")

    # ---- spectral density ----------------------------------------------
    s_rows = [
        ('1.0', '0.0', '0.5'),
        ('1.0', '0.0', '2.0'),
        ('1.0', '0.0', '7.3'),
        ('1.0', '0.0', '40.0'),
        ('1.0', '0.0', '500.0'),
        ('2.0', '1.0', '10.0'),
        ('0.3', '-0.2', '3.7'),
        ('0.0', '-0.5', '1.1'),
    ]
    out.append("struct SWeightRef { double alpha, beta, lam, s; };")
    out.append("inline constexpr SWeightRef kSWeightRefs[] = {")
    for al, be, lam in s_rows:
        v = stable(lambda: s_calc(al, be, lam), 60)
        out.append(f"    {{{al}, {be}, {lam}, {fmt(v)}}},")
    out.append("};")
    out.append("inline constexpr std::size_t kSWeightRefCount = sizeof(kSWeightRefs) / sizeof(kSWeightRefs[0]);")
    out.append("")

    # ---- log gamma ------------------------------------------------------
    lg_rows = [
        ('1.0', '1.0'),
        ('0.5', '0.0'),
        ('5.3', '0.0'),
        ('0.5', '25.0'),
        ('3.0', '0.0'),
        ('0.1', '0.0'),
        ('2.0', '250.0'),
    ]
    out.append("struct LogGammaRef { double re_z, im_z, re_lg, im_lg; };")
    out.append("inline constexpr LogGammaRef kLogGammaRefs[] = {")
    for re_z, im_z in lg_rows:
        v = stable(lambda: mp.loggamma(mpc(mpf(re_z), mpf(im_z))), 50)
        out.append(f"    {{{re_z}, {im_z}, {fmt(v.real)}, {fmt(v.imag)}}},")
    out.append("};")
    out.append("inline constexpr std::size_t kLogGammaRefCount = sizeof(kLogGammaRefs) / sizeof(kLogGammaRefs[0]);")
    out.append("")

    # ---- Gauss 2F1 ------------------------------------------------------
    f21_rows = [
        ('0.3', '0.0', '1.7', '0.0', '2.2', '0.0', '-0.45'),
        ('0.25', '3.0', '0.25', '-3.0', '2.5', '0.0', '0.6'),
        ('1.0', '-2.5', '2.0', '-2.5', '1.0', '-5.0', '0.7'),
        ('0.5', '0.5', '0.5', '-0.5', '1.0', '0.0', '0.95'),
    ]
    out.append("struct Hyp2f1Ref { double re_a, im_a, re_b, im_b, re_c, im_c, x, re_f, im_f; };")
    out.append("inline constexpr Hyp2f1Ref kHyp2f1Refs[] = {")
    for ra, ia, rb, ib, rc, ic, x in f21_rows:
        v = stable(lambda: mp.hyp2f1(mpc(mpf(ra), mpf(ia)), mpc(mpf(rb), mpf(ib)),
                                     mpc(mpf(rc), mpf(ic)), mpf(x)), 50)
        out.append(f"    {{{ra}, {ia}, {rb}, {ib}, {rc}, {ic}, {x}, {fmt(v.real)}, {fmt(v.imag)}}},")
    out.append("};")
    out.append("inline constexpr std::size_t kHyp2f1RefCount = sizeof(kHyp2f1Refs) / sizeof(kHyp2f1Refs[0]);")
    out.append("")

    # ---- Mehler kernel --------------------------------------------------
    mk_rows = [
        ('1.0', '0.0', '0.3', '0.7'),
        ('1.0', '0.0', '1.0', '1.5'),
        ('0.3', '-0.2', '0.2', '0.9'),
    ]
    out.append("struct MehlerRef { double alpha, beta, s, t, value; };")
    out.append("inline constexpr MehlerRef kMehlerRefs[] = {")
    for al, be, s, t in mk_rows:
        v = stable(lambda: mehler_kernel_calc(al, be, s, t), 50)
        out.append(f"    {{{al}, {be}, {s}, {t}, {fmt(v)}}},")
    out.append("};")
    out.append("inline constexpr std::size_t kMehlerRefCount = sizeof(kMehlerRefs) / sizeof(kMehlerRefs[0]);")
    out.append("")

    # ---- zero tables ----------------------------------------------------
    def freeze_zero_block(name, al, be, tau, kind, count):
        mp.dps = 45
        alm, bem, taum = mpf(al), mpf(be), mpf(tau)
        if kind == 'lambda':
            f = lambda l: phi_calc(alm, bem, taum, l)
        elif kind == 'mu':
            f = lambda l: phi_dt_calc(alm, bem, taum, l)
        else:  # lambda_star: zeros of d/dt psi at tau
            p0 = phi_calc(alm, bem, taum, mpf(0))
            p0t = phi_dt_calc(alm, bem, taum, mpf(0))
            f = lambda l: phi_dt_calc(alm, bem, taum, l) * p0 - phi_calc(alm, bem, taum, l) * p0t
        roots = bracket_zeros(f, mpf('1e-3'), mpf('0.05'), count)
        vals = ", ".join(fmt(r) for r in roots)
        out.append(f"inline constexpr double {name}[] = {{{vals}}};")
        print(f"zeros {name}", file=sys.stderr)

    out.append("// zeros in lambda at alpha=1, beta=0, tau=1")
    freeze_zero_block("kLambdaZeros_1_0_tau1", '1.0', '0.0', '1.0', 'lambda', 5)
    freeze_zero_block("kMuZeros_1_0_tau1", '1.0', '0.0', '1.0', 'mu', 3)
    freeze_zero_block("kStarZeros_1_0_tau1", '1.0', '0.0', '1.0', 'lambda_star', 3)
    out.append("// zeros in lambda at alpha=0.3, beta=-0.2, tau=0.8")
    freeze_zero_block("kLambdaZeros_03_m02_tau08", '0.3', '-0.2', '0.8', 'lambda', 3)
    out.append("")

    # ---- t zeros (inverse direction) ------------------------------------
    mp.dps = 45
    al, be, gam = mpf('1.0'), mpf('0.0'), mpf('2.0')
    t1 = bracket_zeros(lambda t: phi_calc(al, be, t, gam), mpf('0.05'), mpf('0.05'), 1)[0]
    p = lambda t: phi_calc(al, be, t, gam)
    p0 = lambda t: phi_calc(al, be, t, mpf(0))
    g = lambda t: phi_dt_calc(al, be, t, gam) * p0(t) - p(t) * phi_dt_calc(al, be, t, mpf(0))
    t1s = bracket_zeros(g, mpf('0.05'), mpf('0.05'), 1)[0]
    out.append("// first zero in t of phi_2 and of (d/dt) psi_2 at alpha=1, beta=0")
    out.append(f"inline constexpr double kT1Gamma2_1_0 = {fmt(t1)};")
    out.append(f"inline constexpr double kT1StarGamma2_1_0 = {fmt(t1s)};")
    out.append("")

    # ---- integrals against the spectral measure -------------------------
    def i1(al, be):
        return mp.quad(lambda l: mp.exp(-l ** 2) * s_calc(al, be, l), [0, 1, 2, 4, inf])

    def i2(al, be):
        return mp.quad(lambda l: mp.exp(-l ** 2 / 8) * mp.cos(2 * l) * s_calc(al, be, l),
                       [0, 2, 4, 6, 8, 10, 14, inf])

    mp.dps = 40
    exact = 1 / (8 * mp.sqrt(mp.pi))
    got = i1('0.5', '-0.5')
    assert abs(got - exact) < mpf('1e-30'), (got, exact)

    out.append("// integrals of test functions against s(lambda) d lambda")
    v = stable(lambda: i1('1.0', '0.0'), 40)
    out.append(f"inline constexpr double kGaussIntSigma_1_0 = {fmt(v)};")
    v = stable(lambda: i2('1.0', '0.0'), 40)
    out.append(f"inline constexpr double kOscIntSigma_1_0 = {fmt(v)};")
    v = stable(lambda: i1('0.0', '-0.5'), 40)
    out.append(f"inline constexpr double kGaussIntSigma_0_m05 = {fmt(v)};")
    v = stable(lambda: i2('0.0', '-0.5'), 40)
    out.append(f"inline constexpr double kOscIntSigma_0_m05 = {fmt(v)};")
    out.append("")

    # ---- Gauss-Legendre 15-point rule on [-1, 1] -----------------------
    mp.dps = 45
    n = 15
    pn = lambda x: mp.legendre(n, x)
    roots = bracket_zeros(pn, mpf('-0.999'), mpf('0.002'), n, max_x=1.0)
    assert len(roots) == n and all(roots[i] < roots[i + 1] for i in range(n - 1))
    weights = []
    for r in roots:
        dp = mp.diff(pn, r)
        weights.append(2 / ((1 - r ** 2) * dp ** 2))
    assert abs(sum(weights) - 2) < mpf('1e-35')
    out.append("inline constexpr double kGL15Nodes[] = {")
    out.append("    " + ", ".join(fmt(r) for r in roots))
    out.append("};")
    out.append("inline constexpr double kGL15Weights[] = {")
    out.append("    " + ", ".join(fmt(w) for w in weights))
    out.append("};")
    out.append("")
    out.append("}  // namespace jltest")
    out.append("")

    dest = os.path.join(os.path.dirname(__file__), "..", "..", "tests", "reference_values.hpp")
    dest = os.path.normpath(dest)
    os.makedirs(os.path.dirname(dest), exist_ok=True)
    with open(dest, "w") as fh:
        fh.write("\n".join(out))
    print(f"wrote {dest}", file=sys.stderr)


if __name__ == "__main__":
    main()
