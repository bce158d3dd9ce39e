"""Extended-precision reference evaluators.

Everything here runs on mpmath at an explicit decimal precision and exists
to freeze fixtures, calibrate thresholds and cross-check the binary64
production code. Nothing in the production modules imports this; the CLI
and the test suite do.

Routes are deliberately independent of the production code paths where
that matters for cross-checking: the ODE march twin uses mpmath's own
Taylor integrator (mp.odefun), and the gamma kernels use mpmath's
digamma/loggamma rather than the shift+asymptotic scheme implemented in
gammakit.

Sign conventions (calibrated once against the Wronskian and cross-relation
identities, see the project notes): the near-1 R1 series carries a global
minus sign relative to its naive form; the order-m climb for both families
is F_{m+1} = -(2 m x/s) F_m - c_m F_{m-1}; derivatives on x > 1 follow
dF_m/dx = +F_{m+1}/s + m x/(x^2-1) F_m.
"""

from __future__ import annotations

import math
from contextlib import contextmanager

from mpmath import mp, mpf, mpc, workdps

DIGAMMA_HALF_GUARD = 40  # base digits before cancellation guard digits


@contextmanager
def _dps(n):
    with workdps(n):
        yield


def guard_digits_r01(x: float, tau: float) -> int:
    """Cancellation loss (decimal digits) of the near-1 series at (x, tau).

    The same estimate covers the P series on x > 1, whose terms alternate
    with the same peak-to-result ratio exp(2 tau sqrt((x-1)/2)).
    """
    arg = tau * math.sqrt(max(x - 1.0, 0.0) / 2.0)
    return int(math.ceil(2.0 * arg / math.log(10.0)))


def _shift_radius(dps: int) -> int:
    # the Bernoulli tail bottoms out near exp(-2 pi |alpha|); pick |alpha|
    # large enough that the floor sits below the precision target
    return max(40, int(math.ceil(0.367 * (dps + 10))))


def _digamma_scheme(alpha, dps: int):
    """Shift-then-asymptotic digamma for complex alpha, adaptive term count."""
    radius = _shift_radius(dps)
    shift = mpf(0) * alpha
    a = alpha
    while abs(a) < radius:
        shift += 1 / a
        a += 1
    # psi(a) ~ ln a - 1/(2a) - sum B_{2n} / (2n a^{2n})
    inv2 = 1 / (a * a)
    acc = mp.log(a) - 1 / (2 * a)
    pw = inv2
    target = mpf(10) ** (-(dps + 5))
    prev = mp.inf
    for n in range(1, 4 * radius):
        term = mp.bernoulli(2 * n) / (2 * n) * pw
        if abs(term) > prev:
            break
        acc -= term
        if abs(term) < target:
            break
        prev = abs(term)
        pw *= inv2
    return acc - shift


def _loggamma_scheme(alpha, dps: int):
    """Shift-then-Stirling log-gamma for complex alpha off the pole line.

    The walk continues until the real part is positive as well: Stirling
    applied left of the imaginary axis would silently drop a term of
    relative size exp(-2 pi |Im alpha|).
    """
    radius = _shift_radius(dps)
    logshift = mpf(0) * alpha
    a = alpha
    while mp.re(a) < mpf("0.5") or abs(a) < radius:
        logshift += mp.log(a)
        a += 1
    acc = (a - mpf("0.5")) * mp.log(a) - a + mp.log(2 * mp.pi) / 2
    inv = 1 / a
    inv2 = inv * inv
    pw = inv
    target = mpf(10) ** (-(dps + 5))
    prev = mp.inf
    for n in range(1, 4 * radius):
        term = mp.bernoulli(2 * n) / ((2 * n) * (2 * n - 1)) * pw
        if abs(term) > prev:
            break
        acc += term
        if abs(term) < target:
            break
        prev = abs(term)
        pw *= inv2
    return acc - logshift


def _crosscheck(a, b, dps: int, what: str):
    diff = abs(a - b)
    scale = max(abs(a), abs(b), mpf(1))
    if diff > scale * mpf(10) ** (-(dps - 6)):
        raise ArithmeticError(f"oracle self-check failed for {what}: {a} vs {b}")


def oracle_digamma_half(tau, dps=60):
    """psi(1/2 + i tau) as an (re, im) pair of mpf at dps digits.

    Computed by the shift+asymptotic scheme (the production algorithm's
    extended-precision mirror) and cross-checked against mpmath's digamma.
    """
    with _dps(dps + 10):
        alpha = mpc(mpf("0.5"), mpf(repr(float(tau))))
        v = _digamma_scheme(alpha, dps)
        ref = mp.digamma(alpha)
        _crosscheck(v, ref, dps, "digamma_half")
        return mp.re(v), mp.im(v)


def oracle_log_abs_gamma_sq(m: int, tau, dps=60):
    """ln |Gamma(m + 1/2 + i tau)|^2 at dps digits (m may be negative)."""
    with _dps(dps + 10):
        z = mpc(mpf(m) + mpf("0.5"), mpf(repr(float(tau))))
        v = 2 * mp.re(_loggamma_scheme(z, dps))
        ref = 2 * mp.re(mp.loggamma(z))
        _crosscheck(v, ref, dps, "log_abs_gamma_sq")
        return v


def oracle_gamma_ratio_polar(mu: int, tau, dps=60):
    """(H, rho): modulus and phase of Gamma(1/2+mu+i tau)/Gamma(1+i tau)."""
    with _dps(dps + 10):
        tau_mp = mpf(repr(float(tau)))
        lg = _loggamma_scheme(mpc(mpf("0.5") + mu, tau_mp), dps) \
            - _loggamma_scheme(mpc(1, tau_mp), dps)
        ref = mp.loggamma(mpc(mpf("0.5") + mu, tau_mp)) - mp.loggamma(mpc(1, tau_mp))
        _crosscheck(lg, ref, dps, "gamma_ratio_polar")
        H = mp.e ** mp.re(lg)
        rho = mp.im(lg)
        # reduce to (-pi, pi]
        twopi = 2 * mp.pi
        rho = rho - twopi * mp.floor((rho + mp.pi) / twopi)
        return H, rho


def oracle_gamma(kind: str, args, dps=60):
    """Dispatch wrapper over the three gamma-kernel oracles."""
    if kind == "digamma_half":
        return oracle_digamma_half(args[0], dps=dps)
    if kind == "log_abs_gamma_sq":
        return oracle_log_abs_gamma_sq(int(args[0]), args[1], dps=dps)
    if kind == "ratio_polar":
        return oracle_gamma_ratio_polar(int(args[0]), args[1], dps=dps)
    raise ValueError(f"unknown gamma oracle kind: {kind}")


def _pochhammer_abs2_step(k: int, tau):
    # |(1/2 + i tau + k)|^2 = (k + 1/2)^2 + tau^2
    return (mpf(k) + mpf("0.5")) ** 2 + tau ** 2


def oracle_r01(x, tau, dps=60):
    """(R0, R1) by direct summation of the near-1 expansions, shipped signs.

    Refuses to run when dps is below the guard-digit precondition.
    """
    xf = float(x)
    tf = float(tau)
    if not (1.0 < xf < 3.0):
        raise ValueError("oracle_r01 needs x in (1, 3)")
    need = DIGAMMA_HALF_GUARD + guard_digits_r01(xf, tf)
    if dps < need:
        raise ValueError(f"dps={dps} below guard precondition {need}")
    with _dps(dps):
        x = mpf(repr(float(x))) if not isinstance(x, mpf) else x
        tau = mpf(repr(float(tau))) if not isinstance(tau, mpf) else tau
        z = (1 - x) / 2
        w = mp.sqrt((x - 1) / (x + 1))
        lnw = mp.log(w)
        psi_half_re = mp.re(mp.digamma(mpc(mpf("0.5"), tau)))
        # psi(k+1) = -gamma + H_k, accumulated as we go
        harm = mpf(0)
        psi_k1 = -mp.euler
        coeff = mpf(1)          # prod_{j<k}((j+1/2)^2+tau^2) / (k!)^2
        zk = mpf(1)             # z^k
        r0 = mpf(0)
        r1sum = mpf(0)
        tolbits = mp.prec + 10
        for k in range(0, 100000):
            base = psi_k1 - psi_half_re - lnw
            t0 = coeff * zk * base
            r0 += t0
            # R1 term: coeff * (1/2) z^{k-1} ((w^2-1)/2 + k*base)
            t1 = coeff * mpf("0.5") * (zk / z) * ((w * w - 1) / 2 + k * base)
            r1sum += t1
            if k > 2 and abs(t0) < abs(r0) * mpf(2) ** (-tolbits) and \
               abs(t1) < abs(r1sum) * mpf(2) ** (-tolbits):
                break
            coeff *= _pochhammer_abs2_step(k, tau) / (k + 1) ** 2
            zk *= z
            harm += mpf(1) / (k + 1)
            psi_k1 = -mp.euler + harm
        r1 = -mp.sqrt(x * x - 1) * r1sum   # calibrated global sign
        return r0, r1


def c_rec(m: int, tau):
    """(m - 1/2)^2 + tau^2, the recurrence coefficient."""
    return (mpf(m) - mpf("0.5")) ** 2 + tau ** 2


def oracle_raise_order(f_prev, f_curr, m_from: int, m_to: int, x, tau):
    """Climb F_{m} with F_{m+1} = -(2 m x/s) F_m - c_m F_{m-1} at precision."""
    s = mp.sqrt(x * x - 1)
    fm1, fm = f_prev, f_curr
    for m in range(m_from, m_to):
        fm1, fm = fm, -(2 * m * x / s) * fm - c_rec(m, tau) * fm1
    return fm1, fm


def oracle_p_neg_series(x, m: int, tau, dps=60):
    """P^{-m} hypergeometric series; valid on -1 < x < 3, x != 1 handled too.

    Positive-term series on the Ferrers side, alternating for x > 1.
    """
    with _dps(dps):
        x = mpf(repr(float(x))) if not isinstance(x, mpf) else x
        tau = mpf(repr(float(tau))) if not isinstance(tau, mpf) else tau
        zbar = (1 - x) / 2
        if x <= 1:
            w = mp.sqrt((1 - x) / (1 + x))
        else:
            w = mp.sqrt((x - 1) / (x + 1))
        ssum = mpf(0)
        term = mpf(1)
        tolbits = mp.prec + 10
        for k in range(0, 200000):
            ssum += term
            term *= (_pochhammer_abs2_step(k, tau) / ((m + 1 + k) * (k + 1))) * zbar
            if abs(term) < abs(ssum) * mpf(2) ** (-tolbits):
                break
        return w ** m / mp.factorial(m) * ssum


def oracle_connection_pi(m: int, tau):
    """prod_{j<m} ((j+1/2)^2 + tau^2) at current precision."""
    p = mpf(1)
    for j in range(m):
        p *= _pochhammer_abs2_step(j, tau)
    return p


def oracle_p(x, m: int, tau, dps=60):
    """P^m for -1 < x < 3 via the series and the calibrated connection."""
    with _dps(dps):
        tau_mp = mpf(repr(float(tau))) if not isinstance(tau, mpf) else tau
        pneg = oracle_p_neg_series(x, m, tau_mp, dps=dps)
        pi_m = oracle_connection_pi(m, tau_mp)
        if float(x) > 1.0:
            return (-1) ** m * pi_m * pneg
        return pi_m * pneg


def _march_rhs(m: int, tau):
    m2 = mpf(m) ** 2
    lam = tau * tau + mpf("0.25")

    def rhs(t, y):
        ch = mp.cosh(t)
        sh = mp.sinh(t)
        cth = ch / sh
        return [y[1], -cth * y[1] - (lam - m2 / (sh * sh)) * y[0]]

    return rhs


def _march_guard_digits(m: int, tau: float, t0: float, t1: float) -> int:
    """Decimal digits lost marching the order-m minimal direction t0 -> t1.

    The two solution directions separate at rate 2m/sinh t wherever the
    order recurrence band is left behind (m > tau sinh t); integrating
    the rate over the separated part of the span gives the relative
    accuracy the decaying direction loses to contamination.
    """
    if m == 0:
        return 0
    t_band = math.asinh(m / tau) if tau > 0.0 else math.inf
    hi = min(t1, t_band)
    if hi <= t0:
        return 0
    loss = 2.0 * m * (math.log(1.0 / math.tanh(0.5 * t0))
                      - math.log(1.0 / math.tanh(0.5 * hi)))
    return int(loss / math.log(10.0)) + 1


def oracle_march(x_target, m: int, tau, function="R", dps=60, x_anchor=None):
    """(value, d/dx value) at x_target by Taylor ODE integration in t=arccosh x.

    Seeds come from the series evaluators at an anchor inside their region;
    this is the production-independent route (mpmath's own integrator).
    Marching the direction that decays with t pays for solution-direction
    contamination with working digits; the guard below covers it.
    """
    xt = float(x_target)
    if not (1.0 < xt <= 100.0):
        raise ValueError("oracle_march needs x_target in (1, 100]")
    anchor_f = min(xt, 2.5) if x_anchor is None else float(x_anchor)
    if function == "R" and xt > anchor_f:
        dps = dps + _march_guard_digits(m, float(tau), math.acosh(anchor_f),
                                        math.acosh(xt))
    with _dps(dps):
        tau_mp = mpf(repr(float(tau)))
        if x_anchor is None:
            x_anchor = min(xt, 2.5)
        xa = mpf(repr(float(x_anchor)))
        use = dps + DIGAMMA_HALF_GUARD + guard_digits_r01(float(xa), float(tau))
        if function == "R":
            with _dps(use):
                sa_g = mp.sqrt(xa * xa - 1)
                r0, r1 = oracle_r01(xa, tau_mp, dps=use)
                rm1, rm = oracle_raise_order(r0, r1, 1, max(m, 1), xa, tau_mp)
                if m == 0:
                    val, nxt = r0, r1
                else:
                    val, nxt = rm, -(2 * m * xa / sa_g) * rm - c_rec(m, tau_mp) * rm1
        else:
            with _dps(use):
                val = oracle_p(xa, m, tau_mp, dps=use)
                nxt = oracle_p(xa, m + 1, tau_mp, dps=use)
        val, nxt = mpf(val), mpf(nxt)
        sa = mp.sqrt(xa * xa - 1)
        dval = nxt / sa + m * xa / (xa * xa - 1) * val
        if xt == float(x_anchor):
            return val, dval
        t0 = mp.acosh(xa)
        t1 = mp.acosh(mpf(repr(xt)))
        # the integrator's step control is absolute; bring the state to unit
        # magnitude first (the ODE is linear homogeneous, scaling is exact)
        k = max(mp.mag(val), mp.mag(dval * sa))
        sc = mpf(2) ** (-k) if k > 0 else mpf(1)
        f = mp.odefun(_march_rhs(m, tau_mp), t0, [val * sc, dval * sa * sc],
                      tol=mpf(10) ** (-(dps - 8)))
        w, wd = f(t1)
        sh = mp.sinh(t1)
        return w / sc, wd / (sh * sc)


def oracle_conicpr(x, m: int, tau, dps=60):
    """(pm, pmd, rm, rmd) at x > 1, all mpf at dps digits."""
    xf = float(x)
    if xf <= 1.0:
        raise ValueError("oracle_conicpr needs x > 1")
    with _dps(dps):
        x_mp = mpf(repr(xf))
        tau_mp = mpf(repr(float(tau)))
        s = mp.sqrt(x_mp * x_mp - 1)
        if xf < 2.8:
            use = dps + DIGAMMA_HALF_GUARD + guard_digits_r01(xf, float(tau))
            with _dps(use):
                r0, r1 = oracle_r01(x_mp, tau_mp, dps=use)
                rm1, rm = oracle_raise_order(r0, r1, 1, max(m, 1), x_mp, tau_mp)
                if m == 0:
                    rm_v, rnext = r0, r1
                else:
                    rm_v, rnext = rm, -(2 * m * x_mp / s) * rm - c_rec(m, tau_mp) * rm1
                pm_v = oracle_p(x_mp, m, tau_mp, dps=use)
                pnext = oracle_p(x_mp, m + 1, tau_mp, dps=use)
            rm_v, rnext = mpf(rm_v), mpf(rnext)
            pm_v, pnext = mpf(pm_v), mpf(pnext)
            rmd = rnext / s + m * x_mp / (x_mp * x_mp - 1) * rm_v
            pmd = pnext / s + m * x_mp / (x_mp * x_mp - 1) * pm_v
        else:
            pm_v, pmd = oracle_march(xf, m, tau_mp, function="P", dps=dps)
            rm_v, rmd = oracle_march(xf, m, tau_mp, function="R", dps=dps)
        return pm_v, pmd, rm_v, rmd


def oracle_ferrers_pr(x, m: int, tau, dps=60):
    """(pm, pmd) on -1 < x < 1 via the Ferrers series and derivative relation."""
    xf = float(x)
    if not (-1.0 < xf < 1.0):
        raise ValueError("oracle_ferrers_pr needs -1 < x < 1")
    with _dps(dps):
        x_mp = mpf(repr(xf))
        tau_mp = mpf(repr(float(tau)))
        pm_v = oracle_p(x_mp, m, tau_mp, dps=dps)
        pnext = oracle_p(x_mp, m + 1, tau_mp, dps=dps)
        s1 = mp.sqrt(1 - x_mp * x_mp)
        pmd = -pnext / s1 + m * x_mp / (x_mp * x_mp - 1) * pm_v
        return pm_v, pmd


def oracle_bessel_quad(z, dps=40):
    """(J0, Y0, J1, Y1) reference values."""
    with _dps(dps):
        z_mp = mpf(repr(float(z)))
        return (mp.besselj(0, z_mp), mp.bessely(0, z_mp),
                mp.besselj(1, z_mp), mp.bessely(1, z_mp))


def doubling_check(fn, dps=60, min_agree=None):
    """Run fn(dps) and fn(2*dps); return the finer value after agreement check.

    fn must accept a dps keyword and return an mpf (or tuple of mpf).
    """
    if min_agree is None:
        min_agree = dps - 5
    lo = fn(dps=dps)
    hi = fn(dps=2 * dps)
    los = lo if isinstance(lo, tuple) else (lo,)
    his = hi if isinstance(hi, tuple) else (hi,)
    with _dps(2 * dps):
        for a, b in zip(los, his):
            if a == b == 0:
                continue
            diff = abs(mpf(a) - mpf(b))
            scale = max(abs(mpf(a)), abs(mpf(b)))
            if diff > scale * mpf(10) ** (-min_agree):
                raise ArithmeticError(
                    f"precision doubling disagreement: {a} vs {b}")
    return hi
