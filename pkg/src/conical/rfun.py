"""Second-kind conical function R and its x-derivative on x > 1.

R is the real part of the second-kind Legendre function at degree
-1/2 + i tau and nonnegative integer order m.  Four routes cover the
domain, picked by region:

  - near-1 logarithmic series for orders 0 and 1, then a stable upward
    order climb (this family grows with order);
  - a Bessel-phase expansion in the oscillatory large-tau window near
    x = 1, with polynomial corrections from frozen exact-rational tables;
  - a trigonometric phase expansion for x away from 1, applied at the
    requested order directly while the series stays well conditioned and
    at orders 0/1 plus climb otherwise;
  - Taylor marching of the defining equation across the gap where none
    of the expansions holds.

All internal values travel as (mantissa, shared power-of-two exponent)
pairs so large orders survive far past binary64 range; overflow is
reported through the result status, never raised.
"""

from __future__ import annotations

import math

from conical.besseljy import bessel_j0y0_j1y1, bessel_jn_yn
from conical.common import (
    DEFAULT_CONFIG,
    EvalPoint,
    EvalResult,
    EvalStatus,
    NumericConfig,
    Region,
    validate,
)
from conical.gammakit import digamma_half, gamma_ratio_polar
from conical.kummer_fk import fk_values
from conical.ladder import c_coeff, climb, deriv_mantissa
from conical.march import march_x

EULER_GAMMA = 0.5772156649015329
SQRT_HALF_PI = 1.2533141373155003      # sqrt(pi/2)
SQRT_PI = 1.7724538509055159
TERM_STOP_FACTOR = 0.25                # terms below this many ulp end a series
LARGEX_MAX_TERMS = 90
DIRECT_ORDER_MAX = 120                 # largest order evaluated without climbing
DIRECT_COND_DIGITS = 3.2               # allowed base-10 cancellation for direct orders
X_KUMMER_MIN = 1.01                    # below this the expansion variable grows like
                                       # 1/(x - 1) and the error floor rises; the
                                       # marcher covers that strip instead
TINY = 1e-300


def r_series_orders01(x: float, tau: float, config: NumericConfig = DEFAULT_CONFIG):
    """(R0, R1, est_rel_err) by the logarithmic series near x = 1.

    Valid while tau * sqrt((x-1)/2) stays small; the alternating terms
    then cancel by at most a few digits, which the estimate reports.
    """
    s = math.sqrt(x * x - 1.0)
    u = x - 1.0
    w2 = u / (x + 1.0)
    ln_w = 0.5 * math.log(w2)
    z = -0.5 * u
    base = -EULER_GAMMA - digamma_half(tau).re - ln_w
    half_w2m1 = 0.5 * (w2 - 1.0)
    ck_z = 1.0                       # C_k z^k
    acc0 = base
    acc1 = half_w2m1 / (2.0 * z)    # k = 0 term of the order-1 sum
    peak0, peak1 = abs(acc0), abs(acc1)
    tail_ok = 0
    k = 0
    while k < config.series_max_terms:
        k += 1
        ck_z *= ((k - 0.5) ** 2 + tau * tau) / (k * k) * z
        base += 1.0 / k
        t0 = ck_z * base
        t1 = ck_z / (2.0 * z) * (half_w2m1 + k * base)
        acc0 += t0
        acc1 += t1
        peak0 = max(peak0, abs(t0))
        peak1 = max(peak1, abs(t1))
        small = abs(t0) <= TERM_STOP_FACTOR * 2.2e-16 * abs(acc0) \
            and abs(t1) <= TERM_STOP_FACTOR * 2.2e-16 * abs(acc1)
        tail_ok = tail_ok + 1 if small else 0
        if tail_ok >= 3:
            break
    cancel = max(peak0 / max(abs(acc0), TINY), peak1 / max(abs(acc1), TINY))
    est = 2.2e-16 * max(cancel, 1.0) + (0.0 if tail_ok >= 3 else 1e-13)
    return acc0, -s * acc1, est


def _bessel_pair(mu: int, phi: float):
    """J and Y at orders mu and mu-1 for the phase functions."""
    if mu == 0:
        j0, y0, j1, y1 = bessel_j0y0_j1y1(phi)
        return j0, y0, -j1, -y1
    if mu == 1:
        j0, y0, j1, y1 = bessel_j0y0_j1y1(phi)
        return j1, y1, j0, y0
    jm, ym = bessel_jn_yn(mu, phi)
    jm1, ym1 = bessel_jn_yn(mu - 1, phi)
    return jm, ym, jm1, ym1


def r_kummer_order(x: float, tau: float, mu: int,
                   config: NumericConfig = DEFAULT_CONFIG):
    """R at one order by the Bessel-phase large-tau expansion: (value, cancel).

    The second entry is the measured peak-term-to-sum ratio of the
    correction series, matching the contract of the other direct-order
    expansions.
    """
    s = math.sqrt(x * x - 1.0)
    alpha = 2.0 * math.log1p(x - 1.0 + s)       # 2 arccosh(x), stable near 1
    phi = 0.5 * alpha * tau
    z = 1.0 / (2.0 * s * (x + s))
    inv_alpha = 1.0 / alpha
    scale = (tau * inv_alpha) ** mu
    jm, ym, jm1, ym1 = _bessel_pair(mu, phi)
    c = math.cos(phi)
    sn = math.sin(phi)
    # phase functions carry exp(i phi); the k = 0 pair collapses to -Y/2
    re = [0.0] * config.kummer_terms
    im = [0.0] * config.kummer_terms
    re[0] = -0.5 * SQRT_PI * scale * (c * ym - sn * jm)
    im[0] = -0.5 * SQRT_PI * scale * (c * jm + sn * ym)
    if config.kummer_terms > 1:
        re[1] = 0.25 * alpha * SQRT_PI * scale * (c * (ym + jm1) - sn * (jm - ym1))
        im[1] = 0.25 * alpha * SQRT_PI * scale * (c * (jm - ym1) + sn * (ym + jm1))
    for n in range(1, config.kummer_terms - 1):
        cn = (n - 2.0 * mu) / tau
        dn = alpha / tau * (n - 0.5 - mu)
        re[n + 1] = cn * im[n] - alpha * re[n] + dn * im[n - 1]
        im[n + 1] = -cn * re[n] - alpha * im[n] - dn * re[n - 1]
    fk = fk_values(mu, z, inv_alpha, config.kummer_terms)
    terms = [fk[k] * (re[k] * c + im[k] * sn) for k in range(config.kummer_terms)]
    acc = math.fsum(terms)
    cancel = max(map(abs, terms)) / max(abs(acc), TINY)
    sign = -1.0 if mu % 2 else 1.0
    value = sign * SQRT_HALF_PI * alpha ** (mu + 0.5) * acc / (x * x - 1.0) ** 0.25
    return value, cancel


def largex_condition_digits(x: float, mu: int) -> float:
    """Base-10 cancellation estimate of the direct phase series at order mu."""
    expo = 2.0 * math.log1p(x - 1.0 + math.sqrt(x * x - 1.0))
    z = 1.0 / math.expm1(expo)
    return 2.0 * mu * math.sqrt(z) / math.log(10.0)


def r_largex_order(x: float, tau: float, mu: int,
                   config: NumericConfig = DEFAULT_CONFIG):
    """R at one order by the oscillatory phase expansion: (value, cancel).

    The second entry is the measured peak-term-to-sum ratio; multiplied
    by an ulp it bounds the relative rounding error of the sum, covering
    both alternating-term growth and a nearly cancelling projection.
    """
    s = math.sqrt(x * x - 1.0)
    u = math.log1p(x - 1.0 + s)                 # arccosh(x)
    phi = tau * u
    z = 1.0 / math.expm1(2.0 * u)
    mod, rho = gamma_ratio_polar(mu, tau)
    a = 1.0                                     # series numerator factor
    q = 1.0                                     # 1 / |(1 + i tau)_k|
    sigma = 0.0
    acc = math.cos(phi - rho)
    peak = 1.0
    prev_mag = abs(acc) + 1.0
    tail_ok = 0
    for k in range(LARGEX_MAX_TERMS):
        a *= (0.5 + mu + k) * (0.5 - mu + k) / (k + 1.0) * (-z)
        q /= math.hypot(k + 1.0, tau)
        sigma -= math.atan2(tau, k + 1.0)
        term = a * q * math.cos(phi - rho - sigma)
        mag = abs(a * q)
        acc += term
        peak = max(peak, mag)
        if mag > prev_mag and k > 4:
            break                               # asymptotic tail minimum reached
        prev_mag = mag
        if mag <= TERM_STOP_FACTOR * 2.2e-16 * abs(acc):
            tail_ok += 1
            if tail_ok >= 3:
                break
        else:
            tail_ok = 0
    sign = -1.0 if mu % 2 else 1.0
    cancel = peak / max(abs(acc), TINY)
    return sign * SQRT_HALF_PI * mod / (x * x - 1.0) ** 0.25 * acc, cancel


def _series_pair(x, m, tau, config):
    r0, r1, est = r_series_orders01(x, tau, config)
    fm, fm1, exp2 = climb(x, tau, r0, r1, m)
    return fm, fm1, exp2, est + m * 3e-16, Region.SeriesNear1


def _kummer_pair(x, m, tau, config):
    r0, cancel0 = r_kummer_order(x, tau, 0, config)
    r1, cancel1 = r_kummer_order(x, tau, 1, config)
    fm, fm1, exp2 = climb(x, tau, r0, r1, m)
    est = 1e-13 + 2e-15 * max(cancel0, cancel1) + m * 3e-16
    return fm, fm1, exp2, est, Region.KummerLargeTau


def _march_pair(x, m, tau, config):
    anchor = 1.0 + 2.0 * (config.series_tau_cut / tau) ** 2
    r0, r1, est = r_series_orders01(anchor, tau, config)
    s_a = math.sqrt(anchor * anchor - 1.0)
    r2 = -(2.0 * anchor / s_a) * r1 - c_coeff(1, tau) * r0
    d0 = r1 / s_a
    d1 = r2 / s_a + anchor / (s_a * s_a) * r1
    r0x, _ = march_x(0, tau, anchor, r0, d0, x)
    r1x, _ = march_x(1, tau, anchor, r1, d1, x)
    fm, fm1, exp2 = climb(x, tau, r0x, r1x, m)
    return fm, fm1, exp2, est + 1e-14 + m * 3e-16, Region.OdeMarch


def _largex_pair(x, m, tau, config):
    if m <= DIRECT_ORDER_MAX and largex_condition_digits(x, m + 1) <= DIRECT_COND_DIGITS:
        fm, cancel_m = r_largex_order(x, tau, m, config)
        fm1, cancel_m1 = r_largex_order(x, tau, m + 1, config)
        return fm, fm1, 0, 2e-15 * max(cancel_m, cancel_m1), Region.LargeX
    r0, cancel0 = r_largex_order(x, tau, 0, config)
    r1, cancel1 = r_largex_order(x, tau, 1, config)
    fm, fm1, exp2 = climb(x, tau, r0, r1, m)
    est = 2e-15 * max(cancel0, cancel1) + m * 3e-16
    return fm, fm1, exp2, est, Region.LargeX


def pick_region(x: float, m: int, tau: float,
                config: NumericConfig = DEFAULT_CONFIG) -> Region:
    """Region the R dispatcher will use at this point."""
    if x >= config.x_largex_min:
        return Region.LargeX
    if tau * math.sqrt(max(x - 1.0, 0.0) / 2.0) <= config.series_tau_cut:
        return Region.SeriesNear1
    if tau >= config.tau_kummer_min and x >= X_KUMMER_MIN:
        return Region.KummerLargeTau
    return Region.OdeMarch


_PAIR_FOR_REGION = {
    Region.SeriesNear1: _series_pair,
    Region.KummerLargeTau: _kummer_pair,
    Region.OdeMarch: _march_pair,
    Region.LargeX: _largex_pair,
}


def ldexp_saturating(man: float, exp2: int) -> float:
    """ldexp that saturates to signed infinity instead of raising."""
    try:
        return math.ldexp(man, exp2)
    except OverflowError:
        return math.copysign(math.inf, man)


def result_pair(x, m, fm, fm1, exp2, est, region, ferrers=False):
    """Assemble (value result, derivative result) from a scaled order pair."""
    value = ldexp_saturating(fm, exp2)
    dman = deriv_mantissa(x, m, fm, fm1, ferrers)
    deriv = ldexp_saturating(dman, exp2)
    status = EvalStatus.Ok
    if not math.isfinite(value) or not math.isfinite(deriv) \
            or (value == 0.0 and fm != 0.0) or (deriv == 0.0 and dman != 0.0):
        status = EvalStatus.OverUnderflow
    return (
        EvalResult(value, est, status, region),
        EvalResult(deriv, est, status, region),
    )


def conicr_scaled(x: float, m: int, tau: float,
                  config: NumericConfig = DEFAULT_CONFIG):
    """(F(m), F(m+1), exp2, est, region) with values F * 2^exp2.

    The verification harness forms residuals from these scaled pairs so
    order-100 evaluations never leave representable range.
    """
    region = pick_region(x, m, tau, config)
    return _PAIR_FOR_REGION[region](x, m, tau, config)


def conicr(x: float, m: int, tau: float,
           config: NumericConfig = DEFAULT_CONFIG):
    """R and dR/dx at (x, m, tau) as a pair of results."""
    status = validate(EvalPoint(x, m, tau), "R")
    if status is not EvalStatus.Ok:
        bad = EvalResult(math.nan, math.inf, status, Region.SeriesNear1)
        return bad, EvalResult(math.nan, math.inf, status, Region.SeriesNear1)
    region = pick_region(x, m, tau, config)
    fm, fm1, exp2, est, region = _PAIR_FOR_REGION[region](x, m, tau, config)
    return result_pair(x, m, fm, fm1, exp2, est, region)
