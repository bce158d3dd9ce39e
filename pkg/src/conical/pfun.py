"""First-kind conical function P and its x-derivative on x > -1.

The function is the first-kind Legendre function at degree -1/2 + i tau
and nonnegative integer order m: the Ferrers form on |x| < 1 and the
type-3 form on x > 1, which join continuously in value at x = 1.

P is proportional to the solution that decays with order on x > 1, so
upward order recurrence is unstable there and every route respects that:

  - hypergeometric series at negative order -m plus the exact connection
    constant, evaluated separately per requested order (x < 1.2 and the
    whole Ferrers side);
  - a trigonometric phase expansion at the requested order directly,
    while its measured cancellation stays bounded;
  - an upward order climb from phase orders 0/1 while the order
    recurrence is still oscillatory (m safely below tau sqrt(x^2-1)),
    where neither solution family dominates and the climb is neutral;
  - downward (Miller-style) recurrence normalized at order 0 or 1
    beyond the oscillatory band, where P is strongly minimal and the
    downward direction converges fast;
  - Taylor marching from a series anchor where no expansion holds and
    for the small-tau band where the phase expansion degenerates.

Scaled mantissa/exponent pairs keep order-100 results representable.
"""

from __future__ import annotations

import math

from conical.common import (
    DEFAULT_CONFIG,
    EvalPoint,
    EvalResult,
    EvalStatus,
    NumericConfig,
    Region,
    validate,
)
from conical.gammakit import gamma_ratio_polar
from conical.ladder import c_coeff, climb, miller_ratios, pi_product
from conical.march import march_x
from conical.rfun import (
    DIRECT_COND_DIGITS,
    DIRECT_ORDER_MAX,
    LARGEX_MAX_TERMS,
    TERM_STOP_FACTOR,
    conicr,
    largex_condition_digits,
    result_pair,
)

LN2 = 0.6931471805599453
FERRERS_MAX_TERMS = 4000       # the positive series converges slowly near x = -1
UPPER_MAX_TERMS = 1200         # alternating series on 1 < x < 1.2 is much faster
MARCH_ANCHOR_TAU0 = 1.1        # series anchor for marching at small tau
PHASE_TAU_MIN = 5e-3           # below this the phase angle sits too close to a
                               # multiple of pi (absolute angle error ~1e-16
                               # against a value of size tau), so march instead
PHASE_EST_ULP = 3e-15          # direct-order error per unit of measured cancellation
PHASE_EST_MAX = 3e-13          # fall back to climb or Miller beyond this estimate
CLIMB_BAND_FACTOR = 0.7        # climb while m stays this deep inside the band of
                               # oscillatory order recurrence, m < tau sqrt(x^2-1);
                               # beyond it P turns minimal and only the downward
                               # direction is stable
TINY = 1e-300


def hyper_sum(x: float, m: int, tau: float, max_terms: int):
    """Sum over k of prod_{j<k}((j+1/2)^2+tau^2) z^k / ((m+1)_k k!), z=(1-x)/2.

    This is the series factor of the minimal-order function: positive
    terms on the Ferrers side, alternating for x > 1.  Returns the sum
    and a relative error estimate covering rounding, cancellation and
    truncation.
    """
    z = 0.5 * (1.0 - x)
    term = 1.0
    acc = 1.0
    peak = 1.0
    tail_ok = 0
    k = 0
    while k < max_terms:
        term *= ((k + 0.5) ** 2 + tau * tau) / ((m + 1.0 + k) * (k + 1.0)) * z
        acc += term
        peak = max(peak, abs(term))
        k += 1
        if abs(term) <= TERM_STOP_FACTOR * 2.2e-16 * abs(acc):
            tail_ok += 1
            if tail_ok >= 3:
                break
        else:
            tail_ok = 0
    est = 2.2e-16 * peak / max(abs(acc), TINY)
    if tail_ok < 3:
        est += abs(term) / max(abs(acc), TINY)
    return acc, est


def p_largex_order(x: float, tau: float, mu: int,
                   config: NumericConfig = DEFAULT_CONFIG):
    """P at one order by the oscillatory phase expansion: (value, cancel).

    Requires tau above the small-tau band: the prefactor degenerates as
    tau -> 0, where the dispatcher marches from a series anchor instead.

    The second entry is the measured peak-term-to-sum ratio.  It grows
    without bound once the order recurrence leaves its oscillatory band
    (m above tau sqrt(x^2-1)): P is then exponentially minimal and this
    representation projects it out of a sum whose natural size is the
    dominant solution, so the dispatcher must check the value before
    trusting it.
    """
    s = math.sqrt(x * x - 1.0)
    u = math.log1p(x - 1.0 + s)                 # arccosh(x)
    phi = tau * u
    z = 1.0 / math.expm1(2.0 * u)
    mod, rho = gamma_ratio_polar(-mu, tau)
    # the angle is rho + pi/2 - phi + sigma; folding the pi/2 into the
    # cosine keeps the small-angle case (tiny tau) relatively accurate
    base = rho - phi
    a = 1.0
    q = 1.0
    sigma = 0.0
    acc = -math.sin(base)
    peak = 1.0
    prev_mag = abs(acc) + 1.0
    tail_ok = 0
    for k in range(LARGEX_MAX_TERMS):
        a *= (0.5 + mu + k) * (0.5 - mu + k) / (k + 1.0) * (-z)
        q /= math.hypot(k + 1.0, tau)
        sigma -= math.atan2(tau, k + 1.0)
        term = -a * q * math.sin(base + sigma)
        mag = abs(a * q)
        acc += term
        peak = max(peak, mag)
        if mag > prev_mag and k > 4:
            break
        prev_mag = mag
        if mag <= TERM_STOP_FACTOR * 2.2e-16 * abs(acc):
            tail_ok += 1
            if tail_ok >= 3:
                break
        else:
            tail_ok = 0
    cancel = peak / max(abs(acc), TINY)
    value = math.sqrt(2.0 / math.pi) / (tau * mod) / (x * x - 1.0) ** 0.25 * acc
    return value, cancel


def _series_order_value(x, order, tau):
    """Scaled (mantissa, exp2, est) of P at one order by its minimal series.

    Works on both sides of x = 1: the order enters the series only through
    the (order+1)_k denominator, so higher orders converge faster, and
    building each order from its own series avoids the order recurrence,
    which is unstable in this direction for P.
    """
    max_terms = FERRERS_MAX_TERMS if x < 1.0 else UPPER_MAX_TERMS
    s_sum, est = hyper_sum(x, order, tau, max_terms)
    ln_w = 0.5 * math.log(abs(1.0 - x) / (1.0 + x))
    pi_man, pi_exp = pi_product(order, tau)
    ln_pref = order * ln_w - math.lgamma(order + 1.0)
    e2 = int(math.floor(ln_pref / LN2))
    pref_man = math.exp(ln_pref - e2 * LN2)
    sign = -1.0 if (x > 1.0 and order % 2) else 1.0
    man, man_e = math.frexp(sign * pi_man * pref_man * s_sum)
    return man, man_e + e2 + pi_exp, est


def _series_pair(x, m, tau, config):
    man_m, exp_m, est_m = _series_order_value(x, m, tau)
    man_n, exp_n, est_n = _series_order_value(x, m + 1, tau)
    return man_m, math.ldexp(man_n, exp_n - exp_m), exp_m, \
        est_m + est_n, Region.SeriesNear1


def _normalized_miller(x, tau, m, p0, p1, est, region):
    """Order-m pair from downward ratios anchored at the stronger of P0/P1."""
    (rm, em), (rm1, em1), f1_over_f0, ratio_est = miller_ratios(x, tau, m)
    envelope = math.hypot(p0, p1 / max(tau, 1.0))
    if abs(p0) >= 0.05 * envelope:
        fm, fe = rm * p0, em
        fm1, fe1 = rm1 * p0, em1
    else:
        fm, fe = rm / f1_over_f0 * p1, em
        fm1, fe1 = rm1 / f1_over_f0 * p1, em1
    return fm, math.ldexp(fm1, fe1 - fe), fe, est + ratio_est + 2e-15, region


def _march_orders01(x, tau, config):
    """P at orders 0 and 1 carried from a series anchor by Taylor marching."""
    if tau > config.series_tau_cut:
        anchor = 1.0 + 2.0 * (config.series_tau_cut / tau) ** 2
    else:
        anchor = MARCH_ANCHOR_TAU0
    s0, e0 = hyper_sum(anchor, 0, tau, UPPER_MAX_TERMS)
    s1, e1 = hyper_sum(anchor, 1, tau, UPPER_MAX_TERMS)
    s_a = math.sqrt(anchor * anchor - 1.0)
    w = math.sqrt((anchor - 1.0) / (anchor + 1.0))
    p0a = s0
    p1a = -(0.25 + tau * tau) * w * s1
    p2a = -(2.0 * anchor / s_a) * p1a - c_coeff(1, tau) * p0a
    d0 = p1a / s_a
    d1 = p2a / s_a + anchor / (s_a * s_a) * p1a
    p0, _ = march_x(0, tau, anchor, p0a, d0, x)
    p1, _ = march_x(1, tau, anchor, p1a, d1, x)
    return p0, p1, e0 + e1 + 2e-14


def _march_pair(x, m, tau, config):
    p0, p1, est = _march_orders01(x, tau, config)
    if m == 0:
        return p0, p1, 0, est, Region.OdeMarch
    if m == 1:
        s = math.sqrt(x * x - 1.0)
        p2 = -(2.0 * x / s) * p1 - c_coeff(1, tau) * p0
        return p1, p2, 0, est + 3e-15, Region.OdeMarch
    return _normalized_miller(x, tau, m, p0, p1, est, Region.OdeMarch)


def _phase_pair(x, m, tau, config):
    if tau < PHASE_TAU_MIN:
        return _march_pair(x, m, tau, config)
    if m <= DIRECT_ORDER_MAX and largex_condition_digits(x, m + 1) <= DIRECT_COND_DIGITS:
        pm, cancel_m = p_largex_order(x, tau, m, config)
        pm1, cancel_m1 = p_largex_order(x, tau, m + 1, config)
        est = PHASE_EST_ULP * max(cancel_m, cancel_m1)
        if est <= PHASE_EST_MAX or m <= 1:
            return pm, pm1, 0, est, Region.LargeX
    p0, cancel0 = p_largex_order(x, tau, 0, config)
    p1, cancel1 = p_largex_order(x, tau, 1, config)
    anchor_est = PHASE_EST_ULP * max(cancel0, cancel1)
    if m <= CLIMB_BAND_FACTOR * tau * math.sqrt(x * x - 1.0):
        fm, fm1, exp2 = climb(x, tau, p0, p1, m)
        return fm, fm1, exp2, anchor_est + m * 3e-16, Region.LargeX
    return _normalized_miller(x, tau, m, p0, p1, anchor_est, Region.Recurrence)


def _exact_edge(m, tau):
    """Value and derivative exactly at x = 1 (derivative from the x > 1 side)."""
    if m == 0:
        return (
            EvalResult(1.0, 0.0, EvalStatus.Ok, Region.SeriesNear1),
            EvalResult(-(0.25 + tau * tau) / 2.0, 0.0, EvalStatus.Ok,
                       Region.SeriesNear1),
        )
    value = EvalResult(0.0, 0.0, EvalStatus.Ok, Region.SeriesNear1)
    if m == 1:
        deriv = EvalResult(-math.inf, math.inf, EvalStatus.OverUnderflow,
                           Region.SeriesNear1)
    elif m == 2:
        pi2 = (0.25 + tau * tau) * (2.25 + tau * tau)
        deriv = EvalResult(pi2 / 4.0, 0.0, EvalStatus.Ok, Region.SeriesNear1)
    else:
        deriv = EvalResult(0.0, 0.0, EvalStatus.Ok, Region.SeriesNear1)
    return value, deriv


def pick_region(x: float, m: int, tau: float,
                config: NumericConfig = DEFAULT_CONFIG) -> Region:
    """Region the P dispatcher tries first at this point.

    The phase route can still fall back to downward recurrence at run
    time when its measured cancellation turns out too large; results
    carry the region actually used.
    """
    if x <= 1.0:
        return Region.SeriesNear1
    if x < config.x_largex_min:
        if tau * math.sqrt((x - 1.0) / 2.0) <= config.series_tau_cut:
            return Region.SeriesNear1
        return Region.OdeMarch
    if tau < PHASE_TAU_MIN:
        return Region.OdeMarch
    if m <= DIRECT_ORDER_MAX and largex_condition_digits(x, m + 1) <= DIRECT_COND_DIGITS:
        return Region.LargeX
    if m <= CLIMB_BAND_FACTOR * tau * math.sqrt(x * x - 1.0):
        return Region.LargeX
    return Region.Recurrence


def conicp_scaled(x: float, m: int, tau: float,
                  config: NumericConfig = DEFAULT_CONFIG):
    """(F(m), F(m+1), exp2, est, region) with values F * 2^exp2."""
    if x < 1.0:
        return _series_pair(x, m, tau, config)
    if x < config.x_largex_min:
        if tau * math.sqrt((x - 1.0) / 2.0) <= config.series_tau_cut:
            return _series_pair(x, m, tau, config)
        return _march_pair(x, m, tau, config)
    return _phase_pair(x, m, tau, config)


def conicp(x: float, m: int, tau: float,
           config: NumericConfig = DEFAULT_CONFIG):
    """P and dP/dx at (x, m, tau) as a pair of results."""
    status = validate(EvalPoint(x, m, tau), "P")
    if status is not EvalStatus.Ok:
        bad = EvalResult(math.nan, math.inf, status, Region.SeriesNear1)
        return bad, EvalResult(math.nan, math.inf, status, Region.SeriesNear1)
    if x == 1.0:
        return _exact_edge(m, tau)
    try:
        fm, fm1, exp2, est, region = conicp_scaled(x, m, tau, config)
    except ArithmeticError:
        bad = EvalResult(math.nan, math.inf, EvalStatus.OverUnderflow,
                         Region.Recurrence)
        return bad, bad
    return result_pair(x, m, fm, fm1, exp2, est, region, ferrers=x < 1.0)


def conicpr(x: float, m: int, tau: float,
            config: NumericConfig = DEFAULT_CONFIG):
    """(P, dP/dx, R, dR/dx) results; R entries are out-of-range for x < 1."""
    pv, pd = conicp(x, m, tau, config)
    rv, rd = conicr(x, m, tau, config)
    return pv, pd, rv, rd
