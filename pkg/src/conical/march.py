"""Taylor-series marching for the radial conical equation in t = arccosh x.

The gap between the near-1 series window and the large-x window (roughly
x in (1.02, 1.2) at moderate tau) supports neither expansion at full
accuracy.  There the order-0 and order-1 functions are carried from a
series anchor by direct Taylor stepping of the differential equation

    sinh(t)^2 w'' + sinh(t) cosh(t) w' + ((tau^2 + 1/4) sinh(t)^2 - m^2) w = 0,

whose coefficient series around any t0 > 0 come from shifted sinh/cosh
expansions.  Solutions in this regime are bounded and oscillatory with
local frequency about sqrt(tau^2 + 1/4), so binary64 coefficients lose
nothing; each step's truncation tail is estimated from the last computed
coefficients and the step is shrunk until the tail is below tolerance.

Steps are limited by both the oscillation scale and the distance to the
t = 0 singular point, which bounds the convergence radius of w itself.
"""

from __future__ import annotations

import math

TAYLOR_ORDER = 26          # series terms per step
STEP_TOL = 1e-17           # per-step truncation target, envelope-relative
RADIUS_FRACTION = 0.28     # step cap as a fraction of the distance to t = 0
FREQ_STEP_FACTOR = 1.45    # step cap in units of 1/frequency
STEP_SHRINK = 0.65         # retry factor when the tail estimate is too large
MAX_STEPS = 4000


def _coefficient_series(t0: float, m: int, tau: float, order: int):
    """Taylor arrays for sinh^2, sinh*cosh, and the potential term at t0."""
    ch2 = math.cosh(2.0 * t0)
    sh2 = math.sinh(2.0 * t0)
    c2 = [0.0] * (order + 1)
    c1 = [0.0] * (order + 1)
    c0 = [0.0] * (order + 1)
    freq2 = tau * tau + 0.25
    fac = 1.0                      # 2^n / n!
    for n in range(order + 1):
        even = (n % 2 == 0)
        c2[n] = 0.5 * fac * (ch2 if even else sh2)
        c1[n] = 0.5 * fac * (sh2 if even else ch2)
        fac *= 2.0 / (n + 1)
    c2[0] -= 0.5                   # sinh^2 = (cosh(2t) - 1)/2
    for n in range(order + 1):
        c0[n] = freq2 * c2[n]
    c0[0] -= float(m * m)
    return c2, c1, c0


def _taylor_coeffs(t0: float, w: float, wd: float, m: int, tau: float, order: int):
    """Solution coefficients a_n around t0 from the value/derivative pair."""
    c2, c1, c0 = _coefficient_series(t0, m, tau, order)
    inv_c20 = 1.0 / c2[0]
    a = [0.0] * (order + 1)
    a[0] = w
    a[1] = wd
    for n in range(order - 1):
        acc = c1[0] * (n + 1) * a[n + 1] + c0[0] * a[n]
        for j in range(1, n + 2):
            acc += c2[j] * (n + 2 - j) * (n + 1 - j) * a[n + 2 - j]
            acc += c1[j] * (n + 1 - j) * a[n + 1 - j]
            if j <= n:
                acc += c0[j] * a[n - j]
        a[n + 2] = -acc * inv_c20 / ((n + 2) * (n + 1))
    return a


def _evaluate(a, h: float):
    """Horner value and derivative of the Taylor polynomial at offset h."""
    w = 0.0
    wd = 0.0
    for coeff in reversed(a):
        wd = wd * h + w
        w = w * h + coeff
    return w, wd


def _tail_estimate(a, h: float, order: int) -> float:
    """Geometric-continuation bound on the dropped tail at offset h."""
    last = abs(a[order]) * abs(h) ** order
    prev = abs(a[order - 1]) * abs(h) ** (order - 1)
    ratio = last / prev if prev > 0.0 else 1.0
    if ratio >= 0.9:
        return math.inf
    return max(last, prev) / (1.0 - ratio)


def march_radial(m: int, tau: float, t_from: float, w: float, wd: float,
                 t_to: float, order: int = TAYLOR_ORDER, tol: float = STEP_TOL):
    """Carry (w, dw/dt) from t_from to t_to; either direction, both > 0."""
    if t_from <= 0.0 or t_to <= 0.0:
        raise ValueError("march domain is t > 0")
    t = t_from
    direction = 1.0 if t_to >= t_from else -1.0
    freq = math.sqrt(tau * tau + 0.25)
    envelope = math.hypot(w, wd / freq)
    for _ in range(MAX_STEPS):
        remaining = t_to - t
        if remaining == 0.0:
            break
        limit = min(RADIUS_FRACTION * t, FREQ_STEP_FACTOR * order / (math.e * freq))
        h = direction * min(abs(remaining), limit)
        a = _taylor_coeffs(t, w, wd, m, tau, order)
        while _tail_estimate(a, h, order) > tol * max(envelope, 1e-290):
            h *= STEP_SHRINK
            if abs(h) < 1e-14 * max(t, 1.0):
                raise ArithmeticError("march step underflow; no convergent step")
        w, wd = _evaluate(a, h)
        t += h
        if direction * (t_to - t) <= 0.0 and t != t_to:
            # final Horner landed past the target only by rounding of t
            break
        envelope = max(envelope, math.hypot(w, wd / freq))
    else:
        raise ArithmeticError("march failed to reach the target in MAX_STEPS")
    if t != t_to:
        # close the last sliver exactly
        a = _taylor_coeffs(t, w, wd, m, tau, order)
        w, wd = _evaluate(a, t_to - t)
    return w, wd


def march_x(m: int, tau: float, x_from: float, w: float, wdx: float, x_to: float):
    """March in x: takes and returns d/dx derivatives, converting internally."""
    t_from = math.acosh(x_from)
    t_to = math.acosh(x_to)
    s_from = math.sqrt(x_from * x_from - 1.0)
    s_to = math.sqrt(x_to * x_to - 1.0)
    w, wdt = march_radial(m, tau, t_from, w, wdx * s_from, t_to)
    return w, wdt / s_to
