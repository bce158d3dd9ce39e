"""Order recurrences shared by the two conical function families.

All three-term order steps use the same coefficients: on x > 1

    F(m+1) = -(2 m x / s) F(m) - c_m F(m-1),        s = sqrt(x^2 - 1),

and on the Ferrers side |x| < 1 the middle sign flips through
s -> sqrt(1 - x^2) while the c_m term turns positive,

    F(m+1) = -(2 m x / sq) F(m) + c_m F(m-1),       c_m = (m - 1/2)^2 + tau^2.

Upward climbing is stable for the functions that grow with order (R on
x > 1, Ferrers P); the second kind, decaying against that growth on
x > 1, is recovered by downward recurrence with a contamination buffer.
Mantissas are carried with a shared power-of-two exponent so climbs to
order 100 at tau = 100 stay representable far beyond binary64 range.
"""

from __future__ import annotations

import math

RENORM_LIMIT = 2.0 ** 600     # mantissa magnitude that triggers recentering
MILLER_SAFETY = 6             # extra buffer orders past the contamination bound


def c_coeff(m: int, tau: float) -> float:
    return (m - 0.5) ** 2 + tau * tau


def _renorm(a: float, b: float, exp2: int):
    mag = max(abs(a), abs(b))
    if mag > RENORM_LIMIT or (mag != 0.0 and mag < 1.0 / RENORM_LIMIT):
        k = math.frexp(mag)[1]
        return math.ldexp(a, -k), math.ldexp(b, -k), exp2 + k
    return a, b, exp2


def climb(x: float, tau: float, f0: float, f1: float, m_top: int,
          ferrers: bool = False):
    """(F(m_top), F(m_top+1), exp2) from the order-0 and order-1 values."""
    if ferrers:
        s = math.sqrt(1.0 - x * x)
        low_sign = 1.0
    else:
        s = math.sqrt(x * x - 1.0)
        low_sign = -1.0
    ratio = 2.0 * x / s
    prev, cur = f0, f1          # F(j), F(j+1) with j starting at 0
    exp2 = 0
    for j in range(1, m_top + 1):
        prev, cur = cur, -(ratio * j) * cur + low_sign * c_coeff(j, tau) * prev
        prev, cur, exp2 = _renorm(prev, cur, exp2)
    return prev, cur, exp2


def _scaled_ratio(num_man: float, num_exp: int, den_man: float, den_exp: int):
    """(num_man 2^num_exp) / (den_man 2^den_exp) without mantissa overflow."""
    na, ea = math.frexp(num_man)
    nb, eb = math.frexp(den_man)
    return na / nb, num_exp + ea - den_exp - eb


def _miller_pass(x: float, tau: float, m: int, top: int):
    """One downward recurrence from seeds F(top+1)=0, F(top)=1."""
    s = math.sqrt(x * x - 1.0)
    ratio = 2.0 * x / s
    # F(j-1) = (-(2jx/s)F(j) - F(j+1))/c_j
    above, here = 0.0, 1.0
    exp2 = 0
    snap_m = snap_m1 = None
    for j in range(top, 0, -1):
        if j == m + 1:
            snap_m1 = (here, exp2)
        if j == m:
            snap_m = (here, exp2)
        above, here = here, (-(ratio * j) * here - above) / c_coeff(j, tau)
        above, here, exp2 = _renorm(above, here, exp2)
    if m == 0:
        snap_m = (here, exp2)
    over_f0 = tuple(
        _scaled_ratio(man, ex, here, exp2) for man, ex in (snap_m, snap_m1)
    )
    return over_f0[0], over_f0[1], above / here


def _starting_top(x: float, tau: float, m: int) -> int:
    """First guess for the Miller start, from the local root separation.

    The characteristic roots of F(j+1) = -(2jx/s)F(j) - c_j F(j-1) give
    no separation while complex (oscillatory in order, j < tau*s) and
    (b - sqrt(disc))/(b + sqrt(disc)) per order once real.  That product
    overstates the separation for large x, so it only seeds the adaptive
    loop; convergence is verified, never assumed.
    """
    ratio = 2.0 * x / math.sqrt(x * x - 1.0)
    log_contamination = 0.0
    top = m + 1
    while log_contamination > -39.0:
        top += 1
        b = ratio * top
        disc = b * b - 4.0 * c_coeff(top, tau)
        if disc > 0.0:
            # (b - root)/(b + root) as 4c/(b + root)^2 to dodge the
            # cancellation in b - root when c is comparatively small
            root = math.sqrt(disc)
            log_contamination += math.log(4.0 * c_coeff(top, tau)) \
                - 2.0 * math.log(b + root)
    return top + MILLER_SAFETY


def miller_ratios(x: float, tau: float, m: int):
    """Downward-recurrence ratios on x > 1 for the order-decaying family.

    Seeds an arbitrary tail high above m and recurs down, raising the
    start until two passes agree: the contamination shrinks with every
    extra start order, so the difference between passes bounds the error
    of the later one.  Agreement at machine level ends the loop at once.
    At slow per-order decay (large x) the agreement instead bottoms out
    on the rounding noise of the recursion itself, well above machine
    level; once deeper starts stop shrinking the difference, that floor
    is the achievable accuracy and the best pass is returned.  Returns
    F(m)/F(0) and F(m+1)/F(0) as (mantissa, exp2) pairs, the plain float
    F(1)/F(0) for renormalizing against the order-1 anchor when F(0) is
    weak, and the achieved agreement level as a relative error estimate.
    """
    top = _starting_top(x, tau, m)
    prev = _miller_pass(x, tau, m, top)
    best = None
    best_d = math.inf
    stalled = 0
    for _ in range(60):
        top += top // 2 + 16
        cur = _miller_pass(x, tau, m, top)
        (rm, em), (rm1, em1), f10 = cur
        (pm, pe), (pm1, pe1), p10 = prev
        scale = max(abs(rm), abs(math.ldexp(rm1, em1 - em)))
        d_m = abs(math.ldexp(pm, pe - em) - rm)
        d_m1 = abs(math.ldexp(pm1, pe1 - em) - math.ldexp(rm1, em1 - em))
        d_f10 = abs(p10 - f10)
        if scale > 0.0 and math.isfinite(scale) and math.isfinite(f10):
            d_rel = max(max(d_m, d_m1) / scale, d_f10 / max(1.0, abs(f10)))
        else:
            d_rel = math.inf
        if d_rel <= 2e-15:
            return cur[0], cur[1], cur[2], max(d_rel, 2e-16)
        if d_rel < 0.5 * best_d:
            best, best_d, stalled = cur, d_rel, 0
        else:
            stalled += 1
            if d_rel < best_d:
                best, best_d = cur, d_rel
        if stalled >= 2 and best_d <= 1e-11:
            return best[0], best[1], best[2], best_d
        prev = cur
    if best is not None and best_d <= 1e-9:
        return best[0], best[1], best[2], best_d
    raise ArithmeticError(
        f"downward order recurrence failed to converge at x={x}, tau={tau}, m={m}"
    )


def pi_product(m: int, tau: float):
    """Connection constant prod_{j<m} ((j+1/2)^2 + tau^2) as (mantissa, exp2)."""
    man = 1.0
    exp2 = 0
    for j in range(m):
        man *= (j + 0.5) ** 2 + tau * tau
        if man > RENORM_LIMIT:
            frac, k = math.frexp(man)
            man = frac
            exp2 += k
    return man, exp2


def deriv_mantissa(x: float, m: int, fm: float, fm1: float,
                   ferrers: bool = False) -> float:
    """Mantissa of dF(m)/dx from the (F(m), F(m+1)) pair at shared scale."""
    if ferrers:
        return -fm1 / math.sqrt(1.0 - x * x) + m * x / (x * x - 1.0) * fm
    return fm1 / math.sqrt(x * x - 1.0) + m * x / (x * x - 1.0) * fm
