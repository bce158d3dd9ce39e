"""Bessel J and Y of integer order for positive real argument.

The public quad covers orders 0 and 1 on (0, 1e4] at a few 1e-15 of the
local envelope sqrt(2/(pi z)); away from the zero crossings of Y that is
the same thing as a few 1e-15 relative.  Below Z_SWITCH the ascending
series are summed in exact rational arithmetic (the alternating terms
cancel by many orders of magnitude, so binary64 summation would lose
digits); above it the Hankel-style modulus/phase asymptotics take over. The small integer-order ladder
exists for the verification harness, which evaluates the large-tau branch
at several adjacent orders independently.

The phase factors cos(z - c)/sin(z - c) are expanded through the angle
addition formulas so the libm argument reduction of cos(z)/sin(z) is the
only reduction involved; forming z - c first would lose absolute phase
accuracy at large z.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import NamedTuple

from conical.common import OutOfRangeError

Z_SWITCH = 17.0      # series/asymptotic seam; calibrated against the oracle grid
Z_MAX = 1.0e4
EULER_GAMMA = 0.5772156649015329
SQRT_HALF = 0.7071067811865476
SERIES_TAIL_CUT = 3e-20   # absolute term size at which the exact series stops
LADDER_MAX_ORDER = 8


class BesselQuad(NamedTuple):
    j0: float
    y0: float
    j1: float
    y1: float


def _series_quad(z: float) -> BesselQuad:
    """Ascending series for J0, Y0, J1, Y1 with exact rational accumulation."""
    q = Fraction(z) * Fraction(z) / 4
    qf = float(q)
    j0 = Fraction(1)
    s0 = Fraction(0)
    j1s = Fraction(1)          # sum for J1 before the (z/2) factor
    s1 = Fraction(1)           # k=0 term: H_0 + H_1 = 1
    t0 = Fraction(1)
    t1 = Fraction(1)
    harm = Fraction(0)
    k = 1
    while True:
        t0 = -t0 * q / (k * k)
        t1 = -t1 * q / (k * (k + 1))
        harm += Fraction(1, k)
        j0 += t0
        s0 += -t0 * harm                     # (-1)^(k+1) H_k q^k/(k!)^2
        j1s += t1
        s1 += t1 * (2 * harm + Fraction(1, k + 1))   # H_k + H_{k+1}
        if k * k > qf and abs(float(t0)) < SERIES_TAIL_CUT:
            break
        k += 1
    half_z = 0.5 * z
    log_term = math.log(half_z) + EULER_GAMMA
    j0f = float(j0)
    j1f = half_z * float(j1s)
    # Y0 and Y1 change sign, and near their roots the log piece and the sum
    # pieces cancel.  Combining in exact rationals around the one rounded
    # float (the log) keeps the absolute error at the last-rounding level
    # even inside the crossings.
    log_f = Fraction(log_term)
    hz_f = Fraction(z) / 2
    y0 = 2.0 * float(log_f * j0 + s0) / math.pi
    y1 = float(2 * log_f * hz_f * j1s - 1 / hz_f - hz_f * s1) / math.pi
    return BesselQuad(j0f, y0, j1f, y1)


def _modulus_phase(n: int, z: float):
    """P, Q of the large-argument expansion for order n, adaptively truncated."""
    mu = 4.0 * n * n
    p_terms = [1.0]
    q_terms = []
    a = 1.0
    prev = math.inf
    k = 1
    while k <= 60:
        a *= (mu - (2 * k - 1) ** 2) / (8.0 * k * z)
        term = abs(a)
        if term >= prev:
            break                 # asymptotic tail turned; stop at the minimum
        if k % 2 == 1:
            q_terms.append(a if k % 4 == 1 else -a)
        else:
            p_terms.append(a if k % 4 == 0 else -a)
        if term < 1e-17:
            break
        prev = term
        k += 1
    return math.fsum(p_terms), math.fsum(q_terms)


def _asymptotic_quad(z: float) -> BesselQuad:
    env = math.sqrt(2.0 / (math.pi * z))
    cz = math.cos(z)
    sz = math.sin(z)
    out = []
    for n, (cc, sc) in ((0, (SQRT_HALF, SQRT_HALF)), (1, (-SQRT_HALF, SQRT_HALF))):
        p, q = _modulus_phase(n, z)
        cos_chi = cz * cc + sz * sc
        sin_chi = sz * cc - cz * sc
        out.append(env * (p * cos_chi - q * sin_chi))
        out.append(env * (p * sin_chi + q * cos_chi))
    return BesselQuad(out[0], out[1], out[2], out[3])


def bessel_j0y0_j1y1(z: float) -> BesselQuad:
    """J0, Y0, J1, Y1 at z, for z in (0, Z_MAX]."""
    if not (0.0 < z <= Z_MAX) or math.isnan(z):
        raise OutOfRangeError(f"bessel argument out of range: {z}")
    if z <= Z_SWITCH:
        return _series_quad(z)
    return _asymptotic_quad(z)


def _series_jn(n: int, z: float) -> float:
    """Ascending series for J_n, exact accumulation; used when z is small."""
    q = Fraction(z) * Fraction(z) / 4
    t = Fraction(1)
    acc = Fraction(1)
    k = 1
    while True:
        t = -t * q / (k * (k + n))
        acc += t
        if k * k > float(q) and abs(float(t)) < SERIES_TAIL_CUT:
            break
        k += 1
    scale = (0.5 * z) ** n / math.factorial(n)
    return scale * float(acc)


def bessel_jn_yn(n: int, z: float):
    """(J_n, Y_n) for the harness ladder, 0 <= n <= LADDER_MAX_ORDER.

    Y climbs the three-term recurrence upward (stable: Y is dominant);
    J climbs upward only while the order stays below the argument, and
    otherwise comes from its ascending series.
    """
    if not 0 <= n <= LADDER_MAX_ORDER:
        raise OutOfRangeError(f"ladder order out of range: {n}")
    quad = bessel_j0y0_j1y1(z)
    if n == 0:
        return quad.j0, quad.y0
    if n == 1:
        return quad.j1, quad.y1
    ym1, yk = quad.y0, quad.y1
    for k in range(1, n):
        ym1, yk = yk, (2.0 * k / z) * yk - ym1
    if z >= n + 2.0:
        jm1, jk = quad.j0, quad.j1
        for k in range(1, n):
            jm1, jk = jk, (2.0 * k / z) * jk - jm1
    else:
        jk = _series_jn(n, z)
    return jk, yk
