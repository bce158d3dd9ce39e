"""Gamma-function kernels on the line Re = 1/2 and friends.

Provides the four building blocks the conical evaluators draw on:
digamma at 1/2 + i tau, the log-squared-modulus of Gamma along vertical
lines, the polar form of the ratio Gamma(1/2+mu+i tau)/Gamma(1+i tau),
and the inverse-Pochhammer triple sequence (u_k, v_k, w_k) with its
unwrapped phase.

The digamma and log-gamma kernels share one skeleton: shift the argument
upward until it is large enough, then apply the Bernoulli asymptotic
series. The Bernoulli coefficients are generated exactly at import time
rather than hand-typed.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple

SHIFT_RADIUS = 12.0      # |alpha| at which the asymptotic series takes over
DIGAMMA_TERMS = 8        # asymptotic terms for digamma
LOGGAMMA_TERMS = 10      # asymptotic terms for log-gamma
LN_PI = math.log(math.pi)
HALF_LN_2PI = 0.5 * math.log(2.0 * math.pi)
POCHHAMMER_RESCALE_LIMIT = 2.0 ** 500   # rescale w above this
LOG_RANGE_LIMIT = 709.0  # |ln| budget before exp would overflow binary64


def _bernoulli_numbers(count: int) -> list[Fraction]:
    """B_0 .. B_{count-1} by the defining recurrence, exact."""
    bs = [Fraction(1)]
    for m in range(1, count):
        acc = Fraction(0)
        binom = 1
        for k in range(m):
            acc += binom * bs[k]
            binom = binom * (m + 1 - k) // (k + 1)
        bs.append(-acc / (m + 1))
    return bs


_BERNOULLI = _bernoulli_numbers(2 * LOGGAMMA_TERMS + 2)

# psi(a) ~ ln a - 1/(2a) - sum_n DIGAMMA_COEFF[n] / a^(2n+2) ... laid out flat:
# coefficient of a^(-2n) is B_{2n}/(2n)
DIGAMMA_COEFF = [float(_BERNOULLI[2 * n] / (2 * n)) for n in range(1, DIGAMMA_TERMS + 1)]
# lnGamma(a) ~ (a-1/2) ln a - a + ln(2 pi)/2 + sum_n LOGGAMMA_COEFF[n] a^(1-2n)
LOGGAMMA_COEFF = [float(_BERNOULLI[2 * n] / ((2 * n) * (2 * n - 1)))
                  for n in range(1, LOGGAMMA_TERMS + 1)]


class DigammaValue(NamedTuple):
    re: float
    im: float


class GammaRatioPolar(NamedTuple):
    modulus: float
    phase: float


def digamma_half(tau: float) -> DigammaValue:
    """psi(1/2 + i tau) split into components.

    Shifts upward until |alpha| >= SHIFT_RADIUS, then applies the
    asymptotic series with DIGAMMA_TERMS terms.
    """
    alpha = complex(0.5, tau)
    shift = 0.0 + 0.0j
    while abs(alpha) < SHIFT_RADIUS:
        shift += 1.0 / alpha
        alpha += 1.0
    inv = 1.0 / alpha
    inv2 = inv * inv
    acc = cmath.log(alpha) - 0.5 * inv
    power = inv2
    for coeff in DIGAMMA_COEFF:
        acc -= coeff * power
        power *= inv2
    acc -= shift
    return DigammaValue(acc.real, acc.imag)


def _log_sin_pi(alpha: complex) -> complex:
    """ln sin(pi alpha), stable for any |Im alpha|.

    Factors out the growing exponential exp(-i pi alpha) so nothing
    overflows; the remaining log argument stays within [(1-|w|)/2, 1]
    in modulus for w = exp(2 pi i alpha). The branch is whatever the
    principal log of that factor gives, which is fine here because the
    only consumer reduces phases modulo 2 pi.
    """
    if alpha.imag < 0.0:
        return _log_sin_pi(alpha.conjugate()).conjugate()
    # exp(2 pi i alpha) has period 1 in the real direction; reducing the
    # real part first keeps the argument of exp small and accurate
    frac = math.remainder(alpha.real, 1.0)
    w = cmath.exp(complex(-2.0 * math.pi * alpha.imag, 2.0 * math.pi * frac))
    # sin(pi a) = exp(-i pi a) (w - 1) / (2 i)
    return complex(0.0, -math.pi) * alpha + cmath.log((w - 1.0) / 2.0j)


def _log_gamma_shifted(alpha: complex) -> complex:
    """ln Gamma(alpha) by upward shift plus Stirling series.

    Valid away from the poles; arguments here always have either a
    nonzero imaginary part or a non-integer real part. Left of the
    line Re = 1/2 the reflection formula hands the work to the right
    half-plane: the Stirling series applied directly near the negative
    real axis would miss a contribution of relative size
    exp(-2 pi |Im alpha|), which is far above target accuracy whenever
    the imaginary part is small.
    """
    if alpha.real < 0.5:
        return LN_PI - _log_sin_pi(alpha) - _log_gamma_shifted(1.0 - alpha)
    logshift = 0.0 + 0.0j
    while abs(alpha) < SHIFT_RADIUS:
        logshift += cmath.log(alpha)
        alpha += 1.0
    acc = (alpha - 0.5) * cmath.log(alpha) - alpha + HALF_LN_2PI
    inv = 1.0 / alpha
    inv2 = inv * inv
    power = inv
    for coeff in LOGGAMMA_COEFF:
        acc += coeff * power
        power *= inv2
    return acc - logshift


def log_abs_gamma_sq(m: int, tau: float) -> float:
    """ln |Gamma(m + 1/2 + i tau)|^2 for any integer m, overflow-free.

    Anchored at ln |Gamma(1/2+i tau)|^2 = ln pi - ln cosh(pi tau), written
    as ln pi - pi tau - ln((1+e^(-2 pi tau))/2) so large tau cannot
    overflow, then shifted by the product of squared moduli.
    """
    pt = math.pi * tau
    base = LN_PI - pt - math.log(0.5 * (1.0 + math.exp(-2.0 * pt)))
    t2 = tau * tau
    shift = 0.0
    for j in range(abs(m)):
        shift += math.log((j + 0.5) ** 2 + t2)
    return base + shift if m >= 0 else base - shift


def gamma_ratio_polar(mu: int, tau: float) -> GammaRatioPolar:
    """Modulus and phase of Gamma(1/2+mu+i tau) / Gamma(1+i tau).

    Phase is reduced into (-pi, pi].  A negative order reduces exactly
    to the positive one: at integer offsets from the half-integer line,
    sin(pi(1/2-mu+i tau)) collapses to (-1)^mu cosh(pi tau), so
    reflection shifts the phase by mu pi and replaces the modulus by
    tanh(pi tau)/tau (pi at tau = 0) over the positive-order modulus.
    Keeping the whole negative-order path in small-magnitude arithmetic
    matters: consumers multiply the phase error by the projection
    cancellation of their series, so a large intermediate here would
    poison them.
    """
    if mu < 0:
        base = gamma_ratio_polar(-mu, tau)
        amp = math.pi if tau == 0.0 else math.tanh(math.pi * tau) / tau
        modulus = amp / base.modulus
        if not math.isfinite(modulus) or modulus == 0.0:
            raise ArithmeticError(
                f"gamma ratio modulus out of range at mu={mu}, tau={tau}"
            )
        rho = base.phase - math.pi * (-mu % 2)
        if rho <= -math.pi:
            rho += 2.0 * math.pi
        return GammaRatioPolar(modulus, rho)
    if tau == 0.0:
        # real positive ratio; keep the phase exactly zero
        log_h = _log_gamma_shifted(complex(0.5 + mu, 0.0)).real
        return GammaRatioPolar(math.exp(log_h), 0.0)
    diff = _log_gamma_shifted(complex(0.5 + mu, tau)) \
        - _log_gamma_shifted(complex(1.0, tau))
    if abs(diff.real) > LOG_RANGE_LIMIT:
        raise ArithmeticError(f"gamma ratio modulus out of range at mu={mu}, tau={tau}")
    rho = math.remainder(diff.imag, 2.0 * math.pi)
    if rho <= -math.pi:
        rho += 2.0 * math.pi
    return GammaRatioPolar(math.exp(diff.real), rho)


@dataclass
class PochhammerPolarSeq:
    """Scaled carriers of conj((1+i tau)_k) and the derived polar data.

    True values: u_k + i v_k = conj((1+i tau)_k) * 2^(scale_exp2[k]),
    w_k = |(1+i tau)_k|^2 * 2^(2*scale_exp2[k]); r_k and sigma_k give the
    polar form, with sigma accumulated continuously (not wrapped).
    """

    tau: float
    u: list[float] = field(default_factory=list)
    v: list[float] = field(default_factory=list)
    w: list[float] = field(default_factory=list)
    r: list[float] = field(default_factory=list)
    sigma: list[float] = field(default_factory=list)
    scale_exp2: list[int] = field(default_factory=list)


def pochhammer_inverse_seq(tau: float, K: int) -> PochhammerPolarSeq:
    """First K+1 entries of the inverse-Pochhammer sequence at tau.

    Recurrences: u_{k+1} = (k+1) u_k + tau v_k, v_{k+1} = (k+1) v_k - tau u_k,
    w_{k+1} = ((k+1)^2 + tau^2) w_k. The common power-of-two exponent keeps
    the mantissas in range for any K; sigma advances by -atan2(tau, k+1)
    each step so downstream phases stay smooth in k.
    """
    seq = PochhammerPolarSeq(tau=tau)
    u, v, w = 1.0, 0.0, 1.0
    sigma = 0.0
    exp2 = 0
    for k in range(K + 1):
        seq.u.append(u)
        seq.v.append(v)
        seq.w.append(w)
        seq.r.append(math.hypot(u, v))
        seq.sigma.append(sigma)
        seq.scale_exp2.append(exp2)
        kk = float(k + 1)
        u, v = kk * u + tau * v, kk * v - tau * u
        w = (kk * kk + tau * tau) * w
        sigma -= math.atan2(tau, kk)
        if w > POCHHAMMER_RESCALE_LIMIT:
            u = math.ldexp(u, -250)
            v = math.ldexp(v, -250)
            w = math.ldexp(w, -500)
            exp2 -= 250
    return seq
