"""Derive the Bessel-phase correction polynomials and freeze them as a module.

The large-tau branch near x = 1 evaluates a confluent hypergeometric
solution through a Bessel-function rewrite: order-mu Hankel-type phase
functions Phi_n carry the oscillation, and polynomial corrections
f_k(z, 1/alpha) multiply them.  The f_k are fixed by formal matching of
two expansions of the same solution in powers of 1/omega (omega is the
large parameter): the direct Kummer series on one side, the phase-times-
correction form on the other.  Matching is exact in QQ[z, A] with
A = 1/alpha, so the resulting coefficient tables are exact rationals.

f_0 = 1 always.  f_1 and f_2 have independently known closed forms, which
this script checks against the matched result for every order before
writing anything; a mismatch aborts the run.

Output: src/conical/kummer_fk.py with tables for mu = 0..8, k = 0..7.
Run from anywhere; paths resolve relative to this file.  Needs sympy.
"""

from __future__ import annotations

import os

import sympy as sp

ORDER_MAX = 8        # orders mu = 0..ORDER_MAX inclusive
K_TERMS = 8          # corrections f_0..f_{K_TERMS-1}

t, z, A = sp.symbols("t z A")
HALF = sp.Rational(1, 2)


def truncate(expr, var, top):
    """Drop powers of var above top from a polynomial expression."""
    poly = sp.Poly(sp.expand(expr), var)
    out = sp.Integer(0)
    for (n,), c in poly.terms():
        if n <= top:
            out += c * var ** n
    return out


def pochhammer(a, n):
    r = sp.Integer(1)
    for i in range(n):
        r *= a + i
    return r


def log_gamma_tail(n, c):
    """Coefficient of omega^-n in the asymptotic tail of log Gamma(omega + c)."""
    return (-1) ** (n + 1) * sp.bernoulli(n + 1, c) / (n * (n + 1))


def derive_corrections(mu):
    """Return [f_0 .. f_{K_TERMS-1}] for integer order mu by formal matching."""
    mu = sp.Integer(mu)
    top = K_TERMS

    # Gamma-ratio prefactor of the Kummer series, expanded in t = 1/omega.
    log_g = sum(
        (log_gamma_tail(n, HALF + mu) - log_gamma_tail(n, sp.Integer(1))) * t ** n
        for n in range(1, top + 1)
    )
    g = truncate(sp.series(sp.exp(log_g), t, 0, top + 1).removeO(), t, top)

    # Kummer series with its own 1/omega dependence folded in.
    series = sp.Integer(0)
    inv = sp.Integer(1)
    for k in range(0, top + 1):
        if k > 0:
            inv = truncate(inv * sp.series(1 / (1 + k * t), t, 0, top + 1).removeO(), t, top)
        series += (
            pochhammer(HALF + mu, k) * pochhammer(HALF - mu, k) / sp.factorial(k)
            * (-z) ** k * t ** k * inv
        )
    rhs = truncate(g * truncate(series, t, top), t, top)

    # Phase-side building block: the 1/omega expansion attached to f_k.
    def phase_block(k):
        s = sp.Integer(0)
        for j in range(0, top - k + 1):
            s += (
                pochhammer(HALF + mu, j) * pochhammer(HALF - mu + k, j)
                / sp.factorial(j) * (-1) ** j * A ** j * t ** j
            )
        return s

    corrections = [sp.Integer(1)]
    lhs = truncate(phase_block(0), t, top)
    for n in range(1, K_TERMS):
        gap = sp.expand(lhs - rhs)
        coeff = sp.Poly(gap, t).coeff_monomial(t ** n)
        lead = pochhammer(HALF - mu, n)
        f_n = sp.expand(-coeff / lead)
        corrections.append(f_n)
        lhs = truncate(lhs + f_n * lead * t ** n * phase_block(n), t, top)

    residual = sp.expand(lhs - rhs)
    for n in range(0, K_TERMS):
        c = sp.Poly(residual, t).coeff_monomial(t ** n)
        if sp.expand(c) != 0:
            raise ArithmeticError(f"matching residual nonzero at order {n}, mu={mu}")
    return corrections


def known_f1(mu):
    b = -sp.Integer(mu) - HALF
    d = z / A
    return sp.expand(b / (2 * d) * (2 * d * z + d - 2 * z))


def known_f2(mu):
    b = -sp.Integer(mu) - HALF
    d = z / A
    return sp.expand(
        b / (24 * d ** 2) * (
            12 * z ** 2 + 12 * b * z ** 2 + d ** 2 - 12 * d ** 2 * z
            - 12 * d ** 2 * z ** 2 - 24 * b * d * z ** 2 + 12 * b * d ** 2 * z
            + 12 * b * d ** 2 * z ** 2 + 3 * b * d ** 2 - 12 * b * d * z
        )
    )


def as_table(corrections):
    """[{(pow_z, pow_A): (num, den)}] per k, exact integers."""
    table = []
    for f_k in corrections:
        poly = sp.Poly(f_k, z, A, domain="QQ")
        entry = {}
        for (pz, pa), c in poly.terms():
            c = sp.Rational(c)
            entry[(int(pz), int(pa))] = (int(c.p), int(c.q))
        table.append(entry)
    return table


MODULE_HEADER = '''"""Correction polynomial tables for the large-tau Bessel-phase branch.

Generated by scripts/derive_kummer_coeffs.py; do not edit by hand.
Each table entry maps (power of z, power of A) to an exact rational
coefficient (numerator, denominator), where z is the branch variable
1 / (2 s (x + s)) and A = 1/alpha with alpha = 2 arccosh(x).  f_0 = 1.
The generator verifies f_1 and f_2 against independently known closed
forms for every order before writing this file.
"""

from __future__ import annotations

import math

FK_ORDER_MAX = {order_max}
FK_COUNT = {k_terms}

'''

MODULE_FOOTER = '''

def fk_values(mu, z, inv_alpha, count=FK_COUNT):
    """Evaluate [f_0 .. f_{count-1}] for integer order mu at (z, A)."""
    if not 0 <= mu <= FK_ORDER_MAX:
        raise ValueError(f"no correction table for order {mu}")
    if not 1 <= count <= FK_COUNT:
        raise ValueError(f"correction count {count} outside 1..{FK_COUNT}")
    out = []
    for entry in FK_TABLES[mu][:count]:
        out.append(math.fsum(
            num / den * z ** pz * inv_alpha ** pa
            for (pz, pa), (num, den) in entry.items()
        ))
    return out
'''


def write_module(path, tables):
    chunks = [MODULE_HEADER.format(order_max=ORDER_MAX, k_terms=K_TERMS)]
    chunks.append("FK_TABLES = {\n")
    for mu in sorted(tables):
        chunks.append(f"    {mu}: (\n")
        for entry in tables[mu]:
            items = ", ".join(
                f"({pz}, {pa}): ({num}, {den})"
                for (pz, pa), (num, den) in sorted(entry.items())
            )
            chunks.append("        {" + items + "},\n")
        chunks.append("    ),\n")
    chunks.append("}\n")
    chunks.append(MODULE_FOOTER)
    with open(path, "w", newline="\n") as fh:
        fh.write("".join(chunks))


def main():
    tables = {}
    for mu in range(0, ORDER_MAX + 1):
        corrections = derive_corrections(mu)
        if sp.expand(corrections[1] - known_f1(mu)) != 0:
            raise ArithmeticError(f"f_1 mismatch against closed form at mu={mu}")
        if sp.expand(corrections[2] - known_f2(mu)) != 0:
            raise ArithmeticError(f"f_2 mismatch against closed form at mu={mu}")
        print(f"mu={mu}: matched, f_1 and f_2 agree with closed forms")
        tables[mu] = as_table(corrections)
    out = os.path.join(os.path.dirname(__file__), "..", "src", "conical", "kummer_fk.py")
    write_module(os.path.abspath(out), tables)
    print(f"wrote {os.path.abspath(out)}")


if __name__ == "__main__":
    main()
