"""Rational tangle evaluation.

A Conway code is reduced to a combination of the four base tangles by the
n-twist expansion, the mirror recursion and a handful of isotopies of the
first two subtangles. Closing the base tangles gives framed unknots, so
the value of the link is a Laurent polynomial once t is substituted.
"""
from __future__ import annotations

from functools import lru_cache

from .ring import (R, LaurentPoly, RingFraction, a, b0, b1, b2, b3, binf,
                   phi_mirror, trivial_component)
from .tangle_model import (INF, BaseTangle, Closure, ConwayCode, TangleCombo,
                           base_of, closure_kind)


class ReductionError(RuntimeError):
    """Raised when the case ladder meets a code it has no rule for."""


# -- twist polynomials -------------------------------------------------------

@lru_cache(maxsize=None)
def p_h(n: int) -> LaurentPoly:
    """P^h_n: P_{-1} = 0, P_0 = 1, P_n = -(b2 P_{n-1} + b1 P_{n-2} + b0 P_{n-3}) / b3."""
    if n < -1:
        if n == -2:
            # makes b0*P_{k-2} vanish at k = 0 in the closed formulas
            return R.zero()
        raise ValueError("P^h_n needs n >= -1")
    if n == -1:
        return R.zero()
    if n == 0:
        return R.one()
    inv = -(b3 ** -1)
    return inv * (b2 * p_h(n - 1) + b1 * p_h(n - 2) + b0 * p_h(n - 3)) if n >= 2 else inv * b2


def p_hom(n: int) -> LaurentPoly:
    """Homogeneous P'_n = (-b3)^n P^h_n."""
    return (-b3) ** n * p_h(n) if n >= 0 else R.zero()


def u_sum(n: int, k: int) -> LaurentPoly:
    """sum_{i<k} a^(3-n+i) P^h_i."""
    if k < 1:
        raise ValueError("k must be at least 1")
    total = R.zero()
    for i in range(k):
        total = total + a ** (3 - n + i) * p_h(i)
    return total


def u_closed(n: int, k: int) -> RingFraction:
    """Closed form of u_sum as a fraction (its denominator is -binf*t)."""
    if k < 1:
        raise ValueError("k must be at least 1")
    num = (b3 * a ** -n - b3 * a ** (k - n) * p_h(k)
           + a ** (k - n + 1) * (b1 * p_h(k - 1) + b0 * p_h(k - 2))
           + a ** (k - n + 2) * b0 * p_h(k - 1))
    den = b0 + b1 * a ** -1 + b2 * a ** -2 + b3 * a ** -3
    return RingFraction(num, den)


def twist_coefficients(n: int, k: int) -> dict:
    """k-step expansion of n half twists.

    Returns {m: coefficient} over twist counts m plus the key INF for the
    vertical tangle, so that [n] = sum coeff * [m].
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    s = -(b3 ** -1)                         # 1 / (-b3)
    out = {
        n - k: p_h(k),
        n - k - 1: s * (b1 * p_h(k - 1) + b0 * p_h(k - 2)),
        n - k - 2: s * b0 * p_h(k - 1),
        INF: s * binf * u_sum(n, k),
    }
    return {m: c for m, c in out.items() if not c.is_zero()}


def head_expansion(n: int) -> list:
    """[n, ...] for n >= 2 as (coefficient, new head) over heads 1, 0, -1, inf."""
    c = twist_coefficients(n, n - 1)
    return [(c[m], m) for m in (1, 0, -1, INF) if m in c]


# -- the rule ladder -----------------------------------------------------------

def _single(b, coeff=None):
    return TangleCombo.single(b, coeff)


def _mirror(combo: TangleCombo) -> TangleCombo:
    return combo.mirror(phi_mirror)


def _negate(code):
    return ConwayCode(-e for e in code)


@lru_cache(maxsize=200_000)
def _reduce(code: ConwayCode) -> TangleCombo:
    r = len(code)
    n1 = code[0]
    n2 = code[1] if r > 1 else None
    t = trivial_component()

    if r == 1 and (n1 is INF or -1 <= n1 <= 1):
        return _single(base_of(n1))
    if r == 2:
        if n1 is INF and n2 == 0:
            return _single(BaseTangle.Tinf)
        if n1 == 0 and n2 == 0:
            return _single(BaseTangle.T0)
        if n1 is INF and n2 in (1, -1):
            return _single(base_of(n2))
        if n1 == 0 and n2 is INF:
            return _single(BaseTangle.T0, t)
        if n1 == 0:
            return _single(BaseTangle.T0, a ** n2)
        if n1 is INF and n2 is INF:
            return _single(BaseTangle.T0)

    if n1 is not INF and n1 > 1:
        total = TangleCombo()
        for coeff, head in head_expansion(n1):
            total = total + _reduce(ConwayCode((head,) + code[1:])).scale(coeff)
        return total
    if n1 is not INF and n1 < -1:
        return _mirror(_reduce(_negate(code)))
    if n1 == 0 and r >= 3 and n2 is not INF:
        return _reduce(ConwayCode(code[2:])).scale(a ** n2)
    if n1 in (1, -1):
        return _reduce(ConwayCode((INF, n2 + n1) + code[2:]))
    if n1 is INF:
        if n2 is not INF and n2 < -1:
            total = TangleCombo()
            for coeff, head in head_expansion(-n2):
                # the rotated twist: heads 1 and -1 trade places
                second = INF if head is INF else -head
                total = total + _reduce(ConwayCode((INF, second) + code[2:])).scale(coeff)
            return total
        if n2 is not INF and n2 > 1:
            return _mirror(_reduce(_negate(code)))
        if n2 == 0 and r == 3:
            return _single(BaseTangle.Tinf, a ** -code[2])
        if n2 == 0 and r > 3:
            return _reduce(ConwayCode((INF,) + code[3:])).scale(a ** -code[2])
        if n2 in (1, -1) and r > 2:
            return _reduce(ConwayCode((INF, INF, code[2] + n2) + code[3:]))
        if n2 is INF and r > 2:
            return _reduce(ConwayCode(code[2:]))
    raise ReductionError("no rule applies to the extended code %s" % (code,))


def reduce_code(code) -> TangleCombo:
    """Express the tangle of a Conway code over the base tangles [1], [0], [-1], [inf]."""
    return _reduce(ConwayCode(code))


def eval_code(code, closure: Closure | None = None) -> LaurentPoly:
    """Value of the closed rational link, t substituted."""
    code = ConwayCode(code)
    return reduce_code(code).close(closure or closure_kind(code))


# -- products of base tangles --------------------------------------------------

def two_tangle_product(x: BaseTangle, y: BaseTangle) -> TangleCombo:
    """Horizontal sum of two base tangles, rewritten over the base tangles."""
    B = BaseTangle
    if x is B.T0:
        return _single(y)
    if y is B.T0:
        return _single(x)
    if B.Tinf in (x, y):
        other = y if x is B.Tinf else x
        scale = {B.T1: a ** -1, B.Tminus1: a, B.Tinf: trivial_component()}[other]
        return _single(B.Tinf, scale)
    if x is not y:
        return _single(B.T0)
    if x is B.T1:
        return reduce_code((2,))
    return reduce_code((-2,))


# -- torus links ---------------------------------------------------------------

def _renormalize(p: LaurentPoly) -> LaurentPoly:
    """Undo the b3 = -1 normalization: b_i -> b_i/(-b3) for b0, b1, b2, binf."""
    s = -(b3 ** -1)
    return p.substitute([a, b0 * s, b1 * s, b2 * s, R.one() * -1, binf * s], R)


def _p_normalized(n: int) -> LaurentPoly:
    """P_n with b3 = -1: P_n = b2 P_{n-1} + b1 P_{n-2} + b0 P_{n-3}."""
    seq = [R.zero(), R.one()]              # P_{-1}, P_0
    if n < 0:
        return R.zero()
    for _ in range(n):
        prev3 = seq[-3] if len(seq) >= 3 else R.zero()
        seq.append(b2 * seq[-1] + b1 * seq[-2] + b0 * prev3)
    return seq[n + 1]


def torus_link(n: int) -> LaurentPoly:
    """Numerator closure of n half twists, from the closed twist formula."""
    if n < 2:
        raise ValueError("torus_link needs n >= 2")
    tn = trivial_component().substitute([a, b0, b1, b2, -R.one(), binf], R)
    P = _p_normalized
    u = R.zero()
    for i in range(n - 1):
        u = u + a ** (3 - n + i) * P(i)
    value = tn * (a * P(n - 1) + (b1 * P(n - 2) + b0 * P(n - 3)) * tn
                  + a ** -1 * b0 * P(n - 2) + u * binf)
    return _renormalize(value)


class AnnulusCombo:
    """Combination of the annular closures of [1], [0], [-1] plus a scalar."""

    def __init__(self, d1, d0, dm1, scalar):
        self.coeffs = {"D1": d1, "D0": d0, "D-1": dm1}
        self.scalar = scalar

    def items(self):
        return [(k, v) for k, v in self.coeffs.items() if not v.is_zero()]

    def to_json(self):
        out = {k: str(v) for k, v in self.items()}
        out["scalar"] = str(self.scalar)
        return out

    def __repr__(self):
        return "AnnulusCombo(%s)" % self.to_json()


def torus_annulus(n: int) -> AnnulusCombo:
    """Closure of n half twists around the core of a solid torus."""
    if n < 2:
        raise ValueError("torus_annulus needs n >= 2")
    c = twist_coefficients(n, n - 1)
    zero = R.zero()
    t = trivial_component()
    return AnnulusCombo(c.get(1, zero), c.get(0, zero), c.get(-1, zero), c.get(INF, zero) * t)


def expand_and_close(n: int, k: int, closure: Closure = Closure.Numerator) -> LaurentPoly:
    """Expand [n] by k twist steps, then evaluate every resulting tangle."""
    total = R.zero()
    for m, coeff in twist_coefficients(n, k).items():
        if m is INF:
            total = total + coeff * eval_code((INF,), closure)
        else:
            total = total + coeff * eval_code((m,), closure)
    return total
