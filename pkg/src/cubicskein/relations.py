"""Named relations in the cubic skein module and the quadratic/cubic bridge."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from .ring import (R, LaurentPoly, PolyRing, RingFraction, a, b0, b1, b2, b3, binf,
                   exact_divide, phi_mirror, trivial_component)
from .rta import eval_code, p_h
from .tangle_model import Closure, ConwayCode, closure_kind

# Kauffman / Dubrovnik specializations live over Z[a^+-1, x]
KD = PolyRing(("a", "x"), (True, False))


@dataclass(frozen=True)
class SkeinCoeffs:
    """Coefficients of D3, D2, D1, D0, Dinf in a skein relation."""

    c3: LaurentPoly
    c2: LaurentPoly
    c1: LaurentPoly
    c0: LaurentPoly
    cinf: LaurentPoly

    def as_tuple(self):
        return (self.c3, self.c2, self.c1, self.c0, self.cinf)

    def map(self, fn) -> "SkeinCoeffs":
        return SkeinCoeffs(*(fn(c) for c in self.as_tuple()))

    def scale(self, u: LaurentPoly) -> "SkeinCoeffs":
        return self.map(lambda c: c * u)

    def is_zero(self):
        return all(c.is_zero() for c in self.as_tuple())

    def to_json(self):
        names = ("D3", "D2", "D1", "D0", "Dinf")
        return {n: str(c) for n, c in zip(names, self.as_tuple())}


def cubic_coeffs() -> SkeinCoeffs:
    """The defining relation b3 D3 + b2 D2 + b1 D1 + b0 D0 + binf Dinf = 0."""
    return SkeinCoeffs(b3, b2, b1, b0, binf)


def proportional(x: SkeinCoeffs, y: SkeinCoeffs) -> bool:
    xs, ys = x.as_tuple(), y.as_tuple()
    return all(xs[i] * ys[j] == xs[j] * ys[i] for i in range(5) for j in range(i + 1, 5))


# -- Hopf link and its relatives ---------------------------------------------

def hopf_pair() -> tuple[LaurentPoly, LaurentPoly]:
    """(H+, H-) from the skein relation with the clasp in the D3 and D0 slots."""
    t = trivial_component()
    h_plus = -(b3 ** -1) * t * (b2 * a + b0 * a ** -1 + binf * a + b1 * t)
    h_minus = -(b0 ** -1) * t * (b1 * a ** -1 + b2 * t + b3 * a + binf * a ** 2)
    return h_plus, h_minus


def hopf_relation() -> LaurentPoly:
    h_plus, h_minus = hopf_pair()
    return h_plus - h_minus


def relation_between(code_a, code_b, scale_a: LaurentPoly | None = None,
                     scale_b: LaurentPoly | None = None,
                     closure_a: Closure | None = None,
                     closure_b: Closure | None = None) -> LaurentPoly:
    """scale_a * eval(code_a) - scale_b * eval(code_b)."""
    va = eval_code(code_a, closure_a)
    vb = eval_code(code_b, closure_b)
    if scale_a is not None:
        va = va * scale_a
    if scale_b is not None:
        vb = vb * scale_b
    return va - vb


def left_trefoil() -> LaurentPoly:
    """Left trefoil from the skein relation with a crossing in the D0 slot."""
    t = trivial_component()
    _, h_minus = hopf_pair()
    return -(b0 ** -1) * (b1 * h_minus + b2 * a ** -1 * t + b3 * t * t + a ** 3 * binf * t)


def right_trefoil() -> LaurentPoly:
    t = trivial_component()
    h_plus, _ = hopf_pair()
    return -(b3 ** -1) * (b2 * h_plus + a * b1 * t + b0 * t * t + binf * t)


def figure_eight_pair() -> tuple[LaurentPoly, LaurentPoly]:
    """Figure-eight diagrams [2,2] and [-2,-2] by one skein step each.

    The second is the mirror of the first, so its b_inf term carries a^2.
    """
    t = trivial_component()
    h_plus, h_minus = hopf_pair()
    plus = -(b3 ** -1) * (b2 * left_trefoil() + b1 * a ** 2 * t + b0 * a ** -1 * t
                          + binf * a * h_minus)
    minus = -(b0 ** -1) * (b1 * right_trefoil() + b2 * a ** -2 * t + b3 * a * t
                           + binf * a ** 2 * h_plus)
    return plus, minus


def figure_eight_relation() -> LaurentPoly:
    plus, minus = figure_eight_pair()
    return plus - minus


# -- second formula for t ------------------------------------------------------

def _bracket() -> LaurentPoly:
    return b0 * b1 - b2 * b3


def trivial_knot_second() -> RingFraction:
    num = (-b0 ** 2 - a ** 2 * b0 * b2 + b1 * b3 + a ** 2 * b3 ** 2
           - a ** 2 * b0 * binf + a ** 3 * b3 * binf)
    return RingFraction(num, a * _bracket())


def trivial_knot_relation() -> RingFraction:
    """R_t = t2 - t."""
    return trivial_knot_second() - RingFraction(trivial_component())


def cubic2_coeffs() -> SkeinCoeffs:
    inv = b0 ** -2
    return SkeinCoeffs(
        b3,
        -b3 * (b1 * b3 - a ** 2 * b0 * binf) * a ** -1 * inv,
        -b3 * (a * b3 * binf - b0 * b2) * inv,
        -(b3 ** 3) * a ** -1 * inv,
        -b3 * (b2 * b3 - b0 * b1) * a ** -2 * inv,
    )


def trivial_from_relation(rel: SkeinCoeffs) -> RingFraction:
    """Solve a relation for t with every slot denominator-closed to a framed unknot."""
    num = rel.c3 * a ** -3 + rel.c2 * a ** -2 + rel.c1 * a ** -1 + rel.c0
    return RingFraction(-num, rel.cinf)


def quadratic_relation_coeffs() -> SkeinCoeffs:
    """Difference of the two cubic relations, with the unit -a^-2 b0^-2 dropped."""
    return SkeinCoeffs(
        R.zero(),
        a ** 2 * b0 ** 2 * b2 + a * b1 * b3 ** 2 - a ** 3 * b0 * b3 * binf,
        a ** 2 * b0 ** 2 * b1 - a ** 2 * b0 * b2 * b3 + a ** 3 * b3 ** 2 * binf,
        a ** 2 * b0 ** 3 + a * b3 ** 3,
        -b0 * b1 * b3 + b2 * b3 ** 2 + a ** 2 * b0 ** 2 * binf,
    )


QUADRATIC_UNIT = -(a ** -2) * b0 ** -2


def quadratic_to_cubic(c2, c1, c0, cinf, s) -> SkeinCoeffs:
    """s * (shifted quadratic) - (quadratic)."""
    a_ = _ring_a(c2, c1, c0, cinf, s)
    return SkeinCoeffs(s * c2, s * c1 - c2, s * c0 - c1, -c0, (a_ ** -1 * s - 1) * cinf)


def _ring_a(*polys):
    ring = next(p.ring for p in polys if isinstance(p, LaurentPoly))
    return ring.var("a")


def quadratic_hopf_relation(c2, c1, c0, cinf) -> LaurentPoly:
    """Hopf amphichirality for a quadratic relation, times -c_inf to clear t."""
    if cinf.is_zero():
        raise ZeroDivisionError("the D_inf coefficient must be nonzero")
    a_ = _ring_a(c2, c1, c0, cinf)
    t_num = a_ ** -2 * c2 + a_ ** -1 * c1 + c0           # t = t_num / (-cinf)
    return ((c0 * c0 - c2 * c2) * t_num
            - cinf * ((a_ * c0 - a_ ** -1 * c2) * c1 + (c0 - a_ ** 2 * c2) * cinf))


def kauffman_dubrovnik(eps: int) -> tuple[LaurentPoly, ...]:
    """(c2, c1, c0, cinf) of D2 - x D1 + eps D0 - a^-1 x eps Dinf = 0 over Z[a^+-1, x]."""
    if eps not in (1, -1):
        raise ValueError("eps must be 1 (Kauffman) or -1 (Dubrovnik)")
    av, x = KD.var("a"), KD.var("x")
    return KD.one(), -x, KD.const(eps), -eps * av ** -1 * x


def kd_binf(eps: int, corrected: bool = False) -> LaurentPoly:
    """binf for the Kauffman/Dubrovnik specialization.

    The printed choice is eps a^-1; matching the D_inf coefficient of the
    shifted relation needs -eps a^-1 x instead.
    """
    av, x = KD.var("a"), KD.var("x")
    return -eps * av ** -1 * x if corrected else eps * av ** -1


def kd_substitute(p: LaurentPoly, eps: int, binf_value: LaurentPoly | None = None) -> LaurentPoly:
    """b0 = eps, b1 = -x, b2 = 1, b3 = 0 and binf (printed value unless given)."""
    av, x = KD.var("a"), KD.var("x")
    if any(e[4] < 0 for e in p.terms):
        raise ValueError("b3 appears with a negative exponent; cannot set b3 = 0")
    if binf_value is None:
        binf_value = kd_binf(eps)
    return p.substitute([av, KD.const(eps), -x, KD.one(), KD.zero(), binf_value], KD)


# -- trefoil relations -----------------------------------------------------------

def right_trefoil_second() -> LaurentPoly:
    """Right trefoil with the second cubic relation."""
    t = trivial_component()
    h_plus, _ = hopf_pair()
    body = (_neg_bracket() * t + a ** 3 * (a * b3 * binf - b0 * b2) * t
            + a * (b1 * b3 - a ** 2 * b0 * binf) * h_plus + a * b3 ** 2 * t * t)
    return (a * b0) ** -2 * body


def _neg_bracket():
    return b2 * b3 - b0 * b1


def trefoil_relation() -> LaurentPoly:
    """R_tr+, signed as its expanded closed form (second formula minus first)."""
    return right_trefoil_second() - right_trefoil()


def left_trefoil_second() -> LaurentPoly:
    t = trivial_component()
    h_plus, _ = hopf_pair()
    return -a * b3 ** -1 * (b2 * a * t + b1 * a ** -2 * t + b0 * right_trefoil() + binf * h_plus)


def left_trefoil_relation() -> LaurentPoly:
    """R_tr- as its closed form: a b0 b3^-1 R_tr+."""
    return a * b0 * b3 ** -1 * trefoil_relation()


def left_trefoil_relation_derived() -> LaurentPoly:
    """Direct difference of the two left trefoil formulas.

    Does not agree with `left_trefoil_relation`; kept for comparison.
    """
    return left_trefoil() - left_trefoil_second()


# -- Whitehead, 6_3 and Conway relations -------------------------------------------

def twist_knot_52() -> LaurentPoly:
    t = trivial_component()
    _, h_minus = hopf_pair()
    _, fig8_minus = figure_eight_pair()
    return -(b3 ** -1) * (b2 * fig8_minus + b1 * left_trefoil() + b0 * a ** 2 * t + binf * h_minus)


def whitehead_pair(fig8: LaurentPoly | None = None) -> tuple[LaurentPoly, LaurentPoly]:
    """Two skein evaluations of the Whitehead link, the second after adding a kink.

    `fig8` is the figure-eight value used in both formulas (default: the
    [2,2] diagram), so that the difference is the printed combination.
    """
    t = trivial_component()
    _, h_minus = hopf_pair()
    trefoil = left_trefoil()
    if fig8 is None:
        fig8 = figure_eight_pair()[0]
    first = -(b0 ** -1) * (b1 * fig8 + b2 * a ** -1 * h_minus + b3 * a ** 2 * t
                           + binf * a ** 2 * trefoil)
    five_two = -(b3 ** -1) * (b2 * fig8 + b1 * trefoil + b0 * a ** 2 * t + binf * h_minus)
    second = -(b3 ** -1) * a * (b2 * trefoil + a ** -2 * b1 * h_minus + b0 * five_two
                                + a * binf * fig8)
    return first, second


def whitehead_relation(fig8: LaurentPoly | None = None) -> LaurentPoly:
    first, second = whitehead_pair(fig8)
    return first - second


def whitehead_relation_combination(fig8=None) -> LaurentPoly:
    """The closed combination of 4_1, 3_1, H- and t."""
    t = trivial_component()
    _, h_minus = hopf_pair()
    if fig8 is None:
        fig8 = figure_eight_pair()[0]
    den = b0 ** -1 * b3 ** -2
    return den * ((a ** 2 * b0 * b3 * binf - a * b0 ** 2 * b2 - b1 * b3 ** 2) * fig8
                  + (a * b0 * b2 * b3 - a * b0 ** 2 * b1 - a ** 2 * b3 ** 2 * binf) * left_trefoil()
                  + a ** -1 * (b0 * b1 * b3 - b2 * b3 ** 2 - a ** 2 * b0 ** 2 * binf) * h_minus
                  + (-a ** 3 * b0 ** 3 - a ** 2 * b3 ** 3) * t)


def six_three_relation() -> LaurentPoly:
    """(6_3)+ - (6_3)-: the two skein expansions differ only in their b2 diagrams,
    the two Whitehead-link evaluations."""
    first, second = whitehead_pair()
    return -(b3 ** -1) * b2 * (second - first)


def conway_relation() -> SkeinCoeffs:
    """C_{2,-2} - a^-1 C_{-2,-1} over D2, D1, D0, Dinf (D3 slot empty).

    C_{2,-2} comes from the clasp in the D3 slot followed by eliminating D3,
    C_{-2,-1} from the clasp in the D0 slot.
    """
    s = b3 ** -2
    c_first = SkeinCoeffs(R.zero(), s * (b0 * b2 - a * b3 * binf), s * _bracket(),
                          s * b0 ** 2, s * (b0 * binf - a ** -2 * b1 * b3))
    u = -(b0 ** -1)
    c_second = SkeinCoeffs(R.zero(), u * b1, u * binf * a ** 2, u * b3, u * b2 * a ** -1)
    return SkeinCoeffs(*(x - a ** -1 * y for x, y in zip(c_first.as_tuple(), c_second.as_tuple())))


# -- closed formulas and scans -------------------------------------------------------

def _p(n: int) -> LaurentPoly:
    return p_h(n) if n >= -1 else R.zero()


def closed_formula_printed(variant: int, m: int, n: int) -> LaurentPoly:
    """Right-hand sides exactly as printed for the four reverse-code families."""
    phi = phi_mirror
    P = _p
    if variant == 1:
        return P(m - 1) * phi(P(n - 1)) - P(m - 2) * phi(P(n - 2))
    if variant == 2:
        return P(m - 1) * P(n - 1) - P(m - 2) * P(n - 2)
    if variant == 3:
        return phi(P(m - 1)) * P(n - 1) - phi(P(m - 2)) * P(n - 2)
    if variant == 4:
        return phi(P(m - 1)) * phi(P(n - 1)) - phi(P(m - 2)) * phi(P(n - 2))
    raise ValueError("variant must be 1..4")


def closed_formula(variant: int, m: int, n: int) -> LaurentPoly:
    """Quotients by R_Hopf as the algorithm actually produces them."""
    phi = phi_mirror
    P = _p
    if variant == 1:
        return P(m - 2) * phi(P(n - 2)) - P(m - 1) * phi(P(n - 1))
    if variant == 2:
        return b0 * b3 ** -1 * (P(m - 1) * P(n - 2) - P(m - 2) * P(n - 1))
    if variant == 3:
        return -b3 * b0 ** -1 * (phi(P(m - 1)) * phi(P(n - 2)) - phi(P(m - 2)) * phi(P(n - 1)))
    if variant == 4:
        return phi(P(m - 1)) * P(n - 1) - phi(P(m - 2)) * P(n - 2)
    raise ValueError("variant must be 1..4")


def closed_formula_codes(variant: int, m: int, n: int):
    return {1: ((m, n), (-n, -m)), 2: ((m, -n), (n, -m)),
            3: ((-m, n), (-n, m)), 4: ((-m, -n), (n, m))}[variant]


def closed_formula_quotient(variant: int, m: int, n: int) -> LaurentPoly | None:
    left, right = closed_formula_codes(variant, m, n)
    return exact_divide(relation_between(left, right), hopf_relation())


def best_framing_shift(x: LaurentPoly, y: LaurentPoly, divisor: LaurentPoly,
                       span: int = 10):
    """Smallest |k| <= span with a^k x - y divisible by `divisor`; None if none."""
    for k in sorted(range(-span, span + 1), key=lambda k: (abs(k), k)):
        q = exact_divide(a ** k * x - y, divisor)
        if q is not None:
            return k, q
    return None


# -- the catalog ------------------------------------------------------------------

@dataclass
class NamedRelation:
    name: str
    value: RingFraction | None
    note: str
    coeffs: SkeinCoeffs | None = None
    checks: dict = field(default_factory=dict)

    def to_json(self):
        out = {"name": self.name, "note": self.note, "checks": self.checks}
        if self.value is not None:
            out["numerator"] = str(self.value.num)
            out["denominator"] = str(self.value.den)
        if self.coeffs is not None:
            out["coefficients"] = self.coeffs.to_json()
        return out


class CatalogMismatch(AssertionError):
    pass


def _require(ok: bool, what: str):
    if not ok:
        raise CatalogMismatch(what)


@lru_cache(maxsize=1)
def catalog() -> tuple[NamedRelation, ...]:
    from .golden import golden_value

    def frac(p):
        return RingFraction(p)

    hopf = hopf_relation()
    _require(hopf == golden_value("hopf_relation"), "R_Hopf vs printed form")
    _require(hopf == relation_between((-1, -1), (1, 1)), "R_Hopf vs [-1,-1]-[1,1]")

    r_t = trivial_knot_relation()
    _require(r_t == golden_value("trivial_knot_relation_unexpanded"), "R_t vs printed form")
    _require(r_t * binf == golden_value("trivial_knot_relation"), "binf R_t vs expanded form")

    tr_plus = trefoil_relation()
    _require(tr_plus == golden_value("trefoil_relation"), "R_tr+ vs printed form")
    _require(-tr_plus == golden_value("trefoil_relation_hopf_form"), "R_tr+ vs its H+ form")
    tr_minus = left_trefoil_relation()
    _require(tr_minus == golden_value("left_trefoil_relation"), "R_tr- vs printed form")

    fig8 = figure_eight_relation()
    _require(fig8 == golden_value("figure_eight_relation"), "R_4_1 vs printed form")
    _require(fig8 == relation_between((2, 2), (-2, -2)), "R_4_1 vs [2,2]-[-2,-2]")

    wh = whitehead_relation()
    _require(wh == whitehead_relation_combination(), "R_Wh vs its closed combination")

    six3 = six_three_relation()
    conway = conway_relation()
    return (
        NamedRelation("R_Hopf", frac(hopf), "H+ - H- = [-1,-1] - [1,1]",
                      checks={"rta": True, "golden": True}),
        NamedRelation("R_t", r_t, "second formula for t minus the first",
                      checks={"golden": True}),
        NamedRelation("R_tr+", frac(tr_plus), "right trefoil by the two cubic relations",
                      checks={"golden": True}),
        NamedRelation("R_tr-", frac(tr_minus), "left trefoil before and after a flype",
                      checks={"golden": True}),
        NamedRelation("R_4_1", frac(fig8), "[2,2] - [-2,-2]",
                      checks={"rta": True, "golden": True}),
        NamedRelation("R_Wh", frac(wh), "Whitehead link with and without an extra kink",
                      checks={"combination": True}),
        NamedRelation("R_C", None, "C_{2,-2} - a^-1 C_{-2,-1} over D2, D1, D0, Dinf",
                      coeffs=conway),
        NamedRelation("R_6_3", frac(six3), "(6_3)+ - (6_3)-"),
    )


def catalog_entry(name: str) -> NamedRelation:
    for rel in catalog():
        if rel.name == name:
            return rel
    raise KeyError(name)
