"""Conway codes, pretzel tuples, the four base tangles and their closures."""
from __future__ import annotations

import enum
import json
import re
from typing import Iterable, Mapping

from .ring import R, LaurentPoly, trivial_component, a


class _Infinity:
    """The ∞ entry of a Conway code; negation fixes it (1/0 has no sign)."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __neg__(self):
        return self

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __sub__(self, other):
        return self

    def __repr__(self):
        return "inf"

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()


class CodeError(ValueError):
    pass


def is_int(x) -> bool:
    return x is not INF


class BaseTangle(enum.Enum):
    Tminus1 = -1
    T0 = 0
    T1 = 1
    Tinf = "inf"

    @property
    def label(self):
        return {"Tminus1": "[-1]", "T0": "[0]", "T1": "[1]", "Tinf": "[inf]"}[self.name]

    def mirror(self) -> "BaseTangle":
        return {BaseTangle.T1: BaseTangle.Tminus1,
                BaseTangle.Tminus1: BaseTangle.T1}.get(self, self)


BASE_ORDER = (BaseTangle.T1, BaseTangle.T0, BaseTangle.Tminus1, BaseTangle.Tinf)


def base_of(entry) -> BaseTangle:
    if entry is INF:
        return BaseTangle.Tinf
    return BaseTangle(entry)


class Closure(enum.Enum):
    Numerator = "num"
    Denominator = "den"


def closure_from_text(text: str | None) -> Closure | None:
    if text in (None, "auto"):
        return None
    try:
        return {"num": Closure.Numerator, "n": Closure.Numerator, "numerator": Closure.Numerator,
                "den": Closure.Denominator, "d": Closure.Denominator,
                "denominator": Closure.Denominator}[text.lower()]
    except KeyError:
        raise CodeError("unknown closure %r (use num, den or auto)" % text) from None


class ConwayCode(tuple):
    """A rational tangle code. Entries are ints or INF.

    Construction via `ConwayCode.standard` checks the standard form; the
    plain constructor accepts the extended codes produced inside the
    reduction algorithm.
    """

    def __new__(cls, entries: Iterable):
        entries = tuple(INF if (e == "inf" or e is INF) else int(e) for e in entries)
        if not entries:
            raise CodeError("empty Conway code")
        return super().__new__(cls, entries)

    @classmethod
    def standard(cls, entries: Iterable) -> "ConwayCode":
        code = cls(entries)
        for i, e in enumerate(code[1:], start=2):
            if e is INF or e == 0:
                raise CodeError("entry %d must be a nonzero integer, got %r" % (i, e))
        return code

    def is_standard(self) -> bool:
        return all(e is not INF and e != 0 for e in self[1:])

    def __str__(self):
        return "[" + ",".join(str(e) for e in self) + "]"

    def __repr__(self):
        return "ConwayCode(%s)" % self

    def to_json(self):
        return {"conway": ["inf" if e is INF else e for e in self]}


_ENTRY = re.compile(r"\s*([+-]?\d+|inf|∞)\s*")


def parse_conway(text: str) -> ConwayCode:
    """Parse '[3,2,-1,4]' (or '[inf]') into a standard-form code."""
    s = text.strip()
    if not s.startswith("["):
        raise CodeError("syntax error at position 0: expected '['")
    if not s.endswith("]"):
        raise CodeError("syntax error at position %d: expected ']'" % len(s))
    body = s[1:-1]
    entries = []
    pos = 1
    for chunk in body.split(","):
        m = _ENTRY.fullmatch(chunk)
        if not m:
            raise CodeError("syntax error at position %d: bad entry %r" % (pos, chunk.strip()))
        tok = m.group(1)
        entries.append(INF if tok in ("inf", "∞") else int(tok))
        pos += len(chunk) + 1
    for i, e in enumerate(entries[1:], start=2):
        if e is INF:
            raise CodeError("infinite entry at index %d (only the first entry may be inf)" % i)
        if e == 0:
            raise CodeError("zero entry at index %d" % i)
    return ConwayCode(entries)


def format_conway(code: Iterable) -> str:
    return str(ConwayCode(code))


def code_from_json(obj) -> ConwayCode:
    if isinstance(obj, str):
        obj = json.loads(obj)
    return ConwayCode.standard(obj["conway"])


def closure_kind(code: ConwayCode) -> Closure:
    """The closure giving the rational link of the code.

    Odd length closes with the numerator, even length with the
    denominator; the other closure only adds kinks to a shorter code.
    """
    return Closure.Numerator if len(code) % 2 else Closure.Denominator


def close_base(b: BaseTangle, c: Closure) -> LaurentPoly:
    t = trivial_component()
    if c is Closure.Numerator:
        table = {BaseTangle.Tminus1: a ** -1 * t, BaseTangle.T0: t * t,
                 BaseTangle.T1: a * t, BaseTangle.Tinf: t}
    else:
        table = {BaseTangle.Tminus1: a * t, BaseTangle.T0: t,
                 BaseTangle.T1: a ** -1 * t, BaseTangle.Tinf: t * t}
    return table[b]


def _require_integers(code, what):
    if any(e is INF for e in code):
        raise CodeError("%s is unsupported for codes with an inf entry" % what)


def reverse_code(code: ConwayCode) -> tuple[ConwayCode, int]:
    """Code of an isotopic link: reversed (odd length) or reversed and negated (even)."""
    _require_integers(code, "reverse_code")
    if len(code) % 2:
        return ConwayCode(reversed(code)), 1
    return ConwayCode(-e for e in reversed(code)), 1


def negate_code(code) -> ConwayCode:
    """Entrywise negation: the code of the mirror image."""
    if not code:
        raise CodeError("empty Conway code")
    _require_integers(code, "negate_code")
    return ConwayCode(-e for e in code)


# -- pretzel tuples -----------------------------------------------------------

class PretzelCode(tuple):
    def __new__(cls, columns: Iterable):
        cols = tuple(INF if (c == "inf" or c is INF) else int(c) for c in columns)
        if not cols:
            raise CodeError("empty pretzel tuple")
        return super().__new__(cls, cols)

    def __str__(self):
        return "P(" + ",".join(str(c) for c in self) + ")"

    def to_json(self):
        return {"pretzel": ["inf" if c is INF else c for c in self]}


_PRETZEL = re.compile(r"\s*P\s*\((.*)\)\s*$")


def parse_pretzel(text: str) -> PretzelCode:
    m = _PRETZEL.match(text)
    if not m:
        raise CodeError("syntax error: expected P(n1,...,nr)")
    try:
        cols = [int(x) for x in m.group(1).split(",")]
    except ValueError:
        raise CodeError("pretzel columns must be integers: %r" % m.group(1)) from None
    return PretzelCode(cols)


# -- linear combinations of base tangles --------------------------------------

class TangleCombo:
    """Finite map BaseTangle -> LaurentPoly; zero coefficients are dropped."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[BaseTangle, LaurentPoly] | None = None):
        self.coeffs = {b: c for b, c in (coeffs or {}).items() if not c.is_zero()}

    @classmethod
    def single(cls, b: BaseTangle, coeff: LaurentPoly | None = None):
        return cls({b: R.one() if coeff is None else coeff})

    def __getitem__(self, b):
        return self.coeffs.get(b, R.zero())

    def __add__(self, other: "TangleCombo"):
        out = dict(self.coeffs)
        for b, c in other.coeffs.items():
            out[b] = out.get(b, R.zero()) + c
        return TangleCombo(out)

    def scale(self, c: LaurentPoly):
        return TangleCombo({b: v * c for b, v in self.coeffs.items()})

    def map_coeffs(self, fn):
        return TangleCombo({b: fn(v) for b, v in self.coeffs.items()})

    def mirror(self, phi):
        """Mirror image: phi on coefficients, [1] and [-1] swapped."""
        return TangleCombo({b.mirror(): phi(v) for b, v in self.coeffs.items()})

    def close(self, c: Closure) -> LaurentPoly:
        total = R.zero()
        for b, v in self.coeffs.items():
            total = total + v * close_base(b, c)
        return total

    def __eq__(self, other):
        return isinstance(other, TangleCombo) and self.coeffs == other.coeffs

    def items(self):
        return [(b, self.coeffs[b]) for b in BASE_ORDER if b in self.coeffs]

    def to_json(self):
        return {b.label: str(v) for b, v in self.items()}

    def __repr__(self):
        return "TangleCombo(%s)" % ", ".join("%s: %s" % (b.label, v) for b, v in self.items())
