"""Cubic skein algebra of 3-algebraic tangles over the 40 basic 3-tangles.

Words are tuples of generator tokens S1, S1i, S2, S2i, U1, U2 read left to
right (horizontal concatenation). A word is rewritten to the basis by
length-reducing local rules; the rules are tried in a fixed priority order
and the leftmost match of the first class that matches is used.
"""
from __future__ import annotations

import enum
import random
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .ring import R, LaurentPoly, a, b0, b1, b2, b3, binf, trivial_component


class Gen(enum.Enum):
    S1 = "S1"
    S1i = "S1i"
    S2 = "S2"
    S2i = "S2i"
    U1 = "U1"
    U2 = "U2"


GENS = tuple(g.value for g in Gen)


def _sgn(tok):
    """(strand index, +1/-1) for a crossing token, None for a cap-cup."""
    if tok[0] != "S":
        return None
    return int(tok[1]), (-1 if tok.endswith("i") else 1)


def _s(i: int, e: int) -> str:
    return "S%d" % i if e > 0 else "S%di" % i


def _u(i: int) -> str:
    return "U%d" % i


def _other(i: int) -> int:
    return 3 - i


_INVERTIBLE = [
    "", "S1", "S1i", "S2", "S2i",
    "S1 S2", "S1 S2i", "S1i S2", "S1i S2i", "S2 S1", "S2 S1i", "S2i S1", "S2i S1i",
    "S1 S2 S1", "S1 S2 S1i", "S1 S2i S1", "S1 S2i S1i",
    "S1i S2 S1", "S1i S2 S1i", "S1i S2i S1", "S1i S2i S1i",
    "S2 S1i S2", "S2i S1 S2i", "S1 S2i S1 S2i",
]
_NON_INVERTIBLE = [
    "U1", "U2", "U1 U2", "U2 U1", "S1 U2", "S1i U2", "S2 U1", "S2i U1",
    "U2 S1", "U2 S1i", "U1 S2", "U1 S2i",
    "S1 U2 S1", "S1 U2 S1i", "S1i U2 S1", "S1i U2 S1i",
]
BASIS = tuple(tuple(w.split()) for w in _INVERTIBLE + _NON_INVERTIBLE)
BASIS_SET = frozenset(BASIS)
E = ()


def basis_name(word: Sequence[str]) -> str:
    return " ".join(word) if word else "e"


def parse_word(text: str) -> tuple:
    toks = text.replace(",", " ").split()
    if toks == ["e"]:
        return ()
    for tok in toks:
        if tok not in GENS:
            raise ValueError("unknown 3-tangle generator %r (use %s)" % (tok, ", ".join(GENS)))
    return tuple(toks)


# -- linear combinations -----------------------------------------------------------

class Combo3:
    """Finite map basis word -> LaurentPoly."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[tuple, LaurentPoly] | None = None):
        self.coeffs = {w: c for w, c in (coeffs or {}).items() if not c.is_zero()}

    @classmethod
    def single(cls, word, coeff: LaurentPoly | None = None):
        return cls({tuple(word): R.one() if coeff is None else coeff})

    def __getitem__(self, word):
        if isinstance(word, str):
            word = parse_word(word)
        return self.coeffs.get(tuple(word), R.zero())

    def __add__(self, other: "Combo3"):
        out = dict(self.coeffs)
        for w, c in other.coeffs.items():
            out[w] = out.get(w, R.zero()) + c
        return Combo3(out)

    def __sub__(self, other: "Combo3"):
        return self + other.scale(-R.one())

    def scale(self, c: LaurentPoly):
        return Combo3({w: v * c for w, v in self.coeffs.items()})

    def __eq__(self, other):
        return isinstance(other, Combo3) and self.coeffs == other.coeffs

    __hash__ = None

    def is_zero(self):
        return not self.coeffs

    def items(self):
        order = {w: i for i, w in enumerate(BASIS)}
        return sorted(self.coeffs.items(), key=lambda kv: (order.get(kv[0], len(order)), kv[0]))

    def to_json(self):
        return {basis_name(w): str(c) for w, c in self.items()}

    def __repr__(self):
        return "Combo3(%s)" % ", ".join("%s: %s" % (basis_name(w), c) for w, c in self.items())


# -- local rules ---------------------------------------------------------------------
# Each rule inspects a window starting at position p and returns
# (length consumed, [(coefficient, replacement word), ...]) or None.

# Sign in front of the twist-square expansions. "relation" follows from the
# cubic relation itself; "table" keeps the signs of the printed 2-tangle
# multiplication table, which is not associative (kept for comparison only).
CONVENTIONS = {"relation": -1, "table": 1}


def _sign(convention: str) -> int:
    try:
        return CONVENTIONS[convention]
    except KeyError:
        raise ValueError("unknown convention %r (use %s)" % (convention, ", ".join(CONVENTIONS))) from None


def _square(i: int, e: int, sign: int = -1):
    """S_i^{2e} over S_i^-1, e, S_i, U_i from the shifted cubic relation."""
    if e > 0:
        k = sign * b3 ** -1
        return [(k * b0, (_s(i, -1),)), (k * b1, ()), (k * b2, (_s(i, 1),)),
                (k * a * binf, (_u(i),))]
    k = sign * b0 ** -1
    return [(k * b1, (_s(i, -1),)), (k * b2, ()), (k * b3, (_s(i, 1),)),
            (k * a ** 2 * binf, (_u(i),))]


def _rule_cancel(w, p):
    x, y = _sgn(w[p]), _sgn(w[p + 1]) if p + 1 < len(w) else None
    if x and y and x[0] == y[0] and x[1] == -y[1]:
        return 2, [(R.one(), ())]
    return None


def _rule_caps(w, p):
    if w[p][0] != "U":
        return None
    i = int(w[p][1])
    if p + 1 < len(w) and w[p + 1] == w[p]:
        return 2, [(trivial_component(), (w[p],))]
    if p + 2 < len(w) and w[p + 1] == _u(_other(i)) and w[p + 2] == w[p]:
        return 3, [(R.one(), (w[p],))]
    return None


def _rule_framing(w, p):
    if p + 1 >= len(w):
        return None
    x, y = w[p], w[p + 1]
    if x[0] == "U" and _sgn(y) and _sgn(y)[0] == int(x[1]):
        return 2, [(a ** -_sgn(y)[1], (x,))]
    if y[0] == "U" and _sgn(x) and _sgn(x)[0] == int(y[1]):
        return 2, [(a ** -_sgn(x)[1], (y,))]
    if (p + 2 < len(w) and x[0] == "U" and w[p + 2] == x and _sgn(y)
            and _sgn(y)[0] != int(x[1])):
        return 3, [(a ** _sgn(y)[1], (x,))]
    return None


def _rule_square(w, p, sign=-1):
    x, y = _sgn(w[p]), _sgn(w[p + 1]) if p + 1 < len(w) else None
    if x and y and x == y:
        return 2, _square(*x, sign)
    return None


def _rule_slide(w, p):
    """Crossing pairs next to a cap-cup, and cap-cup pairs next to a crossing."""
    if p + 2 >= len(w):
        return None
    x, y, z = w[p], w[p + 1], w[p + 2]
    sx, sy, sz = _sgn(x), _sgn(y), _sgn(z)
    # S_i^c S_j^d U_i = S_i^c S_i^-d U_j U_i
    if sx and sy and z[0] == "U" and sx[0] == int(z[1]) and sy[0] != sx[0]:
        i, j = sx[0], sy[0]
        return 3, [(R.one(), (x, _s(i, -sy[1]), _u(j), _u(i)))]
    # U_i S_j^d S_i^c = U_i U_j S_i^-d S_i^c
    if x[0] == "U" and sy and sz and sz[0] == int(x[1]) and sy[0] != sz[0]:
        i, j = sz[0], sy[0]
        return 3, [(R.one(), (_u(i), _u(j), _s(i, -sy[1]), z))]
    # S_j^c U_i U_j = S_i^-c U_j
    if sx and y[0] == "U" and z[0] == "U" and y != z and sx[0] == int(z[1]):
        return 3, [(R.one(), (_s(_other(sx[0]), -sx[1]), z))]
    # U_i U_j S_i^c = U_i S_j^-c
    if x[0] == "U" and y[0] == "U" and x != y and sz and sz[0] == int(x[1]):
        return 3, [(R.one(), (x, _s(_other(sz[0]), -sz[1])))]
    # S_2^c U_1 S_2^d = S_1^-c U_2 S_1^-d
    if sx and sz and y == "U1" and sx[0] == 2 and sz[0] == 2:
        return 3, [(R.one(), (_s(1, -sx[1]), "U2", _s(1, -sz[1])))]
    return None


def _braid3_table():
    """Three-letter braid words starting with S2 that have an S1-first equivalent."""
    out = {}
    for c1 in (1, -1):
        for c2 in (1, -1):
            for c3 in (1, -1):
                if c1 == c3 == -c2:
                    continue
                src = (_s(2, c1), _s(1, c2), _s(2, c3))
                out[src] = _braid3_swap(2, c1, c2, c3)
    return out


def _braid3_swap(i, c1, c2, c3):
    """S_i^c1 S_j^c2 S_i^c3 as S_j^.. S_i^.. S_j^.. (requires not c1 == c3 == -c2)."""
    j = _other(i)
    if c1 == c2 == c3:
        return (_s(j, c1), _s(i, c1), _s(j, c1))
    if c1 == c2:        # S_i S_j S_i^-1 = S_j^-1 S_i S_j
        return (_s(j, -c1), _s(i, c1), _s(j, c1))
    # c2 == c3: S_i^-1 S_j S_i = S_j S_i S_j^-1
    return (_s(j, c2), _s(i, c2), _s(j, c1))


_BRAID3 = _braid3_table()


def _rule_braid3(w, p):
    tgt = _BRAID3.get(tuple(w[p:p + 3]))
    if tgt is not None:
        return 3, [(R.one(), tgt)]
    return None


# four-letter alternating braid words: rewrite to a word with a square
_BRAID4 = {
    ("S1", "S2", "S1i", "S2"): ("S2i", "S1", "S2", "S2"),
    ("S1i", "S2i", "S1", "S2i"): ("S2", "S1i", "S2i", "S2i"),
    ("S2", "S1i", "S2", "S1"): ("S2", "S2", "S1", "S2i"),
    ("S2i", "S1", "S2i", "S1i"): ("S2i", "S2i", "S1i", "S2"),
    # the three words that need two twist regions
    ("S1i", "S2", "S1i", "S2"): ("S1i", "S1i", "S2i", "S1", "S2", "S2"),
    ("S2i", "S1", "S2i", "S1"): ("S2i", "S2i", "S1i", "S2", "S1", "S1"),
    ("S2", "S1i", "S2", "S1i"): ("S2", "S1i", "S1i", "S2i", "S1", "S2"),
}


def _rule_braid4(w, p):
    tgt = _BRAID4.get(tuple(w[p:p + 4]))
    if tgt is not None:
        return 4, [(R.one(), tgt)]
    return None


RULE_CLASSES = (_rule_cancel, _rule_caps, _rule_framing, _rule_square,
                _rule_slide, _rule_braid3, _rule_braid4)


def _rewrite_once(w: tuple, sign: int = -1):
    for rule in RULE_CLASSES:
        for p in range(len(w)):
            hit = rule(w, p, sign) if rule is _rule_square else rule(w, p)
            if hit is not None:
                n, repl = hit
                return [(c, w[:p] + r + w[p + n:]) for c, r in repl]
    return None


class NormalFormError(RuntimeError):
    pass


_ACTIVE: set = set()


@lru_cache(maxsize=None)
def normal_form(word: tuple, convention: str = "relation") -> Combo3:
    """Rewrite a word to a combination of basis words."""
    word = tuple(word)
    if word in BASIS_SET:
        return Combo3.single(word)
    key = (word, convention)
    if key in _ACTIVE:
        raise NormalFormError("rewriting loops on %s" % basis_name(word))
    step = _rewrite_once(word, _sign(convention))
    if step is None:
        raise NormalFormError("no rule applies to the non-basic word %s" % basis_name(word))
    _ACTIVE.add(key)
    try:
        total = Combo3()
        for c, w in step:
            total = total + normal_form(w, convention).scale(c)
    finally:
        _ACTIVE.discard(key)
    return total


# -- products ------------------------------------------------------------------------

@lru_cache(maxsize=None)
def basis_times_gen(b: tuple, g: str, convention: str = "relation") -> Combo3:
    b = tuple(b)
    if b not in BASIS_SET:
        raise ValueError("%s is not a basic 3-tangle" % basis_name(b))
    if g not in GENS:
        raise ValueError("unknown generator %r" % g)
    return normal_form(b + (g,), convention)


def product_table(convention: str = "relation") -> dict:
    """All 40 x 6 basis-times-generator products."""
    return {(b, g): basis_times_gen(b, g, convention) for b in BASIS for g in GENS}


def act(x: Combo3, g: str, convention: str = "relation") -> Combo3:
    total = Combo3()
    for b, c in x.coeffs.items():
        total = total + basis_times_gen(b, g, convention).scale(c)
    return total


def reduce_word(word: Iterable[str], convention: str = "relation") -> Combo3:
    """Left fold of the generator action starting from the identity tangle."""
    x = Combo3.single(E)
    for g in word:
        x = act(x, g, convention)
    return x


def multiply3(x: Combo3, y: Combo3, convention: str = "relation") -> Combo3:
    total = Combo3()
    for bx, cx in x.coeffs.items():
        for by, cy in y.coeffs.items():
            total = total + reduce_word(bx + by, convention).scale(cx * cy)
    return total


def random_word(rng: random.Random, max_len: int = 6) -> tuple:
    return tuple(rng.choice(GENS) for _ in range(rng.randint(0, max_len)))


def word_pairs(pairs: int = 500, max_len: int = 6, seed: int = 0) -> list:
    rng = random.Random(seed)
    return [(random_word(rng, max_len), random_word(rng, max_len)) for _ in range(pairs)]


def product_defect(w1, w2, convention: str = "relation") -> Combo3:
    """multiply-then-reduce minus reduce-of-concatenation."""
    x = multiply3(reduce_word(w1, convention), reduce_word(w2, convention), convention)
    return x - reduce_word(tuple(w1) + tuple(w2), convention)


def well_definedness_failures(pairs: int = 500, max_len: int = 6, seed: int = 0,
                              convention: str = "relation") -> list:
    """Word pairs where multiply-then-reduce differs from reducing the concatenation."""
    return [(w1, w2) for w1, w2 in word_pairs(pairs, max_len, seed)
            if not product_defect(w1, w2, convention).is_zero()]


# -- local identities ------------------------------------------------------------------

class Identity:
    """lhs word = sum of coefficient * word, instantiated for one strand pair."""

    def __init__(self, name: str, lhs: tuple, rhs: list):
        self.name, self.lhs, self.rhs = name, tuple(lhs), [(c, tuple(w)) for c, w in rhs]

    def defect(self, convention: str = "relation") -> Combo3:
        total = reduce_word(self.lhs, convention)
        for c, w in self.rhs:
            total = total - reduce_word(w, convention).scale(c)
        return total

    def holds(self, convention: str = "relation") -> bool:
        return self.defect(convention).is_zero()

    def __repr__(self):
        rhs = " + ".join("(%s) %s" % (c, basis_name(w)) for c, w in self.rhs)
        return "%s: %s = %s" % (self.name, basis_name(self.lhs), rhs)


def _twist_identities(i: int, j: int, sign: int, swap: bool = False) -> list:
    """Expansions of the twist regions next to a cap-cup; sign multiplies each right side.

    swap exchanges the b0 and b2 terms of the two negative-twist expansions.
    """
    Si, Sj, Sii, Sji, Ui, Uj = _s(i, 1), _s(j, 1), _s(i, -1), _s(j, -1), _u(i), _u(j)
    k0, k3 = sign * b0 ** -1, sign * b3 ** -1
    n0, n2 = (b2, b0) if swap else (b0, b2)
    return [
        Identity("twist_cap_left", (Ui, Sj, Sii),
                 [(k0 * b1, (Ui, Sj)), (k0 * b2, (Ui, Uj)), (k0 * b3, (Ui, Sji)), (k0 * a ** 2 * binf, (Ui,))]),
        Identity("twist_cap_right", (Sii, Sj, Ui),
                 [(k0 * b1, (Sj, Ui)), (k0 * b2, (Uj, Ui)), (k0 * b3, (Sji, Ui)), (k0 * a ** 2 * binf, (Ui,))]),
        Identity("negative_square", (Sji, Sji),
                 [(k0 * b1, (Sji,)), (k0 * b2, ()), (k0 * b3, (Sj,)), (k0 * a ** 2 * binf, (Uj,))]),
        Identity("negtwist_cap_left", (Ui, Sji, Si),
                 [(k3 * n0, (Ui, Sji)), (k3 * b1, (Ui, Uj)), (k3 * n2, (Ui, Sj)), (k3 * a * binf, (Ui,))]),
        Identity("negtwist_cap_right", (Si, Sji, Ui),
                 [(k3 * n2, (Sj, Ui)), (k3 * b1, (Uj, Ui)), (k3 * n0, (Sji, Ui)), (k3 * a * binf, (Ui,))]),
        Identity("positive_square", (Sj, Sj),
                 [(k3 * b0, (Sji,)), (k3 * b1, ()), (k3 * b2, (Sj,)), (k3 * a * binf, (Uj,))]),
    ]


def _basic_identities(i: int, j: int, framing: int) -> list:
    """Isotopy and framing identities; framing is the exponent of a for U_i S_i."""
    one, t = R.one(), trivial_component()
    Si, Sj, Sii, Sji, Ui, Uj = _s(i, 1), _s(j, 1), _s(i, -1), _s(j, -1), _u(i), _u(j)
    out = [
        Identity("cap_cup_absorb", (Ui, Uj, Ui), [(one, (Ui,))]),
        Identity("cap_square", (Ui, Ui), [(t, (Ui,))]),
        Identity("cap_crossing_cap", (Ui, Sj, Ui), [(a, (Ui,))]),
        Identity("cap_negcrossing_cap", (Ui, Sji, Ui), [(a ** -1, (Ui,))]),
        Identity("cap_kink", (Ui, Si), [(a ** framing, (Ui,))]),
        Identity("kink_cap", (Si, Ui), [(a ** framing, (Ui,))]),
        Identity("cap_negkink", (Ui, Sii), [(a ** -framing, (Ui,))]),
        Identity("negkink_cap", (Sii, Ui), [(a ** -framing, (Ui,))]),
        Identity("pair_slide_cap", (Si, Sj, Ui), [(one, (Uj, Ui))]),
        Identity("negpair_slide_cap", (Sii, Sji, Ui), [(one, (Uj, Ui))]),
        Identity("cap_pair_slide", (Ui, Sj, Si), [(one, (Ui, Uj))]),
        Identity("cap_negpair_slide", (Ui, Sji, Sii), [(one, (Ui, Uj))]),
        Identity("crossing_through_cap", (Si, Uj), [(one, (Sji, Ui, Uj))]),
        Identity("negcrossing_through_cap", (Sii, Uj), [(one, (Sj, Ui, Uj))]),
        Identity("cap_through_crossing", (Ui, Sj), [(one, (Ui, Uj, Sii))]),
        Identity("cap_through_negcrossing", (Ui, Sji), [(one, (Ui, Uj, Si))]),
        Identity("cancel", (Si, Sii), [(one, ())]),
        Identity("cancel_reversed", (Sii, Si), [(one, ())]),
        Identity("braid", (Si, Sj, Si), [(one, (Sj, Si, Sj))]),
        Identity("mixed_braid", (Si, Sj, Sii), [(one, (Sji, Si, Sj))]),
        Identity("mixed_braid_inverse", (Sii, Sji, Si), [(one, (Sj, Sii, Sji))]),
    ]
    for e1 in (1, -1):
        for e2 in (1, -1):
            out.append(Identity("swap_cap_%+d%+d" % (e1, e2), (_s(i, e1), Uj, _s(i, e2)),
                                [(one, (_s(j, -e1), Ui, _s(j, -e2)))]))
    return out


def _for_pairs(build, *args) -> list:
    out = []
    for i, j in ((1, 2), (2, 1)):
        for ident in build(i, j, *args):
            ident.name = "%s[i=%d]" % (ident.name, i)
            out.append(ident)
    return out


def printed_identities() -> list:
    """Local identities with the signs and framing exponents as usually stated."""
    return _for_pairs(_basic_identities, 1) + _for_pairs(_twist_identities, 1)


def corrected_identities() -> list:
    """The same identities with kink framing a^-1, cubic-relation signs and b0, b2 in place."""
    return _for_pairs(_basic_identities, -1) + _for_pairs(_twist_identities, -1, True)


# -- transcribed four-letter expansions ------------------------------------------------

@lru_cache(maxsize=1)
def printed_expansions() -> dict:
    """word -> Combo3 of the transcribed expansions in data/forb34.txt."""
    from importlib import resources
    from .ring import parse_poly
    text = resources.files(__package__).joinpath("data/forb34.txt").read_text(encoding="utf-8")
    blocks, cur = {}, None
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("word:"):
            cur = tuple(line[5:].split())
            blocks[cur] = {}
            continue
        word, coeff = line.split("|")
        blocks[cur][parse_word(word)] = parse_poly(coeff.strip())
    return {w: Combo3(c) for w, c in blocks.items()}


def expansion_matches(convention: str = "relation") -> dict:
    """word -> (printed coefficients reproduced exactly, printed coefficients)."""
    out = {}
    for word, printed in printed_expansions().items():
        got = reduce_word(word, convention)
        hits = sum(got[w] == c for w, c in printed.coeffs.items())
        out[word] = (hits, len(printed.coeffs))
    return out
