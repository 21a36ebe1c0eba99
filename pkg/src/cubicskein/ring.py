"""Exact Laurent polynomials over the integers.

The main ring is Z[a^±1, b0^±1, b1, b2, b3^±1, binf^±1]. Polynomials are
immutable mappings from exponent tuples to Python ints. A `PolyRing` fixes
the variable names and which of them may carry negative exponents, so the
same machinery also serves the cube-root ring used for the alpha
substitution and the small rings used for specializations.
"""
from __future__ import annotations

import heapq
import re
from functools import reduce
from math import gcd
from typing import Mapping, Sequence


class RingError(ValueError):
    pass


class PolyRing:
    """Variable names plus invertibility flags; polynomials keep a reference to one."""

    def __init__(self, names: Sequence[str], invertible: Sequence[bool], aliases=None):
        if len(names) != len(invertible):
            raise ValueError("names and invertibility flags differ in length")
        self.names = tuple(names)
        self.invertible = tuple(bool(f) for f in invertible)
        self.nvars = len(names)
        self.index = {n: i for i, n in enumerate(names)}
        for alias, target in (aliases or {}).items():
            self.index[alias] = self.index[target]
        self._zero_exp = (0,) * self.nvars

    def __repr__(self):
        marks = [n if inv else n + "(poly)" for n, inv in zip(self.names, self.invertible)]
        return "PolyRing(%s)" % ", ".join(marks)

    def check_exponents(self, exps):
        for e, inv, name in zip(exps, self.invertible, self.names):
            if e < 0 and not inv:
                raise RingError("%s is not invertible (exponent %d)" % (name, e))

    def zero(self) -> "LaurentPoly":
        return LaurentPoly(self, {})

    def one(self) -> "LaurentPoly":
        return LaurentPoly(self, {self._zero_exp: 1})

    def const(self, c: int) -> "LaurentPoly":
        return LaurentPoly(self, {self._zero_exp: c} if c else {})

    def var(self, name: str, power: int = 1) -> "LaurentPoly":
        return self.monomial({name: power})

    def monomial(self, powers: Mapping[str, int] | Sequence[int], coeff: int = 1) -> "LaurentPoly":
        if isinstance(powers, Mapping):
            exps = [0] * self.nvars
            for name, e in powers.items():
                exps[self.index[name]] += e
        else:
            exps = list(powers)
        exps = tuple(exps)
        self.check_exponents(exps)
        return LaurentPoly(self, {exps: coeff} if coeff else {})

    def gens(self):
        return tuple(self.var(n) for n in self.names)

    def parse(self, text: str) -> "LaurentPoly":
        return parse_poly(text, self)


R = PolyRing(("a", "b0", "b1", "b2", "b3", "binf"),
             (True, True, False, False, True, True),
             aliases={"b∞": "binf", "b_inf": "binf"})

# cube-root ring: a = alpha^3, with b3 and b1 eliminated
ALPHA_RING = PolyRing(("alpha", "b0", "b2", "binf"), (True, True, False, True),
                      aliases={"α": "alpha", "b∞": "binf"})


def _sort_key(exps):
    return (sum(exps),) + exps


class LaurentPoly:
    """Immutable sparse Laurent polynomial.

    Terms are kept in a dict; ordering only matters for printing and for
    division, where the graded-lex order on exponent vectors is used.
    """

    __slots__ = ("ring", "_terms", "_hash")

    def __init__(self, ring: PolyRing, terms: Mapping[tuple, int], *, _trusted=False):
        self.ring = ring
        if _trusted:
            self._terms = terms
        else:
            clean = {}
            for exps, c in terms.items():
                if c:
                    exps = tuple(exps)
                    if len(exps) != ring.nvars:
                        raise RingError("exponent vector of wrong length")
                    ring.check_exponents(exps)
                    clean[exps] = clean.get(exps, 0) + c
            self._terms = {k: v for k, v in clean.items() if v}
        self._hash = None

    # -- basic access -------------------------------------------------------
    @property
    def terms(self) -> Mapping[tuple, int]:
        return self._terms

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self):
        return not self._terms

    def sorted_terms(self):
        """Terms from the leading one down (graded lex, a > b0 > ... > binf)."""
        return sorted(self._terms.items(), key=lambda kv: _sort_key(kv[0]), reverse=True)

    def leading_term(self):
        if not self._terms:
            raise RingError("zero polynomial has no leading term")
        exps = max(self._terms, key=_sort_key)
        return exps, self._terms[exps]

    def is_monomial(self):
        return len(self._terms) == 1

    def is_unit(self):
        return len(self._terms) == 1 and abs(next(iter(self._terms.values()))) == 1

    def constant_value(self):
        """The integer value if the polynomial is constant, else None."""
        if not self._terms:
            return 0
        if len(self._terms) == 1:
            exps, c = next(iter(self._terms.items()))
            if not any(exps):
                return c
        return None

    def content(self) -> int:
        return reduce(gcd, self._terms.values(), 0)

    def min_exponents(self):
        """Componentwise minimum exponent over all terms."""
        if not self._terms:
            return self.ring._zero_exp
        return tuple(map(min, zip(*self._terms)))

    def max_exponents(self):
        if not self._terms:
            return self.ring._zero_exp
        return tuple(map(max, zip(*self._terms)))

    # -- arithmetic ---------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            if other.ring is not self.ring:
                raise RingError("polynomials live in different rings")
            return other
        if isinstance(other, int):
            return self.ring.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if len(other._terms) > len(self._terms):
            big, small = other._terms, self._terms
        else:
            big, small = self._terms, other._terms
        out = dict(big)
        for k, v in small.items():
            s = out.get(k, 0) + v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return LaurentPoly(self.ring, out, _trusted=True)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.ring, {k: -v for k, v in self._terms.items()}, _trusted=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for k, v in other._terms.items():
            s = out.get(k, 0) - v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return LaurentPoly(self.ring, out, _trusted=True)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._terms, other._terms
        if not a or not b:
            return self.ring.zero()
        if len(a) < len(b):
            a, b = b, a
        out: dict = {}
        get = out.get
        for eb, cb in b.items():
            for ea, ca in a.items():
                k = tuple(x + y for x, y in zip(ea, eb))
                out[k] = get(k, 0) + ca * cb
        return LaurentPoly(self.ring, {k: v for k, v in out.items() if v}, _trusted=True)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if not self.is_unit():
                raise RingError("only unit monomials have negative powers")
            exps, c = next(iter(self._terms.items()))
            return self.ring.monomial(tuple(e * n for e in exps), c ** (-n))
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def scale(self, c: int):
        if not c:
            return self.ring.zero()
        return LaurentPoly(self.ring, {k: v * c for k, v in self._terms.items()}, _trusted=True)

    def shift(self, exps: Sequence[int], c: int = 1):
        """Multiply by the monomial c * x^exps."""
        if not c:
            return self.ring.zero()
        exps = tuple(exps)
        out = {tuple(x + y for x, y in zip(k, exps)): v * c for k, v in self._terms.items()}
        p = LaurentPoly(self.ring, out, _trusted=True)
        if any(e < 0 for e in exps):
            for k in out:
                self.ring.check_exponents(k)
        return p

    def inverse_unit(self):
        return self ** -1

    # -- comparison ---------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.ring is other.ring and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- maps ---------------------------------------------------------------
    def map_exponents(self, fn, ring: PolyRing | None = None):
        """Apply an exponent-vector map termwise (must be injective on the support)."""
        ring = ring or self.ring
        out = {}
        for k, v in self._terms.items():
            nk = tuple(fn(k))
            out[nk] = out.get(nk, 0) + v
        return LaurentPoly(ring, out)

    def substitute(self, images: Sequence["LaurentPoly"], ring: PolyRing | None = None):
        """Ring homomorphism sending variable i to images[i].

        Variables that occur with negative exponents must be sent to unit
        monomials, otherwise there is no image.
        """
        ring = ring or images[0].ring
        if len(images) != self.ring.nvars:
            raise RingError("need one image per variable")
        cache: dict = {}

        def power(i, e):
            key = (i, e)
            if key not in cache:
                img = images[i]
                if e < 0 and not img.is_unit():
                    raise RingError("cannot invert image of %s" % self.ring.names[i])
                cache[key] = img ** e
            return cache[key]

        total: dict = {}
        for exps, c in self._terms.items():
            term = ring.const(c)
            for i, e in enumerate(exps):
                if e:
                    term = term * power(i, e)
            for k, v in term._terms.items():
                total[k] = total.get(k, 0) + v
        return LaurentPoly(ring, total)

    def evaluate(self, values: Mapping[str, object]):
        """Numeric evaluation; values may be ints, Fractions or floats."""
        total = 0
        for exps, c in self._terms.items():
            term = c
            for name, e in zip(self.ring.names, exps):
                if e:
                    term = term * values[name] ** e
            total += term
        return total

    def degree_in(self, name: str):
        i = self.ring.index[name]
        return {k[i] for k in self._terms}

    # -- text ---------------------------------------------------------------
    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return "LaurentPoly(%s)" % format_poly(self)


def _format_term(names, exps, c, first):
    factors = []
    for name, e in zip(names, exps):
        if e == 1:
            factors.append(name)
        elif e:
            factors.append("%s^%d" % (name, e))
    mag = abs(c)
    if not factors:
        body = str(mag)
    elif mag == 1:
        body = "*".join(factors)
    else:
        body = "%d*%s" % (mag, "*".join(factors))
    if first:
        return ("-" if c < 0 else "") + body
    return (" - " if c < 0 else " + ") + body


def format_poly(p: LaurentPoly) -> str:
    if not p._terms:
        return "0"
    parts = []
    for i, (exps, c) in enumerate(p.sorted_terms()):
        parts.append(_format_term(p.ring.names, exps, c, i == 0))
    return "".join(parts)


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z_α∞][A-Za-z_0-9∞]*)|(?P<op>[-+*^()−]))")


def parse_poly(text: str, ring: PolyRing = R) -> LaurentPoly:
    """Parse sums of terms 'C*v^e*...'; also tolerates parentheses and products of sums."""
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise RingError("cannot parse polynomial at position %d: %r" % (pos, text[pos:pos + 10]))
        kind = m.lastgroup
        val = m.group(kind)
        if val == "−":
            val = "-"
        tokens.append((kind, val, m.start(kind)))
        pos = m.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1
    tokens.append(("end", None, len(text)))
    parser = _Parser(tokens, ring)
    result = parser.expr()
    if parser.peek()[0] != "end":
        raise RingError("trailing input at position %d" % parser.peek()[2])
    return result


class _Parser:
    def __init__(self, tokens, ring):
        self.tokens = tokens
        self.i = 0
        self.ring = ring

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, val):
        tok = self.take()
        if tok[1] != val:
            raise RingError("expected %r at position %d" % (val, tok[2]))

    def expr(self):
        sign = 1
        if self.peek()[1] in "+-" and self.peek()[0] == "op":
            sign = -1 if self.take()[1] == "-" else 1
        total = self.product().scale(sign)
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            op = self.take()[1]
            term = self.product()
            total = total + term if op == "+" else total - term
        return total

    def product(self):
        value = self.power()
        while self.peek()[0] == "op" and self.peek()[1] in "*(" or self.peek()[0] in ("num", "name"):
            if self.peek()[1] == "*":
                self.take()
            value = value * self.power()
        return value

    def power(self):
        base = self.atom()
        if self.peek()[1] == "^":
            self.take()
            neg = False
            if self.peek()[1] in "-+" and self.peek()[0] == "op":
                neg = self.take()[1] == "-"
            if self.peek()[1] == "(":
                self.take()
                neg2 = False
                if self.peek()[1] == "-":
                    self.take()
                    neg2 = True
                tok = self.take()
                self.expect(")")
                e = int(tok[1]) * (-1 if neg2 else 1)
            else:
                tok = self.take()
                if tok[0] != "num":
                    raise RingError("expected exponent at position %d" % tok[2])
                e = int(tok[1])
            return base ** (-e if neg else e)
        return base

    def atom(self):
        kind, val, where = self.take()
        if kind == "num":
            return self.ring.const(int(val))
        if kind == "name":
            if val not in self.ring.index:
                raise RingError("unknown variable %r at position %d" % (val, where))
            return self.ring.monomial({self.ring.names[self.ring.index[val]]: 1})
        if val == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        if val == "-":
            return -self.power()
        raise RingError("unexpected %r at position %d" % (val, where))


# -- named elements -----------------------------------------------------------

a, b0, b1, b2, b3, binf = R.gens()


def mono(**powers) -> LaurentPoly:
    return R.monomial(powers)


def trivial_component() -> LaurentPoly:
    """Value of a split unknot, solved from the skein relation with one trivial loop."""
    return -(b0 + b1 * a ** -1 + b2 * a ** -2 + b3 * a ** -3) * binf ** -1


# -- division -----------------------------------------------------------------

def _clear(p: LaurentPoly):
    shift = tuple(-min(0, m) for m in p.min_exponents())
    return p.shift(shift) if any(shift) else p, shift


def _strip_units(p: LaurentPoly):
    """Remove the largest monomial in the invertible variables dividing p."""
    mins = p.min_exponents()
    shift = tuple(-m if inv else 0 for m, inv in zip(mins, p.ring.invertible))
    return (p.shift(shift) if any(shift) else p), shift


def _poly_divide(p: dict, d: LaurentPoly):
    """Exact division of polynomials with nonnegative exponents, or None."""
    dl_exps, dl_c = d.leading_term()
    rest = [(e, c) for e, c in d.terms.items() if e != dl_exps]
    rem = dict(p)
    heap = [tuple(-x for x in _sort_key(e)) for e in rem]
    heapq.heapify(heap)
    quotient = {}
    n = len(dl_exps)
    while rem:
        key = heapq.heappop(heap)
        exps = tuple(-x for x in key[1:])
        c = rem.get(exps)
        if c is None:
            continue
        q_exps = tuple(exps[i] - dl_exps[i] for i in range(n))
        if min(q_exps) < 0 or c % dl_c:
            return None
        qc = c // dl_c
        quotient[q_exps] = qc
        del rem[exps]
        for e, dc in rest:
            k = tuple(q_exps[i] + e[i] for i in range(n))
            old = rem.get(k)
            if old is None:
                rem[k] = -qc * dc
                heapq.heappush(heap, tuple(-x for x in _sort_key(k)))
            else:
                v = old - qc * dc
                if v:
                    rem[k] = v
                else:
                    del rem[k]
    return quotient


def exact_divide(p: LaurentPoly, d: LaurentPoly) -> LaurentPoly | None:
    """Quotient q with q*d == p, or None if p is not in the principal ideal (d)."""
    if d.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if p.is_zero():
        return p.ring.zero()
    ring = p.ring
    pc, p_shift = _clear(p)
    dc, d_shift = _clear(d)
    dc, d_strip = _strip_units(dc)
    q = _poly_divide(pc.terms, dc)
    if q is None:
        return None
    # p * x^p_shift = q * d * x^(d_shift + d_strip)
    total = tuple(ds + st - ps for ds, st, ps in zip(d_shift, d_strip, p_shift))
    out = {tuple(x + y for x, y in zip(k, total)): v for k, v in q.items()}
    for k in out:
        try:
            ring.check_exponents(k)
        except RingError:
            return None
    return LaurentPoly(ring, out, _trusted=True)


def divides(d: LaurentPoly, p: LaurentPoly) -> bool:
    return exact_divide(p, d) is not None


# -- substitution homomorphisms ----------------------------------------------

def phi_mirror(p: LaurentPoly) -> LaurentPoly:
    """Coefficient map of the mirror image: b0<->b3, b1<->b2, a^n binf^k -> a^(3k-n) binf^k."""
    if p.ring is not R:
        raise RingError("mirror map is defined on the main ring only")
    return p.map_exponents(lambda e: (3 * e[5] - e[0], e[4], e[3], e[2], e[1], e[5]))


def alpha_substitute(p: LaurentPoly) -> LaurentPoly:
    """a -> alpha^3, b3 -> -alpha*b0, b1 -> -alpha*b2 - alpha^5*binf."""
    al, c0, c2, cinf = ALPHA_RING.gens()
    images = [al ** 3, c0, -al * c2 - al ** 5 * cinf, c2, -al * c0, cinf]
    return p.substitute(images, ALPHA_RING)


def homogenize(p: LaurentPoly, degree: int) -> LaurentPoly:
    """Send b_i to b_i/(-b3) for i = 0, 1, 2 and multiply by (-b3)^degree."""
    if p.degree_in("b3") - {0}:
        raise RingError("homogenize expects a polynomial free of b3")
    out = R.zero()
    for exps, c in p.terms.items():
        w = exps[1] + exps[2] + exps[3]
        k = degree - w
        out = out + R.monomial(exps, c) * (-b3) ** k
    return out


def dehomogenize(p: LaurentPoly) -> LaurentPoly:
    """Set b3 = -1."""
    out = {}
    for exps, c in p.terms.items():
        k = exps[:4] + (0,) + exps[5:]
        out[k] = out.get(k, 0) + (c if exps[4] % 2 == 0 else -c)
    return LaurentPoly(R, out)


# -- fractions ----------------------------------------------------------------

class RingFraction:
    """num/den with integer content and common monomial factors removed.

    No polynomial gcd is taken; equality is by cross multiplication.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly, den: LaurentPoly | None = None):
        if den is None:
            den = num.ring.one()
        if isinstance(num, int):
            num = den.ring.const(num)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        ring = num.ring
        if num.is_zero():
            self.num, self.den = num, ring.one()
            return
        # monomial factor: units of the denominator move to the numerator,
        # shared powers of non-invertible variables cancel
        dmin, nmin = den.min_exponents(), num.min_exponents()
        shift = []
        for inv, dm, nm in zip(ring.invertible, dmin, nmin):
            shift.append(dm if inv else min(dm, nm))
        if any(shift):
            neg = tuple(-s for s in shift)
            num, den = num.shift(neg), den.shift(neg)
        g = gcd(num.content(), den.content())
        if g > 1:
            num = LaurentPoly(ring, {k: v // g for k, v in num.terms.items()}, _trusted=True)
            den = LaurentPoly(ring, {k: v // g for k, v in den.terms.items()}, _trusted=True)
        if den.leading_term()[1] < 0:
            num, den = -num, -den
        self.num, self.den = num, den

    @property
    def ring(self):
        return self.num.ring

    def _lift(self, other):
        if isinstance(other, RingFraction):
            return other
        if isinstance(other, (LaurentPoly, int)):
            return RingFraction(other if isinstance(other, LaurentPoly) else self.ring.const(other))
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return RingFraction(self.num + other.num, self.den)
        return RingFraction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RingFraction(-self.num, self.den)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return RingFraction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return RingFraction(self.num * other.den, self.den * other.num)

    def __eq__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return frac_equal(self, other)

    __hash__ = None

    def is_zero(self):
        return self.num.is_zero()

    def as_poly(self) -> LaurentPoly | None:
        """The Laurent polynomial equal to this fraction, if the denominator divides."""
        return exact_divide(self.num, self.den)

    def __str__(self):
        if self.den == self.ring.one():
            return str(self.num)
        return "(%s)/(%s)" % (self.num, self.den)

    __repr__ = __str__


def frac_equal(x: RingFraction, y: RingFraction) -> bool:
    return x.num * y.den == y.num * x.den


def as_fraction(x) -> RingFraction:
    return x if isinstance(x, RingFraction) else RingFraction(x)


def poly_add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p + q


def poly_mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p * q
