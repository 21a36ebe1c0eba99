"""Fox p-colorings of closed rational links.

The diagram is the standard rational one: the first entry of the code is a
row of horizontal twists on the 0 tangle, then vertical and horizontal twist
rows alternate. Each crossing gives the relation 2*over = in + out (mod p)
between arcs; the number of colorings is p to the nullity of that system.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

from .tangle_model import Closure, CodeError, ConwayCode, closure_kind, is_int


@dataclass(frozen=True)
class ColoringSystem:
    arcs: int
    relations: tuple          # (over, under_in, under_out) arc indices

    @property
    def crossings(self) -> int:
        return len(self.relations)

    def matrix(self, p: int | None = None) -> list:
        """Rows of the coloring relations, one column per arc (reduced mod p if given)."""
        rows = []
        for over, u, v in self.relations:
            row = [0] * self.arcs
            row[over] += 2
            row[u] -= 1
            row[v] -= 1
            rows.append([x % p for x in row] if p else row)
        return rows


class _Builder:
    """Edges are created on demand; crossings record which edges meet there."""

    def __init__(self):
        self.n_edges = 0
        self.crossings = []       # (over_a, over_b, under_a, under_b)
        self.glue = []            # pairs of edges that are the same strand

    def edge(self) -> int:
        self.n_edges += 1
        return self.n_edges - 1

    def cross(self, over: tuple, under: tuple):
        self.crossings.append(over + under)

    def system(self) -> ColoringSystem:
        parent = list(range(self.n_edges))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(x, y):
            parent[find(x)] = find(y)

        for x, y in self.glue:
            union(x, y)
        for oa, ob, _, _ in self.crossings:
            union(oa, ob)
        roots = sorted({find(e) for e in range(self.n_edges)})
        index = {r: i for i, r in enumerate(roots)}
        rel = tuple((index[find(oa)], index[find(ua)], index[find(ub)])
                    for oa, _, ua, ub in self.crossings)
        return ColoringSystem(len(roots), rel)


def _twist(b: _Builder, ends: dict, horizontal: bool, sign: int):
    """One crossing on the right (horizontal) or bottom (vertical) of the tangle."""
    if horizontal:
        top, bottom = ends["NE"], ends["SE"]
        new_top, new_bottom = b.edge(), b.edge()
        # strand top -> new bottom, strand bottom -> new top
        first, second = (top, new_bottom), (bottom, new_top)
        ends["NE"], ends["SE"] = new_top, new_bottom
    else:
        left, right = ends["SW"], ends["SE"]
        new_left, new_right = b.edge(), b.edge()
        first, second = (left, new_right), (right, new_left)
        ends["SW"], ends["SE"] = new_left, new_right
    # Horizontal and vertical rows of the same sign make an alternating diagram.
    if sign > 0:
        b.cross(first, second)
    else:
        b.cross(second, first)


def diagram_from_code(code: Sequence[int], closure: Closure | None = None) -> ColoringSystem:
    """Crossing relations of the standard rational diagram under the closure."""
    code = ConwayCode(code)
    for n in code:
        if not is_int(n):
            raise CodeError("colorings need integer entries, got %s" % (n,))
    if closure is None:
        closure = closure_kind(code)
    b = _Builder()
    # 0 tangle: NW-NE and SW-SE are joined.
    top, bottom = b.edge(), b.edge()
    ends = {"NW": top, "NE": top, "SW": bottom, "SE": bottom}
    for k, n in enumerate(code):
        for _ in range(abs(n)):
            _twist(b, ends, k % 2 == 0, 1 if n > 0 else -1)
    if closure is Closure.Numerator:
        b.glue += [(ends["NW"], ends["NE"]), (ends["SW"], ends["SE"])]
    else:
        b.glue += [(ends["NW"], ends["SW"]), (ends["NE"], ends["SE"])]
    return b.system()


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    f = 2
    while f * f <= p:
        if p % f == 0:
            return False
        f += 1
    return True


def nullity_mod_p(rows: list, ncols: int, p: int) -> int:
    """Dimension of the kernel over Z/p, by row reduction."""
    rows = [list(r) for r in rows]
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col] % p), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = pow(rows[rank][col], -1, p)
        rows[rank] = [x * inv % p for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col] % p:
                f = rows[r][col]
                rows[r] = [(x - f * y) % p for x, y in zip(rows[r], rows[rank])]
        rank += 1
    return ncols - rank


def count_fox_colorings(code: Sequence[int], p: int, closure: Closure | None = None) -> int:
    if not isinstance(p, int) or isinstance(p, bool) or not is_prime(p):
        raise ValueError("p must be a prime, got %r" % (p,))
    sys_ = diagram_from_code(code, closure)
    return p ** nullity_mod_p(sys_.matrix(p), sys_.arcs, p)


def determinant(code: Sequence[int], closure: Closure | None = None) -> int:
    """|det| of the link: a first minor of the coloring matrix (0 for split diagrams)."""
    sys_ = diagram_from_code(code, closure)
    if sys_.arcs == 1:
        return 1
    if sys_.crossings != sys_.arcs:
        return 0
    m = [[Fraction(x) for x in row[1:]] for row in sys_.matrix()[1:]]
    n, det = len(m), Fraction(1)
    for k in range(n):
        piv = next((i for i in range(k, n) if m[i][k]), None)
        if piv is None:
            return 0
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            det = -det
        det *= m[k][k]
        for i in range(k + 1, n):
            f = m[i][k] / m[k][k]
            if f:
                m[i] = [x - f * y for x, y in zip(m[i], m[k])]
    return abs(int(det))


def fraction_of(code: Sequence[int]) -> tuple:
    """(numerator, denominator) of the rational tangle, last entry horizontal."""
    num, den = 0, 1            # the 0 tangle
    for k, n in enumerate(code):
        if k % 2 == 0:         # horizontal: F -> F + n
            num, den = num + n * den, den
        else:                  # vertical: 1/F -> 1/F + n
            num, den = num, den + n * num
    g = gcd(num, den) or 1
    return num // g, den // g
