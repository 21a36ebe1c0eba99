"""Pretzel links P(n1, ..., nr), evaluated column by column."""
from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache

from .ring import R, LaurentPoly, a, phi_mirror, trivial_component
from .rta import eval_code, twist_coefficients
from .tangle_model import INF, Closure, CodeError, PretzelCode

_BASE = (-1, 0, 1, INF)


@dataclass
class PretzelResult:
    value: LaurentPoly
    # terminal tuples where a 0 column met an inf column
    zero_with_inf: tuple = ()


def _terminal(cols: tuple, flags: set) -> LaurentPoly:
    t = trivial_component()
    if len(cols) == 1:
        return {0: t, 1: a ** -1 * t, -1: a * t, INF: t * t}[cols[0]]
    zeros = sum(1 for c in cols if c == 0)
    finite = [c for c in cols if c is not INF]
    if zeros:
        if len(finite) < len(cols):
            flags.add(cols)
        return t ** zeros * a ** sum(finite)
    return eval_code((-sum(finite),), Closure.Numerator)


def _walk(cols: tuple, i: int, order: tuple, flags: set, memo: dict) -> LaurentPoly:
    key = (cols, i)
    if key in memo:
        return memo[key]
    if i == len(order):
        out = _terminal(cols, flags)
    else:
        j = order[i]
        n = cols[j]
        if n in _BASE:
            out = _walk(cols, i + 1, order, flags, memo)
        elif n < -1:
            neg = tuple(c if c is INF else -c for c in cols)
            out = phi_mirror(_walk(neg, i, order, flags, memo))
        else:
            out = R.zero()
            for state, coeff in twist_coefficients(n, n - 1).items():
                nxt = cols[:j] + (state,) + cols[j + 1:]
                out = out + coeff * _walk(nxt, i + 1, order, flags, memo)
    memo[key] = out
    return out


def eval_pretzel_report(code, order=None) -> PretzelResult:
    """Evaluate N(P(code)); `order` permutes the column expansion order."""
    cols = tuple(PretzelCode(code))
    if order is None:
        order = tuple(range(len(cols)))
    elif sorted(order) != list(range(len(cols))):
        raise CodeError("order must be a permutation of the column indices")
    flags: set = set()
    value = _walk(cols, 0, tuple(order), flags, {})
    return PretzelResult(value, tuple(sorted(flags, key=str)))


@lru_cache(maxsize=4096)
def eval_pretzel(code) -> LaurentPoly:
    if not code:
        raise CodeError("empty pretzel tuple")
    return eval_pretzel_report(tuple(code)).value


def eval_pretzel_shuffled(code, rng: random.Random) -> LaurentPoly:
    order = list(range(len(code)))
    rng.shuffle(order)
    return eval_pretzel_report(code, order).value


def twist_knot_pretzel(n: int) -> PretzelCode:
    """P(2, 1, ..., 1) with n ones: the twist knot [2, n]."""
    if n < 1:
        raise ValueError("n must be positive")
    return PretzelCode((2,) + (1,) * n)
