import itertools
import random
from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cubicskein.colorings import (
    count_fox_colorings, determinant, diagram_from_code, fraction_of, is_prime, nullity_mod_p,
)
from cubicskein.tangle_model import INF, Closure, CodeError, ConwayCode, reverse_code

N, D = Closure.Numerator, Closure.Denominator
codes = st.lists(st.integers(-5, 5).filter(bool), min_size=1, max_size=4).map(tuple)


def brute_force(code, p, closure=None):
    """Count arc assignments satisfying every crossing relation."""
    sys_ = diagram_from_code(code, closure)
    return sum(
        all((2 * col[o] - col[u] - col[v]) % p == 0 for o, u, v in sys_.relations)
        for col in itertools.product(range(p), repeat=sys_.arcs)
    )


def test_diagram_examples():
    one = diagram_from_code((1,), D)
    assert one.crossings == 1 and one.arcs == 1
    tre = diagram_from_code((3,), N)
    assert tre.crossings == 3 and tre.arcs == 3
    assert diagram_from_code((2, 2), N).crossings == 4
    with pytest.raises(CodeError):
        diagram_from_code((INF,))


@pytest.mark.parametrize("p", [3, 5, 7])
def test_unknot(p):
    for cl in (N, D):
        assert count_fox_colorings((1,), p, cl) == p


def test_trefoil():
    assert count_fox_colorings((3,), 3, N) == 9 == brute_force((3,), 3, N)
    assert count_fox_colorings((3,), 7, N) == 7 == brute_force((3,), 7, N)


@pytest.mark.parametrize("code", [(2,), (4,), (2, 2), (2, -2), (3, 1), (1, 1, 1), (2, 1, 2)])
@pytest.mark.parametrize("p", [3, 5])
def test_against_brute_force(code, p):
    for cl in (N, D):
        assert count_fox_colorings(code, p, cl) == brute_force(code, p, cl)


def test_non_prime_rejected():
    for p in (1, 4, 9, 2.5):
        with pytest.raises(ValueError):
            count_fox_colorings((3,), p)
    assert [q for q in range(20) if is_prime(q)] == [2, 3, 5, 7, 11, 13, 17, 19]


def test_nullity():
    assert nullity_mod_p([[1, 2], [2, 4]], 2, 5) == 1
    assert nullity_mod_p([[1, 0], [0, 1]], 2, 3) == 0
    assert nullity_mod_p([], 3, 7) == 3


def test_fraction_and_determinant_examples():
    # vertical twists act on the denominator: [2,2] is 2/5, its D closure the figure-eight
    assert fraction_of((2, 2)) == (2, 5)
    assert determinant((2, 2), D) == 5
    assert determinant((2, -2), D) == 3
    assert determinant((3,), N) == 3
    assert determinant((2,), N) == 2
    assert determinant((0,), N) == 0          # two split unknots


@given(codes)
def test_determinant_is_continued_fraction(code):
    num, den = fraction_of(code)
    assert determinant(code, N) == abs(num)
    assert determinant(code, D) == abs(den)


@given(codes, st.sampled_from([3, 5, 7]))
def test_count_from_determinant(code, p):
    # a two-bridge link has col_p = p * gcd(p, det) (p^2 for the split unlink)
    det = determinant(code)
    want = p * p if det == 0 else p * gcd(p, det)
    assert count_fox_colorings(code, p) == want


@given(codes, st.sampled_from([3, 5, 7]))
def test_positive_power_of_p(code, p):
    c = count_fox_colorings(code, p)
    while c % p == 0 and c > 1:
        c //= p
    assert c == 1 and count_fox_colorings(code, p) >= p


@given(codes, st.sampled_from([3, 5, 7]))
def test_reverse_code_invariance(code, p):
    assert count_fox_colorings(code, p) == count_fox_colorings(reverse_code(ConwayCode(code))[0], p)


def test_seven_move_on_head():
    rng = random.Random(11)
    for _ in range(50):
        code = [rng.choice([-4, -3, -2, -1, 1, 2, 3, 4]) for _ in range(rng.randint(1, 4))]
        moved = [code[0] + 7] + code[1:]
        assert count_fox_colorings(moved, 7) == count_fox_colorings(code, 7), code
