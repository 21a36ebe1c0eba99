"""Hypothesis strategies shared by the test modules."""
from hypothesis import strategies as st

from cubicskein.ring import R, LaurentPoly

_exp_inv = st.integers(-5, 5)
_exp_poly = st.integers(0, 5)

exponents = st.tuples(_exp_inv, _exp_inv, _exp_poly, _exp_poly, _exp_inv, _exp_inv)


@st.composite
def polys(draw, max_terms=12, max_coeff=20):
    terms = draw(st.dictionaries(exponents, st.integers(-max_coeff, max_coeff), max_size=max_terms))
    return LaurentPoly(R, terms)


@st.composite
def nonzero_polys(draw, max_terms=6):
    p = draw(polys(max_terms=max_terms))
    if p.is_zero():
        p = R.one()
    return p


@st.composite
def unit_monomials(draw):
    e = draw(st.tuples(_exp_inv, _exp_inv, st.just(0), st.just(0), _exp_inv, _exp_inv))
    return R.monomial(e, draw(st.sampled_from([1, -1])))
