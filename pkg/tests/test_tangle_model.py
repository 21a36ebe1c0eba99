import pytest
from hypothesis import given
from hypothesis import strategies as st

from cubicskein.ring import a, trivial_component
from cubicskein.tangle_model import (
    INF, BaseTangle, Closure, CodeError, ConwayCode, PretzelCode, TangleCombo, close_base,
    closure_from_text, closure_kind, code_from_json, format_conway, negate_code, parse_conway,
    parse_pretzel, reverse_code,
)

nonzero = st.integers(-9, 9).filter(bool)
int_codes = st.lists(nonzero, min_size=1, max_size=6).map(tuple)


def test_parse_examples():
    assert parse_conway("[3,2,-1,4]") == (3, 2, -1, 4)
    assert parse_conway("[inf]") == (INF,)
    assert parse_conway(" [ 0 , 5 ] ") == (0, 5)


@pytest.mark.parametrize("text, fragment", [
    ("[3,0,2]", "zero entry at index 2"),
    ("[3,inf]", "index 2"),
    ("3,2", "position 0"),
    ("[3,x]", "bad entry"),
    ("[3,2", "expected ']'"),
])
def test_parse_errors(text, fragment):
    with pytest.raises(CodeError, match=fragment):
        parse_conway(text)


def test_json_form():
    code = code_from_json('{"conway": ["inf", 2]}')
    assert code == (INF, 2)
    assert code.to_json() == {"conway": ["inf", 2]}
    assert PretzelCode((2, 1, -3, 1)).to_json() == {"pretzel": [2, 1, -3, 1]}
    with pytest.raises(CodeError):
        code_from_json({"conway": [1, 0]})


def test_closure_kind_follows_ledgered_convention():
    # odd length closes with the numerator, even with the denominator
    assert closure_kind(ConwayCode((3,))) is Closure.Numerator
    assert closure_kind(ConwayCode((3, 2, 1))) is Closure.Numerator
    assert closure_kind(ConwayCode((2, 2))) is Closure.Denominator


def test_closure_text():
    assert closure_from_text("num") is Closure.Numerator
    assert closure_from_text("D") is Closure.Denominator
    assert closure_from_text("auto") is None
    with pytest.raises(CodeError):
        closure_from_text("sideways")


def test_close_base_table():
    t = trivial_component()
    want = {
        (BaseTangle.Tminus1, Closure.Numerator): a ** -1 * t,
        (BaseTangle.Tminus1, Closure.Denominator): a * t,
        (BaseTangle.T0, Closure.Numerator): t * t,
        (BaseTangle.T0, Closure.Denominator): t,
        (BaseTangle.T1, Closure.Numerator): a * t,
        (BaseTangle.T1, Closure.Denominator): a ** -1 * t,
        (BaseTangle.Tinf, Closure.Numerator): t,
        (BaseTangle.Tinf, Closure.Denominator): t * t,
    }
    for (b, c), v in want.items():
        assert close_base(b, c) == v


def test_reverse_examples():
    assert reverse_code(ConwayCode((3, 2))) == ((-2, -3), 1)
    assert reverse_code(ConwayCode((3,))) == ((3,), 1)
    assert reverse_code(ConwayCode((1, 1))) == ((-1, -1), 1)
    assert reverse_code(ConwayCode((3, 2, 1)))[0] == (1, 2, 3)
    with pytest.raises(CodeError):
        reverse_code(ConwayCode((INF,)))


def test_negate_examples():
    assert negate_code(ConwayCode((2, 2))) == (-2, -2)
    assert negate_code(ConwayCode((3, -1))) == (-3, 1)
    with pytest.raises(CodeError):
        negate_code(())
    with pytest.raises(CodeError):
        negate_code(ConwayCode((INF,)))


def test_pretzel_grammar():
    assert parse_pretzel("P(2,1,-3,1)") == (2, 1, -3, 1)
    assert str(parse_pretzel(" P( 1, 1 ,1 )")) == "P(1,1,1)"
    for bad in ("(1,1)", "P(1,a)", "P()"):
        with pytest.raises(CodeError):
            parse_pretzel(bad)


def test_combo_drops_zero_coefficients():
    c = TangleCombo({BaseTangle.T1: a, BaseTangle.T0: a - a})
    assert dict(c.items()) == {BaseTangle.T1: a}
    assert (c + c)[BaseTangle.T1] == 2 * a
    assert c[BaseTangle.Tinf].is_zero()


@given(int_codes)
def test_reverse_twice_is_identity(code):
    code = ConwayCode(code)
    once = reverse_code(code)[0]
    assert reverse_code(once)[0] == code
    assert closure_kind(once) is closure_kind(code)


@given(int_codes)
def test_format_parse_roundtrip(code):
    text = format_conway(code)
    assert parse_conway(text) == code
    assert format_conway(parse_conway(text)) == text


@given(int_codes)
def test_negate_is_involution(code):
    assert negate_code(negate_code(ConwayCode(code))) == code
