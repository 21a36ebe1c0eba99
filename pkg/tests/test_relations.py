import pytest

from cubicskein.golden import golden_value
from cubicskein.relations import (
    KD, QUADRATIC_UNIT, SkeinCoeffs, catalog, catalog_entry, closed_formula,
    closed_formula_printed, closed_formula_quotient, conway_relation, cubic2_coeffs, cubic_coeffs,
    figure_eight_relation, hopf_pair, hopf_relation, kauffman_dubrovnik, kd_binf, kd_substitute,
    left_trefoil_relation, proportional, quadratic_hopf_relation, quadratic_relation_coeffs,
    quadratic_to_cubic, relation_between, six_three_relation, trefoil_relation,
    trivial_from_relation, trivial_knot_relation, trivial_knot_second, whitehead_relation,
)
from cubicskein.ring import (
    RingFraction, a, alpha_substitute, b0, b1, b2, b3, binf, exact_divide, frac_equal,
    phi_mirror, trivial_component,
)
from cubicskein.rta import eval_code

F = RingFraction


def test_hopf_pair():
    h_plus, h_minus = hopf_pair()
    assert F(h_plus) == golden_value("hopf_plus")
    assert F(h_minus) == golden_value("hopf_minus")
    # default closures: even length closes with the denominator
    assert h_plus == eval_code((-1, -1))
    assert h_minus == eval_code((1, 1))
    assert phi_mirror(h_plus) == h_minus


def test_relation_between_examples():
    assert relation_between((-1, -1), (1, 1)) == hopf_relation()
    assert F(hopf_relation()) == golden_value("hopf_relation")
    r41 = relation_between((2, 2), (-2, -2))
    assert r41 == figure_eight_relation()
    assert F(r41) == golden_value("figure_eight_relation")
    assert relation_between((3,), (3,)).is_zero()
    assert relation_between((2, 2), (2, 2), scale_a=a, scale_b=a).is_zero()


def test_figure_eight_quotient():
    q = exact_divide(figure_eight_relation(), hopf_relation())
    assert q == 1 - b0 ** -1 * b1 * b2 * b3 ** -1


def test_flype_relation_differs_from_left_trefoil_relation_by_hopf():
    flype = relation_between((2, -2), (-3,), scale_a=a)
    assert exact_divide(flype, hopf_relation()) is None
    assert exact_divide(flype - left_trefoil_relation(), hopf_relation()) is not None


def test_second_trivial_knot():
    t2 = trivial_knot_second()
    assert t2 == golden_value("trivial_knot_second")
    assert frac_equal(t2 - F(trivial_component()), trivial_knot_relation())
    lhs = F(b0 * b3 * hopf_relation())
    rhs = F(trivial_component() * (b0 * b1 - b2 * b3)) * trivial_knot_relation()
    assert frac_equal(lhs, rhs)


def test_cubic2():
    names = ("cubic2_D3", "cubic2_D2", "cubic2_D1", "cubic2_D0", "cubic2_Dinf")
    for c, name in zip(cubic2_coeffs().as_tuple(), names):
        assert F(c) == golden_value(name)
        assert not c.is_zero()
    assert frac_equal(trivial_from_relation(cubic2_coeffs()), trivial_knot_second())
    assert frac_equal(trivial_from_relation(cubic_coeffs()), F(trivial_component()))
    alpha = lambda rel: rel.map(alpha_substitute)
    assert proportional(alpha(cubic_coeffs()), alpha(cubic2_coeffs()))
    assert not proportional(cubic_coeffs(), cubic2_coeffs())


def test_quadratic_relation():
    q = quadratic_relation_coeffs()
    for c, name in zip(q.as_tuple()[1:], ("D2", "D1", "D0", "Dinf")):
        assert F(c) == golden_value("quadratic_" + name)
    diff = [y - x for x, y in zip(cubic_coeffs().as_tuple(), cubic2_coeffs().as_tuple())]
    assert diff == [QUADRATIC_UNIT * c for c in q.as_tuple()]
    assert all(alpha_substitute(c).is_zero() for c in q.as_tuple())


@pytest.mark.parametrize("eps", [1, -1])
def test_kauffman_dubrovnik_specialization(eps):
    av = KD.var("a")
    want = [KD.zero()] + list(kauffman_dubrovnik(eps))
    fixed = kd_binf(eps, corrected=True)
    cubic = [kd_substitute(c, eps, fixed) for c in cubic_coeffs().as_tuple()]
    quad = [kd_substitute(c, eps, fixed) * av ** -2 for c in quadratic_relation_coeffs().as_tuple()]
    assert cubic == want
    assert quad == want
    for printed in (None, kd_binf(eps)):
        assert all(kd_substitute(c, eps, printed).is_zero() for c in cubic2_coeffs().as_tuple())
    # the printed binf = eps a^-1 gets every slot but D_inf right
    printed = [kd_substitute(c, eps) for c in cubic_coeffs().as_tuple()]
    assert printed[:4] == want[:4]
    assert printed[4] == eps * av ** -1 != want[4]
    with pytest.raises(ValueError):
        kd_substitute(b3 ** -1, eps)


def test_quadratic_to_cubic():
    x, av = KD.var("x"), KD.var("a")
    for eps in (1, -1):
        c2, c1, c0, cinf = kauffman_dubrovnik(eps)
        s = 1 + x * x
        out = quadratic_to_cubic(c2, c1, c0, cinf, s)
        assert out == SkeinCoeffs(s, -s * x - 1, s * eps + x, KD.const(-eps),
                                  -eps * av ** -1 * x * (av ** -1 * s - 1))
        assert (out.c3 + s * out.c2 + s ** 2 * out.c1 + s ** 3 * out.c0).is_zero()
        assert quadratic_to_cubic(c2, c1, c0, cinf, av).cinf.is_zero()


def test_quadratic_hopf_relation():
    for eps in (1, -1):
        assert quadratic_hopf_relation(*kauffman_dubrovnik(eps)).is_zero()
    assert not quadratic_hopf_relation(b2, b1, b2, binf).is_zero()
    with pytest.raises(ZeroDivisionError):
        quadratic_hopf_relation(b2, b1, b0, b0 - b0)


def test_trefoil_relations():
    tr_plus, tr_minus = trefoil_relation(), left_trefoil_relation()
    assert exact_divide(tr_plus, hopf_relation()) is None
    assert exact_divide(hopf_relation(), tr_plus) is None
    assert b3 * tr_minus == a * b0 * tr_plus
    assert F(tr_plus) == golden_value("trefoil_relation")
    assert F(tr_minus) == golden_value("left_trefoil_relation")


def test_whitehead_and_six_three():
    wh = whitehead_relation()
    assert F(wh) == golden_value("whitehead_relation")
    assert six_three_relation() == b3 ** -1 * b2 * wh


def test_alpha_kills_relations():
    for p in (hopf_relation(), trivial_knot_relation().num, trefoil_relation(),
              left_trefoil_relation(), whitehead_relation()):
        assert alpha_substitute(p).is_zero()
    assert all(alpha_substitute(c).is_zero() for c in conway_relation().as_tuple())
    # both are multiples of R_Hopf-type differences and vanish as well
    assert alpha_substitute(figure_eight_relation()).is_zero()
    assert alpha_substitute(six_three_relation()).is_zero()


def test_conway_relation_matches_print():
    c = conway_relation()
    for coeff, name in zip(c.as_tuple()[1:], ("D2", "D1", "D0", "Dinf")):
        assert F(coeff) == golden_value("conway_" + name)
    assert c.c3.is_zero()
    # a^2 b0 b3^2 R_C has exactly the quadratic relation's coefficients
    q = quadratic_relation_coeffs()
    assert c.scale(a ** 2 * b0 * b3 ** 2) == q


def test_catalog():
    names = [r.name for r in catalog()]
    assert names == ["R_Hopf", "R_t", "R_tr+", "R_tr-", "R_4_1", "R_Wh", "R_C", "R_6_3"]
    assert catalog_entry("R_Hopf").value == F(hopf_relation())
    assert catalog_entry("R_C").coeffs == conway_relation()
    with pytest.raises(KeyError):
        catalog_entry("R_nope")
    for rel in catalog():
        assert rel.to_json()["name"] == rel.name


@pytest.mark.parametrize("variant", [1, 2, 3, 4])
def test_closed_formula_quotients(variant):
    for m in range(1, 9):
        for n in range(1, 9):
            assert closed_formula_quotient(variant, m, n) == closed_formula(variant, m, n), (m, n)


def test_closed_formula_printed_sign_at_one_one():
    # the printed right side of the first family is 1 at m = n = 1; the quotient is -1
    assert closed_formula_printed(1, 1, 1) == 1
    assert closed_formula_quotient(1, 1, 1) == -1
    with pytest.raises(ValueError):
        closed_formula(5, 1, 1)
