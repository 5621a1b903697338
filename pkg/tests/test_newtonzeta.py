import math
from functools import reduce
from itertools import combinations_with_replacement

import pytest
import sympy
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from stringye.algebra import BiPoly, StringyRational
from stringye.brieskorn import analyze, contribution, fundamental_vectors
from stringye.errors import DependentGenerators, HigherOrderPole, InvalidCone, NotCanonical
from stringye.newtonzeta import (
    SimplicialCone,
    SupportSet,
    ZetaExpression,
    ZetaTerm,
    diagonal_cone,
    diagonal_faces,
    face_sum_contribution,
    fundamental_set_enumerate,
    l_tau_specialized,
    local_hodge_zeta_diagonal,
    m_value,
    residue_at_q,
    residue_contribution,
    s_delta_specialized,
    scan_fundamental_set,
    substitute_t,
)

q = BiPoly.q()

CANONICAL = [
    exponents
    for d in range(2, 6)
    for exponents in combinations_with_replacement(range(2, 7), d)
    if analyze(exponents).is_canonical
]


@pytest.mark.parametrize("exponents", CANONICAL, ids=lambda e: ",".join(map(str, e)))
def test_three_routes_to_the_contribution_agree(exponents):
    expected = contribution(exponents)
    assert face_sum_contribution(exponents).cross_equal(expected)
    assert residue_at_q(local_hodge_zeta_diagonal(exponents)).cross_equal(expected)


def test_face_sum_of_a1():
    assert face_sum_contribution((2, 2, 2)).cross_equal(q + 1)
    with pytest.raises(NotCanonical):
        face_sum_contribution((3, 3, 3))


def test_support_and_m_value():
    support = SupportSet.diagonal((2, 3))
    assert support.points == ((2, 0), (0, 3))
    assert m_value((1, 2), support) == 2
    assert m_value((3, 1), support) == 3
    with pytest.raises(InvalidCone):
        m_value((-1, 1), support)
    with pytest.raises(InvalidCone):
        SupportSet(((1, 0), (1,)))


def test_cone_validation():
    with pytest.raises(InvalidCone):
        SimplicialCone(((2, 2),))
    with pytest.raises(InvalidCone):
        SimplicialCone(((1, -1),))
    with pytest.raises(DependentGenerators):
        SimplicialCone(((1, 0), (1, 0)))
    with pytest.raises(DependentGenerators):
        SimplicialCone(((1, 0), (0, 1), (1, 1)))


def test_fundamental_set_of_a_small_cone():
    cone = SimplicialCone(((1, 2), (2, 1)))
    assert fundamental_set_enumerate(cone) == [(1, 1), (2, 2), (3, 3)]
    assert scan_fundamental_set(cone) == [(1, 1), (2, 2), (3, 3)]


def test_diagonal_faces():
    faces = diagonal_faces((2, 3, 4))
    assert len(faces) == 7
    assert faces[0].subset == frozenset()
    assert faces[0].dimension == 2
    assert faces[-1].variables == (1,)
    assert diagonal_cone((2, 3, 4), {1}).generators == ((6, 4, 3), (1, 0, 0))


vectors = st.lists(st.integers(0, 2), min_size=3, max_size=3)


@settings(max_examples=200, deadline=None)
@given(st.lists(vectors, min_size=3, max_size=3))
def test_fundamental_set_matches_box_scan_and_determinant(raw):
    generators = []
    for vector in raw:
        g = reduce(math.gcd, vector, 0)
        assume(g)
        generators.append(tuple(x // g for x in vector))
    assume(sympy.Matrix(generators).det() != 0)
    cone = SimplicialCone(tuple(generators))
    points = fundamental_set_enumerate(cone)
    assert points == scan_fundamental_set(cone)
    assert len(points) == abs(sympy.Matrix(generators).det())


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(2, 6), min_size=2, max_size=5), st.data())
def test_fundamental_set_of_a_diagonal_cone_matches_the_closed_form(exponents, data):
    info = analyze(exponents)
    subset = data.draw(st.sets(st.integers(1, info.d), max_size=info.d - 1))
    expected = sorted(vector.vector for vector in fundamental_vectors(info, subset))
    assert fundamental_set_enumerate(diagonal_cone(exponents, subset)) == expected


def test_s_delta_of_a_ray():
    cone = SimplicialCone(((1, 1),))
    z = s_delta_specialized(cone, SupportSet.diagonal((2, 2)))
    (term,) = z.terms
    assert term.numerator == {(-2, -2, 2): 1}
    assert term.factors == ((-2, 2),)


def test_l_tau_collapses_at_t_equal_one():
    h_n = 2 * (q - 1)
    assert substitute_t(l_tau_specialized(h_n, 3), 0).cross_equal((q - 1) ** 3)


def test_substitute_t():
    z = ZetaExpression((ZetaTerm({(0, 0, 0): 1}, ((-1, 1),)),))
    assert substitute_t(z, 0).cross_equal(StringyRational(1, (1,), 1))
    with pytest.raises(ZeroDivisionError):
        substitute_t(z, 1)
    with pytest.raises(ValueError):
        substitute_t(z, -1)


def test_residue_rejects_double_poles():
    z = ZetaExpression((ZetaTerm({(0, 0, 0): 1}, ((-1, 1), (-1, 1))),))
    with pytest.raises(HigherOrderPole):
        residue_at_q(z)


def test_zeta_term_validation():
    with pytest.raises(ValueError):
        ZetaTerm({(0, 0, 0): 1}, ((0, 0),))
    with pytest.raises(ValueError):
        ZetaTerm({(0, 0, 0): 1}, ((1, -1),))
    assert ZetaTerm({(0, 0, 0): 0}).numerator == {}


def test_local_zeta_json_is_sorted():
    document = local_hodge_zeta_diagonal((2, 2, 2)).to_json()
    assert document
    for term in document:
        keys = [(m["t"], m["i"] + m["j"], m["i"]) for m in term["numerator"]]
        assert keys == sorted(keys, reverse=True)


def test_residue_contribution_requires_a_canonical_singularity():
    assert residue_contribution((2, 2, 2)).cross_equal(q + 1)
    with pytest.raises(NotCanonical):
        residue_contribution((2, 3))
    with pytest.raises(NotCanonical):
        residue_contribution(analyze((3, 3, 3)))


def test_zeta_routes_take_the_analysis_as_given(monkeypatch):
    data = analyze((2, 2, 6, 6))
    expected = contribution(data)

    def refuse(*args, **kwargs):
        raise AssertionError("exponents analyzed again")

    monkeypatch.setattr("stringye.brieskorn.analyze", refuse)
    assert face_sum_contribution(data).cross_equal(expected)
    assert residue_contribution(data).cross_equal(expected)
    assert local_hodge_zeta_diagonal(data).terms


def test_residue_without_pole_at_q_is_zero():
    assert residue_at_q(ZetaExpression()).is_zero()
    z = ZetaExpression((ZetaTerm({(0, 0, 1): 1}, ((-1, 2),)), ZetaTerm({(1, 1, 0): 3}, ((2, 0),))))
    assert residue_at_q(z).is_zero()


def one_over_one_minus(c):
    if c > 0:
        return StringyRational(-1, (c,))
    return StringyRational(1, (-c,), -c)


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(2, 4), min_size=2, max_size=3), st.integers(2, 3), st.data())
def test_s_delta_at_higher_powers_of_q(exponents, s, data):
    support = SupportSet.diagonal(exponents)
    face = data.draw(st.sampled_from(diagonal_faces(exponents)))
    cone = face.cone
    # sum over the fundamental set of q^(-sigma + s m), over prod (1 - q^(-sigma + s m)) on the generators
    expected = StringyRational(0)
    for point in scan_fundamental_set(cone):
        expected = expected + StringyRational(1, (), -sum(point) + s * m_value(point, support))
    for gamma in cone.generators:
        expected = expected * one_over_one_minus(-sum(gamma) + s * m_value(gamma, support))
    assert substitute_t(s_delta_specialized(cone, support), s).cross_equal(expected)
