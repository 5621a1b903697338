from itertools import combinations_with_replacement

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st
from worked_example import A, A_INNER, B, B_INNER, P_ORIGIN

from stringye.algebra import BiPoly, StringyRational
from stringye.brieskorn import (
    Classification,
    analyze,
    compute_family_s,
    contribution,
    format_family,
    fundamental_sum,
    fundamental_vectors,
    g_value,
    p_polynomials,
    sign_normal_form,
)
from stringye.errors import DimensionLimitExceeded, InvalidExponent, NotCanonical

q = BiPoly.q()

STRICTLY_CANONICAL = [
    exponents
    for d in range(2, 6)
    for exponents in combinations_with_replacement(range(2, 7), d)
    if analyze(exponents).excess == 1
]

CANONICAL_WITH_LARGER_EXCESS = [
    exponents
    for d in range(2, 6)
    for exponents in combinations_with_replacement(range(2, 7), d)
    if analyze(exponents).excess >= 2
]

exponent_lists = st.lists(st.integers(2, 6), min_size=2, max_size=5)


def test_analyze_origin_point():
    data = analyze((5, 5, 6, 6, 6, 6, 6))
    assert data.k == 30
    assert data.alpha == (6, 6, 5, 5, 5, 5, 5)
    assert data.sigma == 37
    assert data.excess == 7
    assert data.classification is Classification.CANONICAL_SIGMA_MINUS_K_AT_LEAST_2


def test_classification():
    assert analyze((2, 2, 2)).classification is Classification.STRICTLY_CANONICAL
    assert analyze((3, 3, 3)).classification is Classification.NOT_CANONICAL
    assert not analyze((3, 3, 3)).is_canonical


def test_analyze_rejects_bad_input():
    with pytest.raises(InvalidExponent):
        analyze(())
    with pytest.raises(InvalidExponent):
        analyze((1, 2, 2))
    with pytest.raises(DimensionLimitExceeded):
        analyze((2,) * 13)
    assert analyze((2,) * 13, max_variables=13).d == 13


def test_family_s():
    family = compute_family_s((6, 6, 4, 3, 3))
    assert family.members == (
        frozenset(),
        frozenset({3}),
        frozenset({4, 5}),
        frozenset({3, 4, 5}),
        frozenset({1, 2, 4, 5}),
    )
    assert format_family(family) == "{{}, {3}, {4,5}, {3,4,5}, {1,2,4,5}}"
    assert {1, 2} not in family


def test_family_s_of_the_origin_point():
    family = compute_family_s((6, 6, 5, 5, 5, 5, 5))
    assert family.members == (frozenset(), frozenset({1, 2}), frozenset({3, 4, 5, 6, 7}))


def test_g_value():
    alpha = (6, 6, 4, 3, 3)
    assert g_value(alpha, frozenset()) == 1
    assert g_value(alpha, frozenset({4, 5})) == 2
    assert g_value(alpha, frozenset({1, 2, 3, 4})) == 3


def test_p_polynomials_of_the_origin_point():
    p_values = p_polynomials(analyze((5, 5, 6, 6, 6, 6, 6)))
    nonzero = {subset: p.to_bipoly() for subset, p in p_values.items() if p}
    assert nonzero == P_ORIGIN


def test_contributions_of_the_worked_example():
    assert contribution((5, 5, 6, 6, 6, 6, 6)).cross_equal(A)
    assert contribution((2, 2, 6, 6, 6, 6, 6)).cross_equal(B)


def test_contribution_of_a1():
    c = contribution((2, 2, 2))
    assert c.cross_equal(q + 1)
    assert c.limit_at_one() == 2


@pytest.mark.parametrize(
    "exponents, components",
    [((2, 2, 2), 1), ((2, 2, 4), 3), ((2, 2, 6), 5), ((2, 3, 3), 4), ((2, 3, 4), 6), ((2, 3, 5), 8)],
)
def test_surface_rational_double_points(exponents, components):
    # crepant resolution: the contribution is the exceptional tree of rational curves
    assert contribution(exponents).cross_equal(components * q + 1)
    form = sign_normal_form(exponents)
    assert form.denominator_degree == 0
    assert form.polynomial == components * q + 1


def test_not_canonical():
    with pytest.raises(NotCanonical):
        contribution((3, 3, 3))
    with pytest.raises(NotCanonical):
        p_polynomials(analyze((6, 6, 6)))


def test_sign_normal_form_of_the_worked_example():
    form = sign_normal_form((5, 5, 6, 6, 6, 6, 6))
    assert form.polynomial == A_INNER
    assert form.denominator_degree == 6
    assert sign_normal_form((2, 2, 6, 6, 6, 6, 6)).polynomial == B_INNER


def test_fundamental_vectors_need_a_proper_subset():
    with pytest.raises(ValueError):
        fundamental_vectors(analyze((2, 2, 2)), {1, 2, 3})


@settings(max_examples=200, deadline=None)
@given(exponent_lists)
def test_p_polynomials_are_nonnegative_and_supported_on_the_family(exponents):
    data = analyze(exponents)
    assume(data.is_canonical)
    family = compute_family_s(data.alpha)
    for subset, p in p_polynomials(data).items():
        assert p.has_nonnegative_coefficients()
        assert bool(p) == (subset in family)


@settings(max_examples=200, deadline=None)
@given(exponent_lists, st.data())
def test_fundamental_vectors_satisfy_the_lower_bound(exponents, data):
    info = analyze(exponents)
    assume(info.is_canonical)
    subset = data.draw(st.sets(st.integers(1, info.d), max_size=info.d - 1))
    for vector in fundamental_vectors(info, subset):
        assert info.excess + len(subset) - vector.sigma + vector.m >= 0
    total = fundamental_sum(info, subset)
    assert total.min_exponent() >= 0
    assert total.has_nonnegative_coefficients()


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(STRICTLY_CANONICAL))
def test_strictly_canonical_contributions_are_sign_alternating_polynomials(exponents):
    c = contribution(exponents)
    assert c.as_polynomial() is not None
    form = sign_normal_form(exponents)
    assert form.polynomial == c.as_polynomial()
    for (i, j), coefficient in form.polynomial.terms.items():
        assert (-1) ** (i + j) * coefficient >= 0


@settings(max_examples=200, deadline=None)
@given(exponent_lists, st.data())
def test_fundamental_sums_grow_with_the_subset(exponents, data):
    info = analyze(exponents)
    assume(info.is_canonical)
    subset = data.draw(st.sets(st.integers(1, info.d), max_size=info.d - 1))
    smaller = data.draw(st.sets(st.sampled_from(sorted(subset)), max_size=len(subset)) if subset else st.just(set()))
    difference = fundamental_sum(info, subset) - fundamental_sum(info, smaller)
    assert difference.has_nonnegative_coefficients()


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(CANONICAL_WITH_LARGER_EXCESS))
def test_sign_normal_form_alternates_for_larger_excess(exponents):
    form = sign_normal_form(exponents)
    assert form.denominator_degree == analyze(exponents).excess - 1
    for (i, j), coefficient in form.polynomial.terms.items():
        assert (-1) ** (i + j) * coefficient >= 0
    denominator = StringyRational(form.denominator.to_bipoly())
    assert (contribution(exponents) * denominator).cross_equal(form.polynomial)
