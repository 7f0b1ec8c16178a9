import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fincat import bundle_of, cyclic_group, indiscrete_groupoid
from oracle import brute_force_pullback
from spans import (
    ConeError,
    FiniteMap,
    MismatchedObjSet,
    ObjSet,
    SpanError,
    associator,
    induced_map,
    left_unitor,
    preserves_legs,
    pullback,
    right_unitor,
    span_product,
    trivial_span,
)


@st.composite
def cospans(draw):
    b = draw(st.integers(min_value=1, max_value=4))
    f = draw(st.lists(st.integers(0, b - 1), max_size=6))
    g = draw(st.lists(st.integers(0, b - 1), max_size=6))
    return FiniteMap(tuple(f), b), FiniteMap(tuple(g), b)


@given(cospans())
def test_pullback_matches_brute_force(cospan):
    f, g = cospan
    result = pullback(f, g)
    assert list(result.pairs) == brute_force_pullback(f, g)
    for k, (a, c) in enumerate(result.pairs):
        assert result.proj1(k) == a and result.proj2(k) == c


@given(cospans())
@settings(max_examples=50)
def test_induced_map_is_the_identity_on_the_pullback_itself(cospan):
    f, g = cospan
    result = pullback(f, g)
    assert induced_map(result, result.proj1, result.proj2) == FiniteMap.identity(result.size)


def test_empty_pullback_is_valid():
    result = pullback(FiniteMap((0, 0), 2), FiniteMap((1,), 2))
    assert result.size == 0


def test_non_commuting_cone_is_rejected():
    result = pullback(FiniteMap((0, 1), 2), FiniteMap((0, 1), 2))
    with pytest.raises(ConeError):
        induced_map(result, FiniteMap((0,), 2), FiniteMap((1,), 2))


def test_map_values_are_range_checked():
    with pytest.raises(SpanError):
        FiniteMap((0, 3), 2)


def test_duplicate_object_labels_are_rejected():
    with pytest.raises(SpanError):
        ObjSet(("x", "x"))


def test_span_product_of_a_category_with_itself_lists_composable_pairs():
    c = indiscrete_groupoid(("0", "1"))
    product = span_product(c.span(), c.span())
    assert product.size == len(list(c.composable_pairs()))
    for k, (g, f) in enumerate(product.provenance):
        assert c.src[g] == c.tgt[f]
        assert product.left[k] == c.tgt[g] and product.right[k] == c.src[f]


def test_span_product_needs_common_objects():
    with pytest.raises(MismatchedObjSet):
        span_product(trivial_span(ObjSet(("a",))), trivial_span(ObjSet(("b",))))


def test_associator_and_unitors_are_span_isomorphisms():
    p = indiscrete_groupoid(("0", "1")).span()
    q = bundle_of(("0", "1"), [cyclic_group(2), cyclic_group(3)]).span()
    alpha = associator(p, q, p)
    assert alpha.is_bijective()
    assert preserves_legs(alpha, span_product(span_product(p, q), p), span_product(p, span_product(q, p)))

    unit = trivial_span(p.objects)
    assert preserves_legs(left_unitor(p), span_product(unit, p), p)
    assert preserves_legs(right_unitor(p), span_product(p, unit), p)
    assert left_unitor(p).is_bijective() and right_unitor(p).is_bijective()
