import pytest

from fincat import (
    UNDEFINED,
    AssociativityViolation,
    BadComposabilityDomain,
    CompositionNotPreserved,
    IdentityNotPreserved,
    MissingIdentity,
    NotComposable,
    NotGroupoid,
    RawCategoryData,
    UnitLawViolation,
    UnknownName,
    alternating_group,
    bundle_of,
    compose_functors,
    cyclic_group,
    fibre_product,
    groupoid_inverses,
    identity_functor,
    indiscrete_groupoid,
    is_bundle,
    klein_four,
    semilattice,
    symmetric_group,
    validate_category,
    validate_functor,
)


def z2_raw(**overrides) -> RawCategoryData:
    data = {
        "objects": ("*",),
        "morphisms": (("1", "*", "*"), ("g", "*", "*")),
        "identities": ("1",),
        "compose": (("1", "1", "1"), ("1", "g", "g"), ("g", "1", "g"), ("g", "g", "1")),
    }
    data.update(overrides)
    return RawCategoryData(**data)


def test_validate_category_accepts_z2(z2):
    assert validate_category(z2_raw()) == z2


def test_unknown_name_in_compose():
    with pytest.raises(UnknownName):
        validate_category(z2_raw(compose=(("1", "1", "1"), ("1", "h", "g"))))


def test_identity_that_is_not_a_unit():
    with pytest.raises(UnitLawViolation):
        validate_category(z2_raw(identities=("g",)))


def test_missing_composite_is_a_composability_error():
    with pytest.raises(BadComposabilityDomain) as info:
        validate_category(z2_raw(compose=(("1", "1", "1"), ("1", "g", "g"), ("g", "1", "g"))))
    assert info.value.witness == (1, 1)


def test_identity_list_must_cover_every_object():
    with pytest.raises(MissingIdentity):
        validate_category(z2_raw(identities=()))


def test_non_associative_table():
    # a·b = b·a = 1, a·a = b·b = a is unital but not associative
    names = ("1", "a", "b")
    table = {("a", "a"): "a", ("a", "b"): "1", ("b", "a"): "1", ("b", "b"): "a"}
    compose = [(g, f, f if g == "1" else g if f == "1" else table[(g, f)]) for g in names for f in names]
    raw = RawCategoryData(("*",), tuple((n, "*", "*") for n in names), ("1",), tuple(compose))
    with pytest.raises(AssociativityViolation):
        validate_category(raw)


def test_permutation_groups():
    s3, a3 = symmetric_group(3), alternating_group(3)
    assert s3.names == ("()", "(12)", "(123)", "(13)", "(132)", "(23)")
    assert a3.names == ("()", "(123)", "(132)")
    # (12)∘(123): apply (123) first
    assert s3.names[s3.compose(s3.morphism("(12)"), s3.morphism("(123)"))] == "(23)"


def test_compose_all_is_right_to_left():
    s3 = symmetric_group(3)
    path = [s3.morphism(n) for n in ("(12)", "(13)", "(23)")]
    assert s3.compose_all(path) == s3.compose(path[0], s3.compose(path[1], path[2]))


def test_indiscrete_groupoid_composition_and_hom():
    c = indiscrete_groupoid(("0", "1"))
    assert c.size == 4
    assert c.names[c.compose(c.morphism("0->1"), c.morphism("1->0"))] == "1->1"
    assert c.hom(0, 1) == [c.morphism("0->1")]
    with pytest.raises(NotComposable):
        c.compose(c.morphism("0->1"), c.morphism("0->1"))
    assert c.table[c.morphism("0->1")][c.morphism("0->1")] == UNDEFINED


def test_bundle_and_groupoid_flags():
    bundle = bundle_of(("0", "1"), [cyclic_group(2), cyclic_group(2)])
    assert is_bundle(bundle)
    assert not is_bundle(indiscrete_groupoid(("0", "1")))
    inv = groupoid_inverses(klein_four())
    assert all(inv(f) == f for f in klein_four().morphisms)
    with pytest.raises(NotGroupoid) as info:
        groupoid_inverses(semilattice())
    assert info.value.witness == (semilattice().morphism("a"),)


def test_functor_validation():
    s3, z2 = symmetric_group(3), cyclic_group(2)
    sign = [z2.morphism("1" if name in ("()", "(123)", "(132)") else "g") for name in s3.names]
    functor = validate_functor(sign, s3, z2)
    assert compose_functors(identity_functor(z2), functor) == functor

    with pytest.raises(IdentityNotPreserved):
        validate_functor([1] * s3.size, s3, z2)
    constant = [0] + [1] * (s3.size - 1)
    with pytest.raises(CompositionNotPreserved):
        validate_functor(constant, s3, z2)


def test_fibre_product_of_identity_functors_is_the_diagonal(z2):
    ident = identity_functor(z2)
    square = fibre_product(ident, ident)
    assert square.pairs == ((0, 0), (1, 1))
    assert square.category.size == 2
    assert square.proj1.table == (0, 1) and square.proj2.table == (0, 1)
