"""Finite parity groupoids: builders, validation, components, quotients."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.exceptions import GroupoidError, InvalidActionError
from src.models import FiniteGroup, FiniteGroupoid, GroupAction, Permutation, Sign
from src.services.generator import SpanGenerator
from src.services.group_service import (
    catalog_group,
    cyclic_group,
    homomorphisms,
    parity_homomorphisms,
    permutation_of,
    sign_parity,
    symmetric_group,
    validate_group,
)
from src.services.groupoid_service import (
    automorphism_group,
    classifying_groupoid,
    codiscrete,
    discrete,
    disjoint_sum,
    empty,
    enumerate_orientations,
    full_subgroupoid,
    homotopy_cardinality,
    orientable_locus,
    pi0,
    point,
    star_product,
    validate_action,
    validate_groupoid,
    weak_quotient,
)


def _shape(g):
    return sorted((len(c.members), c.aut_order, c.orientable) for c in pi0(g))


# ========== Builders and validation ==========

def test_discrete_groupoid(two_points):
    assert two_points.objects == ("x", "y")
    assert validate_groupoid(two_points).ok
    assert [c.representative for c in pi0(two_points)] == ["x", "y"]
    assert homotopy_cardinality(two_points) == 2


def test_empty_and_point():
    assert empty().is_empty()
    assert homotopy_cardinality(empty()) == 0
    assert homotopy_cardinality(point()) == 1
    assert validate_groupoid(point()).ok


@pytest.mark.parametrize("name, order", [("1", 1), ("C2", 2), ("C3", 3), ("S3", 6)])
def test_classifying_groupoid_cardinality(name, order):
    bg = classifying_groupoid(catalog_group(name))
    assert validate_groupoid(bg).ok
    assert homotopy_cardinality(bg) == Fraction(1, order)
    (comp,) = pi0(bg)
    assert comp.aut_order == order
    assert comp.orientable


def test_odd_classifying_groupoid_is_not_orientable(odd_bc2):
    (comp,) = pi0(odd_bc2)
    assert not comp.orientable
    assert enumerate_orientations(odd_bc2) is None
    locus, reps = orientable_locus(odd_bc2)
    assert locus.is_empty()
    assert reps == {}


def test_sign_parity_of_s3_is_a_valid_parity():
    s3 = symmetric_group(3)
    bg = classifying_groupoid(s3, sign_parity(s3))
    assert validate_groupoid(bg).ok
    assert not pi0(bg)[0].orientable


def test_codiscrete_with_twist_is_orientable(twisted_pair):
    assert validate_groupoid(twisted_pair).ok
    assert twisted_pair.parity["u>v"] is Sign.MINUS
    (comp,) = pi0(twisted_pair)
    assert comp.members == ("u", "v")
    assert comp.orientable
    count, omega = enumerate_orientations(twisted_pair)
    assert count == 2
    assert omega == {"u": Sign.PLUS, "v": Sign.MINUS}


def test_orientations_of_a_discrete_set(two_points):
    count, omega = enumerate_orientations(two_points)
    assert count == 4
    assert set(omega.values()) == {Sign.PLUS}


def test_reserved_characters_are_rejected_by_builders():
    with pytest.raises(GroupoidError, match="reserved character"):
        discrete(["a", "a,b"])
    with pytest.raises(GroupoidError, match="reserved character"):
        codiscrete(["u", "v>w"])
    with pytest.raises(GroupoidError, match="non-empty"):
        discrete(["a", ""])
    bad = FiniteGroup("bad", ("[e]",), {("[e]", "[e]"): "[e]"})
    with pytest.raises(GroupoidError, match="group element"):
        classifying_groupoid(bad)


def test_non_associative_table_is_reported():
    morphisms = {"e": ("*", "*"), "a": ("*", "*"), "b": ("*", "*")}
    table = {
        ("e", "e"): "e", ("e", "a"): "a", ("a", "e"): "a", ("e", "b"): "b", ("b", "e"): "b",
        ("a", "a"): "b", ("a", "b"): "a", ("b", "a"): "b", ("b", "b"): "a",
    }
    g = FiniteGroupoid(("*",), morphisms, {"*": "e"}, table, {})
    report = validate_groupoid(g, "bad")
    assert not report.ok
    assert any(v.startswith("associativity fails") for v in report.violations)
    assert str(report).startswith("✗ bad")


def test_missing_composite_is_reported():
    morphisms = {"id": ("*", "*"), "a": ("*", "*")}
    table = {("id", "id"): "id", ("a", "id"): "a", ("id", "a"): "a"}
    g = FiniteGroupoid(("*",), morphisms, {"*": "id"}, table, {"id": "id", "a": "a"})
    report = validate_groupoid(g)
    assert report.violations == ["composition totality: a ∘ a missing"]


def test_parity_must_be_multiplicative():
    bg = classifying_groupoid(cyclic_group(3), {"a": -1, "a2": -1})
    report = validate_groupoid(bg)
    assert any("parity multiplicativity" in v for v in report.violations)


# ========== Groups ==========

def test_catalog_groups_are_groups():
    for name in ("1", "C2", "C3", "S3"):
        assert validate_group(catalog_group(name)).ok
    with pytest.raises(ValueError):
        catalog_group("D4")


def test_homomorphism_counts():
    c2, c3, s3 = catalog_group("C2"), catalog_group("C3"), catalog_group("S3")
    assert len(homomorphisms(c2, c2)) == 2
    assert len(homomorphisms(c3, c2)) == 1
    assert len(homomorphisms(c2, s3)) == 4
    assert len(homomorphisms(c3, s3)) == 3


def test_parity_homomorphisms_trivial_first():
    maps = parity_homomorphisms(catalog_group("S3"))
    assert len(maps) == 2
    assert set(maps[0].values()) == {Sign.PLUS}
    assert maps[1] == sign_parity(catalog_group("S3"))
    assert len(parity_homomorphisms(catalog_group("C3"))) == 1


def test_symmetric_group_names_carry_their_degree():
    s3 = catalog_group("S3")
    assert s3.permutation_degree == 3
    assert "p1.0.2" in s3.elements
    assert permutation_of("p1.0.2") == Permutation((1, 0, 2))
    assert permutation_of("p10.0.1.2.3.4.5.6.7.8.9")(0) == 10
    assert permutation_of("p") == Permutation(())
    assert cyclic_group(2).permutation_degree is None
    with pytest.raises(ValueError, match="not a permutation group"):
        sign_parity(cyclic_group(2))


def test_automorphism_group(twisted_pair):
    aut = automorphism_group(classifying_groupoid(catalog_group("S3")), "*")
    assert aut.order == 6
    assert automorphism_group(twisted_pair, "u").order == 1


# ========== Sums and products ==========

def test_disjoint_sum(two_points, odd_bc2):
    total = disjoint_sum(two_points, odd_bc2)
    assert total.objects == ("0/x", "0/y", "1/*")
    assert validate_groupoid(total).ok
    assert homotopy_cardinality(total) == Fraction(5, 2)
    assert total.parity["1/a"] is Sign.MINUS


def test_star_product(odd_bc2):
    square = star_product(odd_bc2, odd_bc2)
    assert square.objects == ("(*,*)",)
    assert len(square.morphisms) == 4
    assert square.parity["(a,a)"] is Sign.PLUS
    assert square.parity["(a,e)"] is Sign.MINUS
    assert validate_groupoid(square).ok
    assert homotopy_cardinality(square) == Fraction(1, 4)


def test_full_subgroupoid(twisted_pair):
    sub = full_subgroupoid(twisted_pair, ["v"])
    assert sub.objects == ("v",)
    assert list(sub.morphisms) == ["v>v"]
    assert validate_groupoid(sub).ok


@settings(max_examples=20, deadline=None)
@given(st.integers(min_value=0, max_value=10**6))
def test_star_product_laws(seed):
    gen = SpanGenerator(seed)
    a = gen.random_foot(2, max_size=2, groups=("1", "C2", "C3"))
    b = gen.random_foot(2, max_size=2, groups=("1", "C2", "C3"))
    c = gen.random_foot(2, max_size=1, groups=("1", "C2"))
    ab = star_product(a, b)
    assert homotopy_cardinality(ab) == homotopy_cardinality(a) * homotopy_cardinality(b)
    assert _shape(ab) == _shape(star_product(b, a))
    assert _shape(star_product(ab, c)) == _shape(star_product(a, star_product(b, c)))
    assert _shape(star_product(c, point())) == _shape(c)


@settings(max_examples=15, deadline=None)
@given(st.integers(min_value=0, max_value=10**6))
def test_star_powers_multiply_cardinality(seed):
    x = SpanGenerator(seed).random_foot(2, max_size=1, groups=("1", "C2", "C3"))
    power = x
    for k in (2, 3):
        power = star_product(power, x)
        assert homotopy_cardinality(power) == homotopy_cardinality(x) ** k


# ========== Actions and weak quotients ==========

def test_free_action_quotient(group_actions):
    action = group_actions.actions["right_multiplication"]
    assert validate_action(action).ok
    quotient = weak_quotient(action)
    assert validate_groupoid(quotient).ok
    assert len(quotient.components) == 1
    assert homotopy_cardinality(quotient) == 1


def test_odd_two_cell_makes_quotient_non_orientable(group_actions):
    quotient = weak_quotient(group_actions.actions["odd_point"])
    assert validate_groupoid(quotient).ok
    (comp,) = pi0(quotient)
    assert comp.aut_order == 2
    assert not comp.orientable


def test_action_law_violation_is_rejected():
    c2 = catalog_group("C2")
    target = discrete(["e", "a"])
    on_objects = {("e", "e"): "e", ("a", "e"): "a", ("e", "a"): "e", ("a", "a"): "e"}
    on_morphisms = {(f"id_{x}", g): f"id_{on_objects[(x, g)]}" for x in ("e", "a") for g in ("e", "a")}
    theta = {(g, x): Sign.PLUS for g in ("e", "a") for x in ("e", "a")}
    action = GroupAction(c2, target, on_objects, on_morphisms, theta)
    report = validate_action(action)
    assert any(v.startswith("action law fails") for v in report.violations)
    with pytest.raises(InvalidActionError):
        weak_quotient(action)


def test_unnatural_two_cell_is_rejected(twisted_pair):
    c2 = catalog_group("C2")
    on_objects = {(x, g): x for x in ("u", "v") for g in ("e", "a")}
    on_morphisms = {(m, g): m for m in twisted_pair.morphisms for g in ("e", "a")}
    theta = {("e", "u"): Sign.PLUS, ("e", "v"): Sign.PLUS, ("a", "u"): Sign.MINUS, ("a", "v"): Sign.PLUS}
    report = validate_action(GroupAction(c2, twisted_pair, on_objects, on_morphisms, theta))
    assert "θ_a is not natural at u>v" in report.violations


def test_quotient_has_one_arrow_per_arrow_and_element(group_actions):
    for action in group_actions.actions.values():
        quotient = weak_quotient(action)
        assert len(quotient.morphisms) == len(action.target.morphisms) * action.group.order


@pytest.mark.parametrize("seed", range(8))
def test_trivial_group_quotient_is_the_groupoid(seed):
    x = SpanGenerator(seed).random_foot(3)
    trivial = catalog_group("1")
    action = GroupAction(
        trivial,
        x,
        {(obj, "e"): obj for obj in x.objects},
        {(m, "e"): m for m in x.morphisms},
        {("e", obj): Sign.PLUS for obj in x.objects},
    )
    quotient = weak_quotient(action)
    assert quotient.objects == x.objects
    assert len(quotient.morphisms) == len(x.morphisms)
    assert _shape(quotient) == _shape(x)
    assert sorted(int(s) for s in quotient.parity.values()) == sorted(int(s) for s in x.parity.values())


@pytest.mark.parametrize("name", ["C2", "C3", "S3"])
def test_quotient_of_the_point_is_the_classifying_groupoid(name):
    group = catalog_group(name)
    chi = parity_homomorphisms(group)[-1]
    action = GroupAction(
        group,
        point(),
        {("*", g): "*" for g in group.elements},
        {("id_*", g): "id_*" for g in group.elements},
        {(g, "*"): chi[g] for g in group.elements},
    )
    quotient = weak_quotient(action)
    bg = classifying_groupoid(group, chi)
    assert validate_groupoid(quotient).ok
    assert len(quotient.morphisms) == group.order
    assert _shape(quotient) == _shape(bg)
    assert sorted(int(s) for s in quotient.parity.values()) == sorted(int(s) for s in bg.parity.values())
