"""Signed cardinality of scalars, states and spans."""

from fractions import Fraction

import pytest

from src.exceptions import NonOrientableError
from src.models import GroupoidMap, RationalMatrix
from src.services.cardinality_service import (
    check_functoriality,
    embed_span,
    matrix_of_span,
    orbit_count_matrix,
    orientable_basis,
    projection_coefficient,
    scalar_cardinality,
    vector_of_state,
)
from src.services.generator import SpanGenerator
from src.services.group_service import catalog_group
from src.services.groupoid_service import classifying_groupoid, discrete
from src.services.span_service import scalar_of_span, two_sided_fiber


def test_split_idempotent_matrix(split_idempotent):
    expected = RationalMatrix.from_rows(("x", "y"), ("x", "y"), [[1, 1], [1, 2]])
    assert matrix_of_span(split_idempotent) == expected
    assert matrix_of_span(split_idempotent).compact() == "[[1,1],[1,2]]"


def test_signed_set_has_cardinality_zero(group_actions):
    assert scalar_cardinality(scalar_of_span(group_actions.spans["signed_set"])) == 0


def test_classifying_groupoid_bases():
    s3 = catalog_group("S3")
    assert orientable_basis(classifying_groupoid(s3)) == ("*",)
    assert orientable_basis(classifying_groupoid(catalog_group("C2"), {"a": -1})) == ()


def test_state_over_non_orientable_point(group_actions):
    state = group_actions.spans["name_of_point"]
    assert vector_of_state(state).basis == ()
    with pytest.raises(NonOrientableError):
        projection_coefficient(state, "*")
    assert scalar_cardinality(two_sided_fiber(state, "*", "*")) == 0


def test_symmetry_factor_divides_columns():
    bc3 = classifying_groupoid(catalog_group("C3"))
    apex = discrete(["m"])
    to_point = GroupoidMap({"m": "*"}, {"id_m": "e"})
    sp = embed_span(apex.underlying, bc3.underlying, apex.underlying, GroupoidMap({"m": "m"}, {"id_m": "id_m"}), to_point)
    # three points over (m, *), one column symmetry of order 3
    assert matrix_of_span(sp).tolist() == [[Fraction(1)]]
    assert orbit_count_matrix(sp, signed=False).tolist() == [[Fraction(1)]]


def test_embedded_span_counts_agree(split_idempotent):
    plain = embed_span(
        split_idempotent.left_foot.underlying,
        split_idempotent.right_foot.underlying,
        split_idempotent.apex,
        split_idempotent.left_map,
        split_idempotent.right_map,
    )
    assert orbit_count_matrix(plain, signed=False) == matrix_of_span(plain)


@pytest.mark.parametrize("seed", range(20))
def test_orbit_counting_oracle_agrees(seed):
    gen = SpanGenerator(seed)
    sp = gen.random_span(gen.random_foot(), gen.random_foot())
    assert orbit_count_matrix(sp) == matrix_of_span(sp)


@pytest.mark.parametrize("seed", range(10))
def test_check_functoriality_reports_agreement(seed):
    gen = SpanGenerator(seed)
    s, j, t = gen.random_foot(3), gen.random_foot(3), gen.random_foot(3)
    ok, counterexample = check_functoriality(gen.random_span(s, j), gen.random_span(j, t))
    assert ok
    assert counterexample is None


def test_matrix_text_round_trip(split_idempotent):
    m = matrix_of_span(split_idempotent)
    text = m.to_text()
    assert text == "\tx\ty\nx\t1\t1\ny\t1\t2\n"
    assert RationalMatrix.from_text(text) == m


def test_fraction_entries_print_exactly():
    m = RationalMatrix.from_rows(("a",), ("b", "c"), [[Fraction(1, 2), Fraction(-2, 3)]])
    assert m.compact() == "[[1/2,-2/3]]"
