"""Determinants: top exterior power, objective Leibniz, fiber tables."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.exceptions import SpanError
from src.models import Permutation, RationalMatrix, Sign
from src.services.cardinality_service import matrix_of_span
from src.services.determinant_service import (
    bareiss_det,
    basepoints,
    classical_det,
    det_cardinality,
    det_fiber,
    det_span,
    fiber_table,
    leibniz_det,
    leibniz_scalar,
    permutation_blocks,
    top_degree,
)
from src.services.generator import SpanGenerator
from src.services.span_service import fingerprint

fractions = st.fractions(min_value=-5, max_value=5, max_denominator=4)


def test_basepoints(two_points, odd_bc2):
    assert top_degree(two_points) == 2
    assert basepoints(two_points).points == ("x", "y")
    assert basepoints(two_points).aut_product == 1
    assert top_degree(odd_bc2) == 0


def test_split_idempotent_determinant(split_idempotent):
    assert det_cardinality(split_idempotent) == 1
    assert classical_det(matrix_of_span(split_idempotent)) == 1


def test_reordered_basepoints_give_the_same_value(split_idempotent):
    assert det_cardinality(split_idempotent, points=("y", "x")) == 1
    with pytest.raises(SpanError):
        det_cardinality(split_idempotent, points=("x", "x"))


def test_det_span_shape(split_idempotent):
    det = det_span(split_idempotent)
    assert det.left_foot.objects == ("(x,x)", "(x,y)", "(y,x)", "(y,y)")
    assert len(det.apex.objects) == 25
    assert matrix_of_span(det).compact() == "[[1]]"


def test_determinant_needs_an_endo_span(group_actions):
    with pytest.raises(SpanError):
        det_cardinality(group_actions.spans["name_of_point"])


def test_objective_leibniz_on_split_idempotent(split_idempotent):
    fiber = det_fiber(split_idempotent)
    leibniz = leibniz_scalar(split_idempotent)
    assert fingerprint(fiber, sizes=False) == fingerprint(leibniz, sizes=False)
    assert fingerprint(leibniz, sizes=False) == ((-1, 1), (1, 1), (1, 1))


def test_permutation_blocks(split_idempotent):
    labels = sorted(p.word for p in permutation_blocks(det_fiber(split_idempotent)).values())
    assert labels == ["(1 2)", "id", "id"]


@pytest.mark.parametrize(
    "seed, degree, max_apex",
    [(seed, 3, None) for seed in range(10)] + [(seed, 4, 2) for seed in range(2)],
)
def test_permutation_blocks_and_basepoint_order_on_random_spans(seed, degree, max_apex):
    sp = SpanGenerator(seed).random_endo_span(degree, max_apex=max_apex)
    points = basepoints(sp.left_foot).points
    assert len(points) == degree
    blocks = permutation_blocks(det_fiber(sp))
    assert all(p.degree == degree for p in blocks.values())
    backwards = tuple(reversed(points))
    reordered = permutation_blocks(det_fiber(sp, points=backwards))
    assert len(reordered) == len(blocks)
    value = det_cardinality(sp)
    assert det_cardinality(sp, points=backwards) == value
    assert value == classical_det(matrix_of_span(sp))


def test_fiber_table_of_split_idempotent(split_idempotent):
    report = fiber_table(split_idempotent, 2)
    assert report.rows == ("(x,y)", "(x,x)", "(y,y)")
    assert len(report.cells) == 9
    (material,) = report.material_cells()
    assert material.row_tuple == ("x", "y")
    assert [str(e) for e in material.elements] == ["(x·e,id)+", "(x·y,id)+", "(s·p,(1 2))-"]
    assert material.net == 1
    immaterial = report.immaterial_cells()
    assert len(immaterial) == 8
    assert all(cell.net == 0 for cell in immaterial)


def test_fiber_table_listing(split_idempotent):
    listing = fiber_table(split_idempotent, 2).listing()
    material = listing[listing["material"]]
    assert list(material["element"]) == ["x·e", "x·y", "s·p"]
    assert list(material["sign"]) == ["+", "+", "-"]
    tsv = fiber_table(split_idempotent, 2).to_tsv()
    assert tsv.splitlines()[0] == "row\tcol\telement\tpermutation\tsign\taut\tmaterial"


# ========== Classical determinants ==========

def test_bareiss_examples():
    assert bareiss_det([[Fraction(2), 1, 0], [1, 3, 1], [0, 1, 4]]) == 18
    assert bareiss_det([[0, 1], [1, 0]]) == -1
    assert bareiss_det([[Fraction(1, 2), Fraction(1, 3)], [1, 1]]) == Fraction(1, 6)
    assert bareiss_det([[1, 2], [2, 4]]) == 0
    assert bareiss_det([]) == 1


def test_classical_det_needs_a_square_matrix():
    m = RationalMatrix.from_rows(("a",), ("b", "c"), [[1, 2]])
    with pytest.raises(ValueError):
        classical_det(m)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4).flatmap(lambda n: st.lists(st.lists(fractions, min_size=n, max_size=n), min_size=n, max_size=n)))
def test_bareiss_agrees_with_leibniz(rows):
    assert bareiss_det(rows) == leibniz_det(rows)


def test_leibniz_det_sign_convention():
    swap = Permutation.transposition(3, 0, 2)
    rows = [[1 if swap(i) == j else 0 for j in range(3)] for i in range(3)]
    assert leibniz_det(rows) == int(swap.sign) == int(Sign.MINUS)
