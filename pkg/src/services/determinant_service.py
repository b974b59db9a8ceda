"""Determinants of endo-spans: top exterior power, objective Leibniz expansion,
fiber tables and classical exact determinants."""

import logging
from fractions import Fraction
from math import lcm, prod
from typing import Sequence

from src.config.settings import settings
from src.exceptions import ConsistencyError, SpanError
from src.models import (
    Basepoints,
    ExteriorSpan,
    FiberCell,
    FiberElement,
    FiberTableReport,
    ParityGroupoid,
    Permutation,
    PSpan,
    RationalMatrix,
    SignedGroupoid,
    TwoSidedFiber,
    permutation_of_arrow,
    power_object_id,
)
from src.services.cardinality_service import scalar_cardinality
from src.services.exterior_service import ExteriorPowerBuilder
from src.services.groupoid_service import pi0
from src.services.span_service import (
    feet_match,
    scalar_multiply,
    signed_sum,
    two_sided_fiber,
    unit_scalar,
)

logger = logging.getLogger(__name__)


def top_degree(x: ParityGroupoid) -> int:
    """Number of orientable components."""
    return sum(1 for c in pi0(x) if c.orientable)


def basepoints(x: ParityGroupoid) -> Basepoints:
    """Canonical basepoints (x_1..x_n) and |x_1!|···|x_n!|."""
    comps = [c for c in pi0(x) if c.orientable]
    return Basepoints(
        tuple(c.representative for c in comps), prod(c.aut_order for c in comps)
    )


def _require_endo(sp: PSpan) -> None:
    if not feet_match(sp.left_foot, sp.right_foot):
        raise SpanError("determinant needs an endo-span (equal feet)")


def det_parts(sp: PSpan, budget: int | None = None) -> ExteriorSpan:
    """Λⁿ of an endo-span with n = top_degree, plus decoded powers."""
    _require_endo(sp)
    n = top_degree(sp.left_foot)
    return ExteriorPowerBuilder(budget).span(sp, n)


def det_span(sp: PSpan, budget: int | None = None) -> PSpan:
    """Det of an endo-span: Λⁿ X <- Λⁿ A -> Λⁿ X.

    Raises:
        SpanError: If the feet differ
        BudgetExceededError: If Λⁿ is too large
    """
    return det_parts(sp, budget).span


def det_fiber(sp: PSpan, budget: int | None = None, points: Sequence[str] | None = None) -> TwoSidedFiber:
    """Fiber of the determinant span at the basepoint tuple (x̄, x̄)."""
    base = basepoints(sp.left_foot)
    order = tuple(points) if points is not None else base.points
    if sorted(order) != sorted(base.points):
        raise SpanError(f"{order} is not an ordering of the basepoints {base.points}")
    xbar = power_object_id(order)
    return two_sided_fiber(det_span(sp, budget), xbar, xbar)


def det_cardinality(sp: PSpan, budget: int | None = None, points: Sequence[str] | None = None) -> Fraction:
    """‖Det A‖/‖x̄!‖: the single material entry of the determinant span.

    Args:
        sp: Endo-span
        budget: Morphism budget override
        points: Optional reordering of the basepoints

    Returns:
        Exact rational determinant
    """
    fiber = det_fiber(sp, budget, points)
    value = scalar_cardinality(fiber) / basepoints(sp.left_foot).aut_product
    logger.debug("det cardinality: %s over %d fiber points", value, len(fiber.points))
    return value


def leibniz_scalar(sp: PSpan) -> SignedGroupoid:
    """Σ_σ sign(σ) Π_i fiber(x_i, x_σ(i)) from 1-fold fibers only.

    Summands are tagged by the one-line digits of σ.
    """
    _require_endo(sp)
    points = basepoints(sp.left_foot).points
    n = len(points)
    fibers = {(i, j): two_sided_fiber(sp, points[i], points[j]) for i in range(n) for j in range(n)}
    summands, tags = [], []
    for sigma in Permutation.all(n):
        term = unit_scalar()
        for i in range(n):
            term = scalar_multiply(term, fibers[(i, sigma(i))])
        summands.append(
            SignedGroupoid(term.underlying, {x: s * sigma.sign for x, s in term.signs.items()})
        )
        tags.append(f"<{sigma.digits}>")
    return signed_sum(summands, tags)


def permutation_blocks(fiber: TwoSidedFiber) -> dict[str, Permutation]:
    """Permutation label perm(β)∘perm(α)⁻¹ of every component of a Λⁿ fiber.

    Raises:
        ConsistencyError: If points of one component carry different labels
    """
    blocks: dict[str, Permutation] = {}
    for members in fiber.components:
        labels = {
            permutation_of_arrow(p.beta) * permutation_of_arrow(p.alpha).inverse()
            for p in (fiber.points[pid] for pid in members)
        }
        if len(labels) != 1:
            raise ConsistencyError(f"component of {members[0]} mixes permutations {labels}")
        blocks[members[0]] = labels.pop()
    return blocks


# ========== Classical determinants ==========

def leibniz_det(entries: Sequence[Sequence[Fraction]]) -> Fraction:
    """Σ_σ sign(σ) Π a_{i,σ(i)} over all permutations."""
    n = len(entries)
    total = Fraction(0)
    for sigma in Permutation.all(n):
        term = Fraction(int(sigma.sign))
        for i in range(n):
            term *= entries[i][sigma(i)]
            if not term:
                break
        total += term
    return total


def bareiss_det(entries: Sequence[Sequence[Fraction]]) -> Fraction:
    """Fraction-free elimination on the row-scaled integer matrix."""
    n = len(entries)
    if n == 0:
        return Fraction(1)
    scales = [lcm(*(Fraction(q).denominator for q in row)) for row in entries]
    a = [[int(Fraction(q) * s) for q in row] for row, s in zip(entries, scales)]
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if pivot is None:
                return Fraction(0)
            a[k], a[pivot] = a[pivot], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return Fraction(sign * a[n - 1][n - 1], prod(scales))


def classical_det(m: RationalMatrix) -> Fraction:
    """Exact determinant, checked by two independent algorithms.

    Raises:
        ValueError: If m is not square
        ConsistencyError: If naive Leibniz and Bareiss disagree
    """
    if not m.is_square():
        raise ValueError(f"determinant of a non-square {m.shape[0]}x{m.shape[1]} matrix")
    rows = m.tolist()
    value = bareiss_det(rows)
    if len(rows) <= settings.LEIBNIZ_MAX_DEGREE:
        check = leibniz_det(rows)
        if check != value:
            raise ConsistencyError(f"determinant oracles disagree: Leibniz {check}, Bareiss {value}")
    return value


# ========== Fiber tables ==========

def _ordered_representatives(x: ParityGroupoid) -> tuple[str, ...]:
    comps = pi0(x)
    return tuple(c.representative for c in comps if c.orientable) + tuple(
        c.representative for c in comps if not c.orientable
    )


def fiber_table(sp: PSpan, k: int, budget: int | None = None) -> FiberTableReport:
    """All two-sided fibers of Λᵏ sp over pairs of component representatives.

    Each fiber component is listed once, by its least point whose α is an
    identity (least point overall if none), with its apex tuple, permutation
    label, sign and automorphism order.

    Raises:
        SpanError: If sp is not an endo-span
        BudgetExceededError: If Λᵏ is too large
    """
    _require_endo(sp)
    parts = ExteriorPowerBuilder(budget).span(sp, k)
    power = parts.span
    left_foot, right_foot = power.left_foot, power.right_foot
    rows = _ordered_representatives(left_foot)
    cols = _ordered_representatives(right_foot)
    cells = {}
    for row in rows:
        for col in cols:
            fiber = two_sided_fiber(power, row, col)
            elements = []
            for members in fiber.components:
                pts = [fiber.points[pid] for pid in members]
                plain = [p for p in pts if left_foot.underlying.is_identity(p.alpha)]
                rep = (plain or pts)[0]
                label = permutation_of_arrow(rep.beta) * permutation_of_arrow(rep.alpha).inverse()
                elements.append(
                    FiberElement(
                        apex=parts.apex.tuple_of(rep.apex),
                        permutation=label,
                        sign=fiber.signs[members[0]],
                        aut_order=len(fiber.underlying.automorphisms(members[0])),
                    )
                )
            elements.sort(key=lambda e: (not e.permutation.is_identity(), e.permutation.image, e.apex))
            cells[(row, col)] = FiberCell(
                row=row,
                col=col,
                row_tuple=parts.left.tuple_of(row),
                col_tuple=parts.right.tuple_of(col),
                elements=tuple(elements),
                net=scalar_cardinality(fiber),
                material=not left_foot.has_odd_automorphism(row)
                and not right_foot.has_odd_automorphism(col),
            )
    logger.debug("fiber table of degree %d: %d cells", k, len(cells))
    return FiberTableReport(k, rows, cols, cells)
