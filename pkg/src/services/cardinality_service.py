"""Signed cardinality: scalars to rationals, states to vectors, spans to matrices."""

import logging
from fractions import Fraction

from src.exceptions import NonOrientableError
from src.models import (
    FiniteGroupoid,
    GroupoidMap,
    ParityGroupoid,
    PSpan,
    RationalMatrix,
    RationalVector,
    Sign,
    SignedGroupoid,
)
from src.services.groupoid_service import pi0, with_parity
from src.services.span_service import compose, two_sided_fiber

logger = logging.getLogger(__name__)


def scalar_cardinality(sc: SignedGroupoid) -> Fraction:
    """‖S⊕‖ − ‖S⊖‖: Σ over components of sign/|Aut|, exact."""
    total = Fraction(0)
    for members in sc.components:
        rep = members[0]
        total += Fraction(int(sc.signs[rep]), len(sc.underlying.automorphisms(rep)))
    return total


def orientable_basis(g: ParityGroupoid) -> tuple[str, ...]:
    """Basepoints of the orientable components, in canonical order."""
    return tuple(c.representative for c in pi0(g) if c.orientable)


def _entry(sp: PSpan, i: str, j: str) -> Fraction:
    fiber = two_sided_fiber(sp, i, j)
    return scalar_cardinality(fiber) / len(sp.right_foot.automorphisms(j))


def matrix_of_span(sp: PSpan) -> RationalMatrix:
    """Cardinality matrix: entry (i, j) = ‖ᵢMⱼ‖ / |Aut(j)| over orientable basepoints.

    Args:
        sp: Valid span

    Returns:
        Matrix with rows indexed by the left foot's orientable basepoints and
        columns by the right foot's
    """
    rows = orientable_basis(sp.left_foot)
    cols = orientable_basis(sp.right_foot)
    entries = [[_entry(sp, i, j) for j in cols] for i in rows]
    logger.debug("matrix of span: %dx%d", len(rows), len(cols))
    return RationalMatrix(rows, cols, entries)


def projection_coefficient(state: PSpan, j: str) -> Fraction:
    """Coefficient of the basis vector at j: ‖X_j‖ / |Aut(j)|.

    Raises:
        NonOrientableError: If j has an odd automorphism
    """
    if state.right_foot.has_odd_automorphism(j):
        raise NonOrientableError(f"{j} has an odd automorphism")
    (pt,) = state.left_foot.objects
    return _entry(state, pt, j)


def vector_of_state(state: PSpan) -> RationalVector:
    """Vector of projection coefficients over the orientable basepoints."""
    basis = orientable_basis(state.right_foot)
    return RationalVector(basis, [projection_coefficient(state, j) for j in basis])


def check_functoriality(a: PSpan, b: PSpan) -> tuple[bool, tuple | None]:
    """Compare the matrix of a∘b with the product of the matrices.

    Returns:
        (True, None) on agreement, otherwise (False, (row, col, composite, product))
        for the first differing entry
    """
    composite = matrix_of_span(compose(a, b))
    product = matrix_of_span(a) @ matrix_of_span(b)
    if composite == product:
        return True, None
    for r, row in enumerate(composite.row_basis):
        for c, col in enumerate(composite.col_basis):
            if composite.entries[r, c] != product.entries[r, c]:
                return False, (row, col, composite.entries[r, c], product.entries[r, c])
    return False, (None, None, composite, product)


def orbit_count_matrix(sp: PSpan, signed: bool = True) -> RationalMatrix:
    """Matrix computed by orbit counting instead of fiber enumeration.

    Entry (i, j) = Σ over apex components m of
    Σ_{α: left(m)->i, β: right(m)->j} parity(α)·ρ(m)·parity(β) / (|Aut m|·|Aut j|).
    With ``signed=False`` every term counts +1, giving the ordinary
    groupoid-cardinality matrix.
    """
    s, t = sp.left_foot, sp.right_foot
    rows = orientable_basis(s)
    cols = orientable_basis(t)
    entries = []
    for i in rows:
        row = []
        for j in cols:
            total = Fraction(0)
            for members in sp.apex.components:
                m = members[0]
                count = 0
                for alpha in s.hom(sp.left(m), i):
                    for beta in t.hom(sp.right(m), j):
                        count += int(s.parity[alpha] * sp.rho[m] * t.parity[beta]) if signed else 1
                total += Fraction(count, len(sp.apex.automorphisms(m)))
            row.append(total / len(t.automorphisms(j)))
        entries.append(row)
    return RationalMatrix(rows, cols, entries)


def embed_span(
    left: FiniteGroupoid,
    right: FiniteGroupoid,
    apex: FiniteGroupoid,
    left_map: GroupoidMap,
    right_map: GroupoidMap,
) -> PSpan:
    """A plain span of groupoids as a P-span: even feet, ρ ≡ +1."""
    return PSpan(
        with_parity(left),
        with_parity(right),
        apex,
        left_map,
        right_map,
        {m: Sign.PLUS for m in apex.objects},
    )
