"""Services package for objlin."""

from src.services.group_service import catalog_group, homomorphisms
from src.services.groupoid_service import (
    classifying_groupoid,
    codiscrete,
    discrete,
    disjoint_sum,
    empty,
    enumerate_orientations,
    homotopy_cardinality,
    orientable_locus,
    pi0,
    point,
    star_product,
    validate_action,
    validate_groupoid,
    weak_quotient,
)
from src.services.span_service import (
    compose,
    identity_span,
    negative,
    two_sided_fiber,
    validate_span,
)
from src.services.cardinality_service import matrix_of_span, scalar_cardinality
from src.services.exterior_service import ExteriorPowerBuilder
from src.services.determinant_service import det_cardinality, fiber_table, leibniz_scalar
from src.services.generator import SpanGenerator

__all__ = [
    "catalog_group",
    "homomorphisms",
    "classifying_groupoid",
    "codiscrete",
    "discrete",
    "disjoint_sum",
    "empty",
    "enumerate_orientations",
    "homotopy_cardinality",
    "orientable_locus",
    "pi0",
    "point",
    "star_product",
    "validate_action",
    "validate_groupoid",
    "weak_quotient",
    "compose",
    "identity_span",
    "negative",
    "two_sided_fiber",
    "validate_span",
    "matrix_of_span",
    "scalar_cardinality",
    "ExteriorPowerBuilder",
    "det_cardinality",
    "fiber_table",
    "leibniz_scalar",
    "SpanGenerator",
]
