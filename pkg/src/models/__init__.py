"""Data models for objlin."""

from src.models.sign import Sign
from src.models.groupoid import (
    CompositionTable,
    Component,
    FiniteGroupoid,
    ParityGroupoid,
    ValidationReport,
    check_atomic_ids,
    tuple_id,
)
from src.models.permutation import Permutation
from src.models.group import FiniteGroup, GroupAction
from src.models.span import (
    FiberPoint,
    GroupoidMap,
    PSpan,
    SignedGroupoid,
    TwoSidedFiber,
)
from src.models.matrix import RationalMatrix, RationalVector, format_rational
from src.models.report import Basepoints, FiberCell, FiberElement, FiberTableReport
from src.models.exterior import (
    ExteriorPower,
    ExteriorSpan,
    TuplePower,
    permutation_of_arrow,
    power_morphism_id,
    power_object_id,
)
from src.models.document import DocumentModel

__all__ = [
    "Sign",
    "CompositionTable",
    "Component",
    "FiniteGroupoid",
    "ParityGroupoid",
    "ValidationReport",
    "check_atomic_ids",
    "tuple_id",
    "Permutation",
    "FiniteGroup",
    "GroupAction",
    "FiberPoint",
    "GroupoidMap",
    "PSpan",
    "SignedGroupoid",
    "TwoSidedFiber",
    "RationalMatrix",
    "RationalVector",
    "format_rational",
    "Basepoints",
    "FiberCell",
    "FiberElement",
    "FiberTableReport",
    "ExteriorPower",
    "ExteriorSpan",
    "TuplePower",
    "permutation_of_arrow",
    "power_morphism_id",
    "power_object_id",
    "DocumentModel",
]
