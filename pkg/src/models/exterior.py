"""Tuple powers X^k/Σ_k and their exterior/symmetric parity structures."""

from collections.abc import Mapping
from dataclasses import dataclass, field
from typing import Sequence

from src.models.groupoid import FiniteGroupoid, ParityGroupoid, tuple_id
from src.models.permutation import Permutation
from src.models.span import PSpan


def power_object_id(parts: Sequence[str]) -> str:
    """Id of the object (x_1, ..., x_k)."""
    return tuple_id(parts)


def power_morphism_id(perm: Permutation, arrows: Sequence[str]) -> str:
    """Id of the morphism (σ, γ_1, ..., γ_k), e.g. ``<1.0>(f,id_x)``."""
    return f"<{perm.digits}>" + tuple_id(arrows)


def permutation_of_arrow(mor: str) -> Permutation:
    """Recover σ from a power morphism id.

    Raises:
        ValueError: If the id was not produced by power_morphism_id
    """
    if not mor.startswith("<") or ">" not in mor:
        raise ValueError(f"not a power morphism id: {mor}")
    digits = mor[1 : mor.index(">")]
    return Permutation(tuple(int(d) for d in digits.split("."))) if digits else Permutation(())


@dataclass(frozen=True)
class TuplePower:
    """The groupoid X^k/Σ_k of a plain groupoid, with decoding tables.

    A morphism (σ, γ) goes from (y_1..y_k) to (x_1..x_k) with
    γ_j: y_j -> x_σ(j).

    Attributes:
        k: Degree
        groupoid: The explicit groupoid
        tuples: Object id -> tuple of base objects
        arrows: Morphism id -> (σ, tuple of base morphisms)
    """

    k: int
    groupoid: FiniteGroupoid
    tuples: Mapping[str, tuple[str, ...]] = field(repr=False)
    arrows: Mapping[str, tuple[Permutation, tuple[str, ...]]] = field(repr=False)

    def tuple_of(self, obj: str) -> tuple[str, ...]:
        return self.tuples[obj]

    def permutation_of(self, mor: str) -> Permutation:
        return self.arrows[mor][0]


@dataclass(frozen=True)
class ExteriorPower:
    """Λᵏ X (or Sym^k X when ``symmetric``) with its tuple decoding.

    Attributes:
        power: Underlying tuple power of X
        groupoid: Parity groupoid; parity(σ, γ) = sign(σ)·Π parity(γ_j),
            without the sign(σ) factor for the symmetric power
        symmetric: True for the symmetric power
    """

    power: TuplePower
    groupoid: ParityGroupoid
    symmetric: bool = False

    @property
    def k(self) -> int:
        return self.power.k

    def tuple_of(self, obj: str) -> tuple[str, ...]:
        return self.power.tuple_of(obj)

    def permutation_of(self, mor: str) -> Permutation:
        return self.power.permutation_of(mor)

    def __str__(self) -> str:
        kind = "Sym" if self.symmetric else "Λ"
        return f"{kind}^{self.k}({len(self.groupoid.objects)} objects)"


@dataclass(frozen=True)
class ExteriorSpan:
    """Λᵏ of a span together with the decoded powers of its pieces.

    Attributes:
        span: The span Λᵏ S <- M^k/Σ_k -> Λᵏ T
        left: Λᵏ of the left foot
        right: Λᵏ of the right foot
        apex: Tuple power of the apex
    """

    span: PSpan
    left: ExteriorPower
    right: ExteriorPower
    apex: TuplePower
