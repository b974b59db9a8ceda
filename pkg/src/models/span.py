"""P-span, scalar and two-sided fiber data models."""

from collections.abc import Mapping
from dataclasses import dataclass, field

from src.exceptions import ConsistencyError
from src.models.groupoid import FiniteGroupoid, ParityGroupoid
from src.models.sign import Sign


@dataclass(frozen=True)
class GroupoidMap:
    """Functor data between explicit groupoids.

    Attributes:
        objects: Source object id -> target object id
        morphisms: Source morphism id -> target morphism id
    """

    objects: Mapping[str, str]
    morphisms: Mapping[str, str] = field(repr=False)


@dataclass(frozen=True)
class PSpan:
    """Simplified P-span S <- M -> T with the sign ratio rho on the apex.

    Naturality: for every apex arrow a: m -> m',
    ``parity_S(left(a)) * rho[m'] == rho[m] * parity_T(right(a))``.

    Attributes:
        left_foot: Parity groupoid S
        right_foot: Parity groupoid T
        apex: Plain finite groupoid M
        left_map: Functor M -> S
        right_map: Functor M -> T
        rho: Apex object -> Sign
    """

    left_foot: ParityGroupoid
    right_foot: ParityGroupoid
    apex: FiniteGroupoid
    left_map: GroupoidMap
    right_map: GroupoidMap
    rho: Mapping[str, Sign] = field(repr=False)

    def left(self, m: str) -> str:
        """Left leg on objects."""
        return self.left_map.objects[m]

    def right(self, m: str) -> str:
        """Right leg on objects."""
        return self.right_map.objects[m]

    def left_arrow(self, a: str) -> str:
        return self.left_map.morphisms[a]

    def right_arrow(self, a: str) -> str:
        return self.right_map.morphisms[a]

    def is_state(self) -> bool:
        """True if the left foot is the trivial point."""
        return _is_point(self.left_foot)

    def is_scalar(self) -> bool:
        """True if both feet are the trivial point."""
        return _is_point(self.left_foot) and _is_point(self.right_foot)

    def __str__(self) -> str:
        return (
            f"PSpan({len(self.left_foot.objects)} <- {len(self.apex.objects)} "
            f"-> {len(self.right_foot.objects)} objects)"
        )


def _is_point(g: ParityGroupoid) -> bool:
    return len(g.objects) == 1 and len(g.morphisms) == 1


@dataclass(frozen=True)
class SignedGroupoid:
    """A scalar: finite groupoid with a sign constant on each component.

    Attributes:
        underlying: The groupoid
        signs: Object id -> Sign (constant along every morphism)
    """

    underlying: FiniteGroupoid
    signs: Mapping[str, Sign] = field(repr=False)

    def __post_init__(self):
        for mor, (src, tgt) in self.underlying.morphisms.items():
            if self.signs[src] != self.signs[tgt]:
                raise ConsistencyError(
                    f"sign not constant on a component: {mor}: {src} -> {tgt}"
                )

    @property
    def components(self) -> tuple[tuple[str, ...], ...]:
        return self.underlying.components

    def component_signs(self) -> dict[str, Sign]:
        """Component representative -> sign."""
        return {comp[0]: self.signs[comp[0]] for comp in self.components}

    def __str__(self) -> str:
        signs = self.component_signs().values()
        pos = sum(1 for s in signs if s is Sign.PLUS)
        return f"SignedGroupoid({pos} positive, {len(signs) - pos} negative components)"


@dataclass(frozen=True)
class FiberPoint:
    """Object (alpha, m, beta) of a two-sided fiber.

    Attributes:
        alpha: Arrow left(m) -> i in the left foot
        apex: Apex object m
        beta: Arrow right(m) -> j in the right foot
    """

    alpha: str
    apex: str
    beta: str


@dataclass(frozen=True)
class TwoSidedFiber(SignedGroupoid):
    """Two-sided fiber of a span at (i, j), remembering its points.

    Attributes:
        row: Left-foot object i
        column: Right-foot object j
        points: Fiber object id -> FiberPoint
    """

    row: str = ""
    column: str = ""
    points: Mapping[str, FiberPoint] = field(default_factory=dict, repr=False)
