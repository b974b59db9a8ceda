"""Finite groups and group actions on parity groupoids."""

from collections.abc import Mapping
from dataclasses import dataclass, field
from functools import cached_property

from src.models.groupoid import ParityGroupoid
from src.models.sign import Sign


@dataclass(frozen=True)
class FiniteGroup:
    """Finite group given by its element list and multiplication table.

    Attributes:
        name: Display name (e.g. 'C2', 'S3')
        elements: Element ids; order is kept as given
        table: (g, h) -> g*h
        permutation_degree: k when the elements are the permutations of Σ_k
    """

    name: str
    elements: tuple[str, ...]
    table: Mapping[tuple[str, str], str] = field(repr=False)
    permutation_degree: int | None = None

    def multiply(self, g: str, h: str) -> str:
        return self.table[(g, h)]

    @property
    def order(self) -> int:
        return len(self.elements)

    @cached_property
    def identity(self) -> str:
        """The neutral element."""
        for e in self.elements:
            if all(self.table[(e, g)] == g and self.table[(g, e)] == g for g in self.elements):
                return e
        raise ValueError(f"group {self.name} has no neutral element")

    @cached_property
    def _inverses(self) -> dict[str, str]:
        e = self.identity
        return {g: h for g in self.elements for h in self.elements if self.table[(g, h)] == e}

    def inverse(self, g: str) -> str:
        return self._inverses[g]

    @cached_property
    def generators(self) -> tuple[str, ...]:
        """A small generating set, chosen greedily in element order."""
        gens: list[str] = []
        span = {self.identity}
        for g in self.elements:
            if g in span:
                continue
            gens.append(g)
            span = self.closure(gens)
            if len(span) == self.order:
                break
        return tuple(gens)

    def closure(self, gens: list[str] | tuple[str, ...]) -> set[str]:
        """Subgroup generated by gens."""
        span = {self.identity}
        frontier = [self.identity]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = self.table[(x, g)]
                    if y not in span:
                        span.add(y)
                        nxt.append(y)
            frontier = nxt
        return span

    def __str__(self) -> str:
        return f"FiniteGroup({self.name}, order={self.order})"


@dataclass(frozen=True)
class GroupAction:
    """Right action of a finite group on a parity groupoid, with 2-cell data.

    Each g acts as a functor x ↦ x.g with (x.g).h = x.(gh); ``theta[(g, x)]``
    is the parity of the 2-cell component at x.

    Attributes:
        group: The acting group
        target: The parity groupoid acted on
        on_objects: (object, g) -> object
        on_morphisms: (morphism, g) -> morphism
        theta: (g, object) -> Sign
    """

    group: FiniteGroup
    target: ParityGroupoid
    on_objects: Mapping[tuple[str, str], str] = field(repr=False)
    on_morphisms: Mapping[tuple[str, str], str] = field(repr=False)
    theta: Mapping[tuple[str, str], Sign] = field(repr=False)

    def act(self, x: str, g: str) -> str:
        """Image x.g of an object."""
        return self.on_objects[(x, g)]

    def act_morphism(self, a: str, g: str) -> str:
        """Image a.g of a morphism."""
        return self.on_morphisms[(a, g)]

    def theta_at(self, g: str, x: str) -> Sign:
        return self.theta[(g, x)]

    def __str__(self) -> str:
        return f"GroupAction({self.group.name} on {self.target})"
