"""Finite groupoid and parity groupoid data models."""

from collections import defaultdict
from collections.abc import Mapping
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Iterable, Iterator

from src.exceptions import GroupoidError, ObjlinError
from src.models.sign import Sign
from src.models.union_find import UnionFind


RESERVED_ID_CHARS = frozenset(",()[]|")


def tuple_id(parts: Iterable[str]) -> str:
    """Canonical string id for a tuple of ids, e.g. ``(x,y)``."""
    return "(" + ",".join(parts) + ")"


def check_atomic_ids(ids: Iterable[str], what: str = "id", extra: str = "") -> None:
    """Reject ids that contain a separator of derived ids.

    Tuples, composite apex objects and fiber points are spelled with
    ``, ( ) [ ] |``; as long as user ids avoid them, derived ids never collide.

    Args:
        ids: Ids to check
        what: Noun used in the error message
        extra: Further characters reserved by the caller

    Raises:
        GroupoidError: On an empty id or one containing a reserved character
    """
    reserved = RESERVED_ID_CHARS | set(extra)
    for x in ids:
        if not isinstance(x, str) or not x:
            raise GroupoidError(f"{what} {x!r} must be a non-empty string")
        bad = sorted(reserved.intersection(x))
        if bad:
            raise GroupoidError(f"{what} '{x}' contains reserved character(s) {' '.join(bad)}")


class CompositionTable(Mapping):
    """Total composition table evaluated on demand.

    Keys are pairs ``(g, f)`` with ``target(f) == source(g)``; the value is
    ``g∘f``. Values are memoized, so every derived groupoid still exposes an
    explicit table while only the pairs actually used get materialized.
    """

    def __init__(
        self,
        morphisms: Mapping[str, tuple[str, str]],
        rule: Callable[[str, str], str],
    ):
        """Initialize composition table.

        Args:
            morphisms: Morphism id -> (source, target)
            rule: Function computing g∘f for a composable pair
        """
        self._morphisms = morphisms
        self._rule = rule
        self._memo: dict[tuple[str, str], str] = {}

    def __getitem__(self, key: tuple[str, str]) -> str:
        if key in self._memo:
            return self._memo[key]
        g, f = key
        if g not in self._morphisms or f not in self._morphisms:
            raise KeyError(key)
        if self._morphisms[g][0] != self._morphisms[f][1]:
            raise KeyError(key)
        value = self._rule(g, f)
        self._memo[key] = value
        return value

    def __iter__(self) -> Iterator[tuple[str, str]]:
        by_source: dict[str, list[str]] = defaultdict(list)
        for mor, (src, _) in self._morphisms.items():
            by_source[src].append(mor)
        for f, (_, tgt) in self._morphisms.items():
            for g in by_source[tgt]:
                yield (g, f)

    def __len__(self) -> int:
        outgoing: dict[str, int] = defaultdict(int)
        for src, _ in self._morphisms.values():
            outgoing[src] += 1
        return sum(outgoing[tgt] for _, tgt in self._morphisms.values())


@dataclass(frozen=True)
class FiniteGroupoid:
    """Explicit finite groupoid.

    Attributes:
        objects: Object ids in canonical (sorted) order
        morphisms: Morphism id -> (source object, target object)
        identities: Object id -> identity morphism id
        composition: (g, f) -> g∘f for every composable pair
        inverses: Morphism id -> inverse morphism id
    """

    objects: tuple[str, ...]
    morphisms: Mapping[str, tuple[str, str]]
    identities: Mapping[str, str]
    composition: Mapping[tuple[str, str], str] = field(repr=False)
    inverses: Mapping[str, str] = field(repr=False)

    def source(self, f: str) -> str:
        """Source object of f."""
        return self.morphisms[f][0]

    def target(self, f: str) -> str:
        """Target object of f."""
        return self.morphisms[f][1]

    def identity(self, x: str) -> str:
        """Identity morphism of x."""
        return self.identities[x]

    def compose(self, g: str, f: str) -> str:
        """Return g∘f (f first).

        Raises:
            GroupoidError: If the pair is not composable
        """
        try:
            return self.composition[(g, f)]
        except KeyError:
            raise GroupoidError(f"composite {g} ∘ {f} is not defined") from None

    def inverse(self, f: str) -> str:
        """Inverse of f."""
        return self.inverses[f]

    def is_identity(self, f: str) -> bool:
        """True if f is the identity of its source."""
        return self.identities.get(self.source(f)) == f

    @cached_property
    def _hom_index(self) -> dict[tuple[str, str], tuple[str, ...]]:
        index: dict[tuple[str, str], list[str]] = defaultdict(list)
        for mor, ends in self.morphisms.items():
            index[ends].append(mor)
        return {ends: tuple(sorted(mors)) for ends, mors in index.items()}

    @cached_property
    def _out_index(self) -> dict[str, tuple[str, ...]]:
        index: dict[str, list[str]] = defaultdict(list)
        for mor, (src, _) in self.morphisms.items():
            index[src].append(mor)
        return {obj: tuple(sorted(mors)) for obj, mors in index.items()}

    def hom(self, x: str, y: str) -> tuple[str, ...]:
        """All morphisms x -> y."""
        return self._hom_index.get((x, y), ())

    def arrows_from(self, x: str) -> tuple[str, ...]:
        """All morphisms with source x."""
        return self._out_index.get(x, ())

    def automorphisms(self, x: str) -> tuple[str, ...]:
        """Automorphism group of x as a morphism list."""
        return self.hom(x, x)

    @cached_property
    def components(self) -> tuple[tuple[str, ...], ...]:
        """Connected components, each sorted, ordered by least member."""
        forest = UnionFind(self.objects)
        for src, tgt in self.morphisms.values():
            forest.union(src, tgt)
        return tuple(sorted(tuple(sorted(c)) for c in forest.classes()))

    @cached_property
    def component_of(self) -> dict[str, str]:
        """Object id -> representative (least member) of its component."""
        return {obj: comp[0] for comp in self.components for obj in comp}

    def is_empty(self) -> bool:
        """True if there are no objects."""
        return not self.objects

    def __str__(self) -> str:
        return f"FiniteGroupoid({len(self.objects)} objects, {len(self.morphisms)} morphisms)"


@dataclass(frozen=True)
class ParityGroupoid:
    """Finite groupoid with a parity structure (a functor to P = BO(1)).

    Attributes:
        underlying: The finite groupoid
        parity: Morphism id -> Sign
    """

    underlying: FiniteGroupoid
    parity: Mapping[str, Sign]

    @property
    def objects(self) -> tuple[str, ...]:
        return self.underlying.objects

    @property
    def morphisms(self) -> Mapping[str, tuple[str, str]]:
        return self.underlying.morphisms

    @property
    def components(self) -> tuple[tuple[str, ...], ...]:
        return self.underlying.components

    def parity_of(self, f: str) -> Sign:
        """Parity of morphism f."""
        return self.parity[f]

    def source(self, f: str) -> str:
        return self.underlying.source(f)

    def target(self, f: str) -> str:
        return self.underlying.target(f)

    def identity(self, x: str) -> str:
        return self.underlying.identity(x)

    def compose(self, g: str, f: str) -> str:
        return self.underlying.compose(g, f)

    def inverse(self, f: str) -> str:
        return self.underlying.inverse(f)

    def hom(self, x: str, y: str) -> tuple[str, ...]:
        return self.underlying.hom(x, y)

    def arrows_from(self, x: str) -> tuple[str, ...]:
        return self.underlying.arrows_from(x)

    def automorphisms(self, x: str) -> tuple[str, ...]:
        return self.underlying.automorphisms(x)

    def has_odd_automorphism(self, x: str) -> bool:
        """True if some automorphism of x is odd."""
        return any(self.parity[a].is_odd for a in self.automorphisms(x))

    def is_empty(self) -> bool:
        return self.underlying.is_empty()

    def __str__(self) -> str:
        odd = sum(1 for s in self.parity.values() if s.is_odd)
        return (
            f"ParityGroupoid({len(self.objects)} objects, "
            f"{len(self.morphisms)} morphisms, {odd} odd)"
        )


@dataclass(frozen=True)
class Component:
    """One connected component of a parity groupoid.

    Attributes:
        representative: Least object id in the component
        members: All object ids, sorted
        aut_order: Order of the automorphism group of the representative
        orientable: True if no member has an odd automorphism
    """

    representative: str
    members: tuple[str, ...]
    aut_order: int
    orientable: bool

    def __str__(self) -> str:
        tag = "orientable" if self.orientable else "non-orientable"
        return f"Component({self.representative}, {len(self.members)} objects, |Aut|={self.aut_order}, {tag})"


@dataclass
class ValidationReport:
    """Outcome of a validator: empty violation list means valid.

    Attributes:
        subject: What was validated (for messages)
        violations: Human readable description of each failed axiom
    """

    subject: str
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        """True if nothing was violated."""
        return not self.violations

    def add(self, message: str) -> None:
        """Record a violation."""
        self.violations.append(message)

    def merge(self, other: "ValidationReport") -> None:
        """Append another report's violations, prefixed by its subject."""
        self.violations.extend(f"{other.subject}: {v}" for v in other.violations)

    def raise_for_errors(self, error_cls: type[ObjlinError] = GroupoidError) -> None:
        """Raise error_cls listing the violations if the report failed."""
        if self.violations:
            raise error_cls(f"{self.subject}: " + "; ".join(self.violations))

    def __str__(self) -> str:
        if self.ok:
            return f"✓ {self.subject}: valid"
        lines = [f"✗ {self.subject}: {len(self.violations)} violation(s)"]
        lines.extend(f"  - {v}" for v in self.violations)
        return "\n".join(lines)
