"""Seeded random parity groupoids, spans, scalars and scalar actions.

Feet are sums of blocks ``codiscrete(size, ω) ∗ BG`` with G from the group
catalog and a chosen parity homomorphism. Apex components are BH mapped into
the feet by group homomorphisms with matching parities, so every generated
span satisfies ρ-naturality.
"""

import logging
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from src.config.settings import settings
from src.models import (
    CompositionTable,
    FiniteGroup,
    FiniteGroupoid,
    GroupAction,
    GroupoidMap,
    ParityGroupoid,
    PSpan,
    Sign,
    SignedGroupoid,
    tuple_id,
)
from src.services.group_service import catalog_group, homomorphisms, parity_homomorphisms
from src.services.groupoid_service import automorphism_group, with_parity

logger = logging.getLogger(__name__)

BLOCK_LETTERS = "abcdefgh"


@dataclass(frozen=True)
class BlockSpec:
    """One block codiscrete(size, ω) ∗ BG of a generated foot.

    Attributes:
        name: Object prefix, objects are ``name0``, ``name1``, ...
        size: Number of (isomorphic) objects
        group: Automorphism group of each object
        chi: Parity homomorphism of the group
        omega: Orientation twist per object index
    """

    name: str
    size: int
    group: FiniteGroup
    chi: dict[str, Sign] = field(repr=False)
    omega: tuple[Sign, ...] = ()

    @property
    def objects(self) -> list[str]:
        return [f"{self.name}{i}" for i in range(self.size)]

    @property
    def orientable(self) -> bool:
        return not any(s.is_odd for s in self.chi.values())


def block_arrow(block: BlockSpec, i: int, j: int, g: str) -> str:
    """Id of the arrow (i -> j, g) of a block."""
    return f"{block.name}{i}>{block.name}{j}:{g}"


def block_groupoid(blocks: Sequence[BlockSpec]) -> ParityGroupoid:
    """Sum of blocks; (j -> k, h) ∘ (i -> j, g) = (i -> k, h*g)."""
    decode: dict[str, tuple[BlockSpec, int, int, str]] = {}
    morphisms: dict[str, tuple[str, str]] = {}
    parity: dict[str, Sign] = {}
    identities: dict[str, str] = {}
    inverses: dict[str, str] = {}
    for block in blocks:
        omega = block.omega or tuple(Sign.PLUS for _ in range(block.size))
        for i in range(block.size):
            identities[f"{block.name}{i}"] = block_arrow(block, i, i, block.group.identity)
            for j in range(block.size):
                for g in block.group.elements:
                    mid = block_arrow(block, i, j, g)
                    decode[mid] = (block, i, j, g)
                    morphisms[mid] = (f"{block.name}{i}", f"{block.name}{j}")
                    parity[mid] = omega[i] * omega[j] * block.chi[g]
                    inverses[mid] = block_arrow(block, j, i, block.group.inverse(g))

    def rule(second: str, first: str) -> str:
        block, _, k, h = decode[second]
        _, i, _, g = decode[first]
        return block_arrow(block, i, k, block.group.multiply(h, g))

    groupoid = FiniteGroupoid(
        tuple(sorted(identities)), morphisms, identities, CompositionTable(morphisms, rule), inverses
    )
    return ParityGroupoid(groupoid, parity)


class SpanGenerator:
    """Reproducible generator of feet, spans, scalars and actions."""

    def __init__(self, seed: int | None = None):
        """Initialize generator.

        Args:
            seed: Random seed (defaults to RANDOM_SEED)
        """
        self.seed = settings.RANDOM_SEED if seed is None else seed
        self.rng = np.random.default_rng(self.seed)

    def _pick(self, options: Sequence):
        return options[int(self.rng.integers(len(options)))]

    def _sign(self) -> Sign:
        return Sign.MINUS if self.rng.integers(2) else Sign.PLUS

    def random_blocks(
        self,
        n_blocks: int,
        max_size: int = 2,
        groups: Sequence[str] = ("1", "C2", "C3", "S3"),
        orientable: bool | None = None,
        first_letter: int = 0,
    ) -> list[BlockSpec]:
        """Draw blocks; ``orientable`` forces (or forbids) an even parity."""
        blocks = []
        for idx in range(n_blocks):
            group = catalog_group(self._pick(list(groups)))
            chis = parity_homomorphisms(group)
            if orientable is True:
                chis = chis[:1]
            elif orientable is False:
                chis = chis[1:] or chis
            size = int(self.rng.integers(1, max_size + 1))
            blocks.append(
                BlockSpec(
                    name=BLOCK_LETTERS[first_letter + idx],
                    size=size,
                    group=group,
                    chi=self._pick(chis),
                    omega=tuple(self._sign() for _ in range(size)),
                )
            )
        return blocks

    def random_foot(self, max_blocks: int = 4, max_size: int = 2, groups: Sequence[str] = ("1", "C2", "C3", "S3")) -> ParityGroupoid:
        """Sum of 1..max_blocks random blocks."""
        n_blocks = int(self.rng.integers(1, max_blocks + 1))
        return block_groupoid(self.random_blocks(n_blocks, max_size, groups))

    def random_span(
        self,
        left: ParityGroupoid,
        right: ParityGroupoid,
        max_apex: int = 4,
        apex_groups: Sequence[str] = ("1", "C2"),
    ) -> PSpan:
        """Random span left <- M -> right with M a sum of BH components.

        Each apex component picks objects s, t of the feet and homomorphisms
        φ: H -> Aut(s), ψ: H -> Aut(t) with parity(φ(h)) = parity(ψ(h)).
        """
        n_apex = int(self.rng.integers(1, max_apex + 1))
        morphisms: dict[str, tuple[str, str]] = {}
        decode: dict[str, tuple[str, FiniteGroup, str]] = {}
        identities: dict[str, str] = {}
        inverses: dict[str, str] = {}
        left_objects, right_objects = {}, {}
        left_arrows, right_arrows = {}, {}
        rho = {}
        for idx in range(n_apex):
            m = f"m{idx}"
            s = self._pick(left.objects)
            t = self._pick(right.objects)
            group = catalog_group(self._pick(list(apex_groups)))
            pairs = self._compatible_pairs(group, left, s, right, t)
            phi, psi = self._pick(pairs)
            identities[m] = f"{m}:{group.identity}"
            for h in group.elements:
                mid = f"{m}:{h}"
                morphisms[mid] = (m, m)
                decode[mid] = (m, group, h)
                inverses[mid] = f"{m}:{group.inverse(h)}"
                left_arrows[mid] = phi[h]
                right_arrows[mid] = psi[h]
            left_objects[m], right_objects[m] = s, t
            rho[m] = self._sign()

        def rule(second: str, first: str) -> str:
            m, group, h = decode[second]
            _, _, g = decode[first]
            return f"{m}:{group.multiply(h, g)}"

        apex = FiniteGroupoid(
            tuple(sorted(identities)), morphisms, identities, CompositionTable(morphisms, rule), inverses
        )
        return PSpan(
            left,
            right,
            apex,
            GroupoidMap(left_objects, left_arrows),
            GroupoidMap(right_objects, right_arrows),
            rho,
        )

    def _compatible_pairs(
        self, group: FiniteGroup, left: ParityGroupoid, s: str, right: ParityGroupoid, t: str
    ) -> list[tuple[dict[str, str], dict[str, str]]]:
        aut_s = automorphism_group(left, s)
        aut_t = automorphism_group(right, t)
        phis = homomorphisms(group, aut_s)
        psis = homomorphisms(group, aut_t)
        return [
            (phi, psi)
            for phi in phis
            for psi in psis
            if all(left.parity[phi[h]] == right.parity[psi[h]] for h in group.elements)
        ]

    def random_endo_span(self, degree: int, max_apex: int | None = None) -> PSpan:
        """Endo-span whose foot has exactly ``degree`` orientable components.

        Feet use groups 1 and C2; up to degree 2 a non-orientable C2 block may
        be added, so immaterial parts show up.
        """
        max_size = 2 if degree <= 2 else 1
        blocks = self.random_blocks(degree, max_size, ("1", "C2"), orientable=True)
        if degree <= 2 and self.rng.integers(2):
            blocks += self.random_blocks(1, 1, ("C2",), orientable=False, first_letter=degree)
        foot = block_groupoid(blocks)
        if max_apex is None:
            max_apex = 4 if degree == 3 else 5
        return self.random_span(foot, foot, max_apex=max_apex)

    def random_scalar(self, max_components: int = 4, groups: Sequence[str] = ("1", "C2", "C3", "S3")) -> SignedGroupoid:
        """Sum of BG components with random signs."""
        blocks = self.random_blocks(int(self.rng.integers(1, max_components + 1)), 1, groups, orientable=True)
        groupoid = block_groupoid(blocks).underlying
        signs = {}
        for block in blocks:
            sign = self._sign()
            signs.update({x: sign for x in block.objects})
        return SignedGroupoid(groupoid, signs)

    def random_scalar_action(self, groups: Sequence[str] = ("C2", "C3", "S3")) -> tuple[SignedGroupoid, GroupAction]:
        """A discrete scalar with a sign-preserving action: free orbits plus fixed points."""
        group = catalog_group(self._pick(list(groups)))
        on_objects: dict[tuple[str, str], str] = {}
        objects: list[str] = []
        signs: dict[str, Sign] = {}
        for orbit in range(int(self.rng.integers(0, 3))):
            sign = self._sign()
            for g in group.elements:
                x = tuple_id((f"o{orbit}", g))
                objects.append(x)
                signs[x] = sign
                for h in group.elements:
                    on_objects[(x, h)] = tuple_id((f"o{orbit}", group.multiply(g, h)))
        for fixed in range(int(self.rng.integers(1, 3))):
            x = f"f{fixed}"
            objects.append(x)
            signs[x] = self._sign()
            for h in group.elements:
                on_objects[(x, h)] = x
        target = with_parity(
            FiniteGroupoid(
                tuple(sorted(objects)),
                {f"id_{x}": (x, x) for x in objects},
                {x: f"id_{x}" for x in objects},
                {(f"id_{x}", f"id_{x}"): f"id_{x}" for x in objects},
                {f"id_{x}": f"id_{x}" for x in objects},
            )
        )
        on_morphisms = {(f"id_{x}", h): f"id_{on_objects[(x, h)]}" for x in objects for h in group.elements}
        theta = {(h, x): Sign.PLUS for x in objects for h in group.elements}
        action = GroupAction(group, target, on_objects, on_morphisms, theta)
        return SignedGroupoid(target.underlying, signs), action


def generate(kind: str, seed: int, **params) -> PSpan | ParityGroupoid:
    """Expand a generator entry of a document.

    Args:
        kind: ``foot``, ``span`` or ``endo_span``
        seed: Random seed
        **params: Forwarded size parameters (``degree`` for endo spans)

    Raises:
        ValueError: For an unknown kind
    """
    gen = SpanGenerator(seed)
    logger.debug("generating %s from seed %d", kind, seed)
    if kind == "foot":
        return gen.random_foot(**params)
    if kind == "span":
        left = gen.random_foot(params.pop("max_blocks", 3))
        right = gen.random_foot(params.pop("max_blocks_right", 3))
        return gen.random_span(left, right, **params)
    if kind == "endo_span":
        return gen.random_endo_span(**params)
    raise ValueError(f"unknown generator kind '{kind}'")
