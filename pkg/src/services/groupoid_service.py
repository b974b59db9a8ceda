"""Finite groupoids with parity: builders, validation, pi0, cardinality,
sums, convolution products and weak quotients."""

import logging
from collections import deque
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from src.exceptions import GroupoidError, InvalidActionError
from src.models import (
    CompositionTable,
    Component,
    FiniteGroup,
    FiniteGroupoid,
    GroupAction,
    ParityGroupoid,
    Sign,
    ValidationReport,
    check_atomic_ids,
    tuple_id,
)

logger = logging.getLogger(__name__)

POINT_OBJECT = "*"
REPORT_LIMIT = 20


# ========== Builders ==========

def build_groupoid(
    objects: Iterable[str],
    morphisms: Mapping[str, tuple[str, str]],
    identities: Mapping[str, str],
    composition: Mapping[tuple[str, str], str],
    inverses: Mapping[str, str] | None = None,
) -> FiniteGroupoid:
    """Assemble a FiniteGroupoid, deriving inverses when not given.

    Args:
        objects: Object ids (any order)
        morphisms: Morphism id -> (source, target)
        identities: Object -> identity morphism
        composition: (g, f) -> g∘f
        inverses: Morphism -> inverse (derived from composition if None)

    Returns:
        The groupoid (not yet validated)

    Raises:
        GroupoidError: If inverses are derived and some morphism has none
    """
    objects = tuple(sorted(set(objects)))
    morphisms = dict(morphisms)
    identities = dict(identities)
    if inverses is None:
        inverses = {}
        by_ends: dict[tuple[str, str], list[str]] = {}
        for mor, ends in morphisms.items():
            by_ends.setdefault(ends, []).append(mor)
        for f, (src, tgt) in morphisms.items():
            for g in by_ends.get((tgt, src), []):
                if composition.get((g, f)) == identities.get(src):
                    inverses[f] = g
                    break
            else:
                raise GroupoidError(f"morphism {f} has no inverse")
    return FiniteGroupoid(objects, morphisms, identities, composition, dict(inverses))


def with_parity(groupoid: FiniteGroupoid, parity: Mapping[str, int] | None = None) -> ParityGroupoid:
    """Attach a parity map; missing morphisms are even."""
    parity = parity or {}
    return ParityGroupoid(
        groupoid, {m: Sign.of(parity.get(m, 1)) for m in groupoid.morphisms}
    )


def empty() -> ParityGroupoid:
    """The empty parity groupoid."""
    return with_parity(FiniteGroupoid((), {}, {}, {}, {}))


def point(obj: str = POINT_OBJECT) -> ParityGroupoid:
    """The trivial point e (unit of the convolution product)."""
    return discrete([obj])


def discrete(ids: Iterable[str]) -> ParityGroupoid:
    """Discrete groupoid on ids, all identities even; identity of x is ``id_x``.

    Raises:
        GroupoidError: If an id contains a reserved character
    """
    ids = list(ids)
    check_atomic_ids(ids, "object")
    identities = {x: f"id_{x}" for x in ids}
    morphisms = {f"id_{x}": (x, x) for x in ids}
    composition = {(f"id_{x}", f"id_{x}"): f"id_{x}" for x in ids}
    inverses = {f"id_{x}": f"id_{x}" for x in ids}
    return with_parity(build_groupoid(ids, morphisms, identities, composition, inverses))


def codiscrete(ids: Sequence[str], orientation: Mapping[str, int] | None = None) -> ParityGroupoid:
    """Pair groupoid: exactly one arrow ``x>y`` between any two objects.

    The parity of ``x>y`` is ω_x·ω_y for the given orientation ω (default all
    +1), so the groupoid is connected and orientable but may carry odd arrows
    between distinct objects.
    """
    check_atomic_ids(ids, "object", extra=">")
    omega = {x: Sign.of((orientation or {}).get(x, 1)) for x in ids}
    morphisms = {f"{x}>{y}": (x, y) for x in ids for y in ids}
    identities = {x: f"{x}>{x}" for x in ids}
    inverses = {f"{x}>{y}": f"{y}>{x}" for x in ids for y in ids}

    def rule(g: str, f: str) -> str:
        return f"{morphisms[f][0]}>{morphisms[g][1]}"

    groupoid = FiniteGroupoid(
        tuple(sorted(ids)), morphisms, identities, CompositionTable(morphisms, rule), inverses
    )
    return ParityGroupoid(groupoid, {m: omega[s] * omega[t] for m, (s, t) in morphisms.items()})


def classifying_groupoid(
    group: FiniteGroup,
    parity: Mapping[str, int] | None = None,
    obj: str = POINT_OBJECT,
) -> ParityGroupoid:
    """BG: one object whose morphisms are the group elements, g∘f = g*f.

    Args:
        group: The group
        parity: Homomorphism G -> O(1) as element -> ±1 (default trivial)
        obj: Id of the single object
    """
    check_atomic_ids([obj], "object")
    check_atomic_ids(group.elements, "group element")
    morphisms = {g: (obj, obj) for g in group.elements}
    composition = {(g, f): group.multiply(g, f) for g in group.elements for f in group.elements}
    inverses = {g: group.inverse(g) for g in group.elements}
    groupoid = FiniteGroupoid((obj,), morphisms, {obj: group.identity}, composition, inverses)
    return with_parity(groupoid, parity)


def restrict_groupoid(g: FiniteGroupoid, objects: Iterable[str]) -> FiniteGroupoid:
    """Full subgroupoid of a plain groupoid on the given objects."""
    keep = set(objects)
    morphisms = {m: ends for m, ends in g.morphisms.items() if ends[0] in keep and ends[1] in keep}
    return FiniteGroupoid(
        tuple(x for x in g.objects if x in keep),
        morphisms,
        {x: g.identity(x) for x in g.objects if x in keep},
        CompositionTable(morphisms, g.compose),
        {m: g.inverse(m) for m in morphisms},
    )


def full_subgroupoid(g: ParityGroupoid, objects: Iterable[str]) -> ParityGroupoid:
    """Full subgroupoid on the given objects, parity restricted."""
    groupoid = restrict_groupoid(g.underlying, objects)
    return ParityGroupoid(groupoid, {m: g.parity[m] for m in groupoid.morphisms})


def automorphism_group(g: FiniteGroupoid | ParityGroupoid, x: str) -> FiniteGroup:
    """Aut(x) as a FiniteGroup on morphism ids, with a*b := a∘b."""
    auts = g.automorphisms(x)
    table = {(a, b): g.compose(a, b) for a in auts for b in auts}
    return FiniteGroup(f"Aut({x})", auts, table)


# ========== Validation ==========

def validate_groupoid(g: ParityGroupoid | FiniteGroupoid, subject: str = "groupoid") -> ValidationReport:
    """Check every groupoid axiom and, for parity groupoids, parity multiplicativity.

    Args:
        g: Groupoid to check
        subject: Name used in the report

    Returns:
        Report listing violations (at most REPORT_LIMIT per axiom)
    """
    report = ValidationReport(subject)
    base = g.underlying if isinstance(g, ParityGroupoid) else g
    parity = g.parity if isinstance(g, ParityGroupoid) else None
    objects = set(base.objects)

    def note(kind: str, counts: dict, message: str) -> None:
        counts[kind] = counts.get(kind, 0) + 1
        if counts[kind] <= REPORT_LIMIT:
            report.add(message)

    counts: dict[str, int] = {}
    for mor, (src, tgt) in base.morphisms.items():
        if src not in objects or tgt not in objects:
            note("ends", counts, f"morphism {mor} has unknown endpoint")
    if report.violations:
        return report

    for x in base.objects:
        ident = base.identities.get(x)
        if ident is None or base.morphisms.get(ident) != (x, x):
            note("identity", counts, f"object {x} lacks an identity loop")
    if report.violations:
        return report

    # totality and well-typedness
    for f, (src_f, tgt_f) in base.morphisms.items():
        for g_ in base.arrows_from(tgt_f):
            h = base.composition.get((g_, f))
            if h is None:
                note("total", counts, f"composition totality: {g_} ∘ {f} missing")
            elif base.morphisms.get(h) != (src_f, base.target(g_)):
                note("total", counts, f"composition totality: {g_} ∘ {f} = {h} has wrong ends")
    for key in base.composition:
        g_, f = key
        if g_ not in base.morphisms or f not in base.morphisms or base.source(g_) != base.target(f):
            note("total", counts, f"composition totality: table defines non-composable pair {key}")
    if report.violations:
        return report

    for f, (src, tgt) in base.morphisms.items():
        if base.compose(f, base.identity(src)) != f or base.compose(base.identity(tgt), f) != f:
            note("unit", counts, f"identities are not neutral for {f}")

    for f, (_, tgt_f) in base.morphisms.items():
        for g_ in base.arrows_from(tgt_f):
            gf = base.compose(g_, f)
            for h in base.arrows_from(base.target(g_)):
                if base.compose(h, gf) != base.compose(base.compose(h, g_), f):
                    note("assoc", counts, f"associativity fails for ({h}, {g_}, {f})")

    for f, (src, tgt) in base.morphisms.items():
        inv = base.inverses.get(f)
        if (
            inv is None
            or base.morphisms.get(inv) != (tgt, src)
            or base.compose(inv, f) != base.identity(src)
            or base.compose(f, inv) != base.identity(tgt)
        ):
            note("inverse", counts, f"inverses: {f} has no two-sided inverse")

    if parity is not None:
        for x in base.objects:
            if parity.get(base.identity(x)) is not Sign.PLUS:
                note("parity", counts, f"parity(id_{x}) != +1")
        for f, (_, tgt_f) in base.morphisms.items():
            for g_ in base.arrows_from(tgt_f):
                if parity[base.compose(g_, f)] != parity[g_] * parity[f]:
                    note("parity", counts, f"parity multiplicativity fails for {g_} ∘ {f}")

    for kind, n in counts.items():
        if n > REPORT_LIMIT:
            report.add(f"... {n - REPORT_LIMIT} more {kind} violations")
    return report


# ========== Components and cardinality ==========

def pi0(g: ParityGroupoid) -> list[Component]:
    """Connected components with automorphism order and orientability.

    Args:
        g: Valid parity groupoid

    Returns:
        Components ordered by representative (least object id)
    """
    result = []
    for members in g.components:
        rep = members[0]
        result.append(
            Component(
                representative=rep,
                members=members,
                aut_order=len(g.automorphisms(rep)),
                orientable=not g.has_odd_automorphism(rep),
            )
        )
    return result


def homotopy_cardinality(g: ParityGroupoid | FiniteGroupoid) -> Fraction:
    """Σ over components of 1/|Aut|, exact."""
    return sum(
        (Fraction(1, len(g.automorphisms(members[0]))) for members in g.components),
        Fraction(0),
    )


def orientable_locus(g: ParityGroupoid) -> tuple[ParityGroupoid, dict[str, str]]:
    """Full subgroupoid on orientable components.

    Returns:
        (locus, map retained object -> component representative)
    """
    keep = {}
    for comp in pi0(g):
        if comp.orientable:
            keep.update({x: comp.representative for x in comp.members})
    return full_subgroupoid(g, keep), keep


def enumerate_orientations(g: ParityGroupoid) -> tuple[int, dict[str, Sign]] | None:
    """Count orientations and produce one witness.

    Returns:
        None if some component has an odd automorphism; otherwise
        (2^#components, ω) with ω_x·parity(a) = ω_y for every a: x -> y,
        ω = +1 on every representative.
    """
    if any(not c.orientable for c in pi0(g)):
        return None
    omega: dict[str, Sign] = {}
    for members in g.components:
        omega[members[0]] = Sign.PLUS
        queue = deque([members[0]])
        while queue:
            x = queue.popleft()
            for a in g.arrows_from(x):
                y = g.target(a)
                if y not in omega:
                    omega[y] = omega[x] * g.parity[a]
                    queue.append(y)
    return 2 ** len(g.components), omega


# ========== Sums and products ==========

def disjoint_union(groupoids: Sequence[FiniteGroupoid], tags: Sequence[str] | None = None) -> FiniteGroupoid:
    """Coproduct of plain groupoids; ids become ``tag/old``."""
    tags = list(tags) if tags is not None else [str(i) for i in range(len(groupoids))]
    morphisms: dict[str, tuple[str, str]] = {}
    origin: dict[str, tuple[int, str]] = {}
    identities: dict[str, str] = {}
    inverses: dict[str, str] = {}
    objects: list[str] = []
    for idx, (tag, g) in enumerate(zip(tags, groupoids)):
        objects.extend(f"{tag}/{x}" for x in g.objects)
        identities.update({f"{tag}/{x}": f"{tag}/{g.identity(x)}" for x in g.objects})
        for m, (s, t) in g.morphisms.items():
            morphisms[f"{tag}/{m}"] = (f"{tag}/{s}", f"{tag}/{t}")
            origin[f"{tag}/{m}"] = (idx, m)
            inverses[f"{tag}/{m}"] = f"{tag}/{g.inverse(m)}"

    def rule(g_: str, f: str) -> str:
        idx, g_old = origin[g_]
        _, f_old = origin[f]
        return f"{tags[idx]}/{groupoids[idx].compose(g_old, f_old)}"

    return FiniteGroupoid(
        tuple(sorted(objects)), morphisms, identities, CompositionTable(morphisms, rule), inverses
    )


def disjoint_sum(g: ParityGroupoid, h: ParityGroupoid) -> ParityGroupoid:
    """Coproduct G ⊔ H with ids relabeled ``0/..`` and ``1/..``; parity preserved."""
    union = disjoint_union([g.underlying, h.underlying])
    parity = {f"0/{m}": s for m, s in g.parity.items()}
    parity.update({f"1/{m}": s for m, s in h.parity.items()})
    return ParityGroupoid(union, parity)


def product_groupoid(g: FiniteGroupoid, h: FiniteGroupoid) -> tuple[FiniteGroupoid, dict[str, tuple[str, str]]]:
    """Cartesian product of plain groupoids with pair ids ``(a,b)``.

    Returns:
        (product, morphism id -> (left factor morphism, right factor morphism))
    """
    pairs = {tuple_id((a, b)): (a, b) for a in g.morphisms for b in h.morphisms}
    morphisms = {
        m: (tuple_id((g.source(a), h.source(b))), tuple_id((g.target(a), h.target(b))))
        for m, (a, b) in pairs.items()
    }
    identities = {
        tuple_id((x, y)): tuple_id((g.identity(x), h.identity(y)))
        for x in g.objects
        for y in h.objects
    }
    inverses = {m: tuple_id((g.inverse(a), h.inverse(b))) for m, (a, b) in pairs.items()}

    def rule(second: str, first: str) -> str:
        a2, b2 = pairs[second]
        a1, b1 = pairs[first]
        return tuple_id((g.compose(a2, a1), h.compose(b2, b1)))

    objects = tuple(sorted(identities))
    return FiniteGroupoid(objects, morphisms, identities, CompositionTable(morphisms, rule), inverses), pairs


def star_product(g: ParityGroupoid, h: ParityGroupoid) -> ParityGroupoid:
    """Convolution product G ∗ H: product groupoid, parity(a,b) = parity(a)·parity(b)."""
    product, pairs = product_groupoid(g.underlying, h.underlying)
    parity = {m: g.parity[a] * h.parity[b] for m, (a, b) in pairs.items()}
    logger.debug("star product: %d objects, %d morphisms", len(product.objects), len(parity))
    return ParityGroupoid(product, parity)


# ========== Group actions ==========

def validate_action(action: GroupAction) -> ValidationReport:
    """Check functor laws, the action law and the θ 2-cell conditions."""
    report = ValidationReport(f"action of {action.group.name}")
    group, x = action.group, action.target
    e = group.identity
    try:
        for g in group.elements:
            for a, (src, tgt) in x.morphisms.items():
                ag = action.act_morphism(a, g)
                if x.morphisms.get(ag) != (action.act(src, g), action.act(tgt, g)):
                    report.add(f"{g} does not preserve ends of {a}")
            for obj in x.objects:
                if action.act_morphism(x.identity(obj), g) != x.identity(action.act(obj, g)):
                    report.add(f"{g} does not preserve the identity of {obj}")
            for f, (_, tgt_f) in x.morphisms.items():
                for h in x.arrows_from(tgt_f):
                    lhs = action.act_morphism(x.compose(h, f), g)
                    rhs = x.compose(action.act_morphism(h, g), action.act_morphism(f, g))
                    if lhs != rhs:
                        report.add(f"{g} does not preserve the composite {h} ∘ {f}")
        for obj in x.objects:
            if action.act(obj, e) != obj:
                report.add(f"identity element moves {obj}")
            for g in group.elements:
                for h in group.elements:
                    gh = group.multiply(g, h)
                    if action.act(action.act(obj, g), h) != action.act(obj, gh):
                        report.add(f"action law fails at ({obj}, {g}, {h})")
                    if action.theta_at(gh, obj) != action.theta_at(g, obj) * action.theta_at(h, action.act(obj, g)):
                        report.add(f"θ compatibility with composition fails at ({obj}, {g}, {h})")
        for g in group.elements:
            for a, (src, tgt) in x.morphisms.items():
                lhs = x.parity[action.act_morphism(a, g)] * action.theta_at(g, src)
                if lhs != action.theta_at(g, tgt) * x.parity[a]:
                    report.add(f"θ_{g} is not natural at {a}")
    except KeyError as exc:
        report.add(f"action data incomplete: missing {exc}")
    return report


def weak_quotient(action: GroupAction) -> ParityGroupoid:
    """Weak quotient X/G.

    Objects are those of X; a morphism ``(a,g)`` for a: x -> y goes x -> y.g
    with parity parity(a)·θ_{g,y}. Composition: (b, h) ∘ (a, g) =
    ((b.g⁻¹)∘a, g·h).

    Raises:
        InvalidActionError: If the action fails validation
    """
    validate_action(action).raise_for_errors(InvalidActionError)
    x, group = action.target, action.group
    pairs = {tuple_id((a, g)): (a, g) for a in x.morphisms for g in group.elements}
    morphisms = {
        m: (x.source(a), action.act(x.target(a), g)) for m, (a, g) in pairs.items()
    }
    identities = {obj: tuple_id((x.identity(obj), group.identity)) for obj in x.objects}
    inverses = {
        m: tuple_id((action.act_morphism(x.inverse(a), g), group.inverse(g)))
        for m, (a, g) in pairs.items()
    }

    def rule(second: str, first: str) -> str:
        b, h = pairs[second]
        a, g = pairs[first]
        moved = action.act_morphism(b, group.inverse(g))
        return tuple_id((x.compose(moved, a), group.multiply(g, h)))

    parity = {m: x.parity[a] * action.theta_at(g, x.target(a)) for m, (a, g) in pairs.items()}
    groupoid = FiniteGroupoid(x.objects, morphisms, identities, CompositionTable(morphisms, rule), inverses)
    logger.debug("weak quotient by %s: %d morphisms", group.name, len(morphisms))
    return ParityGroupoid(groupoid, parity)
