"""P-span algebra: validation, composition by homotopy pullback, fibers and scalars."""

import logging
from typing import Iterable, Sequence

from src.exceptions import FootMismatchError, InvalidActionError, SpanError
from src.models import (
    CompositionTable,
    FiberPoint,
    FiniteGroupoid,
    GroupAction,
    GroupoidMap,
    ParityGroupoid,
    PSpan,
    Sign,
    SignedGroupoid,
    TwoSidedFiber,
    ValidationReport,
    tuple_id,
)
from src.services.groupoid_service import (
    POINT_OBJECT,
    discrete,
    disjoint_union,
    point,
    product_groupoid,
    restrict_groupoid,
    validate_groupoid,
    weak_quotient,
)

logger = logging.getLogger(__name__)


def feet_match(p: ParityGroupoid, q: ParityGroupoid) -> bool:
    """Same objects, morphisms and parity (composition tables are not compared)."""
    return p is q or (
        p.objects == q.objects
        and dict(p.morphisms) == dict(q.morphisms)
        and dict(p.parity) == dict(q.parity)
    )


def _require_feet_match(p: ParityGroupoid, q: ParityGroupoid, what: str) -> None:
    if not feet_match(p, q):
        raise FootMismatchError(f"{what}: feet differ ({p} vs {q})")


# ========== Validation ==========

def _check_functor(
    report: ValidationReport,
    side: str,
    apex: FiniteGroupoid,
    foot: ParityGroupoid,
    fmap: GroupoidMap,
) -> None:
    for m in apex.objects:
        if fmap.objects.get(m) not in foot.objects:
            report.add(f"{side} leg sends object {m} outside the foot")
    if not report.ok:
        return
    for a, (src, tgt) in apex.morphisms.items():
        image = fmap.morphisms.get(a)
        if image is None or foot.morphisms.get(image) != (fmap.objects[src], fmap.objects[tgt]):
            report.add(f"{side} leg does not preserve ends of {a}")
    if not report.ok:
        return
    for m in apex.objects:
        if not foot.underlying.is_identity(fmap.morphisms[apex.identity(m)]):
            report.add(f"{side} leg does not preserve the identity of {m}")
    for f, (_, tgt) in apex.morphisms.items():
        for g in apex.arrows_from(tgt):
            lhs = fmap.morphisms[apex.compose(g, f)]
            rhs = foot.compose(fmap.morphisms[g], fmap.morphisms[f])
            if lhs != rhs:
                report.add(f"{side} leg does not preserve the composite {g} ∘ {f}")


def validate_span(sp: PSpan, check_feet: bool = False) -> ValidationReport:
    """Check functor laws of both legs and the ρ-naturality square.

    Args:
        sp: Span to check
        check_feet: Also validate feet and apex as groupoids

    Returns:
        Report of violations (never raises)
    """
    report = ValidationReport("span")
    if check_feet:
        report.merge(validate_groupoid(sp.left_foot, "left foot"))
        report.merge(validate_groupoid(sp.right_foot, "right foot"))
        report.merge(validate_groupoid(sp.apex, "apex"))
        if not report.ok:
            return report
    for m in sp.apex.objects:
        if m not in sp.rho:
            report.add(f"rho missing at {m}")
    _check_functor(report, "left", sp.apex, sp.left_foot, sp.left_map)
    _check_functor(report, "right", sp.apex, sp.right_foot, sp.right_map)
    if not report.ok:
        return report
    for a, (m, m2) in sp.apex.morphisms.items():
        lhs = sp.left_foot.parity[sp.left_arrow(a)] * sp.rho[m2]
        rhs = sp.rho[m] * sp.right_foot.parity[sp.right_arrow(a)]
        if lhs != rhs:
            report.add(f"rho naturality fails at {a}: {m} -> {m2}")
    return report


# ========== Constructors ==========

def identity_span(s: ParityGroupoid) -> PSpan:
    """S <- S -> S with identity legs and ρ ≡ +1."""
    same = GroupoidMap({x: x for x in s.objects}, {m: m for m in s.morphisms})
    return PSpan(s, s, s.underlying, same, same, {x: Sign.PLUS for x in s.objects})


def negative(sp: PSpan) -> PSpan:
    """Same span with ρ negated pointwise."""
    return PSpan(
        sp.left_foot,
        sp.right_foot,
        sp.apex,
        sp.left_map,
        sp.right_map,
        {m: -s for m, s in sp.rho.items()},
    )


def transpose(sp: PSpan) -> PSpan:
    """Swap the feet and legs; ρ is its own inverse in O(1)."""
    return PSpan(sp.right_foot, sp.left_foot, sp.apex, sp.right_map, sp.left_map, sp.rho)


def elementary_state(s: ParityGroupoid, obj: str, sign: Sign = Sign.PLUS) -> PSpan:
    """Name of an object: 1 <- 1 -> S picking ``obj``, with ρ = sign.

    Raises:
        SpanError: If obj is not an object of s
    """
    if obj not in s.objects:
        raise SpanError(f"unknown object {obj}")
    ident = f"id_{obj}"
    apex = FiniteGroupoid((obj,), {ident: (obj, obj)}, {obj: ident}, {(ident, ident): ident}, {ident: ident})
    left = GroupoidMap({obj: POINT_OBJECT}, {f"id_{obj}": f"id_{POINT_OBJECT}"})
    right = GroupoidMap({obj: obj}, {f"id_{obj}": s.identity(obj)})
    return PSpan(point(), s, apex, left, right, {obj: Sign.of(sign)})


def compose(a: PSpan, b: PSpan) -> PSpan:
    """Composite S <- M ×_J N -> T by the iso-comma homotopy pullback.

    Apex objects are ``[m|γ|n]`` with γ: right_a(m) -> left_b(n) in J. An
    apex arrow out of (m, γ, n) is a pair (α out of m, β out of n); its
    target carries γ' = left_b(β)∘γ∘right_a(α)⁻¹. The sign ratio is
    ρ_a(m)·parity_J(γ)·ρ_b(n).

    Args:
        a: Span S -> J
        b: Span J -> T

    Returns:
        Span S -> T

    Raises:
        FootMismatchError: If a's right foot is not b's left foot
    """
    _require_feet_match(a.right_foot, b.left_foot, "compose")
    j = a.right_foot
    triples: dict[str, tuple[str, str, str]] = {}
    for m in a.apex.objects:
        for n in b.apex.objects:
            for gamma in j.hom(a.right(m), b.left(n)):
                triples[f"[{m}|{gamma}|{n}]"] = (m, gamma, n)
    index = {t: oid for oid, t in triples.items()}

    arrows: dict[str, tuple[str, str, str]] = {}
    morphisms: dict[str, tuple[str, str]] = {}
    for oid, (m, gamma, n) in triples.items():
        for alpha in a.apex.arrows_from(m):
            back = j.inverse(a.right_arrow(alpha))
            for beta in b.apex.arrows_from(n):
                moved = j.compose(b.left_arrow(beta), j.compose(gamma, back))
                target = index[(a.apex.target(alpha), moved, b.apex.target(beta))]
                mid = tuple_id((oid, alpha, beta))
                arrows[mid] = (oid, alpha, beta)
                morphisms[mid] = (oid, target)

    def rule(second: str, first: str) -> str:
        _, alpha2, beta2 = arrows[second]
        oid, alpha1, beta1 = arrows[first]
        return tuple_id((oid, a.apex.compose(alpha2, alpha1), b.apex.compose(beta2, beta1)))

    identities = {
        oid: tuple_id((oid, a.apex.identity(m), b.apex.identity(n)))
        for oid, (m, _, n) in triples.items()
    }
    inverses = {
        mid: tuple_id((morphisms[mid][1], a.apex.inverse(alpha), b.apex.inverse(beta)))
        for mid, (_, alpha, beta) in arrows.items()
    }
    apex = FiniteGroupoid(
        tuple(sorted(triples)), morphisms, identities, CompositionTable(morphisms, rule), inverses
    )
    left = GroupoidMap(
        {oid: a.left(m) for oid, (m, _, _) in triples.items()},
        {mid: a.left_arrow(alpha) for mid, (_, alpha, _) in arrows.items()},
    )
    right = GroupoidMap(
        {oid: b.right(n) for oid, (_, _, n) in triples.items()},
        {mid: b.right_arrow(beta) for mid, (_, _, beta) in arrows.items()},
    )
    rho = {oid: a.rho[m] * j.parity[gamma] * b.rho[n] for oid, (m, gamma, n) in triples.items()}
    logger.debug("composed span apex: %d objects, %d morphisms", len(triples), len(morphisms))
    return PSpan(a.left_foot, b.right_foot, apex, left, right, rho)


# ========== Fibers ==========

def _point_id(alpha: str, m: str, beta: str) -> str:
    return f"[{alpha}|{m}|{beta}]"


def two_sided_fiber(sp: PSpan, i: str, j: str) -> TwoSidedFiber:
    """Two-sided homotopy fiber of the span over (i, j), with signs.

    Points are (α: left(m) -> i, m, β: right(m) -> j) with sign
    parity(α)·ρ(m)·parity(β). An apex arrow θ: m -> m' moves a point to
    (α∘left(θ)⁻¹, m', β∘right(θ)⁻¹).

    Raises:
        SpanError: If i or j is not an object of its foot
        ConsistencyError: If a sign is not constant on a component
    """
    if i not in sp.left_foot.objects or j not in sp.right_foot.objects:
        raise SpanError(f"fiber basepoint ({i}, {j}) is not in the feet")
    s, t = sp.left_foot, sp.right_foot
    points: dict[str, FiberPoint] = {}
    for m in sp.apex.objects:
        for alpha in s.hom(sp.left(m), i):
            for beta in t.hom(sp.right(m), j):
                points[_point_id(alpha, m, beta)] = FiberPoint(alpha, m, beta)

    arrows: dict[str, tuple[str, str]] = {}
    morphisms: dict[str, tuple[str, str]] = {}
    for pid, p in points.items():
        for theta in sp.apex.arrows_from(p.apex):
            alpha = s.compose(p.alpha, s.inverse(sp.left_arrow(theta)))
            beta = t.compose(p.beta, t.inverse(sp.right_arrow(theta)))
            mid = tuple_id((pid, theta))
            arrows[mid] = (pid, theta)
            morphisms[mid] = (pid, _point_id(alpha, sp.apex.target(theta), beta))

    def rule(second: str, first: str) -> str:
        pid, theta1 = arrows[first]
        return tuple_id((pid, sp.apex.compose(arrows[second][1], theta1)))

    identities = {pid: tuple_id((pid, sp.apex.identity(p.apex))) for pid, p in points.items()}
    inverses = {
        mid: tuple_id((morphisms[mid][1], sp.apex.inverse(theta))) for mid, (_, theta) in arrows.items()
    }
    groupoid = FiniteGroupoid(
        tuple(sorted(points)), morphisms, identities, CompositionTable(morphisms, rule), inverses
    )
    signs = {pid: s.parity[p.alpha] * sp.rho[p.apex] * t.parity[p.beta] for pid, p in points.items()}
    logger.debug("fiber over (%s, %s): %d points", i, j, len(points))
    return TwoSidedFiber(groupoid, signs, row=i, column=j, points=points)


def is_isofibration(sp: PSpan, side: str = "left") -> bool:
    """True if every foot arrow out of a leg image lifts to an apex arrow."""
    foot = sp.left_foot if side == "left" else sp.right_foot
    fmap = sp.left_map if side == "left" else sp.right_map
    for m in sp.apex.objects:
        lifted = {fmap.morphisms[a] for a in sp.apex.arrows_from(m)}
        if any(s not in lifted for s in foot.arrows_from(fmap.objects[m])):
            return False
    return True


def strict_fiber(sp: PSpan, i: str, j: str) -> SignedGroupoid:
    """Fiber strict on the left, homotopy on the right.

    Points are (m, β) with left(m) = i and β: right(m) -> j, sign
    ρ(m)·parity(β); arrows are θ with left(θ) = id_i. Equivalent to
    two_sided_fiber when the left leg is an isofibration.

    Raises:
        SpanError: If the left leg is not an isofibration
    """
    if not is_isofibration(sp, "left"):
        raise SpanError("strict fiber needs an isofibration on the left leg")
    s, t = sp.left_foot, sp.right_foot
    points = {
        f"[{m}|{beta}]": (m, beta)
        for m in sp.apex.objects
        if sp.left(m) == i
        for beta in t.hom(sp.right(m), j)
    }
    arrows: dict[str, tuple[str, str]] = {}
    morphisms: dict[str, tuple[str, str]] = {}
    for pid, (m, beta) in points.items():
        for theta in sp.apex.arrows_from(m):
            if sp.left_arrow(theta) != s.identity(i):
                continue
            moved = t.compose(beta, t.inverse(sp.right_arrow(theta)))
            mid = tuple_id((pid, theta))
            arrows[mid] = (pid, theta)
            morphisms[mid] = (pid, f"[{sp.apex.target(theta)}|{moved}]")

    def rule(second: str, first: str) -> str:
        pid, theta1 = arrows[first]
        return tuple_id((pid, sp.apex.compose(arrows[second][1], theta1)))

    groupoid = FiniteGroupoid(
        tuple(sorted(points)),
        morphisms,
        {pid: tuple_id((pid, sp.apex.identity(m))) for pid, (m, _) in points.items()},
        CompositionTable(morphisms, rule),
        {mid: tuple_id((morphisms[mid][1], sp.apex.inverse(theta))) for mid, (_, theta) in arrows.items()},
    )
    signs = {pid: sp.rho[m] * t.parity[beta] for pid, (m, beta) in points.items()}
    return SignedGroupoid(groupoid, signs)


# ========== Scalars ==========

def fingerprint(sc: SignedGroupoid, sizes: bool = True) -> tuple[tuple[int, ...], ...]:
    """Sorted multiset of (sign, |Aut|, object count) over components.

    Args:
        sc: Scalar
        sizes: Include component object counts (equivalence ignores them)
    """
    entries = []
    for members in sc.components:
        rep = members[0]
        entry = (int(sc.signs[rep]), len(sc.underlying.automorphisms(rep)))
        entries.append(entry + (len(members),) if sizes else entry)
    return tuple(sorted(entries))


def sign_split(sc: SignedGroupoid) -> tuple[FiniteGroupoid, FiniteGroupoid]:
    """Positive and negative parts as full subgroupoids."""
    pos = [x for x in sc.underlying.objects if sc.signs[x] is Sign.PLUS]
    neg = [x for x in sc.underlying.objects if sc.signs[x] is Sign.MINUS]
    return restrict_groupoid(sc.underlying, pos), restrict_groupoid(sc.underlying, neg)


def unit_scalar(sign: Sign = Sign.PLUS) -> SignedGroupoid:
    """The point with the given sign: 1 or -1."""
    return SignedGroupoid(point().underlying, {POINT_OBJECT: Sign.of(sign)})


def terminal_scalar() -> SignedGroupoid:
    """ΩP = {⊕, ⊖}: one positive and one negative point."""
    return SignedGroupoid(discrete(["+", "-"]).underlying, {"+": Sign.PLUS, "-": Sign.MINUS})


def scalar_multiply(s1: SignedGroupoid, s2: SignedGroupoid) -> SignedGroupoid:
    """Product groupoid with the Brahmagupta sign rule sign(a,b) = sign(a)·sign(b)."""
    product, _ = product_groupoid(s1.underlying, s2.underlying)
    signs = {
        tuple_id((x, y)): s1.signs[x] * s2.signs[y]
        for x in s1.underlying.objects
        for y in s2.underlying.objects
    }
    return SignedGroupoid(product, signs)


def signed_sum(scalars: Sequence[SignedGroupoid], tags: Sequence[str] | None = None) -> SignedGroupoid:
    """Homotopy sum of scalars; object ids become ``tag/old``."""
    tags = list(tags) if tags is not None else [str(i) for i in range(len(scalars))]
    union = disjoint_union([sc.underlying for sc in scalars], tags)
    signs = {f"{tag}/{x}": s for tag, sc in zip(tags, scalars) for x, s in sc.signs.items()}
    return SignedGroupoid(union, signs)


def scalar_of_span(sp: PSpan) -> SignedGroupoid:
    """Read a span 1 -> 1 as a scalar.

    Raises:
        SpanError: If a foot is not the point
    """
    if not sp.is_scalar():
        raise SpanError("span is not a scalar (feet are not the point)")
    return SignedGroupoid(sp.apex, dict(sp.rho))


def span_of_scalar(sc: SignedGroupoid, foot: ParityGroupoid | None = None) -> PSpan:
    """The span e <- S -> e of a scalar."""
    foot = foot or point()
    (pt,) = foot.objects
    ident = foot.identity(pt)
    legs = GroupoidMap(
        {x: pt for x in sc.underlying.objects}, {m: ident for m in sc.underlying.morphisms}
    )
    return PSpan(foot, foot, sc.underlying, legs, legs, dict(sc.signs))


def scale_state(sc: SignedGroupoid, state: PSpan) -> PSpan:
    """Scalar multiple of a state (composite 1 -> 1 -> J)."""
    if not state.is_state():
        raise SpanError("scale_state needs a state")
    return compose(span_of_scalar(sc, state.left_foot), state)


def inner_product(x: PSpan, y: PSpan) -> SignedGroupoid:
    """⟨x, y⟩: compose x with the transpose of y and read the apex as a scalar.

    Raises:
        FootMismatchError: If the states live over different groupoids
    """
    _require_feet_match(x.right_foot, y.right_foot, "inner product")
    _require_feet_match(x.left_foot, y.left_foot, "inner product")
    return scalar_of_span(compose(x, transpose(y)))


def cancellation_pairing(sp: PSpan, i: str, j: str) -> dict[str, str]:
    """Sign-reversing pairing of fiber components from an odd automorphism of j.

    The first odd g ∈ Aut(j) acts on the fiber by (α, m, β) ↦ (α, m, g∘β);
    this is an automorphism of the fiber groupoid flipping every sign.

    Returns:
        Component representative -> representative of its image

    Raises:
        SpanError: If j has no odd automorphism
    """
    t = sp.right_foot
    odd = [g for g in t.automorphisms(j) if t.parity[g].is_odd]
    if not odd:
        raise SpanError(f"{j} has no odd automorphism")
    g = odd[0]
    fiber = two_sided_fiber(sp, i, j)
    component_of = fiber.underlying.component_of
    pairing = {}
    for members in fiber.components:
        p = fiber.points[members[0]]
        pairing[members[0]] = component_of[_point_id(p.alpha, p.apex, t.compose(g, p.beta))]
    return pairing


def quotient_scalar(sc: SignedGroupoid, action: GroupAction) -> SignedGroupoid:
    """Quotient of a scalar by a group action on its underlying groupoid.

    Raises:
        InvalidActionError: If the action does not act on sc's groupoid, has
            odd 2-cell data, or exchanges positive and negative parts
    """
    if action.target.objects != sc.underlying.objects:
        raise InvalidActionError("action does not act on the scalar's groupoid")
    for (g, x), theta in action.theta.items():
        if theta.is_odd:
            raise InvalidActionError(f"θ_{g} is odd at {x}; not a scalar action")
    for x in sc.underlying.objects:
        for g in action.group.elements:
            if sc.signs[action.act(x, g)] != sc.signs[x]:
                raise InvalidActionError(
                    f"{g} exchanges the sign of {x}; not a scalar action"
                )
    quotient = weak_quotient(action)
    return SignedGroupoid(quotient.underlying, dict(sc.signs))


def states_sum(states: Iterable[PSpan]) -> PSpan:
    """Sum of states over one groupoid (disjoint union of apexes)."""
    states = list(states)
    if not states:
        raise SpanError("sum of no states")
    for st in states[1:]:
        _require_feet_match(states[0].right_foot, st.right_foot, "state sum")
    tags = [str(k) for k in range(len(states))]
    apex = disjoint_union([st.apex for st in states], tags)
    left = GroupoidMap(
        {f"{tag}/{m}": st.left(m) for tag, st in zip(tags, states) for m in st.apex.objects},
        {f"{tag}/{a}": st.left_arrow(a) for tag, st in zip(tags, states) for a in st.apex.morphisms},
    )
    right = GroupoidMap(
        {f"{tag}/{m}": st.right(m) for tag, st in zip(tags, states) for m in st.apex.objects},
        {f"{tag}/{a}": st.right_arrow(a) for tag, st in zip(tags, states) for a in st.apex.morphisms},
    )
    rho = {f"{tag}/{m}": s for tag, st in zip(tags, states) for m, s in st.rho.items()}
    return PSpan(states[0].left_foot, states[0].right_foot, apex, left, right, rho)
