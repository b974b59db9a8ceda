"""Finite group catalog, group validation and homomorphism enumeration."""

import re
from itertools import product

from src.models import FiniteGroup, Permutation, Sign, ValidationReport

CATALOG_NAMES = ("1", "C2", "C3", "S3")


def trivial_group() -> FiniteGroup:
    """The trivial group {e}."""
    return FiniteGroup("1", ("e",), {("e", "e"): "e"})


def cyclic_group(n: int) -> FiniteGroup:
    """C_n with elements ``e, a, a2, ..., a{n-1}``."""
    if n < 1:
        raise ValueError(f"cyclic group order must be positive, got {n}")
    names = ["e", "a"] + [f"a{i}" for i in range(2, n)]
    names = names[:n]
    table = {(names[i], names[j]): names[(i + j) % n] for i in range(n) for j in range(n)}
    return FiniteGroup(f"C{n}", tuple(names), table)


def _perm_name(p: Permutation) -> str:
    return "p" + p.digits


def symmetric_group(k: int) -> FiniteGroup:
    """Σ_k on permutations named by their image, e.g. ``p1.0.2``; g*h = g∘h."""
    perms = list(Permutation.all(k))
    table = {(_perm_name(p), _perm_name(q)): _perm_name(p * q) for p in perms for q in perms}
    return FiniteGroup(f"S{k}", tuple(_perm_name(p) for p in perms), table, permutation_degree=k)


def permutation_of(name: str) -> Permutation:
    """Decode a symmetric group element name back to its Permutation."""
    digits = name[1:]
    return Permutation(tuple(int(j) for j in digits.split(".")) if digits else ())


def sign_parity(group: FiniteGroup) -> dict[str, Sign]:
    """Sign homomorphism of a symmetric group from the catalog.

    Raises:
        ValueError: If the group is not a symmetric group built by symmetric_group
    """
    if group.permutation_degree is None:
        raise ValueError(f"group {group.name} is not a permutation group")
    return {g: permutation_of(g).sign for g in group.elements}


def catalog_group(name: str) -> FiniteGroup:
    """Look up a group by name: ``1``, ``C<n>`` or ``S<k>``.

    Raises:
        ValueError: For unknown names
    """
    if name in ("1", "trivial"):
        return trivial_group()
    match = re.fullmatch(r"([CS])(\d+)", name)
    if not match:
        raise ValueError(f"unknown group '{name}'")
    kind, size = match.group(1), int(match.group(2))
    return cyclic_group(size) if kind == "C" else symmetric_group(size)


def validate_group(group: FiniteGroup) -> ValidationReport:
    """Check closure, associativity, neutral element and inverses of a table."""
    report = ValidationReport(f"group {group.name}")
    elements = set(group.elements)
    for g in group.elements:
        for h in group.elements:
            if group.table.get((g, h)) not in elements:
                report.add(f"product {g}*{h} missing or outside the group")
    if not report.ok:
        return report
    for g, h, k in product(group.elements, repeat=3):
        if group.multiply(group.multiply(g, h), k) != group.multiply(g, group.multiply(h, k)):
            report.add(f"associativity fails for ({g}, {h}, {k})")
            return report
    try:
        e = group.identity
    except ValueError as exc:
        report.add(str(exc))
        return report
    for g in group.elements:
        if not any(group.multiply(g, h) == e for h in group.elements):
            report.add(f"{g} has no inverse")
    return report


def homomorphisms(source: FiniteGroup, target: FiniteGroup) -> list[dict[str, str]]:
    """All group homomorphisms source -> target.

    Assignments on the generators of ``source`` are extended along words and
    kept when they are consistent.
    """
    gens = source.generators
    result = []
    for images in product(target.elements, repeat=len(gens)):
        assign = dict(zip(gens, images))
        phi = {source.identity: target.identity}
        frontier = [source.identity]
        consistent = True
        while frontier and consistent:
            nxt = []
            for x in frontier:
                for s in gens:
                    y = source.multiply(x, s)
                    value = target.multiply(phi[x], assign[s])
                    if y not in phi:
                        phi[y] = value
                        nxt.append(y)
                    elif phi[y] != value:
                        consistent = False
                        break
                if not consistent:
                    break
            frontier = nxt
        if not consistent:
            continue
        if all(
            phi[source.multiply(g, h)] == target.multiply(phi[g], phi[h])
            for g in source.elements
            for h in source.elements
        ):
            result.append(phi)
    return result


def parity_homomorphisms(group: FiniteGroup) -> list[dict[str, Sign]]:
    """All homomorphisms group -> O(1), trivial one first."""
    o1 = FiniteGroup("O(1)", ("+", "-"), {("+", "+"): "+", ("+", "-"): "-", ("-", "+"): "-", ("-", "-"): "+"})
    maps = [
        {g: Sign.PLUS if v == "+" else Sign.MINUS for g, v in phi.items()}
        for phi in homomorphisms(group, o1)
    ]
    return sorted(maps, key=lambda m: sum(1 for s in m.values() if s.is_odd))
