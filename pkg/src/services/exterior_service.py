"""Exterior and symmetric powers of parity groupoids and of P-spans."""

import logging
from itertools import product
from math import factorial
from typing import Sequence

from src.config.settings import settings
from src.exceptions import BudgetExceededError
from src.models import (
    CompositionTable,
    ExteriorPower,
    ExteriorSpan,
    FiniteGroup,
    FiniteGroupoid,
    GroupAction,
    GroupoidMap,
    ParityGroupoid,
    Permutation,
    PSpan,
    Sign,
    TuplePower,
    power_morphism_id,
    power_object_id,
)
from src.services.group_service import permutation_of, symmetric_group
from src.services.groupoid_service import weak_quotient

logger = logging.getLogger(__name__)


def permutation_sign(sigma: Permutation) -> Sign:
    """Parity of σ under the sign representation Σ_k -> O(1)."""
    return sigma.sign


def candidate_count(g: FiniteGroupoid | ParityGroupoid, k: int) -> int:
    """Morphism candidates enumerated by the k-th power: |Mor|^k · k!."""
    return len(g.morphisms) ** k * factorial(k)


def tuple_power(
    base: FiniteGroupoid,
    k: int,
    permutations: Sequence[Permutation] | None = None,
) -> TuplePower:
    """X^k/Σ_k as an explicit groupoid.

    A morphism (σ, γ) out of (y_1..y_k) has γ_j: y_j -> x_σ(j); composing
    (σ, γ) then (σ'', γ'') gives (σ''∘σ, j ↦ γ''_σ(j) ∘ γ_j).

    Args:
        base: Plain groupoid X
        k: Degree
        permutations: Restrict σ to this list (identity only gives X^k)
    """
    perms = list(permutations) if permutations is not None else list(Permutation.all(k))
    tuples = {power_object_id(t): t for t in product(base.objects, repeat=k)}
    arrows: dict[str, tuple[Permutation, tuple[str, ...]]] = {}
    morphisms: dict[str, tuple[str, str]] = {}
    for src, ys in tuples.items():
        choices = [base.arrows_from(y) for y in ys]
        for sigma in perms:
            for gammas in product(*choices):
                xs = [""] * k
                for j, gamma in enumerate(gammas):
                    xs[sigma(j)] = base.target(gamma)
                mid = power_morphism_id(sigma, gammas)
                arrows[mid] = (sigma, gammas)
                morphisms[mid] = (src, power_object_id(xs))

    def rule(second: str, first: str) -> str:
        sigma2, gammas2 = arrows[second]
        sigma1, gammas1 = arrows[first]
        return power_morphism_id(
            sigma2 * sigma1,
            [base.compose(gammas2[sigma1(j)], gammas1[j]) for j in range(k)],
        )

    identities = {
        obj: power_morphism_id(Permutation.identity(k), [base.identity(y) for y in ys])
        for obj, ys in tuples.items()
    }
    inverses = {}
    for mid, (sigma, gammas) in arrows.items():
        inv = sigma.inverse()
        inverses[mid] = power_morphism_id(inv, [base.inverse(gammas[inv(i)]) for i in range(k)])
    groupoid = FiniteGroupoid(
        tuple(sorted(tuples)), morphisms, identities, CompositionTable(morphisms, rule), inverses
    )
    return TuplePower(k, groupoid, tuples, arrows)


class ExteriorPowerBuilder:
    """Builds exterior and symmetric powers under a morphism budget."""

    def __init__(self, budget: int | None = None):
        """Initialize builder.

        Args:
            budget: Max morphism candidates (defaults to MORPHISM_BUDGET)
        """
        self.budget = budget if budget is not None else settings.MORPHISM_BUDGET

    def check_budget(self, g: FiniteGroupoid | ParityGroupoid, k: int) -> None:
        """Raise BudgetExceededError if the k-th power of g is too large."""
        candidates = candidate_count(g, k)
        if candidates > self.budget:
            logger.warning(
                "degree %d power needs %d candidates (budget %d)", k, candidates, self.budget
            )
            raise BudgetExceededError(candidates, self.budget)

    def power(self, x: ParityGroupoid, k: int, symmetric: bool = False) -> ExteriorPower:
        """Λᵏ X, or Sym^k X with ``symmetric``.

        Raises:
            ValueError: If k is negative
            BudgetExceededError: If the enumeration exceeds the budget
        """
        if k < 0:
            raise ValueError(f"degree must be nonnegative, got {k}")
        self.check_budget(x, k)
        power = tuple_power(x.underlying, k)
        parity = {}
        for mid, (sigma, gammas) in power.arrows.items():
            sign = Sign.product(x.parity[g] for g in gammas)
            parity[mid] = sign if symmetric else sign * sigma.sign
        logger.debug("power of degree %d: %d objects, %d morphisms", k, len(power.tuples), len(parity))
        return ExteriorPower(power, ParityGroupoid(power.groupoid, parity), symmetric)

    def exterior_power_groupoid(self, x: ParityGroupoid, k: int) -> ParityGroupoid:
        """Λᵏ X = X^k/Σ_k with parity sign(σ)·Π parity(γ_j)."""
        return self.power(x, k).groupoid

    def symmetric_power_groupoid(self, x: ParityGroupoid, k: int) -> ParityGroupoid:
        """Sym^k X: same groupoid, parity Π parity(γ_j)."""
        return self.power(x, k, symmetric=True).groupoid

    def span(self, sp: PSpan, k: int) -> ExteriorSpan:
        """Λᵏ of a span, componentwise, with ρ(m_1..m_k) = Π ρ(m_i).

        Raises:
            BudgetExceededError: If a foot or the apex exceeds the budget
        """
        self.check_budget(sp.apex, k)
        left = self.power(sp.left_foot, k)
        right = left if sp.right_foot is sp.left_foot else self.power(sp.right_foot, k)
        apex = tuple_power(sp.apex, k)

        def leg(fmap: GroupoidMap) -> GroupoidMap:
            return GroupoidMap(
                {
                    obj: power_object_id([fmap.objects[m] for m in ms])
                    for obj, ms in apex.tuples.items()
                },
                {
                    mid: power_morphism_id(sigma, [fmap.morphisms[g] for g in gammas])
                    for mid, (sigma, gammas) in apex.arrows.items()
                },
            )

        rho = {obj: Sign.product(sp.rho[m] for m in ms) for obj, ms in apex.tuples.items()}
        span = PSpan(
            left.groupoid, right.groupoid, apex.groupoid, leg(sp.left_map), leg(sp.right_map), rho
        )
        return ExteriorSpan(span, left, right, apex)

    def exterior_power_span(self, sp: PSpan, k: int) -> PSpan:
        """Λᵏ S <- Λᵏ M -> Λᵏ T."""
        return self.span(sp, k).span


def exterior_power_groupoid(x: ParityGroupoid, k: int, budget: int | None = None) -> ParityGroupoid:
    """Λᵏ X with the default (or given) budget."""
    return ExteriorPowerBuilder(budget).exterior_power_groupoid(x, k)


def symmetric_power_groupoid(x: ParityGroupoid, k: int, budget: int | None = None) -> ParityGroupoid:
    """Sym^k X with the default (or given) budget."""
    return ExteriorPowerBuilder(budget).symmetric_power_groupoid(x, k)


def exterior_power_span(sp: PSpan, k: int, budget: int | None = None) -> PSpan:
    """Λᵏ of a span with the default (or given) budget."""
    return ExteriorPowerBuilder(budget).exterior_power_span(sp, k)


def alternating_arrow(x: ParityGroupoid, parts: Sequence[str], sigma: Permutation) -> str:
    """The arrow (σ, id) of Λᵏ X from (y_1..y_k) to x with x_σ(j) = y_j.

    Its parity in Λᵏ X is sign(σ): the quotient map X^k -> Λᵏ X is alternating.
    """
    return power_morphism_id(sigma, [x.identity(y) for y in parts])


def signed_permutation_action(x: ParityGroupoid, k: int) -> GroupAction:
    """Σ_k acting on X^{∗k} by (x.σ)_j = x_σ(j), with θ_σ = sign(σ)."""
    group: FiniteGroup = symmetric_group(k)
    base = tuple_power(x.underlying, k, [Permutation.identity(k)])
    product_parity = {
        mid: Sign.product(x.parity[g] for g in gammas) for mid, (_, gammas) in base.arrows.items()
    }
    target = ParityGroupoid(base.groupoid, product_parity)
    on_objects, on_morphisms, theta = {}, {}, {}
    ident = Permutation.identity(k)
    for g in group.elements:
        sigma = permutation_of(g)
        for obj, ys in base.tuples.items():
            on_objects[(obj, g)] = power_object_id([ys[sigma(j)] for j in range(k)])
            theta[(g, obj)] = sigma.sign
        for mid, (_, gammas) in base.arrows.items():
            on_morphisms[(mid, g)] = power_morphism_id(ident, [gammas[sigma(j)] for j in range(k)])
    return GroupAction(group, target, on_objects, on_morphisms, theta)


def exterior_power_via_quotient(x: ParityGroupoid, k: int) -> ParityGroupoid:
    """Λᵏ X as the weak quotient of X^{∗k} by the sign-twisted Σ_k action."""
    return weak_quotient(signed_permutation_action(x, k))
