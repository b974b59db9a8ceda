"""P-spans: composition, fibers, scalars and the cancellation pairing."""

import pytest

from src.exceptions import FootMismatchError, InvalidActionError, SpanError
from src.models import GroupoidMap, PSpan, Sign, SignedGroupoid
from src.services.cardinality_service import (
    matrix_of_span,
    scalar_cardinality,
    vector_of_state,
)
from src.services.generator import SpanGenerator
from src.services.groupoid_service import homotopy_cardinality, point
from src.services.span_service import (
    cancellation_pairing,
    compose,
    elementary_state,
    fingerprint,
    identity_span,
    inner_product,
    is_isofibration,
    negative,
    quotient_scalar,
    scalar_multiply,
    scalar_of_span,
    scale_state,
    sign_split,
    signed_sum,
    span_of_scalar,
    states_sum,
    strict_fiber,
    terminal_scalar,
    transpose,
    two_sided_fiber,
    unit_scalar,
    validate_span,
)


def test_fixture_spans_validate(split_idempotent, group_actions):
    assert validate_span(split_idempotent, check_feet=True).ok
    for sp in group_actions.spans.values():
        assert validate_span(sp, check_feet=True).ok


def test_rho_naturality_violation(odd_bc2, even_bc2):
    sp = PSpan(
        point(),
        odd_bc2,
        even_bc2.underlying,
        GroupoidMap({"*": "*"}, {"e": "id_*", "a": "id_*"}),
        GroupoidMap({"*": "*"}, {"e": "e", "a": "a"}),
        {"*": Sign.PLUS},
    )
    report = validate_span(sp)
    assert report.violations == ["rho naturality fails at a: * -> *"]


def test_two_sided_fiber_points(split_idempotent):
    fiber = two_sided_fiber(split_idempotent, "x", "y")
    assert list(fiber.points) == ["[id_x|s|id_y]"]
    assert fiber.signs["[id_x|s|id_y]"] is Sign.PLUS
    assert len(two_sided_fiber(split_idempotent, "y", "y").points) == 2


def test_fiber_basepoint_must_exist(split_idempotent):
    with pytest.raises(SpanError):
        two_sided_fiber(split_idempotent, "x", "nowhere")


def test_identity_span_is_a_unit(split_idempotent, two_points):
    unit = identity_span(two_points)
    assert matrix_of_span(compose(unit, split_idempotent)) == matrix_of_span(split_idempotent)
    assert matrix_of_span(compose(split_idempotent, unit)) == matrix_of_span(split_idempotent)


def test_negative_negates_the_matrix(split_idempotent):
    assert matrix_of_span(negative(split_idempotent)) == -matrix_of_span(split_idempotent)


def test_compose_rejects_mismatched_feet(split_idempotent, group_actions):
    with pytest.raises(FootMismatchError):
        compose(split_idempotent, group_actions.spans["name_of_point"])


def test_composite_of_split_idempotent_squares_the_matrix(split_idempotent):
    square = matrix_of_span(compose(split_idempotent, split_idempotent))
    assert square.tolist() == [[2, 3], [3, 5]]


@pytest.mark.parametrize("seed", range(10))
def test_transpose_swaps_entries_up_to_symmetry_factors(seed):
    gen = SpanGenerator(seed)
    sp = gen.random_span(gen.random_foot(3), gen.random_foot(3))
    m, t = matrix_of_span(sp), matrix_of_span(transpose(sp))
    for i in m.row_basis:
        for j in m.col_basis:
            aut_i = len(sp.left_foot.automorphisms(i))
            aut_j = len(sp.right_foot.automorphisms(j))
            assert t.entry(j, i) * aut_i == m.entry(i, j) * aut_j


def test_strict_fiber_matches_homotopy_fiber(split_idempotent):
    assert is_isofibration(split_idempotent)
    for i in ("x", "y"):
        for j in ("x", "y"):
            assert fingerprint(strict_fiber(split_idempotent, i, j)) == fingerprint(
                two_sided_fiber(split_idempotent, i, j)
            )


def test_strict_fiber_needs_an_isofibration(twisted_pair):
    state = elementary_state(twisted_pair, "u")
    flipped = transpose(state)
    assert not is_isofibration(flipped)
    with pytest.raises(SpanError):
        strict_fiber(flipped, "u", "*")


# ========== Scalars ==========

def test_basic_scalars(scalars):
    assert scalar_cardinality(scalar_of_span(scalars.spans["one"])) == 1
    assert scalar_cardinality(scalar_of_span(scalars.spans["minus_one"])) == -1
    plus_minus = scalar_of_span(scalars.spans["plus_minus"])
    assert scalar_cardinality(plus_minus) == 0
    assert fingerprint(plus_minus) == ((-1, 1, 1), (1, 1, 1))


def test_scalar_of_span_needs_point_feet(split_idempotent):
    with pytest.raises(SpanError):
        scalar_of_span(split_idempotent)


def test_scalar_span_round_trip(scalars):
    sc = scalar_of_span(scalars.spans["plus_minus"])
    assert fingerprint(scalar_of_span(span_of_scalar(sc))) == fingerprint(sc)


def test_terminal_scalar_and_units():
    assert fingerprint(terminal_scalar()) == ((-1, 1, 1), (1, 1, 1))
    assert scalar_cardinality(unit_scalar(Sign.MINUS)) == -1


def test_sign_split_and_brahmagupta_rule(scalars):
    sc = scalar_of_span(scalars.spans["plus_minus"])
    product = scalar_multiply(sc, sc)
    pos, neg = sign_split(product)
    assert pos.objects == ("(u,u)", "(v,v)")
    assert neg.objects == ("(u,v)", "(v,u)")


def test_signed_sum_adds_cardinalities(scalars):
    one = scalar_of_span(scalars.spans["one"])
    minus_one = scalar_of_span(scalars.spans["minus_one"])
    total = signed_sum([one, one, minus_one])
    assert total.underlying.objects == ("0/*", "1/*", "2/*")
    assert scalar_cardinality(total) == 1


# ========== States ==========

def test_odd_arrow_lemma(twisted_pair):
    plus_u = elementary_state(twisted_pair, "u", Sign.PLUS)
    minus_v = elementary_state(twisted_pair, "v", Sign.MINUS)
    assert vector_of_state(plus_u) == vector_of_state(minus_v)
    assert fingerprint(two_sided_fiber(plus_u, "*", "u")) == fingerprint(
        two_sided_fiber(minus_v, "*", "u")
    )
    assert scalar_cardinality(inner_product(plus_u, minus_v)) == 1


def test_state_operations(twisted_pair):
    state = elementary_state(twisted_pair, "u")
    assert vector_of_state(scale_state(unit_scalar(Sign.MINUS), state)).tolist() == [-1]
    assert vector_of_state(states_sum([state, state])).tolist() == [2]
    with pytest.raises(SpanError):
        elementary_state(twisted_pair, "w")


# ========== Cancellation and scalar actions ==========

def test_cancellation_pairing_reverses_signs(group_actions):
    sp = group_actions.spans["true_composite"]
    fiber = two_sided_fiber(sp, "*", "*")
    pairing = cancellation_pairing(sp, "*", "*")
    assert sorted(pairing.values()) == sorted(pairing)
    for source, image in pairing.items():
        assert fiber.signs[source] == -fiber.signs[image]
    assert scalar_cardinality(fiber) == 0


def test_cancellation_needs_an_odd_automorphism(split_idempotent):
    with pytest.raises(SpanError):
        cancellation_pairing(split_idempotent, "x", "x")


def test_quotient_scalar_rejects_sign_swapping_action(group_actions):
    signed_set = scalar_of_span(group_actions.spans["signed_set"])
    with pytest.raises(InvalidActionError):
        quotient_scalar(signed_set, group_actions.actions["right_multiplication"])


def test_quotient_scalar_rejects_odd_two_cells(group_actions):
    with pytest.raises(InvalidActionError):
        quotient_scalar(unit_scalar(), group_actions.actions["odd_point"])


def test_quotient_of_positive_set(group_actions):
    action = group_actions.actions["right_multiplication"]
    signed_set = scalar_of_span(group_actions.spans["signed_set"])
    positive = SignedGroupoid(signed_set.underlying, {x: Sign.PLUS for x in signed_set.underlying.objects})
    quotient = quotient_scalar(positive, action)
    assert scalar_cardinality(quotient) == scalar_cardinality(positive) / 2
    assert homotopy_cardinality(quotient.underlying) == 1


# ========== Names and inner products ==========

@pytest.mark.parametrize("seed", range(10))
def test_inner_product_of_a_name_with_itself_is_its_loop_groupoid(seed):
    x = SpanGenerator(seed).random_foot(3)
    component_of = x.underlying.component_of
    for j in x.objects:
        name = elementary_state(x, j)
        loops = inner_product(name, name)
        aut = len(x.automorphisms(j))
        assert len(loops.underlying.objects) == aut
        if x.has_odd_automorphism(j):
            assert scalar_cardinality(loops) == 0
        else:
            assert fingerprint(loops) == tuple((1, 1, 1) for _ in range(aut))
            assert scalar_cardinality(loops) == aut
        for other in x.objects:
            if component_of[other] != component_of[j]:
                assert inner_product(name, elementary_state(x, other)).underlying.is_empty()


@pytest.mark.parametrize("seed", range(10))
def test_signed_names_agree_exactly_at_odd_objects(seed):
    x = SpanGenerator(seed).random_foot(3)
    for j in x.objects:
        plus = fingerprint(two_sided_fiber(elementary_state(x, j, Sign.PLUS), "*", j))
        minus = fingerprint(two_sided_fiber(elementary_state(x, j, Sign.MINUS), "*", j))
        assert (plus == minus) == x.has_odd_automorphism(j)


def test_two_false_actions_compose_to_the_true_composite(group_actions):
    composite = compose(group_actions.spans["signed_set"], group_actions.spans["name_of_point"])
    true = group_actions.spans["true_composite"]
    assert validate_span(composite).ok
    assert len(composite.apex.objects) == len(true.apex.objects)
    assert sorted(int(s) for s in composite.rho.values()) == sorted(int(s) for s in true.rho.values())
    assert fingerprint(two_sided_fiber(composite, "*", "*")) == fingerprint(
        two_sided_fiber(true, "*", "*")
    )
    assert scalar_cardinality(two_sided_fiber(composite, "*", "*")) == 0
