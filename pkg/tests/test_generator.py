"""Seeded generators: determinism and validity of what they draw."""

import pytest

from src.models import ParityGroupoid, PSpan
from src.services.determinant_service import top_degree
from src.services.generator import SpanGenerator, block_groupoid, generate
from src.services.groupoid_service import validate_action, validate_groupoid
from src.services.span_service import validate_span


def _shape(g: ParityGroupoid) -> tuple:
    return g.objects, dict(g.morphisms), {m: int(s) for m, s in g.parity.items()}


def test_same_seed_same_foot():
    assert _shape(SpanGenerator(7).random_foot()) == _shape(SpanGenerator(7).random_foot())


def test_same_seed_same_span():
    first, second = SpanGenerator(11), SpanGenerator(11)
    a = first.random_span(first.random_foot(), first.random_foot())
    b = second.random_span(second.random_foot(), second.random_foot())
    assert dict(a.apex.morphisms) == dict(b.apex.morphisms)
    assert a.left_map == b.left_map
    assert a.right_map == b.right_map
    assert a.rho == b.rho


@pytest.mark.parametrize("seed", range(15))
def test_random_feet_are_valid(seed):
    foot = SpanGenerator(seed).random_foot()
    assert validate_groupoid(foot).ok


@pytest.mark.parametrize("seed", range(15))
def test_random_spans_are_valid(seed):
    gen = SpanGenerator(seed)
    sp = gen.random_span(gen.random_foot(3), gen.random_foot(3))
    report = validate_span(sp, check_feet=True)
    assert report.ok, report.violations


@pytest.mark.parametrize("degree", [1, 2, 3])
@pytest.mark.parametrize("seed", range(5))
def test_endo_span_has_requested_degree(seed, degree):
    sp = SpanGenerator(seed).random_endo_span(degree)
    assert sp.left_foot is sp.right_foot
    assert top_degree(sp.left_foot) == degree
    assert validate_span(sp, check_feet=True).ok


def test_block_with_twist_stays_orientable():
    gen = SpanGenerator(3)
    blocks = gen.random_blocks(2, max_size=2, groups=("C2",), orientable=True)
    foot = block_groupoid(blocks)
    assert all(block.orientable for block in blocks)
    assert all(not foot.has_odd_automorphism(x) for x in foot.objects)


@pytest.mark.parametrize("seed", range(8))
def test_random_scalar_action_is_valid(seed):
    sc, action = SpanGenerator(seed).random_scalar_action()
    assert validate_action(action).ok
    assert set(sc.signs) == set(action.target.objects)


def test_generate_kinds():
    assert isinstance(generate("foot", 1), ParityGroupoid)
    assert isinstance(generate("span", 1), PSpan)
    assert top_degree(generate("endo_span", 1, degree=2).left_foot) == 2


def test_generate_unknown_kind():
    with pytest.raises(ValueError, match="unknown generator kind"):
        generate("matrix", 1)
