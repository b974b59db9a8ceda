"""Shared fixtures: the fixture corpus and a few hand-built groupoids."""

from pathlib import Path

import pytest

from src.services.group_service import catalog_group
from src.services.groupoid_service import classifying_groupoid, codiscrete, discrete
from src.storage import DocumentManager

FIXTURE_DIR = Path(__file__).resolve().parent.parent / "data" / "fixtures"


@pytest.fixture(scope="session")
def fixture_dir() -> str:
    return str(FIXTURE_DIR)


@pytest.fixture(scope="session")
def manager() -> DocumentManager:
    return DocumentManager(str(FIXTURE_DIR))


@pytest.fixture(scope="session")
def split_idempotent(manager):
    """The endo-span of the two-point set with matrix [[1,1],[1,2]]."""
    return manager.load("split_idempotent").spans["A"]


@pytest.fixture(scope="session")
def scalars(manager):
    return manager.load("scalars")


@pytest.fixture(scope="session")
def group_actions(manager):
    return manager.load("group_actions")


@pytest.fixture
def two_points():
    return discrete(["x", "y"])


@pytest.fixture
def odd_bc2():
    """B C2 with its generator odd."""
    return classifying_groupoid(catalog_group("C2"), {"a": -1})


@pytest.fixture
def even_bc2():
    return classifying_groupoid(catalog_group("C2"))


@pytest.fixture
def twisted_pair():
    """Pair groupoid on {u, v} with an odd arrow between the objects."""
    return codiscrete(["u", "v"], {"v": -1})
