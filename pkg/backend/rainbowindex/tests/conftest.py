"""Shared fixtures for the rainbowindex test suites."""

import pytest

from rainbowindex.domain.entities.domain_entities import Graph
from rainbowindex.domain.services.classifier_service import RxClassifier
from rainbowindex.domain.services.constructive_coloring_service import ConstructiveColoringService
from rainbowindex.domain.services.extremal_catalog import ExtremalCatalog
from rainbowindex.domain.services.rainbow_solver import RainbowSolver
from rainbowindex.infrastructure.config.dependency_container import create_container
from rainbowindex.infrastructure.external.graph6_codec import Graph6Codec
from rainbowindex.settings import Settings


@pytest.fixture(scope="session")
def solver():
    return RainbowSolver()


@pytest.fixture(scope="session")
def catalog():
    return ExtremalCatalog()


@pytest.fixture(scope="session")
def codec():
    return Graph6Codec()


@pytest.fixture(scope="session")
def classifier(catalog, solver):
    return RxClassifier(catalog, solver)


@pytest.fixture(scope="session")
def coloring_service(catalog, solver):
    return ConstructiveColoringService(catalog, solver)


@pytest.fixture
def settings():
    return Settings(_env_file=None, log_level="WARNING")


@pytest.fixture
def container(settings):
    return create_container(settings)


@pytest.fixture
def bowtie():
    """Two triangles sharing vertex 2 (catalog entry G1)."""
    return Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])
