"""
Dependency Injection Container
Configuration for dependency injection using dependency-injector
"""

import logging
from typing import Optional

from dependency_injector import containers, providers

from rainbowindex.domain.services.calibration_service import CalibrationService
from rainbowindex.domain.services.classifier_service import RxClassifier
from rainbowindex.domain.services.constructive_coloring_service import ConstructiveColoringService
from rainbowindex.domain.services.extremal_catalog import ExtremalCatalog
from rainbowindex.domain.services.extremal_service import ExtremalService
from rainbowindex.domain.services.naive_oracle import NaiveRainbowOracle
from rainbowindex.domain.services.rainbow_solver import RainbowSolver
from rainbowindex.domain.services.sweep_service import SweepService
from rainbowindex.infrastructure.external.graph6_codec import Graph6Codec
from rainbowindex.infrastructure.repositories.catalog_repository import CatalogRepository
from rainbowindex.infrastructure.repositories.coloring_repository import ColoringRepository
from rainbowindex.infrastructure.repositories.report_repository import ReportRepository
from rainbowindex.settings import Settings, get_settings

logger = logging.getLogger(__name__)


def create_catalog(catalog_path: Optional[str], repository: CatalogRepository) -> ExtremalCatalog:
    """Built-in catalog, or the calibrated one when a catalog file is configured."""
    if catalog_path:
        logger.info(f"Using catalog from {catalog_path}")
        return ExtremalCatalog(repository.load(catalog_path))
    return ExtremalCatalog()


class Container(containers.DeclarativeContainer):
    """Dependency injection container."""

    # Configuration
    config = providers.Configuration()

    # Repositories
    coloring_repository = providers.Factory(ColoringRepository)
    report_repository = providers.Factory(ReportRepository)
    catalog_repository = providers.Factory(CatalogRepository)

    # External
    codec = providers.Singleton(Graph6Codec)

    # Domain
    catalog = providers.Singleton(
        create_catalog,
        catalog_path=config.catalog_path,
        repository=catalog_repository,
    )

    solver = providers.Factory(
        RainbowSolver,
        node_budget=config.node_budget,
    )

    oracle = providers.Factory(
        NaiveRainbowOracle,
        max_edges=config.oracle_max_edges,
    )

    classifier = providers.Factory(
        RxClassifier,
        catalog=catalog,
        solver=solver,
    )

    coloring_service = providers.Factory(
        ConstructiveColoringService,
        catalog=catalog,
        solver=solver,
        relabel_limit=config.recipe_relabel_limit,
    )

    sweep_service = providers.Factory(
        SweepService,
        classifier=classifier,
        solver=solver,
        codec=codec,
        workers=config.sweep_workers,
        progress=config.sweep_progress,
        schema_version=config.schema_version,
        full_max_order=config.full_sweep_max_order,
        max_order=config.max_enumeration_order,
    )

    extremal_service = providers.Factory(
        ExtremalService,
        catalog=catalog,
        solver=solver,
        codec=codec,
    )

    calibration_service = providers.Factory(
        CalibrationService,
        catalog=catalog,
        solver=solver,
        codec=codec,
        witness_order=config.calibration_witness_order,
    )


def create_container(settings: Optional[Settings] = None) -> Container:
    """Container configured from settings."""
    container = Container()
    container.config.from_dict((settings or get_settings()).model_dump())
    return container
