from rainbowindex.domain.services.extremal_catalog import ExtremalCatalog
from rainbowindex.domain.services.rainbow_solver import RainbowSolver
from rainbowindex.infrastructure.config.dependency_container import create_container
from rainbowindex.infrastructure.repositories.catalog_repository import CatalogRepository


class TestContainer:
    def test_singletons(self, container):
        assert container.catalog() is container.catalog()
        assert container.codec() is container.codec()

    def test_factories(self, container):
        assert container.solver() is not container.solver()
        assert isinstance(container.solver(), RainbowSolver)

    def test_budget_from_settings(self, settings):
        container = create_container(settings.model_copy(update={"node_budget": 7}))
        assert container.solver().node_budget == 7

    def test_services_share_catalog(self, container):
        assert container.classifier().catalog is container.catalog()
        assert container.coloring_service().catalog is container.catalog()

    def test_catalog_file(self, settings, tmp_path):
        builtin = ExtremalCatalog()
        CatalogRepository().export(tmp_path, list(builtin)[:3])
        container = create_container(settings.model_copy(update={"catalog_path": str(tmp_path)}))
        assert [e.entry_id for e in container.catalog()] == ["G1", "G2", "G3"]
