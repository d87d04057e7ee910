import json

import pandas as pd
import pytest

from rainbowindex.domain.entities.domain_entities import Coloring, Provenance, SweepMode
from rainbowindex.domain.services import graph_families
from rainbowindex.domain.services.extremal_catalog import ExtremalCatalog
from rainbowindex.infrastructure.external.graph6_codec import read_graph6_lines
from rainbowindex.infrastructure.repositories.catalog_repository import CatalogRepository
from rainbowindex.infrastructure.repositories.coloring_repository import ColoringRepository
from rainbowindex.infrastructure.repositories.report_repository import (
    SWEEP_COLUMNS,
    ReportRepository,
)
from rainbowindex.shared.exceptions.infrastructure_exceptions import (
    FileFormatError,
    NotFoundError,
    ReportWriteError,
)


class TestColoringRepository:
    def test_save_and_load(self, tmp_path):
        graph = graph_families.cycle(5)
        coloring = Coloring.for_graph(graph, [1, 2, 3, 1, 2])
        path = ColoringRepository().save(tmp_path / "c5.json", graph, coloring, k=3, method="optimal")

        stored = json.loads(path.read_text())
        assert stored["method"] == "optimal"
        loaded_graph, loaded = ColoringRepository().load(path)
        assert loaded_graph == graph
        assert loaded.colors == coloring.colors

    def test_missing_file(self, tmp_path):
        with pytest.raises(NotFoundError):
            ColoringRepository().load(tmp_path / "absent.json")

    def test_invalid_file(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text('{"graph6": "Bw", "colors": [1, 2, 3]}')
        with pytest.raises(FileFormatError):
            ColoringRepository().load(path)


class TestReportRepository:
    def test_sweep_csv(self, tmp_path, container):
        report = container.sweep_service().sweep(4, SweepMode.FULL)
        path = ReportRepository().write_sweep(tmp_path / "sweep.csv", report)
        frame = pd.read_csv(path)
        assert list(frame.columns) == SWEEP_COLUMNS
        assert len(frame) == 10
        assert frame["agree"].all()

    def test_sweep_json(self, tmp_path, container):
        report = container.sweep_service().sweep(3, SweepMode.CLASSIFY_ONLY)
        path = ReportRepository().write_sweep(tmp_path / "sweep.json", report)
        payload = json.loads(path.read_text())
        assert payload["mode"] == SweepMode.CLASSIFY_ONLY.value
        assert len(payload["records"]) == 4

    def test_sweep_extension(self, tmp_path, container):
        report = container.sweep_service().sweep(2, SweepMode.CLASSIFY_ONLY)
        with pytest.raises(ReportWriteError):
            ReportRepository().write_sweep(tmp_path / "sweep.txt", report)

    def test_extremal(self, tmp_path, container):
        family = container.extremal_service().reconstruct_extremal(4)
        path = ReportRepository().write_extremal(tmp_path / "extremal.json", family)
        assert json.loads(path.read_text())["maximal"] == family.maximal


class TestCatalogRepository:
    def test_export_and_load(self, tmp_path):
        catalog = ExtremalCatalog()
        repository = CatalogRepository()
        written = repository.export(tmp_path / "catalog", list(catalog))
        assert len(written) == 1 + len(catalog)

        entries = repository.load(tmp_path / "catalog")
        assert [e.entry_id for e in entries] == [e.entry_id for e in catalog]
        assert entries[0].graph == catalog.get(entries[0].entry_id).graph
        assert read_graph6_lines(tmp_path / "catalog" / "G1.g6") == [catalog.get("G1").graph]

    def test_conditional_constraints_survive_a_round_trip(self, tmp_path):
        catalog = ExtremalCatalog()
        repository = CatalogRepository()
        repository.export(tmp_path / "catalog", list(catalog))
        loaded = {e.entry_id: e for e in repository.load(tmp_path / "catalog")}
        assert loaded["H4"].constraints == catalog.get("H4").constraints
        assert sum(c.conditional for c in loaded["H4"].constraints) == 6
        assert loaded["H1"].provenance is Provenance.CALIBRATED

    def test_missing_catalog(self, tmp_path):
        with pytest.raises(NotFoundError):
            CatalogRepository().load(tmp_path)
