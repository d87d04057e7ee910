import pytest

from rainbowindex.domain.entities.domain_entities import Provenance
from rainbowindex.infrastructure.config.dependency_container import create_container
from rainbowindex.settings import Settings


@pytest.fixture(scope="module")
def calibration_report():
    container = create_container(Settings(_env_file=None, log_level="WARNING"))
    return container.calibration_service().calibrate_catalog()


@pytest.mark.slow
class TestCalibrateCatalog:
    def test_calibrated_entries_resolve(self, calibration_report):
        assert calibration_report.ok
        assert [r.entry_id for r in calibration_report.results] == ["H1", "H6", "H7", "J2BASIC"]
        assert all(r.graphs_checked > 0 for r in calibration_report.results)

    def test_shipped_labelings_are_confirmed(self, calibration_report):
        assert {r.entry_id: r.status for r in calibration_report.results} == {
            "H1": "confirmed",
            "H6": "confirmed",
            "H7": "confirmed",
            "J2BASIC": "confirmed",
        }

    def test_pendant_witnesses_are_checked(self, calibration_report):
        results = {r.entry_id: r for r in calibration_report.results}
        assert results["H1"].witnesses_checked > 0
        assert all(r.witnesses_checked > 0 for r in calibration_report.results)

    def test_catalog_keeps_published_entries(self, calibration_report):
        provenance = {e.entry_id: e.provenance for e in calibration_report.catalog}
        assert provenance["G1"] is Provenance.PUBLISHED
        assert provenance["H6"] is Provenance.CALIBRATED
        assert len(calibration_report.catalog) == 18
