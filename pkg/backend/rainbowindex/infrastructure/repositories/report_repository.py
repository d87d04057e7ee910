"""
Report Repository Implementation
Sweep, extremal and calibration reports as CSV and JSON files
"""

import json
import logging
from pathlib import Path
from typing import Any, Dict, List

import pandas as pd

from rainbowindex.domain.entities.domain_entities import (
    CalibrationReport,
    ExtremalFamily,
    SweepRecord,
    SweepReport,
)
from rainbowindex.domain.interfaces.domain_interfaces import PathLike, ReportRepositoryInterface
from rainbowindex.infrastructure.repositories.catalog_repository import entry_to_dict
from rainbowindex.shared.exceptions.infrastructure_exceptions import ReportWriteError

logger = logging.getLogger(__name__)

SWEEP_COLUMNS = [
    "schema_version",
    "graph6",
    "n",
    "m",
    "cyclomatic",
    "girth",
    "bucket",
    "reason",
    "entry_id",
    "predicted_value",
    "solver_value",
    "agree",
    "runtime_us",
]

_NULLABLE_INT = ["girth", "predicted_value", "solver_value"]


def record_row(record: SweepRecord, schema_version: str) -> Dict[str, Any]:
    """One sweep record in the documented column order."""
    return {
        "schema_version": schema_version,
        "graph6": record.graph6,
        "n": record.n,
        "m": record.m,
        "cyclomatic": record.cyclomatic,
        "girth": record.girth,
        "bucket": record.label.bucket.value,
        "reason": record.label.reason.value,
        "entry_id": record.label.entry_id,
        "predicted_value": record.label.predicted_value,
        "solver_value": record.solver_value,
        "agree": record.agree,
        "runtime_us": record.runtime_us,
    }


def sweep_frame(report: SweepReport) -> pd.DataFrame:
    """Sweep records as a DataFrame with fixed columns and nullable dtypes."""
    rows = [record_row(r, report.schema_version) for r in report.records]
    frame = pd.DataFrame(rows, columns=SWEEP_COLUMNS)
    for column in _NULLABLE_INT:
        frame[column] = frame[column].astype("Int64")
    frame["agree"] = frame["agree"].astype("boolean")
    return frame


class ReportRepository(ReportRepositoryInterface):
    """Writes harness reports to flat files."""

    def _write_json(self, file_path: Path, payload: Dict[str, Any]) -> Path:
        try:
            file_path.parent.mkdir(parents=True, exist_ok=True)
            file_path.write_text(json.dumps(payload, indent=2, sort_keys=False) + "\n")
        except OSError as e:
            logger.error(f"Error writing report {file_path}: {str(e)}")
            raise ReportWriteError(f"Failed to write report: {str(e)}", path=str(file_path))
        return file_path

    def write_sweep(self, path: PathLike, report: SweepReport) -> Path:
        file_path = Path(path)
        suffix = file_path.suffix.lower()
        if suffix == ".csv":
            try:
                file_path.parent.mkdir(parents=True, exist_ok=True)
                sweep_frame(report).to_csv(file_path, index=False)
            except OSError as e:
                logger.error(f"Error writing sweep CSV {file_path}: {str(e)}")
                raise ReportWriteError(f"Failed to write sweep report: {str(e)}", path=str(file_path))
        elif suffix == ".json":
            self._write_json(
                file_path,
                {
                    "schema_version": report.schema_version,
                    "n_max": report.n_max,
                    "mode": report.mode.value,
                    "summary": report.summary,
                    "records": [record_row(r, report.schema_version) for r in report.records],
                },
            )
        else:
            raise ReportWriteError(
                f"sweep reports are written as .csv or .json, got {suffix or 'no extension'}",
                path=str(file_path),
            )
        logger.info(f"Wrote sweep report with {len(report.records)} records to {file_path}")
        return file_path

    def write_extremal(self, path: PathLike, family: ExtremalFamily) -> Path:
        payload = {
            "n": family.n,
            "members": family.members,
            "maximal": family.maximal,
            "hosts": family.hosts,
        }
        file_path = self._write_json(Path(path), payload)
        logger.info(f"Wrote extremal family of order {family.n} to {file_path}")
        return file_path

    def write_calibration(self, path: PathLike, report: CalibrationReport) -> Path:
        results: List[Dict[str, Any]] = [
            {
                "entry_id": r.entry_id,
                "status": r.status,
                "self_check_value": r.self_check_value,
                "graphs_checked": r.graphs_checked,
                "witnesses_checked": r.witnesses_checked,
                "candidates_tested": r.candidates_tested,
                "consistent_candidates": r.consistent_candidates,
                "counterexamples": r.counterexamples,
            }
            for r in report.results
        ]
        payload = {
            "results": results,
            "catalog": [entry_to_dict(e) for e in report.catalog],
        }
        file_path = self._write_json(Path(path), payload)
        logger.info(f"Wrote calibration report to {file_path}")
        return file_path
