"""
Catalog Repository Implementation
Export and import of catalog entries as JSON plus graph6 files
"""

import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field, ValidationError

from rainbowindex.domain.entities.domain_entities import (
    CatalogEntry,
    Constraint,
    Graph,
    Provenance,
)
from rainbowindex.domain.interfaces.domain_interfaces import CatalogRepositoryInterface, PathLike
from rainbowindex.infrastructure.external.graph6_codec import to_graph6
from rainbowindex.shared.exceptions.infrastructure_exceptions import (
    FileFormatError,
    NotFoundError,
    ReportWriteError,
)

logger = logging.getLogger(__name__)

CATALOG_FILE = "catalog.json"
CATALOG_SCHEMA_VERSION = "1.0"


class ConstraintDocument(BaseModel):
    indices: List[int]
    bound: int = Field(ge=0)
    conditional: bool = False


class EntryDocument(BaseModel):
    id: str
    n: int = Field(ge=1)
    edges: List[List[int]]
    constraints: List[ConstraintDocument] = Field(default_factory=list)
    provenance: Provenance
    description: str = ""
    has_class: bool = True
    graph6: Optional[str] = None


class CatalogDocument(BaseModel):
    schema_version: str = CATALOG_SCHEMA_VERSION
    entries: List[EntryDocument]


def _constraint_to_dict(constraint: Constraint) -> Dict[str, Any]:
    data: Dict[str, Any] = {"indices": list(constraint.indices), "bound": constraint.bound}
    if constraint.conditional:
        data["conditional"] = True
    return data


def entry_to_dict(entry: CatalogEntry) -> Dict[str, Any]:
    """JSON-ready form of one catalog entry."""
    return {
        "id": entry.entry_id,
        "graph6": to_graph6(entry.graph),
        "n": entry.order,
        "edges": [list(e) for e in entry.graph.edges],
        "constraints": [_constraint_to_dict(c) for c in entry.constraints],
        "provenance": entry.provenance.value,
        "description": entry.description,
        "has_class": entry.has_class,
    }


def _to_entry(document: EntryDocument) -> CatalogEntry:
    return CatalogEntry(
        entry_id=document.id,
        graph=Graph.from_edges(document.n, document.edges),
        constraints=tuple(Constraint.at_most(c.indices, c.bound, c.conditional) for c in document.constraints),
        provenance=document.provenance,
        description=document.description,
        has_class=document.has_class,
    )


class CatalogRepository(CatalogRepositoryInterface):
    """Writes catalog exports and reads calibrated catalogs back."""

    def export(self, directory: PathLike, entries: List[CatalogEntry]) -> List[Path]:
        target = Path(directory)
        written: List[Path] = []
        try:
            target.mkdir(parents=True, exist_ok=True)
            catalog_path = target / CATALOG_FILE
            payload = {
                "schema_version": CATALOG_SCHEMA_VERSION,
                "entries": [entry_to_dict(e) for e in entries],
            }
            catalog_path.write_text(json.dumps(payload, indent=2) + "\n")
            written.append(catalog_path)
            for entry in entries:
                g6_path = target / f"{entry.entry_id}.g6"
                g6_path.write_text(to_graph6(entry.graph) + "\n", encoding="ascii")
                written.append(g6_path)
        except OSError as e:
            logger.error(f"Error exporting catalog to {target}: {str(e)}")
            raise ReportWriteError(f"Failed to export catalog: {str(e)}", path=str(target))

        logger.info(f"Exported {len(entries)} catalog entries to {target}")
        return written

    def load(self, path: PathLike) -> List[CatalogEntry]:
        """Read catalog.json, or the catalog section of a calibration report."""
        file_path = Path(path)
        if file_path.is_dir():
            file_path = file_path / CATALOG_FILE
        if not file_path.exists():
            raise NotFoundError(f"catalog file not found: {file_path}", path=str(file_path))

        try:
            raw = json.loads(file_path.read_text())
            if isinstance(raw, dict) and "catalog" in raw and "entries" not in raw:
                raw = {"entries": raw["catalog"]}
            document = CatalogDocument.model_validate(raw)
            entries = [_to_entry(e) for e in document.entries]
        except (json.JSONDecodeError, ValidationError) as e:
            raise FileFormatError(f"Invalid catalog file: {str(e)}", path=str(file_path))

        logger.info(f"Loaded {len(entries)} catalog entries from {file_path}")
        return entries
