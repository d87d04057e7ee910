"""
Coloring Repository Implementation
JSON files holding a graph6 record and one color per edge
"""

import json
import logging
from pathlib import Path
from typing import List, Optional, Tuple

from pydantic import BaseModel, Field, ValidationError

from rainbowindex.domain.entities.domain_entities import Coloring, Graph
from rainbowindex.domain.interfaces.domain_interfaces import ColoringRepositoryInterface, PathLike
from rainbowindex.infrastructure.external.graph6_codec import parse_graph6, to_graph6
from rainbowindex.shared.exceptions.infrastructure_exceptions import (
    FileFormatError,
    NotFoundError,
    ReportWriteError,
)

logger = logging.getLogger(__name__)


class ColoringDocument(BaseModel):
    """On-disk coloring: colors follow the lexicographic edge order of the graph."""

    graph6: str
    q: int = Field(ge=0)
    colors: List[int]
    k: Optional[int] = Field(default=None, ge=2)
    method: Optional[str] = None


class ColoringRepository(ColoringRepositoryInterface):
    """Reads and writes coloring JSON files."""

    def save(
        self,
        path: PathLike,
        graph: Graph,
        coloring: Coloring,
        k: Optional[int] = None,
        method: Optional[str] = None,
    ) -> Path:
        document = ColoringDocument(
            graph6=to_graph6(graph),
            q=coloring.q,
            colors=list(coloring.colors),
            k=k,
            method=method,
        )
        file_path = Path(path)
        try:
            file_path.parent.mkdir(parents=True, exist_ok=True)
            file_path.write_text(document.model_dump_json(exclude_none=True, indent=2) + "\n")
        except OSError as e:
            logger.error(f"Error writing coloring to {file_path}: {str(e)}")
            raise ReportWriteError(f"Failed to write coloring: {str(e)}", path=str(file_path))

        logger.info(f"Saved coloring with {coloring.color_count} colors to {file_path}")
        return file_path

    def load(self, path: PathLike) -> Tuple[Graph, Coloring]:
        file_path = Path(path)
        if not file_path.exists():
            raise NotFoundError(f"coloring file not found: {file_path}", path=str(file_path))
        try:
            document = ColoringDocument.model_validate(json.loads(file_path.read_text()))
        except (json.JSONDecodeError, ValidationError) as e:
            raise FileFormatError(f"Invalid coloring file: {str(e)}", path=str(file_path))

        graph = parse_graph6(document.graph6)
        coloring = Coloring.for_graph(graph, document.colors, q=document.q)
        logger.debug(f"Loaded coloring for {document.graph6} from {file_path}")
        return graph, coloring
