"""
Repository Interfaces for RainbowIndex
Domain layer interfaces for flat-file persistence
"""

from abc import ABC, abstractmethod
from pathlib import Path
from typing import List, Optional, Tuple, Union

from rainbowindex.domain.entities.domain_entities import (
    CalibrationReport,
    CatalogEntry,
    Coloring,
    ExtremalFamily,
    Graph,
    SweepReport,
)

PathLike = Union[str, Path]


class ColoringRepositoryInterface(ABC):
    """Interface for coloring files."""

    @abstractmethod
    def save(
        self,
        path: PathLike,
        graph: Graph,
        coloring: Coloring,
        k: Optional[int] = None,
        method: Optional[str] = None,
    ) -> Path:
        """Write a coloring together with its graph."""
        pass

    @abstractmethod
    def load(self, path: PathLike) -> Tuple[Graph, Coloring]:
        """Read a coloring and the graph it belongs to."""
        pass


class ReportRepositoryInterface(ABC):
    """Interface for harness reports."""

    @abstractmethod
    def write_sweep(self, path: PathLike, report: SweepReport) -> Path:
        """Write a sweep report as CSV or JSON, chosen by extension."""
        pass

    @abstractmethod
    def write_extremal(self, path: PathLike, family: ExtremalFamily) -> Path:
        """Write an extremal family as JSON."""
        pass

    @abstractmethod
    def write_calibration(self, path: PathLike, report: CalibrationReport) -> Path:
        """Write a calibration report as JSON."""
        pass


class CatalogRepositoryInterface(ABC):
    """Interface for catalog export and import."""

    @abstractmethod
    def export(self, directory: PathLike, entries: List[CatalogEntry]) -> List[Path]:
        """Write catalog.json plus one graph6 file per entry."""
        pass

    @abstractmethod
    def load(self, path: PathLike) -> List[CatalogEntry]:
        """Read a catalog JSON file."""
        pass
