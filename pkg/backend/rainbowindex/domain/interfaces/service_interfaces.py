"""
Service Interfaces for RainbowIndex
Domain layer interfaces for the exact search and the independent oracle
"""

from abc import ABC, abstractmethod
from typing import Optional

from rainbowindex.domain.entities.domain_entities import (
    Coloring,
    Graph,
    PartialColoring,
    RxResult,
)


class RainbowSolverInterface(ABC):
    """Interface for an exact k-rainbow index search."""

    @abstractmethod
    def rx_decision(
        self,
        graph: Graph,
        k: int,
        q: int,
        fixed: Optional[PartialColoring] = None,
    ) -> Optional[Coloring]:
        """Find a k-rainbow coloring with at most q colors, or prove there is none."""
        pass

    @abstractmethod
    def rx_exact(self, graph: Graph, k: int) -> RxResult:
        """Compute rx_k exactly, or report bounds when the budget runs out."""
        pass


class RainbowOracleInterface(ABC):
    """Interface for a brute-force rx_k oracle."""

    @abstractmethod
    def rx_naive_oracle(self, graph: Graph, k: int) -> int:
        """Compute rx_k by enumerating every coloring."""
        pass


class GraphCodecInterface(ABC):
    """Interface for the text encoding of graphs used in reports."""

    @abstractmethod
    def encode(self, graph: Graph) -> str:
        """Encode a graph as a single line of text."""
        pass

    @abstractmethod
    def decode(self, text: str) -> Graph:
        """Decode a single line of text into a graph."""
        pass
