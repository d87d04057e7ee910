"""
graph6 Codec
Bit-exact reader and writer for the graph6 record format
"""

from pathlib import Path
from typing import Iterator, List, Union

from rainbowindex.domain.entities.domain_entities import Graph
from rainbowindex.domain.interfaces.service_interfaces import GraphCodecInterface
from rainbowindex.shared.exceptions.infrastructure_exceptions import (
    Graph6ParseError,
    NotFoundError,
)

HEADER = ">>graph6<<"
_OFFSET = 63
_MAX_BYTE = 126
_LONG_ORDER = 126


def _bit_positions(n: int) -> Iterator[tuple]:
    """Upper triangle by columns: (0,1), (0,2), (1,2), (0,3), ..."""
    for j in range(1, n):
        for i in range(j):
            yield i, j


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 record into a Graph.

    Accepts an optional ``>>graph6<<`` header and a trailing newline. Any
    malformed byte raises ``Graph6ParseError`` naming its offset within the
    record (header excluded).
    """
    record = text.rstrip("\r\n")
    if record.startswith(HEADER):
        record = record[len(HEADER):]
    if not record:
        raise Graph6ParseError("empty graph6 record", offset=0, record=text)

    try:
        data = record.encode("ascii")
    except UnicodeEncodeError as e:
        raise Graph6ParseError("non-ASCII character", offset=e.start, record=record) from None

    for offset, byte in enumerate(data):
        if not _OFFSET <= byte <= _MAX_BYTE:
            raise Graph6ParseError(f"byte {byte} out of range 63..126", offset=offset, record=record)

    if data[0] != _LONG_ORDER:
        n = data[0] - _OFFSET
        pos = 1
    else:
        if len(data) < 4:
            raise Graph6ParseError("truncated order header", offset=len(data), record=record)
        if data[1] == _LONG_ORDER:
            raise Graph6ParseError("orders above 258047 are not supported", offset=1, record=record)
        n = 0
        for byte in data[1:4]:
            n = (n << 6) | (byte - _OFFSET)
        pos = 4

    bit_count = n * (n - 1) // 2
    expected = (bit_count + 5) // 6
    body = data[pos:]
    if len(body) < expected:
        raise Graph6ParseError(
            f"expected {expected} data bytes for order {n}, got {len(body)}",
            offset=len(data),
            record=record,
        )
    if len(body) > expected:
        raise Graph6ParseError("trailing garbage after graph6 record", offset=pos + expected, record=record)

    bits: List[int] = []
    for byte in body:
        value = byte - _OFFSET
        bits.extend((value >> shift) & 1 for shift in range(5, -1, -1))
    if any(bits[bit_count:]):
        raise Graph6ParseError("nonzero padding bits", offset=len(data) - 1, record=record)

    edges = [pair for pair, bit in zip(_bit_positions(n), bits) if bit]
    return Graph.from_edges(n, edges)


def to_graph6(graph: Graph) -> str:
    """Encode a graph as a graph6 record without header or newline."""
    n = graph.n
    if n < 63:
        out = [n + _OFFSET]
    else:
        out = [_LONG_ORDER] + [((n >> shift) & 0x3F) + _OFFSET for shift in (12, 6, 0)]

    present = graph.edge_index
    bits = [1 if pair in present else 0 for pair in _bit_positions(n)]
    bits.extend([0] * (-len(bits) % 6))
    for i in range(0, len(bits), 6):
        value = 0
        for bit in bits[i:i + 6]:
            value = (value << 1) | bit
        out.append(value + _OFFSET)
    return bytes(out).decode("ascii")


def iter_graph6_lines(lines: Iterator[str]) -> Iterator[Graph]:
    """Decode a stream of graph6 lines, skipping blanks and '#' comments."""
    for line in lines:
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        yield parse_graph6(stripped)


def read_graph6_lines(path: Union[str, Path]) -> List[Graph]:
    """Read every graph6 record from a file."""
    file_path = Path(path)
    if not file_path.exists():
        raise NotFoundError(f"graph6 file not found: {file_path}", path=str(file_path))
    with file_path.open("r", encoding="ascii") as handle:
        return list(iter_graph6_lines(handle))


def write_graph6_lines(path: Union[str, Path], graphs: List[Graph]) -> None:
    """Write one graph6 record per line."""
    with Path(path).open("w", encoding="ascii") as handle:
        for graph in graphs:
            handle.write(to_graph6(graph) + "\n")


class Graph6Codec(GraphCodecInterface):
    """graph6 behind the codec interface the harness services depend on."""

    def encode(self, graph: Graph) -> str:
        return to_graph6(graph)

    def decode(self, text: str) -> Graph:
        return parse_graph6(text)
