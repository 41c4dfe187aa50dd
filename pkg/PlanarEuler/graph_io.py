"""
============
Graph serialisation: graph6, plain edge lists and JSON.
============

graph6 follows the standard ASCII encoding: a size prefix, then the upper triangle of the adjacency matrix
read column by column (x(0,1), x(0,2), x(1,2), x(0,3), ...), packed into 6-bit groups offset by 63.

The edge-list format is a first line "n m" followed by m lines "u v" with 0-based vertex ids.
"""

import json
import re
from typing import Optional, Union

from PlanarEuler.graph_utils import Graph, GraphError, edges, from_edge_list

GRAPH6_HEADER = ">>graph6<<"

# graph6 size prefixes switch encoding at these orders
_SHORT_LIMIT = 62
_MEDIUM_LIMIT = 258047

_EDGE_LIST_RE = re.compile(r"^\s*\d+\s+\d+\s*$")


class Graph6ParseError(ValueError):
    """Malformed graph6 input. `offset` is the byte offset of the first offending byte."""

    def __init__(self, message: str, offset: int):
        super().__init__("{} (at byte offset {})".format(message, offset))
        self.offset = offset


class EdgeListParseError(ValueError):
    """Malformed edge-list input. `line` is the 1-based line number."""

    def __init__(self, message: str, line: int):
        super().__init__("{} (line {})".format(message, line))
        self.line = line


def _size_prefix(n: int) -> bytes:
    if n <= _SHORT_LIMIT:
        return bytes([n + 63])
    if n <= _MEDIUM_LIMIT:
        return bytes([126] + [((n >> shift) & 63) + 63 for shift in (12, 6, 0)])
    return bytes([126, 126] + [((n >> shift) & 63) + 63 for shift in (30, 24, 18, 12, 6, 0)])


def write_graph6(g: Graph) -> str:
    """Encode g as a graph6 string (no header, no trailing newline)."""
    bits = []
    for j in range(1, g.n):
        row = g.adjacency[j]
        for i in range(j):
            bits.append(row >> i & 1)
    bits.extend([0] * (-len(bits) % 6))

    body = bytearray()
    for k in range(0, len(bits), 6):
        value = 0
        for bit in bits[k:k + 6]:
            value = (value << 1) | bit
        body.append(value + 63)
    return (_size_prefix(g.n) + bytes(body)).decode("ascii")


def parse_graph6(text: Union[str, bytes]) -> Graph:
    """Decode one graph6 record.

    An optional `>>graph6<<` header and a single trailing newline are accepted. Any other byte outside
    the printable range 63..126, a wrong body length, or non-zero padding bits raise Graph6ParseError.

    Parameters
    ----------
    text: Union[str, bytes]
        a single graph6 record

    Returns
    -------
    g: Graph
    """
    data = text.encode("utf-8") if isinstance(text, str) else bytes(text)
    start = 0
    if data.startswith(GRAPH6_HEADER.encode("ascii")):
        start = len(GRAPH6_HEADER)
    end = len(data)
    if data.endswith(b"\r\n"):
        end -= 2
    elif data.endswith(b"\n"):
        end -= 1

    for offset in range(start, end):
        if not 63 <= data[offset] <= 126:
            raise Graph6ParseError("byte 0x{:02x} is not a graph6 character".format(data[offset]), offset)
    if end <= start:
        raise Graph6ParseError("empty graph6 record", start)

    pos = start
    if data[pos] != 126:
        n = data[pos] - 63
        pos += 1
    elif end - start >= 2 and data[pos + 1] == 126:
        if end - start < 8:
            raise Graph6ParseError("truncated 8-byte size prefix", end)
        n = 0
        for byte in data[pos + 2:pos + 8]:
            n = (n << 6) | (byte - 63)
        pos += 8
    else:
        if end - start < 4:
            raise Graph6ParseError("truncated 4-byte size prefix", end)
        n = 0
        for byte in data[pos + 1:pos + 4]:
            n = (n << 6) | (byte - 63)
        pos += 4

    n_bits = n * (n - 1) // 2
    n_bytes = (n_bits + 5) // 6
    if end - pos != n_bytes:
        bad = min(end, pos + n_bytes)
        raise Graph6ParseError(
            "expected {} body bytes for {} vertices, found {}".format(n_bytes, n, end - pos), bad
        )

    rows = [0] * n
    k = 0
    i, j = 0, 1
    for offset in range(pos, end):
        value = data[offset] - 63
        for shift in range(5, -1, -1):
            bit = value >> shift & 1
            if k >= n_bits:
                if bit:
                    raise Graph6ParseError("non-zero padding bits", offset)
                continue
            if bit:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
            i += 1
            if i == j:
                i, j = 0, j + 1
    return Graph(n, tuple(rows))


def write_edge_list(g: Graph) -> str:
    pairs = list(edges(g))
    lines = ["{} {}".format(g.n, len(pairs))]
    lines.extend("{} {}".format(u, v) for u, v in pairs)
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    """Parse the "n m" header followed by m "u v" lines. Blank lines and '#' comments are skipped."""
    records = []
    for number, line in enumerate(text.splitlines(), start=1):
        stripped = line.split("#", 1)[0].strip()
        if stripped:
            records.append((number, stripped))
    if not records:
        raise EdgeListParseError("no header line", 1)

    number, header = records[0]
    fields = header.split()
    if len(fields) != 2 or not all(field.isdigit() for field in fields):
        raise EdgeListParseError("header must be two non-negative integers 'n m', got {!r}".format(header), number)
    n, m = int(fields[0]), int(fields[1])
    if len(records) - 1 != m:
        raise EdgeListParseError("header declares {} edges but {} follow".format(m, len(records) - 1), number)

    pairs = []
    for number, line in records[1:]:
        fields = line.split()
        if len(fields) != 2 or not all(field.isdigit() for field in fields):
            raise EdgeListParseError("edge line must be 'u v', got {!r}".format(line), number)
        pairs.append((int(fields[0]), int(fields[1])))
    try:
        return from_edge_list(n, pairs)
    except GraphError as err:
        raise EdgeListParseError(str(err), number) from err


def write_json_graph(g: Graph) -> str:
    return json.dumps({"n": g.n, "edges": [list(e) for e in edges(g)]})


def _json_int(value, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValueError("JSON graph {} must be an integer, got {!r}".format(what, value))
    return value


def parse_json_graph(text: str) -> Graph:
    """Parse {"n": ..., "edges": [[u, v], ...]}. A "graph6" key is accepted in place of the edge list.

    `n` and the endpoints must be JSON integers; floats and booleans are rejected rather than truncated.
    """
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as err:
        raise ValueError("invalid JSON graph: {}".format(err)) from err
    if not isinstance(obj, dict):
        raise ValueError("JSON graph must be an object, got {}".format(type(obj).__name__))
    if "graph6" in obj:
        if not isinstance(obj["graph6"], str):
            raise ValueError("JSON graph 'graph6' must be a string, got {!r}".format(obj["graph6"]))
        return parse_graph6(obj["graph6"])
    if "n" not in obj or "edges" not in obj:
        raise ValueError("JSON graph needs 'n' and 'edges' keys, found {}".format(sorted(obj)))
    n = _json_int(obj["n"], "'n'")
    if not isinstance(obj["edges"], list):
        raise ValueError("JSON graph 'edges' must be a list of [u, v] pairs, got {!r}".format(obj["edges"]))
    pairs = []
    for pair in obj["edges"]:
        if not isinstance(pair, list) or len(pair) != 2:
            raise ValueError("JSON graph edge must be a two-element list [u, v], got {!r}".format(pair))
        pairs.append((_json_int(pair[0], "vertex id"), _json_int(pair[1], "vertex id")))
    return from_edge_list(n, pairs)


def detect_format(text: str) -> str:
    """Guess the format of a graph record: 'json', 'edgelist' or 'graph6'."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return "json"
    for line in stripped.splitlines():
        line = line.split("#", 1)[0]
        if line.strip():
            return "edgelist" if _EDGE_LIST_RE.match(line) else "graph6"
    return "graph6"


def read_graph(text: str, fmt: Optional[str] = None) -> Graph:
    fmt = fmt or detect_format(text)
    if fmt == "graph6":
        return parse_graph6(text.strip("\r\n") if isinstance(text, str) else text)
    if fmt == "edgelist":
        return parse_edge_list(text)
    if fmt == "json":
        return parse_json_graph(text)
    raise ValueError("unknown graph format {!r}, expected graph6, edgelist or json".format(fmt))
