"""graph6 and DIMACS ``.col`` readers and writers."""

from __future__ import annotations

import warnings
from pathlib import Path

from .graph import Graph, GraphError, build_graph, iter_bits


class ParseError(ValueError):
    """Malformed graph file. ``offset`` is a 0-based byte offset (graph6)
    and ``line`` a 1-based line number (DIMACS); the other is ``None``."""

    def __init__(self, message: str, *, offset: int | None = None, line: int | None = None):
        where = f" at byte {offset}" if offset is not None else f" on line {line}" if line is not None else ""
        super().__init__(message + where)
        self.offset = offset
        self.line = line


# -- graph6 ---------------------------------------------------------------

_G6_HEADER = ">>graph6<<"


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise ValueError(f"graph6 cannot encode n={n}")


def write_graph6(g: Graph) -> str:
    """Encode ``g`` as a graph6 string (no header, no trailing newline)."""
    # Upper triangle, column by column: (0,1), (0,2), (1,2), (0,3), ...
    # Column j is bits 0..j-1 of row j, lowest first.
    bits = "".join(format(g.rows[j] & ((1 << j) - 1), f"0{j}b")[::-1] for j in range(1, g.n))
    bits += "0" * (-len(bits) % 6)
    payload = "".join(chr(int(bits[i:i + 6], 2) + 63) for i in range(0, len(bits), 6))
    return _encode_n(g.n) + payload


def read_graph6(text: str | bytes) -> Graph:
    """Decode one graph6 string. A leading ``>>graph6<<`` header and
    surrounding whitespace are ignored."""
    if isinstance(text, bytes):
        text = text.decode("ascii", errors="replace")
    start = 0
    stripped = text.strip()
    base = text.find(stripped) if stripped else 0
    if stripped.startswith(_G6_HEADER):
        stripped = stripped[len(_G6_HEADER):]
        start = len(_G6_HEADER)
    data = stripped
    if not data:
        raise ParseError("empty graph6 string", offset=base + start)
    for i, ch in enumerate(data):
        if not 63 <= ord(ch) <= 126:
            raise ParseError(f"byte {ch!r} outside graph6 range 63..126", offset=base + start + i)
    vals = [ord(ch) - 63 for ch in data]

    pos = 0
    if vals[0] == 63:
        if len(vals) >= 2 and vals[1] == 63:
            if len(vals) < 8:
                raise ParseError("truncated 8-byte vertex-count header", offset=base + start + len(vals))
            n = 0
            for x in vals[2:8]:
                n = (n << 6) | x
            pos = 8
        else:
            if len(vals) < 4:
                raise ParseError("truncated 4-byte vertex-count header", offset=base + start + len(vals))
            n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
            pos = 4
    else:
        n = vals[0]
        pos = 1

    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    have = len(vals) - pos
    if have < need:
        raise ParseError(f"truncated edge payload: need {need} bytes, found {have}", offset=base + start + len(vals))
    if have > need:
        raise ParseError(f"{have - need} unexpected trailing bytes", offset=base + start + pos + need)

    payload = vals[pos:]
    bits = "".join(format(x, "06b") for x in payload)
    if "1" in bits[nbits:]:
        raise ParseError("nonzero padding bits", offset=base + start + len(vals) - 1)
    rows = [0] * n
    k = 0
    for j in range(1, n):
        col = bits[k:k + j]
        k += j
        if "1" in col:
            rows[j] = int(col[::-1], 2)
    for j in range(1, n):
        for i in iter_bits(rows[j]):
            rows[i] |= 1 << j
    return Graph(n, rows)


# -- DIMACS .col ----------------------------------------------------------

def read_dimacs_col(text: str) -> Graph:
    """Parse DIMACS edge format (``p edge n m`` header, 1-based ``e u v`` lines).

    When the header's edge count disagrees with the edge lines a
    ``UserWarning`` is issued and the edge lines win.
    """
    n: int | None = None
    declared_m = 0
    edges: list[tuple[int, int]] = []
    edge_lines = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line[0] == "c":
            continue
        parts = line.split()
        tag = parts[0]
        if tag == "p":
            if n is not None:
                raise ParseError("duplicate problem line", line=lineno)
            if len(parts) != 4 or parts[1] not in ("edge", "col"):
                raise ParseError(f"malformed problem line {line!r}", line=lineno)
            try:
                n, declared_m = int(parts[2]), int(parts[3])
            except ValueError:
                raise ParseError(f"non-integer counts in {line!r}", line=lineno) from None
            if n < 0 or declared_m < 0:
                raise ParseError("negative counts in problem line", line=lineno)
        elif tag == "e":
            if n is None:
                raise ParseError("edge line before problem line", line=lineno)
            if len(parts) != 3:
                raise ParseError(f"malformed edge line {line!r}", line=lineno)
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise ParseError(f"non-integer endpoint in {line!r}", line=lineno) from None
            for w in (u, v):
                if not 1 <= w <= n:
                    raise ParseError(f"vertex {w} outside 1..{n}", line=lineno)
            if u == v:
                raise ParseError(f"self-loop at vertex {u}", line=lineno)
            edges.append((u - 1, v - 1))
            edge_lines += 1
        else:
            raise ParseError(f"unknown line type {tag!r}", line=lineno)
    if n is None:
        raise ParseError("missing 'p edge n m' problem line", line=None)
    g = build_graph(n, edges)
    if declared_m not in (edge_lines, g.m):
        warnings.warn(
            f"DIMACS header declares {declared_m} edges but {edge_lines} edge lines were read",
            stacklevel=2,
        )
    return g


def write_dimacs_col(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.m}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


# -- files ----------------------------------------------------------------

def sniff_format(path: str | Path) -> str:
    suffix = Path(path).suffix.lower()
    if suffix in (".g6", ".graph6"):
        return "g6"
    if suffix in (".col", ".dimacs", ".clq"):
        return "dimacs"
    raise ParseError(f"cannot infer graph format from {str(path)!r}; pass a format explicitly")


def load_graph(path: str | Path, fmt: str | None = None) -> Graph:
    fmt = fmt or sniff_format(path)
    text = Path(path).read_text(encoding="ascii", errors="replace")
    if fmt == "g6":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise ParseError("empty graph6 file", offset=0)
        return read_graph6(lines[0])
    if fmt == "dimacs":
        return read_dimacs_col(text)
    raise ValueError(f"unknown graph format {fmt!r}")


def dump_graph(g: Graph, fmt: str = "g6") -> str:
    if fmt == "g6":
        return write_graph6(g) + "\n"
    if fmt == "dimacs":
        return write_dimacs_col(g)
    raise ValueError(f"unknown graph format {fmt!r}")


__all__ = [
    "GraphError",
    "ParseError",
    "read_graph6",
    "write_graph6",
    "read_dimacs_col",
    "write_dimacs_col",
    "load_graph",
    "dump_graph",
    "sniff_format",
]
