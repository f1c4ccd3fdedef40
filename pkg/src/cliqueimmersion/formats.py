"""graph6 and DIMACS edge-list readers and writers."""

from __future__ import annotations

from pathlib import Path

from .graphs import SimpleGraph

GRAPH6_HEADER = b">>graph6<<"


class GraphFormatError(ValueError):
    pass


# -- graph6 --------------------------------------------------------------

def _encode_size(n: int) -> bytes:
    if n < 63:
        return bytes([n + 63])
    if n < 258048:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    if n < 68719476736:
        return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    raise GraphFormatError("graph too large for graph6")


def _decode_size(data: bytes) -> tuple[int, int]:
    if not data:
        raise GraphFormatError("empty graph6 string")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        width, start = 6, 2
    else:
        width, start = 3, 1
    if len(data) < start + width:
        raise GraphFormatError("truncated graph6 size field")
    n = 0
    for b in data[start:start + width]:
        if not 63 <= b <= 126:
            raise GraphFormatError(f"invalid graph6 byte {b}")
        n = (n << 6) | (b - 63)
    return n, start + width


def to_graph6(g: SimpleGraph, header: bool = False) -> bytes:
    n = g.vertex_count
    bits = []
    for j in range(1, n):
        mask = g.neighbor_mask(j)
        for i in range(j):
            bits.append(mask >> i & 1)
    bits.extend([0] * (-len(bits) % 6))
    body = bytes(
        63 + sum(bits[p + q] << (5 - q) for q in range(6)) for p in range(0, len(bits), 6)
    )
    return (GRAPH6_HEADER if header else b"") + _encode_size(n) + body


def from_graph6(data: bytes | str) -> SimpleGraph:
    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.strip()
    if data.startswith(GRAPH6_HEADER):
        data = data[len(GRAPH6_HEADER):]
    if data.startswith(b":") or data.startswith(b";"):
        raise GraphFormatError("sparse6/digraph6 input is not supported")
    n, pos = _decode_size(data)
    body = data[pos:]
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise GraphFormatError(f"graph6 body has {len(body)} bytes, expected {need}")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            b = body[k // 6]
            if not 63 <= b <= 126:
                raise GraphFormatError(f"invalid graph6 byte {b}")
            if (b - 63) >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    return SimpleGraph(n, edges)


# -- DIMACS edge list ----------------------------------------------------

def to_dimacs(g: SimpleGraph, comment: str | None = None) -> bytes:
    lines = []
    if comment:
        lines.extend(f"c {c}" for c in comment.splitlines())
    edges = g.edge_list()
    lines.append(f"p edge {g.vertex_count} {len(edges)}")
    lines.extend(f"e {u + 1} {v + 1}" for u, v in edges)
    return ("\n".join(lines) + "\n").encode("ascii")


def from_dimacs(data: bytes | str) -> SimpleGraph:
    """Parse a DIMACS ``p edge n m`` file with 1-indexed ``e u v`` lines.

    Repeated edges (in either orientation) collapse to one; ``m`` is not
    enforced because many published files count both orientations.
    """
    if isinstance(data, bytes):
        data = data.decode("ascii")
    n = None
    edges = set()
    for lineno, raw in enumerate(data.splitlines(), 1):
        line = raw.strip()
        if not line or line[0] == "c":
            continue
        tok = line.split()
        if tok[0] == "p":
            if n is not None:
                raise GraphFormatError(f"line {lineno}: second problem line")
            if len(tok) != 4 or tok[1] not in ("edge", "col"):
                raise GraphFormatError(f"line {lineno}: malformed header {line!r}")
            try:
                n = int(tok[2])
                int(tok[3])
            except ValueError:
                raise GraphFormatError(f"line {lineno}: malformed header {line!r}") from None
            if n < 0:
                raise GraphFormatError(f"line {lineno}: negative vertex count")
        elif tok[0] == "e":
            if n is None:
                raise GraphFormatError(f"line {lineno}: edge before header")
            if len(tok) != 3:
                raise GraphFormatError(f"line {lineno}: malformed edge {line!r}")
            try:
                u, v = int(tok[1]), int(tok[2])
            except ValueError:
                raise GraphFormatError(f"line {lineno}: malformed edge {line!r}") from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphFormatError(f"line {lineno}: vertex out of range in {line!r}")
            if u == v:
                raise GraphFormatError(f"line {lineno}: loop at vertex {u}")
            edges.add((min(u, v) - 1, max(u, v) - 1))
        else:
            raise GraphFormatError(f"line {lineno}: unknown line type {tok[0]!r}")
    if n is None:
        raise GraphFormatError("missing 'p edge' header")
    return SimpleGraph(n, sorted(edges))


# -- dispatch ------------------------------------------------------------

FORMATS = ("graph6", "dimacs-edge")


def parse_graph(data: bytes | str, format: str) -> SimpleGraph:
    if format == "graph6":
        return from_graph6(data)
    if format in ("dimacs-edge", "dimacs"):
        return from_dimacs(data)
    raise ValueError(f"unknown format {format!r}; expected one of {FORMATS}")


def serialize_graph(g: SimpleGraph, format: str) -> bytes:
    if format == "graph6":
        return to_graph6(g) + b"\n"
    if format in ("dimacs-edge", "dimacs"):
        return to_dimacs(g)
    raise ValueError(f"unknown format {format!r}; expected one of {FORMATS}")


def guess_format(path: str | Path) -> str:
    suffix = Path(path).suffix.lower()
    if suffix in (".g6", ".graph6"):
        return "graph6"
    if suffix in (".dimacs", ".col", ".dim", ".edge"):
        return "dimacs-edge"
    data = Path(path).read_bytes().lstrip()
    if data[:2] in (b"p ", b"c ", b"c\n"):
        return "dimacs-edge"
    return "graph6"


def read_graph(path: str | Path, format: str | None = None) -> SimpleGraph:
    fmt = format or guess_format(path)
    return parse_graph(Path(path).read_bytes(), fmt)


def write_graph(g: SimpleGraph, path: str | Path, format: str | None = None) -> None:
    fmt = format or guess_format_for_write(path)
    Path(path).write_bytes(serialize_graph(g, fmt))


def guess_format_for_write(path: str | Path) -> str:
    return "dimacs-edge" if Path(path).suffix.lower() in (".dimacs", ".col", ".dim", ".edge") else "graph6"
