"""Graph file formats and reduction-trace serialization.

Formats
-------
edgelist
    One ``u v`` pair per line. Optional header lines ``n=<count>`` (vertices
    are then ``0..n-1``, isolated ones included) and ``k=<budget>``; ``#``
    starts a comment.
graph6
    The standard format, short form for ``n <= 62`` and the extended forms
    above that. An optional ``>>graph6<<`` header is accepted. Carries no
    budget.
dimacs
    ``p edge <n> <m>`` followed by ``e <u> <v>`` lines with 1-based ids;
    ``c k <budget>`` sets the budget, other ``c`` lines are comments.

Trace schema
------------
Line-delimited JSON. The first line is a header object
``{"format": "pivd-trace", "version": 1, "records": N, "relabel": ...}``;
``relabel`` is a list of ``[internal_id, output_id]`` pairs or null. Each
following line is one record with keys, in this order: ``rule``,
``witness``, ``v_before``, ``v_after``, ``k_before``, ``k_after``,
``verdict``, ``added``, ``left``, ``right``.
"""

from __future__ import annotations

import json
from pathlib import Path

from .errors import ParseError
from .graph import Graph, relabel_dense
from .rules import Instance, ReductionTrace, TraceStep

FORMATS = ("edgelist", "graph6", "dimacs")
TRACE_FIELDS = ("rule", "witness", "v_before", "v_after", "k_before", "k_after", "verdict", "added", "left", "right")


def guess_format(path: str | Path) -> str:
    suffix = Path(path).suffix.lower()
    if suffix in (".g6", ".graph6"):
        return "graph6"
    if suffix in (".dimacs", ".col", ".dim"):
        return "dimacs"
    return "edgelist"


def _text(data: bytes | str) -> str:
    if isinstance(data, bytes):
        try:
            return data.decode("ascii")
        except UnicodeDecodeError as exc:
            raise ParseError("non-ASCII input", offset=exc.start) from None
    return data


def _build(n: int, edges: list[tuple[int, int, int]]) -> Graph:
    adj: dict[int, set[int]] = {v: set() for v in range(n)}
    for u, v, line in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex out of range 0..{n - 1}", line=line)
        if u == v:
            raise ParseError("self-loop", line=line)
        adj[u].add(v)
        adj[v].add(u)
    return Graph(adj)


def _header_int(value: str, line: int, what: str) -> int:
    try:
        out = int(value)
    except ValueError:
        raise ParseError(f"{what} must be an integer", line=line) from None
    if out < 0:
        raise ParseError(f"{what} must be non-negative", line=line)
    return out


def _parse_edgelist(text: str) -> tuple[Graph, int | None]:
    n = k = None
    edges = []
    for i, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" in line:
            key, _, value = (s.strip() for s in line.partition("="))
            if key == "n":
                n = _header_int(value, i, "n")
            elif key == "k":
                k = _header_int(value, i, "k")
            else:
                raise ParseError(f"unknown header {key!r}", line=i)
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError("expected two vertex ids", line=i)
        u, v = (_header_int(p, i, "vertex id") for p in parts)
        edges.append((u, v, i))
    if n is None:
        n = max((max(u, v) + 1 for u, v, _ in edges), default=0)
    return _build(n, edges), k


def _parse_dimacs(text: str) -> tuple[Graph, int | None]:
    n = k = None
    edges = []
    for i, raw in enumerate(text.splitlines(), 1):
        parts = raw.split()
        if not parts:
            continue
        tag = parts[0]
        if tag == "c":
            if len(parts) == 3 and parts[1] == "k":
                k = _header_int(parts[2], i, "k")
            continue
        if tag == "p":
            if len(parts) != 4 or parts[1] not in ("edge", "col"):
                raise ParseError("expected 'p edge <n> <m>'", line=i)
            n = _header_int(parts[2], i, "n")
            continue
        if tag == "e":
            if n is None:
                raise ParseError("edge before problem line", line=i)
            if len(parts) != 3:
                raise ParseError("expected 'e <u> <v>'", line=i)
            u, v = (_header_int(p, i, "vertex id") for p in parts[1:])
            if u == 0 or v == 0:
                raise ParseError("DIMACS vertex ids are 1-based", line=i)
            edges.append((u - 1, v - 1, i))
            continue
        raise ParseError(f"unknown line type {tag!r}", line=i)
    if n is None:
        raise ParseError("missing problem line", line=1)
    return _build(n, edges), k


def _graph6_size(data: bytes) -> tuple[int, int]:
    """Vertex count and number of bytes it occupied."""
    if not data:
        raise ParseError("empty graph6 payload", offset=0)
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] != 126:
        width, start = 3, 1
    else:
        width, start = 6, 2
    chunk = data[start : start + width]
    if len(chunk) != width:
        raise ParseError("truncated graph6 size field", offset=len(data))
    n = 0
    for b in chunk:
        n = (n << 6) | (b - 63)
    return n, start + width


def _parse_graph6(payload: bytes | str) -> Graph:
    if isinstance(payload, str):
        payload = payload.encode("ascii")
    data = payload.strip()
    if data.startswith(b">>graph6<<"):
        data = data[len(b">>graph6<<") :]
    for pos, b in enumerate(data):
        if not 63 <= b <= 126:
            raise ParseError(f"invalid graph6 byte {b}", offset=pos)
    n, head = _graph6_size(data)
    nbits = n * (n - 1) // 2
    body = data[head:]
    expected = (nbits + 5) // 6
    if len(body) != expected:
        raise ParseError(f"graph6 body has {len(body)} bytes, expected {expected}", offset=head)
    adj: dict[int, set[int]] = {v: set() for v in range(n)}
    bit = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[bit // 6] - 63
            if byte >> (5 - bit % 6) & 1:
                adj[i].add(j)
                adj[j].add(i)
            bit += 1
    return Graph(adj)


def encode_graph6(g: Graph) -> bytes:
    h, _ = relabel_dense(g)
    n = len(h)
    if n < 63:
        head = bytes([n + 63])
    elif n < 258048:
        head = bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    else:
        head = bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    bits = [1 if h.has_edge(i, j) else 0 for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = bytes(
        63 + sum(b << (5 - t) for t, b in enumerate(bits[p : p + 6])) for p in range(0, len(bits), 6)
    )
    return head + body


def parse_instance(data: bytes | str, fmt: str = "edgelist") -> tuple[Graph, int | None]:
    """Graph plus the budget stored in the file, if the format has one."""
    if fmt == "edgelist":
        return _parse_edgelist(_text(data))
    if fmt == "dimacs":
        return _parse_dimacs(_text(data))
    if fmt == "graph6":
        return _parse_graph6(data), None
    raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")


def parse_graph(data: bytes | str, fmt: str = "edgelist") -> Graph:
    return parse_instance(data, fmt)[0]


def serialize_graph(g: Graph, fmt: str = "edgelist", k: int | None = None) -> bytes:
    """Write ``g`` with vertices renumbered densely in ascending id order."""
    h, _ = relabel_dense(g)
    if fmt == "graph6":
        return encode_graph6(h) + b"\n"
    if fmt == "edgelist":
        rows = [f"n={len(h)}"] + ([f"k={k}"] if k is not None else [])
        rows += [f"{u} {v}" for u, v in h.edges()]
    elif fmt == "dimacs":
        rows = ([f"c k {k}"] if k is not None else []) + [f"p edge {len(h)} {h.number_of_edges()}"]
        rows += [f"e {u + 1} {v + 1}" for u, v in h.edges()]
    else:
        raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")
    return ("\n".join(rows) + "\n").encode("ascii")


def serialize_instance(inst: Instance, fmt: str = "edgelist") -> bytes:
    return serialize_graph(inst.graph, fmt, k=inst.k)


def emit_trace(trace: ReductionTrace, relabel: dict[int, int] | None = None) -> bytes:
    header = {
        "format": "pivd-trace",
        "version": 1,
        "records": len(trace.steps),
        "relabel": sorted(relabel.items()) if relabel is not None else None,
    }
    lines = [json.dumps(header)]
    for s in trace.steps:
        record = {name: getattr(s, name) for name in TRACE_FIELDS}
        for name in ("witness", "added", "left", "right"):
            record[name] = list(record[name])
        lines.append(json.dumps(record))
    return ("\n".join(lines) + "\n").encode("ascii")


def parse_trace(data: bytes | str) -> tuple[ReductionTrace, dict[int, int] | None]:
    lines = [ln for ln in _text(data).splitlines() if ln.strip()]
    if not lines:
        raise ParseError("empty trace", line=1)
    try:
        header = json.loads(lines[0])
    except json.JSONDecodeError:
        raise ParseError("trace header is not JSON", line=1) from None
    if header.get("format") != "pivd-trace":
        raise ParseError("not a pivd trace", line=1)
    steps = []
    for i, ln in enumerate(lines[1:], 2):
        try:
            rec = json.loads(ln)
            steps.append(
                TraceStep(
                    rule=rec["rule"],
                    witness=tuple(rec["witness"]),
                    v_before=rec["v_before"],
                    v_after=rec["v_after"],
                    k_before=rec["k_before"],
                    k_after=rec["k_after"],
                    verdict=rec["verdict"],
                    added=tuple(rec["added"]),
                    left=tuple(rec["left"]),
                    right=tuple(rec["right"]),
                )
            )
        except (json.JSONDecodeError, KeyError, TypeError):
            raise ParseError("malformed trace record", line=i) from None
    if len(steps) != header.get("records"):
        raise ParseError("record count does not match header", line=1)
    relabel = header.get("relabel")
    return ReductionTrace(steps), (dict((a, b) for a, b in relabel) if relabel is not None else None)
