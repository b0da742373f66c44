"""Serialization of graphs: graph6, plain edge lists, and DIMACS.

All three parsers are strict so that round trips are bit exact: out of
range bytes, truncated bit fields, header/body mismatches and trailing
garbage are errors, not warnings.
"""

from __future__ import annotations

from typing import List, Optional, Tuple

from .graphs import MAX_VERTICES, CapacityError, Graph, make_graph

GRAPH6_HEADER = ">>graph6<<"


class ParseError(ValueError):
    """Malformed serialized graph."""


def _g6_bytes(data: str) -> List[int]:
    vals = []
    for ch in data:
        b = ord(ch) - 63
        if not 0 <= b < 64:
            raise ParseError(f"graph6 byte {ord(ch)} outside printable range 63..126")
        vals.append(b)
    return vals


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line (short form, or long form for n in 63..64)."""
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    if not s:
        raise ParseError("empty graph6 string")
    vals = _g6_bytes(s)
    if vals[0] == 63:
        # long form: '~' then 18 bits of n in 3 bytes
        if len(vals) < 4:
            raise ParseError("truncated graph6 vertex count")
        if vals[1] == 63:
            raise ParseError("graph6 very long form exceeds the 64 vertex limit")
        n = vals[1] << 12 | vals[2] << 6 | vals[3]
        body = vals[4:]
    else:
        n = vals[0]
        body = vals[1:]
    if n > MAX_VERTICES:
        raise CapacityError(f"graph6 vertex count {n} exceeds {MAX_VERTICES}")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(body) < nbytes:
        raise ParseError("truncated graph6 bit field")
    if len(body) > nbytes:
        raise ParseError("trailing garbage after graph6 bit field")
    bits = 0
    for b in body:
        bits = bits << 6 | b
    pad = nbytes * 6 - nbits
    if bits & ((1 << pad) - 1):
        raise ParseError("nonzero padding bits in graph6 bit field")
    bits >>= pad
    edges = []
    # column-major upper triangle: (0,1), (0,2), (1,2), (0,3), ...
    pos = nbits - 1
    for v in range(1, n):
        for u in range(v):
            if bits >> pos & 1:
                edges.append((u, v))
            pos -= 1
    return make_graph(n, edges)


def emit_graph6(g: Graph) -> str:
    """Encode as graph6, short form when n <= 62."""
    n = g.n
    if n <= 62:
        head = chr(n + 63)
    else:
        head = "~" + chr((n >> 12) + 63) + chr((n >> 6 & 63) + 63) + chr((n & 63) + 63)
    bits = 0
    nbits = n * (n - 1) // 2
    for v in range(1, n):
        for u in range(v):
            bits = bits << 1 | (g.rows[u] >> v & 1)
    pad = (6 - nbits % 6) % 6
    bits <<= pad
    body = []
    for i in range((nbits + pad) // 6 - 1, -1, -1):
        body.append(chr((bits >> (6 * i) & 63) + 63))
    return head + "".join(body)


def parse_edge_list(text: str) -> Graph:
    """Plain format: a header line "n m" then m lines "u v" (0 based)."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ParseError("empty edge list input")
    head = lines[0].split()
    if len(head) != 2:
        raise ParseError('edge list header must be "n m"')
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise ParseError('edge list header must be two integers "n m"') from None
    if n < 0 or m < 0:
        raise ParseError("negative counts in edge list header")
    body = lines[1:]
    if len(body) != m:
        raise ParseError(f"header announces {m} edges but body has {len(body)} lines")
    edges = []
    seen = set()
    for ln in body:
        parts = ln.split()
        if len(parts) != 2:
            raise ParseError(f'edge line "{ln}" must be "u v"')
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f'edge line "{ln}" must be two integers') from None
        if u == v:
            raise ParseError(f"self loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"duplicate edge ({u}, {v})")
        seen.add(key)
        edges.append((u, v))
    try:
        return make_graph(n, edges)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def emit_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_dimacs(text: str) -> Graph:
    """DIMACS: "p edge n m" then m lines "e u v" with 1 based vertices."""
    n = m = None
    edges = []
    seen = set()
    for raw in text.splitlines():
        ln = raw.strip()
        if not ln or ln.startswith("c"):
            continue
        if ln.startswith("p"):
            if n is not None:
                raise ParseError("duplicate DIMACS problem line")
            parts = ln.split()
            if len(parts) != 4 or parts[1] != "edge":
                raise ParseError('DIMACS problem line must be "p edge n m"')
            try:
                n, m = int(parts[2]), int(parts[3])
            except ValueError:
                raise ParseError("non-integer counts in DIMACS problem line") from None
        elif ln.startswith("e"):
            if n is None:
                raise ParseError("DIMACS edge line before problem line")
            parts = ln.split()
            if len(parts) != 3:
                raise ParseError(f'DIMACS edge line "{ln}" must be "e u v"')
            try:
                u, v = int(parts[1]) - 1, int(parts[2]) - 1
            except ValueError:
                raise ParseError(f'DIMACS edge line "{ln}" must be integers') from None
            if u == v:
                raise ParseError(f"self loop at vertex {u + 1}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ParseError(f"duplicate edge ({u + 1}, {v + 1})")
            seen.add(key)
            edges.append((u, v))
        else:
            raise ParseError(f'unrecognized DIMACS line "{ln}"')
    if n is None:
        raise ParseError("missing DIMACS problem line")
    if len(edges) != m:
        raise ParseError(f"header announces {m} edges but body has {len(edges)}")
    try:
        return make_graph(n, edges)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def emit_dimacs(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.edge_count}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def detect_format(text: str) -> str:
    """Guess the serialization: dimacs, edgelist or graph6."""
    s = text.lstrip()
    # a "p edge" line marks DIMACS even under leading comment lines
    if any(line.lstrip().startswith("p edge") for line in s.splitlines()):
        return "dimacs"
    first = s.splitlines()[0].split() if s else []
    if len(first) == 2:
        try:
            int(first[0]), int(first[1])
            return "edgelist"
        except ValueError:
            pass
    return "graph6"


def parse_graph(text: str, fmt: Optional[str] = None) -> Graph:
    fmt = fmt or detect_format(text)
    if fmt == "graph6":
        return parse_graph6(text)
    if fmt == "edgelist":
        return parse_edge_list(text)
    if fmt == "dimacs":
        return parse_dimacs(text)
    raise ParseError(f"unknown format {fmt!r}")
