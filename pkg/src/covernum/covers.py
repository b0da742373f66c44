"""Cover formulas, constructive covers and certificate checking.

A cover of G is a list of spanning subgraphs (as edge sets) whose union
is E(G) and each of which lies in a fixed class.  Constructions here are
exact realizations of the ceil-log formulas: write each color id of an
optimal coloring in base b and split edges by the digit where their
endpoint colors differ.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from .generators import hypercube
from .graphs import EdgeSet, Graph, edge_index, full_edge_set, spanning_subgraph
from .invariants import Coloring, ceil_log, chromatic_number, clique_number
from .recognizers import ClassSpec, FSpec, in_class


def formula_biparticity(chi: int) -> int:
    """Parts needed to cover a chi-chromatic graph by bipartite graphs."""
    if chi < 0:
        raise ValueError("chromatic number cannot be negative")
    if chi <= 1:
        return 0
    return ceil_log(2, chi)


def formula_chibound(chi: int, omega: int, f: FSpec) -> int:
    """Parts needed for the class of graphs with chi(H) <= f(omega(H))."""
    if chi < 0 or omega < 0 or omega > chi:
        raise ValueError(f"inconsistent invariant pair chi={chi}, omega={omega}")
    if chi <= 1:
        return 0
    fo = f(omega)
    if fo < 2:
        raise ValueError(f"cover base f(omega)={fo} is below 2, no cover exists")
    return ceil_log(fo, chi)


@dataclass(frozen=True)
class CoverCertificate:
    host: Graph
    spec: ClassSpec
    parts: Tuple[EdgeSet, ...]
    witnesses: Tuple[Dict, ...]
    formula: int


def certificate_to_json(cert: CoverCertificate) -> Dict:
    """Stable-keyed dict: class, formula, parts (sorted edge pairs), witnesses."""
    return {
        "class": str(cert.spec),
        "formula": cert.formula,
        "parts": [[[u, v] for u, v in p.edges()] for p in cert.parts],
        "witnesses": list(cert.witnesses),
    }


def _digit_parts(g: Graph, colors: Sequence[int], base: int, t: int) -> List[EdgeSet]:
    idx = edge_index(g)
    masks = [0] * t
    for i, (u, v) in enumerate(idx):
        cu, cv = colors[u], colors[v]
        for d in range(t):
            if cu % base != cv % base:
                masks[d] |= 1 << i
            cu //= base
            cv //= base
    return [EdgeSet(g, m) for m in masks]


def _finish(g: Graph, spec: ClassSpec, parts: List[EdgeSet]) -> CoverCertificate:
    wits = []
    for p in parts:
        w = in_class(spanning_subgraph(g, p), spec)
        assert w is not None, "constructed part fell outside its class"
        wits.append(w)
    return CoverCertificate(g, spec, tuple(parts), tuple(wits), len(parts))


def chi_le_k_cover(g: Graph, k: int) -> CoverCertificate:
    """Cover by ceil(log_k chi) many k-colorable spanning subgraphs.

    Part i keeps the edges whose endpoint colors differ in the i-th
    base-k digit; coloring a part by that digit shows chi <= k.
    """
    if k < 2:
        raise ValueError(f"digit base k must be >= 2, got {k}")
    spec = ClassSpec("chi-le", k=k)
    chi, coloring = chromatic_number(g)
    if chi <= 1:
        return CoverCertificate(g, spec, (), (), 0)
    t = ceil_log(k, chi)
    return _finish(g, spec, _digit_parts(g, coloring.colors, k, t))


def bipartite_cover(g: Graph) -> CoverCertificate:
    """Cover by ceil(log2 chi) bipartite spanning subgraphs."""
    spec = ClassSpec("bipartite")
    chi, coloring = chromatic_number(g)
    if chi <= 1:
        return CoverCertificate(g, spec, (), (), 0)
    t = ceil_log(2, chi)
    return _finish(g, spec, _digit_parts(g, coloring.colors, 2, t))


def chibound_cover(g: Graph, f: FSpec) -> CoverCertificate:
    """Cover by parts from the class {H : chi(H) <= f(omega(H))}.

    Color ids are relabelled as digit strings over base f(omega).  The
    colors on one maximum clique become distinct constant strings, which
    keeps the full clique inside every part, so each part has the same
    clique number as g and its digit coloring stays below f(omega).
    """
    spec = ClassSpec("chi-le-f", f=f)
    chi, coloring = chromatic_number(g)
    if chi <= 1:
        return CoverCertificate(g, spec, (), (), 0)
    if f.form == "const":
        # constant bound: plain base-k digit cover, same as chi_le_k_cover
        if f.value < 2:
            raise ValueError(f"cover base f(omega)={f.value} is below 2, no cover exists")
        t = ceil_log(f.value, chi)
        return _finish(g, spec, _digit_parts(g, coloring.colors, f.value, t))
    if not f.majorizes_identity:
        raise ValueError("f must majorize the identity")
    omega, clique = clique_number(g)
    base = f(omega)
    t = ceil_log(base, chi)
    # constant strings for the clique colors, in increasing clique-vertex order
    strings: Dict[int, Tuple[int, ...]] = {}
    taken = set()
    for i, v in enumerate(sorted(clique.vertices)):
        s = (i,) * t
        strings[coloring.colors[v]] = s
        taken.add(s)
    fresh = (s for s in itertools.product(range(base), repeat=t) if s not in taken)
    for c in range(chi):
        if c not in strings:
            strings[c] = next(fresh)
    idx = edge_index(g)
    masks = [0] * t
    for i, (u, v) in enumerate(idx):
        su, sv = strings[coloring.colors[u]], strings[coloring.colors[v]]
        for d in range(t):
            if su[d] != sv[d]:
                masks[d] |= 1 << i
    return _finish(g, spec, [EdgeSet(g, m) for m in masks])


def product_coloring(g: Graph, parts: Sequence[Tuple[EdgeSet, Coloring]]) -> Coloring:
    """Combine per-part colorings into one proper coloring of g.

    Each vertex gets the tuple of its part colors, compressed to dense
    ids by first appearance.  Uses at most the product of the part color
    counts, which is how the cover formulas are forced from below.
    """
    union = 0
    for es, col in parts:
        if es.host != g:
            raise ValueError("part edge set belongs to a different host graph")
        if len(col.colors) != g.n:
            raise ValueError("part coloring has the wrong vertex count")
        for u, v in es.edges():
            if col.colors[u] == col.colors[v]:
                raise ValueError(f"part coloring is improper on edge ({u}, {v})")
        union |= es.bits
    if union != full_edge_set(g).bits:
        raise ValueError("parts do not cover every edge of the host")
    mapping: Dict[Tuple[int, ...], int] = {}
    out = []
    for v in range(g.n):
        key = tuple(col.colors[v] for _, col in parts)
        if key not in mapping:
            mapping[key] = len(mapping)
        out.append(mapping[key])
    return Coloring(tuple(out), len(mapping))


def hypercube_direction_cover(d: int) -> CoverCertificate:
    """Partition E(Q_d) into the d direction matchings, each unipolar."""
    g = hypercube(d)
    spec = ClassSpec("unipolar")
    idx = edge_index(g)
    masks = [0] * d
    for i, (u, v) in enumerate(idx):
        masks[(u ^ v).bit_length() - 1] |= 1 << i
    return _finish(g, spec, [EdgeSet(g, m) for m in masks])


def unipolar_subgraph_bound(d: int) -> int:
    """Edge budget of any unipolar spanning subgraph of Q_d."""
    if d < 1:
        raise ValueError("dimension must be >= 1")
    return 2 ** (d - 1) + 2 * (d - 1)


def hypercube_lower_bound(d: int) -> int:
    """ceil(d 2^(d-1) / (2^(d-1) + 2(d-1))), exact integer arithmetic."""
    if d < 1:
        raise ValueError("dimension must be >= 1")
    num = d * 2 ** (d - 1)
    den = 2 ** (d - 1) + 2 * (d - 1)
    return -(-num // den)


def check_certificate(g: Graph, cert: CoverCertificate) -> bool:
    """Re-derive everything: host, union, claimed count, part membership."""
    if cert.host != g:
        return False
    if cert.formula != len(cert.parts):
        return False
    union = 0
    for p in cert.parts:
        if p.host != g:
            return False
        union |= p.bits
    if union != full_edge_set(g).bits:
        return False
    for p in cert.parts:
        if in_class(spanning_subgraph(g, p), cert.spec) is None:
            return False
    return True
