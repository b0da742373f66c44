"""Exact chromatic number, clique number and integer ceiling logs.

Everything here is exact and deterministic: searches iterate vertices in
increasing id, so repeated calls return identical witnesses.  Sizes are
desk scale (n <= 64), which branch and bound handles comfortably.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

from .graphs import Graph, bits_of, induced_rows


def ceil_log(base: int, x: int) -> int:
    """Least t >= 0 with base**t >= x, by pure integer arithmetic."""
    if base < 2:
        raise ValueError(f"log base must be >= 2, got {base}")
    if x < 1:
        raise ValueError(f"argument must be >= 1, got {x}")
    t = 0
    p = 1
    while p < x:
        p *= base
        t += 1
    return t


@dataclass(frozen=True)
class Coloring:
    """Proper coloring: colors[v] in 0..count-1, every color used."""

    colors: Tuple[int, ...]
    count: int


@dataclass(frozen=True)
class CliqueWitness:
    vertices: Tuple[int, ...]
    size: int

    @property
    def mask(self) -> int:
        m = 0
        for v in self.vertices:
            m |= 1 << v
        return m


def _max_clique_size(rows: Sequence[int], cand: int, floor: int = 0) -> int:
    """Largest clique inside the candidate mask, classic bitset expansion."""
    best = floor

    def expand(cand: int, size: int) -> None:
        nonlocal best
        if size > best:
            best = size
        while cand:
            if size + cand.bit_count() <= best:
                return
            v = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            expand(cand & rows[v], size + 1)

    expand(cand, 0)
    return best


def _has_clique(rows: Sequence[int], cand: int, target: int) -> bool:
    """Does the candidate mask contain a clique of the target size?"""
    if target <= 0:
        return True
    found = False

    def expand(cand: int, size: int) -> None:
        nonlocal found
        if size >= target:
            found = True
            return
        while cand and not found:
            if size + cand.bit_count() < target:
                return
            v = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            expand(cand & rows[v], size + 1)

    expand(cand, 0)
    return found


def omega_of_rows(n: int, rows: Sequence[int]) -> int:
    if n == 0:
        return 0
    return _max_clique_size(rows, (1 << n) - 1)


@lru_cache(maxsize=65536)
def _clique_number_cached(g: Graph) -> Tuple[int, CliqueWitness]:
    n, rows = g.n, g.rows
    w = omega_of_rows(n, rows)
    # lexicographically least maximum clique, grown smallest feasible vertex first
    chosen: List[int] = []
    cand = (1 << n) - 1
    while len(chosen) < w:
        need = w - len(chosen)
        for v in bits_of(cand):
            rest = cand & rows[v]
            if _has_clique(rows, rest, need - 1):
                chosen.append(v)
                cand = rest
                break
    return w, CliqueWitness(tuple(chosen), w)


def clique_number(g: Graph) -> Tuple[int, CliqueWitness]:
    """Maximum clique size with the lexicographically least witness."""
    return _clique_number_cached(g)


def k_colorable_rows(n: int, rows: Sequence[int], k: int) -> Optional[List[int]]:
    """Proper coloring with at most k colors, or None.

    Backtracking on the most saturated vertex (ties: higher degree, then
    lower id).  A fresh color is only ever the next unused index, which
    breaks color symmetry and keeps witnesses dense in 0..used-1.
    """
    if n == 0:
        return []
    if k <= 0:
        return None
    if all(r == 0 for r in rows):
        return [0] * n
    degs = [rows[v].bit_count() for v in range(n)]
    colors = [-1] * n
    ncm = [0] * n  # bitmask of colors already on the neighbourhood

    def pick() -> int:
        best = -1
        best_key = (-1, -1)
        for v in range(n):
            if colors[v] < 0:
                key = (ncm[v].bit_count(), degs[v])
                if key > best_key:
                    best_key = key
                    best = v
        return best

    def dfs(done: int, used: int) -> bool:
        if done == n:
            return True
        v = pick()
        avail = ~ncm[v] & ((1 << min(used + 1, k)) - 1)
        while avail:
            c = (avail & -avail).bit_length() - 1
            avail &= avail - 1
            colors[v] = c
            bit = 1 << c
            changed = []
            m = rows[v]
            while m:
                u = (m & -m).bit_length() - 1
                m &= m - 1
                if colors[u] < 0 and not ncm[u] & bit:
                    ncm[u] |= bit
                    changed.append(u)
            if dfs(done + 1, max(used, c + 1)):
                return True
            for u in changed:
                ncm[u] &= ~bit
            colors[v] = -1
        return False

    if dfs(0, 0):
        return colors
    return None


def _components(n: int, rows: Sequence[int]) -> List[int]:
    """Connected components as vertex masks, ordered by least vertex."""
    seen = 0
    comps = []
    for v in range(n):
        if seen >> v & 1:
            continue
        frontier = 1 << v
        comp = 0
        while frontier:
            comp |= frontier
            nxt = 0
            m = frontier
            while m:
                u = (m & -m).bit_length() - 1
                m &= m - 1
                nxt |= rows[u]
            frontier = nxt & ~comp
        comps.append(comp)
        seen |= comp
    return comps


def chi_of_rows(n: int, rows: Sequence[int]) -> int:
    """Exact chromatic number by deepening k-colorability per component."""
    if n == 0:
        return 0
    best = 1
    for comp in _components(n, rows):
        cn, crows = _masked_rows(rows, comp)
        k = max(_max_clique_size(crows, (1 << cn) - 1), 1)
        while k < cn and k_colorable_rows(cn, crows, k) is None:
            k += 1
        best = max(best, k)
    return best


def _masked_rows(rows: Sequence[int], mask: int) -> Tuple[int, List[int]]:
    verts = bits_of(mask)
    pos = {v: i for i, v in enumerate(verts)}
    out = []
    for v in verts:
        r = rows[v] & mask
        acc = 0
        while r:
            u = (r & -r).bit_length() - 1
            r &= r - 1
            acc |= 1 << pos[u]
        out.append(acc)
    return len(verts), out


@lru_cache(maxsize=65536)
def _chromatic_cached(g: Graph) -> Tuple[int, Coloring]:
    n, rows = g.n, g.rows
    if n == 0:
        return 0, Coloring((), 0)
    colors = [0] * n
    chi = 1
    for comp in _components(n, rows):
        verts = bits_of(comp)
        cn, crows = _masked_rows(rows, comp)
        k = max(_max_clique_size(crows, (1 << cn) - 1), 1)
        sol = k_colorable_rows(cn, crows, k)
        while sol is None:
            k += 1
            sol = k_colorable_rows(cn, crows, k)
        for i, v in enumerate(verts):
            colors[v] = sol[i]
        chi = max(chi, max(sol) + 1)
    return chi, Coloring(tuple(colors), chi)


def chromatic_number(g: Graph) -> Tuple[int, Coloring]:
    """Exact chromatic number and a coloring attaining it."""
    return _chromatic_cached(g)


def is_k_colorable(g: Graph, k: int) -> Optional[Coloring]:
    """A proper coloring of g with at most k colors, or None."""
    if g.n == 0:
        return Coloring((), 0)
    if k <= 0:
        return None
    colors = [0] * g.n
    used = 1
    for comp in _components(g.n, g.rows):
        verts = bits_of(comp)
        cn, crows = _masked_rows(g.rows, comp)
        sol = k_colorable_rows(cn, crows, k)
        if sol is None:
            return None
        for i, v in enumerate(verts):
            colors[v] = sol[i]
        used = max(used, max(sol) + 1)
    return Coloring(tuple(colors), used)


def check_coloring(g: Graph, coloring: Coloring) -> bool:
    """Independent validity check: proper and every color id used."""
    if len(coloring.colors) != g.n:
        return False
    if g.n == 0:
        return coloring.count == 0
    if any(c < 0 or c >= coloring.count for c in coloring.colors):
        return False
    if set(coloring.colors) != set(range(coloring.count)):
        return False
    for u, v in g.edges():
        if coloring.colors[u] == coloring.colors[v]:
            return False
    return True


def check_clique(g: Graph, witness: CliqueWitness) -> bool:
    vs = witness.vertices
    if len(vs) != witness.size or len(set(vs)) != len(vs):
        return False
    if any(not 0 <= v < g.n for v in vs):
        return False
    return all(g.has_edge(u, v) for i, u in enumerate(vs) for v in vs[i + 1:])


def induced_chi_omega(g: Graph, vertex_mask: int) -> Tuple[int, int]:
    """(chi, omega) of the induced subgraph on the given vertex mask."""
    cn, crows = induced_rows(g, vertex_mask)
    return chi_of_rows(cn, crows), omega_of_rows(cn, crows)
