"""Membership tests for the covered graph classes, with checkable witnesses.

Classes: bipartite, chi-le:k, chi-le-f:<f>, chi-eq-omega, perfect,
unipolar, co-unipolar and gsp (unipolar or co-unipolar).  Recognition is
exact; perfection goes through the absence of odd holes in the graph and
its complement, everything else through explicit search.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .graphs import CapacityError, Graph, bits_of, complement
from .invariants import (
    CliqueWitness,
    Coloring,
    check_clique,
    clique_number,
    k_colorable_rows,
    omega_of_rows,
)

PERFECT_MAX_VERTICES = 26

F_DOMAIN_MAX = 64


@dataclass(frozen=True)
class FSpec:
    """Clique bound function f, evaluated at clique numbers 1..64.

    Forms: identity, plus (x + c), pow (x ** a), const (k), table (explicit
    values for x = 1..len).  All forms must be non-decreasing and, except
    for const, must majorize the identity; const is flagged non-majorizing.
    """

    form: str
    value: int = 0
    table: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.form == "identity":
            pass
        elif self.form == "plus":
            if self.value < 0:
                raise ValueError("plus form needs a constant >= 0")
        elif self.form == "pow":
            if self.value < 1:
                raise ValueError("pow form needs an exponent >= 1")
        elif self.form == "const":
            if self.value < 1:
                raise ValueError("const form needs a value >= 1")
        elif self.form == "table":
            if not self.table:
                raise ValueError("table form needs at least one value")
            if any(v < 1 for v in self.table):
                raise ValueError("table values must be >= 1")
            if any(b < a for a, b in zip(self.table, self.table[1:])):
                raise ValueError("table values must be non-decreasing")
            if any(v < x for x, v in enumerate(self.table, start=1)):
                raise ValueError("table must majorize the identity")
        else:
            raise ValueError(f"unknown f form {self.form!r}")

    @property
    def majorizes_identity(self) -> bool:
        return self.form != "const"

    @property
    def domain_max(self) -> int:
        return len(self.table) if self.form == "table" else F_DOMAIN_MAX

    def __call__(self, x: int) -> int:
        if not 1 <= x <= F_DOMAIN_MAX:
            raise ValueError(f"f argument {x} outside 1..{F_DOMAIN_MAX}")
        if self.form == "identity":
            return x
        if self.form == "plus":
            return x + self.value
        if self.form == "pow":
            return x ** self.value
        if self.form == "const":
            return self.value
        if x > len(self.table):
            raise ValueError(f"lookup table of length {len(self.table)} undefined at {x}")
        return self.table[x - 1]

    def __str__(self) -> str:
        if self.form == "identity":
            return "identity"
        if self.form == "table":
            return "table:" + ",".join(str(v) for v in self.table)
        return f"{self.form}:{self.value}"


def identity_f() -> FSpec:
    return FSpec("identity")


def parse_f_spec(text: str) -> FSpec:
    if text == "identity":
        return FSpec("identity")
    head, sep, rest = text.partition(":")
    if head in ("plus", "pow", "const") and sep:
        try:
            return FSpec(head, int(rest))
        except ValueError as exc:
            raise ValueError(f"bad f spec {text!r}: {exc}") from None
    raise ValueError(f"bad f spec {text!r}: expected identity, plus:<c>, pow:<a> or const:<k>")


CLASS_KINDS = (
    "bipartite",
    "chi-le",
    "chi-le-f",
    "chi-eq-omega",
    "perfect",
    "unipolar",
    "co-unipolar",
    "gsp",
)


@dataclass(frozen=True)
class ClassSpec:
    kind: str
    k: int = 0
    f: Optional[FSpec] = None

    def __post_init__(self) -> None:
        if self.kind not in CLASS_KINDS:
            raise ValueError(f"unknown class kind {self.kind!r}")
        if self.kind == "chi-le" and self.k < 1:
            raise ValueError("chi-le requires k >= 1")
        if self.kind == "chi-le-f" and self.f is None:
            raise ValueError("chi-le-f requires an f spec")

    def __str__(self) -> str:
        if self.kind == "chi-le":
            return f"chi-le:{self.k}"
        if self.kind == "chi-le-f":
            return f"chi-le-f:{self.f}"
        return self.kind


def parse_class_spec(text: str) -> ClassSpec:
    if text in ("bipartite", "chi-eq-omega", "perfect", "unipolar", "co-unipolar", "gsp"):
        return ClassSpec(text)
    if text.startswith("chi-le-f:"):
        return ClassSpec("chi-le-f", f=parse_f_spec(text[len("chi-le-f:"):]))
    if text.startswith("chi-le:"):
        try:
            return ClassSpec("chi-le", k=int(text[len("chi-le:"):]))
        except ValueError:
            raise ValueError(f"bad class spec {text!r}: chi-le needs an integer") from None
    raise ValueError(f"unknown class spec {text!r}")


def bipartition_rows(n: int, rows: Sequence[int]) -> Optional[Tuple[int, int]]:
    """Two-coloring by BFS, sides as vertex masks; side 0 gets each
    component's least vertex."""
    side = [-1] * n
    mask0 = mask1 = 0
    for s in range(n):
        if side[s] >= 0:
            continue
        side[s] = 0
        mask0 |= 1 << s
        frontier = [s]
        while frontier:
            nxt = []
            for v in frontier:
                m = rows[v]
                while m:
                    u = (m & -m).bit_length() - 1
                    m &= m - 1
                    if side[u] < 0:
                        side[u] = side[v] ^ 1
                        if side[u]:
                            mask1 |= 1 << u
                        else:
                            mask0 |= 1 << u
                        nxt.append(u)
                    elif side[u] == side[v]:
                        return None
            frontier = nxt
    return mask0, mask1


def is_bipartite(g: Graph) -> Optional[Tuple[int, int]]:
    """Bipartition side masks, or None.  An empty side is fine."""
    return bipartition_rows(g.n, g.rows)


def cluster_components(n: int, rows: Sequence[int]) -> Optional[List[int]]:
    """If every component is a clique, the component masks; else None."""
    # P3-free check: each neighbourhood must be mutually adjacent
    for v in range(n):
        nv = rows[v]
        m = nv
        while m:
            u = (m & -m).bit_length() - 1
            m &= m - 1
            if nv & ~rows[u] & ~(1 << u):
                return None
    comps = []
    seen = 0
    for v in range(n):
        if seen >> v & 1:
            continue
        comp = (1 << v) | rows[v]
        comps.append(comp)
        seen |= comp
    return comps


def is_cluster(g: Graph) -> Optional[List[int]]:
    """Component masks if g is a disjoint union of cliques, else None.

    The empty graph yields [], so test against None, not truthiness.
    """
    return cluster_components(g.n, g.rows)


def _find_p3(rows: Sequence[int], active: int) -> Optional[Tuple[int, int, int]]:
    """First induced path u-b-w inside the active mask, by vertex order."""
    rest = active
    while rest:
        b = (rest & -rest).bit_length() - 1
        rest &= rest - 1
        nb = rows[b] & active
        m = nb
        while m:
            u = (m & -m).bit_length() - 1
            m &= m - 1
            others = nb & ~rows[u] & ~((1 << (u + 1)) - 1)
            if others:
                w = (others & -others).bit_length() - 1
                return (u, b, w)
    return None


def unipolar_split_rows(n: int, rows: Sequence[int]) -> Optional[int]:
    """Clique side A (as a mask) such that the rest is a cluster, or None.

    Every induced P3 of the cluster side must lose a vertex to A, and A
    stays pairwise adjacent, so branch three ways on the first P3 found.
    """
    full = (1 << n) - 1
    seen = set()

    def rec(a_mask: int) -> Optional[int]:
        if a_mask in seen:
            return None
        seen.add(a_mask)
        rest = full & ~a_mask
        p3 = _find_p3(rows, rest)
        if p3 is None:
            return a_mask
        for v in sorted(p3):
            if rows[v] & a_mask == a_mask:
                res = rec(a_mask | (1 << v))
                if res is not None:
                    return res
        return None

    return rec(0)


def is_unipolar(g: Graph) -> Optional[Tuple[int, List[int]]]:
    """(A mask, cluster component masks) or None."""
    a = unipolar_split_rows(g.n, g.rows)
    if a is None:
        return None
    rest_rows = [g.rows[v] & ~a if not a >> v & 1 else 0 for v in range(g.n)]
    comps = cluster_components(g.n, rest_rows)
    assert comps is not None
    comps = [c for c in comps if c & ~a]
    return a, comps


def is_co_unipolar(g: Graph) -> Optional[Tuple[int, List[int]]]:
    """Unipolar split of the complement, or None."""
    return is_unipolar(complement(g))


def is_gsp(g: Graph) -> Optional[Tuple[str, Tuple[int, List[int]]]]:
    """Generalized split: unipolar or co-unipolar, whichever holds."""
    w = is_unipolar(g)
    if w is not None:
        return "unipolar", w
    w = is_co_unipolar(g)
    if w is not None:
        return "co-unipolar", w
    return None


def is_chi_eq_omega(g: Graph) -> Optional[Tuple[Coloring, CliqueWitness]]:
    """A coloring and a clique of equal size, or None if chi > omega."""
    if g.n == 0:
        return Coloring((), 0), CliqueWitness((), 0)
    w, clique = clique_number(g)
    sol = k_colorable_rows(g.n, g.rows, w)
    if sol is None:
        return None
    return Coloring(tuple(sol), max(sol) + 1), clique


def is_chi_le_f(g: Graph, f: FSpec) -> Optional[Tuple[Coloring, CliqueWitness, int]]:
    """(coloring, max clique, f(omega)) if chi(g) <= f(omega(g)), else None."""
    if g.n == 0:
        return Coloring((), 0), CliqueWitness((), 0), 0
    w, clique = clique_number(g)
    fw = f(w)
    if fw >= g.n:
        sol = k_colorable_rows(g.n, g.rows, g.n)
    else:
        sol = k_colorable_rows(g.n, g.rows, fw)
    if sol is None:
        return None
    return Coloring(tuple(sol), max(sol) + 1), clique, fw


def _induced_cycle_subset(rows: Sequence[int], combo: Tuple[int, ...], mask: int) -> bool:
    for v in combo:
        if (rows[v] & mask).bit_count() != 2:
            return False
    # degrees all 2: connected iff a single cycle through all of them
    start = combo[0]
    comp = 1 << start
    frontier = rows[start] & mask
    while frontier:
        comp |= frontier
        nxt = 0
        m = frontier
        while m:
            u = (m & -m).bit_length() - 1
            m &= m - 1
            nxt |= rows[u]
        frontier = nxt & mask & ~comp
    return comp == mask


def find_odd_hole(n: int, rows: Sequence[int]) -> Optional[Tuple[int, ...]]:
    """First chordless odd cycle of length >= 5, scanning vertex subsets."""
    for k in range(5, n + 1, 2):
        for combo in itertools.combinations(range(n), k):
            mask = 0
            for v in combo:
                mask |= 1 << v
            if _induced_cycle_subset(rows, combo, mask):
                return combo
    return None


def is_perfect(g: Graph) -> Tuple[bool, Optional[Tuple[str, Tuple[int, ...]]]]:
    """Perfection via the absence of odd holes and odd antiholes.

    Returns (True, None) or (False, certificate) where the certificate
    names the offending vertex subset.
    """
    if g.n > PERFECT_MAX_VERTICES:
        raise CapacityError(
            f"perfection check limited to {PERFECT_MAX_VERTICES} vertices, got {g.n}"
        )
    hole = find_odd_hole(g.n, g.rows)
    if hole is not None:
        return False, ("odd-hole", hole)
    co = complement(g)
    hole = find_odd_hole(co.n, co.rows)
    if hole is not None:
        return False, ("odd-antihole", hole)
    return True, None


# --- membership fast paths (no witness construction), used by the solver ---

def _active_rows(n: int, rows: Sequence[int]) -> Tuple[int, List[int]]:
    """Drop isolated vertices and relabel compactly.

    Sound for every class here: an isolated vertex is a singleton cluster,
    joins the clique side of the complement, and cannot lie on an induced
    cycle in the graph or its complement.
    """
    keep = [v for v in range(n) if rows[v]]
    if len(keep) == n:
        return n, list(rows)
    pos = {v: i for i, v in enumerate(keep)}
    out = []
    for v in keep:
        r = rows[v]
        acc = 0
        while r:
            w = (r & -r).bit_length() - 1
            r &= r - 1
            acc |= 1 << pos[w]
        out.append(acc)
    return len(keep), out


def _member_perfect_rows(n: int, rows: Sequence[int]) -> bool:
    n, rows = _active_rows(n, rows)
    if find_odd_hole(n, rows) is not None:
        return False
    full = (1 << n) - 1
    co = [~rows[v] & full & ~(1 << v) for v in range(n)]
    return find_odd_hole(n, co) is None


def _member_co_unipolar_rows(n: int, rows: Sequence[int]) -> bool:
    n, rows = _active_rows(n, rows)
    full = (1 << n) - 1
    co = [~rows[v] & full & ~(1 << v) for v in range(n)]
    return unipolar_split_rows(n, co) is not None


def _member_chi_eq_omega_rows(n: int, rows: Sequence[int]) -> bool:
    if n == 0:
        return True
    w = omega_of_rows(n, rows)
    return k_colorable_rows(n, rows, w) is not None


def _member_chi_le_f_rows(n: int, rows: Sequence[int], f: FSpec) -> bool:
    if n == 0:
        return True
    w = omega_of_rows(n, rows)
    fw = f(w)
    if fw >= n:
        return True
    return k_colorable_rows(n, rows, fw) is not None


def membership_fn(spec: ClassSpec) -> Callable[[int, Sequence[int]], bool]:
    """Boolean membership over raw adjacency rows, for tight loops."""
    if spec.kind == "bipartite":
        return lambda n, rows: bipartition_rows(n, rows) is not None
    if spec.kind == "chi-le":
        k = spec.k
        return lambda n, rows: n == 0 or k_colorable_rows(n, rows, k) is not None
    if spec.kind == "chi-le-f":
        f = spec.f
        return lambda n, rows: _member_chi_le_f_rows(n, rows, f)
    if spec.kind == "chi-eq-omega":
        return _member_chi_eq_omega_rows
    if spec.kind == "perfect":
        return _member_perfect_rows
    if spec.kind == "unipolar":
        return lambda n, rows: unipolar_split_rows(n, rows) is not None
    if spec.kind == "co-unipolar":
        return _member_co_unipolar_rows
    if spec.kind == "gsp":
        return lambda n, rows: (
            unipolar_split_rows(n, rows) is not None or _member_co_unipolar_rows(n, rows)
        )
    raise ValueError(f"unknown class kind {spec.kind!r}")


@lru_cache(maxsize=None)
def _membership_cached(spec: ClassSpec) -> Callable[[int, Sequence[int]], bool]:
    return membership_fn(spec)


def in_class(g: Graph, spec: ClassSpec) -> Optional[Dict]:
    """Membership witness as a JSON-ready dict, or None if not a member."""
    if spec.kind == "bipartite":
        sides = is_bipartite(g)
        if sides is None:
            return None
        return {"class": str(spec), "sides": [bits_of(sides[0]), bits_of(sides[1])]}
    if spec.kind == "chi-le":
        if g.n == 0:
            return {"class": str(spec), "coloring": []}
        sol = k_colorable_rows(g.n, g.rows, spec.k)
        if sol is None:
            return None
        return {"class": str(spec), "coloring": sol}
    if spec.kind == "chi-le-f":
        res = is_chi_le_f(g, spec.f)
        if res is None:
            return None
        coloring, clique, fw = res
        return {
            "class": str(spec),
            "coloring": list(coloring.colors),
            "clique": list(clique.vertices),
            "f_omega": fw,
        }
    if spec.kind == "chi-eq-omega":
        res = is_chi_eq_omega(g)
        if res is None:
            return None
        coloring, clique = res
        return {
            "class": str(spec),
            "coloring": list(coloring.colors),
            "clique": list(clique.vertices),
        }
    if spec.kind == "perfect":
        ok, _cert = is_perfect(g)
        if not ok:
            return None
        return {"class": str(spec)}
    if spec.kind == "unipolar":
        res = is_unipolar(g)
        if res is None:
            return None
        a, comps = res
        return {
            "class": str(spec),
            "clique_side": bits_of(a),
            "clusters": [bits_of(c) for c in comps],
        }
    if spec.kind == "co-unipolar":
        res = is_co_unipolar(g)
        if res is None:
            return None
        a, comps = res
        return {
            "class": str(spec),
            "clique_side": bits_of(a),
            "clusters": [bits_of(c) for c in comps],
        }
    if spec.kind == "gsp":
        res = is_gsp(g)
        if res is None:
            return None
        branch, (a, comps) = res
        return {
            "class": str(spec),
            "branch": branch,
            "clique_side": bits_of(a),
            "clusters": [bits_of(c) for c in comps],
        }
    raise ValueError(f"unknown class kind {spec.kind!r}")


def _check_split_witness(g: Graph, witness: Dict) -> bool:
    a = witness.get("clique_side", [])
    clusters = witness.get("clusters", [])
    flat = list(a) + [v for c in clusters for v in c]
    if len(set(flat)) != len(flat) or set(flat) != set(range(g.n)):
        return False
    if not all(g.has_edge(u, v) for i, u in enumerate(a) for v in a[i + 1:]):
        return False
    for c in clusters:
        if not all(g.has_edge(u, v) for i, u in enumerate(c) for v in c[i + 1:]):
            return False
    # no edges between different clusters
    for i, c1 in enumerate(clusters):
        for c2 in clusters[i + 1:]:
            if any(g.has_edge(u, v) for u in c1 for v in c2):
                return False
    return True


def check_witness(g: Graph, spec: ClassSpec, witness: Dict) -> bool:
    """Independent witness validation; everything but perfect is polynomial."""
    if witness.get("class") != str(spec):
        return False
    if spec.kind == "bipartite":
        sides = witness.get("sides")
        if sides is None or len(sides) != 2:
            return False
        if sorted(sides[0] + sides[1]) != list(range(g.n)):
            return False
        s0, s1 = set(sides[0]), set(sides[1])
        return not any(
            (u in s0 and v in s0) or (u in s1 and v in s1) for u, v in g.edges()
        )
    if spec.kind == "chi-le":
        colors = witness.get("coloring")
        if colors is None or len(colors) != g.n:
            return False
        if g.n and (min(colors) < 0 or max(colors) >= spec.k):
            return False
        return not any(colors[u] == colors[v] for u, v in g.edges())
    if spec.kind in ("chi-le-f", "chi-eq-omega"):
        colors = witness.get("coloring")
        clique = witness.get("clique")
        if colors is None or clique is None or len(colors) != g.n:
            return False
        if g.n == 0:
            return clique == []
        if any(colors[u] == colors[v] for u, v in g.edges()):
            return False
        if not check_clique(g, CliqueWitness(tuple(clique), len(clique))):
            return False
        used = len(set(colors))
        if spec.kind == "chi-eq-omega":
            return used == len(clique)
        return used <= spec.f(len(clique)) if clique else False
    if spec.kind == "perfect":
        ok, _ = is_perfect(g)
        return ok
    if spec.kind == "unipolar":
        return _check_split_witness(g, witness)
    if spec.kind == "co-unipolar":
        return _check_split_witness(complement(g), witness)
    if spec.kind == "gsp":
        branch = witness.get("branch")
        if branch == "unipolar":
            return _check_split_witness(g, witness)
        if branch == "co-unipolar":
            return _check_split_witness(complement(g), witness)
        return False
    raise ValueError(f"unknown class kind {spec.kind!r}")
