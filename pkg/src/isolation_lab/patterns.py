"""Patterns and exact subgraph-copy detection.

A pattern wraps a small graph F together with precomputed metadata: edge
and vertex counts, the set of dominating vertices, and the domination
number.  Containment is non-induced subgraph isomorphism; a "copy" is
identified with its vertex set.

When F has a dominating vertex, every copy lies inside the closed
neighborhood of the image of that vertex, so detection anchors on host
vertices of sufficient degree instead of scanning all tuples.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass

from .graphs import Graph, VertexSet, bits, parse_graph6, vertex_list


@dataclass(frozen=True)
class Pattern:
    """A target graph plus detection metadata.

    k and ell are the edge and vertex counts of f; dominating holds every
    vertex adjacent to all others; gamma is the domination number of f.
    """

    f: Graph
    k: int
    ell: int
    dominating: VertexSet
    gamma: int

    def __post_init__(self) -> None:
        if self.k != self.f.m or self.ell != self.f.n:
            raise ValueError("pattern counts disagree with the underlying graph")
        expected = 0
        for v in range(self.f.n):
            if self.f.adj[v] | 1 << v == self.f.vertices:
                expected |= 1 << v
        if self.dominating != expected:
            raise ValueError("dominating set disagrees with the underlying graph")
        if (self.gamma == 1) != (self.dominating != 0):
            raise ValueError("gamma inconsistent with dominating vertices")


def _domination_number(f: Graph) -> int:
    if f.n == 0:
        return 0
    us = range(f.n)
    for size in range(1, f.n + 1):
        for combo in itertools.combinations(us, size):
            covered = 0
            for v in combo:
                covered |= f.adj[v] | 1 << v
            if covered == f.vertices:
                return size
    raise AssertionError("unreachable: V(f) dominates f")


def make_pattern(f: Graph) -> Pattern:
    if f.n < 1:
        raise ValueError("pattern needs at least one vertex")
    dominating = 0
    for v in range(f.n):
        if f.adj[v] | 1 << v == f.vertices:
            dominating |= 1 << v
    return Pattern(f=f, k=f.m, ell=f.n, dominating=dominating, gamma=_domination_number(f))


def _search_order(p: Pattern) -> list[int]:
    """Pattern vertices ordered for backtracking.

    Starts from a dominating vertex when one exists, otherwise the maximum
    degree; prefers vertices adjacent to the chosen prefix so candidate
    sets stay constrained.
    """
    f = p.f
    if p.dominating:
        first = (p.dominating & -p.dominating).bit_length() - 1
    else:
        first = max(range(f.n), key=lambda v: (f.degree(v), -v))
    order = [first]
    placed = 1 << first
    while len(order) < f.n:
        frontier = [v for v in range(f.n) if not placed >> v & 1]
        attached = [v for v in frontier if f.adj[v] & placed]
        pool = attached or frontier
        nxt = max(pool, key=lambda v: (f.degree(v), -v))
        order.append(nxt)
        placed |= 1 << nxt
    return order


def _embed(g: Graph, p: Pattern, within: VertexSet, first_only: bool) -> list[VertexSet]:
    """Vertex sets of copies of p.f inside the subgraph of g induced by within."""
    if within.bit_count() < p.ell:
        return []
    rows = g.adj
    order = _search_order(p)
    pat_rows = p.f.adj
    back = [
        [j for j in range(i) if pat_rows[order[i]] >> order[j] & 1]
        for i in range(len(order))
    ]
    images = [0] * p.ell
    found: set[VertexSet] = set()

    def extend(i: int, used: VertexSet) -> bool:
        if i == p.ell:
            found.add(used)
            return first_only
        cand = within & ~used
        for j in back[i]:
            cand &= rows[images[j]]
        for v in bits(cand):
            images[i] = v
            if extend(i + 1, used | 1 << v):
                return True
        return False

    if p.dominating:
        need = p.ell - 1
        for u in bits(within):
            if (rows[u] & within).bit_count() < need:
                continue
            images[0] = u
            if extend(1, 1 << u):
                break
    else:
        extend(0, 0)
    return sorted(found, key=vertex_list)


def find_copy(g: Graph, p: Pattern, within: VertexSet | None = None) -> VertexSet | None:
    """Vertex set of one copy of p.f in g restricted to within, or None."""
    hits = _embed(g, p, g.vertices if within is None else within, first_only=True)
    return hits[0] if hits else None


def contains_copy(g: Graph, p: Pattern) -> VertexSet | None:
    return find_copy(g, p)


def all_copies(g: Graph, p: Pattern, within: VertexSet | None = None) -> list[VertexSet]:
    """Every copy vertex set, ordered lexicographically as sorted tuples."""
    return _embed(g, p, g.vertices if within is None else within, first_only=False)


def enumerate_copies(g: Graph, p: Pattern, limit: int) -> list[VertexSet]:
    if limit < 1:
        raise ValueError("limit must be at least 1")
    return all_copies(g, p)[:limit]


def _paw() -> Graph:
    return Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (0, 3)])


_FIXED_NAMES = {
    "k1": lambda: Graph.empty(1),
    "k2": lambda: Graph.complete(2),
    "p3": lambda: Graph.path(3),
    "k3": lambda: Graph.complete(3),
    "paw": _paw,
}

_STAR_NAME = re.compile(r"k1_([1-9]\d*)")


def pattern_from_name(name: str) -> Pattern:
    """Pattern for a symbolic name: k1, k2, p3, k3, paw, or k1_<j> stars."""
    key = name.strip().lower()
    if key in _FIXED_NAMES:
        return make_pattern(_FIXED_NAMES[key]())
    star = _STAR_NAME.fullmatch(key)
    if star:
        return make_pattern(Graph.star(int(star.group(1))))
    raise ValueError(f"unknown pattern name: {name!r}")


def resolve_pattern(text: str) -> Pattern:
    """Pattern from a symbolic name, falling back to a graph6 line."""
    try:
        return pattern_from_name(text)
    except ValueError:
        pass
    try:
        return make_pattern(parse_graph6(text.strip()))
    except ValueError as exc:
        raise ValueError(
            f"not a pattern name or graph6 line: {text!r} ({exc})"
        ) from None
