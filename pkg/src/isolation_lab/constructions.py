"""Special-graph assembly, extremal-copy generation, and recognition.

A special graph for a pattern F with k edges is built from q pendant
F-copies, each tied by a single edge to its own connection vertex, a tree
on the connection vertices, and a connected remainder sharing exactly the
last connection vertex; the edge total m satisfies m+1 = q(k+2)+r where r
counts the remainder edges (for q = 0 the graph is just the remainder,
which then has r-1 = m edges).  Pure means r = 0.

Recognition of the two equality classes (pure special, F plus one
complement edge) is by generate-and-match against canonical forms.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Iterator

from .canonical import canonical_form, is_isomorphic, vertex_orbits
from .enumeration import ENUM_CAP, EnumSpec, enumerate_graphs
from .graphs import Graph, VertexSet, is_connected, relabel, vertex_list, with_edge
from .patterns import Pattern


class ExtremalClass(str, Enum):
    PURE_SPECIAL = "PureSpecial"
    F_PLUS_E = "FPlusE"
    NON_EXTREMAL = "NonExtremal"
    SPECIAL_PAIR = "SpecialPairException"


@dataclass(frozen=True)
class Verdict:
    m: int
    iota: int
    bound_num: int
    bound_den: int
    attains: bool
    cls: ExtremalClass


@dataclass(frozen=True)
class SpecialSpec:
    """Build recipe: constituent count q, remainder edge count r, tree shape,
    remainder graph (vertex 0 is the glue vertex), per-constituent attach
    vertex inside the pattern."""

    pattern: Pattern
    q: int
    r: int
    quotient_tree: tuple[tuple[int, int], ...] = ()
    remainder: Graph = field(default_factory=lambda: Graph.empty(1))
    attach: tuple[int, ...] = ()

    @property
    def m(self) -> int:
        return self.q * (self.pattern.k + 2) + self.r - 1

    @property
    def pure(self) -> bool:
        return self.r == 0


@dataclass(frozen=True)
class SpecialLayout:
    """Vertex roles in a built special graph."""

    connections: tuple[int, ...]
    copies: tuple[VertexSet, ...]
    attach_vertices: tuple[int, ...]
    remainder_vertices: VertexSet

    @property
    def quotient(self) -> VertexSet:
        out = 0
        for v in self.connections:
            out |= 1 << v
        return out

    @property
    def constituents(self) -> tuple[VertexSet, ...]:
        return tuple(c | 1 << v for v, c in zip(self.connections, self.copies))

    def as_dict(self) -> dict:
        return {
            "connections": list(self.connections),
            "copies": [vertex_list(c) for c in self.copies],
            "attach_vertices": list(self.attach_vertices),
            "remainder_vertices": vertex_list(self.remainder_vertices),
            "quotient": vertex_list(self.quotient),
        }


@dataclass(frozen=True)
class SpecialBuild:
    graph: Graph
    layout: SpecialLayout
    spec: SpecialSpec


def _validate(spec: SpecialSpec) -> None:
    p = spec.pattern
    if spec.q < 0 or not 0 <= spec.r <= p.k + 1:
        raise ValueError("need q >= 0 and 0 <= r <= k+1")
    if not is_connected(spec.remainder):
        raise ValueError("remainder must be connected")
    if spec.q == 0:
        if spec.quotient_tree or spec.attach:
            raise ValueError("q = 0 admits no tree edges or attach choices")
        if spec.remainder.m != spec.r - 1:
            raise ValueError("with q = 0 the remainder is the whole m-edge graph, m = r-1")
        return
    if len(spec.attach) != spec.q:
        raise ValueError("need one attach vertex per constituent")
    if any(not 0 <= w < p.ell for w in spec.attach):
        raise ValueError("attach vertex outside the pattern")
    if spec.remainder.m != spec.r:
        raise ValueError("remainder edge count must equal r")
    tree = Graph.from_edges(spec.q, list(spec.quotient_tree))
    if tree.m != spec.q - 1 or not is_connected(tree):
        raise ValueError("quotient edges must form a tree on the q connections")


def build_special(spec: SpecialSpec) -> SpecialBuild:
    """Assemble the graph for spec along with its vertex-role layout."""
    _validate(spec)
    p = spec.pattern
    if spec.q == 0:
        layout = SpecialLayout(
            connections=(),
            copies=(),
            attach_vertices=(),
            remainder_vertices=spec.remainder.vertices,
        )
        return SpecialBuild(graph=spec.remainder, layout=layout, spec=spec)

    q, ell = spec.q, p.ell
    base = [q + i * ell for i in range(q)]
    rem_map = {0: q - 1}
    for j in range(1, spec.remainder.n):
        rem_map[j] = q + q * ell + (j - 1)

    edges: list[tuple[int, int]] = list(spec.quotient_tree)
    for i in range(q):
        edges.append((i, base[i] + spec.attach[i]))
        edges.extend((base[i] + a, base[i] + b) for a, b in p.f.edges())
    edges.extend((rem_map[a], rem_map[b]) for a, b in spec.remainder.edges())

    n = q + q * ell + spec.remainder.n - 1
    g = Graph.from_edges(n, edges)
    assert g.m == spec.m and is_connected(g)

    copy_masks = tuple(((1 << ell) - 1) << base[i] for i in range(q))
    rem_mask = 1 << (q - 1)
    for j in range(1, spec.remainder.n):
        rem_mask |= 1 << rem_map[j]
    layout = SpecialLayout(
        connections=tuple(range(q)),
        copies=copy_masks,
        attach_vertices=tuple(base[i] + spec.attach[i] for i in range(q)),
        remainder_vertices=rem_mask,
    )
    return SpecialBuild(graph=g, layout=layout, spec=spec)


def _prufer_edges(seq: tuple[int, ...], q: int) -> tuple[tuple[int, int], ...]:
    degree = [1] * q
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(q) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return tuple(edges)


def _labeled_trees(q: int) -> Iterator[tuple[tuple[int, int], ...]]:
    if q == 1:
        yield ()
        return
    for seq in itertools.product(range(q), repeat=q - 2):
        yield _prufer_edges(seq, q)


def _orbit_reps(g: Graph) -> list[int]:
    return [(o & -o).bit_length() - 1 for o in vertex_orbits(g)]


def _rooted_remainders(r: int) -> Iterator[Graph]:
    """Connected r-edge graphs, glue vertex relabeled to 0, one per rooted class."""
    if r == 0:
        yield Graph.empty(1)
        return
    if r + 1 > ENUM_CAP:
        raise ValueError(f"remainder with {r} edges exceeds the enumeration cap")
    spec = EnumSpec(n_max=r + 1, m_min=r, m_max=r, connected_only=True)
    for h in enumerate_graphs(spec):
        for root in _orbit_reps(h):
            perm = (root, *(v for v in range(h.n) if v != root))
            yield relabel(h, perm)


def iter_special_builds(p: Pattern, m: int) -> Iterator[SpecialBuild]:
    """All (m,F)-special graphs up to isomorphism, one build per class.

    q and r are forced by the division algorithm.  Trees come from Prüfer
    sequences, attach choices from pattern-automorphism orbit
    representatives, remainders from rooted enumeration; duplicates are
    removed by canonical form.
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    q, r = divmod(m + 1, p.k + 2)
    seen: set[str] = set()
    if q == 0:
        if m + 1 > ENUM_CAP:
            raise ValueError(f"degenerate q=0 arm with m={m} exceeds the enumeration cap")
        spec = EnumSpec(n_max=m + 1, m_min=m, m_max=m, connected_only=True)
        for h in enumerate_graphs(spec):
            yield build_special(SpecialSpec(pattern=p, q=0, r=r, remainder=h))
        return
    reps = _orbit_reps(p.f)
    for remainder in _rooted_remainders(r):
        for tree in _labeled_trees(q):
            for attach in itertools.product(reps, repeat=q):
                build = build_special(
                    SpecialSpec(
                        pattern=p,
                        q=q,
                        r=r,
                        quotient_tree=tree,
                        remainder=remainder,
                        attach=attach,
                    )
                )
                form = canonical_form(build.graph)
                if form not in seen:
                    seen.add(form)
                    yield build


def enumerate_pure_special(p: Pattern, m: int) -> Iterator[Graph]:
    """All pure (m,F)-special graphs up to isomorphism."""
    if (m + 1) % (p.k + 2) != 0:
        raise ValueError(f"m+1 = {m + 1} is not divisible by k+2 = {p.k + 2}")
    for build in iter_special_builds(p, m):
        yield build.graph


def enumerate_f_plus_e(p: Pattern) -> list[Graph]:
    """F plus one complement edge, up to isomorphism; empty for complete F."""
    out: dict[str, Graph] = {}
    for u in range(p.ell):
        for v in range(u + 1, p.ell):
            if not p.f.has_edge(u, v):
                g = with_edge(p.f, u, v)
                out.setdefault(canonical_form(g), g)
    return [out[form] for form in sorted(out)]


def is_special_pair(g: Graph, p: Pattern) -> bool:
    """The two exceptions to the bound: g is F itself, or F is the 3-path
    and g the 6-cycle."""
    if is_isomorphic(g, p.f):
        return True
    return is_isomorphic(p.f, Graph.path(3)) and is_isomorphic(g, Graph.cycle(6))


@lru_cache(maxsize=None)
def _pure_forms(p: Pattern, m: int) -> frozenset[str]:
    if m < 0 or (m + 1) % (p.k + 2) != 0:
        return frozenset()
    return frozenset(canonical_form(g) for g in enumerate_pure_special(p, m))


@lru_cache(maxsize=None)
def _f_plus_e_forms(p: Pattern) -> frozenset[str]:
    return frozenset(canonical_form(g) for g in enumerate_f_plus_e(p))


def recognize_extremal(g: Graph, p: Pattern) -> ExtremalClass:
    """Membership of g in the equality classes for pattern p (k >= 3)."""
    if p.gamma != 1 or p.k < 3:
        raise ValueError("recognition needs a pattern with a dominating vertex and k >= 3")
    if not is_connected(g):
        raise ValueError("recognition is defined for connected graphs")
    form = canonical_form(g)
    if form in _pure_forms(p, g.m):
        return ExtremalClass.PURE_SPECIAL
    if form in _f_plus_e_forms(p):
        return ExtremalClass.F_PLUS_E
    if is_isomorphic(g, p.f):
        return ExtremalClass.SPECIAL_PAIR
    return ExtremalClass.NON_EXTREMAL
