"""Exact isolation numbers.

solve(g, fam) computes the smallest D such that deleting N[D] leaves no
copy of any family member, by iterative deepening: at each node one
still-uncovered copy is located and the branch set is the closed
neighborhood of its vertex set, since any valid extension must meet it.
Candidates already tried at a node are forbidden in the sibling subtrees
that follow, which removes permutation duplicates without losing any set.

solve_oracle is the deliberately naive cross-check: try every subset in
size-then-lexicographic order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .graphs import Graph, VertexSet, bits, closed_neighborhood, delete, vertex_list
from .patterns import Pattern, find_copy, make_pattern


@dataclass(frozen=True)
class Family:
    """A finite pattern list, or the built-in all-cycles predicate."""

    patterns: tuple[Pattern, ...] = ()
    all_cycles: bool = False

    def __post_init__(self) -> None:
        if self.all_cycles == bool(self.patterns):
            raise ValueError("family is either a nonempty pattern list or all cycles")

    @classmethod
    def of(cls, *patterns: Pattern) -> "Family":
        return cls(patterns=patterns)

    @classmethod
    def cycles(cls) -> "Family":
        return cls(all_cycles=True)


@dataclass(frozen=True)
class SolveResult:
    iota: int
    witness: VertexSet
    stats: dict[str, int] = field(compare=False)


def _induced_forest(g: Graph, within: VertexSet) -> bool:
    """Acyclicity of the subgraph induced by within: edges = vertices − parts."""
    edges2 = 0
    for v in bits(within):
        edges2 += (g.adj[v] & within).bit_count()
    parts = 0
    left = within
    while left:
        seed = left & -left
        comp = seed
        while True:
            grown = comp
            for v in bits(comp):
                grown |= g.adj[v] & within
            if grown == comp:
                break
            comp = grown
        parts += 1
        left &= ~comp
    return edges2 // 2 == within.bit_count() - parts


def _shortest_cycle(g: Graph, within: VertexSet) -> VertexSet | None:
    """Vertex set of a shortest cycle in the subgraph induced by within."""
    best: VertexSet | None = None
    best_len = 1 << 30
    for root in bits(within):
        dist = {root: 0}
        parent = {root: -1}
        frontier = [root]
        while frontier:
            nxt: list[int] = []
            for x in frontier:
                if dist[x] * 2 >= best_len:
                    break
                for y in bits(g.adj[x] & within):
                    if y not in dist:
                        dist[y] = dist[x] + 1
                        parent[y] = x
                        nxt.append(y)
                    elif parent[x] != y and dist[y] >= dist[x]:
                        # cross edge closes a cycle through the two tree paths
                        px = [x]
                        py = [y]
                        while px[-1] != py[-1]:
                            if dist[px[-1]] >= dist[py[-1]]:
                                px.append(parent[px[-1]])
                            else:
                                py.append(parent[py[-1]])
                        cycle = 0
                        for v in px + py[:-1]:
                            cycle |= 1 << v
                        length = cycle.bit_count()
                        if length < best_len:
                            best_len = length
                            best = cycle
            frontier = nxt
    return best


def is_family_free(g: Graph, fam: Family) -> bool:
    if fam.all_cycles:
        return _induced_forest(g, g.vertices)
    return all(find_copy(g, p) is None for p in fam.patterns)


def solve(g: Graph, fam: Family, forced: VertexSet = 0) -> SolveResult:
    """Exact ι(g, fam) with a minimum witness and search statistics.

    With forced nonzero, the minimum is taken over isolating sets that
    contain every forced vertex; iota then counts the forced vertices too.
    """
    stats = {"nodes_expanded": 0, "copies_found": 0}
    full = g.vertices
    if forced & ~full:
        raise ValueError("forced vertices outside the graph")

    def branch_copy(within: VertexSet, forbidden: VertexSet) -> tuple[VertexSet, VertexSet] | None:
        """One uncovered copy plus its allowed candidate set, smallest candidates first."""
        if fam.all_cycles:
            cyc = _shortest_cycle(g, within)
            if cyc is None:
                return None
            stats["copies_found"] += 1
            return cyc, closed_neighborhood(g, cyc) & ~forbidden
        best: tuple[int, VertexSet, VertexSet] | None = None
        for p in fam.patterns:
            hit = find_copy(g, p, within)
            if hit is None:
                continue
            stats["copies_found"] += 1
            cand = closed_neighborhood(g, hit) & ~forbidden
            size = cand.bit_count()
            if best is None or size < best[0]:
                best = (size, hit, cand)
                if size == 0:
                    break
        if best is None:
            return None
        return best[1], best[2]

    def deepen(chosen: VertexSet, covered: VertexSet, forbidden: VertexSet, budget: int) -> VertexSet | None:
        stats["nodes_expanded"] += 1
        picked = branch_copy(full & ~covered, forbidden)
        if picked is None:
            return chosen
        if budget == 0:
            return None
        _, cands = picked
        tried = 0
        for c in bits(cands):
            got = deepen(
                chosen | 1 << c,
                covered | closed_neighborhood(g, 1 << c),
                forbidden | tried,
                budget - 1,
            )
            if got is not None:
                return got
            tried |= 1 << c
        return None

    base = closed_neighborhood(g, forced)
    for depth in range(g.n + 1):
        witness = deepen(forced, base, 0, depth)
        if witness is not None:
            return SolveResult(iota=witness.bit_count(), witness=witness, stats=stats)
    raise AssertionError("unreachable: D = V(g) always isolates")


def solve_oracle(g: Graph, fam: Family) -> SolveResult:
    """Same contract as solve, by exhaustive subset scan in size-then-lex order."""
    stats = {"nodes_expanded": 0, "copies_found": 0}
    vs = vertex_list(g.vertices)
    for size in range(g.n + 1):
        for combo in itertools.combinations(vs, size):
            stats["nodes_expanded"] += 1
            d = 0
            for v in combo:
                d |= 1 << v
            residual = delete(g, closed_neighborhood(g, d)).graph
            if is_family_free(residual, fam):
                return SolveResult(iota=size, witness=d, stats=stats)
            stats["copies_found"] += 1
    raise AssertionError("unreachable: D = V(g) always isolates")


_K1 = make_pattern(Graph.empty(1))


def domination_number(g: Graph) -> int:
    return solve(g, Family.of(_K1)).iota
