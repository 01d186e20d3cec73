"""Exact canonical forms for small graphs.

Equitable-partition refinement followed by full backtracking over the
remaining cell choices; the canonical labeling is the one minimizing the
packed upper-triangle adjacency string.  No hashing shortcuts, so equal
forms decide isomorphism exactly.
"""

from __future__ import annotations

from .graphs import Graph, VertexSet, bits, emit_graph6, relabel


def _refine(rows: tuple[VertexSet, ...], cells: list[VertexSet]) -> list[VertexSet]:
    """Split cells by neighbour counts into every cell until stable.

    Cell order is inherited (subcells sorted by their count signature), which
    keeps the procedure equivariant under relabeling.
    """
    while True:
        changed = False
        new_cells: list[VertexSet] = []
        for cell in cells:
            if cell & (cell - 1) == 0:  # singleton
                new_cells.append(cell)
                continue
            groups: dict[tuple[int, ...], VertexSet] = {}
            for v in bits(cell):
                row = rows[v]
                sig = tuple((row & c).bit_count() for c in cells)
                groups[sig] = groups.get(sig, 0) | (1 << v)
            if len(groups) > 1:
                changed = True
                for sig in sorted(groups):
                    new_cells.append(groups[sig])
            else:
                new_cells.append(cell)
        cells = new_cells
        if not changed:
            return cells


def _canonical_order(
    n: int, rows: tuple[VertexSet, ...], initial: list[VertexSet] | None = None
) -> tuple[int, ...]:
    """Vertex order whose induced relabeling minimizes the adjacency key."""
    if n == 0:
        return ()
    cells = _refine(rows, initial if initial is not None else [(1 << n) - 1])
    best_key: int | None = None
    best_perm: tuple[int, ...] = ()

    def leaf(cells: list[VertexSet]) -> None:
        nonlocal best_key, best_perm
        perm = tuple(c.bit_length() - 1 for c in cells)
        pos = [0] * n
        for i, v in enumerate(perm):
            pos[v] = i
        key = 0
        for j in range(1, n):
            row = rows[perm[j]]
            for i in range(j):
                key = key << 1 | (row >> perm[i] & 1)
        if best_key is None or key < best_key:
            best_key = key
            best_perm = perm

    def descend(cells: list[VertexSet]) -> None:
        for t, cell in enumerate(cells):
            if cell & (cell - 1):
                for v in bits(cell):
                    split = cells[:t] + [1 << v, cell & ~(1 << v)] + cells[t + 1 :]
                    descend(_refine(rows, split))
                return
        leaf(cells)

    descend(cells)
    return best_perm


def canonical_graph(g: Graph) -> Graph:
    return relabel(g, _canonical_order(g.n, g.adj))


def canonical_form(g: Graph) -> str:
    """Relabeling-invariant representative, encoded as a graph6 line."""
    return emit_graph6(canonical_graph(g))


def is_isomorphic(a: Graph, b: Graph) -> bool:
    if a.n != b.n or a.m != b.m:
        return False
    if sorted(row.bit_count() for row in a.adj) != sorted(row.bit_count() for row in b.adj):
        return False
    return canonical_form(a) == canonical_form(b)


def vertex_orbits(g: Graph) -> list[VertexSet]:
    """Orbits of the automorphism group, ordered by minimum vertex id.

    Two vertices are equivalent exactly when the canonical forms of the
    graph with one of them individualized coincide.
    """
    if g.n == 0:
        return []
    full = g.vertices
    marked: dict[tuple[int, ...], VertexSet] = {}
    order: list[tuple[int, ...]] = []
    for v in range(g.n):
        perm = _canonical_order(g.n, g.adj, [1 << v, full & ~(1 << v)])
        key_rows = relabel(g, perm).adj
        if key_rows not in marked:
            marked[key_rows] = 0
            order.append(key_rows)
        marked[key_rows] |= 1 << v
    return [marked[k] for k in order]
