"""Bitmask-backed simple graphs.

Vertices are the integers 0..n-1 and every vertex set is a plain int used
as a bitmask, so neighbourhood algebra is branch-free word arithmetic.
Capacity is one machine word (64 vertices), far beyond what the exhaustive
verification suites ever touch.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

MAX_VERTICES = 64

# A subset of 0..n-1 packed into an int.
VertexSet = int


class CapacityError(ValueError):
    """Raised when a graph exceeds the 64-vertex bitmask backend."""


class Graph6Error(ValueError):
    """Raised for malformed graph6 input or unencodable graphs."""


def bits(x: VertexSet) -> Iterator[int]:
    """Iterate the vertex ids in a mask, ascending."""
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def vertex_list(x: VertexSet) -> list[int]:
    return list(bits(x))


def vertex_mask(vertices: Iterable[int]) -> VertexSet:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph: `adj[v]` is the open neighbourhood of v."""

    n: int
    adj: tuple[VertexSet, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_VERTICES:
            raise CapacityError(f"vertex count {self.n} outside 0..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise ValueError(f"adjacency has {len(self.adj)} rows for {self.n} vertices")
        full = (1 << self.n) - 1
        cols = [0] * self.n
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"row {v} mentions vertices outside 0..{self.n - 1}")
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in bits(row):
                cols[u] |= 1 << v
        if tuple(cols) != self.adj:
            raise ValueError("adjacency is not symmetric")

    @property
    def vertices(self) -> VertexSet:
        return (1 << self.n) - 1

    @property
    def m(self) -> int:
        """Edge count."""
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def closed(self, v: int) -> VertexSet:
        return self.adj[v] | (1 << v)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        for v in range(self.n):
            for u in bits(self.adj[v] >> (v + 1) << (v + 1)):
                yield (v, u)

    # -- constructors -------------------------------------------------

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls(n, tuple(full ^ (1 << v) for v in range(n)))

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        if n < 3:
            raise ValueError("a cycle needs at least 3 vertices")
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def star(cls, leaves: int) -> "Graph":
        """K_{1,leaves} with the centre at vertex 0."""
        return cls.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


class Deleted(NamedTuple):
    graph: Graph
    old_to_new: dict[int, int]


def closed_neighborhood(g: Graph, x: VertexSet) -> VertexSet:
    """x together with every neighbour of a vertex of x."""
    if x & ~g.vertices:
        raise ValueError("vertex set outside the graph")
    res = x
    for v in bits(x):
        res |= g.adj[v]
    return res


def delete(g: Graph, x: VertexSet) -> Deleted:
    """Induced subgraph on V(g) minus x, relabeled onto a dense 0..n'-1 range."""
    if x & ~g.vertices:
        raise ValueError("vertex set outside the graph")
    keep = g.vertices & ~x
    old_to_new = {v: i for i, v in enumerate(bits(keep))}
    rows = []
    for v in old_to_new:
        row = 0
        for u in bits(g.adj[v] & keep):
            row |= 1 << old_to_new[u]
        rows.append(row)
    return Deleted(Graph(len(rows), tuple(rows)), old_to_new)


def components(g: Graph) -> list[VertexSet]:
    """Maximal connected pieces, ordered by their minimum vertex id."""
    out = []
    remaining = g.vertices
    while remaining:
        comp = remaining & -remaining
        frontier = comp
        while frontier:
            grown = comp
            for v in bits(frontier):
                grown |= g.adj[v]
            grown &= remaining
            frontier = grown & ~comp
            comp = grown
        out.append(comp)
        remaining &= ~comp
    return out


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(components(g)) == 1


def relabel(g: Graph, perm: tuple[int, ...]) -> Graph:
    """Graph with vertex perm[i] of g renamed to i."""
    pos = [0] * g.n
    for i, v in enumerate(perm):
        pos[v] = i
    rows = []
    for i in range(g.n):
        row = 0
        for u in bits(g.adj[perm[i]]):
            row |= 1 << pos[u]
        rows.append(row)
    return Graph(g.n, tuple(rows))


def disjoint_union(a: Graph, b: Graph) -> Graph:
    rows = list(a.adj) + [row << a.n for row in b.adj]
    return Graph(a.n + b.n, tuple(rows))


def with_edge(g: Graph, u: int, v: int) -> Graph:
    if u == v:
        raise ValueError("self-loop")
    rows = list(g.adj)
    rows[u] |= 1 << v
    rows[v] |= 1 << u
    return Graph(g.n, tuple(rows))


# -- graph6 ----------------------------------------------------------------
#
# Short-form graph6 only: one printable line per graph, byte values 63..126.
# The first byte encodes n (n <= 62); the upper triangle of the adjacency
# matrix follows in column order, packed big-endian into 6-bit groups.

def parse_graph6(text: str | bytes) -> Graph:
    if isinstance(text, bytes):
        text = text.decode("latin-1")
    line = text.rstrip("\r\n")
    if not line:
        raise Graph6Error("empty line")
    head = ord(line[0])
    if head == 126:
        raise Graph6Error("long-form length byte (unsupported; short form only)")
    if not 63 <= head <= 125:
        raise Graph6Error(f"malformed length byte {head!r}")
    n = head - 63
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = line[1:]
    if len(body) != need:
        raise Graph6Error(f"expected {need} adjacency bytes for n={n}, got {len(body)}")
    values = []
    for ch in body:
        c = ord(ch)
        if not 63 <= c <= 126:
            raise Graph6Error(f"character {ch!r} out of range 63..126")
        values.append(c - 63)
    rows = [0] * n
    idx = 0
    for j in range(1, n):
        for i in range(j):
            bit = values[idx // 6] >> (5 - idx % 6) & 1
            if bit:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            idx += 1
    # every padding bit after the triangle must be zero
    for tail in range(nbits, need * 6):
        if values[tail // 6] >> (5 - tail % 6) & 1:
            raise Graph6Error("nonzero trailing bits")
    return Graph(n, tuple(rows))


def emit_graph6(g: Graph) -> str:
    if g.n > 62:
        raise Graph6Error("short-form graph6 holds at most 62 vertices")
    out = [chr(g.n + 63)]
    acc = 0
    filled = 0
    for j in range(1, g.n):
        for i in range(j):
            acc = acc << 1 | (g.adj[i] >> j & 1)
            filled += 1
            if filled == 6:
                out.append(chr(acc + 63))
                acc = 0
                filled = 0
    if filled:
        out.append(chr((acc << (6 - filled)) + 63))
    return "".join(out)
