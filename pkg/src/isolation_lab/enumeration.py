"""Universe supply: exhaustive small-graph enumeration and graph6 ingestion.

Enumeration is by augmentation: every n-vertex representative is grown
from an (n-1)-vertex one by attaching a new vertex with each possible
neighborhood, keeping one graph per canonical form.  In connected mode
only nonempty neighborhoods are tried, which stays complete because every
connected graph has a vertex whose removal leaves it connected.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .canonical import canonical_graph
from .graphs import Graph, Graph6Error, emit_graph6, is_connected, parse_graph6

ENUM_CAP = 10


@dataclass(frozen=True)
class EnumSpec:
    """Universe description: vertex cap, edge window, connectivity filter."""

    n_max: int
    m_min: int = 0
    m_max: int | None = None
    connected_only: bool = False

    def __post_init__(self) -> None:
        if not 1 <= self.n_max <= ENUM_CAP:
            raise ValueError(f"n_max must be in 1..{ENUM_CAP}")
        ceiling = self.n_max * (self.n_max - 1) // 2
        top = ceiling if self.m_max is None else self.m_max
        if not 0 <= self.m_min <= top <= ceiling:
            raise ValueError("edge window must satisfy 0 <= m_min <= m_max <= C(n_max,2)")


def _grow(h: Graph, mask: int) -> Graph:
    """h plus one new vertex adjacent to mask."""
    adj = [row | (mask >> v & 1) << h.n for v, row in enumerate(h.adj)]
    adj.append(mask)
    return Graph(h.n + 1, tuple(adj))


def enumerate_graphs(spec: EnumSpec) -> Iterator[Graph]:
    """All graphs with n <= n_max inside the window, one per isomorphism class.

    Emitted graphs are canonically labeled, smaller vertex counts first.
    """
    top = spec.n_max * (spec.n_max - 1) // 2 if spec.m_max is None else spec.m_max
    lo_mask = 1 if spec.connected_only else 0

    def wanted(g: Graph) -> bool:
        return spec.m_min <= g.m <= top and (not spec.connected_only or is_connected(g))

    layer = [Graph.empty(1)]
    if wanted(layer[0]):
        yield layer[0]
    for n in range(2, spec.n_max + 1):
        seen: set[str] = set()
        grown: list[Graph] = []
        for h in layer:
            for mask in range(lo_mask, 1 << (n - 1)):
                g = _grow(h, mask)
                if g.m > top:
                    continue
                c = canonical_graph(g)
                form = emit_graph6(c)
                if form not in seen:
                    seen.add(form)
                    grown.append(c)
        layer = grown
        for g in layer:
            if wanted(g):
                yield g


def ingest_graph6(lines: Iterable[str]) -> Iterator[Graph]:
    """Graphs from newline-delimited graph6 text; fails fast naming the bad line."""
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line:
            continue
        try:
            yield parse_graph6(line)
        except Graph6Error as exc:
            raise Graph6Error(f"line {lineno}: {exc}") from None
