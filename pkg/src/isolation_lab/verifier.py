"""Theorem- and lemma-level verification suites over graph universes.

Each suite maps a per-graph check over a universe, tallies counters, and
returns a report plus one JSON-ready record per graph.  Records are
sorted by graph6 line so output bytes do not depend on the worker count;
violations are collected as data, never raised.
"""

from __future__ import annotations

import itertools
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from typing import Callable, Iterable

from .canonical import canonical_form
from .constructions import (
    ExtremalClass,
    Verdict,
    is_special_pair,
    iter_special_builds,
    recognize_extremal,
)
from .graphs import (
    Graph,
    closed_neighborhood,
    components,
    delete,
    disjoint_union,
    emit_graph6,
    is_connected,
)
from .patterns import Pattern, all_copies, pattern_from_name
from .solver import Family, solve

EQUALITY_CLASSES = (ExtremalClass.PURE_SPECIAL, ExtremalClass.F_PLUS_E)


@dataclass(frozen=True)
class TheoremReport:
    pattern: str
    universe: str
    checked: int
    bound_violations: int
    equality_cases: int
    equality_misclassified: int
    offenders: tuple[str, ...]
    details: dict[str, int] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.bound_violations == 0 and self.equality_misclassified == 0

    def as_dict(self) -> dict:
        return {
            "pattern": self.pattern,
            "universe": self.universe,
            "checked": self.checked,
            "bound_violations": self.bound_violations,
            "equality_cases": self.equality_cases,
            "equality_misclassified": self.equality_misclassified,
            "offenders": list(self.offenders),
            "details": dict(self.details),
            "ok": self.ok,
        }


@dataclass(frozen=True)
class VerifyRun:
    report: TheoremReport
    records: tuple[dict, ...]


def make_verdict(g: Graph, p: Pattern) -> Verdict:
    iota = solve(g, Family.of(p)).iota
    m = g.m
    if is_special_pair(g, p):
        cls = ExtremalClass.SPECIAL_PAIR
    elif p.k >= 3 and is_connected(g):
        cls = recognize_extremal(g, p)
    else:
        cls = ExtremalClass.NON_EXTREMAL
    return Verdict(
        m=m,
        iota=iota,
        bound_num=m + 1,
        bound_den=p.k + 2,
        attains=iota * (p.k + 2) == m + 1,
        cls=cls,
    )


def _verdict_record(p: Pattern, g: Graph) -> dict:
    v = make_verdict(g, p)
    return {
        "g6": emit_graph6(g),
        "m": v.m,
        "iota": v.iota,
        "bound": v.bound_num / v.bound_den,
        "attains": v.attains,
        "class": v.cls.value,
    }


def _map_records(fn: Callable[[Graph], dict], graphs: list[Graph], workers: int) -> list[dict]:
    if workers <= 1:
        records = [fn(g) for g in graphs]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(fn, graphs, chunksize=64))
    return sorted(records, key=lambda r: r["g6"])


def verify_bound(
    p: Pattern,
    universe: Iterable[Graph],
    workers: int = 1,
    pattern_label: str = "",
    universe_label: str = "stream",
) -> VerifyRun:
    """Check (k+2)·iota <= m+1 on every connected non-special universe graph."""
    if p.gamma != 1:
        raise ValueError("the bound requires a pattern with a dominating vertex")
    graphs = [g for g in universe if is_connected(g)]
    records = _map_records(partial(_verdict_record, p), graphs, workers)
    checked = violations = equality = specials = 0
    offenders = []
    for r in records:
        if r["class"] == ExtremalClass.SPECIAL_PAIR.value:
            specials += 1
            continue
        checked += 1
        if r["iota"] * (p.k + 2) > r["m"] + 1:
            violations += 1
            offenders.append(r["g6"])
        elif r["attains"]:
            equality += 1
    report = TheoremReport(
        pattern=pattern_label or f"{p.ell} vertices / {p.k} edges",
        universe=universe_label,
        checked=checked,
        bound_violations=violations,
        equality_cases=equality,
        equality_misclassified=0,
        offenders=tuple(sorted(offenders)),
        details={"special_pairs": specials},
    )
    return VerifyRun(report=report, records=tuple(records))


def verify_extremal(
    p: Pattern,
    universe: Iterable[Graph],
    workers: int = 1,
    pattern_label: str = "",
    universe_label: str = "stream",
) -> VerifyRun:
    """Check equality holds exactly on the recognized extremal classes."""
    if p.gamma != 1 or p.k < 3:
        raise ValueError("the characterization requires gamma = 1 and k >= 3")
    graphs = [g for g in universe if is_connected(g)]
    records = _map_records(partial(_verdict_record, p), graphs, workers)
    checked = violations = equality = mismatched = specials = 0
    offenders = []
    for r in records:
        if r["class"] == ExtremalClass.SPECIAL_PAIR.value:
            specials += 1
            continue
        checked += 1
        if r["iota"] * (p.k + 2) > r["m"] + 1:
            violations += 1
            offenders.append(r["g6"])
            continue
        recognized = r["class"] in (c.value for c in EQUALITY_CLASSES)
        if r["attains"]:
            equality += 1
        if r["attains"] != recognized:
            mismatched += 1
            offenders.append(r["g6"])
    report = TheoremReport(
        pattern=pattern_label or f"{p.ell} vertices / {p.k} edges",
        universe=universe_label,
        checked=checked,
        bound_violations=violations,
        equality_cases=equality,
        equality_misclassified=mismatched,
        offenders=tuple(sorted(offenders)),
        details={"special_pairs": specials},
    )
    return VerifyRun(report=report, records=tuple(records))


def _has_two_disjoint_copies(g: Graph, p: Pattern) -> bool:
    copies = all_copies(g, p)
    for a, b in itertools.combinations(copies, 2):
        if a & b == 0:
            return True
    return False


def _two_copies_record(p: Pattern, special_forms: frozenset[str], g: Graph) -> dict:
    r = _verdict_record(p, g)
    r["special"] = canonical_form(g) in special_forms
    return r


def verify_two_copies(
    p: Pattern,
    universe: Iterable[Graph],
    workers: int = 1,
    pattern_label: str = "",
    universe_label: str = "stream",
) -> VerifyRun:
    """Graphs with m = 2k+3 and two disjoint copies: iota = 1 or special."""
    if p.gamma != 1 or p.k < 3:
        raise ValueError("the two-copies lemma requires gamma = 1 and k >= 3")
    m_target = 2 * p.k + 3
    graphs = [
        g
        for g in universe
        if g.m == m_target and is_connected(g) and _has_two_disjoint_copies(g, p)
    ]
    special_forms = frozenset(
        canonical_form(b.graph) for b in iter_special_builds(p, m_target)
    )
    records = _map_records(partial(_two_copies_record, p, special_forms), graphs, workers)
    violations = 0
    offenders = []
    for r in records:
        if r["iota"] != 1 and not r["special"]:
            violations += 1
            offenders.append(r["g6"])
    report = TheoremReport(
        pattern=pattern_label or f"{p.ell} vertices / {p.k} edges",
        universe=universe_label,
        checked=len(records),
        bound_violations=violations,
        equality_cases=sum(r["special"] for r in records),
        equality_misclassified=0,
        offenders=tuple(sorted(offenders)),
        details={"iota_one": sum(r["iota"] == 1 for r in records)},
    )
    return VerifyRun(report=report, records=tuple(records))


def _random_graph(rng: random.Random, n: int, density: float = 0.4) -> Graph:
    pairs = list(itertools.combinations(range(n), 2))
    return Graph.from_edges(n, [e for e in pairs if rng.random() < density])


def _lemma_families() -> list[Family]:
    named = [Family.of(pattern_from_name(n)) for n in ("k2", "p3", "k3", "k1_3")]
    return named + [Family.cycles()]


def verify_lemma_suites(seed: int = 0, trials: int = 1000) -> VerifyRun:
    """Randomized checks of the three inequality lemmas at a fixed seed."""
    rng = random.Random(seed)
    fams = _lemma_families()
    failures: list[str] = []
    counts = {"deletion": 0, "additivity": 0, "partition": 0}

    for t in range(trials):
        fam = fams[t % len(fams)]
        # deletion: removing Y inside N[X] costs at most |X|
        g = _random_graph(rng, rng.randint(1, 7))
        x = rng.getrandbits(g.n) & g.vertices
        y = closed_neighborhood(g, x) & rng.getrandbits(g.n)
        ok = solve(g, fam).iota <= x.bit_count() + solve(delete(g, y).graph, fam).iota
        counts["deletion"] += ok
        if not ok:
            failures.append(emit_graph6(g))

        # additivity over components
        g = disjoint_union(_random_graph(rng, rng.randint(1, 5)), _random_graph(rng, rng.randint(1, 5)))
        total = sum(
            solve(delete(g, g.vertices & ~c).graph, fam).iota for c in components(g)
        )
        ok = solve(g, fam).iota == total
        counts["additivity"] += ok
        if not ok:
            failures.append(emit_graph6(g))

        # partition: glue two solved halves by covered cross-edges
        if fam.all_cycles:
            continue
        a = _random_graph(rng, rng.randint(1, 5))
        b = _random_graph(rng, rng.randint(1, 5))
        ra, rb = solve(a, fam), solve(b, fam)
        covered = closed_neighborhood(a, ra.witness) | (
            closed_neighborhood(b, rb.witness) << a.n
        )
        glued = disjoint_union(a, b)
        cross = [
            (u, a.n + v)
            for u in range(a.n)
            for v in range(b.n)
            if covered >> u & 1 or covered >> (a.n + v) & 1
        ]
        picked = [e for e in cross if rng.random() < 0.35]
        glued = Graph.from_edges(glued.n, list(glued.edges()) + picked)
        ok = solve(glued, fam).iota <= ra.iota + rb.iota
        counts["partition"] += ok
        if not ok:
            failures.append(emit_graph6(glued))

    total_checks = sum(counts.values()) + len(failures)
    report = TheoremReport(
        pattern="mixed families",
        universe=f"random(seed={seed}, trials={trials})",
        checked=total_checks,
        bound_violations=len(failures),
        equality_cases=0,
        equality_misclassified=0,
        offenders=tuple(sorted(failures)),
        details=counts,
    )
    return VerifyRun(report=report, records=())
