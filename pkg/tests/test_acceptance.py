"""Acceptance gate: ten exhaustive desk-scale checks.

Each test prints one PASS/FAIL line straight to the terminal (bypassing
capture) so the gate's outcome is readable from any pytest run.  The
n <= 8 connected universe and the star-pattern bound sweep are shared
module fixtures; building them dominates the runtime of this file.
"""

import json
import random
from itertools import combinations

import pytest

from isolation_lab.canonical import canonical_form, is_isomorphic
from isolation_lab.constructions import (
    ExtremalClass,
    enumerate_f_plus_e,
    enumerate_pure_special,
    iter_special_builds,
)
from isolation_lab.enumeration import EnumSpec, enumerate_graphs
from isolation_lab.graphs import (
    Graph,
    closed_neighborhood,
    delete,
    emit_graph6,
    is_connected,
    parse_graph6,
    vertex_list,
)
from isolation_lab.patterns import pattern_from_name
from isolation_lab.solver import (
    Family,
    domination_number,
    is_family_free,
    solve,
    solve_oracle,
)
from isolation_lab.verifier import verify_bound, verify_two_copies

K3 = pattern_from_name("k3")
K13 = pattern_from_name("k1_3")
PAW = pattern_from_name("paw")


def announce(capsys, num: int, ok: bool, detail: str) -> None:
    with capsys.disabled():
        print(f"\n[criterion {num:2d}] {'PASS' if ok else 'FAIL'}: {detail}")


@pytest.fixture(scope="module")
def universe8():
    return list(enumerate_graphs(EnumSpec(n_max=8, connected_only=True)))


@pytest.fixture(scope="module")
def universe7(universe8):
    return [g for g in universe8 if g.n <= 7]


@pytest.fixture(scope="module")
def star_bound_run(universe8):
    # One sweep serves criteria 1 and 2: records carry iota, attainment,
    # and the recognized extremal class for every graph.
    return verify_bound(K13, universe8, workers=1)


@pytest.fixture(scope="module")
def pure_corpus():
    # Every pure special graph with q <= 3 for the three sample patterns.
    corpus = {}
    for p in (K3, K13, PAW):
        builds = []
        for q in (1, 2, 3):
            builds.extend(iter_special_builds(p, q * (p.k + 2) - 1))
        corpus[p] = builds
    return corpus


def equality_sets(records):
    attained = {
        r["g6"]
        for r in records
        if r["attains"] and r["class"] != ExtremalClass.SPECIAL_PAIR.value
    }
    recognized = {
        r["g6"]
        for r in records
        if r["class"] in (ExtremalClass.PURE_SPECIAL.value, ExtremalClass.F_PLUS_E.value)
    }
    return attained, recognized


def test_criterion_01_bound_star_n8(universe8, star_bound_run, capsys):
    rep = star_bound_run.report
    ok = (
        rep.bound_violations == 0
        and not rep.offenders
        and rep.checked + rep.details["special_pairs"] == len(universe8)
    )
    announce(
        capsys, 1,
        ok,
        f"5*iota <= m+1 for K_(1,3) on all {len(universe8)} connected graphs "
        f"with n <= 8; {rep.bound_violations} violations, "
        f"{rep.details['special_pairs']} exempt special pair(s)",
    )
    assert ok, rep.as_dict()


def test_criterion_02_characterization_star_n8(star_bound_run, capsys):
    attained, recognized = equality_sets(star_bound_run.records)
    # Independent expectation straight from the constructions: the only
    # equality classes that fit in n <= 8 are the m = 4 pure graphs and
    # the one star-plus-edge graph.
    expected = {canonical_form(g) for g in enumerate_pure_special(K13, 4)}
    expected |= {canonical_form(g) for g in enumerate_f_plus_e(K13)}
    ok = attained == recognized == expected
    announce(
        capsys, 2,
        ok,
        f"equality cases == recognized extremal classes for K_(1,3), n <= 8: "
        f"{len(attained)} graphs, both inclusions exact",
    )
    assert attained == recognized, (sorted(attained), sorted(recognized))
    assert attained == expected, (sorted(attained), sorted(expected))


def test_criterion_03_characterization_paw_n7(universe7, capsys):
    run = verify_bound(PAW, universe7, workers=1)
    attained, recognized = equality_sets(run.records)
    expected = {canonical_form(g) for g in enumerate_pure_special(PAW, 5)}
    expected |= {canonical_form(g) for g in enumerate_f_plus_e(PAW)}
    ok = run.report.bound_violations == 0 and attained == recognized == expected
    announce(
        capsys, 3,
        ok,
        f"paw characterization on {len(universe7)} connected graphs with "
        f"n <= 7: {len(attained)} equality cases, zero exceptions",
    )
    assert run.report.bound_violations == 0
    assert attained == recognized == expected, (sorted(attained), sorted(recognized))


def test_criterion_04_triangle_corner(universe8, capsys):
    run = verify_bound(K3, universe8, workers=1)
    attained, recognized = equality_sets(run.records)
    classes = {r["g6"]: r["class"] for r in run.records}
    all_pure = all(
        classes[g6] == ExtremalClass.PURE_SPECIAL.value for g6 in attained
    )
    no_fplus = ExtremalClass.F_PLUS_E.value not in classes.values()
    ok = all_pure and no_fplus and not enumerate_f_plus_e(K3) and attained == recognized
    announce(
        capsys, 4,
        ok,
        f"K_3 equality cases on n <= 8: all {len(attained)} classify "
        f"PureSpecial, none FPlusE (complement of K_3 has no edges)",
    )
    assert ok, {g6: classes[g6] for g6 in attained}


def test_criterion_05_pure_special_equality(pure_corpus, capsys):
    checked = 0
    for p, builds in pure_corpus.items():
        fam = Family.of(p)
        for b in builds:
            q = b.spec.q
            assert b.graph.m + 1 == q * (p.k + 2)
            res = solve(b.graph, fam)
            assert res.iota == q, (emit_graph6(b.graph), res.iota, q)
            checked += 1
    announce(
        capsys, 5,
        True,
        f"iota == (m+1)/(k+2) on all {checked} pure special graphs with "
        f"q <= 3 for K_3, K_(1,3), paw",
    )


def test_criterion_06_min_isolating_sets(pure_corpus, capsys):
    forced_checked = deletion_checked = 0
    for p, builds in pure_corpus.items():
        fam = Family.of(p)
        targets = [(b.graph, b.layout.quotient, b.spec.q) for b in builds]
        targets += [(g, None, None) for g in enumerate_f_plus_e(p)]
        for g, quotient, q in targets:
            base = solve(g, fam).iota
            for x in vertex_list(g.vertices):
                got = solve(g, fam, forced=1 << x).iota
                assert got == base, (emit_graph6(g), x, got, base)
                forced_checked += 1
            if quotient is None:
                continue
            for x in vertex_list(g.vertices & ~quotient):
                rest = delete(g, 1 << x).graph
                got = solve(rest, fam).iota
                # A pendant vertex whose removal leaves F is a quotient
                # vertex after relabeling, so the drop does not apply.
                if q == 1 and g.degree(x) == 1 and is_isomorphic(rest, p.f):
                    assert got == base, (emit_graph6(g), x)
                else:
                    assert got == base - 1, (emit_graph6(g), x, got, base)
                deletion_checked += 1
    announce(
        capsys, 6,
        True,
        f"every vertex lies in a minimum set ({forced_checked} forced solves) "
        f"and non-quotient deletion drops iota by 1 ({deletion_checked} checks)",
    )


def test_criterion_07_two_copies_star_m9(universe8, capsys):
    window = [g for g in universe8 if g.m == 9]
    run = verify_two_copies(K13, window, workers=1)
    rep = run.report
    resolved = rep.details.get("iota_one", 0) + rep.details.get("special", 0)
    ok = rep.ok and rep.checked > 0 and resolved == rep.checked
    announce(
        capsys, 7,
        ok,
        f"of {len(window)} connected graphs with m == 9 and n <= 8, "
        f"{rep.checked} contain two disjoint stars; every one has iota == 1 "
        f"or is special ({rep.details})",
    )
    assert ok, rep.as_dict()


def test_criterion_08_classical_bounds(universe7, capsys):
    c5 = canonical_form(Graph.from_edges(5, [(i, (i + 1) % 5) for i in range(5)]))
    k3 = canonical_form(K3.f)
    edge_fam = Family.of(pattern_from_name("k2"))
    cycle_fam = Family.cycles()
    checked = 0
    for g in universe7:
        form = canonical_form(g)
        gamma = domination_number(g)
        if g.n > 1:
            assert 2 * gamma <= g.n, emit_graph6(g)
        ve = solve(g, edge_fam).iota
        if form == c5:
            assert ve == 2
        elif g.n > 2:
            assert 3 * ve <= g.n, emit_graph6(g)
        ic = solve(g, cycle_fam).iota
        if form != k3:
            assert 4 * ic <= g.n, emit_graph6(g)
        checked += 1
    announce(
        capsys, 8,
        True,
        f"domination <= n/2, vertex-edge <= n/3, cycle isolation <= n/4 on "
        f"{checked} connected graphs with n <= 7, known exceptions only",
    )


def test_criterion_09_solver_vs_oracle(universe7, capsys):
    families = [
        Family.of(pattern_from_name(name)) for name in ("k2", "k3", "p3", "k1_3")
    ] + [Family.cycles()]
    small = [g for g in universe7 if g.n <= 6]
    compared = 0
    for g in small:
        for fam in families:
            a = solve(g, fam)
            b = solve_oracle(g, fam)
            assert a.iota == b.iota, (emit_graph6(g), fam)
            for res in (a, b):
                assert res.witness.bit_count() == res.iota
                assert res.witness & ~g.vertices == 0
                rest = delete(g, closed_neighborhood(g, res.witness)).graph
                assert is_family_free(rest, fam), (emit_graph6(g), res.witness)
            compared += 1
    announce(
        capsys, 9,
        True,
        f"solve matches the subset oracle with valid witnesses on "
        f"{len(small)} connected graphs with n <= 6, 5 families each "
        f"({compared} comparisons)",
    )


def test_criterion_10_infrastructure(universe7, capsys):
    # graph6 round-trip on random graphs.
    rng = random.Random(20260823)
    for _ in range(10_000):
        n = rng.randint(1, 13)
        edges = [e for e in combinations(range(n), 2) if rng.random() < rng.random()]
        g = Graph.from_edges(n, edges)
        assert parse_graph6(emit_graph6(g)) == g

    # Enumeration against the labeled brute force, per stratum, n <= 6.
    by_n_all: dict[int, set] = {}
    by_n_conn: dict[int, set] = {}
    for g in enumerate_graphs(EnumSpec(n_max=6)):
        by_n_all.setdefault(g.n, set()).add(emit_graph6(g))
        if is_connected(g):
            by_n_conn.setdefault(g.n, set()).add(emit_graph6(g))
    for n in range(1, 7):
        pairs = list(combinations(range(n), 2))
        brute_all, brute_conn = set(), set()
        for bits in range(1 << len(pairs)):
            g = Graph.from_edges(n, [p for i, p in enumerate(pairs) if bits >> i & 1])
            form = canonical_form(g)
            brute_all.add(form)
            if is_connected(g):
                brute_conn.add(form)
        assert by_n_all[n] == brute_all, n
        assert by_n_conn[n] == brute_conn, n

    # Reports are byte-identical regardless of worker count.
    uni5 = [g for g in universe7 if g.n <= 5]
    runs = [verify_bound(K13, uni5, workers=w) for w in (1, 2)]
    payloads = [
        json.dumps([r.report.as_dict(), list(r.records)], sort_keys=True) for r in runs
    ]
    assert payloads[0] == payloads[1]

    announce(
        capsys, 10,
        True,
        "graph6 round-trip on 10,000 random graphs, enumeration equals "
        "labeled brute force for n <= 6, reports byte-identical across "
        "worker counts",
    )
