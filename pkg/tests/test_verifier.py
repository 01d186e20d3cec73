"""Verification suites: tallies, exemptions, determinism, parallel identity."""

import json

from isolation_lab.constructions import ExtremalClass, SpecialSpec, build_special
from isolation_lab.enumeration import EnumSpec, enumerate_graphs
from isolation_lab.graphs import Graph
from isolation_lab.patterns import pattern_from_name
from isolation_lab.verifier import (
    make_verdict,
    verify_bound,
    verify_extremal,
    verify_lemma_suites,
    verify_two_copies,
)

K3 = pattern_from_name("k3")
K13 = pattern_from_name("k1_3")
P3 = pattern_from_name("p3")


def universe(n_max, **kw):
    return list(enumerate_graphs(EnumSpec(n_max=n_max, connected_only=True, **kw)))


class TestVerdict:
    def test_fields(self):
        v = make_verdict(Graph.star(4), K13)
        assert (v.m, v.iota, v.bound_num, v.bound_den) == (4, 1, 5, 5)
        assert v.attains
        assert v.cls is ExtremalClass.PURE_SPECIAL

    def test_special_pair_for_low_k(self):
        v = make_verdict(Graph.cycle(6), P3)
        assert v.cls is ExtremalClass.SPECIAL_PAIR
        assert v.iota == 2

    def test_plain_graph_low_k(self):
        assert make_verdict(Graph.path(5), P3).cls is ExtremalClass.NON_EXTREMAL


class TestBound:
    def test_star_n6_clean(self):
        run = verify_bound(K13, universe(6))
        assert run.report.ok
        assert run.report.bound_violations == 0
        assert run.report.checked + run.report.details["special_pairs"] == len(run.records)
        assert run.report.details["special_pairs"] == 1  # the star itself

    def test_p3_exempts_c6(self):
        run = verify_bound(P3, universe(6))
        assert run.report.ok
        assert run.report.details["special_pairs"] == 2  # P3 and C6
        by_g6 = {r["g6"]: r for r in run.records}
        c6 = by_g6[
            min(r["g6"] for r in run.records if r["class"] == "SpecialPairException" and r["m"] == 6)
        ]
        assert c6["iota"] == 2

    def test_k3_on_itself_exempted(self):
        run = verify_bound(K3, [Graph.complete(3)])
        assert run.report.checked == 0
        assert run.report.details["special_pairs"] == 1


class TestExtremal:
    def test_star_n6(self):
        run = verify_extremal(K13, universe(6))
        assert run.report.ok
        # K_{1,4} and the 5-vertex chair (pure), the paw (F+e)
        assert run.report.equality_cases == 3
        classes = {
            r["g6"]: r["class"] for r in run.records if r["attains"] and r["class"] != "SpecialPairException"
        }
        assert sorted(classes.values()) == ["FPlusE", "PureSpecial", "PureSpecial"]

    def test_k3_equalities_all_pure(self):
        run = verify_extremal(K3, universe(6))
        assert run.report.ok
        for r in run.records:
            assert r["class"] != "FPlusE"

    def test_paw_n6(self):
        paw = pattern_from_name("paw")
        run = verify_extremal(paw, universe(6))
        assert run.report.ok
        # three pure (5,paw)-specials (one per attach orbit) plus the diamond
        assert run.report.equality_cases == 4
        classes = [r["class"] for r in run.records if r["attains"] and r["class"] != "SpecialPairException"]
        assert sorted(classes) == ["FPlusE", "PureSpecial", "PureSpecial", "PureSpecial"]


class TestTwoCopies:
    def test_k3_universe_clean(self):
        uni = universe(7, m_min=9, m_max=9)
        run = verify_two_copies(K3, uni)
        assert run.report.ok
        assert run.report.checked >= 1
        assert run.report.details["iota_one"] == run.report.checked

    def test_built_special_satisfies_lemma(self):
        b = build_special(
            SpecialSpec(pattern=K3, q=2, r=0, quotient_tree=((0, 1),), attach=(0, 0))
        )
        run = verify_two_copies(K3, [b.graph])
        assert run.report.checked == 1
        assert run.report.ok
        assert run.records[0]["special"]
        assert run.records[0]["iota"] == 2

    def test_graph_without_disjoint_copies_skipped(self):
        run = verify_two_copies(K3, [Graph.complete(4)])  # m=6 anyway
        assert run.report.checked == 0


class TestLemmaSuites:
    def test_fixed_seed_clean(self):
        run = verify_lemma_suites(seed=0, trials=120)
        assert run.report.ok
        assert run.report.bound_violations == 0
        assert set(run.report.details) == {"deletion", "additivity", "partition"}
        assert run.report.checked == sum(run.report.details.values())

    def test_deterministic(self):
        a = verify_lemma_suites(seed=3, trials=60).report
        b = verify_lemma_suites(seed=3, trials=60).report
        assert a == b


class TestParallelIdentity:
    def test_records_identical_across_workers(self):
        uni = universe(5)
        for fn in (verify_bound, verify_extremal):
            serial = fn(K13, uni, workers=1)
            fanned = fn(K13, uni, workers=2)
            assert json.dumps(serial.records) == json.dumps(fanned.records)
            assert serial.report == fanned.report

    def test_records_sorted_by_g6(self):
        run = verify_bound(K13, universe(5))
        keys = [r["g6"] for r in run.records]
        assert keys == sorted(keys)
