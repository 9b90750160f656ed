"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

The lines are collected in ``RESULTS`` and echoed in pytest's terminal summary
(see ``conftest.py``), so they show up even without ``-s``.  Run alone with::

    pytest tests/test_acceptance.py -v
"""

from __future__ import annotations

import time

import pytest

from cliquetrees import clique_tree as ct
from cliquetrees import relation as rel
from cliquetrees.io import format_walk_log
from cliquetrees.verify import GraphFacts, run_checks
from cliquetrees import verify

from conftest import INCLUSION5, PATH_OF_3_CLIQUES, STAR

RESULTS: list[str] = []


def record(number: int, title: str, passed: bool, detail: str) -> None:
    line = f"criterion {number:>2} {'PASS' if passed else 'FAIL'}  {title}: {detail}"
    RESULTS.append(line)
    print(line)
    assert passed, line


@pytest.fixture(scope="session")
def criterion1_corpus(corpus6, random10):
    return corpus6 + random10


@pytest.fixture(scope="session")
def facts(criterion1_corpus):
    return [GraphFacts(g) for g in criterion1_corpus]


def tally(facts_list, check):
    passed = failed = skipped = 0
    for f in facts_list:
        outcome = check(f)
        if outcome is None:
            skipped += 1
        elif outcome:
            passed += 1
        else:
            failed += 1
    return passed, failed, skipped


def test_criterion_01_count_matches_enumeration(corpus6, random10):
    start = time.perf_counter()
    mismatches = 0
    for g in corpus6 + random10:
        if ct.count_clique_trees(g) != len(ct.enumerate_clique_trees(g)):
            mismatches += 1
    seconds = time.perf_counter() - start
    record(
        1,
        "count == |enumeration|",
        mismatches == 0 and seconds <= 300,
        f"{len(corpus6)} exhaustive + {len(random10)} random graphs, {mismatches} mismatches, {seconds:.1f}s (limit 300s)",
    )


def test_criterion_02_pinned_counts():
    got = [ct.count_clique_trees(g) for g in (STAR, PATH_OF_3_CLIQUES, INCLUSION5)]
    enumerated = [len(ct.enumerate_clique_trees(g)) for g in (STAR, PATH_OF_3_CLIQUES, INCLUSION5)]
    record(2, "pinned counts", got == [3, 1, 2] == enumerated, f"star={got[0]}, path-of-3-cliques={got[1]}, inclusion={got[2]}")


def test_criterion_03_boundary_equivalences(facts):
    passed, failed, skipped = tally(facts, verify.boundary_equivalence)
    record(3, "three boundary tests agree", failed == 0, f"{passed} non-complete graphs, {failed} disagreements, {skipped} complete skipped")


def test_criterion_04_endpoint_theorems(corpus6):
    f6 = [GraphFacts(g) for g in corpus6]
    a_fail = b_fail = c_fail = 0
    b_checked = 0
    for f in f6:
        if f.complete:
            continue
        r = ct.endpoint_boundary_check(f.g, f.trees)
        a_fail += any(m.startswith("(a)") for m in r.failures)
        c_fail += any(m.startswith("(b)") for m in r.failures) + any(m.startswith("(c)") for m in r.failures)
        c_fail += not ct.endpoint_component_check(f.g, f.trees).passed
        if f.K <= 8:
            b_checked += 1
            b_fail += not ct.final_clique_check(f.g, f.sequences).passed
    record(
        4,
        "endpoint theorems",
        a_fail == b_fail == c_fail == 0,
        f"(a) endpoints=boundary {a_fail} failures; (b) last cliques=boundary on {b_checked} graphs {b_fail} failures; "
        f"(c) two-endpoint strengthening {c_fail} failures",
    )


def test_criterion_05_relation_symmetry(facts):
    passed, failed, skipped = tally(facts, verify.relation_symmetry)
    record(5, "relation symmetric under both constructions", failed == 0 and passed > 0, f"{passed} graphs with K<=5, {failed} disagreements")


def test_criterion_06_bipartite_connectivity(facts, random8):
    f8 = [GraphFacts(g) for g in random8]
    p1, f1, s1 = tally(facts, verify.bipartite_connected)
    p2, f2, s2 = tally(f8, verify.bipartite_connected)
    record(
        6,
        "bipartite graph connected",
        f1 == f2 == 0,
        f"{p1 + p2} materialized ({p1} criterion-1 corpus, {p2} random n<=8), {f1 + f2} failures, "
        f"{s1 + s2} beyond the {verify.BIPARTITE_MAX_PAIRS}-pair guard",
    )


def test_criterion_07_classifications(facts):
    pa, fa, _ = tally(facts, verify.arbitrariness)
    pu, fu, _ = tally(facts, verify.uniqueness)
    record(7, "arbitrary and unique classifications", fa == fu == 0, f"arbitrary: {pa} graphs (2<=K<=6) {fa} failures; unique: {pu} graphs {fu} failures")


def test_criterion_08_star_bipartite():
    b = rel.build_bipartite(STAR)
    shape = (len(b.trees), len(b.sequences), len(b.edges))
    ok = shape == (3, 6, 12) and rel.is_connected(b) and not b.is_complete()
    record(8, "star bipartite graph", ok, f"trees={shape[0]} sequences={shape[1]} edges={shape[2]} connected={rel.is_connected(b)} complete={b.is_complete()}")


def test_criterion_09_walk_coverage():
    start = time.perf_counter()
    log = rel.random_walk(STAR, steps=10_000, seed=42)
    text = format_walk_log(STAR, 42, log)
    seconds = time.perf_counter() - start
    again = format_walk_log(STAR, 42, rel.random_walk(STAR, steps=10_000, seed=42))
    states = {(ws.side, ws.key) for ws in log}
    ok = len(states) == 9 and text == again and seconds < 1.0
    record(9, "walk coverage", ok, f"{len(states)}/9 states, byte-identical={text == again}, {seconds:.3f}s (limit 1s)")


def test_criterion_10_nu_invariance(facts):
    passed, failed, skipped = tally(facts, verify.nu_invariance)
    record(10, "separator multiset invariant", failed == 0, f"{passed} graphs with K<=8, {failed} failures, {skipped} skipped")


def test_full_verification_suite_on_criterion_corpus(criterion1_corpus):
    """Every structural check together, as the ``verify`` command runs them."""
    report = run_checks(criterion1_corpus)
    failing = {name: t.failed for name, t in report.tallies.items() if t.failed}
    assert report.ok, failing


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-v"]))
