"""End-to-end acceptance gate.

One test per numbered criterion, each printing a single PASS/FAIL line
(visible under `pytest -s`).  Time budgets are asserted where a
criterion pins one; the corpus sweep is computed once and shared by
criteria 2, 3, 4, and 5.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations
from random import Random

import pytest

from weakfano import (
    Digraph,
    check_link_isomorphism,
    closed_form_wall_degree,
    fan_from_building_set,
    graphical_building_set,
    is_graph_weak_fano_criterion,
    lattice_equivalent,
    lattice_points,
    is_reflexive,
    digraph_realizability_bound,
    maximal_nested_sets,
    negative_witness,
    polytope_from_building_set,
    polytope_from_digraph,
    solve_wall_relation,
    wall_degree,
    weak_fano_bruteforce,
    weak_fano_criterion,
    witness_final_pairs,
    SimpleGraph,
)
from weakfano.cli import classify_six_point
from weakfano.core import mask_of, project_mask
from conftest import CORPUS_SEED, bset


def report(num: int, failures: list, elapsed: float, detail: str) -> None:
    verdict = "PASS" if not failures else "FAIL"
    print(f"acceptance criterion {num}: {verdict} in {elapsed:.2f}s ({detail})")
    assert not failures, failures[:5]


def power_set(k: int):
    family = [c for r in range(1, k + 1) for c in combinations(range(1, k + 1), r)]
    return bset(k, *family)


@dataclass
class Sweep:
    """Everything criteria 2-5 need from one pass over the corpus."""

    records: list  # (building set, criterion verdict, bruteforce verdict)
    wall_total: int
    wall_mismatches: list
    witness_jobs: list  # (restricted set, first mask, second mask)
    elapsed: float


@pytest.fixture(scope="module")
def sweep(corpus) -> Sweep:
    t0 = time.time()
    records = []
    wall_total = 0
    wall_mismatches = []
    witness_jobs = []
    for b in corpus:
        rc = weak_fano_criterion(b)
        rb = weak_fano_bruteforce(b)
        records.append((b, rc.verdict, rb.verdict))
        for comp in b.max_masks:
            if comp.bit_count() < 2:
                continue
            sub, _ = b.restriction(comp)
            fan = fan_from_building_set(sub)
            for w in fan.walls:
                wall_total += 1
                fast = wall_degree(fan, w)
                solved, coefs = solve_wall_relation(fan, w)
                closed = closed_form_wall_degree(sub, w)
                if not (fast.degree == solved == closed and fast.coefficients == coefs):
                    wall_mismatches.append((sub.masks, w, fast.degree, solved, closed))
        for cv in rc.per_component:
            if cv.verdict:
                continue
            pair = cv.failing_pair
            cmask = mask_of(pair.component, b.ground_size)
            sub, labels = b.restriction(cmask)
            p1 = project_mask(mask_of(pair.first, b.ground_size), labels)
            p2 = project_mask(mask_of(pair.second, b.ground_size), labels)
            witness_jobs.append((sub, p1, p2))
    return Sweep(records, wall_total, wall_mismatches, witness_jobs, time.time() - t0)


def test_criterion_1_worked_example_regression(failing_pair_set):
    t0 = time.time()
    failures = []
    rc = weak_fano_criterion(failing_pair_set)
    if rc.verdict is not False:
        failures.append("criterion verdict should be false")
    pair = rc.witness
    if pair is None or pair.first != frozenset({1, 2, 3, 4}) or pair.second != frozenset(
        {2, 3, 4, 5}
    ):
        failures.append(f"wrong failing pair: {pair}")
    rb = weak_fano_bruteforce(failing_pair_set)
    wall = rb.witness
    if rb.verdict is not False or wall is None:
        failures.append("bruteforce should report a negative wall")
    else:
        if wall.degree != -1:
            failures.append(f"wall degree {wall.degree} != -1")
        if set(wall.shared) != {frozenset({2}), frozenset({3}), frozenset({4})}:
            failures.append(f"wrong shared part: {wall.shared}")
        if set(wall.flanks) != {frozenset({1, 2, 3, 4}), frozenset({2, 3, 4, 5})}:
            failures.append(f"wrong flanks: {wall.flanks}")
    elapsed = time.time() - t0
    if elapsed >= 1.0:
        failures.append(f"budget exceeded: {elapsed:.2f}s >= 1s")
    report(1, failures, elapsed, "worked example: pair, wall, degree -1")


def test_criterion_2_methods_agree_everywhere(sweep):
    t0 = time.time()
    failures = []
    exhaustive = sum(1 for b, _, _ in sweep.records if b.ground_size <= 4)
    random_part = len(sweep.records) - exhaustive
    if exhaustive != 435:
        failures.append(f"expected 435 exhaustive sets, saw {exhaustive}")
    if random_part < 500:
        failures.append(f"expected >= 500 random sets, saw {random_part}")
    for b, crit, brute in sweep.records:
        if crit != brute:
            failures.append(f"disagreement on {b.ground_size}:{b.masks}")
    if sweep.elapsed >= 300:
        failures.append(f"budget exceeded: {sweep.elapsed:.1f}s >= 300s")
    elapsed = sweep.elapsed + (time.time() - t0)
    report(
        2,
        failures,
        elapsed,
        f"{exhaustive} exhaustive + {random_part} random sets, zero disagreements",
    )


def test_criterion_3_small_ground_always_weak_fano(sweep):
    t0 = time.time()
    failures = []
    checked = 0
    for b, crit, brute in sweep.records:
        if b.ground_size > 4 or not b.is_connected:
            continue
        checked += 1
        if not (crit and brute):
            failures.append(f"connected set not weak Fano: {b.masks}")
    if checked < 300:
        failures.append(f"only {checked} connected sets on <= 4 elements")
    report(3, failures, time.time() - t0, f"{checked} connected sets, all weak Fano")


def test_criterion_4_witness_soundness(sweep, descent_one, descent_two):
    t0 = time.time()
    failures = []
    for sub, p1, p2 in sweep.witness_jobs:
        t = negative_witness(sub, p1, p2)
        deltas = [len(l.first ^ l.second) for l in t.layers]
        if not all(a > c for a, c in zip(deltas, deltas[1:])):
            failures.append(f"measure not strictly decreasing: {sub.masks} {deltas}")
        if t.degree > -1:
            failures.append(f"final degree {t.degree} > -1 on {sub.masks}")
        solved, coefs = solve_wall_relation(
            fan_from_building_set(sub), t.final_wall.wall
        )
        if solved != t.degree or coefs != t.coefficients:
            failures.append(f"exact solve disagrees on {sub.masks}")
    finals_one = witness_final_pairs(descent_one, {1, 2, 3, 4}, {3, 4, 5, 6})
    if frozenset((frozenset({2, 3, 4, 5}), frozenset({3, 4, 5, 6}))) not in finals_one:
        failures.append("expected final pair unreachable on the six-element fixture")
    finals_two = witness_final_pairs(descent_two, {1, 2, 3, 4, 5}, {3, 4, 5, 6, 7})
    if (
        frozenset((frozenset({2, 3, 4, 5, 6}), frozenset({3, 4, 5, 6, 7})))
        not in finals_two
    ):
        failures.append("expected final pair unreachable on the seven-element fixture")
    report(
        4,
        failures,
        time.time() - t0,
        f"{len(sweep.witness_jobs)} descents, both worked-example finals reached",
    )


def test_criterion_5_closed_form_degrees(sweep):
    t0 = time.time()
    failures = list(sweep.wall_mismatches)
    if sweep.wall_total < 10000:
        failures.append(f"suspiciously few walls checked: {sweep.wall_total}")
    report(
        5,
        failures,
        time.time() - t0,
        f"{sweep.wall_total} walls, closed form == exact solve",
    )


def test_criterion_6_power_set_polytopes():
    t0 = time.time()
    failures = []
    expected = {3: 6, 4: 14, 5: 30, 6: 62}
    for ground, count in expected.items():
        p = polytope_from_building_set(power_set(ground))
        if len(p.vertices) != count:
            failures.append(f"ground {ground}: {len(p.vertices)} vertices != {count}")
        if not is_reflexive(p):
            failures.append(f"ground {ground}: not reflexive")
    bound = digraph_realizability_bound(power_set(4))
    if not (bound.vertex_count == 14 and bound.arrow_budget == 12 and bound.obstructed):
        failures.append(f"obstruction should read 14 > 12: {bound}")
    elapsed = time.time() - t0
    if elapsed >= 30:
        failures.append(f"budget exceeded: {elapsed:.1f}s >= 30s")
    report(6, failures, elapsed, "vertex counts 6/14/30/62, reflexive, 14 > 12")


def test_criterion_7_digraph_fixture(cycle_digraph):
    t0 = time.time()
    failures = []
    dp = polytope_from_digraph(cycle_digraph)
    if dp.polytope is None or dp.affine_dim != 3:
        failures.append(f"expected a full-dimensional 3-polytope, got {dp.affine_dim}")
    else:
        if not is_reflexive(dp.polytope):
            failures.append("digraph polytope should be reflexive")
        pts = lattice_points(dp.polytope)
        if len(pts) != 6:
            failures.append(f"{len(pts)} lattice points != 6")
        listed = [
            bset(4, (1, 2), (1, 2, 3, 4)),
            bset(4, (1, 2, 3), (1, 2, 3, 4)),
            bset(5, (1, 2, 3), (4, 5)),
        ]
        for b in listed:
            if lattice_equivalent(polytope_from_building_set(b), dp.polytope):
                failures.append(f"unexpected equivalence with {b.masks}")
    elapsed = time.time() - t0
    if elapsed >= 60:
        failures.append(f"budget exceeded: {elapsed:.1f}s >= 60s")
    report(7, failures, elapsed, "reflexive, 6 lattice points, no listed match")


def test_criterion_8_six_point_classification(tmp_path):
    t0 = time.time()
    failures = []
    rep = classify_six_point(tmp_path / "classes")
    if len(rep.classes) != 3:
        failures.append(f"{len(rep.classes)} classes != 3")
    if None in rep.listed_classes or len(set(rep.listed_classes)) != 3:
        failures.append(f"listed sets do not hit three distinct classes: {rep.listed_classes}")
    elapsed = time.time() - t0
    if elapsed >= 600:
        failures.append(f"budget exceeded: {elapsed:.1f}s >= 600s")
    report(8, failures, elapsed, "exactly 3 classes, hit by the three listed sets")


def test_criterion_9_structural_suites(corpus):
    t0 = time.time()
    failures = []

    purity_sets = 0
    for b in corpus:
        expected = b.ground_size - len(b.max_masks)
        if any(len(ns) != expected for ns in maximal_nested_sets(b)):
            failures.append(f"purity broken on {b.masks}")
        purity_sets += 1

    link_pairs = 0
    for b in corpus:
        top = set(b.max_masks)
        choices = [m for m in b.masks if m not in top]
        for m in (choices[:1] + choices[-1:]) if choices else []:
            if not check_link_isomorphism(b, m):
                failures.append(f"link mismatch on {b.masks} at {m}")
            link_pairs += 1
    if link_pairs < 1000:
        failures.append(f"only {link_pairs} link pairs checked")

    graphs = 0
    for k in range(1, 7):
        pool = list(combinations(range(1, k + 1), 2))
        for bits in range(1 << len(pool)):
            edges = [e for i, e in enumerate(pool) if bits >> i & 1]
            g = SimpleGraph.from_edges(k, edges)
            if g.component_masks != ((1 << k) - 1,):
                continue
            graphs += 1
            b = graphical_building_set(g)
            if is_graph_weak_fano_criterion(g) != weak_fano_criterion(b).verdict:
                failures.append(f"graphical mismatch on {k} nodes: {sorted(edges)}")

    rng = Random(CORPUS_SEED)
    pool7 = [(i, j) for i in range(1, 8) for j in range(i + 1, 8)]
    sampled = 0
    while sampled < 150:
        edges = [e for e in pool7 if rng.random() < 0.5]
        g = SimpleGraph.from_edges(7, edges)
        if g.component_masks != ((1 << 7) - 1,):
            continue
        sampled += 1
        b = graphical_building_set(g)
        if is_graph_weak_fano_criterion(g) != weak_fano_criterion(b).verdict:
            failures.append(f"graphical mismatch at 7 nodes: {sorted(edges)}")

    report(
        9,
        failures,
        time.time() - t0,
        f"purity on {purity_sets} sets, {link_pairs} link pairs, "
        f"{graphs} graphs + {sampled} samples",
    )
