"""Acceptance suite: one test per criterion, each printing a PASS line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines as the
criteria complete. The exhaustive corpus covers every connected graph with
2..6 vertices and at most 9 edges, one representative per isomorphism class.
"""

from __future__ import annotations

import random

from homcycle import (
    build_hom_skeleton,
    cycle_graph,
    descend_to_origin,
    enumerate_cover_quotient,
    enumerate_homs,
    in_shift_lattice,
    in_universal_cover,
    lattice_moves,
    negate_transport,
    orient,
    path_graph,
    project,
    skeleton_components,
    validate_hom,
    verify_classification,
    vertices_on_directed_cycles,
)
from homcycle.graphs import is_sink, is_source
from homcycle.homology import betti, build_two_skeleton
from tests.conftest import condensation_sample_point, random_walk_point

CORPUS_KS = (3, 5, 6, 7)

GOLDEN_COMPONENT_LABELS = {
    3: {"212", "012", "010", "210", "101", "201", "202", "102",
        "020", "120", "121", "021"},
    4: {"212", "012", "010", "210", "232", "032", "030", "230"},
    5: {"212", "012", "010", "210", "434", "234", "232", "432",
        "101", "401", "404", "104", "323", "123", "121", "321",
        "040", "340", "343", "043"},
    6: {"212", "012", "010", "210", "434", "234", "232", "432",
        "050", "450", "454", "054"},
}


def test_criterion_1_hom_counts():
    p3 = path_graph(3)
    for k in range(3, 11):
        assert len(enumerate_homs(p3, k)) == 4 * k
    print("ACCEPTANCE 1 PASS: |Hom(P3, C_k)| = 4k for k = 3..10")


def test_criterion_2_component_counts():
    p3 = path_graph(3)
    for k in (3, 5, 7, 9):
        assert len(skeleton_components(build_hom_skeleton(p3, k))) == 1
    for k in (4, 6, 8):
        assert len(skeleton_components(build_hom_skeleton(p3, k))) == 2
    print("ACCEPTANCE 2 PASS: P3 components: 1 for odd k in {3,5,7,9}, "
          "2 for even k in {4,6,8}")


def test_criterion_3_golden_component_labels():
    p3 = path_graph(3)
    expected_sizes = {3: 12, 4: 8, 5: 20, 6: 12}
    for k in (3, 4, 5, 6):
        skeleton = build_hom_skeleton(p3, k)
        f = validate_hom(p3, k, (0, 1, 2))
        target = skeleton.index_of(f)
        component = next(
            c for c in skeleton_components(skeleton) if target in c
        )
        labels = {skeleton.homs[i].label() for i in component}
        assert len(component) == expected_sizes[k]
        assert labels == GOLDEN_COMPONENT_LABELS[k]
    print("ACCEPTANCE 3 PASS: P3 component labels for k in {3,4,5,6} match "
          "the golden panels (sizes 12, 8, 20, 12)")


def test_criterion_4_criterion_matches_homology(corpus):
    checked = 0
    for g in corpus:
        for k in CORPUS_KS:
            for report in verify_classification(g, k):
                assert report.oracle_consistent, (
                    f"mismatch: {g!r} k={k} rep={report.representative.label()} "
                    f"type={report.homotopy_type} betti={report.betti}"
                )
                checked += 1
    print(f"ACCEPTANCE 4 PASS: classifier == homology oracle on every "
          f"component ({checked} components, {len(corpus)} graphs, "
          f"k in {CORPUS_KS})")


def test_criterion_5_k4_contractible(corpus):
    checked = 0
    for g in corpus:
        for report in verify_classification(g, 4):
            assert report.betti == (1, 0), (
                f"non-contractible component: {g!r} k=4 "
                f"rep={report.representative.label()} betti={report.betti}"
            )
            checked += 1
    print(f"ACCEPTANCE 5 PASS: every k=4 component is contractible "
          f"({checked} components)")


def test_criterion_6_cycle_to_cycle_loops_bounded():
    checked = 0
    for n in range(3, 9):
        for k in range(3, 9):
            skeleton = build_hom_skeleton(cycle_graph(n), k)
            for component in skeleton_components(skeleton):
                pair = betti(build_two_skeleton(skeleton, component))
                assert pair.b0 == 1
                assert pair.b1 <= 1, f"n={n} k={k} betti={pair}"
                checked += 1
    print(f"ACCEPTANCE 6 PASS: every component of Hom(C_n, C_k) for "
          f"3 <= n,k <= 8 has b1 <= 1 ({checked} components)")


def _sampled_pairs(corpus, k: int, count: int, rng: random.Random):
    """Deterministic stream of (hom, lattice point) pairs for one k class."""
    instances = []
    for g in corpus:
        homs = enumerate_homs(g, k)
        if homs:
            instances.append((g, homs))
    produced = 0
    while produced < count:
        g, homs = instances[rng.randrange(len(instances))]
        f = homs[rng.randrange(len(homs))]
        if rng.random() < 0.25:
            point = condensation_sample_point(f, rng)
            if point is None:
                continue
        else:
            shift = rng.choice((0, 0, 1, -1))
            point = random_walk_point(
                f, rng, steps=rng.randint(0, 8), start_shift=shift
            )
        produced += 1
        yield f, point


def _adjacent_homs(f):
    """All homomorphisms one move away, constructed directly."""
    g, k = f.graph, f.k
    out = []
    for u in range(g.vertex_count):
        allowed = None
        for w in g.neighbors(u):
            near = {(f.values[w] + 1) % k, (f.values[w] - 1) % k}
            allowed = near if allowed is None else allowed & near
        if allowed is None:
            allowed = set(range(k))
        for value in sorted(allowed - {f.values[u]}):
            out.append(f.with_value(u, value))
    return out


def test_criterion_7_covering_property_suite(corpus):
    rng = random.Random(20240901)
    per_class = 1000
    for k in CORPUS_KS:
        for f, a in _sampled_pairs(corpus, k, per_class, rng):
            n = f.graph.vertex_count
            assert in_shift_lattice(f, a)
            p = project(f, a)
            d_f = orient(f)
            d_p = orient(p)

            # arc formula on every arc of the orientation
            for u, v in d_f.arcs:
                diff = (p.values[v] - p.values[u]) % k
                assert a[u] in (a[v], a[v] + 1)
                assert diff == (1 if a[u] == a[v] else k - 1)

            # moves are exactly the sources and sinks of the projection
            up, down = lattice_moves(f, a)
            assert up == frozenset(v for v in range(n) if is_source(d_p, v))
            assert down == frozenset(v for v in range(n) if is_sink(d_p, v))

            # negation transports the point into the projection's lattice
            g2, c = negate_transport(f, a)
            assert in_shift_lattice(g2, c)
            assert project(g2, c).values == f.values

            # directed-cycle vertex sets agree
            assert vertices_on_directed_cycles(d_p) == vertices_on_directed_cycles(d_f)

            # unique edge lifting: each neighbor hom has exactly one lift
            for h in _adjacent_homs(p):
                lifts = 0
                for u in range(n):
                    for delta in (1, -1):
                        b = a[:u] + (a[u] + delta,) + a[u + 1:]
                        if in_shift_lattice(f, b) and project(f, b).values == h.values:
                            lifts += 1
                assert lifts == 1, f"{lifts} lifts for {h.label()} at {a}"
    print(f"ACCEPTANCE 7 PASS: covering-property suite, {per_class} sampled "
          f"(f, a) pairs per k class, k in {{3,5,6,7}}")


def test_criterion_8_cover_quotient_matches_components(corpus, skeletons):
    checked = 0
    for g in corpus:
        for k in CORPUS_KS:
            skeleton, components = skeletons.get(g, k)
            for component in components:
                f = skeleton.homs[component[0]]
                classes = enumerate_cover_quotient(f)
                projected = [h.values for _, h in classes]
                assert len(set(projected)) == len(projected), "projection not injective"
                assert set(projected) == {skeleton.homs[i].values for i in component}
                checked += 1
    print(f"ACCEPTANCE 8 PASS: cover quotient reproduces every move-graph "
          f"component exactly ({checked} components)")


def test_criterion_9_norm_descent(corpus):
    rng = random.Random(987654321)
    instances = []
    for g in corpus:
        for k in CORPUS_KS:
            homs = enumerate_homs(g, k)
            if homs:
                instances.append((g, k, homs))
    checked = 0
    while checked < 1000:
        g, k, homs = instances[rng.randrange(len(instances))]
        f = homs[rng.randrange(len(homs))]
        a = random_walk_point(f, rng, steps=rng.randint(0, 8))
        norm = sum(abs(x) for x in a)
        assert norm <= 8
        assert in_universal_cover(f, a)
        path = descend_to_origin(f, a)
        assert len(path) == norm + 1
        norms = [sum(abs(x) for x in p) for p in path]
        assert all(n1 - n2 == 1 for n1, n2 in zip(norms, norms[1:]))
        assert norms[-1] == 0
        assert all(in_universal_cover(f, p) for p in path)
        checked += 1
    print("ACCEPTANCE 9 PASS: norm descent verified on 1000 sampled "
          "universal-cover points of norm <= 8")


def test_corpus_is_the_expected_size(corpus):
    by_vertices = {}
    for g in corpus:
        by_vertices[g.vertex_count] = by_vertices.get(g.vertex_count, 0) + 1
        assert len(g.edges) <= 9
    assert by_vertices == {2: 1, 3: 2, 4: 6, 5: 20, 6: 80}
    assert len(corpus) == 109
