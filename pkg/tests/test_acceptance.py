"""End-to-end acceptance checks with wall-time bounds.

Every numeric assertion is exact; time bounds are generous ceilings meant
to catch algorithmic regressions, not to benchmark.
"""

import random
import time
from fractions import Fraction

import pytest

from tropgc import (
    WeightDatum,
    apply_permutation,
    build_cellular_complex,
    build_graph_complex,
    build_relative_complex,
    compare_up_to_symmetry,
    decomposition_report,
    e1_relative_check,
    enumerate_chambers,
    enumerate_stable_graphs,
    feasible_point,
    filtered_from_raw,
    homology,
    make_floor,
    make_heavy_light,
    make_minimal,
    max_edges,
    page_dim,
    page_table,
    signature,
    split_AB,
)
from tropgc.graphs import MarkedGraph, canonicalize, is_stable

from .oracles import canonical_key, enumerate_classes

EPS = Fraction(1, 100)
CLASSICAL = {n: WeightDatum(1, (Fraction(1),) * n) for n in (1, 2, 3, 4)}
FIVE_CHAMBER_RAW = [
    WeightDatum(1, (Fraction(1, 3), Fraction(1, 3), Fraction(1, 3) - EPS)),
    WeightDatum(1, (Fraction(4, 9) - EPS,) * 3),
    WeightDatum(1, (Fraction(14, 27) - EPS, Fraction(12, 27),
                    Fraction(14, 27))),
    WeightDatum(1, (Fraction(99, 100), Fraction(12, 27), Fraction(14, 27))),
    CLASSICAL[3],
]
FLOOR_G2_RAW = [make_minimal(2, 3), make_floor(2, 3, 3),
                WeightDatum(2, (Fraction(1),) * 3)]

THETA_TAIL = [
    MarkedGraph((0, 0, 0, 0, 0),
                ((0, 1), (1, 2), (1, 3), (2, 3), (2, 4), (3, 4)), legs)
    for legs in [(4, 0, 0), (0, 4, 0), (0, 0, 4)]
]
DOUBLE_BRANCH = [
    MarkedGraph((0, 0, 0, 0, 0),
                ((0, 1), (0, 2), (1, 3), (2, 3), (2, 4), (3, 4)), legs)
    for legs in [(4, 0, 1), (0, 4, 1), (0, 1, 4)]
]


class Stopwatch:
    def __init__(self, bound: float):
        self.bound = bound
        self.start = time.monotonic()

    def check(self):
        elapsed = time.monotonic() - self.start
        assert elapsed < self.bound, \
            f"took {elapsed:.1f}s, bound is {self.bound}s"


def test_chamber_census_counts():
    watch = Stopwatch(1.0)
    assert len(enumerate_chambers(1, 2).chambers) == 2
    assert len(enumerate_chambers(1, 2).orbits) == 2
    assert len(enumerate_chambers(1, 3).chambers) == 9
    assert len(enumerate_chambers(1, 3).orbits) == 5
    assert len(enumerate_chambers(0, 3).chambers) == 1
    watch.check()


def test_symmetrized_comparison_and_full_exhaustion():
    watch = Stopwatch(120.0)
    a = WeightDatum(1, (Fraction(12, 27), Fraction(14, 27), 1 - EPS))
    b = WeightDatum(1, (Fraction(14, 27) - EPS, Fraction(12, 27),
                        Fraction(14, 27)))
    res = compare_up_to_symmetry(a, b)
    assert res.relation == "Greater"
    moved = signature(apply_permutation(res.witness, a))
    target = signature(b)
    assert all(not q or p for p, q in zip(moved.signs, target.signs))

    half = Fraction(1, 2)
    big = WeightDatum(1, (half + 2 * EPS,) + (half - EPS,) * 6 + (2 * EPS,))
    small = WeightDatum(1, (half + EPS,) * 4 + (EPS,) * 4)
    counters: dict[str, int] = {}
    res8 = compare_up_to_symmetry(big, small, prune=False, counters=counters)
    assert res8.relation == "Incomparable"
    assert counters == {"permutations": 40320,
                        "subset_comparisons": 40320 * 247}
    watch.check()


def test_top_weight_cohomology_of_m13_and_m14():
    watch = Stopwatch(5.0)
    rep3 = homology(build_graph_complex(1, CLASSICAL[3]))
    assert rep3.betti == {-1: 0, 0: 0, 1: 1}
    labels = {(r["weight"], r["degree"]): r["dim"] for r in rep3.topweight}
    assert labels == {(6, 3): 1, (6, 4): 0, (6, 5): 0}

    rep4 = homology(build_graph_complex(1, CLASSICAL[4]))
    assert rep4.betti[2] == 3
    assert all(v == 0 for k, v in rep4.betti.items() if k != 2)
    watch.check()


def test_five_chamber_spectral_sequence():
    watch = Stopwatch(5.0)
    f = filtered_from_raw(1, FIVE_CHAMBER_RAW)
    assert page_table(f, 5).nonzero() == {(1, 0): 1}
    report = decomposition_report(f)
    assert report.ok
    for row in report.rows:
        assert row["einfinity_sum"] == row["betti"]
    watch.check()


def test_graph_cellular_and_split_homology_agree():
    watch = Stopwatch(30.0)
    for n in (2, 3, 4):
        a = CLASSICAL[n]
        graph_betti = homology(build_graph_complex(1, a)).betti
        cell = build_cellular_complex(1, a)
        cell_betti = homology(cell).betti
        a_part, b_part = split_AB(cell)
        a_betti = homology(a_part).betti
        for k, v in homology(b_part).betti.items():
            assert v == 0
        for k, v in graph_betti.items():
            assert cell_betti[k + 1] == v
            assert a_betti[k + 1] == v
    watch.check()


def test_relative_floor_homology_vanishes():
    watch = Stopwatch(5.0)
    rel = build_relative_complex(1, CLASSICAL[3], make_floor(1, 3, 3))
    rep = homology(rel)
    assert all(v == 0 for v in rep.betti.values())
    assert all(row["dim"] == 0 for row in rep.delta)
    watch.check()


@pytest.fixture(scope="module")
def floor_g2():
    return filtered_from_raw(2, FLOOR_G2_RAW)


def test_genus_two_degree_two_generators(floor_g2):
    watch = Stopwatch(600.0)
    basis = build_graph_complex(2, WeightDatum(2, (Fraction(1),) * 3)).basis(2)
    basis_set = set(basis)
    levels = {cg: floor_g2.level_row(2)[basis.index(cg)] for cg in basis}
    for graph in DOUBLE_BRANCH:
        cg = canonicalize(graph)[0]
        assert cg in basis_set and not cg.has_odd_edge_automorphism
        assert levels[cg] == 1
    for graph in THETA_TAIL:
        cg = canonicalize(graph)[0]
        assert cg in basis_set and not cg.has_odd_edge_automorphism
        assert levels[cg] == 3
    watch.check()


def test_genus_two_page_two_class_exists(floor_g2):
    watch = Stopwatch(600.0)
    assert page_dim(floor_g2, 2, 3, -1) >= 1
    watch.check()


def test_genus_two_sixth_cohomology_lower_bound(floor_g2):
    """Expected nonvanishing certificate for the sixth cohomology of the
    genus-2, 3-marking moduli space via the floor filtration.

    This is known to fail over Q: the alternating six-generator element in
    filtration level 3 is not an absolute cycle. Its boundary is twice a
    five-edge class, which vanishes mod 2 but not rationally, so the class
    supports a nonzero differential on page 2 and dies entering page 3.
    The page-3 slot is exactly zero and no lower bound is emitted; the
    weaker page-2 statement is covered by the neighbouring green test.
    """
    dim_page3 = page_dim(floor_g2, 3, 3, -1)
    report = decomposition_report(floor_g2)
    labels = [row["label"] for row in report.lower_bounds]
    assert dim_page3 >= 1, (
        "page-3 slot (p,q)=(3,-1) is empty: the candidate cycle has "
        "boundary 2x a five-edge class (nonzero over Q, zero mod 2), "
        f"so dim E^3 = {dim_page3}")
    assert any("H^6(M_{2,3};Q) >= 1" in lab for lab in labels)


def test_filtration_independence():
    watch = Stopwatch(10.0)
    five = decomposition_report(filtered_from_raw(1, FIVE_CHAMBER_RAW))
    heavy = decomposition_report(filtered_from_raw(
        1, [make_heavy_light(1, 3, m) for m in (0, 1, 2)]))
    sums = lambda rep: {r["degree"]: r["einfinity_sum"] for r in rep.rows}
    assert sums(five) == sums(heavy)
    watch.check()


class TestPropertySuite:
    def test_boundaries_square_to_zero(self):
        for g, a in ((1, CLASSICAL[2]), (1, CLASSICAL[3]), (1, CLASSICAL[4]),
                     (1, make_minimal(1, 3)), (2, make_floor(2, 3, 3))):
            for cx in (build_graph_complex(g, a),
                       build_cellular_complex(g, a)):
                for k in cx.degrees:
                    assert cx.boundary(k).matmul(cx.boundary(k + 1)).is_zero()

    def test_canonical_form_stable_under_relabeling(self):
        rng = random.Random(97)
        instances = [cg.graph for cg in
                     enumerate_stable_graphs(1, CLASSICAL[3], 2).classes]
        instances += [cg.graph for cg in
                      enumerate_stable_graphs(1, CLASSICAL[3], 3).classes]
        for graph in instances:
            reference, _ = canonicalize(graph)
            assert canonicalize(reference.graph)[0] == reference
            for _ in range(200):
                perm = list(range(graph.num_vertices))
                rng.shuffle(perm)
                weights = [0] * graph.num_vertices
                for old, w in enumerate(graph.weights):
                    weights[perm[old]] = w
                order = list(range(graph.num_edges))
                rng.shuffle(order)
                moved = MarkedGraph(
                    tuple(weights),
                    tuple((perm[graph.edges[k][0]], perm[graph.edges[k][1]])
                          for k in order),
                    tuple(perm[v] for v in graph.legs))
                assert canonicalize(moved)[0] == reference

    def test_stability_determined_by_signature(self):
        rng = random.Random(19)
        pool = [cg.graph for cg in
                enumerate_stable_graphs(1, CLASSICAL[3], 2).classes]
        pool += [cg.graph for cg in
                 enumerate_stable_graphs(1, CLASSICAL[3], 3).classes]
        for _ in range(40):
            entries = tuple(Fraction(rng.randint(1, 30), 30)
                            for _ in range(3))
            a = WeightDatum(1, entries)
            twin = feasible_point(signature(a))
            assert signature(twin) == signature(a)
            for graph in pool:
                assert is_stable(graph, 1, twin) == is_stable(graph, 1, a)

    def test_enumeration_matches_oracle(self):
        cases = [(0, 3), (1, 1), (1, 2), (1, 3)]
        for g, n in cases:
            a = WeightDatum(g, (Fraction(1),) * n)
            for m in range(0, 5):
                want = set(enumerate_classes(g, a.entries, m))
                if m > max_edges(g, n):
                    assert want == set()
                    continue
                got = {canonical_key(cg.graph.weights, cg.graph.edges,
                                     cg.graph.legs)
                       for cg in enumerate_stable_graphs(g, a, m).classes}
                assert got == want, (g, n, m)
        a22 = WeightDatum(2, (Fraction(1),) * 2)
        for m in range(0, 4):
            got = {canonical_key(cg.graph.weights, cg.graph.edges,
                                 cg.graph.legs)
                   for cg in enumerate_stable_graphs(2, a22, m).classes}
            assert got == set(enumerate_classes(2, a22.entries, m)), (2, 2, m)

    def test_partial_order_axioms_exhaustively(self):
        census = enumerate_chambers(1, 3)
        reps = [(feasible_point(s), k)
                for k, orbit in enumerate(census.orbits) for s in orbit]
        n = len(reps)
        rel = {}
        for i, (a, ka) in enumerate(reps):
            for j, (b, kb) in enumerate(reps):
                r = compare_up_to_symmetry(a, b)
                rel[i, j] = r.relation
                assert (r.relation == "Equal") == (ka == kb)
                assert (r.witness is None) == (r.relation == "Incomparable")
        flip = {"Less": "Greater", "Greater": "Less",
                "Equal": "Equal", "Incomparable": "Incomparable"}
        for i in range(n):
            for j in range(n):
                assert rel[j, i] == flip[rel[i, j]]
                if rel[i, j] != "Less":
                    continue
                for k in range(n):
                    if rel[j, k] == "Less":
                        assert rel[i, k] == "Less"

    def test_first_page_equals_stepwise_relative_homology(self, floor_g2):
        filtrations = [
            filtered_from_raw(1, FIVE_CHAMBER_RAW),
            filtered_from_raw(1, [make_heavy_light(1, 3, m)
                                  for m in (0, 1, 2)]),
            filtered_from_raw(1, [CLASSICAL[3]]),
            floor_g2,
        ]
        for f in filtrations:
            assert e1_relative_check(f)
