"""Weight data, walls, chamber signatures, and the symmetrized order."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from tropgc import (
    ChamberSignature,
    DomainError,
    DomainGapWarning,
    WeightDatum,
    apply_permutation,
    compare_signatures,
    compare_up_to_symmetry,
    enumerate_chambers,
    feasible_point,
    format_rational,
    identity_permutation,
    is_feasible,
    make_F,
    make_floor,
    make_heavy_light,
    make_minimal,
    parse_rational,
    parse_weights,
    permute_signature,
    signature,
    wall_set,
)

EPS = Fraction(1, 100)


def datum(g: int, *entries) -> WeightDatum:
    return WeightDatum(g, tuple(Fraction(e) for e in entries))


class TestRationalParsing:
    def test_round_trip(self):
        for text in ("1/3", "7", "33/100", "1"):
            assert format_rational(parse_rational(text)) == text

    def test_normalization(self):
        assert parse_rational("2/4") == Fraction(1, 2)

    @pytest.mark.parametrize("bad", ["", "1/0", "1.5", "a", "1 /2", "--3"])
    def test_rejects_bad_literals(self, bad):
        with pytest.raises(ValueError):
            parse_rational(bad)

    def test_parse_weights(self):
        assert parse_weights("1,1/2, 3/4") == (
            Fraction(1), Fraction(1, 2), Fraction(3, 4))
        with pytest.raises(ValueError):
            parse_weights("")


class TestWeightDatum:
    def test_valid(self):
        a = datum(1, 1, 1, 1)
        assert (a.g, a.n) == (1, 3)

    @pytest.mark.parametrize("g,entries", [
        (1, ()),
        (-1, (Fraction(1),)),
        (1, (Fraction(0), Fraction(1))),
        (1, (Fraction(3, 2),)),
        (0, (Fraction(1, 2), Fraction(1, 2), Fraction(1, 2))),
    ])
    def test_domain_errors(self, g, entries):
        with pytest.raises(DomainError):
            WeightDatum(g, entries)

    def test_gap_warning(self):
        with pytest.warns(DomainGapWarning):
            datum(0, 1, 1, "9/10")


class TestWallSet:
    @pytest.mark.parametrize("g,n,count", [
        (1, 2, 1), (1, 3, 4), (1, 8, 247), (2, 3, 4),
        (0, 4, 6), (0, 5, 20),
    ])
    def test_counts(self, g, n, count):
        assert len(wall_set(g, n).subsets) == count

    def test_genus_zero_excludes_large_subsets(self):
        ws = wall_set(0, 5)
        assert all(2 <= len(s) <= 3 for s in ws.subsets)


class TestSignature:
    def test_classical_all_plus(self):
        sig = signature(datum(1, 1, 1, 1))
        assert all(sig.signs)

    def test_minimal_chamber_all_minus(self):
        sig = signature(datum(1, "1/3", "1/3", "33/100"))
        assert not any(sig.signs)

    def test_wall_points_count_as_minus(self):
        sig = signature(datum(1, "1/2", "1/2", "1/2"))
        assert sig.sign({1, 2}) == "Minus"
        assert sig.sign({1, 3}) == "Minus"
        assert sig.sign({2, 3}) == "Minus"
        assert sig.sign({1, 2, 3}) == "Plus"

    def test_non_monotone_pattern_unrepresentable(self):
        ws = wall_set(1, 3)
        signs = tuple(s == frozenset({1, 2}) for s in ws.subsets)
        with pytest.raises(ValueError):
            ChamberSignature(ws, signs)


class TestApplyPermutation:
    def test_three_cycle(self):
        a = datum(1, "1/100", "2/3", "2/3")
        assert apply_permutation((2, 3, 1), a).entries == (
            Fraction(2, 3), Fraction(2, 3), Fraction(1, 100))

    def test_identity(self):
        a = datum(1, "1/100", "2/3", "2/3")
        assert apply_permutation(identity_permutation(3), a) == a

    def test_introduction_example(self):
        a = datum(1, Fraction(14, 27) - EPS, "12/27", "14/27")
        assert apply_permutation((2, 3, 1), a).entries == (
            Fraction(12, 27), Fraction(14, 27), Fraction(14, 27) - EPS)

    def test_signature_equivariance(self):
        a = datum(1, "1/100", "2/3", "2/3")
        sigma = (2, 3, 1)
        assert signature(apply_permutation(sigma, a)) == \
            permute_signature(sigma, signature(a))


def _signs_dominated(lo: ChamberSignature, hi: ChamberSignature) -> bool:
    return all(not p or q for p, q in zip(lo.signs, hi.signs))


def _witness_valid(a: WeightDatum, b: WeightDatum, res) -> bool:
    if res.relation == "Incomparable":
        return res.witness is None
    moved = signature(apply_permutation(res.witness, a))
    target = signature(b)
    if res.relation == "Equal":
        return moved == target
    if res.relation == "Less":
        return _signs_dominated(moved, target)
    return _signs_dominated(target, moved)


class TestCompareSignatures:
    def test_minimal_below_maximal(self):
        lo = signature(make_minimal(1, 3))
        hi = signature(datum(1, 1, 1, 1))
        res = compare_signatures(lo, hi)
        assert res.relation == "Less"
        assert res.witness == (1, 2, 3)

    def test_identical(self):
        s = signature(datum(1, 1, 1, 1))
        assert compare_signatures(s, s).relation == "Equal"

    def test_opposite_pair_signs_incomparable(self):
        census = enumerate_chambers(1, 3)
        ch2 = [s for s in census.chambers
               if s.is_plus({1, 2}) and not s.is_plus({1, 3})]
        ch3 = [s for s in census.chambers
               if s.is_plus({1, 3}) and not s.is_plus({1, 2})]
        assert ch2 and ch3
        res = compare_signatures(ch2[0], ch3[0])
        assert res.relation == "Incomparable"
        assert res.witness is None


class TestCompareUpToSymmetry:
    def test_introduction_pair_greater(self):
        a = datum(1, "12/27", "14/27", Fraction(1) - EPS)
        b = datum(1, Fraction(14, 27) - EPS, "12/27", "14/27")
        res = compare_up_to_symmetry(a, b)
        assert res.relation == "Greater"
        assert _witness_valid(a, b, res)

    def test_equal_with_identity_witness(self):
        a = datum(1, 1, 1, 1)
        res = compare_up_to_symmetry(a, a)
        assert res.relation == "Equal"
        assert res.witness == (1, 2, 3)

    def test_eight_markings_incomparable(self):
        half = Fraction(1, 2)
        a = WeightDatum(1, (half + 2 * EPS,) + (half - EPS,) * 6 + (2 * EPS,))
        b = WeightDatum(1, (half + EPS,) * 4 + (EPS,) * 4)
        res = compare_up_to_symmetry(a, b)
        assert res.relation == "Incomparable"
        assert res.witness is None


class TestCensus:
    @pytest.mark.parametrize("g,n,chambers,orbits", [
        (1, 2, 2, 2), (1, 3, 9, 5), (0, 3, 1, 1),
    ])
    def test_counts(self, g, n, chambers, orbits):
        census = enumerate_chambers(g, n)
        assert len(census.chambers) == chambers
        assert len(census.orbits) == orbits

    def test_orbit_sizes(self):
        census = enumerate_chambers(1, 3)
        assert sorted(len(o) for o in census.orbits) == [1, 1, 1, 3, 3]

    def test_all_census_chambers_inhabited(self):
        census = enumerate_chambers(1, 3)
        assert len(set(census.chambers)) == 9
        for s in census.chambers:
            point = feasible_point(s)
            assert point is not None
            assert signature(point) == s


class TestFeasibility:
    def test_all_plus_inhabited(self):
        s = signature(datum(1, 1, 1, 1))
        assert is_feasible(s)
        point = feasible_point(s)
        assert signature(point) == s

    def test_genus_zero_all_pairs_minus_empty(self):
        ws = wall_set(0, 4)
        s = ChamberSignature(ws, (False,) * len(ws.subsets))
        assert not is_feasible(s)
        assert feasible_point(s) is None


class TestConstructors:
    def test_floor_two_is_classical(self):
        assert signature(make_floor(1, 3, 2)) == signature(datum(1, 1, 1, 1))

    def test_floor_n_is_F(self):
        assert signature(make_floor(1, 3, 3)) == signature(make_F(1, 3))

    def test_heavy_light_top_is_classical(self):
        assert signature(make_heavy_light(1, 4, 3)) == \
            signature(datum(1, 1, 1, 1, 1))

    def test_minimal_is_all_minus(self):
        assert not any(signature(make_minimal(1, 3)).signs)

    def test_F_pairs_below_total_above(self):
        sig = signature(make_F(1, 3))
        assert sig.signs == signature(datum(1, "1/2", "1/2", "1/2")).signs


@pytest.fixture(scope="module")
def representatives():
    census = enumerate_chambers(1, 3)
    return [(feasible_point(s), k)
            for k, orbit in enumerate(census.orbits) for s in orbit]


class TestPartialOrderAxioms:
    def test_reflexive_and_orbit_equality(self, representatives):
        for a, ka in representatives:
            for b, kb in representatives:
                res = compare_up_to_symmetry(a, b)
                assert _witness_valid(a, b, res)
                assert (res.relation == "Equal") == (ka == kb)

    def test_converse_relation(self, representatives):
        flip = {"Less": "Greater", "Greater": "Less",
                "Equal": "Equal", "Incomparable": "Incomparable"}
        for a, _ in representatives:
            for b, _ in representatives:
                fwd = compare_up_to_symmetry(a, b).relation
                assert compare_up_to_symmetry(b, a).relation == flip[fwd]

    def test_transitive(self, representatives):
        points = [a for a, _ in representatives]
        rel = {(i, j): compare_up_to_symmetry(points[i], points[j]).relation
               for i in range(len(points)) for j in range(len(points))}
        for i in range(len(points)):
            for j in range(len(points)):
                if rel[i, j] != "Less":
                    continue
                for k in range(len(points)):
                    if rel[j, k] == "Less":
                        assert rel[i, k] == "Less"


entry = st.fractions(min_value=Fraction(1, 20), max_value=1,
                     max_denominator=20)
weight_pair = st.integers(min_value=2, max_value=4).flatmap(
    lambda n: st.tuples(
        st.lists(entry, min_size=n, max_size=n),
        st.lists(entry, min_size=n, max_size=n),
    )
)


class TestRandomizedOrder:
    @settings(max_examples=100, deadline=None)
    @given(weight_pair)
    def test_witnesses_certify_relations(self, pair):
        a = WeightDatum(1, tuple(pair[0]))
        b = WeightDatum(1, tuple(pair[1]))
        res = compare_up_to_symmetry(a, b)
        assert _witness_valid(a, b, res)

    @settings(max_examples=60, deadline=None)
    @given(weight_pair)
    def test_self_comparison_is_equal(self, pair):
        a = WeightDatum(1, tuple(pair[0]))
        assert compare_up_to_symmetry(a, a).relation == "Equal"
