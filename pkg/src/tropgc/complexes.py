"""Chain complexes of stable graphs and their homology.

Four complexes are built here, all with exact rational boundary matrices:

* the graph complex of a weight datum: pure stable graphs, degree
  |E| - 2g, boundary the signed sum of non-loop edge contractions;
* the cellular chain complex of the tropical moduli space: all stable
  graphs, degree |E| - 1 (with a single degree -1 augmentation generator),
  boundary the signed sum of all edge contractions, loops included;
* its splitting into the loopless pure part and the complementary part;
* the relative graph complex of a nested pair of weight data.

The boundary of a generator with canonical edges e_1 < ... < e_m is
sum_i (-1)^i [G/e_i], each contraction canonicalized; the coefficient picks
up the sign of the edge relabeling, and contractions landing on a class
with an odd edge automorphism are dropped. The composite of two boundaries
is asserted to vanish at build time.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .chambers import (DomainError, WeightDatum, compare_signatures,
                       format_rational, signature)
from .graphs import (CanonicalGraph, canonicalize, contract_edge,
                     edge_map_sign, has_loops, is_pure, is_stable)
from .enumeration import (CELLULAR, GRAPH_COMPLEX, degree_range,
                          generator_basis)
from .linalg import RationalMatrix, rank

GRAPH = "graph"
CELLULAR_KIND = "cellular"
A_PART = "a-part"
B_PART = "b-part"
RELATIVE = "relative"


@dataclass
class ChainComplex:
    """Per-degree generator bases and boundary matrices over Q."""

    kind: str
    g: int
    weights: WeightDatum
    degrees: tuple[int, ...]
    bases: tuple[tuple[CanonicalGraph, ...], ...]
    boundaries: tuple[RationalMatrix, ...]  # boundaries[i]: C_{degrees[i]} -> C_{degrees[i]-1}

    def __post_init__(self):
        for i, k in enumerate(self.degrees):
            mat = self.boundaries[i]
            if mat.cols != len(self.bases[i]):
                raise AssertionError("boundary column count mismatch")
            expected_rows = self.dim(k - 1)
            if mat.rows != expected_rows:
                raise AssertionError("boundary row count mismatch")
        for i, k in enumerate(self.degrees):
            if k - 1 in self.degrees:
                below = self.boundary(k - 1)
                if not below.matmul(self.boundaries[i]).is_zero():
                    raise AssertionError(
                        f"boundary squared is nonzero from degree {k}")

    def _index(self, k: int) -> Optional[int]:
        if self.degrees and self.degrees[0] <= k <= self.degrees[-1]:
            return k - self.degrees[0]
        return None

    def basis(self, k: int) -> tuple[CanonicalGraph, ...]:
        i = self._index(k)
        return self.bases[i] if i is not None else ()

    def dim(self, k: int) -> int:
        return len(self.basis(k))

    def boundary(self, k: int) -> RationalMatrix:
        """The map C_k -> C_{k-1}; zero-shaped outside the stored range."""
        i = self._index(k)
        if i is None:
            return RationalMatrix.zero(self.dim(k - 1), self.dim(k))
        return self.boundaries[i]


def _boundary_entries(basis_high: tuple[CanonicalGraph, ...],
                      row_of: dict[str, int],
                      contract_loops: bool,
                      sign_flip: bool = False) -> dict[tuple[int, int], Fraction]:
    entries: dict[tuple[int, int], Fraction] = {}
    for col, cg in enumerate(basis_high):
        graph = cg.graph
        for i in range(graph.num_edges):
            if graph.is_loop(i) and not contract_loops:
                continue
            contracted = contract_edge(graph, i)
            target, emap = canonicalize(contracted)
            if target.has_odd_edge_automorphism:
                continue
            row = row_of.get(target.encoding)
            if row is None:
                continue  # component deleted (relative complex)
            coeff = Fraction((-1) ** (i + 1 + (1 if sign_flip else 0))
                             * edge_map_sign(emap))
            key = (row, col)
            entries[key] = entries.get(key, Fraction(0)) + coeff
    return entries


def _assemble(kind: str, g: int, a: WeightDatum, degrees: list[int],
              bases: list[tuple[CanonicalGraph, ...]],
              contract_loops: bool, sign_flip: bool = False) -> ChainComplex:
    boundaries = []
    for i, k in enumerate(degrees):
        rows = len(bases[i - 1]) if i > 0 else 0
        if i == 0:
            boundaries.append(RationalMatrix.zero(0, len(bases[0])))
            continue
        row_of = {cg.encoding: r for r, cg in enumerate(bases[i - 1])}
        entries = _boundary_entries(bases[i], row_of, contract_loops, sign_flip)
        boundaries.append(RationalMatrix(rows, len(bases[i]), entries))
    return ChainComplex(kind, g, a, tuple(degrees),
                        tuple(bases), tuple(boundaries))


def build_graph_complex(g: int, a: WeightDatum,
                        sign_flip: bool = False) -> ChainComplex:
    """The graph complex of (g, a): pure stable graphs, loop terms dropped."""
    degrees = list(degree_range(g, a.n, GRAPH_COMPLEX))
    bases = [generator_basis(g, a, k, GRAPH_COMPLEX) for k in degrees]
    return _assemble(GRAPH, g, a, degrees, bases,
                     contract_loops=False, sign_flip=sign_flip)


def build_cellular_complex(g: int, a: WeightDatum) -> ChainComplex:
    """Cellular chains of the tropical moduli space; reduced via the single
    degree -1 generator. Loop contractions are genuine faces here."""
    degrees = list(degree_range(g, a.n, CELLULAR))
    bases = [generator_basis(g, a, k, CELLULAR) for k in degrees]
    if all(not b for k, b in zip(degrees, bases) if k >= 0):
        raise DomainError("the moduli space is empty: no stable graph has an edge")
    return _assemble(CELLULAR_KIND, g, a, degrees, bases, contract_loops=True)


def split_AB(c: ChainComplex) -> tuple[ChainComplex, ChainComplex]:
    """Split cellular chains into the loopless pure part and the rest.

    Both parts are closed under the boundary (checked), and their direct
    sum recovers the input complex blockwise.
    """
    if c.kind != CELLULAR_KIND:
        raise DomainError("only a cellular complex splits this way")

    def is_a(cg: CanonicalGraph) -> bool:
        return is_pure(cg.graph) and not has_loops(cg.graph)

    a_bases, b_bases, a_mats, b_mats = [], [], [], []
    prev_split: Optional[tuple[list[int], list[int]]] = None
    for i, k in enumerate(c.degrees):
        basis = c.bases[i]
        a_idx = [j for j, cg in enumerate(basis) if is_a(cg)]
        b_idx = [j for j, cg in enumerate(basis) if not is_a(cg)]
        a_bases.append(tuple(basis[j] for j in a_idx))
        b_bases.append(tuple(basis[j] for j in b_idx))
        if i == 0:
            a_mats.append(RationalMatrix.zero(0, len(a_idx)))
            b_mats.append(RationalMatrix.zero(0, len(b_idx)))
        else:
            pa, pb = prev_split
            row_a = {j: r for r, j in enumerate(pa)}
            row_b = {j: r for r, j in enumerate(pb)}
            col_a = {j: r for r, j in enumerate(a_idx)}
            col_b = {j: r for r, j in enumerate(b_idx)}
            ent_a, ent_b = {}, {}
            for (row, col), v in c.boundaries[i].entries().items():
                if col in col_a:
                    if row not in row_a:
                        raise AssertionError(
                            "loopless pure part is not boundary-closed")
                    ent_a[(row_a[row], col_a[col])] = v
                else:
                    if row not in row_b:
                        raise AssertionError(
                            "loop-or-weight part is not boundary-closed")
                    ent_b[(row_b[row], col_b[col])] = v
            a_mats.append(RationalMatrix(len(pa), len(a_idx), ent_a))
            b_mats.append(RationalMatrix(len(pb), len(b_idx), ent_b))
        prev_split = (a_idx, b_idx)
    a_part = ChainComplex(A_PART, c.g, c.weights, c.degrees,
                          tuple(a_bases), tuple(a_mats))
    b_part = ChainComplex(B_PART, c.g, c.weights, c.degrees,
                          tuple(b_bases), tuple(b_mats))
    return a_part, b_part


def build_relative_complex(g: int, upper: WeightDatum,
                           lower: WeightDatum) -> ChainComplex:
    """Graph complex generators stable for upper but not lower, with
    boundary components into lower-stable classes deleted."""
    rel = compare_signatures(signature(lower), signature(upper))
    if rel.relation not in ("Equal", "Less"):
        raise DomainError(
            f"weight data are not nested: lower compares as {rel.relation}")
    degrees = list(degree_range(g, upper.n, GRAPH_COMPLEX))
    bases = []
    for k in degrees:
        full = generator_basis(g, upper, k, GRAPH_COMPLEX)
        bases.append(tuple(cg for cg in full
                           if not is_stable(cg.graph, g, lower)))
    return _assemble(RELATIVE, g, upper, degrees, bases, contract_loops=False)


@dataclass
class HomologyReport:
    """Betti numbers plus the labels they transport to."""

    kind: str
    g: int
    weights: WeightDatum
    degrees: tuple[int, ...]
    dims: dict[int, int]
    betti: dict[int, int]
    topweight: list[dict]  # graph complexes only
    delta: list[dict]


def moduli_label(g: int, a: WeightDatum) -> str:
    if all(x == 1 for x in a.entries):
        return f"M_{{{g},{a.n}}}"
    weights = ",".join(format_rational(x) for x in a.entries)
    return f"M_{{{g},A}} with A=({weights})"


def homology(c: ChainComplex) -> HomologyReport:
    """Betti numbers by rank-nullity; graph complexes also carry the
    top-weight cohomology and tropical moduli labels."""
    dims = {k: c.dim(k) for k in c.degrees}
    ranks = {k: rank(c.boundary(k)) for k in c.degrees}
    betti = {}
    for k in c.degrees:
        betti[k] = dims[k] - ranks[k] - ranks.get(k + 1, 0)
        if betti[k] < 0:
            raise AssertionError("negative Betti number")
    g, a = c.g, c.weights
    topweight: list[dict] = []
    delta: list[dict] = []
    if c.kind == GRAPH:
        w = 6 * g - 6 + 2 * a.n
        for k in c.degrees:
            topweight.append({"degree": 4 * g - 6 + 2 * a.n - k,
                              "weight": w, "dim": betti[k]})
            delta.append({"degree": k + 2 * g - 1, "dim": betti[k]})
    elif c.kind in (CELLULAR_KIND, A_PART, B_PART):
        for k in c.degrees:
            delta.append({"degree": k, "dim": betti[k]})
    elif c.kind == RELATIVE:
        for k in c.degrees:
            delta.append({"degree": k + 2 * g - 1, "dim": betti[k]})
    return HomologyReport(c.kind, g, a, c.degrees, dims, betti,
                          topweight, delta)
