"""Spectral sequences of chamber-chain filtrations on graph complexes.

A chain of weight data, aligned so that consecutive signatures are nested,
filters the graph complex of its last datum by stability level: level(x) is
the first index p at which the generator x is stable. Every filtered piece
F_p is a coordinate subspace of the generator basis, so all page dimensions

    E^r_{p,q} = {x in F_p C_{p+q} : dx in F_{p-r}} / (F_{p-1} + d F_{p+r-1})

reduce to kernels and column spans of boundary submatrices. Pages stabilize
at r = max(p, N-p+1); the infinity table decomposes the Betti numbers of the
base complex degree by degree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .chambers import (DomainError, WeightDatum, apply_permutation,
                       compare_up_to_symmetry, format_rational,
                       identity_permutation, parse_rational)
from .complexes import (ChainComplex, build_graph_complex,
                        build_relative_complex, homology, moduli_label)
from .enumeration import GRAPH_COMPLEX, check_aligned, filtration_levels
from .linalg import RationalMatrix, kernel_basis, subspace_dims

Permutation = tuple[int, ...]


def _compose(outer: Permutation, inner: Permutation) -> Permutation:
    """One-line composition c with apply(c, a) = apply(inner, apply(outer, a))."""
    return tuple(outer[inner[i] - 1] for i in range(len(inner)))


def align_chain(g: int, raw: Sequence[WeightDatum]
                ) -> tuple[list[WeightDatum], list[Permutation]]:
    """Relabel each datum so the chain is nested signature by signature.

    Consecutive raw pairs must compare as Equal or Less up to symmetry; the
    returned permutations tau_p carry raw_p to the aligned datum, with the
    last datum kept as given.
    """
    if not raw:
        raise DomainError("empty weight-datum chain")
    n = len(raw)
    for a in raw:
        if a.g != g:
            raise DomainError("chain datum has mismatched genus")
    taus: list[Permutation] = [identity_permutation(raw[0].n)] * n
    aligned: list[Optional[WeightDatum]] = [None] * n
    aligned[n - 1] = raw[n - 1]
    for p in range(n - 2, -1, -1):
        res = compare_up_to_symmetry(raw[p], raw[p + 1])
        if res.relation not in ("Equal", "Less"):
            raise DomainError(
                f"chain entries {p + 1} and {p + 2} compare as {res.relation}; "
                "an aligned chain needs Equal or Less")
        taus[p] = _compose(res.witness, taus[p + 1])
        aligned[p] = apply_permutation(taus[p], raw[p])
    out = [a for a in aligned if a is not None]
    check_aligned(out)
    return out, taus


@dataclass
class FilteredComplex:
    """Graph complex of the last chain datum, graded by stability level."""

    g: int
    chain: tuple[WeightDatum, ...]
    base: ChainComplex
    levels: tuple[tuple[int, ...], ...]  # aligned with base.bases

    @property
    def num_levels(self) -> int:
        return len(self.chain)

    def level_row(self, k: int) -> tuple[int, ...]:
        i = self.base._index(k)
        return self.levels[i] if i is not None else ()


def build_filtered_complex(g: int, chain: Sequence[WeightDatum]
                           ) -> FilteredComplex:
    """Filtration of G for the last datum by an already-aligned chain."""
    chain = list(chain)
    check_aligned(chain)
    base = build_graph_complex(g, chain[-1])
    levels = []
    for i, k in enumerate(base.degrees):
        by_class = filtration_levels(g, chain, k, GRAPH_COMPLEX)
        levels.append(tuple(by_class[cg] for cg in base.bases[i]))
    f = FilteredComplex(g, tuple(chain), base, tuple(levels))
    for i, k in enumerate(base.degrees):
        below = f.level_row(k - 1)
        for (r, c) in base.boundaries[i].entries():
            if below[r] > levels[i][c]:
                raise AssertionError(
                    "boundary raises the filtration level: contraction must "
                    "preserve stability")
    return f


def filtered_from_raw(g: int, raw: Sequence[WeightDatum]) -> FilteredComplex:
    aligned, _ = align_chain(g, raw)
    return build_filtered_complex(g, aligned)


def page_dim(f: FilteredComplex, r: int, p: int, q: int) -> int:
    """Dimension of E^r_{p,q}, exact over Q."""
    if r < 0:
        raise DomainError("page index must be nonnegative")
    n_levels = f.num_levels
    if p < 1 or p > n_levels:
        return 0
    d = p + q
    dim_d = f.base.dim(d)
    if dim_d == 0:
        return 0
    lev_d = f.level_row(d)
    cols = [j for j in range(dim_d) if lev_d[j] <= p]
    if not cols:
        return 0

    # Z: elements of F_p whose boundary components above level p-r vanish.
    bnd = f.base.boundary(d)
    lev_below = f.level_row(d - 1)
    rows = [i for i in range(bnd.rows) if lev_below[i] > p - r]
    row_of = {i: a for a, i in enumerate(rows)}
    col_of = {j: b for b, j in enumerate(cols)}
    sub_entries = {(row_of[i], col_of[j]): v
                   for (i, j), v in bnd.entries().items()
                   if i in row_of and j in col_of}
    sub = RationalMatrix(len(rows), len(cols), sub_entries)
    kern = kernel_basis(sub)
    if not kern:
        return 0
    zero = Fraction(0)
    z_vecs = []
    for vec in kern:
        dense = [zero] * dim_d
        for a, j in enumerate(cols):
            dense[j] = vec[a]
        z_vecs.append(dense)

    # W: F_{p-1} plus boundaries of F_{p+r-1} in the next degree.
    w_vecs = []
    for j in range(dim_d):
        if lev_d[j] <= p - 1:
            dense = [zero] * dim_d
            dense[j] = Fraction(1)
            w_vecs.append(dense)
    above = f.base.boundary(d + 1)
    lev_above = f.level_row(d + 1)
    if above.cols:
        by_col: dict[int, list[Fraction]] = {}
        for (i, j), v in above.entries().items():
            by_col.setdefault(j, [zero] * dim_d)[i] = v
        for j in sorted(by_col):
            if lev_above[j] <= p + r - 1:
                w_vecs.append(by_col[j])
    if not w_vecs:
        return len(kern)
    dim_z, _, _, dim_int = subspace_dims(z_vecs, w_vecs)
    return dim_z - dim_int


@dataclass
class PageTable:
    """Dimensions of one page; r is None for the stable (infinity) table."""

    r: Optional[int]
    dims: dict[tuple[int, int], int]

    def nonzero(self) -> dict[tuple[int, int], int]:
        return {pq: v for pq, v in sorted(self.dims.items()) if v}


def page_table(f: FilteredComplex, r: int) -> PageTable:
    dims = {}
    for d in f.base.degrees:
        for p in range(1, f.num_levels + 1):
            dims[(p, d - p)] = page_dim(f, r, p, d - p)
    return PageTable(r, dims)


def infinity_table(f: FilteredComplex) -> PageTable:
    """E^infinity via the stabilization bound r* = max(p, N-p+1), with a
    stationarity check at r*+1."""
    n_levels = f.num_levels
    dims = {}
    for d in f.base.degrees:
        for p in range(1, n_levels + 1):
            q = d - p
            r_star = max(p, n_levels - p + 1)
            v = page_dim(f, r_star, p, q)
            if v != page_dim(f, r_star + 1, p, q):
                raise AssertionError(
                    f"page dimension not stationary at r={r_star}, "
                    f"(p,q)=({p},{q})")
            dims[(p, q)] = v
    return PageTable(None, dims)


@dataclass
class DecompositionReport:
    """Per-degree comparison of E^infinity sums against Betti numbers."""

    g: int
    chain: tuple[WeightDatum, ...]
    einfinity: PageTable
    betti: dict[int, int]
    rows: list[dict]
    topweight: list[dict]
    lower_bounds: list[dict]
    ok: bool


def decomposition_report(f: FilteredComplex) -> DecompositionReport:
    """Check Σ_p dim E^inf_{p,k-p} = Betti_k and emit top-weight labels
    plus lower-bound lines for the nonzero stable entries."""
    einf = infinity_table(f)
    betti = homology(f.base).betti
    g = f.g
    n = f.chain[-1].n
    weight = 6 * g - 6 + 2 * n
    name = moduli_label(g, f.chain[-1])
    rows, topweight = [], []
    for k in f.base.degrees:
        s = sum(einf.dims.get((p, k - p), 0)
                for p in range(1, f.num_levels + 1))
        if s != betti[k]:
            raise AssertionError(
                f"decomposition mismatch in degree {k}: pages sum to {s}, "
                f"Betti is {betti[k]}")
        degree = 4 * g - 6 + 2 * n - k
        rows.append({"degree": k, "einfinity_sum": s, "betti": betti[k],
                     "cohomological_degree": degree, "weight": weight})
        topweight.append({"degree": degree, "dim": betti[k]})
    lower_bounds = []
    for (p, q), v in sorted(einf.dims.items()):
        if v > 0:
            degree = 4 * g - 6 + 2 * n - (p + q)
            lower_bounds.append({
                "p": p, "q": q, "cohomological_degree": degree, "dim": v,
                "label": f"dim H^{degree}({name};Q) >= {v}"})
    return DecompositionReport(g, f.chain, einf, betti, rows,
                               list(reversed(topweight)), lower_bounds, True)


def e1_relative_check(f: FilteredComplex) -> bool:
    """The first page must equal stepwise relative homology: E^1_{p,q} is
    Betti_{p+q} of the complex of level-exactly-p generators."""
    g = f.g
    for p in range(1, f.num_levels + 1):
        if p == 1:
            step = build_graph_complex(g, f.chain[0])
        else:
            step = build_relative_complex(g, f.chain[p - 1], f.chain[p - 2])
        step_betti = homology(step).betti
        for d in f.base.degrees:
            if page_dim(f, 1, p, d - p) != step_betti.get(d, 0):
                return False
    return True


def spectral_json(f: FilteredComplex, pages: Sequence[int] = ()) -> dict:
    """The full machine-readable payload for one filtration."""
    report = decomposition_report(f)
    out: dict = {
        "pages": {str(r): {f"{p},{q}": v
                           for (p, q), v in page_table(f, r).nonzero().items()}
                  for r in pages},
        "einfinity": {f"{p},{q}": v
                      for (p, q), v in report.einfinity.nonzero().items()},
        "betti": {str(k): v for k, v in sorted(report.betti.items())},
        "decomposition_ok": report.ok,
        "topweight": report.topweight,
        "lower_bounds": [dict(b) for b in report.lower_bounds],
    }
    return out


def parse_filtration_json(payload: dict) -> tuple[int, list[WeightDatum]]:
    """Decode {"g": int, "weights": [[rational strings]]} input.

    Structural problems raise ValueError; weights outside the admissible
    domain raise DomainError from the datum constructor.
    """
    try:
        g = int(payload["g"])
        rows = payload["weights"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed filtration input: {exc}") from exc
    if not isinstance(rows, list) or not rows:
        raise ValueError("filtration input needs a nonempty weights list")
    data = []
    for row in rows:
        entries = tuple(parse_rational(str(x)) for x in row)
        data.append(WeightDatum(g, entries))
    return g, data


def filtration_to_json(g: int, data: Sequence[WeightDatum]) -> dict:
    return {"g": g, "weights": [[format_rational(x) for x in a.entries]
                                for a in data]}
