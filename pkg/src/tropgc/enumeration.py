"""Exhaustive enumeration of stable graph isomorphism classes, with caching.

Raw generation happens only for the maximal (all-Plus) chamber, where
stability is the classical condition 2w(v) - 2 + |v|_E + #legs(v) > 0; any
other weight datum filters that list through is_stable. This is sound
because entrywise-smaller weight data have nested stable-graph sets, and it
lets chamber-equal data share one cache entry: cache files are keyed by
(g, n, edge count, purity, signature hash) and store one canonical graph
encoding per line.
"""

from __future__ import annotations

import hashlib
import os
import tempfile
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement, product
from typing import Iterable, Optional

from .chambers import (ChamberSignature, DomainError, WeightDatum,
                       compare_signatures, signature)
from .graphs import (CanonicalGraph, MarkedGraph, canonicalize, decode_graph,
                     genus, is_stable)

CACHE_ENV_VAR = "TROPGC_CACHE"
DEFAULT_CACHE_DIR = ".tropgc-cache"


def cache_dir() -> str:
    return os.environ.get(CACHE_ENV_VAR, DEFAULT_CACHE_DIR)


def signature_hash(sig: ChamberSignature) -> str:
    """Stable hex digest identifying a chamber (shared by chamber-equal data)."""
    ws = sig.wall_set
    text = f"g{ws.g};n{ws.n};" + "".join("+" if b else "-" for b in sig.signs)
    return hashlib.sha256(text.encode()).hexdigest()[:16]


@dataclass(frozen=True)
class GraphClassSet:
    """Deduplicated stable graph classes with a fixed edge count."""

    g: int
    n: int
    m: int
    pure_only: bool
    signature_hash: str
    classes: tuple[CanonicalGraph, ...]


def max_edges(g: int, n: int) -> int:
    return 3 * g - 3 + n


def _ones(n: int) -> WeightDatum:
    return WeightDatum(1, (Fraction(1),) * n)


def _classical_stable_vertexwise(weights, degrees, leg_counts) -> bool:
    for w, d, l in zip(weights, degrees, leg_counts):
        if 2 * w - 2 + d + l <= 0:
            return False
    return True


def _connected(num_vertices: int, edges) -> bool:
    if num_vertices == 1:
        return True
    parent = list(range(num_vertices))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    merged = 0
    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            merged += 1
    return merged == num_vertices - 1


def _weight_distributions(total: int, slots: int):
    if slots == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _weight_distributions(total - first, slots - 1):
            yield (first,) + rest


def _raw_enumerate_classical(g: int, n: int, m: int, pure_only: bool) -> tuple[CanonicalGraph, ...]:
    """All classes stable for the weight datum (1, ..., 1), genus g, m edges."""
    found: dict[str, CanonicalGraph] = {}
    v_lo = max(1, m + 1 - g)
    v_hi = m + 1
    for nv in range(v_lo, v_hi + 1):
        b1 = m - nv + 1
        wsum = g - b1
        if wsum < 0 or (pure_only and wsum != 0):
            continue
        slots = [(u, v) for u in range(nv) for v in range(u, nv)]
        unmarked: set[MarkedGraph] = set()
        for combo in combinations_with_replacement(slots, m):
            if nv > 1 and not _connected(nv, combo):
                continue
            degrees = [0] * nv
            for u, v in combo:
                degrees[u] += 1
                degrees[v] += 1
            for weights in _weight_distributions(wsum, nv):
                needed = sum(max(0, 3 - 2 * w - d)
                             for w, d in zip(weights, degrees))
                if needed > n:
                    continue
                cg, _ = canonicalize(MarkedGraph(weights, combo, ()))
                unmarked.add(cg.graph)
        for skeleton in unmarked:
            degrees = [skeleton.edge_degree(v) for v in range(skeleton.num_vertices)]
            for legs in product(range(skeleton.num_vertices), repeat=n):
                leg_counts = [0] * skeleton.num_vertices
                for v in legs:
                    leg_counts[v] += 1
                if not _classical_stable_vertexwise(skeleton.weights, degrees,
                                                    leg_counts):
                    continue
                cg, _ = canonicalize(MarkedGraph(skeleton.weights,
                                                 skeleton.edges, legs))
                found.setdefault(cg.encoding, cg)
    return tuple(found[k] for k in sorted(found))


def _cache_path(g: int, n: int, m: int, pure_only: bool, sig_hash: str) -> str:
    kind = "pure" if pure_only else "all"
    return os.path.join(cache_dir(),
                        f"g{g}_n{n}_m{m}_{kind}_{sig_hash}.txt")


def _cache_load(path: str) -> Optional[tuple[CanonicalGraph, ...]]:
    try:
        with open(path, "r", encoding="ascii") as fh:
            lines = [line.strip() for line in fh if line.strip()]
    except FileNotFoundError:
        return None
    classes = []
    for line in lines:
        graph = decode_graph(line)
        cg, _ = canonicalize(graph)
        if cg.encoding != line:
            raise ValueError(f"cache entry is not canonical: {line!r}")
        classes.append(cg)
    return tuple(classes)


def _cache_store(path: str, classes: Iterable[CanonicalGraph]) -> None:
    os.makedirs(os.path.dirname(path) or ".", exist_ok=True)
    payload = "".join(cg.encoding + "\n" for cg in classes)
    fd, tmp = tempfile.mkstemp(dir=os.path.dirname(path) or ".",
                               suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="ascii") as fh:
            fh.write(payload)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def enumerate_stable_graphs(g: int, a: WeightDatum, m: int,
                            pure_only: bool = False) -> GraphClassSet:
    """All isomorphism classes of (g, a)-stable graphs with m edges.

    Results are complete, duplicate free, sorted by canonical encoding, and
    cached on disk (directory from TROPGC_CACHE, default ./.tropgc-cache).
    """
    if a.g != g:
        raise DomainError(f"weight datum has genus {a.g}, expected {g}")
    n = a.n
    if not (0 <= m <= max_edges(g, n)):
        raise DomainError(f"edge count {m} outside 0..{max_edges(g, n)}")
    sig = signature(a)
    sig_hash = signature_hash(sig)
    path = _cache_path(g, n, m, pure_only, sig_hash)
    cached = _cache_load(path)
    if cached is not None:
        return GraphClassSet(g, n, m, pure_only, sig_hash, cached)
    if all(sig.signs):
        classes = _raw_enumerate_classical(g, n, m, pure_only)
    else:
        top = enumerate_stable_graphs(g, _classical_datum(g, n), m, pure_only)
        classes = tuple(cg for cg in top.classes if is_stable(cg.graph, g, a))
    _cache_store(path, classes)
    return GraphClassSet(g, n, m, pure_only, sig_hash, classes)


def _classical_datum(g: int, n: int) -> WeightDatum:
    return WeightDatum(g, (Fraction(1),) * n)


GRAPH_COMPLEX = "graph_complex"
CELLULAR = "cellular"


def degree_range(g: int, n: int, kind: str) -> range:
    if kind == GRAPH_COMPLEX:
        return range(-g, max_edges(g, n) - 2 * g + 1)
    if kind == CELLULAR:
        return range(-1, max_edges(g, n))
    raise ValueError(f"unknown complex kind {kind!r}")


def generator_basis(g: int, a: WeightDatum, degree: int,
                    kind: str = GRAPH_COMPLEX) -> tuple[CanonicalGraph, ...]:
    """Ordered basis of nonzero generators in one homological degree.

    Graph-complex generators are pure graphs with degree + 2g edges;
    cellular generators are arbitrary stable graphs with degree + 1 edges.
    Classes with an odd edge automorphism are zero and excluded.
    """
    if degree not in degree_range(g, a.n, kind):
        raise DomainError(f"degree {degree} out of range for {kind}")
    if kind == GRAPH_COMPLEX:
        m = degree + 2 * g
        pure = True
    else:
        m = degree + 1
        pure = False
    classes = enumerate_stable_graphs(g, a, m, pure_only=pure).classes
    return tuple(cg for cg in classes if not cg.has_odd_edge_automorphism)


def check_aligned(chain: list[WeightDatum] | tuple[WeightDatum, ...]) -> None:
    """Raise unless consecutive signatures are nested (Equal or Less)."""
    for p in range(len(chain) - 1):
        rel = compare_signatures(signature(chain[p]), signature(chain[p + 1]))
        if rel.relation not in ("Equal", "Less"):
            raise DomainError(
                f"chain not aligned: step {p + 1} -> {p + 2} compares as "
                f"{rel.relation} ({chain[p]} vs {chain[p + 1]})")


def filtration_levels(g: int, chain: list[WeightDatum] | tuple[WeightDatum, ...],
                      degree: int, kind: str = GRAPH_COMPLEX) -> dict[CanonicalGraph, int]:
    """Level of each top-chamber generator: the first chain index (1-based)
    at which the graph is stable."""
    if not chain:
        raise DomainError("empty weight chain")
    check_aligned(chain)
    basis = generator_basis(g, chain[-1], degree, kind)
    levels: dict[CanonicalGraph, int] = {}
    for cg in basis:
        for p, a in enumerate(chain, start=1):
            if is_stable(cg.graph, g, a):
                levels[cg] = p
                break
        else:
            raise AssertionError("generator unstable at the top of the chain")
    return levels
