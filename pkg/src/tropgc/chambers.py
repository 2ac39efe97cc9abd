"""Weight data and the fine chamber decomposition.

A weight datum is a genus g together with rational weights a_1..a_n, each in
(0, 1], with 2g - 2 + sum(a) > 0. The weight space is cut into chambers by
the walls sum_{i in S} a_i = 1 over index subsets S with 2 <= |S| <= n (for
g >= 1) or 2 <= |S| <= n - 2 (for g = 0). This module computes chamber
signatures, the partial order on chambers and on chambers up to the S_n
action, enumerates realizable chambers for small n, and builds the standard
named weight data (minimal, F, floor, heavy/light).

Convention: weights lying exactly on a wall are assigned the Minus side,
since stability for such data agrees with the adjacent lower chamber.
Permutations are written in one-line notation (sigma[i-1] = sigma(i), values
1..n) and act by apply_permutation(sigma, A)_i = A_{sigma(i)}.
"""

from __future__ import annotations

import itertools
import re
import warnings
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Optional, Sequence


class DomainError(ValueError):
    """Input is outside the mathematical domain of the operation."""


class DomainGapWarning(UserWarning):
    """Weight datum has 0 < 2g - 2 + sum(a) <= 1, a contested boundary zone."""


_RATIONAL_RE = re.compile(r"^-?\d+(?:/[1-9]\d*)?$")


def parse_rational(text: str) -> Fraction:
    """Parse "p" or "p/q" with decimal integers and q > 0."""
    s = text.strip()
    if not _RATIONAL_RE.match(s):
        raise ValueError(f"invalid rational literal: {text!r}")
    return Fraction(s)


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_weights(text: str) -> tuple[Fraction, ...]:
    """Parse a comma-separated list of rational literals."""
    parts = text.split(",")
    if parts == [""]:
        raise ValueError("empty weight list")
    return tuple(parse_rational(p) for p in parts)


@dataclass(frozen=True)
class WeightDatum:
    """Genus plus a vector of rational weights in (0, 1]."""

    g: int
    entries: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries",
                           tuple(Fraction(x) for x in self.entries))
        if self.g < 0:
            raise DomainError("genus must be nonnegative")
        if len(self.entries) < 1:
            raise DomainError("at least one weight is required")
        for a in self.entries:
            if not (0 < a <= 1):
                raise DomainError(f"weight {format_rational(a)} outside (0, 1]")
        total = 2 * self.g - 2 + sum(self.entries)
        if total <= 0:
            raise DomainError("2g - 2 + sum(a) must be positive")
        if total <= 1:
            warnings.warn(
                "weight datum has 0 < 2g - 2 + sum(a) <= 1; accepted, but "
                "some sources require the sum to exceed 1",
                DomainGapWarning, stacklevel=2)

    @property
    def n(self) -> int:
        return len(self.entries)

    def __str__(self):
        return f"g={self.g}, ({', '.join(format_rational(a) for a in self.entries)})"


@dataclass(frozen=True)
class WallSet:
    """All wall subsets for (g, n), ordered by size then lexicographically."""

    g: int
    n: int
    subsets: tuple[frozenset[int], ...]

    @property
    def masks(self) -> tuple[int, ...]:
        return _wall_masks(self.g, self.n)


@lru_cache(maxsize=None)
def wall_set(g: int, n: int) -> WallSet:
    if g < 0 or n < 1:
        raise DomainError("need g >= 0 and n >= 1")
    max_size = n - (2 if g == 0 else 0)
    subsets = []
    for size in range(2, max_size + 1):
        for combo in itertools.combinations(range(1, n + 1), size):
            subsets.append(frozenset(combo))
    return WallSet(g, n, tuple(subsets))


@lru_cache(maxsize=None)
def _wall_masks(g: int, n: int) -> tuple[int, ...]:
    ws = wall_set(g, n)
    return tuple(sum(1 << (i - 1) for i in s) for s in ws.subsets)


@lru_cache(maxsize=None)
def _subset_index(ws: WallSet) -> dict[frozenset, int]:
    return {s: k for k, s in enumerate(ws.subsets)}


@dataclass(frozen=True)
class ChamberSignature:
    """Plus/Minus pattern of every wall inequality sum_{i in S} a_i > 1."""

    wall_set: WallSet
    signs: tuple[bool, ...]  # True = Plus, aligned with wall_set.subsets

    def __post_init__(self):
        if len(self.signs) != len(self.wall_set.subsets):
            raise ValueError("sign count does not match wall count")
        subs = self.wall_set.subsets
        for k, s in enumerate(subs):
            if not self.signs[k]:
                continue
            for t in range(k + 1, len(subs)):
                if s < subs[t] and not self.signs[t]:
                    raise ValueError(
                        f"signature not monotone: {format_subset(s)} is Plus "
                        f"but superset {format_subset(subs[t])} is Minus")

    def is_plus(self, subset: Iterable[int]) -> bool:
        return self.signs[_subset_index(self.wall_set)[frozenset(subset)]]

    def sign(self, subset: Iterable[int]) -> str:
        return "Plus" if self.is_plus(subset) else "Minus"

    def plus_subsets(self) -> tuple[frozenset[int], ...]:
        return tuple(s for s, b in zip(self.wall_set.subsets, self.signs) if b)


def _subset_sums(entries: Sequence[Fraction]) -> list[Fraction]:
    """sums[mask] = sum of entries over the bits of mask."""
    n = len(entries)
    sums = [Fraction(0)] * (1 << n)
    for mask in range(1, 1 << n):
        low = mask & (-mask)
        sums[mask] = sums[mask ^ low] + entries[low.bit_length() - 1]
    return sums


def signature(a: WeightDatum) -> ChamberSignature:
    """Chamber signature of a weight datum; wall points count as Minus."""
    ws = wall_set(a.g, a.n)
    sums = _subset_sums(a.entries)
    signs = tuple(sums[mask] > 1 for mask in ws.masks)
    return ChamberSignature(ws, signs)


@dataclass(frozen=True)
class OrderResult:
    """Outcome of a chamber comparison; witness present unless Incomparable."""

    relation: str  # Equal | Less | Greater | Incomparable
    witness: Optional[tuple[int, ...]]

    def __post_init__(self):
        if self.relation not in ("Equal", "Less", "Greater", "Incomparable"):
            raise ValueError(f"unknown relation {self.relation!r}")
        if (self.witness is None) != (self.relation == "Incomparable"):
            raise ValueError("witness must be present exactly for "
                             "Equal/Less/Greater results")


def identity_permutation(n: int) -> tuple[int, ...]:
    return tuple(range(1, n + 1))


def _check_permutation(sigma: Sequence[int], n: int) -> tuple[int, ...]:
    s = tuple(sigma)
    if sorted(s) != list(range(1, n + 1)):
        raise ValueError(f"not a permutation of 1..{n}: {sigma!r}")
    return s


def apply_permutation(sigma: Sequence[int], a: WeightDatum) -> WeightDatum:
    """Entry i of the result is a_{sigma(i)}."""
    s = _check_permutation(sigma, a.n)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", DomainGapWarning)
        return WeightDatum(a.g, tuple(a.entries[s[i] - 1] for i in range(a.n)))


def permute_signature(sigma: Sequence[int], sig: ChamberSignature) -> ChamberSignature:
    """Signature of the permuted datum: new sign at S = old sign at sigma(S)."""
    ws = sig.wall_set
    s = _check_permutation(sigma, ws.n)
    index = _subset_index(ws)
    signs = tuple(sig.signs[index[frozenset(s[i - 1] for i in subset)]]
                  for subset in ws.subsets)
    return ChamberSignature(ws, signs)


def compare_signatures(s1: ChamberSignature, s2: ChamberSignature) -> OrderResult:
    """Order two signatures on the same wall set; witness is the identity."""
    if s1.wall_set != s2.wall_set:
        raise DomainError("signatures live on different wall sets")
    above = below = False
    for x, y in zip(s1.signs, s2.signs):
        if x != y:
            if x:
                above = True
            else:
                below = True
    ident = identity_permutation(s1.wall_set.n)
    if not above and not below:
        return OrderResult("Equal", ident)
    if not above:
        return OrderResult("Less", ident)
    if not below:
        return OrderResult("Greater", ident)
    return OrderResult("Incomparable", None)


def _sign_table(entries: Sequence[Fraction]) -> bytearray:
    """table[mask] = 1 iff the subset sum over mask exceeds 1."""
    sums = _subset_sums(entries)
    return bytearray(1 if s > 1 else 0 for s in sums)


def compare_up_to_symmetry(a: WeightDatum, b: WeightDatum,
                           prune: bool = True,
                           counters: Optional[dict] = None) -> OrderResult:
    """Compare the chambers of a and b up to the S_n relabeling action.

    Permutations are tried in lexicographic one-line order; the first sigma
    whose permuted signature is equal to, dominated by, or dominating the
    signature of b decides the result, with sigma as the witness. If no
    permutation relates the two signatures the chambers are Incomparable.

    With prune=True, permutations that produce a weight tuple already seen
    are skipped (the signature depends only on the tuple). Every evaluated
    permutation scans the full wall list; exact work done is reported via
    the optional counters dict (keys "permutations", "subset_comparisons").
    """
    if a.g != b.g or a.n != b.n:
        raise DomainError("weight data must share genus and length")
    n = a.n
    masks = _wall_masks(a.g, n)
    sa = _sign_table(a.entries)
    sb = _sign_table(b.entries)
    lowsize = min(n, 4)
    lowcount = 1 << lowsize
    highcount = 1 << (n - lowsize)
    entries = a.entries
    perms_checked = 0
    seen: set = set()
    result: Optional[OrderResult] = None
    for sigma in itertools.permutations(range(1, n + 1)):
        if prune:
            tup = tuple(entries[s - 1] for s in sigma)
            if tup in seen:
                continue
            seen.add(tup)
        sbit = [1 << (sigma[i] - 1) for i in range(n)]
        lt = [0] * lowcount
        for m in range(1, lowcount):
            low = m & (-m)
            lt[m] = lt[m ^ low] | sbit[low.bit_length() - 1]
        ht = [0] * highcount
        for m in range(1, highcount):
            low = m & (-m)
            ht[m] = ht[m ^ low] | sbit[lowsize + low.bit_length() - 1]
        above = below = False
        for m in masks:
            x = sa[lt[m & 15] | ht[m >> 4]]
            if x != sb[m]:
                if x:
                    above = True
                else:
                    below = True
        perms_checked += 1
        if not above and not below:
            result = OrderResult("Equal", sigma)
        elif not above:
            result = OrderResult("Less", sigma)
        elif not below:
            result = OrderResult("Greater", sigma)
        if result is not None:
            break
    if counters is not None:
        counters["permutations"] = perms_checked
        counters["subset_comparisons"] = perms_checked * len(masks)
    return result if result is not None else OrderResult("Incomparable", None)


# Fourier-Motzkin feasibility.
#
# Constraints are stored as (coeffs, bound, strict) meaning
# sum(coeffs[i] * x_i) < bound (strict) or <= bound. Coefficients and bounds
# are integers, normalized by their gcd, so elimination stays exact.

_Constraint = tuple[tuple[int, ...], int, bool]


def _normalize_constraint(coeffs: Sequence[int], bound: int, strict: bool) -> _Constraint:
    g = 0
    for c in coeffs:
        g = gcd(g, c)
    g = gcd(g, bound)
    if g > 1:
        coeffs = tuple(c // g for c in coeffs)
        bound //= g
    return (tuple(coeffs), bound, strict)


def _signature_constraints(s: ChamberSignature) -> list[_Constraint]:
    ws = s.wall_set
    n = ws.n
    cons: list[_Constraint] = []
    for i in range(n):
        row = [0] * n
        row[i] = -1
        cons.append((tuple(row), 0, True))        # x_i > 0
        row2 = [0] * n
        row2[i] = 1
        cons.append((tuple(row2), 1, False))      # x_i <= 1
    for subset, plus in zip(ws.subsets, s.signs):
        row = [0] * n
        for i in subset:
            row[i - 1] = -1 if plus else 1
        bound = -1 if plus else 1
        cons.append((tuple(row), bound, True))    # strict on both sides
    if ws.g == 0:
        cons.append((tuple([-1] * n), -2, True))  # sum > 2
    return cons


def _fm_eliminate(cons: list[_Constraint], var: int) -> Optional[list[_Constraint]]:
    """Eliminate variable var; returns None if a contradiction appears."""
    pos, neg, rest = [], [], []
    for c in cons:
        cv = c[0][var]
        if cv > 0:
            pos.append(c)
        elif cv < 0:
            neg.append(c)
        else:
            rest.append(c)
    out: dict[tuple[tuple[int, ...], int], bool] = {}

    def add(coeffs, bound, strict):
        if all(c == 0 for c in coeffs):
            if bound < 0 or (bound == 0 and strict):
                return False
            return True
        coeffs, bound, strict = _normalize_constraint(coeffs, bound, strict)
        key = (coeffs, bound)
        out[key] = out.get(key, False) or strict
        return True

    for c in rest:
        if not add(*c):
            return None
    for cp, bp, sp in pos:
        for cn, bn, sn in neg:
            a = -cn[var]
            b = cp[var]
            coeffs = tuple(a * cp[i] + b * cn[i] for i in range(len(cp)))
            bound = a * bp + b * bn
            if not add(coeffs, bound, sp or sn):
                return None
    pruned = []
    best: dict[tuple[int, ...], tuple[int, bool]] = {}
    for (coeffs, bound), strict in out.items():
        cur = best.get(coeffs)
        if cur is None or (bound, not strict) < (cur[0], not cur[1]):
            best[coeffs] = (bound, strict)
    for coeffs, (bound, strict) in best.items():
        pruned.append((coeffs, bound, strict))
    return pruned


def feasible_point(s: ChamberSignature) -> Optional[WeightDatum]:
    """A rational witness strictly inside the chamber, or None if empty."""
    n = s.wall_set.n
    systems = [_signature_constraints(s)]
    for var in range(n - 1, 0, -1):
        nxt = _fm_eliminate(systems[-1], var)
        if nxt is None:
            return None
        systems.append(nxt)
    # systems[k] constrains variables x_0..x_{n-1-k}; solve forward.
    values: list[Fraction] = []
    for var in range(n):
        cons = systems[n - 1 - var]
        lo: Optional[tuple[Fraction, bool]] = None
        hi: Optional[tuple[Fraction, bool]] = None
        for coeffs, bound, strict in cons:
            cv = coeffs[var]
            if cv == 0:
                continue
            acc = Fraction(bound)
            for i in range(var):
                acc -= coeffs[i] * values[i]
            limit = acc / cv
            if cv > 0:
                # x_var <= limit (or < limit when strict)
                if hi is None or limit < hi[0] or \
                        (limit == hi[0] and strict and not hi[1]):
                    hi = (limit, strict)
            else:
                # x_var >= limit (or > limit when strict)
                if lo is None or limit > lo[0] or \
                        (limit == lo[0] and strict and not lo[1]):
                    lo = (limit, strict)
        if lo is None or hi is None:
            return None
        lo_v, lo_strict = lo
        hi_v, hi_strict = hi
        if lo_v > hi_v or (lo_v == hi_v and (lo_strict or hi_strict)):
            return None
        if lo_v == hi_v:
            values.append(lo_v)
        else:
            values.append((lo_v + hi_v) / 2)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", DomainGapWarning)
        point = WeightDatum(s.wall_set.g, tuple(values))
    if signature(point).signs != s.signs:
        raise AssertionError("feasibility witness fails its own signature")
    return point


def is_feasible(s: ChamberSignature) -> bool:
    return feasible_point(s) is not None


ENUMERATION_CAP = 5


@dataclass(frozen=True)
class ChamberCensus:
    """Realizable chamber signatures for (g, n), grouped into S_n orbits."""

    g: int
    n: int
    orbits: tuple[tuple[ChamberSignature, ...], ...]

    @property
    def chambers(self) -> tuple[ChamberSignature, ...]:
        return tuple(c for orbit in self.orbits for c in orbit)


def enumerate_chambers(g: int, n: int) -> ChamberCensus:
    """All nonempty chamber signatures for (g, n), grouped into orbits.

    Candidate signatures are generated monotonically (a subset may be Minus
    only while no Plus subset sits below it) and kept when a strict interior
    rational point exists.
    """
    if n > ENUMERATION_CAP:
        raise DomainError(f"chamber enumeration capped at n <= {ENUMERATION_CAP}")
    ws = wall_set(g, n)
    subs = ws.subsets
    found: list[ChamberSignature] = []

    def assign(k: int, signs: list[bool]):
        if k == len(subs):
            cand = ChamberSignature(ws, tuple(signs))
            if is_feasible(cand):
                found.append(cand)
            return
        forced_plus = any(signs[t] and subs[t] < subs[k] for t in range(k))
        for choice in ((True,) if forced_plus else (False, True)):
            signs.append(choice)
            assign(k + 1, signs)
            signs.pop()

    assign(0, [])
    perms = list(itertools.permutations(range(1, n + 1)))
    grouped: dict[tuple[bool, ...], list[ChamberSignature]] = {}
    for sig in found:
        orbit_key = min(permute_signature(p, sig).signs for p in perms)
        grouped.setdefault(orbit_key, []).append(sig)
    orbits = tuple(tuple(sorted(v, key=lambda s: s.signs))
                   for _, v in sorted(grouped.items()))
    return ChamberCensus(g, n, orbits)


def _ratio(num: int, den: int) -> Fraction:
    return Fraction(num, den)


def make_minimal(g: int, n: int) -> WeightDatum:
    """The datum (eps, ..., eps) with eps = 1/(2n), inside the lowest chamber."""
    if g < 1:
        raise DomainError("minimal weights require g >= 1")
    if n < 1:
        raise DomainError("need n >= 1")
    eps = _ratio(1, 2 * n)
    return WeightDatum(g, (eps,) * n)


def make_F(g: int, n: int) -> WeightDatum:
    """The datum (1/n + delta)^n with delta = 1/(2n^2); only the full set is Plus."""
    if g < 1:
        raise DomainError("F weights require g >= 1")
    if n < 1:
        raise DomainError("need n >= 1")
    val = _ratio(1, n) + _ratio(1, 2 * n * n)
    return WeightDatum(g, (val,) * n)


def make_floor(g: int, n: int, l: int) -> WeightDatum:
    """The l-th floor datum (1/l + 1/(2ln))^n; Plus exactly on |S| >= l."""
    if g < 1:
        raise DomainError("floor weights require g >= 1")
    if not (2 <= l <= n):
        raise DomainError("floor level must satisfy 2 <= l <= n")
    val = _ratio(1, l) + _ratio(1, 2 * l * n)
    return WeightDatum(g, (val,) * n)


def make_heavy_light(g: int, n: int, m: int) -> WeightDatum:
    """m heavy weights equal to 1 and n - m light weights equal to 1/(2n)."""
    if not (0 <= m <= n):
        raise DomainError("need 0 <= m <= n")
    if g == 0 and m < 2:
        raise DomainError("genus 0 heavy/light weights require m >= 2")
    eps = _ratio(1, 2 * n)
    return WeightDatum(g, (Fraction(1),) * m + (eps,) * (n - m))


def format_subset(subset: Iterable[int]) -> str:
    return "{" + ",".join(str(i) for i in sorted(subset)) + "}"


def signature_json(sig: ChamberSignature) -> dict[str, str]:
    """Render a signature as an ordered {subset: "+"/"-"} mapping."""
    return {format_subset(s): ("+" if b else "-")
            for s, b in zip(sig.wall_set.subsets, sig.signs)}
