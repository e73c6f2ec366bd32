"""Brute-force ground truth for small instances.

Everything here enumerates: candidate central cliques over all vertex
subsets, stable sets and cliques by subset dynamic programming, chromatic
and clique-cover numbers by covering with independent sets over submasks,
and 2-SAT by trying every assignment. Limits are enforced up front so a
misplaced call fails fast instead of burning hours.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .graphs import Graph, VertexSet, _bits, complement
from .recognition import Representation
from .twosat import TwoSatFormula

__all__ = [
    "OracleLimits",
    "OracleLimitError",
    "DEFAULT_LIMITS",
    "oracle_is_unipolar",
    "oracle_s",
    "oracle_side_count_range",
    "oracle_alpha",
    "oracle_omega",
    "oracle_chi",
    "oracle_cover",
    "oracle_2sat",
]


class OracleLimitError(ValueError):
    """Instance too large for exhaustive enumeration."""


@dataclass(frozen=True)
class OracleLimits:
    max_n: int = 15
    max_vars: int = 20


DEFAULT_LIMITS = OracleLimits()


def _check_n(g: Graph, limits: OracleLimits) -> None:
    if g.n > limits.max_n:
        raise OracleLimitError(f"graph has {g.n} vertices, oracle limit is {limits.max_n}")


def _clique_table(rows, n: int) -> bytearray:
    """cliques[S] = 1 iff the subset S induces a complete graph.

    Peeling the lowest vertex gives a one-pass recurrence over subsets in
    increasing encoding order.
    """
    table = bytearray(1 << n)
    table[0] = 1
    for s in range(1, 1 << n):
        low = s & -s
        rest = s ^ low
        v = low.bit_length() - 1
        table[s] = table[rest] and (rest & ~rows[v]) == 0
    return table


def _cluster_components(rows, remainder: int) -> Optional[list[int]]:
    """Component masks if the induced subgraph is a disjoint union of cliques.

    In a cluster graph every vertex's closed neighbourhood within the set
    is exactly its component, so it suffices to check that neighbours agree
    on it. Returns None when some induced path on three vertices exists.
    """
    comps: list[int] = []
    seen = 0
    for v in _bits(remainder):
        if (seen >> v) & 1:
            continue
        comp = (rows[v] | (1 << v)) & remainder
        for u in _bits(comp):
            if ((rows[u] | (1 << u)) & remainder) != comp:
                return None
        comps.append(comp)
        seen |= comp
    return comps


def _representation_from(n: int, central: int, comps: list[int]) -> Representation:
    return Representation(
        VertexSet(n, central), tuple(VertexSet(n, c) for c in comps)
    )


def oracle_is_unipolar(g: Graph, limits: OracleLimits = DEFAULT_LIMITS) -> Optional[Representation]:
    """First representation by increasing central-set encoding, or None."""
    _check_n(g, limits)
    n = g.n
    rows = g._rows
    full = (1 << n) - 1
    cliques = _clique_table(rows, n)
    for s in range(1 << n):
        if not cliques[s]:
            continue
        comps = _cluster_components(rows, full ^ s)
        if comps is not None:
            return _representation_from(n, s, comps)
    return None


def oracle_side_count_range(
    g: Graph, limits: OracleLimits = DEFAULT_LIMITS
) -> Optional[tuple[int, int]]:
    """(min, max) side-clique count over all representations, None if none."""
    _check_n(g, limits)
    n = g.n
    rows = g._rows
    full = (1 << n) - 1
    cliques = _clique_table(rows, n)
    lo: Optional[int] = None
    hi: Optional[int] = None
    for s in range(1 << n):
        if not cliques[s]:
            continue
        comps = _cluster_components(rows, full ^ s)
        if comps is None:
            continue
        k = len(comps)
        lo = k if lo is None else min(lo, k)
        hi = k if hi is None else max(hi, k)
    if lo is None:
        return None
    return lo, hi


def oracle_s(g: Graph, limits: OracleLimits = DEFAULT_LIMITS) -> int:
    """Maximum side-clique count over all representations; 0 if not unipolar."""
    rng = oracle_side_count_range(g, limits)
    return 0 if rng is None else rng[1]


def _independent_table(rows, n: int) -> bytearray:
    table = bytearray(1 << n)
    table[0] = 1
    for s in range(1, 1 << n):
        low = s & -s
        rest = s ^ low
        v = low.bit_length() - 1
        table[s] = table[rest] and (rest & rows[v]) == 0
    return table


def oracle_alpha(g: Graph, limits: OracleLimits = DEFAULT_LIMITS) -> int:
    """Stability number by subset enumeration."""
    _check_n(g, limits)
    table = _independent_table(g._rows, g.n)
    return max((s.bit_count() for s in range(1 << g.n) if table[s]), default=0)


def oracle_omega(g: Graph, limits: OracleLimits = DEFAULT_LIMITS) -> int:
    """Clique number: stability number of the complement."""
    _check_n(g, limits)
    table = _clique_table(g._rows, g.n)
    return max((s.bit_count() for s in range(1 << g.n) if table[s]), default=0)


def oracle_chi(g: Graph, limits: OracleLimits = DEFAULT_LIMITS) -> int:
    """Chromatic number: fewest independent sets covering the vertices.

    Subset DP over 3^n (mask, submask) pairs; practical to n around 10.
    """
    _check_n(g, limits)
    n = g.n
    if n == 0:
        return 0
    indep = _independent_table(g._rows, n)
    size = 1 << n
    best = [0] * size
    for mask in range(1, size):
        low = mask & -mask
        acc = size  # effectively infinity
        sub = mask
        while sub:
            if sub & low and indep[sub]:
                cand = best[mask ^ sub] + 1
                if cand < acc:
                    acc = cand
            sub = (sub - 1) & mask
        best[mask] = acc
    return best[size - 1]


def oracle_cover(g: Graph, limits: OracleLimits = DEFAULT_LIMITS) -> int:
    """Clique cover number: chromatic number of the complement."""
    return oracle_chi(complement(g), limits)


def oracle_2sat(
    fm: TwoSatFormula, limits: OracleLimits = DEFAULT_LIMITS
) -> Optional[np.ndarray]:
    """Exhaustive 2-SAT: first satisfying assignment by increasing encoding.

    Assignment code c assigns variable i the bit (c >> i) & 1.
    """
    nv = fm.num_vars
    if nv > limits.max_vars:
        raise OracleLimitError(f"{nv} variables, oracle limit is {limits.max_vars}")
    codes = np.arange(1 << nv, dtype=np.int64)
    truth = ((codes[:, None] >> np.arange(nv, dtype=np.int64)[None, :]) & 1).astype(bool)
    ok = np.ones(1 << nv, dtype=bool)
    a, b = fm.encoded()
    for ca, cb in zip(a.tolist(), b.tolist()):
        va = truth[:, ca >> 1] ^ bool(ca & 1)
        vb = truth[:, cb >> 1] ^ bool(cb & 1)
        ok &= va | vb
        if not ok.any():
            return None
    idx = int(np.argmax(ok))
    if not ok[idx]:
        return None
    return truth[idx].copy()
