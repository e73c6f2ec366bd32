"""Recognition of unipolar and generalised split graphs in O(n^2).

A graph is unipolar when its vertices split into a central clique and a
disjoint union of side cliques with no edges between different sides; it is
a generalised split graph when it or its complement is unipolar. The
recognizer runs in three stages:

1. ``indep`` finds a maximal independent set I at least as large as the
   maximum possible number of side cliques, in amortized quadratic time.
   Its workhorse ``antiedge`` grows a known clique while scanning for a
   non-adjacent pair, and the growth is what gets amortized: a vertex can
   be absorbed into the growing clique at most once over the whole run.
2. ``blocks`` narrows the (at most one) member of I that could belong to a
   central clique down to at most two candidates, then ``test`` builds a
   candidate partition of the vertices from closed neighbourhoods of I.
3. ``verify`` encodes "this partition is compatible with some unipolar
   representation" as a 2-SAT formula with at most two clauses per vertex
   pair; a satisfying assignment names the central clique directly.

All functions are pure; certificates can be revalidated independently with
``check_representation``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

import numpy as np

from . import twosat
from .graphs import Graph, VertexSet, _bits, complement, is_clique

__all__ = [
    "COMPLETE",
    "Representation",
    "BlockAssignment",
    "GsgCertificate",
    "IndepResult",
    "VERDICT_UNIPOLAR",
    "VERDICT_CO_UNIPOLAR",
    "VERDICT_BOTH",
    "VERDICT_NEITHER",
    "verify",
    "antiedge",
    "indep",
    "test",
    "blocks",
    "recognise",
    "recognise_counted",
    "recognise_gsg",
    "check_representation",
]

VERDICT_UNIPOLAR = "unipolar"
VERDICT_CO_UNIPOLAR = "co-unipolar"
VERDICT_BOTH = "both"
VERDICT_NEITHER = "neither"


class _CompleteType:
    """Sentinel returned by antiedge when the scanned set induces a clique."""

    __slots__ = ()
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "COMPLETE"


COMPLETE = _CompleteType()


@dataclass(frozen=True)
class Representation:
    """Certificate of unipolarity: central clique plus disjoint side cliques.

    Sides are normalized to ascending order of their smallest member, so
    equal representations compare equal and serialize identically.
    """

    central: VertexSet
    sides: tuple[VertexSet, ...]

    def __post_init__(self):
        ordered = tuple(sorted(self.sides, key=lambda s: s.mask & -s.mask))
        object.__setattr__(self, "sides", ordered)

    @property
    def side_count(self) -> int:
        return len(self.sides)


class BlockAssignment:
    """Total surjective map from vertices onto block indices 0..m-1."""

    __slots__ = ("block_of", "num_blocks")

    def __init__(self, block_of, num_blocks: int):
        block_of = np.asarray(block_of, dtype=np.int32)
        if block_of.ndim != 1:
            raise ValueError("block assignment must be one index per vertex")
        if num_blocks < 0:
            raise ValueError(f"block count must be non-negative, got {num_blocks}")
        counts = np.bincount(block_of, minlength=num_blocks) if block_of.size else np.zeros(num_blocks)
        if block_of.size and (block_of.min() < 0 or block_of.max() >= num_blocks):
            raise ValueError("block index out of range")
        if num_blocks and (counts[:num_blocks] == 0).any():
            raise ValueError("block assignment is not surjective")
        self.block_of = block_of
        self.num_blocks = num_blocks

    def __repr__(self) -> str:
        return f"BlockAssignment(m={self.num_blocks}, f={self.block_of.tolist()})"


@dataclass(frozen=True)
class GsgCertificate:
    """Outcome of the generalised split test on a graph and its complement.

    ``representation`` certifies the graph itself when the verdict is
    unipolar or both; ``co_representation`` certifies the complement when
    the verdict is co-unipolar or both.
    """

    verdict: str
    representation: Optional[Representation]
    co_representation: Optional[Representation]


@dataclass(frozen=True)
class IndepResult:
    """Maximal independent set plus instrumentation counters.

    ``absorptions`` counts vertices appended to a growing clique inside
    antiedge (bounded by n per run); ``adjacency_tests`` counts pairwise
    adjacency charges, each processed vertex paying the current clique
    size (bounded by a small multiple of n^2).
    """

    vertices: VertexSet
    absorptions: int
    adjacency_tests: int


class _Counters:
    __slots__ = ("absorptions", "tests")

    def __init__(self):
        self.absorptions = 0
        self.tests = 0


NonEdge = tuple[int, int]
AntiedgeOutcome = tuple[Union[_CompleteType, NonEdge], VertexSet]


def _antiedge_masks(rows, u_mask: int, c_mask: int, ctr: _Counters):
    """Grow the clique c_mask inside u_mask; stop at the first non-edge.

    Returns (None, u_mask) when u_mask induces a clique, else ((u, v), c)
    where v is the scanned vertex that broke cliqueness and u is its
    lowest-index non-neighbour in the grown clique c.
    """
    c = c_mask
    scan = u_mask & ~c_mask
    while scan:
        low = scan & -scan
        scan ^= low
        v = low.bit_length() - 1
        missing = c & ~rows[v]
        ctr.tests += c.bit_count()
        if missing:
            u = (missing & -missing).bit_length() - 1
            return (u, v), c
        c |= low
        ctr.absorptions += 1
    return None, u_mask


def antiedge(g: Graph, u_set: VertexSet, c_seed: VertexSet) -> AntiedgeOutcome:
    """Report a non-adjacent pair inside u_set, or COMPLETE if none exists.

    c_seed must be a clique contained in u_set; it seeds the growth so that
    repeated calls can reuse previously verified structure. On a non-edge
    (u, v), u lies in the returned clique, v outside it, and the returned
    set is a clique between c_seed and u_set. On COMPLETE the returned set
    is u_set itself.
    """
    if u_set.n != g.n or c_seed.n != g.n:
        raise ValueError("vertex set universe does not match the graph")
    if not c_seed.issubset(u_set):
        raise ValueError("clique seed must be contained in the scanned set")
    assert is_clique(g, c_seed), "clique seed does not induce a complete subgraph"
    e, c = _antiedge_masks(g._rows, u_set.mask, c_seed.mask, _Counters())
    if e is None:
        return COMPLETE, VertexSet(g.n, c)
    return e, VertexSet(g.n, c)


def indep(g: Graph) -> IndepResult:
    """Maximal independent set with at least one member per side clique.

    For a unipolar input the result is at least as large as the maximum
    side-clique count over all representations (and hence within one of
    the stability number); for any input it is maximal. Amortized O(n^2).

    Each round locates a non-adjacent pair (u1, u2), splits the private
    closed neighbourhoods U1 = (N+(u1) - N+(u2)) and U2 = (N+(u2) - N+(u1))
    inside the remaining vertex pool, and keeps u_i exactly when the
    opposite private part is a clique; when both are cliques, both survive.
    Surviving vertices join the independent set and their closed
    neighbourhoods leave the pool, carrying over the clique grown in the
    remaining private part as the next seed.
    """
    rows = g._rows
    n = g.n
    nplus = [rows[v] | (1 << v) for v in range(n)]
    ctr = _Counters()
    u = (1 << n) - 1
    c = 0
    chosen = 0
    while True:
        e, c = _antiedge_masks(rows, u, c, ctr)
        if e is None:
            if u:
                chosen |= u & -u
            break
        u1, u2 = e
        n1 = nplus[u1]
        n2 = nplus[u2]
        part1 = n1 & ~n2 & u
        part2 = n2 & ~n1 & u
        e1, c1 = _antiedge_masks(rows, part1, c & part1, ctr)
        e2, c2 = _antiedge_masks(rows, part2, c & part2, ctr)
        if e1 is None and e2 is None:
            chosen |= (1 << u1) | (1 << u2)
            u &= ~(n1 | n2)
            c = 0
        elif e2 is not None:
            # u2's private part is not a clique (also the tie case), drop u1
            chosen |= 1 << u1
            u &= ~n1
            c = c2
        else:
            chosen |= 1 << u2
            u &= ~n2
            c = c1
    return IndepResult(VertexSet(n, chosen), ctr.absorptions, ctr.tests)


def verify(g: Graph, assignment: BlockAssignment) -> Optional[Representation]:
    """Extract a representation compatible with the block partition, if any.

    Encodes over one boolean per vertex ("is central"): for every
    non-adjacent pair, not both central; and for every pair that is either
    non-adjacent inside one block or adjacent across two blocks, at least
    one central. A satisfying assignment yields the central clique, with
    the remaining vertices grouped into side cliques by their block. O(n^2).
    """
    n = g.n
    f = assignment.block_of
    if f.shape[0] != n:
        raise ValueError(f"block assignment covers {f.shape[0]} vertices, graph has {n}")
    adj = g.to_matrix()
    fm = twosat.TwoSatFormula(n)
    if n:
        upper = np.triu(np.ones((n, n), dtype=bool), k=1)
        nu, nv = np.nonzero(~adj & upper)
        fm.add_clauses_encoded(2 * nu + 1, 2 * nv + 1)
        same_block = f[nu] == f[nv]
        fm.add_clauses_encoded(2 * nu[same_block], 2 * nv[same_block])
        eu, ev = np.nonzero(adj & upper)
        cross_block = f[eu] != f[ev]
        fm.add_clauses_encoded(2 * eu[cross_block], 2 * ev[cross_block])
    solution = twosat.solve(fm)
    if solution is None:
        return None
    central = 0
    side_masks: dict[int, int] = {}
    for v in range(n):
        if solution[v]:
            central |= 1 << v
        else:
            block = int(f[v])
            side_masks[block] = side_masks.get(block, 0) | (1 << v)
    sides = tuple(VertexSet(n, m) for m in side_masks.values())
    return Representation(VertexSet(n, central), sides)


def _independent(rows, mask: int) -> bool:
    for v in _bits(mask):
        if rows[v] & mask:
            return False
    return True


def test(g: Graph, i_set: VertexSet) -> Optional[Representation]:
    """Partition by closed neighbourhoods of an independent set, then verify.

    Vertices are claimed greedily: each member of i_set in ascending order
    takes the still-unclaimed part of its closed neighbourhood as a block;
    whatever remains afterwards forms one final block (omitted when empty,
    keeping the partition surjective). Succeeds whenever i_set misses the
    central clique of some representation and is at most one short of its
    side count.
    """
    if i_set.n != g.n:
        raise ValueError("vertex set universe does not match the graph")
    if not _independent(g._rows, i_set.mask):
        raise ValueError("test requires an independent set")
    n = g.n
    rows = g._rows
    u = (1 << n) - 1
    block_of = np.zeros(n, dtype=np.int32)
    num_blocks = 0
    for i in _bits(i_set.mask):
        block = (rows[i] | (1 << i)) & u
        for v in _bits(block):
            block_of[v] = num_blocks
        num_blocks += 1
        u &= ~block
    if u:
        for v in _bits(u):
            block_of[v] = num_blocks
        num_blocks += 1
    return verify(g, BlockAssignment(block_of, num_blocks))


def blocks(g: Graph, i_set: VertexSet) -> Optional[Representation]:
    """Recognition driver for a given maximal independent set.

    At most one member of i_set can sit in any central clique, and every
    vertex whose closed neighbourhood meets i_set in exactly two members
    pins that member down. Intersecting those pairs leaves at most two
    candidates, each tried by removal; with no candidates (or more than
    two, which forces the candidate set to be i_set itself), one direct
    attempt suffices. O(n^2) in total.
    """
    if i_set.n != g.n:
        raise ValueError("vertex set universe does not match the graph")
    rows = g._rows
    imask = i_set.mask
    if not _independent(rows, imask):
        raise ValueError("blocks requires an independent set")
    full = (1 << g.n) - 1
    uncovered = full & ~imask
    for v in _bits(uncovered):
        if not rows[v] & imask:
            raise ValueError("blocks requires a maximal independent set")
    candidates = imask
    for v in range(g.n):
        hits = (rows[v] | (1 << v)) & imask
        if hits.bit_count() == 2:
            candidates &= hits
    k = candidates.bit_count()
    if 1 <= k <= 2:
        for i in _bits(candidates):
            rep = test(g, VertexSet(g.n, imask & ~(1 << i)))
            if rep is not None:
                return rep
        return None
    return test(g, i_set)


def recognise(g: Graph) -> Optional[Representation]:
    """Representation of g if it is unipolar, else None. O(n^2)."""
    return recognise_counted(g)[0]


def recognise_counted(g: Graph) -> tuple[Optional[Representation], IndepResult]:
    """recognise plus the instrumentation of its independent-set stage."""
    found = indep(g)
    return blocks(g, found.vertices), found


def _gsg_verdict(rep: Optional[Representation], co_rep: Optional[Representation]) -> str:
    if rep is not None and co_rep is not None:
        return VERDICT_BOTH
    if rep is not None:
        return VERDICT_UNIPOLAR
    if co_rep is not None:
        return VERDICT_CO_UNIPOLAR
    return VERDICT_NEITHER


def recognise_gsg(g: Graph) -> GsgCertificate:
    """Generalised split test: run recognise on g and on its complement."""
    rep = recognise(g)
    co_rep = recognise(complement(g))
    return GsgCertificate(_gsg_verdict(rep, co_rep), rep, co_rep)


def check_representation(g: Graph, rep: Representation) -> bool:
    """Independent validator for a claimed representation.

    True iff central and sides partition the vertices, each part is a
    clique, every side is non-empty, and no edge joins two different
    sides. O(n^2).
    """
    n = g.n
    if rep.central.n != n or any(s.n != n for s in rep.sides):
        return False
    parts = [rep.central.mask] + [s.mask for s in rep.sides]
    if any(m == 0 for m in parts[1:]):
        return False
    union = 0
    total = 0
    for m in parts:
        union |= m
        total += m.bit_count()
    if union != (1 << n) - 1 or total != n:
        return False
    rows = g._rows
    for m in parts:
        for v in _bits(m):
            if (m & ~(1 << v)) & ~rows[v]:
                return False
    side_union = union & ~rep.central.mask
    for m in parts[1:]:
        other = side_union & ~m
        for v in _bits(m):
            if rows[v] & other:
                return False
    return True
