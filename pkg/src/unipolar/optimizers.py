"""Optimization on graphs with a known unipolar representation.

With a central clique C0 and side cliques C1..Ck in hand, the four classic
problems reduce to cheap structure plus bipartite matching:

* maximum stable set / minimum clique cover: scan for a central vertex
  whose neighbourhood misses every side clique somewhere; its existence
  decides between k+1 and k.
* maximum clique / minimum colouring: any clique lives inside one piece
  G[C0 + Ci]. Each piece is co-bipartite, so its clique and chromatic
  numbers come from a maximum matching in the bipartite complement between
  C0 and Ci (the uncovered vertices of a minimum vertex cover form the
  clique; matched pairs are colour classes). Pieces share only C0, a clique
  cutset, so per-piece colourings merge without new colours.

Matching is Hopcroft-Karp, O((m + n) sqrt(n)); covers come from the usual
alternating-reachability construction, so cover size always equals
matching size.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .graphs import Graph, VertexSet, _bits
from .recognition import Representation, check_representation

__all__ = [
    "BipartiteGraph",
    "Matching",
    "Coloring",
    "max_matching",
    "min_vertex_cover",
    "solve_stable_set",
    "solve_clique_cover",
    "solve_max_clique",
    "solve_coloring",
]


class BipartiteGraph:
    """Bipartite graph over two disjoint label sets, edges across parts only.

    ``adj[i]`` lists right *positions* adjacent to the i-th left label.
    ``universe`` fixes the label space for VertexSet results; it defaults
    to one past the largest label.
    """

    __slots__ = ("left", "right", "adj", "universe")

    def __init__(self, left, right, adj, universe: int | None = None):
        self.left = tuple(left)
        self.right = tuple(right)
        self.adj = tuple(tuple(nbrs) for nbrs in adj)
        if len(self.adj) != len(self.left):
            raise ValueError("need one adjacency list per left vertex")
        for nbrs in self.adj:
            for r in nbrs:
                if not 0 <= r < len(self.right):
                    raise ValueError(f"right position {r} out of range")
        if set(self.left) & set(self.right):
            raise ValueError("left and right parts must be disjoint")
        if universe is None:
            universe = max(self.left + self.right, default=-1) + 1
        self.universe = universe

    @classmethod
    def from_edges(cls, left, right, edges, universe: int | None = None) -> "BipartiteGraph":
        left = tuple(left)
        right = tuple(right)
        rpos = {lab: i for i, lab in enumerate(right)}
        lpos = {lab: i for i, lab in enumerate(left)}
        adj: list[list[int]] = [[] for _ in left]
        for a, b in edges:
            if a in lpos and b in rpos:
                adj[lpos[a]].append(rpos[b])
            elif b in lpos and a in rpos:
                adj[lpos[b]].append(rpos[a])
            else:
                raise ValueError(f"edge ({a}, {b}) does not join the two parts")
        return cls(left, right, adj, universe)

    @property
    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self.adj)

    def __repr__(self) -> str:
        return f"BipartiteGraph(left={len(self.left)}, right={len(self.right)}, m={self.edge_count})"


@dataclass(frozen=True)
class Matching:
    """Vertex-disjoint edges of a bipartite graph, as (left, right) labels."""

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        seen: set[int] = set()
        for a, b in self.pairs:
            if a in seen or b in seen:
                raise ValueError("matching reuses a vertex")
            seen.add(a)
            seen.add(b)

    def __len__(self) -> int:
        return len(self.pairs)


@dataclass(frozen=True)
class Coloring:
    """Proper colouring: one colour index per vertex, colours 0..count-1."""

    color_of: tuple[int, ...]
    count: int


def _hopcroft_karp(adj, n_left: int, n_right: int) -> tuple[list[int], list[int]]:
    """Maximum matching by position; returns (pair_left, pair_right), -1 free."""
    pair_l = [-1] * n_left
    pair_r = [-1] * n_right
    dist = [0] * n_left
    trace = [-1] * n_left

    def bfs() -> bool:
        queue = deque()
        for u in range(n_left):
            if pair_l[u] == -1:
                dist[u] = 0
                queue.append(u)
            else:
                dist[u] = -1
        reachable_free = False
        while queue:
            u = queue.popleft()
            for r in adj[u]:
                w = pair_r[r]
                if w == -1:
                    reachable_free = True
                elif dist[w] == -1:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return reachable_free

    def dfs(root: int) -> bool:
        stack = [root]
        while stack:
            u = stack[-1]
            free_r = -1
            while ptr[u] < len(adj[u]):
                r = adj[u][ptr[u]]
                ptr[u] += 1
                w = pair_r[r]
                if w == -1:
                    free_r = r
                    break
                if dist[w] == dist[u] + 1:
                    trace[w] = r
                    stack.append(w)
                    free_r = -2
                    break
            if free_r == -1:
                dist[u] = -1
                stack.pop()
            elif free_r >= 0:
                r = free_r
                while stack:
                    u = stack.pop()
                    pair_l[u] = r
                    pair_r[r] = u
                    r = trace[u]
                return True
        return False

    while bfs():
        ptr = [0] * n_left
        for u in range(n_left):
            if pair_l[u] == -1:
                dfs(u)
    return pair_l, pair_r


def max_matching(b: BipartiteGraph) -> Matching:
    """Maximum-cardinality matching, O((m + n) sqrt(n))."""
    pair_l, _ = _hopcroft_karp(b.adj, len(b.left), len(b.right))
    pairs = tuple(
        (b.left[u], b.right[r]) for u, r in enumerate(pair_l) if r != -1
    )
    return Matching(pairs)


def min_vertex_cover(b: BipartiteGraph, m: Matching) -> VertexSet:
    """Vertex cover of the same size as the given maximum matching.

    Alternating reachability from the unmatched left vertices: the cover is
    the unreached left side plus the reached right side.
    """
    lpos = {lab: i for i, lab in enumerate(b.left)}
    rpos = {lab: i for i, lab in enumerate(b.right)}
    pair_l = [-1] * len(b.left)
    pair_r = [-1] * len(b.right)
    for a, bb in m.pairs:
        if a in lpos and bb in rpos:
            li, ri = lpos[a], rpos[bb]
        elif bb in lpos and a in rpos:
            li, ri = lpos[bb], rpos[a]
        else:
            raise ValueError(f"matching edge ({a}, {bb}) not between the parts")
        pair_l[li] = ri
        pair_r[ri] = li
    visited_l = [False] * len(b.left)
    visited_r = [False] * len(b.right)
    queue = deque(u for u in range(len(b.left)) if pair_l[u] == -1)
    for u in queue:
        visited_l[u] = True
    while queue:
        u = queue.popleft()
        for r in b.adj[u]:
            if pair_l[u] == r:
                continue
            if not visited_r[r]:
                visited_r[r] = True
                w = pair_r[r]
                if w != -1 and not visited_l[w]:
                    visited_l[w] = True
                    queue.append(w)
    cover = [b.left[u] for u in range(len(b.left)) if not visited_l[u]]
    cover += [b.right[r] for r in range(len(b.right)) if visited_r[r]]
    return VertexSet.of(b.universe, cover)


def _require_valid(g: Graph, rep: Representation) -> None:
    if not check_representation(g, rep):
        raise ValueError("representation does not validate against the graph")


def _qualifying_central(g: Graph, rep: Representation) -> int | None:
    """Lowest central vertex with no side clique inside its neighbourhood."""
    rows = g._rows
    for v in _bits(rep.central.mask):
        if all(side.mask & ~rows[v] for side in rep.sides):
            return v
    return None


def solve_stable_set(g: Graph, rep: Representation) -> VertexSet:
    """Maximum stable set: k+1 when some central vertex qualifies, else k."""
    _require_valid(g, rep)
    rows = g._rows
    k = rep.side_count
    if k == 0:
        if rep.central.mask:
            return VertexSet(g.n, 1 << rep.central.min())
        return VertexSet.empty(g.n)
    v = _qualifying_central(g, rep)
    chosen = 0
    if v is not None:
        chosen |= 1 << v
        for side in rep.sides:
            outside = side.mask & ~rows[v]
            chosen |= outside & -outside
    else:
        for side in rep.sides:
            chosen |= side.mask & -side.mask
    return VertexSet(g.n, chosen)


def solve_clique_cover(g: Graph, rep: Representation) -> list[VertexSet]:
    """Partition into the fewest cliques (equals the stable set size)."""
    _require_valid(g, rep)
    rows = g._rows
    k = rep.side_count
    if k == 0:
        return [rep.central] if rep.central.mask else []
    if _qualifying_central(g, rep) is not None:
        cover = [rep.central] if rep.central.mask else []
        return cover + list(rep.sides)
    # every central vertex has a side clique inside its neighbourhood;
    # merging it there keeps that part a clique
    extended = [side.mask for side in rep.sides]
    for v in _bits(rep.central.mask):
        for i, side in enumerate(rep.sides):
            if not side.mask & ~rows[v]:
                extended[i] |= 1 << v
                break
    return [VertexSet(g.n, m) for m in extended]


def _piece_matching(g: Graph, central_list: list[int], side: VertexSet):
    """Matching in the bipartite complement between the central and one side.

    Returns (right_list, adj, pair_l, pair_r) by position; matched pairs
    are non-adjacent in g and may share a colour / both sit outside a
    clique.
    """
    rows = g._rows
    right_list = list(_bits(side.mask))
    rindex = {v: i for i, v in enumerate(right_list)}
    adj = []
    for a in central_list:
        missing = side.mask & ~rows[a]
        adj.append([rindex[v] for v in _bits(missing)])
    pair_l, pair_r = _hopcroft_karp(adj, len(central_list), len(right_list))
    return right_list, adj, pair_l, pair_r


def solve_max_clique(g: Graph, rep: Representation) -> VertexSet:
    """Maximum clique via a König cover in each piece's bipartite complement.

    A set is a clique of G[C0 + Ci] iff it avoids every non-edge between C0
    and Ci, i.e. iff its complement within the piece covers the bipartite
    complement; so the piece's best clique is everything outside a minimum
    cover. Ties go to the lowest piece index.
    """
    _require_valid(g, rep)
    central_list = list(_bits(rep.central.mask))
    if not rep.sides:
        return rep.central
    best_mask = 0
    best_size = -1
    for side in rep.sides:
        right_list, adj, pair_l, pair_r = _piece_matching(g, central_list, side)
        matched = sum(1 for r in pair_l if r != -1)
        size = len(central_list) + len(right_list) - matched
        if size <= best_size:
            continue
        cover_l, cover_r = _koenig_cover_positions(adj, pair_l, pair_r)
        mask = 0
        for i, v in enumerate(central_list):
            if not cover_l[i]:
                mask |= 1 << v
        for i, v in enumerate(right_list):
            if not cover_r[i]:
                mask |= 1 << v
        best_mask = mask
        best_size = size
    return VertexSet(g.n, best_mask)


def _koenig_cover_positions(adj, pair_l, pair_r):
    """König cover membership flags by position, from a maximum matching."""
    n_left = len(pair_l)
    n_right = len(pair_r)
    visited_l = [False] * n_left
    visited_r = [False] * n_right
    queue = deque(u for u in range(n_left) if pair_l[u] == -1)
    for u in queue:
        visited_l[u] = True
    while queue:
        u = queue.popleft()
        for r in adj[u]:
            if pair_l[u] == r:
                continue
            if not visited_r[r]:
                visited_r[r] = True
                w = pair_r[r]
                if w != -1 and not visited_l[w]:
                    visited_l[w] = True
                    queue.append(w)
    cover_l = [not x for x in visited_l]
    return cover_l, visited_r


def solve_coloring(g: Graph, rep: Representation) -> Coloring:
    """Minimum proper colouring; colour count equals the clique number.

    Central vertices take colours 0..|C0|-1. In each piece, a side vertex
    matched (in the bipartite complement) to a central vertex inherits that
    colour; unmatched side vertices get fresh colours starting at |C0|,
    restarting per piece since different sides never touch.
    """
    _require_valid(g, rep)
    n = g.n
    central_list = list(_bits(rep.central.mask))
    color_of = [0] * n
    for i, v in enumerate(central_list):
        color_of[v] = i
    base = len(central_list)
    count = base
    for side in rep.sides:
        right_list, _, _, pair_r = _piece_matching(g, central_list, side)
        fresh = base
        for i, v in enumerate(right_list):
            u = pair_r[i]
            if u != -1:
                color_of[v] = color_of[central_list[u]]
            else:
                color_of[v] = fresh
                fresh += 1
        count = max(count, fresh)
    return Coloring(tuple(color_of), count)
