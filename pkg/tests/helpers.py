"""Shared test utilities: tiny named graphs and independent brute forces.

The brute forces here are deliberately dumb (subset and assignment
enumeration, recursive matching search) so they cannot share a bug with
the fast paths they check.
"""

from __future__ import annotations

import itertools

from unipolar import Graph, VertexSet, graph_from_edges


def path(n: int) -> Graph:
    return graph_from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    return graph_from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def clique(n: int) -> Graph:
    return graph_from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def star(leaves: int) -> Graph:
    return graph_from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def edgeless(n: int) -> Graph:
    return graph_from_edges(n, [])


def pair_list(n: int) -> list[tuple[int, int]]:
    return [(u, v) for u in range(n) for v in range(u + 1, n)]


def graph_from_code(n: int, code: int) -> Graph:
    """Labeled graph from the bits of code, pair order lexicographic."""
    edges = [p for k, p in enumerate(pair_list(n)) if (code >> k) & 1]
    return graph_from_edges(n, edges)


def all_graphs(n: int):
    for code in range(1 << (n * (n - 1) // 2)):
        yield graph_from_code(n, code)


def is_valid_central_choice(g: Graph, central: set[int], block_of) -> bool:
    """Semantic ground truth used against verify: does picking ``central``
    turn the block partition into a representation it decomposes?

    Requires the central set to be a clique and, for every remaining pair,
    adjacency exactly when the two share a block.
    """
    for u, v in itertools.combinations(sorted(central), 2):
        if not g.adjacent(u, v):
            return False
    rest = [v for v in range(g.n) if v not in central]
    for u, v in itertools.combinations(rest, 2):
        if g.adjacent(u, v) != (block_of[u] == block_of[v]):
            return False
    return True


def satisfying_central_sets(g: Graph, block_of) -> set[frozenset[int]]:
    """All central-clique choices compatible with the partition, by brute force."""
    out = set()
    for bits in range(1 << g.n):
        central = {v for v in range(g.n) if (bits >> v) & 1}
        if is_valid_central_choice(g, central, block_of):
            out.add(frozenset(central))
    return out


def brute_max_matching(adj: list[list[int]], n_right: int) -> int:
    """Maximum matching size by exhaustive search over left vertices."""

    def go(u: int, used_right: int) -> int:
        if u == len(adj):
            return 0
        best = go(u + 1, used_right)
        for r in adj[u]:
            if not (used_right >> r) & 1:
                best = max(best, 1 + go(u + 1, used_right | (1 << r)))
        return best

    return go(0, 0)


def brute_alpha(g: Graph) -> int:
    best = 0
    for bits in range(1 << g.n):
        members = [v for v in range(g.n) if (bits >> v) & 1]
        if all(not g.adjacent(u, v) for u, v in itertools.combinations(members, 2)):
            best = max(best, len(members))
    return best


def vs(g_or_n, members) -> VertexSet:
    n = g_or_n.n if isinstance(g_or_n, Graph) else g_or_n
    return VertexSet.of(n, members)
