"""Seeded random instances: planted unipolar graphs, G(n,p), perturbations.

All randomness comes from numpy's PCG64 seeded through SeedSequence, with
one spawned stream per structural choice (labelling, side sizes, cross
edges, complement coin). Changing one parameter therefore reshuffles only
the stream it feeds; identical parameters and seed reproduce the same
graph on any platform.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .graphs import Graph, VertexSet, complement
from .recognition import (
    GsgCertificate,
    Representation,
    VERDICT_CO_UNIPOLAR,
    VERDICT_UNIPOLAR,
)

__all__ = ["GenParams", "gen_unipolar", "gen_gsg", "gen_gnp", "perturb"]


@dataclass(frozen=True)
class GenParams:
    """Knobs for planted instances.

    central_fraction sets |C0| = round(c * n); side sizes are geometric
    with the given mean (the defaults c = 0.5, mean 2, p_cross = 0.5 land
    near the n^2/4-edge regime typical of these graphs). ``complement``
    forces the gen_gsg side when set; None draws a fair coin from the seed.
    """

    n: int
    seed: int = 0
    central_fraction: float = 0.5
    side_mean: float = 2.0
    p_cross: float = 0.5
    complement: Optional[bool] = None

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"n must be non-negative, got {self.n}")
        if not 0.0 <= self.central_fraction <= 1.0:
            raise ValueError(f"central_fraction must be in [0, 1], got {self.central_fraction}")
        if not 0.0 <= self.p_cross <= 1.0:
            raise ValueError(f"p_cross must be in [0, 1], got {self.p_cross}")
        if self.side_mean < 1.0:
            raise ValueError(f"side_mean must be at least 1, got {self.side_mean}")


def _streams(seed: int, count: int):
    children = np.random.SeedSequence(seed).spawn(count)
    return [np.random.Generator(np.random.PCG64(c)) for c in children]


def gen_unipolar(params: GenParams) -> tuple[Graph, Representation]:
    """Planted unipolar graph plus the representation that was planted.

    Layout is built canonically (central block first, then consecutive
    side cliques) and relabelled by a random permutation so vertex order
    carries no structural hint.
    """
    n = params.n
    rng_perm, rng_sides, rng_cross, _ = _streams(params.seed, 4)
    n0 = round(params.central_fraction * n)
    n1 = n - n0

    side_sizes: list[int] = []
    remaining = n1
    while remaining > 0:
        size = min(int(rng_sides.geometric(1.0 / params.side_mean)), remaining)
        side_sizes.append(size)
        remaining -= size

    adj = np.zeros((n, n), dtype=bool)
    if n0:
        adj[:n0, :n0] = True
    start = n0
    for size in side_sizes:
        adj[start : start + size, start : start + size] = True
        start += size
    if n0 and n1:
        cross = rng_cross.random((n0, n1)) < params.p_cross
        adj[:n0, n0:] = cross
        adj[n0:, :n0] = cross.T
    np.fill_diagonal(adj, False)

    label = rng_perm.permutation(n)
    relabelled = np.zeros_like(adj)
    if n:
        relabelled[np.ix_(label, label)] = adj
    g = Graph.from_matrix(relabelled)

    central = VertexSet.of(n, (int(label[i]) for i in range(n0)))
    sides = []
    start = n0
    for size in side_sizes:
        sides.append(VertexSet.of(n, (int(label[i]) for i in range(start, start + size))))
        start += size
    return g, Representation(central, tuple(sides))


def gen_gsg(params: GenParams) -> tuple[Graph, GsgCertificate]:
    """Planted generalised split instance; a seeded coin picks the side.

    The certificate records only the planted side (the instance may happen
    to satisfy the other one as well).
    """
    g, rep = gen_unipolar(params)
    if params.complement is None:
        _, _, _, rng_flip = _streams(params.seed, 4)
        flipped = bool(rng_flip.random() < 0.5)
    else:
        flipped = params.complement
    if flipped:
        return complement(g), GsgCertificate(VERDICT_CO_UNIPOLAR, None, rep)
    return g, GsgCertificate(VERDICT_UNIPOLAR, rep, None)


def gen_gnp(n: int, prob: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p), deterministic per seed."""
    if not 0.0 <= prob <= 1.0:
        raise ValueError(f"edge probability must be in [0, 1], got {prob}")
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed)))
    adj = np.zeros((n, n), dtype=bool)
    if n > 1:
        upper = np.triu(rng.random((n, n)) < prob, k=1)
        adj = upper | upper.T
    return Graph.from_matrix(adj)


def perturb(g: Graph, flips: int, seed: int) -> Graph:
    """Toggle ``flips`` distinct vertex pairs, chosen uniformly by seed."""
    n = g.n
    total = n * (n - 1) // 2
    if not 0 <= flips <= total:
        raise ValueError(f"flips must be in 0..{total}, got {flips}")
    if flips == 0:
        return g
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed)))
    picks = rng.choice(total, size=flips, replace=False)
    us, vs = np.triu_indices(n, k=1)
    rows = list(g._rows)
    for k in picks:
        u = int(us[k])
        v = int(vs[k])
        rows[u] ^= 1 << v
        rows[v] ^= 1 << u
    return Graph(n, tuple(rows))
