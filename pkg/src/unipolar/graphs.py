"""Dense undirected graphs and vertex sets backed by word-packed bitsets.

Vertices are the integers 0..n-1. Each adjacency row is kept as one Python
int used as a bit mask, so set algebra on rows (intersection, union,
difference) runs on machine words. Relative to the hashtable cost model the
recognition analysis assumes (intersection O(min(|A|,|B|)), union
O(|A|+|B|), difference O(|A|), membership O(1)), these bounds hold up to a
factor of the word size; on the dense graphs this library targets the
bitset is faster in practice and makes iteration order deterministic.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator

import numpy as np

__all__ = [
    "Graph",
    "VertexSet",
    "GraphInputError",
    "graph_from_edges",
    "complement",
    "closed_neighborhood",
    "is_clique",
]


class GraphInputError(ValueError):
    """Raised for malformed graph construction input."""


def _bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class VertexSet:
    """Immutable subset of {0, .., n-1} stored as a single bit mask.

    Instances are value-like: operators return new sets, and two sets are
    equal when they have the same universe size and members. Iteration is
    always in ascending vertex order.
    """

    __slots__ = ("n", "mask")

    def __init__(self, n: int, mask: int = 0):
        if n < 0:
            raise ValueError(f"universe size must be non-negative, got {n}")
        if mask < 0 or mask >> n:
            raise ValueError(f"mask has bits outside universe of size {n}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "mask", mask)

    def __setattr__(self, name, value):
        raise AttributeError("VertexSet is immutable")

    @classmethod
    def empty(cls, n: int) -> "VertexSet":
        return cls(n, 0)

    @classmethod
    def full(cls, n: int) -> "VertexSet":
        return cls(n, (1 << n) - 1)

    @classmethod
    def of(cls, n: int, vertices: Iterable[int]) -> "VertexSet":
        mask = 0
        for v in vertices:
            if not 0 <= v < n:
                raise ValueError(f"vertex {v} outside universe of size {n}")
            mask |= 1 << v
        return cls(n, mask)

    def _check_universe(self, other: "VertexSet") -> None:
        if self.n != other.n:
            raise ValueError(f"universe mismatch: {self.n} vs {other.n}")

    def __and__(self, other: "VertexSet") -> "VertexSet":
        self._check_universe(other)
        return VertexSet(self.n, self.mask & other.mask)

    def __or__(self, other: "VertexSet") -> "VertexSet":
        self._check_universe(other)
        return VertexSet(self.n, self.mask | other.mask)

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        self._check_universe(other)
        return VertexSet(self.n, self.mask & ~other.mask)

    def __contains__(self, v: int) -> bool:
        return 0 <= v < self.n and (self.mask >> v) & 1 == 1

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __bool__(self) -> bool:
        return self.mask != 0

    def __iter__(self) -> Iterator[int]:
        return _bits(self.mask)

    def __eq__(self, other) -> bool:
        if not isinstance(other, VertexSet):
            return NotImplemented
        return self.n == other.n and self.mask == other.mask

    def __hash__(self) -> int:
        return hash((self.n, self.mask))

    def __repr__(self) -> str:
        return f"VertexSet(n={self.n}, {{{', '.join(map(str, self))}}})"

    def min(self) -> int:
        """Smallest member; raises on the empty set."""
        if not self.mask:
            raise ValueError("min() of an empty VertexSet")
        return (self.mask & -self.mask).bit_length() - 1

    def issubset(self, other: "VertexSet") -> bool:
        self._check_universe(other)
        return self.mask & ~other.mask == 0

    def isdisjoint(self, other: "VertexSet") -> bool:
        self._check_universe(other)
        return self.mask & other.mask == 0


class Graph:
    """Immutable dense undirected graph; one bit-mask adjacency row per vertex.

    ``rows[u]`` has bit v set iff uv is an edge. The relation is symmetric
    and irreflexive. Construction goes through :func:`graph_from_edges`,
    :meth:`from_matrix`, or :meth:`from_rows` (trusted, validated cheaply).
    """

    __slots__ = ("n", "_rows", "_m")

    def __init__(self, n: int, rows: tuple[int, ...]):
        if len(rows) != n:
            raise ValueError(f"expected {n} adjacency rows, got {len(rows)}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "_rows", rows)
        object.__setattr__(self, "_m", None)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @classmethod
    def from_rows(cls, rows: Iterable[int]) -> "Graph":
        rows = tuple(rows)
        g = cls(len(rows), rows)
        g._validate()
        return g

    @classmethod
    def from_matrix(cls, a: np.ndarray) -> "Graph":
        """Build from a square boolean adjacency matrix (symmetry enforced)."""
        a = np.asarray(a, dtype=bool)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise GraphInputError(f"adjacency matrix must be square, got {a.shape}")
        if a.diagonal().any():
            raise GraphInputError("adjacency matrix has a set diagonal (self-loop)")
        if not np.array_equal(a, a.T):
            raise GraphInputError("adjacency matrix is not symmetric")
        packed = np.packbits(a, axis=1, bitorder="little")
        rows = tuple(int.from_bytes(packed[i].tobytes(), "little") for i in range(a.shape[0]))
        return cls(a.shape[0], rows)

    def _validate(self) -> None:
        full = (1 << self.n) - 1
        for v, row in enumerate(self._rows):
            if row < 0 or row & ~full:
                raise GraphInputError(f"row {v} has bits outside the vertex range")
            if (row >> v) & 1:
                raise GraphInputError(f"self-loop on vertex {v}")
        for v, row in enumerate(self._rows):
            for u in _bits(row):
                if not (self._rows[u] >> v) & 1:
                    raise GraphInputError(f"asymmetric adjacency between {u} and {v}")

    @property
    def edge_count(self) -> int:
        if self._m is None:
            object.__setattr__(self, "_m", sum(r.bit_count() for r in self._rows) // 2)
        return self._m

    def adjacent(self, u: int, v: int) -> bool:
        return (self._rows[u] >> v) & 1 == 1

    def degree(self, v: int) -> int:
        return self._rows[v].bit_count()

    def row_mask(self, v: int) -> int:
        """Open neighbourhood of v as a raw bit mask."""
        return self._rows[v]

    def row(self, v: int) -> VertexSet:
        """Open neighbourhood N(v)."""
        return VertexSet(self.n, self._rows[v])

    def edges(self) -> Iterator[tuple[int, int]]:
        """All edges as pairs (u, v) with u < v, lexicographic."""
        for u in range(self.n):
            for v in _bits(self._rows[u] >> (u + 1)):
                yield u, u + 1 + v

    def to_matrix(self) -> np.ndarray:
        """Dense boolean adjacency matrix (fresh array)."""
        n = self.n
        if n == 0:
            return np.zeros((0, 0), dtype=bool)
        nbytes = (n + 7) // 8
        buf = b"".join(r.to_bytes(nbytes, "little") for r in self._rows)
        bits = np.unpackbits(np.frombuffer(buf, dtype=np.uint8), bitorder="little")
        return bits.reshape(n, 8 * nbytes)[:, :n].astype(bool)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self.n, self._rows))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"


def graph_from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Graph on n vertices with the given undirected edges.

    Duplicate pairs (in either orientation) collapse to one edge. Vertices
    outside 0..n-1 and self-loops are rejected, naming the offending pair.
    """
    rows = [0] * n
    for pair in edges:
        u, v = pair
        if not (0 <= u < n and 0 <= v < n):
            raise GraphInputError(f"edge {pair!r} has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphInputError(f"edge {pair!r} is a self-loop")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def complement(g: Graph) -> Graph:
    """Complement graph: uv is an edge iff it is not one in g (u != v)."""
    full = (1 << g.n) - 1
    rows = tuple((~g.row_mask(v) & full) & ~(1 << v) for v in range(g.n))
    return Graph(g.n, rows)


def closed_neighborhood(g: Graph, v: int) -> VertexSet:
    """N(v) together with v itself."""
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} outside 0..{g.n - 1}")
    return VertexSet(g.n, g.row_mask(v) | (1 << v))


def is_clique(g: Graph, s: VertexSet) -> bool:
    """True iff every two members of s are adjacent (vacuously for |s| <= 1).

    Validator-grade: linear passes over the members' rows, no amortization.
    """
    if s.n != g.n:
        raise ValueError(f"vertex set universe {s.n} does not match graph on {g.n}")
    m = s.mask
    for v in _bits(m):
        if (m & ~(1 << v)) & ~g.row_mask(v):
            return False
    return True
