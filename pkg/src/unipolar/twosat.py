"""Linear-time 2-SAT with satisfying-assignment extraction.

A clause is a disjunction of two literals. Solving goes through the
implication graph on 2n literal nodes: clause (a or b) contributes the
edges not-a -> b and not-b -> a. The formula is unsatisfiable iff some
variable shares a strongly connected component with its own negation;
otherwise assigning each variable by the component order of its two
literals satisfies every clause.

Two execution paths share that scheme. Small formulas run an in-repo
iterative Tarjan SCC whose labels are in completion order by construction.
Large formulas hand the SCC computation to scipy's compiled kernel; since
scipy does not document label order, the derived assignment is checked
against every clause (one vectorized pass) and the Tarjan path is rerun in
the unlikely event the check fails. The unsatisfiability test compares
labels for equality only, which no label order can break.

Literals are (variable, polarity) pairs; internally literal k is encoded
as 2k for the positive and 2k+1 for the negative form, so negation is a
bit flip.
"""

from __future__ import annotations

from array import array
from collections.abc import Iterator
from typing import NamedTuple, Optional

import numpy as np

__all__ = [
    "Literal",
    "pos",
    "neg",
    "TwoSatFormula",
    "solve",
    "satisfies",
    "dump_implication_graph",
]

# Below this many clauses the pure-Python Tarjan beats the scipy call overhead.
_SPARSE_THRESHOLD = 4096


class Literal(NamedTuple):
    var: int
    positive: bool

    def negated(self) -> "Literal":
        return Literal(self.var, not self.positive)


def pos(var: int) -> Literal:
    return Literal(var, True)


def neg(var: int) -> Literal:
    return Literal(var, False)


def _encode(lit: Literal, num_vars: int) -> int:
    var, positive = lit
    if not 0 <= var < num_vars:
        raise ValueError(f"literal variable {var} outside 0..{num_vars - 1}")
    return 2 * var + (0 if positive else 1)


def _decode(code: int) -> Literal:
    return Literal(code >> 1, code & 1 == 0)


class TwoSatFormula:
    """Conjunction of 2-clauses over a fixed set of boolean variables.

    Clauses are kept in insertion order; duplicates are not collapsed
    (deduplication would cost more than it saves at quadratic clause
    counts).
    """

    __slots__ = ("num_vars", "_a", "_b")

    def __init__(self, num_vars: int):
        if num_vars < 0:
            raise ValueError(f"variable count must be non-negative, got {num_vars}")
        self.num_vars = num_vars
        self._a = array("i")
        self._b = array("i")

    @property
    def num_clauses(self) -> int:
        return len(self._a)

    def add_clause(self, a: Literal, b: Literal) -> None:
        """Append the clause (a or b)."""
        self._a.append(_encode(a, self.num_vars))
        self._b.append(_encode(b, self.num_vars))

    def add_clauses_encoded(self, a: np.ndarray, b: np.ndarray) -> None:
        """Bulk-append clauses given as arrays of encoded literals (2v / 2v+1)."""
        a = np.ascontiguousarray(a, dtype=np.int32)
        b = np.ascontiguousarray(b, dtype=np.int32)
        if a.shape != b.shape or a.ndim != 1:
            raise ValueError("encoded literal arrays must be 1-d and equally long")
        if a.size:
            lo = min(a.min(), b.min())
            hi = max(a.max(), b.max())
            if lo < 0 or hi >= 2 * self.num_vars:
                raise ValueError("encoded literal outside variable range")
        self._a.frombytes(a.tobytes())
        self._b.frombytes(b.tobytes())

    def clauses(self) -> Iterator[tuple[Literal, Literal]]:
        for ca, cb in zip(self._a, self._b):
            yield _decode(ca), _decode(cb)

    def encoded(self) -> tuple[np.ndarray, np.ndarray]:
        """Clause literal codes as two parallel int32 arrays."""
        return (
            np.frombuffer(self._a.tobytes(), dtype=np.int32),
            np.frombuffer(self._b.tobytes(), dtype=np.int32),
        )

    def __repr__(self) -> str:
        return f"TwoSatFormula(vars={self.num_vars}, clauses={self.num_clauses})"


def satisfies(fm: TwoSatFormula, assignment: np.ndarray) -> bool:
    """Evaluate the whole formula under a total truth assignment."""
    assignment = np.asarray(assignment, dtype=bool)
    if assignment.shape != (fm.num_vars,):
        raise ValueError(f"assignment must cover exactly {fm.num_vars} variables")
    if fm.num_clauses == 0:
        return True
    a, b = fm.encoded()
    return _clauses_hold(a, b, assignment)


def _clauses_hold(a: np.ndarray, b: np.ndarray, assignment: np.ndarray) -> bool:
    va = assignment[a >> 1] ^ (a & 1).astype(bool)
    vb = assignment[b >> 1] ^ (b & 1).astype(bool)
    return bool(np.all(va | vb))


def _tarjan_labels(adj: list[list[int]]) -> tuple[list[int], int]:
    """SCC labels in completion order (sinks first), plus edge-visit count."""
    n = len(adj)
    index = [-1] * n
    low = [0] * n
    label = [-1] * n
    on_stack = bytearray(n)
    scc_stack: list[int] = []
    next_index = 0
    next_label = 0
    visits = 0
    for root in range(n):
        if index[root] != -1:
            continue
        work: list[list[int]] = [[root, 0]]
        while work:
            frame = work[-1]
            v, ei = frame
            if ei == 0:
                index[v] = low[v] = next_index
                next_index += 1
                scc_stack.append(v)
                on_stack[v] = 1
            nbrs = adj[v]
            descended = False
            while ei < len(nbrs):
                w = nbrs[ei]
                ei += 1
                visits += 1
                if index[w] == -1:
                    frame[1] = ei
                    work.append([w, 0])
                    descended = True
                    break
                if on_stack[w] and index[w] < low[v]:
                    low[v] = index[w]
            if descended:
                continue
            work.pop()
            if work:
                p = work[-1][0]
                if low[v] < low[p]:
                    low[p] = low[v]
            if low[v] == index[v]:
                while True:
                    w = scc_stack.pop()
                    on_stack[w] = 0
                    label[w] = next_label
                    if w == v:
                        break
                next_label += 1
    return label, visits


def _solve_tarjan(fm: TwoSatFormula, with_visits: bool = False):
    n_lits = 2 * fm.num_vars
    adj: list[list[int]] = [[] for _ in range(n_lits)]
    for ca, cb in zip(fm._a, fm._b):
        adj[ca ^ 1].append(cb)
        adj[cb ^ 1].append(ca)
    labels, visits = _tarjan_labels(adj)
    result = _assignment_from_labels(labels, fm.num_vars)
    return (result, visits) if with_visits else result


def _assignment_from_labels(labels, num_vars: int) -> Optional[np.ndarray]:
    assignment = np.empty(num_vars, dtype=bool)
    for v in range(num_vars):
        lp, ln = labels[2 * v], labels[2 * v + 1]
        if lp == ln:
            return None
        # smaller completion-order label = topologically later component
        assignment[v] = lp < ln
    return assignment


def _solve_sparse(fm: TwoSatFormula) -> Optional[np.ndarray]:
    from scipy.sparse import csr_matrix
    from scipy.sparse.csgraph import connected_components

    a, b = fm.encoded()
    src = np.concatenate([a ^ 1, b ^ 1])
    dst = np.concatenate([b, a])
    n_lits = 2 * fm.num_vars
    graph = csr_matrix(
        (np.ones(src.shape[0], dtype=np.int8), (src, dst)), shape=(n_lits, n_lits)
    )
    _, labels = connected_components(graph, directed=True, connection="strong")
    lp = labels[0::2]
    ln = labels[1::2]
    if np.any(lp == ln):
        return None
    candidate = lp < ln
    if _clauses_hold(a, b, candidate):
        return candidate
    # scipy labels were not in completion order; recompute with the Tarjan path
    return _solve_tarjan(fm)


def solve(fm: TwoSatFormula) -> Optional[np.ndarray]:
    """Satisfying assignment as a boolean array per variable, or None.

    Runs in O(n + m). A returned assignment satisfies every clause; None
    means no assignment does.
    """
    if fm.num_vars == 0:
        return np.zeros(0, dtype=bool)
    if fm.num_clauses <= _SPARSE_THRESHOLD:
        return _solve_tarjan(fm)
    return _solve_sparse(fm)


def dump_implication_graph(fm: TwoSatFormula, out) -> None:
    """Write the implication edges one per line, for debugging.

    Literals print as ``v3`` / ``!v3``; each clause contributes its two
    contrapositive edges.
    """

    def name(code: int) -> str:
        return f"{'' if code & 1 == 0 else '!'}v{code >> 1}"

    for ca, cb in zip(fm._a, fm._b):
        out.write(f"{name(ca ^ 1)} -> {name(cb)}\n")
        out.write(f"{name(cb ^ 1)} -> {name(ca)}\n")
