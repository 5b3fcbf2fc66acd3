"""Counting and enumeration engines: transfer matrices, boundary
constraints, admissible fillings and their exact (count, total weight)
statistics via dynamic programming.

All counts and weights are exact Python integers; expected weights are
Fractions.  The DP strategies cover the block shapes used throughout:
paths, cycles, and 4-wide grid blocks.  Anything else falls back to
brute-force enumeration under a configurable cap.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

import numpy as np

from .graphs import Block, Graph
from .heights import (  # noqa: F401  (re-exported counting entry points)
    BoundaryConstraint,
    enumerate_cover_pairs,
    enumerate_heights,
)

#: raw-assignment cap for brute-force fallbacks
ENUMERATION_CAP = 1 << 26


class EnumerationCapError(RuntimeError):
    """Raised when a brute-force path would exceed ENUMERATION_CAP."""


@dataclass(frozen=True)
class TransferMatrices:
    """0/1 matrices over values {0..k}: P allows steps of at most 1,
    Q steps of at most 2."""

    k: int

    @property
    def P(self) -> np.ndarray:
        n = self.k + 1
        i, j = np.indices((n, n))
        return (np.abs(i - j) <= 1).astype(int).astype(object)

    @property
    def Q(self) -> np.ndarray:
        n = self.k + 1
        i, j = np.indices((n, n))
        return (np.abs(i - j) <= 2).astype(int).astype(object)


def count_cycle_heights(k: int, length: int) -> int:
    """Number of k-heights of a cycle of the given length: tr(P^L)."""
    if length < 3:
        raise ValueError("cycle length must be >= 3")
    P = TransferMatrices(k).P
    return int(np.trace(np.linalg.matrix_power(P, length)))


def count_path_heights(k: int, length: int) -> int:
    """Number of k-heights of a path on `length` vertices: 1^T P^{L-1} 1."""
    if length < 1:
        raise ValueError("path needs at least one vertex")
    P = TransferMatrices(k).P
    ones = np.ones(k + 1, dtype=object)
    return int(ones @ np.linalg.matrix_power(P, length - 1) @ ones)


def count_rect_extensible(k: int) -> int:
    """Number of extensible boundary constraints of a 4x4 grid block.

    The boundary is a 16-cycle of alternating corner-jump/side steps;
    extensibility reduces to the trace of (Q P^3)^4.
    """
    tm = TransferMatrices(k)
    M = np.linalg.matrix_power(tm.P, 3) @ tm.Q
    return int(np.trace(np.linalg.matrix_power(M, 4)))


def _allowed_sets(graph: Graph, block: Block,
                  constraint: BoundaryConstraint, k: int) -> list[list[int]]:
    """Sorted allowed-value lists per block vertex implied by the pins."""
    return [sorted(s) for s in constraint.allowed(graph, block, k)]


def _shape_edges(block: Block) -> set[tuple[int, int]] | None:
    """Internal edge set (as index pairs into block order) implied by the
    declared shape, or None for brute force."""
    m = len(block.vertices)
    if block.shape == "path":
        return {(i, i + 1) for i in range(m - 1)}
    if block.shape == "cycle":
        e = {(i, (i + 1) % m) for i in range(m)}
        return {(min(a, b), max(a, b)) for a, b in e}
    if block.shape == "grid":
        if m % 4:
            return None
        edges = set()
        for r in range(m // 4):
            for c in range(4):
                if c < 3:
                    edges.add((4 * r + c, 4 * r + c + 1))
                if r < m // 4 - 1:
                    edges.add((4 * r + c, 4 * (r + 1) + c))
        return edges
    return None


def check_shape(graph: Graph, block: Block) -> bool:
    """True iff the block's declared shape matches its induced edges."""
    want = _shape_edges(block)
    if want is None:
        return False
    verts = block.vertices
    have = {
        (i, j)
        for i in range(len(verts))
        for j in range(i + 1, len(verts))
        if graph.has_edge(verts[i], verts[j])
    }
    return have == want


@dataclass(frozen=True)
class FillingStats:
    """Exact |Omega_{B|X}| and the total weight of all fillings."""

    count: int
    total_weight: int

    @property
    def expected_weight(self) -> Fraction:
        if self.count == 0:
            raise ZeroDivisionError("no admissible fillings")
        return Fraction(self.total_weight, self.count)

    @property
    def extensible(self) -> bool:
        return self.count > 0


def _path_dp(allowed: list[list[int]]) -> FillingStats:
    # f[x] = (count, total weight) of prefixes ending in value x
    f = {x: (1, x) for x in allowed[0]}
    for vals in allowed[1:]:
        g = {}
        for y in vals:
            c = w = 0
            for x, (cx, wx) in f.items():
                if abs(x - y) <= 1:
                    c += cx
                    w += wx + y * cx
            if c:
                g[y] = (c, w)
        f = g
    return FillingStats(sum(c for c, _ in f.values()),
                        sum(w for _, w in f.values()))


def _cycle_dp(allowed: list[list[int]]) -> FillingStats:
    count = weight = 0
    for first in allowed[0]:
        f = {first: (1, first)}
        for vals in allowed[1:]:
            g = {}
            for y in vals:
                c = w = 0
                for x, (cx, wx) in f.items():
                    if abs(x - y) <= 1:
                        c += cx
                        w += wx + y * cx
                if c:
                    g[y] = (c, w)
            f = g
        for x, (cx, wx) in f.items():
            if abs(x - first) <= 1:
                count += cx
                weight += wx
    return FillingStats(count, weight)


def _grid_dp(allowed: list[list[int]]) -> FillingStats:
    """Row-by-row DP over 4-wide rows; state = previous row vector."""
    rows = [allowed[4 * r: 4 * r + 4] for r in range(len(allowed) // 4)]

    def row_vectors(cells):
        out = []
        for vec in product(*cells):
            if all(abs(vec[i] - vec[i + 1]) <= 1 for i in range(3)):
                out.append(vec)
        return out

    f = {vec: (1, sum(vec)) for vec in row_vectors(rows[0])}
    for cells in rows[1:]:
        g = {}
        for vec in row_vectors(cells):
            c = w = 0
            s = sum(vec)
            for prev, (cp, wp) in f.items():
                if all(abs(prev[i] - vec[i]) <= 1 for i in range(4)):
                    c += cp
                    w += wp + s * cp
            if c:
                g[vec] = (c, w)
        f = g
    return FillingStats(sum(c for c, _ in f.values()),
                        sum(w for _, w in f.values()))


def _brute_stats(graph: Graph, block: Block,
                 allowed: list[list[int]]) -> FillingStats:
    raw = 1
    for vals in allowed:
        raw *= max(len(vals), 1)
    if raw > ENUMERATION_CAP:
        raise EnumerationCapError(
            f"{raw} raw assignments exceed cap {ENUMERATION_CAP}; "
            "declare a DP shape or use counting operations"
        )
    verts = block.vertices
    pos = {v: i for i, v in enumerate(verts)}
    internal = [
        (pos[u], pos[v]) for u, v in graph.edges if u in pos and v in pos
    ]
    count = weight = 0
    for vec in product(*allowed):
        if all(abs(vec[i] - vec[j]) <= 1 for i, j in internal):
            count += 1
            weight += sum(vec)
    return FillingStats(count, weight)


def filling_stats(graph: Graph, block: Block,
                  constraint: BoundaryConstraint, k: int) -> FillingStats:
    """Exact count and total weight of admissible fillings of the block
    under the boundary constraint."""
    allowed = _allowed_sets(graph, block, constraint, k)
    if any(not a for a in allowed):
        return FillingStats(0, 0)
    if block.shape == "path" and len(block.vertices) >= 1:
        return _path_dp(allowed)
    if block.shape == "cycle" and len(block.vertices) >= 3:
        return _cycle_dp(allowed)
    if block.shape == "grid" and len(block.vertices) % 4 == 0:
        return _grid_dp(allowed)
    return _brute_stats(graph, block, allowed)


def is_extensible(graph: Graph, block: Block,
                  constraint: BoundaryConstraint, k: int) -> bool:
    """True iff at least one admissible filling exists (DP feasibility)."""
    return filling_stats(graph, block, constraint, k).count > 0


def enumerate_fillings(graph: Graph, block: Block,
                       constraint: BoundaryConstraint, k: int):
    """All admissible fillings as tuples in block-vertex order,
    lexicographic."""
    allowed = _allowed_sets(graph, block, constraint, k)
    if any(not a for a in allowed):
        return []
    verts = block.vertices
    pos = {v: i for i, v in enumerate(verts)}
    internal = [
        (pos[u], pos[v]) for u, v in graph.edges if u in pos and v in pos
    ]
    by_right = [[] for _ in verts]
    for i, j in internal:
        i, j = min(i, j), max(i, j)
        by_right[j].append(i)
    out = []
    vec = [0] * len(verts)

    def rec(i):
        if i == len(verts):
            out.append(tuple(vec))
            return
        for x in allowed[i]:
            if all(abs(vec[j] - x) <= 1 for j in by_right[i]):
                vec[i] = x
                rec(i + 1)

    rec(0)
    return out


def enumerate_boundary_constraints(graph: Graph, block: Block, k: int):
    """Stream all assignments of the boundary valid on the induced
    boundary subgraph, in lexicographic order of values."""
    from .graphs import boundary

    bdry = sorted(boundary(graph, block))
    internal = [
        (i, j)
        for i in range(len(bdry))
        for j in range(i + 1, len(bdry))
        if graph.has_edge(bdry[i], bdry[j])
    ]
    by_right = [[] for _ in bdry]
    for i, j in internal:
        by_right[j].append(i)
    vec = [0] * len(bdry)

    def rec(i):
        if i == len(bdry):
            yield BoundaryConstraint(tuple(zip(bdry, vec)))
            return
        for x in range(k + 1):
            if all(abs(vec[j] - x) <= 1 for j in by_right[i]):
                vec[i] = x
                yield from rec(i + 1)

    yield from rec(0)
