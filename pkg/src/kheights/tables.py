"""Vectorized table engines: block-divergence maximization over the full
boundary-constraint space for the case catalog (paths/cycles with pinned
boundary slots) and for 4x4 grid blocks.

The engines compute, for every assignment of the non-pivot boundary
vertices and every pivot value, the exact (count, total weight) of
admissible fillings via tensor dynamic programming, then maximize the
expected-weight gap over all extensible cover pairs.  Floats are used
only as a prefilter; every candidate maximum is confirmed with exact
integer arithmetic (all DP values stay far below 2^53, so the float
tensors are themselves exact).
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from . import _golden
from .divergence import DivergenceReport
from .enumeration import (
    ENUMERATION_CAP,
    EnumerationCapError,
    count_cycle_heights,
    count_path_heights,
)
from .graphs import CaseTag, case_slots
from .heights import BoundaryConstraint

# relative float margin below the running maximum within which candidates
# are re-checked exactly
_PREFILTER_MARGIN = 1e-9


def _step_matrix(k: int) -> np.ndarray:
    i, j = np.indices((k + 1, k + 1))
    return (np.abs(i - j) <= 1).astype(np.int64)


def _axis_mask(P: np.ndarray, axis: int, m: int) -> np.ndarray:
    """P[c, y] broadcast to (...axes..., frontier): value axis `axis`
    against the trailing frontier axis."""
    K = P.shape[0]
    shape = [1] * (m + 1)
    shape[axis] = K
    shape[m] = K
    return P.reshape(shape)


def _case_tensors(tag: CaseTag, k: int, pivot_value: int):
    """(count, weight) int64 tensors of shape (K,)*m indexed by the
    values of the m non-pivot boundary slots, for the pivot fixed at
    pivot_value."""
    K = k + 1
    d = tag.d
    slots = case_slots(tag)
    m = len(slots)
    if K ** (m + 1) > ENUMERATION_CAP:
        raise EnumerationCapError(
            f"case tensor of {K}^{m + 1} entries exceeds the cap")
    P = _step_matrix(k)
    labels0 = {l - 1 for l in tag.neighbor_labels}
    pins = [[a for a, bv in enumerate(slots) if bv == i] for i in range(d)]
    masks = [_axis_mask(P, a, m) for a in range(m)]
    yvals = np.arange(K, dtype=np.int64)

    def apply_pins(cnt, wgt, vertex):
        for a in pins[vertex]:
            cnt = cnt * masks[a]
            wgt = wgt * masks[a]
        if vertex in labels0:
            cnt = cnt * P[pivot_value]
            wgt = wgt * P[pivot_value]
        return cnt, wgt

    def sweep(cnt, wgt, vertices):
        for i in vertices:
            cnt = cnt @ P
            wgt = wgt @ P
            cnt, wgt = apply_pins(cnt, wgt, i)
            wgt = wgt + cnt * yvals
        return cnt, wgt

    base_shape = (K,) * m + (K,)
    if tag.kind == "type2":
        cnt = np.ones(base_shape, dtype=np.int64)
        cnt, _ = apply_pins(cnt, cnt, 0)
        wgt = cnt * yvals
        cnt, wgt = sweep(cnt, wgt, range(1, d))
        return cnt.sum(axis=-1), wgt.sum(axis=-1)

    # cycle: condition on the first vertex's value
    tot_c = np.zeros((K,) * m, dtype=np.int64)
    tot_w = np.zeros((K,) * m, dtype=np.int64)
    for first in range(K):
        cnt = np.zeros(base_shape, dtype=np.int64)
        cnt[..., first] = 1
        cnt, _ = apply_pins(cnt, cnt, 0)
        wgt = cnt * first
        cnt, wgt = sweep(cnt, wgt, range(1, d))
        close = P[:, first]
        tot_c += (cnt * close).sum(axis=-1)
        tot_w += (wgt * close).sum(axis=-1)
    return tot_c, tot_w


def _maximize_gap(stats: list[tuple[np.ndarray, np.ndarray]]):
    """Maximize E[w | pivot=x+1] - E[w | pivot=x] over pivot values x and
    boundary-slot assignments.  Returns (Fraction, pivot value, slot-value
    tuple); ties resolve to the lexicographically smallest
    (slot tuple, pivot value)."""
    k = len(stats) - 1
    best_f = -np.inf
    per_pivot = []
    for x in range(k):
        c1, w1 = stats[x]
        c2, w2 = stats[x + 1]
        ok = (c1 > 0) & (c2 > 0)
        with np.errstate(divide="ignore", invalid="ignore"):
            gap = np.where(ok, w2 / c2 - w1 / c1, -np.inf)
        per_pivot.append(gap)
        mx = gap.max()
        if mx > best_f:
            best_f = mx
    if best_f == -np.inf:
        raise ValueError("no extensible cover pair")
    margin = _PREFILTER_MARGIN * max(1.0, abs(best_f))
    cands = []
    for x, gap in enumerate(per_pivot):
        idx = np.argwhere(gap >= best_f - margin)
        c1, w1 = stats[x]
        c2, w2 = stats[x + 1]
        for raw in idx:
            j = tuple(int(t) for t in raw)
            exact = Fraction(int(w2[j]), int(c2[j])) - Fraction(
                int(w1[j]), int(c1[j]))
            cands.append((exact, j, x))
    best = max(c[0] for c in cands)
    _, slot_vals, x = min(
        (c for c in cands if c[0] == best), key=lambda c: (c[1], c[2]))
    return best, x, slot_vals


def case_divergence(tag: CaseTag, k: int,
                    case_id: str | None = None) -> DivergenceReport:
    """Block divergence of a catalog case, maximized over all boundary
    cover pairs pivoted at the external vertex."""
    d = tag.d
    stats = [_case_tensors(tag, k, p) for p in range(k + 1)]
    e_max, x, slot_vals = _maximize_gap(stats)
    m = len(case_slots(tag))
    if tag.kind == "type1":
        omega_block = count_cycle_heights(k, d)
    else:
        omega_block = count_path_heights(k, d)
    witness = (
        BoundaryConstraint(
            tuple(sorted([(d, x)] + [(d + 1 + a, v)
                                     for a, v in enumerate(slot_vals)]))),
        d,
    )
    return DivergenceReport(
        k=k, case_id=case_id or str(tag), omega_block=omega_block,
        omega_boundary=(k + 1) ** (m + 1), e_max=e_max, witness=witness,
    )


def hex_divergence(k: int) -> DivergenceReport:
    """Divergence row for the 6-vertex hexagonal-grid block.

    Locally the block is a 6-cycle with one distinct boundary pin per
    vertex and the pivot adjacent to a single block vertex, so the case
    engine applies verbatim.
    """
    rep = case_divergence(CaseTag("type1", (1,), 6), k, case_id="hex")
    return rep


def type1_cases() -> list[tuple[int, tuple[int, ...]]]:
    """Canonical (d, labels) case list, one per symmetry class."""
    return sorted({(d, labels) for (_k, d, labels) in _golden.TYPE1_ROWS})


def type2_cases() -> list[tuple[int, ...]]:
    return sorted({labels for (_k, labels) in _golden.TYPE2_ROWS})


def reproduce_table(table_id: str, k: int,
                    cases=None) -> list[DivergenceReport]:
    """Compute one table's rows: table_id in {rect, hex, type1, type2}."""
    if k == 0:
        # the all-zero height is the only one; no cover pair exists and
        # the divergence is 0 by convention
        return [DivergenceReport(k=0, case_id=table_id, omega_block=1,
                                 omega_boundary=1, e_max=Fraction(0),
                                 witness=None)]
    if table_id == "hex":
        return [hex_divergence(k)]
    if table_id == "rect":
        return [rect_divergence(k)]
    if table_id == "type1":
        rows = cases if cases is not None else type1_cases()
        return [case_divergence(CaseTag("type1", labels, d), k)
                for d, labels in rows]
    if table_id == "type2":
        rows = cases if cases is not None else type2_cases()
        return [case_divergence(CaseTag("type2", labels), k)
                for labels in rows]
    raise ValueError(f"unknown table id {table_id!r}")


# ---------------------------------------------------------------------------
# 4x4 grid blocks


def _row_vectors(k: int) -> np.ndarray:
    """All (k+1)-ary 4-vectors with adjacent entries differing by <= 1."""
    K = k + 1
    vals = np.indices((K, K, K, K)).reshape(4, -1).T
    ok = np.all(np.abs(np.diff(vals, axis=1)) <= 1, axis=1)
    return vals[ok]


def rect_stat_tensors(k: int):
    """(count, weight) float64 arrays of shape (t, t, t, t) indexed by the
    (top, left, right, bottom) boundary path sequences of a 4x4 block.

    Boundary paths and block rows share the same valid-sequence list of
    length t.  All entries are integers below 2^53, hence exact.
    """
    rows = _row_vectors(k)
    t = len(rows)
    rowsum = rows.sum(axis=1).astype(np.float64)
    V = np.all(
        np.abs(rows[:, None, :] - rows[None, :, :]) <= 1, axis=2
    ).astype(np.float64)
    # side masks: boundary sequence s pins block column cell at row i
    A = [np.abs(rows[:, i][:, None] - rows[None, :, 0]) <= 1 for i in range(4)]
    Bm = [np.abs(rows[:, i][:, None] - rows[None, :, 3]) <= 1 for i in range(4)]
    A = [a.astype(np.float64) for a in A]
    Bm = [b.astype(np.float64) for b in Bm]
    full = V  # pointwise |s_j - vec_j| <= 1 is exactly vertical compatibility
    S_cnt = np.empty((t, t, t, t), dtype=np.float64)
    S_wgt = np.empty((t, t, t, t), dtype=np.float64)
    for ti in range(t):
        # axes: (left seq, right seq, current row state)
        cnt = full[ti][None, None, :] * A[0][:, None, :] * Bm[0][None, :, :]
        wgt = cnt * rowsum
        for i in range(1, 4):
            cnt = cnt @ V
            wgt = wgt @ V
            mask = A[i][:, None, :] * Bm[i][None, :, :]
            cnt = cnt * mask
            wgt = wgt * mask + cnt * rowsum
        # close with the bottom path (pointwise pins on row 3 = `full`)
        S_cnt[ti] = cnt @ full.T
        S_wgt[ti] = wgt @ full.T
    return rows, S_cnt, S_wgt


def rect_pivot_values(k: int) -> list[Fraction]:
    """E_{B,v} for the pivot at each of the 4 positions of one boundary
    path (rotation makes the four paths equivalent)."""
    rows, S_cnt, S_wgt = rect_stat_tensors(k)
    return [_rect_maximize(rows, S_cnt, S_wgt, pos)[0] for pos in range(4)]


def _rect_maximize(rows, S_cnt, S_wgt, pos: int):
    """Maximize the gap for the pivot at position `pos` of the first
    boundary path axis."""
    t = len(rows)
    index = {tuple(v): i for i, v in enumerate(rows)}
    pairs = []
    for i, v in enumerate(rows):
        w = list(v)
        w[pos] += 1
        j = index.get(tuple(w))
        if j is not None:
            pairs.append((i, j))
    best_f = -np.inf
    cands = []
    for i, j in pairs:
        ok = (S_cnt[i] > 0) & (S_cnt[j] > 0)
        with np.errstate(divide="ignore", invalid="ignore"):
            gap = np.where(ok, S_wgt[j] / S_cnt[j] - S_wgt[i] / S_cnt[i],
                           -np.inf)
        mx = gap.max()
        if mx > best_f:
            best_f = mx
        cands.append((i, j, gap))
    out = []
    margin = _PREFILTER_MARGIN * max(1.0, abs(best_f))
    for i, j, gap in cands:
        for raw in np.argwhere(gap >= best_f - margin):
            idx = tuple(int(x) for x in raw)
            exact = Fraction(int(S_wgt[j][idx]), int(S_cnt[j][idx])) - \
                Fraction(int(S_wgt[i][idx]), int(S_cnt[i][idx]))
            out.append((exact, i, idx))
    best = max(c[0] for c in out)
    _, i, idx = min((c for c in out if c[0] == best),
                    key=lambda c: (c[1], c[2]))
    return best, i, idx


def rect_divergence(k: int) -> DivergenceReport:
    """Full divergence maximization for the 4x4 block: maximum over the
    two symmetry-distinct pivot positions (path end and path middle)."""
    from .enumeration import count_rect_extensible

    rows, S_cnt, S_wgt = rect_stat_tensors(k)
    results = [_rect_maximize(rows, S_cnt, S_wgt, pos) for pos in (0, 1)]
    e_max = max(r[0] for r in results)
    return DivergenceReport(
        k=k, case_id="rect4x4",
        omega_block=_rect_omega_block(k),
        omega_boundary=count_rect_extensible(k),
        e_max=e_max, witness=None,
    )


def _rect_omega_block(k: int) -> int:
    rows = _row_vectors(k)
    V = np.all(
        np.abs(rows[:, None, :] - rows[None, :, :]) <= 1, axis=2
    ).astype(object)
    ones = np.ones(len(rows), dtype=object)
    return int(ones @ np.linalg.matrix_power(V, 3) @ ones)


def rect_witness_search(k: int, threshold: Fraction | float,
                        seed: int = 0, max_restarts: int = 200,
                        max_steps: int = 400):
    """Randomized local search for a boundary cover pair whose expected
    gap exceeds `threshold`; used where the full maximization is out of
    reach.  Returns (gap, boundary assignment, pivot position) or None.

    The state is the four boundary path sequences plus a pivot position;
    moves bump a single boundary value by +-1 (keeping path validity).
    """
    from .graphs import make_toroidal_rect, rect_block_family, boundary
    from .enumeration import filling_stats

    rng = np.random.default_rng(seed)
    graph = make_toroidal_rect(9, 9)
    block = rect_block_family(graph).blocks[graph.dims[0] + 1]
    bdry = sorted(boundary(graph, block))
    g, h = graph.dims
    x0, y0 = block.vertices[0] % g, block.vertices[0] // g
    idx = lambda x, y: (y % h) * g + (x % g)
    top = [idx(x0 + i, y0 - 1) for i in range(4)]
    paths = [
        top,
        [idx(x0 + i, y0 + 4) for i in range(4)],
        [idx(x0 - 1, y0 + i) for i in range(4)],
        [idx(x0 + 4, y0 + i) for i in range(4)],
    ]

    def valid(assign):
        for p in paths:
            for a, b in zip(p, p[1:]):
                if abs(assign[a] - assign[b]) > 1:
                    return False
        return True

    def gap_of(assign, pivot):
        if assign[pivot] >= k:
            return None
        lo = BoundaryConstraint(tuple(sorted(assign.items())))
        hi_map = dict(assign)
        hi_map[pivot] += 1
        if not valid(hi_map):
            return None
        hi = BoundaryConstraint(tuple(sorted(hi_map.items())))
        s1 = filling_stats(graph, block, lo, k)
        s2 = filling_stats(graph, block, hi, k)
        if not s1.extensible or not s2.extensible:
            return None
        return s2.expected_weight - s1.expected_weight

    thr = Fraction(threshold).limit_denominator(10 ** 6) \
        if not isinstance(threshold, Fraction) else threshold
    for _ in range(max_restarts):
        assign = {}
        for p in paths:
            x = int(rng.integers(0, k + 1))
            for v in p:
                assign[v] = x
                x = int(np.clip(x + rng.integers(-1, 2), 0, k))
        pivot = top[int(rng.integers(0, 2))]
        cur = gap_of(assign, pivot)
        for _ in range(max_steps):
            if cur is not None and cur > thr:
                return cur, dict(assign), pivot
            v = bdry[int(rng.integers(0, len(bdry)))]
            step = int(rng.choice([-1, 1]))
            nxt = dict(assign)
            nxt[v] = int(np.clip(nxt[v] + step, 0, k))
            if nxt[v] == assign[v] or not valid(nxt):
                continue
            cand = gap_of(nxt, pivot)
            if cand is not None and (cur is None or cand >= cur):
                assign, cur = nxt, cand
    return None


# ---------------------------------------------------------------------------
# aggregate bounds for 3-regular planar families


def _consecutive(kind: str, d: int, labels: tuple[int, ...]) -> bool:
    if len(labels) != 2:
        return False
    a, b = labels
    if kind == "type1":
        return b - a == 1 or (a == 1 and b == d)
    return b - a == 1


def admissible_cases(connectivity: str):
    """Case list for an aggregate bound: 2-connected admits everything,
    3-connected only single-neighbor and consecutive-pair cases, duals of
    4-connected triangulations only single-neighbor cases."""
    t1 = [("type1", d, labels) for d, labels in type1_cases()]
    t2 = [("type2", 8, labels) for labels in type2_cases()]
    allcases = t1 + t2
    if connectivity == "two":
        return allcases
    if connectivity == "three":
        return [
            (kind, d, labels) for kind, d, labels in allcases
            if len(labels) == 1 or _consecutive(kind, d, labels)
        ]
    if connectivity == "dual4":
        return [c for c in allcases if len(c[2]) == 1]
    raise ValueError(f"unknown connectivity class {connectivity!r}")


def regular_aggregates(connectivity: str, k: int,
                       divergences: dict | None = None) -> dict:
    """Per-vertex membership-minus-divergence lower bound for the block
    family of a 3-regular planar graph (all faces of degree <= 10 as
    8-fold blocks plus 8-vertex windows of larger faces).

    Every vertex lies in exactly 24 blocks.  The bound subtracts, from
    24, the worst-case sum of (E_{B,v} - 1) over the at-most-30 blocks
    whose boundary contains v, split into the per-neighbor rate E* and
    (for the more connected classes) the 6 same-face window blocks whose
    divergence is the single-end window case.
    """
    if k not in (2, 3):
        raise ValueError("aggregate tables exist for k in {2, 3} only")
    if connectivity == "two" and k != 2:
        raise ValueError("the 2-connected aggregate is stated for k=2 only")
    cases = admissible_cases(connectivity)
    if divergences is None:
        divergences = compute_case_divergences(k, cases)
    e_star = None
    e_star_case = None
    for kind, d, labels in cases:
        e = divergences[(kind, d, labels)]
        rate = (e - 1) / len(labels)
        if e_star is None or rate > e_star:
            e_star, e_star_case = rate, (kind, d, labels)
    report = {
        "connectivity": connectivity,
        "k": k,
        "e_star": e_star,
        "e_star_case": e_star_case,
        "m_vertex": 24,
    }
    if connectivity == "two":
        report["bound"] = Fraction(24) - 30 * e_star
    else:
        e_h = divergences.get(("type2", 8, (1,)))
        if e_h is None:
            e_h = case_divergence(CaseTag("type2", (1,)), k).e_max
        report["e_window_end"] = e_h
        report["bound"] = Fraction(24) - 6 * (e_h - 1) - 24 * e_star
    return report


def compute_case_divergences(k: int, cases) -> dict:
    """Exact E_{B,v} per (kind, d, labels) case key."""
    out = {}
    for kind, d, labels in cases:
        tag = CaseTag(kind, labels, d)
        out[(kind, d, labels)] = case_divergence(tag, k).e_max
    return out
