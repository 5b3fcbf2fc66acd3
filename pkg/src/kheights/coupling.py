"""Couplings of the k-height chains: stochastic-dominance joints via
max-flow, the monotone coupled steps, shortest-path decomposition into
cover pairs, coupling from the past, and empirical coalescence-time
estimation.

All joint distributions are exact rationals; sampling from them uses
integer draws only, so trajectories are exactly reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_flow

from .chains import BlockSampler, make_rng, updown_result
from .graphs import Graph
from .heights import KHeight


class DominanceError(ValueError):
    """The low filling set is not stochastically dominated by the high one."""


@dataclass(frozen=True)
class JointCoupling:
    """Exact joint distribution on comparable filling pairs.

    support holds (low filling, high filling, probability); the
    probabilities have common denominator |low_set| * |high_set|.
    """

    support: tuple[tuple[tuple[int, ...], tuple[int, ...], Fraction], ...]
    low_size: int
    high_size: int

    def expected_delta(self) -> Fraction:
        return sum(
            (p * sum(abs(a - b) for a, b in zip(lo, hi))
             for lo, hi, p in self.support),
            Fraction(0),
        )

    def marginal_low(self) -> dict:
        out = {}
        for lo, _hi, p in self.support:
            out[lo] = out.get(lo, Fraction(0)) + p
        return out

    def marginal_high(self) -> dict:
        out = {}
        for _lo, hi, p in self.support:
            out[hi] = out.get(hi, Fraction(0)) + p
        return out


def strassen_joint(low_set, high_set) -> JointCoupling:
    """Joint distribution of the uniform laws on two filling sets, with
    support only on pointwise-comparable pairs.

    Built as an integer max-flow in the bipartite comparability network
    with denominators cleared: source -> each low filling at capacity
    |high_set|, each high filling -> sink at capacity |low_set|.  Any
    maximum flow of full value is accepted.
    """
    low_set = list(low_set)
    high_set = list(high_set)
    L, H = len(low_set), len(high_set)
    if L == 0 or H == 0:
        raise ValueError("empty filling set")
    denom = L * H
    if L == 1 and H == 1:
        lo, hi = low_set[0], high_set[0]
        if any(a > b for a, b in zip(lo, hi)):
            raise DominanceError("singleton pair not comparable")
        return JointCoupling(((lo, hi, Fraction(1)),), 1, 1)
    # nodes: 0 = source, 1..L = low, L+1..L+H = high, L+H+1 = sink
    n = L + H + 2
    rows, cols, caps = [], [], []
    for i in range(L):
        rows.append(0)
        cols.append(1 + i)
        caps.append(H)
    for j in range(H):
        rows.append(1 + L + j)
        cols.append(n - 1)
        caps.append(L)
    for i, lo in enumerate(low_set):
        for j, hi in enumerate(high_set):
            if all(a <= b for a, b in zip(lo, hi)):
                rows.append(1 + i)
                cols.append(1 + L + j)
                caps.append(H)
    graph = csr_matrix((caps, (rows, cols)), shape=(n, n), dtype=np.int32)
    result = maximum_flow(graph, 0, n - 1)
    if result.flow_value != denom:
        raise DominanceError(
            f"max flow {result.flow_value} < {denom}: dominance fails")
    flow = result.flow
    support = []
    coo = flow.tocoo()
    for u, v, f in zip(coo.row, coo.col, coo.data):
        if f > 0 and 1 <= u <= L and L < v < n - 1:
            support.append(
                (low_set[u - 1], high_set[v - L - 1], Fraction(int(f), denom)))
    support.sort(key=lambda t: (t[0], t[1]))
    return JointCoupling(tuple(support), L, H)


def conditional_high_draw(joint: JointCoupling, low, r: int):
    """High-side filling given the low side, using an integer draw
    r uniform in [0, high_size): walks the scaled conditional weights
    flow(low, .) which sum to high_size."""
    acc = 0
    for lo, hi, p in joint.support:
        if lo == low:
            acc += p.numerator * (joint.low_size * joint.high_size
                                  // p.denominator)
            if r < acc:
                return hi
    raise AssertionError("conditional draw ran past the support")


# ---------------------------------------------------------------------------
# lattice paths


def path_decompose(x: KHeight, y: KHeight) -> list[tuple[KHeight, KHeight]]:
    """Shortest lattice path between two k-heights as a chain of cover
    pairs; its length is exactly delta(x, y).

    For x <= y the path repeatedly raises, among the vertices where the
    two still differ, one of minimal current value (smallest index on
    ties); minimality guarantees the raise stays valid.  Incomparable
    pairs route through the meet.
    """
    if x.values == y.values:
        return []
    if not (x <= y):
        if y <= x:
            return [(lo, hi) for lo, hi in reversed(path_decompose(y, x))]
        m = x.meet(y)
        down = [(lo, hi) for lo, hi in reversed(path_decompose(m, x))]
        return down + path_decompose(m, y)
    pairs = []
    cur = x
    while cur.values != y.values:
        cand = [v for v in range(cur.graph.n) if cur.values[v] < y.values[v]]
        v = min(cand, key=lambda u: (cur.values[u], u))
        nxt = cur.with_value(v, cur.values[v] + 1)
        pairs.append((cur, nxt))
        cur = nxt
    return pairs


# ---------------------------------------------------------------------------
# coupled steps


@dataclass
class CoupledState:
    low: KHeight
    high: KHeight
    rng: np.random.Generator
    step_count: int = 0

    def __post_init__(self):
        if not (self.low <= self.high):
            raise ValueError("coupled state must satisfy low <= high")

    @property
    def coalesced(self) -> bool:
        return self.low.values == self.high.values


def coupled_updown_step(coupled: CoupledState) -> CoupledState:
    """Shared (v, offset, p) for both trajectories; each side accepts by
    its own validity test.  Monotone in practice (verified by tests)."""
    v = int(coupled.rng.integers(coupled.low.graph.n))
    delta = 1 if int(coupled.rng.integers(2)) else -1
    p = float(coupled.rng.random())
    coupled.low = updown_result(coupled.low, v, delta, p)
    coupled.high = updown_result(coupled.high, v, delta, p)
    coupled.step_count += 1
    return coupled


def coupled_block_step(coupled: CoupledState,
                       sampler: BlockSampler) -> CoupledState:
    """One monotone coupled block transition.

    Draw order: p first (shared laziness), then the block draw, then the
    filling randomness.  For cover pairs whose pivot lies on the block
    boundary the two fillings are drawn from the Strassen joint; distant
    pairs go through the cover-chain decomposition with the same block,
    linking conditional draws so the endpoints stay comparable.
    """
    rng = coupled.rng
    p = float(rng.random())
    if p > 0.5:
        coupled.step_count += 1
        return coupled
    r = int(rng.integers(sampler.family.total_count))
    b = sampler.pick_block(r)
    chain = [coupled.low] + [hi for _lo, hi in
                             path_decompose(coupled.low, coupled.high)]
    fillings = [sampler.fillings_for(b, z) for z in chain]
    f = fillings[0][int(rng.integers(len(fillings[0])))]
    new_low = sampler.apply(chain[0], b, f)
    for i in range(1, len(chain)):
        if fillings[i] == fillings[i - 1]:
            pass  # identical boundary constraints: reuse the filling
        else:
            joint = strassen_joint(fillings[i - 1], fillings[i])
            f = conditional_high_draw(
                joint, f, int(rng.integers(len(fillings[i]))))
    new_high = sampler.apply(chain[-1], b, f)
    coupled.low, coupled.high = new_low, new_high
    coupled.step_count += 1
    return coupled


def expected_coupled_updown_distance(x: KHeight, y: KHeight) -> Fraction:
    """Exact E[delta(X', Y')] after one coupled up/down step from (x, y).

    Each (vertex, offset) pair fires with probability 1/(4n) (laziness
    accounts for the other half); both sides then accept or hold by
    their own validity test.
    """
    n = x.graph.n
    total = Fraction(1, 2) * x.delta(y)  # p > 1/2: both hold
    for v in range(n):
        for delta in (-1, 1):
            nx = updown_result(x, v, delta, 0.0)
            ny = updown_result(y, v, delta, 0.0)
            total += Fraction(1, 4 * n) * nx.delta(ny)
    return total


# ---------------------------------------------------------------------------
# coupling from the past


def cftp_sample(graph: Graph, k: int, seed: int,
                epoch_cap: int = 40) -> KHeight:
    """Exact uniform sample over the k-heights of a connected graph.

    Monotone grand coupling of the up/down chain run from the all-zero
    and all-k states, from time -T to 0 with T doubling per epoch; the
    randomness of each time slot is fixed once and reused by every
    epoch (slot arrays are keyed by the epoch that created them).
    """
    if k == 0:
        return KHeight.constant(graph, k, 0)
    n = graph.n
    adj = graph.adjacency()
    segments = []  # epoch e covers time slots [-2^e, -2^(e-1))

    def epoch_arrays(e: int, length: int):
        rng = np.random.Generator(np.random.Philox(
            np.random.SeedSequence(entropy=(seed, e))))
        return (
            rng.integers(0, n, size=length, dtype=np.int64),
            rng.integers(0, 2, size=length, dtype=np.int64),
            rng.random(size=length) <= 0.5,
        )

    for e in range(epoch_cap):
        length = 1 if e == 0 else 1 << (e - 1)
        segments.append(epoch_arrays(e, length))
        lo = [0] * n
        hi = [k] * n
        # oldest randomness first: epoch e covers the earliest slots
        for vs, ds, acc in reversed(segments):
            for v, d, a in zip(vs, ds, acc):
                if not a:
                    continue
                step = 1 if d else -1
                for vals in (lo, hi):
                    new = vals[v] + step
                    if 0 <= new <= k and all(
                            abs(vals[u] - new) <= 1 for u in adj[v]):
                        vals[v] = new
        if lo == hi:
            return KHeight(graph, k, tuple(lo))
    raise RuntimeError(
        f"no coalescence within 2^{epoch_cap - 1} steps; "
        "raise epoch_cap or check connectivity")


# ---------------------------------------------------------------------------
# empirical coalescence times


def coupling_time_estimate(graph: Graph, k: int, mode: str = "updown",
                           trials: int = 100, seed: int = 0,
                           family=None, max_steps: int = 10 ** 7) -> dict:
    """Coalescence-time statistics of the monotone coupling started from
    (bottom, top).  Deterministic given the seed."""
    times = []
    sampler = None
    if mode == "block":
        if family is None:
            raise ValueError("block mode needs a block family")
        sampler = BlockSampler(graph, family, k)
    for t in range(trials):
        coupled = CoupledState(
            low=KHeight.constant(graph, k, 0),
            high=KHeight.constant(graph, k, k),
            rng=make_rng(np.random.SeedSequence(
                entropy=(seed, t)).generate_state(1)[0].item()),
        )
        while not coupled.coalesced:
            if coupled.step_count >= max_steps:
                raise RuntimeError("coalescence cap exceeded")
            if mode == "updown":
                coupled_updown_step(coupled)
            else:
                coupled_block_step(coupled, sampler)
        times.append(coupled.step_count)
    arr = np.array(times)
    return {
        "trials": trials,
        "mean": float(arr.mean()),
        "median": float(np.median(arr)),
        "q10": float(np.quantile(arr, 0.1)),
        "q90": float(np.quantile(arr, 0.9)),
        "max": int(arr.max()),
        "times": times,
    }
