"""The two Markov chains on k-heights: single-vertex up/down moves and
block resampling.

Randomness contract: chains use a counter-based generator (numpy Philox)
so that the same seed yields the same trajectory on every platform.  The
draw order per step is fixed and documented on each step function; tests
and the CLI rely on it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .enumeration import enumerate_fillings, enumerate_heights
from .graphs import BlockFamily, Graph
from .heights import BoundaryConstraint, KHeight, is_valid


def make_rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(seed))


@dataclass
class ChainState:
    current: KHeight
    rng: np.random.Generator
    step_count: int = 0
    debug_validate: bool = False

    def _set(self, height: KHeight):
        if self.debug_validate and not is_valid(
                height.graph, height.values, height.k):
            raise AssertionError("chain produced an invalid k-height")
        self.current = height
        self.step_count += 1


def make_chain(graph: Graph, k: int, seed: int,
               start: KHeight | None = None) -> ChainState:
    if start is None:
        start = KHeight.constant(graph, k, 0)
    return ChainState(current=start, rng=make_rng(seed))


def step_updown(state: ChainState) -> ChainState:
    """One lazy up/down transition.

    Draw order: vertex v uniform over V, offset sign (0 -> -1, 1 -> +1),
    then p uniform in [0,1).  The move applies iff the result is a valid
    k-height and p <= 1/2.
    """
    x = state.current
    v = int(state.rng.integers(x.graph.n))
    delta = 1 if int(state.rng.integers(2)) else -1
    p = float(state.rng.random())
    nxt = updown_result(x, v, delta, p)
    state._set(nxt)
    return state


def updown_result(x: KHeight, v: int, delta: int, p: float) -> KHeight:
    """Deterministic outcome of an up/down step given the three draws."""
    new = x.values[v] + delta
    if p > 0.5 or not 0 <= new <= x.k:
        return x
    for u in x.graph.adjacency()[v]:
        if abs(x.values[u] - new) > 1:
            return x
    return x.with_value(v, new)


class BlockSampler:
    """Uniform sampling from admissible fillings, with a bounded cache of
    filling lists keyed by (block index, boundary values)."""

    def __init__(self, graph: Graph, family: BlockFamily, k: int,
                 cache_size: int = 4096):
        self.graph = graph
        self.family = family
        self.k = k
        from .graphs import boundary
        self._bdry = [sorted(boundary(graph, b)) for b in family.blocks]
        self._cum = np.cumsum([b.multiplicity for b in family.blocks])
        self._fillings = lru_cache(maxsize=cache_size)(self._fillings_raw)

    def _fillings_raw(self, block_idx: int, bvals: tuple[int, ...]):
        block = self.family.blocks[block_idx]
        constraint = BoundaryConstraint(
            tuple(zip(self._bdry[block_idx], bvals)))
        return enumerate_fillings(self.graph, block, constraint, self.k)

    def pick_block(self, r: int) -> int:
        """Block index for a draw r uniform in [0, total multiplicity)."""
        return int(np.searchsorted(self._cum, r, side="right"))

    def fillings_for(self, block_idx: int, height: KHeight):
        bvals = tuple(height.values[u] for u in self._bdry[block_idx])
        return self._fillings(block_idx, bvals)

    def apply(self, height: KHeight, block_idx: int, filling) -> KHeight:
        vals = list(height.values)
        for v, x in zip(self.family.blocks[block_idx].vertices, filling):
            vals[v] = x
        return KHeight(height.graph, height.k, tuple(vals))


def step_block(state: ChainState, sampler: BlockSampler) -> ChainState:
    """One lazy block transition.

    Draw order: block draw uniform over total multiplicity, filling index
    uniform over the admissible fillings, then p.  The filling replaces
    the block iff p <= 1/2.
    """
    x = state.current
    r = int(state.rng.integers(sampler.family.total_count))
    b = sampler.pick_block(r)
    fillings = sampler.fillings_for(b, x)
    idx = int(state.rng.integers(len(fillings)))
    p = float(state.rng.random())
    if p <= 0.5:
        state._set(sampler.apply(x, b, fillings[idx]))
    else:
        state._set(x)
    return state


def run(state: ChainState, steps: int, stepper=step_updown,
        emit_every: int = 0):
    """Iterate the chain; optionally yield intermediate states.

    With emit_every > 0, returns a list of (step, KHeight) snapshots
    (including the final state); otherwise returns the state.
    """
    snaps = []
    for i in range(steps):
        stepper(state)
        if emit_every and (i + 1) % emit_every == 0:
            snaps.append((state.step_count, state.current))
    if emit_every:
        if not snaps or snaps[-1][0] != state.step_count:
            snaps.append((state.step_count, state.current))
        return snaps
    return state


# ---------------------------------------------------------------------------
# exact transition matrices for small instances (test oracles)


def transition_matrix_updown(graph: Graph, k: int):
    """Exact up/down transition matrix over Omega as Fractions."""
    states = list(enumerate_heights(graph, k))
    index = {s: i for i, s in enumerate(states)}
    n = graph.n
    size = len(states)
    T = [[Fraction(0)] * size for _ in range(size)]
    move = Fraction(1, 4 * n)  # one (v, delta) pair, p <= 1/2
    adj = graph.adjacency()
    for i, s in enumerate(states):
        stay = Fraction(1)
        for v in range(n):
            for delta in (-1, 1):
                new = s[v] + delta
                if 0 <= new <= k and all(
                        abs(s[u] - new) <= 1 for u in adj[v]):
                    t = list(s)
                    t[v] = new
                    j = index[tuple(t)]
                    T[i][j] += move
                    stay -= move
        T[i][i] += stay
    return states, T


def transition_matrix_block(graph: Graph, k: int, family: BlockFamily):
    """Exact block-chain transition matrix over Omega as Fractions."""
    states = list(enumerate_heights(graph, k))
    index = {s: i for i, s in enumerate(states)}
    size = len(states)
    T = [[Fraction(0)] * size for _ in range(size)]
    sampler = BlockSampler(graph, family, k)
    total = family.total_count
    for i, s in enumerate(states):
        h = KHeight(graph, k, s)
        T[i][i] += Fraction(1, 2)  # p > 1/2 holds
        for bi, block in enumerate(family.blocks):
            fillings = sampler.fillings_for(bi, h)
            w = Fraction(block.multiplicity, 2 * total * len(fillings))
            for f in fillings:
                j = index[sampler.apply(h, bi, f).values]
                T[i][j] += w
    return states, T
