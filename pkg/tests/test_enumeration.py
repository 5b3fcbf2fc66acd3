import random
from fractions import Fraction

import numpy as np
import pytest

from kheights.enumeration import (
    TransferMatrices,
    check_shape,
    count_cycle_heights,
    count_path_heights,
    count_rect_extensible,
    enumerate_boundary_constraints,
    enumerate_fillings,
    filling_stats,
)
from kheights.graphs import Block, CaseTag, Graph, boundary, make_case_graph, make_toroidal_rect, rect_block_family
from kheights.heights import BoundaryConstraint, enumerate_heights


def test_transfer_matrices_small():
    tm = TransferMatrices(2)
    assert tm.P.tolist() == [[1, 1, 0], [1, 1, 1], [0, 1, 1]]
    assert tm.Q.tolist() == [[1, 1, 1], [1, 1, 1], [1, 1, 1]]
    assert tm.P.dtype == object  # exact integer arithmetic


def test_count_cycle_vs_enumeration():
    for L in (3, 4, 5, 6):
        for k in (1, 2, 3):
            g = Graph.from_edges(L, [(i, (i + 1) % L) for i in range(L)])
            assert count_cycle_heights(k, L) == len(
                list(enumerate_heights(g, k)))


def test_count_path_vs_enumeration():
    for L in (1, 2, 4, 7):
        for k in (1, 2, 3):
            g = Graph.from_edges(L, [(i, i + 1) for i in range(L - 1)])
            assert count_path_heights(k, L) == len(
                list(enumerate_heights(g, k)))


def test_rect_extensible_trace_counts():
    assert count_rect_extensible(0) == 1
    assert count_rect_extensible(2) == 2825761
    assert count_rect_extensible(3) == 15784802


def test_rect_extensible_matches_boundary_feasibility():
    """Small-k cross-check: the trace equals the number of boundary
    assignments with at least one admissible filling."""
    k = 1
    g = make_toroidal_rect(8, 8)
    fam = rect_block_family(g)
    block = fam.blocks[0]
    feasible = sum(
        1
        for c in enumerate_boundary_constraints(g, block, k)
        if filling_stats(g, block, c, k).count > 0
    )
    assert feasible == count_rect_extensible(k)


@pytest.mark.parametrize("shape,edges,n", [
    ("path", [(0, 1), (1, 2), (2, 3)], 4),
    ("cycle", [(0, 1), (1, 2), (2, 3), (0, 3)], 4),
])
def test_check_shape(shape, edges, n):
    g = Graph.from_edges(n, edges)
    assert check_shape(g, Block(vertices=tuple(range(n)), shape=shape))
    other = "cycle" if shape == "path" else "path"
    assert not check_shape(g, Block(vertices=tuple(range(n)), shape=other))


def _brute(graph, block, constraint, k):
    fills = enumerate_fillings(graph, block, constraint, k)
    return len(fills), sum(sum(f) for f in fills)


def test_dp_matches_brute_force_on_cases():
    rnd = random.Random(5)
    for tag in (CaseTag("type1", (1,), 5), CaseTag("type1", (1, 3), 6),
                CaseTag("type2", (1,)), CaseTag("type2", (4, 5))):
        g, block, _v = make_case_graph(tag)
        bdry = sorted(boundary(g, block))
        for k in (1, 2):
            for _ in range(8):
                c = BoundaryConstraint(tuple(
                    (u, rnd.randrange(k + 1)) for u in bdry))
                stats = filling_stats(g, block, c, k)
                assert (stats.count, stats.total_weight) == _brute(
                    g, block, c, k)


def test_grid_dp_matches_brute_force():
    g = make_toroidal_rect(8, 8)
    block = rect_block_family(g).blocks[0]
    bdry = sorted(boundary(g, block))
    rnd = random.Random(7)
    k = 1
    for _ in range(5):
        vals = [(u, rnd.randrange(k + 1)) for u in bdry]
        c = BoundaryConstraint(tuple(vals))
        stats = filling_stats(g, block, c, k)
        assert (stats.count, stats.total_weight) == _brute(g, block, c, k)


def test_unconstrained_hex_block_stats():
    g, block, _v = make_case_graph(CaseTag("type1", (1,), 6))
    stats = filling_stats(g, block, BoundaryConstraint(()), 2)
    assert stats.count == 199
    assert stats.expected_weight == Fraction(6)  # symmetry: mean k/2 per vertex


def test_expected_weight_errors_when_empty():
    g = Graph.from_edges(2, [(0, 1)])
    block = Block(vertices=(0,), shape="path")
    c = BoundaryConstraint(((1, 0),))
    s = filling_stats(g, block, c, 0)
    assert s.count == 1
    # contradictory pin
    g3 = Graph.from_edges(3, [(0, 1), (1, 2)])
    block3 = Block(vertices=(1,), shape="path")
    c3 = BoundaryConstraint(((0, 0), (2, 2)))
    s3 = filling_stats(g3, block3, c3, 2)
    assert s3.count == 1 and s3.total_weight == 1


def test_enumerate_boundary_constraints_valid_and_sorted(path3=None):
    g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    block = Block(vertices=(0,), shape="path")
    cons = list(enumerate_boundary_constraints(g, block, 2))
    # boundary is {1, 3}, unconstrained between themselves (no edge)
    assert len(cons) == 9
    vals = [tuple(v for _u, v in c.values) for c in cons]
    assert vals == sorted(vals)


def test_cycle_count_golden_hex_sequence():
    assert [count_cycle_heights(k, 6) for k in (2, 3, 4, 5, 6)] == [
        199, 340, 481, 622, 763]


def test_matrix_power_object_exactness():
    # object dtype avoids int64 overflow for large powers
    P = TransferMatrices(6).P
    M = np.linalg.matrix_power(P, 60)
    assert M.dtype == object
    assert int(np.trace(M)) > 2 ** 63
