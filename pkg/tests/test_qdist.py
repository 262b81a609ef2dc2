from __future__ import annotations

import pytest

from qbiblock.exactring import ONE, Q, ZERO, q_integer
from qbiblock.graph import BlockSpec, build, distances, path_tree, random_biblock
from qbiblock.matrix import DimensionError, RingMatrix, det_bareiss
from qbiblock.qdist import cofactor_matrix, q_distance_matrix, q_matrix_from_distances


def test_single_edge():
    g = build([BlockSpec(1, 1)])
    assert q_distance_matrix(g) == RingMatrix([[ZERO, ONE], [ONE, ZERO]])


def test_one_block_path_matrix():
    # K_{1,2} is the path on 3 vertices; builder order X = (0,), Y = (1, 2)
    g = build([BlockSpec(1, 2)])
    m = q_distance_matrix(g)
    assert m == RingMatrix(
        [[ZERO, ONE, ONE], [ONE, ZERO, Q + 1], [ONE, Q + 1, ZERO]]
    )


def test_path_endpoint_entry():
    g = build(path_tree(4))
    m = q_distance_matrix(g)
    assert m[0, 3] == 1 + Q + Q**2


def test_matrix_at_one_is_distance_table():
    for seed in (0, 5, 9):
        g = build(random_biblock(seed, 4, 3))
        d = distances(g)
        m = q_distance_matrix(g)
        for i in range(g.n):
            for j in range(g.n):
                assert m[i, j].eval_at(1) == d[i][j]


def test_cofactor_matrix_single_edge():
    g = build([BlockSpec(1, 1)])
    cm = cofactor_matrix(q_distance_matrix(g), distances(g))
    assert cm == RingMatrix([[-(Q + 1)]])


def test_cofactor_matrix_two_one_block():
    # K_{2,1}: the top-left entry is 0 - [2 + 2] = -(1+q)(1+q^2)
    g = build([BlockSpec(2, 1)])
    cm = cofactor_matrix(q_distance_matrix(g), distances(g))
    assert cm[0, 0] == -((Q + 1) * (Q**2 + 1))
    assert cm[0, 0] == -q_integer(4)


def test_construction_routes_agree():
    for seed in range(12):
        g = build(random_biblock(seed, 4, 3))
        m = q_distance_matrix(g)
        d = distances(g)
        assert cofactor_matrix(m, d, route="direct") == cofactor_matrix(m, d, route="rowcol")


def test_cofactor_determinant_is_pivot_independent():
    for seed in (1, 4, 8):
        g = build(random_biblock(seed, 3, 3))
        m = q_distance_matrix(g)
        d = distances(g)
        base = det_bareiss(cofactor_matrix(m, d, pivot=0))
        for pivot in range(1, g.n):
            assert det_bareiss(cofactor_matrix(m, d, pivot=pivot)) == base


def test_non_biblock_distance_tables_are_accepted():
    # the lift itself works for any metric table, e.g. a 5-cycle
    cycle = [[min(abs(i - j), 5 - abs(i - j)) for j in range(5)] for i in range(5)]
    m = q_matrix_from_distances(cycle)
    assert m[0, 2] == Q + 1
    assert m[0, 1] == ONE


def test_errors():
    g = build([BlockSpec(1, 1)])
    m = q_distance_matrix(g)
    d = distances(g)
    with pytest.raises(DimensionError):
        cofactor_matrix(m, [[0]])
    with pytest.raises(DimensionError):
        cofactor_matrix(m, d, pivot=9)
    with pytest.raises(ValueError):
        cofactor_matrix(m, d, route="sideways")
