"""The q-distance matrix and the reduced-cofactor construction.

The q-distance matrix replaces each graph distance alpha >= 1 with the
polynomial 1 + q + ... + q^(alpha-1).  The reduced cofactor of such a matrix
is the determinant of an (n-1) x (n-1) matrix obtained from a pivot vertex;
two equivalent constructions are provided and must agree entrywise.
"""

from __future__ import annotations

from .exactring import Q, q_integer
from .graph import BiBlockGraph, distances
from .matrix import DimensionError, RingMatrix


def q_matrix_from_distances(dist: list[list[int]]) -> RingMatrix:
    """Entrywise q-integer lift of any distance table (no bi-block validation)."""
    return RingMatrix([[q_integer(d) for d in row] for row in dist])


def q_distance_matrix(g: BiBlockGraph) -> RingMatrix:
    """The q-distance matrix of a bi-block graph in builder vertex order."""
    return q_matrix_from_distances(distances(g))


def cofactor_matrix(
    qmat: RingMatrix, dist: list[list[int]], pivot: int = 0, route: str = "direct"
) -> RingMatrix:
    """The (n-1) x (n-1) matrix whose determinant is the reduced cofactor.

    route="direct" forms entry (i, j) as D1[i][j] - [beta_i + alpha_j], where
    D1 drops the pivot row and column, alpha_j is the distance from the pivot
    to column vertex j and beta_i the distance from row vertex i to the pivot.
    route="rowcol" instead subtracts the pivot row from every other row and
    then q**alpha_j times the pivot column from every other column.  The two
    routes produce the same matrix entrywise.
    """
    n = qmat.nrows
    if not qmat.is_square or len(dist) != n or any(len(row) != n for row in dist):
        raise DimensionError("q-distance matrix and distance table sizes disagree")
    if not 0 <= pivot < n:
        raise DimensionError(f"pivot vertex {pivot} out of range")
    others = [v for v in range(n) if v != pivot]
    if route == "direct":
        rows = []
        for u in others:
            row = []
            beta = dist[u][pivot]
            for v in others:
                row.append(qmat[u, v] - q_integer(beta + dist[pivot][v]))
            rows.append(row)
        return RingMatrix(rows)
    if route == "rowcol":
        order = [pivot] + others
        work = [[qmat[u, v] for v in order] for u in order]
        for i in range(1, n):
            work[i] = [a - b for a, b in zip(work[i], work[0])]
        for j in range(1, n):
            shift = Q ** dist[pivot][order[j]]
            for i in range(n):
                work[i][j] = work[i][j] - shift * work[i][0]
        return RingMatrix([row[1:] for row in work[1:]])
    raise ValueError(f"unknown construction route {route!r}")
