"""Closed forms for bi-block graphs: determinants, cofactors, inverses, and the
vectors and matrices they are assembled from.

Per complete bipartite block K_{s,t} two core polynomials recur:

    cofactor core     q^2 (s-1)(t-1) - 1
    determinant core  (q+1)^2 (s-1)(t-1) - s t

The block determinant and cofactor are (q+1)-powers times these cores; both
compose over the blocks of a graph (the cofactor multiplicatively, the
determinant by a product-rule sum).  The inverse of the q-distance matrix is
the negated local matrix plus a rank-one balance correction:

    inverse = -local_matrix + outer(x, x) / balance_constant

where x is the balance vector (the matrix maps it to a constant column).

Sign convention: the reduced cofactor of K_{s,t} carries the global sign
(-1)^(s+t).  Direct evaluation of the 1x1 case K_{1,1} (whose cofactor matrix
is [-(1+q)]) fixes this sign, and the elimination oracle confirms it on the
whole verification corpus; see README for the documented sign variant.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _fastpoly
from .exactring import ONE, Polynomial, Q, Rational, RationalFunction, RF_ZERO
from .graph import BiBlockGraph
from .matrix import RingMatrix

_QP1 = Q + 1


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


def cofactor_core(m: int, n: int) -> Polynomial:
    """q^2 (m-1)(n-1) - 1; the block cofactor vanishes exactly at its roots."""
    return Q**2 * ((m - 1) * (n - 1)) - 1


def det_core(m: int, n: int) -> Polynomial:
    """(q+1)^2 (m-1)(n-1) - m n; the block determinant vanishes exactly at its roots."""
    return _QP1**2 * ((m - 1) * (n - 1)) - m * n


def _require_parts(s: int, t: int):
    if s < 1 or t < 1:
        raise ValueError(f"block parts must be at least 1, got {s}x{t}")


def block_det(s: int, t: int) -> Polynomial:
    """Determinant of the q-distance matrix of K_{s,t}, expanded to canonical form."""
    _require_parts(s, t)
    return _sign(s + t) * _QP1 ** (s + t - 2) * det_core(s, t)


def block_cofactor(s: int, t: int) -> Polynomial:
    """Reduced cofactor of the q-distance matrix of K_{s,t} (oracle-resolved sign)."""
    _require_parts(s, t)
    return _sign(s + t) * _QP1 ** (s + t - 1) * cofactor_core(s, t)


def block_inverse(s: int, t: int) -> RingMatrix:
    """Inverse of the q-distance matrix of K_{s,t} over the rational-function field.

    Four all-ones blocks scaled by 1 / ((q+1) * det_core), minus 1/(q+1) times
    the identity; valid symbolically for every s, t >= 1.
    """
    _require_parts(s, t)
    scale = RationalFunction(ONE, _QP1 * det_core(s, t))
    tl = RationalFunction(_QP1**2 * (t - 1) - t) * scale
    br = RationalFunction(_QP1**2 * (s - 1) - s) * scale
    off = RationalFunction(-_QP1) * scale
    grid = [
        [RingMatrix.ones(s, s, tl), RingMatrix.ones(s, t, off)],
        [RingMatrix.ones(t, s, off), RingMatrix.ones(t, t, br)],
    ]
    corner = RingMatrix.from_blocks(grid)
    diag = RationalFunction(ONE, _QP1)
    rows = [
        [corner[i, j] - diag if i == j else corner[i, j] for j in range(s + t)]
        for i in range(s + t)
    ]
    return RingMatrix(rows)


def graph_cofactor(g: BiBlockGraph) -> Polynomial:
    """Reduced cofactor of a bi-block graph: the product of its block cofactors."""
    result = ONE
    for b in g.blocks:
        result = result * block_cofactor(b.m, b.n)
    return result


def graph_det(g: BiBlockGraph) -> Polynomial:
    """Determinant of the q-distance matrix of a bi-block graph.

    Product rule over blocks: sum over blocks of the block determinant times
    the cofactors of all other blocks.
    """
    cofs = [block_cofactor(b.m, b.n) for b in g.blocks]
    r = len(cofs)
    prefix = [ONE]
    for c in cofs:
        prefix.append(prefix[-1] * c)
    suffix = [ONE]
    for c in reversed(cofs):
        suffix.append(suffix[-1] * c)
    total = Polynomial()
    for i, b in enumerate(g.blocks):
        total = total + block_det(b.m, b.n) * prefix[i] * suffix[r - 1 - i]
    return total


# -- vectors and matrices ----------------------------------------------------


def _side_term_num(block, side: str) -> int:
    """Size of the opposite part minus one: the side-dependent weight source."""
    return (block.n if side == "X" else block.m) - 1


def balance_vector(g: BiBlockGraph) -> list[RationalFunction]:
    """The vector x with q_distance_matrix(g) @ x = balance_constant(g) * ones.

    Entry at v sums, over the blocks containing v, the side-dependent weight
    (q * (opposite - 1) - 1) / ((q+1) * cofactor_core), then subtracts
    (block degree - 1).
    """
    out = []
    for v in range(g.n):
        entries = g.membership[v]
        acc = RationalFunction(1 - len(entries))
        for block_index, side in entries:
            b = g.blocks[block_index]
            opposite = _side_term_num(b, side)
            acc = acc + RationalFunction(Q * opposite - 1, _QP1 * cofactor_core(b.m, b.n))
        out.append(acc)
    return out


def diagonal_weight_vector(g: BiBlockGraph) -> list[RationalFunction]:
    """The vector y used on the diagonal of the local matrix.

    Entry at v sums (opposite - 1) / cofactor_core over the blocks containing
    v, then subtracts (block degree - 1).
    """
    out = []
    for v in range(g.n):
        entries = g.membership[v]
        acc = RationalFunction(1 - len(entries))
        for block_index, side in entries:
            b = g.blocks[block_index]
            opposite = _side_term_num(b, side)
            acc = acc + RationalFunction(Polynomial((opposite,)), cofactor_core(b.m, b.n))
        out.append(acc)
    return out


def edge_weight_matrix(g: BiBlockGraph) -> RingMatrix:
    """Weighted adjacency matrix: weight 1 / cofactor_core on every edge of its block."""
    rows = [[RF_ZERO] * g.n for _ in range(g.n)]
    for b in g.blocks:
        w = RationalFunction(ONE, cofactor_core(b.m, b.n))
        for u in b.x:
            for v in b.y:
                rows[u][v] = w
                rows[v][u] = w
    return RingMatrix(rows)


def nonedge_weight_matrix(g: BiBlockGraph) -> RingMatrix:
    """Weights on same-side pairs of a common block (the non-edges inside blocks).

    X-side pairs weigh (n-1) / cofactor_core, Y-side pairs (m-1) / cofactor_core;
    the diagonal is zero.
    """
    rows = [[RF_ZERO] * g.n for _ in range(g.n)]
    for b in g.blocks:
        core = cofactor_core(b.m, b.n)
        for side, weight in (("X", b.n - 1), ("Y", b.m - 1)):
            vertices = b.x if side == "X" else b.y
            w = RationalFunction(Polynomial((weight,)), core)
            for u in vertices:
                for v in vertices:
                    if u != v:
                        rows[u][v] = w
    return RingMatrix(rows)


def balance_constant(g: BiBlockGraph) -> RationalFunction:
    """The constant value of q_distance_matrix(g) @ balance_vector(g); additive over
    blocks as det_core / ((q+1) * cofactor_core)."""
    acc = RF_ZERO
    for b in g.blocks:
        acc = acc + RationalFunction(det_core(b.m, b.n), _QP1 * cofactor_core(b.m, b.n))
    return acc


def local_matrix(g: BiBlockGraph) -> RingMatrix:
    """The block-local matrix: q/(q+1) * edge weights - q^2/(q+1) * non-edge
    weights - q^2/(q+1) * diag(y) + 1/(q+1) * identity."""
    a = edge_weight_matrix(g)
    b = nonedge_weight_matrix(g)
    y = diagonal_weight_vector(g)
    qq = RationalFunction(Q, _QP1)
    qq2 = RationalFunction(Q**2, _QP1)
    inv_qp1 = RationalFunction(ONE, _QP1)
    rows = []
    for i in range(g.n):
        row = []
        for j in range(g.n):
            e = a[i, j] * qq - b[i, j] * qq2
            if i == j:
                e = e - y[i] * qq2 + inv_qp1
            row.append(e)
        rows.append(row)
    return RingMatrix(rows)


def clearing_poly(g: BiBlockGraph) -> Polynomial:
    """(q+1) times the product of the nonconstant cofactor cores: a common
    clearing denominator for the balance vector, the balance constant, the
    local matrix, and the inverse."""
    delta = _QP1
    for b in g.blocks:
        if (b.m - 1) * (b.n - 1) > 0:
            delta = delta * cofactor_core(b.m, b.n)
    return delta


def _cleared(rf: RationalFunction, scale_int: list[int]) -> list[int]:
    return _fastpoly.cleared(rf.num.coeffs, rf.den.coeffs, scale_int)


def graph_inverse(g: BiBlockGraph) -> RingMatrix:
    """Inverse of the q-distance matrix: negated local matrix plus the
    rank-one balance correction outer(x, x) / balance_constant.

    Entries are assembled over the structural common denominator
    clearing_poly(g) * (cleared balance constant), which keeps all
    intermediate arithmetic on integer coefficients.
    """
    lam = balance_constant(g)
    if lam.is_zero:
        raise ArithmeticError("balance constant is identically zero; inverse form undefined")
    delta_int = clearing_poly(g).integer_coeffs()
    lam_int = _cleared(lam, delta_int)
    x_int = [_cleared(e, delta_int) for e in balance_vector(g)]
    loc = local_matrix(g)
    den = Polynomial(_fastpoly.pmul(delta_int, lam_int))
    rows = []
    for i in range(g.n):
        loc_row = [_cleared(loc[i, j], delta_int) for j in range(g.n)]
        row = []
        for j in range(g.n):
            num = _fastpoly.psub(
                _fastpoly.pmul(x_int[i], x_int[j]), _fastpoly.pmul(loc_row[j], lam_int)
            )
            row.append(RationalFunction(Polynomial(num), den))
        rows.append(row)
    return RingMatrix(rows)


# -- admissibility of concrete q values ---------------------------------------


@dataclass(frozen=True)
class ConditionViolation:
    block: int
    condition: str  # "C1" (cofactor core hits 1) or "C2" (determinant core hits mn)
    witness: str


@dataclass(frozen=True)
class ConditionCheck:
    q0: Rational
    violations: tuple[ConditionViolation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def violated(self, condition: str) -> bool:
        return any(v.condition == condition for v in self.violations)


def check_conditions(g: BiBlockGraph, q0: Rational) -> ConditionCheck:
    """Admissibility of a concrete q value, per block.

    C1 fails when q0 = -1 or q0^2 (m-1)(n-1) = 1 (a cofactor core vanishes:
    vectors, weight matrices, the local matrix and the balance constant have
    poles).  C2 fails when q0 = -1 or (q0+1)^2 (m-1)(n-1) = m n (a determinant
    core vanishes: the determinant is zero and the inverse does not exist).
    Violations are data, not errors.
    """
    violations = []
    for b in g.blocks:
        mm = (b.m - 1) * (b.n - 1)
        if q0 == -1:
            violations.append(ConditionViolation(b.index, "C1", "q = -1"))
            violations.append(ConditionViolation(b.index, "C2", "q = -1"))
            continue
        c1_val = q0 * q0 * mm
        if c1_val == 1:
            violations.append(
                ConditionViolation(b.index, "C1", f"q^2 (m-1)(n-1) = {c1_val} = 1 for K_{{{b.m},{b.n}}}")
            )
        c2_val = (q0 + 1) * (q0 + 1) * mm
        if c2_val == b.m * b.n:
            violations.append(
                ConditionViolation(
                    b.index, "C2", f"(q+1)^2 (m-1)(n-1) = {c2_val} = m n for K_{{{b.m},{b.n}}}"
                )
            )
    return ConditionCheck(q0, tuple(violations))


@dataclass(frozen=True)
class ClosedFormBundle:
    """Every closed form of one graph, computed symbolically."""

    det: Polynomial
    cofactor: Polynomial
    balance: RationalFunction
    x: list[RationalFunction]
    y: list[RationalFunction]
    edge_weights: RingMatrix
    nonedge_weights: RingMatrix
    local: RingMatrix
    inverse: RingMatrix


def bundle(g: BiBlockGraph) -> ClosedFormBundle:
    return ClosedFormBundle(
        det=graph_det(g),
        cofactor=graph_cofactor(g),
        balance=balance_constant(g),
        x=balance_vector(g),
        y=diagonal_weight_vector(g),
        edge_weights=edge_weight_matrix(g),
        nonedge_weights=nonedge_weight_matrix(g),
        local=local_matrix(g),
        inverse=graph_inverse(g),
    )
