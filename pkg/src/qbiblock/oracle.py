"""Brute-force oracles and the verification harness.

The oracles never call the closed-form code paths: they work from the
q-distance matrix alone through the generic matrix primitives (fraction-free
condensation, Gauss-Jordan elimination), so agreement between the two routes
is evidence, not tautology.

verify_graph runs a fixed list of identity checks per graph.  The matrix
identities are verified over a cleared structural common denominator
(q+1) * prod(cofactor cores), which turns every rational-function identity
into an equivalent integer-polynomial identity; the straight rational-function
route is exercised on small graphs by the test suite.
"""

from __future__ import annotations

import functools
import itertools
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from . import _fastpoly
from .closedform import (
    balance_constant,
    balance_vector,
    clearing_poly,
    graph_cofactor,
    graph_det,
    graph_inverse,
    local_matrix,
)
from .exactring import Polynomial, RationalFunction
from .graph import (
    Attachment,
    BiBlockGraph,
    BlockSpec,
    build,
    distances,
    graph_to_json,
    random_biblock,
)
from .matrix import RingMatrix, det_bareiss, inverse_gauss, rf_matrix
from .qdist import cofactor_matrix, q_distance_matrix

# Above this size the elimination-inverse comparison is skipped: the inverse
# is still fully verified by the exact product identity, and uniqueness of the
# inverse makes the entrywise comparison mathematically redundant there.
_ELIMINATION_COMPARE_MAX = 10

_CHECK_NAMES = (
    "det_vs_oracle",
    "cofactor_vs_oracle",
    "balance_constant_nonzero",
    "matrix_times_balance_is_constant",
    "balance_vector_sum",
    "anchor_weighted_sum",
    "anchor_affine_sum",
    "local_matrix_product",
    "inverse_product",
    "inverse_vs_elimination",
)


def oracle_det(g: BiBlockGraph) -> Polynomial:
    """Determinant of the q-distance matrix, straight from the matrix."""
    return det_bareiss(q_distance_matrix(g))


def oracle_cofactor(g: BiBlockGraph) -> Polynomial:
    """Reduced cofactor, straight from the cofactor-construction matrix."""
    return det_bareiss(cofactor_matrix(q_distance_matrix(g), distances(g)))


def oracle_inverse(g: BiBlockGraph) -> RingMatrix:
    """Inverse of the q-distance matrix by Gauss-Jordan elimination."""
    return inverse_gauss(rf_matrix(q_distance_matrix(g)))


# -- verification ------------------------------------------------------------


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    witness: str | None = None

    def to_json(self) -> dict:
        out: dict = {"name": self.name, "pass": self.passed}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


@dataclass(frozen=True)
class VerificationReport:
    name: str
    specs: tuple[BlockSpec, ...]
    vertex_count: int
    checks: tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self) -> dict:
        graph = graph_to_json(self.specs)
        graph["name"] = self.name
        graph["vertices"] = self.vertex_count
        return {"graph": graph, "checks": [c.to_json() for c in self.checks]}


def _clip(text: str, limit: int = 160) -> str:
    return text if len(text) <= limit else text[: limit - 3] + "..."


def _witness_pair(where: str, lhs, rhs) -> str:
    return f"{where}: {_clip(str(lhs))} != {_clip(str(rhs))}"


def _scaled_int_coeffs(rf: RationalFunction, scale_int: list[int]) -> list[int]:
    """Integer coefficient list of rf * scale; the scale must clear the denominator."""
    return _fastpoly.cleared(rf.num.coeffs, rf.den.coeffs, scale_int)


def verify_graph(specs, name: str = "graph", select=None) -> VerificationReport:
    """Run the identity checks on one graph; failures carry a first-mismatch witness.

    select restricts the run to a subset of check names (default: all); the
    report always lists checks in the fixed master order.
    """
    wanted = set(_CHECK_NAMES) if select is None else set(select)
    unknown = wanted - set(_CHECK_NAMES)
    if unknown:
        raise ValueError(f"unknown check names: {sorted(unknown)}")
    g = build(specs)
    dist = distances(g)
    n = g.n
    d_int = [[[1] * dist[i][j] for j in range(n)] for i in range(n)]
    checks: list[CheckResult] = []

    def record(check_name: str, witness: str | None):
        checks.append(CheckResult(check_name, witness is None, witness))

    # determinant and cofactor against the elimination oracles
    if "det_vs_oracle" in wanted:
        closed_det = graph_det(g)
        odet = oracle_det(g)
        record(
            "det_vs_oracle", None if closed_det == odet else _witness_pair("det", closed_det, odet)
        )

    if "cofactor_vs_oracle" in wanted:
        closed_cof = graph_cofactor(g)
        ocof = oracle_cofactor(g)
        record(
            "cofactor_vs_oracle",
            None if closed_cof == ocof else _witness_pair("cofactor", closed_cof, ocof),
        )

    # structural common denominator for the rational-function identities;
    # shared by every check below
    needs_scaled = wanted & {
        "balance_constant_nonzero",
        "matrix_times_balance_is_constant",
        "balance_vector_sum",
        "anchor_weighted_sum",
        "anchor_affine_sum",
        "local_matrix_product",
        "inverse_product",
    }
    if needs_scaled:
        delta = clearing_poly(g)
        delta_int = delta.integer_coeffs()
        lam = balance_constant(g)
        lam_scaled = _scaled_int_coeffs(lam, delta_int)
        x_scaled = [_scaled_int_coeffs(e, delta_int) for e in balance_vector(g)]

    if "balance_constant_nonzero" in wanted:
        record(
            "balance_constant_nonzero",
            None if lam_scaled else f"balance constant is zero for {name}",
        )

    if "matrix_times_balance_is_constant" in wanted:
        witness = None
        for i in range(n):
            acc: list[int] = []
            row = d_int[i]
            for j in range(n):
                if row[j] and x_scaled[j]:
                    acc = _fastpoly.padd(acc, _fastpoly.pmul(row[j], x_scaled[j]))
            if acc != lam_scaled:
                witness = _witness_pair(f"row {i}", Polynomial(acc), Polynomial(lam_scaled))
                break
        record("matrix_times_balance_is_constant", witness)

    if "balance_vector_sum" in wanted:
        total: list[int] = []
        for e in x_scaled:
            total = _fastpoly.padd(total, e)
        expected = _fastpoly.psub(delta_int, _fastpoly.pmul([-1, 1], lam_scaled))
        record(
            "balance_vector_sum",
            None
            if total == expected
            else _witness_pair("sum", Polynomial(total), Polynomial(expected)),
        )

    if wanted & {"anchor_weighted_sum", "anchor_affine_sum"}:
        anchor = n - 1
        weighted: list[int] = []
        affine: list[int] = []
        for i in range(n):
            d_ia = d_int[i][anchor]
            w_coeff = _fastpoly.padd([1, 1], _fastpoly.pmul([-1, 0, 1], d_ia))
            a_coeff = _fastpoly.padd([1], _fastpoly.pmul([-1, 1], d_ia))
            weighted = _fastpoly.padd(weighted, _fastpoly.pmul(w_coeff, x_scaled[i]))
            affine = _fastpoly.padd(affine, _fastpoly.pmul(a_coeff, x_scaled[i]))
        if "anchor_weighted_sum" in wanted:
            expected_weighted = _fastpoly.pmul([1, 1], delta_int)
            record(
                "anchor_weighted_sum",
                None
                if weighted == expected_weighted
                else _witness_pair(
                    "anchor sum", Polynomial(weighted), Polynomial(expected_weighted)
                ),
            )
        if "anchor_affine_sum" in wanted:
            record(
                "anchor_affine_sum",
                None
                if affine == delta_int
                else _witness_pair("anchor sum", Polynomial(affine), Polynomial(delta_int)),
            )

    if "local_matrix_product" in wanted:
        loc = local_matrix(g)
        loc_scaled = [[_scaled_int_coeffs(loc[i, j], delta_int) for j in range(n)] for i in range(n)]
        product = _fastpoly.matmul(d_int, loc_scaled)
        witness = None
        for i in range(n):
            for j in range(n):
                lhs = _fastpoly.padd(product[i][j], delta_int) if i == j else product[i][j]
                if lhs != x_scaled[j]:
                    witness = _witness_pair(
                        f"entry ({i},{j})", Polynomial(lhs), Polynomial(x_scaled[j])
                    )
                    break
            if witness:
                break
        record("local_matrix_product", witness)

    if wanted & {"inverse_product", "inverse_vs_elimination"}:
        inverse = graph_inverse(g)

    if "inverse_product" in wanted:
        delta2_int = _fastpoly.pmul(delta_int, lam_scaled)
        inv_scaled = [
            [_scaled_int_coeffs(inverse[i, j], delta2_int) for j in range(n)] for i in range(n)
        ]
        product = _fastpoly.matmul(d_int, inv_scaled)
        witness = None
        for i in range(n):
            for j in range(n):
                expected_entry = delta2_int if i == j else []
                if product[i][j] != expected_entry:
                    witness = _witness_pair(
                        f"entry ({i},{j})", Polynomial(product[i][j]), Polynomial(expected_entry)
                    )
                    break
            if witness:
                break
        record("inverse_product", witness)

    if "inverse_vs_elimination" in wanted and n <= _ELIMINATION_COMPARE_MAX:
        witness = None
        try:
            elim_scaled, elim_dens = _fastpoly.ffgj_inverse(d_int)
        except _fastpoly.SingularError as exc:
            witness = f"elimination failed: {exc}"
        if witness is None:
            for i in range(n):
                den_i = elim_dens[i]
                for j in range(n):
                    wnum, wa = _fastpoly.int_pair(inverse[i, j].num.coeffs)
                    wden, wb = _fastpoly.int_pair(inverse[i, j].den.coeffs)
                    lhs = _fastpoly.pscale(_fastpoly.pmul(wnum, den_i), wb)
                    rhs = _fastpoly.pscale(_fastpoly.pmul(wden, elim_scaled[i][j]), wa)
                    if lhs != rhs:
                        witness = _witness_pair(
                            f"entry ({i},{j})",
                            inverse[i, j],
                            f"({Polynomial(elim_scaled[i][j])})/({Polynomial(den_i)})",
                        )
                        break
                if witness:
                    break
        record("inverse_vs_elimination", witness)

    return VerificationReport(name, tuple(specs), n, tuple(checks))


# -- corpus -------------------------------------------------------------------


def _tree_specs_from_parents(parents: tuple[int, ...]) -> list[BlockSpec]:
    specs = [BlockSpec(1, 1)]
    for parent in parents[1:]:
        specs.append(BlockSpec(1, 1, Attachment(parent, "X")))
    return specs


def _canonical_tree_code(parents: tuple[int, ...]) -> str:
    n = len(parents) + 1
    neighbors: list[list[int]] = [[] for _ in range(n)]
    for child, parent in enumerate(parents, start=1):
        neighbors[child].append(parent)
        neighbors[parent].append(child)
    # find the 1 or 2 centers by peeling leaves
    degree = [len(nb) for nb in neighbors]
    layer = [v for v in range(n) if degree[v] <= 1]
    remaining = n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            degree[v] = 0
            for u in neighbors[v]:
                if degree[u] > 1:
                    degree[u] -= 1
                    if degree[u] == 1:
                        nxt.append(u)
        layer = nxt

    def encode(v: int, parent: int) -> str:
        childs = sorted(encode(u, v) for u in neighbors[v] if u != parent)
        return "(" + "".join(childs) + ")"

    return min(encode(c, -1) for c in layer)


@functools.cache
def all_trees(max_n: int) -> tuple[tuple[BlockSpec, ...], ...]:
    """All pairwise non-isomorphic trees on 2..max_n vertices as build sequences."""
    out: list[tuple[BlockSpec, ...]] = []
    for n in range(2, max_n + 1):
        seen: set[str] = set()
        for parents in itertools.product(*(range(v) for v in range(1, n))):
            code = _canonical_tree_code(parents)
            if code not in seen:
                seen.add(code)
                out.append(tuple(_tree_specs_from_parents(parents)))
    return tuple(out)


def default_corpus(seed: int = 7) -> list[tuple[str, list[BlockSpec]]]:
    """The standard verification corpus.

    All complete bipartite blocks K_{s,t} for 1 <= s,t <= 5, every
    non-isomorphic tree on up to 8 vertices, and 100 seeded random bi-block
    graphs with at most 5 blocks and parts at most 4.
    """
    corpus: list[tuple[str, list[BlockSpec]]] = []
    for s in range(1, 6):
        for t in range(1, 6):
            corpus.append((f"K_{s}_{t}", [BlockSpec(s, t)]))
    for index, tree in enumerate(all_trees(8)):
        corpus.append((f"tree_{len(tree) + 1}v_{index:02d}", list(tree)))
    rng = random.Random(seed)
    for index in range(100):
        corpus.append((f"random_{index:03d}", random_biblock(rng.randrange(1 << 62), 5, 4)))
    return corpus


def verify_corpus(corpus, jobs: int = 1) -> list[VerificationReport]:
    """Verify every (name, specs) pair; report order always follows corpus order."""
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(lambda item: verify_graph(item[1], item[0]), corpus))
    return [verify_graph(specs, name) for name, specs in corpus]
