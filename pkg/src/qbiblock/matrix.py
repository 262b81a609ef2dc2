"""Dense matrices over an exact ring, with exact determinant and inverse.

Matrices are immutable value types generic over the entry ring: entries only
need the arithmetic the chosen operation uses (``+``, ``-``, ``*``, and for
eliminations ``is_zero`` plus ``exact_div``).  Determinants use fraction-free
Bareiss condensation; inverses use Gauss-Jordan elimination over the
rational-function field.
"""

from __future__ import annotations

from typing import Callable, Iterable, Sequence

from . import _moddet
from .exactring import Polynomial, RationalFunction, RF_ONE, RF_ZERO

# Integer-coefficient polynomial matrices at least this large go through the
# modular evaluation engine; condensation handles everything below.
_MODULAR_THRESHOLD = 8


class DimensionError(ValueError):
    """Raised when matrix dimensions do not conform."""


class SingularMatrixError(ValueError):
    """Raised when elimination meets a singular matrix; carries the failing step."""

    def __init__(self, step: int):
        super().__init__(f"matrix is singular (no pivot at elimination step {step})")
        self.step = step


class RingMatrix:
    """An immutable dense matrix of exact ring elements, stored row-major."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Sequence]):
        rows = tuple(tuple(row) for row in rows)
        if not rows or not rows[0]:
            raise DimensionError("matrix must have at least one row and one column")
        width = len(rows[0])
        if any(len(row) != width for row in rows):
            raise DimensionError("ragged rows in matrix construction")
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("RingMatrix is immutable")

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0])

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __getitem__(self, index: tuple[int, int]):
        i, j = index
        return self.rows[i][j]

    # -- constructors -----------------------------------------------------

    @classmethod
    def zeros(cls, nrows: int, ncols: int, zero) -> "RingMatrix":
        return cls([[zero] * ncols for _ in range(nrows)])

    @classmethod
    def ones(cls, nrows: int, ncols: int, one) -> "RingMatrix":
        return cls([[one] * ncols for _ in range(nrows)])

    @classmethod
    def identity(cls, n: int, zero, one) -> "RingMatrix":
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def diagonal(cls, values: Sequence, zero) -> "RingMatrix":
        n = len(values)
        return cls([[values[i] if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def from_blocks(cls, grid: Sequence[Sequence["RingMatrix"]]) -> "RingMatrix":
        """Assemble a matrix from a 2D grid of conformal blocks."""
        if not grid or not grid[0]:
            raise DimensionError("empty block grid")
        ncols_per_block = [block.ncols for block in grid[0]]
        rows: list[list] = []
        for block_row in grid:
            if len(block_row) != len(ncols_per_block):
                raise DimensionError("ragged block grid")
            height = block_row[0].nrows
            for b, block in enumerate(block_row):
                if block.nrows != height:
                    raise DimensionError("block heights differ within a block row")
                if block.ncols != ncols_per_block[b]:
                    raise DimensionError("block widths differ within a block column")
            for i in range(height):
                rows.append([entry for block in block_row for entry in block.rows[i]])
        return cls(rows)

    # -- arithmetic --------------------------------------------------------

    def _require_same_shape(self, other: "RingMatrix"):
        if self.nrows != other.nrows or self.ncols != other.ncols:
            raise DimensionError(
                f"shape mismatch: {self.nrows}x{self.ncols} vs {other.nrows}x{other.ncols}"
            )

    def __add__(self, other: "RingMatrix") -> "RingMatrix":
        self._require_same_shape(other)
        return RingMatrix(
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)]
        )

    def __sub__(self, other: "RingMatrix") -> "RingMatrix":
        self._require_same_shape(other)
        return RingMatrix(
            [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)]
        )

    def __neg__(self) -> "RingMatrix":
        return self.map(lambda e: -e)

    def __mul__(self, scalar) -> "RingMatrix":
        return self.map(lambda e: e * scalar)

    __rmul__ = __mul__

    def __matmul__(self, other: "RingMatrix") -> "RingMatrix":
        if self.ncols != other.nrows:
            raise DimensionError(
                f"cannot multiply {self.nrows}x{self.ncols} by {other.nrows}x{other.ncols}"
            )
        bt = other.transpose().rows
        out = []
        for row in self.rows:
            out_row = []
            for col in bt:
                acc = row[0] * col[0]
                for a, b in zip(row[1:], col[1:]):
                    acc = acc + a * b
                out_row.append(acc)
            out.append(out_row)
        return RingMatrix(out)

    def transpose(self) -> "RingMatrix":
        return RingMatrix(list(zip(*self.rows)))

    def map(self, f: Callable) -> "RingMatrix":
        return RingMatrix([[f(e) for e in row] for row in self.rows])

    def __eq__(self, other):
        if not isinstance(other, RingMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"RingMatrix({[list(r) for r in self.rows]!r})"

    def __str__(self):
        return "\n".join("\t".join(str(e) for e in row) for row in self.rows)


def outer(u: Sequence, v: Sequence) -> RingMatrix:
    """Outer product: entry (i, j) = u[i] * v[j]."""
    return RingMatrix([[ui * vj for vj in v] for ui in u])


def rf_matrix(m: RingMatrix) -> RingMatrix:
    """Lift a matrix of polynomials into the rational-function field."""
    return m.map(RationalFunction)


# -- determinant ------------------------------------------------------------


def det_bareiss(m: RingMatrix):
    """Exact determinant of a square matrix over an integral domain.

    Fraction-free Bareiss condensation with row-swap pivoting (first
    structurally nonzero entry); every interior division is exact.  Large
    integer-coefficient polynomial matrices are dispatched to an equivalent
    exact modular-evaluation engine for speed.
    """
    if not m.is_square:
        raise DimensionError("determinant requires a square matrix")
    if m.nrows >= _MODULAR_THRESHOLD:
        int_rows = _integer_rows(m)
        if int_rows is not None:
            return Polynomial(_moddet.det_int_poly_matrix(int_rows))
    return _det_bareiss_generic(m)


def _integer_rows(m: RingMatrix) -> list[list[list[int]]] | None:
    out = []
    for row in m.rows:
        out_row = []
        for e in row:
            if not isinstance(e, Polynomial):
                return None
            ic = e.integer_coeffs()
            if ic is None:
                return None
            out_row.append(ic)
        out.append(out_row)
    return out


def _det_modular(m: RingMatrix) -> Polynomial:
    int_rows = _integer_rows(m)
    if int_rows is None:
        raise TypeError("modular determinant needs integer polynomial entries")
    return Polynomial(_moddet.det_int_poly_matrix(int_rows))


def _det_bareiss_generic(m: RingMatrix):
    n = m.nrows
    a = [list(row) for row in m.rows]
    zero = a[0][0] * 0
    sign = 1
    prev = None
    for k in range(n - 1):
        piv = next((i for i in range(k, n) if not a[i][k].is_zero), None)
        if piv is None:
            return zero
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                t = a[i][j] * pivot - a[i][k] * a[k][j]
                a[i][j] = t if prev is None else t.exact_div(prev)
        prev = pivot
    return a[n - 1][n - 1] * sign


def det_cofactor(m: RingMatrix):
    """Determinant by naive cofactor expansion along the first row (test oracle)."""
    if not m.is_square:
        raise DimensionError("determinant requires a square matrix")
    n = m.nrows
    if n == 1:
        return m.rows[0][0]
    acc = None
    for j in range(n):
        e = m.rows[0][j]
        if e.is_zero:
            continue
        minor = RingMatrix([[row[c] for c in range(n) if c != j] for row in m.rows[1:]])
        term = e * det_cofactor(minor)
        if j % 2:
            term = -term
        acc = term if acc is None else acc + term
    if acc is None:
        return m.rows[0][0] * 0
    return acc


# -- inverse -----------------------------------------------------------------


def inverse_gauss(m: RingMatrix) -> RingMatrix:
    """Exact inverse of a square matrix over the rational-function field.

    Plain Gauss-Jordan with field division; raises SingularMatrixError with
    the elimination step at which no pivot exists.
    """
    if not m.is_square:
        raise DimensionError("inverse requires a square matrix")
    n = m.nrows
    aug = []
    for i, row in enumerate(m.rows):
        lifted = [e if isinstance(e, RationalFunction) else RationalFunction(e) for e in row]
        aug.append(lifted + [RF_ONE if j == i else RF_ZERO for j in range(n)])
    for k in range(n):
        piv = next((i for i in range(k, n) if not aug[i][k].is_zero), None)
        if piv is None:
            raise SingularMatrixError(k)
        if piv != k:
            aug[k], aug[piv] = aug[piv], aug[k]
        inv = aug[k][k].inv()
        aug[k] = [e * inv for e in aug[k]]
        row_k = aug[k]
        for i in range(n):
            if i != k and not aug[i][k].is_zero:
                f = aug[i][k]
                aug[i] = [a - f * b for a, b in zip(aug[i], row_k)]
    return RingMatrix([row[n:] for row in aug])
