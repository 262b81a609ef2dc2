"""Integer-coefficient polynomial helpers on plain lists (internal).

A polynomial is an ascending list of ints with a nonzero last entry; the zero
polynomial is the empty list.  The verification harness works on these raw
lists for the large matrix products where ring-object overhead would dominate.
All routines are exact; inexact divisions raise instead of truncating.
"""

from __future__ import annotations

from fractions import Fraction


class SingularError(ValueError):
    """Elimination found no usable pivot; carries the failing step index."""

    def __init__(self, step: int):
        super().__init__(f"matrix is singular (no pivot at elimination step {step})")
        self.step = step


def pstrip(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def padd(a: list[int], b: list[int]) -> list[int]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return pstrip(out)


def psub(a: list[int], b: list[int]) -> list[int]:
    out = list(a) + [0] * (len(b) - len(a))
    for i, c in enumerate(b):
        out[i] -= c
    return pstrip(out)


def pneg(a: list[int]) -> list[int]:
    return [-c for c in a]


def pscale(a: list[int], k: int) -> list[int]:
    if k == 0:
        return []
    return [c * k for c in a]


def pmul(a: list[int], b: list[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def pdiv_exact(a: list[int], b: list[int]) -> list[int]:
    """Exact quotient a / b over the integers; raises ArithmeticError otherwise.

    When the quotient is known to have integer coefficients, every step of
    classical long division stays integral, so each leading-coefficient
    division is checked.
    """
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if not a:
        return []
    if b == [1]:
        return list(a)
    db = len(b) - 1
    if len(a) - 1 < db:
        raise ArithmeticError("inexact polynomial division")
    rem = list(a)
    lead = b[-1]
    quot = [0] * (len(a) - db)
    for k in range(len(quot) - 1, -1, -1):
        c, r = divmod(rem[k + db], lead)
        if r:
            raise ArithmeticError("inexact polynomial division")
        quot[k] = c
        if c:
            for i, bc in enumerate(b):
                rem[k + i] -= c * bc
    if any(rem[:db]):
        raise ArithmeticError("inexact polynomial division")
    return quot


def peval(a: list[int], x: int) -> int:
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def int_pair(coeffs) -> tuple[list[int], int]:
    """(integer list, positive scalar denominator) for mixed int/Fraction coefficients."""
    den = 1
    for c in coeffs:
        if isinstance(c, Fraction):
            d = c.denominator
            g = _gcd(den, d)
            den = den * d // g
    return [int(c * den) for c in coeffs], den


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def content(coeffs: list[int]) -> int:
    g = 0
    for c in coeffs:
        g = _gcd(g, c)
        if g == 1:
            break
    return g or 1


def primitive(coeffs: list[int]) -> list[int]:
    """Divide out the content; the sign is chosen to make the lead positive."""
    g = content(coeffs)
    if coeffs and coeffs[-1] < 0:
        g = -g
    return [c // g for c in coeffs]


def _pseudo_rem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b, over the integers."""
    da, db = len(a) - 1, len(b) - 1
    lead = b[-1]
    rem = list(a)
    for k in range(da - db, -1, -1):
        c = rem[k + db]
        for i in range(len(rem)):
            rem[i] *= lead
        if c:
            for i, bc in enumerate(b):
                rem[k + i] -= c * bc
        del rem[k + db :]
    return pstrip(rem)


def int_poly_gcd(a: list[int], b: list[int]) -> list[int]:
    """Primitive positive-lead gcd of two nonzero integer coefficient lists
    (subresultant polynomial remainder sequence)."""
    if len(a) < len(b):
        a, b = b, a
    a, b = primitive(a), primitive(b)
    g, h = 1, 1
    while True:
        delta = (len(a) - 1) - (len(b) - 1)
        rem = _pseudo_rem(a, b)
        if not rem:
            return primitive(b)
        if len(rem) == 1:
            return [1]
        divisor = g * h**delta
        quotient = []
        for c in rem:
            q, r = divmod(c, divisor)
            if r:
                raise ArithmeticError("subresultant sequence division was not exact")
            quotient.append(q)
        a, b = b, quotient
        g = a[-1]
        h = g**delta // h ** (delta - 1) if delta > 0 else h


def cleared(num_coeffs, den_coeffs, scale: list[int]) -> list[int]:
    """Integer coefficients of (num/den) * scale, when that product is integral.

    num and den are coefficient sequences (ints or Fractions); scale is an
    integer list that den divides over the rationals.
    """
    num_int, a = int_pair(num_coeffs)
    if not num_int:
        return []
    den_int, b = int_pair(den_coeffs)
    # (num/a)/(den/b) * scale = (num * b * scale) / (a * den); the final result
    # is integral, so the polynomial division and the scalar division are exact
    t = pdiv_exact(pscale(pmul(num_int, scale), b), den_int)
    out = []
    for c in t:
        q, r = divmod(c, a)
        if r:
            raise ArithmeticError("clearing denominators did not reach integer coefficients")
        out.append(q)
    return out


def matmul(a: list[list[list[int]]], b: list[list[list[int]]]) -> list[list[list[int]]]:
    """Product of two matrices of integer polynomial lists, skipping zero entries."""
    rows, inner, cols = len(a), len(b), len(b[0])
    out = []
    for i in range(rows):
        arow = a[i]
        orow = []
        for j in range(cols):
            acc: list[int] = []
            for k in range(inner):
                bkj = b[k][j]
                if bkj and arow[k]:
                    acc = padd(acc, pmul(arow[k], bkj))
            orow.append(acc)
        out.append(orow)
    return out


def ffgj_inverse(rows: list[list[list[int]]]) -> tuple[list[list[list[int]]], list[list[int]]]:
    """Fraction-free Gauss-Jordan inverse of a matrix of integer polynomials.

    Returns (scaled_inverse, row_denominators): row i of the true inverse over
    the rational-function field is scaled_inverse[i][j] / row_denominators[i].
    Intermediate entries stay polynomial because each one-step update
    (pivot * entry - multiplier * pivot_row_entry) is exactly divisible by the
    previous pivot; the divisions are checked and raise on any violation.
    """
    n = len(rows)
    aug = [[list(e) for e in row] + [[1] if j == i else [] for j in range(n)] for i, row in enumerate(rows)]
    prev: list[int] = [1]
    width = 2 * n
    for k in range(n):
        piv = next((i for i in range(k, n) if aug[i][k]), None)
        if piv is None:
            raise SingularError(k)
        if piv != k:
            aug[k], aug[piv] = aug[piv], aug[k]
        pivot = aug[k][k]
        row_k = aug[k]
        for i in range(n):
            if i == k:
                continue
            row_i = aug[i]
            mult = row_i[k]
            if mult:
                for j in range(width):
                    if j == k:
                        continue
                    row_i[j] = pdiv_exact(psub(pmul(pivot, row_i[j]), pmul(mult, row_k[j])), prev)
                row_i[k] = []
            else:
                for j in range(width):
                    if j == k:
                        continue
                    row_i[j] = pdiv_exact(pmul(pivot, row_i[j]), prev)
        prev = pivot
    scaled = [row[n:] for row in aug]
    dens = [aug[i][i] for i in range(n)]
    return scaled, dens
