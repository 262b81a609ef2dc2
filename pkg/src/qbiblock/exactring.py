"""Exact scalar arithmetic: rationals, polynomials in q, and rational functions in q.

Everything here is exact; no floating point is used anywhere in the package.
Rational scalars are plain ``int`` or ``fractions.Fraction`` values (integral
results are demoted to ``int``).  Polynomials are dense ascending coefficient
tuples; rational functions are kept in canonical form (gcd-reduced, monic
denominator) so that equality is structural.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

from . import _fastpoly

Rational = Union[int, Fraction]


class InexactDivisionError(ArithmeticError):
    """Raised when an exact polynomial division leaves a remainder."""


class PoleError(ZeroDivisionError):
    """Raised when a rational function is evaluated at a root of its denominator."""


def _demote(value: Rational) -> Rational:
    """Return ``value`` as an int when it is integral."""
    if isinstance(value, Fraction) and value.denominator == 1:
        return value.numerator
    return value


def parse_rational(text: str) -> Rational:
    """Parse an exact rational literal of the form ``p`` or ``p/q``."""
    text = text.strip()
    if "/" in text:
        num_text, den_text = text.split("/", 1)
        return _demote(Fraction(int(num_text), int(den_text)))
    return int(text)


def rational_to_json(value: Rational) -> list[str]:
    return [str(value.numerator), str(value.denominator)]


class Polynomial:
    """A univariate polynomial in q with exact rational coefficients.

    Coefficients are stored ascending (index i multiplies q**i) with the
    leading coefficient nonzero; the zero polynomial is the empty tuple and
    has degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Rational] = ()):
        normalized = [_demote(c) for c in coeffs]
        while normalized and normalized[-1] == 0:
            normalized.pop()
        object.__setattr__(self, "coeffs", tuple(normalized))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> Rational:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    # -- ring arithmetic ------------------------------------------------

    @staticmethod
    def _coerce(other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial((other,))
        return NotImplemented

    def __add__(self, other):
        other = Polynomial._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = Polynomial._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = Polynomial._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise ValueError("negative polynomial power")
        result = ONE
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def __truediv__(self, other) -> "RationalFunction":
        return RationalFunction(self, other)

    def scale(self, factor: Rational) -> "Polynomial":
        return Polynomial(tuple(c * factor for c in self.coeffs))

    def exact_div(self, other: "Polynomial") -> "Polynomial":
        """Exact quotient self / other; raises if the division is not exact."""
        other = Polynomial._coerce(other)
        if other is NotImplemented:
            raise TypeError("exact_div expects a polynomial or rational scalar")
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        if self.is_zero:
            return ZERO
        if self.degree < other.degree:
            raise InexactDivisionError(f"({self}) is not divisible by ({other})")
        rem = list(self.coeffs)
        db = other.degree
        lead = other.coeffs[-1]
        quot = [0] * (len(rem) - db)
        for k in range(len(quot) - 1, -1, -1):
            c = Fraction(rem[k + db]) / lead
            quot[k] = c
            if c:
                for i, bc in enumerate(other.coeffs):
                    rem[k + i] -= c * bc
        if any(rem[:db]):
            raise InexactDivisionError(f"({self}) is not divisible by ({other})")
        return Polynomial(quot)

    def gcd(self, other: "Polynomial") -> "Polynomial":
        """Greatest common divisor, returned primitive with positive leading coefficient.

        Computed by the subresultant polynomial remainder sequence over the
        integers after clearing coefficient denominators.
        """
        other = Polynomial._coerce(other)
        if self.is_zero and other.is_zero:
            return ZERO
        if self.is_zero:
            return Polynomial(_fastpoly.primitive(_fastpoly.int_pair(other.coeffs)[0]))
        if other.is_zero:
            return Polynomial(_fastpoly.primitive(_fastpoly.int_pair(self.coeffs)[0]))
        g = _fastpoly.int_poly_gcd(
            _fastpoly.int_pair(self.coeffs)[0], _fastpoly.int_pair(other.coeffs)[0]
        )
        return Polynomial(g)

    def monic(self) -> "Polynomial":
        if self.is_zero:
            return self
        lc = self.lead
        if lc == 1:
            return self
        return self.scale(Fraction(1) / lc)

    def eval_at(self, q0: Rational) -> Rational:
        """Exact Horner evaluation at a rational point."""
        acc: Rational = 0
        for c in reversed(self.coeffs):
            acc = acc * q0 + c
        return _demote(acc)

    def integer_coeffs(self) -> list[int] | None:
        """Ascending coefficient list when every coefficient is an integer, else None."""
        if all(isinstance(c, int) for c in self.coeffs):
            return list(self.coeffs)
        return None

    # -- comparisons and rendering ---------------------------------------

    def __eq__(self, other):
        other = Polynomial._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Polynomial({list(self.coeffs)!r})"

    def __str__(self):
        if self.is_zero:
            return "0"
        parts: list[str] = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = -c if c < 0 else c
            if i == 0:
                term = str(mag)
            else:
                var = "q" if i == 1 else f"q^{i}"
                if mag == 1:
                    term = var
                elif isinstance(mag, Fraction):
                    term = f"({mag}){var}"
                else:
                    term = f"{mag}{var}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)

    def to_json(self) -> list[list[str]]:
        return [rational_to_json(c) for c in self.coeffs]


ZERO = Polynomial()
ONE = Polynomial((1,))
Q = Polynomial((0, 1))


def q_integer(alpha: int) -> Polynomial:
    """The polynomial 1 + q + ... + q**(alpha-1); alpha = 0 gives zero."""
    if alpha < 0:
        raise ValueError("q_integer requires a nonnegative argument")
    return Polynomial((1,) * alpha)


# -- rational functions ----------------------------------------------------


class RationalFunction:
    """An element of the field of rational functions in q, in canonical form.

    Invariants: the denominator is nonzero and monic, gcd(num, den) = 1, and
    zero is stored as 0/1.  Equality and hashing are therefore structural.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=ONE):
        num = Polynomial._coerce(num)
        den = Polynomial._coerce(den)
        if den.is_zero:
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero:
            num, den = ZERO, ONE
        else:
            # reduce on integer coefficient lists, then apply the collected
            # scalar and make the denominator monic in one pass
            num_int, num_den = _fastpoly.int_pair(num.coeffs)
            den_int, den_den = _fastpoly.int_pair(den.coeffs)
            if len(num_int) > 1 or len(den_int) > 1:
                g = _fastpoly.int_poly_gcd(num_int, den_int)
                if len(g) > 1:
                    num_int = _fastpoly.pdiv_exact(num_int, g)
                    den_int = _fastpoly.pdiv_exact(den_int, g)
            scalar = Fraction(den_den, num_den) / den_int[-1]
            num = Polynomial(c * scalar for c in num_int)
            lead = den_int[-1]
            den = Polynomial(Fraction(c, lead) for c in den_int)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RationalFunction is immutable")

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def __bool__(self) -> bool:
        return not self.num.is_zero

    @staticmethod
    def _coerce(other) -> "RationalFunction":
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, (Polynomial, int, Fraction)):
            return RationalFunction(other)
        return NotImplemented

    def __add__(self, other):
        other = RationalFunction._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        other = RationalFunction._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = RationalFunction._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inv(self) -> "RationalFunction":
        if self.is_zero:
            raise ZeroDivisionError("inverse of the zero rational function")
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other):
        other = RationalFunction._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        return RationalFunction._coerce(other) * self.inv()

    def exact_div(self, other) -> "RationalFunction":
        """Division in the field; present so field elements satisfy the
        exact-division interface that fraction-free eliminations expect."""
        return self / other

    def eval_at(self, q0: Rational) -> Rational:
        den_val = self.den.eval_at(q0)
        if den_val == 0:
            raise PoleError(f"denominator {self.den} vanishes at q = {q0}")
        num_val = self.num.eval_at(q0)
        return _demote(Fraction(num_val) / Fraction(den_val))

    def __eq__(self, other):
        other = RationalFunction._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RationalFunction({self.num!r}, {self.den!r})"

    def __str__(self):
        if self.den == ONE:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}


RF_ZERO = RationalFunction(ZERO)
RF_ONE = RationalFunction(ONE)


def eval_at(value: Union[Polynomial, RationalFunction], q0: Rational) -> Rational:
    """Exact evaluation of a polynomial or rational function at a rational point."""
    return value.eval_at(q0)
