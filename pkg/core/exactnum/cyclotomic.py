"""Exact arithmetic in cyclotomic fields Q(zeta_N).

A value is stored as its coordinate vector in the power basis
1, zeta, ..., zeta^(phi(N)-1), reduced modulo the N-th cyclotomic polynomial.
Operands of different conductors are promoted to the lcm of the two.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple, Union

from sympy import QQ, Poly, cyclotomic_poly, divisors, symbols, totient

Number = Union[int, Fraction, "Cyclotomic"]

_X = symbols("x")


@lru_cache(maxsize=None)
def cyclotomic_coefficients(order: int) -> Tuple[int, ...]:
    """Coefficients of Phi_order, lowest degree first (monic)."""
    if order < 1:
        raise ValueError(f"Cyclotomic order must be positive, got {order}")
    poly = cyclotomic_poly(order, _X, polys=True)
    return tuple(int(c) for c in reversed(poly.all_coeffs()))


@lru_cache(maxsize=None)
def field_degree(order: int) -> int:
    return int(totient(order))


def _reduce(poly: list, order: int) -> Tuple[Fraction, ...]:
    """Reduce a low-to-high coefficient list modulo Phi_order."""
    phi = cyclotomic_coefficients(order)
    degree = len(phi) - 1
    work = list(poly)
    for top in range(len(work) - 1, degree - 1, -1):
        lead = work[top]
        if not lead:
            continue
        base = top - degree
        for offset in range(degree):
            if phi[offset]:
                work[base + offset] -= lead * phi[offset]
        work[top] = 0
    work.extend([0] * (degree - len(work)))
    return tuple(Fraction(c) for c in work[:degree])


def parse_rational(text: Union[str, int]) -> Fraction:
    """Parse the "p/q" grammar used by the JSON formats ("3" means "3/1")."""
    if isinstance(text, int):
        return Fraction(text)
    cleaned = str(text).strip()
    if not cleaned or "." in cleaned or "e" in cleaned.lower():
        raise ValueError(f"Malformed rational '{text}'")
    if "/" in cleaned:
        num, den = cleaned.split("/", 1)
        value = Fraction(int(num), int(den))
    else:
        value = Fraction(int(cleaned))
    return value


def format_rational(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


class Cyclotomic:
    """Immutable element of Q(zeta_order)."""

    __slots__ = ("order", "coeffs", "_normal")

    def __init__(self, order: int, coeffs: Sequence[Union[int, Fraction]]) -> None:
        degree = field_degree(order)
        if len(coeffs) != degree:
            coeffs = _reduce(list(coeffs), order)
        self.order = order
        self.coeffs = tuple(Fraction(c) for c in coeffs)
        self._normal: Optional[Cyclotomic] = None

    # -- constructors -------------------------------------------------

    @classmethod
    def from_fraction(cls, value: Union[int, Fraction], order: int = 1) -> "Cyclotomic":
        if order == 1:
            return _rational(Fraction(value))
        coeffs = [Fraction(0)] * field_degree(order)
        coeffs[0] = Fraction(value)
        return cls(order, coeffs)

    @classmethod
    def from_int(cls, value: int) -> "Cyclotomic":
        return _small_int(value) if -64 <= value <= 64 else _rational(Fraction(value))

    @classmethod
    def coerce(cls, value: Number) -> "Cyclotomic":
        if isinstance(value, Cyclotomic):
            return value
        if isinstance(value, (int, Fraction)):
            return cls.from_fraction(value)
        raise TypeError(f"Cannot coerce {type(value).__name__} to Cyclotomic")

    # -- inspection ---------------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def rational_value(self) -> Optional[Fraction]:
        return self.coeffs[0] if self.is_rational() else None

    def integer_value(self) -> Optional[int]:
        if not self.is_rational():
            return None
        value = self.coeffs[0]
        return value.numerator if value.denominator == 1 else None

    # -- conductor handling -------------------------------------------

    def promote(self, target: int) -> "Cyclotomic":
        if target == self.order:
            return self
        if target % self.order:
            raise ValueError(f"Cannot promote order {self.order} to {target}")
        if self.is_rational():
            return Cyclotomic.from_fraction(self.coeffs[0], target)
        step = target // self.order
        poly = [Fraction(0)] * ((len(self.coeffs) - 1) * step + 1)
        for power, coeff in enumerate(self.coeffs):
            poly[power * step] = coeff
        return Cyclotomic(target, _reduce(poly, target))

    def normalize(self) -> "Cyclotomic":
        """Same value over the smallest conductor containing it (idempotent)."""
        if self._normal is not None:
            return self._normal
        result = self
        if self.is_rational():
            result = _rational(self.coeffs[0])
        else:
            for candidate in divisors(self.order):
                if candidate == self.order:
                    break
                found = _express_in_subfield(self, candidate)
                if found is not None:
                    result = found
                    break
        self._normal = result
        result._normal = result
        return result

    # -- arithmetic ---------------------------------------------------

    def _pair(self, other: Number) -> Tuple["Cyclotomic", "Cyclotomic"]:
        other = Cyclotomic.coerce(other)
        if self.order == other.order:
            return self, other
        target = self.order * other.order // math.gcd(self.order, other.order)
        return self.promote(target), other.promote(target)

    def __add__(self, other: Number) -> "Cyclotomic":
        if not isinstance(other, (Cyclotomic, int, Fraction)):
            return NotImplemented
        if isinstance(other, (int, Fraction)):
            other = Cyclotomic.from_fraction(other)
        if other.is_rational() and (self.order > 2 or other.order <= 2):
            return Cyclotomic(self.order, (self.coeffs[0] + other.coeffs[0],) + self.coeffs[1:])
        left, right = self._pair(other)
        return Cyclotomic(left.order, [a + b for a, b in zip(left.coeffs, right.coeffs)])

    __radd__ = __add__

    def __neg__(self) -> "Cyclotomic":
        return Cyclotomic(self.order, [-c for c in self.coeffs])

    def __sub__(self, other: Number) -> "Cyclotomic":
        if not isinstance(other, (Cyclotomic, int, Fraction)):
            return NotImplemented
        return self + (-Cyclotomic.coerce(other))

    def __rsub__(self, other: Number) -> "Cyclotomic":
        return Cyclotomic.coerce(other) - self

    def scale(self, factor: Fraction) -> "Cyclotomic":
        return Cyclotomic(self.order, [c * factor for c in self.coeffs])

    def __mul__(self, other: Number) -> "Cyclotomic":
        if isinstance(other, (int, Fraction)):
            return self.scale(Fraction(other))
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        if other.is_rational():
            return self.scale(other.coeffs[0])
        if self.is_rational():
            return other.scale(self.coeffs[0])
        left, right = self._pair(other)
        product = [Fraction(0)] * (len(left.coeffs) + len(right.coeffs) - 1)
        for i, a in enumerate(left.coeffs):
            if not a:
                continue
            for j, b in enumerate(right.coeffs):
                if b:
                    product[i + j] += a * b
        return Cyclotomic(left.order, _reduce(product, left.order))

    __rmul__ = __mul__

    def inverse(self) -> "Cyclotomic":
        if self.is_zero():
            raise ZeroDivisionError("Cyclotomic division by zero")
        if self.is_rational():
            return Cyclotomic.from_fraction(1 / self.coeffs[0], self.order)
        modulus = Poly(list(reversed(cyclotomic_coefficients(self.order))), _X, domain=QQ)
        value = Poly([QQ(c.numerator, c.denominator) for c in reversed(self.coeffs)], _X, domain=QQ)
        inv = value.invert(modulus)
        coeffs = [Fraction(str(c)) for c in reversed(inv.all_coeffs())]
        return Cyclotomic(self.order, coeffs)

    def __truediv__(self, other: Number) -> "Cyclotomic":
        other = Cyclotomic.coerce(other)
        return self * other.inverse()

    def __rtruediv__(self, other: Number) -> "Cyclotomic":
        return Cyclotomic.coerce(other) * self.inverse()

    def __pow__(self, exponent: int) -> "Cyclotomic":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = ONE
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    # -- comparison ---------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        if self.order == other.order:
            return self.coeffs == other.coeffs
        if self.is_rational() and other.is_rational():
            return self.coeffs[0] == other.coeffs[0]
        left, right = self._pair(other)
        return left.coeffs == right.coeffs

    def __hash__(self) -> int:
        normal = self.normalize()
        return hash((normal.order, normal.coeffs))

    # -- presentation -------------------------------------------------

    def as_root(self) -> Optional[Tuple[int, int]]:
        """Return (t, k) with self == zeta_t^k and t the multiplicative order."""
        t = order_of(self)
        if t is None:
            return None
        for k in range(t):
            if math.gcd(k, t) == 1 and make_root(t, k) == self:
                return t, k
        return None

    def __repr__(self) -> str:
        return f"Cyclotomic({self.order}, {[format_rational(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        terms = []
        for power, coeff in enumerate(self.coeffs):
            if not coeff:
                continue
            text = format_rational(coeff)
            if power == 0:
                terms.append(text)
            elif coeff == 1:
                terms.append(f"z{self.order}^{power}")
            else:
                terms.append(f"{text}*z{self.order}^{power}")
        return " + ".join(terms) if terms else "0"


@lru_cache(maxsize=256)
def _rational(value: Fraction) -> Cyclotomic:
    return Cyclotomic(1, (value,))


@lru_cache(maxsize=None)
def _small_int(value: int) -> Cyclotomic:
    return Cyclotomic(1, (Fraction(value),))


def _express_in_subfield(value: Cyclotomic, sub_order: int) -> Optional[Cyclotomic]:
    """Write value (conductor N) in Q(zeta_sub_order) if it lies there."""
    from core.exactnum.linalg import solve_rational

    basis_columns = []
    for power in range(field_degree(sub_order)):
        embedded = make_root(sub_order, power).promote(value.order)
        basis_columns.append(list(embedded.coeffs))
    solution = solve_rational(basis_columns, list(value.coeffs))
    if solution is None:
        return None
    return Cyclotomic(sub_order, solution)


ZERO = Cyclotomic(1, (Fraction(0),))
ONE = Cyclotomic(1, (Fraction(1),))


@lru_cache(maxsize=4096)
def make_root(order: int, k: int) -> Cyclotomic:
    """zeta_order^k in canonical form; make_root(N, 0) is the unit."""
    if order < 1:
        raise ValueError(f"Root order must be positive, got {order}")
    k %= order
    if order <= 2:
        return Cyclotomic.from_int(1 if k == 0 else -1)
    poly = [Fraction(0)] * (k + 1)
    poly[k] = Fraction(1)
    return Cyclotomic(order, _reduce(poly, order))


def multiply(a: Number, b: Number) -> Cyclotomic:
    return Cyclotomic.coerce(a) * b


def add(a: Number, b: Number) -> Cyclotomic:
    return Cyclotomic.coerce(a) + b


def negate(a: Number) -> Cyclotomic:
    return -Cyclotomic.coerce(a)


def invert_scalar(a: Number) -> Cyclotomic:
    return Cyclotomic.coerce(a).inverse()


def order_of(a: Number) -> Optional[int]:
    """Multiplicative order of a root of unity, or None for anything else.

    Roots of unity in Q(zeta_N) have order dividing 2N, so only the
    divisors of 2N are tried.
    """
    value = Cyclotomic.coerce(a)
    if value.is_zero():
        return None
    for t in divisors(2 * value.order):
        if value**t == ONE:
            return int(t)
    return None


def common_order(values: Iterable[Cyclotomic]) -> int:
    order = 1
    for value in values:
        order = order * value.order // math.gcd(order, value.order)
    return order


def power(a: Number, exponent: int) -> Cyclotomic:
    return Cyclotomic.coerce(a) ** exponent


def parse_scalar(payload: Mapping[str, object]) -> Cyclotomic:
    """Decode {"N": order, "coeffs": ["p/q", ...]} (coeffs length phi(N))."""
    try:
        order = int(payload["N"])  # type: ignore[arg-type]
        raw = payload["coeffs"]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"Malformed scalar {payload!r}") from exc
    if order < 1:
        raise ValueError(f"Scalar order must be positive, got {order}")
    coeffs = [parse_rational(c) for c in raw]  # type: ignore[union-attr]
    if len(coeffs) != field_degree(order):
        raise ValueError(
            f"Scalar of order {order} needs {field_degree(order)} coefficients, got {len(coeffs)}"
        )
    return Cyclotomic(order, coeffs)


def format_scalar(value: Number) -> Dict[str, object]:
    normal = Cyclotomic.coerce(value).normalize()
    return {"N": normal.order, "coeffs": [format_rational(c) for c in normal.coeffs]}
