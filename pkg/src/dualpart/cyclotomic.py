"""Exact arithmetic with cyclotomic integers.

A value of root order E is stored as its canonical residue modulo the E-th
cyclotomic polynomial, with arbitrary-precision integer coefficients in the
power basis 1, z, ..., z^(phi(E)-1). Sums of roots of unity therefore compare
by plain tuple equality; no floating point enters any computation. Values are
immutable, and the polynomial cache fills on demand.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from functools import lru_cache

from .errors import InputError

CycPoly = tuple[int, ...]
"""Dense integer polynomial, coefficients ascending by degree."""


def _poly_mod(dividend: list[int], divisor: CycPoly) -> list[int]:
    # divisor must be monic; plain long division over the integers
    r = list(dividend)
    dlen = len(divisor)
    for i in range(len(r) - 1, dlen - 2, -1):
        c = r[i]
        if c:
            off = i - dlen + 1
            for j in range(dlen):
                r[off + j] -= c * divisor[j]
    return r[: dlen - 1]


def _poly_div_exact(num: CycPoly, den: CycPoly) -> CycPoly:
    # den must be monic and divide num exactly
    r = list(num)
    dlen = len(den)
    q = [0] * (len(num) - dlen + 1)
    for i in range(len(r) - 1, dlen - 2, -1):
        c = r[i]
        if c:
            off = i - dlen + 1
            q[off] = c
            for j in range(dlen):
                r[off + j] -= c * den[j]
    if any(r):
        raise ArithmeticError("polynomial division was not exact")
    return tuple(q)


@lru_cache(maxsize=None)
def cyclotomic_polynomial(order: int) -> CycPoly:
    """Monic cyclotomic polynomial of the given root order.

    Computed by dividing x^order - 1 by the cyclotomic polynomials of all
    proper divisors, entirely over the integers.

    >>> cyclotomic_polynomial(1)
    (-1, 1)
    >>> cyclotomic_polynomial(4)
    (1, 0, 1)
    >>> cyclotomic_polynomial(6)
    (1, -1, 1)
    """
    if order < 1:
        raise InputError("root order must be a positive integer")
    poly: CycPoly = tuple([-1] + [0] * (order - 1) + [1])
    for d in range(1, order):
        if order % d == 0:
            poly = _poly_div_exact(poly, cyclotomic_polynomial(d))
    return poly


@lru_cache(maxsize=None)
def euler_phi(order: int) -> int:
    """Euler totient, read off as the degree of the cyclotomic polynomial."""
    return len(cyclotomic_polynomial(order)) - 1


@dataclass(frozen=True)
class CycInt:
    """Canonical residue of an integer polynomial in a primitive root of unity.

    Construction reduces the coefficient vector modulo the cyclotomic
    polynomial of ``order`` and pads it to length phi(order), so equal values
    always have equal field tuples. Re-reducing a canonical value is a no-op.

    >>> CycInt(6, (0, 0, 0, 1))            # z^3 = -1 at order 6
    CycInt(order=6, coeffs=(-1, 0))
    >>> zeta_pow(6, 1) + zeta_pow(6, 5)    # z + z^5 = 1
    CycInt(order=6, coeffs=(1, 0))
    """

    order: int
    coeffs: CycPoly

    def __post_init__(self) -> None:
        if self.order < 1:
            raise InputError("root order must be a positive integer")
        phi = euler_phi(self.order)
        coeffs = self.coeffs
        if len(coeffs) > phi:
            coeffs = tuple(_poly_mod(list(coeffs), cyclotomic_polynomial(self.order)))
        if len(coeffs) < phi:
            coeffs = tuple(coeffs) + (0,) * (phi - len(coeffs))
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def _coerce(self, other: "CycInt | int") -> "CycInt":
        if isinstance(other, int):
            return CycInt(self.order, (other,))
        if not isinstance(other, CycInt):
            raise InputError(f"cannot combine CycInt with {type(other).__name__}")
        if other.order != self.order:
            raise InputError(
                f"mixed root orders {self.order} and {other.order}; "
                "lift with change_order first"
            )
        return other

    def __add__(self, other: "CycInt | int") -> "CycInt":
        o = self._coerce(other)
        return CycInt(self.order, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> "CycInt":
        return CycInt(self.order, tuple(-a for a in self.coeffs))

    def __sub__(self, other: "CycInt | int") -> "CycInt":
        return self + (-self._coerce(other))

    def __rsub__(self, other: "CycInt | int") -> "CycInt":
        return (-self) + other

    def __mul__(self, other: "CycInt | int") -> "CycInt":
        o = self._coerce(other)
        a, b = self.coeffs, o.coeffs
        conv = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        conv[i + j] += x * y
        return CycInt(self.order, tuple(conv))

    __rmul__ = __mul__

    def conjugate(self) -> "CycInt":
        """Complex conjugate, via the substitution z -> z^(order-1)."""
        e = self.order
        raw = [0] * e
        for i, c in enumerate(self.coeffs):
            if c:
                raw[(i * (e - 1)) % e] += c
        return CycInt(e, tuple(raw))

    def as_rational_integer(self) -> int | None:
        """The value as a plain integer, or None if it is irrational."""
        if any(self.coeffs[1:]):
            return None
        return self.coeffs[0]

    def change_order(self, new_order: int) -> "CycInt":
        """Re-express the value at a root order that the current one divides."""
        if new_order % self.order != 0:
            raise InputError(
                f"target order {new_order} is not a multiple of {self.order}"
            )
        step = new_order // self.order
        raw = [0] * ((len(self.coeffs) - 1) * step + 1)
        for i, c in enumerate(self.coeffs):
            raw[i * step] = c
        return CycInt(new_order, tuple(raw))

    def approx_complex(self) -> complex:
        """Floating approximation, for display only; never used in comparisons."""
        z = cmath.exp(2j * cmath.pi / self.order)
        return sum((c * z**i for i, c in enumerate(self.coeffs)), complex(0))

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)


def integer(order: int, value: int) -> CycInt:
    """The rational integer ``value`` viewed at the given root order."""
    return CycInt(order, (value,))


def zero(order: int) -> CycInt:
    return CycInt(order, (0,))


def one(order: int) -> CycInt:
    return CycInt(order, (1,))


def zeta_pow(order: int, k: int) -> CycInt:
    """The k-th power of the primitive root of unity of the given order.

    >>> zeta_pow(4, 2)
    CycInt(order=4, coeffs=(-1, 0))
    >>> zeta_pow(4, 1).conjugate() == zeta_pow(4, 3)
    True
    """
    k %= order
    return CycInt(order, (0,) * k + (1,))


@lru_cache(maxsize=None)
def zeta_coeff_table(order: int) -> tuple[CycPoly, ...]:
    """Canonical coefficient vectors of all powers of the primitive root.

    Because reduction modulo the cyclotomic polynomial is Z-linear, block sums
    of roots of unity can be accumulated componentwise on these vectors and
    stay canonical without any further reduction. The partition sweeps lean on
    this.
    """
    return tuple(zeta_pow(order, k).coeffs for k in range(order))
