"""Exact arithmetic in Z[zeta_8, 1/sqrt(2)].

A value is stored as an integer quadruple (c0, c1, c2, c3) over the basis
{1, z, z^2, z^3} with z = exp(i*pi/4), divided by sqrt(2)**k.  Every amplitude
and gate entry generated by H, P, Z and CNOT lives in this ring, so equality
is a tuple comparison once values are canonical.
"""

from __future__ import annotations

import math
from fractions import Fraction

_INV_SQRT2 = 1.0 / math.sqrt(2.0)


def _times_sqrt2(c: tuple[int, int, int, int]) -> tuple[int, int, int, int]:
    # sqrt(2) = z - z^3, with z^4 = -1
    c0, c1, c2, c3 = c
    return (c1 - c3, c0 + c2, c1 + c3, c2 - c0)


def _divisible_by_sqrt2(c: tuple[int, int, int, int]) -> bool:
    c0, c1, c2, c3 = c
    return (c1 - c3) % 2 == 0 and (c0 + c2) % 2 == 0


def _div_sqrt2(c: tuple[int, int, int, int]) -> tuple[int, int, int, int]:
    # x / sqrt(2) = x * sqrt(2) / 2; caller checks divisibility
    c0, c1, c2, c3 = c
    return ((c1 - c3) // 2, (c0 + c2) // 2, (c1 + c3) // 2, (c2 - c0) // 2)


def _scale_up(c: tuple[int, int, int, int], d: int) -> tuple[int, int, int, int]:
    """Multiply a numerator by sqrt(2)**d."""
    if d >= 2:
        f = 1 << (d // 2)
        c = (c[0] * f, c[1] * f, c[2] * f, c[3] * f)
    if d % 2:
        c = _times_sqrt2(c)
    return c


def _int_plus_int_sqrt2(v: int, u: int) -> float:
    """v + u*sqrt(2) in floating point without catastrophic cancellation."""
    if u == 0 or v == 0 or (u > 0) == (v > 0):
        return v + u * math.sqrt(2.0)
    # opposite signs: v + u*sqrt2 = (v^2 - 2u^2) / (v - u*sqrt2), exact integer numerator
    return (v * v - 2 * u * u) / (v - u * math.sqrt(2.0))


def canonicalize(c: tuple[int, int, int, int], k: int) -> tuple[tuple[int, int, int, int], int]:
    """Return the (numerator, k) pair with k minimal."""
    if k < 0:
        c = _scale_up(c, -k)
        k = 0
    if c == (0, 0, 0, 0):
        return c, 0
    while k > 0 and _divisible_by_sqrt2(c):
        c = _div_sqrt2(c)
        k -= 1
    return c, k


class CycAmp:
    """An element (c0 + c1 z + c2 z^2 + c3 z^3) / sqrt(2)**k, always canonical."""

    __slots__ = ("c", "k", "_hash")

    def __init__(self, c0: int = 0, c1: int = 0, c2: int = 0, c3: int = 0, k: int = 0) -> None:
        c, k = canonicalize((int(c0), int(c1), int(c2), int(c3)), int(k))
        self.c = c
        self.k = k
        self._hash = hash((c, k))

    @classmethod
    def _raw(cls, c: tuple[int, int, int, int], k: int) -> CycAmp:
        c, k = canonicalize(c, k)
        obj = object.__new__(cls)
        obj.c = c
        obj.k = k
        obj._hash = hash((c, k))
        return obj

    @classmethod
    def zeta_power(cls, a: int, k: int = 0) -> CycAmp:
        """z**a / sqrt(2)**k."""
        a %= 8
        c = [0, 0, 0, 0]
        c[a % 4] = 1 if a < 4 else -1
        return cls._raw(tuple(c), k)  # type: ignore[arg-type]

    @classmethod
    def from_int(cls, n: int) -> CycAmp:
        return cls._raw((n, 0, 0, 0), 0)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: CycAmp) -> CycAmp:
        if not isinstance(other, CycAmp):
            if isinstance(other, int):
                other = CycAmp.from_int(other)
            else:
                return NotImplemented
        if other.c == (0, 0, 0, 0):
            return self
        if self.c == (0, 0, 0, 0):
            return other
        a, b = self.c, other.c
        k = self.k
        if self.k < other.k:
            a = _scale_up(a, other.k - self.k)
            k = other.k
        elif other.k < self.k:
            b = _scale_up(b, self.k - other.k)
        return CycAmp._raw((a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]), k)

    __radd__ = __add__

    def __neg__(self) -> CycAmp:
        c = self.c
        return CycAmp._raw((-c[0], -c[1], -c[2], -c[3]), self.k)

    def __sub__(self, other: CycAmp) -> CycAmp:
        if isinstance(other, int):
            other = CycAmp.from_int(other)
        return self + (-other)

    def __rsub__(self, other: int) -> CycAmp:
        return CycAmp.from_int(other) - self

    def __mul__(self, other: CycAmp) -> CycAmp:
        if not isinstance(other, CycAmp):
            if isinstance(other, int):
                other = CycAmp.from_int(other)
            else:
                return NotImplemented
        if other is ONE:
            return self
        if self is ONE:
            return other
        a0, a1, a2, a3 = self.c
        b0, b1, b2, b3 = other.c
        return CycAmp._raw(
            (
                a0 * b0 - a1 * b3 - a2 * b2 - a3 * b1,
                a0 * b1 + a1 * b0 - a2 * b3 - a3 * b2,
                a0 * b2 + a1 * b1 + a2 * b0 - a3 * b3,
                a0 * b3 + a1 * b2 + a2 * b1 + a3 * b0,
            ),
            self.k + other.k,
        )

    __rmul__ = __mul__

    def conj(self) -> CycAmp:
        # z -> z^-1 = -z^3, z^2 -> -z^2, z^3 -> -z
        c0, c1, c2, c3 = self.c
        return CycAmp._raw((c0, -c3, -c2, -c1), self.k)

    def abs2(self) -> CycAmp:
        return self * self.conj()

    # -- predicates and conversions -----------------------------------------

    def is_zero(self) -> bool:
        return self.c == (0, 0, 0, 0)

    def is_real(self) -> bool:
        _, c1, c2, c3 = self.c
        return c2 == 0 and c1 + c3 == 0

    def to_fraction(self) -> Fraction:
        """Exact rational value; ValueError if the value is not rational."""
        c0, c1, c2, c3 = self.c
        if c1 or c2 or c3 or self.k % 2:
            raise ValueError(f"{self.encode()} is not rational")
        return Fraction(c0, 1 << (self.k // 2))

    def as_monomial(self) -> tuple[int, int] | None:
        """(a, k) with self == z**a / sqrt(2)**k, or None if no such form exists."""
        nz = [(i, v) for i, v in enumerate(self.c) if v]
        if len(nz) != 1 or abs(nz[0][1]) != 1:
            return None
        i, v = nz[0]
        return (i if v == 1 else i + 4), self.k

    def __complex__(self) -> complex:
        c0, c1, c2, c3 = self.c
        # value = (u*sqrt2 + v) / sqrt(2)**(k+1) per component
        re = _int_plus_int_sqrt2(c1 - c3, c0)
        im = _int_plus_int_sqrt2(c1 + c3, c2)
        e = self.k + 1
        scale = math.ldexp(1.0, -(e // 2))
        if e % 2:
            scale *= _INV_SQRT2
        return complex(re * scale, im * scale)

    def to_complex(self) -> complex:
        return complex(self)

    def encode(self) -> str:
        c0, c1, c2, c3 = self.c
        return f"(({c0},{c1},{c2},{c3}),{self.k})"

    @classmethod
    def decode(cls, text: str) -> CycAmp:
        nums = [int(t) for t in text.replace("(", " ").replace(")", " ").replace(",", " ").split()]
        if len(nums) != 5:
            raise ValueError(f"bad CycAmp encoding: {text!r}")
        return cls(*nums)

    # -- dunder plumbing ----------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = CycAmp.from_int(other)
        if not isinstance(other, CycAmp):
            return NotImplemented
        return self.k == other.k and self.c == other.c

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"CycAmp{self.c + (self.k,)}"

    def __str__(self) -> str:
        z = complex(self)
        return f"{z.real:.6g}{z.imag:+.6g}i"


ZERO = CycAmp()
ONE = CycAmp(1)
I = CycAmp(0, 0, 1)  # z^2
ZETA = CycAmp(0, 1)
SQRT2 = CycAmp(0, 1, 0, -1)
INV_SQRT2 = CycAmp(1, k=1)
HALF = CycAmp(1, k=2)
