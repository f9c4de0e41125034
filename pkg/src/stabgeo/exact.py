"""Exact scalar arithmetic over the eighth roots of unity.

Every amplitude, inner product and global phase produced by this library
lives in the ring generated by w = exp(i*pi/4) and 1/sqrt(2).  Two levels
of precision are provided:

* :class:`ExactScalar` -- values of the special form ``w^m * 2^(-k/2)``
  (or exact zero).  This covers all single amplitudes of stabilizer
  states and all inner products between them.

* :class:`CycQ8` -- general elements of the cyclotomic field Q(w), i.e.
  ``a + b*w + c*w^2 + d*w^3`` with rational coefficients.  Since
  ``sqrt(2) = w - w^3`` and ``i = w^2``, this field contains every sum
  of ExactScalars; it is what linear-combination bookkeeping (dense
  vectors, Gramians, superposition coefficients) uses.

No floating point enters any computation; floats appear only in the
rendering helpers.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class ExactScalar:
    """The exact value ``w^omega_exp * 2^(-half_exp/2)``, or exact zero.

    ``w = exp(i*pi/4)``, ``omega_exp`` is reduced mod 8 and ``half_exp``
    is a non-negative integer, so non-zero values have magnitude
    ``2^(-half_exp/2) <= 1``.  ``zero=True`` forces the canonical
    representation ``(0, 0)`` of the other fields.
    """

    zero: bool
    omega_exp: int
    half_exp: int

    def __post_init__(self):
        if self.zero:
            if self.omega_exp != 0 or self.half_exp != 0:
                raise ValueError("zero scalar must use canonical (0, 0) fields")
        else:
            if not 0 <= self.omega_exp < 8:
                raise ValueError(f"omega_exp {self.omega_exp} not reduced mod 8")
            if self.half_exp < 0:
                raise ValueError(f"half_exp must be non-negative, got {self.half_exp}")

    @classmethod
    def of(cls, omega_exp: int, half_exp: int = 0) -> "ExactScalar":
        return cls(False, omega_exp % 8, half_exp)

    @classmethod
    def one(cls) -> "ExactScalar":
        return cls(False, 0, 0)

    @classmethod
    def zero_value(cls) -> "ExactScalar":
        return cls(True, 0, 0)

    @classmethod
    def from_i_power(cls, k: int, half_exp: int = 0) -> "ExactScalar":
        """The value ``i^k * 2^(-half_exp/2)`` (i = w^2)."""
        return cls.of(2 * (k % 4), half_exp)

    @property
    def is_one(self) -> bool:
        return not self.zero and self.omega_exp == 0 and self.half_exp == 0

    @property
    def is_real(self) -> bool:
        return self.zero or self.omega_exp % 4 == 0

    @property
    def is_imaginary(self) -> bool:
        return not self.zero and self.omega_exp % 4 == 2

    def __mul__(self, other: "ExactScalar") -> "ExactScalar":
        if self.zero or other.zero:
            return ExactScalar.zero_value()
        return ExactScalar.of(self.omega_exp + other.omega_exp,
                              self.half_exp + other.half_exp)

    def conjugate(self) -> "ExactScalar":
        if self.zero:
            return self
        return ExactScalar.of(-self.omega_exp, self.half_exp)

    def to_cyc(self) -> "CycQ8":
        if self.zero:
            return CycQ8.zero()
        v = CycQ8.omega_power(self.omega_exp)
        return v.mul_half_power(self.half_exp)

    def to_complex(self) -> complex:
        if self.zero:
            return 0j
        return OMEGA_COMPLEX ** self.omega_exp * 2.0 ** (-self.half_exp / 2)

    def __str__(self) -> str:
        if self.zero:
            return "0"
        parts = []
        if self.omega_exp:
            parts.append(f"w^{self.omega_exp}")
        if self.half_exp:
            parts.append(f"2^-{self.half_exp}/2")
        return " * ".join(parts) if parts else "1"


OMEGA_COMPLEX = complex(2 ** -0.5, 2 ** -0.5)

_SCALAR_RE = re.compile(
    r"^\s*(?P<sign>-)?\s*(?:(?P<one>1)|(?P<i>i)|w\^(?P<m>\d+))?"
    r"\s*\*?\s*(?:2\^-(?P<k>\d+)/2)?\s*$"
)


def parse_scalar(text: str) -> ExactScalar:
    """Parse the ``w^m * 2^-k/2`` grammar (with ``0``/``1``/``i`` sugar)."""
    if text.strip() == "0":
        return ExactScalar.zero_value()
    m = _SCALAR_RE.match(text)
    if m is None or (m.group("one") is None and m.group("i") is None
                     and m.group("m") is None and m.group("k") is None):
        raise ValueError(f"cannot parse exact scalar {text!r}")
    omega = 0
    if m.group("i"):
        omega = 2
    elif m.group("m") is not None:
        omega = int(m.group("m"))
    if m.group("sign"):
        omega += 4
    half = int(m.group("k")) if m.group("k") is not None else 0
    return ExactScalar.of(omega, half)


class CycQ8:
    """An element ``a + b*w + c*w^2 + d*w^3`` of Q(w), w = exp(i*pi/4).

    Reduction rule: ``w^4 = -1``.  Useful constants: ``i = w^2`` and
    ``sqrt(2) = w - w^3``.
    """

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a=0, b=0, c=0, d=0):
        self.a = Fraction(a)
        self.b = Fraction(b)
        self.c = Fraction(c)
        self.d = Fraction(d)

    @classmethod
    def zero(cls) -> "CycQ8":
        return cls()

    @classmethod
    def one(cls) -> "CycQ8":
        return cls(1)

    @classmethod
    def i(cls) -> "CycQ8":
        return cls(0, 0, 1, 0)

    @classmethod
    def sqrt2(cls) -> "CycQ8":
        return cls(0, 1, 0, -1)

    @classmethod
    def omega_power(cls, m: int) -> "CycQ8":
        m %= 8
        sign = 1 if m < 4 else -1
        coeffs = [0, 0, 0, 0]
        coeffs[m % 4] = sign
        return cls(*coeffs)

    @classmethod
    def from_gauss(cls, re: Fraction, im: Fraction) -> "CycQ8":
        return cls(re, 0, im, 0)

    def coeffs(self):
        return (self.a, self.b, self.c, self.d)

    def is_zero(self) -> bool:
        return not (self.a or self.b or self.c or self.d)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = CycQ8(other)
        if not isinstance(other, CycQ8):
            return NotImplemented
        return self.coeffs() == other.coeffs()

    def __hash__(self):
        return hash(self.coeffs())

    def __add__(self, other: "CycQ8") -> "CycQ8":
        return CycQ8(self.a + other.a, self.b + other.b,
                     self.c + other.c, self.d + other.d)

    def __sub__(self, other: "CycQ8") -> "CycQ8":
        return CycQ8(self.a - other.a, self.b - other.b,
                     self.c - other.c, self.d - other.d)

    def __neg__(self) -> "CycQ8":
        return CycQ8(-self.a, -self.b, -self.c, -self.d)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycQ8(self.a * other, self.b * other,
                         self.c * other, self.d * other)
        # convolution in w with w^4 = -1
        s, o = self.coeffs(), other.coeffs()
        out = [Fraction(0)] * 4
        for p in range(4):
            if not s[p]:
                continue
            for q in range(4):
                if not o[q]:
                    continue
                r = p + q
                if r < 4:
                    out[r] += s[p] * o[q]
                else:
                    out[r - 4] -= s[p] * o[q]
        return CycQ8(*out)

    __rmul__ = __mul__

    def conjugate(self) -> "CycQ8":
        # complex conjugation maps w -> w^7 = -w^3
        return CycQ8(self.a, -self.d, -self.c, -self.b)

    def galois(self, m: int) -> "CycQ8":
        """The field automorphism w -> w^m for odd m."""
        if m % 2 == 0:
            raise ValueError("Galois exponent must be odd")
        out = CycQ8()
        for p, coeff in enumerate(self.coeffs()):
            if coeff:
                out = out + CycQ8.omega_power(p * m) * coeff
        return out

    def inverse(self) -> "CycQ8":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(w)")
        cofactor = self.galois(3) * self.galois(5) * self.galois(7)
        norm = self * cofactor
        # the field norm is rational
        assert norm.b == 0 and norm.c == 0 and norm.d == 0
        return cofactor * (1 / norm.a)

    def mul_half_power(self, k: int) -> "CycQ8":
        """Multiply by ``2^(-k/2)`` (k may be negative)."""
        out = self
        if k % 2:
            out = out * CycQ8.sqrt2()
            k += 1
        return out * Fraction(1, 2) ** (k // 2)

    def abs2(self) -> "QuadReal":
        """Exact squared magnitude, an element of Q(sqrt(2))."""
        v = self * self.conjugate()
        # real elements of Q(w) have the form a + b*(w - w^3)
        assert v.c == 0 and v.b == -v.d
        return QuadReal(v.a, v.b)

    def real_part(self) -> "QuadReal":
        v = (self + self.conjugate()) * Fraction(1, 2)
        assert v.c == 0 and v.b == -v.d
        return QuadReal(v.a, v.b)

    def to_complex(self) -> complex:
        return complex(
            float(self.a) + (float(self.b) - float(self.d)) / 2 ** 0.5,
            float(self.c) + (float(self.b) + float(self.d)) / 2 ** 0.5,
        )

    def __repr__(self):
        return f"CycQ8({self.a}, {self.b}, {self.c}, {self.d})"


class QuadReal:
    """An element ``a + b*sqrt(2)`` of the real quadratic field Q(sqrt(2))."""

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        self.a = Fraction(a)
        self.b = Fraction(b)

    def is_zero(self) -> bool:
        return not (self.a or self.b)

    def sign(self) -> int:
        a, b = self.a, self.b
        if a == 0 and b == 0:
            return 0
        if a >= 0 and b >= 0:
            return 1
        if a <= 0 and b <= 0:
            return -1
        # mixed signs: compare a^2 with 2 b^2
        if a > 0:
            return 1 if a * a > 2 * b * b else -1
        return 1 if a * a < 2 * b * b else -1

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = QuadReal(other)
        if not isinstance(other, QuadReal):
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __hash__(self):
        return hash((self.a, self.b))

    def __sub__(self, other: "QuadReal") -> "QuadReal":
        return QuadReal(self.a - other.a, self.b - other.b)

    def __lt__(self, other: "QuadReal") -> bool:
        return (self - other).sign() < 0

    def __le__(self, other: "QuadReal") -> bool:
        return (self - other).sign() <= 0

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * 2 ** 0.5

    def __repr__(self):
        return f"QuadReal({self.a}, {self.b})"


@dataclass(frozen=True)
class SqrtFraction:
    """The exact non-negative radical ``sqrt(radicand)`` of a rational."""

    radicand: Fraction

    def __post_init__(self):
        if self.radicand < 0:
            raise ValueError("radicand must be non-negative")

    def __eq__(self, other) -> bool:
        if isinstance(other, SqrtFraction):
            return self.radicand == other.radicand
        if isinstance(other, (int, Fraction)):
            return other >= 0 and self.radicand == Fraction(other) ** 2
        return NotImplemented

    def __hash__(self):
        return hash(("sqrt", self.radicand))

    def __float__(self) -> float:
        return float(self.radicand) ** 0.5

    def __str__(self) -> str:
        if self.radicand.denominator == 1:
            root = _isqrt_exact(self.radicand.numerator)
            if root is not None:
                return str(root)
        return f"sqrt({self.radicand})"


def _isqrt_exact(n: int):
    r = int(n ** 0.5)
    for cand in (r - 1, r, r + 1):
        if cand >= 0 and cand * cand == n:
            return cand
    return None
