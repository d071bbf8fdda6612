"""Bicomplex and hyperbolic scalars.

A bicomplex number is ``Z = z1 + z2*j`` with ``z1, z2`` ordinary complex numbers
(built on the imaginary unit ``i``) and a second, commuting imaginary unit ``j``.
The product ``k = i*j`` squares to ``+1``.  The two idempotents

    e1 = (1 + k) / 2,    e2 = (1 - k) / 2

split every bicomplex number as ``Z = beta1*e1 + beta2*e2`` with
``beta1 = z1 - i*z2`` and ``beta2 = z1 + i*z2``.  The map ``Z -> (beta1, beta2)``
is a ring isomorphism onto ``C x C``, which is what every routine in the package
leans on.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import NamedTuple, Union

from .errors import ZeroDivisorError, ZeroInputError

#: A bicomplex beta component counts as zero below this multiple of ``max(1, |Z|)``.
TAU_ZERO = 1e-12

Number = Union[int, float, complex]


def _as_complex(value) -> complex:
    z = complex(value)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ValueError(f"non-finite component {value!r}")
    return z


class IdempotentPair(NamedTuple):
    """Coordinates of ``Z = beta1*e1 + beta2*e2``."""

    beta1: complex
    beta2: complex


@dataclass(frozen=True)
class BiComplex:
    """Immutable bicomplex number ``z1 + z2*j``."""

    z1: complex = 0j
    z2: complex = 0j

    def __post_init__(self):
        object.__setattr__(self, "z1", _as_complex(self.z1))
        object.__setattr__(self, "z2", _as_complex(self.z2))

    # construction

    @classmethod
    def coerce(cls, value) -> "BiComplex":
        if isinstance(value, BiComplex):
            return value
        if isinstance(value, Hyperbolic):
            return value.to_bicomplex()
        return cls(value, 0)

    @classmethod
    def from_idempotent(cls, beta1: Number, beta2: Number) -> "BiComplex":
        beta1, beta2 = complex(beta1), complex(beta2)
        return cls((beta1 + beta2) / 2, 1j * (beta1 - beta2) / 2)

    # arithmetic

    def __add__(self, other):
        try:
            other = BiComplex.coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return BiComplex(self.z1 + other.z1, self.z2 + other.z2)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            other = BiComplex.coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return BiComplex(self.z1 - other.z1, self.z2 - other.z2)

    def __rsub__(self, other):
        try:
            other = BiComplex.coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return other - self

    def __neg__(self):
        return BiComplex(-self.z1, -self.z2)

    def __pos__(self):
        return self

    def __mul__(self, other):
        try:
            other = BiComplex.coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        # j*j = -1
        a1, a2, b1, b2 = self.z1, self.z2, other.z1, other.z2
        return BiComplex(a1 * b1 - a2 * b2, a1 * b2 + a2 * b1)

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            other = BiComplex.coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self * invert(other)

    def __rtruediv__(self, other):
        try:
            other = BiComplex.coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return other * invert(self)

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return invert(self) ** (-n)
        b1, b2 = self.idempotent()
        return BiComplex.from_idempotent(b1**n, b2**n)

    def __abs__(self) -> float:
        return euclid_norm(self)

    def __bool__(self):
        return self.z1 != 0 or self.z2 != 0

    # conjugations

    def bar(self) -> "BiComplex":
        return BiComplex(self.z1.conjugate(), self.z2.conjugate())

    def dagger(self) -> "BiComplex":
        return BiComplex(self.z1, -self.z2)

    def star(self) -> "BiComplex":
        return BiComplex(self.z1.conjugate(), -self.z2.conjugate())

    def idempotent(self) -> IdempotentPair:
        return to_idempotent(self)

    def isclose(self, other, rel_tol: float = 1e-12, abs_tol: float = 0.0) -> bool:
        other = BiComplex.coerce(other)
        diff = euclid_norm(self - other)
        return diff <= max(rel_tol * max(euclid_norm(self), euclid_norm(other)), abs_tol)

    def __str__(self):
        return f"{_fmt_complex(self.z1)} + ({_fmt_complex(self.z2)})j"

    def idempotent_str(self) -> str:
        b1, b2 = self.idempotent()
        return f"({_fmt_complex(b1)})·e1 + ({_fmt_complex(b2)})·e2"


def _fmt_complex(z: complex) -> str:
    return f"{z.real:.12g}{z.imag:+.12g}i"


ONE = BiComplex(1, 0)
ZERO = BiComplex(0, 0)
I = BiComplex(1j, 0)
J = BiComplex(0, 1)
K = BiComplex(0, 1j)
E1 = BiComplex(0.5, 0.5j)
E2 = BiComplex(0.5, -0.5j)


class Conjugation(str, enum.Enum):
    BAR = "bar"
    DAGGER = "dagger"
    STAR = "star"


def conjugate(z: BiComplex, kind: Union[Conjugation, str] = Conjugation.STAR) -> BiComplex:
    """Apply one of the three bicomplex conjugations.

    ``bar`` conjugates both complex coordinates, ``dagger`` flips the sign of
    the j-part, and ``star`` does both.
    """
    kind = Conjugation(kind)
    if kind is Conjugation.BAR:
        return z.bar()
    if kind is Conjugation.DAGGER:
        return z.dagger()
    return z.star()


def to_idempotent(z: BiComplex) -> IdempotentPair:
    return IdempotentPair(z.z1 - 1j * z.z2, z.z1 + 1j * z.z2)


def from_idempotent(pair) -> BiComplex:
    beta1, beta2 = pair
    return BiComplex.from_idempotent(beta1, beta2)


def euclid_norm(z: BiComplex) -> float:
    return math.hypot(abs(z.z1), abs(z.z2))


@dataclass(frozen=True)
class Hyperbolic:
    """Immutable hyperbolic (split-complex) number ``h1 + k*h2``.

    In the idempotent basis the same number is ``a1*e1 + a2*e2`` with
    ``a1 = h1 + h2`` and ``a2 = h1 - h2``.
    """

    h1: float = 0.0
    h2: float = 0.0

    def __post_init__(self):
        for name in ("h1", "h2"):
            value = float(getattr(self, name))
            if not math.isfinite(value):
                raise ValueError(f"non-finite component {name}={value!r}")
            object.__setattr__(self, name, value)

    @classmethod
    def from_idempotent(cls, a1: float, a2: float) -> "Hyperbolic":
        return cls((a1 + a2) / 2, (a1 - a2) / 2)

    @classmethod
    def coerce(cls, value) -> "Hyperbolic":
        if isinstance(value, Hyperbolic):
            return value
        return cls(float(value), 0.0)

    @property
    def a1(self) -> float:
        return self.h1 + self.h2

    @property
    def a2(self) -> float:
        return self.h1 - self.h2

    def idempotent(self):
        return self.a1, self.a2

    def to_bicomplex(self) -> BiComplex:
        return BiComplex(self.h1, 1j * self.h2)

    def __add__(self, other):
        try:
            other = Hyperbolic.coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return Hyperbolic(self.h1 + other.h1, self.h2 + other.h2)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            other = Hyperbolic.coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return Hyperbolic(self.h1 - other.h1, self.h2 - other.h2)

    def __rsub__(self, other):
        return Hyperbolic.coerce(other) - self

    def __neg__(self):
        return Hyperbolic(-self.h1, -self.h2)

    def __mul__(self, other):
        try:
            other = Hyperbolic.coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        # k*k = +1
        return Hyperbolic(
            self.h1 * other.h1 + self.h2 * other.h2,
            self.h1 * other.h2 + self.h2 * other.h1,
        )

    __rmul__ = __mul__

    def in_d_plus(self, tol: float = 0.0) -> bool:
        return self.a1 >= -tol and self.a2 >= -tol

    def __str__(self):
        return f"{self.h1:.12g} {self.h2:+.12g}k"


def hyper_norm(z: BiComplex) -> Hyperbolic:
    """D+-valued norm ``|beta1|*e1 + |beta2|*e2``."""
    b1, b2 = to_idempotent(z)
    return Hyperbolic.from_idempotent(abs(b1), abs(b2))


def _is_negligible(beta: complex, z: BiComplex, tau: float) -> bool:
    return abs(beta) <= tau * max(1.0, euclid_norm(z))


def is_zero_divisor(z: BiComplex, tau: float = TAU_ZERO) -> bool:
    """True for nonzero ``z`` lying in the ideal generated by e1 or e2."""
    b1, b2 = to_idempotent(z)
    return _is_negligible(b1, z, tau) != _is_negligible(b2, z, tau)


def invert(z: BiComplex, tau: float = TAU_ZERO) -> BiComplex:
    b1, b2 = to_idempotent(z)
    zero1, zero2 = _is_negligible(b1, z, tau), _is_negligible(b2, z, tau)
    if zero1 and zero2:
        raise ZeroInputError("cannot invert zero")
    if zero1 or zero2:
        raise ZeroDivisorError(f"{z} is a zero divisor (beta components {b1}, {b2})")
    return BiComplex.from_idempotent(1 / b1, 1 / b2)


class Order(str, enum.Enum):
    LESS_OR_EQUAL = "less_or_equal"
    GREATER_OR_EQUAL = "greater_or_equal"
    EQUAL = "equal"
    INCOMPARABLE = "incomparable"


def d_plus_compare(a, b, tol: float = 0.0) -> Order:
    """Compare two hyperbolic numbers in the partial order ``a <= b iff b - a in D+``."""
    diff = Hyperbolic.coerce(b) - Hyperbolic.coerce(a)
    c1, c2 = diff.a1, diff.a2
    if abs(c1) <= tol and abs(c2) <= tol:
        return Order.EQUAL
    if c1 >= -tol and c2 >= -tol:
        return Order.LESS_OR_EQUAL
    if c1 <= tol and c2 <= tol:
        return Order.GREATER_OR_EQUAL
    return Order.INCOMPARABLE

