"""Arithmetic in GF(p^n), built as Z_p[x] modulo a canonical irreducible.

Elements are fixed-length little-endian coefficient vectors (zero-padded to
n entries, unlike the trimmed PolyZp form), so equality, hashing, and
enumeration all work on constant-shape values. The integer encoding
sum(coeffs[i] * p**i) gives each field a deterministic element order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .gfpoly import PolyZp, find_canonical_irreducible, poly_invmod
from .modnum import is_prime

MAX_FIELD_SIZE = 1 << 20

__all__ = [
    "MAX_FIELD_SIZE",
    "FieldElement",
    "FieldMismatch",
    "FieldParams",
    "NotPrime",
    "SizeBudgetExceeded",
    "ZeroInverse",
    "make_field",
]


class NotPrime(ValueError):
    """The characteristic must be a prime number."""


class SizeBudgetExceeded(ValueError):
    """p**n is beyond the supported field size."""


class FieldMismatch(ValueError):
    """Two elements of different fields were combined."""


class ZeroInverse(ZeroDivisionError):
    """The zero element has no multiplicative inverse."""


@dataclass(frozen=True)
class FieldParams:
    """Immutable description of GF(p^n): p, n, q = p**n, and the modulus."""

    p: int
    n: int
    q: int
    modulus: PolyZp

    def element(self, value) -> "FieldElement":
        """Element from an integer encoding in [0, q) or a coefficient sequence."""
        if isinstance(value, int):
            if not 0 <= value < self.q:
                raise ValueError(f"encoding {value} out of range for {self}")
            digits = []
            for _ in range(self.n):
                value, r = divmod(value, self.p)
                digits.append(r)
            return FieldElement(tuple(digits), self)
        coeffs = tuple(int(c) % self.p for c in value)
        if len(coeffs) != self.n:
            raise ValueError(f"expected {self.n} coefficients, got {len(coeffs)}")
        return FieldElement(coeffs, self)

    @property
    def zero(self) -> "FieldElement":
        return FieldElement((0,) * self.n, self)

    @property
    def one(self) -> "FieldElement":
        return FieldElement((1,) + (0,) * (self.n - 1), self)

    def embed(self, z: int) -> "FieldElement":
        """Image of a signed integer under the canonical ring map Z -> GF(p^n)."""
        return FieldElement((z % self.p,) + (0,) * (self.n - 1), self)

    def elements(self) -> tuple["FieldElement", ...]:
        """All q elements in ascending encoding order."""
        return (self.zero,) + self.nonzero_elements()

    def nonzero_elements(self) -> tuple["FieldElement", ...]:
        """The q-1 nonzero elements in ascending encoding order."""
        return _nonzero_elements(self)

    def __str__(self) -> str:
        return f"GF({self.p}^{self.n})"


@lru_cache(maxsize=None)
def _nonzero_elements(field: FieldParams) -> tuple["FieldElement", ...]:
    return tuple(field.element(enc) for enc in range(1, field.q))


@lru_cache(maxsize=None)
def make_field(p: int, n: int = 1) -> FieldParams:
    """Construct GF(p^n) with the canonical minimal-encoding modulus."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if n < 1:
        raise ValueError(f"extension degree must be >= 1, got {n}")
    q = p**n
    if q > MAX_FIELD_SIZE:
        raise SizeBudgetExceeded(f"p**n = {q} exceeds the 2**20 size budget")
    return FieldParams(p, n, q, find_canonical_irreducible(p, n))


class FieldElement:
    """Element of GF(p^n) as a fixed-length coefficient vector."""

    __slots__ = ("coeffs", "field")

    def __init__(self, coeffs: tuple, field: FieldParams):
        if len(coeffs) != field.n or any(not 0 <= c < field.p for c in coeffs):
            raise ValueError(f"invalid coefficient vector {coeffs!r} for {field}")
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "field", field)

    @classmethod
    def _make(cls, coeffs: tuple, field: FieldParams) -> "FieldElement":
        # unvalidated fast path for canonical results of the arithmetic below
        self = object.__new__(cls)
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "field", field)
        return self

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    def _check(self, other: "FieldElement") -> None:
        if self.field is not other.field and self.field != other.field:
            raise FieldMismatch(f"elements of {self.field} and {other.field}")

    @property
    def encoding(self) -> int:
        enc = 0
        for c in reversed(self.coeffs):
            enc = enc * self.field.p + c
        return enc

    def __add__(self, other):
        if not isinstance(other, FieldElement):
            return NotImplemented
        self._check(other)
        p = self.field.p
        return FieldElement._make(
            tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)), self.field
        )

    def __sub__(self, other):
        if not isinstance(other, FieldElement):
            return NotImplemented
        self._check(other)
        p = self.field.p
        return FieldElement._make(
            tuple((a - b) % p for a, b in zip(self.coeffs, other.coeffs)), self.field
        )

    def __neg__(self):
        p = self.field.p
        return FieldElement._make(tuple(-c % p for c in self.coeffs), self.field)

    def __mul__(self, other):
        if not isinstance(other, FieldElement):
            return NotImplemented
        self._check(other)
        f = self.field
        p, n = f.p, f.n
        if n == 1:
            return FieldElement._make((self.coeffs[0] * other.coeffs[0] % p,), f)
        prod = [0] * (2 * n - 1)
        for i, ai in enumerate(self.coeffs):
            if ai:
                for j, bj in enumerate(other.coeffs):
                    prod[i + j] += ai * bj
        mod = f.modulus.coeffs
        for d in range(2 * n - 2, n - 1, -1):
            c = prod[d] % p
            if c:
                for j in range(n):
                    prod[d - n + j] -= c * mod[j]
        del prod[n:]
        for i in range(n):
            prod[i] %= p
        return FieldElement._make(tuple(prod), f)

    def __pow__(self, exponent: int):
        """Square-and-multiply; 0**0 is defined as 1."""
        if exponent < 0:
            raise ValueError("exponent must be nonnegative")
        result = self.field.one
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def inv(self) -> "FieldElement":
        """Multiplicative inverse via extended Euclid against the modulus."""
        if not self:
            raise ZeroInverse("0 has no multiplicative inverse")
        f = self.field
        if f.n == 1:
            return FieldElement._make((pow(self.coeffs[0], -1, f.p),), f)
        inverse = poly_invmod(PolyZp(self.coeffs, f.p), f.modulus)
        padded = inverse.coeffs + (0,) * (f.n - len(inverse.coeffs))
        return FieldElement(padded, f)

    def __eq__(self, other):
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.coeffs == other.coeffs and self.field == other.field

    def __hash__(self):
        return hash((self.coeffs, self.field.p, self.field.n))

    def __bool__(self):
        return any(self.coeffs)

    def __repr__(self):
        return f"<{self.field} element {list(self.coeffs)}>"
