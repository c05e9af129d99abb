"""Exact modular integer arithmetic, primality, and factorial machinery.

Moduli are capped at 2**30 so every intermediate product, including work
modulo p**2, stays well inside a 64-bit double word. Python integers would
not overflow either way, but the cap is part of the contract and keeps the
library honest about its intended desk scale.
"""

from __future__ import annotations

from dataclasses import dataclass

MAX_MODULUS = 1 << 30

__all__ = [
    "MAX_MODULUS",
    "Modulus",
    "ModulusMismatch",
    "NotInvertible",
    "Residue",
    "factorial_mod",
    "is_prime",
    "mod_add",
    "mod_inv",
    "mod_mul",
    "mod_pow",
    "prime_powers_up_to",
    "primes_up_to",
]


class ModulusMismatch(ValueError):
    """Two residues from different moduli were combined."""


class NotInvertible(ValueError):
    """The residue shares a factor with its modulus."""


@dataclass(frozen=True)
class Modulus:
    """A validated modulus m with 2 <= m <= 2**30."""

    m: int

    def __post_init__(self) -> None:
        if not 2 <= self.m <= MAX_MODULUS:
            raise ValueError(f"modulus must be in [2, 2**30], got {self.m}")

    def residue(self, value: int) -> "Residue":
        """Canonical residue of an arbitrary (possibly negative) integer."""
        return Residue(value % self.m, self)

    def __str__(self) -> str:
        return str(self.m)


@dataclass(frozen=True)
class Residue:
    """An integer in [0, m) tagged with its modulus."""

    value: int
    modulus: Modulus

    def __post_init__(self) -> None:
        if not 0 <= self.value < self.modulus.m:
            raise ValueError(
                f"residue {self.value} out of range for modulus {self.modulus.m}"
            )

    def __add__(self, other):
        if not isinstance(other, Residue):
            return NotImplemented
        return mod_add(self, other)

    def __mul__(self, other):
        if not isinstance(other, Residue):
            return NotImplemented
        return mod_mul(self, other)

    def __pow__(self, exponent: int):
        return mod_pow(self, exponent)

    def inv(self) -> "Residue":
        return mod_inv(self)

    def __int__(self) -> int:
        return self.value

    def __str__(self) -> str:
        return f"{self.value} (mod {self.modulus.m})"


def _require_same_modulus(a: Residue, b: Residue) -> int:
    if a.modulus.m != b.modulus.m:
        raise ModulusMismatch(f"moduli differ: {a.modulus.m} vs {b.modulus.m}")
    return a.modulus.m


def mod_add(a: Residue, b: Residue) -> Residue:
    """Canonical residue of a + b; both operands must share one modulus."""
    m = _require_same_modulus(a, b)
    return Residue((a.value + b.value) % m, a.modulus)


def mod_mul(a: Residue, b: Residue) -> Residue:
    """Canonical residue of a * b; both operands must share one modulus."""
    m = _require_same_modulus(a, b)
    return Residue((a.value * b.value) % m, a.modulus)


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    # returns (g, x, y) with a*x + b*y == g == gcd(a, b)
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def mod_inv(a: Residue) -> Residue:
    """Multiplicative inverse by extended Euclid (works for composite moduli)."""
    m = a.modulus.m
    g, x, _ = _xgcd(a.value, m)
    if g != 1:
        raise NotInvertible(f"gcd({a.value}, {m}) = {g} != 1")
    return Residue(x % m, a.modulus)


def mod_pow(a: Residue, exponent: int) -> Residue:
    """a**exponent by square-and-multiply; exponent 0 yields 1."""
    if exponent < 0:
        raise ValueError("exponent must be nonnegative")
    return Residue(pow(a.value, exponent, a.modulus.m), a.modulus)


# Strong-probable-prime bases that are jointly deterministic for all
# n < 3.3 * 10**24, far beyond the 2**30 contract range.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic primality test for the supported range (n <= 2**30)."""
    if n < 2:
        return False
    for b in _MR_BASES:
        if n == b:
            return True
        if n % b == 0:
            return False
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for b in _MR_BASES:
        x = pow(b, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_up_to(limit: int) -> list[int]:
    """Ascending list of primes <= limit (Eratosthenes sieve)."""
    if limit < 2:
        return []
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, int(limit**0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, limit + 1, i)))
    return [i for i in range(2, limit + 1) if sieve[i]]


def prime_powers_up_to(limit: int) -> list[tuple[int, int, int]]:
    """All (q, p, n) with q = p**n <= limit, p prime, n >= 1, ascending in q."""
    out = []
    for p in primes_up_to(limit):
        q, n = p, 1
        while q <= limit:
            out.append((q, p, n))
            q *= p
            n += 1
    out.sort()
    return out


def factorial_mod(n: int, m: Modulus) -> Residue:
    """n! reduced modulo m by a running product; 0! is the empty product 1."""
    if n < 0:
        raise ValueError("factorial of a negative integer")
    acc = 1
    mm = m.m
    for i in range(2, n + 1):
        acc = acc * i % mm
    return Residue(acc % mm, m)
