"""Dense polynomials over Z_p: arithmetic, irreducibility, canonical search.

Coefficients are little-endian, coeffs[i] multiplying x**i, always reduced
into [0, p) and carrying no trailing zeros; the zero polynomial is the
empty tuple. Equality and hashing are therefore structural. The degree-n
monic with the smallest base-p encoding of its low n coefficients serves
as the canonical irreducible for field construction.
"""

from __future__ import annotations

from .modnum import ModulusMismatch

__all__ = [
    "BothZero",
    "BudgetExceeded",
    "DivisionByZeroPoly",
    "NotMonic",
    "PolyZp",
    "find_canonical_irreducible",
    "is_irreducible",
    "is_irreducible_trial",
    "monic_polys",
    "poly_gcd",
    "poly_invmod",
    "poly_powmod",
]

TRIAL_MAX_DEGREE = 6
TRIAL_MAX_P = 7


class DivisionByZeroPoly(ZeroDivisionError):
    """Division or reduction by the zero polynomial."""


class BothZero(ValueError):
    """gcd of two zero polynomials is undefined."""


class NotMonic(ValueError):
    """A monic polynomial of degree >= 1 was required."""


class BudgetExceeded(ValueError):
    """The requested brute-force enumeration is beyond the allowed budget."""


class PolyZp:
    """Polynomial over Z_p in canonical trimmed little-endian form."""

    __slots__ = ("coeffs", "p")

    def __init__(self, coeffs, p: int):
        if p < 2:
            raise ValueError(f"p must be >= 2, got {p}")
        c = [int(v) % p for v in coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))
        object.__setattr__(self, "p", p)

    def __setattr__(self, name, value):
        raise AttributeError("PolyZp is immutable")

    @classmethod
    def zero(cls, p: int) -> "PolyZp":
        return cls((), p)

    @classmethod
    def one(cls, p: int) -> "PolyZp":
        return cls((1,), p)

    @classmethod
    def x(cls, p: int) -> "PolyZp":
        return cls((0, 1), p)

    @classmethod
    def from_encoding(cls, value: int, p: int) -> "PolyZp":
        """Polynomial whose coefficients are the base-p digits of value."""
        if value < 0:
            raise ValueError("encoding must be nonnegative")
        digits = []
        while value:
            value, r = divmod(value, p)
            digits.append(r)
        return cls(digits, p)

    @property
    def encoding(self) -> int:
        """Integer sum(coeffs[i] * p**i), the total order used for scans."""
        enc = 0
        for c in reversed(self.coeffs):
            enc = enc * self.p + c
        return enc

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def monic(self) -> "PolyZp":
        """Monic scaling; the zero polynomial stays zero."""
        if not self.coeffs or self.coeffs[-1] == 1:
            return self
        scale = pow(self.coeffs[-1], -1, self.p)
        return PolyZp([c * scale for c in self.coeffs], self.p)

    def _coerce(self, other) -> "PolyZp | None":
        if not isinstance(other, PolyZp):
            return None
        if self.p != other.p:
            raise ModulusMismatch(f"coefficient moduli differ: {self.p} vs {other.p}")
        return other

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] += v
        return PolyZp(out, self.p)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = list(self.coeffs) + [0] * (len(other.coeffs) - len(self.coeffs))
        for i, v in enumerate(other.coeffs):
            out[i] -= v
        return PolyZp(out, self.p)

    def __neg__(self):
        return PolyZp([-c for c in self.coeffs], self.p)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return PolyZp.zero(self.p)
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return PolyZp(out, self.p)

    def __divmod__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not other:
            raise DivisionByZeroPoly("division by the zero polynomial")
        p = self.p
        db = other.degree
        if self.degree < db:
            return PolyZp.zero(p), self
        rem = list(self.coeffs)
        quot = [0] * (self.degree - db + 1)
        inv_lead = pow(other.coeffs[-1], -1, p)
        for shift in range(self.degree - db, -1, -1):
            c = rem[shift + db] % p
            if c:
                factor = c * inv_lead % p
                quot[shift] = factor
                for j, bj in enumerate(other.coeffs):
                    rem[shift + j] = (rem[shift + j] - factor * bj) % p
        return PolyZp(quot, p), PolyZp(rem[:db], p)

    def __mod__(self, other):
        result = self.__divmod__(other)
        if result is NotImplemented:
            return NotImplemented
        return result[1]

    def __floordiv__(self, other):
        result = self.__divmod__(other)
        if result is NotImplemented:
            return NotImplemented
        return result[0]

    def __eq__(self, other):
        if not isinstance(other, PolyZp):
            return NotImplemented
        return self.p == other.p and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.p, self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    def __str__(self):
        """Human form in descending degree, e.g. 'x^2+2x+1'."""
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append("x" if c == 1 else f"{c}x")
            else:
                terms.append(f"x^{i}" if c == 1 else f"{c}x^{i}")
        return "+".join(terms)

    def __repr__(self):
        return f"PolyZp({list(self.coeffs)}, p={self.p})"


def poly_gcd(f: PolyZp, g: PolyZp) -> PolyZp:
    """Monic greatest common divisor by the Euclidean algorithm."""
    if f.p != g.p:
        raise ModulusMismatch(f"coefficient moduli differ: {f.p} vs {g.p}")
    if not f and not g:
        raise BothZero("gcd(0, 0) is undefined")
    while g:
        f, g = g, f % g
    return f.monic()


def poly_powmod(base: PolyZp, exponent: int, modpoly: PolyZp) -> PolyZp:
    """base**exponent reduced mod modpoly, squaring with reduction each step."""
    if not modpoly:
        raise DivisionByZeroPoly("reduction by the zero polynomial")
    if modpoly.degree < 1:
        raise ValueError("modulus polynomial must have degree >= 1")
    if exponent < 0:
        raise ValueError("exponent must be nonnegative")
    result = PolyZp.one(base.p)
    acc = base % modpoly
    while exponent:
        if exponent & 1:
            result = result * acc % modpoly
        exponent >>= 1
        if exponent:
            acc = acc * acc % modpoly
    return result


def poly_invmod(f: PolyZp, modpoly: PolyZp) -> PolyZp:
    """Inverse of f modulo modpoly via the extended Euclidean algorithm."""
    if not modpoly:
        raise DivisionByZeroPoly("reduction by the zero polynomial")
    p = f.p
    a, b = f % modpoly, modpoly
    s0, s1 = PolyZp.one(p), PolyZp.zero(p)
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
    if a.degree != 0:
        raise ZeroDivisionError(f"{f!r} is not invertible mod {modpoly!r}")
    scale = PolyZp((pow(a.coeffs[0], -1, p),), p)
    return s0 * scale % modpoly


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _require_monic_positive_degree(f: PolyZp) -> None:
    if not f.is_monic or f.degree < 1:
        raise NotMonic("a monic polynomial of degree >= 1 is required")


def is_irreducible(f: PolyZp) -> bool:
    """Rabin's irreducibility test over Z_p.

    f of degree n is irreducible iff x**(p**n) == x mod f and, for every
    prime t dividing n, gcd(x**(p**(n/t)) - x, f) is constant.
    """
    _require_monic_positive_degree(f)
    n, p = f.degree, f.p
    if n == 1:
        return True
    x = PolyZp.x(p)
    frob = {0: x % f}
    h = frob[0]
    for i in range(1, n + 1):
        h = poly_powmod(h, p, f)
        frob[i] = h
    if frob[n] != x % f:
        return False
    for t in _prime_factors(n):
        if poly_gcd(frob[n // t] - x, f).degree != 0:
            return False
    return True


def monic_polys(p: int, degree: int):
    """Yield all monic degree-d polynomials over Z_p in ascending encoding."""
    for enc in range(p**degree):
        digits = []
        v = enc
        for _ in range(degree):
            v, r = divmod(v, p)
            digits.append(r)
        yield PolyZp(digits + [1], p)


def is_irreducible_trial(f: PolyZp) -> bool:
    """Exhaustive trial division by every monic of degree 1..deg(f)//2.

    Deliberately naive; refuses inputs beyond degree 6 or p > 7 so the
    enumeration stays within a fixed combinatorial budget.
    """
    _require_monic_positive_degree(f)
    if f.degree > TRIAL_MAX_DEGREE or f.p > TRIAL_MAX_P:
        raise BudgetExceeded(
            f"trial division limited to degree <= {TRIAL_MAX_DEGREE}, p <= {TRIAL_MAX_P}"
        )
    for d in range(1, f.degree // 2 + 1):
        for g in monic_polys(f.p, d):
            if not f % g:
                return False
    return True


def find_canonical_irreducible(p: int, n: int) -> PolyZp:
    """Smallest-encoding monic irreducible of degree n over Z_p.

    The scan orders candidates by the base-p integer encoding of the n low
    coefficients (the leading coefficient is pinned to 1); p must be prime.
    """
    if n < 1:
        raise ValueError("degree must be >= 1")
    for f in monic_polys(p, n):
        if is_irreducible(f):
            return f
    raise AssertionError("unreachable: a monic irreducible of every degree exists")
