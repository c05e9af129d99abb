"""Elementary symmetric values of the nonzero field elements.

Three independent routes are provided: a literal subset-sum oracle, an
incremental expansion of prod(x - a_i) whose coefficients give every s_k at
once, and power sums tied back to the s_k by the division-free direction of
Newton's identities. The closed-form prediction floor(k/(q-1)) * (-1)**q is
what the verifiers compare against.

Sign conventions: expanding prod(x - a_i) makes the coefficient of
x**(q-1-k) equal to (-1)**k s_k, and the Newton recurrence used here is
p_k = e_1 p_{k-1} - e_2 p_{k-2} + ... + (-1)**(k-1) k e_k, where k e_k
means k-fold addition (no division, so it is valid in characteristic p).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import _fastops
from .gfext import FieldElement, FieldParams
from .gfpoly import BudgetExceeded

NAIVE_BUDGET = 10**6

__all__ = [
    "KOutOfRange",
    "NAIVE_BUDGET",
    "PowerSumProfile",
    "QTooSmall",
    "SymmetricProfile",
    "esp_all_product",
    "esp_naive",
    "power_sum_direct",
    "power_sums_direct",
    "power_sums_from_esp",
    "predicted_sk",
]


class KOutOfRange(ValueError):
    """k must lie in [1, q-1]."""


class QTooSmall(ValueError):
    """The identity is only stated for fields with q >= 3."""


@dataclass(frozen=True)
class SymmetricProfile:
    """values[k-1] holds s_k, the k-th elementary symmetric value of F*."""

    field: FieldParams
    values: tuple[FieldElement, ...]

    def encodings(self) -> list[int]:
        """JSON form: the element encodings in ascending k."""
        return [v.encoding for v in self.values]


@dataclass(frozen=True)
class PowerSumProfile:
    """values[k-1] holds p_k, the sum of k-th powers over F*."""

    field: FieldParams
    values: tuple[FieldElement, ...]

    def encodings(self) -> list[int]:
        """JSON form: the element encodings in ascending k."""
        return [v.encoding for v in self.values]


def _check_k(field: FieldParams, k: int) -> None:
    if not 1 <= k <= field.q - 1:
        raise KOutOfRange(f"k must be in [1, {field.q - 1}], got {k}")


def esp_naive(field: FieldParams, k: int) -> FieldElement:
    """Literal sum over all k-subsets of the nonzero elements.

    This is the brute-force oracle; it refuses to enumerate more than
    NAIVE_BUDGET subsets.
    """
    _check_k(field, k)
    if math.comb(field.q - 1, k) > NAIVE_BUDGET:
        raise BudgetExceeded(
            f"C({field.q - 1}, {k}) subsets exceed the naive budget {NAIVE_BUDGET}"
        )
    total = field.zero
    for combo in itertools.combinations(field.nonzero_elements(), k):
        prod = combo[0]
        for a in combo[1:]:
            prod = prod * a
        total = total + prod
    return total


@lru_cache(maxsize=None)
def esp_all_product(field: FieldParams) -> SymmetricProfile:
    """All s_k at once by expanding prod(x - a_i) one linear factor at a time.

    The growing coefficient vector is kept as an array of field-element
    rows; multiplying by (x - a) shifts it and subtracts a times each row.
    s_k is then (-1)**k times the coefficient of x**(q-1-k). O(q^2) field
    multiplications overall. Results are cached per field.
    """
    p, n, q = field.p, field.n, field.q
    coeff = np.zeros((1, n), dtype=np.int64)
    coeff[0, 0] = 1
    for a in _fastops.coeff_rows(field):
        scaled = _fastops.scale_rows(field, coeff, a)
        grown = np.zeros((coeff.shape[0] + 1, n), dtype=np.int64)
        grown[1:] = coeff
        grown[: coeff.shape[0]] -= scaled
        coeff = grown % p
    values = []
    for k in range(1, q):
        row = coeff[q - 1 - k]
        if k & 1:
            row = -row % p
        values.append(FieldElement(tuple(int(c) for c in row), field))
    return SymmetricProfile(field, tuple(values))


def power_sum_direct(field: FieldParams, k: int) -> FieldElement:
    """Sum of a**k over the nonzero elements, one exponentiation per element."""
    _check_k(field, k)
    total = field.zero
    for a in field.nonzero_elements():
        total = total + a**k
    return total


@lru_cache(maxsize=None)
def power_sums_direct(field: FieldParams) -> PowerSumProfile:
    """All power sums p_1..p_{q-1} in one batched pass of repeated products.

    Same direct semantics as power_sum_direct for each k, but the powers are
    built incrementally so a whole field costs q-1 row-wise multiplications.
    """
    p, q = field.p, field.q
    base = _fastops.coeff_rows(field)
    powers = base
    values = []
    for k in range(1, q):
        if k > 1:
            powers = _fastops.rowwise_mul(field, powers, base)
        total = powers.sum(axis=0) % p
        values.append(FieldElement(tuple(int(c) for c in total), field))
    return PowerSumProfile(field, tuple(values))


def power_sums_from_esp(profile: SymmetricProfile) -> PowerSumProfile:
    """Power sums from elementary symmetric values by the e -> p recurrence.

    Only this direction of Newton's identities is division-free, so it stays
    exact in every characteristic. Accepts profiles of any length and
    produces equally many power sums.
    """
    field = profile.field
    e = profile.values
    ps: list[FieldElement] = []
    for k in range(1, len(e) + 1):
        acc = field.zero
        for i in range(1, k):
            if not e[i - 1]:
                continue
            term = e[i - 1] * ps[k - i - 1]
            acc = acc + term if i & 1 else acc - term
        tail = field.embed(k) * e[k - 1]
        acc = acc + tail if k & 1 else acc - tail
        ps.append(acc)
    return PowerSumProfile(field, tuple(ps))


def predicted_sk(field: FieldParams, k: int) -> FieldElement:
    """The closed form floor(k / (q-1)) * (-1)**q as a field element.

    Zero for k < q-1 and (-1)**q for k = q-1.
    """
    if field.q < 3:
        raise QTooSmall(f"the identity requires q >= 3, got q = {field.q}")
    _check_k(field, k)
    sign = -1 if field.q & 1 else 1
    return field.embed((k // (field.q - 1)) * sign)
