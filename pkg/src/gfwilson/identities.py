"""Executable verification predicates with structured pass/fail evidence.

Every verifier compares two independently computed canonical value strings
with exact equality; there are no tolerances anywhere. Check lists are
ordered deterministically (ascending k, ascending element encoding), so
serialized reports are byte-stable across runs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _fastops
from .gfext import FieldParams, NotPrime, make_field
from .modnum import Modulus, factorial_mod, is_prime
from .symmetric import (
    NAIVE_BUDGET,
    KOutOfRange,
    QTooSmall,
    SymmetricProfile,
    esp_all_product,
    esp_naive,
    predicted_sk,
)

__all__ = [
    "CheckResult",
    "PTooSmall",
    "QTooSmallForWolstenholme",
    "VerificationReport",
    "verify_field_suite",
    "verify_generalized_wilson",
    "verify_vieta_evaluation",
    "verify_wilson_prime",
    "verify_wilson_type",
    "verify_wolstenholme_classical",
    "verify_wolstenholme_field",
]


class PTooSmall(ValueError):
    """The prime modulus is below the stated range of the congruence."""


class QTooSmallForWolstenholme(ValueError):
    """The field analogue of Wolstenholme's congruence is stated for q >= 5."""


@dataclass(frozen=True)
class CheckResult:
    """One verified equality, with enough parameters to reproduce it."""

    name: str
    params: dict
    passed: bool
    expected: str
    actual: str

    def as_json_dict(self) -> dict:
        return {
            "name": self.name,
            "params": self.params,
            "pass": self.passed,
            "expected": self.expected,
            "actual": self.actual,
        }


@dataclass(frozen=True)
class VerificationReport:
    """A named bundle of checks; all_pass is their conjunction."""

    subject: str
    params: dict
    checks: tuple[CheckResult, ...]

    @property
    def all_pass(self) -> bool:
        return all(c.passed for c in self.checks)

    def as_json_dict(self) -> dict:
        return {
            "subject": self.subject,
            "params": self.params,
            "checks": [c.as_json_dict() for c in self.checks],
            "all_pass": self.all_pass,
        }


def _check(name: str, params: dict, expected: str, actual: str) -> CheckResult:
    return CheckResult(name, params, expected == actual, expected, actual)


def _field_params(field: FieldParams) -> dict:
    return {"p": field.p, "n": field.n, "q": field.q}


def _generalized_wilson_checks(
    field: FieldParams, profile: SymmetricProfile
) -> list[CheckResult]:
    checks = []
    for k in range(1, field.q):
        expected = predicted_sk(field, k)
        actual = profile.values[k - 1]
        checks.append(
            _check(
                "generalized_wilson",
                _field_params(field) | {"k": k},
                str(expected.encoding),
                str(actual.encoding),
            )
        )
    return checks


def verify_generalized_wilson(field: FieldParams) -> VerificationReport:
    """s_k == floor(k/(q-1)) * (-1)**q for every k in [1, q-1], exactly."""
    _require_q3(field)
    checks = _generalized_wilson_checks(field, esp_all_product(field))
    return VerificationReport("generalized_wilson", _field_params(field), tuple(checks))


def _vieta_checks(field: FieldParams, profile: SymmetricProfile) -> list[CheckResult]:
    # Evaluate sum_k (-1)**k s_k x**(q-1-k) + 1 at every nonzero x by a
    # batched Horner pass; the coefficient of x**j is (-1)**(q-1-j) s_(q-1-j).
    p, n, q = field.p, field.n, field.q
    coeffs = np.zeros((q - 1, n), dtype=np.int64)
    for k in range(1, q):
        row = np.array(profile.values[k - 1].coeffs, dtype=np.int64)
        if k & 1:
            row = -row % p
        coeffs[q - 1 - k] = row
    points = _fastops.coeff_rows(field)
    acc = np.tile(coeffs[q - 2], (q - 1, 1))
    for j in range(q - 3, -1, -1):
        acc = (_fastops.rowwise_mul(field, acc, points) + coeffs[j]) % p
    acc[:, 0] = (acc[:, 0] + 1) % p
    encodings = _fastops.row_encodings(field, acc)
    checks = []
    for x, value in enumerate(encodings, start=1):
        checks.append(
            _check(
                "vieta_evaluation",
                _field_params(field) | {"x": x},
                "0",
                str(int(value)),
            )
        )
    return checks


def verify_vieta_evaluation(field: FieldParams) -> VerificationReport:
    """The expanded product, evaluated with the computed s_k, vanishes on F*."""
    _require_q3(field)
    checks = _vieta_checks(field, esp_all_product(field))
    return VerificationReport("vieta_evaluation", _field_params(field), tuple(checks))


def verify_wilson_prime(p: int) -> CheckResult:
    """(p-1)! == -1 modulo p, i.e. factorial_mod(p-1, p) equals p-1."""
    _require_odd_prime(p)
    actual = factorial_mod(p - 1, Modulus(p)).value
    return _check("wilson_prime", {"p": p}, str(p - 1), str(actual))


def verify_wilson_type(p: int, k: int) -> CheckResult:
    """The k-subset product sum over {1..p-1} is -floor(k/(p-1)) mod p.

    The sum is read off the GF(p) product-expansion profile rather than
    enumerated, so one O(p^2) expansion serves every k.
    """
    _require_odd_prime(p)
    if not 1 <= k <= p - 1:
        raise KOutOfRange(f"k must be in [1, {p - 1}], got {k}")
    field = make_field(p, 1)
    actual = esp_all_product(field).values[k - 1].encoding
    expected = -(k // (p - 1)) % p
    return _check("wilson_type", {"p": p, "k": k}, str(expected), str(actual))


def _wolstenholme_field_check(
    field: FieldParams, profile: SymmetricProfile
) -> CheckResult:
    units = field.nonzero_elements()
    full = units[0]
    for a in units[1:]:
        full = full * a
    direct = field.zero
    for a in units:
        direct = direct + full * a.inv()
    via_profile = profile.values[field.q - 3]  # s_(q-2)
    return _check(
        "wolstenholme_field",
        _field_params(field),
        "direct=0 profile=0",
        f"direct={direct.encoding} profile={via_profile.encoding}",
    )


def verify_wolstenholme_field(field: FieldParams) -> CheckResult:
    """sum_k (prod of all units) / a_k vanishes, computed two independent ways.

    Route one divides the full unit product by each element with elem_inv;
    route two reads s_(q-2) off the expansion profile. Both must be zero.
    """
    if field.q < 5:
        raise QTooSmallForWolstenholme(
            f"the field analogue is stated for q >= 5, got q = {field.q}"
        )
    return _wolstenholme_field_check(field, esp_all_product(field))


def verify_wolstenholme_classical(
    p: int, *, allow_negative_control: bool = False
) -> CheckResult:
    """sum_{k=1}^{p-1} (p-1)!/k == 0 modulo p**2, without big integers.

    Each term prod_{j != k} j is assembled from prefix and suffix product
    arrays modulo p**2, O(p) time and space. p = 3 is admitted only as an
    explicit negative control and is expected to fail.
    """
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if p < 5 and not (p == 3 and allow_negative_control):
        raise PTooSmall(
            f"the congruence is stated for p >= 5, got p = {p}"
            " (pass allow_negative_control for p = 3)"
        )
    m = p * p
    prefix = [1] * p  # prefix[i] = i! mod p^2
    for i in range(1, p):
        prefix[i] = prefix[i - 1] * i % m
    suffix = [1] * (p + 1)  # suffix[i] = i * (i+1) * ... * (p-1) mod p^2
    for i in range(p - 1, 0, -1):
        suffix[i] = suffix[i + 1] * i % m
    total = 0
    for k in range(1, p):
        total = (total + prefix[k - 1] * suffix[k + 1]) % m
    return _check("wolstenholme_classical", {"p": p}, "0", str(total))


def verify_field_suite(field: FieldParams, strategy: str = "product") -> VerificationReport:
    """Run every field identity on one field, with a selectable s_k engine.

    strategy 'product' uses the expansion profile, 'naive' recomputes every
    s_k by subset enumeration (budget permitting), and 'both' uses the
    expansion profile plus per-k agreement checks against the oracle
    wherever the subset budget allows. The Wolstenholme analogue is included
    for q >= 5 only, per its stated range.
    """
    _require_q3(field)
    if strategy not in ("product", "naive", "both"):
        raise ValueError(f"unknown strategy {strategy!r}")
    if strategy == "naive":
        profile = SymmetricProfile(
            field, tuple(esp_naive(field, k) for k in range(1, field.q))
        )
    else:
        profile = esp_all_product(field)
    checks = _generalized_wilson_checks(field, profile)
    checks.extend(_vieta_checks(field, profile))
    if field.q >= 5:
        checks.append(_wolstenholme_field_check(field, profile))
    if strategy == "both":
        for k in range(1, field.q):
            if math.comb(field.q - 1, k) > NAIVE_BUDGET:
                continue
            checks.append(
                _check(
                    "oracle_agreement",
                    _field_params(field) | {"k": k},
                    str(esp_naive(field, k).encoding),
                    str(profile.values[k - 1].encoding),
                )
            )
    return VerificationReport(str(field), _field_params(field), tuple(checks))


def _require_q3(field: FieldParams) -> None:
    if field.q < 3:
        raise QTooSmall(f"identity verification requires q >= 3, got q = {field.q}")


def _require_odd_prime(p: int) -> None:
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if p < 3:
        raise PTooSmall(f"the congruence is stated for p >= 3, got p = {p}")
