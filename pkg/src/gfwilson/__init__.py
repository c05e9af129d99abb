"""Exact verification of Wilson- and Wolstenholme-type identities over GF(p^n).

The package builds finite fields from canonical irreducible polynomials,
computes the elementary symmetric values of all nonzero elements by
independent algorithms, and checks the resulting identities exhaustively
with exact arithmetic. See the cli module for the command-line surface.
"""

from .gfext import (
    FieldElement,
    FieldMismatch,
    FieldParams,
    NotPrime,
    SizeBudgetExceeded,
    ZeroInverse,
    make_field,
)
from .gfpoly import (
    BothZero,
    BudgetExceeded,
    DivisionByZeroPoly,
    NotMonic,
    PolyZp,
    find_canonical_irreducible,
    is_irreducible,
    is_irreducible_trial,
    poly_gcd,
    poly_invmod,
    poly_powmod,
)
from .identities import (
    CheckResult,
    PTooSmall,
    QTooSmallForWolstenholme,
    VerificationReport,
    verify_field_suite,
    verify_generalized_wilson,
    verify_vieta_evaluation,
    verify_wilson_prime,
    verify_wilson_type,
    verify_wolstenholme_classical,
    verify_wolstenholme_field,
)
from .modnum import (
    Modulus,
    ModulusMismatch,
    NotInvertible,
    Residue,
    factorial_mod,
    is_prime,
    mod_add,
    mod_inv,
    mod_mul,
    mod_pow,
    prime_powers_up_to,
    primes_up_to,
)
from .symmetric import (
    KOutOfRange,
    PowerSumProfile,
    QTooSmall,
    SymmetricProfile,
    esp_all_product,
    esp_naive,
    power_sum_direct,
    power_sums_direct,
    power_sums_from_esp,
    predicted_sk,
)

__version__ = "0.1.0"
