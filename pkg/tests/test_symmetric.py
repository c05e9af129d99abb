import math

import pytest

from gfwilson.gfext import make_field
from gfwilson.gfpoly import BudgetExceeded
from gfwilson.modnum import prime_powers_up_to
from gfwilson.symmetric import (
    KOutOfRange,
    QTooSmall,
    SymmetricProfile,
    esp_all_product,
    esp_naive,
    power_sum_direct,
    power_sums_direct,
    power_sums_from_esp,
    predicted_sk,
)


def encodings(profile):
    return [v.encoding for v in profile.values]


def test_esp_naive_examples():
    f3 = make_field(3, 1)
    assert esp_naive(f3, 1).encoding == 0  # 1 + 2
    assert esp_naive(f3, 2).encoding == 2  # 1 * 2
    assert esp_naive(make_field(2, 2), 2).encoding == 0


def test_esp_naive_guards():
    f = make_field(5, 1)
    with pytest.raises(KOutOfRange):
        esp_naive(f, 0)
    with pytest.raises(KOutOfRange):
        esp_naive(f, 5)
    big = make_field(127, 1)
    assert math.comb(126, 63) > 10**6
    with pytest.raises(BudgetExceeded):
        esp_naive(big, 63)


def test_esp_all_product_examples():
    assert encodings(esp_all_product(make_field(3, 1))) == [0, 2]
    assert encodings(esp_all_product(make_field(2, 2))) == [0, 0, 1]
    assert encodings(esp_all_product(make_field(5, 1))) == [0, 0, 0, 4]


def test_profile_json_form():
    profile = esp_all_product(make_field(5, 1))
    assert profile.encodings() == [0, 0, 0, 4]
    assert power_sums_direct(make_field(5, 1)).encodings() == [0, 0, 0, 4]


def test_esp_oracle_equivalence_small():
    # exhaustive agreement of the two engines for every q <= 16
    for q, p, n in prime_powers_up_to(16):
        if q < 3:
            continue
        field = make_field(p, n)
        profile = esp_all_product(field)
        for k in range(1, q):
            assert profile.values[k - 1] == esp_naive(field, k), (q, k)


def test_profile_shape():
    for q, p, n in prime_powers_up_to(64):
        if q < 3:
            continue
        field = make_field(p, n)
        profile = esp_all_product(field)
        assert len(profile.values) == q - 1
        assert profile.values[q - 2]  # s_(q-1) is the nonzero unit product


def test_power_sum_direct_examples():
    f5 = make_field(5, 1)
    assert power_sum_direct(f5, 1).encoding == 0
    assert power_sum_direct(f5, 4).encoding == 4
    assert power_sum_direct(make_field(2, 2), 3).encoding == 1
    with pytest.raises(KOutOfRange):
        power_sum_direct(f5, 0)


def test_power_sums_direct_matches_per_k():
    for q, p, n in prime_powers_up_to(32):
        if q < 3:
            continue
        field = make_field(p, n)
        batch = power_sums_direct(field)
        assert len(batch.values) == q - 1
        for k in range(1, q):
            assert batch.values[k - 1] == power_sum_direct(field, k), (q, k)


def test_newton_examples():
    f5 = make_field(5, 1)
    assert encodings(power_sums_from_esp(esp_all_product(f5))) == [0, 0, 0, 4]
    f3 = make_field(3, 1)
    assert encodings(power_sums_from_esp(esp_all_product(f3))) == [0, 2]


def test_newton_all_zero_profile():
    # degenerate input: an all-zero profile of any length forces all-zero sums
    f = make_field(7, 1)
    for length in (1, 3, 6, 10):
        profile = SymmetricProfile(f, (f.zero,) * length)
        out = power_sums_from_esp(profile)
        assert len(out.values) == length
        assert all(v == f.zero for v in out.values)


def test_newton_consistency_small():
    for q, p, n in prime_powers_up_to(64):
        if q < 3:
            continue
        field = make_field(p, n)
        newton = power_sums_from_esp(esp_all_product(field))
        assert newton.values == power_sums_direct(field).values, q


def test_newton_on_perturbed_profile_disagrees():
    # the consistency check must be able to fail: corrupt s_1 and compare
    field = make_field(7, 1)
    good = esp_all_product(field)
    bad = SymmetricProfile(field, (field.one,) + good.values[1:])
    assert power_sums_from_esp(bad).values != power_sums_direct(field).values


def test_predicted_sk_examples():
    f7 = make_field(7, 1)
    assert predicted_sk(f7, 3).encoding == 0
    assert predicted_sk(f7, 6).encoding == 6
    assert predicted_sk(make_field(2, 2), 3).encoding == 1
    assert predicted_sk(make_field(3, 2), 8).encoding == 2  # (-1)^9 = -1 mod 3


def test_predicted_sk_guards():
    with pytest.raises(QTooSmall):
        predicted_sk(make_field(2, 1), 1)
    with pytest.raises(KOutOfRange):
        predicted_sk(make_field(5, 1), 5)
    with pytest.raises(KOutOfRange):
        predicted_sk(make_field(5, 1), 0)


def test_wilson_special_case_full_range():
    # s_(q-1) equals the direct product of all nonzero elements
    for q, p, n in prime_powers_up_to(2048):
        if q < 3:
            continue
        field = make_field(p, n)
        units = field.nonzero_elements()
        prod = units[0]
        for a in units[1:]:
            prod = prod * a
        assert esp_all_product(field).values[q - 2] == prod, q
