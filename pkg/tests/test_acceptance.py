"""Acceptance suite: one test per criterion, at full scale, exact equality.

Every test prints a single PASS line (visible with pytest -s or -rA) after
its assertions succeed. Profiles are cached per field, so the sweeps share
work across criteria regardless of execution order.
"""

import itertools
import json
import math
import random
import time
from pathlib import Path

from gfwilson.cli import main
from gfwilson.gfext import make_field
from gfwilson.gfpoly import is_irreducible, is_irreducible_trial, monic_polys
from gfwilson.identities import (
    verify_generalized_wilson,
    verify_vieta_evaluation,
    verify_wilson_prime,
    verify_wilson_type,
    verify_wolstenholme_classical,
    verify_wolstenholme_field,
)
from gfwilson.modnum import prime_powers_up_to, primes_up_to
from gfwilson.symmetric import (
    esp_all_product,
    esp_naive,
    power_sums_direct,
    power_sums_from_esp,
)

GOLDEN = Path(__file__).parent / "golden"


def fields_up_to(limit):
    return [(q, p, n) for q, p, n in prime_powers_up_to(limit) if q >= 3]


def test_criterion_01_generalized_wilson_all_fields():
    start = time.perf_counter()
    fields = fields_up_to(2048)
    assert len(fields) == 339
    for q, p, n in fields:
        report = verify_generalized_wilson(make_field(p, n))
        assert report.all_pass, (q, p, n)
        assert len(report.checks) == q - 1
    elapsed = time.perf_counter() - start
    assert elapsed < 60.0, f"took {elapsed:.1f}s"
    print(
        f"criterion 1 PASS: generalized Wilson identity exact over "
        f"{len(fields)} fields (3 <= q <= 2048) in {elapsed:.1f}s"
    )


def test_criterion_02_oracle_equivalence():
    start = time.perf_counter()
    checked = 0
    for q, p, n in fields_up_to(16):
        field = make_field(p, n)
        profile = esp_all_product(field)
        for k in range(1, q):
            assert profile.values[k - 1] == esp_naive(field, k), (q, k)
            checked += 1
    elapsed = time.perf_counter() - start
    assert elapsed < 1.0, f"took {elapsed:.2f}s"
    print(
        f"criterion 2 PASS: esp_naive == esp_all_product on {checked} entries "
        f"(all q <= 16) in {elapsed:.2f}s"
    )


def test_criterion_03_newton_consistency():
    start = time.perf_counter()
    for q, p, n in fields_up_to(512):
        field = make_field(p, n)
        newton = power_sums_from_esp(esp_all_product(field))
        assert newton.values == power_sums_direct(field).values, (q, p, n)
    elapsed = time.perf_counter() - start
    assert elapsed < 30.0, f"took {elapsed:.1f}s"
    print(
        f"criterion 3 PASS: Newton recurrence matches direct power sums "
        f"for all q <= 512, all k, in {elapsed:.1f}s"
    )


def test_criterion_04_power_sum_closed_form():
    for q, p, n in fields_up_to(512):
        field = make_field(p, n)
        minus_one, zero = field.embed(-1), field.zero
        for k, p_k in enumerate(power_sums_direct(field).values, start=1):
            expected = minus_one if k % (q - 1) == 0 else zero
            assert p_k == expected, (q, k)
    print(
        "criterion 4 PASS: p_k == -1 iff (q-1) | k, else 0, "
        "for all q <= 512, all k"
    )


def test_criterion_05_vieta_evaluation():
    for q, p, n in fields_up_to(512):
        report = verify_vieta_evaluation(make_field(p, n))
        assert report.all_pass and len(report.checks) == q - 1, (q, p, n)
    print(
        "criterion 5 PASS: signed-profile evaluation vanishes at every "
        "x in F* for all q <= 512"
    )


def test_criterion_06_wilson_primes():
    start = time.perf_counter()
    primes = [p for p in primes_up_to(10000) if p >= 3]
    assert len(primes) == 1228
    for p in primes:
        assert verify_wilson_prime(p).passed, p
    elapsed = time.perf_counter() - start
    assert elapsed < 10.0, f"took {elapsed:.1f}s"
    print(
        f"criterion 6 PASS: (p-1)! = -1 mod p for all {len(primes)} primes "
        f"3 <= p <= 10000 in {elapsed:.1f}s"
    )


def test_criterion_07_wilson_type():
    for p in [p for p in primes_up_to(101) if p >= 3]:
        for k in range(1, p):
            assert verify_wilson_type(p, k).passed, (p, k)
    # independent recomputation by literal subset enumeration
    for p in (3, 5, 7, 11, 13):
        for k in range(1, p):
            expected = sum(
                math.prod(c) for c in itertools.combinations(range(1, p), k)
            ) % p
            assert int(verify_wilson_type(p, k).actual) == expected, (p, k)
    print(
        "criterion 7 PASS: subset-product congruence for all p <= 101, all k, "
        "cross-checked against enumeration for p <= 13"
    )


def test_criterion_08_wolstenholme_classical():
    primes = [p for p in primes_up_to(2000) if p >= 5]
    assert len(primes) == 301
    for p in primes:
        assert verify_wolstenholme_classical(p).passed, p
    control = verify_wolstenholme_classical(3, allow_negative_control=True)
    assert not control.passed
    assert control.actual == "3"
    print(
        f"criterion 8 PASS: harmonic factorial sum = 0 mod p^2 for "
        f"{len(primes)} primes 5 <= p <= 2000; p = 3 control fails with 3 mod 9"
    )


def test_criterion_09_wolstenholme_field():
    fields = [(q, p, n) for q, p, n in fields_up_to(2048) if q >= 5]
    for q, p, n in fields:
        check = verify_wolstenholme_field(make_field(p, n))
        assert check.passed, (q, p, n)
        assert check.actual == "direct=0 profile=0"
    print(
        f"criterion 9 PASS: both Wolstenholme-analogue routes vanish and agree "
        f"on {len(fields)} fields (5 <= q <= 2048)"
    )


def test_criterion_10_field_axioms():
    rng = random.Random(20260811)
    triples = 0
    for q, p, n in fields_up_to(2048):
        field = make_field(p, n)
        elems = field.elements()
        one, zero = field.one, field.zero
        for a in elems:  # a**q == a, exhaustive, zero included
            assert a**q == a
        if q <= 16:
            pool = [(a, b, c) for a in elems for b in elems for c in elems]
        else:
            pool = [
                tuple(elems[rng.randrange(q)] for _ in range(3)) for _ in range(1000)
            ]
        for a, b, c in pool:
            assert (a + b) + c == a + (b + c) and a + b == b + a
            assert (a * b) * c == a * (b * c) and a * b == b * a
            assert a * (b + c) == a * b + a * c
            assert a + (-a) == zero
            if a:
                assert a * a.inv() == one
        triples += len(pool)
    print(
        f"criterion 10 PASS: field axioms on {triples} triples "
        f"(exhaustive q <= 16, 1000 sampled per larger field) and a^q = a "
        f"exhaustive in every field"
    )


def test_criterion_11_irreducibility_oracles():
    polys = 0
    for p in (2, 3, 5):
        for d in range(1, 5):
            for f in monic_polys(p, d):
                assert is_irreducible(f) == is_irreducible_trial(f), f
                polys += 1
    print(
        f"criterion 11 PASS: Rabin test == trial division on all {polys} "
        f"monic polynomials of degree <= 4 over p in (2, 3, 5)"
    )


def test_criterion_12_cli_contract(capsys):
    cases = [
        (["verify", "--p", "3", "--json"], "verify_p3.json"),
        (["verify", "--p", "2", "--n", "2", "--json"], "verify_p2_n2.json"),
        (["sweep", "--max-q", "16", "--json"], "sweep_max_q16.json"),
    ]
    for argv, golden in cases:
        expected = (GOLDEN / golden).read_text()
        for _ in range(2):  # byte-stable across repeated runs
            code = main(argv)
            out = capsys.readouterr().out
            assert code == 0 and out == expected, argv
        assert json.loads(expected)  # golden is well-formed JSON

    # exit code contract: 0 pass, 1 check failure, 2 usage/parameter error
    assert main(["verify", "--p", "7", "--n", "2"]) == 0
    assert main(["wolstenholme", "--max-p", "3", "--allow-negative-control"]) == 1
    assert main(["verify", "--p", "4"]) == 2
    assert main(["verify", "--p", "2", "--n", "1"]) == 2
    assert main(["sweep", "--max-q", "2"]) == 2
    assert main(["verify", "--p", "3", "--bogus-flag"]) == 2
    assert main(["nonsense"]) == 2
    capsys.readouterr()
    print("criterion 12 PASS: golden JSON byte-stable; exit codes 0/1/2 honored")
