"""Parity between the compiled and pure-Python coefficient kernels."""

import random

import pytest

from qpart import _kernels_py

try:
    from qpart import _kernels
    BACKENDS = [_kernels_py, _kernels]
except ImportError:
    _kernels = None
    BACKENDS = [_kernels_py]

from oracles import poly_inv, poly_mul


@pytest.fixture(params=BACKENDS, ids=lambda mod: mod.BACKEND)
def kernels(request):
    return request.param


def test_mul_against_oracle(kernels):
    rng = random.Random(1)
    for _ in range(50):
        n = rng.randint(1, 40)
        a = [rng.randint(-99, 99) for _ in range(rng.randint(1, 60))]
        b = [rng.randint(-99, 99) for _ in range(rng.randint(1, 60))]
        assert kernels.mul(a, b, n) == poly_mul(a, b, n)


def test_inv_against_oracle(kernels):
    rng = random.Random(2)
    for _ in range(50):
        n = rng.randint(1, 40)
        a = [rng.randint(-99, 99) for _ in range(rng.randint(1, 60))]
        a[0] = rng.choice([1, -1])
        assert kernels.inv(a, n) == poly_inv(a, n)


def test_mul_accepts_tuples(kernels):
    assert kernels.mul((1, 1), (1, -1), 2) == [1, 0]


def test_mod_kernels_match_exact(kernels):
    rng = random.Random(3)
    for m in (2, 3, 7, 11, 10**6 + 3, 2**70 + 1):
        for _ in range(10):
            n = rng.randint(1, 30)
            a = [rng.randint(-999, 999) for _ in range(rng.randint(1, 40))]
            b = [rng.randint(-999, 999) for _ in range(rng.randint(1, 40))]
            assert kernels.mul_mod(a, b, n, m) == [c % m for c in poly_mul(a, b, n)]
            a[0] = rng.choice([1, -1])
            assert kernels.inv_mod(a, n, m) == [c % m for c in poly_inv(a, n)]


def test_mod_results_are_reduced(kernels):
    out = kernels.mul_mod([5, 6], [6, 6], 2, 7)
    assert all(0 <= c < 7 for c in out)


@pytest.mark.skipif(_kernels is None, reason="compiled kernels not built")
def test_backends_agree_on_random_inputs():
    rng = random.Random(4)
    for _ in range(100):
        n = rng.randint(1, 50)
        a = [rng.randint(-10**6, 10**6) for _ in range(rng.randint(1, 70))]
        b = [rng.randint(-10**6, 10**6) for _ in range(rng.randint(1, 70))]
        m = rng.choice([2, 5, 7, 97, 3_037_000_499, 2**65])
        assert _kernels.mul(a, b, n) == _kernels_py.mul(a, b, n)
        assert _kernels.mul_mod(a, b, n, m) == _kernels_py.mul_mod(a, b, n, m)
        a[0] = rng.choice([1, -1])
        assert _kernels.inv(a, n) == _kernels_py.inv(a, n)
        assert _kernels.inv_mod(a, n, m) == _kernels_py.inv_mod(a, n, m)


def test_big_coefficients_survive_compiled_path(kernels):
    # exact kernels must never truncate: feed 200-digit ints through
    big = 10**200 + 12345
    out = kernels.mul([big, 1], [big, -1], 2)
    assert out == [big * big, -big + big]
    inv = kernels.inv([1, big], 3)
    assert inv == [1, -big, big * big]
