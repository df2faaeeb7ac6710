import itertools

import numpy as np
import pytest

from gamealgebra.core import FormalPolynomial, GameValuation
from gamealgebra.errors import IndexRangeError, ShapeError
from gamealgebra.nim import xor_product
from gamealgebra.transforms import (
    dft,
    dft_direct,
    fft_radix2,
    hadamard,
    idft,
    omega_polynomial,
    omega_transform,
    parity_direct,
    parity_transform,
    qft_basis,
)

from oracles import dft_oracle, parity_oracle


def test_omega_polynomial_examples():
    assert np.array_equal(omega_polynomial(1, 4).to_dense(), [1, 1, 1, 1])
    assert np.array_equal(omega_polynomial(-1, 4).to_dense(), [1, -1, 1, -1])
    assert np.array_equal(omega_polynomial(1j, 4).to_dense(), [1, 1j, -1, -1j])
    with pytest.raises(ShapeError):
        omega_polynomial(1, 0)


def test_dft_examples():
    assert np.allclose(dft([1, 0, 0, 0]), [1, 1, 1, 1], atol=1e-15)
    assert np.allclose(dft([0, 1, 0, 0]), [1, 1j, -1, -1j], atol=1e-15)
    assert np.allclose(dft([1, 1, 1, 1]), [4, 0, 0, 0], atol=1e-15)
    assert np.allclose(idft([4, 0, 0, 0]), [1, 1, 1, 1], atol=1e-15)
    assert np.allclose(idft([1, 1, 1, 1]), [1, 0, 0, 0], atol=1e-15)
    with pytest.raises(ShapeError):
        dft([])


def test_dft_sign_convention():
    # positive exponent: the conjugate of numpy's forward transform
    v = np.arange(8) + 1j
    assert np.allclose(dft(v), 8 * np.fft.ifft(v), atol=1e-12)


def test_dft_against_sum_oracle(rng):
    for m in (1, 2, 3, 5, 8, 12, 16):
        v = rng.normal(size=m) + 1j * rng.normal(size=m)
        assert np.allclose(dft(v), dft_oracle(v), atol=1e-10)
        assert np.allclose(idft(v), dft_oracle(v, -1) / m, atol=1e-10)


def test_fft_matches_direct(rng):
    for n in range(0, 11):
        m = 2**n
        v = rng.normal(size=m) + 1j * rng.normal(size=m)
        assert np.abs(fft_radix2(v) - dft_direct(v)).max() < 1e-10
        assert np.abs(fft_radix2(v, -1) - dft_direct(v, -1)).max() < 1e-10


def test_fft_needs_power_of_two():
    with pytest.raises(ShapeError):
        fft_radix2(np.ones(6))
    assert np.allclose(dft(np.ones(6)), [6, 0, 0, 0, 0, 0], atol=1e-12)


def test_round_trip(rng):
    for n in range(1, 13):
        m = 2**n
        v = rng.normal(size=m) + 1j * rng.normal(size=m)
        assert np.abs(idft(dft(v)) - v).max() < 1e-10
        assert np.abs(idft(dft(v, normalized=True), normalized=True) - v).max() < 1e-10


def test_normalized_dft_is_unitary(rng):
    v = rng.normal(size=64) + 1j * rng.normal(size=64)
    assert np.linalg.norm(dft(v, normalized=True)) == pytest.approx(np.linalg.norm(v), rel=1e-12)


def test_qft_basis():
    assert np.allclose(qft_basis(0, 1), [1, 1], atol=1e-15)
    assert np.allclose(qft_basis(1, 1), [1, -1], atol=1e-15)
    for s in range(8):
        delta = np.eye(8)[s]
        assert np.abs(qft_basis(s, 3) - dft(delta)).max() < 1e-12
        assert np.abs(qft_basis(s, 3, normalized=True) - dft(delta) / np.sqrt(8)).max() < 1e-12
    with pytest.raises(IndexRangeError):
        qft_basis(2, 1)


def test_omega_transform_linearity_and_dft(rng):
    m = 8
    omega = np.exp(2j * np.pi / m)
    p, q = rng.normal(size=(2, m)) + 1j * rng.normal(size=(2, m))
    a, b = 2 - 1j, 0.5j
    lhs = omega_transform(a * p + b * q, omega)
    rhs = a * omega_transform(p, omega) + b * omega_transform(q, omega)
    assert np.allclose(lhs, rhs, atol=1e-12)
    assert np.allclose(omega_transform(p, omega), dft(p), atol=1e-12)


def test_parity_examples():
    assert np.array_equal(parity_transform([1, 0, 0, 0]), [1, 1, 1, 1])
    assert np.array_equal(parity_transform([0, 1]), [1, -1])
    assert np.allclose(hadamard([1, 0]), [1 / np.sqrt(2), 1 / np.sqrt(2)], atol=1e-15)
    with pytest.raises(ShapeError):
        parity_transform([1, 2, 3])
    with pytest.raises(ShapeError):
        parity_transform([1, 2, 3, 4], n=3)


def test_parity_keeps_real_dtype():
    assert parity_transform(np.array([1.0, 2.0])).dtype == float
    assert parity_transform(GameValuation(1, [1.0, 2.0]).values).dtype == float


def test_parity_exhaustive_sign_patterns():
    for n in (1, 2, 3):
        for signs in itertools.product((-1, 1), repeat=2**n):
            v = np.array(signs, dtype=float)
            assert np.abs(parity_transform(v) - parity_oracle(v)).max() < 1e-10


def test_parity_random(rng):
    for n in range(1, 11):
        v = rng.normal(size=2**n)
        assert np.abs(parity_transform(v) - parity_direct(v)).max() < 1e-10
    for n in range(1, 6):
        v = rng.normal(size=2**n) + 1j * rng.normal(size=2**n)
        assert np.abs(parity_direct(v) - parity_oracle(v)).max() < 1e-10


def test_parity_involution(rng):
    for n in range(1, 9):
        v = rng.normal(size=2**n)
        assert np.allclose(parity_transform(parity_transform(v)), 2**n * v, atol=1e-10)
        assert np.abs(hadamard(hadamard(v)) - v).max() < 1e-10


def test_xor_with_h_minus_one(rng):
    # h^{-1} (.) p collapses to one coefficient: (-1)^|S| vhat_N for every S
    for n in range(1, 6):
        m = 2**n
        v = rng.normal(size=m)
        h = FormalPolynomial.from_dense([(-1) ** bin(s).count("1") for s in range(m)], m)
        prod = xor_product(h, FormalPolynomial.from_dense(v, m)).to_dense(m)
        vhat = parity_transform(v)
        signs = np.array([(-1) ** bin(s).count("1") for s in range(m)])
        assert np.allclose(prod, signs * vhat[m - 1], atol=1e-12)
