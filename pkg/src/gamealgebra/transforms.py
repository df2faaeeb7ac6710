"""Omega-transforms: discrete and quantum Fourier, parity and Hadamard.

The forward Fourier kernel uses the positive exponent,
``vhat_j = sum_k v_k exp(+2 pi i j k / m)``, and the inverse carries the
``1/m`` factor. This is the conjugate of the numpy/engineering convention.
"""

from __future__ import annotations

import math

import numpy as np

from .core import FormalPolynomial, as_vector, check_players, popcount
from .errors import DomainError, IndexRangeError, ShapeError

# SpectrumVector: a dense complex numpy array of the transform length.


def omega_polynomial(omega: complex, m: int) -> FormalPolynomial:
    """``f^omega = sum_{k < m} omega^k x^k``."""
    if m < 1:
        raise ShapeError(f"transform size must be >= 1, got {m}")
    powers = np.empty(m, dtype=complex)
    acc = 1 + 0j
    for k in range(m):
        powers[k] = acc
        acc *= omega
    return FormalPolynomial.from_dense(powers, m)


def omega_transform(v, omega: complex) -> np.ndarray:
    """The linear map ``x^s -> sum_k omega^(s k) x^k`` applied to ``v``."""
    v = as_vector(v, complex)
    m = len(v)
    if m < 1:
        raise ShapeError("transform size must be >= 1")
    k = np.arange(m)
    return np.array([np.sum(v * np.power(complex(omega), j * k)) for j in range(m)])


def _roots_table(m: int, sign: int) -> np.ndarray:
    # exp(sign * 2 pi i r / m), r < m; exact at the quarter points
    table = np.exp(sign * 2j * np.pi * np.arange(m) / m)
    if m % 4 == 0:
        q = m // 4
        table[0], table[q], table[2 * q], table[3 * q] = 1, sign * 1j, -1, -sign * 1j
    elif m % 2 == 0:
        table[0], table[m // 2] = 1, -1
    return table


def dft_direct(v, sign: int = +1) -> np.ndarray:
    """O(m^2) evaluation of ``sum_k v_k exp(sign 2 pi i j k / m)``."""
    v = as_vector(v, complex)
    m = len(v)
    table = _roots_table(m, sign)
    k = np.arange(m)
    out = np.empty(m, dtype=complex)
    for j in range(m):
        out[j] = np.dot(table[(j * k) % m], v)
    return out


def _is_pow2(m: int) -> bool:
    return m >= 1 and m & (m - 1) == 0


def fft_radix2(v, sign: int = +1) -> np.ndarray:
    """Iterative decimation-in-time radix-2 FFT with kernel ``exp(sign 2 pi i jk/m)``."""
    v = as_vector(v, complex)
    m = len(v)
    if not _is_pow2(m):
        raise ShapeError(f"radix-2 FFT needs a power-of-two length, got {m}")
    bits = m.bit_length() - 1
    idx = np.arange(m)
    rev = np.zeros(m, dtype=np.int64)
    for b in range(bits):
        rev |= ((idx >> b) & 1) << (bits - 1 - b)
    a = v[rev]
    table = _roots_table(m, sign)
    size = 2
    while size <= m:
        half = size // 2
        tw = table[np.arange(half) * (m // size)]
        a = a.reshape(-1, size)
        even = a[:, :half]
        odd = a[:, half:] * tw
        a = np.concatenate([even + odd, even - odd], axis=1).ravel()
        size *= 2
    return a


def dft(v, method: str = "auto", normalized: bool = False) -> np.ndarray:
    """Fourier coefficients ``vhat_j = sum_k v_k exp(2 pi i j k / m)``.

    ``method`` is ``"fft"``, ``"direct"`` or ``"auto"`` (FFT for power-of-two
    lengths). ``normalized`` divides by ``sqrt(m)`` for the unitary variant.
    """
    v = as_vector(v, complex)
    m = len(v)
    if m < 1:
        raise ShapeError("transform size must be >= 1")
    if method == "auto":
        method = "fft" if _is_pow2(m) else "direct"
    if method == "fft":
        out = fft_radix2(v, +1)
    elif method == "direct":
        out = dft_direct(v, +1)
    else:
        raise DomainError(f"unknown DFT method {method!r}")
    return out / math.sqrt(m) if normalized else out


def idft(vhat, method: str = "auto", normalized: bool = False) -> np.ndarray:
    """Inverse of :func:`dft`: ``v_k = (1/m) sum_j vhat_j exp(-2 pi i j k / m)``.

    With ``normalized`` the factor is ``1/sqrt(m)``, inverting the unitary dft.
    """
    vhat = as_vector(vhat, complex)
    m = len(vhat)
    if m < 1:
        raise ShapeError("transform size must be >= 1")
    if method == "auto":
        method = "fft" if _is_pow2(m) else "direct"
    if method == "fft":
        out = fft_radix2(vhat, -1)
    elif method == "direct":
        out = dft_direct(vhat, -1)
    else:
        raise DomainError(f"unknown DFT method {method!r}")
    return out / (math.sqrt(m) if normalized else m)


def qft_basis(s: int, n: int, normalized: bool = False) -> np.ndarray:
    """``QFT_n |s> = sum_k exp(2 pi i s k / m) |k>``, unnormalized by default."""
    n = check_players(n)
    m = 1 << n
    if not 0 <= s < m:
        raise IndexRangeError(f"basis index {s} outside [0, {m})")
    delta = np.zeros(m, dtype=complex)
    delta[s] = 1
    return dft(delta, normalized=normalized)


def _parity_length(v: np.ndarray, n: int | None) -> int:
    m = len(v)
    if not _is_pow2(m) or m < 2:
        raise ShapeError(f"length {m} is not a power of two >= 2")
    bits = m.bit_length() - 1
    if n is not None and n != bits:
        raise ShapeError(f"length {m} does not match n = {n}")
    return bits


def parity_transform(v, n: int | None = None) -> np.ndarray:
    """Binary Fourier coefficients ``vhat_S = sum_T (-1)^|S n T| v_T``.

    Computed by the Walsh-Hadamard butterfly in O(m log m).
    """
    v = as_vector(v)
    bits = _parity_length(v, n)
    out = np.array(v, dtype=np.result_type(v, float))
    for i in range(bits):
        block = out.reshape(-1, 2, 1 << i)
        lo = block[:, 0, :].copy()
        hi = block[:, 1, :]
        block[:, 0, :] = lo + hi
        block[:, 1, :] = lo - hi
    return out


def parity_direct(v, n: int | None = None) -> np.ndarray:
    """O(m^2) evaluation of the binary Fourier coefficient formula."""
    v = as_vector(v)
    bits = _parity_length(v, n)
    m = 1 << bits
    pc = np.array([popcount(s) for s in range(m)])
    idx = np.arange(m)
    signs = 1 - 2 * (pc[idx[:, None] & idx[None, :]] & 1)
    return signs @ v


def hadamard(v, n: int | None = None) -> np.ndarray:
    """``H(v) = parity_transform(v) / sqrt(m)``; self-inverse."""
    v = as_vector(v)
    out = parity_transform(v, n)
    return out / math.sqrt(len(v))

