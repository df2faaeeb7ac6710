"""Evaluations of a game's characteristic polynomial.

Each function substitutes something for the coalition indeterminates
``x_S``: Owen's product weights, independent activity probabilities, a
distribution or state over coalitions, lattice meets (Sugeno) or wave
functions.
"""

from __future__ import annotations

import numpy as np

from .core import FormalPolynomial, as_game, as_vector
from .errors import DomainError, ShapeError, StateError

DIST_TOL = 1e-10
STATE_TOL = 1e-8


def _player_vector(t, n: int) -> np.ndarray:
    t = np.asarray(t, dtype=float).ravel()
    if t.shape != (n,):
        raise ShapeError(f"expected {n} player parameters, got {t.shape[0]}")
    return t


def _coalition_products(factors_in: np.ndarray, factors_out: np.ndarray) -> np.ndarray:
    # w[s] = prod_{i in s} factors_in[i] * prod_{j not in s} factors_out[j]
    w = np.ones(1)
    for a_in, a_out in zip(factors_in, factors_out):
        w = np.concatenate([w * a_out, w * a_in])
    return w


def multilinear_extension(v, t) -> float:
    """Owen extension ``sum_S v_S prod_{i in S} t_i prod_{j not in S} (1 - t_j)``."""
    v = as_game(v)
    t = _player_vector(t, v.n)
    return float(np.dot(v.values, _coalition_products(t, 1 - t)))


def independent_activity_value(v, p) -> float:
    """``sum_S v_S prod_{i in S} p_i`` for activity probabilities ``p``.

    Unlike :func:`multilinear_extension` there are no ``(1 - p_j)`` factors.
    """
    v = as_game(v)
    p = _player_vector(p, v.n)
    if np.any((p < 0) | (p > 1)) or not np.all(np.isfinite(p)):
        raise DomainError(f"activity probabilities must lie in [0, 1], got {p.tolist()}")
    return float(np.dot(v.values, _coalition_products(p, np.ones_like(p))))


def check_distribution(pi, m: int | None = None) -> np.ndarray:
    pi = np.asarray(pi, dtype=float).ravel()
    if m is not None and len(pi) != m:
        raise ShapeError(f"distribution has {len(pi)} entries, expected {m}")
    if np.any(pi < 0) or abs(pi.sum() - 1) > DIST_TOL:
        raise DomainError("a coalition distribution needs entries >= 0 summing to 1")
    return pi


def check_state(u, m: int | None = None, tol: float = STATE_TOL) -> np.ndarray:
    u = np.asarray(u, dtype=complex).ravel()
    if m is not None and len(u) != m:
        raise ShapeError(f"state has {len(u)} entries, expected {m}")
    if abs(np.vdot(u, u).real - 1) > tol:
        raise StateError(f"activity state must have unit norm, got {np.linalg.norm(u)}")
    return u


def expected_value_distribution(v, pi) -> float:
    """``E^v(pi) = sum_S v(S) pi(S)``."""
    v = as_game(v)
    return float(np.dot(v.values, check_distribution(pi, v.m)))


def expected_value_state(v, u) -> float:
    """``E^v(u) = sum_S v(S) |u_S|^2`` for a unit-norm state ``u``."""
    v = as_game(v)
    u = check_state(u, v.m)
    return float(np.dot(v.values, np.abs(u) ** 2))


def state_from_distribution(pi) -> np.ndarray:
    """The real state ``u_S = sqrt(pi_S)``."""
    return np.sqrt(check_distribution(pi)).astype(complex)


def sugeno_integral(v, t) -> float:
    """``max_S min(v_S, min_{i in S} t_i)`` with the empty meet taken as +inf."""
    v = as_game(v)
    t = _player_vector(t, v.n)
    meets = np.array([np.inf])
    for ti in t:
        meets = np.concatenate([meets, np.minimum(meets, ti)])
    return float(np.max(np.minimum(v.values, meets)))


def wave_eval(f, t: float) -> complex:
    """``sum_k f_k exp(2 pi i k t)``."""
    if isinstance(f, FormalPolynomial):
        ks = np.fromiter(f.coeffs.keys(), dtype=float, count=len(f.coeffs))
        cs = np.fromiter(f.coeffs.values(), dtype=complex, count=len(f.coeffs))
    else:
        cs = as_vector(f, complex)
        ks = np.arange(len(cs), dtype=float)
    # reduce k*t mod 1 first so large k keep full phase accuracy
    phase = np.mod(ks * t, 1.0)
    return complex(np.sum(cs * np.exp(2j * np.pi * phase)))
