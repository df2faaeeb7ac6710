"""Galois transforms and zero-dividends of games.

A game's coalition values, read as ascending coefficients, give the
polynomial function ``v(t) = sum_s v_s t^s``. Once normalized to be monic it
factors as ``(t + g_1) ... (t + g_k)``; the ``g_i`` (padded with ones to the
game length) form the Galois transform and ``z_i = -g_i`` are the
zero-dividends, i.e. the roots of the normalized function.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .core import GameValuation
from .errors import ConsistencyError, ConvergenceError, DomainError, NotNormalizableError

DEGREE_TOL = 1e-12
RESIDUAL_TOL = 1e-8
ZERO_TOL = 1e-8
MAX_DEGREE = 255
MAX_ITER = 200
STEP_TOL = 1e-12

_EPS = np.finfo(float).eps


@dataclass(frozen=True, eq=False)
class PolynomialFunction:
    """Ascending coefficients ``c_0 .. c_d`` of ``c_0 + c_1 t + ... + c_d t^d``."""

    coeffs: np.ndarray

    def __post_init__(self):
        c = np.array(self.coeffs, dtype=complex).ravel()
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)

    @property
    def degree(self) -> int:
        """Largest index whose coefficient exceeds ``DEGREE_TOL * max|c|``; -1 for zero."""
        mags = np.abs(self.coeffs)
        if not len(mags) or mags.max() == 0:
            return -1
        big = np.nonzero(mags > DEGREE_TOL * mags.max())[0]
        return int(big[-1])

    @property
    def leading(self) -> complex:
        d = self.degree
        return complex(self.coeffs[d]) if d >= 0 else 0j

    def __call__(self, t):
        return poly_eval(self, t)

    def __len__(self):
        return len(self.coeffs)


def as_polynomial_function(v) -> PolynomialFunction:
    if isinstance(v, PolynomialFunction):
        return v
    if isinstance(v, GameValuation):
        return PolynomialFunction(v.values)
    return PolynomialFunction(np.asarray(v))


@dataclass(frozen=True, eq=False)
class GaloisVector:
    """Galois parameters ``g_1..g_k`` followed by ``m - k`` padding ones."""

    g: np.ndarray
    k: int
    leading: complex = 1 + 0j

    @property
    def parameters(self) -> np.ndarray:
        return self.g[: self.k]


@dataclass(frozen=True, eq=False)
class ZeroDividends:
    z: np.ndarray
    residuals: np.ndarray

    def __len__(self):
        return len(self.z)


def poly_eval(p, t):
    """Horner evaluation of ``sum_k c_k t^k``; ``t`` may be an array."""
    c = as_polynomial_function(p).coeffs
    acc = np.zeros_like(np.asarray(t, dtype=complex))
    for ck in c[::-1]:
        acc = acc * t + ck
    return complex(acc) if acc.ndim == 0 else acc


def normalize_game(v) -> PolynomialFunction:
    """Divide by the leading coefficient, truncating to the effective degree."""
    p = as_polynomial_function(v)
    k = p.degree
    if k < 1:
        raise NotNormalizableError(
            "the zero polynomial cannot be normalized" if k < 0
            else "a constant polynomial has no zero-dividends"
        )
    c = np.array(p.coeffs[: k + 1]) / p.coeffs[k]
    c[k] = 1
    return PolynomialFunction(c)


# -- root finding -------------------------------------------------------------

def _canonical_sort(g: np.ndarray) -> np.ndarray:
    # ascending real part, ties (within 1e-9 of scale) broken by imaginary part
    if len(g) < 2:
        return g
    tol = 1e-9 * max(1.0, float(np.abs(g).max()))
    g = g[np.argsort(g.real, kind="stable")]
    out, group = [], [g[0]]
    for x in g[1:]:
        if x.real - group[0].real <= tol:
            group.append(x)
        else:
            out.extend(sorted(group, key=lambda z: z.imag))
            group = [x]
    out.extend(sorted(group, key=lambda z: z.imag))
    return np.array(out, dtype=complex)


def _backward_ok(desc: np.ndarray, z: np.ndarray, pz: np.ndarray) -> np.ndarray:
    # |p(z)| at the rounding floor of Horner evaluation
    scale = np.polyval(np.abs(desc), np.abs(z))
    return np.abs(pz) <= 2 * len(desc) * _EPS * scale


def _aberth(desc, z, max_iter):
    ddesc = np.polyder(desc)
    for it in range(max_iter):
        pz = np.polyval(desc, z)
        done = _backward_ok(desc, z, pz)
        dpz = np.polyval(ddesc, z)
        with np.errstate(divide="ignore", invalid="ignore"):
            newton = np.where(dpz != 0, pz / dpz, 0)
            diff = z[:, None] - z[None, :]
            np.fill_diagonal(diff, np.inf)
            diff[diff == 0] = _EPS
            repulse = np.sum(1.0 / diff, axis=1)
            w = newton / (1 - newton * repulse)
        w = np.where(done | ~np.isfinite(w), 0, w)
        z = z - w
        if np.all(np.abs(w) <= STEP_TOL * np.maximum(1.0, np.abs(z))):
            return z, True, it + 1
    return z, False, max_iter


def _durand_kerner(desc, z, max_iter):
    for it in range(max_iter):
        pz = np.polyval(desc, z)
        done = _backward_ok(desc, z, pz)
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, 1)
        diff[diff == 0] = _EPS
        w = pz / np.prod(diff, axis=1)
        w = np.where(done | ~np.isfinite(w), 0, w)
        z = z - w
        if np.all(np.abs(w) <= STEP_TOL * np.maximum(1.0, np.abs(z))):
            return z, True, it + 1
    return z, False, max_iter


def polynomial_roots(coeffs: Sequence[complex], max_iter: int = MAX_ITER) -> np.ndarray:
    """All roots of the monic polynomial with ascending ``coeffs``, with multiplicity.

    Exact zero roots are split off first; the rest run Aberth-Ehrlich from a
    perturbed circle of radius ``1 + max|c|``, falling back to Durand-Kerner.
    """
    c = np.asarray(coeffs, dtype=complex)
    k = len(c) - 1
    zeros = 0
    while zeros < k and c[zeros] == 0:
        zeros += 1
    q = c[zeros:]
    d = len(q) - 1
    roots = np.zeros(zeros, dtype=complex)
    if d == 0:
        return roots
    if d == 1:
        return np.concatenate([roots, [-q[0] / q[1]]])

    desc = q[::-1] / q[-1]
    radius = 1 + float(np.abs(desc[1:]).max())
    j = np.arange(d)
    z0 = radius * (1 + 0.01 * np.cos(3.1 * j)) * np.exp(1j * (2 * np.pi * j / d + 0.4))
    z, ok, _ = _aberth(desc, z0, max_iter)
    if not ok:
        z, ok, _ = _durand_kerner(desc, z, 5 * max_iter)
    if not ok:
        raise ConvergenceError(
            f"root iteration did not converge for degree {d}", best=np.concatenate([roots, z])
        )
    return np.concatenate([roots, z])


def reconstruct_from_dividends(g: Sequence[complex]) -> PolynomialFunction:
    """Expand ``(t + g_1) ... (t + g_k)``; coefficient ``k - j`` is ``e_j(g)``."""
    g = np.asarray(g, dtype=complex).ravel()
    if len(g) < 1:
        raise DomainError("need at least one parameter")
    c = np.array([1 + 0j])
    for gi in g:
        nxt = np.zeros(len(c) + 1, dtype=complex)
        nxt[1:] += c
        nxt[:-1] += gi * c
        c = nxt
    return PolynomialFunction(c)


def find_roots(p) -> np.ndarray:
    """Galois parameters ``g`` with ``p(t) = prod (t + g_i)`` for monic ``p``.

    Returned in canonical order. Raises :class:`ConvergenceError` (carrying
    the best iterate) if the iteration stalls or some root ``z = -g_i``
    leaves ``|p(z)| > RESIDUAL_TOL * sum_k |c_k| |z|^k``.
    """
    p = as_polynomial_function(p)
    k = p.degree
    if k < 1:
        raise DomainError(f"need degree >= 1, got {k}")
    if k > MAX_DEGREE:
        raise DomainError(f"degree {k} exceeds the cap {MAX_DEGREE}")
    c = p.coeffs[: k + 1]
    if abs(c[k] - 1) > DEGREE_TOL:
        raise DomainError(f"polynomial is not monic (leading coefficient {c[k]})")
    c = c.copy()
    c[k] = 1
    g = _canonical_sort(-polynomial_roots(c))
    z = -g
    scale = poly_eval(np.abs(c), np.abs(z)).real
    resid = np.abs(poly_eval(c, z))
    scaled = np.divide(resid, scale, out=np.zeros_like(resid), where=scale > 0)
    if scaled.max() > RESIDUAL_TOL:
        raise ConvergenceError(f"scaled root residual {scaled.max():.3g} above tolerance", best=g)
    return g


def galois_transform(v) -> GaloisVector:
    """Galois parameters of the monic-ized ``v``, padded with ones to ``len(v)``.

    A non-monic input is divided by its leading coefficient first; that
    coefficient is kept on the result as ``leading``.
    """
    p = as_polynomial_function(v)
    monic = normalize_game(p)
    k = monic.degree
    params = find_roots(monic)
    m = len(p)
    g = np.ones(m, dtype=complex)
    g[:k] = params
    return GaloisVector(g, k, p.leading)


def zero_dividends(v) -> ZeroDividends:
    monic = normalize_game(v)
    gv = galois_transform(monic)
    z = -gv.parameters
    return ZeroDividends(z, np.abs(poly_eval(monic, z)))


def is_zero_normalized(v) -> bool:
    """``v(empty) == 0``, cross-checked against a vanishing Galois parameter."""
    p = as_polynomial_function(v)
    if p.degree < 1:
        raise NotNormalizableError("degree must be >= 1")
    exact = p.coeffs[0] == 0
    by_roots = bool(np.abs(galois_transform(p).parameters).min() < ZERO_TOL)
    if exact != by_roots:
        raise ConsistencyError(
            f"v_0 = {p.coeffs[0]} but smallest Galois parameter test says {by_roots}"
        )
    return bool(exact)

