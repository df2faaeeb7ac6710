"""Interaction games, hermitian lifts, measurements and tensor states."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Optional

import numpy as np

from .core import FormalPolynomial, as_game, as_vector
from .errors import ConsistencyError, ConvergenceError, HermitianError, ShapeError

HERMITIAN_TOL = 1e-10
JACOBI_TOL = 1e-12
JACOBI_MAX_SWEEPS = 50
AGREEMENT_TOL = 1e-8
RANK_TOL = 1e-9


def _square(a, name: str = "matrix", dtype=None) -> np.ndarray:
    a = np.asarray(a, dtype=dtype)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ShapeError(f"{name} must be square, got shape {a.shape}")
    return a


def _same_shape(a: np.ndarray, b: np.ndarray):
    if a.shape != b.shape:
        raise ShapeError(f"dimension mismatch: {a.shape} vs {b.shape}")


def _real(a, name: str) -> np.ndarray:
    a = _square(a, name)
    if np.iscomplexobj(a):
        if np.any(a.imag != 0):
            raise ShapeError(f"{name} must be real")
        a = a.real
    return a.astype(float)


def game_value(V, A) -> float:
    """``chi^V(A) = sum_ij V_ij A_ij``."""
    V, A = _real(V, "interaction game"), _real(A, "interaction instance")
    _same_shape(V, A)
    return float(np.sum(V * A))


def symmetry_split(A) -> tuple[np.ndarray, np.ndarray]:
    """``A = A+ + A-`` with ``A+`` symmetric and ``A-`` skew-symmetric."""
    A = _real(A, "interaction instance")
    # both halves computed directly so the symmetries hold bit for bit
    return (A + A.T) / 2, (A - A.T) / 2


def hermitian_lift(A) -> np.ndarray:
    """``A^ = A+ + i A-``."""
    plus, minus = symmetry_split(A)
    return plus + 1j * minus


def check_hermitian(C, tol: float = HERMITIAN_TOL) -> np.ndarray:
    C = _square(C, "hermitian matrix", complex)
    dev = np.abs(C - C.conj().T).max() if C.size else 0.0
    if dev >= tol:
        raise HermitianError(f"matrix is not self-adjoint (max |C - C*| = {dev:.3g})")
    return C


def lift_inverse(C) -> np.ndarray:
    """Recover the real ``A = Re(C) + Im(C)`` from its hermitian lift."""
    C = check_hermitian(C)
    return C.real + C.imag


def trace_inner(C, D) -> complex:
    """``(C|D) = sum_ij C_ij conj(D_ij) = tr(D* C)``."""
    C, D = _square(C, dtype=complex), _square(D, dtype=complex)
    _same_shape(C, D)
    return complex(np.sum(C * D.conj()))


# -- spectral decomposition -------------------------------------------------

@dataclass(frozen=True, eq=False)
class SpectralDecomposition:
    """Eigenpairs ``C = sum_k lambda_k u_k u_k*``, eigenvalues descending."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray  # column k pairs with eigenvalues[k]

    @property
    def pairs(self) -> list[tuple[float, np.ndarray]]:
        return [(float(l), self.eigenvectors[:, k]) for k, l in enumerate(self.eigenvalues)]

    def reconstruct(self) -> np.ndarray:
        U = self.eigenvectors
        return (U * self.eigenvalues) @ U.conj().T

    def __len__(self):
        return len(self.eigenvalues)


def _off_norm(C: np.ndarray) -> float:
    off = C - np.diag(np.diag(C))
    return float(np.linalg.norm(off))


def spectral_decompose(C) -> SpectralDecomposition:
    """Cyclic complex Jacobi rotations on a self-adjoint matrix.

    Each pivot ``(p, q)`` is first phase-rotated so ``C_pq`` is real, then
    annihilated by a real plane rotation. Sweeps stop once the off-diagonal
    Frobenius mass drops below ``JACOBI_TOL`` (relative to ``||C||_F``, floor 1).
    """
    C = check_hermitian(C).copy()
    n = C.shape[0]
    V = np.eye(n, dtype=complex)
    target = JACOBI_TOL * max(1.0, float(np.linalg.norm(C)))
    negligible = 1e-6 * target * np.finfo(float).eps
    for _ in range(JACOBI_MAX_SWEEPS + 1):
        if _off_norm(C) < target:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                c_pq = C[p, q]
                r = abs(c_pq)
                if r <= negligible:
                    continue
                phase = c_pq / r
                a, b = C[p, p].real, C[q, q].real
                theta = 0.5 * math.atan2(2 * r, a - b)
                cs, sn = math.cos(theta), math.sin(theta)
                # G = diag(1, conj(phase)) @ [[cs, -sn], [sn, cs]]
                G = np.array([[cs, -sn], [sn * phase.conjugate(), cs * phase.conjugate()]])
                idx = [p, q]
                C[:, idx] = C[:, idx] @ G
                C[idx, :] = G.conj().T @ C[idx, :]
                C[p, q] = C[q, p] = 0
                V[:, idx] = V[:, idx] @ G
    else:
        raise ConvergenceError(
            f"Jacobi did not converge in {JACOBI_MAX_SWEEPS} sweeps",
            best=(np.diag(C).real.copy(), V),
        )
    lam = np.diag(C).real
    order = np.argsort(-lam, kind="stable")
    lam, V = lam[order], V[:, order]
    for k in range(n):
        col = V[:, k]
        j = int(np.argmax(np.abs(col)))
        V[:, k] = col * (abs(col[j]) / col[j])
        V[j, k] = abs(col[j])
    return SpectralDecomposition(lam, V)


# -- measurements -------------------------------------------------------------

def heisenberg_measure(G, u) -> float:
    """``gamma(u) = u* G u`` for self-adjoint ``G``; quadratic in ``u``."""
    G = check_hermitian(G)
    u = as_vector(u, complex)
    if len(u) != G.shape[0]:
        raise ShapeError(f"state of length {len(u)} does not fit a {G.shape[0]}x{G.shape[0]} operator")
    return float(np.vdot(u, G @ u).real)


def rank1_measure(w, u) -> float:
    """``mu_w(u) = (w w* | u u*) = |w* u|^2``."""
    w, u = as_vector(w, complex), as_vector(u, complex)
    if w.shape != u.shape:
        raise ShapeError(f"vector lengths differ: {len(w)} vs {len(u)}")
    return float(abs(np.vdot(w, u)) ** 2)


class MeasurementRoutes(NamedTuple):
    direct: float
    lifted: float
    spectral: float


def measurement_routes(M, A) -> MeasurementRoutes:
    """``mu(A)`` as ``(M|A)``, as ``(M^|A^)`` and through both spectral expansions."""
    M, A = _real(M, "measurement matrix"), _real(A, "interaction instance")
    _same_shape(M, A)
    direct = float(np.sum(M * A))
    M_hat, A_hat = hermitian_lift(M), hermitian_lift(A)
    lifted = trace_inner(M_hat, A_hat).real
    sm, sa = spectral_decompose(M_hat), spectral_decompose(A_hat)
    spectral = 0.0
    for lam, u in sa.pairs:
        for delta, w in sm.pairs:
            spectral += lam * delta * rank1_measure(w, u)
    return MeasurementRoutes(direct, lifted, spectral)


def measurement_expand(M, A) -> float:
    """``mu(A)``; raises :class:`ConsistencyError` if the three routes disagree by > 1e-8."""
    routes = measurement_routes(M, A)
    spread = max(routes) - min(routes)
    if spread > AGREEMENT_TOL * max(1.0, max(abs(r) for r in routes)):
        raise ConsistencyError(f"measurement routes disagree: {routes}")
    return routes.direct


def diag_game(v) -> np.ndarray:
    """The diagonal interaction matrix ``V_SS = v(S)``."""
    return np.diag(as_game(v).values.astype(float))


# -- tensor products and entanglement -----------------------------------------

def tensor_product(f: FormalPolynomial, g: FormalPolynomial) -> FormalPolynomial:
    """``f (x) g`` with ``x (x) y`` stored at index ``x + |X| y``.

    For coalition polynomials this is bitstring concatenation: the bits of
    ``x`` come first (least significant), followed by those of ``y``.
    """
    nx = f.ground
    if not nx:
        raise ShapeError("the left factor needs a bounded ground to place the right factor")
    return FormalPolynomial(
        {x + nx * y: fx * gy for x, fx in f.coeffs.items() for y, gy in g.coeffs.items()},
        nx * g.ground,
    )


def coefficient_matrix(h, dims: tuple[int, int]) -> np.ndarray:
    """Reshape ``h`` over ``X (x) Y`` into the ``|X| x |Y|`` matrix ``M[x, y]``."""
    nx, ny = (int(d) for d in dims)
    if nx < 1 or ny < 1:
        raise ShapeError(f"dimensions must be positive, got {dims}")
    if isinstance(h, FormalPolynomial):
        if h.ground and h.ground != nx * ny:
            raise ShapeError(f"ground {h.ground} does not factor as {nx} x {ny}")
        vec = h.to_dense(nx * ny)
    else:
        vec = as_vector(h, complex)
        if len(vec) != nx * ny:
            raise ShapeError(f"length {len(vec)} does not factor as {nx} x {ny}")
    return vec.reshape(ny, nx).T


def max_minor(M: np.ndarray) -> float:
    """Largest ``|M_ij M_kl - M_il M_kj|`` over all 2x2 minors."""
    nx = M.shape[0]
    worst = 0.0
    for i in range(nx - 1):
        rest = M[i + 1 :]
        minors = M[i][None, :, None] * rest[:, None, :] - M[i][None, None, :] * rest[:, :, None]
        if minors.size:
            worst = max(worst, float(np.abs(minors).max()))
    return worst


class ProductTest(NamedTuple):
    is_product: bool
    factors: Optional[tuple[FormalPolynomial, FormalPolynomial]]
    max_minor: float


def is_product_state(h, dims: tuple[int, int]) -> ProductTest:
    """Decide whether ``h = f (x) g`` by the 2x2 minors of its coefficient matrix.

    The threshold is ``RANK_TOL * max|h|^2``. On success ``f`` is the column of
    largest norm and ``g`` the matching row scaled to 1 at that column.
    """
    M = coefficient_matrix(h, dims)
    nx, ny = M.shape
    scale = float(np.abs(M).max()) if M.size else 0.0
    worst = max_minor(M)
    if worst >= RANK_TOL * scale**2:
        return ProductTest(False, None, worst)
    if scale == 0:
        zero = FormalPolynomial({}, nx), FormalPolynomial({}, ny)
        return ProductTest(True, zero, worst)
    col = int(np.argmax(np.linalg.norm(M, axis=0)))
    f = M[:, col]
    row = int(np.argmax(np.abs(f)))
    g = M[row, :] / M[row, col]
    g[col] = 1
    return ProductTest(
        True, (FormalPolynomial.from_dense(f, nx), FormalPolynomial.from_dense(g, ny)), worst
    )
