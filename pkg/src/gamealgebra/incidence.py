"""Incidence-algebra products, the zeta/Moebius pair and Boolean lattice products."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Optional

import numpy as np

from .core import FormalPolynomial, GameValuation, as_game, check_players
from .errors import ConfigurationError, ShapeError

Triple = Callable[[int, int, int], bool]


@dataclass(frozen=True)
class IncidenceFunction:
    """A 0/1 function ``m(x, y, z)`` on index triples.

    ``predicate`` alone is enough when the product is asked for a bounded
    index range. ``fiber(x)`` enumerates ``{(y, z) : m(x, y, z) = 1}`` and
    ``targets(y, z)`` enumerates ``{x : m(x, y, z) = 1}``; either one lets the
    product avoid scanning the predicate.
    """

    predicate: Triple
    fiber: Optional[Callable[[int], Iterable[tuple[int, int]]]] = None
    targets: Optional[Callable[[int, int], Iterable[int]]] = None

    def __call__(self, x: int, y: int, z: int) -> int:
        return int(bool(self.predicate(x, y, z)))


def convolution_incidence() -> IncidenceFunction:
    """Standard polynomial multiplication: ``m(k, i, j) = 1`` iff ``k = i + j``."""
    return IncidenceFunction(
        predicate=lambda k, i, j: k == i + j,
        fiber=lambda k: ((i, k - i) for i in range(k + 1)),
        targets=lambda i, j: (i + j,),
    )


def monoid_incidence(op: Callable[[int, int], int]) -> IncidenceFunction:
    """``m(x, y, z) = 1`` iff ``x = op(y, z)`` for a monoid operation on indices."""
    return IncidenceFunction(
        predicate=lambda x, y, z: x == op(y, z),
        targets=lambda y, z: (op(y, z),),
    )


def subset_leq(a: int, b: int) -> bool:
    """Coalition order ``A <= B`` iff ``A`` is a subset of ``B``."""
    return a & b == a


def _submasks(x: int):
    y = x
    while True:
        yield y
        if y == 0:
            return
        y = (y - 1) & x


def zeta_incidence() -> IncidenceFunction:
    """``zeta(x, y, z) = 1`` iff ``x >= y = z`` in the subset order."""
    return IncidenceFunction(
        predicate=lambda x, y, z: y == z and subset_leq(y, x),
        fiber=lambda x: ((y, y) for y in _submasks(x)),
    )


def incidence_product(
    f: FormalPolynomial,
    g: FormalPolynomial,
    m: IncidenceFunction,
    indices: Iterable[int] | None = None,
) -> FormalPolynomial:
    """``p_x = sum_{(y, z) in m(x)} f_y g_z``.

    Output indices are taken from ``indices`` if given, else from the shared
    bounded ground. With neither, ``m.targets`` must be available.
    """
    if f.ground and g.ground and f.ground != g.ground:
        raise ShapeError(f"incompatible ground sizes {f.ground} and {g.ground}")
    ground = f.ground or g.ground
    if indices is None and ground:
        indices = range(ground)

    if indices is None:
        if m.targets is None:
            raise ConfigurationError(
                "unbounded index space: supply indices or an incidence function with targets"
            )
        acc: dict[int, complex] = {}
        for y, fy in f.coeffs.items():
            for z, gz in g.coeffs.items():
                for x in m.targets(y, z):
                    acc[x] = acc.get(x, 0j) + fy * gz
        return FormalPolynomial(acc, ground)

    acc = {}
    for x in indices:
        total = 0j
        if m.fiber is not None:
            for y, z in m.fiber(x):
                fy = f.coeffs.get(y)
                if fy is not None:
                    gz = g.coeffs.get(z)
                    if gz is not None:
                        total += fy * gz
        else:
            for y, fy in f.coeffs.items():
                for z, gz in g.coeffs.items():
                    if m.predicate(x, y, z):
                        total += fy * gz
        acc[x] = total
    return FormalPolynomial(acc, ground)


# -- zeta and Moebius over the subset lattice ---------------------------------

def _sweep(values: np.ndarray, n: int, sign: int, upward: bool = True) -> np.ndarray:
    # Yates-style subset-sum sweep, one player at a time; O(n 2^n).
    out = np.array(values, dtype=np.result_type(values, float))
    for i in range(n):
        block = out.reshape(-1, 2, 1 << i)
        if upward:
            block[:, 1, :] += sign * block[:, 0, :]
        else:
            block[:, 0, :] += sign * block[:, 1, :]
    return out


def zeta_transform(f) -> GameValuation:
    """Subset sums: ``out_B = sum_{A subset of B} f_A``."""
    f = as_game(f)
    return GameValuation(f.n, _sweep(f.values, f.n, +1))


def mobius_transform(f) -> GameValuation:
    """Harsanyi dividends ``w`` with ``f_B = sum_{A subset of B} w_A``."""
    f = as_game(f)
    return GameValuation(f.n, _sweep(f.values, f.n, -1))


def superset_zeta(f) -> GameValuation:
    """Superset sums: ``out_B = sum_{A superset of B} f_A``."""
    f = as_game(f)
    return GameValuation(f.n, _sweep(f.values, f.n, +1, upward=False))


def superset_mobius(f) -> GameValuation:
    f = as_game(f)
    return GameValuation(f.n, _sweep(f.values, f.n, -1, upward=False))


# -- join / meet products -----------------------------------------------------

def _lattice_args(p: FormalPolynomial, q: FormalPolynomial, n: int) -> int:
    n = check_players(n)
    m = 1 << n
    for h in (p, q):
        if h.ground and h.ground != m:
            raise ShapeError(f"polynomial ground {h.ground} does not match 2**{n} = {m}")
        if h.coeffs and max(h.coeffs) >= m:
            raise ShapeError(f"index {max(h.coeffs)} is not a coalition of {n} players")
    return m


def _lattice_product(p, q, n, op, dense_route):
    m = _lattice_args(p, q, n)
    # Full-support inputs go through the transform identity; sparse ones pair supports.
    if len(p.coeffs) * len(q.coeffs) > 4 * n * m:
        zp = dense_route[0](GameValuation(n, p.to_dense(m))).values
        zq = dense_route[0](GameValuation(n, q.to_dense(m))).values
        out = dense_route[1](GameValuation(n, zp * zq)).values
        return FormalPolynomial.from_dense(out, m)
    acc: dict[int, complex] = {}
    for a, pa in p.coeffs.items():
        for b, qb in q.coeffs.items():
            c = op(a, b)
            acc[c] = acc.get(c, 0j) + pa * qb
    return FormalPolynomial(acc, m)


def join_product(p: FormalPolynomial, q: FormalPolynomial, n: int) -> FormalPolynomial:
    """``(p v q)_C = sum_{A u B = C} p_A q_B``; neutral element ``x_{}``."""
    return _lattice_product(p, q, n, lambda a, b: a | b, (zeta_transform, mobius_transform))


def meet_product(p: FormalPolynomial, q: FormalPolynomial, n: int) -> FormalPolynomial:
    """``(p ^ q)_C = sum_{A n B = C} p_A q_B``; neutral element ``x_N``."""
    return _lattice_product(p, q, n, lambda a, b: a & b, (superset_zeta, superset_mobius))


def all_coalitions(n: int) -> FormalPolynomial:
    """``q = sum_{A subset of N} x_A``."""
    m = 1 << check_players(n)
    return FormalPolynomial.from_dense(np.ones(m), m)
