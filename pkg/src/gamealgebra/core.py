"""Coalition indexing, formal polynomials and game valuations.

Coalitions of the players ``1..n`` are labelled by natural numbers
``s < 2**n``; player ``i`` belongs to coalition ``s`` exactly when bit
``i - 1`` of ``s`` is set. The same label can be read as a subset or as an
LSB-first bitstring, and every module in the package uses this convention.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import DomainError, IndexRangeError, ShapeError

MAX_PLAYERS = 24


def check_players(n: int) -> int:
    if not isinstance(n, (int, np.integer)) or isinstance(n, bool):
        raise DomainError(f"player count must be an integer, got {n!r}")
    n = int(n)
    if not 1 <= n <= MAX_PLAYERS:
        raise DomainError(f"player count must lie in 1..{MAX_PLAYERS}, got {n}")
    return n


def players_for_length(m: int) -> int:
    """Return ``n`` with ``2**n == m`` or raise :class:`ShapeError`."""
    if m < 2 or m & (m - 1):
        raise ShapeError(f"length {m} is not a power of two >= 2")
    return check_players(m.bit_length() - 1)


# -- coalition index views ---------------------------------------------------

def index_views(s: int, n: int) -> tuple[frozenset[int], tuple[int, ...]]:
    """Return the subset and LSB-first bitstring labelled by ``s``.

    >>> index_views(5, 3)
    (frozenset({1, 3}), (1, 0, 1))
    """
    n = check_players(n)
    if not 0 <= s < 1 << n:
        raise IndexRangeError(f"coalition index {s} outside [0, {1 << n})")
    bits = tuple((s >> i) & 1 for i in range(n))
    subset = frozenset(i + 1 for i, b in enumerate(bits) if b)
    return subset, bits


def index_from_subset(players: Iterable[int], n: int) -> int:
    n = check_players(n)
    s = 0
    for i in players:
        if not 1 <= i <= n:
            raise IndexRangeError(f"player {i} outside 1..{n}")
        s |= 1 << (i - 1)
    return s


def index_from_bits(bits: Sequence[int]) -> int:
    return sum(int(b) << i for i, b in enumerate(bits))


def popcount(s: int) -> int:
    return bin(s).count("1")


@dataclass(frozen=True)
class CoalitionIndex:
    s: int
    n: int

    def __post_init__(self):
        index_views(self.s, self.n)

    @classmethod
    def from_subset(cls, players: Iterable[int], n: int) -> CoalitionIndex:
        return cls(index_from_subset(players, n), n)

    @classmethod
    def from_bits(cls, bits: Sequence[int]) -> CoalitionIndex:
        return cls(index_from_bits(bits), len(bits))

    @property
    def subset(self) -> frozenset[int]:
        return index_views(self.s, self.n)[0]

    @property
    def bits(self) -> tuple[int, ...]:
        return index_views(self.s, self.n)[1]

    def __int__(self):
        return self.s


# -- formal polynomials ------------------------------------------------------

def _merge_ground(a: int, b: int) -> int:
    if a and b and a != b:
        raise ShapeError(f"incompatible ground sizes {a} and {b}")
    return a or b


@dataclass(frozen=True, eq=False)
class FormalPolynomial:
    """A finitely supported map from natural indices to complex coefficients.

    ``ground`` is the size of the index space (``2**n`` for coalition
    indexed polynomials) or 0 for the unbounded natural-number index set.
    Only exact zeros are dropped from the support.
    """

    coeffs: Mapping[int, complex] = field(default_factory=dict)
    ground: int = 0

    def __post_init__(self):
        clean = {}
        for k, c in dict(self.coeffs).items():
            k = int(k)
            if k < 0 or (self.ground and k >= self.ground):
                raise IndexRangeError(f"index {k} outside ground of size {self.ground}")
            c = complex(c)
            if c != 0:
                clean[k] = c
        object.__setattr__(self, "coeffs", dict(sorted(clean.items())))

    @classmethod
    def monomial(cls, k: int, coeff: complex = 1, ground: int = 0) -> FormalPolynomial:
        return cls({k: coeff}, ground)

    @classmethod
    def from_dense(cls, values: Iterable[complex], ground: int | None = None) -> FormalPolynomial:
        values = list(values)
        return cls(dict(enumerate(values)), len(values) if ground is None else ground)

    def to_dense(self, size: int | None = None) -> np.ndarray:
        if size is None:
            size = self.ground or (max(self.coeffs) + 1 if self.coeffs else 0)
        out = np.zeros(size, dtype=complex)
        for k, c in self.coeffs.items():
            if k >= size:
                raise ShapeError(f"index {k} does not fit a dense vector of length {size}")
            out[k] = c
        return out

    @property
    def support(self) -> frozenset[int]:
        return frozenset(self.coeffs)

    def __getitem__(self, k: int) -> complex:
        return self.coeffs.get(k, 0j)

    def __eq__(self, other):
        if not isinstance(other, FormalPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other):
        return linear_combine([(1, self), (1, other)])

    def __sub__(self, other):
        return linear_combine([(1, self), (-1, other)])

    def __neg__(self):
        return linear_combine([(-1, self)])

    def __rmul__(self, scalar):
        return linear_combine([(scalar, self)])

    def norm(self) -> float:
        return norm(self)


def linear_combine(terms: Iterable[tuple[complex, FormalPolynomial]]) -> FormalPolynomial:
    """Coefficient-wise linear combination ``sum(a * f for a, f in terms)``."""
    ground = 0
    acc: dict[int, complex] = {}
    for scalar, f in terms:
        ground = _merge_ground(ground, f.ground)
        for k, c in f.coeffs.items():
            acc[k] = acc.get(k, 0j) + complex(scalar) * c
    return FormalPolynomial(acc, ground)


def hermitian_inner(f: FormalPolynomial, g: FormalPolynomial) -> complex:
    """``(f|g) = sum_x f_x * conj(g_x)``, linear in ``f``, conjugate-linear in ``g``."""
    _merge_ground(f.ground, g.ground)
    small, large = (f, g) if len(f.coeffs) <= len(g.coeffs) else (g, f)
    total = 0j
    for k in small.coeffs:
        if k in large.coeffs:
            total += f.coeffs[k] * g.coeffs[k].conjugate()
    return total


def norm(f: FormalPolynomial) -> float:
    return math.sqrt(sum(abs(c) ** 2 for c in f.coeffs.values()))


# -- game valuations ---------------------------------------------------------

@dataclass(frozen=True, eq=False)
class GameValuation:
    """Dense coalition values ``v_0 .. v_{2**n - 1}`` of an ``n``-player game."""

    n: int
    values: np.ndarray

    def __post_init__(self):
        n = check_players(self.n)
        values = np.array(self.values, dtype=float if np.isrealobj(self.values) else complex)
        if values.shape != (1 << n,):
            raise ShapeError(f"a {n}-player game needs {1 << n} values, got shape {values.shape}")
        values.setflags(write=False)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "values", values)

    @classmethod
    def from_values(cls, values) -> GameValuation:
        values = np.asarray(values)
        if values.ndim != 1:
            raise ShapeError("game values must be one-dimensional")
        return cls(players_for_length(len(values)), values)

    @property
    def m(self) -> int:
        return 1 << self.n

    def __len__(self):
        return self.m

    def __getitem__(self, s):
        return self.values[s]

    def value(self, coalition: Iterable[int]) -> float:
        return self.values[index_from_subset(coalition, self.n)]

    def __eq__(self, other):
        if not isinstance(other, GameValuation):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.values, other.values)

    def __hash__(self):
        return hash((self.n, self.values.tobytes()))

    def to_polynomial(self) -> FormalPolynomial:
        """The characteristic polynomial ``sum_S v_S x_S``."""
        return FormalPolynomial.from_dense(self.values, self.m)


def as_game(v) -> GameValuation:
    if isinstance(v, GameValuation):
        return v
    if isinstance(v, FormalPolynomial):
        return GameValuation.from_values(v.to_dense())
    return GameValuation.from_values(v)


def as_vector(v, dtype=None) -> np.ndarray:
    """Dense 1-D array view of a game, polynomial or array-like."""
    if isinstance(v, GameValuation):
        out = v.values
    elif isinstance(v, FormalPolynomial):
        out = v.to_dense()
    else:
        out = np.asarray(v)
    if out.ndim != 1:
        raise ShapeError(f"expected a vector, got shape {out.shape}")
    if dtype is not None:
        out = out.astype(dtype, copy=False)
    return out

