"""XOR polynomial algebra and Nim.

Under ``x^i (.) x^j = x^(i xor j)`` a Nim position with piles ``n_1..n_k``
has the characteristic monomial ``x^(n_1 xor ... xor n_k)``; the player to
move loses (normal play) exactly when that monomial is ``x^0``.
"""

from __future__ import annotations

import enum
from functools import reduce
from operator import xor
from typing import NamedTuple, Optional, Sequence

from .core import FormalPolynomial
from .errors import DomainError, ShapeError


def xor_product(f: FormalPolynomial, g: FormalPolynomial) -> FormalPolynomial:
    """``(f (.) g)_n = sum_{i xor j = n} f_i g_j``."""
    if f.ground and g.ground and f.ground != g.ground:
        raise ShapeError(f"incompatible ground sizes {f.ground} and {g.ground}")
    ground = f.ground or g.ground
    acc: dict[int, complex] = {}
    for i, fi in f.coeffs.items():
        for j, gj in g.coeffs.items():
            k = i ^ j
            acc[k] = acc.get(k, 0j) + fi * gj
    if ground and acc and max(acc) >= ground:
        # xor of two indices below a non power-of-two ground can escape it
        ground = 1 << max(acc).bit_length()
    return FormalPolynomial(acc, ground)


class Winner(enum.Enum):
    FIRST = "first"
    SECOND = "second"


class NimMove(NamedTuple):
    pile: int  # 1-based
    new_size: int


def _piles(position: Sequence[int]) -> tuple[int, ...]:
    piles = tuple(int(p) for p in position)
    if any(p < 0 for p in piles):
        raise DomainError(f"pile sizes must be non-negative, got {piles}")
    return piles


def nim_characteristic(position: Sequence[int]) -> int:
    return reduce(xor, _piles(position), 0)


def nim_winner(position: Sequence[int]) -> Winner:
    return Winner.SECOND if nim_characteristic(position) == 0 else Winner.FIRST


def nim_winning_move(position: Sequence[int]) -> Optional[NimMove]:
    """A move to a position of characteristic 0, or ``None`` if there is none.

    Piles are scanned from the first; the first pile that admits a winning
    reduction is used.
    """
    piles = _piles(position)
    x = reduce(xor, piles, 0)
    if x == 0:
        return None
    for idx, size in enumerate(piles):
        target = size ^ x
        if target < size:
            return NimMove(idx + 1, target)
    raise AssertionError("unreachable: some pile has the top bit of the nim-sum")


def apply_move(position: Sequence[int], move: NimMove) -> tuple[int, ...]:
    piles = list(_piles(position))
    i = move.pile - 1
    if not 0 <= i < len(piles) or not 0 <= move.new_size < piles[i]:
        raise DomainError(f"illegal move {move} in position {tuple(piles)}")
    piles[i] = move.new_size
    return tuple(piles)


def legal_moves(position: Sequence[int]) -> list[NimMove]:
    piles = _piles(position)
    return [NimMove(i + 1, s) for i, size in enumerate(piles) for s in range(size)]
