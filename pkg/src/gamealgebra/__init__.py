"""Games as formal polynomials: incidence algebra, Nim, Fourier and Galois
transforms, extensions and interaction games."""

__version__ = "0.1.0"

from .core import (
    MAX_PLAYERS,
    CoalitionIndex,
    FormalPolynomial,
    GameValuation,
    hermitian_inner,
    index_views,
    linear_combine,
)
from .errors import AlgebraError
from .incidence import (
    IncidenceFunction,
    incidence_product,
    join_product,
    meet_product,
    mobius_transform,
    zeta_transform,
)
from .nim import nim_characteristic, nim_winner, nim_winning_move, xor_product
from .transforms import dft, hadamard, idft, omega_polynomial, parity_transform, qft_basis
from .galois import (
    PolynomialFunction,
    find_roots,
    galois_transform,
    is_zero_normalized,
    normalize_game,
    poly_eval,
    reconstruct_from_dividends,
    zero_dividends,
)
from .extensions import (
    expected_value_distribution,
    expected_value_state,
    independent_activity_value,
    multilinear_extension,
    state_from_distribution,
    sugeno_integral,
    wave_eval,
)
from .interaction import (
    diag_game,
    game_value,
    heisenberg_measure,
    hermitian_lift,
    is_product_state,
    lift_inverse,
    measurement_expand,
    rank1_measure,
    spectral_decompose,
    symmetry_split,
    tensor_product,
    trace_inner,
)
