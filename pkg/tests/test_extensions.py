import numpy as np
import pytest

from gamealgebra.core import FormalPolynomial, GameValuation
from gamealgebra.errors import DomainError, ShapeError, StateError
from gamealgebra.extensions import (
    expected_value_distribution,
    expected_value_state,
    independent_activity_value,
    multilinear_extension,
    state_from_distribution,
    sugeno_integral,
    wave_eval,
)
from gamealgebra.transforms import dft


def owen_oracle(v, t):
    n = len(t)
    total = 0.0
    for s in range(2**n):
        w = 1.0
        for i in range(n):
            w *= t[i] if s >> i & 1 else 1 - t[i]
        total += v[s] * w
    return total


def test_mle_examples():
    assert multilinear_extension(GameValuation(2, [0, 0, 0, 1]), [0.5, 0.5]) == 0.25
    a, b, p = 1.5, -2.0, 0.3
    assert multilinear_extension(GameValuation(1, [a, b]), [p]) == pytest.approx(a * (1 - p) + b * p)
    with pytest.raises(ShapeError):
        multilinear_extension(GameValuation(2, [0, 0, 0, 1]), [0.5])


def test_mle_corners(rng):
    for n in range(1, 7):
        v = GameValuation(n, rng.normal(size=2**n))
        for s in range(2**n):
            t = [(s >> i) & 1 for i in range(n)]
            assert multilinear_extension(v, t) == v.values[s]


def test_mle_matches_oracle(rng):
    for n in range(1, 6):
        v = rng.normal(size=2**n)
        t = rng.uniform(size=n)
        assert multilinear_extension(GameValuation(n, v), t) == pytest.approx(owen_oracle(v, t), abs=1e-12)


def test_mle_affine_in_each_coordinate(rng):
    for _ in range(20):
        n = rng.integers(1, 6)
        v = GameValuation(n, rng.normal(size=2**n))
        t = rng.uniform(size=n)
        i = rng.integers(n)
        a, b = t.copy(), t.copy()
        a[i], b[i] = 0.1, 0.9
        mid = 0.3 * a + 0.7 * b
        lhs = multilinear_extension(v, mid)
        rhs = 0.3 * multilinear_extension(v, a) + 0.7 * multilinear_extension(v, b)
        assert abs(lhs - rhs) < 1e-10


def test_independent_activity_examples():
    v = GameValuation(2, [0, 1, 1, 3])
    assert independent_activity_value(v, [0.5, 0.5]) == 1.75
    assert independent_activity_value(v, [0, 0]) == 0
    assert independent_activity_value(v, [1, 1]) == 5
    with pytest.raises(DomainError):
        independent_activity_value(v, [1.5, 0])
    with pytest.raises(DomainError):
        independent_activity_value(v, [-0.1, 0])


def test_expected_value_distribution():
    v = GameValuation(2, [1, 2, 3, 4])
    assert expected_value_distribution(v, [0.25] * 4) == 2.5
    assert expected_value_distribution(v, [0, 0, 1, 0]) == 3
    with pytest.raises(DomainError):
        expected_value_distribution(v, [0.5, 0.5, 0.5, -0.5])
    with pytest.raises(DomainError):
        expected_value_distribution(v, [0.3, 0.3, 0.3, 0.3])
    with pytest.raises(ShapeError):
        expected_value_distribution(v, [1])


def test_expected_value_state():
    v = GameValuation(2, [1, 2, 3, 4])
    assert expected_value_state(v, [0.5, 0.5, 0.5, 0.5]) == 2.5
    assert expected_value_state(v, [0, 1j, 0, 0]) == 2
    with pytest.raises(StateError):
        expected_value_state(v, [1, 1, 0, 0])
    # StateError is a DomainError
    with pytest.raises(DomainError):
        expected_value_state(v, [0.5, 0.5, 0.5, 0.5 + 1e-6])


def test_state_from_distribution(rng):
    assert np.allclose(state_from_distribution([0.25] * 4), [0.5] * 4)
    assert np.array_equal(state_from_distribution([0, 1, 0, 0]), [0, 1, 0, 0])
    for _ in range(20):
        n = rng.integers(1, 6)
        pi = rng.dirichlet(np.ones(2**n))
        v = GameValuation(n, rng.normal(size=2**n))
        a = expected_value_state(v, state_from_distribution(pi))
        assert abs(a - expected_value_distribution(v, pi)) < 1e-10


def test_sugeno_examples():
    assert sugeno_integral(GameValuation(1, [0, 1]), [0.3]) == 0.3
    assert sugeno_integral(GameValuation(2, [0, 0.2, 0.5, 1]), [0.6, 0.4]) == 0.4
    v = GameValuation(3, [0.1, 0.7, 0.2, 0.9, 0.3, 0.4, 0.5, 0.6])
    assert sugeno_integral(v, [1e9] * 3) == 0.9


def test_sugeno_empty_coalition_counts():
    assert sugeno_integral(GameValuation(1, [0.8, 0.1]), [0.0]) == 0.8


def test_sugeno_monotone(rng):
    for _ in range(50):
        n = rng.integers(1, 5)
        v = GameValuation(n, rng.uniform(size=2**n))
        t = rng.uniform(size=n)
        base = sugeno_integral(v, t)
        i = rng.integers(n)
        t[i] += rng.uniform()
        assert sugeno_integral(v, t) >= base


def test_wave_eval_examples():
    f = FormalPolynomial({0: 1, 2: 2 - 1j, 5: 0.5})
    assert wave_eval(f, 0) == pytest.approx(3.5 - 1j)
    assert wave_eval(FormalPolynomial.monomial(1), 0.5) == pytest.approx(-1, abs=1e-15)


def test_wave_eval_reproduces_dft(rng):
    for m in (1, 2, 8, 64, 256):
        c = rng.normal(size=m) + 1j * rng.normal(size=m)
        samples = np.array([wave_eval(c, j / m) for j in range(m)])
        assert np.abs(samples - dft(c)).max() < 1e-10
        sparse = np.array([wave_eval(FormalPolynomial.from_dense(c), j / m) for j in range(m)])
        assert np.abs(sparse - samples).max() < 1e-12
