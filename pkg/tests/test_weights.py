import numpy as np
import pytest

from algorithms import init_weights, intermediate_weights, scaling_factor, update_weights
from models import Dims, WeightState
from utils.errors import DomainError, ParameterError, ShapeError


def test_init_weights_all_ones():
    state = init_weights(Dims(rows=2, cols=3), p=1.0)
    assert state.w.shape == (2, 3)
    assert state.w.min() == state.w.max() == 1.0
    assert state.step == 0


def test_init_weights_rejects_non_positive_p():
    with pytest.raises(ParameterError):
        init_weights(Dims(rows=2, cols=2), p=0.0)


def test_weight_state_is_read_only():
    state = init_weights(Dims(rows=2, cols=2), p=1.0)
    with pytest.raises(ValueError):
        state.w[0, 0] = 0.5


def test_scaling_factor_examples():
    w = np.ones((2, 2))
    assert not scaling_factor(w, np.zeros((2, 2))).any()
    t = scaling_factor(w, np.array([[1.0, -2.0], [0.0, 4.0]]))
    assert np.array_equal(t, [[0.25, 0.5], [0.0, 1.0]])
    single = scaling_factor(w, np.array([[0.0, 0.0], [0.0, -3.0]]))
    assert np.array_equal(single, [[0.0, 0.0], [0.0, 1.0]])
    with pytest.raises(ShapeError):
        scaling_factor(w, np.zeros((2, 3)))


def test_intermediate_weights_examples():
    assert np.array_equal(intermediate_weights(np.zeros((2, 2)), 3.0), np.ones((2, 2)))
    assert intermediate_weights(np.array([[1.0]]), 0.3)[0, 0] == 0.0
    assert intermediate_weights(np.array([[0.5]]), 2.0)[0, 0] == 0.75
    with pytest.raises(DomainError):
        intermediate_weights(np.array([[1.5]]), 1.0)


def test_update_weights_step_by_step():
    state = init_weights(Dims(rows=2, cols=1), p=1.0)
    new = update_weights(state, np.array([[1.0], [2.0]]))
    assert np.array_equal(new.w, [[0.5], [0.0]])
    assert new.step == 1


def test_update_weights_zero_sparse_is_identity(rng):
    state = WeightState(w=rng.uniform(size=(4, 5)), p=2.0, step=3)
    new = update_weights(state, np.zeros((4, 5)))
    assert np.array_equal(new.w, state.w)
    assert new.step == 4


def test_update_weights_bounded_and_monotone(rng):
    state = init_weights(Dims(rows=12, cols=9), p=1.5)
    for _ in range(40):
        new = update_weights(state, rng.standard_normal((12, 9)))
        assert new.w.min() >= 0.0 and new.w.max() <= 1.0
        assert np.all(new.w <= state.w)
        state = new


def test_weights_settle_for_fixed_sparse_input(rng):
    s = rng.standard_normal((10, 10))
    state = init_weights(Dims(rows=10, cols=10), p=1.0)
    previous = state.w
    for _ in range(50):
        state = update_weights(state, s)
        change = float(np.max(np.abs(state.w - previous)))
        previous = state.w
    assert change < 1e-6


def test_large_entries_lose_weight_zero_entries_keep_it():
    s = np.zeros((6, 6))
    s[1, 2], s[4, 4] = 50.0, -40.0
    state = init_weights(Dims(rows=6, cols=6), p=1.0)
    for _ in range(5):
        state = update_weights(state, s)
    assert state.w[1, 2] == 0.0 and state.w[4, 4] < 0.5
    untouched = np.ones((6, 6), dtype=bool)
    untouched[1, 2] = untouched[4, 4] = False
    assert np.all(state.w[untouched] == 1.0)
