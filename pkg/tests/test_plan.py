import numpy as np
import pytest

from fracdiff.plan import plan_length_bound, s_max, sampling_plan
from fracdiff.solvers import adaptive_indices


def test_plan_inside_base_interval():
    assert adaptive_indices(4, 4) == [(0, 1), (1, 1), (2, 1), (3, 1), (4, 1)]


def test_plan_second_band():
    plan = adaptive_indices(4, 16)
    assert s_max(4, 16) == 2
    assert plan == [(0, 1), (1, 1), (2, 1), (3, 1), (4, 1), (6, 3), (9, 3), (12, 3), (15, 3)]
    assert sum(w for _, w in plan) == 17


def test_plan_remainder_terms():
    # a=4, n=14: centres 6, 9, 12 cover lags 5..13; lag 14 is left over
    assert adaptive_indices(4, 14)[-4:] == [(6, 3), (9, 3), (12, 3), (14, 1)]


@pytest.mark.parametrize("a", range(2, 11))
def test_plan_conserves_weight_and_offsets(a):
    for n in range(1, 2001):
        lags, mult = sampling_plan(a, n)
        assert mult.sum() == n + 1
        assert len(np.unique(lags)) == len(lags)
        assert lags.min() == 0 and lags.max() <= n
        assert len(lags) <= plan_length_bound(a, n)


def test_s_max_brackets_n():
    for a in (2, 3, 8):
        for n in range(a + 1, 3000):
            s = s_max(a, n)
            assert a ** (s - 1) + 1 <= n <= a**s


def test_plan_rejects_small_a():
    with pytest.raises(ValueError):
        sampling_plan(1, 10)


def test_plan_arrays_are_read_only():
    lags, mult = sampling_plan(5, 100)
    with pytest.raises(ValueError):
        lags[0] = 3
