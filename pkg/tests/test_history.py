import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fracdiff.history import HistoryList, HistoryNode, length_bound


def build(eta, last):
    h = HistoryList(eta)
    for i in range(last + 1):
        h.append_and_condense(HistoryNode(i))
    return h


def test_table_one():
    h = build(5, 25)
    assert h.timesteps() == [0, 4, 8, 12, 14, 16, 18, 20, 22, 23, 24, 25]
    assert h.weights() == [4, 4, 4, 2, 2, 2, 2, 2, 1, 1, 1, 1]
    assert sum(h.weights()) == 26


def test_no_condensation_when_eta_is_large():
    h = build(100, 40)
    assert h.weights() == [1] * 41
    assert len(h) == 41


@pytest.mark.parametrize("eta", [2, 5, 15, 20])
def test_invariants_every_step(eta):
    h = HistoryList(eta)
    previous = set()
    for i in range(5000):
        h.append_and_condense(HistoryNode(i))
        h.check()
        current = set(h.timesteps())
        assert current <= previous | {i}
        previous = current


@settings(max_examples=40, deadline=None)
@given(eta=st.integers(2, 30), last=st.integers(0, 600))
def test_invariants_property(eta, last):
    h = build(eta, last)
    h.check()
    assert len(h) <= length_bound(eta, last)


def test_out_of_order_append():
    h = build(3, 4)
    with pytest.raises(RuntimeError):
        h.append_and_condense(HistoryNode(7))
    with pytest.raises(RuntimeError):
        h.append_and_condense(HistoryNode(5, weight=2))


def test_eta_must_allow_a_merge_partner():
    with pytest.raises(ValueError):
        HistoryList(1)
