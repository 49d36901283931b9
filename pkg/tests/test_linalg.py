import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lfsrooa.field import field_of_order
from lfsrooa.linalg import batch_full_rank, rank, row_reduce


def test_row_reduce_small():
    F = field_of_order(3)
    rref, piv = row_reduce([[2, 1, 0], [1, 2, 0], [0, 0, 1]], F)
    assert piv == [0, 2]
    assert rref.tolist() == [[1, 2, 0], [0, 0, 1], [0, 0, 0]]


@pytest.mark.parametrize("q", [2, 3, 4, 5, 8, 9])
@settings(max_examples=25, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), t=st.integers(1, 5))
def test_batch_matches_single(q, seed, t):
    F = field_of_order(q)
    rng = np.random.default_rng(seed)
    mats = rng.integers(0, q, size=(40, t, t))
    # make some rows dependent on purpose
    mats[::3, -1] = mats[::3, 0]
    got = batch_full_rank(mats, F)
    want = [rank(m, F) == t for m in mats]
    assert got.tolist() == want


def test_rank_of_empty():
    assert rank(np.zeros((0, 3), dtype=int), field_of_order(2)) == 0
