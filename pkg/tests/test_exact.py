import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from superwalk.errors import DimensionMismatch, NotSquare
from superwalk.exact import (
    IntMatrix,
    identity,
    mat_mul,
    mat_pow,
    mat_vec,
    max_abs_entry,
    max_abs_row_sum,
    trace,
    transpose,
)
from superwalk.graph import even_laplacian, odd_laplacian


@st.composite
def int_matrices(draw, max_dim=6, square=True, lo=-9, hi=9):
    r = draw(st.integers(1, max_dim))
    c = r if square else draw(st.integers(1, max_dim))
    rows = draw(st.lists(st.lists(st.integers(lo, hi), min_size=c, max_size=c), min_size=r, max_size=r))
    return IntMatrix.from_rows(rows, c)


def naive_pow(m, k):
    out = identity(m.rows)
    for _ in range(k):
        out = mat_mul(out, m)
    return out


def test_identity():
    assert identity(3).tolist() == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]


def test_swap_squared_is_identity():
    swap = IntMatrix.from_rows([[0, 1], [1, 0]])
    assert mat_mul(swap, swap) == identity(2)
    assert swap @ swap == identity(2)


def test_laplacian_squares(fig1, fig2):
    plus = even_laplacian(fig1)
    # 2*(-1) + (-1)*2 + (-1)*(-1) over q = v1, v2, v4
    assert mat_mul(plus, plus)[0, 1] == 2 * -1 + -1 * 2 + -1 * -1 == -3
    minus = odd_laplacian(fig2)
    assert mat_mul(minus, minus)[0, 1] == 3


def test_pow_small_cases(fig1):
    m = even_laplacian(fig1)
    assert mat_pow(m, 0) == identity(6)
    assert mat_pow(m, 1) == m
    with pytest.raises(NotSquare):
        mat_pow(IntMatrix.zeros(2, 3), 2)
    with pytest.raises(DimensionMismatch):
        mat_mul(IntMatrix.zeros(2, 3), IntMatrix.zeros(2, 3))


def test_mat_vec(fig1):
    v = [3, -1, 4]
    assert mat_vec(identity(3), v) == v
    assert mat_vec(IntMatrix.zeros(2, 3), v) == [0, 0]
    with pytest.raises(DimensionMismatch):
        mat_vec(identity(2), v)
    plus = even_laplacian(fig1)
    unit = [0, 1, 0, 0, 0, 0]
    assert mat_vec(plus, mat_vec(plus, unit))[0] == -3


def test_trace_transpose_max():
    m = IntMatrix.from_rows([[1, -7], [2, 5]])
    assert trace(m) == 6
    assert transpose(m).tolist() == [[1, 2], [-7, 5]]
    assert max_abs_entry(m) == 7
    assert max_abs_row_sum(m) == 8
    with pytest.raises(NotSquare):
        trace(IntMatrix.zeros(1, 2))


def test_no_overflow_past_64_bits():
    m = IntMatrix.from_rows([[2, 0], [0, 3]])
    big = mat_pow(m, 200)
    assert big[0, 0] == 2**200 and big[1, 1] == 3**200


def test_zero_sized():
    e = IntMatrix.zeros(0, 0)
    assert mat_pow(e, 3) == e and trace(e) == 0
    assert transpose(IntMatrix.zeros(3, 0)).shape == (0, 3)


@settings(max_examples=200, deadline=None)
@given(int_matrices(), st.integers(0, 8))
def test_pow_matches_naive(m, k):
    assert mat_pow(m, k) == naive_pow(m, k)


@settings(max_examples=100, deadline=None)
@given(int_matrices(), st.integers(0, 6), st.integers(0, 6))
def test_pow_additive(m, a, b):
    assert mat_pow(m, a + b) == mat_mul(mat_pow(m, a), mat_pow(m, b))


@settings(max_examples=100, deadline=None)
@given(int_matrices(), st.integers(0, 8))
def test_powers_of_symmetric_are_symmetric(m, k):
    s = m + transpose(m)
    assert mat_pow(s, k).is_symmetric()


@settings(max_examples=100, deadline=None)
@given(int_matrices(max_dim=5, square=False), st.data())
def test_mul_matches_numpy(a, data):
    b = data.draw(int_matrices(max_dim=5, square=False).filter(lambda b: b.rows == a.cols))
    expected = np.array(a.tolist(), dtype=np.int64) @ np.array(b.tolist(), dtype=np.int64)
    assert mat_mul(a, b).tolist() == expected.tolist()


@settings(max_examples=50, deadline=None)
@given(int_matrices(max_dim=5), st.integers(0, 6))
def test_mat_vec_iterates_columns(m, k):
    for j in range(m.cols):
        v = [1 if i == j else 0 for i in range(m.cols)]
        for _ in range(k):
            v = mat_vec(m, v)
        assert tuple(v) == mat_pow(m, k).column(j)
