"""Exact linear algebra layer."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from greenring.errors import NoSolution
from greenring.ratlin import (ONE, Rat, RatMatrix, SpanRREF, ZERO,
                              block_diag, kernel_basis, kronecker_product,
                              rat_from_str, rat_to_str, solve_linear)


def mat(rows):
    return RatMatrix.from_rows([[Rat(x) for x in r] for r in rows])


def test_rat_string_roundtrip():
    for s in ("0", "1", "-3", "2/3", "-5/7"):
        assert rat_to_str(rat_from_str(s)) == s


def test_basic_arithmetic():
    a = mat([[1, 2], [3, 4]])
    b = mat([[0, 1], [1, 0]])
    assert (a + b) - b == a
    assert a * RatMatrix.identity(2) == a
    assert (a * b).to_rows() == [[Rat(2), Rat(1)], [Rat(4), Rat(3)]]
    assert a.transpose().transpose() == a
    assert a.trace() == Rat(5)


def test_rank_and_kernel():
    a = mat([[1, 2, 3], [2, 4, 6], [1, 0, 1]])
    assert a.rank() == 2
    ker = kernel_basis(a)
    assert len(ker) == 1
    v = ker[0]
    assert all(x == ZERO for x in a.apply(v))


def test_solve_linear():
    a = mat([[2, 0], [0, 3]])
    x, ker = solve_linear(a, [Rat(4), Rat(9)])
    assert x == [Rat(2), Rat(3)]
    assert ker == []
    with pytest.raises(NoSolution):
        solve_linear(mat([[1, 1], [1, 1]]), [Rat(0), Rat(1)])


def test_kronecker_and_blocks():
    a = mat([[1, 1], [0, 1]])
    b = mat([[2]])
    k = kronecker_product(a, b)
    assert k.rows == 2 and k[0, 0] == Rat(2)
    d = block_diag([a, b])
    assert d.rows == 3 and d[2, 2] == Rat(2) and d[2, 0] == ZERO


def test_span_rref_membership_and_coordinates():
    span = SpanRREF(3)
    assert span.add([ONE, ZERO, ONE])
    assert span.add([ZERO, ONE, ONE])
    assert not span.add([ONE, ONE, Rat(2)])
    assert span.rank == 2
    coords = span.coordinates([ONE, ONE, Rat(2)])
    basis = span.basis_vectors()
    recon = [sum((c * b[i] for c, b in zip(coords, basis)), ZERO)
             for i in range(3)]
    assert recon == [ONE, ONE, Rat(2)]
    with pytest.raises(NoSolution):
        span.coordinates([ONE, ZERO, ZERO])


small_rats = st.builds(
    Fraction,
    st.integers(min_value=-30, max_value=30),
    st.integers(min_value=1, max_value=9),
).map(lambda f: Rat(f.numerator, f.denominator))


@st.composite
def matrices(draw, n=3):
    rows = draw(st.lists(st.lists(small_rats, min_size=n, max_size=n),
                         min_size=n, max_size=n))
    return RatMatrix.from_rows(rows)


@settings(max_examples=40, deadline=None)
@given(matrices(), matrices())
def test_transpose_antihomomorphism(a, b):
    assert (a * b).transpose() == b.transpose() * a.transpose()


@settings(max_examples=40, deadline=None)
@given(matrices())
def test_kernel_vectors_annihilated(a):
    for v in kernel_basis(a):
        assert all(x == ZERO for x in a.apply(v))
    assert a.rank() + len(kernel_basis(a)) == a.cols


@settings(max_examples=40, deadline=None)
@given(matrices(), st.lists(small_rats, min_size=3, max_size=3))
def test_solve_consistent_systems(a, x):
    b = a.apply(x)
    x0, ker = solve_linear(a, b)
    assert a.apply(x0) == b
