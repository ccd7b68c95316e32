from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from dualbraid import exact
from dualbraid.qsqrt5 import PHI, QSqrt5

ints = st.integers(-5, 5)
frac = st.fractions(min_value=-4, max_value=4, max_denominator=6)


def matrices(rows=4, cols=4):
    return st.lists(st.lists(ints, min_size=cols, max_size=cols), min_size=rows, max_size=rows)


def apply(m, v):
    return [sum(a * b for a, b in zip(row, v)) for row in m]


@given(matrices())
def test_rank_nullity(m):
    assert exact.rank(m) + len(exact.kernel(m)) == 4


@given(matrices())
def test_kernel_vectors_are_annihilated(m):
    for v in exact.kernel(m):
        assert all(x == 0 for x in apply(m, v))


@given(matrices(3, 3), st.lists(ints, min_size=3, max_size=3))
def test_solve(m, rhs):
    if exact.rank(m) < 3:
        with pytest.raises(ValueError):
            exact.solve(m, rhs)
    else:
        assert apply(m, exact.solve(m, rhs)) == rhs


@given(matrices(3, 3))
def test_canonical_span_is_basis_invariant(m):
    mixed = [[a + b for a, b in zip(m[0], m[1])], m[1], m[2]]
    assert exact.canonical_span(m) == exact.canonical_span(mixed)


def test_rank_over_qsqrt5():
    m = [[PHI, QSqrt5(1)], [QSqrt5(1), PHI - 1]]
    assert exact.rank(m) == 1


@given(frac, frac, frac, frac)
def test_qsqrt5_field(a, b, c, d):
    x, y = QSqrt5(a, b), QSqrt5(c, d)
    assert x * y == y * x
    assert (x + y) - y == x
    if y:
        assert (x / y) * y == x
    assert abs(float(x * y) - float(x) * float(y)) < 1e-9


@given(frac, frac)
def test_qsqrt5_sign_matches_float(a, b):
    x = QSqrt5(a, b)
    f = float(a) + float(b) * 5 ** 0.5
    if abs(f) > 1e-9:
        assert x.sign() == (1 if f > 0 else -1)
    else:
        assert x.sign() == 0


def test_phi_minimal_polynomial():
    assert PHI * PHI == PHI + 1
    assert QSqrt5(Fraction(1, 2), Fraction(1, 2)) == PHI
