from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis.strategies import fractions, integers

from services.errors import DivisionByZero, OddExponent, PoleAtPoint, SingularMatrix
from services.exactalg import (
    MatrixRF,
    RationalFunction,
    doubled_var,
    half_power,
    commutator,
    make_rng,
    mat_ops,
    random_point,
    rf_arith,
    rf_equal,
)

small = fractions(min_value=-20, max_value=20, max_denominator=12)

u = RationalFunction.variable("ta")
v = RationalFunction.variable("tb")


def poly(a, b, c):
    return a + b * u + c * u * v


@given(small, small, small, small, small, small)
def test_distributive_and_commutative(a, b, c, d, e, f):
    p, q, r = poly(a, b, c), poly(d, e, f), poly(b, a, d)
    assert (p + q) * r == p * r + q * r
    assert p * q == q * p
    assert p - p == 0


@given(small, small)
def test_inverse_of_nonzero_function(a, b):
    assume(a != 0 or b != 0)
    f = a + b * u
    assert f * f.inverse() == 1
    assert (1 / f) * f == 1


@given(small, small, small, small)
def test_leibniz_rule(a, b, c, d):
    f = a + b * u * u + v
    g = (c + d * u) / (1 + u * u)
    lhs = (f * g).differentiate("ta")
    rhs = f.differentiate("ta") * g + f * g.differentiate("ta")
    assert lhs == rhs


@given(small, small, small, small)
def test_evaluation_is_a_homomorphism(a, b, x, y):
    assume(x != 0 and y != 0)
    f = a + u / v
    g = b - u * v
    pt = {"ta": x, "tb": y}
    assert (f * g).eval_at(pt) == f.eval_at(pt) * g.eval_at(pt)
    assert (f + g).eval_at(pt) == f.eval_at(pt) + g.eval_at(pt)


def test_laurent_powers_and_cancellation():
    assert u ** -2 * u ** 3 == u
    assert ((u * u - 1) / (u - 1)) == u + 1
    assert ((u * u - 1) / (u - 1)).is_polynomial()


def test_equality_is_structural_after_reduction():
    assert rf_equal((u + v) / (u * u - v * v), 1 / (u - v))
    assert (u + 1) / (u + 2) != (u + 2) / (u + 1)


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        u / 0
    with pytest.raises(DivisionByZero):
        RationalFunction.zero().inverse()


def test_pole_at_point():
    with pytest.raises(PoleAtPoint):
        (1 / (u - 1)).eval_at({"ta": 1})


def test_substitution():
    f = u * u + 1 / v
    assert f.substitute({"ta": v, "tb": u}) == v * v + 1 / u
    assert f.substitute({"tb": 1 / u}) == u * u + u


def test_halve_exponents_of_even_function():
    y = RationalFunction.variable("ty")
    Y = RationalFunction.variable("tY")
    f = (1 + y ** 2) / y ** 4
    assert f.halve_exponents({"ty": "tY"}) == (1 + Y) / Y ** 2
    with pytest.raises(OddExponent):
        (1 + y).halve_exponents({"ty": "tY"})


def test_doubled_variable_square_root():
    w = doubled_var("tw")
    root = half_power("tw", 1)
    assert root * root == w
    assert half_power("tw", 3) == w * root
    assert str(root) == "tw^(1/2)"


def test_random_point_is_reproducible_and_nonzero():
    a = random_point(["ta", "tb"], make_rng(7))
    b = random_point(["ta", "tb"], make_rng(7))
    assert a == b
    assert all(isinstance(x, Fraction) and x != 0 for x in a.values())


@given(integers(min_value=-5, max_value=5), integers(min_value=-5, max_value=5))
def test_matrix_inverse_over_functions(p, q):
    M = MatrixRF([[1 + u, p + v], [q, 1]])
    assume(not M.det().is_zero())
    assert (M * M.inverse()).is_identity()
    assert (M.inverse() * M).is_identity()


def test_matrix_determinant_and_transpose():
    M = MatrixRF([[u, 1, 0], [0, v, 1], [1, 0, u * v]])
    assert M.det() == u * u * v * v + 1
    assert M.transpose().transpose() == M
    assert M.inv_transpose() == M.inverse().transpose()


def test_singular_matrix():
    with pytest.raises(SingularMatrix):
        MatrixRF([[u, v], [2 * u, 2 * v]]).inverse()


def test_triangularity_predicates():
    assert MatrixRF([[1, u], [0, 1]]).is_upper_unitriangular()
    assert MatrixRF([[1, 0], [v, 1]]).is_lower_unitriangular()
    assert not MatrixRF([[1, 0], [v, 2]]).is_lower_unitriangular()
    assert MatrixRF([[u, 0], [v, 2]]).is_lower_triangular()


def test_doubled_variable_evaluates_at_its_own_value():
    w = doubled_var("tw")
    root = half_power("tw", 1)
    assert w.eval_at({"tw": 4}) == 4
    assert root.eval_at({"tw": Fraction(9, 4)}) == Fraction(3, 2)
    assert half_power("tw", -3).eval_at({"tw": 4}) == Fraction(1, 8)


@pytest.mark.parametrize("value", [2, Fraction(4, 3), -4])
def test_doubled_variable_needs_a_rational_square_root(value):
    doubled_var("tw")
    with pytest.raises(ValueError):
        half_power("tw", 1).eval_at({"tw": value})


def test_random_point_squares_doubled_variables():
    doubled_var("tw")
    pt = random_point(["tw", "ta"], make_rng(3))
    assert half_power("tw", 1).eval_at(pt) ** 2 == pt["tw"]
    assert all(x > 0 for x in random_point(["ta", "tb"], make_rng(3), positive=True).values())


def test_rf_arith_operations():
    assert rf_arith("add", u, v) == u + v
    assert rf_arith("sub", u, 1) == u - 1
    assert rf_arith("mul", u, v) == u * v
    assert rf_arith("div", 1, u) == u ** -1
    assert rf_arith("neg", u) == -u
    assert rf_arith("pow", u, -2) == 1 / (u * u)
    with pytest.raises(ValueError):
        rf_arith("mod", u, v)


def test_mat_ops_match_matrix_methods():
    M = MatrixRF([[u, 1], [0, v]])
    N = MatrixRF([[1, 0], [u, 1]])
    assert mat_ops("mul", M, N) == M * N
    assert mat_ops("det", M) == u * v
    assert mat_ops("trace", M) == u + v
    assert mat_ops("transpose", M) == MatrixRF([[u, 0], [1, v]])
    assert (mat_ops("inverse", M) * M).is_identity()
    assert mat_ops("inv_transpose", M) == M.inverse().transpose()
    assert commutator(M, M) == MatrixRF.zeros(2)
    with pytest.raises(ValueError):
        mat_ops("exp", M)
