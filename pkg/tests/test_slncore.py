import numpy as np
import pytest

from services import slncore
from services.errors import ShapeMismatch
from services.exactalg import MatrixRF, RationalFunction


def test_coroots_for_sl3():
    cd = slncore.cartan_data(3)
    assert [list(np.diag(h)) for h in cd.h] == [[2, -1, -1], [1, 1, -2]]
    assert all(np.trace(h) == 0 for h in cd.h)
    assert list(np.diag(cd.alpha[0])) == [1, -1, 0]


def test_antidiagonal_signs():
    assert slncore.antidiagonal(3).tolist() == [[0, 0, -1], [0, 1, 0], [-1, 0, 0]]
    assert slncore.antidiagonal(2, "unsigned").tolist() == [[0, 1], [1, 0]]


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_gram_matrix_closed_form(n):
    for (j, k), g in slncore.cartan_gram(n).items():
        assert g == n * n * min(j, k) - n * j * k
    if n == 3:
        assert slncore.cartan_gram(3)[(1, 1)] == 6


def test_triples():
    assert slncore.triples(2) == []
    assert slncore.triples(3) == [(1, 1, 1)]
    assert sorted(slncore.triples(4)) == [(1, 1, 2), (1, 2, 1), (2, 1, 1)]
    assert slncore.triple_name((1, 2, 1)) == "x121"


def test_star_reverses_a_diagonal_matrix():
    M = MatrixRF.diag([1, 2, 3])
    assert slncore.star_matrix(M, 3) == MatrixRF.diag([3, 2, 1])
    with pytest.raises(ShapeMismatch):
        slncore.star_matrix(M, 2)


def test_sl2_triangle_matrix():
    A = slncore.sl2_constant()
    assert A == MatrixRF([[0, -1], [1, -1]])
    assert (A * A * A).is_identity()
    assert slncore.triangle_convention(2) == slncore.Convention("(-1)^a", False, "bca")


def test_sl3_triangle_matrix_unsigned():
    slncore.triple_variables(3)
    x = RationalFunction.variable("x111")
    A1 = slncore.a_matrix(3, 1, convention=slncore.Convention("unsigned", True, "bca"))
    expected = MatrixRF([[0, 0, x ** -1], [0, -(x ** -1), -(x ** -1)], [x ** 2, x ** -1 + x ** 2, x ** -1]])
    assert A1 == expected
    assert (A1 * A1 * A1).is_identity()


def test_bad_rank():
    with pytest.raises(ValueError):
        slncore.cartan_data(1)


@pytest.mark.parametrize("n", [2, 3])
def test_verify_triangle(n):
    report = slncore.verify_triangle(n)
    assert report.passed, report.items
    assert report.conventions["triangle"] is not None


@pytest.mark.slow
def test_verify_triangle_sl4():
    assert slncore.verify_triangle(4).passed
