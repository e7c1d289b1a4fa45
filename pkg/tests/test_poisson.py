from fractions import Fraction

import pytest

from services.errors import UnknownVariable
from services.exactalg import RationalFunction, make_rng, random_point
from services.poisson import (
    bracket,
    bracket_at,
    fn_structure,
    is_casimir,
    jacobiator,
    log_canonical_structure,
    monomial_casimirs,
)

pa, pb, pc = (RationalFunction.variable(n) for n in ("pa", "pb", "pc"))
CYCLIC = log_canonical_structure(["pa", "pb", "pc"], [[0, 1, -1], [-1, 0, 1], [1, -1, 0]])


def test_log_canonical_entries_and_antisymmetry():
    assert CYCLIC.entry("pa", "pb") == pa * pb
    assert CYCLIC.entry("pb", "pa") == -(pa * pb)
    assert bracket(CYCLIC, pa, pa).is_zero()
    assert bracket(CYCLIC, pa + pb, pc) == -(pa * pc) + pb * pc


def test_jacobi_identity_on_log_canonical_structure():
    assert jacobiator(CYCLIC, pa, pb, pc).is_zero()
    assert jacobiator(CYCLIC, pa + pb, pb * pc, 1 / pa).is_zero()


def test_monomial_casimir():
    casimirs = monomial_casimirs(CYCLIC)
    assert len(casimirs) == 1
    assert is_casimir(CYCLIC, casimirs[0])
    assert is_casimir(CYCLIC, pa * pb * pc)
    assert not is_casimir(CYCLIC, pa)


def test_bracket_at_point_matches_symbolic_value():
    f, g = pa * pa + pb, pc / pa
    point = random_point(["pa", "pb", "pc"], make_rng(3))
    assert bracket_at(CYCLIC, f, g, point) == bracket(CYCLIC, f, g).eval_at(point)


def test_unknown_variable():
    with pytest.raises(UnknownVariable):
        bracket(CYCLIC, RationalFunction.variable("pz"), pa)


def test_flaschka_newell_entries_k1():
    P = fn_structure(1)
    s = {j: RationalFunction.variable(f"s{j}") for j in range(1, 5)}
    lam = RationalFunction.variable("lambda")
    assert P.coords == ["s1", "s2", "s3", "s4", "lambda"]
    assert P.entry("s1", "s2") == 1 + s[1] * s[2]
    assert P.entry("s1", "s3") == -(s[1] * s[3])
    assert P.entry("s1", "s4") == s[1] * s[4] - lam ** -2
    assert P.entry("s2", "s3") == 1 + s[2] * s[3]
    for j in range(1, 5):
        assert P.entry(f"s{j}", "lambda") == (-1) ** j * s[j] * lam


def test_flaschka_newell_log_matrix_absent():
    with pytest.raises(ValueError):
        monomial_casimirs(fn_structure(1))
    assert fn_structure(2).entry("s1", "s6").eval_at(
        {"s1": 1, "s6": 1, "lambda": 2}) == Fraction(3, 4)
