from fractions import Fraction

import pytest

from services.errors import DegenerateForm, NotLogCanonical, VertexRelationViolated
from services.exactalg import MatrixRF, RationalFunction
from services.formcalc import (
    JumpGraph,
    LogCanonicalForm,
    TwoForm,
    graph_two_form,
    maurer_cartan,
    poisson_from_form,
    to_log_canonical,
    vertex_two_form,
    wedge_trace,
)

A = MatrixRF([[0, 1], [-1, -1]])
p = RationalFunction.variable("fp")
q = RationalFunction.variable("fq")


def test_maurer_cartan_of_diagonal_matrix():
    M = MatrixRF.diag([p, 1 / p])
    theta = maurer_cartan(M)
    assert theta.components["fp"] == MatrixRF.diag([1 / p, -1 / p])


def test_wedge_trace_is_antisymmetric():
    a = maurer_cartan(MatrixRF([[1, p], [0, 1]]))
    b = maurer_cartan(MatrixRF([[1, 0], [q, 1]]))
    assert wedge_trace(a, b) == wedge_trace(b, a).scale(-1)
    assert wedge_trace(a, b).coefficient("fp", "fq") == 1


def test_constant_jumps_contribute_nothing():
    G = JumpGraph(2)
    for k in range(3):
        G.add_edge(("s", k), "v", ("c", k), A)
    G.set_order("v", [("s", k) for k in range(3)])
    assert G.validate()
    assert graph_two_form(G).is_zero()


def test_vertex_relation_violation():
    G = JumpGraph(2)
    G.add_edge("e1", "v", None, MatrixRF([[1, p], [0, 1]]))
    G.add_edge("e2", "v", None, A)
    G.set_order("v", ["e1", "e2"])
    with pytest.raises(VertexRelationViolated):
        G.validate()


def test_incoming_edge_uses_inverse_jump():
    G = JumpGraph(2)
    J = MatrixRF([[1, p], [0, 1]])
    G.add_edge("e", "a", "b", J)
    G.set_order("b", ["e"])
    assert G.jumps_at("b") == [J.inverse()]


def test_vertex_form_is_cyclically_invariant():
    jumps = [MatrixRF([[1, p], [0, 1]]), MatrixRF([[1, 0], [q, 1]])]
    jumps.append((jumps[0] * jumps[1]).inverse())
    base = vertex_two_form(jumps)
    assert vertex_two_form(jumps[1:] + jumps[:1]) == base
    assert vertex_two_form(jumps[2:] + jumps[:2]) == base


def test_log_canonical_extraction():
    omega = TwoForm({("fp", "fq"): 3 / (p * q)})
    L = to_log_canonical(omega, ["fp", "fq"])
    assert L.omega == [[0, 3], [-3, 0]]
    with pytest.raises(NotLogCanonical):
        to_log_canonical(TwoForm({("fp", "fq"): RationalFunction.one()}), ["fp", "fq"])


def test_poisson_from_form_is_inverse_transpose():
    P = poisson_from_form(LogCanonicalForm(["fp", "fq"], [[0, 4], [-4, 0]]))
    assert P.log_matrix == [[0, Fraction(1, 4)], [Fraction(-1, 4), 0]]
    assert P.entry("fp", "fq") == p * q / 4


def test_degenerate_form():
    with pytest.raises(DegenerateForm):
        poisson_from_form(LogCanonicalForm(["fp", "fq"], [[0, 0], [0, 0]]))
