import pytest

from services import cluster
from services.cluster import Seed
from services.errors import BadVertex
from services.exactalg import RationalFunction, rf_equal

A4 = cluster.dynkin_a(4)


def test_dynkin_a_matrix():
    assert A4.labels == ("y1", "y2", "y3", "y4")
    assert A4.matrix() == [[0, 1, 0, 0], [-1, 0, 1, 0], [0, -1, 0, 1], [0, 0, -1, 0]]


@pytest.mark.parametrize("k", ["y1", "y2", "y3", "y4"])
def test_mutation_is_an_involution(k):
    assert cluster.quiver_mutation(cluster.quiver_mutation(A4, k), k) == A4
    assert cluster.frame_mutation(cluster.frame_mutation(A4, k, ["y1"]), k, ["y1"]) == A4


def test_mutation_of_an_oriented_path():
    mu = cluster.quiver_mutation(A4, "y2")
    assert mu.matrix() == [[0, -1, 1, 0], [1, 0, -1, 0], [-1, 1, 0, 1], [0, 0, -1, 0]]


def test_frame_mutation_with_inverted_first_vertex():
    mu = cluster.frame_mutation(A4, "y2", ["y1"])
    assert mu.matrix() == [[0, -1, 0, 0], [1, 0, -1, 0], [0, 1, 0, 1], [0, 0, -1, 0]]
    assert mu != cluster.quiver_mutation(A4, "y2")


def test_y_seed_mutation_rule_and_involution():
    y = tuple(RationalFunction.variable(f"cy{i}") for i in range(1, 5))
    seed = Seed(A4, y)
    once = cluster.y_seed_mutation(seed, "y2")
    assert rf_equal(once.value("y2"), 1 / y[1])
    assert rf_equal(once.value("y1"), y[0] * y[1] / (1 + y[1]))
    assert rf_equal(once.value("y3"), y[2] * (1 + y[1]))
    assert rf_equal(once.value("y4"), y[3])
    twice = cluster.y_seed_mutation(once, "y2")
    assert twice.quiver == A4
    assert all(rf_equal(a, b) for a, b in zip(twice.y, y))


def test_flip_seed_round_trip():
    values = {f"y{i}": RationalFunction.variable(f"cy{i}") for i in range(1, 5)}
    seed = cluster.seed_for_flip(A4, values, "y1")
    assert rf_equal(seed.value("y1"), 1 / values["y1"])
    back = cluster.unframe_seed(seed, "y1")
    assert all(rf_equal(back[k], values[k]) for k in values)


def test_is_dynkin_a():
    Q = cluster.dynkin_a(4, [1, -1, 1])
    assert cluster.is_dynkin_a(Q) == (True, [1, -1, 1])
    cycle = cluster.Quiver.from_matrix(["a", "b", "c"], [[0, 1, -1], [-1, 0, 1], [1, -1, 0]])
    assert cluster.is_dynkin_a(cycle) == (False, None)
    double = cluster.Quiver.from_matrix(["a", "b"], [[0, 2], [-2, 0]])
    assert cluster.is_dynkin_a(double) == (False, None)


def test_bad_vertex_and_bad_matrix():
    with pytest.raises(BadVertex):
        cluster.quiver_mutation(A4, "y9")
    with pytest.raises(ValueError):
        cluster.Quiver.from_matrix(["a", "b"], [[0, 1], [1, 0]])


def test_mutation_sequence_length():
    qs = cluster.mutation_sequence(A4, ["y2", "y3", "y2"])
    assert len(qs) == 4
    assert qs[0] == A4
