import pytest

from services import cluster, polygon
from services.errors import NotADiagonal, TriangulationFormatError


def test_fan_triangulation():
    T = polygon.fan_triangulation(2)
    assert T.N == 6
    assert T.diagonals == [(2, 6), (3, 6), (4, 6)]
    assert [T.var_of(d) for d in T.diagonals] == ["y2", "y3", "y4"]
    assert T.tail_of((2, 6)) == 6
    assert T.tail_of((3, 6)) == 3
    assert len(T.triangles()) == 4


def test_neighbors_are_counterclockwise():
    T = polygon.fan_triangulation(2)
    assert T.neighbors(6) == [1, 2, 3, 4, 5]
    assert T.neighbors(2) == [3, 6, 1]


@pytest.mark.parametrize("K, count", [(1, 2), (2, 14), (3, 132)])
def test_triangulation_count_is_catalan(K, count):
    assert len(polygon.all_triangulations(K)) == count


def test_flip_graph_of_the_hexagon():
    G = polygon.flip_graph(2)
    assert G.number_of_nodes() == 14
    assert G.number_of_edges() == 21
    assert all(d == 3 for _, d in G.degree())


def test_flip_of_the_fan():
    T = polygon.fan_triangulation(2)
    T2 = polygon.flip(T, 2)
    assert (1, 3) in T2.diagonals
    assert T2.label_of((1, 3)) == (2, 1)
    assert polygon.classify_flip(T, 2).case == 1
    assert polygon.quadrilateral(T, 2) == (2, 3, 6, 1)
    assert sorted(polygon.flip(T2, 2).diagonals) == sorted(T.diagonals)


def test_flip_by_chord_and_bad_diagonals():
    T = polygon.fan_triangulation(2)
    assert polygon.flip(T, (3, 6)).diagonals == polygon.flip(T, 3).diagonals
    with pytest.raises(NotADiagonal):
        polygon.flip(T, 7)
    with pytest.raises(NotADiagonal):
        polygon.flip(T, (1, 3))


def test_crosses():
    assert polygon.crosses((1, 3), (2, 4))
    assert polygon.crosses((4, 2), (3, 1))
    assert not polygon.crosses((1, 3), (3, 5))
    assert not polygon.crosses((1, 4), (2, 3))


def test_quiver_of_fan_is_oriented_path():
    for K in (1, 2, 3):
        Q = polygon.quiver_of(polygon.fan_triangulation(K))
        assert Q == cluster.dynkin_a(2 * K)


def test_quiver_after_flip_is_framed_mutation():
    T = polygon.fan_triangulation(2)
    Q = polygon.quiver_of(polygon.flip(T, 2))
    assert Q.matrix() == [[0, -1, 0, 0], [1, 0, -1, 0], [0, 1, 0, 1], [0, 0, -1, 0]]
    assert Q == cluster.frame_mutation(polygon.quiver_of(T), "y2", ["y1"])


def test_json_round_trip_keeps_labels_and_orientations():
    T = polygon.flip(polygon.fan_triangulation(3), 4)
    assert polygon.from_json(T.dumps()) == T
    assert polygon.from_json(T.to_json()) == T


def test_json_without_labels_numbers_diagonals_in_order():
    T = polygon.from_json({"K": 1, "diagonals": [[1, 3]]})
    assert T.var_of((1, 3)) == "y2"


@pytest.mark.parametrize("data", [
    {"K": 2, "diagonals": [[1, 4], [2, 5], [2, 6]]},
    {"K": 2, "diagonals": [[2, 6], [3, 6]]},
    {"K": 1, "diagonals": [[1, 2]]},
    {"K": 1, "diagonals": [[1, 3]], "distinguished_edge": [2, 3]},
    {"K": 1, "diagonals": [[1, 3]], "labels": {"1,3": "z2"}},
    {"diagonals": []},
])
def test_malformed_triangulations(data):
    with pytest.raises(TriangulationFormatError):
        polygon.from_json(data)


@pytest.mark.parametrize("K", [1, 2, 3, 4])
def test_x_variables_of_fan_match_closed_form(K):
    T = polygon.fan_triangulation(K)
    assert polygon.x_variables(T) == polygon.x_variables_fan_closed_form(K)


def test_reachable_from_the_square():
    found = polygon.reachable(polygon.fan_triangulation(1), 1)
    assert len(found) == 2
    assert sorted(word for _, word in found) == [(), (2,)]


@pytest.mark.parametrize("K", [1, 2, 3])
def test_quiver_follows_every_flip_within_three_steps(K):
    for S, word in polygon.reachable(polygon.fan_triangulation(K), 3):
        for j in range(2, 2 * K + 1):
            k = S.var_of(S.diagonal_of(j))
            expected = cluster.frame_mutation(polygon.quiver_of(S), k, ["y1"])
            assert polygon.quiver_of(polygon.flip(S, j)) == expected, (word, j)


@pytest.mark.parametrize("word, j, case", [((), 2, 1), ((3,), 4, 3), ((3, 5), 4, 4)])
def test_flip_cases_on_the_octagon(word, j, case):
    T = polygon.fan_triangulation(3)
    for step in word:
        T = polygon.flip(T, step)
    assert polygon.classify_flip(T, j).case == case
