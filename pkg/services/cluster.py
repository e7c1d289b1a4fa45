"""Quivers, quiver mutation, Y-seed mutation and A_n recognition."""

from dataclasses import dataclass

import networkx as nx

from services.errors import BadVertex
from services.exactalg import RationalFunction


@dataclass(frozen=True)
class Quiver:
    labels: tuple
    B: tuple

    def __post_init__(self):
        n = len(self.labels)
        if len(self.B) != n or any(len(row) != n for row in self.B):
            raise ValueError(f"adjacency matrix does not match {n} labels")
        for i in range(n):
            for j in range(n):
                if self.B[i][j] != -self.B[j][i]:
                    raise ValueError(f"adjacency matrix is not skew at ({i}, {j})")

    @classmethod
    def from_matrix(cls, labels, B):
        return cls(tuple(labels), tuple(tuple(int(x) for x in row) for row in B))

    def index(self, k):
        if isinstance(k, int):
            if 0 <= k < len(self.labels):
                return k
            raise BadVertex(f"vertex index {k} out of range")
        try:
            return self.labels.index(k)
        except ValueError:
            raise BadVertex(f"{k} is not a vertex of the quiver {list(self.labels)}") from None

    def matrix(self):
        return [list(row) for row in self.B]

    def arrows(self):
        n = len(self.labels)
        return [(self.labels[i], self.labels[j], self.B[i][j])
                for i in range(n) for j in range(n) if self.B[i][j] > 0]

    def to_json(self):
        return {"labels": list(self.labels), "B": self.matrix()}


@dataclass(frozen=True)
class Seed:
    quiver: Quiver
    y: tuple

    def value(self, label):
        return self.y[self.quiver.index(label)]

    def as_dict(self):
        return dict(zip(self.quiver.labels, self.y))


def _sign(x):
    return (x > 0) - (x < 0)


def _mutate_matrix(B, k):
    n = len(B)
    out = [[0] * n for _ in range(n)]
    for s in range(n):
        for t in range(n):
            if s == k or t == k:
                out[s][t] = -B[s][t]
            else:
                out[s][t] = B[s][t] + _sign(B[s][k]) * max(B[s][k] * B[k][t], 0)
    return out


def quiver_mutation(Q, k):
    return Quiver.from_matrix(Q.labels, _mutate_matrix(Q.B, Q.index(k)))


def _reframe(B, inverted):
    """R B R with R = diag(-1 on inverted vertices, +1 elsewhere)."""
    n = len(B)
    r = [-1 if i in inverted else 1 for i in range(n)]
    return [[r[i] * B[i][j] * r[j] for j in range(n)] for i in range(n)]


def frame_mutation(Q, k, inverted):
    """Mutation in the frame where the vertices in `inverted` carry inverse variables."""
    inv = {Q.index(v) for v in inverted}
    B = _reframe(_mutate_matrix(_reframe(Q.B, inv), Q.index(k)), inv)
    return Quiver.from_matrix(Q.labels, B)


def mutation_sequence(Q, ks, inverted=()):
    quivers = [Q]
    for k in ks:
        quivers.append(frame_mutation(quivers[-1], k, inverted) if inverted else quiver_mutation(quivers[-1], k))
    return quivers


def y_seed_mutation(S, k):
    Q = S.quiver
    kk = Q.index(k)
    yk = RationalFunction.coerce(S.y[kk])
    one_plus = 1 + yk
    new_y = []
    for i, yi in enumerate(S.y):
        if i == kk:
            new_y.append(yk.inverse())
            continue
        b = Q.B[i][kk]
        if b == 0:
            new_y.append(yi)
            continue
        new_y.append(yi * yk ** max(b, 0) / one_plus ** b)
    return Seed(quiver_mutation(Q, kk), tuple(new_y))


def seed_for_flip(Q, values, distinguished):
    """Seed whose Y-mutations reproduce flips of a triangulation quiver.

    The distinguished vertex carries the inverse of its value and the quiver is
    the transpose of Q read in that inverted frame."""
    d = Q.index(distinguished)
    B = _reframe(Q.B, {d})
    Bt = [[B[j][i] for j in range(len(B))] for i in range(len(B))]
    y = [RationalFunction.coerce(values[label]) for label in Q.labels]
    y[d] = y[d].inverse()
    return Seed(Quiver.from_matrix(Q.labels, Bt), tuple(y))


def unframe_seed(S, distinguished):
    """Values of a flip seed back in the triangulation frame."""
    d = S.quiver.index(distinguished)
    y = list(S.y)
    y[d] = y[d].inverse()
    return dict(zip(S.quiver.labels, y))


def dynkin_a(n, orientation=None):
    """Path quiver on n vertices; orientation[i] = +1 means i -> i+1."""
    if orientation is None:
        orientation = [1] * (n - 1)
    if len(orientation) != n - 1:
        raise ValueError(f"orientation must have {n - 1} entries")
    B = [[0] * n for _ in range(n)]
    for i, o in enumerate(orientation):
        B[i][i + 1] = o
        B[i + 1][i] = -o
    return Quiver.from_matrix([f"y{i + 1}" for i in range(n)], B)


def underlying_graph(Q):
    G = nx.Graph()
    G.add_nodes_from(range(len(Q.labels)))
    for i in range(len(Q.labels)):
        for j in range(i + 1, len(Q.labels)):
            if Q.B[i][j]:
                G.add_edge(i, j, weight=abs(Q.B[i][j]))
    return G


def is_dynkin_a(Q):
    """(True, orientation along the path) when Q is an oriented A_n path, else (False, None)."""
    n = len(Q.labels)
    if any(abs(x) > 1 for row in Q.B for x in row):
        return False, None
    G = underlying_graph(Q)
    if n == 1:
        return True, []
    if not nx.is_connected(G) or G.number_of_edges() != n - 1 or max(d for _, d in G.degree()) > 2:
        return False, None
    start = min(v for v, d in G.degree() if d == 1)
    path = [start]
    while len(path) < n:
        path.append(next(w for w in G.neighbors(path[-1]) if w not in path))
    return True, [Q.B[a][b] for a, b in zip(path, path[1:])]
