"""
Triangulations of the 2(K+1)-gon, diagonal flips, the quiver Q(T) and the
x-variable dictionary.

Vertices are numbered 1..N counterclockwise, N = 2K+2. The perimeter edge
v1 -> v2 carries y1; every diagonal carries one of y2..y_{2K}.
"""

import json
from dataclasses import dataclass, field

import networkx as nx

from services.cluster import Quiver
from services.errors import NotADiagonal, TriangulationFormatError
from services.exactalg import RationalFunction


def _chord(a, b):
    return (a, b) if a < b else (b, a)


def crosses(d1, d2):
    i, j = _chord(*d1)
    k, l = _chord(*d2)
    return (i < k < j < l) or (k < i < l < j)


def is_perimeter(a, b, N):
    return (a - b) % N in (1, N - 1)


def label_name(index, generation=0):
    return f"y{index}" + (f"~{generation}" if generation else "")


def parse_label(text):
    if not text.startswith("y"):
        raise TriangulationFormatError(f"bad label {text!r}")
    body, _, gen = text[1:].partition("~")
    try:
        return int(body), int(gen or 0)
    except ValueError:
        raise TriangulationFormatError(f"bad label {text!r}") from None


@dataclass(frozen=True)
class Triangulation:
    """Full triangulation with y-labels (index, tilde generation) on the diagonals.

    orientations maps a diagonal to its tail vertex; perimeter_signs lists the
    start vertices j of perimeter edges v_j -> v_{j+1} whose jump is negated."""

    K: int
    labels: tuple
    orientations: tuple = ()
    perimeter_signs: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        N = self.N
        diags = self.diagonals
        if len(diags) != 2 * self.K - 1:
            raise TriangulationFormatError(f"expected {2 * self.K - 1} diagonals, got {len(diags)}")
        for a, b in diags:
            if not (1 <= a < b <= N) or is_perimeter(a, b, N):
                raise TriangulationFormatError(f"({a}, {b}) is not a diagonal of the {N}-gon")
        for i, d1 in enumerate(diags):
            for d2 in diags[i + 1:]:
                if crosses(d1, d2):
                    raise TriangulationFormatError(f"diagonals {d1} and {d2} cross")
        indices = sorted(idx for _, (idx, _g) in self.labels)
        if indices != list(range(2, 2 * self.K + 1)):
            raise TriangulationFormatError(f"labels must be y2..y{2 * self.K}, got {indices}")
        for d, tail in self.orientations:
            if tail not in d:
                raise TriangulationFormatError(f"orientation tail {tail} not on {d}")

    @property
    def N(self):
        return 2 * self.K + 2

    @property
    def diagonals(self):
        return [d for d, _ in self.labels]

    def label_of(self, d):
        return dict(self.labels)[_chord(*d)]

    def var_of(self, d):
        return f"y{self.label_of(d)[0]}"

    def diagonal_of(self, index):
        for d, (idx, _g) in self.labels:
            if idx == index:
                return d
        raise NotADiagonal(f"no diagonal carries y{index}")

    def tail_of(self, d):
        d = _chord(*d)
        return dict(self.orientations).get(d, d[0])

    def neighbors(self, v):
        """Vertices joined to v by a perimeter edge or diagonal, counterclockwise from v+1."""
        N = self.N
        nbrs = {v % N + 1, (v - 2) % N + 1}
        for a, b in self.diagonals:
            if a == v:
                nbrs.add(b)
            elif b == v:
                nbrs.add(a)
        return sorted(nbrs, key=lambda w: (w - v) % N)

    def edge_var(self, a, b):
        """y-variable carried by the edge {a, b}, or None."""
        if _chord(a, b) == (1, 2):
            return "y1"
        if _chord(a, b) in dict(self.labels):
            return self.var_of((a, b))
        return None

    def triangles(self):
        out = set()
        for v in range(1, self.N + 1):
            nb = self.neighbors(v)
            for w1, w2 in zip(nb, nb[1:]):
                out.add(tuple(sorted((v, w1, w2))))
        return sorted(out)

    def with_orientations(self, orientations, perimeter_signs=()):
        return Triangulation(self.K, self.labels,
                             tuple(sorted((_chord(*d), t) for d, t in orientations.items())),
                             frozenset(perimeter_signs))

    def to_json(self):
        return {
            "K": self.K,
            "diagonals": [list(d) for d in self.diagonals],
            "labels": {f"{a},{b}": label_name(*lab) for (a, b), lab in self.labels},
            "orientations": {f"{a},{b}": t for (a, b), t in self.orientations},
            "perimeter_signs": sorted(self.perimeter_signs),
            "distinguished_edge": [1, 2],
        }

    def dumps(self):
        return json.dumps(self.to_json(), sort_keys=True)


def _key(text):
    try:
        a, b = (int(x) for x in text.split(","))
    except ValueError:
        raise TriangulationFormatError(f"bad diagonal key {text!r}") from None
    return _chord(a, b)


def from_json(data):
    if isinstance(data, str):
        data = json.loads(data)
    try:
        K = int(data["K"])
        diagonals = [_chord(int(a), int(b)) for a, b in data["diagonals"]]
        raw_labels = data.get("labels")
        orientations = data.get("orientations", {})
    except (KeyError, TypeError, ValueError) as e:
        raise TriangulationFormatError(f"malformed triangulation JSON: {e}") from None
    if data.get("distinguished_edge", [1, 2]) != [1, 2]:
        raise TriangulationFormatError("the distinguished edge must be [1, 2]")
    if raw_labels is None:
        labels = {d: (j + 2, 0) for j, d in enumerate(sorted(diagonals))}
    else:
        labels = {_key(k): parse_label(v) for k, v in raw_labels.items()}
    if set(labels) != set(diagonals):
        raise TriangulationFormatError("labels do not match the diagonal list")
    return Triangulation(
        K,
        tuple(sorted(labels.items())),
        tuple(sorted((_key(k), int(t)) for k, t in orientations.items())),
        frozenset(int(j) for j in data.get("perimeter_signs", [])),
    )


def triangulation_from_diagonals(K, diagonals, labels=None):
    diagonals = [_chord(*d) for d in diagonals]
    if labels is None:
        labels = {d: (j + 2, 0) for j, d in enumerate(sorted(diagonals))}
    return Triangulation(K, tuple(sorted((_chord(*d), lab) for d, lab in labels.items())))


def fan_triangulation(K):
    """T0: v_{2K+2} joined to v_2..v_{2K}, diagonal (v_j, v_{2K+2}) carrying y_j."""
    N = 2 * K + 2
    labels = {(j, N): (j, 0) for j in range(2, 2 * K + 1)}
    orientations = {(j, N): (N if j % 2 == 0 else j) for j in range(2, 2 * K + 1)}
    T = triangulation_from_diagonals(K, labels.keys(), labels)
    return T.with_orientations(orientations)


def _resolve_diagonal(T, d):
    if isinstance(d, int):
        return T.diagonal_of(d)
    d = _chord(*d)
    if d not in T.diagonals:
        raise NotADiagonal(f"{d} is not a diagonal of the triangulation")
    return d


def quadrilateral(T, d):
    """(a, c1, b, c2): the two triangles on either side of the diagonal (a, b)."""
    a, b = _resolve_diagonal(T, d)
    apexes = [w for w in T.neighbors(a) if w in T.neighbors(b)]
    # one common neighbour on each side of the chord; a second one would force a crossing
    c1, = [w for w in apexes if a < w < b]
    c2, = [w for w in apexes if not a < w < b]
    return a, c1, b, c2


def flip(T, d):
    a, c1, b, c2 = quadrilateral(T, d)
    old = (a, b)
    new = _chord(c1, c2)
    labels = dict(T.labels)
    idx, gen = labels.pop(old)
    labels[new] = (idx, gen + 1)
    orientations = dict(T.orientations)
    orientations.pop(old, None)
    orientations[new] = new[0]
    return Triangulation(T.K, tuple(sorted(labels.items())),
                         tuple(sorted(orientations.items())), T.perimeter_signs)


@dataclass(frozen=True)
class FlipCase:
    case: int
    quadrilateral: tuple
    flipped: tuple
    new_diagonal: tuple

    def to_json(self):
        return {"case": self.case, "quadrilateral": list(self.quadrilateral),
                "flipped": list(self.flipped), "new_diagonal": list(self.new_diagonal)}


def classify_flip(T, d):
    a, c1, b, c2 = quadrilateral(T, d)
    sides = [(a, c1), (c1, b), (b, c2), (c2, a)]
    on_perimeter = sum(1 for u, v in sides if is_perimeter(u, v, T.N))
    return FlipCase(4 - on_perimeter, (a, c1, b, c2), (a, b), _chord(c1, c2))


def quiver_of(T):
    labels = [f"y{j}" for j in range(1, 2 * T.K + 1)]
    pos = {name: i for i, name in enumerate(labels)}
    n = len(labels)
    B = [[0] * n for _ in range(n)]
    for v in range(1, T.N + 1):
        carried = [T.edge_var(v, w) for w in T.neighbors(v)]
        for earlier, later in zip(carried, carried[1:]):
            if earlier and later:
                B[pos[earlier]][pos[later]] += 1
                B[pos[later]][pos[earlier]] -= 1
    # y1 lies on the distinguished edge and its arrows are reversed, so flips act
    # on this quiver by cluster.frame_mutation with y1 inverted, not quiver_mutation
    for j in range(n):
        B[0][j] = -B[0][j]
        B[j][0] = -B[j][0]
    return Quiver.from_matrix(labels, B)


def x_variables(T):
    """x_2..x_N as monomials in y: x_l = y1 * prod_{2<=k<=l} prod_{d at v_k} y_d^((-1)^(k+1))."""
    N = T.N
    y = {f"y{j}": RationalFunction.variable(f"y{j}") for j in range(1, 2 * T.K + 1)}

    def incident(k):
        return [T.var_of(d) for d in T.diagonals if k in d]

    xs = {}
    current = y["y1"]
    for k in range(2, N):
        sign = 1 if k % 2 == 1 else -1
        for name in incident(k):
            current = current * y[name] ** sign
        xs[k] = current
    last = y["y1"]
    for name in incident(1):
        last = last / y[name]
    xs[N] = last
    return xs


def x_variables_fan_closed_form(K):
    """Closed form for T0: x_l = prod_{j<=l} y_j^((-1)^(j+1)), x_{2K+1} = x_{2K}, x_{2K+2} = y1."""
    y = {j: RationalFunction.variable(f"y{j}") for j in range(1, 2 * K + 1)}
    xs = {}
    current = y[1]
    for l in range(2, 2 * K + 1):
        current = current * y[l] ** (1 if l % 2 == 1 else -1)
        xs[l] = current
    xs[2 * K + 1] = xs[2 * K]
    xs[2 * K + 2] = y[1]
    return xs


def _triangulate(vertices):
    if len(vertices) < 4:
        yield frozenset()
        return
    a, b = vertices[0], vertices[-1]
    for k in range(1, len(vertices) - 1):
        apex = vertices[k]
        own = set()
        if k > 1:
            own.add(_chord(a, apex))
        if k < len(vertices) - 2:
            own.add(_chord(apex, b))
        for left in _triangulate(vertices[:k + 1]):
            for right in _triangulate(vertices[k:]):
                yield frozenset(own | left | right)


def all_triangulations(K):
    """Every diagonal set of a triangulation of the (2K+2)-gon; Catalan(2K) of them."""
    return sorted(set(_triangulate(list(range(1, 2 * K + 3)))), key=lambda s: sorted(s))


def flip_graph(K):
    G = nx.Graph()
    tris = all_triangulations(K)
    G.add_nodes_from(tris)
    for diags in tris:
        T = triangulation_from_diagonals(K, diags)
        for d in T.diagonals:
            G.add_edge(diags, frozenset(flip(T, d).diagonals))
    return G


def reachable(T, depth):
    """Labelled triangulations within <= depth flips of T, with the flip word reaching each."""
    def key(S):
        return tuple((d, lab[0]) for d, lab in S.labels)

    seen = {key(T): (T, ())}
    frontier = [(T, ())]
    for _ in range(depth):
        nxt = []
        for S, word in frontier:
            for j in range(2, 2 * S.K + 1):
                R = flip(S, j)
                if key(R) not in seen:
                    seen[key(R)] = (R, word + (j,))
                    nxt.append((R, word + (j,)))
        frontier = nxt
    return list(seen.values())
