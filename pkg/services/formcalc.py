# ============================================================================
# Matrix-valued 1-forms, trace-wedge products and the graph 2-form
# ============================================================================
# A JumpGraph is purely combinatorial: vertices hold their incident edges in
# counterclockwise order, each edge holds its orientation and jump matrix.
# The 2-form of a graph is the sum over vertices v and k = 1..n_v-1 of
#     Tr( K_[1:k]^-1 dK_[1:k]  ^  J_k^-1 dJ_k ),   K_[1:k] = J_1 ... J_k,
# where J_i are the jumps of the edges oriented away from v.
# ============================================================================

import sys
from dataclasses import dataclass, field
from fractions import Fraction

from services import fraction_linalg
from services.errors import (
    DegenerateForm,
    NotLogCanonical,
    ShapeMismatch,
    SingularMatrix,
    VertexRelationViolated,
)
from services.exactalg import REGISTRY, MatrixRF, RationalFunction, rf_sum
from services.poisson import PoissonStructure


class OneForm:
    """Map variable name -> MatrixRF coefficient of d(variable); absent keys are zero."""

    def __init__(self, components=None, size=None):
        self.components = {v: M for v, M in (components or {}).items()}
        if size is None:
            if not self.components:
                raise ShapeMismatch("size required for an empty one-form")
            size = next(iter(self.components.values())).rows
        self.size = size
        for M in self.components.values():
            if M.shape != (size, size):
                raise ShapeMismatch(f"component of shape {M.shape} in a {size}x{size} one-form")

    def conjugate(self, M, M_inv):
        """M_inv * omega * M, componentwise."""
        return OneForm({v: M_inv * C * M for v, C in self.components.items()}, self.size)

    def __add__(self, other):
        out = dict(self.components)
        for v, C in other.components.items():
            out[v] = out[v] + C if v in out else C
        return OneForm(out, self.size)

    def is_zero(self):
        return all(all(x.is_zero() for row in C.entries for x in row) for C in self.components.values())


class TwoForm:
    """Coefficients of dv_i ^ dv_j stored for registry order i < j."""

    def __init__(self, coefficients=None):
        self.coefficients = {}
        for (a, b), c in (coefficients or {}).items():
            self._accumulate(a, b, c)

    def _accumulate(self, a, b, c):
        if a == b:
            return
        ia, ib = REGISTRY.register(a), REGISTRY.register(b)
        if ia > ib:
            a, b, c = b, a, -c
        key = (a, b)
        self.coefficients[key] = self.coefficients[key] + c if key in self.coefficients else c

    def coefficient(self, a, b):
        if a == b:
            return RationalFunction.zero()
        if REGISTRY.register(a) < REGISTRY.register(b):
            return self.coefficients.get((a, b), RationalFunction.zero())
        return -self.coefficients.get((b, a), RationalFunction.zero())

    def __add__(self, other):
        out = TwoForm(self.coefficients)
        for (a, b), c in other.coefficients.items():
            out._accumulate(a, b, c)
        return out

    def scale(self, s):
        return TwoForm({k: c * s for k, c in self.coefficients.items()})

    def nonzero_items(self):
        return sorted(((k, c) for k, c in self.coefficients.items() if not c.is_zero()),
                      key=lambda kc: (REGISTRY.register(kc[0][0]), REGISTRY.register(kc[0][1])))

    def is_zero(self):
        return not self.nonzero_items()

    def __eq__(self, other):
        if not isinstance(other, TwoForm):
            return NotImplemented
        return (self + other.scale(-1)).is_zero()

    __hash__ = None

    def to_json(self):
        names = sorted({v for k, _ in self.nonzero_items() for v in k}, key=REGISTRY.register)
        return {
            "vars": names,
            "entries": [[a, b, str(c)] for (a, b), c in self.nonzero_items()],
        }


@dataclass
class LogCanonicalForm:
    vars: list
    omega: list

    def scaled(self, s):
        s = Fraction(s)
        return LogCanonicalForm(list(self.vars), [[x * s for x in row] for row in self.omega])

    def entry(self, a, b):
        return self.omega[self.vars.index(a)][self.vars.index(b)]

    def to_json(self):
        n = len(self.vars)
        return {
            "vars": list(self.vars),
            "entries": [[self.vars[i], self.vars[j], str(self.omega[i][j])]
                        for i in range(n) for j in range(i + 1, n) if self.omega[i][j] != 0],
        }


def maurer_cartan(M, side="left"):
    M_inv = M.inverse()
    comps = {}
    for idx in M.variables():
        name = REGISTRY.name(idx)
        dM = M.differentiate(name)
        comps[name] = M_inv * dM if side == "left" else dM * M_inv
    return OneForm(comps, M.rows)


def wedge_trace(A, B):
    if A.size != B.size:
        raise ShapeMismatch(f"one-forms of size {A.size} and {B.size}")
    out = {}
    for vi, Ai in A.components.items():
        for vj, Bj in B.components.items():
            if vi == vj:
                continue
            t = (Ai * Bj).trace()
            if t.is_zero():
                continue
            # Tr(A_i B_j) dv_i ^ dv_j, folded onto the ordered pair
            if REGISTRY.register(vi) < REGISTRY.register(vj):
                out.setdefault((vi, vj), []).append(t)
            else:
                out.setdefault((vj, vi), []).append(-t)
    return TwoForm({k: rf_sum(v) for k, v in out.items()})


@dataclass
class _Edge:
    tail: str
    head: object
    jump: MatrixRF
    inverse: MatrixRF = None


@dataclass
class JumpGraph:
    """Edges with orientation and jump; each vertex lists (edge id) counterclockwise.

    A head of None marks a ray running off to infinity."""

    size: int
    edges: dict = field(default_factory=dict)
    order: dict = field(default_factory=dict)

    def add_edge(self, edge_id, tail, head, jump):
        if jump.shape != (self.size, self.size):
            raise ShapeMismatch(f"jump on {edge_id} has shape {jump.shape}")
        self.edges[edge_id] = _Edge(tail, head, jump)

    def set_order(self, vertex, edge_ids):
        self.order[vertex] = list(edge_ids)

    def edge_inverse(self, edge_id):
        e = self.edges[edge_id]
        if e.inverse is None:
            e.inverse = e.jump.inverse()
        return e.inverse

    def outgoing_jump(self, vertex, edge_id):
        e = self.edges[edge_id]
        if e.tail == vertex:
            return e.jump
        if e.head == vertex:
            return self.edge_inverse(edge_id)
        raise KeyError(f"edge {edge_id} is not incident to {vertex}")

    def jumps_at(self, vertex, start=0):
        ids = self.order[vertex]
        ids = ids[start:] + ids[:start]
        return [self.outgoing_jump(vertex, e) for e in ids]

    def vertex_product(self, vertex, start=0):
        product = MatrixRF.identity(self.size)
        for J in self.jumps_at(vertex, start):
            product = product * J
        return product

    def validate(self):
        for v in self.order:
            P = self.vertex_product(v)
            if not P.is_identity():
                raise VertexRelationViolated(v, str(P))
        return True


def vertex_two_form(jumps):
    """Contribution of one vertex given its outgoing jumps in counterclockwise order."""
    total = TwoForm()
    theta = None
    for k, J in enumerate(jumps[:-1]):
        mu = maurer_cartan(J)
        if theta is None:
            theta = mu
            continue
        theta = theta.conjugate(J, J.inverse()) + mu
        total = total + wedge_trace(theta, mu)
    return total


def graph_two_form(G, starts=None, validate=True):
    if validate:
        G.validate()
    total = TwoForm()
    for v in G.order:
        start = (starts or {}).get(v, 0)
        total = total + vertex_two_form(G.jumps_at(v, start))
    return total


def to_log_canonical(omega, vars):
    n = len(vars)
    known = set(vars)
    for (a, b), c in omega.nonzero_items():
        if a not in known or b not in known:
            raise NotLogCanonical((a, b), f"variable outside the coordinate list: {c}")
    W = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            a, b = vars[i], vars[j]
            c = omega.coefficient(a, b) * RationalFunction.variable(a) * RationalFunction.variable(b)
            if not c.is_constant():
                raise NotLogCanonical((a, b), str(c))
            W[i][j] = c.constant_value()
            W[j][i] = -W[i][j]
    return LogCanonicalForm(list(vars), W)


def poisson_from_form(L):
    try:
        inv = fraction_linalg.inverse_matrix(L.omega)
    except SingularMatrix:
        raise DegenerateForm(f"log-canonical form over {L.vars} is degenerate") from None
    P = inv.T
    pi = {}
    n = len(L.vars)
    for i in range(n):
        for j in range(i + 1, n):
            if P[i, j] != 0:
                a, b = L.vars[i], L.vars[j]
                pi[(a, b)] = RationalFunction.variable(a) * RationalFunction.variable(b) * P[i, j]
    print(f"[poisson_from_form] inverted {n}x{n} log-canonical form", file=sys.stderr)
    return PoissonStructure(list(L.vars), pi, log_matrix=fraction_linalg.to_lists(P))
