import math
from dataclasses import dataclass, field
from fractions import Fraction

from services import fraction_linalg
from services.errors import UnknownVariable
from services.exactalg import RationalFunction, rf_sum


@dataclass
class PoissonStructure:
    """Coordinates plus {v_i, v_j} for i < j in coordinate order.

    log_matrix is set when the structure is log-canonical: {v_i, v_j} = c_ij v_i v_j."""

    coords: list
    pi: dict = field(default_factory=dict)
    log_matrix: list = None

    def entry(self, a, b):
        if a == b:
            return RationalFunction.zero()
        if (a, b) in self.pi:
            return self.pi[(a, b)]
        if (b, a) in self.pi:
            return -self.pi[(b, a)]
        return RationalFunction.zero()

    def check_vars(self, f):
        extra = [v for v in f.variable_names() if v not in self.coords]
        if extra:
            raise UnknownVariable(f"{extra} not among coordinates {self.coords}")

    def to_json(self):
        return {
            "coords": list(self.coords),
            "entries": [[a, b, str(c)] for (a, b), c in self.pi.items() if not c.is_zero()],
        }


def _gradient(P, f):
    names = set(f.variable_names())
    return {v: f.differentiate(v) for v in P.coords if v in names}


def bracket(P, f, g):
    f = RationalFunction.coerce(f)
    g = RationalFunction.coerce(g)
    P.check_vars(f)
    P.check_vars(g)
    df, dg = _gradient(P, f), _gradient(P, g)
    zero = RationalFunction.zero()
    pieces = []
    for (a, b), pab in P.pi.items():
        fa, fb, ga, gb = df.get(a, zero), df.get(b, zero), dg.get(a, zero), dg.get(b, zero)
        if (fa.is_zero() or gb.is_zero()) and (fb.is_zero() or ga.is_zero()):
            continue
        pieces.append(pab * (fa * gb - fb * ga))
    return rf_sum(pieces)


def bracket_at(P, f, g, point):
    """Exact value of {f, g} at a rational point, without forming the symbolic bracket."""
    f = RationalFunction.coerce(f)
    g = RationalFunction.coerce(g)
    df = {v: d.eval_at(point) for v, d in _gradient(P, f).items()}
    dg = {v: d.eval_at(point) for v, d in _gradient(P, g).items()}
    total = Fraction(0)
    for (a, b), pab in P.pi.items():
        t = df.get(a, 0) * dg.get(b, 0) - df.get(b, 0) * dg.get(a, 0)
        if t:
            total += pab.eval_at(point) * t
    return total


def bracket_matrix(P, f, M):
    """Entrywise {f, M_ij}."""
    return M.map(lambda x: bracket(P, f, x))


def jacobiator(P, f, g, h):
    return (bracket(P, f, bracket(P, g, h))
            + bracket(P, g, bracket(P, h, f))
            + bracket(P, h, bracket(P, f, g)))


def is_casimir(P, f):
    return all(bracket(P, f, RationalFunction.variable(v)).is_zero() for v in P.coords)


def fn_coordinates(K):
    return [f"s{j}" for j in range(1, 2 * K + 3)] + ["lambda"]


def fn_structure(K):
    """The Flaschka-Newell bracket on (s_1, ..., s_{2K+2}, lambda)."""
    n = 2 * K + 2
    s = {j: RationalFunction.variable(f"s{j}") for j in range(1, n + 1)}
    lam = RationalFunction.variable("lambda")
    pi = {}
    for j in range(1, n + 1):
        for l in range(j + 1, n + 1):
            value = (-1 if (l - j - 1) % 2 else 1) * s[j] * s[l]
            if l == j + 1:
                value = value + 1
            if j == 1 and l == n:
                value = value - lam ** -2
            pi[(f"s{j}", f"s{l}")] = value
        pi[(f"s{j}", "lambda")] = ((-1) ** j) * s[j] * lam
    return PoissonStructure(fn_coordinates(K), pi)


def log_canonical_structure(vars, C):
    """{v_i, v_j} = C_ij v_i v_j."""
    pi = {}
    for i, a in enumerate(vars):
        for j in range(i + 1, len(vars)):
            c = Fraction(C[i][j])
            if c:
                b = vars[j]
                pi[(a, b)] = RationalFunction.variable(a) * RationalFunction.variable(b) * c
    return PoissonStructure(list(vars), pi, log_matrix=[[Fraction(x) for x in row] for row in C])


def structure_matrix_at(P, point):
    n = len(P.coords)
    M = [[Fraction(0)] * n for _ in range(n)]
    for i, a in enumerate(P.coords):
        for j in range(i + 1, n):
            v = P.entry(a, P.coords[j]).eval_at(point)
            M[i][j] = v
            M[j][i] = -v
    return M


def rank_at(P, point):
    return fraction_linalg.rank(structure_matrix_at(P, point))


def monomial_casimirs(P):
    """Kernel vectors k of a log-canonical matrix; each gives the Casimir prod v_i^k_i."""
    if P.log_matrix is None:
        raise ValueError("structure is not log-canonical")
    basis = fraction_linalg.kernel(P.log_matrix)
    out = []
    for k in basis:
        lcm = 1
        for x in k:
            lcm = math.lcm(lcm, x.denominator)
        exps = {v: int(x * lcm) for v, x in zip(P.coords, k) if x}
        out.append(RationalFunction.monomial(exps))
    return out

