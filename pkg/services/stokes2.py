# ============================================================================
# SL2 pipeline: jump graphs of triangulations, Stokes matrices, the Stokes
# 2-form and its Poisson structure, and the verification reports built on them
# ============================================================================
# Conventions:
#   D(x) = diag(1/x, x),  V(y) = [[0, -y], [1/y, 0]],  A = [[0, 1], [-1, -1]]
#   odd Stokes matrices are upper unitriangular U(s), even ones lower L(s)
#   S_1 ... S_{2K+2} diag(lambda, 1/lambda) = 1
#   the ray at v_{2K+2} carries the merged jump S_{2K+2} diag(lambda, 1/lambda)
#   on the fan lambda = (-1)^K prod y_{2j}^2
# ============================================================================

import itertools
import os
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from services import cluster, polygon
from services.errors import (
    DegenerateForm,
    NotLogCanonical,
    OddExponent,
    OrientationInvalid,
    TriangularityViolated,
)
from services.exactalg import MatrixRF, RationalFunction, commutator, make_rng, random_point, rf_equal
from services.formcalc import (
    JumpGraph,
    graph_two_form,
    poisson_from_form,
    to_log_canonical,
    vertex_two_form,
)
from services.poisson import (
    bracket,
    bracket_at,
    bracket_matrix,
    fn_coordinates,
    fn_structure,
    is_casimir,
    jacobiator,
    rank_at,
)
from services.reports import Report, fraction_matrix_json

MAX_K = int(os.environ.get("STOKES_MAX_K", "3"))
MAX_K_IDEAL = int(os.environ.get("STOKES_MAX_K_IDEAL", "2"))
SAMPLE_POINTS = int(os.environ.get("STOKES_SAMPLE_POINTS", "50"))

SIGMA3 = MatrixRF.diag([1, -1])
SIGMA_PLUS = MatrixRF([[0, 1], [0, 0]])
SIGMA_MINUS = MatrixRF([[0, 0], [1, 0]])
A_MATRIX = MatrixRF([[0, 1], [-1, -1]])


def D(x):
    x = RationalFunction.coerce(x)
    return MatrixRF.diag([1 / x, x])


def V(y):
    y = RationalFunction.coerce(y)
    return MatrixRF([[0, -y], [1 / y, 0]])


def upper(s):
    return MatrixRF([[1, s], [0, 1]])


def lower(s):
    return MatrixRF([[1, 0], [s, 1]])


def formal_monodromy(lam):
    lam = RationalFunction.coerce(lam)
    return MatrixRF.diag([lam, 1 / lam])


def y_names(K):
    return [f"y{j}" for j in range(1, 2 * K + 1)]


def _y(name):
    return RationalFunction.variable(name)


@dataclass
class StokesData:
    K: int
    S: list
    Lambda: MatrixRF
    s: list
    lam: RationalFunction
    triangulation: object = None
    graph: JumpGraph = None
    orientation: dict = field(default_factory=dict)

    def product(self):
        P = MatrixRF.identity(2)
        for S in self.S:
            P = P * S
        return P * self.Lambda

    def substitutions(self):
        """{s_j: s_j(y), lambda: lambda(y)} for pushing FN expressions to y."""
        out = {f"s{j + 1}": s for j, s in enumerate(self.s)}
        out["lambda"] = self.lam
        return out


def stokes_from_parameters(K, s, lam):
    S = [upper(x) if j % 2 == 0 else lower(x) for j, x in enumerate(s)]
    return StokesData(K, S, formal_monodromy(lam), list(s), RationalFunction.coerce(lam))


# --- graph construction ---

def _perimeter_jump(T, xs, j):
    if j == 1:
        J = V(1 / _y("y1"))
    elif j % 2 == 0:
        J = D(xs[j])
    else:
        J = V(1 / xs[j])
    return -J if j in T.perimeter_signs else J


def _edge_id(T, v, w):
    N = T.N
    if polygon.is_perimeter(v, w, N):
        return ("p", v if w == v % N + 1 else w)
    return ("d",) + (min(v, w), max(v, w))


def _polygon_order(T, v):
    """Edges at v counterclockwise after the Stokes ray: perimeter to v+1, spokes and diagonals, perimeter to v-1."""
    nb = T.neighbors(v)
    ids = []
    for i, w in enumerate(nb):
        ids.append(_edge_id(T, v, w))
        if i + 1 < len(nb):
            ids.append(("s",) + tuple(sorted((v, w, nb[i + 1]))) + (v,))
    return ids


def _skeleton(T):
    xs = polygon.x_variables(T)
    N = T.N
    G = JumpGraph(2)
    for j in range(1, N + 1):
        G.add_edge(("p", j), j, j % N + 1, _perimeter_jump(T, xs, j))
    for d in T.diagonals:
        tail = T.tail_of(d)
        head = d[1] if tail == d[0] else d[0]
        G.add_edge(("d",) + d, tail, head, V(_y(T.var_of(d))))
    for tri in T.triangles():
        center = ("c",) + tri
        for v in tri:
            G.add_edge(("s",) + tri + (v,), v, center, A_MATRIX)
        G.set_order(center, [("s",) + tri + (v,) for v in tri])
    for v in range(1, N + 1):
        G.set_order(v, _polygon_order(T, v))
    return G


def _diagonal_sign(M):
    """0 when diag(M) = (1, 1), 1 when (-1, -1); None otherwise."""
    a, b = M[0, 0], M[1, 1]
    if a == 1 and b == 1:
        return 0
    if a == -1 and b == -1:
        return 1
    return None


def _parities(T, G):
    parity = {}
    N = T.N
    for v in range(1, N + 1):
        M = G.vertex_product(v).inverse()
        if v == N:
            if not M[0, 1].is_zero():
                raise TriangularityViolated(f"S_{v} Lambda is not lower triangular: {M}")
            _, lc = M[0, 0].num.leading()
            parity[v] = 1 if lc < 0 else 0
            continue
        off = M[1, 0] if v % 2 == 1 else M[0, 1]
        b = _diagonal_sign(M)
        if not off.is_zero() or b is None:
            kind = "upper" if v % 2 == 1 else "lower"
            raise TriangularityViolated(f"S_{v} is not {kind} unitriangular up to sign: {M}")
        parity[v] = b
    return parity


def _gf2_rank(rows):
    rows = [r for r in rows if r]
    rank = 0
    while rows:
        pivot = rows.pop()
        low = pivot & -pivot
        rows = [r ^ pivot if r & low else r for r in rows]
        rows = [r for r in rows if r]
        rank += 1
    return rank


def _choose_flips(T, parity):
    """Smallest set of edge sign changes making every Stokes matrix unitriangular.

    Perimeter changes are avoided first, then diagonal reorientations; ties
    broken by enumeration order. The parity at v_{2K+2} (lambda with positive
    leading coefficient) is imposed only when the parity sum is even."""
    N = T.N
    diag_edges = [(("d",) + d, d) for d in T.diagonals]
    perim_edges = [(("p", j), (j, j % N + 1)) for j in range(1, N + 1)]

    def satisfied(flips, include_last):
        count = dict.fromkeys(range(1, N + 1), 0)
        for _, (a, b) in flips:
            count[a] += 1
            count[b] += 1
        return all(count[v] % 2 == parity[v] for v in count if include_last or v != N)

    include_last = sum(parity.values()) % 2 == 0
    chosen = None
    for wp in range(N + 1):
        for ps in itertools.combinations(perim_edges, wp):
            for wd in range(len(diag_edges) + 1):
                for ds in itertools.combinations(diag_edges, wd):
                    if satisfied(ps + ds, include_last):
                        chosen = (ps, ds)
                        break
                if chosen:
                    break
            if chosen:
                break
        if chosen:
            break

    # every assignment passing the unitriangularity constraints at v_1..v_{2K+1}
    rows = []
    edges = diag_edges + perim_edges
    for v in range(1, N):
        mask = 0
        for bit, (_, (a, b)) in enumerate(edges):
            if v in (a, b):
                mask |= 1 << bit
        rows.append(mask)
    passing = 2 ** (len(edges) - _gf2_rank(rows))
    if chosen is None:
        raise OrientationInvalid(f"no sign assignment satisfies the vertex parities of {T.diagonals}")
    return chosen, include_last, passing


def build_sigma0(T):
    """Jump graph of T with orientations fixed so that all Stokes matrices are unitriangular."""
    return stokes_matrices(T).graph


@lru_cache(maxsize=64)
def stokes_matrices(T):
    G = _skeleton(T)
    parity = _parities(T, G)
    (ps, ds), last_parity_used, passing = _choose_flips(T, parity)
    orientations = {d: T.tail_of(d) for d in T.diagonals}
    for _, (a, b) in ds:
        orientations[(a, b)] = b if orientations[(a, b)] == a else a
    signs = set(T.perimeter_signs) ^ {j for (_, j), _ in ps}
    T = T.with_orientations(orientations, signs)
    G = _skeleton(T)
    N = T.N

    S, s = [], []
    for v in range(1, N):
        M = G.vertex_product(v).inverse()
        ok = M.is_upper_unitriangular() if v % 2 == 1 else M.is_lower_unitriangular()
        if not ok:
            raise OrientationInvalid(f"no edge orientation makes S_{v} unitriangular: {M}")
        S.append(M)
        s.append(M[0, 1] if v % 2 == 1 else M[1, 0])
        G.add_edge(("r", v), v, None, M)
        G.set_order(v, [("r", v)] + G.order[v])
    M = G.vertex_product(N).inverse()
    lam = M[0, 0]
    if not rf_equal(M[1, 1], 1 / lam):
        raise TriangularityViolated(f"S_{N} Lambda has inconsistent diagonal: {M}")
    s.append(M[1, 0] / lam)
    S.append(lower(s[-1]))
    G.add_edge(("r", N), N, None, M)
    G.set_order(N, [("r", N)] + G.order[N])
    G.validate()

    orientation = {
        "diagonal_tails": {f"{a},{b}": t for (a, b), t in sorted(orientations.items())},
        "perimeter_signs": sorted(signs),
        "last_vertex_parity_used": last_parity_used,
        "passing_assignments": passing,
    }
    print(f"[stokes_matrices] K={T.K} diagonals={T.diagonals} flips={len(ps) + len(ds)}", file=sys.stderr)
    return StokesData(T.K, S, formal_monodromy(lam), s, lam, T, G, orientation)


def lambda_sign(K):
    """Sign of the formal monodromy: lambda = (-1)^K prod y_{2j}^2 makes the product exactly 1."""
    return -1 if K % 2 else 1


def prop1_parametrization(K):
    """Closed-form Stokes parameters of the fan triangulation in the y variables."""
    y = {j: _y(f"y{j}") for j in range(1, 2 * K + 1)}

    def alternating(upto, odd_sign):
        out = RationalFunction.one()
        for j in range(1, upto + 1):
            out = out * y[j] ** (2 * (odd_sign if j % 2 == 1 else -odd_sign))
        return out

    s = [-(y[1] ** -2)]
    for k in range(1, K + 1):
        s.append((1 + y[2 * k] ** 2) * alternating(2 * k, 1))
        if k < K:
            s.append(-(1 + y[2 * k + 1] ** 2) * alternating(2 * k + 1, -1))
    s.append(-alternating(2 * K, -1))
    # 1 + y2^2 (1 + y3^2 (... (1 + y_{2K}^2))), odd indices included
    nested = RationalFunction.one()
    for j in range(2 * K, 1, -1):
        nested = 1 + y[j] ** 2 * nested
    tail = RationalFunction.one()
    for j in range(1, K + 1):
        tail = tail * y[2 * j] ** -4
    s.append(y[1] ** 2 * nested * tail)
    lam = RationalFunction.coerce(lambda_sign(K))
    for j in range(1, K + 1):
        lam = lam * y[2 * j] ** 2
    return stokes_from_parameters(K, s, lam)


def monodromy_check(SD):
    return SD.product().is_identity()


def fn_matrix(K):
    """F_K = U(s1) L(s2) ... U(s_{2K+1}) L(s_{2K+2}) lambda^sigma3 over the FN coordinates."""
    s = [_y(f"s{j}") for j in range(1, 2 * K + 3)]
    return stokes_from_parameters(K, s, _y("lambda")).product()


# --- forms ---

def stokes_log_form(T):
    """Log-canonical coefficients of the graph 2-form, before halving and sign calibration."""
    SD = stokes_matrices(T)
    return to_log_canonical(graph_two_form(SD.graph), y_names(T.K))


@lru_cache(maxsize=None)
def sign_convention():
    """Global sign of the 2-form fixed by {s1, s2} = 1 + s1 s2 on the square."""
    T = polygon.fan_triangulation(1)
    SD = stokes_matrices(T)
    L = stokes_log_form(T)
    for eps in (1, -1):
        P = poisson_from_form(L.scaled(Fraction(eps, 2)))
        if rf_equal(bracket(P, SD.s[0], SD.s[1]), 1 + SD.s[0] * SD.s[1]):
            print(f"[sign_convention] 2-form sign fixed to {eps:+d}", file=sys.stderr)
            return eps
    raise DegenerateForm("neither sign of the 2-form reproduces the FN bracket on the square")


def stokes_form(T):
    """(W, P): W = (eps/2) * log-canonical graph form, P its Poisson structure W^-t."""
    W = stokes_log_form(T).scaled(Fraction(sign_convention(), 2))
    return W, poisson_from_form(W)


def fan_form_pattern(K):
    """8 on every pair (y_{2j-1}, y_{2l}) with l >= j, as a skew matrix over y1..y_{2K}."""
    n = 2 * K
    W = [[Fraction(0)] * n for _ in range(n)]
    for j in range(1, K + 1):
        for l in range(j, K + 1):
            a, b = 2 * j - 2, 2 * l - 1
            W[a][b] = Fraction(8)
            W[b][a] = Fraction(-8)
    return W


def quarter_adjacency(Q):
    return [[Fraction(x, 4) for x in row] for row in Q.B]


def star_merge_check(T):
    """Vertex v_{2K+2} contribution with the last rays merged (S Lambda) and separate (S, Lambda)."""
    SD = stokes_matrices(T)
    G = SD.graph
    merged = G.jumps_at(T.N)
    separate = [SD.S[-1], SD.Lambda] + merged[1:]
    return vertex_two_form(merged), vertex_two_form(separate)


def rotation_check(T):
    """Per vertex, whether every cyclic starting edge gives the same contribution."""
    G = stokes_matrices(T).graph
    out = {}
    for v, ids in G.order.items():
        base = vertex_two_form(G.jumps_at(v, 0))
        out[v] = all(vertex_two_form(G.jumps_at(v, k)) == base for k in range(1, len(ids)))
    return out


# --- reports ---

def verify_monodromy(K, timing=False):
    report = Report("monodromy", {"K": K}, timing=timing)
    with report.timer():
        closed = prop1_parametrization(K)
        report.add("closed-form product S1...S_{2K+2} Lambda = 1", monodromy_check(closed),
                   None if monodromy_check(closed) else str(closed.product()))
        report.compare("trace F on the constraint = 2", closed.product().trace(), 2)
        report.conventions["lambda_sign"] = lambda_sign(K)
        if K <= MAX_K + 1:
            solved = stokes_matrices(polygon.fan_triangulation(K))
            report.add("graph-solved product = 1", monodromy_check(solved), str(solved.product()))
            for j, (a, b) in enumerate(zip(solved.s, closed.s), start=1):
                report.compare(f"s{j} graph = closed form", a, b)
            report.compare("lambda graph = closed form", solved.lam, closed.lam)
            report.conventions["orientation"] = solved.orientation
        report.data["s"] = [str(x) for x in closed.s]
        report.data["lambda"] = str(closed.lam)
    return report


def verify_form(K, T=None, timing=False):
    fan = T is None
    T = polygon.fan_triangulation(K) if fan else T
    report = Report("form", {"K": T.K, "triangulation": T.to_json()}, timing=timing)
    with report.timer():
        try:
            raw = stokes_log_form(T)
        except NotLogCanonical as e:
            report.add("2-form is log-canonical in y", False, f"{e.pair[0]}^{e.pair[1]}: {e.residual}")
            return report
        report.add("2-form is log-canonical in y", True)
        eps = sign_convention()
        report.conventions["omega_sign"] = eps
        if fan:
            pattern = fan_form_pattern(T.K)
            plus = raw.omega == pattern
            minus = raw.omega == [[-x for x in row] for row in pattern]
            report.add("Omega = +-8 sum dlog y_{2j-1} ^ dlog y_{2l}", plus or minus,
                       fraction_matrix_json(raw.omega))
            report.conventions["omega_matches"] = "+8" if plus else ("-8" if minus else "none")
        W, P = stokes_form(T)
        expected = quarter_adjacency(polygon.quiver_of(T))
        report.add("P = 1/4 Adj(Q(T))", P.log_matrix == expected, fraction_matrix_json(P.log_matrix))
        if fan:
            tri = quarter_adjacency(cluster.dynkin_a(2 * T.K))
            report.add("P = 1/4 tridiagonal", P.log_matrix == tri, fraction_matrix_json(P.log_matrix))
        if T.K <= 2:
            merged, separate = star_merge_check(T)
            report.add("merging the last two rays leaves the form unchanged", merged == separate)
            rot = rotation_check(T)
            bad = [str(v) for v, ok in rot.items() if not ok]
            report.add("form independent of the starting edge at every vertex", not bad, ", ".join(bad))
        report.data["W"] = W.to_json()
        report.data["P"] = fraction_matrix_json(P.log_matrix)
    return report


def verify_fn_pushforward(K, seed=0, timing=False):
    report = Report("fn-check", {"K": K, "seed": seed}, timing=timing)
    with report.timer():
        T = polygon.fan_triangulation(K)
        SD = stokes_matrices(T)
        _, P = stokes_form(T)
        FN = fn_structure(K)
        coords = fn_coordinates(K)
        images = SD.substitutions()
        values = dict(images)
        symbolic = K <= MAX_K
        points = []
        if not symbolic:
            rng = make_rng(seed)
            points = [random_point(y_names(K), rng) for _ in range(SAMPLE_POINTS)]
        report.conventions["mode"] = "symbolic" if symbolic else f"pointwise at {len(points)} points"
        for i, a in enumerate(coords):
            for b in coords[i + 1:]:
                name = f"{{{a}, {b}}}"
                if symbolic:
                    lhs = bracket(P, values[a], values[b])
                    rhs = FN.entry(a, b).substitute(images)
                    report.compare(name, lhs, rhs)
                else:
                    bad = None
                    pushed = FN.entry(a, b).substitute(images)
                    for pt in points:
                        lhs = bracket_at(P, values[a], values[b], pt)
                        rhs = pushed.eval_at(pt)
                        if lhs != rhs:
                            bad = f"{lhs} != {rhs} at {pt}"
                            break
                    report.add(name, bad is None, bad)
    return report


def _flip_relations(T, d):
    """Y-seed images of the squared variables under the flip of d."""
    K = T.K
    Q = polygon.quiver_of(T)
    Ys = {f"y{j}": _y(f"Y{j}") for j in range(1, 2 * K + 1)}
    seed = cluster.seed_for_flip(Q, Ys, "y1")
    a, _, b, _ = polygon.quadrilateral(T, d)
    k = T.var_of((a, b))
    mutated = cluster.y_seed_mutation(seed, k)
    images = cluster.unframe_seed(mutated, "y1")
    return k, {f"Y{label[1:]}": value for label, value in images.items()}


def to_squares(SD):
    mapping = {f"y{j}": f"Y{j}" for j in range(1, 2 * SD.K + 1)}
    return [x.halve_exponents(mapping) for x in SD.s], SD.lam.halve_exponents(mapping)


def _compare_pointwise(report, name, lhs, rhs, points):
    bad = None
    for pt in points:
        a, b = lhs.eval_at(pt), rhs.eval_at(pt)
        if a != b:
            bad = f"{a} != {b} at {pt}"
            break
    report.add(name, bad is None, bad)


def verify_flip_mutation(T, d, seed=0, timing=False):
    report = Report("flip", {"K": T.K, "diagonal": d if isinstance(d, int) else list(d),
                             "triangulation": T.to_json(), "seed": seed}, timing=timing)
    with report.timer():
        case = polygon.classify_flip(T, d)
        T2 = polygon.flip(T, d)
        report.data["case"] = case.to_json()
        report.data["after"] = T2.to_json()
        report.conventions["flip_case"] = case.case

        before, after = stokes_matrices(T), stokes_matrices(T2)
        try:
            s_old, lam_old = to_squares(before)
            s_new, lam_new = to_squares(after)
            report.add("Stokes data even in every y", True)
        except OddExponent as e:
            report.add("Stokes data even in every y", False, str(e))
            return report

        k, relations = _flip_relations(T, d)
        report.data["relations"] = {name: str(v) for name, v in relations.items()}
        pairs = [(f"s{j}", b.substitute(relations), a) for j, (a, b) in enumerate(zip(s_old, s_new), start=1)]
        pairs.append(("lambda", lam_new.substitute(relations), lam_old))
        if T.K <= MAX_K:
            report.conventions["mode"] = "symbolic"
            for name, lhs, rhs in pairs:
                report.compare(name, lhs, rhs)
        else:
            # Y = y^2, so only positive points are meaningful
            rng = make_rng(seed)
            names = [f"Y{j}" for j in range(1, 2 * T.K + 1)]
            points = [random_point(names, rng, positive=True) for _ in range(SAMPLE_POINTS)]
            report.conventions["mode"] = f"pointwise at {len(points)} points"
            for name, lhs, rhs in pairs:
                _compare_pointwise(report, name, lhs, rhs, points)

        Q_before, Q_after = polygon.quiver_of(T), polygon.quiver_of(T2)
        framed = cluster.frame_mutation(Q_before, k, ["y1"])
        report.add(f"Q(flip T) = mutation of Q(T) at {k} in the y1-inverted frame",
                   framed == Q_after, str(Q_after.matrix()))
        report.conventions["plain_mutation_agrees"] = cluster.quiver_mutation(Q_before, k) == Q_after

        _, P = stokes_form(T2)
        expected = quarter_adjacency(Q_after)
        report.add("P(flip T) = 1/4 Adj(Q(flip T))", P.log_matrix == expected,
                   fraction_matrix_json(P.log_matrix))
        report.data["P_after"] = fraction_matrix_json(P.log_matrix)
        report.data["quiver_after"] = Q_after.to_json()
    return report


def verify_prop_ideal(K, seed=0, timing=False):
    report = Report("ideal-check", {"K": K, "seed": seed}, timing=timing)
    with report.timer():
        FN = fn_structure(K)
        F = fn_matrix(K)
        n = 2 * K + 2
        s = {j: _y(f"s{j}") for j in range(1, n + 1)}
        lam = _y("lambda")
        identity = MatrixRF.identity(2)

        def rhs(j, M):
            if j == 1:
                return commutator(SIGMA3, M) * (s[1] / 2) + commutator(SIGMA_MINUS, M)
            if j == n:
                return commutator(M, SIGMA3) * (s[n] / 2) + commutator(SIGMA_PLUS, M) * lam ** -2
            if j == "lambda":
                return commutator(SIGMA3, M) * (lam / 2)
            return commutator(M, SIGMA3) * (((-1) ** j) * s[j] / 2)

        targets = list(range(1, n + 1)) + ["lambda"]
        for j in targets:
            f = lam if j == "lambda" else s[j]
            label = "lambda" if j == "lambda" else f"s{j}"
            report.compare(f"{{{label}, F}}", bracket_matrix(FN, f, F), rhs(j, F))
            report.add(f"{{{label}, F}} right side vanishes at F = 1", rhs(j, identity) == MatrixRF.zeros(2))
        report.conventions["lambda_identity"] = "{lambda, F} = (lambda/2)[sigma3, F]"

        trace = F.trace()
        report.add("Tr F is a Casimir", is_casimir(FN, trace))

        if K <= MAX_K_IDEAL:
            coords = fn_coordinates(K)
            for a, b, c in itertools.combinations(coords, 3):
                J = jacobiator(FN, _y(a), _y(b), _y(c))
                report.add(f"Jacobi({a}, {b}, {c})", J.is_zero(), str(J))

        rng = make_rng(seed)
        coranks = []
        for _ in range(10):
            pt = random_point(fn_coordinates(K), rng)
            coranks.append(len(FN.coords) - rank_at(FN, pt))
        report.add("corank 1 at 10 random points", all(c == 1 for c in coranks), str(coranks))
    return report


def verify_mutation_walk(K, steps, seed=0, timing=False):
    report = Report("mutation-walk", {"K": K, "steps": steps, "seed": seed}, timing=timing)
    with report.timer():
        rng = make_rng(seed)
        T = polygon.fan_triangulation(K)
        word = []
        for step in range(1, steps + 1):
            j = rng.randint(2, 2 * K)
            word.append(j)
            sub = verify_flip_mutation(T, j, seed=seed + step)
            report.merge(sub, prefix=f"step {step} (flip y{j}, case {sub.conventions.get('flip_case')}): ")
            T = polygon.flip(T, j)
        report.data["word"] = word
        report.data["final"] = T.to_json()
    return report


def hexagon_matrices():
    """P of the fan triangulation of the hexagon and of its three single flips."""
    T0 = polygon.fan_triangulation(2)
    out = {"T1": stokes_form(T0)[1].log_matrix}
    for j in (2, 3, 4):
        out[f"T{j}"] = stokes_form(polygon.flip(T0, j))[1].log_matrix
    return out
