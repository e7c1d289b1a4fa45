# ============================================================================
# Log-canonical coordinates for the Ugaglia bracket
# ============================================================================
# Graph: two vertices q0, q1 on the real axis, two triangle vertices f0, f1,
# the vertex s carrying M0 = D^-1 A2 D A2^-t and the toric vertex beta.
# At q0 the jumps leave counterclockwise as S, Q, A1, D, A3^-t, then Q^-t
# comes in, so S = Q^-t (A1 D A3^-t)^-1 Q^-1.
#
# x_abc, z_j and the toric c_j are doubled variables: half powers of them
# (needed by Q) stay Laurent.
# ============================================================================

import itertools
import sys
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from services import fraction_linalg, slncore
from services.errors import (
    DegenerateForm,
    PoleAtPoint,
    ResonantEigenvalues,
    TriangularityViolated,
)
from services.exactalg import MatrixRF, RationalFunction, doubled_var, half_power, make_rng, random_point
from services.formcalc import LogCanonicalForm
from services.poisson import PoissonStructure, bracket, bracket_at
from services.reports import Report, fraction_matrix_json

Q0_ORDER = ("A1", "D", "A3^-t")
KAPPA = -8


@dataclass
class UgagliaCoords:
    n: int
    xi: dict
    zeta: list
    gamma: list
    mu: dict = field(default_factory=dict)

    @property
    def independent(self):
        return [self.xi[t] for t in slncore.triples(self.n)] + list(self.zeta) + list(self.gamma)

    def to_json(self):
        return {
            "xi": [self.xi[t] for t in slncore.triples(self.n)],
            "zeta": list(self.zeta),
            "gamma": list(self.gamma),
            "mu": {str(j): {k: str(v) for k, v in exps.items()} for j, exps in self.mu.items()},
        }


@dataclass
class UgagliaGraph:
    n: int
    coords: UgagliaCoords
    A: list
    D: MatrixRF
    Q: MatrixRF
    S: MatrixRF
    M0: MatrixRF
    eigenvalues: list
    order: tuple
    passing_orders: list
    q_sign_squared: int
    triangle_convention: object


def gram(n, j, k):
    """Tr(h_j h_k) = n^2 (min(j, k) - jk/n), also at the boundary indices 0 and n."""
    return n * n * min(j, k) - n * j * k


def _heaviside(x):
    return 1 if x > 0 else 0


def _diag(M):
    return [int(x) for x in np.diag(M)]


def eigenvalue_exponents(n):
    """Integer exponents of m_1..m_n in (x_abc, z_j): Lambda = (-1)^(n+1) prod z^(alpha - alpha*) prod x^(h_b - h_b*)."""
    cd = slncore.cartan_data(n)
    x = slncore.triple_variables(n)
    out = []
    for i in range(n):
        exps = {}
        for j, a in enumerate(cd.alpha, start=1):
            e = _diag(a - cd.star(a))[i]
            if e:
                exps[f"z{j}"] = e
        for t in slncore.triples(n):
            hb = cd.h[t[1] - 1]
            e = _diag(hb - cd.star(hb))[i]
            if e:
                exps[x[t]] = e
        out.append(exps)
    return out


def _base_monomial(exps, coeff=1):
    """prod name^e for doubled names, given base (not stored) exponents."""
    return RationalFunction.monomial({k: 2 * e for k, e in exps.items()}, coeff)


def eigenvalues_closed_form(n):
    sign = (-1) ** (n + 1)
    return [_base_monomial(e, sign) for e in eigenvalue_exponents(n)]


def ugaglia_coordinates(n):
    xi = dict(slncore.triple_variables(n))
    zeta = [f"z{j}" for j in range(1, n)]
    gamma = [f"c{j}" for j in range(1, n // 2 + 1)]
    for name in zeta + gamma:
        doubled_var(name)
    exps = eigenvalue_exponents(n)
    mu = {j: dict(exps[j - 1]) for j in range(1, n // 2 + 1)}
    return UgagliaCoords(n, xi, zeta, gamma, mu)


def _is_upper(M):
    return all(M[i, j].is_zero() for i in range(M.rows) for j in range(i))


def _unit_diagonal(Xs):
    """(S, Delta, c) with S = c Delta^-1 Xs Delta^-1 unit upper triangular, c = +-1."""
    n = Xs.rows
    signs, roots = set(), []
    for i in range(n):
        d = Xs[i, i]
        if not d.is_monomial():
            raise TriangularityViolated(f"diagonal entry {i + 1} of the q0 product is not a monomial: {d}")
        c, exps = d.monomial_parts()
        if abs(c) != 1 or any(e % 2 for e in exps.values()):
            raise TriangularityViolated(f"diagonal entry {i + 1} has no monomial square root: {d}")
        signs.add(int(c))
        roots.append(RationalFunction.monomial({k: e // 2 for k, e in exps.items()}))
    if len(signs) != 1:
        raise TriangularityViolated(f"diagonal of the q0 product has mixed signs: {Xs.to_strings()}")
    c = signs.pop()
    Delta = MatrixRF.diag(roots)
    Dinv = MatrixRF.diag([1 / r for r in roots])
    S = (Dinv * Xs * Dinv) * c
    if not S.is_upper_unitriangular():
        raise TriangularityViolated(f"S is not unit upper triangular: {S.to_strings()}")
    return S, Delta, c


def build_ugaglia(n):
    cd = slncore.cartan_data(n)
    coords = ugaglia_coordinates(n)
    (A1, A2, A3), conv = slncore.triangle_matrices(n)
    D = MatrixRF.identity(n)
    for name, a in zip(coords.zeta, cd.alpha):
        D = D * slncore.diag_power(name, a)
    P = slncore.integer_matrix(cd.P)
    jumps = {"A1": A1, "D": D, "A3^-t": A3.inv_transpose()}

    passing = []
    for order in itertools.permutations(Q0_ORDER):
        J = MatrixRF.identity(n)
        for name in order:
            J = J * jumps[name]
        Xs = P * J.inverse() * P.transpose()
        if _is_upper(Xs):
            passing.append((order, Xs))
    if not passing:
        raise TriangularityViolated("no counterclockwise order at q0 gives a triangular Stokes matrix")
    order, Xs = passing[0]
    S, Delta, c = _unit_diagonal(Xs)
    Q = Delta * P

    M0 = D.inverse() * A2 * D * A2.inv_transpose()
    eigen = eigenvalues_closed_form(n)
    for i, j in itertools.combinations(range(n), 2):
        if eigen[i] == eigen[j]:
            raise ResonantEigenvalues(f"m_{i + 1} = m_{j + 1} = {eigen[i]}")
    print(f"[build_ugaglia] n={n} q0 order {order}, {len(passing)} passing", file=sys.stderr)
    return UgagliaGraph(n, coords, [A1, A2, A3], D, Q, S, M0, eigen, order,
                        [list(o) for o, _ in passing], c, conv)


def q_closed_form(n):
    """Diagonal part of prod x^((h_c* + h_a)/2) prod z^(alpha/2), in stored (halved) exponents."""
    cd = slncore.cartan_data(n)
    x = slncore.triple_variables(n)
    entries = []
    for i in range(n):
        exps = {}
        for t in slncore.triples(n):
            a, _, c = t
            e = _diag(cd.star(cd.h[c - 1]) + cd.h[a - 1])[i]
            if e:
                exps[x[t]] = e
        for j, al in enumerate(cd.alpha, start=1):
            e = _diag(al)[i]
            if e:
                exps[f"z{j}"] = e
        entries.append(RationalFunction.monomial(exps))
    return MatrixRF.diag(entries)


def f_coefficients(n):
    """F_{t;t'} of the triangle-vertex contribution, H(0) = 0."""
    out = {}
    ts = slncore.triples(n)
    for (i, j, k), (i2, j2, k2) in itertools.product(ts, ts):
        di, dj, dk = i2 - i, j2 - j, k2 - k
        out[((i, j, k), (i2, j2, k2))] = (
            (gram(n, i, n - j2) - gram(n, i2, n - j)) * _heaviside(di * dj)
            + (gram(n, j, n - k2) - gram(n, j2, n - k)) * _heaviside(dj * dk)
            + (gram(n, k, n - i2) - gram(n, k2, n - i)) * _heaviside(dk * di)
        )
    return out


def ugaglia_form(n):
    cd = slncore.cartan_data(n)
    coords = ugaglia_coordinates(n)
    names = coords.independent
    pos = {name: i for i, name in enumerate(names)}
    W = [[Fraction(0)] * len(names) for _ in names]

    def add(a, b, c):
        if a == b or not c:
            return
        W[pos[a]][pos[b]] += Fraction(c)
        W[pos[b]][pos[a]] -= Fraction(c)

    def tr(M):
        return int(np.trace(M))

    h = {i: cd.h[i - 1] for i in range(1, n)}
    ts = slncore.triples(n)
    F = f_coefficients(n)
    for t, t2 in itertools.product(ts, ts):
        add(coords.xi[t], coords.xi[t2], 2 * F[(t, t2)])
        a, _, c = t
        a2, _, c2 = t2
        add(coords.xi[t], coords.xi[t2],
            Fraction(tr(cd.star(h[c]) @ h[a2] - h[a] @ cd.star(h[c2]))))
    for j, al in enumerate(cd.alpha, start=1):
        for t in ts:
            a, b, c = t
            add(coords.zeta[j - 1], coords.xi[t], 2 * tr(al @ (h[a] + cd.star(h[c]))))
            add(coords.xi[t], coords.zeta[j - 1], 2 * tr(al @ cd.star(h[b])))
    for j, gamma in enumerate(coords.gamma, start=1):
        for name, e in coords.mu[j].items():
            add(gamma, name, 4 * e)

    if len(names) % 2 or fraction_linalg.pfaffian(W) == 0:
        raise DegenerateForm(f"the n={n} form over {names} is degenerate")
    return LogCanonicalForm(names, W)


def doubled_structure(L):
    """Poisson structure of a log-canonical form written in the square roots of doubled coordinates."""
    Pmat = fraction_linalg.inverse_matrix(L.omega).T
    pi = {}
    n = len(L.vars)
    for i in range(n):
        for j in range(i + 1, n):
            if Pmat[i, j] != 0:
                a, b = L.vars[i], L.vars[j]
                pi[(a, b)] = half_power(a, 1) * half_power(b, 1) * (Pmat[i, j] / 4)
    return PoissonStructure(list(L.vars), pi, log_matrix=fraction_linalg.to_lists(Pmat))


def s_name(i, j):
    return f"s{i}{j}"


def s_pairs(n):
    return [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]


def _ugaglia_rule(p, q, s):
    (i, k), (j, l) = p, q
    if i == j and k < l:
        return 2 * s[(k, l)] - s[(i, k)] * s[(i, l)]
    if k == l and i < j:
        return 2 * s[(i, j)] - s[(i, k)] * s[(j, k)]
    if k == j:
        return s[(i, k)] * s[(k, l)] - 2 * s[(i, l)]
    if i < j < k < l:
        return 2 * (s[(i, j)] * s[(k, l)] - s[(i, l)] * s[(j, k)])
    if i < k < j < l or i < j < l < k:
        return RationalFunction.zero()
    return None


def ugaglia_entry(p, q, s):
    value = _ugaglia_rule(p, q, s)
    if value is None:
        value = -_ugaglia_rule(q, p, s)
    return value


def ugaglia_bracket(n):
    s = {p: RationalFunction.variable(s_name(*p)) for p in s_pairs(n)}
    pi = {}
    for p, q in itertools.combinations(s_pairs(n), 2):
        pi[(s_name(*p), s_name(*q))] = ugaglia_entry(p, q, s)
    return PoissonStructure([s_name(*p) for p in s_pairs(n)], pi)


def _sample(names, rng, count, functions):
    points = []
    while len(points) < count:
        pt = random_point(names, rng)
        try:
            for f in functions:
                f.eval_at(pt)
        except PoleAtPoint:
            continue
        points.append(pt)
    return points


def verify_ugaglia(n, points=20, seed=0, timing=False):
    report = Report("ugaglia", {"n": n, "points": points, "seed": seed}, timing=timing)
    with report.timer():
        try:
            UG = build_ugaglia(n)
        except (TriangularityViolated, ResonantEigenvalues) as e:
            report.add("graph built", False, str(e))
            return report
        A1, A2, A3 = UG.A
        report.add("A1 A2 A3 = 1", (A1 * A2 * A3).is_identity())
        report.conventions["triangle"] = (UG.triangle_convention.to_json()
                                          if UG.triangle_convention else None)
        report.add("S unit upper triangular", UG.S.is_upper_unitriangular())
        report.conventions["q0_order"] = list(UG.order)
        report.conventions["q0_passing_orders"] = UG.passing_orders
        report.conventions["q_sign_squared"] = UG.q_sign_squared
        report.conventions["q_matches_closed_form"] = (
            UG.Q * slncore.integer_matrix(slncore.cartan_data(n).P).transpose() == q_closed_form(n))
        report.conventions["heaviside_at_zero"] = 0

        report.add("M0 lower triangular", UG.M0.is_lower_triangular())
        diag = [UG.M0[i, i] for i in range(n)]
        exact = all(a == b for a, b in zip(diag, UG.eigenvalues))
        reversed_ = all(a == b for a, b in zip(diag, reversed(UG.eigenvalues)))
        report.add("diag(M0) = closed-form eigenvalues", exact or reversed_,
                   f"{[str(d) for d in diag]} vs {[str(m) for m in UG.eigenvalues]}")
        report.conventions["eigenvalue_order"] = "direct" if exact else ("reversed" if reversed_ else "none")
        report.add("m_j m_(n+1-j) = 1",
                   all((UG.eigenvalues[j] * UG.eigenvalues[n - 1 - j]) == 1 for j in range(n)))

        # the q0 relation and A1 A2 A3 = 1 give S^-t S = (Q A1 D) M0 (Q A1 D)^-1
        Smt = UG.S.inv_transpose()
        G = UG.Q * A1 * UG.D
        report.compare("total monodromy S^-t S = (Q A1 D) M0 (Q A1 D)^-1", Smt * UG.S, G * UG.M0 * G.inverse())
        printed = UG.Q.inv_transpose() * A3.inv_transpose() * UG.M0 * A3.transpose() * UG.Q.transpose()
        report.conventions["monodromy_formula"] = [
            name for name, M in (("S S^-t", UG.S * Smt), ("S^-t S", Smt * UG.S)) if M == printed]

        try:
            L = ugaglia_form(n)
        except DegenerateForm as e:
            report.add("form nondegenerate", False, str(e))
            return report
        report.add("form nondegenerate", True)
        report.data["omega"] = fraction_matrix_json(L.omega)
        report.data["pfaffian"] = str(fraction_linalg.pfaffian(L.omega))
        report.data["coords"] = UG.coords.to_json()
        Pi = doubled_structure(L)

        svals = {p: UG.S[p[0] - 1, p[1] - 1] for p in s_pairs(n)}
        report.data["S"] = {s_name(*p): str(v) for p, v in svals.items()}
        used = {name for v in svals.values() for name in v.variable_names()}
        report.add("S independent of the toric variables", not used & set(UG.coords.gamma))

        U = ugaglia_bracket(n)
        pairs = list(itertools.combinations(s_pairs(n), 2))
        casimirs = UG.eigenvalues[: n // 2]
        rng = make_rng(seed)
        pts = _sample(UG.coords.independent, rng, points, list(svals.values()) + casimirs)
        ratios, mismatch = set(), None
        casimir_bad = None
        for pt in pts:
            sv = {s_name(*p): v.eval_at(pt) for p, v in svals.items()}
            for p, q in pairs:
                lhs = bracket_at(Pi, svals[p], svals[q], pt)
                rhs = U.entry(s_name(*p), s_name(*q)).eval_at(sv)
                if rhs == 0:
                    if lhs != 0 and mismatch is None:
                        mismatch = f"{{{s_name(*p)}, {s_name(*q)}}} = {lhs} where the Ugaglia bracket vanishes"
                else:
                    ratios.add(lhs / rhs)
            for j, m in enumerate(casimirs, start=1):
                for p, v in svals.items():
                    if bracket_at(Pi, m, v, pt) != 0 and casimir_bad is None:
                        casimir_bad = f"{{m{j}, {s_name(*p)}}} != 0 at {pt}"
        kappa = next(iter(ratios)) if len(ratios) == 1 else None
        report.add("bracket proportional to the Ugaglia bracket", mismatch is None and len(ratios) <= 1,
                   mismatch or f"ratios {sorted(str(r) for r in ratios)}")
        report.conventions["kappa"] = str(kappa) if kappa is not None else None
        report.add("bracket = -8 times the Ugaglia bracket", kappa == KAPPA,
                   f"measured ratio {kappa}" if kappa is not None else "no single ratio")
        report.add("eigenvalues m_j are Casimirs on the Stokes entries", casimir_bad is None, casimir_bad)

        if n == 3:
            images = {s_name(*p): v for p, v in svals.items()}
            for p, q in pairs:
                lhs = bracket(Pi, svals[p], svals[q])
                rhs = U.entry(s_name(*p), s_name(*q)).substitute(images) * KAPPA
                report.compare(f"{{{s_name(*p)}, {s_name(*q)}}} symbolic", lhs, rhs)
    return report
