"""SL_n Cartan data and the triangle matrices A1, A2, A3 of a triangle with x_abc parameters."""

import itertools
import sys
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from services.errors import ShapeMismatch
from services.exactalg import MatrixRF, RationalFunction, doubled_var
from services.reports import Report


@dataclass(frozen=True)
class Convention:
    p_signs: str = "unsigned"
    sigma: bool = True
    cycle: str = "bca"

    def to_json(self):
        return {"p_signs": self.p_signs, "sigma": self.sigma, "cycle": self.cycle}


STANDARD = Convention("(-1)^a", True, "bca")

CONVENTIONS = [STANDARD] + [
    Convention(p, s, c)
    for p, s, c in itertools.product(("(-1)^a", "unsigned", "(-1)^(a+1)"), (True, False), ("bca", "cab"))
    if Convention(p, s, c) != STANDARD
]


@dataclass
class CartanData:
    n: int
    alpha: list
    h: list
    P: np.ndarray
    sigma: np.ndarray

    def star(self, M):
        """P M P^-1 for an integer matrix."""
        return self.P @ M @ self.P.T


def antidiagonal(n, signs="(-1)^a"):
    P = np.zeros((n, n), dtype=int)
    for a in range(1, n + 1):
        sign = {"unsigned": 1, "(-1)^a": (-1) ** a, "(-1)^(a+1)": (-1) ** (a + 1)}[signs]
        P[a - 1, n - a] = sign
    return P


def cartan_data(n):
    if n < 2:
        raise ValueError("n must be at least 2")
    alpha, h = [], []
    for i in range(1, n):
        a = np.zeros((n, n), dtype=int)
        a[i - 1, i - 1], a[i, i] = 1, -1
        alpha.append(a)
        h.append(np.diag([n - i] * i + [-i] * (n - i)))
    for i in range(n - 1):
        for k in range(n - 1):
            if np.trace(alpha[i] @ h[k]) != (n if i == k else 0):
                raise ValueError(f"Tr(alpha_{i + 1} h_{k + 1}) breaks root duality")
    sigma = np.diag([(-1) ** a for a in range(n)])
    return CartanData(n, alpha, h, antidiagonal(n), sigma)


def cartan_gram(n):
    """G_jk = Tr(h_j h_k), indexed from 1; equals n^2 (min(j, k) - jk/n)."""
    cd = cartan_data(n)
    return {(j, k): int(np.trace(cd.h[j - 1] @ cd.h[k - 1])) for j in range(1, n) for k in range(1, n)}


def triples(n):
    return [(a, b, n - a - b) for a in range(1, n - 1) for b in range(1, n - a)]


def triple_name(t):
    return "x" + "".join(str(i) for i in t)


@lru_cache(maxsize=None)
def triple_variables(n):
    """x_abc as doubled variables, so that x^(k/2) stays Laurent."""
    names = {}
    for t in triples(n):
        doubled_var(triple_name(t))
        names[t] = triple_name(t)
    return names


def diag_power(name, exponents):
    """diag(x^e_1, ..., x^e_n) for an integer diagonal matrix of exponents."""
    x = RationalFunction.variable(name)
    return MatrixRF.diag([x ** int(e) for e in np.diag(exponents)])


def elementary_f(n, i):
    """F_i = 1 + E_{i+1,i}."""
    F = [[1 if r == c else 0 for c in range(n)] for r in range(n)]
    F[i][i - 1] = 1
    return MatrixRF(F)


def integer_matrix(M):
    return MatrixRF([[int(x) for x in row] for row in M])


def _n_factor(cd, k, x):
    n = cd.n
    M = MatrixRF.identity(n)
    for i in range(k, n - 1):
        t = (n - i - 1, i - k + 1, k)
        M = M * diag_power(x[t], -cd.h[i]) * elementary_f(n, i)
    return M * elementary_f(n, n - 1)


def _cycled(x, cycle):
    if cycle == "bca":
        return {(a, b, c): x[(b, c, a)] for a, b, c in x}
    return {(a, b, c): x[(c, a, b)] for a, b, c in x}


def a_matrix(n, which, x=None, convention=STANDARD):
    cd = cartan_data(n)
    x = dict(triple_variables(n) if x is None else x)
    for _ in range(which - 1):
        x = _cycled(x, convention.cycle)
    M = MatrixRF.identity(n)
    for k in range(n - 1, 0, -1):
        M = M * _n_factor(cd, k, x)
    M = M * integer_matrix(antidiagonal(n, convention.p_signs))
    if convention.sigma:
        M = integer_matrix(cd.sigma) * M
    return M


def _acceptable(n, As):
    A1, A2, A3 = As
    if not (A1 * A2 * A3).is_identity():
        return False
    if n == 2:
        return (A1 * A1 * A1).is_identity()
    return True


@lru_cache(maxsize=None)
def triangle_convention(n):
    """First convention (standard one first) with A1 A2 A3 = 1; None when none passes."""
    for conv in CONVENTIONS:
        As = tuple(a_matrix(n, w, convention=conv) for w in (1, 2, 3))
        if _acceptable(n, As):
            print(f"[triangle_convention] n={n} adopted {conv.to_json()}", file=sys.stderr)
            return conv
    print(f"[triangle_convention] n={n} no convention gives A1 A2 A3 = 1", file=sys.stderr)
    return None


def triangle_matrices(n, x=None):
    conv = triangle_convention(n) or STANDARD
    return [a_matrix(n, w, x, conv) for w in (1, 2, 3)], conv


def star_matrix(M, n):
    if M.shape != (n, n):
        raise ShapeMismatch(f"expected a {n}x{n} matrix, got {M.shape}")
    P = integer_matrix(antidiagonal(n))
    return P * M * P.transpose()


def sl2_constant():
    """A1 at n = 2, where there are no x parameters."""
    (A1, _, _), _ = triangle_matrices(2)
    return A1


def verify_triangle(n, timing=False):
    report = Report("sln-triple", {"n": n}, timing=timing)
    with report.timer():
        cd = cartan_data(n)
        report.add("Tr(alpha_i h_k) = n delta_ik", all(
            np.trace(cd.alpha[i] @ cd.h[k]) == (n if i == k else 0)
            for i in range(n - 1) for k in range(n - 1)))
        expected = (n - 1) * (n - 2) // 2
        report.add(f"{expected} triples a+b+c = n", len(triples(n)) == expected, str(len(triples(n))))
        gram = cartan_gram(n)
        report.add("Tr(h_j h_k) = n^2 (min(j, k) - jk/n)", all(
            g == n * n * min(j, k) - n * j * k for (j, k), g in gram.items()))

        conv = triangle_convention(n)
        report.conventions["triangle"] = conv.to_json() if conv else None
        report.add("a convention with A1 A2 A3 = 1 exists", conv is not None)
        As, _ = triangle_matrices(n)
        report.add("A1 A2 A3 = 1", (As[0] * As[1] * As[2]).is_identity())
        for w, A in enumerate(As, start=1):
            d = A.det()
            ok = d.is_monomial() and abs(d.monomial_parts()[0]) == 1
            report.add(f"det A{w} is a unit monomial", ok, str(d))
        if n == 2:
            report.add("A^3 = 1", (As[0] * As[0] * As[0]).is_identity())
            report.conventions["sl2_constant_is_standard"] = As[0] == MatrixRF([[0, 1], [-1, -1]])
        report.data["A"] = [A.to_strings() for A in As]
    return report
