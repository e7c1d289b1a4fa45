"""Exact linear algebra over Fraction using numpy object arrays."""

from fractions import Fraction

import numpy as np

from services.errors import SingularMatrix, ShapeMismatch


def as_fraction_array(rows):
    return np.array([[Fraction(x) for x in row] for row in rows], dtype=object)


def identity_matrix(n):
    return np.array([[Fraction(i == j) for j in range(n)] for i in range(n)], dtype=object)


def inverse_matrix(X):
    """Gauss-Jordan inverse; raises SingularMatrix when no pivot exists."""
    X = as_fraction_array(X)
    if not ((len(X.shape) == 2) and (X.shape[0] == X.shape[1])):
        raise ShapeMismatch(f"matrix is not square (shape = {X.shape})")

    n = X.shape[0]
    Y = identity_matrix(n)

    for i in range(n):
        for j in range(i, n):
            if X[j, i] != 0:
                if i != j:
                    X[[i, j]] = X[[j, i]]
                    Y[[i, j]] = Y[[j, i]]
                break
        else:
            raise SingularMatrix("matrix is not invertible")

        Y[i, :] /= X[i, i]
        X[i, :] /= X[i, i]

        for j in range(i + 1, n):
            Y[j, :] -= X[j, i] * Y[i, :]
            X[j, :] -= X[j, i] * X[i, :]

    for j in range(n - 2, -1, -1):
        for i in range(j + 1, n):
            Y[j, :] -= X[j, i] * Y[i, :]
            X[j, :] -= X[j, i] * X[i, :]

    return Y


def row_echelon(X):
    """Reduced row echelon form and the pivot columns."""
    X = as_fraction_array(X)
    rows, cols = X.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        p = next((i for i in range(r, rows) if X[i, c] != 0), None)
        if p is None:
            continue
        if p != r:
            X[[r, p]] = X[[p, r]]
        X[r, :] /= X[r, c]
        for i in range(rows):
            if i != r and X[i, c] != 0:
                X[i, :] -= X[i, c] * X[r, :]
        pivots.append(c)
        r += 1
    return X, pivots


def rank(X):
    if len(X) == 0:
        return 0
    return len(row_echelon(X)[1])


def kernel(X):
    """Basis of the right null space, one Fraction vector per free column."""
    R, pivots = row_echelon(X)
    cols = R.shape[1]
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * cols
        v[f] = Fraction(1)
        for r, p in enumerate(pivots):
            v[p] = -R[r, f]
        basis.append(v)
    return basis


def pfaffian(W):
    """Pfaffian of a skew matrix by expansion along the first row."""
    W = as_fraction_array(W)
    n = W.shape[0]
    if n == 0:
        return Fraction(1)
    if n % 2:
        return Fraction(0)
    total = Fraction(0)
    for j in range(1, n):
        if W[0, j] == 0:
            continue
        keep = [k for k in range(n) if k not in (0, j)]
        sub = W[np.ix_(keep, keep)]
        total += (-1) ** (j + 1) * W[0, j] * pfaffian(sub)
    return total


def is_skew(W):
    W = as_fraction_array(W)
    return bool(np.all(W == -W.T))


def to_lists(X):
    return [[Fraction(x) for x in row] for row in X]
