# ============================================================================
# Exact Laurent-polynomial and rational-function arithmetic
# ============================================================================
# Every scalar in the package is a RationalFunction: a numerator and a
# denominator Polynomial over Fraction coefficients. Numerators are Laurent
# (negative exponents allowed); a denominator is only kept when it is a
# genuine polynomial, monomial denominators are folded into the numerator.
#
# Variables live in one append-only registry. A "doubled" variable u is
# stored through its square root: the registry entry holds u^(1/2), and
# printed exponents are halves of the stored ones. Points always give the
# value of u itself; evaluation takes its positive rational square root.
# ============================================================================

import os
import random
import threading
from fractions import Fraction

from sympy import QQ, integer_nthroot
from sympy.polys.rings import ring

from services.errors import (
    DivisionByZero,
    OddExponent,
    PoleAtPoint,
    ShapeMismatch,
    SingularMatrix,
    SubstitutionSingular,
    UnknownVariable,
)

USE_SYMPY_GCD = os.environ.get("STOKES_USE_SYMPY_GCD", "1") != "0"


class VariableRegistry:
    """Append-only table of variable names; insertion order is the term order."""

    def __init__(self):
        self._names = []
        self._index = {}
        self._doubled = set()
        self._lock = threading.Lock()

    def register(self, name, doubled=False):
        with self._lock:
            idx = self._index.get(name)
            if idx is None:
                idx = len(self._names)
                self._names.append(name)
                self._index[name] = idx
                if doubled:
                    self._doubled.add(idx)
            return idx

    def index(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise UnknownVariable(f"unknown variable: {name}") from None

    def name(self, idx):
        return self._names[idx]

    def is_doubled(self, idx):
        return idx in self._doubled

    def __contains__(self, name):
        return name in self._index


REGISTRY = VariableRegistry()


def _resolve(v):
    if isinstance(v, int):
        return v
    return REGISTRY.register(v)


# --- Monomials: sorted tuples of (variable index, nonzero exponent) ---

def _mono_mul(a, b):
    if not a:
        return b
    if not b:
        return a
    out = dict(a)
    for i, e in b:
        s = out.get(i, 0) + e
        if s:
            out[i] = s
        else:
            del out[i]
    return tuple(sorted(out.items()))


def _mono_inv(m):
    return tuple((i, -e) for i, e in m)


def _mono_pow(m, k):
    if k == 0:
        return ()
    return tuple((i, e * k) for i, e in m)


def _order_key(mono, idxs):
    exps = dict(mono)
    return tuple(exps.get(i, 0) for i in idxs)


class Polynomial:
    """Sparse Laurent polynomial: {monomial: Fraction}, zero coefficients never stored."""

    __slots__ = ("terms",)
    __hash__ = None

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for m, c in terms.items():
                c = Fraction(c)
                if c:
                    self.terms[m] = c

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({(): 1})

    @classmethod
    def constant(cls, c):
        return cls({(): c})

    def is_zero(self):
        return not self.terms

    def is_monomial(self):
        return len(self.terms) == 1

    def is_constant(self):
        return not self.terms or (len(self.terms) == 1 and () in self.terms)

    def is_one(self):
        return len(self.terms) == 1 and self.terms.get(()) == 1

    def variables(self):
        return {i for m in self.terms for i, _ in m}

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.terms == other.terms

    def __add__(self, other):
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        p = Polynomial()
        p.terms = out
        return p

    def __neg__(self):
        p = Polynomial()
        p.terms = {m: -c for m, c in self.terms.items()}
        return p

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return Polynomial(out)

    def pow(self, k):
        result = Polynomial.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def scale(self, c):
        return Polynomial({m: v * c for m, v in self.terms.items()})

    def shift(self, mono):
        if not mono:
            return self
        p = Polynomial()
        p.terms = {_mono_mul(m, mono): c for m, c in self.terms.items()}
        return p

    def min_monomial(self):
        """Componentwise minimum exponent over all terms (absent counts as 0)."""
        lows = {}
        idxs = self.variables()
        for i in idxs:
            lows[i] = min(dict(m).get(i, 0) for m in self.terms)
        return tuple(sorted((i, e) for i, e in lows.items() if e))

    def leading(self):
        idxs = sorted(self.variables())
        m = max(self.terms, key=lambda mono: _order_key(mono, idxs))
        return m, self.terms[m]

    def sorted_terms(self):
        idxs = sorted(self.variables())
        return sorted(self.terms.items(), key=lambda t: _order_key(t[0], idxs), reverse=True)

    def derivative(self, idx):
        out = {}
        for m, c in self.terms.items():
            exps = dict(m)
            e = exps.get(idx, 0)
            if not e:
                continue
            if e == 1:
                del exps[idx]
            else:
                exps[idx] = e - 1
            key = tuple(sorted(exps.items()))
            out[key] = out.get(key, 0) + c * e
        return Polynomial(out)

    def evaluate(self, values):
        total = Fraction(0)
        for m, c in self.terms.items():
            term = c
            for i, e in m:
                if i not in values:
                    raise UnknownVariable(f"no value for {REGISTRY.name(i)}")
                v = values[i]
                if v == 0 and e < 0:
                    raise PoleAtPoint(f"{REGISTRY.name(i)} = 0 under a negative power")
                term *= v ** e
            total += term
        return total

    def key(self):
        return tuple(sorted(self.terms.items()))

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for m, c in self.sorted_terms():
            factors = [_format_factor(i, e) for i, e in m]
            if not factors:
                pieces.append(_format_coeff(c))
            elif c == 1:
                pieces.append("*".join(factors))
            elif c == -1:
                pieces.append("-" + "*".join(factors))
            else:
                pieces.append(_format_coeff(c) + "*" + "*".join(factors))
        text = " + ".join(pieces)
        return text.replace("+ -", "- ")


def _format_coeff(c):
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _format_factor(idx, e):
    name = REGISTRY.name(idx)
    if REGISTRY.is_doubled(idx):
        if e % 2 == 0:
            e //= 2
        else:
            return f"{name}^({e}/2)"
    return name if e == 1 else f"{name}^{e}"


def _sympy_cancel(num, den):
    """Cancel the polynomial gcd of num/den through sympy's sparse rings."""
    idxs = sorted(num.variables() | den.variables())
    if not idxs:
        return num, den
    low_neg = tuple((i, e) for i, e in num.min_monomial() if e < 0)
    p_num = num.shift(_mono_inv(low_neg))
    pos = {i: k for k, i in enumerate(idxs)}
    R = ring(",".join(f"v{i}" for i in idxs), QQ)[0]

    def to_ring(poly):
        data = {}
        for m, c in poly.terms.items():
            dense = [0] * len(idxs)
            for i, e in m:
                dense[pos[i]] = e
            data[tuple(dense)] = QQ(c.numerator, c.denominator)
        return R.from_dict(data)

    def from_ring(element):
        out = {}
        for mon, c in element.terms():
            key = tuple((idxs[k], e) for k, e in enumerate(mon) if e)
            out[key] = Fraction(int(c.numerator), int(c.denominator))
        return Polynomial(out)

    p, q = to_ring(p_num).cancel(to_ring(den))
    return from_ring(p).shift(low_neg), from_ring(q)


def _normalize(num, den, cancel=True):
    if den.is_zero():
        raise DivisionByZero("denominator is the zero polynomial")
    if num.is_zero():
        return Polynomial.zero(), Polynomial.one()
    if den.is_monomial():
        (m, c), = den.terms.items()
        return num.shift(_mono_inv(m)).scale(1 / c), Polynomial.one()
    low = den.min_monomial()
    if low:
        inv = _mono_inv(low)
        num, den = num.shift(inv), den.shift(inv)
    if cancel and USE_SYMPY_GCD:
        num, den = _sympy_cancel(num, den)
        return _normalize(num, den, cancel=False)
    _, lc = den.leading()
    if lc != 1:
        num, den = num.scale(1 / lc), den.scale(1 / lc)
    return num, den


class RationalFunction:
    """num/den with Laurent numerator; equality is decided by cross-multiplication."""

    __slots__ = ("num", "den")
    __hash__ = None

    def __init__(self, num, den=None, reduce=True):
        if den is None:
            den = Polynomial.one()
        if den.is_one():
            self.num, self.den = num, den
        else:
            self.num, self.den = _normalize(num, den, cancel=reduce)

    # --- constructors ---

    @classmethod
    def zero(cls):
        return cls(Polynomial.zero())

    @classmethod
    def one(cls):
        return cls(Polynomial.one())

    @classmethod
    def constant(cls, c):
        return cls(Polynomial.constant(c))

    @classmethod
    def coerce(cls, value):
        if isinstance(value, RationalFunction):
            return value
        if isinstance(value, (int, Fraction)):
            return cls.constant(value)
        raise TypeError(f"cannot use {type(value).__name__} as a rational function")

    @classmethod
    def variable(cls, name):
        idx = REGISTRY.register(name)
        if REGISTRY.is_doubled(idx):
            return cls(Polynomial({((idx, 2),): 1}))
        return cls(Polynomial({((idx, 1),): 1}))

    @classmethod
    def monomial(cls, exponents, coeff=1):
        mono = tuple(sorted((_resolve(v), e) for v, e in exponents.items() if e))
        return cls(Polynomial({mono: coeff}))

    # --- predicates ---

    def is_zero(self):
        return self.num.is_zero()

    def is_polynomial(self):
        return self.den.is_one()

    def is_constant(self):
        return self.den.is_one() and self.num.is_constant()

    def constant_value(self):
        if not self.is_constant():
            raise ValueError(f"not a constant: {self}")
        return self.num.terms.get((), Fraction(0))

    def is_monomial(self):
        return self.den.is_one() and self.num.is_monomial()

    def monomial_parts(self):
        """(coefficient, {name: stored exponent}) of a monomial."""
        if not self.is_monomial():
            raise ValueError(f"not a monomial: {self}")
        (m, c), = self.num.terms.items()
        return c, {REGISTRY.name(i): e for i, e in m}

    def variables(self):
        return sorted(self.num.variables() | self.den.variables())

    def variable_names(self):
        return [REGISTRY.name(i) for i in self.variables()]

    # --- arithmetic ---

    def __add__(self, other):
        other = RationalFunction.coerce(other)
        if self.den == other.den:
            if self.den.is_one():
                return RationalFunction(self.num + other.num)
            return RationalFunction(self.num + other.num, self.den)
        if self.den.is_one():
            return RationalFunction(self.num * other.den + other.num, other.den, reduce=False)
        if other.den.is_one():
            return RationalFunction(self.num + other.num * self.den, self.den, reduce=False)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den, reduce=False)

    def __sub__(self, other):
        return self + (-RationalFunction.coerce(other))

    def __rsub__(self, other):
        return RationalFunction.coerce(other) + (-self)

    def __mul__(self, other):
        other = RationalFunction.coerce(other)
        if self.den.is_one() and other.den.is_one():
            return RationalFunction(self.num * other.num)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise DivisionByZero("inverse of the zero function")
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other):
        other = RationalFunction.coerce(other)
        if other.is_zero():
            raise DivisionByZero(f"division of {self} by zero")
        return self * other.inverse()

    def __rtruediv__(self, other):
        return RationalFunction.coerce(other) / self

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        if k == 0:
            return RationalFunction.one()
        if self.is_monomial():
            (m, c), = self.num.terms.items()
            return RationalFunction(Polynomial({_mono_pow(m, k): c ** k}))
        return RationalFunction(self.num.pow(k), self.den.pow(k), reduce=False)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RationalFunction.constant(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return rf_equal(self, other)

    # --- calculus and evaluation ---

    def differentiate(self, v):
        idx = _resolve(v)
        dn = self.num.derivative(idx)
        if self.den.is_one():
            return RationalFunction(dn)
        dd = self.den.derivative(idx)
        return RationalFunction(dn * self.den - self.num * dd, self.den * self.den)

    def substitute(self, sigma):
        images = {_resolve(v): RationalFunction.coerce(img) for v, img in sigma.items()}
        top = _substitute_poly(self.num, images)
        if self.den.is_one():
            return top
        bottom = _substitute_poly(self.den, images)
        if bottom.is_zero():
            raise SubstitutionSingular(f"denominator of {self} vanishes under the substitution")
        return top / bottom

    def eval_at(self, point):
        values = {}
        for v, x in point.items():
            idx = _resolve(v)
            values[idx] = _root_value(v, Fraction(x)) if REGISTRY.is_doubled(idx) else Fraction(x)
        d = self.den.evaluate(values)
        if d == 0:
            raise PoleAtPoint(f"denominator of {self} vanishes at the point")
        return self.num.evaluate(values) / d

    def halve_exponents(self, mapping):
        """Rewrite an expression even in each y of mapping as a function of Y = y^2."""
        table = {_resolve(y): REGISTRY.register(Y) for y, Y in mapping.items()}
        return RationalFunction(_halve(self.num, table, self), _halve(self.den, table, self), reduce=False)

    def __str__(self):
        if self.den.is_one():
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"RationalFunction({self})"


def _halve(poly, table, owner):
    out = {}
    for m, c in poly.terms.items():
        mono = []
        for i, e in m:
            if i in table:
                if e % 2:
                    raise OddExponent(f"{REGISTRY.name(i)} appears to an odd power in {owner}")
                mono.append((table[i], e // 2))
            else:
                mono.append((i, e))
        key = tuple(sorted(mono))
        out[key] = out.get(key, 0) + c
    return Polynomial(out)


def _substitute_poly(poly, images):
    cache = {}
    pieces = []
    for mono, c in poly.terms.items():
        term = RationalFunction.constant(c)
        rest = []
        for i, e in mono:
            img = images.get(i)
            if img is None:
                rest.append((i, e))
                continue
            if (i, e) not in cache:
                if e < 0 and img.is_zero():
                    raise SubstitutionSingular(f"{REGISTRY.name(i)} maps to zero under a negative power")
                cache[(i, e)] = img ** e
            term = term * cache[(i, e)]
        if rest:
            term = term * RationalFunction(Polynomial({tuple(rest): 1}))
        pieces.append(term)
    return rf_sum(pieces)


def rf_sum(values):
    """Sum grouping equal denominators first, which keeps denominators small."""
    groups = {}
    for v in values:
        v = RationalFunction.coerce(v)
        key = v.den.key()
        if key in groups:
            num, den = groups[key]
            groups[key] = (num + v.num, den)
        else:
            groups[key] = (v.num, v.den)
    total = RationalFunction.zero()
    for num, den in groups.values():
        total = total + RationalFunction(num, den)
    return total


def _root_value(name, x):
    """Positive rational square root of the value of a doubled variable."""
    num, exact_num = integer_nthroot(abs(x.numerator), 2)
    den, exact_den = integer_nthroot(x.denominator, 2)
    if x < 0 or not (exact_num and exact_den):
        raise ValueError(f"{name} = {x} has no rational square root")
    return Fraction(int(num), int(den))


# --- module-level operations ---

def var(name):
    return RationalFunction.variable(name)


def doubled_var(name):
    """Register u as a doubled variable and return u itself (stored as (u^(1/2))^2)."""
    REGISTRY.register(name, doubled=True)
    return RationalFunction.variable(name)


def half_power(name, k):
    """u^(k/2) for a doubled variable u."""
    idx = REGISTRY.register(name, doubled=True)
    if not REGISTRY.is_doubled(idx):
        raise ValueError(f"{name} is not a doubled variable")
    return RationalFunction(Polynomial({((idx, k),): 1}) if k else Polynomial.one())


def rf_arith(op, f, g=None):
    f = RationalFunction.coerce(f)
    if op == "neg":
        return -f
    if op == "pow":
        return f ** int(g)
    g = RationalFunction.coerce(g)
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    if op == "div":
        return f / g
    raise ValueError(f"unknown operation: {op}")


def rf_equal(f, g):
    f = RationalFunction.coerce(f)
    g = RationalFunction.coerce(g)
    if f.den == g.den:
        return f.num == g.num
    return (f.num * g.den) == (g.num * f.den)


def differentiate(f, v):
    return RationalFunction.coerce(f).differentiate(v)


def substitute(f, sigma):
    return RationalFunction.coerce(f).substitute(sigma)


def eval_at(f, point):
    return RationalFunction.coerce(f).eval_at(point)


def random_point(names, rng, height=7, positive=False):
    """Seeded random nonzero rationals p/q with |p|, q <= height.

    Doubled variables get the square of such a value."""
    point = {}
    for name in names:
        num = 0
        while num == 0:
            num = rng.randint(1 if positive else -height, height)
        x = Fraction(num, rng.randint(1, height))
        point[name] = x * x if REGISTRY.is_doubled(_resolve(name)) else x
    return point


def make_rng(seed):
    return random.Random(seed)


# ============================================================================
# Dense matrices over RationalFunction
# ============================================================================

class MatrixRF:
    __slots__ = ("rows", "cols", "entries")
    __hash__ = None

    def __init__(self, entries):
        rows = [[RationalFunction.coerce(x) for x in row] for row in entries]
        if not rows or not rows[0]:
            raise ShapeMismatch("matrix must have at least one entry")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ShapeMismatch("ragged rows")
        self.rows = len(rows)
        self.cols = width
        self.entries = rows

    @classmethod
    def identity(cls, n):
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def diag(cls, values):
        n = len(values)
        return cls([[values[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, n, m=None):
        return cls([[0] * (m or n) for _ in range(n)])

    @property
    def shape(self):
        return self.rows, self.cols

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def is_square(self):
        return self.rows == self.cols

    def _check_same(self, other):
        if self.shape != other.shape:
            raise ShapeMismatch(f"{self.shape} vs {other.shape}")

    def map(self, fn):
        return MatrixRF([[fn(x) for x in row] for row in self.entries])

    def __add__(self, other):
        self._check_same(other)
        return MatrixRF([[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)])

    def __sub__(self, other):
        self._check_same(other)
        return MatrixRF([[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)])

    def __neg__(self):
        return self.map(lambda x: -x)

    def __mul__(self, other):
        if not isinstance(other, MatrixRF):
            s = RationalFunction.coerce(other)
            return self.map(lambda x: x * s)
        if self.cols != other.rows:
            raise ShapeMismatch(f"cannot multiply {self.shape} by {other.shape}")
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                pieces = [self.entries[i][k] * other.entries[k][j]
                          for k in range(self.cols)
                          if not self.entries[i][k].is_zero() and not other.entries[k][j].is_zero()]
                row.append(rf_sum(pieces))
            out.append(row)
        return MatrixRF(out)

    def __rmul__(self, other):
        s = RationalFunction.coerce(other)
        return self.map(lambda x: s * x)

    def __eq__(self, other):
        if not isinstance(other, MatrixRF):
            return NotImplemented
        if self.shape != other.shape:
            return False
        return all(rf_equal(a, b) for r1, r2 in zip(self.entries, other.entries) for a, b in zip(r1, r2))

    def transpose(self):
        return MatrixRF([[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)])

    def trace(self):
        if not self.is_square():
            raise ShapeMismatch("trace of a non-square matrix")
        return rf_sum(self.entries[i][i] for i in range(self.rows))

    def minor(self, i, j):
        return MatrixRF([[x for c, x in enumerate(row) if c != j]
                         for r, row in enumerate(self.entries) if r != i])

    def det(self):
        if not self.is_square():
            raise ShapeMismatch("determinant of a non-square matrix")
        n = self.rows
        e = self.entries
        if n == 1:
            return e[0][0]
        if n == 2:
            return e[0][0] * e[1][1] - e[0][1] * e[1][0]
        if n <= 4:
            pieces = []
            for j in range(n):
                if e[0][j].is_zero():
                    continue
                sign = 1 if j % 2 == 0 else -1
                pieces.append(sign * e[0][j] * self.minor(0, j).det())
            return rf_sum(pieces)
        return _gauss_det(self)

    def adjugate(self):
        n = self.rows
        if n == 1:
            return MatrixRF.identity(1)
        return MatrixRF([[((-1) ** (i + j)) * self.minor(j, i).det() for j in range(n)] for i in range(n)])

    def inverse(self):
        if not self.is_square():
            raise ShapeMismatch("inverse of a non-square matrix")
        if self.rows <= 4:
            d = self.det()
            if d.is_zero():
                raise SingularMatrix("determinant is identically zero")
            if d.is_monomial():
                return self.adjugate() * d.inverse()
        return _gauss_jordan_inverse(self)

    def inv_transpose(self):
        return self.inverse().transpose()

    def is_identity(self):
        return self == MatrixRF.identity(self.rows)

    def is_upper_unitriangular(self):
        n = self.rows
        return all(self.entries[i][i] == 1 for i in range(n)) and all(
            self.entries[i][j].is_zero() for i in range(n) for j in range(i))

    def is_lower_unitriangular(self):
        return self.transpose().is_upper_unitriangular()

    def is_lower_triangular(self):
        return all(self.entries[i][j].is_zero() for i in range(self.rows) for j in range(i + 1, self.cols))

    def differentiate(self, v):
        return self.map(lambda x: x.differentiate(v))

    def substitute(self, sigma):
        return self.map(lambda x: x.substitute(sigma))

    def eval_at(self, point):
        return [[x.eval_at(point) for x in row] for row in self.entries]

    def variables(self):
        found = set()
        for row in self.entries:
            for x in row:
                found.update(x.variables())
        return sorted(found)

    def to_strings(self):
        return [[str(x) for x in row] for row in self.entries]

    def __str__(self):
        return "[" + ", ".join("[" + ", ".join(r) + "]" for r in self.to_strings()) + "]"

    def __repr__(self):
        return f"MatrixRF({self})"


def _first_pivot(rows, col, start):
    for r in range(start, len(rows)):
        if not rows[r][col].is_zero():
            return r
    return None


def _gauss_jordan_inverse(M):
    n = M.rows
    X = [list(row) for row in M.entries]
    Y = [list(row) for row in MatrixRF.identity(n).entries]
    for i in range(n):
        p = _first_pivot(X, i, i)
        if p is None:
            raise SingularMatrix("no pivot available; matrix is singular")
        if p != i:
            X[i], X[p] = X[p], X[i]
            Y[i], Y[p] = Y[p], Y[i]
        piv = X[i][i].inverse()
        X[i] = [x * piv for x in X[i]]
        Y[i] = [y * piv for y in Y[i]]
        for r in range(n):
            if r == i or X[r][i].is_zero():
                continue
            f = X[r][i]
            X[r] = [a - f * b for a, b in zip(X[r], X[i])]
            Y[r] = [a - f * b for a, b in zip(Y[r], Y[i])]
    return MatrixRF(Y)


def _gauss_det(M):
    n = M.rows
    X = [list(row) for row in M.entries]
    det = RationalFunction.one()
    for i in range(n):
        p = _first_pivot(X, i, i)
        if p is None:
            return RationalFunction.zero()
        if p != i:
            X[i], X[p] = X[p], X[i]
            det = -det
        det = det * X[i][i]
        inv = X[i][i].inverse()
        for r in range(i + 1, n):
            if X[r][i].is_zero():
                continue
            f = X[r][i] * inv
            X[r] = [a - f * b for a, b in zip(X[r], X[i])]
    return det


def mat_ops(op, M, N=None):
    if op == "mul":
        return M * N
    if op == "inverse":
        return M.inverse()
    if op == "det":
        return M.det()
    if op == "trace":
        return M.trace()
    if op == "transpose":
        return M.transpose()
    if op == "inv_transpose":
        return M.inv_transpose()
    raise ValueError(f"unknown matrix operation: {op}")


def commutator(A, B):
    return A * B - B * A
