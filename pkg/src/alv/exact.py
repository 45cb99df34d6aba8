"""Exact arithmetic: rationals, the field Q(sqrt(-3)), and integer matrices.

Matrices are plain lists of rows.  Nothing in this module touches floating
point.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

Rational = Fraction
Matrix = list  # list[list[int]]


class SolveError(ArithmeticError):
    """Base class for linear systems that have no unique solution."""


class InconsistentSystemError(SolveError):
    pass


class UnderdeterminedSystemError(SolveError):
    def __init__(self, free_columns):
        super().__init__(f"free columns {free_columns}")
        self.free_columns = free_columns


# ---------------------------------------------------------------------------
# Q(sqrt(-3))
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class QuadExt:
    """The number ``a + b*sqrt(-3)`` with rational ``a`` and ``b``."""

    a: Fraction = Fraction(0)
    b: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))

    @staticmethod
    def _coerce(other):
        if isinstance(other, QuadExt):
            return other
        if isinstance(other, (int, Fraction)):
            return QuadExt(other, 0)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QuadExt(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self):
        return QuadExt(-self.a, -self.b)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QuadExt(self.a * other.a - 3 * self.b * other.b,
                       self.a * other.b + self.b * other.a)

    __rmul__ = __mul__

    def conjugate(self) -> QuadExt:
        return QuadExt(self.a, -self.b)

    def norm(self) -> Fraction:
        return self.a * self.a + 3 * self.b * self.b

    def inverse(self) -> QuadExt:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero in Q(sqrt(-3))")
        return QuadExt(self.a / n, -self.b / n)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result, base = QuadExt(1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return self.a == other.a and self.b == other.b

    def __hash__(self):
        return hash((self.a, self.b))

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        sign = "-" if self.b < 0 else "+"
        mag = abs(self.b)
        root = "sqrt(-3)" if mag == 1 else f"{mag}*sqrt(-3)"
        if self.a == 0:
            return f"-{root}" if sign == "-" else root
        return f"{self.a} {sign} {root}"


SQRT_M3 = QuadExt(0, 1)
ZETA6 = QuadExt(Fraction(1, 2), Fraction(1, 2))  # exp(2*pi*i/6)


# ---------------------------------------------------------------------------
# integer / rational matrices
# ---------------------------------------------------------------------------

def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def transpose(m):
    return [list(col) for col in zip(*m)] if m else []


def matmul(a, b):
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def matvec(m, v):
    return [sum(x * y for x, y in zip(row, v)) for row in m]


def _check_rect(m):
    if not m or not m[0]:
        raise ValueError("empty matrix")
    width = len(m[0])
    if any(len(row) != width for row in m):
        raise ValueError("ragged matrix")


def det(m) -> int:
    """Determinant by Bareiss fraction-free elimination.

    Works for integer entries (result is an int) and for Fractions.
    """
    _check_rect(m)
    n = len(m)
    if len(m[0]) != n:
        raise ValueError(f"det of non-square {n}x{len(m[0])} matrix")
    a = [list(row) for row in m]
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[i][j] * a[k][k] - a[i][k] * a[k][j]
                a[i][j] = num // prev if isinstance(num, int) else num / prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def smith_normal_form(m):
    """Return ``(U, D, V)`` with ``U*m*V == D`` in Smith normal form.

    ``U`` and ``V`` are unimodular, ``D`` is diagonal with non-negative
    entries ``d1 | d2 | ...``.
    """
    _check_rect(m)
    rows, cols = len(m), len(m[0])
    a = [[int(x) for x in row] for row in m]
    u = identity(rows)
    v = identity(cols)

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for mat in (a, v):
            for row in mat:
                row[i], row[j] = row[j], row[i]

    def add_row(src, dst, k):  # row[dst] += k*row[src]
        for mat in (a, u):
            mat[dst] = [x + k * y for x, y in zip(mat[dst], mat[src])]

    def add_col(src, dst, k):
        for mat in (a, v):
            for row in mat:
                row[dst] += k * row[src]

    for t in range(min(rows, cols)):
        while True:
            pivot = None
            for i in range(t, rows):
                for j in range(t, cols):
                    if a[i][j] and (pivot is None or abs(a[i][j]) < abs(a[pivot[0]][pivot[1]])):
                        pivot = (i, j)
            if pivot is None:
                break
            swap_rows(t, pivot[0])
            swap_cols(t, pivot[1])
            p = a[t][t]
            clean = True
            for i in range(t + 1, rows):
                if a[i][t]:
                    add_row(t, i, -(a[i][t] // p))
                    clean = clean and a[i][t] == 0
            for j in range(t + 1, cols):
                if a[t][j]:
                    add_col(t, j, -(a[t][j] // p))
                    clean = clean and a[t][j] == 0
            if not clean:
                continue
            bad = next(((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols)
                        if a[i][j] % p), None)
            if bad is None:
                break
            add_row(bad[0], t, 1)
        if a[t][t] < 0:
            u[t] = [-x for x in u[t]]
            a[t] = [-x for x in a[t]]
    return u, a, v


def invariant_factors(m) -> list[int]:
    _, d, _ = smith_normal_form(m)
    return [d[i][i] for i in range(min(len(d), len(d[0])))]


def _rref(aug, ncols):
    """In-place reduced row echelon form on the first ``ncols`` columns."""
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(aug)) if aug[i][c] != 0), None)
        if p is None:
            continue
        aug[r], aug[p] = aug[p], aug[r]
        inv = 1 / Fraction(aug[r][c])
        aug[r] = [x * inv for x in aug[r]]
        for i in range(len(aug)):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
        if r == len(aug):
            break
    return pivots


def solve_exact(m, rhs) -> list[Fraction]:
    """Solve ``m x = rhs`` exactly over Q.

    Raises InconsistentSystemError when no solution exists and
    UnderdeterminedSystemError when the solution is not unique.
    """
    _check_rect(m)
    if len(rhs) != len(m):
        raise ValueError("rhs length does not match row count")
    ncols = len(m[0])
    aug = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(m, rhs)]
    pivots = _rref(aug, ncols)
    for row in aug[len(pivots):]:
        if row[-1] != 0:
            raise InconsistentSystemError("system is inconsistent")
    if len(pivots) < ncols:
        raise UnderdeterminedSystemError([c for c in range(ncols) if c not in pivots])
    x = [Fraction(0)] * ncols
    for r, c in enumerate(pivots):
        x[c] = aug[r][-1]
    return x


def inverse(m) -> list[list[Fraction]]:
    n = len(m)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(m)]
    if len(_rref(aug, n)) < n:
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in aug]


def hermite_row_basis(rows) -> list[list[int]]:
    """Integer row-style Hermite basis of the Z-span of ``rows``."""
    a = [[int(x) for x in row] for row in rows if any(row)]
    if not a:
        return []
    ncols = len(a[0])
    r = 0
    for c in range(ncols):
        while True:
            nz = [i for i in range(r, len(a)) if a[i][c]]
            if not nz:
                break
            p = min(nz, key=lambda i: abs(a[i][c]))
            a[r], a[p] = a[p], a[r]
            done = True
            for i in range(r + 1, len(a)):
                if a[i][c]:
                    q = a[i][c] // a[r][c]
                    a[i] = [x - q * y for x, y in zip(a[i], a[r])]
                    done = done and a[i][c] == 0
            if done:
                break
        if r < len(a) and a[r][c]:
            if a[r][c] < 0:
                a[r] = [-x for x in a[r]]
            for i in range(r):
                q = a[i][c] // a[r][c]
                a[i] = [x - q * y for x, y in zip(a[i], a[r])]
            r += 1
            if r == len(a):
                break
    return a[:r]


def rational_row_basis(vectors) -> list[list[Fraction]]:
    """Z-basis (as rational rows) of the group generated by rational vectors."""
    vectors = [[Fraction(x) for x in v] for v in vectors]
    den = 1
    for v in vectors:
        for x in v:
            den = den * x.denominator // gcd(den, x.denominator)
    ints = [[int(x * den) for x in v] for v in vectors]
    return [[Fraction(x, den) for x in row] for row in hermite_row_basis(ints)]


def integer_kernel(m) -> list[list[int]]:
    """Basis of the saturated integer kernel ``{x in Z^n : m x = 0}``."""
    _, d, v = smith_normal_form(m)
    n = len(m[0])
    rank = sum(1 for i in range(min(len(d), n)) if d[i][i] != 0)
    return [[v[i][j] for i in range(n)] for j in range(rank, n)]


def gf2_kernel(m) -> list[list[int]]:
    """Basis of the kernel of ``m`` reduced mod 2."""
    rows = [[x % 2 for x in row] for row in m]
    n = len(m[0])
    pivots = []
    r = 0
    for c in range(n):
        p = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                rows[i] = [(x + y) % 2 for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    basis = []
    for free in (c for c in range(n) if c not in pivots):
        vec = [0] * n
        vec[free] = 1
        for i, c in enumerate(pivots):
            vec[c] = rows[i][free]
        basis.append(vec)
    return basis


def symmetric_signature(m) -> tuple[int, int, int]:
    """``(positive, negative, zero)`` inertia of a rational symmetric matrix.

    Congruence diagonalisation over Q; a zero pivot with a non-zero
    off-diagonal entry is repaired by adding that row/column first.
    """
    a = [[Fraction(x) for x in row] for row in m]
    n = len(a)
    pos = neg = 0
    k = 0
    while k < n:
        if a[k][k] == 0:
            j = next((j for j in range(k + 1, n) if a[j][j] != 0), None)
            if j is not None:
                a[k], a[j] = a[j], a[k]
                for row in a:
                    row[k], row[j] = row[j], row[k]
            else:
                j = next((j for j in range(k + 1, n) if a[k][j] != 0), None)
                if j is None:
                    k += 1
                    continue
                a[k] = [x + y for x, y in zip(a[k], a[j])]
                for row in a:
                    row[k] += row[j]
        p = a[k][k]
        if p > 0:
            pos += 1
        else:
            neg += 1
        for i in range(k + 1, n):
            f = a[i][k] / p
            if f:
                a[i] = [x - f * y for x, y in zip(a[i], a[k])]
        for i in range(k + 1, n):
            a[k][i] = a[i][k] = Fraction(0)
        k += 1
    return pos, neg, n - pos - neg


def lcm(*xs: int) -> int:
    out = 1
    for x in xs:
        out = out * x // gcd(out, x)
    return out


def divisors(n: int) -> list[int]:
    n = abs(n)
    return [d for d in range(1, n + 1) if n % d == 0]


def format_fraction(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def vec_add(u: Sequence, v: Sequence) -> list:
    return [x + y for x, y in zip(u, v)]


def vec_scale(k, v: Sequence) -> list:
    return [k * x for x in v]
