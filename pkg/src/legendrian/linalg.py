"""Exact linear algebra over the rationals.

Vectors are tuples of :class:`fractions.Fraction`; matrices are tuples of
row tuples. Everything here is small and dense (at most 4x4), so plain
Gaussian elimination is used throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence

Vec = tuple[Fraction, ...]
Mat = tuple[tuple[Fraction, ...], ...]


def rational(x) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction.

    Floats are refused: every value entering the exact core must already be
    exact.
    """
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational literal: {x!r}") from exc
    raise TypeError(f"cannot use {type(x).__name__} as an exact rational")


def vec(*xs) -> Vec:
    if len(xs) == 1 and not isinstance(xs[0], (int, str, Fraction)):
        xs = tuple(xs[0])
    return tuple(rational(x) for x in xs)


def basis_vector(i: int, n: int = 4) -> Vec:
    return tuple(Fraction(int(k == i)) for k in range(n))


def add(u: Sequence, v: Sequence) -> Vec:
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Sequence, v: Sequence) -> Vec:
    return tuple(a - b for a, b in zip(u, v))


def scale(s, v: Sequence) -> Vec:
    return tuple(s * a for a in v)


def neg(v: Sequence) -> Vec:
    return tuple(-a for a in v)


def lincomb(coeffs: Iterable, vectors: Sequence[Sequence]) -> Vec:
    out = [Fraction(0)] * len(vectors[0])
    for c, v in zip(coeffs, vectors):
        if c:
            for k, a in enumerate(v):
                out[k] += c * a
    return tuple(out)


def is_zero(v: Sequence) -> bool:
    return all(a == 0 for a in v)


def matrix(rows) -> Mat:
    return tuple(tuple(rational(x) for x in row) for row in rows)


def from_columns(cols: Sequence[Sequence]) -> Mat:
    return tuple(tuple(c[i] for c in cols) for i in range(len(cols[0])))


def columns(m: Mat) -> tuple[Vec, ...]:
    return tuple(zip(*m))


def transpose(m: Mat) -> Mat:
    return tuple(zip(*m))


def identity(n: int = 4) -> Mat:
    return tuple(basis_vector(i, n) for i in range(n))


def diag(*entries) -> Mat:
    n = len(entries)
    return tuple(
        tuple(rational(entries[i]) if i == j else Fraction(0) for j in range(n))
        for i in range(n)
    )


def matmul(a: Mat, b: Mat) -> Mat:
    bt = transpose(b)
    return tuple(tuple(sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in bt) for row in a)


def matvec(a: Mat, v: Sequence) -> Vec:
    return tuple(sum((x * y for x, y in zip(row, v)), Fraction(0)) for row in a)


def matprod(*ms: Mat) -> Mat:
    out = ms[0]
    for m in ms[1:]:
        out = matmul(out, m)
    return out


def det(m: Sequence[Sequence]) -> Fraction:
    rows = [list(r) for r in m]
    n = len(rows)
    d = Fraction(1)
    for i in range(n):
        piv = next((r for r in range(i, n) if rows[r][i] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != i:
            rows[i], rows[piv] = rows[piv], rows[i]
            d = -d
        p = rows[i][i]
        d *= p
        for r in range(i + 1, n):
            f = rows[r][i] / p
            if f:
                for c in range(i, n):
                    rows[r][c] -= f * rows[i][c]
    return d


def rref(m: Sequence[Sequence]) -> tuple[Mat, tuple[int, ...]]:
    """Reduced row echelon form and pivot columns."""
    rows = [[Fraction(x) for x in r] for r in m]
    if not rows:
        return (), ()
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((k for k in range(r, len(rows)) if rows[k][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r][c]
        rows[r] = [x / p for x in rows[r]]
        for k in range(len(rows)):
            if k != r and rows[k][c] != 0:
                f = rows[k][c]
                rows[k] = [x - f * y for x, y in zip(rows[k], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return tuple(tuple(row) for row in rows), tuple(pivots)


def rank(vectors: Sequence[Sequence]) -> int:
    return len(rref(vectors)[1])


def independent(*vectors: Sequence) -> bool:
    return rank(vectors) == len(vectors)


def nullspace(m: Sequence[Sequence]) -> tuple[Vec, ...]:
    """Basis of {x : m x = 0}."""
    red, pivots = rref(m)
    ncols = len(m[0])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for row, p in zip(red, pivots):
            x[p] = -row[f]
        basis.append(tuple(x))
    return tuple(basis)


def solve(m: Mat, b: Sequence) -> Vec:
    """Solve the square system m x = b; raises ZeroDivisionError if singular."""
    n = len(m)
    aug = [list(m[i]) + [Fraction(b[i])] for i in range(n)]
    red, pivots = rref(aug)
    if pivots != tuple(range(n)):
        raise ZeroDivisionError("singular system")
    return tuple(red[i][n] for i in range(n))


def particular_solution(rows: Sequence[Sequence], rhs: Sequence) -> Vec:
    """One solution of rows x = rhs, with every free variable set to zero.

    Raises ValueError if the system is inconsistent.
    """
    ncols = len(rows[0])
    aug = [list(r) + [Fraction(b)] for r, b in zip(rows, rhs)]
    red, pivots = rref(aug)
    if ncols in pivots:
        raise ValueError("inconsistent linear system")
    x = [Fraction(0)] * ncols
    for row, p in zip(red, pivots):
        x[p] = row[ncols]
    return tuple(x)


def inverse(m: Mat) -> Mat:
    n = len(m)
    aug = [list(m[i]) + list(basis_vector(i, n)) for i in range(n)]
    red, pivots = rref(aug)
    if pivots[:n] != tuple(range(n)):
        raise ZeroDivisionError("singular matrix")
    return tuple(tuple(red[i][n:]) for i in range(n))


def coordinates(basis: Sequence[Sequence], v: Sequence) -> Vec | None:
    """Coefficients of ``v`` in ``basis`` (independent vectors), or None if
    ``v`` is not in their span."""
    k = len(basis)
    aug = [[basis[j][i] for j in range(k)] + [v[i]] for i in range(len(v))]
    red, pivots = rref(aug)
    if k in pivots:
        return None
    if pivots != tuple(range(k)):
        raise ValueError("basis vectors are dependent")
    return tuple(red[i][k] for i in range(k))


def orientation_sign(basis: Sequence[Sequence], other: Sequence[Sequence]) -> int:
    """Sign of the change of basis from ``basis`` to ``other``.

    Both must be bases of the same k-dimensional subspace. Returns +1 if they
    induce the same orientation, -1 otherwise; raises if ``other`` is not a
    basis of that subspace.
    """
    k = len(basis)
    # pivot columns of the row-reduced basis: coordinates on which the
    # projection of the subspace is an isomorphism
    _, cols = rref(basis)
    if len(cols) != k:
        raise ValueError("basis vectors are dependent")
    da = det([[b[c] for c in cols] for b in basis])
    db = det([[b[c] for c in cols] for b in other])
    if db == 0 or rank(list(basis) + list(other)) != k:
        raise ValueError("the two families do not span the same subspace")
    return 1 if (da > 0) == (db > 0) else -1


@dataclass(frozen=True)
class ComplexQ:
    """Gaussian rational ``re + i*im``."""

    re: Fraction
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", rational(self.re))
        object.__setattr__(self, "im", rational(self.im))

    @classmethod
    def of(cls, z) -> ComplexQ:
        if isinstance(z, ComplexQ):
            return z
        if isinstance(z, (tuple, list)):
            return cls(z[0], z[1])
        return cls(z)

    def __add__(self, other):
        o = ComplexQ.of(other)
        return ComplexQ(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = ComplexQ.of(other)
        return ComplexQ(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return ComplexQ.of(other) - self

    def __neg__(self):
        return ComplexQ(-self.re, -self.im)

    def __mul__(self, other):
        o = ComplexQ.of(other)
        return ComplexQ(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = ComplexQ.of(other)
        n = o.norm2()
        if n == 0:
            raise ZeroDivisionError("division by complex zero")
        p = self * o.conjugate()
        return ComplexQ(p.re / n, p.im / n)

    def __rtruediv__(self, other):
        return ComplexQ.of(other) / self

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def conjugate(self) -> ComplexQ:
        return ComplexQ(self.re, -self.im)

    def norm2(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __str__(self):
        return f"{self.re}{'+' if self.im >= 0 else '-'}{abs(self.im)}i"


I = ComplexQ(0, 1)
