"""Symplectic linear algebra of the fixed 4-dimensional space (V, omega).

The basis e1..e4 is fixed once and for all; in it the symplectic form has
Gram matrix ``OMEGA`` and the anti-symplectic complex structure is ``J``.
All scalars are exact rationals.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .linalg import (
    ComplexQ,
    Mat,
    Vec,
    columns,
    det,
    diag,
    from_columns,
    independent,
    inverse,
    matmul,
    matrix,
    matvec,
    rref,
    transpose,
    vec,
)

OMEGA: Mat = matrix([
    [0, 0, 0, 1],
    [0, 0, -1, 0],
    [0, 1, 0, 0],
    [-1, 0, 0, 0],
])

J: Mat = matrix([
    [0, 1, 0, 0],
    [-1, 0, 0, 0],
    [0, 0, 0, -1],
    [0, 0, 1, 0],
])

E1, E2, E3, E4 = (vec(*(int(i == k) for i in range(4))) for k in range(4))


class NotTransverseError(ValueError):
    """Raised when an operation needs transverse Lagrangians and gets a
    degenerate configuration."""


class NotSymplecticError(ValueError):
    pass


def omega(u: Sequence, v: Sequence) -> Fraction:
    """The symplectic product u^T Omega v."""
    return u[0] * v[3] - u[1] * v[2] + u[2] * v[1] - u[3] * v[0]


def apply_J(v: Sequence) -> Vec:
    return (v[1], -v[0], -v[3], v[2])


def complex_coordinates(v: Sequence) -> tuple[ComplexQ, ComplexQ]:
    """Coordinates of v in the complex basis (e1, e3), where i acts by J."""
    if all(x == 0 for x in v):
        raise ValueError("zero vector has no complex coordinates")
    return ComplexQ(v[0], -v[1]), ComplexQ(v[2], v[3])


def from_complex_coordinates(z1: ComplexQ, z2: ComplexQ) -> Vec:
    return (z1.re, -z1.im, z2.re, z2.im)


def is_symplectic(m: Mat) -> bool:
    return matmul(matmul(transpose(m), OMEGA), m) == OMEGA


def require_symplectic(m) -> Mat:
    m = matrix(m)
    if len(m) != 4 or any(len(r) != 4 for r in m) or not is_symplectic(m):
        raise NotSymplecticError("matrix does not preserve omega")
    return m


def is_lagrangian(u: Sequence, v: Sequence) -> bool:
    return omega(u, v) == 0 and independent(u, v)


@dataclass(frozen=True, eq=False)
class Lagrangian:
    """A Lagrangian plane, stored through a spanning pair.

    Equality and hashing only depend on the plane, via the reduced row
    echelon form of the 2x4 span matrix.
    """

    u: Vec
    v: Vec
    _key: tuple = field(init=False, repr=False)

    def __post_init__(self):
        u, v = vec(self.u), vec(self.v)
        if len(u) != 4 or len(v) != 4:
            raise ValueError("Lagrangian spanning vectors must have 4 components")
        if not independent(u, v):
            raise ValueError("spanning vectors are dependent")
        if omega(u, v) != 0:
            raise ValueError(f"omega(u, v) = {omega(u, v)} != 0; not Lagrangian")
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "v", v)
        object.__setattr__(self, "_key", rref((u, v))[0])

    @classmethod
    def from_matrix(cls, m: Mat) -> Lagrangian:
        """From a 4x2 matrix whose columns span the plane."""
        c = columns(matrix(m))
        return cls(c[0], c[1])

    @property
    def basis(self) -> tuple[Vec, Vec]:
        return self.u, self.v

    def __eq__(self, other):
        if not isinstance(other, Lagrangian):
            return NotImplemented
        return self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def contains(self, w: Sequence) -> bool:
        return not independent(self.u, self.v, w)

    def transformed(self, m: Mat) -> Lagrangian:
        return Lagrangian(matvec(m, self.u), matvec(m, self.v))

    def rebased(self, a, b, c, d) -> Lagrangian:
        """Same plane with basis (a u + b v, c u + d v)."""
        if a * d - b * c == 0:
            raise ValueError("singular change of basis")
        u = tuple(a * x + b * y for x, y in zip(self.u, self.v))
        v = tuple(c * x + d * y for x, y in zip(self.u, self.v))
        return Lagrangian(u, v)


def lagrangians_transverse(l1: Lagrangian, l2: Lagrangian) -> bool:
    return det(from_columns((*l1.basis, *l2.basis))) != 0


def transversal_reflection(l1: Lagrangian, l2: Lagrangian) -> Mat:
    """Matrix of the involution that is +1 on l1 and -1 on l2."""
    b = from_columns((*l1.basis, *l2.basis))
    if det(b) == 0:
        raise NotTransverseError("Lagrangians intersect nontrivially")
    return matmul(matmul(b, diag(1, 1, -1, -1)), inverse(b))


def maslov_form(l1: Lagrangian, l2: Lagrangian, l3: Lagrangian) -> Mat:
    """Gram matrix of b(u, v) = omega(u, sigma_{l1,l3} v) on the stored basis of l2."""
    for a, b in ((l1, l2), (l2, l3), (l1, l3)):
        if not lagrangians_transverse(a, b):
            raise NotTransverseError("Maslov form needs pairwise transverse Lagrangians")
    # Write w = x + y with x in l1, y in l3, so sigma w = x - y. Since l2 is
    # Lagrangian, omega(b_i, x_j - y_j) = 2 omega(b_i, x_j).
    (p, q), (r, s) = l1.basis, l3.basis
    basis = l2.basis
    aug = [[p[k], q[k], r[k], s[k], basis[0][k], basis[1][k]] for k in range(4)]
    red, _ = rref(aug)
    xs = [tuple(red[0][4 + j] * a + red[1][4 + j] * b for a, b in zip(p, q)) for j in range(2)]
    return tuple(tuple(2 * omega(bi, xj) for xj in xs) for bi in basis)


def signature_index(form: Mat) -> int:
    """Half the signature of a nondegenerate symmetric 2x2 form."""
    d = form[0][0] * form[1][1] - form[0][1] * form[1][0]
    t = form[0][0] + form[1][1]
    if d == 0:
        raise NotTransverseError("degenerate Maslov form")
    if d < 0:
        return 0
    return 1 if t > 0 else -1


def maslov_index(l1: Lagrangian, l2: Lagrangian, l3: Lagrangian) -> int:
    return signature_index(maslov_form(l1, l2, l3))
