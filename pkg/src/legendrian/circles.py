"""Lagrangians as co-oriented circles, points of P(V) as oriented contact elements.

The Riemann sphere is the complex projective line of V, with complex
coordinates z1 = x1 - i x2, z2 = x3 + i x4 (so that i acts by J). The affine
chart used throughout is p = z2 / z1; the point z1 = 0 is infinity.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .core import Lagrangian, complex_coordinates, maslov_index, omega, require_symplectic
from .linalg import I, ComplexQ, Mat, matmul, matrix, rational, rref

COOR_OUTWARD = "outward"
COOR_INWARD = "inward"
COOR_POINT = "point"


@dataclass(frozen=True)
class Circle:
    """Circle of radius |c| centered at a + bi, i.e. the Lagrangian L(a, b, c).

    The sign of c is the co-orientation: the contact elements of L(a, b, c)
    point away from the center when c > 0 and towards it when c < 0. c = 0
    is a point circle.
    """

    a: Fraction
    b: Fraction
    c: Fraction

    def __post_init__(self):
        for name in "abc":
            object.__setattr__(self, name, rational(getattr(self, name)))

    @property
    def center(self) -> ComplexQ:
        return ComplexQ(self.a, self.b)

    @property
    def radius(self) -> Fraction:
        return abs(self.c)

    @property
    def is_point(self) -> bool:
        return self.c == 0

    @property
    def coorientation(self) -> str:
        if self.c > 0:
            return COOR_OUTWARD
        if self.c < 0:
            return COOR_INWARD
        return COOR_POINT

    def power(self, z: ComplexQ) -> Fraction:
        """|z - center|^2 - c^2; zero exactly on the circle."""
        return (ComplexQ.of(z) - self.center).norm2() - self.c * self.c

    def lagrangian(self) -> Lagrangian:
        return circle_to_lagrangian(self.a, self.b, self.c)


@dataclass(frozen=True)
class LineOrInfinity:
    """A Lagrangian outside the affine patch: a circle through infinity
    (a line), or the point circle at infinity."""

    lagrangian: Lagrangian


CoorientedCircle = Union[Circle, LineOrInfinity]


@dataclass(frozen=True)
class ContactElement:
    """Base point (None for infinity) and a co-normal direction, up to
    positive real scale, pointing into the distinguished halfspace.

    At infinity the direction is expressed in the chart w = 1/p.
    """

    base: ComplexQ | None
    direction: ComplexQ

    def __post_init__(self):
        if not self.direction:
            raise ValueError("contact element direction must be nonzero")

    def same_as(self, other: ContactElement) -> bool:
        """Equal base points and positively proportional directions."""
        if self.base != other.base:
            return False
        q = self.direction * other.direction.conjugate()
        return q.im == 0 and q.re > 0


def circle_to_lagrangian(a, b, c) -> Lagrangian:
    a, b, c = rational(a), rational(b), rational(c)
    return Lagrangian((1, 0, a, b - c), (0, 1, b + c, -a))


def lagrangian_to_circle(L: Lagrangian) -> CoorientedCircle:
    # row-reduce the span; the plane is in the patch iff the pivots are x1, x2
    red, pivots = rref(L.basis)
    if pivots != (0, 1):
        return LineOrInfinity(L)
    (_, _, p, q), (_, _, r, _s) = red
    # columns (1, 0, a, b - c) and (0, 1, b + c, -a)
    return Circle(p, (q + r) / 2, (r - q) / 2)


def contact_element(v) -> ContactElement:
    z1, z2 = complex_coordinates(v)
    if z1:
        return ContactElement(z2 / z1, -I * z1.conjugate() * z1.conjugate())
    return ContactElement(None, I * z2.conjugate() * z2.conjugate())


def base_point(v) -> ComplexQ | None:
    z1, z2 = complex_coordinates(v)
    return z2 / z1 if z1 else None


def incident(p, q) -> bool:
    return omega(p, q) == 0


def radial_translation_matrix(r) -> Mat:
    r = rational(r)
    return matrix([[1, 0, 0, 0], [0, 1, 0, 0], [0, r, 1, 0], [-r, 0, 0, 1]])


@dataclass(frozen=True)
class MobiusMatrix:
    """[[a, b], [c, d]] over the Gaussian rationals, det = 1.

    Acting on (z1, z2) as a complex matrix, it moves the chart coordinate by
    p -> (c + d p) / (a + b p).
    """

    a: ComplexQ
    b: ComplexQ
    c: ComplexQ
    d: ComplexQ

    def __post_init__(self):
        for name in "abcd":
            object.__setattr__(self, name, ComplexQ.of(getattr(self, name)))
        dt = self.a * self.d - self.b * self.c
        if dt != ComplexQ(1):
            raise ValueError(f"Mobius matrix must have determinant 1, got {dt}")

    def __matmul__(self, other: MobiusMatrix) -> MobiusMatrix:
        return MobiusMatrix(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def inverse(self) -> MobiusMatrix:
        return MobiusMatrix(self.d, -self.b, -self.c, self.a)


def mobius_embed(M: MobiusMatrix) -> Mat:
    a, b, c, d = M.a, M.b, M.c, M.d
    return matrix([
        [a.re, a.im, b.re, -b.im],
        [-a.im, a.re, -b.im, -b.re],
        [c.re, c.im, d.re, -d.im],
        [c.im, -c.re, d.im, d.re],
    ])


def mobius_point(M: MobiusMatrix, p: ComplexQ | None) -> ComplexQ | None:
    """Image of a chart point (None = infinity) under the action of M."""
    if p is None:
        return None if not M.b else M.d / M.b
    den = M.a + M.b * p
    if not den:
        return None
    return (M.c + M.d * p) / den


def maslov_of_circles(c1: CoorientedCircle, c2: CoorientedCircle, c3: CoorientedCircle) -> int:
    def lag(c):
        return c.lagrangian if isinstance(c, LineOrInfinity) else c.lagrangian()

    return maslov_index(lag(c1), lag(c2), lag(c3))


def _gauss(rng: random.Random, bound: int = 3) -> ComplexQ:
    return ComplexQ(Fraction(rng.randint(-bound, bound), rng.randint(1, 2)), Fraction(rng.randint(-bound, bound), rng.randint(1, 2)))


def random_mobius(rng: random.Random, length: int = 3) -> MobiusMatrix:
    """Product of random elementary and diagonal det-1 matrices."""
    one, zero = ComplexQ(1), ComplexQ(0)
    M = MobiusMatrix(one, zero, zero, one)
    for _ in range(length):
        kind = rng.randrange(3)
        if kind == 0:
            E = MobiusMatrix(one, _gauss(rng), zero, one)
        elif kind == 1:
            E = MobiusMatrix(one, zero, _gauss(rng), one)
        else:
            z = _gauss(rng)
            while not z:
                z = _gauss(rng)
            E = MobiusMatrix(z, zero, zero, one / z)
        M = M @ E
    return M


def random_group_element(rng: random.Random, length: int = 4) -> Mat:
    """Product of Mobius embeddings and radial translations (exact, symplectic)."""
    m = mobius_embed(random_mobius(rng, 1))
    for _ in range(length):
        if rng.random() < 0.5:
            m = matmul(m, radial_translation_matrix(Fraction(rng.randint(-4, 4), rng.randint(1, 3))))
        else:
            m = matmul(m, mobius_embed(random_mobius(rng, 1)))
    return require_symplectic(m)
