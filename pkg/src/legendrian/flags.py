"""Oriented isotropic flags and their positivity.

A flag is stored by its first two parts only: an oriented line F1 spanned
by ``f1`` and an oriented Lagrangian F2 with oriented basis ``(f1, f2)``.
F3 = F1^perp and its orientation are recovered from the compatibility rule
(the quotient F3/F1 is oriented by (a, b) positive iff omega(b, a) > 0),
and V is oriented by symplectic bases.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .core import E1, E2, E3, E4, Lagrangian, NotSymplecticError, omega, require_symplectic
from .linalg import (
    Mat,
    Vec,
    det,
    diag,
    from_columns,
    identity,
    independent,
    inverse,
    matmul,
    matrix,
    matvec,
    neg,
    nullspace,
    orientation_sign,
    particular_solution,
    rank,
    rational,
    vec,
)
from .polygon import LegendrianPolygon

K = diag(1, -1, 1, -1)


class FlagError(ValueError):
    pass


class NotOrientedTransverse(ValueError):
    """No symplectic basis E puts a pair of flags in the position (F_E, F_Ê)."""


def _positive_normal(v: Vec) -> Vec:
    lead = next(x for x in v if x != 0)
    return tuple(x / abs(lead) for x in v)


@dataclass(frozen=True, eq=False)
class OrientedFlag:
    f1: Vec
    f2: Vec
    _key: tuple = field(init=False, repr=False)

    def __post_init__(self):
        f1, f2 = vec(self.f1), vec(self.f2)
        if len(f1) != 4 or len(f2) != 4:
            raise FlagError("flag vectors must have 4 components")
        if not independent(f1, f2):
            raise FlagError("f1, f2 are dependent")
        if omega(f1, f2) != 0:
            raise FlagError("span(f1, f2) is not Lagrangian")
        object.__setattr__(self, "f1", f1)
        object.__setattr__(self, "f2", f2)
        # canonical representative: f1 up to positive scale; f2 reduced
        # against f1 at f1's pivot, then up to positive scale
        c1 = _positive_normal(f1)
        p = next(i for i, x in enumerate(c1) if x != 0)
        r2 = tuple(y - f2[p] / c1[p] * x for x, y in zip(c1, f2))
        object.__setattr__(self, "_key", (c1, _positive_normal(r2)))

    @classmethod
    def from_matrix(cls, m) -> OrientedFlag:
        m = matrix(m)
        return cls(tuple(r[0] for r in m), tuple(r[1] for r in m))

    def __eq__(self, other):
        if not isinstance(other, OrientedFlag):
            return NotImplemented
        return self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __neg__(self):
        return OrientedFlag(neg(self.f1), neg(self.f2))

    @property
    def plane(self) -> Lagrangian:
        return Lagrangian(self.f1, self.f2)

    def transformed(self, m: Mat) -> OrientedFlag:
        return OrientedFlag(matvec(m, self.f1), matvec(m, self.f2))

    def as_columns(self) -> tuple[list[str], list[str]]:
        return [str(x) for x in self.f1], [str(x) for x in self.f2]


def flag_of_basis(basis: Sequence[Sequence]) -> OrientedFlag:
    return OrientedFlag(vec(basis[0]), vec(basis[1]))


F0 = OrientedFlag(E1, E2)
F_INF = OrientedFlag(E4, neg(E3))


def opposite_basis(basis: Sequence[Vec]) -> tuple[Vec, ...]:
    e1, e2, e3, e4 = basis
    return (e4, neg(e3), e2, neg(e1))


def complete_flag(F: OrientedFlag) -> Mat:
    """A symplectic basis E with F = F_E, returned as the 4x4 matrix of columns.

    Its first k columns are an oriented basis of F^(k): the quotient pair
    (e2, e3) has omega(e3, e2) = 1 > 0 and det E = 1.
    """
    e1, e2 = F.f1, F.f2
    row = lambda v: (-v[3], v[2], -v[1], v[0])  # x -> omega(v, x)
    e4 = particular_solution([row(e1), row(e2)], [1, 0])
    # omega(e1, e3) = 0, omega(e2, e3) = -1, omega(e4, e3) = 0
    e3 = particular_solution([row(e1), row(e2), row(e4)], [0, -1, 0])
    return from_columns((e1, e2, e3, e4))


def flag_part(F: OrientedFlag, k: int) -> tuple[Vec, ...]:
    """Oriented basis of F^(k)."""
    cols = list(zip(*complete_flag(F)))
    return tuple(cols[:k])


def normalize_pair(F: OrientedFlag, G: OrientedFlag) -> Mat:
    """Symplectic M with M F = F0 and M G = F_inf.

    Builds the symplectic basis E with F = F_E, G = F_Ê directly:
    e1 from F^(1), e4 from G^(1), e2 in F^(2) and e3 in G^(2) by linear
    solves; M is the inverse of the basis matrix.
    """
    f1, f2 = F.f1, F.f2
    g1, g2 = G.f1, G.f2
    s = omega(f1, g1)
    if s == 0:
        raise NotOrientedTransverse("F^(1) and G^(1) are incident")
    if s < 0:
        raise NotOrientedTransverse("F^(1), G^(1) are transverse with incompatible orientations")
    e1 = f1
    e4 = tuple(x / s for x in g1)
    mu = -omega(f2, e4)
    e2 = tuple(y + mu * x for x, y in zip(f1, f2))
    # e3 = alpha g1 + beta g2 with omega(e1, e3) = 0, omega(e2, e3) = -1
    a11, a12 = omega(e1, g1), omega(e1, g2)
    a21, a22 = omega(e2, g1), omega(e2, g2)
    dd = a11 * a22 - a12 * a21
    if dd == 0:
        raise NotOrientedTransverse("F^(2) and G^(2) are not transverse")
    alpha = (a12 * 1) / dd  # solves [[a11, a12], [a21, a22]] (alpha, beta) = (0, -1)
    beta = -a11 / dd
    # (e4, -e3) must be oriented like (g1, g2): -lambda * beta > 0 with lambda > 0
    if beta >= 0:
        raise NotOrientedTransverse("G^(2) orientation is incompatible with F")
    e3 = tuple(alpha * x + beta * y for x, y in zip(g1, g2))
    basis = from_columns((e1, e2, e3, e4))
    try:
        require_symplectic(basis)
    except NotSymplecticError as exc:  # pragma: no cover - guarded by the solves above
        raise NotOrientedTransverse(str(exc)) from exc
    return inverse(basis)


def oriented_transverse(F: OrientedFlag, G: OrientedFlag) -> bool:
    try:
        normalize_pair(F, G)
    except NotOrientedTransverse:
        return False
    return True


@dataclass(frozen=True)
class UnipotentParams:
    """Entries (a, b, c, d) of the lower unipotent

        1
        a   1
        b   d      1
        c   ad-b   a   1
    """

    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction

    def __post_init__(self):
        for name in "abcd":
            object.__setattr__(self, name, rational(getattr(self, name)))

    def matrix(self) -> Mat:
        a, b, c, d = self.a, self.b, self.c, self.d
        return matrix([[1, 0, 0, 0], [a, 1, 0, 0], [b, d, 1, 0], [c, a * d - b, a, 1]])

    @classmethod
    def from_matrix(cls, m: Mat) -> UnipotentParams | None:
        """Read (a, b, c, d) back, or None if m is not of the unipotent form."""
        p = cls(m[1][0], m[2][0], m[3][0], m[2][1])
        return p if p.matrix() == tuple(tuple(r) for r in m) else None

    def minors(self) -> tuple[Fraction, ...]:
        a, b, c, d = self.a, self.b, self.c, self.d
        return (a, b, c, a * d - b, -b * b + a * b * d - c * d)


def in_positive_semigroup(p: UnipotentParams) -> bool:
    return all(m > 0 for m in p.minors())


def unipotent_coordinates(F1: OrientedFlag, F2: OrientedFlag, F3: OrientedFlag, normalizer: Mat | None = None):
    """Params u with M F2 = u F0, where M normalizes (F1, F3) to (F0, F_inf).

    ``normalizer`` overrides the M computed by :func:`normalize_pair`.
    Returns None when no such lower unipotent exists (non-transverse pair,
    F2 outside the big cell, or wrong orientation).
    """
    if normalizer is None:
        try:
            normalizer = normalize_pair(F1, F3)
        except NotOrientedTransverse:
            return None
    g1, g2 = matvec(normalizer, F2.f1), matvec(normalizer, F2.f2)
    if g1[0] <= 0:
        return None
    g1 = tuple(x / g1[0] for x in g1)
    r2 = tuple(y - g2[0] * x for x, y in zip(g1, g2))
    if r2[1] <= 0:
        return None
    r2 = tuple(x / r2[1] for x in r2)
    return UnipotentParams(g1[1], g1[2], g1[3], r2[2])


def triple_positive(F1: OrientedFlag, F2: OrientedFlag, F3: OrientedFlag) -> bool:
    p = unipotent_coordinates(F1, F2, F3)
    return p is not None and in_positive_semigroup(p)


def tuple_positive(flags: Sequence[OrientedFlag], fast: bool = False) -> bool:
    """Positivity of every ordered sub-triple.

    ``fast`` only checks the triples (F_i, F_{i+1}, F_j). Positivity of
    those triples already forces positivity of the whole tuple; the tests
    compare both paths on random tuples.
    """
    n = len(flags)
    if n < 3:
        raise FlagError("positivity needs at least three flags")
    if fast:
        triples = ((i, i + 1, j) for i in range(n - 2) for j in range(i + 2, n))
    else:
        triples = itertools.combinations(range(n), 3)
    return all(triple_positive(flags[i], flags[j], flags[k]) for i, j, k in triples)


def oriented_intersection(U: Sequence[Vec], W: Sequence[Vec]) -> Vec:
    """Oriented generator of the line U ∩ W, for an oriented plane U and an
    oriented 3-space W with U + W = V.

    The orientation is the one for which (b1, x, b3, b4) is a positive basis
    of V whenever (b1, x) is an oriented basis of U and (x, b3, b4) one of W.
    """
    U = [vec(u) for u in U]
    W = [vec(w) for w in W]
    if rank(U) != 2 or rank(W) != 3:
        raise FlagError("expected an oriented plane and an oriented 3-space")
    if rank(U + W) != 4:
        raise FlagError("U + W is not all of V")
    ker = nullspace(from_columns(U + W))
    if len(ker) != 1:
        raise FlagError("U ∩ W is not a line")
    x = tuple(ker[0][0] * a + ker[0][1] * b for a, b in zip(*U))
    b1 = next(u for u in U if independent(u, x))
    if orientation_sign(U, (b1, x)) < 0:
        b1 = neg(b1)
    b3, b4 = next(pair for pair in itertools.combinations(W, 2) if independent(x, *pair))
    if orientation_sign(W, (x, b3, b4)) < 0:
        b4 = neg(b4)
    return x if det(from_columns((b1, x, b3, b4))) > 0 else neg(x)


def polygon_to_flags(P: LegendrianPolygon) -> tuple[OrientedFlag, ...]:
    """F_j = (span v_{2j-1} ⊂ span(v_{2j-1}, v_{2j})) for a non-contractible
    polygon with an even number of vertices.

    Instead of full genericity this checks what makes the output a tuple of
    pairwise transverse flags: odd-numbered vertices pairwise non-incident
    and the planes span(v_{2j-1}, v_{2j}) pairwise transverse. Generic
    polygons always pass.
    """
    if P.n % 2:
        raise FlagError(f"need an even number of vertices, got {P.n}")
    if P.sign != -1:
        raise FlagError("polygon is contractible (closing sign +1)")
    vs = P.vertices
    flags = tuple(OrientedFlag(vs[2 * j], vs[2 * j + 1]) for j in range(P.n // 2))
    for (i, F), (j, G) in itertools.combinations(enumerate(flags), 2):
        if omega(F.f1, G.f1) == 0:
            raise FlagError(f"vertices {2 * i} and {2 * j} are incident")
        if det(from_columns((F.f1, F.f2, G.f1, G.f2))) == 0:
            raise FlagError(f"edges {2 * i} and {2 * j} lie on intersecting lines")
    return flags


def flags_to_polygon(flags: Sequence[OrientedFlag]) -> LegendrianPolygon:
    """The 2k-gon P_-(F_1^(1), F_1^(2) ∩ F_2^(3), F_2^(1), ..., F_k^(1), F_k^(2) ∩ (-F_1)^(3)).

    The last intersection uses -F_1 because the polygon closes up on -v_1.
    """
    k = len(flags)
    if k < 2:
        raise FlagError("need at least two flags")
    vertices = []
    for j, F in enumerate(flags):
        nxt = flags[(j + 1) % k] if j + 1 < k else -flags[0]
        vertices.append(F.f1)
        vertices.append(oriented_intersection((F.f1, F.f2), flag_part(nxt, 3)))
    return LegendrianPolygon(tuple(vertices), -1)


def random_semigroup_element(rng: random.Random) -> UnipotentParams:
    """Sample from U_-^{>0}: a, d > 0, then b in (0, ad), c in (0, b(ad-b)/d)."""
    a = Fraction(rng.randint(1, 9), rng.randint(1, 4))
    d = Fraction(rng.randint(1, 9), rng.randint(1, 4))
    b = a * d * Fraction(rng.randint(1, 9), 10)
    c = b * (a * d - b) / d * Fraction(rng.randint(1, 9), 10)
    return UnipotentParams(a, b, c, d)


def positive_tuple_from_unipotents(us: Sequence[UnipotentParams]) -> tuple[OrientedFlag, ...]:
    """(F0, u1 F0, u1 u2 F0, ..., u1...u_m F0, F_inf)."""
    flags = [F0]
    acc = identity()
    for u in us:
        acc = matmul(acc, u.matrix())
        flags.append(F0.transformed(acc))
    flags.append(F_INF)
    return tuple(flags)


def sample_positive_tuple(k: int, seed: int) -> tuple[OrientedFlag, ...]:
    if k < 3:
        raise FlagError("k must be at least 3")
    rng = random.Random(seed)
    return positive_tuple_from_unipotents([random_semigroup_element(rng) for _ in range(k - 2)])


def parametrize_positive_triple(x, y) -> tuple[OrientedFlag, OrientedFlag, OrientedFlag]:
    x, y = rational(x), rational(y)
    if x <= 0 or y <= 0:
        raise ValueError("parameters must be positive")
    F = OrientedFlag((1, x + y + 1 / y, y, 1), (0, 1, 1, x + 1 / y))
    return F0, F, F_INF


def semigroup_inverse_identity_check(p: UnipotentParams) -> bool:
    """Whether u^{-1} = K u' K with u' again in U_-^{>0}."""
    if not in_positive_semigroup(p):
        raise ValueError("parameters are not in the positive semigroup")
    conj = matmul(matmul(K, inverse(p.matrix())), K)
    q = UnipotentParams.from_matrix(conj)
    return q is not None and in_positive_semigroup(q)
