"""Legendrian polygons in P(V): validation and classification."""

from __future__ import annotations

import enum
import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .core import Lagrangian, NotTransverseError, maslov_index, omega, require_symplectic
from .linalg import Mat, Vec, det, from_columns, independent, is_zero, matvec, neg, nullspace, vec


class PolygonError(ValueError):
    """Invalid vertex data for a Legendrian polygon."""


class Transversality(enum.Enum):
    NOT_TRANSVERSE = "not transverse"
    POSITIVE = "positive-transverse"
    NEGATIVE = "negative-transverse"

    @property
    def is_transverse(self) -> bool:
        return self is not Transversality.NOT_TRANSVERSE


class HomotopyClass(enum.Enum):
    CONTRACTIBLE = "contractible"
    GENERATOR = "generator"


@dataclass(frozen=True)
class LegendrianPolygon:
    """The polygon P_sign(v_1, ..., v_n).

    Segment k (0-based) joins ``vertices[k]`` to ``vertices[k+1]``; the last
    segment joins ``vertices[-1]`` to ``sign * vertices[0]``.
    """

    vertices: tuple[Vec, ...]
    sign: int = -1

    def __post_init__(self):
        vs = tuple(vec(v) for v in self.vertices)
        object.__setattr__(self, "vertices", vs)
        if self.sign not in (1, -1):
            raise PolygonError(f"closing sign must be +1 or -1, got {self.sign!r}")
        n = len(vs)
        if n < 4:
            raise PolygonError(f"a Legendrian polygon needs at least 4 vertices, got {n} (there are no Legendrian triangles)")
        for k, v in enumerate(vs):
            if len(v) != 4:
                raise PolygonError(f"vertex {k} has {len(v)} components, expected 4")
            if is_zero(v):
                raise PolygonError(f"vertex {k} is zero")
        for k in range(n):
            a, b = vs[k], vs[(k + 1) % n]
            if omega(a, b) != 0:
                raise PolygonError(f"segment {k} is not Legendrian: omega(v{k}, v{(k + 1) % n}) = {omega(a, b)}")
            if not independent(a, b):
                raise PolygonError(f"segment {k} is degenerate (endpoints are proportional)")
            if not independent(a, b, vs[(k + 2) % n]):
                raise PolygonError(f"segments {k} and {(k + 1) % n} lie on a common projective line")

    @property
    def n(self) -> int:
        return len(self.vertices)

    def endpoints(self, k: int) -> tuple[Vec, Vec]:
        """Representatives of the two ends of segment k, with the closing sign
        applied on the last segment."""
        k %= self.n
        if k == self.n - 1:
            end = self.vertices[0] if self.sign > 0 else neg(self.vertices[0])
            return self.vertices[k], end
        return self.vertices[k], self.vertices[k + 1]

    def point(self, k: int, t) -> Vec:
        """(1 - t) a + t b on segment k."""
        a, b = self.endpoints(k)
        t = Fraction(t)
        return tuple((1 - t) * x + t * y for x, y in zip(a, b))

    def reversed(self) -> LegendrianPolygon:
        return LegendrianPolygon(self.vertices[::-1], self.sign)

    def rescaled(self, factors: Sequence) -> LegendrianPolygon:
        return LegendrianPolygon(
            tuple(tuple(Fraction(f) * x for x in v) for f, v in zip(factors, self.vertices)), self.sign
        )


def P_minus(*vertices) -> LegendrianPolygon:
    return LegendrianPolygon(tuple(vertices), -1)


def P_plus(*vertices) -> LegendrianPolygon:
    return LegendrianPolygon(tuple(vertices), 1)


def cyclically_adjacent(i: int, j: int, n: int) -> bool:
    return (i - j) % n in (1, n - 1)


def nonadjacent_pairs(n: int) -> Iterator[tuple[int, int]]:
    for i, j in itertools.combinations(range(n), 2):
        if not cyclically_adjacent(i, j, n):
            yield i, j


def nonadjacent_triples(n: int) -> Iterator[tuple[int, int, int]]:
    for i, j, k in itertools.combinations(range(n), 3):
        if not (cyclically_adjacent(i, j, n) or cyclically_adjacent(j, k, n) or cyclically_adjacent(i, k, n)):
            yield i, j, k


def segment_pair_nonincident(u1, u2, v1, v2) -> bool:
    """Whether the open segments [u1, u2] and [v1, v2] have no incident points.

    Both segments must be Legendrian, and not all four cross products may
    vanish.
    """
    if omega(u1, u2) != 0 or omega(v1, v2) != 0:
        raise ValueError("segments must be Legendrian")
    products = [omega(u1, v1), omega(u1, v2), omega(u2, v1), omega(u2, v2)]
    if not any(products):
        raise ValueError("all four cross products vanish")
    return all(p >= 0 for p in products) or all(p <= 0 for p in products)


def edge_lagrangian(P: LegendrianPolygon, k: int) -> Lagrangian:
    return Lagrangian(*P.endpoints(k))


def is_generic(P: LegendrianPolygon) -> bool:
    n = P.n
    for i, j in nonadjacent_pairs(n):
        if omega(P.vertices[i], P.vertices[j]) == 0:
            return False
        a, b = P.endpoints(i), P.endpoints(j)
        if det(from_columns((*a, *b))) == 0:
            return False
    return True


def transversality_class(P: LegendrianPolygon) -> Transversality:
    """Sign criterion: P_- is transverse iff all omega(v_i, v_j), i < j
    cyclically non-adjacent, share a strict sign. P_+ never is."""
    if P.sign > 0:
        return Transversality.NOT_TRANSVERSE
    products = [omega(P.vertices[i], P.vertices[j]) for i, j in nonadjacent_pairs(P.n)]
    if all(p > 0 for p in products):
        return Transversality.POSITIVE
    if all(p < 0 for p in products):
        return Transversality.NEGATIVE
    return Transversality.NOT_TRANSVERSE


def transversality_by_segments(P: LegendrianPolygon) -> Transversality:
    """Exhaustive check over pairs of non-adjacent closed segments.

    Independent of the sign criterion: it only uses segment_pair_nonincident,
    the endpoint vectors as they appear on each segment (including the
    closing sign), and non-incidence of non-adjacent vertices.
    """
    n = P.n
    for i, j in nonadjacent_pairs(n):
        if omega(P.vertices[i], P.vertices[j]) == 0:
            return Transversality.NOT_TRANSVERSE
    for i, j in nonadjacent_pairs(n):
        (u1, u2), (w1, w2) = P.endpoints(i), P.endpoints(j)
        if not segment_pair_nonincident(u1, u2, w1, w2):
            return Transversality.NOT_TRANSVERSE
    # transverse; the class is the common sign, read off any non-adjacent pair
    # of segment starts (both of which carry no closing sign)
    i, j = next(nonadjacent_pairs(n))
    return Transversality.POSITIVE if omega(P.vertices[i], P.vertices[j]) > 0 else Transversality.NEGATIVE


def edge_triple_indices(P: LegendrianPolygon) -> dict[tuple[int, int, int], int | None]:
    """Maslov index of every cyclically ordered triple of pairwise
    non-adjacent edge Lagrangians; None where two of the three edges lie on
    intersecting projective lines (possible for non-generic polygons)."""
    edges = [edge_lagrangian(P, k) for k in range(P.n)]
    out = {}
    for t in nonadjacent_triples(P.n):
        try:
            out[t] = maslov_index(edges[t[0]], edges[t[1]], edges[t[2]])
        except NotTransverseError:
            out[t] = None
    return out


def has_decreasing_curvature(P: LegendrianPolygon) -> bool:
    """Every triple of non-adjacent edges has Maslov index +1. A triple whose
    index is undefined does not count as +1."""
    if not transversality_class(P).is_transverse:
        raise NotTransverseError("decreasing curvature is only defined for transverse polygons")
    return all(m == 1 for m in edge_triple_indices(P).values())


def homotopy_class(P: LegendrianPolygon) -> HomotopyClass:
    return HomotopyClass.CONTRACTIBLE if P.sign > 0 else HomotopyClass.GENERATOR


def apply_symplectic(P: LegendrianPolygon, m: Mat) -> LegendrianPolygon:
    m = require_symplectic(m)
    return LegendrianPolygon(tuple(matvec(m, v) for v in P.vertices), P.sign)


def incidence_witness(P: LegendrianPolygon, grid: int = 12):
    """Find incident points in the interiors of two non-adjacent segments.

    Returns ``(i, j, p, q)`` with p on segment i, q on segment j,
    omega(p, q) = 0 and p, q independent, or None. Parameters are searched on
    a rational grid in t, with s solved exactly from the bilinear equation.
    """
    ts = sorted({Fraction(a, grid) for a in range(1, grid)}, key=lambda t: abs(t - Fraction(1, 2)))
    for i, j in nonadjacent_pairs(P.n):
        (u1, u2), (w1, w2) = P.endpoints(i), P.endpoints(j)
        for t in ts:
            p = tuple((1 - t) * x + t * y for x, y in zip(u1, u2))
            # omega(p, (1 - s) w1 + s w2) = (1 - s) A + s B
            A, B = omega(p, w1), omega(p, w2)
            if A == B:
                if A != 0:
                    continue
                s = Fraction(1, 2)
            else:
                s = A / (A - B)
            if not 0 < s < 1:
                continue
            q = tuple((1 - s) * x + s * y for x, y in zip(w1, w2))
            if independent(p, q):
                return i, j, p, q
    return None


def _random_rational(rng: random.Random, bound: int = 5) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, 3))


def _random_in(rng: random.Random, basis: Sequence[Vec]) -> Vec:
    while True:
        coeffs = [_random_rational(rng) for _ in basis]
        v = tuple(sum((c * b[k] for c, b in zip(coeffs, basis)), Fraction(0)) for k in range(4))
        if not is_zero(v):
            return v


def _perp_basis(*vectors: Vec) -> tuple[Vec, ...]:
    # omega(x, v) = x . (Omega v), so x ranges over the kernel of the rows Omega v
    rows = [(-v[3], v[2], -v[1], v[0]) for v in vectors]
    return nullspace(rows)


def random_legendrian_chain(n: int, rng: random.Random, sign: int = -1) -> LegendrianPolygon | None:
    """Random vertices with v_{k+1} drawn from v_k^perp (the last one from
    v_{n-1}^perp ∩ v_1^perp). Returns None when the draw is degenerate."""
    vs = [_random_in(rng, [vec(int(i == k) for i in range(4)) for k in range(4)])]
    for k in range(1, n - 1):
        vs.append(_random_in(rng, _perp_basis(vs[-1])))
    vs.append(_random_in(rng, _perp_basis(vs[-1], vs[0])))
    try:
        return LegendrianPolygon(tuple(vs), sign)
    except PolygonError:
        return None


def sample_transverse_polygon(n: int, rng: random.Random, max_tries: int = 100_000) -> LegendrianPolygon:
    """Rejection sampler for transverse P_- n-gons.

    Vertices are drawn one at a time from the orthogonal of the previous one,
    rejecting each draw whose products with earlier non-adjacent vertices do
    not share the sign fixed by omega(v_1, v_3). The result is checked with
    the full sign criterion.
    """
    basis4 = [vec(int(i == k) for i in range(4)) for k in range(4)]
    for _ in range(max_tries):
        vs = [_random_in(rng, basis4)]
        sign = None
        ok = True
        for k in range(1, n):
            space = _perp_basis(vs[-1]) if k < n - 1 else _perp_basis(vs[-1], vs[0])
            for _attempt in range(50):
                cand = _random_in(rng, space)
                prods = [omega(vs[i], cand) for i in range(k) if not cyclically_adjacent(i, k, n)]
                if any(p == 0 for p in prods):
                    continue
                if prods and sign is None:
                    sign = prods[0] > 0
                if all((p > 0) == sign for p in prods):
                    vs.append(cand)
                    break
            else:
                ok = False
                break
        if not ok:
            continue
        try:
            P = LegendrianPolygon(tuple(vs), -1)
        except PolygonError:
            continue
        if transversality_class(P).is_transverse and is_generic(P):
            return P
    raise RuntimeError(f"no transverse {n}-gon found in {max_tries} tries")
