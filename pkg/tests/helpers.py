import random
from fractions import Fraction

from legendrian.core import E1, E2, E3, E4, Lagrangian, lagrangians_transverse
from legendrian.linalg import independent, is_zero
from legendrian.polygon import _perp_basis


def rand_q(rng: random.Random, bound: int = 6) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, 4))


def rand_vec(rng: random.Random, bound: int = 6) -> tuple:
    while True:
        v = tuple(rand_q(rng, bound) for _ in range(4))
        if not is_zero(v):
            return v


def rand_in(rng: random.Random, basis) -> tuple:
    while True:
        cs = [rand_q(rng) for _ in basis]
        v = tuple(sum((c * b[k] for c, b in zip(cs, basis)), Fraction(0)) for k in range(4))
        if not is_zero(v):
            return v


def rand_lagrangian(rng: random.Random) -> Lagrangian:
    while True:
        u = rand_vec(rng)
        v = rand_in(rng, _perp_basis(u))
        if independent(u, v):
            return Lagrangian(u, v)


def rand_transverse_triple(rng: random.Random):
    while True:
        ls = [rand_lagrangian(rng) for _ in range(3)]
        if all(lagrangians_transverse(ls[i], ls[j]) for i, j in ((0, 1), (1, 2), (0, 2))):
            return ls


def same_ray(u, v) -> bool:
    """u = s v for some s > 0."""
    if not independent(u) or not independent(v):
        return False
    if independent(u, v):
        return False
    k = next(i for i, x in enumerate(v) if x != 0)
    return u[k] / v[k] > 0


BASIS = (E1, E2, E3, E4)
