"""The Veronese curve t -> (1, t, t^2, t^3/3) and its osculating circles."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .circles import CoorientedCircle, lagrangian_to_circle
from .core import Lagrangian, complex_coordinates, omega
from .flags import FlagError, OrientedFlag, flags_to_polygon, tuple_positive
from .linalg import ComplexQ, Vec, rational
from .polygon import LegendrianPolygon


def veronese_point(t) -> Vec:
    t = rational(t)
    return (Fraction(1), t, t * t, t ** 3 / 3)


def veronese_derivative(t) -> Vec:
    t = rational(t)
    return (Fraction(0), Fraction(1), 2 * t, t * t)


def legendrian_defect(t) -> Fraction:
    """omega(gamma(t), gamma'(t)); identically zero."""
    return omega(veronese_point(t), veronese_derivative(t))


def veronese_flag(t) -> OrientedFlag:
    return OrientedFlag(veronese_point(t), veronese_derivative(t))


def osculating_lagrangian(t) -> Lagrangian:
    return Lagrangian(veronese_point(t), veronese_derivative(t))


def osculating_circle(t) -> CoorientedCircle:
    return lagrangian_to_circle(osculating_lagrangian(t))


def projected_point(t) -> ComplexQ:
    """Image of gamma(t) in the chart p = z2 / z1 (z1 = 1 - it never vanishes)."""
    z1, z2 = complex_coordinates(veronese_point(t))
    return z2 / z1


def projected_point_float(t: float) -> complex:
    z1 = complex(1.0, -t)
    z2 = complex(t * t, t ** 3 / 3)
    return z2 / z1


def contact_defect(t, h: float) -> float:
    """|p(t+h) - center|^2 - r^2 for the osculating circle at t, in float.

    Vanishes to third order in h.
    """
    circ = osculating_circle(t)
    if not hasattr(circ, "c"):
        raise ValueError(f"osculating circle at t = {t} passes through infinity")
    center = complex(circ.center)
    r = float(circ.c)
    p = projected_point_float(float(rational(t)) + h)
    return abs(p - center) ** 2 - r * r


def contact_order_ratio(t=1, h: float = 1e-2) -> float:
    """Ratio of contact defects at h and h/10; close to 1000 for third-order contact."""
    return abs(contact_defect(t, h)) / abs(contact_defect(t, h / 10))


@dataclass(frozen=True)
class Circumscribed:
    polygon: LegendrianPolygon
    reversed: bool


def circumscribe_polygon(ts: Sequence) -> Circumscribed:
    """Positive 2k-gon built from the osculating flags at the parameters ts.

    The flags are taken in the given order when that tuple is positive,
    otherwise in reverse order; ``reversed`` records which one was used.
    """
    ts = [rational(t) for t in ts]
    if len(ts) < 3:
        raise FlagError("need at least three parameters")
    if len(set(ts)) != len(ts):
        raise FlagError("parameters must be distinct")
    flags = [veronese_flag(t) for t in ts]
    if tuple_positive(flags, fast=True):
        return Circumscribed(flags_to_polygon(flags), False)
    flags.reverse()
    if tuple_positive(flags, fast=True):
        return Circumscribed(flags_to_polygon(flags), True)
    raise FlagError("parameters are not cyclically ordered")
