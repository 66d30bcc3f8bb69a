"""Intersection numbers of Cartier divisors with torus-invariant curves on
smooth complete toric varieties, and the nef / ample verdicts they give."""

from __future__ import annotations

from fractions import Fraction

from . import lattice
from .divisor import CartierData, InvariantDivisor, cartier_data
from .errors import NotCartier, NotSmooth
from .fan import WallCurve, is_smooth, walls


def _checked_data(D: InvariantDivisor) -> CartierData:
    if not is_smooth(D.fan):
        raise NotSmooth("intersection numbers are only computed on smooth fans")
    data = cartier_data(D)
    if not data.integral:
        raise NotCartier("divisor is not Cartier")
    return data


def _wall_number(D: InvariantDivisor, data: CartierData, w: WallCurve) -> Fraction:
    diff = tuple(a - b for a, b in zip(data[w.left], data[w.right]))
    return lattice.dot(diff, D.fan.rays[w.extra_right])


def wall_number(D: InvariantDivisor, w: WallCurve) -> Fraction:
    """D . V(wall) = <m_left - m_right, u_extra_right>."""
    return _wall_number(D, _checked_data(D), w)


def wall_numbers(D: InvariantDivisor) -> list[tuple[WallCurve, Fraction]]:
    data = _checked_data(D)
    return [(w, _wall_number(D, data, w)) for w in walls(D.fan)]


def min_wall(D: InvariantDivisor) -> tuple[WallCurve, Fraction]:
    """Wall with the smallest intersection number (first one on ties)."""
    return min(wall_numbers(D), key=lambda pair: pair[1])


def is_nef(D: InvariantDivisor) -> bool:
    return min_wall(D)[1] >= 0


def is_ample(D: InvariantDivisor) -> bool:
    return min_wall(D)[1] > 0
