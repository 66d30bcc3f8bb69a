"""Torus-invariant divisors, their Cartier data and the polytope P_D.

A divisor D = sum a_rho D_rho is stored as one rational coefficient per ray
of its fan. Cartier data is the family of covectors m_sigma with
<m_sigma, u_rho> = -a_rho on the rays of each maximal cone, and

    P_D = { m : <m, u_rho> >= -a_rho for every ray rho }.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from math import ceil, floor
from typing import Sequence

from . import lattice
from .errors import (
    DimensionMismatch,
    IncompatibleMap,
    NonCompleteFan,
    NotCartier,
    NotNef,
    SingularSystem,
    UnboundedPolytope,
)
from .fan import Fan, FanMap, check_fan_map, containing_cone, is_complete


@dataclass(frozen=True)
class InvariantDivisor:
    fan: Fan
    coeffs: tuple

    def __post_init__(self):
        coeffs = tuple(Fraction(a) for a in self.coeffs)
        if len(coeffs) != self.fan.n_rays:
            raise DimensionMismatch(f"{len(coeffs)} coefficients for {self.fan.n_rays} rays")
        object.__setattr__(self, "coeffs", coeffs)

    def __add__(self, other: "InvariantDivisor") -> "InvariantDivisor":
        if other.fan != self.fan:
            raise DimensionMismatch("divisors live on different fans")
        return InvariantDivisor(self.fan, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "InvariantDivisor") -> "InvariantDivisor":
        return self + (-other)

    def __neg__(self) -> "InvariantDivisor":
        return self.scaled(-1)

    def scaled(self, k) -> "InvariantDivisor":
        return InvariantDivisor(self.fan, [k * a for a in self.coeffs])

    def __mul__(self, k):
        return self.scaled(k)

    __rmul__ = __mul__

    def translated(self, m: Sequence[int]) -> "InvariantDivisor":
        """D + div(chi^m)."""
        return self + principal(self.fan, m)


def anticanonical(fan: Fan) -> InvariantDivisor:
    return InvariantDivisor(fan, [1] * fan.n_rays)


def zero_divisor(fan: Fan) -> InvariantDivisor:
    return InvariantDivisor(fan, [0] * fan.n_rays)


def principal(fan: Fan, m: Sequence) -> InvariantDivisor:
    """div(chi^m) = sum <m, u_rho> D_rho."""
    return InvariantDivisor(fan, [lattice.dot(m, u) for u in fan.rays])


@dataclass(frozen=True)
class CartierData:
    divisor: InvariantDivisor
    covectors: tuple  # one per maximal cone, in the fan's cone order

    @property
    def integral(self) -> bool:
        return all(x.denominator == 1 for m in self.covectors for x in m)

    def __getitem__(self, k: int) -> tuple:
        return self.covectors[k]

    def __len__(self) -> int:
        return len(self.covectors)

    def as_ints(self) -> list[tuple]:
        if not self.integral:
            raise NotCartier("Cartier data is not integral")
        return [tuple(int(x) for x in m) for m in self.covectors]


def cartier_data(D: InvariantDivisor) -> CartierData:
    fan = D.fan
    fan.require_valid()
    out = []
    for k, cone in enumerate(fan.max_cones):
        if len(cone) != fan.dim:
            raise SingularSystem(f"cone {k} is not full-dimensional simplicial")
        rhs = tuple(-D.coeffs[i] for i in cone)
        out.append(lattice.matvec(fan.cone_inverse(k), rhs))
    return CartierData(D, tuple(out))


def is_cartier(D: InvariantDivisor) -> bool:
    return cartier_data(D).integral


@dataclass(frozen=True)
class HPolytope:
    """{ m : <m, normal_i> >= rhs_i for all i }."""

    dim: int
    normals: tuple
    rhs: tuple

    def __post_init__(self):
        object.__setattr__(self, "normals", tuple(tuple(u) for u in self.normals))
        object.__setattr__(self, "rhs", tuple(Fraction(b) for b in self.rhs))
        if len(self.normals) != len(self.rhs):
            raise DimensionMismatch("one right-hand side per normal is required")
        if any(len(u) != self.dim for u in self.normals):
            raise DimensionMismatch("normal of wrong length")

    def contains(self, m: Sequence) -> bool:
        if len(m) != self.dim:
            raise DimensionMismatch(f"point of length {len(m)} in dimension {self.dim}")
        return all(lattice.dot(m, u) >= b for u, b in zip(self.normals, self.rhs))

    def violated(self, m: Sequence) -> int | None:
        return next((i for i, (u, b) in enumerate(zip(self.normals, self.rhs)) if lattice.dot(m, u) < b), None)

    def scaled(self, k) -> "HPolytope":
        return HPolytope(self.dim, self.normals, [k * b for b in self.rhs])

    def is_bounded(self) -> bool:
        """True iff the normals positively span, i.e. the recession cone is {0}."""
        n = self.dim
        if lattice.rank(self.normals) < n:
            return False
        for rows in combinations(self.normals, n - 1):
            if n == 1:
                kernel = [(Fraction(1),)]
            else:
                kernel = lattice.nullspace(rows)
            if len(kernel) != 1:
                continue
            d = kernel[0]
            vals = [lattice.dot(d, u) for u in self.normals]
            if all(v >= 0 for v in vals) or all(v <= 0 for v in vals):
                return False
        return True

    def vertices(self) -> list[tuple]:
        """Exact vertex enumeration over all n-subsets of the inequalities."""
        found = set()
        for idx in combinations(range(len(self.normals)), self.dim):
            A = tuple(self.normals[i] for i in idx)
            try:
                v = lattice.solve_rational(A, tuple(self.rhs[i] for i in idx))
            except SingularSystem:
                continue
            if self.contains(v):
                found.add(v)
        return sorted(found)

    def dimension(self) -> int | None:
        """Dimension of the affine hull; None for the empty polytope."""
        if not self.is_bounded():
            raise UnboundedPolytope("dimension is only computed for bounded polytopes")
        verts = self.vertices()
        if not verts:
            return None
        base = verts[0]
        diffs = [tuple(a - b for a, b in zip(v, base)) for v in verts[1:]]
        return lattice.rank(diffs) if diffs else 0

    def lattice_points(self) -> list[tuple]:
        if not self.is_bounded():
            raise UnboundedPolytope("normals do not positively span")
        verts = self.vertices()
        if not verts:
            return []
        ranges = []
        for j in range(self.dim):
            lo = floor(min(v[j] for v in verts))
            hi = ceil(max(v[j] for v in verts))
            ranges.append(range(lo, hi + 1))
        return [m for m in product(*ranges) if self.contains(m)]


def polytope(D: InvariantDivisor) -> HPolytope:
    return HPolytope(D.fan.dim, D.fan.rays, [-a for a in D.coeffs])


def contains(P: HPolytope, m: Sequence) -> bool:
    return P.contains(m)


def count_lattice_points(P: HPolytope) -> int:
    return len(P.lattice_points())


def _require_complete(fan: Fan) -> None:
    if not is_complete(fan):
        raise NonCompleteFan("criterion requires a complete fan")


def basepoint_witness(D: InvariantDivisor) -> tuple[int, int] | None:
    """First (maximal cone, ray) with <m_sigma, u_rho> < -a_rho, or None if D is base point free."""
    _require_complete(D.fan)
    data = cartier_data(D)
    if not data.integral:
        raise NotCartier("base point freeness is only decided for Cartier divisors")
    P = polytope(D)
    for k, m in enumerate(data.covectors):
        bad = P.violated(m)
        if bad is not None:
            return k, bad
    return None


def is_basepoint_free(D: InvariantDivisor) -> bool:
    return basepoint_witness(D) is None


def kodaira_dimension(D: InvariantDivisor) -> int:
    """Kodaira dimension of a nef divisor, computed as dim P_D."""
    if not is_basepoint_free(D):
        raise NotNef("Kodaira dimension via dim P_D is only valid for nef divisors")
    return polytope(D).dimension()


def pullback(fmap: FanMap, D: InvariantDivisor) -> InvariantDivisor:
    if D.fan != fmap.target:
        raise IncompatibleMap("divisor does not live on the target fan")
    if not check_fan_map(fmap):
        raise IncompatibleMap("lattice map is not compatible with the fans")
    data = cartier_data(D)
    if not data.integral:
        raise NotCartier("pullback needs a Cartier divisor")
    coeffs = []
    for u in fmap.source.rays:
        w = fmap(u)
        k = containing_cone(fmap.target, w)
        if k is None:
            raise IncompatibleMap(f"image {w} of ray {u} is outside the target support")
        coeffs.append(-lattice.dot(data[k], w))
    return InvariantDivisor(fmap.source, coeffs)


def _fraction_str(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def divisor_to_dict(D: InvariantDivisor) -> dict:
    return {"coeffs": [_fraction_str(a) for a in D.coeffs]}


def divisor_from_dict(data: dict, fan: Fan) -> InvariantDivisor:
    try:
        coeffs = [Fraction(str(a)) for a in data["coeffs"]]
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"malformed divisor document: {exc}") from exc
    return InvariantDivisor(fan, coeffs)


def loads_divisor(text: str, fan: Fan) -> InvariantDivisor:
    return divisor_from_dict(json.loads(text), fan)
