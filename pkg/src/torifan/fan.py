"""Simplicial rational fans: validation, smoothness, completeness, walls,
star subdivision and lattice maps between fans.

A fan stores its rays as primitive integer tuples and each maximal cone as a
sorted tuple of indices into the ray table. Only simplicial fans whose
maximal cones are full-dimensional are supported.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from . import lattice
from .errors import (
    DimensionMismatch,
    DuplicateRay,
    InvalidFan,
    NonCompleteFan,
    RayOutsideSupport,
    SingularSystem,
)


@dataclass(frozen=True)
class Fan:
    dim: int
    rays: tuple
    max_cones: tuple

    def __post_init__(self):
        object.__setattr__(self, "rays", tuple(tuple(int(x) for x in r) for r in self.rays))
        object.__setattr__(self, "max_cones", tuple(tuple(sorted(int(i) for i in c)) for c in self.max_cones))

    def __repr__(self):
        return f"Fan(dim={self.dim}, rays={len(self.rays)}, max_cones={len(self.max_cones)})"

    @property
    def n_rays(self) -> int:
        return len(self.rays)

    def cone_rays(self, k: int) -> tuple:
        return tuple(self.rays[i] for i in self.max_cones[k])

    def ray_index(self, v: Sequence[int]) -> int:
        return self.rays.index(tuple(v))

    def find_cone(self, ray_set: Iterable[int]) -> int:
        """Index of the maximal cone with exactly these rays (ValueError if absent)."""
        return self.max_cones.index(tuple(sorted(ray_set)))

    def cone_set(self) -> set[frozenset]:
        """Maximal cones as sets of ray vectors, independent of ordering."""
        return {frozenset(self.cone_rays(k)) for k in range(len(self.max_cones))}

    @cached_property
    def _inverses(self) -> dict:
        return {}

    def cone_inverse(self, k: int) -> tuple:
        """Inverse of the matrix whose rows are the generators of cone ``k``."""
        inv = self._inverses.get(k)
        if inv is None:
            inv = self._inverses[k] = lattice.inverse(self.cone_rays(k))
        return inv

    @cached_property
    def diagnostics(self) -> tuple:
        return tuple(_diagnose(self))

    def require_valid(self) -> None:
        if self.diagnostics:
            raise InvalidFan(self.diagnostics)

    @cached_property
    def _facet_map(self) -> dict:
        incident: dict[tuple, list[int]] = {}
        for k, cone in enumerate(self.max_cones):
            for facet in combinations(cone, len(cone) - 1):
                incident.setdefault(facet, []).append(k)
        return incident


def validate(fan: Fan) -> list[str]:
    """Return one diagnostic string per violated fan invariant (empty if valid)."""
    return list(fan.diagnostics)


def _diagnose(fan: Fan):
    n = fan.dim
    if n < 1:
        yield f"ambient dimension {n} < 1"
        return
    seen = {}
    for i, r in enumerate(fan.rays):
        if len(r) != n:
            yield f"ray {i}: length {len(r)} != dim {n}"
            continue
        if not any(r):
            yield f"ray {i}: zero ray"
            continue
        if not lattice.is_primitive(r):
            yield f"ray {i}: non-primitive ray {r}"
        if r in seen:
            yield f"rays {seen[r]},{i}: duplicate ray {r}"
        else:
            seen[r] = i
    structural = False
    used = set()
    cones_seen = {}
    for k, cone in enumerate(fan.max_cones):
        if len(set(cone)) != len(cone):
            yield f"cone {k}: repeated ray index in {cone}"
            structural = True
            continue
        if any(i < 0 or i >= fan.n_rays for i in cone):
            yield f"cone {k}: ray index out of range in {cone}"
            structural = True
            continue
        used.update(cone)
        if cone in cones_seen:
            yield f"cones {cones_seen[cone]},{k}: duplicate cone {cone}"
        else:
            cones_seen[cone] = k
        if len(cone) > n:
            yield f"cone {k}: non-simplicial cone {cone}"
            structural = True
        elif len(cone) < n:
            yield f"cone {k}: lower-dimensional cone {cone}"
            structural = True
        elif all(len(fan.rays[i]) == n for i in cone) and lattice.rank(fan.cone_rays(k)) < n:
            yield f"cone {k}: rays of {cone} are linearly dependent"
            structural = True
    for i in range(fan.n_rays):
        if i not in used:
            yield f"ray {i}: not used by any maximal cone"
    if structural or any(len(r) != n or not any(r) for r in fan.rays):
        return
    for a, b in combinations(range(len(fan.max_cones)), 2):
        if not _meet_in_common_face(fan, a, b):
            yield f"cones {a},{b}: intersection is not a common face"


def _separated(fan: Fan, a: int, b: int) -> bool:
    """Quick try with small combinations of the two cones' dual-basis sums."""
    ca, cb = fan.max_cones[a], fan.max_cones[b]
    shared = set(ca) & set(cb)
    only_a = [fan.rays[i] for i in ca if i not in shared]
    only_b = [fan.rays[j] for j in cb if j not in shared]

    def dual_sum(k):
        # column j of the inverse is the dual vector of generator j
        inv = fan.cone_inverse(k)
        keep = [j for j, i in enumerate(fan.max_cones[k]) if i not in shared]
        return [sum(row[j] for j in keep) for row in inv]

    ha, hb = dual_sum(a), dual_sum(b)
    for wa, wb in ((1, 0), (0, 1), (1, 1), (2, 1), (1, 2)):
        h = [wa * x - wb * y for x, y in zip(ha, hb)]
        if all(lattice.dot(h, u) > 0 for u in only_a) and all(lattice.dot(h, u) < 0 for u in only_b):
            return True
    return False


def _meet_in_common_face(fan: Fan, a: int, b: int) -> bool:
    """Exact face-intersection test for two full-dimensional simplicial cones.

    The cones meet in the face spanned by their shared rays iff some linear
    functional vanishes on the shared rays, is positive on the remaining rays
    of one cone and negative on the remaining rays of the other (Gordan's
    alternative). After rescaling, the candidate functionals form a pointed
    polyhedron, which is nonempty iff it has a vertex.
    """
    ca, cb = fan.max_cones[a], fan.max_cones[b]
    if set(ca) == set(cb):
        return True
    if _separated(fan, a, b):
        return True
    shared = [fan.rays[i] for i in ca if i in cb]
    rows = [fan.rays[i] for i in ca if i not in cb] + [fan.rays[j] for j in cb if j not in ca]
    bounds = [1] * (len(rows) // 2) + [-1] * (len(rows) // 2)
    d = len(rows) // 2

    def feasible(h):
        return all(
            (lattice.dot(h, u) >= 1) if b > 0 else (lattice.dot(h, u) <= -1)
            for u, b in zip(rows, bounds)
        )

    for tight in combinations(range(len(rows)), d):
        A = tuple(shared) + tuple(rows[t] for t in tight)
        try:
            h = lattice.solve_rational(A, (0,) * len(shared) + tuple(bounds[t] for t in tight))
        except SingularSystem:
            continue
        if feasible(h):
            return True
    return False


def is_smooth(fan: Fan) -> bool:
    return singular_cone(fan) is None


def singular_cone(fan: Fan) -> int | None:
    """First maximal cone whose generators do not extend to a Z-basis."""
    fan.require_valid()
    for k in range(len(fan.max_cones)):
        if not lattice.is_unimodular_basis(fan.cone_rays(k)):
            return k
    return None


def is_complete(fan: Fan) -> bool:
    """Every wall borders exactly two maximal cones and the wall graph is connected.

    This test is meant for dimensions up to 4.
    """
    fan.require_valid()
    if not fan.max_cones:
        return False
    incident = fan._facet_map
    if any(len(ks) != 2 for ks in incident.values()):
        return False
    adj = {k: set() for k in range(len(fan.max_cones))}
    for a, b in incident.values():
        adj[a].add(b)
        adj[b].add(a)
    reached, stack = {0}, [0]
    while stack:
        for nb in adj[stack.pop()] - reached:
            reached.add(nb)
            stack.append(nb)
    return len(reached) == len(fan.max_cones)


@dataclass(frozen=True)
class WallCurve:
    """A codimension-one cone shared by two maximal cones (an invariant curve)."""

    wall: tuple
    left: int
    right: int
    extra_left: int
    extra_right: int

    def flipped(self) -> "WallCurve":
        return WallCurve(self.wall, self.right, self.left, self.extra_right, self.extra_left)


def walls(fan: Fan) -> list[WallCurve]:
    fan.require_valid()
    incident = fan._facet_map
    out = []
    for k, cone in enumerate(fan.max_cones):
        for facet in combinations(cone, len(cone) - 1):
            ks = incident[facet]
            if len(ks) != 2:
                raise NonCompleteFan(f"wall {facet} borders {len(ks)} maximal cone(s)")
            left, right = ks
            if k != left:
                continue
            (el,) = set(fan.max_cones[left]) - set(facet)
            (er,) = set(fan.max_cones[right]) - set(facet)
            out.append(WallCurve(facet, left, right, el, er))
    return out


def cone_coordinates(fan: Fan, k: int, v: Sequence) -> tuple:
    """Coordinates of ``v`` in the generators of maximal cone ``k``."""
    if len(v) != fan.dim:
        raise DimensionMismatch(f"vector of length {len(v)} in a rank {fan.dim} lattice")
    inv = fan.cone_inverse(k)
    return tuple(sum(inv[i][j] * v[i] for i in range(fan.dim)) for j in range(fan.dim))


def cone_contains(fan: Fan, k: int, v: Sequence) -> bool:
    try:
        return all(x >= 0 for x in cone_coordinates(fan, k, v))
    except SingularSystem:
        return False


def containing_cone(fan: Fan, v: Sequence) -> int | None:
    return next((k for k in range(len(fan.max_cones)) if cone_contains(fan, k, v)), None)


def star_subdivision(fan: Fan, v: Sequence[int]) -> Fan:
    """Insert the ray ``v`` and split every maximal cone that contains it."""
    fan.require_valid()
    v = tuple(int(x) for x in v)
    if len(v) != fan.dim:
        raise DimensionMismatch(f"vector of length {len(v)} in a rank {fan.dim} lattice")
    if not lattice.is_primitive(v):
        raise ValueError(f"{v} is not a primitive lattice vector")
    if v in fan.rays:
        raise DuplicateRay(f"{v} is already ray {fan.ray_index(v)}")
    new_index = fan.n_rays
    cones = []
    hit = False
    for k, cone in enumerate(fan.max_cones):
        coords = cone_coordinates(fan, k, v)
        if any(x < 0 for x in coords):
            cones.append(cone)
            continue
        hit = True
        for i, lam in zip(cone, coords):
            if lam > 0:
                cones.append(tuple(j for j in cone if j != i) + (new_index,))
    if not hit:
        raise RayOutsideSupport(f"{v} lies in no maximal cone")
    return Fan(fan.dim, fan.rays + (v,), cones)


@dataclass(frozen=True)
class FanMap:
    """A lattice map N -> N' (matrix acting on column vectors) between two fans."""

    matrix: tuple
    source: Fan
    target: Fan

    def __post_init__(self):
        object.__setattr__(self, "matrix", lattice.as_matrix(self.matrix))
        rows, cols = lattice.shape(self.matrix)
        if rows != self.target.dim or cols != self.source.dim:
            raise DimensionMismatch(
                f"matrix is {rows}x{cols}, fans need {self.target.dim}x{self.source.dim}"
            )

    def __call__(self, v: Sequence) -> tuple:
        return lattice.matvec(self.matrix, v)


def fan_map_offender(fmap: FanMap) -> int | None:
    """First source maximal cone whose image lies in no target cone."""
    fmap.source.require_valid()
    fmap.target.require_valid()
    tgt = fmap.target
    for k in range(len(fmap.source.max_cones)):
        images = [fmap(u) for u in fmap.source.cone_rays(k)]
        if not any(all(cone_contains(tgt, t, w) for w in images) for t in range(len(tgt.max_cones))):
            return k
    return None


def check_fan_map(fmap: FanMap) -> bool:
    return fan_map_offender(fmap) is None


def identity_map(fan: Fan) -> FanMap:
    return FanMap(lattice.identity(fan.dim), fan, fan)


def fan_to_dict(fan: Fan) -> dict:
    return {"dim": fan.dim, "rays": [list(r) for r in fan.rays], "max_cones": [list(c) for c in fan.max_cones]}


def fan_from_dict(data: dict) -> Fan:
    try:
        return Fan(int(data["dim"]), data["rays"], data["max_cones"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed fan document: {exc}") from exc


def dumps_fan(fan: Fan) -> str:
    return json.dumps(fan_to_dict(fan))


def loads_fan(text: str) -> Fan:
    return fan_from_dict(json.loads(text))
