"""Fan builders: projective spaces, products, split projective bundles,
P^1-bundles given by twisting data, and blow-ups along invariant centres."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import NotACone, NotSmooth
from .fan import Fan, FanMap, is_smooth, star_subdivision


def projective_space_fan(n: int) -> Fan:
    if n < 1:
        raise ValueError("projective space needs n >= 1")
    rays = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    rays.append(tuple(-1 for _ in range(n)))
    cones = [tuple(j for j in range(n + 1) if j != omit) for omit in range(n + 1)]
    return Fan(n, rays, cones)


def product_fan(a: Fan, b: Fan) -> Fan:
    rays = [r + (0,) * b.dim for r in a.rays] + [(0,) * a.dim + r for r in b.rays]
    shift = a.n_rays
    cones = [ca + tuple(i + shift for i in cb) for ca, cb in product(a.max_cones, b.max_cones)]
    return Fan(a.dim + b.dim, rays, cones)


def hirzebruch_fan(a: int) -> Fan:
    """F_a with rays (1,0), (0,1), (-1,a), (0,-1); the ray (0,1) is the (-a)-curve."""
    return Fan(2, [(1, 0), (0, 1), (-1, a), (0, -1)], [(0, 1), (1, 2), (2, 3), (0, 3)])


def projective_line_bundle(base: Fan, twists) -> Fan:
    """P^1-bundle over ``base``: ray u_i lifts to (u_i, twists[i]); fibre rays (0,..,0,+-1).

    Cones are listed base-cone-major, with the +1 fibre ray before the -1 one.
    """
    if len(twists) != base.n_rays:
        raise ValueError("one twist per base ray is required")
    rays = [r + (int(t),) for r, t in zip(base.rays, twists)]
    up = (0,) * base.dim + (1,)
    down = (0,) * base.dim + (-1,)
    rays += [up, down]
    m = base.n_rays
    cones = [c + (fibre,) for c in base.max_cones for fibre in (m, m + 1)]
    return Fan(base.dim + 1, rays, cones)


@dataclass(frozen=True)
class BundleSpec:
    """P(O(a_0) + ... + O(a_k)) over P^s, normalised so that a_0 = 0."""

    s: int
    twists: tuple

    def __post_init__(self):
        object.__setattr__(self, "twists", tuple(int(a) for a in self.twists))
        if self.s < 1:
            raise ValueError("base dimension s must be >= 1")
        if len(self.twists) < 2:
            raise ValueError("need at least two summands")
        if self.twists[0] != 0:
            raise ValueError("twists must be normalised with a_0 = 0")

    @property
    def rank(self) -> int:
        return len(self.twists) - 1


@dataclass(frozen=True)
class SplitBundle:
    fan: Fan
    base_rays: tuple
    fiber_rays: tuple
    section_cone: tuple
    projection: FanMap


def split_bundle_fan(spec: BundleSpec) -> SplitBundle:
    """Fan of a split projective bundle in the lattice Z^s + Z^k.

    Rays in order: e_1..e_s, then -(e_1+..+e_s) carrying the twists
    (a_1..a_k) in the fibre coordinates, then f_1..f_k, then
    f_0 = -(f_1+..+f_k). The section cone <f_1..f_k> cuts out the section
    given by the quotient onto the untwisted summand O(a_0).
    """
    s, k = spec.s, spec.rank
    n = s + k
    zeros_k = (0,) * k
    base = [tuple(int(i == j) for j in range(s)) + zeros_k for i in range(s)]
    base.append((-1,) * s + spec.twists[1:])
    fiber = [(0,) * s + tuple(int(i == j) for j in range(k)) for i in range(k)]
    fiber.append((0,) * s + (-1,) * k)
    rays = base + fiber
    base_idx = tuple(range(s + 1))
    fiber_idx = tuple(range(s + 1, s + k + 2))
    cones = [bc + fc for bc in _omit_one(base_idx) for fc in _omit_one(fiber_idx)]
    fan = Fan(n, rays, cones)
    proj = tuple(tuple(int(i == j) for j in range(n)) for i in range(s))
    return SplitBundle(
        fan=fan,
        base_rays=base_idx,
        fiber_rays=fiber_idx,
        section_cone=fiber_idx[:k],
        projection=FanMap(proj, fan, projective_space_fan(s)),
    )


def _omit_one(idx: tuple):
    return [tuple(i for i in idx if i != skip) for skip in reversed(idx)]


def blow_up_invariant(fan: Fan, cone_rays) -> Fan:
    """Blow up the invariant subvariety of a cone: star subdivision at the sum of its generators."""
    cone_rays = tuple(sorted(set(cone_rays)))
    if not cone_rays:
        raise NotACone("empty cone")
    if not any(set(cone_rays) <= set(c) for c in fan.max_cones):
        raise NotACone(f"rays {cone_rays} do not span a cone of the fan")
    if not is_smooth(fan):
        raise NotSmooth("blow-up centre construction needs a smooth fan")
    v = tuple(sum(col) for col in zip(*(fan.rays[i] for i in cone_rays)))
    return star_subdivision(fan, v)


# The fan of the P^1-bundle over F_3 and its two successive blow-ups.
SATO_RAY_NAMES = ("x1", "x2", "x3", "x4", "y1", "y2", "z1", "z2")


def sato_base_fan() -> Fan:
    return hirzebruch_fan(3)


def sato_bundle_fan() -> Fan:
    return projective_line_bundle(sato_base_fan(), (1, 0, 0, 0))


def sato_fan() -> Fan:
    sigma = sato_bundle_fan()
    z1 = blow_up_invariant(sigma, (1, 4))   # x2 + y1
    return blow_up_invariant(z1, (1, 6))    # x2 + z1


def sato_projection() -> FanMap:
    return FanMap(((1, 0, 0), (0, 1, 0)), sato_fan(), sato_base_fan())


def catalog() -> dict[str, Fan]:
    """Small smooth complete fans used by the property suites."""
    fans = {
        "P1": projective_space_fan(1),
        "P2": projective_space_fan(2),
        "P1xP1": product_fan(projective_space_fan(1), projective_space_fan(1)),
    }
    for a in range(6):
        fans[f"F{a}"] = hirzebruch_fan(a)
    fans["sato"] = sato_fan()
    return fans
