"""Exit criteria. Every check is exact (zero tolerance); run with ``-rA`` or
look at the "acceptance criteria" section of the terminal summary."""

import os
import random

from torifan import lattice
from torifan.cli import cmd_example_bundle
from torifan.constructions import (
    BundleSpec,
    blow_up_invariant,
    catalog,
    hirzebruch_fan,
    projective_space_fan,
    sato_base_fan,
    sato_fan,
    sato_projection,
    split_bundle_fan,
)
from torifan.divisor import (
    InvariantDivisor,
    anticanonical,
    cartier_data,
    count_lattice_points,
    is_basepoint_free,
    kodaira_dimension,
    polytope,
    pullback,
)
from torifan.fan import cone_contains, containing_cone, is_complete, is_smooth, star_subdivision, validate, walls
from torifan.intersection import is_ample, is_nef, min_wall, wall_numbers
from torifan.surface import double_cover_report

NAMES = ("x1", "x2", "x3", "x4", "y1", "y2", "z1", "z2")

# published maximal cones of the twice-subdivided fan and the Cartier data of -K
CONES = {
    "tau1": "x1 x2 z2", "tau2": "x1 z1 z2", "tau3": "x1 z1 y1",
    "tau4": "x3 y1 z1", "tau5": "x3 z2 z1", "tau6": "x3 z2 x2",
    "sigma3": "x1 x2 y2", "sigma4": "x2 x3 y2", "sigma5": "x3 x4 y1",
    "sigma6": "x3 x4 y2", "sigma7": "x4 x1 y1", "sigma8": "x4 x1 y2",
}
CARTIER = {
    "tau1": (-2, -1, 1), "tau6": (-2, -1, 1), "sigma3": (-2, -1, 1), "sigma4": (-2, -1, 1),
    "tau2": (0, 0, -1), "tau3": (0, 0, -1),
    "tau4": (1, 0, -1), "tau5": (1, 0, -1),
    "sigma5": (4, 1, -1), "sigma6": (4, 1, 1),
    "sigma7": (0, 1, -1), "sigma8": (-2, 1, 1),
}


def test_criterion_1_sato_reproduction(record_criterion):
    delta = sato_fan()
    named = {frozenset(NAMES[i] for i in c): k for k, c in enumerate(delta.max_cones)}
    expected = {frozenset(v.split()) for v in CONES.values()}
    cones_ok = set(named) == expected and len(delta.max_cones) == 12
    data = cartier_data(anticanonical(delta))
    table_ok = data.integral and all(
        data[named[frozenset(CONES[c].split())]] == m for c, m in CARTIER.items()
    )
    record_criterion("1 Sato fan cones and Cartier table (exact)", cones_ok and table_ok)
    assert cones_ok
    assert table_ok


def test_criterion_2_sato_verdicts(record_criterion):
    K = anticanonical(sato_fan())
    base_wall, base_value = min_wall(anticanonical(sato_base_fan()))
    results = {
        "bpf": is_basepoint_free(K),
        "nef": is_nef(K),
        "kappa": kodaira_dimension(K) == 3,
        "not ample": not is_ample(K),
        "base not nef": not is_nef(anticanonical(sato_base_fan())),
        "witness -1": base_value == -1,
    }
    record_criterion("2 Sato verdicts: bpf, nef, kappa=3, not ample, base wall -1", all(results.values()))
    assert all(results.values()), results


def test_criterion_3_double_cover_ledger(record_criterion):
    r = double_cover_report()
    ok = (
        r["K2_before"] == 8
        and r["K2_after"] == -8
        and r["B_even"]
        and r["K_plus_L"].is_zero()
        and r["minus_K_dot_C"] == -2
    )
    record_criterion("3 double-cover ledger: 8, -8, even B, K+L=0, witness -2", ok)
    assert ok


def test_criterion_4_bundle_verdicts(record_criterion):
    bundle = split_bundle_fan(BundleSpec(1, (0, 1, 1, 1)))
    X = blow_up_invariant(bundle.fan, bundle.section_cone)
    ok = (
        is_smooth(X)
        and is_complete(X)
        and is_ample(anticanonical(X))
        and not is_nef(anticanonical(bundle.fan))
    )
    ok = ok and cmd_example_bundle(2, 1).overall
    record_criterion("4 bundle (r,s)=(2,1): X smooth+complete, -K_X ample, -K_Z not nef", ok)
    assert ok


def test_criterion_5_bpf_iff_nef(record_criterion):
    seed = int(os.environ.get("TORIFAN_SEED", "0"))
    rng = random.Random(seed)
    mismatches = []
    fans = catalog()
    assert set(fans) == {"P1", "P2", "P1xP1", "F0", "F1", "F2", "F3", "F4", "F5", "sato"}
    for name, fan in fans.items():
        for _ in range(100):
            D = InvariantDivisor(fan, [rng.randint(-5, 5) for _ in fan.rays])
            if is_basepoint_free(D) != is_nef(D):
                mismatches.append((name, D.coeffs))
    record_criterion(f"5 bpf <=> nef on 10 catalog fans x 100 divisors (seed {seed})", not mismatches)
    assert not mismatches


def test_criterion_6_oracle_spot_checks(record_criterion):
    P2 = projective_space_fan(2)
    K2 = anticanonical(P2)
    F2, F3 = hirzebruch_fan(2), hirzebruch_fan(3)
    checks = {
        "P2 walls all 3": [v for _, v in wall_numbers(K2)] == [3, 3, 3],
        "P2 kappa 2": kodaira_dimension(K2) == 2,
        "P2 ten points": count_lattice_points(polytope(K2)) == 10,
        "F2 nef": is_nef(anticanonical(F2)),
        "F2 kappa 2": kodaira_dimension(anticanonical(F2)) == 2,
        "F3 not nef": not is_nef(anticanonical(F3)),
        "F3 min wall -1": min_wall(anticanonical(F3))[1] == -1,
    }
    record_criterion("6 oracle spot checks on P2, F2, F3", all(checks.values()))
    assert all(checks.values()), checks


def _snf_ok(rng):
    for _ in range(40):
        m, n = rng.randint(1, 4), rng.randint(1, 4)
        A = tuple(tuple(rng.randint(-6, 6) for _ in range(n)) for _ in range(m))
        U, S, V = lattice.smith_normal_form(A)
        if lattice.matmul(lattice.matmul(U, A), V) != S:
            return False
        if abs(lattice.determinant(U)) != 1 or abs(lattice.determinant(V)) != 1:
            return False
        diag = [S[i][i] for i in range(min(m, n)) if S[i][i]]
        if any(b % a for a, b in zip(diag, diag[1:])):
            return False
    return True


def test_criterion_7_structural_invariants(record_criterion):
    rng = random.Random(0)
    fans = catalog()
    results = {"snf": _snf_ok(rng)}

    subdiv_ok = smooth_ok = True
    probes = [tuple(rng.randint(-6, 6) for _ in range(3)) for _ in range(40)]
    for fan in fans.values():
        cone = fan.max_cones[0]
        for size in range(1 if fan.dim == 1 else 2, fan.dim + 1):
            v = tuple(sum(c) for c in zip(*(fan.rays[i] for i in cone[:size])))
            v = lattice.primitive(v)
            if v in fan.rays:
                continue
            new = star_subdivision(fan, v)
            subdiv_ok &= new.n_rays == fan.n_rays + 1 and validate(new) == [] and is_complete(new)
            subdiv_ok &= all(
                (containing_cone(fan, p[: fan.dim]) is None) == (containing_cone(new, p[: fan.dim]) is None)
                for p in probes
            )
            if size >= 2:
                smooth_ok &= is_smooth(new)
    results["subdivision"] = subdiv_ok
    results["blow-up smoothness"] = smooth_ok

    wall_ok = True
    for fan in fans.values():
        D = InvariantDivisor(fan, [rng.randint(-4, 4) for _ in fan.rays])
        data = cartier_data(D)
        for w in walls(fan):
            for i in w.wall:
                u = fan.rays[i]
                wall_ok &= lattice.dot(data[w.left], u) == lattice.dot(data[w.right], u) == -D.coeffs[i]
    results["cartier wall consistency"] = wall_ok

    proj = sato_projection()
    func_ok = True
    for _ in range(10):
        Dt = InvariantDivisor(proj.target, [rng.randint(-3, 3) for _ in proj.target.rays])
        src, tgt = cartier_data(pullback(proj, Dt)), cartier_data(Dt)
        MT = lattice.transpose(proj.matrix)
        for k in range(len(proj.source.max_cones)):
            image = [proj(u) for u in proj.source.cone_rays(k)]
            t = next(
                t for t in range(len(proj.target.max_cones))
                if all(cone_contains(proj.target, t, w) for w in image)
            )
            func_ok &= src[k] == lattice.matvec(MT, tgt[t])
    results["pullback functoriality"] = func_ok

    record_criterion("7 structural invariants: " + ", ".join(results), all(results.values()))
    assert all(results.values()), results
