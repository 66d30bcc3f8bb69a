"""Command line entry point: ``torifan example ...``, ``torifan check ...``,
``torifan selftest``.

Exit codes: 0 when every assertion holds, 1 when a mathematical assertion
fails, 2 for input or usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from pathlib import Path

from . import golden
from .constructions import (
    SATO_RAY_NAMES,
    BundleSpec,
    blow_up_invariant,
    catalog,
    sato_base_fan,
    sato_bundle_fan,
    sato_fan,
    sato_projection,
    split_bundle_fan,
)
from .divisor import (
    InvariantDivisor,
    anticanonical,
    basepoint_witness,
    cartier_data,
    count_lattice_points,
    divisor_from_dict,
    kodaira_dimension,
    polytope,
)
from .errors import InvalidFan, TorifanError
from .fan import FanMap, check_fan_map, fan_from_dict, is_complete, is_smooth, validate
from .lattice import identity
from .intersection import min_wall
from .report import Report

MAX_BUNDLE_DIM = 4
CHECK_FLAGS = ("cartier", "bpf", "nef", "ample", "kappa", "points")


class UsageError(Exception):
    pass


def _wall_summary(fan, wall, value, names=None):
    label = (lambda i: names[i]) if names else (lambda i: i)
    return {
        "wall": [label(i) for i in wall.wall],
        "cones": [wall.left, wall.right],
        "value": value,
    }


def cmd_example_sato() -> Report:
    rep = Report("sato")
    names = SATO_RAY_NAMES
    sigma = sato_bundle_fan()
    rep.check("bundle fan is valid", [], validate(sigma))
    rep.check("bundle fan rays", [golden.SATO_RAYS[n] for n in names[:6]], list(sigma.rays), "published rays")
    rep.check("bundle fan has 8 maximal cones", 8, len(sigma.max_cones))

    delta = sato_fan()
    rep.check("blown-up fan rays", [golden.SATO_RAYS[n] for n in names], list(delta.rays), "published rays")
    expected_cones = sorted(sorted(c) for c in golden.SATO_MAX_CONES.values())
    computed_cones = sorted(sorted(names[i] for i in c) for c in delta.max_cones)
    rep.check("maximal cones after two star subdivisions", expected_cones, computed_cones, "published cone list")
    rep.check("blown-up fan is smooth", True, is_smooth(delta))
    rep.check("blown-up fan is complete", True, is_complete(delta))

    K = anticanonical(delta)
    data = cartier_data(K)
    for cname, cone_names in golden.SATO_MAX_CONES.items():
        k = delta.find_cone(names.index(n) for n in cone_names)
        rep.check(f"Cartier data on {cname}", golden.SATO_CARTIER[cname], data[k], "published table")

    bad = basepoint_witness(K)
    rep.check("-K is base point free", True, bad is None, "published verdict")
    wall, value = min_wall(K)
    rep.check("-K is nef", True, value >= 0, "published verdict")
    rep.check("kodaira dimension of -K", 3, kodaira_dimension(K), "nef and big")
    rep.check("-K is not ample (weak Fano)", False, value > 0, "derived: zero wall")
    rep.note("minimal wall of -K", _wall_summary(delta, wall, value, names))

    rep.check("projection to the base is a fan map", True, check_fan_map(sato_projection()), "published construction")
    base = sato_base_fan()
    bwall, bvalue = min_wall(anticanonical(base))
    rep.check("base -K is not nef", False, bvalue >= 0, "published verdict")
    rep.check("base witness wall value", -1, bvalue, "derived: adjunction with C^2=-3")
    rep.note("base witness wall", _wall_summary(base, bwall, bvalue))
    return rep


def cmd_example_bundle(r: int, s: int) -> Report:
    if r < 1 or s < 1:
        raise UsageError("r and s must be positive")
    if r + s + 1 > MAX_BUNDLE_DIM:
        raise UsageError(f"dimension r+s+1={r + s + 1} exceeds the supported maximum {MAX_BUNDLE_DIM}")
    rep = Report(f"bundle r={r} s={s}")
    bundle = split_bundle_fan(BundleSpec(s, (0,) + (1,) * (r + 1)))
    Z = bundle.fan
    X = blow_up_invariant(Z, bundle.section_cone)
    rep.check("base bundle fan is smooth", True, is_smooth(Z))
    rep.check("base bundle fan is complete", True, is_complete(Z))
    rep.check("projection onto P^s is a fan map", True, check_fan_map(bundle.projection))
    rep.check("blow-up fan is smooth", True, is_smooth(X))
    rep.check("blow-up fan is complete", True, is_complete(X))
    rep.check("blow-down is a fan map", True, check_fan_map(FanMap(identity(X.dim), X, Z)))
    rep.note("ray counts (Z, X)", [Z.n_rays, X.n_rays])

    xwall, xvalue = min_wall(anticanonical(X))
    zwall, zvalue = min_wall(anticanonical(Z))
    if r > s:
        rep.check("-K_X is ample", True, xvalue > 0, "published verdict for r > s")
        rep.check("-K_Z is not nef", False, zvalue >= 0, "published verdict for r > s")
    else:
        rep.note("-K_X is ample", xvalue > 0)
        rep.note("-K_Z is nef", zvalue >= 0)
    rep.note("minimal wall of -K_X", _wall_summary(X, xwall, xvalue))
    rep.note("minimal wall of -K_Z", _wall_summary(Z, zwall, zvalue))
    return rep


def cmd_example_double_cover() -> Report:
    from .surface import double_cover_report

    led = double_cover_report()
    rep = Report("double-cover")
    rep.check("K^2 on P^1 x P^1", 8, led["K2_before"], "published value")
    rep.check("K^2 after 16 blow-ups", -8, led["K2_after"], "published value")
    rep.check("B = pullback(B') - 2 sum E_i is even", True, led["B_even"], "published: B ~ 2L")
    rep.check("class of K_Z + L", [0] * 18, led["K_plus_L"], "published class identity")
    rep.check("pullback of K_Z' + B'/2", [0] * 18, led["pullback_K_plus_half_B"], "published class identity")
    rep.check("(-K_Z).C for a strict transform of a ruling line", -2, led["minus_K_dot_C"], "derived")
    rep.check("C^2 + K.C (genus 0)", -2, led["C2"] + led["K_dot_C"], "derived: adjunction")
    rep.check("signature of the intersection form", [1, 17], led["signature"], "derived")
    return rep


def cmd_check(fan_doc: dict, divisor_doc: dict, flags) -> Report:
    try:
        fan = fan_from_dict(fan_doc)
        problems = validate(fan)
        if problems:
            raise InvalidFan(problems)
        D = divisor_from_dict(divisor_doc, fan)
    except InvalidFan:
        raise
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    flags = list(flags) or list(CHECK_FLAGS)
    rep = Report("check")
    for flag in CHECK_FLAGS:
        if flag not in flags:
            continue
        try:
            _run_flag(rep, flag, D)
        except TorifanError as exc:
            rep.verdict(flag, False, f"{type(exc).__name__}: {exc}")
    return rep


def _run_flag(rep: Report, flag: str, D: InvariantDivisor) -> None:
    if flag == "cartier":
        data = cartier_data(D)
        rep.verdict("cartier data", True, {"integral": data.integral, "m": list(data.covectors)})
    elif flag == "bpf":
        bad = basepoint_witness(D)
        witness = None if bad is None else {"cone": bad[0], "ray": bad[1]}
        rep.verdict("base point free", bad is None, {"holds": bad is None, "witness": witness})
    elif flag in ("nef", "ample"):
        wall, value = min_wall(D)
        holds = value >= 0 if flag == "nef" else value > 0
        rep.verdict(flag, holds, {"holds": holds, "witness": _wall_summary(D.fan, wall, value)})
    elif flag == "kappa":
        rep.verdict("kodaira dimension", True, kodaira_dimension(D))
    elif flag == "points":
        rep.verdict("lattice points of P_D", True, count_lattice_points(polytope(D)))


def random_divisor(fan, rng: random.Random, lo=-5, hi=5) -> InvariantDivisor:
    return InvariantDivisor(fan, [rng.randint(lo, hi) for _ in range(fan.n_rays)])


def cmd_selftest(seed: int, samples: int = 100) -> Report:
    """Cross-check the polytope criterion against wall positivity on the catalog."""
    rep = Report(f"selftest seed={seed}")
    rng = random.Random(seed)
    for name, fan in catalog().items():
        disagreements = []
        nef_count = 0
        for _ in range(samples):
            D = random_divisor(fan, rng)
            bpf = basepoint_witness(D) is None
            nef = min_wall(D)[1] >= 0
            nef_count += nef
            if bpf != nef:
                disagreements.append(list(D.coeffs))
        rep.check(f"{name}: base point free <=> nef on {samples} divisors", [], disagreements)
        rep.note(f"{name}: nef divisors sampled", nef_count)
    return rep


def _load_json(path: str) -> dict:
    try:
        return json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="torifan", description="Exact toric verification harness.")
    parser.add_argument("--pretty", action="store_true", help="human-readable table instead of JSON")
    sub = parser.add_subparsers(dest="command", required=True)

    ex = sub.add_parser("example", help="reproduce a worked example")
    ex.add_argument("--pretty", action="store_true", default=argparse.SUPPRESS)
    exs = ex.add_subparsers(dest="which", required=True)
    exs.add_parser("sato")
    b = exs.add_parser("bundle")
    b.add_argument("--r", type=int, required=True)
    b.add_argument("--s", type=int, required=True)
    exs.add_parser("double-cover")
    for p in exs.choices.values():
        p.add_argument("--pretty", action="store_true", default=argparse.SUPPRESS)

    chk = sub.add_parser("check", help="run predicates on a fan/divisor pair")
    chk.add_argument("--fan", required=True)
    chk.add_argument("--divisor", required=True)
    for flag in CHECK_FLAGS:
        chk.add_argument(f"--{flag}", action="store_true")
    chk.add_argument("--pretty", action="store_true", default=argparse.SUPPRESS)

    st = sub.add_parser("selftest", help="seeded criterion cross-validation (seed from TORIFAN_SEED)")
    st.add_argument("--samples", type=int, default=100)
    st.add_argument("--pretty", action="store_true", default=argparse.SUPPRESS)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "example":
            if args.which == "sato":
                rep = cmd_example_sato()
            elif args.which == "bundle":
                rep = cmd_example_bundle(args.r, args.s)
            else:
                rep = cmd_example_double_cover()
        elif args.command == "check":
            flags = [f for f in CHECK_FLAGS if getattr(args, f)]
            rep = cmd_check(_load_json(args.fan), _load_json(args.divisor), flags)
        else:
            seed = int(os.environ.get("TORIFAN_SEED", "0"))
            rep = cmd_selftest(seed, args.samples)
    except (UsageError, InvalidFan) as exc:
        print(f"torifan: error: {exc}", file=sys.stderr)
        return 2
    print(rep.to_text() if args.pretty else rep.to_json())
    return 0 if rep.overall else 1


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
