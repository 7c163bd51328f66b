"""Command-line interface.

Subcommands:
  ed-curve       CSV of the entanglement-entropy curve over a z grid
  min-output     face-minimum report for a given dimension
  zstar          tangency point, its value and the angle transition
  roof-estimate  decomposition-search upper bound for a state read from file
  verify         run the named verification suites

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 input
parse error.
"""

import argparse
import math
import sys

from . import face_minimum as fm
from . import states as st
from . import symmetric_curve as sc
from .roof import roof_upper_bound
from .verify import SUITE_NAMES, run_suite

LN2 = math.log(2.0)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_PARSE = 3


def _fmt(x: float) -> str:
    return f"{x:.9g}"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="diagmap",
        description="Entanglement entropy of the diagonal (pinching) channel.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_curve = sub.add_parser("ed-curve", help="emit the curve as CSV (z, epsilon, theta_min, ed, region)")
    p_curve.add_argument("--z-min", type=float, default=-0.5)
    p_curve.add_argument("--z-max", type=float, default=1.0)
    p_curve.add_argument("--z-step", type=float, default=1e-3)
    p_curve.add_argument("--units", choices=("nats", "bits"), default="nats")
    p_curve.add_argument("--out", metavar="FILE", default=None)

    p_min = sub.add_parser("min-output", help="minimal output entropy on the zero-sum face")
    p_min.add_argument("--n", type=int, required=True, help="Hilbert-space dimension N >= 2")
    p_min.add_argument("--oracle", action="store_true", help="also run the brute-force search")
    p_min.add_argument("--restarts", type=int, default=None, help="search restarts (default 50*N)")
    p_min.add_argument("--seed", type=int, default=0)
    p_min.add_argument("--units", choices=("nats", "bits"), default="nats")

    p_zstar = sub.add_parser("zstar", help="report the lower tangency point and angle transition")
    p_zstar.add_argument("--units", choices=("nats", "bits"), default="nats")

    p_roof = sub.add_parser("roof-estimate", help="decomposition-search upper bound for a state file")
    p_roof.add_argument("input_path", metavar="FILE")
    p_roof.add_argument("--m", type=int, default=None, help="decomposition length (default rank+1)")
    p_roof.add_argument("--restarts", type=int, default=100)
    p_roof.add_argument("--seed", type=int, default=0)
    p_roof.add_argument("--units", choices=("nats", "bits"), default="nats")

    p_verify = sub.add_parser("verify", help="run verification suites")
    p_verify.add_argument("suite", nargs="?", default="all", choices=SUITE_NAMES)
    return parser


def _unit_scale(units: str) -> float:
    return 1.0 / LN2 if units == "bits" else 1.0


def cmd_ed_curve(args) -> int:
    try:
        zs = sc.curve_grid(args.z_min, args.z_max, args.z_step)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    scale = _unit_scale(args.units)
    lines = ["z,epsilon,theta_min,ed,region"]
    for z in zs:
        rec = sc.curve_record(float(z))
        lines.append(
            ",".join(
                (
                    _fmt(rec.z),
                    _fmt(rec.epsilon * scale),
                    _fmt(rec.theta_min),
                    _fmt(rec.ed * scale),
                    rec.region,
                )
            )
        )
    text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_min_output(args) -> int:
    if args.n < 2:
        print("error: --n must be at least 2", file=sys.stderr)
        return EXIT_USAGE
    n = args.n
    scale = _unit_scale(args.units)
    closed = fm.min_face_entropy(n)
    family = "pair states" if n <= 6 else "one-vs-rest"
    print(f"N = {n}")
    print(f"closed-form minimum: {_fmt(closed * scale)} {args.units}")
    print(f"winning family: {family}")
    states = fm.minimizer_states(n)
    print(f"minimizer states ({len(states)}):")
    shown = states if len(states) <= 10 else states[:10]
    for v in shown:
        print("  (" + ", ".join(_fmt(x) for x in v) + ")")
    if len(states) > len(shown):
        print(f"  ... {len(states) - len(shown)} more by permutation")
    if args.oracle:
        restarts = args.restarts if args.restarts is not None else 50 * n
        value, argmin = fm.brute_force_min_face(n, restarts=restarts, seed=args.seed)
        print(f"search minimum ({restarts} restarts, seed {args.seed}): {_fmt(value * scale)} {args.units}")
        print(f"gap to closed form: {_fmt((value - closed) * scale)}")
        print("argmin: (" + ", ".join(_fmt(x) for x in argmin) + ")")
    return EXIT_OK


def cmd_zstar(args) -> int:
    scale = _unit_scale(args.units)
    zstar = sc.lower_tangent_z()
    s_star = sc.theta0_entropy(zstar)
    slope = (s_star - LN2) / (zstar + 0.5)
    transition = sc.theta_transition()
    print(f"tangency point z* = {_fmt(zstar)}")
    print(f"curve value at z*: {_fmt(s_star * scale)} {args.units}")
    print(f"tangent slope: {_fmt(slope * scale)} {args.units} per unit z")
    print(f"angle transition at z = {_fmt(transition)}")
    return EXIT_OK


def cmd_roof_estimate(args) -> int:
    try:
        omega = st.read_density_matrix(args.input_path)
    except OSError as exc:
        print(f"error: cannot read {args.input_path}: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except st.StateFormatError as exc:
        print(f"error: {args.input_path}: {exc}", file=sys.stderr)
        return EXIT_PARSE
    scale = _unit_scale(args.units)
    try:
        result = roof_upper_bound(omega, m=args.m, restarts=args.restarts, seed=args.seed)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(f"upper bound: {_fmt(result.value * scale)} {args.units}")
    dec = result.decomposition
    print(f"decomposition ({len(dec)} states):")
    for w, s in zip(dec.weights, dec.states):
        amps = ", ".join(f"{v.real:.6g}{v.imag:+.6g}j" for v in s)
        print(f"  weight {_fmt(w)}: ({amps})")
    if omega.shape == (3, 3):
        z = st.twirl_s3(omega)
        ref = sc.entanglement_entropy(z)
        print(f"twirl parameter z = {_fmt(z)}")
        print(f"symmetric-family value at z: {_fmt(ref * scale)} {args.units} (lower bound for this state)")
    return EXIT_OK


def cmd_verify(args) -> int:
    results = run_suite(args.suite)
    failed = 0
    for res in results:
        tag = "PASS" if res.passed else "FAIL"
        print(f"{tag}  {res.name}: {res.detail}")
        failed += 0 if res.passed else 1
    print(f"{len(results) - failed}/{len(results)} checks passed")
    return EXIT_OK if failed == 0 else EXIT_VERIFY_FAILED


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "ed-curve": cmd_ed_curve,
        "min-output": cmd_min_output,
        "zstar": cmd_zstar,
        "roof-estimate": cmd_roof_estimate,
        "verify": cmd_verify,
    }
    return handlers[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
