"""Command-line front end: every check prints a JSON report on stdout.

Exit status is 0 when every report item passes, 1 when a check fails and 2 on
usage or input errors.

    python cli.py monodromy --K 4
    python cli.py flip --K 2 --diagonal 3
    python cli.py ugaglia --n 3 --points 20 --seed 0
"""

import argparse
import json
import sys

from dotenv import load_dotenv

load_dotenv()

from services import polygon, slncore, stokes2, ugaglia  # noqa: E402
from services.errors import StokesError, TriangulationFormatError  # noqa: E402


def _triangulation(args):
    if getattr(args, "triangulation", None):
        with open(args.triangulation) as f:
            T = polygon.from_json(f.read())
        if T.K != args.K:
            raise TriangulationFormatError(f"file describes K={T.K}, expected K={args.K}")
        return T
    return polygon.fan_triangulation(args.K)


def _diagonal(text):
    """An integer label j (the diagonal carrying y_j) or a chord 'a,b'."""
    if "," in text:
        a, b = (int(x) for x in text.split(","))
        return (a, b)
    return int(text)


# name -> (runner taking a parameter dict, parameter defaults)
CHECKS = {
    "monodromy": (lambda p: stokes2.verify_monodromy(p["K"], timing=p["timing"]), {"K": 1}),
    "form": (lambda p: stokes2.verify_form(p["K"], p.get("T"), timing=p["timing"]), {"K": 1}),
    "flip": (lambda p: stokes2.verify_flip_mutation(p.get("T") or polygon.fan_triangulation(p["K"]),
                                                    p["diagonal"], p["seed"], timing=p["timing"]),
             {"K": 2, "diagonal": 2}),
    "fn-check": (lambda p: stokes2.verify_fn_pushforward(p["K"], p["seed"], timing=p["timing"]), {"K": 1}),
    "ideal-check": (lambda p: stokes2.verify_prop_ideal(p["K"], p["seed"], timing=p["timing"]), {"K": 1}),
    "mutation-walk": (lambda p: stokes2.verify_mutation_walk(p["K"], p["steps"], p["seed"], timing=p["timing"]),
                      {"K": 2, "steps": 5}),
    "sln-triple": (lambda p: slncore.verify_triangle(p["n"], timing=p["timing"]), {"n": 3}),
    "ugaglia": (lambda p: ugaglia.verify_ugaglia(p["n"], p["points"], p["seed"], timing=p["timing"]),
                {"n": 3, "points": 20}),
}


def run_check(name, params):
    """Run a named check with defaults filled in; raises KeyError for unknown names."""
    runner, defaults = CHECKS[name]
    merged = {"seed": 0, "timing": False, **defaults, **params}
    for key in ("K", "n", "steps", "points", "seed"):
        if key in merged:
            merged[key] = int(merged[key])
    if merged.get("K", 1) < 1 or merged.get("n", 2) < 2:
        raise ValueError("K must be >= 1 and n >= 2")
    print(f"[run_check] {name} {json.dumps({k: v for k, v in merged.items() if k != 'T'}, default=str)}",
          file=sys.stderr)
    return runner(merged)


def build_parser():
    parser = argparse.ArgumentParser(prog="cli.py", description="Exact checks on Stokes manifolds and cluster algebras")
    parser.add_argument("--timing", action="store_true", help="fill elapsed_ms (reports are otherwise deterministic)")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_k(p):
        p.add_argument("--K", type=int, required=True)

    p = sub.add_parser("monodromy")
    with_k(p)
    p = sub.add_parser("form")
    with_k(p)
    p.add_argument("--triangulation", metavar="FILE")
    p = sub.add_parser("flip")
    with_k(p)
    p.add_argument("--diagonal", type=_diagonal, required=True)
    p.add_argument("--triangulation", metavar="FILE")
    for name in ("fn-check", "ideal-check"):
        p = sub.add_parser(name)
        with_k(p)
        p.add_argument("--seed", type=int, default=0)
    p = sub.add_parser("mutation-walk")
    with_k(p)
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p = sub.add_parser("sln-triple")
    p.add_argument("--n", type=int, required=True)
    p = sub.add_parser("ugaglia")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--points", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("triangulation")
    tsub = p.add_subparsers(dest="action", required=True)
    e = tsub.add_parser("export", help="print the fan triangulation, optionally after flips")
    e.add_argument("--K", type=int, required=True)
    e.add_argument("--flips", default="", help="comma-separated labels j to flip in order")
    e.add_argument("--out", metavar="FILE")
    i = tsub.add_parser("import", help="validate a triangulation file and print its quiver")
    i.add_argument("file")
    return parser


def _triangulation_command(args):
    if args.action == "export":
        T = polygon.fan_triangulation(args.K)
        for j in filter(None, args.flips.split(",")):
            T = polygon.flip(T, int(j))
        text = json.dumps(T.to_json(), indent=2, sort_keys=True)
        if args.out:
            with open(args.out, "w") as f:
                f.write(text + "\n")
        else:
            print(text)
        return 0
    with open(args.file) as f:
        T = polygon.from_json(f.read())
    Q = polygon.quiver_of(T)
    print(json.dumps({"triangulation": T.to_json(), "quiver": Q.to_json()}, indent=2, sort_keys=True))
    return 0


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "triangulation":
            return _triangulation_command(args)
        params = {k: v for k, v in vars(args).items() if k not in ("command", "triangulation") and v is not None}
        if args.command in ("form", "flip") and args.triangulation:
            params["T"] = _triangulation(args)
        report = run_check(args.command, params)
    except (StokesError, ValueError, OSError) as e:
        print(json.dumps({"error": str(e)}), file=sys.stderr)
        return 2
    print(report.dumps())
    return 0 if report.passed else 1


if __name__ == "__main__":
    sys.exit(main())
