"""Command-line surface: enumeration, arithmetic, tables, towers, verification.

Exit codes: 0 on success, 1 when a verification check fails, 2 on usage or
resource-cap errors.  All data output is deterministic for fixed flags.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys

from . import bratteli
from .algebra import format_element, from_diagram, to_x_coordinates, x_of
from .checks import VerifyConfig, run_verification
from .diagrams import (
    DEFAULT_DIAGRAM_CAP,
    CapExceededError,
    InvalidDiagramError,
    MismatchError,
    NonPlanarError,
    ParseError,
    cardinality,
    compositions,
    diagram_sort_key,
    ensure_within_cap,
    enumerate_planar,
    format_diagram,
    format_matrix,
    multinomial,
    multiply,
    parse_diagram,
)
from .representations import character_table_csv, verify_character_table

ENV_DIAGRAM_CAP = "PLANAR_ROOK_CAP"
ENV_N_CAP = "PLANAR_ROOK_N_CAP"
ENV_C_CAP = "PLANAR_ROOK_C_CAP"


def _env_int(name: str, fallback: int) -> int:
    value = os.environ.get(name)
    if value is None:
        return fallback
    try:
        return int(value)
    except ValueError:
        raise ValueError(f"environment variable {name}={value!r} is not an integer")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="planar-rook",
        description="Exact computations in the colored planar rook monoid and its algebra.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="number of planar diagrams")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-c", type=int, required=True)
    p.add_argument("--breakdown", action="store_true", help="also print one line per composition")

    p = sub.add_parser("enumerate", help="list all planar diagrams in canonical order")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-c", type=int, required=True)
    p.add_argument("--cap", type=int, default=None, help="refuse if the monoid is larger than this")

    p = sub.add_parser("mul", help="multiply two diagram literals")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--as-matrix", action="store_true", help="print the product in matrix form")
    p.add_argument("--spot-check", type=int, default=0, metavar="K",
                   help="also test associativity on K random triples of the same shape")
    p.add_argument("--seed", type=int, default=12345)

    p = sub.add_parser("xbasis", help="expand a diagram's x-basis vector")
    p.add_argument("diagram")
    p.add_argument("--invert", action="store_true",
                   help="print the diagram's x-basis coordinates instead")

    p = sub.add_parser("chartable", help="write the character table as CSV")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-c", type=int, required=True)
    p.add_argument("--format", default="csv", choices=["csv"])
    p.add_argument("--out", default=None)
    p.add_argument("--verify", action="store_true", help="recompute every entry as a trace")
    p.add_argument("--cap", type=int, default=None)

    p = sub.add_parser("bratteli", help="emit the restriction tower")
    p.add_argument("-c", type=int, required=True)
    p.add_argument("-n", type=int, required=True, help="largest level to build")
    p.add_argument("--format", default="dot", choices=["dot", "json"])
    p.add_argument("--out", default=None)

    p = sub.add_parser("verify", help="run the full verification suite")
    p.add_argument("--n-cap", type=int, default=None)
    p.add_argument("--c-cap", type=int, default=None)
    p.add_argument("--cap", type=int, default=None, help="largest monoid to sweep exhaustively")
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=12345)
    p.add_argument("--json", action="store_true", help="print the JSON report to stdout")
    p.add_argument("--out", default=None, help="write the JSON report to a file")

    return parser


def _write_bytes(path: str | None, payload: bytes) -> None:
    if path is None:
        sys.stdout.write(payload.decode("utf-8"))
    else:
        with open(path, "wb") as handle:
            handle.write(payload)


def _cmd_count(args) -> int:
    if args.n < 0 or args.c < 1:
        print("count needs n >= 0 and c >= 1", file=sys.stderr)
        return 2
    print(cardinality(args.n, args.c))
    if args.breakdown:
        for sizes in compositions(args.n, args.c):
            print(f"{sizes}: {multinomial(sizes) ** 2}")
    return 0


def _cmd_enumerate(args) -> int:
    if args.n < 0 or args.c < 1:
        print("enumerate needs n >= 0 and c >= 1", file=sys.stderr)
        return 2
    cap = args.cap if args.cap is not None else _env_int(ENV_DIAGRAM_CAP, DEFAULT_DIAGRAM_CAP)
    ensure_within_cap(args.n, args.c, cap)
    for d in enumerate_planar(args.n, args.c):
        print(format_diagram(d))
    return 0


def _cmd_mul(args) -> int:
    left = parse_diagram(args.left)
    right = parse_diagram(args.right)
    product = multiply(left, right)
    if args.as_matrix:
        print(format_matrix(product))
    else:
        print(format_diagram(product))
    if args.spot_check:
        pool = list(enumerate_planar(left.n, left.c))
        rng = random.Random(args.seed)
        for _ in range(args.spot_check):
            a, b, d = (rng.choice(pool) for _ in range(3))
            if multiply(multiply(a, b), d) != multiply(a, multiply(b, d)):
                print(f"associativity failed on {format_diagram(a)}, {format_diagram(b)}, "
                      f"{format_diagram(d)}", file=sys.stderr)
                return 1
        print(f"associativity spot-check passed on {args.spot_check} triples")
    return 0


def _cmd_xbasis(args) -> int:
    d = parse_diagram(args.diagram)
    if args.invert:
        coords = to_x_coordinates(from_diagram(d))
        terms = sorted(coords.items(), key=lambda item: diagram_sort_key(item[0]))
        print(" + ".join(f"{q} * x[{format_diagram(a)}]" for a, q in terms) or "0")
    else:
        print(format_element(x_of(d)))
    return 0


def _cmd_chartable(args) -> int:
    if args.n < 0 or args.c < 1:
        print("chartable needs n >= 0 and c >= 1", file=sys.stderr)
        return 2
    payload = character_table_csv(args.n, args.c)
    if args.verify:
        cap = args.cap if args.cap is not None else _env_int(ENV_DIAGRAM_CAP, DEFAULT_DIAGRAM_CAP)
        outcome = verify_character_table(args.n, args.c, cap)
        if not outcome:
            for failure in outcome.failures:
                print(failure, file=sys.stderr)
            return 1
    _write_bytes(args.out, payload)
    return 0


def _cmd_bratteli(args) -> int:
    graph = bratteli.build(args.c, args.n)
    payload = bratteli.emit(graph, args.format)
    _write_bytes(args.out, payload)
    return 0


def _cmd_verify(args) -> int:
    config = VerifyConfig(
        n_cap=args.n_cap if args.n_cap is not None else _env_int(ENV_N_CAP, 3),
        c_cap=args.c_cap if args.c_cap is not None else _env_int(ENV_C_CAP, 2),
        diagram_cap=args.cap if args.cap is not None else _env_int(ENV_DIAGRAM_CAP, DEFAULT_DIAGRAM_CAP),
        samples=args.samples,
        seed=args.seed,
    )
    if config.n_cap < 0 or config.c_cap < 1:
        print("verify needs n-cap >= 0 and c-cap >= 1", file=sys.stderr)
        return 2
    results = run_verification(config)
    report = {
        "config": {
            "n_cap": config.n_cap,
            "c_cap": config.c_cap,
            "diagram_cap": config.diagram_cap,
            "samples": config.samples,
            "seed": config.seed,
        },
        "ok": all(r.ok for r in results),
        "checks": [r.as_dict() for r in results],
    }
    if args.out is not None:
        with open(args.out, "w", encoding="utf-8") as handle:
            json.dump(report, handle, indent=2)
            handle.write("\n")
    if args.json:
        print(json.dumps(report, indent=2))
    else:
        for r in results:
            status = "PASS" if r.ok else "FAIL"
            print(f"{status} {r.name} (checked {r.checked})")
            for witness in r.witnesses[:5]:
                print(f"     witness: {witness}")
    return 0 if report["ok"] else 1


_COMMANDS = {
    "count": _cmd_count,
    "enumerate": _cmd_enumerate,
    "mul": _cmd_mul,
    "xbasis": _cmd_xbasis,
    "chartable": _cmd_chartable,
    "bratteli": _cmd_bratteli,
    "verify": _cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return _COMMANDS[args.command](args)
    except (ParseError, InvalidDiagramError, MismatchError, NonPlanarError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CapExceededError as exc:
        print(f"resource cap exceeded: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
