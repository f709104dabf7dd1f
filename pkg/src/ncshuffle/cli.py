"""Command-line front end: JSON in, JSON or plain tables out.

    ncshuffle enumerate --family nc --n 4 --count-only
    ncshuffle transform moments.json --to t-boolean --t 1/2
    ncshuffle transform boolean.json --to moments
    ncshuffle ctransform pair.json --to cmonotone
    ncshuffle convolve a.json b.json --kind free
    ncshuffle cconvolve p1.json p2.json --kind cmonotone
    ncshuffle coefficients --n 5 --table omega
    ncshuffle verify --suite shuffle-axioms --degree 5 --seed 7

Input path "-" reads stdin. Errors print {"error": ..., "message": ...} to
stderr and exit with status 1.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from . import combinatorics as comb
from . import convolutions as cv
from . import cumulants as cu
from . import expansions as ex
from . import polyfit, reference, serialize, suites
from .shuffle import Functional, KindError, MismatchError, TruncationError, lift

DEFAULT_MAX_DEGREE = 8
COEFFICIENT_MAX_N = 8

# CLI spelling -> internal family name
FAMILY_NAMES = {
    "free": "free", "boolean": "boolean", "monotone": "monotone",
    "t-boolean": "tboolean", "t-monotone": "tmonotone",
    "c-free": "cfree", "cfree": "cfree", "c-monotone": "cmonotone", "cmonotone": "cmonotone",
}
CLI_NAMES = {"tboolean": "t-boolean", "tmonotone": "t-monotone"}


class CliError(Exception):
    def __init__(self, kind: str, message: str):
        super().__init__(message)
        self.kind = kind
        self.message = message


@dataclass
class CommandConfig:
    command: str
    inputs: list[str] = field(default_factory=list)
    output: str | None = None
    truncation: int | None = None
    seed: int = 0
    t: Fraction | None = None
    s: Fraction | None = None
    suite: str | None = None

    def __post_init__(self):
        if self.truncation is not None and self.truncation < 1:
            raise CliError("schema", "truncation must be >= 1")


def max_degree() -> int:
    raw = os.environ.get("NCSHUFFLE_MAX_DEGREE", str(DEFAULT_MAX_DEGREE))
    try:
        cap = int(raw)
    except ValueError:
        raise CliError("config", f"NCSHUFFLE_MAX_DEGREE must be an integer, got {raw!r}") from None
    if cap < 1:
        raise CliError("config", "NCSHUFFLE_MAX_DEGREE must be >= 1")
    return cap


def rational_arg(text: str) -> Fraction:
    try:
        return serialize.parse_rational(text)
    except serialize.SchemaError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


# -- input handling --------------------------------------------------------------------------

def _read(path: str):
    try:
        text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    except OSError as e:
        raise CliError("io", f"cannot read {path}: {e.strerror}") from None
    return serialize.loads(text)


def truncate(f: Functional, N: int) -> Functional:
    """Restriction of f to degree <= N (never extends)."""
    if N > f.truncation:
        raise CliError("truncation", f"cannot raise truncation from {f.truncation} to {N}")
    if N == f.truncation:
        return f
    if f.kind == "general":
        vals = {x: v for x, v in f.full_table().items() if sum(map(len, x)) <= N}
        return Functional(f.alphabet, N, "general", vals)
    words = {w: v for w, v in f.words.items() if len(w) <= N}
    if f.kind == "infchar":
        return Functional(f.alphabet, N, "infchar", words)
    return lift("character", {_fmt(w, f.alphabet): v for w, v in words.items()}, f.alphabet, N)


def _fmt(w, alphabet) -> str:
    return "".join(alphabet[i] for i in w)


def _fit(obj, cfg: CommandConfig):
    """Apply the truncation override and the degree cap."""
    if isinstance(obj, cu.PairState):
        return cu.PairState(_fit(obj.phi, cfg), _fit(obj.psi, cfg))
    if isinstance(obj, cu.CumulantFamily):
        return cu.CumulantFamily(obj.kind, _fit(obj.values, cfg), obj.t)
    if cfg.truncation is not None:
        obj = truncate(obj, cfg.truncation)
    cap = max_degree()
    if obj.truncation > cap:
        raise CliError("truncation", f"truncation {obj.truncation} exceeds NCSHUFFLE_MAX_DEGREE={cap}; "
                                     "pass --truncation to cut it down")
    return obj


def _load(path: str, cfg: CommandConfig, want: str):
    obj = _fit(_read(path), cfg)
    ok = {"character": isinstance(obj, Functional) and obj.kind == "character",
          "family": isinstance(obj, cu.CumulantFamily),
          "pair": isinstance(obj, cu.PairState)}[want]
    if not ok:
        raise CliError("schema", f"{path}: expected a {want}, got {type(obj).__name__}")
    return obj


def _family_json(fam: cu.CumulantFamily) -> dict:
    return serialize.family_to_json(fam)


def _emit(payload, cfg: CommandConfig, rows: bool = False):
    if isinstance(payload, str):
        text = payload
    elif rows:
        text = "[\n" + ",\n".join("  " + json.dumps(r) for r in payload) + "\n]"
    else:
        text = json.dumps(payload, indent=2)
    if cfg.output:
        with open(cfg.output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


# -- commands ----------------------------------------------------------------------------------

def cmd_enumerate(args, cfg):
    try:
        parts = comb.enumerate_partitions(args.n, args.family)
    except comb.LimitError as e:
        raise CliError("limit", str(e)) from None
    if args.count_only:
        _emit(str(len(parts)), cfg)
    else:
        _emit([p.to_json() for p in parts], cfg, rows=True)


def _need_t(kind, t):
    if kind in ("tboolean", "tmonotone") and t is None:
        raise CliError("schema", f"--to {CLI_NAMES[kind]} needs --t")


def cmd_transform(args, cfg):
    src = args.source
    target = "moments" if args.to == "moments" else FAMILY_NAMES[args.to]
    if src == "moments":
        phi = _load(args.input, cfg, "character")
    else:
        fam = _load(args.input, cfg, "family")
        if src != "auto" and FAMILY_NAMES[src] != fam.kind:
            raise CliError("schema", f"input holds {CLI_NAMES.get(fam.kind, fam.kind)} cumulants, not {src}")
        phi = cu.moments_from(fam)
    if target == "moments":
        _emit(serialize.functional_to_json(phi), cfg)
        return
    if target in ("cfree", "cmonotone"):
        raise CliError("schema", "c-free and c-monotone cumulants need a pair state; use ctransform")
    _need_t(target, cfg.t)
    t = cfg.t if target in ("tboolean", "tmonotone") else None
    _emit(_family_json(cu.transform(phi, target, t)), cfg)


def cmd_ctransform(args, cfg):
    p = _load(args.input, cfg, "pair")
    _emit(_family_json(cu.pair_transform(p, FAMILY_NAMES[args.to])), cfg)


def cmd_convolve(args, cfg):
    a = _load(args.inputs[0], cfg, "character")
    if args.kind == "belinschi-nica":
        if len(args.inputs) != 1 or cfg.t is None:
            raise CliError("schema", "belinschi-nica takes one input and --t")
        if cfg.t < 0:
            raise CliError("schema", "belinschi-nica needs t >= 0")
        out = cv.belinschi_nica(a, cfg.t)
    else:
        if len(args.inputs) != 2:
            raise CliError("schema", f"{args.kind} convolution takes two inputs")
        b = _load(args.inputs[1], cfg, "character")
        if args.kind == "orthogonal":
            out = cv.orthogonal(a, b)
        elif args.kind == "subordination":
            out = cv.subordination(a, b)
        else:
            out = cv.additive_convolve(a, b, args.kind)
    _emit(serialize.functional_to_json(out), cfg)


def cmd_cconvolve(args, cfg):
    p1 = _load(args.inputs[0], cfg, "pair")
    kind = FAMILY_NAMES[args.kind]
    if args.power is not None:
        if len(args.inputs) != 1 or kind != "cmonotone":
            raise CliError("schema", "--power takes a single pair and --kind c-monotone")
        if args.power < 1:
            raise CliError("schema", "--power must be >= 1")
        out = cv.cmonotone_power(p1, args.power)
    else:
        if len(args.inputs) != 2:
            raise CliError("schema", "pair convolution takes two inputs")
        out = cv.pair_convolve(p1, _load(args.inputs[1], cfg, "pair"), kind)
    _emit(serialize.pair_to_json(out), cfg)


def _rows(n: int, table: str) -> list[dict]:
    rows = []
    family = "nc_irr" if table == "omega" else "nc"
    for p in comb.enumerate_partitions(n, family):
        row = {"partition": str(p), "blocks": [list(b) for b in p.blocks]}
        if table in ("omega", "all") and p.is_irreducible():
            row["omega"] = serialize.rational_str(comb.omega(p))
        if table in ("tree-factorial", "all"):
            row["tree_factorial"] = comb.partition_tree_factorial(p)
        if table in ("monotone-count", "all"):
            row["monotone_count"] = comb.monotone_count(p)
        rows.append(row)
    return rows


def _poly_json(p, names):
    return polyfit.format_poly(p, names)


def cmd_coefficients(args, cfg):
    if args.table == "ts-expansion":
        report = ex.ts_report(reference.TS_TABLE, args.order)
        report.pop("expansion")
        _emit(report, cfg)
        return
    if args.table == "cmonotone":
        out = {}
        for n in range(1, args.order + 1):
            names = ex.cmonotone_variables(n)
            out[n] = {"boolean": _poly_json(ex.cmonotone_expansion(n, "boolean"), names),
                      "moment": _poly_json(ex.cmonotone_expansion(n, "moment"), names)}
        _emit(out, cfg)
        return
    if args.n is None:
        raise CliError("schema", f"--table {args.table} needs --n")
    if not 1 <= args.n <= COEFFICIENT_MAX_N:
        raise CliError("limit", f"coefficient tables are limited to 1 <= n <= {COEFFICIENT_MAX_N}")
    _emit(_rows(args.n, args.table), cfg, rows=True)


def cmd_verify(args, cfg):
    try:
        checks = suites.run_suite(cfg.suite, seed=cfg.seed, degree=cfg.truncation, cases=args.cases,
                                  letters=args.letters)
    except KeyError as e:
        raise CliError("unknown-suite", e.args[0]) from None
    lines = [c.line() for c in checks]
    failed = sum(not c.passed for c in checks)
    lines.append(f"{len(checks) - failed}/{len(checks)} identities passed")
    _emit("\n".join(lines), cfg)
    return 1 if failed else 0


# -- parser ------------------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ncshuffle",
                                     description="Exact moment/cumulant/convolution computations.")
    parser.add_argument("-o", "--output", help="write the result here instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list partitions of [n] or count them")
    p.add_argument("--family", choices=comb.FAMILIES, default="nc")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    families = ["free", "boolean", "monotone", "t-boolean", "t-monotone"]
    p = sub.add_parser("transform", help="moments <-> cumulant families")
    p.add_argument("input")
    p.add_argument("--from", dest="source", choices=["auto", "moments"] + families, default="moments",
                   help="what the input holds ('auto' accepts any cumulant family file)")
    p.add_argument("--to", choices=["moments"] + families, required=True)
    p.add_argument("--t", type=rational_arg)
    p.add_argument("--truncation", type=int)
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("ctransform", help="c-free or c-monotone cumulants of a pair state")
    p.add_argument("input")
    p.add_argument("--to", choices=["c-free", "c-monotone", "cfree", "cmonotone"], required=True)
    p.add_argument("--truncation", type=int)
    p.set_defaults(func=cmd_ctransform)

    p = sub.add_parser("convolve", help="convolution of characters")
    p.add_argument("inputs", nargs="+")
    p.add_argument("--kind", required=True,
                   choices=["free", "boolean", "monotone", "orthogonal", "subordination", "belinschi-nica"])
    p.add_argument("--t", type=rational_arg)
    p.add_argument("--truncation", type=int)
    p.set_defaults(func=cmd_convolve)

    p = sub.add_parser("cconvolve", help="convolution of pair states")
    p.add_argument("inputs", nargs="+")
    p.add_argument("--kind", required=True, choices=["c-free", "c-monotone", "cfree", "cmonotone"])
    p.add_argument("--power", type=int, help="M-fold c-monotone power of a single pair")
    p.add_argument("--truncation", type=int)
    p.set_defaults(func=cmd_cconvolve)

    p = sub.add_parser("coefficients", help="partition coefficient tables and expansion reports")
    p.add_argument("--table", default="all",
                   choices=["all", "omega", "tree-factorial", "monotone-count", "cmonotone", "ts-expansion"])
    p.add_argument("--n", type=int)
    p.add_argument("--order", type=int, default=4, choices=[1, 2, 3, 4])
    p.set_defaults(func=cmd_coefficients)

    p = sub.add_parser("verify", help="run a named identity suite")
    p.add_argument("--suite", required=True)
    p.add_argument("--degree", type=int, dest="truncation")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cases", type=int)
    p.add_argument("--letters", type=int, default=1)
    p.set_defaults(func=cmd_verify)
    return parser


def _error(kind: str, message: str) -> int:
    print(json.dumps({"error": kind, "message": message}), file=sys.stderr)
    return 1


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse already printed usage; normalise its exit status
        return 0 if e.code == 0 else 1
    try:
        cfg = CommandConfig(args.command, getattr(args, "inputs", None) or [getattr(args, "input", None)],
                            args.output, getattr(args, "truncation", None), getattr(args, "seed", 0),
                            getattr(args, "t", None), suite=getattr(args, "suite", None))
        if args.command == "verify" and cfg.truncation is not None and cfg.truncation > max_degree():
            raise CliError("truncation", f"degree {cfg.truncation} exceeds NCSHUFFLE_MAX_DEGREE={max_degree()}")
        return args.func(args, cfg) or 0
    except CliError as e:
        return _error(e.kind, e.message)
    except serialize.SchemaError as e:
        return _error("schema", str(e))
    except (MismatchError, TruncationError) as e:
        return _error("mismatch", str(e))
    except (KindError, comb.DomainError, ValueError) as e:
        return _error("invalid", str(e))


if __name__ == "__main__":
    sys.exit(main())
