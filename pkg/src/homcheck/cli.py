"""Command-line interface: check, report, twist, textend, anfamily, triple, example.

Exit codes: 0 = every requested check passed, 1 = at least one identity failed
(the witness is part of the printed document), 2 = usage or input error.
All output is deterministic for a fixed --seed (environment fallback
HOMCHECK_SEED, default 0).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .algebra import HomAlgebra, jmp_pair
from .constructions import (
    an_family,
    beta_from_automorphism,
    t_star_extension,
    twisted_pseudo_euclidean,
    yau_twist,
)
from .examples import example
from .io import (
    AlgebraFileError,
    LoadedAlgebra,
    build_report,
    dumps,
    load,
    report_to_json,
    run_suite,
    save,
)
from .linalg import Matrix
from .triples import hljp_from_homjmp

SUITES = ["all", "flexible", "alternative", "jordan", "malcev", "leibniz", "jmp",
          "admissible", "rl-condition", "power", "hlts", "hljp", "pseudo-euclidean"]


class UsageError(Exception):
    pass


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="homcheck",
        description="Exact verification workbench for Hom-algebra identities.")
    parser.add_argument("--seed", type=int, default=None,
                        help="seed for sampled diagnostics (env HOMCHECK_SEED, default 0)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="run one identity suite against an algebra file")
    p.add_argument("file")
    p.add_argument("--suite", default="all", choices=SUITES)
    p.add_argument("--max-power", type=int, default=6,
                   help="N for the sampled power identity (default 6)")

    p = sub.add_parser("report", help="full classification document")
    p.add_argument("file")
    p.add_argument("--max-power", type=int, default=6)

    p = sub.add_parser("twist", help="compose the products with a self-map")
    p.add_argument("file")
    p.add_argument("--map", required=True, dest="mapfile",
                   help="JSON file with a dense matrix of rational strings")
    p.add_argument("--weak", action="store_true",
                   help="require only a weak morphism (default: full morphism)")
    p.add_argument("-o", "--output")

    p = sub.add_parser("textend", help="T*-extension of a JMP structure")
    p.add_argument("file")
    p.add_argument("--auto", dest="autofile",
                   help="automorphism matrix file; emits the twisted structure")
    p.add_argument("-o", "--output")

    p = sub.add_parser("anfamily", help="compose products with a twist power")
    p.add_argument("file")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("-o", "--output")

    p = sub.add_parser("triple", help="derived triple system of a (JMP) algebra")
    p.add_argument("file")
    p.add_argument("-o", "--output")

    p = sub.add_parser("example", help="emit a named worked example")
    p.add_argument("name")
    p.add_argument("--param", action="append", default=[], metavar="K=V")
    p.add_argument("-o", "--output")
    return parser


def _read_matrix(path: str) -> Matrix:
    with open(path, "r", encoding="utf-8") as fp:
        doc = json.load(fp)
    rows = doc.get("matrix") if isinstance(doc, dict) else doc
    if not isinstance(rows, list):
        raise UsageError(f"{path}: expected a JSON matrix (list of rows)")
    from .linalg import parse_rat

    try:
        return Matrix([[parse_rat(x) if isinstance(x, str) else x for x in row]
                       for row in rows])
    except (ValueError, TypeError) as exc:
        raise UsageError(f"{path}: {exc}") from None


def _emit(loaded: LoadedAlgebra, output: str | None) -> None:
    if output:
        save(loaded, output)
    else:
        sys.stdout.write(dumps(loaded))


def _cmd_check(args, seed: int) -> int:
    loaded = load(args.file)
    reports = run_suite(loaded, args.suite, seed=seed, max_power=args.max_power)
    doc = {
        "file": args.file,
        "suite": args.suite,
        "seed": seed,
        "checks": [rep.to_doc() for rep in reports],
    }
    sys.stdout.write(report_to_json(doc))
    return 0 if all(rep.passed for rep in reports) else 1


def _cmd_report(args, seed: int) -> int:
    loaded = load(args.file)
    doc = build_report(loaded, seed=seed, max_power=args.max_power)
    sys.stdout.write(report_to_json(doc))
    return 0 if all(v == "pass" for v in doc["classification"].values()) else 1


def _cmd_twist(args, seed: int) -> int:
    loaded = load(args.file)
    beta = _read_matrix(args.mapfile)
    require = "weak" if args.weak else "full"
    twisted = yau_twist(loaded.algebra, beta, require=require)
    meta = dict(loaded.meta)
    meta["constructed-by"] = "twist"
    meta["require"] = require
    _emit(LoadedAlgebra(kind=loaded.kind, algebra=twisted, form=None,
                        name=f"{loaded.name}-twisted" if loaded.name else "twisted",
                        meta=meta), args.output)
    return 0


def _cmd_textend(args, seed: int) -> int:
    loaded = load(args.file)
    if isinstance(loaded.algebra, HomAlgebra):
        base = jmp_pair(loaded.algebra)
    else:
        base = loaded.algebra
    ext = t_star_extension(base)
    meta = {"constructed-by": "textension", "base": loaded.name}
    if args.autofile:
        auto = _read_matrix(args.autofile)
        bmap = beta_from_automorphism(ext, auto)
        meta["beta-automorphism-of-extension"] = bmap.automorphism_of_extension
        meta["image-in-centers"] = bmap.image_in_centers
        if not bmap.automorphism_of_extension:
            raise UsageError("the supplied map does not extend to an automorphism of P")
        twisted, form = twisted_pseudo_euclidean(ext.result, ext.form, bmap.matrix)
        meta["constructed-by"] = "textension+twist"
        _emit(LoadedAlgebra(kind="jmp", algebra=twisted, form=form,
                            name=f"{loaded.name}-textension-twisted", meta=meta),
              args.output)
        return 0
    _emit(LoadedAlgebra(kind="jmp", algebra=ext.result, form=ext.form,
                        name=f"{loaded.name}-textension", meta=meta), args.output)
    return 0


def _cmd_anfamily(args, seed: int) -> int:
    loaded = load(args.file)
    if loaded.kind != "jmp" or loaded.form is None:
        raise UsageError("anfamily needs a kind=jmp file with a form")
    twisted, form = an_family(loaded.algebra, loaded.form, args.n)
    meta = dict(loaded.meta)
    meta["constructed-by"] = "an-family"
    meta["n"] = args.n
    _emit(LoadedAlgebra(kind="jmp", algebra=twisted, form=form,
                        name=f"{loaded.name}-a{args.n}", meta=meta), args.output)
    return 0


def _cmd_triple(args, seed: int) -> int:
    loaded = load(args.file)
    if isinstance(loaded.algebra, HomAlgebra):
        source = jmp_pair(loaded.algebra)
    elif loaded.kind == "jmp":
        source = loaded.algebra
    else:
        raise UsageError("triple needs a kind=algebra or kind=jmp file")
    system = hljp_from_homjmp(source)
    meta = {"constructed-by": "triple", "base": loaded.name}
    _emit(LoadedAlgebra(kind="triple", algebra=system, form=loaded.form,
                        name=f"{loaded.name}-triple", meta=meta), args.output)
    return 0


def _cmd_example(args, seed: int) -> int:
    params = {}
    for item in args.param:
        key, eq, value = item.partition("=")
        if not eq:
            raise UsageError(f"--param needs K=V, got {item!r}")
        params[key] = value
    algebra, form, meta = example(args.name, params)
    _emit(LoadedAlgebra(kind="jmp" if not isinstance(algebra, HomAlgebra) else "algebra",
                        algebra=algebra, form=form, name=args.name, meta=meta),
          args.output)
    return 0


_COMMANDS = {
    "check": _cmd_check,
    "report": _cmd_report,
    "twist": _cmd_twist,
    "textend": _cmd_textend,
    "anfamily": _cmd_anfamily,
    "triple": _cmd_triple,
    "example": _cmd_example,
}


def run_cli(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    if args.seed is not None:
        seed = args.seed
    else:
        try:
            seed = int(os.environ.get("HOMCHECK_SEED", "0"))
        except ValueError:
            print("HOMCHECK_SEED must be an integer", file=sys.stderr)
            return 2
    try:
        return _COMMANDS[args.command](args, seed)
    except (UsageError, AlgebraFileError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
