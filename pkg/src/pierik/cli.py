"""Command-line front end.

Exit codes: 0 success, 1 property violation in ``check``, 2 invalid input,
3 engines disagree under ``--engine all``.  Errors are reported on stderr as
a single ``error: <code>: <message>`` line.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass
from pathlib import Path

from .checks import SUITES, run_suite
from .ring import ENGINES, KVector, OutOfRangeP, coefficient, engines_for, pieri_row
from .shapes import (
    Partition,
    ShapeError,
    Space,
    contains,
    format_partition,
    make_skew,
    parse_partition,
    parse_space,
    partition_key,
)
from .tableaux import KLG, KOG, enumerate_tableaux

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_DISAGREE = 0, 1, 2, 3
_SAFE_INT = 2**53


class UsageError(Exception):
    code = "usage"


# -- records and cache ------------------------------------------------------------


@dataclass(frozen=True)
class CoefficientRecord:
    space: str
    lam: Partition
    p: int
    nu: Partition
    coefficient: int
    engine: str
    elapsed_ms: float | None = None

    @property
    def key(self):
        return (self.space, self.lam, self.p, self.nu, self.engine)

    def to_json(self, timing: bool = False) -> dict:
        value = self.coefficient
        out = {
            "space": self.space,
            "lambda": list(self.lam),
            "p": self.p,
            "nu": list(self.nu),
            "coefficient": str(value) if abs(value) >= _SAFE_INT else value,
            "engine": self.engine,
        }
        if timing and self.elapsed_ms is not None:
            out["elapsed_ms"] = round(self.elapsed_ms, 3)
        return out

    def dumps(self, timing: bool = False) -> str:
        return json.dumps(self.to_json(timing), sort_keys=True)

    @classmethod
    def from_json(cls, data: dict | str) -> "CoefficientRecord":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(
            space=data["space"],
            lam=tuple(data["lambda"]),
            p=int(data["p"]),
            nu=tuple(data["nu"]),
            coefficient=int(data["coefficient"]),
            engine=data["engine"],
            elapsed_ms=data.get("elapsed_ms"),
        )


class CoefficientCache:
    """JSON Lines store of coefficient records, keyed by (space, lambda, p, nu, engine)."""

    def __init__(self, directory: str | os.PathLike):
        self.path = Path(directory) / "coefficients.jsonl"
        self.records: dict[tuple, CoefficientRecord] = {}
        if self.path.exists():
            for line in self.path.read_text().splitlines():
                try:
                    rec = CoefficientRecord.from_json(line)
                except (ValueError, KeyError, TypeError):
                    continue
                self.records[rec.key] = rec

    def get(self, space: Space, lam, p, nu, engine) -> CoefficientRecord | None:
        rec = self.records.get((str(space), lam, p, nu, engine))
        if rec is None:
            return None
        # stale or hand-edited files are not trusted blindly
        if not (space.fits(rec.lam) and space.fits(rec.nu) and contains(rec.nu, rec.lam)):
            return None
        return rec

    def put(self, rec: CoefficientRecord) -> None:
        if rec.key in self.records:
            return
        self.records[rec.key] = rec
        self.path.parent.mkdir(parents=True, exist_ok=True)
        with self.path.open("a") as fh:
            fh.write(rec.dumps() + "\n")


def compute_record(space, lam, p, nu, engine, cache=None) -> CoefficientRecord:
    if cache is not None:
        hit = cache.get(space, lam, p, nu, engine)
        if hit is not None:
            return hit
    start = time.perf_counter()
    value = coefficient(lam, p, nu, space, engine)
    rec = CoefficientRecord(
        str(space), lam, p, nu, value, engine, (time.perf_counter() - start) * 1000
    )
    if cache is not None:
        cache.put(rec)
    return rec


# -- argument handling ----------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _space(args) -> Space:
    return parse_space(args.space)


def _partition(text: str, space: Space, what: str) -> Partition:
    part = parse_partition(text, strict=space.shifted)
    if not space.fits(part):
        raise ShapeError(f"{what}={format_partition(part)} does not fit in {space}")
    return part


def _check_p(p: int, space: Space) -> int:
    if not 0 <= p <= space.max_p:
        raise OutOfRangeP(f"p must lie in [0, {space.max_p}] for {space}, got {p}")
    return p


def _open_cache(args):
    directory = args.cache or os.environ.get("PIERIK_CACHE")
    return CoefficientCache(directory) if directory else None


def _engine_list(engine: str, space: Space) -> list[str]:
    applicable = engines_for(space)
    if engine == "all":
        return list(applicable)
    if engine not in applicable:
        raise UsageError(f"engine {engine!r} does not apply to {space}")
    return [engine]


# -- commands -------------------------------------------------------------------


def cmd_coeff(args, out) -> int:
    space = _space(args)
    lam = _partition(args.lam, space, "lambda")
    nu = _partition(args.nu, space, "nu")
    p = _check_p(args.p, space)
    make_skew(lam, nu, space)
    cache = _open_cache(args)
    records = [compute_record(space, lam, p, nu, e, cache) for e in _engine_list(args.engine, space)]
    for rec in records:
        if args.format == "json":
            print(rec.dumps(args.timing), file=out)
        elif len(records) > 1:
            print(f"{rec.engine} {rec.coefficient}", file=out)
        else:
            print(rec.coefficient, file=out)
    if len({rec.coefficient for rec in records}) > 1:
        print("error: disagreement: engines returned different values", file=sys.stderr)
        return EXIT_DISAGREE
    return EXIT_OK


def cmd_expand(args, out) -> int:
    space = _space(args)
    lam = _partition(args.lam, space, "lambda")
    p = _check_p(args.p, space)
    engine = _engine_list(args.engine, space)[0]
    vec = pieri_row(lam, p, space, engine)
    if args.format == "json":
        print(vec.dumps(), file=out)
    else:
        for nu, c in vec:
            print(f"{format_partition(nu)} {c}", file=out)
    return EXIT_OK


def cmd_table(args, out) -> int:
    space = _space(args)
    p = _check_p(args.p, space)
    engine = _engine_list(args.engine, space)[0]
    cache = _open_cache(args)
    parts = space.partitions()
    for lam in parts:
        for nu in parts:
            if contains(nu, lam):
                rec = compute_record(space, lam, p, nu, engine, cache)
                print(rec.dumps(args.timing), file=out)
    return EXIT_OK


def cmd_tableaux(args, out) -> int:
    space = _space(args)
    if not space.shifted:
        raise UsageError("tableaux are defined for og:N and lg:N spaces only")
    lam = _partition(args.lam, space, "lambda")
    nu = _partition(args.nu, space, "nu")
    p = _check_p(args.p, space)
    theta = make_skew(lam, nu, space)
    tabs = enumerate_tableaux(theta, p, KOG if space.kind == "og" else KLG)
    if args.format == "json":
        payload = {"count": len(tabs)}
        if args.list:
            payload["tableaux"] = [t.render() for t in tabs]
        print(json.dumps(payload, sort_keys=True), file=out)
        return EXIT_OK
    print(f"count {len(tabs)}", file=out)
    if args.list:
        for tab in tabs:
            print(file=out)
            print(tab.render(), file=out)
    return EXIT_OK


def cmd_check(args, out) -> int:
    space = _space(args)
    if args.max_p is not None and args.max_p < 0:
        raise UsageError("--max-p must be non-negative")
    names = SUITES if args.suite == "all" else (args.suite,)
    ok = True
    for name in names:
        res = run_suite(name, space, args.max_p)
        print(res.summary(), file=out)
        for note in res.notes:
            print(f"  note: {note}", file=out)
        ok = ok and res.passed
    return EXIT_OK if ok else EXIT_VIOLATION


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="pierik", description="K-theoretic Pieri coefficients for cominuscule Grassmannians.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, lam=True, nu=False, p=True):
        sp.add_argument("--space", required=True, help="a:MxK, og:N or lg:N")
        if lam:
            sp.add_argument("--lambda", dest="lam", required=True, help='partition "a,b,c" or "-"')
        if nu:
            sp.add_argument("--nu", required=True, help='partition "a,b,c" or "-"')
        if p:
            sp.add_argument("--p", type=int, required=True)

    sp = sub.add_parser("coeff", help="one Pieri coefficient")
    common(sp, nu=True)
    sp.add_argument("--engine", default="recursive", choices=ENGINES + ("all",))
    sp.add_argument("--format", default="text", choices=("text", "json"))
    sp.add_argument("--timing", action="store_true", help="add elapsed_ms to JSON records")
    sp.add_argument("--cache", help="cache directory (default: $PIERIK_CACHE)")
    sp.set_defaults(func=cmd_coeff)

    sp = sub.add_parser("expand", help="expand O^lambda * O^p")
    common(sp)
    sp.add_argument("--engine", default="recursive", choices=ENGINES)
    sp.add_argument("--format", default="json", choices=("text", "json"))
    sp.set_defaults(func=cmd_expand)

    sp = sub.add_parser("table", help="all coefficients for one p, as JSON Lines")
    common(sp, lam=False)
    sp.add_argument("--engine", default="recursive", choices=ENGINES)
    sp.add_argument("--timing", action="store_true")
    sp.add_argument("--cache")
    sp.set_defaults(func=cmd_table)

    sp = sub.add_parser("tableaux", help="count or list KOG/KLG tableaux")
    common(sp, nu=True)
    sp.add_argument("--list", action="store_true")
    sp.add_argument("--format", default="text", choices=("text", "json"))
    sp.set_defaults(func=cmd_tableaux)

    sp = sub.add_parser("check", help="run exhaustive property suites")
    common(sp, lam=False, p=False)
    sp.add_argument("--max-p", type=int, default=None)
    sp.add_argument("--suite", default="all", choices=SUITES + ("all",))
    sp.set_defaults(func=cmd_check)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out)
    except (UsageError, ShapeError) as exc:
        msg = " ".join(str(exc).split())
        print(f"error: {exc.code}: {msg}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
