"""Command-line front end: counting sweeps, verification, exploration."""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from contextlib import contextmanager
from dataclasses import dataclass

from .core import DQ, P, P_D, Q, ClassSpec, avoiding
from .counting import count_by_enumeration, count_table
from .maps import FAMILIES, audit_family
from .verify import (
    BIAS_CLAIMS,
    InconsistentCounts,
    explore_problem1,
    explore_threshold,
    verify_bias,
    verify_cardinality,
    verify_lemma,
    verify_lemma_bound,
)

CACHE_ENV = "PARITYBIAS_CACHE_DIR"
ENUM_LIMIT = 60

COUNT_COLUMNS = ["n", "class", "odd_heavy", "even_heavy", "balanced", "total"]
VERDICT_COLUMNS = ["claim", "n", "holds", "lhs", "rhs", "margin"]
AUDIT_COLUMNS = ["family", "n", "domain", "image", "residual", "collisions", "violations"]
THRESHOLD_COLUMNS = ["claim", "k", "with_one", "horizon", "candidate", "tail_holds", "status"]

NAMED_CLASSES = {
    "P": P,
    "PD": P_D,
    "Q": Q,
    "DQ": DQ,
    "S2": avoiding(2),
    "S12": avoiding(1, 2),
}


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    ns: tuple
    method: str = "dp"
    fmt: str = "csv"
    cache_dir: str | None = None
    jobs: int = 1
    horizon: int = 300


def parse_class(text: str) -> ClassSpec:
    """A named class, ``avoid:1,4``, or a canonical key such as ``d:1;m:2;f:``."""
    if text in NAMED_CLASSES:
        return NAMED_CLASSES[text]
    try:
        if text.startswith("avoid:"):
            return avoiding(*(int(v) for v in text[6:].split(",") if v))
        if text.startswith("d:"):
            return ClassSpec.from_key(text)
    except ValueError as exc:
        raise UsageError(f"bad class {text!r}: {exc}") from None
    raise UsageError(f"unknown class {text!r}; use one of {', '.join(NAMED_CLASSES)}, avoid:<parts> or a key")


def parse_range(text: str) -> range:
    lo, sep, hi = text.partition("..")
    try:
        a, b = int(lo), int(hi)
    except ValueError:
        raise UsageError(f"range must look like a..b, got {text!r}") from None
    if not sep or a > b or a < 0:
        raise UsageError(f"bad range {text!r}")
    return range(a, b + 1)


@contextmanager
def _mapper(jobs: int):
    """Ordered map, in-process for one job, over a process pool otherwise."""
    if jobs <= 1:
        yield map
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        yield lambda fn, *its: pool.map(fn, *its, chunksize=1)


def emit(rows: list[dict], columns: list[str], fmt: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps(rows, indent=1) + "\n")
        return
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n", extrasaction="ignore")
    w.writeheader()
    for row in rows:
        w.writerow({k: str(v).lower() if isinstance(v, bool) else v for k, v in row.items()})
    out.write(buf.getvalue())


def _guard_enum(cfg: RunConfig, force: bool) -> None:
    if cfg.method in ("enum", "both") and cfg.ns and max(cfg.ns) > ENUM_LIMIT and not force:
        raise UsageError(
            f"enumeration up to n={max(cfg.ns)} is impractical; pass --force-enum to insist"
        )


def cmd_count(cfg: RunConfig, spec: ClassSpec, out) -> int:
    ns = list(cfg.ns)
    key = spec.key()
    with _mapper(cfg.jobs) as pmap:
        enum_rows = list(pmap(count_by_enumeration, ns, [spec] * len(ns))) if cfg.method != "dp" else None
    table = count_table(max(ns), spec, cfg.cache_dir) if cfg.method != "enum" else None
    rows = []
    for i, n in enumerate(ns):
        c = enum_rows[i] if table is None else table[n]
        if enum_rows is not None and table is not None and enum_rows[i] != c:
            raise InconsistentCounts(f"{key} n={n}: enumeration {enum_rows[i]} but dp {c}")
        rows.append({"n": n, "class": key, "odd_heavy": c.odd_heavy, "even_heavy": c.even_heavy,
                     "balanced": c.balanced, "total": c.total})
    emit(rows, COUNT_COLUMNS, cfg.fmt, out)
    return 0


def _lemma_record(args):
    claim, n = args
    return verify_lemma_bound(n) if claim == "LB" else verify_lemma(claim, n)


def _lemma_applies(claim: str, n: int) -> bool:
    if claim == "L1":
        return n % 2 == 0 and n >= 14
    if claim == "L2":
        return n % 2 == 1 and n >= 9
    return n >= 7


def _audit_row(args):
    fam, n = args
    r = audit_family(n, fam)
    return {
        "family": fam, "n": n, "domain": r.domain_size, "image": r.image_size,
        "residual": r.residual_count, "collisions": len(r.collisions),
        "violations": len(r.codomain_violations) + len(r.weight_violations) + len(r.unmapped),
        "_ok": r.verified,
    }


def _report_failures(records, err) -> None:
    for r in records:
        err.write(f"counterexample: {r.claim} n={r.n} lhs={r.lhs} rhs={r.rhs}\n")


def cmd_verify(cfg: RunConfig, what: str, target: str | None, out, err=sys.stderr) -> int:
    ns = list(cfg.ns)
    with _mapper(cfg.jobs) as pmap:
        if what == "theorem":
            if target not in BIAS_CLAIMS:
                raise UsageError(f"theorem must be one of {', '.join(BIAS_CLAIMS)}")
            records = verify_bias(target, ns, cfg.method, cfg.cache_dir, pmap)
        elif what == "lemma":
            if target not in ("L1", "L2", "LB"):
                raise UsageError("lemma must be L1, L2 or LB")
            todo = [(target, n) for n in ns if _lemma_applies(target, n)]
            records = list(pmap(_lemma_record, todo))
        elif what == "formulas":
            records = [r for batch in pmap(verify_cardinality, [n for n in ns if n >= 1]) for r in batch]
            records.sort(key=lambda r: (r.n, r.claim))
        elif what == "maps":
            fams = FAMILIES if target in (None, "all") else (target,)
            if any(f not in FAMILIES for f in fams):
                raise UsageError(f"map family must be one of {', '.join(FAMILIES)}")
            rows = list(pmap(_audit_row, [(f, n) for n in ns for f in fams]))
            bad = [r for r in rows if not r.pop("_ok")]
            emit(rows, AUDIT_COLUMNS, cfg.fmt, out)
            for r in bad:
                err.write(f"audit failure: {r['family']} n={r['n']} collisions={r['collisions']} "
                          f"violations={r['violations']}\n")
            return 1 if bad else 0
        else:
            raise UsageError(f"unknown verify target {what!r}")

    shown = [r for r in records if not r.skipped]
    emit([r.row() for r in shown], VERDICT_COLUMNS, cfg.fmt, out)
    failed = [r for r in shown if r.in_scope and not r.holds]
    _report_failures(failed, err)
    return 1 if failed else 0


def cmd_explore(cfg: RunConfig, which: str, out, k: int | None = None, with_one: bool = False,
                trail: bool = False) -> int:
    with _mapper(cfg.jobs) as pmap:
        if which == "problem1":
            records = explore_problem1(cfg.ns, cfg.method, cfg.cache_dir, pmap)
            emit([r.row() for r in records], VERDICT_COLUMNS, cfg.fmt, out)
            return 0
    if which != "problem2":
        raise UsageError(f"unknown problem {which!r}")
    if k is None:
        raise UsageError("problem2 needs --k")
    try:
        res = explore_threshold(k, with_one, cfg.horizon, cfg.cache_dir)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if trail:
        emit([r.row() for r in res.trail], VERDICT_COLUMNS, cfg.fmt, out)
    else:
        claim = res.trail[0].claim if res.trail else f"PROB2({k})"
        emit([{"claim": claim, "k": k, "with_one": with_one, "horizon": res.horizon,
               "candidate": res.candidate, "tail_holds": res.tail_holds, "status": res.label}],
             THRESHOLD_COLUMNS, cfg.fmt, out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--cache-dir", default=os.environ.get(CACHE_ENV),
                        help=f"count cache directory (default: ${CACHE_ENV})")
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--method", choices=("enum", "dp", "both"), default="dp")
    common.add_argument("--force-enum", action="store_true",
                        help=f"allow enumeration beyond n={ENUM_LIMIT}")
    common.add_argument("--n-max", type=int)
    common.add_argument("--n-range")

    parser = argparse.ArgumentParser(prog="paritybias", description=__doc__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("count", parents=[common], help="bias counts per n")
    c.add_argument("--class", dest="cls", default="P")

    v = sub.add_parser("verify", parents=[common], help="check theorems, lemmas, maps, formulas")
    v.add_argument("what", choices=("theorem", "lemma", "maps", "formulas"))
    v.add_argument("target", nargs="?")
    v.add_argument("--m-range", help="m values for lemma LB")

    e = sub.add_parser("explore", parents=[common], help="open problems, horizon-limited")
    e.add_argument("which", choices=("problem1", "problem2"))
    e.add_argument("--m-range", default="1..40")
    e.add_argument("--k", type=int)
    e.add_argument("--with-one", action="store_true")
    e.add_argument("--horizon", type=int, default=300)
    e.add_argument("--trail", action="store_true", help="emit every n instead of the summary")
    return parser


def _config(args) -> RunConfig:
    if args.jobs < 1:
        raise UsageError("--jobs must be at least 1")
    if args.n_max is not None and args.n_range:
        raise UsageError("give --n-max or --n-range, not both")
    if getattr(args, "m_range", None) and (args.command == "explore" or args.target == "LB"):
        ns = parse_range(args.m_range)
    elif args.n_range:
        ns = parse_range(args.n_range)
    elif args.n_max is not None:
        if args.n_max < 0:
            raise UsageError("--n-max must be non-negative")
        ns = range(0, args.n_max + 1)
    else:
        ns = range(0, 121)
    cfg = RunConfig(tuple(ns), args.method, args.format, args.cache_dir, args.jobs,
                    getattr(args, "horizon", 300))
    if args.command == "explore":
        if args.which == "problem1":
            scale = [2 * m + 1 for m in cfg.ns]
            _guard_enum(RunConfig(tuple(scale), cfg.method), args.force_enum)
    else:
        _guard_enum(cfg, args.force_enum)
    return cfg


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        cfg = _config(args)
        if args.command == "count":
            return cmd_count(cfg, parse_class(args.cls), out)
        if args.command == "verify":
            return cmd_verify(cfg, args.what, args.target, out, err)
        return cmd_explore(cfg, args.which, out, args.k, args.with_one, args.trail)
    except UsageError as exc:
        err.write(f"paritybias: error: {exc}\n")
        return 2
    except InconsistentCounts as exc:
        err.write(f"paritybias: internal inconsistency: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
