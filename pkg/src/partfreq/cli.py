"""Command-line interface.

    partfreq orbit-table --n 4..39:5+4 --m 5
    partfreq check congruence --A 5 --B 4 --C 5 --m 5 --nmax 39
    partfreq glaisher --partition 3,3,3 --m 2
    partfreq orbit --partition 20,5,5,4,2,2,1,1,1,1,1 --m 2

Every command prints TSV (default) or JSON (``--format json``).  Exit status
is 0 when every verdict passes, 1 when one fails and 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
import time

from . import ady, identities
from .partitions import Partition
from .pfm import glaisher, orbit, orbit_table, rotate_partition

_RANGE = re.compile(r"^(\d+)\.\.(\d+)(?::(\d+)\+(\d+))?$")

CHECKS = ("pmm", "orbit1", "orbit2", "theorem4", "remark4", "corollary8", "congruence", "ady")


class UsageError(Exception):
    pass


def parse_n_values(text: str) -> list[int]:
    """Parse ``7``, ``4,9,14``, ``10..20`` or ``a..b:s+r`` (``n == r mod s``)."""
    values = []
    for item in text.split(","):
        item = item.strip()
        if item.isdigit():
            values.append(int(item))
            continue
        m = _RANGE.match(item)
        if not m:
            raise UsageError(f"bad n value or range: {item!r}")
        lo, hi = int(m[1]), int(m[2])
        step, res = (int(m[3]), int(m[4])) if m[3] else (1, 0)
        if step < 1:
            raise UsageError(f"range step must be positive: {item!r}")
        values.extend(n for n in range(lo, hi + 1) if n % step == res % step)
    return values


def parse_partition(text: str) -> Partition:
    try:
        parts = [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise UsageError(f"bad partition literal: {text!r}") from None
    if any(a < 1 for a in parts):
        raise UsageError(f"parts must be positive: {text!r}")
    if parts != sorted(parts, reverse=True):
        print(f"warning: sorting parts of {text!r} into nonincreasing order", file=sys.stderr)
    return Partition.sorted(parts)


# -- reports --------------------------------------------------------------------


def _report(args, command, params, rows=(), verdicts=(), elapsed=None, **extra) -> dict:
    out = {
        "command": command,
        "params": params,
        "rows": list(rows),
        "verdicts": list(verdicts),
        "elapsed_ms": round(elapsed * 1000, 3) if args.timing and elapsed is not None else None,
    }
    out.update(extra)
    return out


def _verdict_entries(v: identities.Verdict) -> list[dict]:
    entries = []
    for label, found in v.comparisons.items():
        entry = {"name": f"{v.name}:{label}", "pass": not found}
        if found:
            w = found[0]
            entry["witness"] = {"index": w.index, "left": w.left, "right": w.right}
            if w.key is not None:
                entry["witness"]["key"] = w.key
        entries.append(entry)
    return entries


def _table_rows(tables) -> list[dict]:
    return [
        {"n": t.n, "k": k, "o_count": r.o_count, "p_count": r.p_count}
        for t in tables
        for k, r in sorted(t.rows.items())
    ]


def _tsv(header, rows) -> str:
    lines = ["\t".join(map(str, header))]
    lines += ["\t".join("" if x is None else str(x) for x in row) for row in rows]
    return "\n".join(lines)


def _cell(x):
    if isinstance(x, (list, tuple)):
        return ",".join(map(str, x))
    return x


def render(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2)
    cmd = report["command"]
    blocks = []
    if cmd == "orbit-table":
        rows = report["rows"]
        ks = sorted({r["k"] for r in rows})
        ns = list(dict.fromkeys(report["params"]["n"]))
        o = {(r["n"], r["k"]): r["o_count"] for r in rows}
        header = ["n"] + ks
        if report["params"].get("p_counts"):
            header += [f"p{k}" for k in ks]
        body = []
        for n in ns:
            line = [n] + [o.get((n, k), 0) for k in ks]
            if report["params"].get("p_counts"):
                line += [k * o.get((n, k), 0) for k in ks]
            body.append(line)
        blocks.append(_tsv(header, body))
    elif cmd == "check":
        vrows = []
        for v in report["verdicts"]:
            w = v.get("witness") or {}
            vrows.append([v["name"], int(v["pass"]), _cell(w.get("key")),
                          w.get("index"), _cell(w.get("left")), _cell(w.get("right"))])
        blocks.append(_tsv(["name", "pass", "key", "index", "left", "right"], vrows))
        coeffs = report.get("coefficients")
        if coeffs and coeffs["columns"]:
            names = list(coeffs["columns"])
            length = len(next(iter(coeffs["columns"].values())))
            body = [[coeffs["start"] + i] + [coeffs["columns"][c][i] for c in names]
                    for i in range(length)]
            blocks.append(_tsv(["n"] + names, body))
        if report["rows"]:
            blocks.append(_tsv(["n", "k", "o_count", "p_count"],
                               [[r["n"], r["k"], r["o_count"], r["p_count"]] for r in report["rows"]]))
    else:
        keys = list(report["rows"][0]) if report["rows"] else ["partition"]
        blocks.append(_tsv(keys, [[_cell(r[k]) for k in keys] for r in report["rows"]]))
    return "\n\n".join(blocks)


# -- commands -------------------------------------------------------------------


def cmd_orbit_table(args):
    ns = parse_n_values(args.n)
    if args.m < 2:
        raise UsageError("--m must be >= 2")
    t0 = time.perf_counter()
    tables = [orbit_table(n, args.m) for n in ns]
    params = {"n": ns, "m": args.m, "p_counts": args.p_counts}
    return _report(args, "orbit-table", params, _table_rows(tables),
                   elapsed=time.perf_counter() - t0), True


def _run_check(args) -> identities.Verdict:
    name, N, m = args.name, args.order, args.m
    if name == "pmm":
        return identities.check_pmm(m or 2, N if N is not None else identities.DEFAULT_ORDER)
    if name == "orbit1":
        return identities.check_orbit1_gf(m or 2, N if N is not None else 30)
    if name == "orbit2":
        return identities.check_orbit2_gf(m or 2, N if N is not None else 30)
    if name == "theorem4":
        return identities.check_theorem4(args.b or 2, N if N is not None else identities.DEFAULT_ORDER)
    if name == "remark4":
        return identities.check_remark4(N if N is not None else identities.DEFAULT_ORDER)
    if name == "corollary8":
        return identities.check_corollary8(m or 2, N if N is not None else identities.DEFAULT_ORDER)
    if name == "congruence":
        missing = [f"--{k}" for k in ("A", "B", "C", "m") if getattr(args, k) is None]
        if missing:
            raise UsageError(f"congruence needs {', '.join(missing)}")
        nmax = args.nmax if args.nmax is not None else 39
        return identities.check_congruence_statistics(args.A, args.B, args.C, m, nmax)
    if name == "ady":
        return ady.check_ady(m or 2, args.nmax if args.nmax is not None else 30)
    raise UsageError(f"unknown check {name!r}")


def cmd_check(args):
    for flag in ("m", "b", "order", "nmax"):
        val = getattr(args, flag)
        if val is not None and val < (0 if flag in ("order", "nmax") else 2):
            raise UsageError(f"--{flag} out of range: {val}")
    t0 = time.perf_counter()
    try:
        v = _run_check(args)
    except ValueError as e:
        raise UsageError(str(e)) from None
    params = {"name": args.name, **v.params, "order": v.order}
    entries = _verdict_entries(v)
    report = _report(
        args, "check", params, _table_rows(v.tables), entries,
        elapsed=time.perf_counter() - t0,
        coefficients={"start": v.column_start, "columns": v.columns},
    )
    return report, v.passed


def cmd_glaisher(args):
    lam = parse_partition(args.partition)
    image = glaisher(lam, args.m)
    params = {"partition": list(lam), "m": args.m}
    return _report(args, "glaisher", params, [{"partition": list(image)}]), True


def cmd_rotate(args):
    lam = parse_partition(args.partition)
    if args.steps < 0:
        raise UsageError("--steps must be nonnegative")
    image = rotate_partition(lam, args.m, args.steps)
    params = {"partition": list(lam), "m": args.m, "steps": args.steps}
    return _report(args, "rotate", params, [{"partition": list(image)}]), True


def cmd_orbit(args):
    lam = parse_partition(args.partition)
    cycle = orbit(lam, args.m)
    rows = [{"orbit_size": len(cycle), "step": i, "partition": list(p)} for i, p in enumerate(cycle)]
    params = {"partition": list(lam), "m": args.m}
    return _report(args, "orbit", params, rows), True


def _modulus(text: str) -> int:
    v = int(text)
    if v < 2:
        raise argparse.ArgumentTypeError("modulus must be >= 2")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="partfreq",
        description="Part-frequency matrices of partitions: orbit tables and identity checks.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("tsv", "json"), default="tsv")
    common.add_argument("--timing", action="store_true",
                        help="report elapsed_ms (otherwise null, keeping output deterministic)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("orbit-table", parents=[common], help="orbit counts by orbit size")
    p.add_argument("--n", required=True, help="n values: 7 | 4,9 | 10..20 | 4..39:5+4")
    p.add_argument("--m", required=True, type=_modulus)
    p.add_argument("--p-counts", action="store_true", help="also print partition counts")
    p.set_defaults(func=cmd_orbit_table)

    p = sub.add_parser("check", parents=[common], help="run an identity check")
    p.add_argument("name", choices=CHECKS)
    p.add_argument("--m", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--order", type=int)
    p.add_argument("--A", type=int)
    p.add_argument("--B", type=int)
    p.add_argument("--C", type=int)
    p.add_argument("--nmax", type=int)
    p.set_defaults(func=cmd_check)

    for name, func, helptext in (
        ("glaisher", cmd_glaisher, "Glaisher image (matrix transpose)"),
        ("rotate", cmd_rotate, "rotate antidiagonals"),
        ("orbit", cmd_orbit, "full rotation orbit"),
    ):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("--partition", required=True, help='comma-separated parts, e.g. "3,3,1"')
        p.add_argument("--m", required=True, type=_modulus)
        if name == "rotate":
            p.add_argument("--steps", type=int, default=1)
        p.set_defaults(func=func)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report, ok = args.func(args)
    except UsageError as e:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {e}", file=sys.stderr)
        return 2
    print(render(report, args.format))
    if not ok:
        return 1
    return 0 if all(v["pass"] for v in report["verdicts"]) else 1


if __name__ == "__main__":
    sys.exit(main())
