"""hankel-lab command line: tables, verification sweeps, conjecture checks."""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from . import claims, conjecture, proof_engine as pe
from .report import FAIL, PARAM_KEYS, Record

FORMATS = ("csv", "json-lines", "pretty")
CSV_COLUMNS = ("claim",) + PARAM_KEYS + ("lhs", "rhs", "status", "extra")
MATCH, MISMATCH, NONE = "match", "mismatch", "-"


class RangeError(argparse.ArgumentTypeError):
    pass


def parse_range(text: str) -> tuple[int, int]:
    """'a..b' or a single 'a'; bounds are nonnegative and a <= b."""
    try:
        if ".." in text:
            lo, hi = (int(x) for x in text.split("..", 1))
        else:
            lo = hi = int(text)
    except ValueError:
        raise RangeError(f"bad range {text!r}; expected a..b or a single integer") from None
    if lo < 0 or hi < lo:
        raise RangeError(f"bad range {text!r}; need 0 <= a <= b")
    return lo, hi


def resolve_jobs(flag: int | None) -> int:
    """--jobs wins, then HANKEL_LAB_THREADS, then the core count."""
    if flag is not None:
        return max(1, flag)
    env = os.environ.get("HANKEL_LAB_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


# -- output -------------------------------------------------------------------

def _extra(rec: Record) -> str:
    extra = {k: v for k, v in rec.params.items() if k not in PARAM_KEYS}
    if rec.detail:
        extra["detail"] = rec.detail
    return json.dumps(extra, sort_keys=True) if extra else ""


def to_csv(records: list[Record]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for rec in records:
        j = rec.to_json()
        writer.writerow([rec.claim] + [rec.params.get(k, "") for k in PARAM_KEYS]
                        + [j["lhs"] or "", j["rhs"] or "", rec.status, _extra(rec)])
    return buf.getvalue()


def to_json_lines(records: list[Record]) -> str:
    return "".join(json.dumps(rec.to_json()) + "\n" for rec in records)


def to_pretty(records: list[Record]) -> str:
    rows = [("claim", "params", "lhs", "rhs", "status")]
    for rec in records:
        j = rec.to_json()
        params = " ".join(f"{k}={v}" for k, v in rec.params.items())
        rows.append((rec.claim, params, j["lhs"] or "", j["rhs"] or "", rec.status))
    widths = [max(len(r[i]) for r in rows) for i in range(5)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows]
    return "\n".join(lines) + "\n"


def render(records: list[Record], fmt: str) -> str:
    return {"csv": to_csv, "json-lines": to_json_lines, "pretty": to_pretty}[fmt](records)


def parse_csv(text: str) -> list[dict]:
    """Inverse of to_csv, in the same shape as Record.to_json()."""
    out = []
    for row in csv.DictReader(io.StringIO(text)):
        extra = json.loads(row["extra"]) if row["extra"] else {}
        detail = extra.pop("detail", "")
        params = {k: int(row[k]) for k in PARAM_KEYS if row[k] != ""}
        params.update(extra)
        rec = {"claim": row["claim"], "params": params, "lhs": row["lhs"] or None,
               "rhs": row["rhs"] or None, "status": row["status"]}
        if detail:
            rec["detail"] = detail
        out.append(rec)
    return out


def parse_json_lines(text: str) -> list[dict]:
    return [json.loads(line) for line in text.splitlines() if line]


def emit(records: list[Record], fmt: str, out: str | None) -> None:
    text = render(sorted(records, key=Record.sort_key), fmt)
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# -- execution ---------------------------------------------------------------

def _run_chunk(tasks):
    return [(name, rec) for name, params in tasks for rec in claims.run_instance(name, params)]


def run_tasks(tasks: list[tuple[str, dict]], jobs: int) -> dict[str, list[Record]]:
    """Check every (claim, params) task; records come back grouped by claim and sorted,
    so the order in which workers finish is irrelevant."""
    if jobs <= 1 or len(tasks) < 2:
        pairs = _run_chunk(tasks)
    else:
        # round-robin chunks balance the cheap and expensive instances
        chunks = [tasks[i::jobs * 4] for i in range(jobs * 4)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            pairs = [pr for part in pool.map(_run_chunk, [c for c in chunks if c]) for pr in part]
    grouped: dict[str, list[Record]] = {name: [] for name, _ in tasks}
    for name, rec in pairs:
        grouped[name].append(rec)
    return {name: sorted(recs, key=Record.sort_key) for name, recs in grouped.items()}


def _flatten(grouped: dict[str, list[Record]]) -> list[Record]:
    return sorted((r for recs in grouped.values() for r in recs), key=Record.sort_key)


# -- commands -----------------------------------------------------------------

def _dprime_annotation(r: int, size: int):
    predictions = []
    k = r // 2
    if k >= 1:
        ids = (1, 2, 3, 4) if r % 2 else (5,)
        for c in ids:
            for n in range(size + 1):
                for rr, N, sign, expected in conjecture.dprime_instances(c, k, n):
                    if rr == r and N == size:
                        predictions.append((c, sign * expected))
    return predictions


def cmd_table(args) -> int:
    records = []
    for r in range(args.r[0], args.r[1] + 1):
        for size in range(args.n[0], args.n[1] + 1):
            params = {"r": r, "n": size}
            if args.family == "d":
                value = pe.d_r_direct(r, size)
                cases = pe.matching_cases(r, size)
                forms = {pe.closed_form_value(c, k, n, corrected=args.corrected) for c, k, n in cases}
                labels = ",".join(f"case{c}" for c, _, _ in cases)
            else:
                if r < 1:
                    print("error: d' needs r >= 1", file=sys.stderr)
                    return 2
                value = conjecture.d_prime(r, size)
                preds = _dprime_annotation(r, size)
                forms = {sign_value for _, sign_value in preds}
                labels = ",".join(sorted({f"conj{c}" for c, _ in preds}))
            if not forms:
                records.append(Record(args.family, params, value, None, NONE))
                continue
            # on a mismatch show a prediction that disagrees with the value
            rhs = value if forms == {value} else min(f for f in forms if f != value)
            status = MATCH if forms == {value} else MISMATCH
            records.append(Record(args.family, params, value, rhs, status, labels))
    emit(records, args.format, args.out)
    return 0


def _selected_claims(args) -> list[str]:
    if args.all:
        names = list(claims.DEFAULT_CLAIMS)
    else:
        names = list(args.claim or [])
        unknown = [n for n in names if n not in claims.REGISTRY]
        if unknown:
            raise RangeError(f"unknown claim(s) {unknown}; try `hankel-lab verify --list`")
    if args.corrected:
        names = [claims.CORRECTED.get(n, n) for n in names]
    return names


def cmd_verify(args) -> int:
    if args.list:
        for name in claims.claim_names():
            print(f"{name:18s} {claims.REGISTRY[name].description}")
        return 0
    names = _selected_claims(args)
    if not names:
        print("error: pass --claim NAME or --all", file=sys.stderr)
        return 2
    overrides = {"N": args.N, "k": args.k, "n": args.n, "r": args.r}
    tasks = [(name, p) for name in names for p in claims.expand(name, overrides, quick=args.quick)]
    start = time.perf_counter()
    grouped = run_tasks(tasks, resolve_jobs(args.jobs))
    emit(_flatten(grouped), args.format, args.out)
    failed = 0
    for name in names:
        mine = grouped.get(name, [])
        bad = [r for r in mine if r.status == FAIL]
        failed += len(bad)
        line = f"{name}: {'FAIL' if bad else 'PASS'} ({len(mine)} records, {len(bad)} failed)"
        if bad:
            line += f"; first counterexample {bad[0].params}: lhs={bad[0].lhs} rhs={bad[0].rhs}"
        print(line, file=sys.stderr)
    print(f"{len(tasks)} instances in {time.perf_counter() - start:.2f}s", file=sys.stderr)
    return 1 if failed else 0


def conjecture_run(k_max: int, n_max: int, window: int):
    results = conjecture.check_dprime_conjectures(k_max, n_max)
    results.append(conjecture.check_matrix_identity(k_max, window))
    return results


def cmd_conjecture(args) -> int:
    results = conjecture_run(args.k_max, args.n_max, args.window)
    records = []
    for res in results:
        ce = res.counterexample
        records.append(Record(f"conj{res.conjecture}", {}, len(res.records),
                              None if ce is None else json.dumps(ce.params, sort_keys=True), res.status,
                              "" if ce is None else f"lhs={ce.lhs} rhs={ce.rhs}"))
        if args.detail:
            records += res.records
        print(res.summary(), file=sys.stderr)
    emit(records, args.format, args.out)
    return 0


def cmd_selftest(args) -> int:
    """Quick sweep of every claim (repaired case 4/7 forms) plus the listed sequences."""
    names = [claims.CORRECTED.get(n, n) for n in claims.DEFAULT_CLAIMS]
    tasks = [(name, p) for name in names for p in claims.expand(name, quick=True)]
    records = _flatten(run_tasks(tasks, resolve_jobs(args.jobs)))
    bad = [r for r in records if r.status == FAIL]
    for r in bad[:10]:
        print(f"FAIL {r.claim} {r.params}: lhs={r.lhs} rhs={r.rhs} {r.detail}")
    print(f"selftest: {len(records) - len(bad)}/{len(records)} records pass over {len(names)} claims")
    return 1 if bad else 0


# -- parser -------------------------------------------------------------------

def _common(p: argparse.ArgumentParser):
    p.add_argument("--format", choices=FORMATS, default="pretty")
    p.add_argument("--out", metavar="PATH")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hankel-lab", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    t = sub.add_parser("table", help="d_r(n) or d'_r(n) over a rectangle of (r, n)")
    t.add_argument("--family", choices=("d", "dprime"), default="d")
    t.add_argument("--r", type=parse_range, required=True)
    t.add_argument("--n", type=parse_range, default=(0, 10))
    t.add_argument("--corrected", action="store_true", help="annotate with the repaired case 4/7 forms")
    _common(t)
    t.set_defaults(func=cmd_table)

    v = sub.add_parser("verify", help="check theorem instances over parameter ranges")
    v.add_argument("--claim", action="append", metavar="NAME")
    v.add_argument("--all", action="store_true")
    v.add_argument("--list", action="store_true", help="list claim names and exit")
    v.add_argument("--quick", action="store_true", help="use the small default ranges")
    v.add_argument("--corrected", action="store_true",
                   help="use the repaired case 4/7 closed forms and witness")
    for axis in ("N", "k", "n", "r"):
        v.add_argument(f"--{axis}", type=parse_range, metavar="a..b")
    v.add_argument("--jobs", type=int)
    _common(v)
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("conjecture", help="test the d' conjectures and the matrix identity")
    c.add_argument("--k-max", type=int, default=2)
    c.add_argument("--n-max", type=int, default=3)
    c.add_argument("--window", type=int, default=12)
    c.add_argument("--detail", action="store_true", help="also emit every checked instance")
    _common(c)
    c.set_defaults(func=cmd_conjecture)

    s = sub.add_parser("selftest", help="fast end-to-end sanity sweep")
    s.add_argument("--jobs", type=int)
    s.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except RangeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
