"""Command-line front end.

Every subcommand prints one JSON document (or a CSV table with
``--format csv``) and exits 0 on success, 1 when a verification fails and 2 on
a usage error.  ``SYMPVOA_THREADS`` caps the number of worker processes used
for independent checks; output order never depends on it.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from .cartan import AffineWeight, build_root_system, check_admissible, pi_1, pi_2
from .exact import Q, fmt_q

SCHEMA = 1
EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def workers() -> int:
    raw = os.environ.get("SYMPVOA_THREADS", "1")
    try:
        k = int(raw)
    except ValueError:
        raise UsageError(f"SYMPVOA_THREADS must be an integer, got {raw!r}")
    return max(k, 1)


def pmap(fn, items: list) -> list:
    """Ordered map, spread over processes when ``SYMPVOA_THREADS > 1``."""
    k = min(workers(), len(items))
    if k <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=k) as pool:
        return list(pool.map(fn, items))


def _rational(text: str) -> Fraction:
    try:
        return Q(text.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}")


def _weight(text: str) -> AffineWeight:
    parts = [p for p in text.replace(";", ",").split(",") if p.strip()]
    try:
        return AffineWeight(tuple(_rational(p) for p in parts))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _coroots(s) -> list:
    return [list(v) for v in sorted(s)]


# --- subcommands ---------------------------------------------------------------

def cmd_roots(args) -> tuple:
    rs = build_root_system(args.ell)
    rows = [
        {"root": list(r), "positive": rs.is_positive(r), "long": rs.is_long(r), "coroot_h": list(rs.coroot_h(r))}
        for r in rs.roots
    ]
    report = {
        "ell": args.ell,
        "count": len(rs.roots),
        "simple_roots": [list(r) for r in rs.simple_roots],
        "highest_root": list(rs.highest_root),
        "roots": rows,
    }
    table = [["root", "positive", "long"]] + [[" ".join(map(str, r["root"])), r["positive"], r["long"]] for r in rows]
    return True, report, table


def cmd_weights(args) -> tuple:
    from .weights import enumerate_S

    ws = enumerate_S(int(args.family[1]), args.n, args.ell)
    table = list(csv.reader(io.StringIO(ws.to_csv())))
    return True, {**ws.to_json(), "count": len(ws)}, table


def _admissible_record(lam: AffineWeight, bound, expected=None) -> dict:
    res = check_admissible(lam, bound)
    rec = {
        "weight": lam.to_json(),
        "text": str(lam),
        "level": fmt_q(lam.level),
        "cond1": res.cond1,
        "cond2": res.cond2,
        "bound": res.bound,
        "pi_lambda": _coroots(res.pi_lambda),
        "witness": list(res.witness) if res.witness else None,
    }
    ok = res.admissible
    if expected is not None:
        rec["expected_pi"] = _coroots(expected)
        rec["pi_matches"] = res.pi_lambda == expected
        ok = ok and rec["pi_matches"]
    rec["ok"] = ok
    return rec


def cmd_admissible(args) -> tuple:
    from .weights import enumerate_S

    records = []
    if args.weight is not None:
        records.append(_admissible_record(args.weight, args.bound))
    else:
        if args.n is None:
            raise UsageError("admissible needs --weight or --n")
        level = Fraction(2 * args.n - 3, 2)
        for i, pi in ((1, pi_1), (2, pi_2)):
            for lam in enumerate_S(i, args.n, args.ell):
                rec = _admissible_record(lam, args.bound, pi(args.ell))
                rec["family"] = f"S{i}"
                rec["level_ok"] = lam.level == level
                rec["ok"] = rec["ok"] and rec["level_ok"]
                records.append(rec)
    ok = all(r["ok"] for r in records)
    table = [["weight", "cond1", "cond2", "ok"]] + [[r["text"], r["cond1"], r["cond2"], r["ok"]] for r in records]
    return ok, {"ok": ok, "weights": records}, table


def _poly_job(job):
    index, n, source, check = job
    from .uea import compute_p
    from .zeros import closed_form

    closed = closed_form(index, n)
    p = compute_p(index, n) if source == "uea" else closed.monic()
    ratio = None
    if check:
        ratio = closed.ratio_to(compute_p(index, n))
    return p, ratio


def cmd_polys(args) -> tuple:
    jobs = [(i, args.n, args.source, args.check_closed_form) for i in (1, 2, 3)]
    report = {"n": args.n, "source": args.source}
    table = [["index", "poly"]]
    ok = True
    for (i, *_), (p, ratio) in zip(jobs, pmap(_poly_job, jobs)):
        rec = {"text": repr(p), "terms": p.to_json()}
        if args.check_closed_form:
            rec["closed_form_ratio"] = fmt_q(ratio) if ratio is not None else None
            ok = ok and ratio is not None
        report[f"p{i}"] = rec
        table.append([i, repr(p)])
    report["ok"] = ok
    return ok, report, table


def cmd_zeros(args) -> tuple:
    from .zeros import brute_force_T, lemma55_set, lemma56_check

    brute = brute_force_T(args.n, args.source)
    families = lemma55_set(args.n)
    report = {**brute.to_json(), "source": args.source, "families_agree": brute == families}
    ok = report["families_agree"]
    if args.check_recursion:
        report["recursion"] = lemma56_check(args.n)
        ok = ok and report["recursion"]
    report["ok"] = ok
    table = [["part", "h1", "h2"]]
    for part in ("T1", "T2"):
        table += [[part, a, b] for a, b in report[part]]
    return ok, report, table


def _load_candidates(path: str) -> list:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read candidates: {exc}")
    if isinstance(data, dict):
        data = data.get("weights", data.get("candidates", []))
    try:
        return [AffineWeight.from_json(x) for x in data]
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"bad candidate weight: {exc}")


def cmd_classify(args) -> tuple:
    from .classify import classify

    cands = _load_candidates(args.candidates) if args.candidates else []
    rep = classify(args.n, args.ell, cands)
    report = rep.to_json()
    ok = True
    if args.cross_check:
        ok = rep.match
    report["ok"] = ok
    table = list(csv.reader(io.StringIO(rep.to_csv())))
    return ok, report, table


def cmd_singular(args) -> tuple:
    from .affine import singular_check

    rep = singular_check(args.n, perturb=args.perturb_level)
    report = rep.to_json()
    if not rep.ok:
        report["witness"] = next(c["op"] for c in rep.checks if not c["zero"])
    table = [["op", "zero"]] + [[c["op"], c["zero"]] for c in rep.checks]
    return rep.ok, report, table


def _fock_job(job):
    from .fock import prop33_check

    sector, max_degree, modes, sign = job
    return prop33_check(sector, max_degree, modes, sign).to_json()


def cmd_fock(args) -> tuple:
    from .fock import SECTORS

    sectors = list(SECTORS) if args.sector == "all" else [args.sector]
    sign = 1 if args.flip_sign else -1
    jobs = [(s, args.max_degree, args.modes, sign) for s in sectors]
    results = pmap(_fock_job, jobs)
    ok = all(r["ok"] for r in results)
    table = [["sector", "checked", "ok"]] + [[r["sector"], r["checked"], r["ok"]] for r in results]
    return ok, {"ok": ok, "sectors": results}, table


# --- parser ------------------------------------------------------------------

def _positive(text: str) -> int:
    try:
        k = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if k < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return k


def _mode_range(text: str) -> tuple:
    lo, sep, hi = text.partition("..")
    try:
        lo, hi = int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LO..HI, got {text!r}")
    if not sep or lo > hi:
        raise argparse.ArgumentTypeError(f"expected LO..HI, got {text!r}")
    return lo, hi


def _rank(text: str) -> int:
    k = _positive(text)
    if k < 2:
        raise argparse.ArgumentTypeError("rank must be at least 2")
    return k


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sympvoa", description="Exact checks for affine sp_2l at level n - 3/2.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--output", "-o", help="write the report here instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("roots", parents=[common], help="finite C_l root datum")
    p.add_argument("--ell", type=_rank, default=2)
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("weights", parents=[common], help="recursive weight families")
    p.add_argument("--set", dest="family", choices=("S1", "S2"), required=True)
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--ell", type=_rank, default=2)
    p.set_defaults(func=cmd_weights)

    p = sub.add_parser("admissible", parents=[common], help="bounded admissibility check")
    p.add_argument("--weight", type=_weight, help="Lambda coefficients, e.g. '-1/2,0,0'")
    p.add_argument("--n", type=_positive, help="check every classified weight at level n - 3/2")
    p.add_argument("--ell", type=_rank, default=2)
    p.add_argument("--bound", type=int, default=None)
    p.set_defaults(func=cmd_admissible)

    p = sub.add_parser("polys", parents=[common], help="the rank-2 polynomials p_1, p_2, p_3")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--source", choices=("closed-form", "uea"), default="closed-form")
    p.add_argument("--check-closed-form", action="store_true", help="compare the engine output with the closed forms")
    p.set_defaults(func=cmd_polys)

    p = sub.add_parser("zeros", parents=[common], help="common zeros T^n")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--source", choices=("closed-form", "uea"), default="closed-form")
    p.add_argument("--check-recursion", action="store_true")
    p.set_defaults(func=cmd_zeros)

    p = sub.add_parser("classify", parents=[common], help="module list at level n - 3/2")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--ell", type=_rank, default=2)
    p.add_argument("--cross-check", action="store_true")
    p.add_argument("--candidates", help="JSON list of weights to flag")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("singular", parents=[common], help="singular vector in N((n-3/2) Lambda_0)")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--perturb-level", type=_rational, default=Fraction(0))
    p.set_defaults(func=cmd_singular)

    p = sub.add_parser("fock", parents=[common], help="relation field on the oscillator sectors")
    p.add_argument("--sector", choices=("all", "int-even", "int-odd", "half-even", "half-odd"), default="all")
    p.add_argument("--max-degree", type=_positive, default=4)
    p.add_argument("--modes", type=_mode_range, default=(-4, 4), metavar="LO..HI", help="e.g. --modes=-4..4")
    p.add_argument("--flip-sign", action="store_true", help="negative control")
    p.set_defaults(func=cmd_fock)
    return parser


def render(report: dict, table: list, fmt: str) -> str:
    if fmt == "csv":
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(table)
        return buf.getvalue()
    return json.dumps({"schema": SCHEMA, **report}, indent=2, sort_keys=True) + "\n"


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        ok, report, table = args.func(args)
    except UsageError as exc:
        print(f"sympvoa: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = render({"command": args.command, **report}, table, args.format)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK if ok else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
