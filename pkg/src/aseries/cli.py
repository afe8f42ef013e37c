"""Command-line front end: verification grids, exact constants and tables.

    aseries verify --family thm3.2 --n-range 0..10 --x 0.5 --digits 50
    aseries pi --power 2 --n 20
    aseries table --corollary 3.3a --format markdown
    aseries closed-form --family cor5.3 --n 0 --x 1
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, fields
from fractions import Fraction

import mpmath
from mpmath import mpf

from . import closedform as cf
from . import series as sr
from .exactnum import ExactConst

EXACT_TOKENS = tuple(cf.SPECIAL_POINTS)


class UsageError(Exception):
    """Bad flag values; reported on stderr with exit code 2."""


@dataclass(frozen=True)
class VerifyRecord:
    family: str
    p: int
    n: int
    x: str
    digits: int
    lhs: str
    rhs: str
    abs_error: str
    certified: bool
    terms_used: int
    status: str


RECORD_FIELDS = [f.name for f in fields(VerifyRecord)]


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    powers: tuple[int, ...]
    n_default: tuple[int, int]
    x_default: tuple[str, ...]
    n_min: int = 0


FAMILIES: dict[str, FamilySpec] = {
    "thm3.2": FamilySpec("theorem", (1,), (0, 10), ("0.5",)),
    "thm4.2": FamilySpec("theorem", (2,), (0, 10), ("0.5",)),
    "thm5.2": FamilySpec("theorem", (3,), (0, 10), ("0.5",)),
    "thm6.2": FamilySpec("theorem", (4,), (0, 10), ("0.5",)),
    "cor3.3": FamilySpec("at_one", (1,), (0, 10), ("1",)),
    "cor4.3": FamilySpec("at_one", (2,), (0, 10), ("1",)),
    "cor5.3": FamilySpec("at_one", (3,), (0, 10), ("1",)),
    "cor6.3": FamilySpec("at_one", (4,), (0, 10), ("1",)),
    "cor3.3a": FamilySpec("table", (1,), (0, 10), ("1/2",)),
    "cor4.4a": FamilySpec("table", (2,), (0, 6), ("1/2",)),
    "cor4.5": FamilySpec("rearrange", (2,), (0, 10), ("1",)),
    "hyp8.8": FamilySpec("hyp88", (1,), (0, 10), ("0.5",)),
    "hyp8.11": FamilySpec("hyp811", (2,), (1, 6), ("0.25",), n_min=1),
    "limit7.1": FamilySpec("limit_pi", (1, 2, 3, 4), (0, 20), ("1",)),
    "limit7.2": FamilySpec("limit_inner", (1, 2), (1, 50), ("0.5",)),
    "thm2.1": FamilySpec("transform", (1,), (1, 8), ("0.5",)),
    "tail3.12": FamilySpec("tail", (1,), (0, 5), ("0.4",)),
    "tail3.13": FamilySpec("tail", (1,), (1, 5), ("0.4",), n_min=1),
    "tail4.20": FamilySpec("tail", (2,), (0, 5), ("0.4",)),
    "tail4.21": FamilySpec("tail", (2,), (0, 5), ("0.4",)),
}

TRANSFORM_TOLERANCE = mpf("1e-9")


# ---------------------------------------------------------------------------
# formatting helpers
# ---------------------------------------------------------------------------

def fmt(value, digits: int) -> str:
    """Decimal string with exactly ``digits`` significant digits."""
    value = mpf(value)
    if value == 0:
        return "0." + "0" * (digits - 1)
    return mpmath.nstr(value, digits, strip_zeros=False, min_fixed=-4, max_fixed=digits)


def parse_x(token: str) -> tuple[mpf | None, str | None]:
    """Numeric value of an x token at the ambient precision, or an error message."""
    token = token.strip()
    if token in cf.SPECIAL_POINTS:
        return cf.SPECIAL_POINTS[token][0].to_mpf(), None
    try:
        q = Fraction(token)
    except (ValueError, ZeroDivisionError):
        return None, f"malformed x token {token!r}"
    return sr.to_mpf(q), None


def parse_range(text: str) -> range:
    try:
        a, b = text.split("..")
        lo, hi = int(a), int(b)
    except ValueError:
        raise UsageError(f"--n-range must look like a..b, got {text!r}") from None
    if lo < 0 or hi < lo:
        raise UsageError(f"empty or negative n-range {text!r}")
    return range(lo, hi + 1)


# ---------------------------------------------------------------------------
# verification cases
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Case:
    family: str
    p: int
    n: int
    x: str
    digits: int


def _record(case: Case, lhs, rhs, err, certified: bool, terms: int, ok: bool) -> VerifyRecord:
    d = case.digits
    return VerifyRecord(
        case.family, case.p, case.n, case.x, d, fmt(lhs, d), fmt(rhs, d), fmt(err, d), certified, terms,
        "ok" if ok else "fail",
    )


def _exact_record(case: Case, lhs: ExactConst, rhs: ExactConst, pi) -> VerifyRecord:
    diff = lhs - rhs
    return _record(case, lhs.to_mpf(pi), rhs.to_mpf(pi), abs(diff.to_mpf(pi)), True, 0, diff.is_zero())


def run_case(case: Case) -> VerifyRecord:
    """Evaluate one (family, p, n, x) case; pure, so safe to run in a worker process."""
    spec = FAMILIES[case.family]
    ctx = sr.PrecisionCtx(case.digits)
    slack = mpf(10) ** (-case.digits + 5)
    with ctx.workdps():
        pi = sr.compute_pi(ctx.working_dps)
        x, problem = parse_x(case.x)
        if problem:
            return VerifyRecord(case.family, case.p, case.n, case.x, case.digits, "", "", "nan", False, 0, "fail")
        kind = spec.kind
        if kind == "theorem":
            rep = sr.lhs_series(case.p, case.n, x, ctx)
            if case.x in cf.SPECIAL_POINTS:
                rhs = cf.corollary_exact(case.p, case.n, case.x).to_mpf(pi)
            else:
                rhs = sr.rhs_numeric(cf.rhs_theorem(case.p, case.n), x, ctx)
            err = abs(rep.value - rhs)
            return _record(case, rep.value, rhs, err, rep.certified, rep.terms_used, err <= rep.tail_bound + slack)
        if kind == "at_one":
            via_theorem = cf.corollary_exact(case.p, case.n, "1")
            direct = cf.unified_pi_formula(case.n) if case.p == 1 else cf.corollary_formula(case.p, case.n)
            return _exact_record(case, via_theorem, direct, pi)
        if kind == "table":
            ref = cf.REFERENCE_X_HALF[case.p].get(case.n)
            value = cf.corollary_exact(case.p, case.n, case.x)
            if ref is None:
                # no tabulated constant: compare with the certified series instead
                rep = sr.lhs_series(case.p, case.n, x, ctx)
                err = abs(rep.value - value.to_mpf(pi))
                return _record(case, rep.value, value.to_mpf(pi), err, True, rep.terms_used, err <= rep.tail_bound + slack)
            return _exact_record(case, value, ExactConst.parse(ref), pi)
        if kind == "rearrange":
            pairs = cf.corollary_45_sides(case.n)
            diffs = [lhs - rhs for lhs, rhs in pairs]
            err = max(abs(d.to_mpf(pi)) for d in diffs)
            lhs, rhs = pairs[0]
            return _record(case, lhs.to_mpf(pi), rhs.to_mpf(pi), err, True, 0, all(d.is_zero() for d in diffs))
        if kind in ("hyp88", "hyp811", "tail", "transform"):
            if kind == "hyp88":
                lhs, rhs = sr.hyp88_sides(case.n, x, ctx)
            elif kind == "hyp811":
                lhs, rhs = sr.hyp811_sides(case.n, x, ctx)
            elif kind == "tail":
                lhs, rhs = sr.tail_identity_sides(case.family[4:], case.n, x, ctx)
            else:
                lhs, rhs = sr.transform_sides(case.n, x, ctx)
            err = abs(lhs - rhs)
            tol = TRANSFORM_TOLERANCE if kind == "transform" else slack
            return _record(case, lhs, rhs, err, kind != "transform", 0, err <= tol)
        if kind == "limit_pi":
            target = ExactConst.pi_power(case.p)
            err_n = sr.scaled_pi_sum(case.p, case.n) - target
            err_next = sr.scaled_pi_sum(case.p, case.n + 1) - target
            e0, e1 = abs(err_n.to_mpf(pi)), abs(err_next.to_mpf(pi))
            ok = e0 <= slack or e1 < e0
            return _record(case, (target + err_n).to_mpf(pi), target.to_mpf(pi), e0, True, 0, ok)
        if kind == "limit_inner":
            which = sr.INNER_LIMITS[case.p - 1]
            rows = sr.limit_scan_inner(which, x, 2, ctx, ns=[case.n, case.n + 1])
            ok = rows[0].error <= slack or rows[1].error < rows[0].error
            s = mpmath.sqrt(1 - x * x)
            limit = 1 / s if which == "7.8" else mpmath.asin(x) / s
            return _record(case, rows[0].scaled, limit, rows[0].error, True, 0, ok)
    raise AssertionError(f"unhandled family kind {spec.kind}")


def _domain_check(family: str, token: str, digits: int) -> None:
    kind = FAMILIES[family].kind
    with mpmath.workdps(digits + sr.GUARD_DIGITS):
        x, problem = parse_x(token)
    if problem:
        return  # reported per record
    fixed = FAMILIES[family].x_default
    if kind in ("at_one", "rearrange", "limit_pi") and token != fixed[0]:
        raise UsageError(f"family {family} is defined at x = {fixed[0]} only")
    if kind == "table" and token not in EXACT_TOKENS:
        raise UsageError(f"family {family} needs an exact x token {EXACT_TOKENS}")
    bad = {
        "theorem": abs(x) > 1,
        "table": False,
        "hyp88": abs(x) >= 1,
        "tail": abs(x) >= 1,
        "hyp811": not (0 <= x < mpf(1) / 2),
        "limit_inner": abs(x) > mpf("0.95"),
        "transform": not (0 < x < 1),
    }.get(kind, False)
    if bad:
        raise UsageError(f"x out of domain for {family}: {token}")


def build_cases(args) -> list[Case]:
    family = args.family
    spec = FAMILIES[family]
    if args.p is not None:
        if args.p not in spec.powers:
            raise UsageError(f"--p {args.p} is not available for {family} (choose from {spec.powers})")
        powers = (args.p,)
    else:
        powers = spec.powers
    ns = parse_range(args.n_range) if args.n_range else range(spec.n_default[0], spec.n_default[1] + 1)
    if ns.start < spec.n_min:
        raise UsageError(f"{family} needs n >= {spec.n_min}")
    xs = args.x or list(spec.x_default)
    for token in xs:
        _domain_check(family, token, args.digits)
    cases = []
    for p in powers:
        for n in ns:
            if spec.kind == "table" and args.n_range is None and n not in cf.REFERENCE_X_HALF[p]:
                continue
            for token in xs:
                cases.append(Case(family, p, n, token, args.digits))
    return cases


def write_records(records: list[VerifyRecord], fmt_name: str, stream) -> None:
    if fmt_name == "json":
        for rec in records:
            stream.write(json.dumps(asdict(rec)) + "\n")
    else:
        writer = csv.DictWriter(stream, fieldnames=RECORD_FIELDS, lineterminator="\n")
        writer.writeheader()
        for rec in records:
            writer.writerow(asdict(rec))


def _open_out(path: str | None):
    return open(path, "w", encoding="utf-8", newline="") if path and path != "-" else None


def cmd_verify(args) -> int:
    cases = build_cases(args)
    if args.jobs > 1 and len(cases) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            records = list(pool.map(run_case, cases, chunksize=max(1, len(cases) // (4 * args.jobs))))
    else:
        records = [run_case(c) for c in cases]
    fh = _open_out(args.out)
    try:
        write_records(records, args.format, fh or sys.stdout)
    finally:
        if fh:
            fh.close()
    failed = [r for r in records if r.status != "ok"]
    for r in failed:
        print(f"fail: {r.family} p={r.p} n={r.n} x={r.x} abs_error={r.abs_error}", file=sys.stderr)
    return 1 if failed else 0


# ---------------------------------------------------------------------------
# pi, table, closed-form
# ---------------------------------------------------------------------------

def cmd_pi(args) -> int:
    if args.power not in (1, 2, 3, 4):
        raise UsageError("--power must be in 1..4")
    if args.n < 0:
        raise UsageError("--n must be nonnegative")
    ctx = sr.PrecisionCtx(args.digits)
    with ctx.workdps():
        pi = sr.compute_pi(ctx.working_dps)
        target = ExactConst.pi_power(args.power)
        scaled = sr.scaled_pi_sum(args.power, args.n)
        err = scaled - target
        out = {
            "power": args.power,
            "n": args.n,
            "digits": args.digits,
            "scaled_exact": scaled.render(),
            "scaled": fmt(scaled.to_mpf(pi), args.digits),
            "pi_power": fmt(target.to_mpf(pi), args.digits),
            "error_exact": err.render(),
            "error": fmt(err.to_mpf(pi), args.digits),
        }
    if args.format == "json":
        print(json.dumps(out))
    else:
        for key, value in out.items():
            print(f"{key}: {value}")
    return 0


TABLE_COROLLARIES = {"3.3a": (1, "1/2"), "4.4a": (2, "1/2"), "3.3": (1, "1"), "4.3": (2, "1"), "5.3": (3, "1"), "6.3": (4, "1")}
TABLE_FIELDS = ["corollary", "p", "n", "x", "value", "decimal"]


def cmd_table(args) -> int:
    if args.corollary not in TABLE_COROLLARIES:
        raise UsageError(f"unsupported corollary {args.corollary!r}; choose from {sorted(TABLE_COROLLARIES)}")
    p, x_default = TABLE_COROLLARIES[args.corollary]
    token = args.x or x_default
    if token not in EXACT_TOKENS:
        raise UsageError(f"--x must be one of {EXACT_TOKENS}")
    if args.n_range:
        ns = list(parse_range(args.n_range))
    elif args.corollary in ("3.3a", "4.4a"):
        ns = sorted(cf.REFERENCE_X_HALF[p])
    else:
        ns = list(range(11))
    ctx = sr.PrecisionCtx(args.digits)
    rows = []
    with ctx.workdps():
        pi = sr.compute_pi(ctx.working_dps)
        for n in ns:
            value = cf.corollary_exact(p, n, token)
            rows.append(
                {"corollary": args.corollary, "p": p, "n": n, "x": token, "value": value.render(),
                 "decimal": fmt(value.to_mpf(pi), args.digits)}
            )
    if args.format == "json":
        for row in rows:
            print(json.dumps(row))
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=TABLE_FIELDS, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        sys.stdout.write(buf.getvalue())
    else:
        print("| " + " | ".join(TABLE_FIELDS) + " |")
        print("|" + "---|" * len(TABLE_FIELDS))
        for row in rows:
            print("| " + " | ".join(str(row[k]) for k in TABLE_FIELDS) + " |")
    return 0


CLOSED_FORM_FAMILIES = {
    "cor3.3": 1, "cor3.3a": 1, "cor4.3": 2, "cor4.4a": 2, "cor5.3": 3, "cor6.3": 4,
    "thm3.2": 1, "thm4.2": 2, "thm5.2": 3, "thm6.2": 4,
}


def cmd_closed_form(args) -> int:
    if args.family not in CLOSED_FORM_FAMILIES:
        raise UsageError(f"unsupported family {args.family!r}; choose from {sorted(CLOSED_FORM_FAMILIES)}")
    if args.n < 0:
        raise UsageError("--n must be nonnegative")
    p = CLOSED_FORM_FAMILIES[args.family]
    if args.x is None:
        if args.family.startswith("thm"):
            print(cf.rhs_theorem(p, args.n).render())
            return 0
        token = "1/2" if args.family.endswith("a") else "1"
    else:
        token = args.x
    if token not in EXACT_TOKENS:
        raise UsageError(f"--x must be one of {EXACT_TOKENS}")
    print(cf.corollary_exact(p, args.n, token).render())
    return 0


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def _digits(text: str) -> int:
    try:
        d = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid digits {text!r}") from None
    if d < 10:
        raise argparse.ArgumentTypeError("digits must be at least 10")
    return d


def build_parser() -> argparse.ArgumentParser:
    try:
        default_digits = sr.default_digits()
    except ValueError:
        default_digits = sr.DEFAULT_DIGITS
    parser = argparse.ArgumentParser(prog="aseries", description="Arcsin-power series identities: verify, tabulate, evaluate.")
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="check identity families over a grid")
    v.add_argument("--family", required=True, choices=sorted(FAMILIES))
    v.add_argument("--p", type=int)
    v.add_argument("--n-range", dest="n_range")
    v.add_argument("--x", action="append", help="exact token (1, 1/2, sqrt2/2, sqrt3/2) or decimal; repeatable")
    v.add_argument("--digits", type=_digits, default=default_digits)
    v.add_argument("--format", choices=("json", "csv"), default="json")
    v.add_argument("--out", help="output path (default stdout)")
    v.add_argument("--jobs", type=int, default=1)
    v.set_defaults(func=cmd_verify)

    pi = sub.add_parser("pi", help="rescaled x = 1 sums converging to pi^p")
    pi.add_argument("--power", type=int, required=True)
    pi.add_argument("--n", type=int, required=True)
    pi.add_argument("--digits", type=_digits, default=default_digits)
    pi.add_argument("--format", choices=("text", "json"), default="text")
    pi.set_defaults(func=cmd_pi)

    t = sub.add_parser("table", help="exact constants of a corollary family")
    t.add_argument("--corollary", required=True)
    t.add_argument("--n-range", dest="n_range")
    t.add_argument("--x")
    t.add_argument("--digits", type=_digits, default=default_digits)
    t.add_argument("--format", choices=("json", "csv", "markdown"), default="markdown")
    t.set_defaults(func=cmd_table)

    c = sub.add_parser("closed-form", help="print one exact constant or a symbolic right-hand side")
    c.add_argument("--family", required=True)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--x")
    c.set_defaults(func=cmd_closed_form)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "jobs", 1) < 1:
        parser.error("--jobs must be positive")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"aseries: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
