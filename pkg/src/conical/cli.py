"""Command-line front end: point evaluation and verification sweeps.

Subcommands:
  eval      evaluate P, R and optionally derivatives at one point;
            the process exit code equals the evaluation status
            (0 ok, 1 overflow/underflow, 2 arguments out of range)
  verify    quasi-random sweep of one test suite; writes a CSV row per
            point over threshold and exits nonzero when the failing
            fraction exceeds the suite's budget
  map       same sweep and CSV, but always exits 0; meant for plotting
            failure maps externally
  fixture   recompute a frozen reference fixture file and compare
            (exit 0 all lines pass, 1 any line fails, 3 parse failure)

CSV output is deterministic: identical seed and flags give identical
bytes.  Header comments record the seed and flags, then the column
header ``x,tau,m,err,region,status``, then one row per failing point in
sample order.  Floats are printed with %.17g, LF line endings, UTF-8.
"""

from __future__ import annotations

import argparse
import math
import sys
from dataclasses import dataclass

from .common import DEFAULT_CONFIG, EvalStatus, NumericConfig, Region
from .ladder import c_coeff, pi_product
from .pfun import conicp, conicp_scaled, conicpr
from .rfun import conicr, conicr_scaled, r_kummer_order, r_largex_order
from . import refdata

FIXTURE_TOL = 5e-12    # relative, each of the four columns
DERIV_TOL = 1e-6       # relative, derivative columns of the oracle grids
ABS_GUARD = 1e-300     # relative-error denominator floor near zeros
HALTON_BASES = (2, 3, 5)

SUITE_THRESHOLD = {"wronskian": 1e-12, "recurrence": 1e-12, "oracle": 5e-12}
SUITE_BUDGET = {"wronskian": 0.01, "recurrence": 0.01, "oracle": 0.0}
# default sweep box per suite: xmin, xmax, taumin, taumax, mmin, mmax
SUITE_BOX = {
    "wronskian": (1.001, 100.0, 0.0, 100.0, 0, 100),
    "recurrence": (1.2, 100.0, 0.0, 100.0, 1, 1),
    "oracle": (-1.0, 100.0, 0.0, 100.0, 0, 100),
}


@dataclass
class VerificationRecord:
    """All per-point test quantities; fields a suite does not measure stay 0."""

    x: float
    tau: float
    m: int
    err_wronskian: float = 0.0
    err_rec1: float = 0.0
    err_rec2: float = 0.0
    err_min: float = 0.0
    region: Region = Region.SeriesNear1
    status: EvalStatus = EvalStatus.Ok


def rel_err(got: float, ref: float) -> float:
    if not math.isfinite(got):
        return math.inf
    return abs(got - ref) / max(abs(ref), ABS_GUARD)


def halton(index: int, base: int) -> float:
    """Radical-inverse sequence value in (0, 1) for index >= 1."""
    u = 0.0
    scale = 1.0 / base
    while index:
        u += (index % base) * scale
        index //= base
        scale /= base
    return u


def sample_box(samples, seed, xmin, xmax, taumin, taumax, mmin, mmax):
    """Deterministic low-discrepancy points in the box, open in x and tau."""
    points = []
    for j in range(samples):
        i = seed + j + 1
        x = xmin + halton(i, HALTON_BASES[0]) * (xmax - xmin)
        tau = taumin + halton(i, HALTON_BASES[1]) * (taumax - taumin)
        m = mmin + int(halton(i, HALTON_BASES[2]) * (mmax - mmin + 1))
        points.append((x, min(m, mmax), tau))
    return points


def _unit_mantissas(fa, fb, exp2):
    """Rescale a shared-exponent pair so products cannot overflow."""
    big = max(abs(fa), abs(fb))
    if big == 0.0 or not math.isfinite(big):
        return fa, fb, exp2
    _, e = math.frexp(big)
    return math.ldexp(fa, -e), math.ldexp(fb, -e), exp2 + e


def wronskian_error(x, m, tau, config: NumericConfig = DEFAULT_CONFIG):
    """Residual of P'R - PR' against its closed form, in scaled arithmetic.

    Returns (err, region, status); the region tag is the one chosen for
    R, whose route dominates the error budget.
    """
    try:
        pm, pm1, pe, _, _ = conicp_scaled(x, m, tau, config)
        rm, rm1, re_, _, region = conicr_scaled(x, m, tau, config)
    except ArithmeticError:
        return math.inf, Region.Recurrence, EvalStatus.OverUnderflow
    pim, pie = pi_product(m, tau)
    if not all(map(math.isfinite, (pm, pm1, rm, rm1, pim))) or pim == 0.0:
        return math.inf, region, EvalStatus.OverUnderflow
    pm, pm1, pe = _unit_mantissas(pm, pm1, pe)
    rm, rm1, re_ = _unit_mantissas(rm, rm1, re_)
    # in W = P R' - R P' the diagonal m x/(x^2-1) terms cancel exactly,
    # leaving the cross product of the order pairs over sqrt(x^2 - 1)
    cross = pm * rm1 - rm * pm1
    s = math.sqrt(x * x - 1.0)
    try:
        ratio = math.ldexp(cross * (x * x - 1.0) / (s * -pim), pe + re_ - pie)
    except OverflowError:
        return math.inf, region, EvalStatus.OverUnderflow
    if not math.isfinite(ratio):
        return math.inf, region, EvalStatus.OverUnderflow
    return abs(ratio - 1.0), region, EvalStatus.Ok


def recurrence_errors(x, m, tau, config: NumericConfig = DEFAULT_CONFIG):
    """Order-recurrence deviations of the direct R expansion at m-1, m, m+1.

    The expansion under test is picked by x alone: the large-x phase
    expansion from 1.2 up, the large-tau expansion below.  Both forms of
    the deviation are returned; their zeros interlace, so the minimum is
    the meaningful per-point figure.  Requires m >= 1.
    """
    if x >= config.x_largex_min:
        expansion, region = r_largex_order, Region.LargeX
    else:
        expansion, region = r_kummer_order, Region.KummerLargeTau
    lower, _ = expansion(x, tau, m - 1, config)
    here, _ = expansion(x, tau, m, config)
    upper, _ = expansion(x, tau, m + 1, config)
    if not all(map(math.isfinite, (lower, here, upper))):
        return math.inf, math.inf, math.inf, region, EvalStatus.OverUnderflow
    b = -2.0 * m * x / math.sqrt(x * x - 1.0)
    c = c_coeff(m, tau)
    predicted = b * here - c * lower
    err1 = abs(predicted / upper - 1.0) if upper != 0.0 else math.inf
    err2 = abs((upper + c * lower) / (b * here) - 1.0) if b * here != 0.0 else math.inf
    if math.isnan(err1):
        err1 = math.inf
    if math.isnan(err2):
        err2 = math.inf
    return err1, err2, min(err1, err2), region, EvalStatus.Ok


def verification_record(x, m, tau, config: NumericConfig = DEFAULT_CONFIG):
    """Full per-point record: Wronskian plus (for m >= 1) recurrence errors."""
    rec = VerificationRecord(x=x, tau=tau, m=m)
    rec.err_wronskian, rec.region, rec.status = wronskian_error(x, m, tau, config)
    if m >= 1:
        rec.err_rec1, rec.err_rec2, rec.err_min, _, status = \
            recurrence_errors(x, m, tau, config)
        rec.status = max(rec.status, status)
    return rec


def oracle_row_error(row, threshold, config: NumericConfig = DEFAULT_CONFIG):
    """Worst deviation of production values from one frozen grid row.

    Value columns are compared directly; derivative columns carry a
    looser tolerance, so their errors are rescaled by threshold/1e-6 to
    make a single err > threshold test mark a failing row.
    """
    if len(row) == 7:
        x, m, tau, *ref = row
        results = conicpr(x, m, tau, config)
        region = results[2].region
    else:
        x, m, tau, *ref = row
        results = conicp(x, m, tau, config)
        region = results[0].region
    status = EvalStatus(max(int(r.status) for r in results))
    err = 0.0
    for i, (res, want) in enumerate(zip(results, ref)):
        e = rel_err(res.value, want)
        if i % 2 == 1:
            e *= threshold / DERIV_TOL
        err = max(err, e)
    return err, region, status


@dataclass
class SweepSummary:
    total: int
    over: int
    max_err: float

    @property
    def fraction(self) -> float:
        return self.over / self.total if self.total else 0.0


def run_sweep(args, config: NumericConfig = DEFAULT_CONFIG):
    """Evaluate the suite over its point set; returns (csv_rows, summary)."""
    rows = []
    over = 0
    max_err = 0.0
    if args.suite == "oracle":
        points = [row for row in refdata.load_quad_grid() + refdata.load_ferrers_grid()
                  if args.xmin <= row[0] <= args.xmax
                  and args.mmin <= row[1] <= args.mmax
                  and args.taumin <= row[2] <= args.taumax]
        points = points[:args.samples]
        outcomes = (oracle_row_error(row, args.threshold, config) for row in points)
        located = ((row[0], row[1], row[2]) for row in points)
    else:
        points = sample_box(args.samples, args.seed, args.xmin, args.xmax,
                            args.taumin, args.taumax, args.mmin, args.mmax)
        if args.suite == "wronskian":
            outcomes = (wronskian_error(x, m, tau, config) for x, m, tau in points)
        else:
            outcomes = (recurrence_errors(x, m, tau, config)[2:]
                        for x, m, tau in points)
        located = iter(points)
    for (x, m, tau), (err, region, status) in zip(located, outcomes):
        max_err = max(max_err, err)
        if err > args.threshold:
            over += 1
            rows.append(f"{x:.17g},{tau:.17g},{m},{err:.17g},"
                        f"{region.value},{int(status)}")
    return rows, SweepSummary(len(points), over, max_err)


def write_csv(args, rows):
    header = [
        f"# conical {args.command}: suite={args.suite} seed={args.seed}"
        f" samples={args.samples}"
        f" box=x[{args.xmin:.17g},{args.xmax:.17g}]"
        f" tau[{args.taumin:.17g},{args.taumax:.17g}]"
        f" m[{args.mmin},{args.mmax}]"
        f" threshold={args.threshold:.17g}",
    ]
    if args.suite == "oracle":
        header.append("# err = max(value err, deriv err * threshold/1e-06)"
                      " against the frozen reference grids")
    header.append("x,tau,m,err,region,status")
    text = "\n".join(header + rows) + "\n"
    if args.out:
        with open(args.out, "w", newline="\n", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def print_summary(args, summary, budget=None):
    # keep the CSV stream clean when it goes to stdout
    stream = sys.stdout if args.out else sys.stderr
    print(f"suite={args.suite}: max err {summary.max_err:.3e}; "
          f"{summary.over} of {summary.total} over threshold "
          f"{args.threshold:.3g} (fraction {summary.fraction:.6f})",
          file=stream)
    if budget is not None:
        verdict = "pass" if summary.fraction <= budget else "FAIL"
        print(f"budget {budget:.3g}: {verdict}", file=stream)


def cmd_verify(args) -> int:
    rows, summary = run_sweep(args)
    write_csv(args, rows)
    budget = args.budget if args.budget is not None else SUITE_BUDGET[args.suite]
    print_summary(args, summary, budget)
    if summary.total == 0:
        print("no points in box; nothing verified", file=sys.stderr)
        return 1
    return 0 if summary.fraction <= budget else 1


def cmd_map(args) -> int:
    rows, summary = run_sweep(args)
    write_csv(args, rows)
    print_summary(args, summary)
    return 0


def cmd_eval(args) -> int:
    worst = EvalStatus.Ok
    for name, evaluate in (("P", conicp), ("R", conicr)):
        if args.function not in (name.lower(), "both"):
            continue
        value, deriv = evaluate(args.x, args.m, args.tau)
        shown = [(name, value)]
        if args.deriv:
            shown.append((f"d{name}/dx", deriv))
        for label, res in shown:
            print(f"{label}(x={args.x!r}, m={args.m}, tau={args.tau!r})"
                  f" = {res.value:.16e}  est {res.est_rel_err:.1e}"
                  f"  region {res.region.value}"
                  f"  status {int(res.status)} ({res.status.name})")
            worst = max(worst, res.status)
    return int(worst)


def cmd_fixture(args) -> int:
    try:
        if args.path:
            with open(args.path, encoding="utf-8") as fh:
                text = fh.read()
        else:
            text = refdata.read_data_text(refdata.FIXTURE_NAME)
        rows = refdata.load_fixture(text)
    except (OSError, ValueError) as exc:
        print(f"fixture parse failure: {exc}")
        return 3
    failures = 0
    for i, (x, m, tau, *ref) in enumerate(rows, 1):
        results = conicpr(x, m, tau)
        status = max(int(r.status) for r in results)
        worst = max(rel_err(r.value, want) for r, want in zip(results, ref))
        ok = status == 0 and worst <= FIXTURE_TOL
        failures += not ok
        print(f"line {i}: x={x!r} m={m} tau={tau!r}"
              f" max rel err {worst:.3e} {'pass' if ok else 'FAIL'}")
    print(f"{len(rows) - failures}/{len(rows)} lines pass")
    return 0 if failures == 0 else 1


def add_sweep_flags(sp, with_budget):
    sp.add_argument("suite", choices=("wronskian", "recurrence", "oracle"))
    sp.add_argument("--samples", type=int, default=10000,
                    help="points to draw (oracle suite: row cap)")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--threshold", type=float, default=None,
                    help="failure threshold (default per suite)")
    if with_budget:
        sp.add_argument("--budget", type=float, default=None,
                        help="largest acceptable failing fraction"
                             " (default per suite)")
    sp.add_argument("--out", default=None,
                    help="CSV path (default: stdout, summary on stderr)")
    for flag in ("xmin", "xmax", "taumin", "taumax"):
        sp.add_argument(f"--{flag}", type=float, default=None)
    for flag in ("mmin", "mmax"):
        sp.add_argument(f"--{flag}", type=int, default=None)


def fill_suite_defaults(args) -> str | None:
    """Resolve per-suite defaults; returns an error message or None."""
    for name, value in zip(("xmin", "xmax", "taumin", "taumax", "mmin", "mmax"),
                           SUITE_BOX[args.suite]):
        if getattr(args, name) is None:
            setattr(args, name, value)
    if args.threshold is None:
        args.threshold = SUITE_THRESHOLD[args.suite]
    if args.suite == "recurrence":
        args.mmin = max(args.mmin, 1)
    if args.samples <= 0:
        return "samples must be positive"
    if args.threshold <= 0:
        return "threshold must be positive"
    if not args.xmin <= args.xmax or not args.taumin <= args.taumax \
            or not args.mmin <= args.mmax:
        return "empty box: need xmin <= xmax, taumin <= taumax, mmin <= mmax"
    if args.taumin < 0:
        return "tau must be nonnegative"
    if args.suite in ("wronskian", "recurrence") and args.xmin <= 1.0:
        return "this suite needs x > 1"
    if args.xmin <= -1.0:
        return "x must exceed -1"
    return None


def build_parser():
    parser = argparse.ArgumentParser(
        prog="conical",
        description="Evaluate and verify the conical functions P and R.")
    sub = parser.add_subparsers(dest="command", required=True)

    ev = sub.add_parser("eval", help="evaluate one point")
    ev.add_argument("--x", type=float, required=True)
    ev.add_argument("--m", type=int, required=True)
    ev.add_argument("--tau", type=float, required=True)
    ev.add_argument("--function", choices=("p", "r", "both"), default="both")
    ev.add_argument("--deriv", action="store_true",
                    help="also print the x derivatives")
    ev.set_defaults(run=cmd_eval)

    vf = sub.add_parser("verify", help="sweep a test suite against its budget")
    add_sweep_flags(vf, with_budget=True)
    vf.set_defaults(run=cmd_verify)

    mp_ = sub.add_parser("map", help="write the failure map of a test suite")
    add_sweep_flags(mp_, with_budget=False)
    mp_.set_defaults(run=cmd_map)

    fx = sub.add_parser("fixture", help="recompute a reference fixture file")
    fx.add_argument("path", nargs="?", default=None,
                    help="fixture path (default: the shipped 20-line file)")
    fx.set_defaults(run=cmd_fixture)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if hasattr(args, "suite"):
        problem = fill_suite_defaults(args)
        if problem:
            parser.error(problem)
    return args.run(args)


if __name__ == "__main__":
    sys.exit(main())
