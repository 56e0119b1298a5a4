"""Command-line front end.

    persym census   --n 5 --k 3 [--threads 8] [--force] [--format json|csv]
    persym verify   --n 3 --kmax 7
    persym formula  --n 5 --i 3 --k 10
    persym polycount --n 1 --k 2 --q 2
    persym derive

JSON/CSV goes to stdout, diagnostics to stderr.  Exit status is 0 only when
every executed check passes; 2 means the run was refused (size guard or bad
arguments).
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
import time

from persym.census import InfeasibleCensus, RankHistogram, census
from persym.derive import AXIOMS, DerivationError, assemble_gamma, derive_theorem
from persym.formulas import N4_POLYS, N5_POLYS, closed_form, gamma_n5, general_poly
from persym.moments import all_checks, predict_R, rank_identity_rhs
from persym.polysys import count_solutions
from persym.report import Check, RunReport, exact

log = logging.getLogger("persym")


def _moment_checks(h: RankHistogram) -> list[Check]:
    return [Check.of(f"moment_{r.name}", r.lhs, r.rhs, h.n, h.k) for r in all_checks(h)]


def census_checks(h: RankHistogram) -> tuple[list[Check], list[Check]]:
    """Checks that must hold for a census, plus informational threshold probes.

    A formula is checked where its stated threshold is met; below threshold
    its agreement with the census is recorded as a finding only.
    """
    n, k = h.n, h.k
    checks = [Check.of("zero_rank_count", h.counts[0], 1, n, k)]
    checks += _moment_checks(h)
    if k >= 2:
        checks.append(Check.of("rank1_count", h.counts[1], 3 * (2**n - 1), n, k))
    findings = []
    for i, c in enumerate(h.counts):
        fv = closed_form(n, i, k)
        if fv is None:
            continue
        entry = Check.of(f"formula_rank{i}", c, fv.value, n, k)
        (checks if fv.valid else findings).append(entry)
    return checks, findings


def cmd_census(n: int, k: int, workers: int, force: bool = False) -> RunReport:
    t0 = time.perf_counter()
    h = census(n, k, workers=workers, force=force)
    checks, findings = census_checks(h)
    report = RunReport(
        command=["census", f"--n={n}", f"--k={k}"],
        shape={"n": n, "k": k},
        results={"counts": [exact(c) for c in h.counts], "total": exact(h.total)},
        checks=checks,
        findings=findings,
        workers=workers,
    )
    report.elapsed_ms = int((time.perf_counter() - t0) * 1000)
    return report


def cmd_verify(n: int, k_max: int, workers: int, force: bool = False) -> RunReport:
    t0 = time.perf_counter()
    report = RunReport(command=["verify", f"--n={n}", f"--kmax={k_max}"], shape={"n": n, "kmax": k_max}, workers=workers)
    for k in range(1, k_max + 1):
        log.info("census n=%d k=%d", n, k)
        h = census(n, k, workers=workers, force=force)
        checks, findings = census_checks(h)
        report.results[f"k={k}"] = [exact(c) for c in h.counts]
        report.checks.extend(checks)
        report.findings.extend(findings)
    report.elapsed_ms = int((time.perf_counter() - t0) * 1000)
    return report


def cmd_formula(n: int, i: int, k: int) -> RunReport:
    t0 = time.perf_counter()
    fv = closed_form(n, i, k)
    if fv is None:
        raise ValueError(f"no closed form for n={n}, rank {i}")
    if n == 5:
        poly = N5_POLYS[i]
    elif n == 4:
        poly = N4_POLYS[i]
    else:
        poly = general_poly(n, i)
    report = RunReport(
        command=["formula", f"--n={n}", f"--i={i}", f"--k={k}"],
        shape={"n": n, "i": i, "k": k},
        results={
            "value": exact(fv.value),
            "valid": fv.valid,
            "source": fv.source,
            "polynomial": poly.pretty(),
        },
    )
    report.elapsed_ms = int((time.perf_counter() - t0) * 1000)
    return report


def cmd_polycount(n: int, k: int, q: int, workers: int = 1, force: bool = False) -> RunReport:
    t0 = time.perf_counter()
    direct = count_solutions(n, k, q)
    predicted = predict_R(census(n, k, workers=workers, force=force), q)
    checks = [Check.of("direct_vs_census", direct, predicted, n, k)]
    if q == 1:
        checks.append(Check.of("closed_form_q1", direct, rank_identity_rhs(n, k), n, k))
    report = RunReport(
        command=["polycount", f"--n={n}", f"--k={k}", f"--q={q}"],
        shape={"n": n, "k": k, "q": q},
        results={"solutions": exact(direct), "predicted_from_census": exact(predicted)},
        checks=checks,
        workers=workers,
    )
    report.elapsed_ms = int((time.perf_counter() - t0) * 1000)
    return report


def _system_text(s) -> list[str]:
    lines = []
    for row, rhs in zip(s.matrix, s.rhs):
        lhs = " + ".join(f"{exact(a)}*{u}" for a, u in zip(row, s.unknowns))
        lines.append(f"{lhs} = {exact(rhs)}")
    return lines


def cmd_derive() -> RunReport:
    t0 = time.perf_counter()
    table = derive_theorem()
    checks = [Check.of(f"printed: {c.name}", c.derived, c.printed) for c in table.printed_checks]
    checks += [Check.of(f"balance: {name}", r, 0) for name, r in table.balance_residuals]
    try:
        polys = assemble_gamma(table)
        assembled = True
    except DerivationError as exc:
        log.error("%s", exc)
        polys = ()
        assembled = False
    checks.append(Check.of("assembled_matches_closed_forms", int(assembled), 1))
    if assembled:
        for i, p in enumerate(polys):
            for k in range(1, 31):
                v = p(2**k)
                if v != gamma_n5(i, k).value:
                    checks.append(Check.of(f"assembled_rank{i}_k{k}", v, gamma_n5(i, k).value))
        for i, ks in ((6, [5]), (7, [5, 6]), (8, [5, 6, 7]), (9, [5, 6, 7, 8]), (10, [5, 6, 7, 8, 9])):
            for k in ks:
                checks.append(Check.of(f"vanishing_rank{i}_k{k}", polys[i](2**k), 0))
    report = RunReport(
        command=["derive"],
        shape={"n": 5},
        results={
            "axioms": list(AXIOMS),
            "coefficients": {name: exact(v) for name, v in table.coefficients().items()},
            "systems": [{"step": s.step, "equations": _system_text(s)} for s in table.systems],
            "gamma": [p.pretty() for p in polys],
        },
        checks=checks,
    )
    report.elapsed_ms = int((time.perf_counter() - t0) * 1000)
    return report


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="persym", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, census_opts=True):
        p.add_argument("--format", choices=("json", "csv"), default="json")
        if census_opts:
            p.add_argument("--threads", type=int, default=os.cpu_count() or 1)
            p.add_argument("--force", action="store_true", help="allow n(k+1) > 40")

    p = sub.add_parser("census", help="exhaustive rank histogram")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    common(p)

    p = sub.add_parser("verify", help="census for k = 1..kmax with every applicable check")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--kmax", type=int, required=True)
    common(p)

    p = sub.add_parser("formula", help="evaluate a closed-form count")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    common(p, census_opts=False)

    p = sub.add_parser("polycount", help="count solutions of the q-fold system directly")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    common(p)

    p = sub.add_parser("derive", help="re-derive the five-block coefficients")
    common(p, census_opts=False)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO, format="%(name)s: %(message)s", stream=sys.stderr)
    try:
        if args.command == "census":
            report = cmd_census(args.n, args.k, args.threads, args.force)
        elif args.command == "verify":
            report = cmd_verify(args.n, args.kmax, args.threads, args.force)
        elif args.command == "formula":
            report = cmd_formula(args.n, args.i, args.k)
        elif args.command == "polycount":
            report = cmd_polycount(args.n, args.k, args.q, args.threads, args.force)
        else:
            report = cmd_derive()
    except (InfeasibleCensus, ValueError) as exc:
        log.error("%s", exc)
        return 2
    out = report.to_json() if args.format == "json" else report.to_csv()
    sys.stdout.write(out if out.endswith("\n") else out + "\n")
    for c in report.checks:
        if not c.passed:
            log.error("check failed: %s (lhs=%s, rhs=%s)", c.name, c.lhs, c.rhs)
    return 0 if report.ok else 1


if __name__ == "__main__":
    sys.exit(main())
