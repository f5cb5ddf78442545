"""Command-line entry point: ``atomforge <command> ...``.

Every command builds a report ``{command, argv, descriptor, results,
certificates, verification, wall_time}``.  The verification block comes from
replaying the report itself, so ``verify`` on untampered output always agrees.

Exit codes: 0 success, 1 certificate failure, 2 invalid input,
3 factorization overflow.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import transcript as tr
from .atoms import atom_census
from .divgroup import census_grid, theorem419_census
from .errors import (
    AtomforgeError,
    BudgetExceeded,
    FactorizationOverflow,
    InvalidInput,
    OutsideSoundnessWindow,
)
from .euclid import EuclidState, PollackState, euclid_run, pollack_run, polyvalue_run
from .intfactor import DEFAULT, IntegerFactorizer
from .radical import condition_e_panel, jacobson_radical
from .rings import RingDescriptor
from .topo import maximal_ideal_closed_check, periodic_char_check

EXIT_OK, EXIT_CERT, EXIT_INPUT, EXIT_OVERFLOW = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # keep argparse's exit code 2 but route through one place
        self.print_usage(sys.stderr)
        raise SystemExit(f"{self.prog}: error: {message}") from None


def _int_list(text: str) -> list[int]:
    try:
        return [int(s) for s in text.replace(" ", "").split(",") if s]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from exc


def _positive(text: str) -> int:
    try:
        n = int(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from exc
    if n < 1:
        raise argparse.ArgumentTypeError(f"{text!r} must be positive")
    return n


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print the JSON report")
    common.add_argument("-o", "--output", type=Path, help="also write the JSON report to a file")

    p = _Parser(prog="atomforge", description="Irreducibles, atoms and certificates in small domains.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("euclid", parents=[common], help="pairwise comaximal irreducibles")
    s.add_argument("--ring", default="z", help="z | gauss | poly-fq:<q>")
    s.add_argument("--count", type=_positive, default=5)
    s.add_argument("--strict-factoring", action="store_true", help="no ECM, no primality proofs past 2^64")

    s = sub.add_parser("pollack", parents=[common], help="primes avoiding a subgroup mod N")
    s.add_argument("--modulus", type=int, required=True)
    s.add_argument("--subgroup", type=_int_list, required=True)
    s.add_argument("--count", type=_positive, default=5)
    s.add_argument("--strict-factoring", action="store_true")

    s = sub.add_parser("polyprimes", parents=[common], help="new primes dividing polynomial values")
    s.add_argument("--poly", type=_int_list, required=True, help="coefficients, constant first")
    s.add_argument("--count", type=_positive, default=3)
    s.add_argument("--strict-factoring", action="store_true")

    s = sub.add_parser("atoms", parents=[common], help="atom census of a truncated ring")
    s.add_argument("--ring", required=True, help="trunc:q:d:e[:N]")
    s.add_argument("--stability", action="store_true", help="recompute at N+1 and compare")
    s.add_argument("--workers", type=_positive, default=1)

    s = sub.add_parser("radical", parents=[common], help="Jacobson radical / Condition (E)")
    s.add_argument("--ring", required=True)
    s.add_argument("--panel", help="comma-separated elements for infinite rings")

    topo = sub.add_parser("topo", help="finite-window topology checks")
    tsub = topo.add_subparsers(dest="topo_command", required=True)
    s = tsub.add_parser("periodicity", parents=[common])
    s.add_argument("--primes", type=_int_list, required=True)
    s.add_argument("--radius", type=_positive, required=True)
    s = tsub.add_parser("golomb", parents=[common])
    s.add_argument("--prime", type=int, required=True)
    s.add_argument("--radius", type=_positive, required=True)

    s = sub.add_parser("divgroup", parents=[common], help="group-of-divisibility census")
    s.add_argument("--alpha", type=int)
    s.add_argument("--beta", type=int)
    s.add_argument("--gamma", type=int)
    s.add_argument("--grid", type=_positive, help="all triples up to this bound")

    s = sub.add_parser("verify", help="replay a JSON report")
    s.add_argument("file", type=Path)
    s.add_argument("--json", action="store_true")
    return p


def _factorizer(args) -> IntegerFactorizer:
    return IntegerFactorizer(extended=False) if getattr(args, "strict_factoring", False) else DEFAULT


def _run(args) -> tuple[str, str, dict, list, str]:
    """Return ``(command, descriptor, results, certificates, summary)``."""
    cmd = args.command
    if cmd == "euclid":
        ring = RingDescriptor.parse(args.ring)
        state = euclid_run(ring, args.count, _factorizer(args))
        res, certs = tr.euclid_results(state)
        return cmd, str(ring), res, certs, "irreducibles: " + ", ".join(res["irreducibles"])
    if cmd == "pollack":
        state = pollack_run(args.modulus, args.subgroup, args.count, _factorizer(args))
        res, certs = tr.pollack_results(state)
        desc = f"N={args.modulus} H={res['subgroup']}"
        return cmd, desc, res, certs, f"alpha={state.alpha} beta={state.beta} primes: {list(state.chosen)}"
    if cmd == "polyprimes":
        runs = polyvalue_run(args.poly, args.count, _factorizer(args))
        res, certs = tr.polyprimes_results(args.poly, runs)
        lines = [f"p={r.prime} divides f({r.n}) = {r.value}" for r in runs]
        return cmd, f"poly {args.poly}", res, certs, "\n".join(lines)
    if cmd == "atoms":
        ring = RingDescriptor.parse(args.ring)
        census = atom_census(ring, stability=args.stability, workers=args.workers)
        res, certs = tr.atoms_results(census)
        reps = ", ".join(f"{r} (x{s})" for r, s in census.orbits)
        summary = f"observed {census.observed}, predicted {census.predicted}"
        if census.truncation_stable is not None:
            summary += f", stable at N+1: {census.truncation_stable}"
        return cmd, str(ring), res, certs, summary + "\norbits: " + reps
    if cmd == "radical":
        ring = RingDescriptor.parse(args.ring)
        if ring.kind == "trunc":
            if args.panel:
                raise InvalidInput("--panel applies only to infinite rings")
            report = jacobson_radical(ring)
            summary = (
                f"|J(R)| = {report.radical_size}, equals nonunits: {report.equals_nonunits}, "
                f"condition (E): {report.condition_e_holds} (witness {report.witness})"
            )
        else:
            if not args.panel:
                raise InvalidInput("infinite rings need --panel")
            panel = [ring.parse_element(s) for s in args.panel.split(",")]
            report = condition_e_panel(ring, panel)
            summary = "; ".join(f"x={w.x}: y={w.y}, y*x+1={w.value}" for w in report.panel)
            summary = f"condition (E): {report.condition_e_holds}\n{summary}"
        res, certs = tr.radical_results(report)
        return cmd, str(ring), res, certs, summary
    if cmd == "topo":
        if args.topo_command == "periodicity":
            report = periodic_char_check(args.primes, args.radius)
            res, certs = tr.periodicity_results(report)
            summary = (
                f"period {report.period}, window {report.window}: periodic {report.verified}, "
                f"coset check {report.coset_check}, {len(report.external_primes)} external primes"
            )
            return "topo-periodicity", f"primes {args.primes}", res, certs, summary
        report = maximal_ideal_closed_check(args.prime, args.radius)
        res, certs = tr.golomb_results(report)
        summary = f"{len(report.neighborhoods)} neighborhoods verified: {report.verified}"
        return "topo-golomb", f"prime {args.prime}", res, certs, summary
    if cmd == "divgroup":
        if args.grid:
            reports = census_grid(args.grid)
            desc = f"grid {args.grid}"
        else:
            if None in (args.alpha, args.beta, args.gamma):
                raise InvalidInput("give --alpha, --beta and --gamma, or --grid")
            reports = [theorem419_census(args.alpha, args.beta, args.gamma)]
            desc = f"alpha={args.alpha} beta={args.beta} gamma={args.gamma}"
        res, certs = tr.divgroup_results(reports)
        lines = [
            f"({r.alpha},{r.beta},{r.gamma}) {r.spec}: atoms {r.atoms}, maximals {r.maximal_ideals}, "
            f"primes {r.nonzero_primes}, atomic {r.atomic}, furstenberg {r.furstenberg}, ok {r.ok}"
            for r in reports
        ]
        return cmd, desc, res, certs, "\n".join(lines)
    raise InvalidInput(f"unknown command {cmd!r}")


def _partial_results(state):
    if isinstance(state, EuclidState):
        return tr.euclid_results(state)
    if isinstance(state, PollackState):
        return tr.pollack_results(state)
    return None


def _verification(report: dict) -> tuple[dict, list]:
    checks = tr.replay(report)
    failed = [label for label, ok in checks if not ok]
    return {"checked": len(checks), "failed": len(failed)}, failed


def dumps(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2)


def _emit(report: dict, args, summary: str) -> None:
    text = dumps(report)
    if getattr(args, "output", None):
        args.output.write_text(text + "\n")
    if args.json:
        print(text)
    else:
        print(f"{report['command']} [{report['descriptor']}]")
        if summary:
            print(summary)
        v = report["verification"]
        print(f"verification: {v['checked']} checked, {v['failed']} failed")


def _verify_file(args) -> int:
    try:
        report = json.loads(args.file.read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise InvalidInput(f"cannot read report {args.file}: {exc}") from exc
    if not isinstance(report, dict):
        raise InvalidInput("report must be a JSON object")
    verification, failed = _verification(report)
    if args.json:
        print(dumps({"command": "verify", "file": str(args.file), "verification": verification, "failures": failed}))
    else:
        for label in failed:
            print(f"FAILED: {label}")
        print(f"verification: {verification['checked']} checked, {verification['failed']} failed")
    return EXIT_CERT if failed else EXIT_OK


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        if isinstance(exc.code, str):
            print(exc.code, file=sys.stderr)
            return EXIT_INPUT
        return EXIT_OK if exc.code in (0, None) else EXIT_INPUT
    try:
        if args.command == "verify":
            return _verify_file(args)
        start = time.perf_counter()
        command, desc, results, certs, summary = _run(args)
        report = {
            "command": command,
            "argv": argv,
            "descriptor": desc,
            "results": results,
            "certificates": certs,
        }
        report["verification"], failed = _verification(report)
        report["wall_time"] = round(time.perf_counter() - start, 6)
        _emit(report, args, summary)
        for label in failed:
            print(f"FAILED: {label}", file=sys.stderr)
        return EXIT_CERT if failed else EXIT_OK
    except FactorizationOverflow as exc:
        print(f"error: factorization overflow: {exc}", file=sys.stderr)
        partial = _partial_results(exc.state)
        if partial is not None and args.json:
            # the certificates gathered before the overflow stay usable
            print(dumps({"command": args.command, "argv": argv, "partial": True,
                         "results": partial[0], "certificates": partial[1]}))
        return EXIT_OVERFLOW
    except (InvalidInput, BudgetExceeded, OutsideSoundnessWindow) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except AtomforgeError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_CERT


if __name__ == "__main__":
    sys.exit(main())
