"""Command line front end.

Subcommands: validate, analyze, enumerate, suite.  Exit status contract:
0 success, 1 mathematical failure (violations, counterexamples, unmet
mathematical preconditions), 2 unreadable or malformed input.
"""

import argparse
import json
import sys
from dataclasses import asdict, is_dataclass

from . import search
from .core import FiniteSolution, invert, properties, validate_braid
from .diagonals import check_diagonal_identities, check_diagonal_theorems, diagonal_maps
from .documents import load_document, save_document, solution_to_document
from .errors import DomainError, InputError
from .omega import check_omega_identities, check_star_conditions, is_k_permutational, is_k_reductive
from .orbits import is_decomposable, orbit_decomposition
from .qcycle import from_solution, is_regular, qcycle_diagonals, to_solution, validate_qcycle
from .retract import mpl, mpl_prime, retract, retract_relation
from .search import EnumFilter, census, check_frozen_census, enumerate_solutions
from .suite import theorem_suite

EXIT_OK = 0
EXIT_MATH = 1
EXIT_INPUT = 2


def _jsonable(obj):
    if isinstance(obj, FiniteSolution):
        return {"sigma": _jsonable(obj.sigma), "tau": _jsonable(obj.tau)}
    if is_dataclass(obj) and not isinstance(obj, type):
        return _jsonable(asdict(obj))
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set)):
        return [_jsonable(v) for v in obj]
    return obj


def _emit(report, as_json):
    if as_json:
        print(json.dumps(_jsonable(report), indent=1, sort_keys=True))
    else:
        for key, value in report.items():
            print(f"{key}: {value}")


def _filter_from_args(args):
    return EnumFilter(
        require_left_nd=args.left_nd,
        require_right_nd=args.right_nd,
        require_nd=args.nd,
        require_bijective=args.bijective,
        require_involutive=args.involutive,
        require_square_free=args.square_free,
        up_to_iso=args.iso,
    )


def cmd_validate(args):
    kind, obj, labels = load_document(args.path)
    report = {"kind": kind, "n": obj.n}
    if labels:
        report["labels"] = list(labels)
    if kind == "solution":
        violations = validate_braid(obj)
        if violations:
            report["braid_violations"] = violations
            _emit(report, args.json)
            return EXIT_MATH
        report.update(properties(obj).as_dict())
        _emit(report, args.json)
        return EXIT_OK
    violations = validate_qcycle(obj)
    if violations:
        report["axiom_violations"] = violations
        _emit(report, args.json)
        return EXIT_MATH
    report["regular"] = is_regular(obj)
    _emit(report, args.json)
    return EXIT_OK


def cmd_analyze(args):
    kind, obj, labels = load_document(args.path)
    if kind == "qcycle":
        obj = to_solution(obj)
    sol = obj
    report = {"n": sol.n}
    if labels:
        report["labels"] = list(labels)
    report["properties"] = properties(sol).as_dict()
    if args.diag:
        d = diagonal_maps(sol)
        report["diagonals"] = {
            "U": d.U, "T": d.T, "U_hat": d.U_hat, "T_hat": d.T_hat,
        }
        if d.U is not None and d.T is not None:
            report["diagonal_identities"] = check_diagonal_identities(sol)
            report["diagonal_theorems"] = check_diagonal_theorems(sol)
    if args.retract:
        res = retract(sol)
        report["retract"] = {
            "blocks": retract_relation(sol, "forward").blocks(),
            "quotient_n": res.quotient.n,
            "quotient": res.quotient,
            "projection": res.projection,
        }
    if args.mpl:
        report["mpl"] = mpl(sol)
    if args.mpl_prime:
        report["mpl_prime"] = mpl_prime(sol)
    if args.kperm:
        levels = {}
        for k in range(0, args.max_k + 1):
            ok, witness = is_k_permutational(sol, k, seed=args.seed)
            levels[k] = {"holds": ok, "witness": witness}
        report["k_permutational"] = levels
    if args.kred:
        levels = {}
        for k in range(1, args.max_k + 1):
            ok, witness = is_k_reductive(sol, k, seed=args.seed)
            levels[k] = {"holds": ok, "witness": witness}
        report["k_reductive"] = levels
    if args.star:
        ok, sigma_fixers, tau_fixers = check_star_conditions(sol)
        report["star_conditions"] = {
            "holds": ok, "sigma_fixers": sigma_fixers, "tau_fixers": tau_fixers,
        }
    if args.omega_identities:
        report["omega_identities"] = check_omega_identities(sol, args.max_k, seed=args.seed)
    if args.qcycle:
        q = from_solution(sol)
        U, U_hat, commute_failures = qcycle_diagonals(q)
        report["qcycle"] = {
            "dot": q.dot,
            "colon": q.colon,
            "regular": is_regular(q),
            "diagonal": U,
            "diagonal_hat": U_hat,
            "diagonals_commute": not commute_failures,
            "round_trip_ok": to_solution(q) == sol,
        }
    if args.orbits:
        decomp = orbit_decomposition(sol)
        report["orbits"] = {
            "blocks": decomp.partition.blocks(),
            "decomposable": is_decomposable(sol),
        }
    if args.invert:
        report["inverse"] = invert(sol)
    _emit(report, args.json)
    return EXIT_OK


def cmd_enumerate(args):
    filt = _filter_from_args(args)
    if args.census or args.check_frozen:
        result = census(args.n, filt, workers=args.workers)
        report = {
            "n": args.n,
            "filter": filt.signature(),
            "raw": result.raw,
            "iso": result.iso,
        }
        status = EXIT_OK
        if args.check_frozen:
            mismatch = check_frozen_census(args.n, filt, result)
            frozen = search.load_frozen_census()
            if (args.n, filt.signature()) not in frozen:
                report["frozen"] = "cell not frozen"
            elif mismatch is None:
                report["frozen"] = "match"
            else:
                report["frozen"] = (
                    f"MISMATCH expected raw={mismatch['expected'].raw} "
                    f"iso={mismatch['expected'].iso}"
                )
                status = EXIT_MATH
        _emit(report, args.json)
        if args.out is None:
            return status
    else:
        status = EXIT_OK
    if args.out is not None:
        import os

        os.makedirs(args.out, exist_ok=True)
        count = 0
        for i, sol in enumerate(enumerate_solutions(args.n, filt, workers=args.workers)):
            save_document(
                os.path.join(args.out, f"sol_{i:06d}.json"), solution_to_document(sol)
            )
            count += 1
        print(f"wrote {count} documents to {args.out}")
    elif not (args.census or args.check_frozen):
        count = 0
        for sol in enumerate_solutions(args.n, filt, workers=args.workers):
            print(json.dumps(_jsonable(solution_to_document(sol))))
            count += 1
        print(f"# {count} solutions", file=sys.stderr)
    return status


def cmd_suite(args):
    report = theorem_suite(args.n_max, seed=args.seed, workers=args.workers)
    if args.json:
        payload = {
            "n_max": report.n_max,
            "populations": report.populations,
            "entries": report.entries,
            "observations": report.observations,
            "elapsed_seconds": report.elapsed,
            "counterexamples": report.counterexamples(),
        }
        print(json.dumps(_jsonable(payload), indent=1, sort_keys=True))
    else:
        for n, info in sorted(report.populations.items()):
            print(f"population n={n} filter={info['filter']}: {info['count']} solutions")
        for line in report.lines():
            print(line)
        print(f"elapsed: {report.elapsed:.2f}s")
        print(f"counterexamples: {report.counterexamples()}")
    return EXIT_OK if report.ok() else EXIT_MATH


def build_parser():
    parser = argparse.ArgumentParser(
        prog="yangbaxter",
        description="validate, analyze and enumerate finite Yang-Baxter solutions",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check the braid relation / q-cycle axioms of a document")
    p.add_argument("path")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("analyze", help="full property analysis of a document")
    p.add_argument("path")
    p.add_argument("--json", action="store_true")
    p.add_argument("--diag", action="store_true", help="diagonal maps and their identities")
    p.add_argument("--retract", action="store_true", help="forward relation and quotient")
    p.add_argument("--mpl", action="store_true", help="multipermutation level")
    p.add_argument("--mpl-prime", dest="mpl_prime", action="store_true",
                   help="level at which the retract tower becomes trivial")
    p.add_argument("--kperm", action="store_true", help="permutational levels up to --max-k")
    p.add_argument("--kred", action="store_true", help="reductivity levels up to --max-k")
    p.add_argument("--star", action="store_true", help="fixed-point star conditions")
    p.add_argument("--omega-identities", action="store_true",
                   help="tower rewriting identities up to height --max-k")
    p.add_argument("--qcycle", action="store_true", help="q-cycle translation and round trip")
    p.add_argument("--orbits", action="store_true", help="orbit decomposition")
    p.add_argument("--invert", action="store_true", help="inverse solution tables")
    p.add_argument("--max-k", dest="max_k", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("enumerate", help="stream, count or dump all solutions of size n")
    p.add_argument("n", type=int)
    p.add_argument("--json", action="store_true")
    p.add_argument("--nd", action="store_true")
    p.add_argument("--left-nd", dest="left_nd", action="store_true")
    p.add_argument("--right-nd", dest="right_nd", action="store_true")
    p.add_argument("--bijective", action="store_true")
    p.add_argument("--involutive", action="store_true")
    p.add_argument("--square-free", dest="square_free", action="store_true")
    p.add_argument("--iso", action="store_true", help="one representative per isomorphism class")
    p.add_argument("--census", action="store_true", help="print raw and iso counts only")
    p.add_argument("--check-frozen", dest="check_frozen", action="store_true",
                   help="compare against the shipped frozen census")
    p.add_argument("--out", default=None, help="write one JSON document per solution")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("suite", help="verify all theorems over complete populations")
    p.add_argument("--n-max", dest="n_max", type=int, default=2)
    p.add_argument("--json", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_suite)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except DomainError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        if exc.witness is not None:
            print(f"witness: {exc.witness}", file=sys.stderr)
        return EXIT_MATH


if __name__ == "__main__":
    sys.exit(main())
