"""Command-line frontend.

Exit codes: 0 success, 1 a numerical check failed, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings

from . import __version__
from .errors import DomainError, GuardWarning, NumericalError, QZetaError
from .euler import euler_convergence_report, guard_quantities
from .graph import WeightAssignment, parse_graph, parse_weights
from .quaternion import Quaternion
from .sampling import random_connected_graph, random_quaternion, random_weights, trial_rngs
from .selftest import run_selftest
from .zeta import DEFAULT_TOL, check_identity, evaluate

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _fmt(x: float) -> str:
    return f"{x:.12g}"


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load(args):
    G = parse_graph(_read(args.graph))
    weights_path = getattr(args, "weights", None)
    w = parse_weights(_read(weights_path), G) if weights_path else WeightAssignment.unit(G)
    return G, w


def _parse_t(text: str) -> Quaternion:
    try:
        return Quaternion.parse(text)
    except (QZetaError, ValueError) as exc:
        raise UsageError(f"--t: {exc}") from None


def _emit(payload: dict):
    print(json.dumps(payload, indent=2))


def _payload(command, inputs, values, discrepancies=None, warnings_=None, seed=None):
    return {
        "command": command,
        "inputs": inputs,
        "values": values,
        "discrepancies": discrepancies or {},
        "warnings": warnings_ or [],
        "seed": seed,
    }


# commands -------------------------------------------------------------------

def cmd_info(args) -> int:
    G, _ = _load(args)
    values = {
        "n": G.n, "m": G.m, "r": G.betti, "tree": G.is_tree(),
        "degrees": G.degrees(),
        "arcs": [list(a) for a in G.arcs.arcs],
    }
    if args.json:
        _emit(_payload("info", {"graph": args.graph}, values))
        return EXIT_OK
    print(f"n={G.n} m={G.m} r={G.betti}" + (" tree" if G.is_tree() else ""))
    print("degrees: " + " ".join(str(d) for d in G.degrees()))
    print(f"arcs ({len(G.arcs)}):")
    for k, (u, v) in enumerate(G.arcs.arcs):
        print(f"  {k:4d}  ({u}, {v})  inverse {int(G.arcs.inverse[k])}")
    return EXIT_OK


def cmd_zeta(args) -> int:
    G, w = _load(args)
    t = _parse_t(args.t)
    methods = ("hashimoto", "bass") if args.method == "both" else (args.method,)
    report = evaluate(G, w, t, methods, args.tol)
    inputs = {"graph": args.graph, "weights": args.weights, "t": list(t.components),
              "method": args.method, "tol": args.tol}
    if args.json:
        values = dict(report.values, passed=report.passed)
        _emit(_payload("zeta", inputs, values, report.discrepancies,
                       report.warnings + [f"{k}: {v}" for k, v in report.errors.items()]))
    else:
        for name in methods:
            if name in report.values:
                print(f"{name}: {_fmt(report.values[name])}")
            else:
                print(f"{name}: error: {report.errors[name]}")
        for key, d in report.discrepancies.items():
            print(f"discrepancy {key}: {d:.3e} (tol {args.tol:g})")
        for msg in report.warnings:
            print(f"warning: {msg}")
    if any(msg.startswith("DomainError") for msg in report.errors.values()):
        if not args.json:
            print("error: " + "; ".join(report.errors.values()), file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_check(args) -> int:
    if args.trials < 1:
        raise UsageError("--trials must be at least 1")
    if args.tol <= 0:
        raise UsageError("--tol must be positive")
    if args.n_max < 1:
        raise UsageError("--n-max must be at least 1")
    if not 0 <= args.seed < 2**64:
        raise UsageError("--seed must be a 64-bit unsigned integer")
    fixed = _load(args)[0] if args.graph else None
    passed = trees = 0
    worst, worst_trial = 0.0, None
    failures = []
    for k, rng in enumerate(trial_rngs(args.seed, args.trials)):
        if fixed is None:
            n = int(rng.integers(min(3, args.n_max), args.n_max + 1))
            G = random_connected_graph(rng, n)
        else:
            G = fixed
        w = random_weights(rng, G)
        t = random_quaternion(rng, args.radius)
        report = check_identity(G, w, t, args.tol)
        trees += G.is_tree()
        d = report.discrepancies.get("hashimoto-bass")
        if d is not None and (worst_trial is None or d > worst):
            worst, worst_trial = d, k
        if report.passed:
            passed += 1
        else:
            failures.append(k)
    values = {
        "trials": args.trials, "passed": passed, "failed": args.trials - passed,
        "trees": trees, "failed_trials": failures,
    }
    discrepancies = {"worst": worst, "worst_trial": worst_trial}
    inputs = {"graph": args.graph, "trials": args.trials, "n_max": args.n_max,
              "radius": args.radius, "tol": args.tol}
    if args.json:
        _emit(_payload("check", inputs, values, discrepancies, seed=args.seed))
    else:
        print(f"{passed}/{args.trials} pass at tol {args.tol:g} (seed {args.seed})")
        print(f"worst discrepancy {worst:.3e} (trial {worst_trial}); trees {trees}")
        if failures:
            print("failed trials: " + " ".join(map(str, failures)))
    return EXIT_OK if passed == args.trials else EXIT_FAIL


def cmd_euler(args) -> int:
    if args.max_len < 1:
        raise UsageError("--max-len must be at least 1")
    G, w = _load(args)
    t = _parse_t(args.t)
    notes = []
    guard_value, guard_bound = guard_quantities(G, w, t)
    if guard_value >= guard_bound:
        notes.append("convergence not guaranteed (|t|·max|w̃| ≥ 1/(8m²))")
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", GuardWarning)
        rows, bass = euler_convergence_report(G, w, t, args.max_len, compare=args.compare)
    final = rows[-1].partial_product
    inputs = {"graph": args.graph, "weights": args.weights, "t": list(t.components),
              "max_len": args.max_len, "compare": args.compare}
    if args.json:
        values = {
            "lengths": [r.length for r in rows],
            "cycles": [r.cycles for r in rows],
            "partial_products": [r.partial_product for r in rows],
            "deltas": [r.delta for r in rows],
            "truncated": final,
            "guard": {"value": guard_value, "bound": guard_bound},
        }
        discrepancies = {}
        if args.compare:
            values["bass"] = bass
            discrepancies["gap"] = abs(final - bass)
        _emit(_payload("euler", inputs, values, discrepancies, notes))
        return EXIT_OK
    for msg in notes:
        print(f"warning: {msg}")
    header = f"{'len':>4} {'cycles':>10} {'partial product':>20} {'delta':>12}"
    print(header + (f" {'gap':>12}" if args.compare else ""))
    for r in rows:
        line = f"{r.length:>4} {r.cycles:>10} {_fmt(r.partial_product):>20} {r.delta:>12.3e}"
        print(line + (f" {r.gap:>12.3e}" if args.compare else ""))
    print(f"truncated: {_fmt(final)}")
    if args.compare:
        print(f"bass: {_fmt(bass)}")
        print(f"gap: {abs(final - bass):.3e}")
    return EXIT_OK


def cmd_selftest(args) -> int:
    results = run_selftest(args.seed)
    width = max(len(name) for name, _, _ in results)
    for name, ok, detail in results:
        print(f"{'PASS' if ok else 'FAIL'}  {name:<{width}}  {detail}")
    return EXIT_OK if all(ok for _, ok, _ in results) else EXIT_FAIL


# parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qzeta", description=(
        "Quaternionic second weighted zeta function of a graph: "
        "Hashimoto/Bass determinant forms and the Lyndon-word Euler product."))
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("info", help="graph summary and canonical arc table")
    s.add_argument("graph")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_info)

    s = sub.add_parser("zeta", help="evaluate the reciprocal zeta function")
    s.add_argument("graph")
    s.add_argument("--weights", metavar="PATH")
    s.add_argument("--t", required=True, metavar="X0,X1,X2,X3")
    s.add_argument("--method", choices=("hashimoto", "bass", "both"), default="both")
    s.add_argument("--tol", type=float, default=DEFAULT_TOL)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_zeta)

    s = sub.add_parser("check", help="randomised Hashimoto = Bass identity check")
    s.add_argument("graph", nargs="?")
    s.add_argument("--trials", type=int, default=50)
    s.add_argument("--n-max", type=int, default=8)
    s.add_argument("--radius", type=float, default=0.05)
    s.add_argument("--tol", type=float, default=DEFAULT_TOL)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("euler", help="truncated Euler product over Lyndon words")
    s.add_argument("graph")
    s.add_argument("--weights", metavar="PATH")
    s.add_argument("--t", required=True, metavar="X0,X1,X2,X3")
    s.add_argument("--max-len", type=int, default=10)
    s.add_argument("--compare", action="store_true")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_euler)

    s = sub.add_parser("selftest", help="oracle cross-check matrix")
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_selftest)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NumericalError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (QZetaError, DomainError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
