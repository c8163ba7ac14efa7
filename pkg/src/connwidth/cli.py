"""``connwidth`` command line.

Standard output carries JSON only; diagnostics go to standard error.

Exit codes: 0 success/confirmed, 1 violation or mismatch, 2 input or guard
error, 3 precondition failed or budget exceeded.
"""

from __future__ import annotations

import argparse
import logging
import sys
import time

from .config import GuardExceeded, Guards, default_guards, parse_overrides
from .core import AxiomViolation, validate_symmetric_submodular
from .families import IhVariant, is_linear_obstacle, is_single_ideal
from .generators import GENERATORS, CorpusSpec, write_instance
from .io import InstanceError, dumps, load_family, load_instance, write_atomic
from .search import linear_width, linear_width_bruteforce
from .verify import (
    BUDGET_EXCEEDED,
    MISMATCH,
    PRECONDITION_FAILED,
    check_lemma1,
    duality_check,
    theorem1_crosscheck,
)

log = logging.getLogger("connwidth")

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_PRECONDITION = 0, 1, 2, 3


def _guards(args) -> Guards:
    guards = default_guards()
    for item in getattr(args, "budget", None) or []:
        guards = guards.updated(parse_overrides(item))
    return guards


def _emit(args, text: str) -> None:
    out = getattr(args, "out", None)
    if out and out != "-":
        write_atomic(out, text)
    else:
        sys.stdout.write(text)
        sys.stdout.flush()


def _k_values(system, args) -> list[int]:
    if args.k is not None:
        return [args.k]
    lo = int(system.values[0])
    hi = max(system.singleton_values()) + 1
    return list(range(lo, hi + 1))


def cmd_validate(args) -> int:
    guards = _guards(args)
    inst = load_instance(args.instance, guards)
    system = inst.build(guards)
    reports = [validate_symmetric_submodular(system, guards)]
    lemma = check_lemma1(system, guards)
    reports.extend(lemma.reports)
    ok = all(r.holds for r in reports)
    for r in reports:
        log.info("%-6s %s %s", r.axiom.value, "ok  " if r.holds else "FAIL", r.note or "")
    _emit(args, dumps({"instance": inst.name, "valid": ok, "reports": [r.to_json() for r in reports]}) + "\n")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_width(args) -> int:
    guards = _guards(args)
    system = load_instance(args.instance, guards).build(guards)
    result = linear_width(system, guards)
    out = result.to_json()
    code = EXIT_OK
    if args.oracle:
        oracle = linear_width_bruteforce(system, guards)
        out["oracle"] = oracle.to_json()
        if oracle.width != result.width:
            log.error("dynamic program gives %d, brute force gives %d", result.width, oracle.width)
            code = EXIT_FAIL
    _emit(args, dumps(out) + "\n")
    return code


def cmd_check_family(args) -> int:
    guards = _guards(args)
    inst = load_instance(args.instance, guards)
    system = inst.build(guards)
    family = load_family(args.family, system.n)
    p1, r1 = is_single_ideal(system, family, args.k, args.variant, require_IE=args.ie)
    p2, r2 = is_linear_obstacle(system, family, args.k)
    log.info("single ideal%s: %s", " + IE" if args.ie else "", p1)
    log.info("linear obstacle: %s", p2)
    out = {
        "instance": inst.name,
        "k": args.k,
        "variant": IhVariant(args.variant).value,
        "require_ie": args.ie,
        "family": list(family.members),
        "single_ideal": {"holds": p1, "reports": [r.to_json() for r in r1]},
        "linear_obstacle": {"holds": p2, "reports": [r.to_json() for r in r2]},
    }
    _emit(args, dumps(out) + "\n")
    return EXIT_OK


def _harness_exit(outcomes: list[str]) -> int:
    if MISMATCH in outcomes:
        return EXIT_FAIL
    if PRECONDITION_FAILED in outcomes or BUDGET_EXCEEDED in outcomes:
        return EXIT_PRECONDITION
    return EXIT_OK


def cmd_theorem1(args) -> int:
    guards = _guards(args)
    system = load_instance(args.instance, guards).build(guards)
    lines, outcomes = [], []
    for k in _k_values(system, args):
        t0 = time.perf_counter()
        rep = theorem1_crosscheck(system, k, args.variant, guards, slow_path=args.slow_path, jobs=args.jobs)
        c = rep.counts
        log.info(
            "theorem1 %s k=%d %s: %s (families=%s forward=%s reverse=%s disagreements=%s) %.2fs",
            system.source, k, rep.variant, rep.outcome, c.get("families", 0), c.get("forward_mismatches", 0),
            c.get("reverse_mismatches", 0), c.get("disagreements", 0), time.perf_counter() - t0,
        )
        lines.append(dumps(rep.to_json()) + "\n")
        outcomes.append(rep.outcome)
    _emit(args, "".join(lines))
    return _harness_exit(outcomes)


def cmd_duality(args) -> int:
    guards = _guards(args)
    system = load_instance(args.instance, guards).build(guards)
    lines, outcomes = [], []
    for k in _k_values(system, args):
        rep = duality_check(system, k, args.variant, guards)
        log.info("duality %s k=%d %s: %s (lw=%s ideal=%s)", system.source, k, rep.variant, rep.outcome, rep.lw, rep.exists_ideal)
        lines.append(dumps(rep.to_json()) + "\n")
        outcomes.append(rep.outcome)
    _emit(args, "".join(lines))
    return _harness_exit(outcomes)


def cmd_gen(args) -> int:
    spec = CorpusSpec(args.generator, args.n, args.p, args.seed, args.kind)
    try:
        path = write_instance(spec, args.out_dir)
    except OSError as exc:
        log.error("cannot write to %s: %s", args.out_dir, exc)
        return EXIT_INPUT
    log.info("wrote %s", path)
    sys.stdout.write(dumps({"written": [str(path)]}) + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="connwidth", description=__doc__.splitlines()[0])
    parser.add_argument("-q", "--quiet", action="store_true", help="suppress diagnostics on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, *, k=False, variant=False, out=True):
        p.add_argument("instance", help="instance JSON file")
        p.add_argument("--budget", action="append", metavar="KEY=VAL", help="override a guard, e.g. max_efficient=12")
        if k:
            p.add_argument("--k", type=int, help="order parameter; omitted = sweep from f(empty) to max singleton + 1")
        if variant:
            p.add_argument("--variant", choices=[v.value for v in IhVariant], default="guarded")
        if out:
            p.add_argument("--out", help="write JSON here instead of stdout")

    p = sub.add_parser("validate", help="check symmetry, submodularity and the derived inequalities")
    common(p)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("width", help="exact linear-width")
    common(p)
    p.add_argument("--oracle", action="store_true", help="also run the brute-force oracle")
    p.set_defaults(func=cmd_width)

    p = sub.add_parser("check-family", help="evaluate a family against both axiom systems")
    common(p, variant=True)
    p.add_argument("family", help="family JSON file")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--ie", action="store_true", help="require the exactness axiom IE")
    p.set_defaults(func=cmd_check_family)

    p = sub.add_parser("theorem1", help="cross-check single ideal + IE against linear obstacle")
    common(p, k=True, variant=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--slow-path", choices=["mismatches", "all"], default="mismatches",
                   help="re-evaluate only mismatches (default) or every family with the reference evaluator")
    p.set_defaults(func=cmd_theorem1)

    p = sub.add_parser("duality", help="compare linear-width with single-ideal existence")
    common(p, k=True, variant=True)
    p.set_defaults(func=cmd_duality)

    p = sub.add_parser("gen", help="write a seeded instance file")
    p.add_argument("generator", choices=GENERATORS)
    p.add_argument("--n", type=int, required=True, help="vertex count")
    p.add_argument("--p", type=float, default=0.5, help="edge probability (random)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--kind", choices=["graph_cut", "graph_boundary"], default="graph_cut")
    p.add_argument("--out-dir", "--out", dest="out_dir", default=".")
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.WARNING if args.quiet else logging.INFO, format="%(message)s", stream=sys.stderr, force=True)
    try:
        return args.func(args)
    except (InstanceError, GuardExceeded, AxiomViolation, ValueError, OSError) as exc:
        log.error("error: %s", exc)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
