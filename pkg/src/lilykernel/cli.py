"""Command-line surface. Subcommands cover generation, approximation,
lily search, core peeling, the three kernelization stages, the exact
solvers, and end-to-end verification.

Exit codes: 0 success, 1 verification disagreement, 2 bad input,
3 resource guard tripped (exhaustive size guard or diverging closure).
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional

from . import generators, harness, oracle
from .cores import (constraint_core_rc_dom, constraint_core_roman,
                    constraint_core_total, reduce_annotated_lambda_mu,
                    solution_core_scattered)
from .domination import approx_dominating, approx_rc_dominating
from .errors import (ClosureDivergedError, InfeasibleError, InputError,
                     SizeGuardError)
from .graph import Graph, parse_graph, serialize_graph
from .kernels import (prepare_bikernel, multikernel_dom_ind,
                      multikernel_domination_family, serialize_instance)
from .reporting import EmpiricalConstants
from .wideness import find_sigma_uniform_lily, find_uniform_lily, verify_lily

EXIT_OK = 0
EXIT_DISAGREEMENT = 1
EXIT_INPUT = 2
EXIT_GUARD = 3


def _load_graph(source: str, seed: int) -> Graph:
    """A generator spec like grid(3,3), or a path to a graph file."""
    if "(" in source:
        return generators.generate(generators.parse_spec(source, seed))
    try:
        with open(source, "r", encoding="utf-8") as fh:
            return parse_graph(fh.read())
    except OSError as exc:
        raise InputError(f"cannot read {source}: {exc}") from exc


def _emit(text: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _csv(constants: EmpiricalConstants) -> str:
    rows = ["name,value,instance"]
    for m in constants.measurements:
        rows.append(f"{m.name},{float(m.value)!r},{m.instance}")
    return "\n".join(rows) + "\n"


def _add_common(sub: argparse.ArgumentParser, problem: bool = True) -> None:
    sub.add_argument("source", help="generator spec or graph file")
    if problem:
        sub.add_argument("--problem", required=True,
                         choices=("rcdom", "total", "roman", "scatter",
                                  "lambdamu", "perfectcode"))
    sub.add_argument("--r", type=int, default=1)
    sub.add_argument("--c", type=int, default=1)
    sub.add_argument("--lam", "--lambda", dest="lam", type=int, default=1)
    sub.add_argument("--mu", type=int, default=1)
    sub.add_argument("-o", "--output", default=None)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="lilykernel",
        description="kernelization toolkit for distance-r domination "
                    "problems on sparse graphs")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--size-guard", type=int,
                   default=oracle.DEFAULT_SIZE_GUARD)
    p.add_argument("--experimental-batch", action="store_true",
                   help="peel whole centre batches per lily (excluded from "
                        "the correctness claims)")
    subs = p.add_subparsers(dest="command", required=True)

    gen = subs.add_parser("gen", help="emit a generated graph")
    gen.add_argument("spec")
    gen.add_argument("-o", "--output", default=None)

    approx = subs.add_parser("approx", help="certified greedy approximation")
    _add_common(approx, problem=False)

    lily = subs.add_parser("lily", help="find and verify a water lily")
    lily.add_argument("source")
    lily.add_argument("--depth", type=int, required=True)
    lily.add_argument("--radius", type=int, required=True)
    lily.add_argument("--adhesion", type=int, default=1)
    lily.add_argument("--target", type=int, default=2)
    lily.add_argument("--sigma", action="store_true",
                      help="require signature-uniform centres")
    lily.add_argument("-o", "--output", default=None)

    core = subs.add_parser("core", help="peel a constraint or solution core")
    _add_common(core)

    bik = subs.add_parser("bikernel", help="reduce to an annotated instance")
    _add_common(bik)
    bik.add_argument("--k", type=int, required=True)

    kern = subs.add_parser("kernel",
                           help="bikernel followed by the gadget back to a "
                                "plain instance")
    _add_common(kern)
    kern.add_argument("--k", type=int, required=True)

    multi = subs.add_parser("multikernel", help="shared kernel for a family")
    multi.add_argument("source")
    multi.add_argument("--family", required=True,
                       choices=("domination", "dom_ind"))
    multi.add_argument("--r", type=int, default=1)
    multi.add_argument("--lam", "--lambda", dest="lam", type=int, default=1)
    multi.add_argument("--mu", type=int, default=1)
    multi.add_argument("-o", "--output", default=None)

    solve = subs.add_parser("solve", help="exact optimum via the "
                                          "exhaustive solver")
    _add_common(solve)

    verify = subs.add_parser("verify", help="run the pipeline and check "
                                            "every budget against the solver")
    _add_common(verify)
    verify.add_argument("--kmax", type=int, default=None)
    verify.add_argument("--csv", default=None,
                        help="write measured constants as CSV")
    return p


def _cmd_gen(args) -> int:
    g = generators.generate(generators.parse_spec(args.spec, args.seed))
    _emit(serialize_graph(g), args.output)
    return EXIT_OK


def _cmd_approx(args) -> int:
    g = _load_graph(args.source, args.seed)
    lines = []
    if args.c == 1:
        cert = approx_dominating(g, args.r)
        lines.append(f"dominating {len(cert.dominating)} "
                     + " ".join(map(str, sorted(cert.dominating))))
        lines.append(f"scattered {len(cert.scattered)} "
                     + " ".join(map(str, sorted(cert.scattered))))
        lines.append(f"bounds {len(cert.scattered)} <= opt <= "
                     f"{len(cert.dominating)}")
    else:
        res = approx_rc_dominating(g, args.r, args.c)
        lines.append(f"dominating {len(res.dominating)} "
                     + " ".join(map(str, sorted(res.dominating))))
        lines.append(f"bounds {len(res.base.scattered)} <= opt <= "
                     f"{len(res.dominating)}")
    _emit("\n".join(lines) + "\n", args.output)
    return EXIT_OK


def _cmd_lily(args) -> int:
    g = _load_graph(args.source, args.seed)
    pool = list(g.vertices)
    if args.sigma:
        found = find_sigma_uniform_lily(g, pool, args.depth, args.radius,
                                        args.adhesion, args.target)
        lily = found.lily if found is not None else None
    else:
        lily = find_uniform_lily(g, pool, args.depth, args.radius,
                                 args.adhesion, args.target)
    if lily is None:
        _emit("lily none\n", args.output)
        return EXIT_OK
    report = verify_lily(g, lily)
    lines = [
        "lily found",
        "roots " + " ".join(map(str, sorted(lily.roots))),
        "centres " + " ".join(map(str, lily.centres)),
        f"verified {'yes' if report.ok else 'no'}",
    ]
    _emit("\n".join(lines) + "\n", args.output)
    return EXIT_OK if report.ok else EXIT_DISAGREEMENT


def _cmd_core(args) -> int:
    g = _load_graph(args.source, args.seed)
    batch = args.experimental_batch
    if args.problem == "rcdom":
        res = constraint_core_rc_dom(g, args.r, args.c, batch=batch)
    elif args.problem == "total":
        res = constraint_core_total(g, args.r, batch=batch)
    elif args.problem == "roman":
        res = constraint_core_roman(g, args.r, batch=batch)
    elif args.problem == "scatter":
        res = solution_core_scattered(g, args.r, args.c, batch=batch)
    else:
        red = reduce_annotated_lambda_mu(g, g.vertices, g.vertices, args.r,
                                         args.lam, args.mu, batch=batch)
        lines = ["L " + " ".join(map(str, sorted(red.constrained))),
                 "U " + " ".join(map(str, sorted(red.allowed))),
                 f"rounds {red.rounds}"]
        _emit("\n".join(lines) + "\n", args.output)
        return EXIT_OK
    lines = ["core " + " ".join(map(str, sorted(res.core))),
             f"rounds {res.rounds}"]
    _emit("\n".join(lines) + "\n", args.output)
    return EXIT_OK


def _cmd_bikernel(args) -> int:
    g = _load_graph(args.source, args.seed)
    prep = prepare_bikernel(args.problem, g, args.r, args.c, args.lam,
                            args.mu, batch=args.experimental_batch)
    _emit(serialize_instance(prep.for_k(args.k)), args.output)
    return EXIT_OK


def _cmd_kernel(args) -> int:
    g = _load_graph(args.source, args.seed)
    prep = prepare_bikernel(args.problem, g, args.r, args.c, args.lam,
                            args.mu, batch=args.experimental_batch)
    inst = prep.for_k(args.k)
    gadget = harness._gadget_for(inst, args.problem, args.lam, args.mu)
    if gadget is None:
        raise InputError("no plain-instance gadget for lambdamu with "
                         "lam != mu; use bikernel instead")
    _emit(serialize_instance(gadget), args.output)
    return EXIT_OK


def _cmd_multikernel(args) -> int:
    g = _load_graph(args.source, args.seed)
    batch = args.experimental_batch
    if args.family == "domination":
        mk = multikernel_domination_family(g, args.r, batch=batch)
        header = (f"c multikernel domination r={mk.r} offset={mk.offset} "
                  f"roman_offset={2 * mk.offset}\n")
    else:
        mk = multikernel_dom_ind(g, args.lam, args.mu, batch=batch)
        offs = " ".join(f"r{r}={v}" for r, v in sorted(mk.offsets.items()))
        header = (f"c multikernel dom_ind lam={mk.lam} mu={mk.mu} "
                  f"sigma={mk.sigma} offsets {offs}\n")
    _emit(header + serialize_graph(mk.graph), args.output)
    return EXIT_OK


def _cmd_solve(args) -> int:
    g = _load_graph(args.source, args.seed)
    guard = args.size_guard
    if args.problem == "rcdom":
        ans = oracle.opt_rc_dom(g, args.r, args.c, size_guard=guard)
    elif args.problem == "total":
        ans = oracle.opt_total(g, args.r, size_guard=guard)
    elif args.problem == "roman":
        ans = oracle.opt_roman(g, args.r, size_guard=guard)
    elif args.problem == "scatter":
        ans = oracle.max_scattered(g, args.r, args.c, size_guard=guard)
    elif args.problem == "perfectcode":
        ans = oracle.opt_perfect_code(g, args.r, size_guard=guard)
    else:
        ans = oracle.opt_lambda_mu(g, args.r, args.lam, args.mu,
                                   size_guard=guard)
    if not ans.feasible:
        _emit("optimum infeasible\n", args.output)
    else:
        witness = ans.witness
        lines = [f"optimum {ans.optimum}"]
        if witness is not None:
            if args.problem == "roman":
                d1, d2 = witness
                lines.append("witness_d1 " + " ".join(map(str, d1)))
                lines.append("witness_d2 " + " ".join(map(str, d2)))
            else:
                lines.append("witness " + " ".join(map(str, witness)))
        lines.append(f"enumerated {ans.enumerated_count}")
        _emit("\n".join(lines) + "\n", args.output)
    return EXIT_OK


def _cmd_verify(args) -> int:
    g = _load_graph(args.source, args.seed)
    constants = EmpiricalConstants()
    ks = None if args.kmax is None else range(0, args.kmax + 1)
    report = harness.verify_pipeline(
        g, args.problem, args.r, args.c, args.lam, args.mu, ks=ks,
        size_guard=args.size_guard, batch=args.experimental_batch,
        constants=constants, instance=args.source)
    _emit("\n".join(report.lines()) + "\n", args.output)
    if args.csv is not None:
        with open(args.csv, "w", encoding="utf-8") as fh:
            fh.write(_csv(constants))
    return EXIT_OK if report.ok else EXIT_DISAGREEMENT


_COMMANDS = {
    "gen": _cmd_gen,
    "approx": _cmd_approx,
    "lily": _cmd_lily,
    "core": _cmd_core,
    "bikernel": _cmd_bikernel,
    "kernel": _cmd_kernel,
    "multikernel": _cmd_multikernel,
    "solve": _cmd_solve,
    "verify": _cmd_verify,
}


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return _COMMANDS[args.command](args)
    except (InputError, InfeasibleError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (SizeGuardError, ClosureDivergedError) as exc:
        print(f"resource guard: {exc}", file=sys.stderr)
        return EXIT_GUARD


if __name__ == "__main__":
    sys.exit(main())
