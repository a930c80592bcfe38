"""End-to-end verification: run a kernelization pipeline and compare both
sides with the exhaustive solvers over a whole budget range.

The pipeline is prepared once per instance (the expensive part is budget
independent) and each side's optimum is computed once, so sweeping every
budget costs only arithmetic. A report collects named checks; any failed
check makes the report a disagreement.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

from . import oracle
from .errors import InputError
from .graph import Graph
from .kernels import (AnnotatedInstance, DomIndKernel, DominationFamilyKernel,
                      be_kernel_perfect_code, be_kernel_rc_dom,
                      be_kernel_roman, be_kernel_scattered, be_kernel_total,
                      multikernel_dom_ind, multikernel_domination_family,
                      plain_instance, prepare_bikernel)
from .oracle import DEFAULT_SIZE_GUARD, OracleAnswer
from .reporting import EmpiricalConstants


def annotated_optimum(inst: AnnotatedInstance,
                      size_guard: int = DEFAULT_SIZE_GUARD,
                      want_witness: bool = False) -> OracleAnswer:
    """Exact optimum of an annotated instance via the matching solver."""
    g = inst.graph
    if inst.problem == "rcdom":
        return oracle.opt_rc_dom(g, inst.r, inst.c, inst.constrained,
                                 size_guard, want_witness)
    if inst.problem == "total":
        return oracle.opt_total(g, inst.r, inst.constrained, size_guard,
                                want_witness)
    if inst.problem == "roman":
        return oracle.opt_roman(g, inst.r, inst.constrained, size_guard,
                                want_witness)
    if inst.problem == "scatter":
        return oracle.max_scattered(g, inst.r, inst.c, inst.allowed,
                                    size_guard, want_witness)
    if inst.problem in ("lambdamu", "perfectcode"):
        return oracle.opt_lambda_mu(g, inst.r, inst.lam, inst.mu,
                                    inst.constrained, inst.allowed,
                                    size_guard, want_witness)
    raise InputError(f"unknown problem {inst.problem!r}")


def decide(ans: OracleAnswer, problem: str, k: int) -> bool:
    """Yes/no decision at budget k given the instance's optimum."""
    if problem == "scatter":
        return ans.optimum is not None and ans.optimum >= k
    return ans.optimum is not None and ans.optimum <= k


def annotated_decision(inst: AnnotatedInstance,
                       size_guard: int = DEFAULT_SIZE_GUARD) -> bool:
    return decide(annotated_optimum(inst, size_guard), inst.problem, inst.k)


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str = ""


@dataclass
class PipelineReport:
    problem: str
    instance: str
    checks: list[Check] = field(default_factory=list)
    sizes: dict[str, int] = field(default_factory=dict)
    constants: Optional[EmpiricalConstants] = None

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def add(self, name: str, ok: bool, detail: str = "") -> None:
        self.checks.append(Check(name, ok, detail))

    def lines(self) -> list[str]:
        out = [f"report {self.problem} {self.instance} "
               f"{'ok' if self.ok else 'DISAGREEMENT'}"]
        for c in self.checks:
            mark = "pass" if c.ok else "FAIL"
            detail = f" {c.detail}" if c.detail else ""
            out.append(f"check {c.name} {mark}{detail}")
        for key in sorted(self.sizes):
            out.append(f"size {key} {self.sizes[key]}")
        if self.constants is not None:
            out.extend(self.constants.lines())
        return out


_BE_KERNELS = {
    "rcdom": be_kernel_rc_dom,
    "total": be_kernel_total,
    "roman": be_kernel_roman,
    "scatter": be_kernel_scattered,
    "perfectcode": be_kernel_perfect_code,
}


def _gadget_for(inst: AnnotatedInstance, problem: str,
                lam: int, mu: int) -> Optional[AnnotatedInstance]:
    key = problem
    if problem == "lambdamu":
        if lam == mu == 1:
            key = "perfectcode"
        else:
            return None
    return _BE_KERNELS[key](inst)


def verify_pipeline(g: Graph, problem: str, r: int, c: int = 1,
                    lam: int = 1, mu: int = 1,
                    ks: Optional[Iterable[int]] = None,
                    size_guard: int = DEFAULT_SIZE_GUARD,
                    batch: bool = False,
                    constants: Optional[EmpiricalConstants] = None,
                    instance: str = "?") -> PipelineReport:
    """Run bikernel and gadget kernel for one instance and check, for
    every budget, that all three stages decide identically; also check
    that the gadget shifts the optimum by exactly its declared offset."""
    report = PipelineReport(problem, instance, constants=constants)
    ks = list(range(0, g.n + 1)) if ks is None else sorted(set(ks))
    if any(k < 0 for k in ks):
        raise InputError("budgets must be >= 0")
    base = plain_instance(g, problem, r, c, lam, mu)
    base_ans = annotated_optimum(base, size_guard)
    prep = prepare_bikernel(problem, g, r, c, lam, mu, batch=batch,
                            constants=constants, instance=instance)
    report.sizes["input_vertices"] = g.n
    if prep.template is not None:
        report.sizes["kernel_vertices"] = prep.template.graph.n

    # each distinct pipeline output graph is solved exactly once
    answer_cache: dict[str, tuple[AnnotatedInstance, OracleAnswer]] = {}

    def cached(tagged: AnnotatedInstance, key: str) -> OracleAnswer:
        if key not in answer_cache:
            answer_cache[key] = (tagged, annotated_optimum(tagged, size_guard))
        return answer_cache[key][1]

    mismatches = []
    gadget_mismatches = []
    offset_issue = None
    for k in ks:
        out = prep.for_k(k)
        key = ("template" if out.graph.n > 1 or not out.origin.get(0, "")
               .startswith("g:") else f"trivial{out.k}{len(out.constrained)}")
        out_ans = cached(out, key)
        want = decide(base_ans, problem, k)
        got = decide(out_ans, out.problem, out.k)
        if want != got:
            mismatches.append(k)
        gadget = _gadget_for(out, problem, lam, mu)
        if gadget is None:
            continue
        gadget_ans = cached(gadget, "gadget-" + key)
        plain_got = decide(gadget_ans, gadget.problem, gadget.k)
        if want != plain_got:
            gadget_mismatches.append(k)
        added = gadget.offset - out.offset
        if out_ans.feasible != gadget_ans.feasible:
            offset_issue = f"k={k}: feasibility flipped across the gadget"
        elif out_ans.feasible and gadget_ans.optimum - out_ans.optimum != added:
            offset_issue = (f"k={k}: optimum shifted by "
                            f"{gadget_ans.optimum - out_ans.optimum}, "
                            f"declared {added}")
        if "gadget_vertices" not in report.sizes:
            report.sizes["gadget_vertices"] = gadget.graph.n
    report.add("bikernel_agreement", not mismatches,
               f"budgets {mismatches}" if mismatches else f"{len(ks)} budgets")
    if problem in _BE_KERNELS or (problem == "lambdamu" and lam == mu == 1):
        report.add("gadget_agreement", not gadget_mismatches,
                   f"budgets {gadget_mismatches}" if gadget_mismatches
                   else f"{len(ks)} budgets")
        report.add("offset_exact", offset_issue is None, offset_issue or "")
    return report


def verify_multikernel_domination_family(
        g: Graph, r: int, size_guard: int = DEFAULT_SIZE_GUARD,
        batch: bool = False,
        constants: Optional[EmpiricalConstants] = None,
        instance: str = "?") -> PipelineReport:
    """Check that one shared kernel shifts the plain, total and weighted
    domination numbers by its declared offsets."""
    report = PipelineReport("domination_family", instance, constants=constants)
    mk: DominationFamilyKernel = multikernel_domination_family(
        g, r, batch=batch, constants=constants, instance=instance)
    report.sizes["input_vertices"] = g.n
    report.sizes["output_vertices"] = mk.graph.n
    pairs = (
        ("dom", lambda h: oracle.opt_rc_dom(h, r, 1, size_guard=size_guard,
                                            want_witness=False), mk.offset),
        ("total", lambda h: oracle.opt_total(h, r, size_guard=size_guard,
                                             want_witness=False), mk.offset),
        ("roman", lambda h: oracle.opt_roman(h, r, size_guard=size_guard,
                                             want_witness=False),
         2 * mk.offset),
    )
    for name, solver, offset in pairs:
        before = solver(g)
        after = solver(mk.graph)
        if before.feasible != after.feasible:
            report.add(f"offset_{name}", False, "feasibility flipped")
        elif not before.feasible:
            report.add(f"offset_{name}", True, "infeasible on both sides")
        else:
            shift = after.optimum - before.optimum
            report.add(f"offset_{name}", shift == offset,
                       f"shift {shift}, declared {offset}")
    return report


def verify_multikernel_dom_ind(
        g: Graph, lam: int, mu: int, size_guard: int = DEFAULT_SIZE_GUARD,
        batch: bool = False,
        constants: Optional[EmpiricalConstants] = None,
        instance: str = "?") -> PipelineReport:
    """Check the per-radius offsets of the joint domination and
    scattered-set kernel."""
    report = PipelineReport("dom_ind_family", instance, constants=constants)
    mk: DomIndKernel = multikernel_dom_ind(g, lam, mu, batch=batch,
                                           constants=constants,
                                           instance=instance)
    report.sizes["input_vertices"] = g.n
    report.sizes["output_vertices"] = mk.graph.n
    for r in range(lam, mu + 1):
        offset = mk.offsets[r]
        dom_before = oracle.opt_rc_dom(g, r, 1, size_guard=size_guard,
                                       want_witness=False)
        dom_after = oracle.opt_rc_dom(mk.graph, r, 1, size_guard=size_guard,
                                      want_witness=False)
        shift = dom_after.optimum - dom_before.optimum
        report.add(f"offset_dom_r{r}", shift == offset,
                   f"shift {shift}, declared {offset}")
        sct_before = oracle.max_scattered(g, r, 1, size_guard=size_guard,
                                          want_witness=False)
        sct_after = oracle.max_scattered(mk.graph, r, 1,
                                         size_guard=size_guard,
                                         want_witness=False)
        shift = sct_after.optimum - sct_before.optimum
        report.add(f"offset_ind_r{r}", shift == offset,
                   f"shift {shift}, declared {offset}")
    return report
