"""Acceptance gate: one test per criterion, each printing one pass/fail
line. Ground truth is always the exhaustive solvers."""

import random
import time

from conftest import gen, problem_combos, small_corpus

import lilykernel as lk
from lilykernel.generators import random_degenerate, spider_forest
from lilykernel.harness import (verify_multikernel_dom_ind,
                                verify_multikernel_domination_family,
                                verify_pipeline)


def _report(num: int, name: str, ok: bool, detail: str = "") -> None:
    status = "PASS" if ok else "FAIL"
    suffix = f" ({detail})" if detail else ""
    print(f"ACCEPTANCE {num} {name}: {status}{suffix}")
    assert ok, f"criterion {num} {name} failed: {detail}"


def _pipeline_reports():
    """Pipeline verification over the shared corpus; cached because the
    bikernel and gadget criteria read the same reports."""
    if not hasattr(_pipeline_reports, "cache"):
        specs = small_corpus()
        combos = problem_combos()
        reports = []
        for i, spec in enumerate(specs):
            g = gen(spec)
            assert g.n <= 14
            for off in (0, 3, 7, 11):
                problem, r, c, lam, mu = combos[(i + off) % len(combos)]
                reports.append(verify_pipeline(
                    g, problem, r, c, lam, mu, size_guard=60, instance=spec))
        _pipeline_reports.cache = reports
    return _pipeline_reports.cache


def test_criterion_1_bikernel_equivalence():
    start = time.monotonic()
    reports = _pipeline_reports()
    elapsed = time.monotonic() - start
    bad = [r.instance for r in reports
           for c in r.checks if c.name == "bikernel_agreement" and not c.ok]
    ok = not bad and len(reports) >= 200 and elapsed < 300
    _report(1, "bikernel-equivalence", ok,
            f"{len(reports)} instances, {elapsed:.1f}s"
            + (f", failures {bad[:5]}" if bad else ""))


def test_criterion_2_peel_safety():
    failures = []
    counts = {}

    def check(problem, spec, trace_states, full):
        counts[problem] = counts.get(problem, 0) + 1
        for state, got in trace_states:
            if got != full:
                failures.append((problem, spec, state))

    specs = small_corpus()
    for i, spec in enumerate(specs):
        g = gen(spec)
        r = (i % 2) + 1
        c = (i % 2) + 1

        res = lk.constraint_core_rc_dom(g, r, 1)
        full = lk.opt_rc_dom(g, r, 1, want_witness=False).optimum
        pool = set(g.vertices)
        states = []
        for step in res.trace:
            pool.discard(step.removed)
            states.append((step.removed, lk.opt_rc_dom(
                g, r, 1, constrained=pool, want_witness=False).optimum))
        check("rcdom", spec, states, full)

        res = lk.constraint_core_total(g, r)
        full = lk.opt_total(g, r, want_witness=False).optimum
        pool = set(g.vertices)
        states = []
        for step in res.trace:
            pool.discard(step.removed)
            states.append((step.removed, lk.opt_total(
                g, r, constrained=pool, want_witness=False).optimum))
        check("total", spec, states, full)

        res = lk.constraint_core_roman(g, r)
        full = lk.opt_roman(g, r, want_witness=False).optimum
        pool = set(g.vertices)
        states = []
        for step in res.trace:
            pool.discard(step.removed)
            states.append((step.removed, lk.opt_roman(
                g, r, constrained=pool, want_witness=False).optimum))
        check("roman", spec, states, full)

        res = lk.solution_core_scattered(g, r, c)
        full = lk.max_scattered(g, r, c, want_witness=False).optimum
        pool = set(g.vertices)
        states = []
        for step in res.trace:
            pool.discard(step.removed)
            states.append((step.removed, lk.max_scattered(
                g, r, c, allowed=pool, want_witness=False).optimum))
        check("scatter", spec, states, full)

        mu = c
        res = lk.reduce_annotated_lambda_mu(g, g.vertices, g.vertices,
                                            r, 1, mu)
        full = lk.opt_lambda_mu(g, r, 1, mu, want_witness=False).optimum
        l_set, u_set = set(g.vertices), set(g.vertices)
        states = []
        for step in res.trace:
            if step.removed in l_set:
                l_set.discard(step.removed)
            else:
                u_set.discard(step.removed)
            states.append((step.removed, lk.opt_lambda_mu(
                g, r, 1, mu, constrained=l_set, allowed=u_set,
                want_witness=False).optimum))
        check("lambdamu", spec, states, full)

    enough = all(counts.get(p, 0) >= 50 for p in
                 ("rcdom", "total", "roman", "scatter", "lambdamu"))
    _report(2, "peel-safety", not failures and enough,
            f"instances per problem {min(counts.values())}"
            + (f", failures {failures[:5]}" if failures else ""))


def test_criterion_3_be_kernel_offsets():
    reports = _pipeline_reports()
    bad = [(r.instance, c.name, c.detail) for r in reports for c in r.checks
           if c.name in ("gadget_agreement", "offset_exact") and not c.ok]
    checked = sum(1 for r in reports for c in r.checks
                  if c.name == "offset_exact")
    _report(3, "be-kernel-offsets", not bad and checked > 0,
            f"{checked} instances with a gadget stage"
            + (f", failures {bad[:5]}" if bad else ""))


def test_criterion_4_multikernel_identities():
    bad = []
    family_cases = [("grid(2,2)", 1), ("grid(3,3)", 1), ("grid(4,4)", 1),
                    ("grid(4,3)", 2), ("grid(3,3)", 2),
                    ("spider_forest(1,4,1)", 1), ("spider_forest(2,3,1)", 1),
                    ("spider_forest(2,2,2)", 2), ("spider_forest(1,3,2)", 2)]
    for spec, r in family_cases:
        rep = verify_multikernel_domination_family(gen(spec), r,
                                                   size_guard=70)
        if not rep.ok:
            bad.append(("domination", spec, r))
    dom_ind_cases = [("grid(3,3)", 1, 1), ("grid(4,4)", 1, 2),
                     ("grid(4,3)", 1, 2), ("spider_forest(1,4,1)", 1, 1),
                     ("spider_forest(2,3,1)", 1, 1),
                     ("spider_forest(2,3,1)", 1, 2),
                     ("spider_forest(1,3,2)", 2, 2)]
    for spec, lam, mu in dom_ind_cases:
        rep = verify_multikernel_dom_ind(gen(spec), lam, mu, size_guard=70)
        if not rep.ok:
            bad.append(("dom_ind", spec, lam, mu))
    _report(4, "multikernel-identities", not bad,
            f"{len(family_cases) + len(dom_ind_cases)} cases"
            + (f", failures {bad}" if bad else ""))


def test_criterion_5_projection_kernel_properties():
    rng = random.Random(2024)
    failures = 0
    total = 0
    while total < 200:
        n = rng.randint(5, 14)
        g = random_degenerate(n, rng.randint(1, 3), rng.randint(0, 10 ** 6))
        x = set(rng.sample(range(n), rng.randint(1, max(1, n // 3))))
        r = rng.choice((1, 2))
        c = rng.choice((1, 2))
        kern = lk.projection_kernel(g, x, r, c)
        if not lk.verify_projection_kernel(g, x, r, c, kern).ok:
            failures += 1
        total += 1
    _report(5, "projection-kernel", failures == 0,
            f"{total} random inputs, {failures} failures")


def test_criterion_6_certified_approximation():
    failures = []
    for spec in small_corpus():
        g = gen(spec)
        for r in (1, 2):
            cert = lk.approx_dominating(g, r)
            if not lk.verify_certificate(g, cert):
                failures.append((spec, r, "certificate"))
                continue
            opt = lk.opt_rc_dom(g, r, 1, want_witness=False).optimum
            if not len(cert.scattered) <= opt <= len(cert.dominating):
                failures.append((spec, r, "bounds"))
            for c in (2, 3):
                oracle_feasible = lk.opt_rc_dom(
                    g, r, c, want_witness=False).feasible
                try:
                    res = lk.approx_rc_dominating(g, r, c)
                except lk.InfeasibleError:
                    if oracle_feasible:
                        failures.append((spec, r, c, "feasibility"))
                    continue
                if not oracle_feasible:
                    failures.append((spec, r, c, "feasibility"))
                from lilykernel.oracle import is_rc_dominating
                if not is_rc_dominating(g, res.dominating, r, c):
                    failures.append((spec, r, c, "validity"))
    _report(6, "certified-approximation", not failures,
            f"failures {failures[:5]}" if failures else "all recounts passed")


def test_criterion_7_lily_verification_and_availability():
    trials = [(1, 20, 1), (1, 22, 1), (1, 25, 1), (1, 30, 1), (2, 20, 1),
              (2, 22, 1), (3, 20, 1), (1, 20, 2), (1, 22, 2), (2, 20, 2),
              (3, 20, 2), (2, 25, 2)]
    invalid = 0
    found = 0
    for count, legs, leg_len in trials:
        g = spider_forest(count, legs, leg_len)
        assert g.n >= 20 * count
        lily = lk.find_uniform_lily(g, list(g.vertices), leg_len, leg_len,
                                    1, 2)
        if lily is None:
            continue
        if not lk.verify_lily(g, lily).ok:
            invalid += 1
        elif len(lily.centres) >= 2 * len(lily.roots):
            found += 1
    availability = found / len(trials)
    _report(7, "water-lily", invalid == 0 and availability >= 0.9,
            f"availability {availability:.0%}, invalid {invalid}")


def test_criterion_8_empirical_linearity():
    start = time.monotonic()
    counts = [4, 8, 16, 24, 32, 48, 64]
    ratios = {}
    for count in counts:
        g = spider_forest(count, 8, 1)
        prep = lk.prepare_bikernel("rcdom", g, 1, 1)
        ratios[count] = prep.template.graph.n / count
    elapsed = time.monotonic() - start
    top = [ratios[c] for c in counts if c >= counts[len(counts) // 2]]
    variation = (max(top) - min(top)) / min(top)
    _report(8, "empirical-linearity", variation < 0.25 and elapsed < 600,
            f"slopes {sorted(set(ratios.values()))}, "
            f"variation {variation:.1%}, {elapsed:.1f}s")
