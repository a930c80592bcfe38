"""Shared helpers for the test suite."""

from __future__ import annotations

from lilykernel import from_edges
from lilykernel.generators import generate, parse_spec


def path(n: int):
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cyc(n: int):
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def gen(spec: str, seed: int = 0):
    return generate(parse_spec(spec, seed))


def small_corpus() -> list[str]:
    """Generator specs for graphs with at most 14 vertices covering all
    five families."""
    specs = []
    specs += [f"grid({w},{h})" for w, h in
              [(2, 2), (2, 3), (3, 3), (2, 4), (3, 4), (2, 5), (2, 6),
               (2, 7), (4, 3)]]
    specs += [f"cycle({n})" for n in range(3, 15)]
    specs += [f"star({n})" for n in range(2, 13)]
    specs += [f"spider_forest({c},{l},{m})" for c, l, m in
              [(1, 2, 1), (1, 3, 1), (1, 4, 1), (1, 2, 2), (1, 3, 2),
               (1, 4, 2), (1, 2, 3), (2, 2, 1), (2, 3, 1), (2, 2, 2),
               (3, 2, 1), (1, 6, 2), (1, 2, 4), (2, 2, 3)]]
    specs += [f"random_degenerate({n},{d},{s})"
              for n in (6, 8, 10, 12, 14) for d in (1, 2, 3)
              for s in (0, 1)]
    return specs


def problem_combos() -> list[tuple[str, int, int, int, int]]:
    """(problem, r, c, lam, mu) combinations exercised by the suite."""
    return ([("rcdom", r, c, 1, 1) for r in (1, 2) for c in (1, 2)]
            + [("total", r, 1, 1, 1) for r in (1, 2)]
            + [("roman", r, 1, 1, 1) for r in (1, 2)]
            + [("scatter", r, c, 1, 1) for r in (1, 2) for c in (1, 2)]
            + [("lambdamu", r, 1, lam, mu)
               for r in (1, 2) for lam, mu in ((1, 1), (1, 2))])
