"""Exhaustive exact solvers for every supported problem.

These are the ground truth behind all equivalence and peel-safety checks.
Search is a plain include/exclude DFS over vertices in id order that prunes
only on constraint violation and on the incumbent bound; the reported
witness is recomputed afterwards as the lexicographically least optimal
set, so it is independent of the search order. Witness validity is always
re-checked by the standalone constraint evaluators below, which share no
code with the search.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import SizeGuardError
from .graph import Graph, ball

DEFAULT_SIZE_GUARD = 20


@dataclass(frozen=True)
class OracleAnswer:
    optimum: Optional[int]  # None means infeasible
    witness: Optional[tuple]
    enumerated_count: int

    @property
    def feasible(self) -> bool:
        return self.optimum is not None


# --- independent constraint evaluators -----------------------------------

def is_rc_dominating(g: Graph, d: Iterable[int], r: int, c: int,
                     constrained: Optional[Iterable[int]] = None) -> bool:
    ds = set(d)
    targets = g.vertices if constrained is None else constrained
    return all(len(ball(g, v, r) & ds) >= c for v in targets)


def is_total_dominating(g: Graph, d: Iterable[int], r: int,
                        constrained: Optional[Iterable[int]] = None) -> bool:
    ds = set(d)
    targets = g.vertices if constrained is None else constrained
    return all(len((ball(g, v, r) - {v}) & ds) >= 1 for v in targets)


def roman_cost(d1: Iterable[int], d2: Iterable[int]) -> int:
    return len(set(d1)) + 2 * len(set(d2))


def is_roman_dominating(g: Graph, d1: Iterable[int], d2: Iterable[int], r: int,
                        constrained: Optional[Iterable[int]] = None) -> bool:
    d1s, d2s = set(d1), set(d2)
    targets = g.vertices if constrained is None else constrained
    return all(v in d1s or ball(g, v, r) & d2s for v in targets)


def is_scattered(g: Graph, i: Iterable[int], r: int, c: int) -> bool:
    iset = set(i)
    return all(len(ball(g, v, r) & iset) <= c for v in g.vertices)


def is_lambda_mu_valid(g: Graph, d: Iterable[int], r: int, lam: int, mu: int,
                       constrained: Optional[Iterable[int]] = None,
                       allowed: Optional[Iterable[int]] = None) -> bool:
    ds = set(d)
    if allowed is not None and not ds <= set(allowed):
        return False
    targets = set(g.vertices) if constrained is None else set(constrained)
    for v in g.vertices:
        hits = len(ball(g, v, r) & ds)
        if v in targets and hits < lam:
            return False
        if hits > mu:
            return False
    return True


def is_perfect_code(g: Graph, i: Iterable[int], r: int) -> bool:
    return is_lambda_mu_valid(g, i, r, 1, 1)


# --- search machinery ----------------------------------------------------

def _guard(g: Graph, size_guard: int) -> None:
    if g.n > size_guard:
        raise SizeGuardError(
            f"instance has {g.n} vertices, exhaustive guard is {size_guard}")


class _Counter:
    __slots__ = ("value",)

    def __init__(self):
        self.value = 0

    def tick(self):
        self.value += 1


def _coverage_search(balls: Sequence[frozenset[int]], pool: Sequence[int],
                     lower: dict[int, int], upper: dict[int, int],
                     minimize: bool, counter: _Counter) -> Optional[int]:
    """Optimal solution size for a coverage system, or None if infeasible.

    `balls[v]` is the set whose intersection with the solution is
    constrained; `lower`/`upper` give per-vertex bounds; the solution is
    drawn from `pool`. Minimizes or maximizes the solution size.
    """
    n = len(balls)
    pool = sorted(pool)
    # members[v] = pool positions that can still contribute to v's count
    touching: list[list[int]] = [[] for _ in range(n)]
    for idx, u in enumerate(pool):
        for v in range(n):
            if u in balls[v]:
                touching[v].append(idx)
    cnt = [0] * n
    potential = [len(touching[v]) for v in range(n)]
    best: Optional[int] = None

    def feasible_tail(v: int) -> bool:
        lo = lower.get(v, 0)
        return cnt[v] + potential[v] >= lo

    def dfs(idx: int, size: int) -> None:
        nonlocal best
        counter.tick()
        if best is not None:
            if minimize and size >= best:
                return
            if not minimize and size + (len(pool) - idx) <= best:
                return
        if idx == len(pool):
            for v in range(n):
                if cnt[v] < lower.get(v, 0):
                    return
            if best is None or (size < best if minimize else size > best):
                best = size
            return
        u = pool[idx]
        # include u
        ok = True
        for v in range(n):
            if u in balls[v]:
                cnt[v] += 1
                if cnt[v] > upper.get(v, len(pool)):
                    ok = False
        if ok:
            dfs(idx + 1, size + 1)
        for v in range(n):
            if u in balls[v]:
                cnt[v] -= 1
        # exclude u
        ok = True
        for v in range(n):
            if u in balls[v]:
                potential[v] -= 1
                if not feasible_tail(v):
                    ok = False
        if ok:
            dfs(idx + 1, size)
        for v in range(n):
            if u in balls[v]:
                potential[v] += 1

    dfs(0, 0)
    return best


def _lex_witness(pool: Sequence[int], size: int, valid, counter: _Counter):
    for combo in itertools.combinations(sorted(pool), size):
        counter.tick()
        if valid(combo):
            return combo
    return None


def _solve_coverage(g: Graph, balls: Sequence[frozenset[int]], pool: Sequence[int],
                    lower: dict[int, int], upper: dict[int, int],
                    minimize: bool, validator, size_guard: int,
                    want_witness: bool) -> OracleAnswer:
    _guard(g, size_guard)
    counter = _Counter()
    best = _coverage_search(balls, pool, lower, upper, minimize, counter)
    if best is None or not want_witness:
        return OracleAnswer(best, None, counter.value)
    witness = _lex_witness(pool, best, validator, counter)
    assert witness is not None and validator(witness)
    return OracleAnswer(best, tuple(witness), counter.value)


# --- problem front-ends --------------------------------------------------

def opt_rc_dom(g: Graph, r: int, c: int,
               constrained: Optional[Iterable[int]] = None,
               size_guard: int = DEFAULT_SIZE_GUARD,
               want_witness: bool = True) -> OracleAnswer:
    targets = set(g.vertices) if constrained is None else set(constrained)
    balls = [frozenset(ball(g, v, r)) for v in g.vertices]
    lower = {v: c for v in targets}
    return _solve_coverage(
        g, balls, list(g.vertices), lower, {}, True,
        lambda d: is_rc_dominating(g, d, r, c, targets), size_guard,
        want_witness)


def opt_total(g: Graph, r: int,
              constrained: Optional[Iterable[int]] = None,
              size_guard: int = DEFAULT_SIZE_GUARD,
              want_witness: bool = True) -> OracleAnswer:
    targets = set(g.vertices) if constrained is None else set(constrained)
    balls = [frozenset(ball(g, v, r) - {v}) for v in g.vertices]
    lower = {v: 1 for v in targets}
    return _solve_coverage(
        g, balls, list(g.vertices), lower, {}, True,
        lambda d: is_total_dominating(g, d, r, targets), size_guard,
        want_witness)


def max_scattered(g: Graph, r: int, c: int,
                  allowed: Optional[Iterable[int]] = None,
                  size_guard: int = DEFAULT_SIZE_GUARD,
                  want_witness: bool = True) -> OracleAnswer:
    pool = sorted(set(g.vertices) if allowed is None else set(allowed))
    balls = [frozenset(ball(g, v, r)) for v in g.vertices]
    upper = {v: c for v in g.vertices}
    return _solve_coverage(
        g, balls, pool, {}, upper, False,
        lambda i: is_scattered(g, i, r, c), size_guard, want_witness)


def opt_lambda_mu(g: Graph, r: int, lam: int, mu: int,
                  constrained: Optional[Iterable[int]] = None,
                  allowed: Optional[Iterable[int]] = None,
                  size_guard: int = DEFAULT_SIZE_GUARD,
                  want_witness: bool = True) -> OracleAnswer:
    targets = set(g.vertices) if constrained is None else set(constrained)
    pool = sorted(set(g.vertices) if allowed is None else set(allowed))
    balls = [frozenset(ball(g, v, r)) for v in g.vertices]
    lower = {v: lam for v in targets}
    upper = {v: mu for v in g.vertices}
    return _solve_coverage(
        g, balls, pool, lower, upper, True,
        lambda d: is_lambda_mu_valid(g, d, r, lam, mu, targets, pool),
        size_guard, want_witness)


def opt_perfect_code(g: Graph, r: int,
                     size_guard: int = DEFAULT_SIZE_GUARD,
                     want_witness: bool = True) -> OracleAnswer:
    return opt_lambda_mu(g, r, 1, 1, size_guard=size_guard,
                         want_witness=want_witness)


def opt_roman(g: Graph, r: int,
              constrained: Optional[Iterable[int]] = None,
              size_guard: int = DEFAULT_SIZE_GUARD,
              want_witness: bool = True) -> OracleAnswer:
    """Minimum |D1| + 2|D2| with D2 r-dominating all constrained vertices
    outside D1. D1 is always the set of vertices D2 leaves uncovered, so
    the search runs over D2 alone; the witness is the pair with the
    smallest D2 (by size, then lexicographically)."""
    _guard(g, size_guard)
    targets = sorted(set(g.vertices) if constrained is None else set(constrained))
    balls = [frozenset(ball(g, v, r)) for v in g.vertices]
    counter = _Counter()
    best: Optional[int] = None

    n = g.n

    def dfs(idx: int, d2: list[int]) -> None:
        nonlocal best
        counter.tick()
        chosen = set(d2)
        # lower bound: chosen cost plus targets no future vertex can cover
        doomed = sum(1 for v in targets
                     if not (balls[v] & chosen)
                     and all(u < idx for u in balls[v]))
        lb = 2 * len(d2) + doomed
        if best is not None and lb >= best:
            return
        if idx == n:
            uncovered = [v for v in targets if not (balls[v] & chosen)]
            cost = 2 * len(d2) + len(uncovered)
            if best is None or cost < best:
                best = cost
            return
        d2.append(idx)
        dfs(idx + 1, d2)
        d2.pop()
        dfs(idx + 1, d2)

    dfs(0, [])
    assert best is not None  # D2 = emptyset, D1 = targets is always valid
    if not want_witness:
        return OracleAnswer(best, None, counter.value)
    # canonical witness: smallest |D2|, then lex-least D2
    for j in range(0, best // 2 + 1):
        found = None
        for d2 in itertools.combinations(range(n), j):
            counter.tick()
            d2set = set(d2)
            uncovered = tuple(v for v in targets if not (balls[v] & d2set))
            if 2 * j + len(uncovered) == best:
                found = (uncovered, d2)
                break
        if found is not None:
            d1, d2 = found
            assert is_roman_dominating(g, d1, d2, r, targets)
            assert roman_cost(d1, d2) == best
            return OracleAnswer(best, (tuple(d1), tuple(d2)), counter.value)
    raise AssertionError("roman witness reconstruction failed")
