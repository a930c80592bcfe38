"""Iterative peeling of redundant constraint or solution vertices.

Each reducer repeatedly finds a water lily whose centre count beats a
problem-specific multiple of its root count, removes one centre from the
constrained (or allowed) set, and stops at the first failure. The
surviving set is the core; a trace records every peel. Optima are
preserved: solving the reduced annotated instance gives the same value as
the original, which the test suite checks against the exhaustive solvers.

Batch mode (off by default, reachable via the CLI's experimental flag)
removes all centres beyond the required ratio from one lily instead of a
single one; it is excluded from the correctness claims.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .domination import approx_rc_dominating
from .errors import InfeasibleError, InputError, InternalCheckError
from .graph import Graph, ball, greedy_separated
from .reporting import EmpiricalConstants
from .wideness import (Labelling, WaterLily, find_sigma_uniform_lily,
                       find_uniform_lily, verify_lily)


@dataclass(frozen=True)
class PeelStep:
    removed: int
    roots: int
    centres: int


@dataclass(frozen=True)
class CoreResult:
    problem: str
    params: tuple[int, ...]
    core: frozenset[int]
    trace: tuple[PeelStep, ...]

    @property
    def rounds(self) -> int:
        return len(self.trace)


@dataclass(frozen=True)
class AnnotatedCoreResult:
    constrained: frozenset[int]  # reduced L
    allowed: frozenset[int]      # reduced U
    trace: tuple[PeelStep, ...]

    @property
    def rounds(self) -> int:
        return len(self.trace)


def _ratio_lily(g: Graph, pool: Iterable[int], depth: int, radius: int,
                adhesion: int, ratio: int, *, offset: int = 0,
                min_slack: Optional[int] = None, sigma: bool = False,
                centre_separation: Optional[int] = None,
                labelling: Optional[Labelling] = None,
                dominator: Optional[Iterable[int]] = None,
                constants: Optional[EmpiricalConstants] = None,
                instance: str = "?") -> Optional[WaterLily]:
    """Lily over the pool with |C| >= ratio*|R| + offset (and at least one
    centre), escalating the target until met or the finder gives up.

    With `centre_separation` set, centres are additionally thinned to be
    pairwise further than that apart in g itself (not just g minus the
    roots), so no surviving centre can reach another one through the
    roots. Total domination needs this: a removed centre must never be
    the only non-self dominator of its interchangeable twins.
    """
    pool = sorted(set(pool))
    if not pool:
        return None
    t = 1
    while True:
        if sigma:
            found = find_sigma_uniform_lily(
                g, pool, depth, radius, adhesion, t, labelling=labelling,
                dominator=dominator, constants=constants, instance=instance)
            lily = found.lily if found is not None else None
        else:
            lily = find_uniform_lily(
                g, pool, depth, radius, adhesion, t, dominator=dominator,
                constants=constants, instance=instance)
        if lily is None:
            return None
        if centre_separation is not None:
            kept = greedy_separated(g, lily.centres, centre_separation)
            if len(kept) < len(lily.centres):
                trimmed = WaterLily(lily.roots, tuple(sorted(kept)),
                                    lily.radius, lily.depth, lily.adhesion)
                if not verify_lily(g, trimmed).ok:
                    raise InternalCheckError(
                        "thinning centres invalidated the lily")
                lily = trimmed
        need = ratio * len(lily.roots) + offset
        ok = len(lily.centres) >= max(1, need)
        if min_slack is not None:
            ok = ok and (len(lily.centres)
                         - adhesion * len(lily.roots) >= min_slack)
        if ok:
            return lily
        new_t = min(len(pool), max(2 * t, need))
        if new_t <= t:
            return None
        t = new_t


def _peel_round(pool: set[int], lily: WaterLily, ratio: int,
                batch: bool, trace: list[PeelStep]) -> None:
    count = 1
    if batch:
        count = max(1, len(lily.centres) - ratio * len(lily.roots))
    for removed in lily.centres[:count]:
        pool.remove(removed)
        trace.append(PeelStep(removed, len(lily.roots), len(lily.centres)))


def _peel(g: Graph, pool: set[int], find, ratio: int, batch: bool,
          constants: Optional[EmpiricalConstants], instance: str,
          name: str) -> tuple[frozenset[int], tuple[PeelStep, ...]]:
    trace: list[PeelStep] = []
    while True:
        lily = find(pool)
        if lily is None:
            break
        _peel_round(pool, lily, ratio, batch, trace)
    if constants is not None and g.n:
        constants.record(name, Fraction(len(pool), g.n), instance)
    return frozenset(pool), tuple(trace)


def constraint_core_rc_dom(g: Graph, r: int, c: int, *, batch: bool = False,
                           constants: Optional[EmpiricalConstants] = None,
                           instance: str = "?") -> CoreResult:
    """Shrink the set of vertices whose c-fold r-domination must be
    enforced; optima over the reduced constraints match the original."""
    if c < 1:
        raise InputError("multiplicity must be >= 1")
    for v in g.vertices:
        if len(ball(g, v, r)) < c:
            raise InfeasibleError(
                f"vertex {v} cannot be {c}-fold dominated at distance {r}")
    core, trace = _peel(
        g, set(g.vertices),
        lambda pool: _ratio_lily(g, pool, r, 2 * r, c, 2,
                                 constants=constants, instance=instance),
        2, batch, constants, instance, "core_fraction_rc_dom")
    return CoreResult("rcdom", (r, c), core, trace)


def constraint_core_total(g: Graph, r: int, *, batch: bool = False,
                          constants: Optional[EmpiricalConstants] = None,
                          instance: str = "?") -> CoreResult:
    """Constraint core for total domination: every vertex needs a
    dominator other than itself within distance r; the reducer itself runs
    even on infeasible graphs (cores only restrict constraints)."""
    core, trace = _peel(
        g, set(g.vertices),
        lambda pool: _ratio_lily(g, pool, r, 2 * r, 1, 4,
                                 centre_separation=r,
                                 constants=constants, instance=instance),
        4, batch, constants, instance, "core_fraction_total")
    return CoreResult("total", (r,), core, trace)


def constraint_core_roman(g: Graph, r: int, *, batch: bool = False,
                          constants: Optional[EmpiricalConstants] = None,
                          instance: str = "?") -> CoreResult:
    """Constraint core for the weighted two-level domination variant."""
    core, trace = _peel(
        g, set(g.vertices),
        lambda pool: _ratio_lily(g, pool, r, 2 * r, 1, 3,
                                 constants=constants, instance=instance),
        3, batch, constants, instance, "core_fraction_roman")
    return CoreResult("roman", (r,), core, trace)


def solution_core_scattered(g: Graph, r: int, c: int, *, batch: bool = False,
                            constants: Optional[EmpiricalConstants] = None,
                            instance: str = "?") -> CoreResult:
    """Shrink the set of vertices allowed into a maximum scattered set
    without changing the optimum; peels centres of signature-uniform
    lilies so removed vertices always have interchangeable twins."""
    if c < 1:
        raise InputError("multiplicity must be >= 1")
    core, trace = _peel(
        g, set(g.vertices),
        lambda pool: _ratio_lily(g, pool, r, 2 * r, 1, 2, sigma=True,
                                 constants=constants, instance=instance),
        2, batch, constants, instance, "core_fraction_scattered")
    return CoreResult("scatter", (r, c), core, trace)


def reduce_annotated_lambda_mu(g: Graph, constrained: Iterable[int],
                               allowed: Iterable[int], r: int,
                               lam: int, mu: int, *,
                               dominator: Optional[Iterable[int]] = None,
                               batch: bool = False,
                               constants: Optional[EmpiricalConstants] = None,
                               instance: str = "?") -> AnnotatedCoreResult:
    """Two-phase reduction of an annotated instance with lower bound lam
    on constrained vertices and upper bound mu everywhere.

    Phase one peels constrained vertices, phase two peels merely-allowed
    ones. Lilies use the shared dominator for their roots, carry the
    current constrained/allowed membership as labels, and must leave at
    least two centres with dominator-free pads. Without a feasible
    dominator the reduction is a no-op.
    """
    if not 1 <= lam <= mu:
        raise InputError("bounds must satisfy 1 <= lam <= mu")
    l_set = set(constrained)
    u_set = set(allowed)
    if not l_set <= u_set:
        u_set |= l_set
    if dominator is None:
        try:
            dominator = approx_rc_dominating(g, r, mu).dominating
        except InfeasibleError:
            return AnnotatedCoreResult(frozenset(l_set), frozenset(u_set), ())
    d_hat = frozenset(dominator)

    def labelling(v: int) -> str:
        return ("L" if v in l_set else "") + ("U" if v in u_set else "")

    def find(pool: Iterable[int]) -> Optional[WaterLily]:
        return _ratio_lily(g, pool, r, 2 * r, mu, mu + 1, offset=1,
                           min_slack=2, sigma=True, labelling=labelling,
                           dominator=d_hat, constants=constants,
                           instance=instance)

    trace: list[PeelStep] = []
    while True:
        lily = find(l_set - d_hat)
        if lily is None:
            break
        _peel_round(l_set, lily, mu + 1, batch, trace)
    while True:
        lily = find(u_set - l_set - d_hat)
        if lily is None:
            break
        _peel_round(u_set, lily, mu + 1, batch, trace)
    if constants is not None and g.n:
        constants.record("core_fraction_lambda_mu",
                         Fraction(len(u_set), g.n), instance)
    return AnnotatedCoreResult(frozenset(l_set), frozenset(u_set),
                               tuple(trace))
