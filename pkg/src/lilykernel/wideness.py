"""Separator-guarded scattered sets and uniform water lilies.

A water lily is a pair (R, C) of disjoint vertex sets: the centres C are
pairwise far apart once the roots R are deleted, every vertex within the
lily radius of a centre (its pad) sees at least `adhesion` roots within
the domination depth, and all centres look identical towards R at that
depth. Finders return None on failure; a lily that is returned has always
been re-verified, and a verification failure inside a finder is a bug and
raises accordingly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Optional

from .domination import approx_rc_dominating
from .errors import InfeasibleError, InputError, InternalCheckError
from .graph import Graph, bfs_distances, greedy_separated
from .projections import profile, projection, projection_closure, shadow
from .reporting import EmpiricalConstants

UQW_MAX_SEPARATOR = 64

Labelling = Callable[[int], str]


@dataclass(frozen=True)
class WaterLily:
    roots: frozenset[int]
    centres: tuple[int, ...]
    radius: int    # pad depth around each centre
    depth: int     # distance within which roots must appear
    adhesion: int  # how many roots each pad vertex must see

    def __post_init__(self):
        if self.depth > self.radius:
            raise InputError("lily depth exceeds its radius")
        if tuple(sorted(set(self.centres))) != self.centres:
            raise InputError("centres must be sorted and distinct")


@dataclass(frozen=True)
class LilyReport:
    disjoint_ok: bool
    scattered_ok: bool
    dominated_ok: bool
    uniform_ok: bool
    empty: bool  # no centres: vacuously fine, flagged as a warning
    failures: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return (self.disjoint_ok and self.scattered_ok
                and self.dominated_ok and self.uniform_ok)


def pads(g: Graph, lily: WaterLily) -> set[int]:
    """All vertices within the lily radius of a centre in g - roots."""
    if not lily.centres:
        return set()
    return set(bfs_distances(g, lily.centres, radius=lily.radius,
                             forbidden=lily.roots))


def verify_lily(g: Graph, lily: WaterLily) -> LilyReport:
    """Recompute every defining property of a water lily from scratch."""
    failures: list[str] = []
    disjoint = not (lily.roots & set(lily.centres))
    if not disjoint:
        failures.append("roots and centres overlap")
    scattered = True
    centres = lily.centres
    for i, u in enumerate(centres):
        near = bfs_distances(g, [u], radius=2 * lily.radius,
                             forbidden=lily.roots)
        for v in centres[i + 1:]:
            if v in near:
                scattered = False
                failures.append(f"centres {u} and {v} are too close")
    dominated = True
    for v in sorted(pads(g, lily)):
        near = bfs_distances(g, [v], radius=lily.depth)
        if len(lily.roots & set(near)) < lily.adhesion:
            dominated = False
            failures.append(f"pad vertex {v} sees too few roots")
    uniform = True
    if centres:
        profiles = {profile(g, lily.roots, u, lily.depth).entries
                    for u in centres}
        if len(profiles) > 1:
            uniform = False
            failures.append("centres disagree towards the roots")
    return LilyReport(disjoint, scattered, dominated, uniform,
                      not centres, tuple(failures))


# --- separator-guarded scattered sets -------------------------------------

@dataclass(frozen=True)
class UqwResult:
    separator: frozenset[int]
    spread: tuple[int, ...]  # pairwise separated in g - separator


def uqw(g: Graph, x: Iterable[int], separation: int, t: int,
        max_separator: int = UQW_MAX_SEPARATOR) -> Optional[UqwResult]:
    """Find a small separator S and >= t members of x that are pairwise
    more than `separation` apart in g - S, or None when `max_separator`
    deletions do not suffice.

    Each failed round deletes the outside vertex that is close (within
    half the separation, rounded up) to the most remaining x-vertices.
    """
    if t < 1:
        raise InputError("uqw target must be >= 1")
    xs = frozenset(x)
    s: set[int] = set()
    half = (separation + 1) // 2
    while True:
        chosen = greedy_separated(g, xs - s, separation,
                                  forbidden=frozenset(s))
        if len(chosen) >= t:
            return UqwResult(frozenset(s), tuple(chosen))
        if len(s) >= max_separator:
            return None
        best = None
        best_count = 0
        for v in g.vertices:
            if v in xs or v in s:
                continue
            near = bfs_distances(g, [v], radius=half, forbidden=frozenset(s))
            count = sum(1 for w in near if w in xs and w not in s)
            if count > best_count:
                best, best_count = v, count
        if best is None:
            return None
        s.add(best)


# --- uniform lily construction ---------------------------------------------

def _largest_class(groups: dict[tuple, list[int]]) -> list[int]:
    """Largest value list; ties by smallest member id."""
    return max(groups.values(), key=lambda ms: (len(ms), -ms[0]))


def find_uniform_lily(g: Graph, a_set: Iterable[int], depth: int, radius: int,
                      adhesion: int, t: int,
                      dominator: Optional[Iterable[int]] = None,
                      constants: Optional[EmpiricalConstants] = None,
                      instance: str = "?") -> Optional[WaterLily]:
    """Water lily with >= t centres drawn from a_set, or None.

    Roots start from the projection onto a closed dominating set plus a
    uqw separator, then gain shadow vertices of the dominator so every
    pad class sees `adhesion` roots; centre profiles are asserted to
    survive that augmentation, and the result is fully re-verified.
    """
    if t < 1:
        raise InputError("lily target must be >= 1")
    if dominator is not None:
        d_prime = set(dominator)
    else:
        try:
            d_prime = set(approx_rc_dominating(g, depth, adhesion).dominating)
        except InfeasibleError:
            return None
    d_closed = projection_closure(g, d_prime, radius + depth,
                                  constants=constants, instance=instance)
    candidates = sorted(set(a_set) - d_closed)
    if not candidates:
        return None
    groups: dict[tuple, list[int]] = {}
    for u in candidates:
        key = profile(g, d_closed, u, radius + depth).entries
        groups.setdefault(key, []).append(u)
    cls = _largest_class(groups)
    fixed_roots = projection(g, d_closed, cls[0], radius + depth)

    target = t
    while True:
        res = uqw(g, cls, 2 * radius, target)
        if res is None:
            return None
        r_prime = frozenset(res.separator | fixed_roots)
        spread_groups: dict[tuple, list[int]] = {}
        for w in res.spread:
            key = profile(g, r_prime, w, depth).entries
            spread_groups.setdefault(key, []).append(w)
        centres = sorted(_largest_class(spread_groups))
        if len(centres) >= t:
            break
        if target >= len(cls):
            return None
        target = min(2 * target, len(cls))

    roots = set(r_prime)
    pad_vertices = set(bfs_distances(g, centres, radius=radius,
                                     forbidden=r_prime))
    pad_groups: dict[tuple, list[int]] = {}
    for u in sorted(pad_vertices):
        key = profile(g, r_prime, u, depth).entries
        pad_groups.setdefault(key, []).append(u)
    for key in sorted(pad_groups):
        members = pad_groups[key]
        need = adhesion - len(key)
        if need <= 0:
            continue
        extra = sorted(shadow(g, r_prime, members[0], depth) & d_prime)
        roots.update(extra[:need])

    before = {u: profile(g, r_prime, u, depth).entries for u in centres}
    rootset = frozenset(roots)
    for u in centres:
        if profile(g, rootset, u, depth).entries != before[u]:
            raise InternalCheckError(
                f"root augmentation changed the profile of centre {u}")
    lily = WaterLily(rootset, tuple(centres), radius, depth, adhesion)
    report = verify_lily(g, lily)
    if not report.ok:
        raise InternalCheckError(
            "lily self-check failed: " + "; ".join(report.failures))
    if constants is not None and lily.roots:
        constants.record("lily_centres_per_root",
                         Fraction(len(lily.centres), len(lily.roots)),
                         instance)
    return lily


# --- pad signatures and sigma-uniform lilies -------------------------------

@dataclass(frozen=True)
class PadSignature:
    """What a pad looks like from its centre: for every distance level up
    to the radius, the set of (profile towards the roots, label) pairs
    realized there. Canonical and hashable."""
    levels: tuple[tuple[tuple[tuple[tuple[int, int], ...], str], ...], ...]


def pad_signature(g: Graph, roots: frozenset[int], radius: int, depth: int,
                  centre: int,
                  labelling: Optional[Labelling] = None) -> PadSignature:
    dist = bfs_distances(g, [centre], radius=radius, forbidden=roots)
    levels = []
    for i in range(radius + 1):
        seen = set()
        for v, dv in dist.items():
            if dv != i:
                continue
            lab = labelling(v) if labelling is not None else ""
            seen.add((profile(g, roots, v, depth).entries, lab))
        levels.append(tuple(sorted(seen)))
    return PadSignature(tuple(levels))


@dataclass(frozen=True)
class SigmaUniformLily:
    lily: WaterLily
    signature: PadSignature


def find_sigma_uniform_lily(g: Graph, a_set: Iterable[int], depth: int,
                            radius: int, adhesion: int, t: int,
                            labelling: Optional[Labelling] = None,
                            dominator: Optional[Iterable[int]] = None,
                            constants: Optional[EmpiricalConstants] = None,
                            instance: str = "?") -> Optional[SigmaUniformLily]:
    """Uniform lily whose >= t surviving centres also share the whole pad
    signature, obtained by filtering a uniform lily and escalating its
    target when too few centres agree."""
    pool = sorted(set(a_set))
    target = t
    while True:
        lily = find_uniform_lily(g, pool, depth, radius, adhesion, target,
                                 dominator=dominator, constants=constants,
                                 instance=instance)
        if lily is None:
            return None
        groups: dict[PadSignature, list[int]] = {}
        for u in lily.centres:
            sig = pad_signature(g, lily.roots, radius, depth, u, labelling)
            groups.setdefault(sig, []).append(u)
        best_sig = max(groups, key=lambda s: (len(groups[s]), -groups[s][0]))
        centres = tuple(sorted(groups[best_sig]))
        if len(centres) >= t:
            trimmed = WaterLily(lily.roots, centres, radius, depth, adhesion)
            report = verify_lily(g, trimmed)
            if not report.ok:
                raise InternalCheckError(
                    "trimmed lily self-check failed: "
                    + "; ".join(report.failures))
            return SigmaUniformLily(trimmed, best_sig)
        if target >= len(pool):
            return None
        target = min(2 * target, len(pool))
