"""Self-certifying approximation for distance-r domination.

The greedy dominator carries a scattered witness set A with A being a
subset of the returned dominating set D intersected with the targets.
Because A is pairwise further than 2r apart, no single vertex can
dominate two of its members, so |A| lower-bounds every dominating set of
the targets and |D|/|A| is a per-run certified approximation ratio.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .errors import InfeasibleError, InputError, InternalCheckError
from .graph import Graph, ball, bfs_distances
from .projections import profile_partition, shadow
from .reporting import EmpiricalConstants


@dataclass(frozen=True)
class DominationCertificate:
    dominating: tuple[int, ...]
    scattered: tuple[int, ...]
    radius: int
    targets: frozenset[int]
    forbidden: frozenset[int] = frozenset()

    @property
    def ratio(self) -> Optional[Fraction]:
        """Certified |D| / |A|; None when the witness is empty."""
        if not self.scattered:
            return None
        return Fraction(len(self.dominating), len(self.scattered))


def verify_certificate(g: Graph, cert: DominationCertificate) -> bool:
    """Independent re-check of every property the certificate claims."""
    d = set(cert.dominating)
    a = set(cert.scattered)
    r = cert.radius
    if not a <= d & cert.targets:
        return False
    if d & cert.forbidden or cert.targets & cert.forbidden:
        return False
    for v in cert.targets:
        near = bfs_distances(g, [v], radius=r, forbidden=cert.forbidden)
        if not d & set(near):
            return False
    for v in sorted(a):
        near = bfs_distances(g, [v], radius=2 * r, forbidden=cert.forbidden)
        if any(w in near for w in a if w != v):
            return False
    return True


def _lex_path_towards(g: Graph, v: int, a: int, forbidden: frozenset[int]) -> list[int]:
    back = bfs_distances(g, [a], forbidden=forbidden)
    path = [v]
    w = v
    while w != a:
        w = min(z for z in g.adjacency[w]
                if z not in forbidden and back.get(z, -1) == back[w] - 1)
        path.append(w)
    return path


def approx_dominating(g: Graph, r: int,
                      targets: Optional[Iterable[int]] = None,
                      forbidden: frozenset[int] | set[int] = frozenset(),
                      constants: Optional[EmpiricalConstants] = None,
                      instance: str = "?") -> DominationCertificate:
    """Greedy r-dominator for the targets in g minus the forbidden set.

    Targets are scanned in increasing id. An undominated target that is
    far (further than 2r) from the witness set joins both the witness and
    the dominator; otherwise the dominator gains the vertex at distance
    min(r, d) from the target along the lexicographically least shortest
    path towards its nearest witness vertex.
    """
    if r < 1:
        raise InputError("domination radius must be >= 1")
    fb = frozenset(forbidden)
    ts = sorted(set(g.vertices) - fb if targets is None else set(targets))
    for v in ts:
        if v in fb:
            raise InputError(f"target {v} is forbidden")
    d: set[int] = set()
    a: list[int] = []
    for v in ts:
        near = bfs_distances(g, [v], radius=2 * r, forbidden=fb)
        if any(w in near and near[w] <= r for w in d):
            continue
        in_reach = [(near[w], w) for w in a if w in near]
        if not in_reach:
            a.append(v)
            d.add(v)
            continue
        dist, nearest = min(in_reach)
        path = _lex_path_towards(g, v, nearest, fb)
        d.add(path[min(r, dist)])
    cert = DominationCertificate(tuple(sorted(d)), tuple(a), r,
                                 frozenset(ts), fb)
    if constants is not None and cert.ratio is not None:
        constants.record("approx_ratio", cert.ratio, instance)
    return cert


@dataclass(frozen=True)
class RcDominationResult:
    dominating: tuple[int, ...]
    radius: int
    multiplicity: int
    base: DominationCertificate  # stage-one certificate with its witness

    @property
    def ratio(self) -> Optional[Fraction]:
        """Certified |D| / opt lower bound inherited from stage one."""
        if not self.base.scattered:
            return None
        return Fraction(len(self.dominating), len(self.base.scattered))


def approx_rc_dominating(g: Graph, r: int, c: int,
                         constants: Optional[EmpiricalConstants] = None,
                         instance: str = "?") -> RcDominationResult:
    """Set D with at least c D-vertices within distance r of every vertex.

    Built in c stages: stage one is the greedy dominator; each later stage
    first adds one shadow vertex per projection class plus fillers for
    under-covered D-vertices, then re-runs the greedy dominator on the
    still-uncovered vertices in the graph minus everything chosen so far.
    The coverage invariant is re-checked after every stage.
    """
    if c < 1:
        raise InputError("multiplicity must be >= 1")
    for v in g.vertices:
        if len(ball(g, v, r)) < c:
            raise InfeasibleError(
                f"vertex {v} has only {len(ball(g, v, r))} vertices within "
                f"distance {r}, needs {c}")
    base = approx_dominating(g, r, constants=constants, instance=instance)
    d = set(base.dominating)
    for i in range(1, c):
        extra: set[int] = set()
        for _, members in profile_partition(g, d, r).classes:
            candidates = sorted(shadow(g, d, members[0], r) - d)
            if candidates:
                extra.add(candidates[0])
        for u in sorted(d):
            if len(ball(g, u, r) & (d | extra)) < i + 1:
                fillers = sorted(ball(g, u, r) - d - extra)
                if not fillers:
                    raise InfeasibleError(
                        f"vertex {u} cannot reach {i + 1} dominators")
                extra.add(fillers[0])
        combined = d | extra
        uncovered = [v for v in g.vertices
                     if len(ball(g, v, r) & combined) < i + 1]
        if set(uncovered) & combined:
            raise InternalCheckError("chosen vertex left under-covered")
        stage = approx_dominating(g, r, targets=uncovered,
                                  forbidden=frozenset(combined))
        d = combined | set(stage.dominating)
        for v in g.vertices:
            if len(ball(g, v, r) & d) < i + 1:
                raise InternalCheckError(
                    f"stage {i + 1} left vertex {v} under-covered")
    result = RcDominationResult(tuple(sorted(d)), r, c, base)
    if constants is not None and result.ratio is not None:
        constants.record("rc_approx_ratio", result.ratio, instance)
    return result
