"""Projections, shadows, projection profiles and the two closure operators.

The r-projection of u onto X collects the X-vertices reachable from u by
paths of length <= r whose internal vertices avoid X; the profile
additionally remembers the distances. The shadow collects nearby vertices
that are cut off by X. Profiles are canonical sorted (vertex, distance)
tuples, so profile equality is plain tuple equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .errors import ClosureDivergedError, InputError, InternalCheckError
from .graph import Graph, bfs_distances, degeneracy, induced_subgraph
from .reporting import EmpiricalConstants

CLOSURE_CAP_FACTOR = 10


@dataclass(frozen=True)
class ProjectionProfile:
    entries: tuple[tuple[int, int], ...]  # (vertex in X, distance in [1..r])
    radius: int

    def __post_init__(self):
        prev = -1
        for v, d in self.entries:
            if v <= prev:
                raise InputError("profile vertices not strictly increasing")
            if not 1 <= d <= self.radius:
                raise InputError(f"profile distance {d} outside [1, {self.radius}]")
            prev = v

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(v for v, _ in self.entries)


@dataclass(frozen=True)
class ProfilePartition:
    classes: tuple[tuple[ProjectionProfile, tuple[int, ...]], ...]
    ground: frozenset[int]  # V \ X


def _avoiding_distances(g: Graph, x: frozenset[int] | set[int], u: int,
                        r: int) -> dict[int, int]:
    # BFS that may reach X-vertices but never expands through them.
    return bfs_distances(g, [u], radius=r, no_expand=x)


def profile(g: Graph, x: Iterable[int], u: int, r: int) -> ProjectionProfile:
    xs = frozenset(x)
    g._check_vertex(u)
    if u in xs:
        raise InputError(f"profile source {u} lies inside X")
    dist = _avoiding_distances(g, xs, u, r)
    entries = tuple(sorted((v, d) for v, d in dist.items() if v in xs))
    return ProjectionProfile(entries, r)


def projection(g: Graph, x: Iterable[int], u: int, r: int) -> set[int]:
    return set(profile(g, x, u, r).support)


def shadow(g: Graph, x: Iterable[int], u: int, r: int) -> set[int]:
    """Vertices within distance r of u in g whose every short path from u
    crosses X internally. Restricted to the r-ball around u; the literal
    "no avoiding path" reading is vacuous outside it."""
    xs = frozenset(x)
    g._check_vertex(u)
    if u in xs:
        raise InputError(f"shadow source {u} lies inside X")
    near = bfs_distances(g, [u], radius=r)
    avoiding = _avoiding_distances(g, xs, u, r)
    return {v for v in near if v not in avoiding}


def sp_union(g: Graph, x: Iterable[int], u: int, r: int) -> set[int]:
    xs = frozenset(x)
    return shadow(g, xs, u, r) | projection(g, xs, u, r)


def profile_partition(g: Graph, x: Iterable[int], r: int,
                      constants: Optional[EmpiricalConstants] = None,
                      instance: str = "?") -> ProfilePartition:
    xs = frozenset(x)
    groups: dict[tuple, list[int]] = {}
    profiles: dict[tuple, ProjectionProfile] = {}
    for u in g.vertices:
        if u in xs:
            continue
        p = profile(g, xs, u, r)
        groups.setdefault(p.entries, []).append(u)
        profiles[p.entries] = p
    classes = tuple(
        (profiles[key], tuple(sorted(members)))
        for key, members in sorted(groups.items(), key=lambda kv: kv[1][0])
    )
    if constants is not None and xs:
        constants.record("profiles_per_core_vertex",
                         Fraction(len(classes), len(xs)), instance)
    return ProfilePartition(classes, frozenset(g.vertices) - xs)


def default_closure_threshold(g: Graph) -> int:
    return max(1, 4 * degeneracy(g))


def projection_closure(g: Graph, x: Iterable[int], r: int,
                       threshold: Optional[int] = None,
                       constants: Optional[EmpiricalConstants] = None,
                       instance: str = "?") -> set[int]:
    """Grow X until every outside vertex has an r-projection of size at
    most `threshold`, always absorbing the worst offender (ties by id)."""
    tau = default_closure_threshold(g) if threshold is None else threshold
    if tau < 1:
        raise InputError("closure threshold must be >= 1")
    closed = set(x)
    cap = CLOSURE_CAP_FACTOR * g.n
    for _ in range(cap + 1):
        worst = None
        worst_size = 0
        frozen = frozenset(closed)
        for u in g.vertices:
            if u in frozen:
                continue
            size = len(profile(g, frozen, u, r).entries)
            if size > worst_size:
                worst, worst_size = u, size
        if worst is None or worst_size <= tau:
            if constants is not None and x:
                base = len(set(x))
                if base:
                    constants.record("closure_blowup",
                                     Fraction(len(closed), base), instance)
            return closed
        closed.add(worst)
    raise ClosureDivergedError(
        f"projection closure exceeded {cap} iterations (threshold {tau})")


def _lex_shortest_path(g: Graph, u: int, v: int) -> list[int]:
    """Lexicographically least shortest u-v path, as a vertex sequence."""
    back = bfs_distances(g, [v])
    if u not in back:
        raise InputError(f"no path between {u} and {v}")
    path = [u]
    w = u
    while w != v:
        w = min(z for z in g.adjacency[w] if back.get(z, -1) == back[w] - 1)
        path.append(w)
    return path


def path_closure(g: Graph, x: Iterable[int], r: int) -> set[int]:
    """Smallest-effort superset X' of X such that g[X'] realizes every
    g-distance <= r between X-vertices; idempotent."""
    xs = sorted(set(x))
    closed = set(xs)
    for i, u in enumerate(xs):
        du = bfs_distances(g, [u], radius=r)
        for v in xs[i + 1:]:
            d = du.get(v)
            if d is None:
                continue
            sub, to_sub, _ = induced_subgraph(g, closed)
            inside = bfs_distances(sub, [to_sub[u]], radius=r)
            if inside.get(to_sub[v]) == d:
                continue
            closed.update(_lex_shortest_path(g, u, v)[1:-1])
    return closed


@dataclass(frozen=True)
class ProjectionKernel:
    graph: Graph          # induced subgraph of the input
    to_sub: dict[int, int]
    to_orig: dict[int, int]
    core: frozenset[int]  # X mapped into the subgraph


@dataclass(frozen=True)
class KernelCheckReport:
    neighborhoods_ok: bool
    multiplicities_ok: bool
    failures: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return self.neighborhoods_ok and self.multiplicities_ok


def verify_projection_kernel(g: Graph, x: Iterable[int], r: int, c: int,
                             kernel: ProjectionKernel) -> KernelCheckReport:
    """Recompute both defining properties of an (r,c)-projection kernel
    directly on the output; ships as a test utility."""
    xs = sorted(set(x))
    xset = frozenset(xs)
    failures: list[str] = []
    nb_ok = True
    sub = kernel.graph
    for v in xs:
        dg = bfs_distances(g, [v], radius=r)
        ds = bfs_distances(sub, [kernel.to_sub[v]], radius=r)
        for d in range(1, r + 1):
            in_g = {w for w, dd in dg.items() if dd <= d and w in xset}
            in_sub = {kernel.to_orig[w] for w, dd in ds.items()
                      if dd <= d and kernel.to_orig[w] in xset}
            if in_g != in_sub:
                nb_ok = False
                failures.append(f"neighborhood of {v} at distance {d} differs")
                break
    mult_ok = True
    counts_g: dict[tuple, int] = {}
    for u in g.vertices:
        if u in xset:
            continue
        entries = profile(g, xset, u, r).entries
        counts_g[entries] = counts_g.get(entries, 0) + 1
    xsub = frozenset(kernel.to_sub[v] for v in xs)
    counts_sub: dict[tuple, int] = {}
    for u in sub.vertices:
        if u in xsub:
            continue
        entries = tuple(sorted((kernel.to_orig[v], d) for v, d
                               in profile(sub, xsub, u, r).entries))
        counts_sub[entries] = counts_sub.get(entries, 0) + 1
    for entries, p in counts_g.items():
        need = min(c, p)
        if counts_sub.get(entries, 0) < need:
            mult_ok = False
            failures.append(
                f"profile {entries} realized {counts_sub.get(entries, 0)} "
                f"times, needs {need}")
    return KernelCheckReport(nb_ok, mult_ok, tuple(failures))


def projection_kernel(g: Graph, x: Iterable[int], r: int, c: int,
                      closure_radius: Optional[int] = None,
                      threshold: Optional[int] = None,
                      constants: Optional[EmpiricalConstants] = None,
                      instance: str = "?") -> ProjectionKernel:
    """Induced subgraph preserving short X-distances and realizing every
    profile with multiplicity min{c, p}; both properties are re-verified
    on the output at runtime."""
    if c < 1:
        raise InputError("multiplicity must be >= 1")
    xs = sorted(set(x))
    x1 = projection_closure(g, xs, closure_radius if closure_radius is not None else r,
                            threshold, constants, instance)
    x2 = path_closure(g, x1, r)
    partition = profile_partition(g, x1, r)
    reps: list[int] = []
    for _, members in partition.classes:
        reps.extend(members[:c])
    keep = set(x2) | set(reps)
    x1f = frozenset(x1)
    for u in sorted(keep - x1f):
        dist = _avoiding_distances(g, x1f, u, r)
        for v in sorted(w for w in dist if w in x1f):
            keep.update(_avoiding_lex_path(g, x1f, u, v, dist[v]))
    sub, to_sub, to_orig = induced_subgraph(g, keep | x1f)
    kernel = ProjectionKernel(sub, to_sub, to_orig,
                              frozenset(to_sub[v] for v in xs))
    report = verify_projection_kernel(g, xs, r, c, kernel)
    if not report.ok:
        raise InternalCheckError(
            "projection kernel self-check failed: " + "; ".join(report.failures))
    if constants is not None and xs:
        constants.record("kernel_vertices_per_core_vertex",
                         Fraction(sub.n, len(xs)), instance)
    return kernel


def _avoiding_lex_path(g: Graph, x: frozenset[int], u: int, v: int,
                       d: int) -> list[int]:
    """Internal vertices of the lex-least shortest X-avoiding u-v path."""
    # Backward X-avoiding distances; v may lie in X but is still expanded
    # as the source, matching the endpoint-free avoidance convention.
    back = bfs_distances(g, [v], radius=d, no_expand=x)
    path = []
    w = u
    remaining = d
    while remaining > 1:
        w = min(z for z in g.adjacency[w]
                if z not in x and back.get(z, -1) == remaining - 1)
        path.append(w)
        remaining -= 1
    return path
