"""Annotated instances, bikernels, gadget kernels and multikernels.

A bikernel maps a plain instance to an equivalent annotated one on a
(hopefully much smaller) induced subgraph; a gadget kernel maps the
annotated instance back to a plain instance of the same problem by
attaching a fixed gadget that shifts the budget by a declared offset; the
multikernels share one core between several problems at once. Early
exits rely on certified witnesses only (feasibility balls and greedy
scattered sets) and emit canonical trivial fixtures that decide the same
way at their own budget.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Iterable, Optional

from .cores import (constraint_core_rc_dom, constraint_core_roman,
                    constraint_core_total, reduce_annotated_lambda_mu,
                    solution_core_scattered)
from .domination import approx_dominating, approx_rc_dominating
from .errors import InfeasibleError, InputError
from .graph import (Graph, GraphBuilder, ball, from_edges, greedy_scattered,
                    induced_subgraph, parse_graph, serialize_graph)
from .projections import path_closure, projection_kernel
from .reporting import EmpiricalConstants

PROBLEMS = ("rcdom", "total", "roman", "scatter", "lambdamu", "perfectcode")

GADGET_PREFIX = "g:"


@dataclass(frozen=True)
class AnnotatedInstance:
    graph: Graph
    problem: str
    r: int
    c: int = 1
    lam: int = 1
    mu: int = 1
    k: int = 0
    constrained: frozenset[int] = frozenset()  # L
    allowed: frozenset[int] = frozenset()      # U
    offset: int = 0
    origin: dict[int, str] = field(default_factory=dict)

    def __post_init__(self):
        if self.problem not in PROBLEMS:
            raise InputError(f"unknown problem {self.problem!r}")
        verts = set(self.graph.vertices)
        if not (self.constrained <= verts and self.allowed <= verts):
            raise InputError("constraint sets exceed the vertex set")
        if self.offset < 0 or self.k < 0:
            raise InputError("budget and offset must be nonnegative")
        if set(self.origin) != verts:
            raise InputError("origin map must cover every vertex")

    def gadget_vertices(self) -> set[int]:
        return {v for v, tag in self.origin.items()
                if tag.startswith(GADGET_PREFIX)}


def plain_instance(g: Graph, problem: str, r: int, c: int = 1,
                   lam: int = 1, mu: int = 1, k: int = 0) -> AnnotatedInstance:
    """The annotated form of an unannotated instance: every vertex is both
    constrained and allowed."""
    verts = frozenset(g.vertices)
    return AnnotatedInstance(g, problem, r, c, lam, mu, k, verts, verts, 0,
                             {v: f"v{v}" for v in g.vertices})


def strip_gadgets(inst: AnnotatedInstance) -> Graph:
    """The instance graph with every gadget-tagged vertex removed."""
    keep = set(inst.graph.vertices) - inst.gadget_vertices()
    return induced_subgraph(inst.graph, keep)[0]


# --- text format -----------------------------------------------------------

def serialize_instance(inst: AnnotatedInstance) -> str:
    lines = [serialize_graph(inst.graph).rstrip("\n")]
    lines.append(f"problem {inst.problem}")
    lines.append(f"r {inst.r}")
    lines.append(f"c {inst.c}")
    lines.append(f"lambda {inst.lam}")
    lines.append(f"mu {inst.mu}")
    lines.append(f"k {inst.k}")
    lines.append("L " + " ".join(str(v) for v in sorted(inst.constrained)))
    lines.append("U " + " ".join(str(v) for v in sorted(inst.allowed)))
    lines.append(f"offset {inst.offset}")
    lines.append("origin " + " ".join(
        f"{v}:{inst.origin[v]}" for v in sorted(inst.origin)))
    return "\n".join(lines) + "\n"


def parse_instance(text: str) -> AnnotatedInstance:
    lines = text.splitlines()
    split = next((i for i, line in enumerate(lines)
                  if line.strip().startswith("problem ")), None)
    if split is None:
        raise InputError("missing 'problem' line")
    g = parse_graph("\n".join(lines[:split]))
    fields: dict[str, str] = {}
    for raw in lines[split:]:
        line = raw.strip()
        if not line:
            continue
        key, _, rest = line.partition(" ")
        fields[key] = rest.strip()
    try:
        origin = {}
        for pair in fields.get("origin", "").split():
            idx, _, tag = pair.partition(":")
            origin[int(idx)] = tag
        return AnnotatedInstance(
            g, fields["problem"], int(fields["r"]), int(fields.get("c", 1)),
            int(fields.get("lambda", 1)), int(fields.get("mu", 1)),
            int(fields.get("k", 0)),
            frozenset(int(v) for v in fields.get("L", "").split()),
            frozenset(int(v) for v in fields.get("U", "").split()),
            int(fields.get("offset", 0)), origin)
    except (KeyError, ValueError) as exc:
        raise InputError(f"bad annotated instance field: {exc}") from exc


# --- canonical trivial fixtures --------------------------------------------

def trivial_no(problem: str, r: int, c: int = 1, lam: int = 1,
               mu: int = 1) -> AnnotatedInstance:
    """A fixed instance that decides 'no' at its own budget.

    Minimization problems use a single constrained vertex with budget 0;
    the scattered maximization uses an empty candidate set with budget 1.
    """
    g = from_edges(1, [])
    origin = {0: GADGET_PREFIX + "trivial"}
    if problem == "scatter":
        return AnnotatedInstance(g, problem, r, c, lam, mu, 1,
                                 frozenset(), frozenset(), 0, origin)
    return AnnotatedInstance(g, problem, r, c, lam, mu, 0,
                             frozenset({0}), frozenset({0}), 0, origin)


def trivial_yes(problem: str, r: int, c: int = 1, lam: int = 1,
                mu: int = 1) -> AnnotatedInstance:
    """A fixed instance that decides 'yes' at its own budget: nothing is
    constrained and the budget is zero."""
    g = from_edges(1, [])
    origin = {0: GADGET_PREFIX + "trivial"}
    return AnnotatedInstance(g, problem, r, c, lam, mu, 0,
                             frozenset(), frozenset(), 0, origin)


# --- bikernels -------------------------------------------------------------

def _kernel_instance(g: Graph, kern, problem: str, r: int, c: int, lam: int,
                     mu: int, k: int, core: Iterable[int],
                     scattered_style: bool = False) -> AnnotatedInstance:
    mapped = frozenset(kern.to_sub[v] for v in core)
    origin = {v: f"v{kern.to_orig[v]}" for v in kern.graph.vertices}
    if scattered_style:
        constrained: frozenset[int] = frozenset()
        allowed = mapped
    else:
        constrained = mapped
        allowed = frozenset(kern.graph.vertices)
    return AnnotatedInstance(kern.graph, problem, r, c, lam, mu, k,
                             constrained, allowed, 0, origin)


@dataclass(frozen=True)
class PreparedBikernel:
    """The budget-independent part of a bikernel: early-exit thresholds
    plus the reduced annotated instance, specialized per budget by
    for_k. Running the whole pipeline once and sweeping k is what keeps
    exhaustive verification over every budget affordable."""
    problem: str
    r: int
    c: int
    lam: int
    mu: int
    infeasible: bool                      # ball check failed: no for all k
    witness_size: int                     # greedy scattered witness |A|
    yes_bound: Optional[int]              # certified upper bound, if any
    template: Optional[AnnotatedInstance]  # reduced instance with k = 0

    def for_k(self, k: int) -> AnnotatedInstance:
        if k < 0:
            raise InputError("budget must be >= 0")
        if self.infeasible:
            return trivial_no(self.problem, self.r, self.c, self.lam, self.mu)
        if self.problem == "scatter":
            if self.witness_size >= k:
                return trivial_yes(self.problem, self.r, self.c)
        else:
            if self.witness_size > k:
                return trivial_no(self.problem, self.r, self.c,
                                  self.lam, self.mu)
            if self.yes_bound is not None and self.yes_bound <= k:
                return trivial_yes(self.problem, self.r, self.c,
                                   self.lam, self.mu)
        assert self.template is not None
        return replace(self.template, k=k)


def prepare_rc_dom(g: Graph, r: int, c: int, *, batch: bool = False,
                   constants: Optional[EmpiricalConstants] = None,
                   instance: str = "?") -> PreparedBikernel:
    _check_params(r=r, c=c)
    if any(len(ball(g, v, r)) < c for v in g.vertices):
        return PreparedBikernel("rcdom", r, c, 1, 1, True, 0, None, None)
    witness = len(greedy_scattered(g, g.vertices, r))
    core = constraint_core_rc_dom(g, r, c, batch=batch, constants=constants,
                                  instance=instance).core
    kern = projection_kernel(g, core, r, c, constants=constants,
                             instance=instance)
    template = _kernel_instance(g, kern, "rcdom", r, c, 1, 1, 0, core)
    return PreparedBikernel("rcdom", r, c, 1, 1, False, witness, None,
                            template)


def prepare_total(g: Graph, r: int, *, batch: bool = False,
                  constants: Optional[EmpiricalConstants] = None,
                  instance: str = "?") -> PreparedBikernel:
    _check_params(r=r)
    if any(len(ball(g, v, r)) < 2 for v in g.vertices):
        return PreparedBikernel("total", r, 1, 1, 1, True, 0, None, None)
    witness = len(greedy_scattered(g, g.vertices, r))
    cert = approx_dominating(g, r)
    totalized = set(cert.dominating)
    for v in cert.dominating:
        totalized.add(g.adjacency[v][0])
    core = constraint_core_total(g, r, batch=batch, constants=constants,
                                 instance=instance).core
    kern = projection_kernel(g, core, r, 1, constants=constants,
                             instance=instance)
    template = _kernel_instance(g, kern, "total", r, 1, 1, 1, 0, core)
    return PreparedBikernel("total", r, 1, 1, 1, False, witness,
                            len(totalized), template)


def prepare_roman(g: Graph, r: int, *, batch: bool = False,
                  constants: Optional[EmpiricalConstants] = None,
                  instance: str = "?") -> PreparedBikernel:
    _check_params(r=r)
    witness = len(greedy_scattered(g, g.vertices, r))
    cert = approx_dominating(g, r)
    core = constraint_core_roman(g, r, batch=batch, constants=constants,
                                 instance=instance).core
    kern = projection_kernel(g, core, r, 1, constants=constants,
                             instance=instance)
    template = _kernel_instance(g, kern, "roman", r, 1, 1, 1, 0, core)
    return PreparedBikernel("roman", r, 1, 1, 1, False, witness,
                            2 * len(cert.dominating), template)


def prepare_scattered(g: Graph, r: int, c: int, *, batch: bool = False,
                      constants: Optional[EmpiricalConstants] = None,
                      instance: str = "?") -> PreparedBikernel:
    _check_params(r=r, c=c)
    witness = len(greedy_scattered(g, g.vertices, r))
    core = solution_core_scattered(g, r, c, batch=batch, constants=constants,
                                   instance=instance).core
    kern = projection_kernel(g, core, r, c, constants=constants,
                             instance=instance)
    template = _kernel_instance(g, kern, "scatter", r, c, 1, 1, 0, core,
                                scattered_style=True)
    return PreparedBikernel("scatter", r, c, 1, 1, False, witness, None,
                            template)


def prepare_lambda_mu(g: Graph, r: int, lam: int, mu: int, *,
                      batch: bool = False,
                      constants: Optional[EmpiricalConstants] = None,
                      instance: str = "?") -> PreparedBikernel:
    _check_params(r=r)
    if not 1 <= lam <= mu:
        raise InputError("bounds must satisfy 1 <= lam <= mu")
    if any(len(ball(g, v, r)) < lam for v in g.vertices):
        return PreparedBikernel("lambdamu", r, 1, lam, mu, True, 0, None,
                                None)
    witness = len(greedy_scattered(g, g.vertices, r))
    try:
        dominator = approx_rc_dominating(g, r, mu).dominating
    except InfeasibleError:
        dominator = None
    red = reduce_annotated_lambda_mu(g, g.vertices, g.vertices, r, lam, mu,
                                     dominator=dominator, batch=batch,
                                     constants=constants, instance=instance)
    closed = path_closure(g, red.allowed, r)
    sub, to_sub, to_orig = induced_subgraph(g, closed)
    origin = {v: f"v{to_orig[v]}" for v in sub.vertices}
    template = AnnotatedInstance(
        sub, "lambdamu", r, 1, lam, mu, 0,
        frozenset(to_sub[v] for v in red.constrained),
        frozenset(to_sub[v] for v in red.allowed), 0, origin)
    return PreparedBikernel("lambdamu", r, 1, lam, mu, False, witness, None,
                            template)


def prepare_bikernel(problem: str, g: Graph, r: int, c: int = 1,
                     lam: int = 1, mu: int = 1, *, batch: bool = False,
                     constants: Optional[EmpiricalConstants] = None,
                     instance: str = "?") -> PreparedBikernel:
    if problem == "rcdom":
        return prepare_rc_dom(g, r, c, batch=batch, constants=constants,
                              instance=instance)
    if problem == "total":
        return prepare_total(g, r, batch=batch, constants=constants,
                             instance=instance)
    if problem == "roman":
        return prepare_roman(g, r, batch=batch, constants=constants,
                             instance=instance)
    if problem == "scatter":
        return prepare_scattered(g, r, c, batch=batch, constants=constants,
                                 instance=instance)
    if problem in ("lambdamu", "perfectcode"):
        return prepare_lambda_mu(g, r, lam, mu, batch=batch,
                                 constants=constants, instance=instance)
    raise InputError(f"unknown problem {problem!r}")


def bikernel_rc_dom(g: Graph, r: int, c: int, k: int, *, batch: bool = False,
                    constants: Optional[EmpiricalConstants] = None,
                    instance: str = "?") -> AnnotatedInstance:
    """Annotated instance equivalent to: does g have a set of size <= k
    with c members within distance r of every vertex?"""
    return prepare_rc_dom(g, r, c, batch=batch, constants=constants,
                          instance=instance).for_k(k)


def bikernel_total(g: Graph, r: int, k: int, *, batch: bool = False,
                   constants: Optional[EmpiricalConstants] = None,
                   instance: str = "?") -> AnnotatedInstance:
    return prepare_total(g, r, batch=batch, constants=constants,
                         instance=instance).for_k(k)


def bikernel_roman(g: Graph, r: int, k: int, *, batch: bool = False,
                   constants: Optional[EmpiricalConstants] = None,
                   instance: str = "?") -> AnnotatedInstance:
    return prepare_roman(g, r, batch=batch, constants=constants,
                         instance=instance).for_k(k)


def bikernel_scattered(g: Graph, r: int, c: int, k: int, *,
                       batch: bool = False,
                       constants: Optional[EmpiricalConstants] = None,
                       instance: str = "?") -> AnnotatedInstance:
    return prepare_scattered(g, r, c, batch=batch, constants=constants,
                             instance=instance).for_k(k)


def bikernel_lambda_mu(g: Graph, r: int, lam: int, mu: int, k: int, *,
                       batch: bool = False,
                       constants: Optional[EmpiricalConstants] = None,
                       instance: str = "?") -> AnnotatedInstance:
    return prepare_lambda_mu(g, r, lam, mu, batch=batch, constants=constants,
                             instance=instance).for_k(k)


def _check_params(**kwargs: int) -> None:
    for name, value in kwargs.items():
        floor = 0 if name == "k" else 1
        if value < floor:
            raise InputError(f"parameter {name} must be >= {floor}")


# --- gadget kernels: annotated back to plain -------------------------------

def _plainized(inst: AnnotatedInstance, b: GraphBuilder,
               tags: dict[int, str], added_offset: int) -> AnnotatedInstance:
    g2 = b.build()
    origin = dict(inst.origin)
    origin.update(tags)
    verts = frozenset(g2.vertices)
    return AnnotatedInstance(g2, inst.problem, inst.r, inst.c, inst.lam,
                             inst.mu, inst.k + added_offset, verts, verts,
                             inst.offset + added_offset, origin)


def _tag_path(b: GraphBuilder, u: int, v: Optional[int], length: int,
              tags: dict[int, str], name: str) -> int:
    """Add a path and tag its fresh vertices; returns the far endpoint."""
    if v is None:
        v = b.add_vertex()
        tags[v] = GADGET_PREFIX + name
    for i, w in enumerate(b.add_path(u, v, length)):
        tags[w] = GADGET_PREFIX + f"{name}.p{i}"
    return v


def be_kernel_rc_dom(inst: AnnotatedInstance) -> AnnotatedInstance:
    """Plain (r,c)-domination instance whose optimum exceeds the annotated
    optimum by exactly c."""
    if inst.problem != "rcdom":
        raise InputError("expected an rcdom instance")
    r, c = inst.r, inst.c
    outside = sorted(set(inst.graph.vertices) - inst.constrained)
    b = GraphBuilder(inst.graph)
    tags: dict[int, str] = {}
    a_vs = []
    for i in range(c):
        a = b.add_vertex()
        tags[a] = GADGET_PREFIX + f"a{i + 1}"
        a_vs.append(a)
    if r >= 2:
        b1 = b.add_vertex()
        b2 = b.add_vertex()
        b3 = b.add_vertex()
        tags[b1] = GADGET_PREFIX + "b1"
        tags[b2] = GADGET_PREFIX + "b2"
        tags[b3] = GADGET_PREFIX + "b3"
        for a in a_vs:
            b.add_edge(a, b1)
            b.add_edge(a, b2)
        for o in outside:
            _tag_path(b, b1, o, r - 1, tags, f"b1-{o}")
        _tag_path(b, b2, b3, r - 1, tags, "b2-b3")
    else:
        bv = b.add_vertex()
        tags[bv] = GADGET_PREFIX + "b"
        for i, a in enumerate(a_vs):
            b.add_edge(a, bv)
            for o in outside:
                b.add_edge(a, o)
            # the a-clique lets each a_i see all c of them, mirroring
            # their mutual distance-2 reach through b1 in the r >= 2 case
            for other in a_vs[i + 1:]:
                b.add_edge(a, other)
    return _plainized(inst, b, tags, c)


def be_kernel_total(inst: AnnotatedInstance) -> AnnotatedInstance:
    """Plain total domination instance; optimum shifts by exactly 2."""
    if inst.problem != "total":
        raise InputError("expected a total instance")
    r = inst.r
    outside = sorted(set(inst.graph.vertices) - inst.constrained)
    b = GraphBuilder(inst.graph)
    tags: dict[int, str] = {}
    bv = b.add_vertex()
    tags[bv] = GADGET_PREFIX + "b"
    for o in outside:
        _tag_path(b, bv, o, r, tags, f"b-{o}")
    a1 = _tag_path(b, bv, None, r, tags, "a1")
    _tag_path(b, a1, None, r, tags, "a2")
    return _plainized(inst, b, tags, 2)


def be_kernel_roman(inst: AnnotatedInstance) -> AnnotatedInstance:
    """Plain weighted two-level domination instance; cost shifts by 2."""
    if inst.problem != "roman":
        raise InputError("expected a roman instance")
    r = inst.r
    outside = sorted(set(inst.graph.vertices) - inst.constrained)
    b = GraphBuilder(inst.graph)
    tags: dict[int, str] = {}
    bv = b.add_vertex()
    tags[bv] = GADGET_PREFIX + "b"
    for o in outside:
        _tag_path(b, bv, o, r, tags, f"b-{o}")
    for i in range(3):
        _tag_path(b, bv, None, r, tags, f"a{i + 1}")
    return _plainized(inst, b, tags, 2)


def be_kernel_scattered(inst: AnnotatedInstance) -> AnnotatedInstance:
    """Plain scattered-set instance; maximum shifts by exactly c."""
    if inst.problem != "scatter":
        raise InputError("expected a scatter instance")
    r, c = inst.r, inst.c
    outside = sorted(set(inst.graph.vertices) - inst.allowed)
    b = GraphBuilder(inst.graph)
    tags: dict[int, str] = {}
    a1 = b.add_vertex()
    tags[a1] = GADGET_PREFIX + "a1"
    if r >= 2:
        a2 = _tag_path(b, a1, None, r - 1, tags, "a2")
    else:
        a2 = a1  # the two anchors coincide at radius one
    for i in range(c):
        bi = b.add_vertex()
        tags[bi] = GADGET_PREFIX + f"b{i + 1}"
        b.add_edge(a2, bi)
    for o in outside:
        _tag_path(b, a1, o, r, tags, f"a1-{o}")
    return _plainized(inst, b, tags, c)


def be_kernel_perfect_code(inst: AnnotatedInstance) -> AnnotatedInstance:
    """Plain exact-one-cover instance built from a lam = mu = 1 annotated
    instance; the constraint set is first extended to the whole candidate
    set, then every vertex outside it grows a pendant path of length 2r,
    shifting the optimum by the number of such vertices."""
    if inst.problem not in ("lambdamu", "perfectcode"):
        raise InputError("expected a lambdamu or perfectcode instance")
    if not (inst.lam == inst.mu == 1):
        raise InputError("perfect code needs lam = mu = 1")
    r = inst.r
    constrained = inst.allowed  # extend L to U; enlarging a core is safe
    outside = sorted(set(inst.graph.vertices) - constrained)
    b = GraphBuilder(inst.graph)
    tags: dict[int, str] = {}
    for o in outside:
        _tag_path(b, o, None, 2 * r, tags, f"tail-{o}")
    out = _plainized(inst, b, tags, len(outside))
    return AnnotatedInstance(out.graph, "perfectcode", r, 1, 1, 1, out.k,
                             out.constrained, out.allowed, out.offset,
                             out.origin)


# --- multikernels ----------------------------------------------------------

@dataclass(frozen=True)
class DominationFamilyKernel:
    graph: Graph
    r: int
    offset: int           # shared shift c; the weighted variant shifts 2c
    core: frozenset[int]  # joint core inside the output graph
    origin: dict[int, str]


def multikernel_domination_family(g: Graph, r: int, *, batch: bool = False,
                                  constants: Optional[EmpiricalConstants] = None,
                                  instance: str = "?") -> DominationFamilyKernel:
    """One graph whose plain, total and weighted domination numbers all
    exceed g's by a declared offset (2|O|, 2|O| and 4|O|), built from the
    union of the three constraint cores plus one tree gadget per kernel
    vertex outside the joint core."""
    _check_params(r=r)
    cores = (constraint_core_rc_dom(g, r, 1, batch=batch, constants=constants,
                                    instance=instance).core
             | constraint_core_total(g, r, batch=batch, constants=constants,
                                     instance=instance).core
             | constraint_core_roman(g, r, batch=batch, constants=constants,
                                     instance=instance).core)
    kern = projection_kernel(g, cores, r, 1, constants=constants,
                             instance=instance)
    mapped = frozenset(kern.to_sub[v] for v in cores)
    outside = sorted(set(kern.graph.vertices) - mapped)
    b = GraphBuilder(kern.graph)
    tags = {v: f"v{kern.to_orig[v]}" for v in kern.graph.vertices}
    for v in outside:
        b1 = _tag_path(b, v, None, r, tags, f"t{v}.b1")
        b2 = _tag_path(b, b1, None, r, tags, f"t{v}.b2")
        for i in range(1, 4):
            _tag_path(b, b1, None, r, tags, f"t{v}.a{i}")
        for i in range(4, 7):
            _tag_path(b, b2, None, r, tags, f"t{v}.a{i}")
    return DominationFamilyKernel(b.build(), r, 2 * len(outside), mapped, tags)


@dataclass(frozen=True)
class DomIndKernel:
    graph: Graph
    lam: int
    mu: int
    sigma: int
    offsets: dict[int, int]  # radius -> shift for domination and 2r-independence
    core: frozenset[int]
    origin: dict[int, str]


def multikernel_dom_ind(g: Graph, lam: int, mu: int, *, batch: bool = False,
                        constants: Optional[EmpiricalConstants] = None,
                        instance: str = "?") -> DomIndKernel:
    """One graph shifting, for every radius in [lam, mu], both the
    domination number and the 2r-independence number by (sigma/(2r+1))|O|,
    where sigma is the least common multiple of the 2r+1 and O is the set
    of kernel vertices outside the joint core; each O-vertex grows a
    pendant path of length sigma-1."""
    if not 1 <= lam <= mu:
        raise InputError("bounds must satisfy 1 <= lam <= mu")
    joint: set[int] = set()
    for r in range(lam, mu + 1):
        joint |= constraint_core_rc_dom(g, r, 1, batch=batch,
                                        constants=constants,
                                        instance=instance).core
        joint |= solution_core_scattered(g, r, 1, batch=batch,
                                         constants=constants,
                                         instance=instance).core
    kern = projection_kernel(g, joint, mu, 1, constants=constants,
                             instance=instance)
    mapped = frozenset(kern.to_sub[v] for v in joint)
    outside = sorted(set(kern.graph.vertices) - mapped)
    sigma = math.lcm(*(2 * r + 1 for r in range(lam, mu + 1)))
    b = GraphBuilder(kern.graph)
    tags = {v: f"v{kern.to_orig[v]}" for v in kern.graph.vertices}
    for v in outside:
        _tag_path(b, v, None, sigma - 1, tags, f"p{v}")
    offsets = {r: (sigma // (2 * r + 1)) * len(outside)
               for r in range(lam, mu + 1)}
    return DomIndKernel(b.build(), lam, mu, sigma, offsets, mapped, tags)
