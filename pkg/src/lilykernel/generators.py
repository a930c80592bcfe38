"""Seeded test-instance families: grids, cycles, stars, spider forests
and random graphs of bounded degeneracy. Identical specs always produce
identical graphs."""

from __future__ import annotations

import random
import re
from dataclasses import dataclass

from .errors import InputError
from .graph import Graph, from_edges

FAMILIES = ("grid", "random_degenerate", "spider_forest", "cycle", "star")


@dataclass(frozen=True)
class GeneratorSpec:
    family: str
    params: tuple[int, ...]
    seed: int = 0

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise InputError(f"unknown family {self.family!r}")

    def __str__(self) -> str:
        inner = ",".join(str(p) for p in self.params)
        return f"{self.family}({inner})"


_SPEC_RE = re.compile(r"^\s*([a-z_]+)\s*\(\s*([-0-9,\s]*)\)\s*$")


def parse_spec(text: str, seed: int = 0) -> GeneratorSpec:
    m = _SPEC_RE.match(text)
    if m is None:
        raise InputError(f"cannot parse generator spec {text!r}")
    family = m.group(1)
    try:
        params = tuple(int(p) for p in m.group(2).split(",") if p.strip())
    except ValueError as exc:
        raise InputError(f"bad generator parameter in {text!r}") from exc
    return GeneratorSpec(family, params, seed)


def grid(width: int, height: int) -> Graph:
    if width < 1 or height < 1:
        raise InputError("grid dimensions must be positive")
    edges = []
    for y in range(height):
        for x in range(width):
            v = y * width + x
            if x + 1 < width:
                edges.append((v, v + 1))
            if y + 1 < height:
                edges.append((v, v + width))
    return from_edges(width * height, edges)


def cycle(n: int) -> Graph:
    if n < 3:
        raise InputError("cycle needs at least 3 vertices")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star(leaves: int) -> Graph:
    if leaves < 1:
        raise InputError("star needs at least one leaf")
    return from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def spider_forest(count: int, legs: int, leg_len: int) -> Graph:
    """Disjoint spiders: each has a centre with `legs` pendant paths of
    `leg_len` edges, so 1 + legs*leg_len vertices per component."""
    if count < 1 or legs < 1 or leg_len < 1:
        raise InputError("spider parameters must be positive")
    per = 1 + legs * leg_len
    edges = []
    for s in range(count):
        base = s * per
        v = base + 1
        for _ in range(legs):
            prev = base
            for _ in range(leg_len):
                edges.append((prev, v))
                prev = v
                v += 1
    return from_edges(count * per, edges)


def random_degenerate(n: int, d: int, seed: int) -> Graph:
    """Random graph that is d-degenerate by construction: each vertex
    picks at most d earlier vertices as neighbours."""
    if n < 1 or d < 0:
        raise InputError("need n >= 1 and d >= 0")
    rng = random.Random(seed)
    edges = []
    for v in range(1, n):
        count = rng.randint(0, min(d, v))
        for u in sorted(rng.sample(range(v), count)):
            edges.append((u, v))
    return from_edges(n, edges)


def generate(spec: GeneratorSpec) -> Graph:
    fam, p = spec.family, spec.params
    try:
        if fam == "grid":
            return grid(*p)
        if fam == "cycle":
            return cycle(*p)
        if fam == "star":
            return star(*p)
        if fam == "spider_forest":
            return spider_forest(*p)
        if fam == "random_degenerate":
            if len(p) == 2:
                return random_degenerate(p[0], p[1], spec.seed)
            return random_degenerate(*p)
    except TypeError as exc:
        raise InputError(f"wrong parameter count for {fam}: {p}") from exc
    raise InputError(f"unknown family {fam!r}")
