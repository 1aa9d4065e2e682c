"""Isomorph-free generation of forbidden-induced-subgraph classes.

Generation is by vertex augmentation.  Level ``l`` holds one canonical
representative per isomorphism class of order ``l``; each child adds a vertex
joined to a subset of the parent, and is kept when no forbidden pattern uses
the new vertex.  Because the classes are hereditary, checking copies through
the new vertex is enough.  For connected targets every level is connected: a
connected graph always has a vertex whose deletion leaves it connected.
"""

from __future__ import annotations

import logging
import random
import time
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence, TextIO

from .errors import BudgetExceeded, Graph6ParseError, GenerationRefused, InvalidParameterError
from .graph import (
    CANONICAL_MAX_ORDER,
    Graph,
    bits,
    canonical_graph,
    is_two_connected,
    parse_graph6,
)
from .patterns import Pattern, contains_induced_at

log = logging.getLogger(__name__)

CONNECTIVITY = ("any", "connected", "two_connected")
UNRESTRICTED_MAX_ORDER = 9


@dataclass(frozen=True)
class ClassSpec:
    target_order: int
    forbidden: tuple[Pattern, ...]
    connectivity: str = "connected"
    max_degree: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "forbidden", tuple(self.forbidden))
        if self.connectivity not in CONNECTIVITY:
            raise InvalidParameterError(
                f"connectivity must be one of {', '.join(CONNECTIVITY)}, got {self.connectivity!r}"
            )
        if self.target_order < 1:
            raise InvalidParameterError("target order must be at least 1")
        for p in self.forbidden:
            if p.order < 2:
                raise InvalidParameterError(f"forbidden pattern {p.name} has fewer than 2 vertices")


@dataclass
class LevelStats:
    order: int
    parents: int = 0
    candidates: int = 0
    rejected: int = 0
    duplicates: int = 0
    kept: int = 0
    seconds: float = 0.0


@dataclass
class GenStats:
    levels: dict[int, LevelStats] = field(default_factory=dict)
    emitted: int = 0
    seconds: float = 0.0

    def to_json(self) -> dict:
        return {
            "levels": {
                str(k): {
                    "parents": s.parents,
                    "candidates": s.candidates,
                    "rejected": s.rejected,
                    "duplicates": s.duplicates,
                    "kept": s.kept,
                    "seconds": round(s.seconds, 3),
                }
                for k, s in sorted(self.levels.items())
            },
            "emitted": self.emitted,
            "seconds": round(self.seconds, 3),
        }


def _leaf_constraints(adj: Sequence[int], ell: int) -> list[list[tuple[int, int]]]:
    """Claws that would have the new vertex as a leaf.

    For every u and non-adjacent a, b in N(u): if u joins the neighbourhood,
    a or b must join too.  Each constraint is filed under its largest vertex,
    which is when the subset walk can first decide it.
    """
    at: list[list[tuple[int, int]]] = [[] for _ in range(ell)]
    for u in range(ell):
        nb = adj[u]
        for a in bits(nb):
            for b in bits(nb & ~adj[a] & ~((1 << (a + 1)) - 1)):
                at[max(u, b)].append((1 << u, (1 << a) | (1 << b)))
    return at


def _neighbourhoods(adj: Sequence[int], ell: int, claw: bool, max_degree: int | None,
                    nonempty: bool) -> Iterator[int]:
    """Vertex subsets of the parent that may become the new vertex's neighbourhood.

    With the claw forbidden, the walk over include/exclude decisions is cut as
    soon as an independent triple enters the subset, or a claw with the new
    vertex as a leaf is settled.
    """
    cap = ell if max_degree is None else max_degree
    eligible = [max_degree is None or adj[v].bit_count() < max_degree for v in range(ell)]
    checks = _leaf_constraints(adj, ell) if claw else [[] for _ in range(ell)]
    stack = [(0, 0, 0)]
    while stack:
        i, s, size = stack.pop()
        if i == ell:
            if s or not nonempty:
                yield s
            continue
        w = i
        if all(s & u_bit == 0 or s & ab for u_bit, ab in checks[w]):
            stack.append((i + 1, s, size))
        if size == cap or not eligible[w]:
            continue
        if claw:
            indep = s & ~adj[w]
            ok = True
            for a in bits(indep):
                if indep & ~adj[a] & ~(1 << a):
                    ok = False
                    break
            if not ok:
                continue
        t = s | 1 << w
        if all(t & u_bit == 0 or t & ab for u_bit, ab in checks[w]):
            stack.append((i + 1, t, size + 1))


def _children(parent: Graph, forbidden: tuple[Pattern, ...], mode: str,
              max_degree: int | None, stat: LevelStats) -> Iterator[list[int]]:
    ell = parent.order
    adj = parent.adj
    claw = any(p.kind == "claw" for p in forbidden)
    others = [p for p in forbidden if p.kind != "claw"]
    new_bit = 1 << ell
    for s in _neighbourhoods(adj, ell, claw, max_degree, nonempty=(mode != "any")):
        stat.candidates += 1
        child = [nb | new_bit if s >> v & 1 else nb for v, nb in enumerate(adj)]
        child.append(s)
        if others:
            g = Graph._trusted(ell + 1, child)
            if any(contains_induced_at(g, p, ell) for p in others):
                stat.rejected += 1
                continue
        yield child


class _ClassLevels:
    """Canonical representatives per order for one hereditary class."""

    def __init__(self, forbidden: tuple[Pattern, ...], mode: str, max_degree: int | None):
        self.forbidden = forbidden
        self.mode = mode
        self.max_degree = max_degree
        # levels[l] = list of (code, graph) sorted by code
        self.levels: dict[int, list[tuple[bytes, Graph]]] = {
            1: [(b"@", Graph._trusted(1, [0]))]
        }
        self.stats: dict[int, LevelStats] = {}

    @property
    def top(self) -> int:
        return max(self.levels)

    def build(self, n: int, deadline: float | None = None) -> list[tuple[bytes, Graph]]:
        while self.top < n:
            self._next_level(deadline)
        return self.levels[n]

    def _next_level(self, deadline: float | None) -> None:
        ell = self.top
        stat = LevelStats(order=ell + 1)
        t0 = time.perf_counter()
        seen: dict[bytes, Graph] = {}
        for count, (_, parent) in enumerate(self.levels[ell]):
            if deadline is not None and count % 16 == 0 and time.monotonic() > deadline:
                stat.seconds = time.perf_counter() - t0
                raise BudgetExceeded(
                    f"budget exhausted while generating order {ell + 1} "
                    f"({count} of {len(self.levels[ell])} parents done)",
                    stats=stat,
                )
            stat.parents += 1
            for child in _children(parent, self.forbidden, self.mode, self.max_degree, stat):
                code, canon = canonical_graph(Graph._trusted(ell + 1, child))
                if code in seen:
                    stat.duplicates += 1
                else:
                    seen[code] = canon
        self.levels[ell + 1] = sorted(seen.items())
        stat.kept = len(seen)
        stat.seconds = time.perf_counter() - t0
        self.stats[ell + 1] = stat
        log.info("order %d: %d graphs (%.1fs)", ell + 1, stat.kept, stat.seconds)


_CACHE: dict[tuple, _ClassLevels] = {}


def _levels_for(spec: ClassSpec) -> _ClassLevels:
    mode = "any" if spec.connectivity == "any" else "connected"
    key = (tuple(sorted(p.name for p in spec.forbidden)), mode, spec.max_degree)
    if key not in _CACHE:
        forbidden = tuple(sorted(spec.forbidden, key=lambda p: p.name))
        _CACHE[key] = _ClassLevels(forbidden, mode, spec.max_degree)
    return _CACHE[key]


def clear_cache() -> None:
    _CACHE.clear()


def _check_generatable(spec: ClassSpec) -> None:
    if spec.target_order > CANONICAL_MAX_ORDER:
        raise InvalidParameterError(
            f"target order {spec.target_order} exceeds the canonical-form limit {CANONICAL_MAX_ORDER}"
        )
    if not spec.forbidden and spec.max_degree is None and spec.target_order > UNRESTRICTED_MAX_ORDER:
        raise GenerationRefused(
            f"unrestricted generation is refused above order {UNRESTRICTED_MAX_ORDER}; "
            "forbid a pattern or bound the degree"
        )


def _accept(g: Graph, connectivity: str) -> bool:
    return connectivity != "two_connected" or is_two_connected(g)


def generate_class(spec: ClassSpec, *, deadline: float | None = None,
                   stats: GenStats | None = None) -> Iterator[Graph]:
    """One representative per isomorphism class of the order-n members of ``spec``.

    Representatives are canonically labelled and emitted in canonical-code
    order, so two runs give identical streams.  ``deadline`` is a
    ``time.monotonic()`` instant; passing it raises BudgetExceeded.
    """
    _check_generatable(spec)
    t0 = time.perf_counter()
    levels = _levels_for(spec)
    reps = levels.build(spec.target_order, deadline)
    if stats is not None:
        for k in range(2, spec.target_order + 1):
            if k in levels.stats:
                stats.levels[k] = levels.stats[k]
    for _, g in reps:
        if _accept(g, spec.connectivity):
            if stats is not None:
                stats.emitted += 1
            yield g
    if stats is not None:
        stats.seconds = time.perf_counter() - t0


def class_members(spec: ClassSpec, **kw) -> list[Graph]:
    return list(generate_class(spec, **kw))


def completed_order(spec: ClassSpec) -> int:
    """Highest order already enumerated for this class in this process."""
    return _levels_for(spec).top


# -- sampling beyond exhaustive reach ---------------------------------------

def random_member(spec: ClassSpec, rng: random.Random, start_order: int | None = None,
                  attempts: int = 50) -> Graph | None:
    """Grow a random member of order ``spec.target_order``.

    Starts from a uniformly chosen representative of the highest enumerated
    level (or ``start_order``), then repeatedly adds a vertex whose
    neighbourhood is drawn uniformly from the admissible extensions.
    """
    levels = _levels_for(spec)
    base = min(start_order or levels.top, levels.top, spec.target_order)
    pool = levels.levels[base]
    for _ in range(attempts):
        g = rng.choice(pool)[1]
        while g is not None and g.order < spec.target_order:
            g = _random_child(g, levels, rng)
        if g is not None and _accept(g, spec.connectivity):
            return g
    return None


def _random_child(parent: Graph, levels: _ClassLevels, rng: random.Random) -> Graph | None:
    stat = LevelStats(order=parent.order + 1)
    options = list(_children(parent, levels.forbidden, levels.mode, levels.max_degree, stat))
    if not options:
        return None
    return Graph._trusted(parent.order + 1, rng.choice(options))


# -- graph6 streams ---------------------------------------------------------

def stream_graph6(source: Iterable[str] | TextIO, *, skip_bad: bool = False,
                  diagnostics: list[str] | None = None) -> Iterator[Graph]:
    """Decode graph6 lines in input order; blank lines are ignored.

    A malformed line raises Graph6ParseError (carrying its line number) unless
    ``skip_bad`` is set, in which case a message is appended to ``diagnostics``.
    """
    for lineno, line in enumerate(source, start=1):
        text = line.strip()
        if not text:
            continue
        try:
            yield parse_graph6(text)
        except Graph6ParseError as exc:
            if not skip_bad:
                raise Graph6ParseError(str(exc).split(" (at ")[0], exc.offset, lineno) from None
            msg = f"line {lineno}: {exc}"
            log.debug("skipping malformed graph6 %s", msg)
            if diagnostics is not None:
                diagnostics.append(msg)
