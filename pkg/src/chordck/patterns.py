"""Forbidden induced subgraphs (claw, paths, triangles with a pendant path).

Induced-copy search is a backtracking embedding over bitset intersections:
pattern vertices are placed one at a time, and the candidate set for the next
one is the intersection of the neighbourhoods (or non-neighbourhoods) of the
vertices already placed.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations
from typing import Sequence

from .errors import InvalidParameterError, InvalidVertexError
from .graph import Graph, bits, components, from_edge_list, induced_subgraph

PATTERN_NAMES = ("claw", "p4", "p5", "p6", "z1", "z2")


@dataclass(frozen=True)
class Pattern:
    kind: str
    parameter: int | None
    graph: Graph = field(compare=False, repr=False)

    @property
    def name(self) -> str:
        if self.kind == "claw":
            return "claw"
        return f"{'p' if self.kind == 'path' else 'z'}{self.parameter}"

    @property
    def order(self) -> int:
        return self.graph.order

    def __str__(self) -> str:
        return self.name


def make_pattern(kind: str, parameter: int | None = None) -> Pattern:
    kind = kind.lower()
    if kind in ("claw", "k13", "k1,3"):
        return Pattern("claw", None, from_edge_list(4, [(0, 1), (0, 2), (0, 3)]))
    if kind not in ("path", "z"):
        raise InvalidParameterError(f"unknown pattern kind {kind!r}; expected claw, path or z")
    if parameter is None or parameter < 1:
        raise InvalidParameterError(f"{kind} pattern needs a parameter >= 1, got {parameter}")
    if kind == "path":
        return Pattern("path", parameter, from_edge_list(parameter, [(j, j + 1) for j in range(parameter - 1)]))
    # Triangle 0,1,2 with the pendant path 3..i+2 hanging off vertex 2.
    edges = [(0, 1), (0, 2), (1, 2)] + [(j, j + 1) for j in range(2, parameter + 2)]
    return Pattern("z", parameter, from_edge_list(parameter + 3, edges))


def pattern(name: str) -> Pattern:
    """Look a pattern up by its CLI name: claw, p4, p5, p6, z1, z2 (any case)."""
    key = name.strip().lower()
    if key in ("claw", "k13", "k1,3"):
        return make_pattern("claw")
    m = re.fullmatch(r"([pz])(\d+)", key)
    if not m:
        raise InvalidParameterError(
            f"unknown pattern {name!r}; valid names: {', '.join(PATTERN_NAMES)}"
        )
    return make_pattern("path" if m.group(1) == "p" else "z", int(m.group(2)))


def parse_pattern_list(text: str) -> list[Pattern]:
    return [pattern(tok) for tok in text.split(",") if tok.strip()]


# -- embedding search -------------------------------------------------------

@lru_cache(maxsize=None)
def _plan(pat_adj: tuple[int, ...], seq: tuple[int, ...]) -> tuple:
    """For each step, the (earlier step, adjacent?) constraints of ``seq``."""
    steps = []
    for i, p in enumerate(seq):
        steps.append(tuple((j, bool(pat_adj[p] >> q & 1)) for j, q in enumerate(seq[:i])))
    return tuple(steps)


def _search(adj: Sequence[int], allowed: int, steps: tuple, first: int | None = None):
    """First injective induced embedding in ascending candidate order, or None."""
    k = len(steps)
    image = [0] * k

    def extend(i: int, used: int):
        if i == k:
            return list(image)
        cand = allowed & ~used
        for j, adjacent in steps[i]:
            cand &= adj[image[j]] if adjacent else ~adj[image[j]]
        while cand:
            low = cand & -cand
            image[i] = low.bit_length() - 1
            found = extend(i + 1, used | low)
            if found is not None:
                return found
            cand ^= low
        return None

    if first is None:
        return extend(0, 0)
    image[0] = first
    return extend(1, 1 << first)


def contains_induced(g: Graph, p: Pattern) -> tuple[int, ...] | None:
    """Least induced embedding of ``p`` in ``g``.

    The witness maps pattern vertex ``i`` to ``witness[i]``; among all induced
    copies it is the lexicographically least tuple.
    """
    k = p.order
    if k > g.order:
        return None
    steps = _plan(p.graph.adj, tuple(range(k)))
    found = _search(g.adj, g.vertex_mask, steps)
    return None if found is None else tuple(found)


@lru_cache(maxsize=None)
def _anchored_plans(pat_adj: tuple[int, ...]) -> tuple:
    """One BFS placement order per automorphism orbit of the pattern."""
    k = len(pat_adj)
    orbit_of = list(range(k))
    for perm in permutations(range(k)):
        if all(
            (pat_adj[perm[a]] >> perm[b] & 1) == (pat_adj[a] >> b & 1)
            for a in range(k) for b in range(a + 1, k)
        ):
            for a in range(k):
                orbit_of[a] = min(orbit_of[a], perm[a])
    plans = []
    for root in sorted(set(orbit_of)):
        seq = [root]
        seen = 1 << root
        i = 0
        while i < len(seq):
            for u in bits(pat_adj[seq[i]] & ~seen):
                seen |= 1 << u
                seq.append(u)
            i += 1
        for u in range(k):
            if not seen >> u & 1:
                seq.append(u)
        plans.append(_plan(pat_adj, tuple(seq)))
    return tuple(plans)


def contains_induced_at(g: Graph, p: Pattern, v: int, allowed: int | None = None) -> bool:
    """Does some induced copy of ``p`` use vertex ``v``?"""
    if p.order > g.order:
        return False
    mask = g.vertex_mask if allowed is None else allowed
    return any(
        _search(g.adj, mask, steps, first=v) is not None
        for steps in _anchored_plans(p.graph.adj)
    )


def first_forbidden_witness(
    g: Graph, forbidden: Sequence[Pattern]
) -> tuple[Pattern, tuple[int, ...]] | None:
    for p in forbidden:
        w = contains_induced(g, p)
        if w is not None:
            return p, w
    return None


def is_free(g: Graph, forbidden: Sequence[Pattern]) -> bool:
    return first_forbidden_witness(g, forbidden) is None


def has_claw(g: Graph) -> bool:
    """Claw test specialised to the centre: an independent triple in some N(x)."""
    adj = g.adj
    for x in range(g.order):
        nb = adj[x]
        for a in bits(nb):
            rest = nb & ~adj[a] & ~((1 << (a + 1)) - 1)
            for b in bits(rest):
                if rest & ~adj[b] & ~((1 << (b + 1)) - 1):
                    return True
    return False


# -- hamiltonian paths and neighbourhoods -----------------------------------

def is_traceable(g: Graph) -> list[int] | None:
    """A hamiltonian path as a vertex list, or None."""
    n = g.order
    if n == 0:
        return None
    if n == 1:
        return [0]
    if len(components(g)) > 1:
        return None
    adj = g.adj
    deg = [nb.bit_count() for nb in adj]
    if sum(1 for d in deg if d == 1) > 2:
        return None
    full = g.vertex_mask
    dead: set[tuple[int, int]] = set()
    path: list[int] = []

    def extend(v: int, visited: int) -> bool:
        if visited == full:
            return True
        if (visited, v) in dead:
            return False
        for u in sorted(bits(adj[v] & ~visited), key=lambda u: (deg[u], u)):
            path.append(u)
            if extend(u, visited | 1 << u):
                return True
            path.pop()
        dead.add((visited, v))
        return False

    for start in sorted(range(n), key=lambda v: (deg[v], v)):
        path[:] = [start]
        if extend(start, 1 << start):
            return list(path)
    return None


@dataclass(frozen=True)
class NeighborhoodShape:
    """How G[N(x)] looks.

    ``witness`` is a hamiltonian path of N(x) for ``traceable_connected``, the
    two clique vertex sets for ``two_disjoint_cliques``, and an independent
    triple of N(x) for ``other``.
    """

    classification: str
    witness: tuple

    TRACEABLE = "traceable_connected"
    CLIQUES = "two_disjoint_cliques"
    OTHER = "other"


def _is_clique(g: Graph, mask: int) -> bool:
    return all(g.adj[v] & mask == mask & ~(1 << v) for v in bits(mask))


def neighborhood_structure(g: Graph, x: int) -> NeighborhoodShape:
    if not 0 <= x < g.order:
        raise InvalidVertexError(f"vertex {x} not in graph of order {g.order}")
    nb = g.adj[x]
    verts = list(bits(nb))
    if not verts:
        return NeighborhoodShape(NeighborhoodShape.CLIQUES, ((), ()))
    sub = induced_subgraph(g, nb)
    path = is_traceable(sub)
    if path is not None:
        return NeighborhoodShape(NeighborhoodShape.TRACEABLE, tuple(verts[i] for i in path))
    comps = components(g, nb)
    if len(comps) == 2 and all(_is_clique(g, c) for c in comps):
        return NeighborhoodShape(NeighborhoodShape.CLIQUES, tuple(tuple(bits(c)) for c in comps))
    triple = _independent_triple(sub)
    return NeighborhoodShape(NeighborhoodShape.OTHER, tuple(verts[i] for i in triple) if triple else ())


def _independent_triple(g: Graph) -> tuple[int, int, int] | None:
    adj = g.adj
    for a in range(g.order):
        for b in bits(~adj[a] & g.vertex_mask & ~((1 << (a + 1)) - 1)):
            rest = ~adj[a] & ~adj[b] & g.vertex_mask & ~((1 << (b + 1)) - 1)
            if rest:
                return a, b, (rest & -rest).bit_length() - 1
    return None


def check_shape(g: Graph, x: int, shape: NeighborhoodShape) -> bool:
    """Verify a NeighborhoodShape witness against the graph it came from."""
    nb = g.adj[x]
    if shape.classification == NeighborhoodShape.TRACEABLE:
        path = shape.witness
        return (
            sorted(path) == list(bits(nb))
            and all(g.has_edge(a, b) for a, b in zip(path, path[1:]))
        )
    if shape.classification == NeighborhoodShape.CLIQUES:
        a, b = (sum(1 << v for v in part) for part in shape.witness)
        if a & b or a | b != nb:
            return False
        if not (_is_clique(g, a) and _is_clique(g, b)):
            return False
        return all(g.adj[v] & b == 0 for v in bits(a))
    if len(shape.witness) != 3:
        return False
    p, q, r = shape.witness
    return (
        all(nb >> v & 1 for v in (p, q, r))
        and not g.has_edge(p, q) and not g.has_edge(p, r) and not g.has_edge(q, r)
    )
