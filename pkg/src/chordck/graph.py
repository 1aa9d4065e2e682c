"""Bitset graphs: construction, graph6 and edge-list I/O, connectivity, isomorphism.

A vertex set is an ``int`` whose bit ``v`` is set when ``v`` belongs to the set.
``Graph.adj[v]`` is the neighbourhood of ``v`` in that form, so neighbourhood
intersections and unions are single machine operations.
"""

from __future__ import annotations

import random
from typing import Iterable, Iterator, Sequence

from .errors import (
    CapacityError,
    Graph6ParseError,
    InvalidEdgeError,
    InvalidParameterError,
    InvalidVertexError,
)

CAPACITY = 64
GRAPH6_MAX_ORDER = 62
# canonical_form is an exact search at every order; this is the range covered
# by the permutation test-suite.
CANONICAL_MAX_ORDER = 20


def bits(mask: int) -> Iterator[int]:
    """Yield the members of a vertex set in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int] | int) -> int:
    if isinstance(vertices, int):
        return vertices
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


class Graph:
    """Immutable simple undirected graph on vertices ``0..order-1``."""

    __slots__ = ("order", "adj", "_hash")

    def __init__(self, order: int, adj: Sequence[int]):
        if not 0 <= order <= CAPACITY:
            raise CapacityError(f"order {order} outside 0..{CAPACITY}")
        if len(adj) != order:
            raise InvalidParameterError("adjacency length differs from order")
        full = (1 << order) - 1
        for v, nb in enumerate(adj):
            if nb & ~full:
                raise InvalidVertexError(f"vertex {v} has a neighbour >= {order}")
            if nb >> v & 1:
                raise InvalidEdgeError(f"self-loop at vertex {v}")
            for u in bits(nb):
                if not adj[u] >> v & 1:
                    raise InvalidEdgeError(f"edge ({v},{u}) is not symmetric")
        self.order = order
        self.adj = tuple(adj)
        self._hash = None

    @classmethod
    def _trusted(cls, order: int, adj: Sequence[int]) -> "Graph":
        g = object.__new__(cls)
        _set = object.__setattr__
        _set(g, "order", order)
        _set(g, "adj", tuple(adj))
        _set(g, "_hash", None)
        return g

    def __setattr__(self, name, value):
        if name != "_hash" and hasattr(self, "_hash"):
            raise AttributeError("Graph is immutable")
        object.__setattr__(self, name, value)

    def __reduce__(self):
        return (Graph._trusted, (self.order, self.adj))

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.order == other.order and self.adj == other.adj

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.order, self.adj)))
        return self._hash

    def __repr__(self):
        return f"Graph(order={self.order}, edges={self.edges()})"

    @property
    def vertex_mask(self) -> int:
        return (1 << self.order) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def closed_neighborhood(self, v: int) -> int:
        return self.adj[v] | (1 << v)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [nb.bit_count() for nb in self.adj]

    def max_degree(self) -> int:
        return max((nb.bit_count() for nb in self.adj), default=0)

    def num_edges(self) -> int:
        return sum(nb.bit_count() for nb in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.order) for v in bits(self.adj[u] >> u + 1 << u + 1)]

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph with vertex ``v`` renamed ``perm[v]``."""
        new = [0] * self.order
        for v, nb in enumerate(self.adj):
            m = 0
            for u in bits(nb):
                m |= 1 << perm[u]
            new[perm[v]] = m
        return Graph._trusted(self.order, new)


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if not 0 <= n <= CAPACITY:
        raise CapacityError(f"order {n} outside 0..{CAPACITY}")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidVertexError(f"edge ({u},{v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise InvalidEdgeError(f"self-loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph._trusted(n, adj)


# -- graph6 -----------------------------------------------------------------

def to_graph6(g: Graph) -> str:
    n = g.order
    if n > GRAPH6_MAX_ORDER:
        raise CapacityError(f"graph6 short form holds at most {GRAPH6_MAX_ORDER} vertices")
    out = [chr(n + 63)]
    acc = 0
    nbits = 0
    adj = g.adj
    for j in range(1, n):
        col = adj[j]
        for i in range(j):
            acc = (acc << 1) | (col >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = 0
                nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def parse_graph6(text: str | bytes) -> Graph:
    if isinstance(text, bytes):
        text = text.decode("ascii", errors="replace")
    text = text.strip()
    if text.startswith(">>graph6<<"):
        text = text[len(">>graph6<<"):]
    if not text:
        raise Graph6ParseError("empty graph6 record", 0)
    data = [ord(c) for c in text]
    for i, b in enumerate(data):
        if not 63 <= b <= 126:
            raise Graph6ParseError(f"byte value {b} outside 63..126", i)
    if data[0] == 126:
        raise Graph6ParseError("graph6 long form (n > 62) is not supported", 0)
    n = data[0] - 63
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(data) - 1 != need:
        raise Graph6ParseError(
            f"expected {need} data bytes for n={n}, found {len(data) - 1}",
            min(len(data), need + 1),
        )
    adj = [0] * n
    k = 0
    i, j = 0, 1
    for pos in range(need):
        chunk = data[1 + pos] - 63
        for shift in range(5, -1, -1):
            bit = chunk >> shift & 1
            if k >= nbits:
                if bit:
                    raise Graph6ParseError("non-zero padding bit", 1 + pos)
                continue
            if bit:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
            i += 1
            if i == j:
                i = 0
                j += 1
    return Graph._trusted(n, adj)


# -- edge-list text ---------------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    """Parse ``n`` on the first line followed by one ``u v`` pair per line."""
    rows = [ln.split("#", 1)[0].split() for ln in text.splitlines()]
    rows = [r for r in rows if r]
    if not rows or len(rows[0]) != 1:
        raise InvalidParameterError("edge list must start with a line holding the vertex count")
    try:
        n = int(rows[0][0])
        edges = []
        for r in rows[1:]:
            if len(r) != 2:
                raise InvalidParameterError(f"expected 'u v', got {' '.join(r)!r}")
            edges.append((int(r[0]), int(r[1])))
    except ValueError as exc:
        if isinstance(exc, InvalidParameterError):
            raise
        raise InvalidParameterError(f"non-integer token in edge list: {exc}") from None
    return from_edge_list(n, edges)


def format_edge_list(g: Graph) -> str:
    lines = [str(g.order)] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


# -- constructions ----------------------------------------------------------

def standard_graph(kind: str, n: int) -> Graph:
    """complete, cycle, path or complete_minus_edge on vertices 0..n-1."""
    if n < 1:
        raise InvalidParameterError(f"order must be at least 1, got {n}")
    if kind == "complete":
        return from_edge_list(n, [(u, v) for u in range(n) for v in range(u + 1, n)])
    if kind == "path":
        return from_edge_list(n, [(v, v + 1) for v in range(n - 1)])
    if kind == "cycle":
        if n < 3:
            raise InvalidParameterError(f"a cycle needs at least 3 vertices, got {n}")
        return from_edge_list(n, [(v, (v + 1) % n) for v in range(n)])
    if kind == "complete_minus_edge":
        if n < 2:
            raise InvalidParameterError("complete_minus_edge needs at least 2 vertices")
        return from_edge_list(
            n, [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) != (0, 1)]
        )
    raise InvalidParameterError(
        f"unknown graph kind {kind!r}; expected complete, cycle, path or complete_minus_edge"
    )


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Vertex (a, b) becomes ``a * h.order + b``."""
    m = h.order
    n = g.order * m
    if n > CAPACITY:
        raise CapacityError(f"product has {n} vertices, capacity is {CAPACITY}")
    edges = []
    for a in range(g.order):
        for b in range(m):
            for b2 in bits(h.adj[b]):
                if b < b2:
                    edges.append((a * m + b, a * m + b2))
            for a2 in bits(g.adj[a]):
                if a < a2:
                    edges.append((a * m + b, a2 * m + b))
    return from_edge_list(n, edges)


def induced_subgraph(g: Graph, s: Iterable[int] | int) -> Graph:
    """G[s], relabelled in ascending order of the original vertex numbers."""
    mask = to_mask(s)
    if mask & ~g.vertex_mask:
        raise InvalidVertexError("subset contains vertices outside the graph")
    verts = list(bits(mask))
    index = {v: i for i, v in enumerate(verts)}
    adj = []
    for v in verts:
        m = 0
        for u in bits(g.adj[v] & mask):
            m |= 1 << index[u]
        adj.append(m)
    return Graph._trusted(len(verts), adj)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shift = g.order
    if shift + h.order > CAPACITY:
        raise CapacityError("union exceeds capacity")
    return Graph._trusted(shift + h.order, list(g.adj) + [nb << shift for nb in h.adj])


# -- connectivity -----------------------------------------------------------

def component_of(g: Graph, v: int, within: int | None = None) -> int:
    """Vertex set of the component containing ``v`` inside the set ``within``."""
    allowed = g.vertex_mask if within is None else within
    seen = 1 << v
    frontier = seen
    adj = g.adj
    while frontier:
        nxt = 0
        for u in bits(frontier):
            nxt |= adj[u]
        frontier = nxt & allowed & ~seen
        seen |= frontier
    return seen


def components(g: Graph, within: int | None = None) -> list[int]:
    rest = g.vertex_mask if within is None else within
    out = []
    while rest:
        v = (rest & -rest).bit_length() - 1
        comp = component_of(g, v, rest)
        out.append(comp)
        rest &= ~comp
    return out


def is_connected(g: Graph) -> bool:
    if g.order == 0:
        return True
    return component_of(g, 0) == g.vertex_mask


def cut_vertices(g: Graph) -> set[int]:
    """Articulation points via iterative DFS low-links, over every component."""
    n = g.order
    disc = [-1] * n
    low = [0] * n
    cuts: set[int] = set()
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        stack = [(root, -1, iter(bits(g.adj[root])))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for u in it:
                if disc[u] == -1:
                    disc[u] = low[u] = timer
                    timer += 1
                    if v == root:
                        root_children += 1
                    stack.append((u, v, iter(bits(g.adj[u]))))
                    advanced = True
                    break
                if u != parent:
                    low[v] = min(low[v], disc[u])
            if advanced:
                continue
            stack.pop()
            if parent != -1:
                low[parent] = min(low[parent], low[v])
                if parent != root and low[v] >= disc[parent]:
                    cuts.add(parent)
        if root_children > 1:
            cuts.add(root)
    return cuts


def is_two_connected(g: Graph) -> bool:
    return g.order >= 3 and is_connected(g) and not cut_vertices(g)


# -- canonical labelling ----------------------------------------------------

_rng = random.Random(0x5EED)
# Fixed pseudo-random weights make neighbour-colour multisets cheap to
# compare.  A collision only coarsens a refinement step; the search below
# stays exact because the refinement remains relabelling-equivariant.
_WEIGHTS = [_rng.getrandbits(60) for _ in range(CAPACITY + 1)]
del _rng


def _refine(nbrs: list[list[int]], colors: list[int]) -> tuple[list[int], int]:
    """Colour refinement below ``colors``; returns (ranked colours, count)."""
    n = len(colors)
    w = _WEIGHTS
    prev = -1
    while True:
        sigs = [(colors[v] << 72) + sum([w[colors[u]] for u in nbrs[v]]) for v in range(n)]
        uniq = sorted(set(sigs))
        if len(uniq) == n:
            return _ranks(sigs, uniq), n
        colors = _ranks(sigs, uniq)
        if len(uniq) == prev:
            return colors, prev
        prev = len(uniq)


def _ranks(sigs: list[int], uniq: list[int]) -> list[int]:
    rank = {s: i for i, s in enumerate(uniq)}
    return [rank[s] for s in sigs]


def _leaf_code(adj: tuple[int, ...], colors: list[int]) -> int:
    n = len(colors)
    at = [0] * n
    for v, c in enumerate(colors):
        at[c] = v
    code = 0
    for j in range(1, n):
        col = adj[at[j]]
        for i in range(j):
            code = (code << 1) | (col >> at[i] & 1)
    return code


def _canonical_labelling(g: Graph) -> tuple[int, list[int]]:
    """Least leaf code over the individualise-refine tree, and its labelling."""
    n = g.order
    adj = g.adj
    nbrs = [list(bits(nb)) for nb in adj]
    colors, k = _refine(nbrs, [nb.bit_count() for nb in adj])
    best: list = [None, None]

    def search(colors: list[int], k: int) -> None:
        if k == n:
            code = _leaf_code(adj, colors)
            if best[0] is None or code < best[0]:
                best[0] = code
                best[1] = colors
            return
        sizes = [0] * k
        for c in colors:
            sizes[c] += 1
        target = min((s, c) for c, s in enumerate(sizes) if s > 1)[1]
        cell = [v for v in range(n) if colors[v] == target]
        reps: list[int] = []
        for v in cell:
            # Twins are swapped by an automorphism fixing the current colouring.
            if any(adj[v] & ~(1 << r) == adj[r] & ~(1 << v) for r in reps):
                continue
            reps.append(v)
            split = [2 * c + (c == target and u != v) for u, c in enumerate(colors)]
            search(*_refine(nbrs, split))

    search(colors, k)
    return best[0], best[1]


def canonical_form(g: Graph) -> bytes:
    """Relabelling-invariant code; equal codes exactly when graphs are isomorphic.

    The code is the graph6 encoding of the canonically relabelled graph.
    """
    if g.order > CANONICAL_MAX_ORDER:
        raise CapacityError(f"canonical_form is certified up to order {CANONICAL_MAX_ORDER}")
    if g.order == 0:
        return b"?"
    _, labels = _canonical_labelling(g)
    return to_graph6(g.relabel(labels)).encode("ascii")


def canonical_graph(g: Graph) -> tuple[bytes, Graph]:
    """Canonical code together with the canonically relabelled graph."""
    if g.order > CANONICAL_MAX_ORDER:
        raise CapacityError(f"canonical_form is certified up to order {CANONICAL_MAX_ORDER}")
    if g.order == 0:
        return b"?", g
    _, labels = _canonical_labelling(g)
    h = g.relabel(labels)
    return to_graph6(h).encode("ascii"), h


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.order != h.order or g.num_edges() != h.num_edges():
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g) == canonical_form(h)
