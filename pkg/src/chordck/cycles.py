"""Cycles of a given length, chords, (chorded) pancyclicity and k-tabs.

Cycles are enumerated in a canonical rooted orientation: the first vertex is
the least vertex of the cycle and the second vertex is smaller than the last.
Every cycle is therefore met exactly once, and "first found" is a well-defined
least witness.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .errors import InvalidParameterError
from .graph import Graph, bits, to_mask

CHORDED = "chorded"
CHORDLESS = "chordless"
NONE = "none"


@dataclass(frozen=True)
class CycleWitness:
    vertices: tuple[int, ...]
    chords: tuple[tuple[int, int], ...]

    @property
    def length(self) -> int:
        return len(self.vertices)

    def to_json(self) -> dict:
        return {"cycle": list(self.vertices), "chords": [list(c) for c in self.chords]}


def cycle_chords(g: Graph, cycle: Iterable[int]) -> tuple[tuple[int, int], ...]:
    """All edges of ``g`` joining non-consecutive vertices of ``cycle``, sorted."""
    cyc = list(cycle)
    m = len(cyc)
    pos = {v: i for i, v in enumerate(cyc)}
    mask = to_mask(cyc)
    out = []
    for v in cyc:
        for u in bits(g.adj[v] & mask):
            if v < u:
                d = abs(pos[u] - pos[v])
                if d != 1 and d != m - 1:
                    out.append((v, u))
    return tuple(sorted(out))


def is_cycle_witness(g: Graph, w: CycleWitness) -> bool:
    cyc = w.vertices
    m = len(cyc)
    if m < 3 or len(set(cyc)) != m:
        return False
    if not all(g.has_edge(cyc[i], cyc[(i + 1) % m]) for i in range(m)):
        return False
    return w.chords == cycle_chords(g, cyc)


def _scan(g: Graph, m: int, want_chord: bool) -> tuple[list[int] | None, list[int] | None]:
    """Walk m-cycles in canonical order.

    Returns ``(first cycle, first chorded cycle)``; stops at the first cycle
    when ``want_chord`` is false, else at the first chorded one.
    """
    n = g.order
    adj = g.adj
    path = [0] * m
    first: list = [None]

    def dfs(v: int, depth: int, visited: int, allowed: int) -> bool:
        # depth = number of vertices already on the path; v is the last one.
        s = path[0]
        if depth == m - 1:
            cand = adj[v] & adj[s] & allowed & ~visited
            cand &= ~((1 << (path[1] + 1)) - 1)
            while cand:
                low = cand & -cand
                u = low.bit_length() - 1
                path[depth] = u
                if not want_chord:
                    first[0] = list(path)
                    return True
                full = visited | low
                inside = 0
                for w in path:
                    inside += (adj[w] & full).bit_count()
                if first[0] is None:
                    first[0] = list(path)
                if inside > 2 * m:
                    return True
                cand ^= low
            return False
        free = allowed & ~visited
        need = m - depth
        if need >= 3:
            # The remaining vertices must be reachable from v and reach back to s.
            reach = 0
            frontier = adj[v] & free
            while frontier:
                reach |= frontier
                nxt = 0
                for w in bits(frontier):
                    nxt |= adj[w]
                frontier = nxt & free & ~reach
            if reach.bit_count() < need or not reach & adj[s]:
                return False
        cand = adj[v] & free
        while cand:
            low = cand & -cand
            u = low.bit_length() - 1
            path[depth] = u
            if dfs(u, depth + 1, visited | low, allowed):
                return True
            cand ^= low
        return False

    for s in range(n - m + 1):
        allowed = g.vertex_mask & ~((1 << (s + 1)) - 1)
        if (adj[s] & allowed).bit_count() < 2:
            continue
        path[0] = s
        if dfs(s, 1, 1 << s, allowed):
            return first[0], list(path)
    return first[0], None


def _check_length(g: Graph, m: int, low: int) -> None:
    if not low <= m <= g.order:
        raise InvalidParameterError(f"cycle length {m} outside {low}..{g.order}")


def _witness(g: Graph, cyc: list[int] | None) -> CycleWitness | None:
    if cyc is None:
        return None
    return CycleWitness(tuple(cyc), cycle_chords(g, cyc))


def find_cycle(g: Graph, m: int) -> CycleWitness | None:
    _check_length(g, m, 3)
    cyc, _ = _scan(g, m, want_chord=False)
    return _witness(g, cyc)


def find_chorded_cycle(g: Graph, m: int) -> CycleWitness | None:
    _check_length(g, m, 4)
    _, chorded = _scan(g, m, want_chord=True)
    return _witness(g, chorded)


def has_cycle(g: Graph, m: int) -> bool:
    return 3 <= m <= g.order and _scan(g, m, want_chord=False)[0] is not None


def has_chorded_cycle(g: Graph, m: int) -> bool:
    return 4 <= m <= g.order and _scan(g, m, want_chord=True)[1] is not None


@dataclass(frozen=True)
class LengthStatus:
    status: str
    witness: CycleWitness | None


@dataclass(frozen=True)
class PancyclicityReport:
    order: int
    lengths: dict[int, LengthStatus] = field(repr=False)

    @property
    def missing_cycles(self) -> list[int]:
        return [m for m, st in self.lengths.items() if st.status == NONE]

    @property
    def missing_chorded(self) -> list[int]:
        return [m for m, st in self.lengths.items() if m >= 4 and st.status != CHORDED]

    @property
    def pancyclic(self) -> bool:
        return not self.missing_cycles

    @property
    def chorded_pancyclic(self) -> bool:
        return not self.missing_chorded

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "pancyclic": self.pancyclic,
            "chorded_pancyclic": self.chorded_pancyclic,
            "lengths": {
                str(m): {
                    "status": st.status,
                    "witness": None if st.witness is None else st.witness.to_json(),
                }
                for m, st in self.lengths.items()
            },
        }


def length_status(g: Graph, m: int) -> LengthStatus:
    if m == 3:
        cyc, _ = _scan(g, 3, want_chord=False)
        return LengthStatus(NONE if cyc is None else CHORDLESS, _witness(g, cyc))
    cyc, chorded = _scan(g, m, want_chord=True)
    if chorded is not None:
        return LengthStatus(CHORDED, _witness(g, chorded))
    if cyc is not None:
        return LengthStatus(CHORDLESS, _witness(g, cyc))
    return LengthStatus(NONE, None)


def pancyclicity_report(g: Graph) -> PancyclicityReport:
    if g.order < 3:
        raise InvalidParameterError(f"pancyclicity needs order >= 3, got {g.order}")
    return PancyclicityReport(g.order, {m: length_status(g, m) for m in range(3, g.order + 1)})


# -- tabs -------------------------------------------------------------------

@dataclass(frozen=True)
class KTab:
    host: frozenset[int]
    path: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.path) - 2

    @property
    def ends(self) -> tuple[int, int]:
        return self.path[0], self.path[-1]


def _host_mask(g: Graph, host: Iterable[int] | int) -> int:
    mask = to_mask(host)
    if not mask:
        raise InvalidParameterError("host must be nonempty")
    if mask & ~g.vertex_mask:
        raise InvalidParameterError("host contains vertices outside the graph")
    if mask == g.vertex_mask:
        raise InvalidParameterError("host must be a proper subset of the vertices")
    return mask


def k_tabs(g: Graph, host: Iterable[int] | int, k: int) -> list[KTab]:
    """Every k-tab on G[host], one orientation each (first end < last end)."""
    mask = _host_mask(g, host)
    if k < 1:
        raise InvalidParameterError(f"k must be at least 1, got {k}")
    adj = g.adj
    outside = g.vertex_mask & ~mask
    hostset = frozenset(bits(mask))
    found: list[tuple[int, ...]] = []
    path: list[int] = []

    def grow(v: int, used: int) -> None:
        if len(path) == k + 1:
            for end in bits(adj[v] & mask & ~((1 << (path[0] + 1)) - 1)):
                found.append(tuple(path) + (end,))
            return
        for u in bits(adj[v] & outside & ~used):
            path.append(u)
            grow(u, used | 1 << u)
            path.pop()

    for a0 in bits(mask):
        path[:] = [a0]
        grow(a0, 0)
    found.sort()
    return [KTab(hostset, p) for p in found]


def minimal_k_tab(g: Graph, host: Iterable[int] | int) -> KTab | None:
    """A tab with the fewest internal vertices.

    Among those, tabs whose two ends are adjacent are preferred, then the
    lexicographically least path.
    """
    mask = _host_mask(g, host)
    for k in range(1, g.order - mask.bit_count() + 1):
        tabs = k_tabs(g, mask, k)
        if tabs:
            adjacent = [t for t in tabs if g.has_edge(*t.ends)]
            return (adjacent or tabs)[0]
    return None
