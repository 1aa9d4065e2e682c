"""Machine forms of the chorded-pancyclicity theorems, and their checks.

A ``TheoremSpec`` is a hypothesis (order bound, 2-connectivity, forbidden
induced subgraphs, optional extra condition) plus a conclusion.  ``evaluate``
checks one graph against it, ``verify`` sweeps a whole generated class, and
``sharpness_search`` looks for graphs just below the order bound that satisfy
everything else yet violate the conclusion.
"""

from __future__ import annotations

import logging
import random
import re
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from . import cycles
from .enumeration import ClassSpec, generate_class, random_member
from .errors import BudgetExceeded, IncompleteVerification, InvalidParameterError
from .graph import (
    Graph,
    canonical_form,
    cartesian_product,
    cut_vertices,
    from_edge_list,
    is_connected,
    is_isomorphic,
    parse_graph6,
    standard_graph,
    to_graph6,
)
from .patterns import Pattern, contains_induced, pattern

log = logging.getLogger(__name__)

CONCLUSIONS = (
    "chorded_pancyclic",
    "cycle_or_chorded_pancyclic",
    "chorded_cycle_of_length",
    "pancyclic_or_cycle",
)
EXTRAS = ("none", "has_C4", "has_chorded_C5", "degree_at_least")


@dataclass(frozen=True)
class TheoremSpec:
    id: str
    min_order: int
    forbidden: tuple[str, ...]
    conclusion: str
    two_connected: bool = True
    hypothesis_extra: str = "none"
    extra_param: int | None = None
    conclusion_length: int | None = None
    statement: str = ""

    def __post_init__(self):
        if self.conclusion not in CONCLUSIONS:
            raise InvalidParameterError(f"unknown conclusion {self.conclusion!r}")
        if self.hypothesis_extra not in EXTRAS:
            raise InvalidParameterError(f"unknown hypothesis clause {self.hypothesis_extra!r}")

    @property
    def patterns(self) -> tuple[Pattern, ...]:
        return tuple(pattern(name) for name in self.forbidden)

    def class_spec(self, n: int) -> ClassSpec:
        conn = "two_connected" if self.two_connected else "any"
        return ClassSpec(n, self.patterns, conn)


def lem_degree(k: int = 3) -> TheoremSpec:
    """Claw-free with a vertex of degree >= 2k-1 gives a chorded (k+1)-cycle."""
    if k < 3:
        raise InvalidParameterError(f"the degree lemma needs k >= 3, got {k}")
    return TheoremSpec(
        "lem_degree" if k == 3 else f"lem_degree:{k}",
        1, ("claw",), "chorded_cycle_of_length",
        two_connected=False, hypothesis_extra="degree_at_least", extra_param=2 * k - 1,
        conclusion_length=k + 1,
        statement=f"claw-free with a vertex of degree >= {2 * k - 1} => chorded C{k + 1}",
    )


def theorem_catalog() -> list[TheoremSpec]:
    cpan = "chorded_pancyclic"
    ccl = "chorded_cycle_of_length"
    return [
        TheoremSpec("z1", 10, ("claw", "z1"), "cycle_or_chorded_pancyclic",
                    statement="2-connected {claw,Z1}-free, n >= 10 => C_n or chorded pancyclic"),
        TheoremSpec("z2", 10, ("claw", "z2"), "cycle_or_chorded_pancyclic",
                    statement="2-connected {claw,Z2}-free, n >= 10 => C_n or chorded pancyclic"),
        TheoremSpec("p4", 5, ("claw", "p4"), cpan,
                    statement="2-connected {claw,P4}-free, n >= 5 => chorded pancyclic"),
        TheoremSpec("p5", 8, ("claw", "p5"), cpan,
                    statement="2-connected {claw,P5}-free, n >= 8 => chorded pancyclic"),
        TheoremSpec("p6", 13, ("claw", "p6"), cpan,
                    statement="2-connected {claw,P6}-free, n >= 13 => chorded pancyclic"),
        TheoremSpec("lem_c4_to_c5_p5", 8, ("claw", "p5"), ccl, hypothesis_extra="has_C4",
                    conclusion_length=5,
                    statement="2-connected {claw,P5}-free, n >= 8, has C4 => chorded C5"),
        TheoremSpec("lem_c5_to_c4_p5", 7, ("claw", "p5"), ccl, hypothesis_extra="has_chorded_C5",
                    conclusion_length=4,
                    statement="2-connected {claw,P5}-free, n >= 7, chorded C5 => chorded C4"),
        TheoremSpec("lem_p6_c5", 11, ("claw", "p6"), ccl, hypothesis_extra="has_C4",
                    conclusion_length=5,
                    statement="2-connected {claw,P6}-free, n >= 11, has C4 => chorded C5"),
        TheoremSpec("lem_p6_c4", 10, ("claw", "p6"), ccl, hypothesis_extra="has_chorded_C5",
                    conclusion_length=4,
                    statement="2-connected {claw,P6}-free, n >= 10, chorded C5 => chorded C4"),
        TheoremSpec("lem_p6_c6", 13, ("claw", "p6"), ccl, hypothesis_extra="has_chorded_C5",
                    conclusion_length=6,
                    statement="2-connected {claw,P6}-free, n >= 13, chorded C5 => chorded C6"),
        lem_degree(3),
        TheoremSpec("pan_z1", 10, ("claw", "z1"), "pancyclic_or_cycle",
                    statement="2-connected {claw,Z1}-free, n >= 10 => cycle or pancyclic"),
        TheoremSpec("pan_z2", 10, ("claw", "z2"), "pancyclic_or_cycle",
                    statement="2-connected {claw,Z2}-free, n >= 10 => cycle or pancyclic"),
        TheoremSpec("pan_p4", 6, ("claw", "p4"), "pancyclic_or_cycle",
                    statement="2-connected {claw,P4}-free, n >= 6 => cycle or pancyclic"),
        TheoremSpec("pan_p5", 6, ("claw", "p5"), "pancyclic_or_cycle",
                    statement="2-connected {claw,P5}-free, n >= 6 => cycle or pancyclic"),
        TheoremSpec("pan_p6", 10, ("claw", "p6"), "pancyclic_or_cycle",
                    statement="2-connected {claw,P6}-free, n >= 10 => cycle or pancyclic"),
    ]


def theorem_ids() -> list[str]:
    return [t.id for t in theorem_catalog()]


def get_theorem(theorem_id: str) -> TheoremSpec:
    """Catalog lookup; ``lem_degree:K`` selects the degree lemma for k = K."""
    m = re.fullmatch(r"lem_degree(?::(\d+))?", theorem_id)
    if m:
        return lem_degree(int(m.group(1) or 3))
    for t in theorem_catalog():
        if t.id == theorem_id:
            return t
    raise InvalidParameterError(
        f"unknown theorem {theorem_id!r}; valid ids: {', '.join(theorem_ids())}, lem_degree:K"
    )


# -- evaluation -------------------------------------------------------------

@dataclass(frozen=True)
class Clause:
    name: str
    holds: bool
    detail: object = None


@dataclass(frozen=True)
class GraphEvaluation:
    theorem: str
    graph: Graph
    clauses: tuple[Clause, ...]
    conclusion_kind: str
    conclusion_holds: bool | None
    conclusion_detail: dict = field(default_factory=dict)

    @property
    def hypotheses_hold(self) -> bool:
        return all(c.holds for c in self.clauses)

    def holds_except(self, *names: str) -> bool:
        return all(c.holds for c in self.clauses if c.name not in names)

    def clause(self, name: str) -> Clause:
        for c in self.clauses:
            if c.name == name:
                return c
        raise KeyError(name)

    @property
    def is_counterexample(self) -> bool:
        return self.hypotheses_hold and self.conclusion_holds is False

    @property
    def graph6(self) -> str:
        return to_graph6(self.graph)

    @property
    def missing_lengths(self) -> list[int]:
        return list(self.conclusion_detail.get("missing_chorded", []))

    def to_json(self) -> dict:
        failed = [c.name for c in self.clauses if not c.holds]
        if self.conclusion_holds is False:
            failed.append(self.conclusion_kind)
        return {
            "graph6": self.graph6,
            "failed_clause": failed[0] if failed else None,
            "failed_clauses": failed,
            "missing_lengths": self.missing_lengths,
            "witness": _jsonable(self.conclusion_detail),
            "hypotheses": {c.name: {"holds": c.holds, "detail": _jsonable(c.detail)} for c in self.clauses},
        }


def _jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if hasattr(obj, "to_json"):
        return obj.to_json()
    return obj


def _hypotheses(spec: TheoremSpec, g: Graph) -> list[Clause]:
    n = g.order
    out = [Clause("order", n >= spec.min_order, {"order": n, "min_order": spec.min_order})]
    if spec.two_connected:
        cuts = sorted(cut_vertices(g))
        conn = is_connected(g)
        out.append(Clause("two_connected", n >= 3 and conn and not cuts,
                          {"connected": conn, "cut_vertices": cuts}))
    for p in spec.patterns:
        w = contains_induced(g, p)
        out.append(Clause(f"free:{p.name}", w is None, None if w is None else list(w)))
    extra = spec.hypothesis_extra
    if extra == "has_C4":
        w = cycles.find_cycle(g, 4) if n >= 4 else None
        out.append(Clause("has_C4", w is not None, w))
    elif extra == "has_chorded_C5":
        w = cycles.find_chorded_cycle(g, 5) if n >= 5 else None
        out.append(Clause("has_chorded_C5", w is not None, w))
    elif extra == "degree_at_least":
        degs = g.degrees()
        top = max(degs, default=0)
        vertex = degs.index(top) if degs else None
        out.append(Clause("degree_at_least", top >= spec.extra_param,
                          {"max_degree": top, "vertex": vertex, "threshold": spec.extra_param}))
    return out


def _is_cycle_graph(g: Graph) -> bool:
    return g.order >= 3 and is_isomorphic(g, standard_graph("cycle", g.order))


def _conclusion(spec: TheoremSpec, g: Graph) -> tuple[bool, dict]:
    kind = spec.conclusion
    n = g.order
    if kind == "chorded_cycle_of_length":
        m = spec.conclusion_length
        w = cycles.find_chorded_cycle(g, m) if 4 <= m <= n else None
        return w is not None, {"length": m, "witness": w,
                               "missing_chorded": [] if w is not None else [m]}
    if n < 3:
        return kind == "chorded_pancyclic", {"missing_chorded": [], "missing_cycles": []}
    report = cycles.pancyclicity_report(g)
    detail = {
        "missing_chorded": report.missing_chorded,
        "missing_cycles": report.missing_cycles,
    }
    if kind == "chorded_pancyclic":
        return report.chorded_pancyclic, detail
    is_cycle = _is_cycle_graph(g)
    detail["is_cycle"] = is_cycle
    if kind == "cycle_or_chorded_pancyclic":
        return is_cycle or report.chorded_pancyclic, detail
    return is_cycle or report.pancyclic, detail


def evaluate(spec: TheoremSpec, g: Graph, *, lazy: bool = False,
             ignore: Sequence[str] = ()) -> GraphEvaluation:
    """Evaluate every hypothesis clause and the conclusion on ``g``.

    With ``lazy`` the conclusion is skipped (left as None) when a hypothesis
    clause outside ``ignore`` fails.
    """
    clauses = tuple(_hypotheses(spec, g))
    holds: bool | None = None
    detail: dict = {}
    if not lazy or all(c.holds for c in clauses if c.name not in ignore):
        holds, detail = _conclusion(spec, g)
    return GraphEvaluation(spec.id, g, clauses, spec.conclusion, holds, detail)


# -- class sweeps -----------------------------------------------------------

@dataclass
class OrderResult:
    order: int
    mode: str
    scanned: int = 0
    hypothesis_count: int = 0
    counterexamples: int = 0
    seconds: float = 0.0
    note: str = ""

    def to_json(self) -> dict:
        return {
            "order": self.order, "mode": self.mode, "scanned": self.scanned,
            "hypothesis_count": self.hypothesis_count,
            "counterexamples": self.counterexamples,
            "seconds": round(self.seconds, 3), "note": self.note,
        }


@dataclass
class VerificationReport:
    theorem: str
    orders: list[int]
    per_order: list[OrderResult] = field(default_factory=list)
    counterexamples: list[GraphEvaluation] = field(default_factory=list)
    seconds: float = 0.0
    budget: float | None = None
    fuel: str = "builtin"

    @property
    def mode(self) -> str:
        return "exhaustive" if all(r.mode == "exhaustive" for r in self.per_order) else "sampled"

    @property
    def scanned(self) -> int:
        return sum(r.scanned for r in self.per_order)

    @property
    def hypothesis_count(self) -> int:
        return sum(r.hypothesis_count for r in self.per_order)

    @property
    def exit_code(self) -> int:
        if self.counterexamples:
            return 1
        return 0 if self.mode == "exhaustive" else 2

    def to_json(self) -> dict:
        lo, hi = min(self.orders), max(self.orders)
        return {
            "theorem": self.theorem,
            "order": lo if lo == hi else f"{lo}..{hi}",
            "mode": self.mode,
            "scanned": self.scanned,
            "hypothesis_count": self.hypothesis_count,
            "counterexamples": [e.to_json() for e in sorted(self.counterexamples, key=lambda e: e.graph6)],
            "seconds": round(self.seconds, 3),
            "budget": self.budget,
            "fuel": self.fuel,
            "orders": [r.to_json() for r in self.per_order],
        }


REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["theorem", "order", "mode", "scanned", "hypothesis_count", "counterexamples", "seconds"],
    "properties": {
        "theorem": {"type": "string"},
        "order": {"oneOf": [{"type": "integer", "minimum": 1},
                            {"type": "string", "pattern": "^[0-9]+\\.\\.[0-9]+$"}]},
        "mode": {"enum": ["exhaustive", "sampled"]},
        "scanned": {"type": "integer", "minimum": 0},
        "hypothesis_count": {"type": "integer", "minimum": 0},
        "seconds": {"type": "number", "minimum": 0},
        "budget": {"type": ["number", "null"]},
        "fuel": {"enum": ["builtin", "graph6"]},
        "counterexamples": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["graph6", "failed_clause", "missing_lengths", "witness"],
                "properties": {
                    "graph6": {"type": "string", "pattern": "^[?-~]+$"},
                    "failed_clause": {"type": ["string", "null"]},
                    "failed_clauses": {"type": "array", "items": {"type": "string"}},
                    "missing_lengths": {"type": "array", "items": {"type": "integer", "minimum": 3}},
                    "witness": {"type": "object"},
                    "hypotheses": {"type": "object"},
                },
            },
        },
        "orders": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["order", "mode", "scanned", "hypothesis_count", "counterexamples", "seconds"],
                "properties": {
                    "order": {"type": "integer", "minimum": 1},
                    "mode": {"enum": ["exhaustive", "sampled", "incomplete"]},
                    "scanned": {"type": "integer", "minimum": 0},
                    "hypothesis_count": {"type": "integer", "minimum": 0},
                    "counterexamples": {"type": "integer", "minimum": 0},
                    "seconds": {"type": "number", "minimum": 0},
                    "note": {"type": "string"},
                },
            },
        },
    },
}


def _evaluate_chunk(args):
    spec, graphs, ignore = args
    return [evaluate(spec, g, lazy=True, ignore=ignore) for g in graphs]


def _evaluate_all(spec: TheoremSpec, graphs: list[Graph], threads: int,
                  ignore: Sequence[str] = (), deadline: float | None = None):
    """Evaluate lazily; yields evaluations in input order, stopping at ``deadline``."""
    if threads <= 1 or len(graphs) < 64:
        for g in graphs:
            if deadline is not None and time.monotonic() > deadline:
                return
            yield evaluate(spec, g, lazy=True, ignore=ignore)
        return
    size = max(16, len(graphs) // (threads * 8))
    chunks = [(spec, graphs[i:i + size], tuple(ignore)) for i in range(0, len(graphs), size)]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        for batch in pool.map(_evaluate_chunk, chunks):
            yield from batch
            if deadline is not None and time.monotonic() > deadline:
                return


def _sample(spec: TheoremSpec, n: int, rng: random.Random, deadline: float,
            max_samples: int | None) -> Iterable[Graph]:
    seen: set[bytes] = set()
    cls = spec.class_spec(n)
    misses = 0
    while time.monotonic() < deadline and (max_samples is None or len(seen) < max_samples):
        g = random_member(cls, rng)
        if g is None:
            misses += 1
            if misses > 200:
                return
            continue
        code = canonical_form(g)
        if code in seen:
            misses += 1
            if misses > 10_000:
                return
            continue
        seen.add(code)
        yield g


def verify(spec: TheoremSpec, orders: Iterable[int], *, fuel: str | Iterable[Graph] = "builtin",
           budget: float | None = None, require_exhaustive: bool = False,
           sampled: bool = False, sample_budget: float = 60.0, max_samples: int | None = None,
           seed: int = 0, threads: int = 1) -> VerificationReport:
    """Sweep ``spec`` over every graph of the given orders.

    With builtin fuel each order's class is enumerated exhaustively.  When the
    ``budget`` (seconds, whole call) runs out the remaining orders fall back to
    random sampling for ``sample_budget`` seconds each, unless
    ``require_exhaustive`` is set, in which case IncompleteVerification is
    raised carrying the partial report.  ``sampled=True`` skips enumeration
    of the target order and samples straight away.
    """
    orders = sorted(set(orders))
    if not orders:
        raise InvalidParameterError("order range is empty")
    t0 = time.perf_counter()
    deadline = None if budget is None else time.monotonic() + budget
    report = VerificationReport(spec.id, orders, budget=budget,
                                fuel="builtin" if isinstance(fuel, str) else "graph6")
    rng = random.Random(seed)

    if not isinstance(fuel, str):
        graphs = [g for g in fuel if g.order in orders]
        for n in orders:
            batch = [g for g in graphs if g.order == n]
            _scan_into(report, spec, n, "exhaustive", batch, threads, deadline)
        report.seconds = time.perf_counter() - t0
        return report

    if fuel != "builtin":
        raise InvalidParameterError(f"unknown fuel {fuel!r}")
    fell_back = sampled
    for n in orders:
        if not fell_back:
            try:
                members = list(generate_class(spec.class_spec(n), deadline=deadline))
            except BudgetExceeded as exc:
                log.warning("exhaustive enumeration stopped at order %d: %s", n, exc)
                if require_exhaustive:
                    report.per_order.append(OrderResult(n, "incomplete", note=str(exc)))
                    report.seconds = time.perf_counter() - t0
                    raise IncompleteVerification(str(exc), report) from None
                fell_back = True
            else:
                res = _scan_into(report, spec, n, "exhaustive", members, threads, deadline)
                if res.mode == "exhaustive":
                    continue
                if require_exhaustive:
                    report.seconds = time.perf_counter() - t0
                    raise IncompleteVerification(f"budget exhausted while checking order {n}", report)
                fell_back = True
                continue
        stop = time.monotonic() + sample_budget
        samples = _sample(spec, n, rng, stop, max_samples)
        res = _scan_into(report, spec, n, "sampled", samples, 1, None)
        res.note = f"random growth sampling, {sample_budget:g}s budget, seed {seed}"
    report.seconds = time.perf_counter() - t0
    return report


def _scan_into(report: VerificationReport, spec: TheoremSpec, n: int, mode: str,
               graphs: Iterable[Graph], threads: int, deadline: float | None) -> OrderResult:
    res = OrderResult(n, mode)
    t0 = time.perf_counter()
    graphs = list(graphs) if threads > 1 else graphs
    total = len(graphs) if isinstance(graphs, list) else None
    for ev in _evaluate_all(spec, graphs if isinstance(graphs, list) else list(graphs),
                            threads, deadline=deadline):
        res.scanned += 1
        if ev.hypotheses_hold:
            res.hypothesis_count += 1
            if ev.is_counterexample:
                res.counterexamples += 1
                report.counterexamples.append(ev)
    if total is not None and res.scanned < total:
        res.mode = "sampled"
        res.note = f"budget exhausted after {res.scanned} of {total} graphs (canonical order prefix)"
    res.seconds = time.perf_counter() - t0
    report.per_order.append(res)
    return res


@dataclass
class SharpnessResult:
    theorem: str
    order: int
    mode: str
    scanned: int
    counterexamples: list[GraphEvaluation]
    seconds: float

    @property
    def graphs(self) -> list[Graph]:
        return [e.graph for e in self.counterexamples]

    def to_json(self) -> dict:
        return {
            "theorem": self.theorem, "order": self.order, "mode": self.mode,
            "scanned": self.scanned,
            "counterexamples": [e.to_json() for e in self.counterexamples],
            "seconds": round(self.seconds, 3),
        }


def sharpness_search(spec: TheoremSpec, n: int, *, budget: float | None = None,
                     sample_budget: float = 60.0, max_samples: int | None = None,
                     seed: int = 0, threads: int = 1) -> SharpnessResult:
    """Graphs of order ``n`` meeting every hypothesis but the order bound, yet
    violating the conclusion.  Exhaustive when enumeration fits ``budget``."""
    if n >= spec.min_order:
        raise InvalidParameterError(
            f"sharpness search needs n below the bound {spec.min_order}, got {n}"
        )
    t0 = time.perf_counter()
    deadline = None if budget is None else time.monotonic() + budget
    mode = "exhaustive"
    try:
        graphs: Iterable[Graph] = list(generate_class(spec.class_spec(n), deadline=deadline))
    except BudgetExceeded:
        mode = "sampled"
        graphs = _sample(spec, n, random.Random(seed), time.monotonic() + sample_budget, max_samples)
    found = []
    scanned = 0
    for ev in _evaluate_all(spec, list(graphs), threads if mode == "exhaustive" else 1,
                            ignore=("order",)):
        scanned += 1
        if ev.holds_except("order") and ev.conclusion_holds is False:
            found.append(ev)
    found.sort(key=lambda e: e.graph6)
    return SharpnessResult(spec.id, n, mode, scanned, found, time.perf_counter() - t0)


# -- named graphs -----------------------------------------------------------

_FIG7 = ("wxyzpqb", ["wx", "xy", "yz", "zw", "wy", "xp", "pq", "qz", "bx", "bp", "bq"])
_P6_CASE2 = ("vwxypqb", ["vw", "wx", "xy", "yv", "wy", "vp", "pq", "qx", "bx", "bq"])


def _lettered(spec: tuple[str, list[str]]) -> Graph:
    names, edges = spec
    idx = {c: i for i, c in enumerate(names)}
    return from_edge_list(len(names), [(idx[e[0]], idx[e[1]]) for e in edges])


GALLERY_NAMES = ("prism", "rook3", "k5_minus_e", "fig7", "p6_case2", "cycle(n)", "complete(n)")


def gallery(name: str) -> Graph:
    """Named graphs with frozen labellings.

    fig7 uses w,x,y,z,a1,a2,b -> 0..6 and p6_case2 uses v,w,x,y,a1,a2,b -> 0..6.
    """
    key = name.strip().lower()
    k3 = standard_graph("complete", 3)
    if key == "prism":
        return cartesian_product(k3, standard_graph("complete", 2))
    if key == "rook3":
        return cartesian_product(k3, k3)
    if key == "k5_minus_e":
        return standard_graph("complete_minus_edge", 5)
    if key == "fig7":
        return _lettered(_FIG7)
    if key == "p6_case2":
        return _lettered(_P6_CASE2)
    m = re.fullmatch(r"(cycle|complete)\(?(\d+)\)?", key)
    if m:
        return standard_graph(m.group(1), int(m.group(2)))
    raise InvalidParameterError(f"unknown gallery graph {name!r}; valid names: {', '.join(GALLERY_NAMES)}")


def _claw_free(g: Graph) -> bool:
    return contains_induced(g, pattern("claw")) is None


def gallery_checks(name: str) -> list[tuple[str, bool]]:
    """The defining properties each named graph is expected to have."""
    g = gallery(name)
    key = name.strip().lower()
    checks: list[tuple[str, bool]] = [
        ("graph6 round trip", parse_graph6(to_graph6(g)) == g),
    ]
    if key == "prism":
        checks += [
            ("3-regular", all(d == 3 for d in g.degrees())),
            ("claw-free", _claw_free(g)),
        ]
    elif key == "rook3":
        checks += [
            ("9 vertices, 18 edges", g.order == 9 and g.num_edges() == 18),
            ("4-regular", all(d == 4 for d in g.degrees())),
            ("no chorded C4", cycles.find_chorded_cycle(g, 4) is None),
        ]
    elif key == "k5_minus_e":
        checks += [("5 vertices, 9 edges", g.order == 5 and g.num_edges() == 9)]
    elif key == "fig7":
        rep = cycles.pancyclicity_report(g)
        checks += [
            ("7 vertices, 11 edges", g.order == 7 and g.num_edges() == 11),
            ("claw-free", _claw_free(g)),
            ("P5-free", contains_induced(g, pattern("p5")) is None),
            ("2-connected", g.order >= 3 and is_connected(g) and not cut_vertices(g)),
            ("not chorded pancyclic", not rep.chorded_pancyclic),
        ]
    elif key == "p6_case2":
        checks += [
            ("7 vertices, 10 edges", g.order == 7 and g.num_edges() == 10),
            ("contains C4", cycles.find_cycle(g, 4) is not None),
            ("no chorded C5", cycles.find_chorded_cycle(g, 5) is None),
        ]
    return checks


def gallery_self_check() -> list[tuple[str, str, bool]]:
    out = []
    for name in ("prism", "rook3", "k5_minus_e", "fig7", "p6_case2"):
        for prop, ok in gallery_checks(name):
            out.append((name, prop, ok))
    return out
