"""Acceptance criteria 1-9, one test each, all exact.

Every test appends a ``criterion N [PASS|FAIL] ...`` line to RESULTS; pytest
prints them in its terminal summary, and ``python3 tests/test_acceptance.py``
runs the criteria in order and prints the same lines.

Environment knobs (seconds): CHORDCK_ACCEPT_P6_BUDGET (exhaustive budget for
the P6 family, default 3600), CHORDCK_ACCEPT_SAMPLE (sampling per theorem and
order at n = 12..13, default 90), CHORDCK_ACCEPT_Z_BUDGET (order-11 budget for
Z1/Z2, default 1800).
"""

import os
import random
import sys
import time
from itertools import combinations, permutations

from chordck.cycles import find_chorded_cycle, has_chorded_cycle, has_cycle
from chordck.enumeration import ClassSpec, generate_class
from chordck.errors import BudgetExceeded, IncompleteVerification
from chordck.graph import (
    canonical_form,
    from_edge_list,
    is_isomorphic,
    is_two_connected,
    parse_graph6,
    to_graph6,
)
from chordck.patterns import PATTERN_NAMES, NeighborhoodShape, contains_induced, neighborhood_structure, pattern
from chordck.theorems import evaluate, gallery, get_theorem, sharpness_search, verify

sys.path.insert(0, os.path.dirname(__file__))
from oracles import atlas, brute_isomorphic, subset_contains  # noqa: E402

P6_BUDGET = float(os.environ.get("CHORDCK_ACCEPT_P6_BUDGET", 3600))
SAMPLE_SECONDS = float(os.environ.get("CHORDCK_ACCEPT_SAMPLE", 90))
Z_BUDGET = float(os.environ.get("CHORDCK_ACCEPT_Z_BUDGET", 1800))

RESULTS: list[str] = []
EMITTED: dict[str, object] = {}


def record(n, title, ok, detail):
    line = f"criterion {n} [{'PASS' if ok else 'FAIL'}] {title}: {detail}"
    RESULTS.append(line)
    print(line, flush=True)
    return ok


def emit(graphs):
    for g in graphs:
        EMITTED[to_graph6(g)] = g


def cls(n, names, conn):
    return ClassSpec(n, tuple(pattern(x) for x in names), conn)


def members(n, names, conn):
    out = list(generate_class(cls(n, names, conn)))
    emit(out)
    return out


# -- 1 -----------------------------------------------------------------------

def test_criterion_1_neighbourhoods():
    t0 = time.perf_counter()
    graphs = vertices = 0
    bad = []
    for n in range(1, 9):
        for g in members(n, ("claw",), "connected"):
            graphs += 1
            for x in range(n):
                vertices += 1
                if neighborhood_structure(g, x).classification == NeighborhoodShape.OTHER:
                    bad.append((to_graph6(g), x))
    ok = record(1, "claw-free neighbourhoods are traceable or two cliques", not bad,
                f"{graphs} connected claw-free graphs n<=8, {vertices} vertices, "
                f"{len(bad)} violations, {time.perf_counter() - t0:.1f}s")
    assert ok, bad[:5]


# -- 2 -----------------------------------------------------------------------

def test_criterion_2_degree_lemma():
    t0 = time.perf_counter()
    checked = {3: 0, 4: 0}
    bad = []
    for n in range(1, 10):
        for g in members(n, ("claw",), "any"):
            top = g.max_degree()
            for k in (3, 4):
                if top >= 2 * k - 1:
                    checked[k] += 1
                    if find_chorded_cycle(g, k + 1) is None:
                        bad.append((to_graph6(g), k))
    ok = record(2, "claw-free with degree >= 2k-1 has a chorded C_{k+1}", not bad,
                f"k=3: {checked[3]} graphs, k=4: {checked[4]} graphs (all claw-free n<=9), "
                f"{len(bad)} violations, {time.perf_counter() - t0:.1f}s")
    assert ok, bad[:5]


# -- 3 -----------------------------------------------------------------------

def test_criterion_3_p4():
    rep = verify(get_theorem("p4"), range(5, 10))
    for n in range(5, 10):
        members(n, ("claw", "p4"), "two_connected")
    ok = record(3, "p4 exhaustive n=5..9", rep.mode == "exhaustive" and not rep.counterexamples,
                f"mode {rep.mode}, scanned {rep.scanned}, counterexamples {len(rep.counterexamples)}, "
                f"{rep.seconds:.1f}s")
    assert ok


# -- 4 -----------------------------------------------------------------------

def test_criterion_4_p5_and_sharpness():
    rep = verify(get_theorem("p5"), range(8, 11))
    for n in range(8, 11):
        members(n, ("claw", "p5"), "two_connected")
    sharp = sharpness_search(get_theorem("p5"), 7)
    emit(sharp.graphs)
    fig7 = gallery("fig7")
    has_fig7 = any(is_isomorphic(g, fig7) for g in sharp.graphs)
    ok = (rep.mode == "exhaustive" and not rep.counterexamples
          and sharp.mode == "exhaustive" and bool(sharp.counterexamples) and has_fig7)
    record(4, "p5 exhaustive n=8..10 and sharp at n=7", ok,
           f"verify: mode {rep.mode}, scanned {rep.scanned}, counterexamples {len(rep.counterexamples)}, "
           f"{rep.seconds:.1f}s; sharpness n=7: {len(sharp.counterexamples)} graph(s) "
           f"{[e.graph6 for e in sharp.counterexamples]}, fig7 among them: {has_fig7}")
    assert ok


# -- 5 -----------------------------------------------------------------------

def test_criterion_5_z1_z2():
    parts = []
    ok = True
    for tid, names in (("z1", ("claw", "z1")), ("z2", ("claw", "z2"))):
        rep = verify(get_theorem(tid), [10])
        members(10, names, "two_connected")
        ok &= rep.mode == "exhaustive" and not rep.counterexamples
        parts.append(f"{tid} n=10: scanned {rep.scanned}, counterexamples {len(rep.counterexamples)}")
        try:
            rep11 = verify(get_theorem(tid), [11], budget=Z_BUDGET, require_exhaustive=True)
        except IncompleteVerification:
            parts.append(f"{tid} n=11: not enumerable within {Z_BUDGET:g}s (skipped)")
        else:
            members(11, names, "two_connected")
            ok &= not rep11.counterexamples
            parts.append(f"{tid} n=11: scanned {rep11.scanned}, counterexamples {len(rep11.counterexamples)}")
    rook = gallery("rook3")
    emit([rook])
    ev = evaluate(get_theorem("z2"), rook)
    rook_ok = (not ev.clause("order").holds and ev.holds_except("order")
               and ev.conclusion_holds is False and ev.missing_lengths == [4]
               and ev.conclusion_detail["is_cycle"] is False)
    ok &= rook_ok
    parts.append(f"z2 on K3xK3: non-order hypotheses hold {ev.holds_except('order')}, "
                 f"missing chorded {ev.missing_lengths}, is C9 {ev.conclusion_detail['is_cycle']}")
    record(5, "z1/z2 exhaustive and K3xK3 sharpness", ok, "; ".join(parts))
    assert ok


# -- 6 -----------------------------------------------------------------------

def test_criterion_6_lemma_chain():
    parts = []
    ok = True
    for tid in ("lem_c4_to_c5_p5", "lem_c5_to_c4_p5"):
        rep = verify(get_theorem(tid), range(8, 11))
        ok &= rep.mode == "exhaustive" and not rep.counterexamples
        parts.append(f"{tid}: scanned {rep.scanned}, hypothesis holds {rep.hypothesis_count}, "
                     f"counterexamples {len(rep.counterexamples)}")
    # the same implications asserted directly
    direct = 0
    for n in range(8, 11):
        for g in members(n, ("claw", "p5"), "two_connected"):
            c4 = has_cycle(g, 4)
            c5 = has_chorded_cycle(g, 5)
            ok &= (not c4 or c5) and (not c5 or has_chorded_cycle(g, 4))
            direct += 1
    parts.append(f"direct check over {direct} graphs")
    record(6, "C4 => chorded C5 => chorded C4 on {claw,P5}-free n=8..10", ok, "; ".join(parts))
    assert ok


# -- 7 -----------------------------------------------------------------------

P6_FAMILY = ("lem_p6_c4", "lem_p6_c5", "lem_p6_c6", "p6")


def test_criterion_7_p6_family():
    t0 = time.perf_counter()
    deadline = time.monotonic() + P6_BUDGET
    parts = []
    ok = True
    top = 9
    for n in (10, 11):
        try:
            graphs = list(generate_class(cls(n, ("claw", "p6"), "two_connected"), deadline=deadline))
        except BudgetExceeded:
            parts.append(f"n={n}: class not enumerated within {P6_BUDGET:g}s")
            break
        emit(graphs)
        top = n
        for tid in P6_FAMILY:
            spec = get_theorem(tid)
            evs = [evaluate(spec, g, lazy=True, ignore=("order",)) for g in graphs]
            below = [e for e in evs if e.holds_except("order") and e.conclusion_holds is False]
            if n >= spec.min_order:
                ok &= not below
                parts.append(f"{tid} n={n} exhaustive: {len(graphs)} graphs, counterexamples {len(below)}")
            else:
                parts.append(f"{tid} n={n} (below bound {spec.min_order}): {len(below)} reported")
    parts.append(f"largest exhaustive order {top}")

    for n in (12, 13):
        for tid in P6_FAMILY:
            spec = get_theorem(tid)
            if n < spec.min_order:
                continue
            rep = verify(spec, [n], sampled=True, sample_budget=SAMPLE_SECONDS, seed=n)
            emit(e.graph for e in rep.counterexamples)
            ok &= rep.mode == "sampled" and not rep.counterexamples
            parts.append(f"{tid} n={n} mode {rep.mode}: {rep.scanned} sampled, "
                         f"counterexamples {len(rep.counterexamples)}")

    sharp = sharpness_search(get_theorem("p6"), 12, budget=1, sample_budget=SAMPLE_SECONDS, seed=12)
    emit(sharp.graphs)
    parts.append(f"sharpness p6 n=12 ({sharp.mode}, {sharp.scanned} scanned, no pass/fail weight): "
                 f"{'found ' + ', '.join(e.graph6 for e in sharp.counterexamples) if sharp.counterexamples else 'none found'}")
    parts.append(f"{time.perf_counter() - t0:.0f}s")
    record(7, "P6 lemmas and theorem", ok, "; ".join(parts))
    assert ok


# -- 8 -----------------------------------------------------------------------

def _subset_cycles(g):
    """Per length: (cycle exists, chorded cycle exists), by brute force over subsets."""
    out = {}
    n = g.order
    for m in range(3, n + 1):
        c = ch = False
        for s in combinations(range(n), m):
            mask = sum(1 << v for v in s)
            if any((g.adj[v] & mask).bit_count() < 2 for v in s):
                continue
            first, rest = s[0], s[1:]
            for p in permutations(rest):
                if p[0] > p[-1]:
                    continue
                cyc = (first,) + p
                if all(g.has_edge(cyc[i], cyc[(i + 1) % m]) for i in range(m)):
                    c = True
                    if sum((g.adj[v] & mask).bit_count() for v in s) > 2 * m:
                        ch = True
                    break
            if ch:
                break
        out[m] = (c, ch)
    return out


def test_criterion_8_oracles():
    t0 = time.perf_counter()
    small = atlas(7)
    # (a) detectors vs subset oracle
    a_bad = sum(
        (contains_induced(g, pattern(p)) is not None) != subset_contains(g, pattern(p).graph)
        for g in small for p in PATTERN_NAMES
    )
    # (b) cycles vs subset oracle, every graph up to order 8
    upto8 = [g for g in small if g.order >= 3] + list(generate_class(ClassSpec(8, (), "any")))
    b_bad = 0
    for g in upto8:
        for m, (c, ch) in _subset_cycles(g).items():
            b_bad += has_cycle(g, m) != c
            if m >= 4:
                b_bad += has_chorded_cycle(g, m) != ch
    # (c) canonical form vs n! brute force on random pairs
    rng = random.Random(7)
    c_bad = 0
    iso_pairs = 0
    for _ in range(1000):
        n = rng.randint(1, 7)
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        p = rng.random()
        g = from_edge_list(n, [e for e in pairs if rng.random() < p])
        if rng.random() < 0.5:
            perm = list(range(n))
            rng.shuffle(perm)
            h = g.relabel(perm)
        else:
            h = from_edge_list(n, [e for e in pairs if rng.random() < p])
        truth = brute_isomorphic(g, h)
        iso_pairs += truth
        c_bad += (canonical_form(g) == canonical_form(h)) != truth
    # (d) generation vs brute force over all labelled graphs
    d_bad = []
    sets = {t: get_theorem(t).forbidden for t in ("z1", "z2", "p4", "p5", "p6", "lem_degree")}
    for n in range(1, 7):
        pairs = list(combinations(range(n), 2))
        reps = {}
        for mask in range(1 << len(pairs)):
            g = from_edge_list(n, [e for i, e in enumerate(pairs) if mask >> i & 1])
            reps.setdefault(canonical_form(g), g)
        for tid, names in sets.items():
            conn = "two_connected" if get_theorem(tid).two_connected else "any"
            expected = {
                code for code, g in reps.items()
                if not any(subset_contains(g, pattern(x).graph) for x in names)
                and (conn == "any" or is_two_connected(g))
            }
            got = {canonical_form(g) for g in members(n, names, conn)}
            if got != expected:
                d_bad.append((tid, n))
    ok = not (a_bad or b_bad or c_bad or d_bad)
    record(8, "oracle equivalences", ok,
           f"(a) {len(small)} graphs x 6 patterns, {a_bad} disagreements; "
           f"(b) {len(upto8)} graphs n<=8, {b_bad} disagreements; "
           f"(c) 1000 pairs ({iso_pairs} isomorphic), {c_bad} disagreements; "
           f"(d) 6 forbidden sets x n<=6, mismatches {d_bad}; {time.perf_counter() - t0:.0f}s")
    assert ok


# -- 9 -----------------------------------------------------------------------

def test_criterion_9_graph6_roundtrip():
    if not EMITTED:
        for n in range(1, 9):
            members(n, ("claw",), "connected")
    bad = [code for code, g in EMITTED.items() if parse_graph6(code) != g or to_graph6(parse_graph6(code)) != code]
    ok = record(9, "graph6 round trip on emitted graphs", not bad,
                f"{len(EMITTED)} distinct graphs, {len(bad)} failures")
    assert ok


if __name__ == "__main__":
    failed = 0
    for name, fn in list(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                failed += 1
    print("\n".join(["", "summary:"] + RESULTS))
    sys.exit(1 if failed else 0)
