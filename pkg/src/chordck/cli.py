"""Command-line front end: check, verify, generate, gallery, search.

Exit codes: 0 verified / nothing found, 1 counterexamples found, 2 incomplete
(sampled or budget-limited), 64 usage error, 65 malformed input, 66 input
file missing, 70 failed gallery self-check, 74 output error.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from typing import Iterator, Sequence

from . import cycles
from .enumeration import ClassSpec, GenStats, generate_class, stream_graph6
from .errors import (
    BudgetExceeded,
    ChordckError,
    Graph6ParseError,
    GenerationRefused,
    IncompleteVerification,
    InvalidParameterError,
)
from .graph import CAPACITY, Graph, is_connected, is_two_connected, parse_edge_list, to_graph6
from .patterns import PATTERN_NAMES, contains_induced, is_traceable, parse_pattern_list, pattern
from .theorems import (
    GALLERY_NAMES,
    evaluate,
    gallery,
    gallery_checks,
    gallery_self_check,
    get_theorem,
    sharpness_search,
    theorem_ids,
    verify,
)

EX_OK, EX_FOUND, EX_INCOMPLETE = 0, 1, 2
EX_USAGE, EX_DATAERR, EX_NOINPUT, EX_SOFTWARE, EX_IOERR = 64, 65, 66, 70, 74

log = logging.getLogger("chordck")

PROPS = ("connected", "2conn", "traceable", "pancyclic", "chorded-pancyclic") + tuple(
    f"{p}-free" for p in PATTERN_NAMES
)
DEFAULT_PROPS = "claw-free,2conn,pancyclic,chorded-pancyclic"


class InputError(Exception):
    """Unreadable graph data on input."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EX_USAGE, f"{self.prog}: error: {message}\n")


def _theorem(text: str):
    try:
        return get_theorem(text)
    except InvalidParameterError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _order(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"order must be an integer, got {text!r}") from None
    if not 1 <= n <= CAPACITY:
        raise argparse.ArgumentTypeError(f"order {n} outside 1..{CAPACITY}")
    return n


def _orders(text: str) -> range:
    lo, sep, hi = text.partition("..")
    a = _order(lo)
    b = _order(hi) if sep else a
    if b < a:
        raise argparse.ArgumentTypeError(f"order range {text!r} is empty")
    return range(a, b + 1)


def _forbid(text: str):
    try:
        pats = parse_pattern_list(text)
    except InvalidParameterError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    return tuple(pats)


def _props(text: str) -> list[str]:
    out = [p.strip().lower() for p in text.split(",") if p.strip()]
    bad = [p for p in out if p not in PROPS]
    if bad:
        raise argparse.ArgumentTypeError(
            f"unknown propert{'y' if len(bad) == 1 else 'ies'} {', '.join(bad)}; valid: {', '.join(PROPS)}"
        )
    return out


def _budget(text: str) -> float:
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"budget must be a number of seconds, got {text!r}") from None
    if v <= 0:
        raise argparse.ArgumentTypeError("budget must be positive")
    return v


def _threads_default() -> int:
    env = os.environ.get("CHORDCK_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            log.warning("ignoring non-integer CHORDCK_THREADS=%r", env)
    return 1


def build_parser() -> argparse.ArgumentParser:
    ids = ", ".join(theorem_ids() + ["lem_degree:K"])
    parser = _Parser(
        prog="chordck",
        description="Exhaustive checks of chorded-pancyclicity results on small graphs.",
        epilog=f"theorem ids: {ids}. patterns: {', '.join(PATTERN_NAMES)}.",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit the full JSON report")
    common.add_argument("--threads", type=int, default=None,
                        help="worker processes (default: $CHORDCK_THREADS or 1)")

    c = sub.add_parser("check", parents=[common], help="property table for input graphs")
    src = c.add_mutually_exclusive_group(required=True)
    src.add_argument("--g6", metavar="PATH|-", help="graph6 file, or - for stdin")
    src.add_argument("--edges", metavar="PATH|-", help="edge-list file: n, then one 'u v' per line")
    c.add_argument("--props", type=_props, default=_props(DEFAULT_PROPS),
                   help=f"comma list from: {', '.join(PROPS)}")
    c.add_argument("--theorem", type=_theorem, help="also evaluate this theorem on each graph")
    c.add_argument("--skip-bad", action="store_true", help="skip malformed graph6 lines")

    v = sub.add_parser("verify", parents=[common], help="sweep a theorem over whole classes")
    v.add_argument("--theorem", type=_theorem, required=True, help=f"one of: {ids}")
    rng = v.add_mutually_exclusive_group(required=True)
    rng.add_argument("--orders", type=_orders, metavar="A..B")
    rng.add_argument("--order", type=_orders, metavar="N")
    v.add_argument("--g6", metavar="PATH|-", help="use these graphs instead of the builtin generator")
    v.add_argument("--skip-bad", action="store_true")
    v.add_argument("--budget", type=_budget, help="seconds for exhaustive enumeration")
    v.add_argument("--exhaustive", action="store_true",
                   help="fail with exit 2 instead of falling back to sampling")
    v.add_argument("--sampled", action="store_true", help="sample directly, skip enumeration")
    v.add_argument("--sample-budget", type=_budget, default=60.0, help="seconds of sampling per order")
    v.add_argument("--seed", type=int, default=0)

    g = sub.add_parser("generate", parents=[common], help="emit one graph per isomorphism class")
    g.add_argument("--forbid", type=_forbid, default=(), metavar="LIST")
    g.add_argument("--order", type=_order, required=True, metavar="N")
    g.add_argument("--require", choices=("any", "connected", "2conn"), default="connected")
    g.add_argument("--max-degree", type=int, help="accelerated runs only: prune vertices above this degree")
    g.add_argument("--budget", type=_budget)
    g.add_argument("--emit", choices=("g6", "json"), default="g6")

    ga = sub.add_parser("gallery", parents=[common], help="named graphs and their self-checks")
    ga.add_argument("name", nargs="?", help=f"one of: {', '.join(GALLERY_NAMES)}; omit for all")

    s = sub.add_parser("search", parents=[common], help="sharpness search below a theorem's order bound")
    s.add_argument("--theorem", type=_theorem, required=True, help=f"one of: {ids}")
    s.add_argument("--order", type=_order, required=True, metavar="N")
    s.add_argument("--budget", type=_budget)
    s.add_argument("--sample-budget", type=_budget, default=60.0)
    s.add_argument("--seed", type=int, default=0)
    return parser


# -- input ------------------------------------------------------------------

def _open_text(path: str):
    if path == "-":
        return sys.stdin
    try:
        return open(path, encoding="ascii", errors="replace")
    except OSError as exc:
        raise FileNotFoundError(f"cannot read {path}: {exc.strerror}") from None


def _read_graphs(args) -> Iterator[Graph]:
    if getattr(args, "edges", None):
        fh = _open_text(args.edges)
        text = fh.read()
        try:
            yield parse_edge_list(text)
        except ChordckError as exc:
            raise InputError(f"{args.edges}: {exc}") from None
        return
    fh = _open_text(args.g6)
    diagnostics: list[str] = []
    try:
        yield from stream_graph6(fh, skip_bad=args.skip_bad, diagnostics=diagnostics)
    finally:
        for d in diagnostics:
            print(f"chordck: skipped {d}", file=sys.stderr)
        if fh is not sys.stdin:
            fh.close()


# -- verbs ------------------------------------------------------------------

def _dump(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2, sort_keys=True) + "\n")


def _prop_value(g: Graph, prop: str):
    if prop == "connected":
        return is_connected(g)
    if prop == "2conn":
        return is_two_connected(g)
    if prop == "traceable":
        return is_traceable(g) is not None
    if prop.endswith("-free"):
        return contains_induced(g, pattern(prop[:-5])) is None
    if g.order < 3:
        return None
    rep = cycles.pancyclicity_report(g)
    return rep.pancyclic if prop == "pancyclic" else rep.chorded_pancyclic


def cmd_check(args) -> int:
    rows = []
    status = EX_OK
    for g in _read_graphs(args):
        row = {"graph6": to_graph6(g), "order": g.order}
        row.update({p: _prop_value(g, p) for p in args.props})
        if args.theorem is not None:
            ev = evaluate(args.theorem, g)
            row["theorem"] = args.theorem.id
            row["hypotheses_hold"] = ev.hypotheses_hold
            row["conclusion_holds"] = ev.conclusion_holds
            row["counterexample"] = ev.is_counterexample
            if ev.is_counterexample:
                status = EX_FOUND
        rows.append(row)
    if args.json:
        _dump({"graphs": rows})
        return status
    cols = ["graph6", "order"] + list(args.props)
    if args.theorem is not None:
        cols += ["hypotheses_hold", "conclusion_holds"]
    table = [cols] + [[_cell(r[c]) for c in cols] for r in rows]
    widths = [max(len(t[i]) for t in table) for i in range(len(cols))]
    for t in table:
        print("  ".join(cell.ljust(w) for cell, w in zip(t, widths)).rstrip())
    return status


def _cell(v) -> str:
    if v is True:
        return "yes"
    if v is False:
        return "no"
    if v is None:
        return "-"
    return str(v)


def _self_check() -> bool:
    bad = [(n, p) for n, p, ok in gallery_self_check() if not ok]
    for name, prop in bad:
        print(f"chordck: gallery self-check failed: {name}: {prop}", file=sys.stderr)
    return not bad


def _print_report(rep) -> None:
    data = rep.to_json()
    print(f"theorem {data['theorem']}  orders {data['order']}  mode {data['mode']}")
    for r in data["orders"]:
        line = (f"  n={r['order']:>2}  {r['mode']:<10}  scanned {r['scanned']:>7}  "
                f"hypotheses {r['hypothesis_count']:>7}  counterexamples {r['counterexamples']}  "
                f"{r['seconds']:.1f}s")
        print(line + (f"  ({r['note']})" if r["note"] else ""))
    for ce in data["counterexamples"]:
        print(f"  counterexample {ce['graph6']}  failed {ce['failed_clause']}  "
              f"missing {ce['missing_lengths']}")
    print(f"{len(data['counterexamples'])} counterexample(s), {data['seconds']:.1f}s")


def cmd_verify(args) -> int:
    if not _self_check():
        return EX_SOFTWARE
    orders = args.orders or args.order
    fuel = "builtin" if args.g6 is None else list(_read_graphs(args))
    try:
        rep = verify(args.theorem, orders, fuel=fuel, budget=args.budget,
                     require_exhaustive=args.exhaustive, sampled=args.sampled,
                     sample_budget=args.sample_budget, seed=args.seed, threads=args.threads)
    except IncompleteVerification as exc:
        print(f"chordck: incomplete: {exc}", file=sys.stderr)
        if exc.report is not None:
            _dump(exc.report.to_json()) if args.json else _print_report(exc.report)
        return EX_INCOMPLETE
    _dump(rep.to_json()) if args.json else _print_report(rep)
    return rep.exit_code


def cmd_generate(args) -> int:
    conn = {"2conn": "two_connected"}.get(args.require, args.require)
    spec = ClassSpec(args.order, args.forbid, conn, args.max_degree)
    stats = GenStats()
    deadline = None
    if args.budget is not None:
        import time
        deadline = time.monotonic() + args.budget
    try:
        graphs = list(generate_class(spec, deadline=deadline, stats=stats))
    except BudgetExceeded as exc:
        print(f"chordck: incomplete: {exc}", file=sys.stderr)
        return EX_INCOMPLETE
    if args.emit == "json" or args.json:
        _dump({
            "order": args.order,
            "forbidden": [p.name for p in args.forbid],
            "require": args.require,
            "graphs": [to_graph6(g) for g in graphs],
            "stats": stats.to_json(),
        })
    else:
        sys.stdout.write("".join(to_graph6(g) + "\n" for g in graphs))
        log.info("generation stats: %s", json.dumps(stats.to_json(), sort_keys=True))
    return EX_OK


def cmd_gallery(args) -> int:
    names = [args.name] if args.name else [n for n in GALLERY_NAMES if "(" not in n]
    out = []
    ok = True
    for name in names:
        g = gallery(name)
        checks = gallery_checks(name)
        ok &= all(c for _, c in checks)
        out.append({"name": name, "graph6": to_graph6(g), "order": g.order,
                    "edges": [list(e) for e in g.edges()],
                    "checks": {p: c for p, c in checks}})
    if args.json:
        _dump({"gallery": out})
    else:
        for item in out:
            print(f"{item['name']}: {item['graph6']}")
            for prop, c in item["checks"].items():
                print(f"  {prop}: {'confirmed' if c else 'FAILED'}")
    return EX_OK if ok else EX_SOFTWARE


def cmd_search(args) -> int:
    res = sharpness_search(args.theorem, args.order, budget=args.budget,
                           sample_budget=args.sample_budget, seed=args.seed, threads=args.threads)
    if args.json:
        _dump(res.to_json())
    else:
        print(f"theorem {res.theorem}  order {res.order}  mode {res.mode}  scanned {res.scanned}")
        for ev in res.counterexamples:
            print(f"  {ev.graph6}  missing {ev.missing_lengths}")
        print(f"{len(res.counterexamples)} graph(s) found, {res.seconds:.1f}s")
    if res.counterexamples:
        return EX_FOUND
    return EX_OK if res.mode == "exhaustive" else EX_INCOMPLETE


COMMANDS = {
    "check": cmd_check,
    "verify": cmd_verify,
    "generate": cmd_generate,
    "gallery": cmd_gallery,
    "search": cmd_search,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    if args.threads is None:
        args.threads = _threads_default()
    elif args.threads < 1:
        parser.error("--threads must be at least 1")
    try:
        return COMMANDS[args.verb](args)
    except FileNotFoundError as exc:
        print(f"chordck: {exc}", file=sys.stderr)
        return EX_NOINPUT
    except Graph6ParseError as exc:
        print(f"chordck: malformed graph6: {exc}", file=sys.stderr)
        return EX_DATAERR
    except InputError as exc:
        print(f"chordck: malformed input: {exc}", file=sys.stderr)
        return EX_DATAERR
    except (GenerationRefused, InvalidParameterError) as exc:
        print(f"chordck: {exc}", file=sys.stderr)
        return EX_USAGE
    except BrokenPipeError:
        return EX_IOERR
    except OSError as exc:
        print(f"chordck: output error: {exc}", file=sys.stderr)
        return EX_IOERR
    except ChordckError as exc:
        print(f"chordck: {exc}", file=sys.stderr)
        return EX_DATAERR


if __name__ == "__main__":
    sys.exit(main())
