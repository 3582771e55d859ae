"""Command-line front end.

Every operation is exposed as a subcommand with text output by default,
JSON behind ``--json``-style flags, and DOT export for the automata.
Exit codes: 0 success, 1 domain errors (a word outside the smooth
language, an unrealizable frontier pair, an exhausted gap search), 2
argument or validation errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import automata, forbidden, golden, oracle, render, repetitions, vertical
from .words import (
    WordError,
    classify,
    derivative,
    derivative_chain,
    extend,
    extremal_primitives,
    parse_word,
    primitives,
)

EPSILON = "ε"
SCHEMA = 1


def _show(w: str) -> str:
    return w if w else EPSILON


def _emit_json(payload: dict) -> None:
    print(json.dumps({"schema": SCHEMA, **payload}))


def _write(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def _cmd_derive(args) -> int:
    w = parse_word(args.word)
    if args.all:
        chain = derivative_chain(w)
        if args.json:
            _emit_json({"word": w, "chain": list(chain),
                        "height": len(chain) - 1,
                        "root": chain[-2] if len(chain) > 1 else None})
        else:
            for level in chain:
                print(_show(level))
    else:
        d = derivative(w)
        if args.json:
            _emit_json({"word": w, "derivative": d})
        else:
            print(_show(d))
    return 0


def _cmd_check(args) -> int:
    from .words import NotCInfinity
    w = parse_word(args.word)
    try:
        chain = derivative_chain(w)
    except NotCInfinity as exc:
        # report the first underivable order, one past the stuck level
        if args.json:
            _emit_json({"word": w, "cinf": False,
                        "fails_at_level": exc.level + 1})
        else:
            print(f"not C-infinity (fails at level {exc.level + 1})")
        return 1
    if args.json:
        _emit_json({"word": w, "cinf": True, "height": len(chain) - 1,
                    "root": chain[-2] if len(chain) > 1 else None})
    else:
        print(f"C-infinity (height {len(chain) - 1})")
    return 0


def _cmd_psi(args) -> int:
    w = parse_word(args.word)
    rep = vertical.vertical_repr(w)
    if args.json:
        _emit_json({"word": w, "left": rep.left, "right": rep.right,
                    "vertical": str(rep)})
    else:
        print(str(rep))
    return 0


def _cmd_unpsi(args) -> int:
    w = vertical.reconstruct(args.left, args.right)
    if args.json:
        _emit_json({"left": args.left, "right": args.right, "word": w})
    else:
        print(w)
    return 0


def _cmd_minimal(args) -> int:
    w = parse_word(args.word)
    m = vertical.canonical_minimal(w)
    if args.json:
        _emit_json({"word": w, "minimal": m,
                    "vertical": str(vertical.vertical_repr(m))})
    else:
        print(m)
    return 0


def _cmd_extend(args) -> int:
    w = parse_word(args.word)
    e = extend(w, args.side)
    if args.json:
        _emit_json({"word": w, "side": args.side, "extension": e})
    else:
        print(e)
    return 0


def _cmd_primitives(args) -> int:
    w = parse_word(args.word)
    if args.extremal:
        pair = extremal_primitives(w, args.extremal)
        if args.json:
            _emit_json({"word": w, "extremal": args.extremal, "primitives": list(pair)})
        else:
            print("\n".join(pair))
    else:
        ps = primitives(w)
        if args.json:
            _emit_json({"word": w, "primitives": list(ps)})
        else:
            print("\n".join(ps))
    return 0


def _cmd_classify(args) -> int:
    w = parse_word(args.word)
    profile = classify(w)
    fields = {
        "left_minimal": profile.left_minimal,
        "right_minimal": profile.right_minimal,
        "left_maximal": profile.left_maximal,
        "right_maximal": profile.right_maximal,
        "left_doubly_ext": profile.left_doubly_ext,
        "right_doubly_ext": profile.right_doubly_ext,
        "fully_ext": profile.fully_ext,
        "single_rooted": profile.single_rooted,
    }
    if args.json:
        _emit_json({"word": w, "profile": fields})
    else:
        for name, value in fields.items():
            print(f"{name}: {'yes' if value else 'no'}")
    return 0


def _cmd_mf(args) -> int:
    catalog = forbidden.mf_set(args.k)
    if args.format == "json":
        _emit_json({
            "k": catalog.k,
            "strata": {str(h): list(ws) for h, ws in sorted(catalog.by_height.items())},
        })
    else:
        for h in sorted(catalog.by_height):
            print(f"# height {h}")
            for w in catalog.by_height[h]:
                print(w)
    return 0


def _cmd_automaton(args) -> int:
    a = automata.ck_automaton(args.k)
    if args.compact:
        ca = automata.compact(a)
        if args.dot:
            _write(args.dot, render.compact_dot(ca))
        if args.json:
            payload = {
                "k": args.k,
                "compact": True,
                "states": [
                    {
                        "id": i,
                        "minimal_word": st.minimal_word,
                        "maximal_extension": st.maximal_extension,
                        "height": st.height,
                        "root": st.root,
                        "chain": list(st.chain),
                        "edges": [
                            {"target": e.target, "kind": e.kind, "label": e.label}
                            for e in ca.edges[i]
                        ],
                    }
                    for i, st in enumerate(ca.states)
                ],
            }
            _write(args.json, json.dumps({"schema": SCHEMA, **payload}, indent=2))
        if not args.dot and not args.json:
            rows = automata.census_by_height(ca)
            print(f"compacted automaton for k={args.k}: {len(ca)} states")
            for h in sorted(rows):
                r = rows[h]
                print(f"height {h}: {r['total']} states "
                      f"({r['single']} single-rooted, {r['double']} double-rooted)")
    else:
        if args.dot:
            _write(args.dot, render.automaton_dot(a))
        if args.json:
            payload = {
                "k": args.k,
                "compact": False,
                "states": [
                    {
                        "id": i,
                        "label": a.labels[i],
                        "failure": a.failure[i],
                        "edges": [
                            {"symbol": ch, "target": t, "kind": kind}
                            for ch, (t, kind) in sorted(a.transitions[i].items())
                        ],
                    }
                    for i in range(len(a))
                ],
            }
            _write(args.json, json.dumps({"schema": SCHEMA, **payload}, indent=2))
        if not args.dot and not args.json:
            n_weak = sum(1 for *_x, kind in a.edges() if kind == automata.WEAK)
            print(f"automaton for k={args.k}: {len(a)} states, "
                  f"{sum(len(t) for t in a.transitions)} transitions ({n_weak} weak)")
    return 0


def _cmd_vuca(args) -> int:
    if args.stage == "vca":
        ca = automata.compact(automata.ck_automaton(args.height))
        view = vertical.vca_from_compacted(ca)
        if args.dot:
            _write(args.dot, render.vca_dot(view))
        else:
            print(f"vertical compacted view at k={args.height}: "
                  f"{len(view.labels)} states")
        return 0
    if args.via_compaction:
        fa = vertical.frontier_automaton_via_compaction(args.height)
    else:
        fa = vertical.build_frontier_automaton(args.height)
    if args.dot:
        _write(args.dot, render.frontier_dot(fa))
    if args.json:
        _emit_json({
            "height": fa.height,
            "via_compaction": bool(args.via_compaction),
            "weak": dict(sorted(fa.weak.items())),
        })
    if not args.dot and not args.json:
        print(f"frontier automaton of height {fa.height}: "
              f"{len(fa.states())} states, {len(fa.weak)} weak edges")
        for u in sorted(fa.weak, key=lambda s: (len(s), s)):
            print(f"{u} -0-> {fa.weak[u]}")
    return 0


def _cmd_gap(args) -> int:
    u = parse_word(args.word)
    rec = repetitions.shortest_gap(u, args.max_total)
    if args.json:
        _emit_json({"u": rec.u, "z": rec.z, "gap": rec.gap, "total": rec.total,
                    "word": rec.u + rec.z + rec.u})
    else:
        print(f"u={rec.u} z={_show(rec.z)} gap={rec.gap} total={rec.total} "
              f"word={rec.u + rec.z + rec.u}")
    return 0


def _cmd_gap_stats(args) -> int:
    table = repetitions.repetitivity(args.n)
    report = repetitions.bound_check(args.n, table)
    if args.plot:
        render.gap_stats_figure(table, report.exponent, args.plot)
    if args.json:
        rows = [
            {
                "n": n,
                "I": table.I[n],
                "G": table.G[n],
                "witness_I": {"u": table.witnesses[n]["I"][0],
                              "z": table.witnesses[n]["I"][1]},
                "witness_G": {"u": table.witnesses[n]["G"][0],
                              "z": table.witnesses[n]["G"][1]},
                "max_total": report.totals[n],
                "ratio": report.ratios[n],
            }
            for n in sorted(table.I)
        ]
        _emit_json({"n_max": args.n, "exponent": report.exponent,
                    "fitted_constant": report.constant, "rows": rows})
    else:
        sep = "," if args.format == "csv" else "\t"
        print(sep.join(["n", "I", "G", "max_total", f"ratio_n^{report.exponent}",
                        "witness_I", "witness_G"]))
        for n in sorted(table.I):
            print(sep.join([
                str(n), str(table.I[n]), str(table.G[n]),
                str(report.totals[n]), f"{report.ratios[n]:.6f}",
                table.witnesses[n]["I"][0], table.witnesses[n]["G"][0],
            ]))
    return 0


def _cmd_kolakoski(args) -> int:
    w = repetitions.kolakoski(args.len)
    if args.json:
        _emit_json({"length": args.len, "word": w})
    else:
        print(_show(w))
    return 0


def _cmd_census(args) -> int:
    report = repetitions.census(args.max_len)
    if args.json:
        _emit_json({
            "max_len": report.n_max,
            "square_count": report.square_count,
            "cube_count": report.cube_count,
            "overlap_count": len(report.overlaps),
            "overlaps_over_55": report.overlaps_longer_than(55),
            "squares": list(report.squares),
            "overlaps": list(report.overlaps),
        })
    else:
        print(f"words scanned up to length {report.n_max}")
        print(f"squares:  {report.square_count}")
        print(f"cubes:    {report.cube_count}")
        print(f"overlaps: {len(report.overlaps)} "
              f"(longer than 55: {report.overlaps_longer_than(55)})")
    return 0


def _cmd_golden_examples(args) -> int:
    results = golden.run_all()
    failed = [name for name, ok in results.items() if not ok]
    if args.json:
        _emit_json({"results": results, "passed": len(results) - len(failed),
                    "failed": len(failed)})
    else:
        for name, ok in results.items():
            print(f"{'PASS' if ok else 'FAIL'} {name}")
        print(f"{len(results) - len(failed)}/{len(results)} examples passed")
    return 1 if failed else 0


def _cmd_oracle(args) -> int:
    if args.which == "ck":
        for w in oracle.enumerate_ck(args.k, args.n):
            print(_show(w))
    elif args.which == "cinf":
        for w in oracle.enumerate_cinf(args.n):
            print(_show(w))
    elif args.which == "mf":
        for w in oracle.brute_mf(args.k, args.max_len):
            print(w)
    else:
        for n, (i_val, g_val) in sorted(oracle.brute_gap_table(args.n).items()):
            print(f"{n}\t{i_val}\t{g_val}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="smoothwords",
        description="Derivative calculus, forbidden-word automata, vertical "
                    "representation and repetition statistics for smooth "
                    "words over {1,2}.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        p = sub.add_parser(name, help=help_)
        p.set_defaults(fn=fn)
        return p

    p = add("derive", _cmd_derive, "derivative of a word, or the full chain")
    p.add_argument("word")
    p.add_argument("--all", action="store_true", help="print the whole chain")
    p.add_argument("--json", action="store_true")

    p = add("check", _cmd_check, "smoothness test with failure level")
    p.add_argument("word")
    p.add_argument("--json", action="store_true")

    p = add("psi", _cmd_psi, "vertical representation U|V of a word")
    p.add_argument("word")
    p.add_argument("--json", action="store_true")

    p = add("unpsi", _cmd_unpsi, "word determined by a frontier pair")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--json", action="store_true")

    p = add("minimal", _cmd_minimal, "minimal word the argument extends")
    p.add_argument("word")
    p.add_argument("--json", action="store_true")

    p = add("extend", _cmd_extend, "maximal simple extension")
    p.add_argument("word")
    p.add_argument("--side", choices=["left", "right", "both"], default="both")
    p.add_argument("--json", action="store_true")

    p = add("primitives", _cmd_primitives, "derivative preimages")
    p.add_argument("word")
    p.add_argument("--extremal", choices=["min", "max"],
                   help="only the shortest/longest complementary pair")
    p.add_argument("--json", action="store_true")

    p = add("classify", _cmd_classify, "extendability profile")
    p.add_argument("word")
    p.add_argument("--json", action="store_true")

    p = add("mf", _cmd_mf, "minimal forbidden words up to height k")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--format", choices=["text", "json"], default="text")

    p = add("automaton", _cmd_automaton, "automaton of the k-differentiable words")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--compact", action="store_true")
    p.add_argument("--dot", metavar="FILE")
    p.add_argument("--json", metavar="FILE")

    p = add("vuca", _cmd_vuca, "frontier automaton of a given height")
    p.add_argument("--height", type=int, required=True)
    p.add_argument("--dot", metavar="FILE")
    p.add_argument("--json", action="store_true")
    p.add_argument("--via-compaction", action="store_true",
                   help="derive it from the compacted word automaton")
    p.add_argument("--stage", choices=["vuca", "vca"], default="vuca",
                   help="export the intermediate vertical compacted stage")

    p = add("gap", _cmd_gap, "shortest repetition with gap of a word")
    p.add_argument("word")
    p.add_argument("--max-total", type=int, default=None)
    p.add_argument("--json", action="store_true")

    p = add("gap-stats", _cmd_gap_stats, "repetitivity table I/G with ratios")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.add_argument("--format", choices=["text", "csv"], default="text")
    p.add_argument("--plot", metavar="FILE", help="write a PNG figure")

    p = add("kolakoski", _cmd_kolakoski, "prefix of the self-describing word")
    p.add_argument("--len", type=int, required=True)
    p.add_argument("--json", action="store_true")

    p = add("census", _cmd_census, "squares, cubes and overlaps census")
    p.add_argument("--max-len", type=int, default=60)
    p.add_argument("--json", action="store_true")

    p = add("paper-examples", _cmd_golden_examples, "run the golden examples")
    p.add_argument("--json", action="store_true")

    p = add("oracle", _cmd_oracle, "brute-force reference computations")
    p.add_argument("which", choices=["ck", "cinf", "mf", "gaps"])
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--n", type=int, default=8)
    p.add_argument("--max-len", type=int, default=8)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except WordError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
