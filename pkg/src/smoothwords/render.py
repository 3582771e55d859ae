"""DOT exports of the automata and the matplotlib report figure.

Solid edges render as solid arrows and weak edges as dashed ones; states
are labeled by their word or frontier (the empty word shows as an
epsilon) and grouped by height so the diagrams read top-down by level.
"""

from __future__ import annotations

from .automata import Automaton, CompactAutomaton, WEAK
from .repetitions import RepetitivityTable
from .vertical import FrontierAutomaton, VcaView
from .words import height


EPSILON = "ε"


def _q(label: str) -> str:
    return '"' + (label if label else EPSILON) + '"'


def _rank_groups(pairs) -> list[str]:
    by_rank: dict[int, list[str]] = {}
    for rank, name in pairs:
        by_rank.setdefault(rank, []).append(name)
    return [
        "  { rank=same; " + "; ".join(names) + "; }"
        for _, names in sorted(by_rank.items())
    ]


def automaton_dot(a: Automaton) -> str:
    lines = ["digraph smooth {", "  rankdir=TB;", "  node [shape=circle];"]
    lines += _rank_groups((height(w), _q(w)) for w in a.labels)
    for src, ch, dst, kind in a.edges():
        style = ' style=dashed' if kind == WEAK else ""
        lines.append(
            f"  {_q(a.labels[src])} -> {_q(a.labels[dst])} "
            f"[label=\"{ch}\"{style}];"
        )
    lines.append("}")
    return "\n".join(lines) + "\n"


def compact_dot(ca: CompactAutomaton) -> str:
    lines = ["digraph compacted {", "  rankdir=TB;", "  node [shape=box];"]

    def name(i: int) -> str:
        st = ca.states[i]
        if not st.minimal_word:
            return _q("")
        return _q(f"{st.minimal_word} → {st.maximal_extension}")

    lines += _rank_groups((st.height, name(i)) for i, st in enumerate(ca.states))
    for i in range(len(ca.states)):
        for e in ca.edges[i]:
            style = ' style=dashed' if e.kind == WEAK else ""
            lines.append(
                f"  {name(i)} -> {name(e.target)} [label=\"{e.label}\"{style}];"
            )
    lines.append("}")
    return "\n".join(lines) + "\n"


def vca_dot(view: VcaView) -> str:
    lines = ["digraph vertical_compacted {", "  rankdir=TB;", "  node [shape=box];"]
    names = [_q(lbl if lbl != "|" else "") for lbl in view.labels]
    lines += _rank_groups(
        (len(front), names[i]) for i, front in enumerate(view.fronts)
    )
    for src, symbol, dst in view.edges:
        lines.append(
            f"  {names[src]} -> {names[dst]} [label=\"{symbol or EPSILON}\"];"
        )
    for src, dst in view.weak_edges:
        lines.append(f"  {names[src]} -> {names[dst]} [label=\"0\" style=dashed];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def frontier_dot(fa: FrontierAutomaton) -> str:
    lines = ["digraph frontier {", "  rankdir=TB;", "  node [shape=circle];"]
    states = fa.states()
    lines += _rank_groups((len(u), _q(u)) for u in states)
    for u in states:
        for symbol, target in fa.out_edges(u):
            style = ' style=dashed' if symbol == "0" else ""
            lines.append(f"  {_q(u)} -> {_q(target)} [label=\"{symbol}\"{style}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def gap_stats_figure(table: RepetitivityTable, exponent: float, path: str) -> None:
    """Render I(n), G(n) and the worst-total ratio against n**exponent."""
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    ns = sorted(table.I)
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(9, 3.5))
    ax1.step(ns, [table.I[n] for n in ns], where="mid", label="I(n)")
    ax1.step(ns, [table.G[n] for n in ns], where="mid", label="G(n)")
    ax1.set_xlabel("word length n")
    ax1.set_ylabel("gap")
    ax1.set_title("repetition gaps")
    ax1.legend()
    ax2.plot(ns, [(2 * n + table.G[n]) / n ** exponent for n in ns], marker="o")
    ax2.set_xlabel("word length n")
    ax2.set_ylabel(f"max |uzu| / n^{exponent}")
    ax2.set_title("worst total vs. bound shape")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
