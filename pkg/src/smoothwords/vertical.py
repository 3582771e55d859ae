"""Vertical (frontier) representation of smooth words and its automaton.

The left frontier of a word records the first symbol of every level of
its derivative chain, writing 0 instead of 2 exactly when the level below
starts with two distinct symbols; the right frontier is the left frontier
of the reversal.  The pair determines the word, and ``reconstruct``
inverts it exactly.  ``FrontierAutomaton`` is the three-letter automaton
over frontier states whose weak 0-edges jump to the frontier of the
longest left-minimal suffix.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import automata
from .words import (
    WordError,
    derivative_chain,
    is_left_minimal,
    reversal,
    runs_to_word,
)

FRONTIER_ALPHABET = ("0", "1", "2")


class InconsistentFrontiers(WordError):
    """No smooth word realizes the given frontier pair.

    ``level`` is the chain level at which the top-down expansion failed.
    """

    def __init__(self, message: str, level: int):
        super().__init__(message)
        self.level = level


def parse_frontier(text: str) -> str:
    for ch in text:
        if ch not in FRONTIER_ALPHABET:
            raise ValueError(f"invalid frontier symbol {ch!r} in {text!r}")
    if text.startswith("0"):
        raise ValueError(f"frontier {text!r} must not start with 0")
    return text


def decode(symbol: str) -> str:
    """Frontier symbol to word letter: 0 reads as 2."""
    return "2" if symbol == "0" else symbol


def left_frontier(w: str) -> str:
    """First symbols of the derivative chain, 0-coded where the level
    below starts with two distinct letters."""
    chain = derivative_chain(w)
    k = len(chain) - 1
    if k == 0:
        return ""
    out = [w[0]]
    for i in range(1, k):
        if chain[i][0] == "2" and chain[i - 1][0] != chain[i - 1][1]:
            out.append("0")
        else:
            out.append(chain[i][0])
    return "".join(out)


def right_frontier(w: str) -> str:
    return left_frontier(reversal(w))


@dataclass(frozen=True)
class Vertical:
    """A left/right frontier pair; prints as ``U|V``."""

    left: str
    right: str

    def __str__(self) -> str:
        return f"{self.left}|{self.right}"


def vertical_repr(w: str) -> Vertical:
    return Vertical(left=left_frontier(w), right=right_frontier(w))


def reconstruct(left: str, right: str) -> str:
    """The unique smooth word with the given vertical representation.

    Works top-down from the root.  The root is the one- or two-letter word
    decoded from the top symbols; descending one level, the run sequence
    is the level above wrapped in a leading 1 iff the left symbol is 1 or
    0 (a leading 2 forbids the wrap, which would be trimmed) and a
    trailing 1 resolved symmetrically on the right.  The expansion is
    pinned by the decoded first letter and must land on the decoded last
    letter; the result is re-verified by recomputing both frontiers.
    """
    left = parse_frontier(left)
    right = parse_frontier(right)
    if len(left) != len(right):
        raise ValueError(
            f"frontier lengths differ: {len(left)} vs {len(right)}"
        )
    if not left:
        raise ValueError("frontiers must be nonempty")
    k = len(left)
    a, b = decode(left[k - 1]), decode(right[k - 1])
    w = a if a == b else a + b
    for i in range(k - 2, -1, -1):
        head = "1" if left[i + 1] in ("1", "0") else ""
        tail = "1" if right[i + 1] in ("1", "0") else ""
        w = runs_to_word(head + w + tail, decode(left[i]))
        if w[-1] != decode(right[i]):
            raise InconsistentFrontiers(
                f"level {i} must end with {decode(right[i])}, got {w[-1]}",
                level=i,
            )
    if left_frontier(w) != left or right_frontier(w) != right:
        raise InconsistentFrontiers(
            f"no smooth word realizes {left}|{right}", level=0
        )
    return w


def realize_left(front: str) -> str:
    """The right-minimal smooth word with the given left frontier.

    Same top-down expansion as :func:`reconstruct` driven by one frontier:
    the right wrap is omitted whenever the level above ends with 2 (so no
    trailing run of length one appears, keeping every level's end intact)
    and forced to 1 otherwise; the root is the decoded last symbol.
    """
    front = parse_frontier(front)
    if not front:
        raise ValueError("frontier must be nonempty")
    k = len(front)
    w = decode(front[k - 1])
    for i in range(k - 2, -1, -1):
        head = "1" if front[i + 1] in ("1", "0") else ""
        tail = "" if w[-1] == "2" else "1"
        w = runs_to_word(head + w + tail, decode(front[i]))
    if left_frontier(w) != front:
        raise InconsistentFrontiers(
            f"frontier {front} admits no witness", level=0
        )
    return w


def weak_target(state: str) -> str:
    """The frontier reached by reading 0 from a binary frontier state.

    Realize any word whose left frontier is the state followed by 0, take
    its longest proper left-minimal suffix, and return that suffix's left
    frontier; it always ends with 2.
    """
    witness = realize_left(state + "0")
    for j in range(1, len(witness)):
        if is_left_minimal(witness[j:]):
            return left_frontier(witness[j:])
    raise AssertionError(f"no left-minimal suffix under {state!r}")


def run_frontier(front: str) -> str:
    """Walk a frontier through the automaton: 1/2 append, 0 jumps weakly.
    Returns the binary frontier state reached."""
    front = parse_frontier(front)
    state = ""
    for ch in front:
        if ch == "0":
            state = weak_target(state)
        else:
            state = state + ch
    return state


def canonical_minimal(w: str) -> str:
    """The unique minimal word of which ``w`` is a simple extension."""
    if not w:
        raise ValueError("the empty word has no minimal representative")
    rep = vertical_repr(w)
    return reconstruct(run_frontier(rep.left), run_frontier(rep.right))


@dataclass(frozen=True)
class FrontierAutomaton:
    """Cut at a given height: states are the binary words of length <= k.

    Solid edges append 1/2 to states shorter than k; ``weak[U]`` is the
    0-edge of each state with 1 <= len(U) < k.  States of full length k
    have no outgoing edges inside the cut.
    """

    height: int
    weak: dict[str, str]

    def states(self) -> list[str]:
        out = [""]
        level = [""]
        for _ in range(self.height):
            level = [u + x for u in level for x in ("1", "2")]
            out.extend(level)
        return out

    def solid(self, state: str, symbol: str) -> str | None:
        if symbol in ("1", "2") and len(state) < self.height:
            return state + symbol
        return None

    def out_edges(self, state: str) -> list[tuple[str, str]]:
        """(symbol, target) pairs leaving ``state`` inside the cut."""
        if len(state) >= self.height:
            return []
        edges = []
        if state in self.weak:
            edges.append(("0", self.weak[state]))
        edges.extend((x, state + x) for x in ("1", "2"))
        return sorted(edges)

    def run(self, front: str) -> str:
        front = parse_frontier(front)
        state = ""
        for ch in front:
            if ch == "0":
                state = self.weak[state]
            else:
                state = state + ch
        return state


@lru_cache(maxsize=None)
def build_frontier_automaton(k: int) -> FrontierAutomaton:
    """Direct construction: tabulate the weak 0-edge of every interior state."""
    if k < 1:
        raise ValueError(f"height must be >= 1, got {k}")
    weak: dict[str, str] = {}
    level = ["1", "2"]
    for _ in range(k - 1):
        for u in level:
            weak[u] = weak_target(u)
        level = [u + x for u in level for x in ("1", "2")]
    return FrontierAutomaton(height=k, weak=weak)


@dataclass(frozen=True)
class VcaView:
    """The compacted automaton relabeled by vertical representations.

    Solid edges that extend the frontier carry the new symbol, pair edges
    between the two same-frontier states carry the empty label, weak edges
    carry 0.  Intermediate stage between the compacted automaton and the
    frontier automaton; exposed mainly for rendering.
    """

    labels: tuple[str, ...]           # "U|V" per state
    fronts: tuple[str, ...]           # left frontier per state
    double_rooted: tuple[bool, ...]
    edges: tuple[tuple[int, str, int], ...]   # (source, symbol or '' , target)
    weak_edges: tuple[tuple[int, int], ...]


def vca_from_compacted(ca: automata.CompactAutomaton) -> VcaView:
    fronts = []
    labels = []
    double = []
    for st in ca.states:
        if st.height == 0:
            fronts.append("")
            labels.append("|")
            double.append(False)
        else:
            rep = vertical_repr(st.minimal_word)
            fronts.append(rep.left)
            labels.append(str(rep))
            double.append(len(st.root) == 2)
    edges = []
    weak_edges = []
    for i in range(len(ca.states)):
        for e in ca.edges[i]:
            if e.kind == automata.WEAK:
                weak_edges.append((i, e.target))
            else:
                fs, ft = fronts[i], fronts[e.target]
                symbol = "" if ft == fs else ft[-1]
                edges.append((i, symbol, e.target))
    return VcaView(
        labels=tuple(labels),
        fronts=tuple(fronts),
        double_rooted=tuple(double),
        edges=tuple(edges),
        weak_edges=tuple(weak_edges),
    )


def frontier_automaton_via_compaction(k: int) -> FrontierAutomaton:
    """Derive the frontier automaton by frontier-relabeling the compacted
    automaton, merging the same-frontier state pairs, and 0-labeling the
    weak edges.  Near the cut the chains are truncated, so agreement with
    the direct construction is only expected on states shorter than k-1.
    """
    ca = automata.compact(automata.ck_automaton(k))
    view = vca_from_compacted(ca)
    weak: dict[str, str] = {}
    for src, dst in view.weak_edges:
        fs, ft = view.fronts[src], view.fronts[dst]
        if fs and len(fs) < k and fs not in weak:
            weak[fs] = ft
    return FrontierAutomaton(height=k, weak=weak)
