"""Deterministic automata for the k-differentiable languages.

``avoidance_automaton`` converts the trie of an anti-factorial word set
into the deterministic automaton of the words avoiding it (solid edges are
trie edges, weak edges come from the failure function), prunes the sink
states, and leaves every remaining state accepting.  ``compact`` merges
the chains of forced right extensions into single states.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .forbidden import Trie, build_trie, mf_set
from .words import derivative_chain, extend, height, is_right_minimal, root

SOLID = "solid"
WEAK = "weak"


@dataclass(frozen=True)
class Automaton:
    """Pruned avoidance automaton; state 0 is the empty-word initial state.

    ``transitions[i][x] = (target, kind)`` with kind ``'solid'`` or
    ``'weak'``; a missing symbol means the word leaves the language.
    ``failure[i]`` is the state of the longest proper suffix of state i's
    label that is itself a state (None for the initial state).  Every
    state is accepting.
    """

    labels: tuple[str, ...]
    transitions: tuple[dict[str, tuple[int, str]], ...]
    failure: tuple[int | None, ...]
    alphabet: tuple[str, ...] = ("1", "2")
    index: dict[str, int] = field(default_factory=dict)

    def __post_init__(self):
        if not self.index:
            self.index.update({w: i for i, w in enumerate(self.labels)})

    @property
    def initial(self) -> int:
        return 0

    def __len__(self) -> int:
        return len(self.labels)

    def run(self, w: str) -> int | None:
        """End state of the path labeled ``w`` from the initial state, or
        None when a needed transition was pruned (the word is rejected)."""
        state = 0
        for ch in w:
            move = self.transitions[state].get(ch)
            if move is None:
                return None
            state = move[0]
        return state

    def accepts(self, w: str) -> bool:
        return self.run(w) is not None

    def language_up_to(self, n: int) -> list[str]:
        """All accepted words of length <= n, ordered by (length, text)."""
        out: list[str] = []
        frontier: list[tuple[str, int]] = [("", 0)]
        for _ in range(n + 1):
            out.extend(w for w, _ in frontier)
            nxt = []
            for w, s in frontier:
                for ch in self.alphabet:
                    move = self.transitions[s].get(ch)
                    if move is not None:
                        nxt.append((w + ch, move[0]))
            frontier = nxt
        out.sort(key=lambda w: (len(w), w))
        return out

    def edges(self):
        """Iterate (source, symbol, target, kind)."""
        for i, trans in enumerate(self.transitions):
            for ch, (t, kind) in sorted(trans.items()):
                yield i, ch, t, kind


def avoidance_automaton(trie: Trie) -> Automaton:
    """Build the automaton of words avoiding the trie's word set.

    Follows the classic construction: copy the trie edges, assign failures
    width-first (s(child of p on a) = delta(s(p), a)), complete missing
    moves of non-terminal states through the failure, loop the terminals,
    then drop the terminal (sink) states together with every edge that
    touches them.
    """
    n = len(trie)
    alphabet = ("1", "2")
    delta: list[dict[str, int]] = [{} for _ in range(n)]
    solid: set[tuple[int, str]] = set()
    fail: list[int | None] = [None] * n

    rootn = trie.root
    for a in alphabet:
        child = trie.children[rootn].get(a)
        if child is not None:
            delta[rootn][a] = child
            solid.add((rootn, a))
            fail[child] = rootn
        else:
            delta[rootn][a] = rootn

    order: deque[int] = deque(
        trie.children[rootn][a] for a in alphabet if a in trie.children[rootn]
    )
    while order:
        p = order.popleft()
        for a in alphabet:
            child = trie.children[p].get(a)
            if child is not None:
                delta[p][a] = child
                solid.add((p, a))
                fail[child] = delta[fail[p]][a]
                order.append(child)
            elif not trie.terminal[p]:
                delta[p][a] = delta[fail[p]][a]
            else:
                delta[p][a] = p

    keep = [i for i in range(n) if not trie.terminal[i]]
    remap = {old: new for new, old in enumerate(keep)}
    labels = tuple(trie.labels[i] for i in keep)
    transitions = []
    failure: list[int | None] = []
    for old in keep:
        trans: dict[str, tuple[int, str]] = {}
        for a in alphabet:
            t = delta[old][a]
            if not trie.terminal[t]:
                kind = SOLID if (old, a) in solid else WEAK
                trans[a] = (remap[t], kind)
        transitions.append(trans)
        f = fail[old]
        failure.append(None if f is None else remap[f])
    return Automaton(
        labels=labels,
        transitions=tuple(transitions),
        failure=tuple(failure),
        alphabet=alphabet,
    )


def ck_automaton(k: int) -> Automaton:
    """The automaton recognizing the k-differentiable words."""
    return avoidance_automaton(build_trie(mf_set(k)))


@dataclass(frozen=True)
class CompactState:
    """A chain of forced right extensions, collapsed to one state.

    ``minimal_word`` is the chain head (a minimal smooth word);
    ``maximal_extension`` its two-sided maximal extension, sharing its
    height and root; ``chain`` lists the merged state labels of the
    underlying automaton in extension order.
    """

    minimal_word: str
    maximal_extension: str
    height: int
    root: str
    chain: tuple[str, ...]


@dataclass(frozen=True)
class CompactEdge:
    target: int
    kind: str
    label: str


@dataclass(frozen=True)
class CompactAutomaton:
    """Chain-merged automaton; state 0 is the empty-word state."""

    states: tuple[CompactState, ...]
    edges: tuple[tuple[CompactEdge, ...], ...]

    @property
    def initial(self) -> int:
        return 0

    def __len__(self) -> int:
        return len(self.states)

    def state_of(self, label: str) -> int | None:
        for i, st in enumerate(self.states):
            if label in st.chain:
                return i
        return None


def _chain_head(label: str) -> str:
    # longest right-minimal prefix; every length-1 word qualifies
    for j in range(len(label), 0, -1):
        if is_right_minimal(label[:j]):
            return label[:j]
    return ""


def compact(a: Automaton) -> CompactAutomaton:
    """Merge every maximal chain of forced right extensions of a
    right-minimal state; edge labels follow the chain spines.

    A solid edge into a merged state is labeled by the letter read plus
    the target chain's internal extension; each weak edge copies the label
    of the unique solid edge entering its target.
    """
    heads: dict[str, list[str]] = {}
    for label in a.labels:
        heads.setdefault(_chain_head(label), []).append(label)
    chains = {
        head: tuple(sorted(members, key=len))
        for head, members in heads.items()
    }
    order = sorted(chains, key=lambda h: (len(h), h))
    state_of_head = {h: i for i, h in enumerate(order)}
    chain_of_label = {
        label: state_of_head[head]
        for head, members in chains.items()
        for label in members
    }

    states = []
    for head in order:
        if head == "":
            states.append(CompactState("", "", 0, "", chains[head]))
            continue
        chain = derivative_chain(head)
        states.append(
            CompactState(
                minimal_word=head,
                maximal_extension=extend(head, "both"),
                height=len(chain) - 1,
                root=chain[-2],
                chain=chains[head],
            )
        )

    edges: list[tuple[CompactEdge, ...]] = []
    for head in order:
        members = chains[head]
        end = members[-1]
        out = []
        for ch, (t, kind) in sorted(a.transitions[a.index[end]].items()):
            target_label = a.labels[t]
            tstate = chain_of_label[target_label]
            tchain = states[tstate].chain
            spine = tchain[-1][len(tchain[0]):]
            label = tchain[0][-1:] + spine if tchain[0] else ch
            out.append(CompactEdge(target=tstate, kind=kind, label=label))
        edges.append(tuple(out))
    return CompactAutomaton(states=tuple(states), edges=tuple(edges))


def class_members(ca: CompactAutomaton, state: int, n: int) -> set[str]:
    """Factors of the state's maximal extension, up to length n, whose own
    maximal extension is that same word."""
    st = ca.states[state]
    big = st.maximal_extension
    if not big:
        return {""}
    out = set()
    for i in range(len(big)):
        for j in range(i + 1, min(i + n, len(big)) + 1):
            v = big[i:j]
            if v not in out and extend(v, "both") == big:
                out.add(v)
    return out


def census_by_height(ca: CompactAutomaton) -> dict[int, dict[str, int]]:
    """Per height: total states and the single/double root split."""
    out: dict[int, dict[str, int]] = {}
    for st in ca.states:
        if st.height == 0:
            continue
        row = out.setdefault(st.height, {"total": 0, "single": 0, "double": 0})
        row["total"] += 1
        row["single" if len(st.root) == 1 else "double"] += 1
    return out
