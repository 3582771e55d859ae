"""Minimal forbidden words of the k-differentiable languages, and their trie.

The catalog for k is built by the stratum recursion: the forbidden words of
height 1 are 111 and 222, and each word of height h contributes its two
shortest derivative preimages (complements of each other) at height h+1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .words import (
    NotDifferentiable,
    WordError,
    complement,
    derivative,
    is_cinf,
    is_left_minimal,
    is_right_minimal,
    root,
    shortest_preimages,
)


class NotMinimalForbidden(WordError):
    """The word is not minimal forbidden for any k-differentiable language."""


class InternalInconsistencyError(WordError):
    """The two independent minimal-forbidden characterizations disagree."""


def _key(w: str) -> tuple[int, str]:
    return (len(w), w)


@dataclass(frozen=True)
class ForbiddenCatalog:
    """The minimal forbidden words for the k-differentiable language.

    ``by_height`` maps each height 1..k to its stratum; ``words`` is the
    union, ordered by (length, text).
    """

    k: int
    words: tuple[str, ...]
    by_height: dict[int, tuple[str, ...]]

    def __contains__(self, w: str) -> bool:
        return w in self._word_set()

    def _word_set(self) -> frozenset:
        return frozenset(self.words)


def mf_set(k: int) -> ForbiddenCatalog:
    """Catalog of minimal forbidden words up to height k (2^{k+1}-2 words)."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    strata: dict[int, tuple[str, ...]] = {1: ("111", "222")}
    for h in range(1, k):
        nxt: list[str] = []
        for w in strata[h]:
            nxt.extend(shortest_preimages(w))
        strata[h + 1] = tuple(sorted(nxt, key=_key))
    words = tuple(sorted((w for s in strata.values() for w in s), key=_key))
    return ForbiddenCatalog(k=k, words=words, by_height=strata)


def mf_height(w: str) -> int:
    """The h with D^{h-1}(w) in {111, 222}; raises if there is none."""
    cur = w
    level = 0
    while cur:
        if cur in ("111", "222"):
            return level + 1
        try:
            cur = derivative(cur)
        except NotDifferentiable:
            raise NotMinimalForbidden(
                f"{w!r}: level {level} is neither differentiable nor a tripled letter"
            ) from None
        level += 1
    raise NotMinimalForbidden(f"{w!r} is smooth, not forbidden")


def is_minimal_forbidden(w: str) -> bool:
    """Definitional test, cross-checked against the complement criterion.

    Definition: w is forbidden while both its maximal proper prefix and
    suffix are allowed.  Independent criterion: x u y is minimal forbidden
    iff the word with both end letters complemented is a minimal smooth
    word with root 1.
    """
    by_definition = (
        len(w) >= 3
        and not is_cinf(w)
        and is_cinf(w[1:])
        and is_cinf(w[:-1])
    )
    by_complement = False
    if len(w) >= 2:
        v = complement(w[0]) + w[1:-1] + complement(w[-1])
        if is_cinf(v):
            by_complement = (
                is_left_minimal(v) and is_right_minimal(v) and root(v) == "1"
            )
    if by_definition != by_complement:
        raise InternalInconsistencyError(
            f"minimal-forbidden tests disagree on {w!r}: "
            f"definition={by_definition}, complement criterion={by_complement}"
        )
    return by_definition


@dataclass(frozen=True)
class Trie:
    """Prefix tree of a catalog: one node per distinct prefix.

    ``children[i]`` maps a symbol to a node index; ``terminal[i]`` is True
    exactly on full catalog words; node 0 is the empty-word root.
    """

    labels: tuple[str, ...]
    children: tuple[dict[str, int], ...]
    terminal: tuple[bool, ...]

    @property
    def root(self) -> int:
        return 0

    def __len__(self) -> int:
        return len(self.labels)

    def terminal_count(self) -> int:
        return sum(self.terminal)


def build_trie(words) -> Trie:
    """Prefix tree of an iterable of words (a catalog or plain strings)."""
    if isinstance(words, ForbiddenCatalog):
        words = words.words
    labels: list[str] = [""]
    children: list[dict[str, int]] = [{}]
    terminal: list[bool] = [False]
    for w in sorted(words, key=_key):
        node = 0
        for ch in w:
            nxt = children[node].get(ch)
            if nxt is None:
                nxt = len(labels)
                labels.append(labels[node] + ch)
                children.append({})
                terminal.append(False)
                children[node][ch] = nxt
            node = nxt
        terminal[node] = True
    return Trie(
        labels=tuple(labels),
        children=tuple(children),
        terminal=tuple(terminal),
    )
