"""Derivative calculus on words over the two-letter alphabet {1, 2}.

A word is represented as a ``str`` of ``'1'``/``'2'`` characters; the empty
string is the empty word.  The derivative of a word is the run-length
encoding of the word after discarding a leading and/or trailing run of
length one.  Words whose derivative chain reaches the empty word are the
smooth (C-infinity) words; everything in this package is built on top of
the operators defined here.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

ALPHABET = ("1", "2")

_COMPLEMENT = str.maketrans("12", "21")


class WordError(Exception):
    """Base class for domain errors of the word calculus."""


class NotDifferentiable(WordError):
    """The word contains a run of length three or more."""

    def __init__(self, word: str):
        super().__init__(f"word {word!r} has a run of length >= 3")
        self.word = word


class NotCInfinity(WordError):
    """The derivative chain dies before reaching the empty word.

    ``level`` is the index of the first chain level that is not
    differentiable (the level-``level`` derivative exists as a word but
    contains a tripled letter).
    """

    def __init__(self, word: str, level: int):
        super().__init__(f"word {word!r} is not smooth: level {level} of its "
                         f"derivative chain is not differentiable")
        self.word = word
        self.level = level


class RootOfEmptyWord(WordError):
    """The empty word has height 0 and therefore no root."""


def parse_word(text: str) -> str:
    """Validate that ``text`` uses only '1'/'2' and return it unchanged."""
    for ch in text:
        if ch not in ("1", "2"):
            raise ValueError(f"invalid symbol {ch!r} in word {text!r}")
    return text


def complement(w: str) -> str:
    """Swap 1s and 2s."""
    return w.translate(_COMPLEMENT)


def reversal(w: str) -> str:
    """The word read right to left."""
    return w[::-1]


def rle(w: str) -> tuple[int, ...]:
    """Run-length encoding: the lengths of the maximal blocks of ``w``."""
    runs: list[int] = []
    prev = ""
    for ch in w:
        if ch == prev:
            runs[-1] += 1
        else:
            runs.append(1)
            prev = ch
    return tuple(runs)


def runs_to_word(lengths, first: str) -> str:
    """The unique word with the given run lengths starting with ``first``.

    ``lengths`` may be any iterable of ints or of '1'/'2' digits.
    """
    sym = first
    parts: list[str] = []
    for n in lengths:
        parts.append(sym * int(n))
        sym = "1" if sym == "2" else "2"
    return "".join(parts)


def runs_to_text(runs) -> str:
    """Serialize a run sequence as comma-separated integers."""
    return ",".join(str(r) for r in runs)


def runs_from_text(text: str) -> tuple[int, ...]:
    """Parse a comma-separated run sequence; every length must be >= 1."""
    if not text:
        return ()
    runs = tuple(int(part) for part in text.split(","))
    for r in runs:
        if r < 1:
            raise ValueError(f"run lengths must be positive, got {r}")
    return runs


def derivative(w: str) -> str:
    """Discard end runs of length one, then run-length encode.

    Raises :class:`NotDifferentiable` if some run of ``w`` has length >= 3.
    """
    runs = rle(w)
    for r in runs:
        if r >= 3:
            raise NotDifferentiable(w)
    if not runs:
        return ""
    lo = 1 if runs[0] == 1 else 0
    hi = len(runs) - 1 if runs[-1] == 1 else len(runs)
    if hi <= lo:
        return ""
    return "".join("12"[r - 1] for r in runs[lo:hi])


def derivative_chain(w: str) -> tuple[str, ...]:
    """The full chain ``(w, D(w), D^2(w), ..., '')`` down to the empty word.

    Raises :class:`NotCInfinity` naming the first level that cannot be
    differentiated.  ``derivative_chain('') == ('',)``.
    """
    levels = [w]
    cur = w
    while cur:
        try:
            cur = derivative(cur)
        except NotDifferentiable:
            raise NotCInfinity(w, len(levels) - 1) from None
        levels.append(cur)
    return tuple(levels)


def is_k_differentiable(w: str, k: int) -> bool:
    """True iff no level ``D^j(w)``, ``0 <= j < k``, has a run of length >= 3."""
    cur = w
    for _ in range(k):
        if not cur:
            return True
        try:
            cur = derivative(cur)
        except NotDifferentiable:
            return False
    return True


def is_cinf(w: str) -> bool:
    """True iff the derivative chain of ``w`` reaches the empty word."""
    cur = w
    while cur:
        try:
            cur = derivative(cur)
        except NotDifferentiable:
            return False
    return True


def height(w: str) -> int:
    """Number of derivative steps from ``w`` down to the empty word."""
    return len(derivative_chain(w)) - 1


def root(w: str) -> str:
    """The last nonempty derivative; one of 1, 2, 12, 21."""
    if not w:
        raise RootOfEmptyWord("the empty word has no root")
    chain = derivative_chain(w)
    return chain[-2]


def preimages(w: str) -> tuple[str, ...]:
    """All words p with derivative(p) == w, for any word over {1, 2}.

    The run sequence of a preimage is ``w`` wrapped in an optional leading
    and/or trailing 1 (the trimmed runs); a wrap is mandatory on a side
    where ``w`` starts/ends with 1, since a leading/trailing 1-run would be
    trimmed away otherwise.  Sorted by (length, text).
    """
    left_opts = ("1",) if w[:1] == "1" else ("", "1")
    right_opts = ("1",) if w[-1:] == "1" else ("", "1")
    out = set()
    for a in left_opts:
        for b in right_opts:
            lengths = a + w + b
            if not lengths:
                continue  # only happens for w == '': the empty preimage is excluded
            for first in ALPHABET:
                out.add(runs_to_word(lengths, first))
    return tuple(sorted(out, key=lambda p: (len(p), p)))


def primitives(w: str) -> tuple[str, ...]:
    """The derivative preimages of a smooth word (between 2 and 8 of them)."""
    if not is_cinf(w):
        raise NotCInfinity(w, _first_bad_level(w))
    return preimages(w)


def shortest_preimages(w: str) -> tuple[str, str]:
    """The two preimages of minimal length; they are complements."""
    ps = preimages(w)
    best = len(ps[0])
    pair = tuple(p for p in ps if len(p) == best)
    return (pair[0], pair[1])


def extremal_primitives(w: str, mode: str = "min") -> tuple[str, str]:
    """The two shortest (``mode='min'``) or longest (``'max'``) primitives."""
    if mode not in ("min", "max"):
        raise ValueError(f"mode must be 'min' or 'max', got {mode!r}")
    ps = primitives(w)
    target = min(len(p) for p in ps) if mode == "min" else max(len(p) for p in ps)
    pair = tuple(p for p in ps if len(p) == target)
    return (pair[0], pair[1])


def _first_bad_level(w: str) -> int:
    cur = w
    level = 0
    while True:
        try:
            cur = derivative(cur)
        except NotDifferentiable:
            return level
        level += 1


@dataclass(frozen=True)
class ExtensionProfile:
    """Extendability classification of a nonempty smooth word.

    Maximality is the two-distinct-symbols test on the word and every
    derivative longer than one; minimality is the length-3 end test
    (prefix not in {122, 211}, suffix not in {221, 112}) on the word and
    every derivative longer than two.  Doubly-extendable flags coincide
    with maximality; full extendability additionally needs a two-letter
    root.  Height-1 words come out maximal and minimal on both sides.
    """

    left_minimal: bool
    right_minimal: bool
    left_maximal: bool
    right_maximal: bool
    left_doubly_ext: bool
    right_doubly_ext: bool
    fully_ext: bool
    single_rooted: bool

    @property
    def minimal(self) -> bool:
        return self.left_minimal and self.right_minimal

    @property
    def maximal(self) -> bool:
        return self.left_maximal and self.right_maximal


def classify(w: str) -> ExtensionProfile:
    """Full extendability profile of a nonempty smooth word."""
    if not w:
        raise ValueError("cannot classify the empty word")
    chain = derivative_chain(w)
    levels = chain[:-1]
    left_max = all(lv[0] != lv[1] for lv in levels if len(lv) > 1)
    right_max = all(lv[-1] != lv[-2] for lv in levels if len(lv) > 1)
    left_min = all(lv[:3] not in ("122", "211") for lv in levels if len(lv) > 2)
    right_min = all(lv[-3:] not in ("221", "112") for lv in levels if len(lv) > 2)
    single = len(chain[-2]) == 1
    return ExtensionProfile(
        left_minimal=left_min,
        right_minimal=right_min,
        left_maximal=left_max,
        right_maximal=right_max,
        left_doubly_ext=left_max,
        right_doubly_ext=right_max,
        fully_ext=(not single) and left_max and right_max,
        single_rooted=single,
    )


def _levels(w: str) -> Iterator[str]:
    cur = w
    while cur:
        yield cur
        cur = derivative(cur)


def is_left_minimal(w: str) -> bool:
    """Prefix-of-a-minimal-word test, aborting at the first bad level."""
    for lv in _levels(w):
        if len(lv) > 2 and lv[:3] in ("122", "211"):
            return False
    return True


def is_right_minimal(w: str) -> bool:
    for lv in _levels(w):
        if len(lv) > 2 and lv[-3:] in ("221", "112"):
            return False
    return True


def is_left_maximal(w: str) -> bool:
    for lv in _levels(w):
        if len(lv) > 1 and lv[0] == lv[1]:
            return False
    return True


def is_right_maximal(w: str) -> bool:
    for lv in _levels(w):
        if len(lv) > 1 and lv[-1] == lv[-2]:
            return False
    return True


class _ChainCursor:
    """Append-only derivative chain with one-step undo.

    Tracks, per chain level, the last symbol, the open run length and the
    run count.  Appending a symbol at level 0 cascades upward: a run
    closing at length two contributes a 2 above, a unit run turned
    interior by a fresh run contributes a 1 above (unit end runs are
    trimmed and contribute nothing).  A cascade that would create a run of
    three anywhere is rolled back and refused.
    """

    def __init__(self, w: str = ""):
        self.last: list[str] = []
        self.run_len: list[int] = []
        self.run_count: list[int] = []
        self._journals: list[list[tuple[int, str, int, int]]] = []
        for ch in w:
            if not self.push(ch):
                raise NotCInfinity(w, _first_bad_level(w))

    def push(self, symbol: str) -> bool:
        journal: list[tuple[int, str, int, int]] = []
        level = 0
        ch = symbol
        while True:
            if level == len(self.last):
                self.last.append(ch)
                self.run_len.append(1)
                self.run_count.append(1)
                journal.append((level, "", 0, 0))
                self._journals.append(journal)
                return True
            if ch == self.last[level]:
                if self.run_len[level] >= 2:
                    self._undo(journal)
                    return False
                journal.append((level, ch, self.run_len[level],
                                self.run_count[level]))
                self.run_len[level] = 2
                ch = "2"
            else:
                emit = self.run_len[level] == 1 and self.run_count[level] >= 2
                journal.append((level, self.last[level], self.run_len[level],
                                self.run_count[level]))
                self.last[level] = ch
                self.run_len[level] = 1
                self.run_count[level] += 1
                if not emit:
                    self._journals.append(journal)
                    return True
                ch = "1"
            level += 1

    def pop(self) -> None:
        self._undo(self._journals.pop())

    def _undo(self, journal) -> None:
        for level, last, run_len, run_count in reversed(journal):
            if last == "":
                del self.last[level:]
                del self.run_len[level:]
                del self.run_count[level:]
            else:
                self.last[level] = last
                self.run_len[level] = run_len
                self.run_count[level] = run_count


def extend(w: str, side: str = "both") -> str:
    """The left/right/two-sided maximal simple extension of ``w``.

    Every step of a simple extension is forced: while the word is not
    right (left) maximal, exactly one of its one-letter extensions is
    smooth, and the extension stops as soon as both are (the word is then
    right doubly extendable, i.e. right maximal).  The result keeps the
    height and root of ``w``.
    """
    if side not in ("left", "right", "both"):
        raise ValueError(f"side must be 'left', 'right' or 'both', got {side!r}")
    if not w:
        raise ValueError("cannot extend the empty word")
    if not is_cinf(w):
        raise NotCInfinity(w, _first_bad_level(w))
    if side == "both":
        return extend(extend(w, "right"), "left")
    if side == "left":
        return reversal(extend(reversal(w), "right"))
    cursor = _ChainCursor(w)
    out = list(w)
    while True:
        viable = []
        for x in ALPHABET:
            if cursor.push(x):
                viable.append(x)
                cursor.pop()
        if len(viable) != 1:
            assert viable, f"{out!r} admits no smooth right extension"
            return "".join(out)
        cursor.push(viable[0])
        out.append(viable[0])


def is_left_simple_extension(whole: str, base: str) -> bool:
    """True iff ``whole`` extends ``base`` leftward with every step forced."""
    if not whole.endswith(base):
        return False
    for i in range(len(whole) - len(base)):
        step = whole[i:]
        alt = complement(step[0]) + step[1:]
        if is_cinf(alt):
            return False
    return is_cinf(whole)
