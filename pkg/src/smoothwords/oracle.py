"""Brute-force reference implementations used by the test suite.

Everything here recomputes from the definitions and shares nothing with
the fast modules except the plain-string word representation.  Outputs
are deterministically ordered by (length, text).
"""

from __future__ import annotations


def _naive_derivative(w: str) -> str | None:
    """Run-length encode after trimming unit end runs; None on a run >= 3."""
    runs: list[int] = []
    prev = ""
    for ch in w:
        if ch == prev:
            runs[-1] += 1
            if runs[-1] >= 3:
                return None
        else:
            runs.append(1)
            prev = ch
    if not runs:
        return ""
    if runs[0] == 1:
        runs = runs[1:]
    if runs and runs[-1] == 1:
        runs = runs[:-1]
    return "".join("12"[r - 1] for r in runs)


def is_ck_naive(w: str, k: int) -> bool:
    cur: str | None = w
    for _ in range(k):
        if not cur:
            return True
        cur = _naive_derivative(cur)
        if cur is None:
            return False
    return True


def is_cinf_naive(w: str) -> bool:
    cur: str | None = w
    while cur:
        cur = _naive_derivative(cur)
        if cur is None:
            return False
    return True


class _RunChain:
    """Incremental derivative chain for depth-first enumeration.

    Level i+1 is maintained as the derivative of level i by tracking, per
    level, the last symbol, the current run length and the number of runs.
    Appending a symbol at level 0 cascades upward: a run reaching length 2
    contributes a '2' above; a length-1 run that a new run turns interior
    contributes a '1' above (a length-1 run that is first or still last is
    trimmed and contributes nothing).  ``max_levels`` caps how many levels
    are checked (None = all, i.e. full smoothness).
    """

    def __init__(self, max_levels: int | None = None):
        self.last: list[str] = []
        self.run_len: list[int] = []
        self.run_count: list[int] = []
        self.max_levels = max_levels

    def push(self, symbol: str) -> list[tuple[int, str, int, int]] | None:
        """Append at level 0; return an undo journal, or None if a run of 3
        would appear at a checked level (structure left unchanged)."""
        journal: list[tuple[int, str, int, int]] = []
        level = 0
        ch = symbol
        while True:
            if self.max_levels is not None and level >= self.max_levels:
                return journal
            if level == len(self.last):
                self.last.append(ch)
                self.run_len.append(1)
                self.run_count.append(1)
                journal.append((level, "", 0, 0))
                return journal
            if ch == self.last[level]:
                if self.run_len[level] >= 2:
                    self._undo(journal)
                    return None
                journal.append((level, self.last[level], self.run_len[level],
                                self.run_count[level]))
                self.run_len[level] = 2
                ch = "2"
                level += 1
            else:
                emit = self.run_len[level] == 1 and self.run_count[level] >= 2
                journal.append((level, self.last[level], self.run_len[level],
                                self.run_count[level]))
                self.last[level] = ch
                self.run_len[level] = 1
                self.run_count[level] += 1
                if not emit:
                    return journal
                ch = "1"
                level += 1

    def pop(self, journal: list[tuple[int, str, int, int]]) -> None:
        self._undo(journal)

    def _undo(self, journal: list[tuple[int, str, int, int]]) -> None:
        for level, last, run_len, run_count in reversed(journal):
            if last == "":
                del self.last[level:]
                del self.run_len[level:]
                del self.run_count[level:]
            else:
                self.last[level] = last
                self.run_len[level] = run_len
                self.run_count[level] = run_count


def _enumerate(n: int, max_levels: int | None) -> list[str]:
    out: list[str] = []
    chain = _RunChain(max_levels)
    path: list[str] = []

    def rec() -> None:
        out.append("".join(path))
        if len(path) == n:
            return
        for ch in ("1", "2"):
            journal = chain.push(ch)
            if journal is not None:
                path.append(ch)
                rec()
                path.pop()
                chain.pop(journal)

    rec()
    out.sort(key=lambda w: (len(w), w))
    return out


def enumerate_ck(k: int, n: int) -> list[str]:
    """All k-differentiable words of length <= n, ordered by (length, text)."""
    return _enumerate(n, k)


def enumerate_cinf(n: int) -> list[str]:
    """All smooth words of length <= n, ordered by (length, text)."""
    return _enumerate(n, None)


def cinf_of_length(n: int) -> list[str]:
    """The smooth words of length exactly n, in text order."""
    return [w for w in enumerate_cinf(n) if len(w) == n]


def brute_mf(k: int, max_len: int) -> list[str]:
    """Definition-level minimal forbidden words for the k-differentiable
    language, scanning candidate lengths up to ``max_len``.

    A candidate is a one-letter right extension of a k-differentiable word
    (its longest prefix is then allowed by construction); it qualifies if
    it is itself not k-differentiable while its longest suffix is.
    """
    out = set()
    prefixes = [w for w in enumerate_ck(k, max_len - 1) if len(w) >= 2]
    for u in prefixes:
        for x in ("1", "2"):
            w = u + x
            if not is_ck_naive(w, k) and is_ck_naive(w[1:], k):
                out.add(w)
    return sorted(out, key=lambda w: (len(w), w))


def brute_shortest_gap(u: str, max_total: int) -> tuple[str, int] | None:
    """Smallest (by length, then text) z with u z u smooth; None past budget."""
    gap = 0
    while 2 * len(u) + gap <= max_total:
        for z in _all_words(gap):
            if is_cinf_naive(u + z + u):
                return z, gap
        gap += 1
    return None


def _all_words(n: int) -> list[str]:
    words = [""]
    for _ in range(n):
        words = [w + x for w in words for x in ("1", "2")]
    return words


def brute_gap_table(n: int, max_total: int = 10_000) -> dict[int, tuple[int, int]]:
    """(I(m), G(m)) for 1 <= m <= n by trying every gap word in order."""
    table: dict[int, tuple[int, int]] = {}
    for m in range(1, n + 1):
        gaps = []
        for u in cinf_of_length(m):
            hit = brute_shortest_gap(u, max_total)
            assert hit is not None, f"no gap within budget for {u!r}"
            gaps.append(hit[1])
        table[m] = (min(gaps), max(gaps))
    return table
