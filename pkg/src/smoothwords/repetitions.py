"""Repetitions with gap, the repetitivity table, Kolakoski, and the census.

A repetition with gap of a smooth word u is a smooth word u z u; the gap
is |z|.  ``shortest_gap`` finds the least gap (ties broken by text order)
by breadth-first search over smooth right extensions of u.  ``I`` and
``G`` aggregate the per-word minimal gaps over all words of each length.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field

from . import oracle
from .words import WordError, is_cinf, rle

#: Reported alongside the gap statistics; not used in any computation.
#: ``exponent`` is the asserted growth bound |uzu| <= C * |u|**exponent;
#: the others are the constants of its derivation (two-density bound p,
#: pigeonhole rate, and the exact exponent before rounding).
BOUND_EXPONENT = 2.72
DOC_CONSTANTS = {
    "p": 0.50084,
    "gamma": 1.70951,
    "gamma_prime": 2.71701,
}

ENV_MAX_TOTAL = "CINF_MAX_TOTAL"


class BudgetExceeded(WordError):
    """The gap search hit its safety valve before finding a repetition."""

    def __init__(self, u: str, max_total: int):
        super().__init__(
            f"no repetition of {u!r} with total length <= {max_total}"
        )
        self.u = u
        self.max_total = max_total


def default_max_total(u: str) -> int:
    """Safety valve comfortably above the sub-cubic repetition bound."""
    env = os.environ.get(ENV_MAX_TOTAL)
    if env is not None:
        return int(env)
    return 4 * len(u) ** 3 + 64


@dataclass(frozen=True)
class GapRecord:
    """A word, its shortest gap word, and the derived lengths."""

    u: str
    z: str
    gap: int
    total: int


def shortest_gap(u: str, max_total: int | None = None) -> GapRecord:
    """Shortest (then lexicographically least) z with u z u smooth.

    Breadth-first by gap length over the smooth right extensions of u
    (u z not smooth prunes the whole subtree); existence is guaranteed,
    ``max_total`` only bounds the search as a safety valve.
    """
    if not u:
        raise ValueError("cannot search repetitions of the empty word")
    if not is_cinf(u):
        from .words import NotCInfinity, _first_bad_level
        raise NotCInfinity(u, _first_bad_level(u))
    if max_total is None:
        max_total = default_max_total(u)
    viable = [""]
    gap = 0
    while viable and 2 * len(u) + gap <= max_total:
        for z in viable:
            if is_cinf(u + z + u):
                return GapRecord(u=u, z=z, gap=gap, total=2 * len(u) + gap)
        viable = [
            z + x for z in viable for x in ("1", "2") if is_cinf(u + z + x)
        ]
        gap += 1
    raise BudgetExceeded(u, max_total)


@dataclass(frozen=True)
class RepetitivityTable:
    """Per length n: the least (I) and greatest (G) minimal gap, with the
    first word (by text order) attaining each, and its gap word."""

    n_max: int
    I: dict[int, int]
    G: dict[int, int]
    witnesses: dict[int, dict[str, tuple[str, str]]]

    def max_total(self, n: int) -> int:
        return 2 * n + self.G[n]


def repetitivity(n_max: int, max_total: int | None = None) -> RepetitivityTable:
    """Exhaustive gap statistics for every smooth word of length <= n_max."""
    i_tab: dict[int, int] = {}
    g_tab: dict[int, int] = {}
    wit: dict[int, dict[str, tuple[str, str]]] = {}
    for n in range(1, n_max + 1):
        best = worst = None
        for u in oracle.cinf_of_length(n):
            rec = shortest_gap(u, max_total)
            if best is None or rec.gap < best[1]:
                best = ((u, rec.z), rec.gap)
            if worst is None or rec.gap > worst[1]:
                worst = ((u, rec.z), rec.gap)
        assert best is not None and worst is not None
        i_tab[n] = best[1]
        g_tab[n] = worst[1]
        wit[n] = {"I": best[0], "G": worst[0]}
    return RepetitivityTable(n_max=n_max, I=i_tab, G=g_tab, witnesses=wit)


def kolakoski(n: int) -> str:
    """The length-n prefix of the self-describing word starting 22112...

    Generated by self-reading: the sequence of run lengths consumed is the
    sequence being produced.
    """
    if n <= 0:
        return ""
    out = bytearray(b"22")
    read = 1
    sym = 49  # ord('1'); runs alternate 2,1,2,1,...
    while len(out) < n:
        out.append(sym)
        if out[read] == 50:
            out.append(sym)
        sym = 99 - sym
        read += 1
    return out[:n].decode("ascii")


def self_encoding_holds(w: str) -> bool:
    """Truncation-aware fixed-point check: the run lengths of ``w`` must
    match ``w`` symbol for symbol, except that the final run may have been
    cut short by the prefix boundary."""
    if not w:
        return True
    runs = rle(w)
    if any(r > 2 for r in runs):
        return False
    encoded = "".join("12"[r - 1] for r in runs)
    if len(encoded) > len(w):
        return False
    return encoded[:-1] == w[: len(encoded) - 1] and encoded[-1] <= w[len(encoded) - 1]


@dataclass(frozen=True)
class CensusReport:
    """Squares, cubes and overlaps among the smooth words of length <= n_max."""

    n_max: int
    squares: tuple[str, ...]
    cubes: tuple[str, ...]
    overlaps: tuple[str, ...]

    @property
    def square_count(self) -> int:
        return len(self.squares)

    @property
    def cube_count(self) -> int:
        return len(self.cubes)

    def squares_up_to(self, n: int) -> int:
        return sum(1 for w in self.squares if len(w) <= n)

    def overlaps_longer_than(self, n: int) -> int:
        return sum(1 for w in self.overlaps if len(w) > n)


def is_square(w: str) -> bool:
    h = len(w) // 2
    return len(w) > 0 and len(w) % 2 == 0 and w[:h] == w[h:]


def is_cube(w: str) -> bool:
    t = len(w) // 3
    return len(w) > 0 and len(w) % 3 == 0 and w[:t] == w[t:2 * t] == w[2 * t:]


def is_overlap(w: str) -> bool:
    """True iff w = x y x y x with x nonempty, i.e. w has a period q with
    |w| >= 2q + 1 (exponent strictly above two)."""
    n = len(w)
    for q in range(1, (n - 1) // 2 + 1):
        if all(w[i] == w[i + q] for i in range(n - q)):
            return True
    return False


def census(n_max: int) -> CensusReport:
    """Scan every smooth word of length <= n_max for the three patterns."""
    squares: list[str] = []
    cubes: list[str] = []
    overlaps: list[str] = []
    for w in oracle.enumerate_cinf(n_max):
        if not w:
            continue
        if is_square(w):
            squares.append(w)
        if is_cube(w):
            cubes.append(w)
        if is_overlap(w):
            overlaps.append(w)
    return CensusReport(
        n_max=n_max,
        squares=tuple(squares),
        cubes=tuple(cubes),
        overlaps=tuple(overlaps),
    )


@dataclass(frozen=True)
class BoundReport:
    """Per-length worst repetition totals against n**exponent.

    ``constant`` is the smallest C with max_total(n) <= C * n**exponent
    over the measured range; ratios are reported, never thresholded.
    """

    exponent: float
    totals: dict[int, int]
    ratios: dict[int, float]
    constant: float
    doc_constants: dict[str, float] = field(default_factory=lambda: dict(DOC_CONSTANTS))

    def passes(self, n: int) -> bool:
        return self.totals[n] <= self.constant * n ** self.exponent


def bound_check(n_max: int, table: RepetitivityTable | None = None) -> BoundReport:
    """Fit the least constant making the sub-cubic bound hold on 1..n_max."""
    if table is None or table.n_max < n_max:
        table = repetitivity(n_max)
    totals = {n: table.max_total(n) for n in range(1, n_max + 1)}
    ratios = {n: totals[n] / n ** BOUND_EXPONENT for n in totals}
    return BoundReport(
        exponent=BOUND_EXPONENT,
        totals=totals,
        ratios=ratios,
        constant=max(ratios.values()),
    )
