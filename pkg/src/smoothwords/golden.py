"""Golden worked examples exercised by the self-test command.

Each check recomputes a published value of the calculus (derivatives,
extensions, catalogs, frontiers, automaton structure, the self-describing
word) and compares it to the frozen expectation.  The registry is the
backing store for both ``smoothwords paper-examples`` and the acceptance
suite.
"""

from __future__ import annotations

from typing import Callable

from . import automata, forbidden, repetitions, vertical, words

KOLAKOSKI_60 = "221121221221121122121121221121121221221121221211211221221121"

TABLE_K1 = {"111", "222"}
TABLE_K2 = TABLE_K1 | {"21212", "12121", "112211", "221122"}
TABLE_K3 = TABLE_K2 | {
    "11211211", "22122122", "212212212", "121121121",
    "2121122121", "1212211212", "1122121122", "2211212211",
}

EIGHT_PRIMITIVES_OF_2 = {"11", "22", "211", "112", "2112", "122", "221", "1221"}


def _raises(exc, fn) -> bool:
    try:
        fn()
    except exc:
        return True
    except Exception:
        return False
    return False


def _chain_checks() -> list[tuple[str, Callable[[], bool]]]:
    return [
        ("rle-2211", lambda: words.rle("2211") == (2, 2)),
        ("derivative-2211", lambda: words.derivative("2211") == "22"),
        ("derivative-long", lambda: words.derivative("21221211221") == "121122"),
        ("derivative-111-error",
         lambda: _raises(words.NotDifferentiable, lambda: words.derivative("111"))),
        ("chain-2211",
         lambda: words.derivative_chain("2211") == ("2211", "22", "2", "")),
        ("chain-22112112",
         lambda: words.derivative_chain("22112112") == ("22112112", "2212", "21", "")),
        ("chain-12121-error",
         lambda: _raises(words.NotCInfinity, lambda: words.derivative_chain("12121"))),
        ("kdiff-12121", lambda: not words.is_k_differentiable("12121", 2)),
        ("cinf-2211", lambda: words.is_cinf("2211")),
        ("cinf-112211", lambda: not words.is_cinf("112211")),
        ("height-root-2211",
         lambda: (words.height("2211"), words.root("2211")) == (3, "2")),
        ("height-root-22112112",
         lambda: (words.height("22112112"), words.root("22112112")) == (3, "21")),
        ("complement", lambda: words.complement("11212") == "22121"),
        ("reversal", lambda: words.reversal("11212") == "21211"),
        ("primitives-of-2",
         lambda: set(words.primitives("2")) == EIGHT_PRIMITIVES_OF_2),
        ("primitives-of-1", lambda: set(words.primitives("1")) == {"121", "212"}),
        ("primitives-of-empty",
         lambda: set(words.primitives("")) == {"1", "2", "12", "21"}),
    ]


def _classification_checks() -> list[tuple[str, Callable[[], bool]]]:
    def minimal_not_maximal() -> bool:
        p = words.classify("2211")
        return p.minimal and not p.left_maximal and not p.right_maximal

    def left_only() -> bool:
        p = words.classify("2122112")
        return p.left_maximal and not p.right_maximal

    def doubly_not_fully() -> bool:
        p = words.classify("121")
        return p.left_doubly_ext and p.right_doubly_ext and not p.fully_ext

    return [
        ("classify-2211", minimal_not_maximal),
        ("classify-2122112", left_only),
        ("classify-121", doubly_not_fully),
        ("extend-right", lambda: words.extend("2211", "right") == "221121"),
        ("extend-left", lambda: words.extend("2211", "left") == "212211"),
        ("extend-both", lambda: words.extend("2211", "both") == "21221121"),
    ]


def _catalog_checks() -> list[tuple[str, Callable[[], bool]]]:
    return [
        ("catalog-k1", lambda: set(forbidden.mf_set(1).words) == TABLE_K1),
        ("catalog-k2", lambda: set(forbidden.mf_set(2).words) == TABLE_K2),
        ("catalog-k3", lambda: set(forbidden.mf_set(3).words) == TABLE_K3),
        ("minimal-forbidden-112211",
         lambda: forbidden.is_minimal_forbidden("112211")),
    ]


def _automaton_checks() -> list[tuple[str, Callable[[], bool]]]:
    def rejects_triple() -> bool:
        return automata.ck_automaton(1).run("111") is None

    def excludes_level2() -> bool:
        lang = automata.ck_automaton(2).language_up_to(5)
        return "21212" not in lang and "12121" not in lang and "2121" in lang

    def recognizes_language() -> bool:
        from . import oracle
        return automata.ck_automaton(2).language_up_to(10) == oracle.enumerate_ck(2, 10)

    def census_per_kind() -> bool:
        ca = automata.compact(automata.ck_automaton(4))
        rows = automata.census_by_height(ca)
        return all(
            rows[j]["single"] == 2 ** j and rows[j]["double"] == 2 ** j
            for j in (1, 2, 3)
        )

    def single_rooted_two_solid() -> bool:
        ca = automata.compact(automata.ck_automaton(5))
        s = next(i for i, st in enumerate(ca.states) if st.minimal_word == "2211")
        kinds = [e.kind for e in ca.edges[s]]
        return kinds == [automata.SOLID, automata.SOLID]

    def double_rooted_edges() -> bool:
        ca = automata.compact(automata.ck_automaton(5))
        for i, st in enumerate(ca.states):
            if st.height == 2 and len(st.root) == 2:
                kinds = sorted(e.kind for e in ca.edges[i])
                if kinds != [automata.SOLID, automata.WEAK]:
                    return False
                weak = next(e for e in ca.edges[i] if e.kind == automata.WEAK)
                target = ca.states[weak.target]
                prof = words.classify(target.minimal_word)
                if not (prof.minimal and target.root == "2"):
                    return False
        return True

    def class_of_2211() -> bool:
        ca = automata.compact(automata.ck_automaton(5))
        s = next(i for i, st in enumerate(ca.states) if st.minimal_word == "2211")
        members = automata.class_members(ca, s, 8)
        return {"2211", "221121", "212211", "21221121"} <= members

    return [
        ("automaton-rejects-111", rejects_triple),
        ("automaton-language-cut", excludes_level2),
        ("automaton-recognizes", recognizes_language),
        ("compaction-census", census_per_kind),
        ("single-rooted-out-edges", single_rooted_two_solid),
        ("double-rooted-out-edges", double_rooted_edges),
        ("class-of-2211", class_of_2211),
    ]


def _frontier_checks() -> list[tuple[str, Callable[[], bool]]]:
    def interior_out_degree() -> bool:
        fa = vertical.build_frontier_automaton(6)
        return all(
            len(fa.out_edges(u)) == 3
            for u in fa.states()
            if 1 <= len(u) < 6
        )

    return [
        ("frontier-left", lambda: vertical.left_frontier("21221211221") == "2110"),
        ("frontier-right", lambda: vertical.right_frontier("21221211221") == "1022"),
        ("frontier-2212211",
         lambda: str(vertical.vertical_repr("2212211")) == "221|122"),
        ("vertical-pair",
         lambda: str(vertical.vertical_repr("1221221121")) == "101|110"),
        ("reconstruct-221-122", lambda: vertical.reconstruct("221", "122") == "2212211"),
        ("reconstruct-101-110",
         lambda: vertical.reconstruct("101", "110") == "1221221121"),
        ("reconstruct-2122-2222",
         lambda: vertical.reconstruct("2122", "2222") == "2121122"),
        ("canonical-minimal-long",
         lambda: vertical.canonical_minimal("21221211221") == "2121122"),
        ("canonical-minimal-1221221121",
         lambda: vertical.canonical_minimal("1221221121") == "2212211"),
        ("weak-step-211", lambda: vertical.weak_target("211") == "2122"),
        ("weak-step-1", lambda: vertical.weak_target("1") == "22"),
        ("frontier-out-degree", interior_out_degree),
    ]


def _repetition_checks() -> list[tuple[str, Callable[[], bool]]]:
    def existence_to_10() -> bool:
        table = repetitions.repetitivity(10)
        return all(n in table.I and n in table.G for n in range(1, 11))

    def census_facts() -> bool:
        report = repetitions.census(60)
        return report.cube_count == 0 and report.overlaps_longer_than(55) == 0

    return [
        ("kolakoski-12", lambda: repetitions.kolakoski(12) == "221121221221"),
        ("kolakoski-60", lambda: repetitions.kolakoski(60) == KOLAKOSKI_60),
        ("census-facts", census_facts),
        ("gap-existence", existence_to_10),
    ]


def registry() -> list[tuple[str, Callable[[], bool]]]:
    return (
        _chain_checks()
        + _classification_checks()
        + _catalog_checks()
        + _automaton_checks()
        + _frontier_checks()
        + _repetition_checks()
    )


def run_all() -> dict[str, bool]:
    """Run every golden check; result map preserves registry order."""
    results: dict[str, bool] = {}
    for name, check in registry():
        try:
            results[name] = bool(check())
        except Exception:
            results[name] = False
    return results
