"""Vertical representation: frontiers, inversion, the frontier automaton."""

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from smoothwords import vertical as V, words as W

frontier_texts = st.builds(
    lambda first, rest: first + rest,
    st.sampled_from("12"),
    st.text(alphabet="012", max_size=9),
)


def binary_frontiers(n):
    for t in itertools.product("12", repeat=n):
        yield "".join(t)


def all_frontiers(n):
    """Frontier texts of length n (first symbol nonzero)."""
    for first in "12":
        for rest in itertools.product("012", repeat=n - 1):
            yield first + "".join(rest)


# ---------------------------------------------------------------- examples

def test_frontier_examples():
    assert V.left_frontier("21221211221") == "2110"
    assert V.right_frontier("21221211221") == "1022"
    assert V.left_frontier("2212211") == "221"
    assert V.right_frontier("2212211") == "122"
    assert V.left_frontier("") == ""


def test_vertical_repr_examples():
    assert str(V.vertical_repr("21221211221")) == "2110|1022"
    assert str(V.vertical_repr("1221221121")) == "101|110"
    assert str(V.vertical_repr("2")) == "2|2"


def test_reconstruct_examples():
    assert V.reconstruct("221", "122") == "2212211"
    assert V.reconstruct("101", "110") == "1221221121"
    assert V.reconstruct("2122", "2222") == "2121122"
    with pytest.raises(V.InconsistentFrontiers) as err:
        V.reconstruct("11", "22")
    assert err.value.level == 0


def test_reconstruct_validation():
    with pytest.raises(ValueError):
        V.reconstruct("21", "2")
    with pytest.raises(ValueError):
        V.reconstruct("", "")
    with pytest.raises(ValueError):
        V.reconstruct("021", "122")
    with pytest.raises(ValueError):
        V.reconstruct("231", "122")


def test_canonical_minimal_examples():
    assert V.canonical_minimal("21221211221") == "2121122"
    assert V.canonical_minimal("1221221121") == "2212211"
    assert V.canonical_minimal("2211") == "2211"


def test_realize_left_examples():
    assert V.realize_left("2122") == "2121122"
    assert V.realize_left("221") == "22122"
    assert V.realize_left("2") == "2"
    assert V.left_frontier("22122") == "221"
    assert V.right_frontier("22122") == "221"


def test_weak_step_examples():
    assert V.weak_target("211") == "2122"
    assert V.weak_target("1") == "22"


# ---------------------------------------------------------------- laws

def test_round_trip(cinf_upto):
    for w in cinf_upto(18):
        if w:
            rep = V.vertical_repr(w)
            assert V.reconstruct(rep.left, rep.right) == w


def test_realizable_pairs_biject_with_smooth_words(cinf_upto):
    # pairs that reconstruct are in one-to-one correspondence with the
    # smooth words of that height; every other pair raises
    by_height: dict[int, set[str]] = {}
    for w in cinf_upto(24):
        if w:
            by_height.setdefault(W.height(w), set()).add(w)
    for k in (1, 2, 3, 4):
        realized: dict[str, tuple[str, str]] = {}
        for left in all_frontiers(k):
            for right in all_frontiers(k):
                try:
                    w = V.reconstruct(left, right)
                except V.InconsistentFrontiers:
                    continue
                assert w not in realized, (w, realized[w], (left, right))
                realized[w] = (left, right)
        minima = [m for m in realized if W.classify(m).minimal]
        assert max(len(W.extend(m, "both")) for m in minima) <= 24
        assert set(realized) == by_height[k]
    assert {k: len(by_height[k]) for k in (1, 2, 3, 4)} == {
        1: 4, 2: 18, 3: 82, 4: 366,
    }


def test_frontier_encodes_maximality_and_minimality(cinf_upto):
    for w in cinf_upto(18):
        if not w:
            continue
        profile = W.classify(w)
        left, right = V.left_frontier(w), V.right_frontier(w)
        assert profile.left_maximal == ("2" not in left[1:])
        assert profile.left_minimal == ("0" not in left[1:])
        assert profile.right_maximal == ("2" not in right[1:])
        assert profile.right_minimal == ("0" not in right[1:])


def test_same_state_means_same_left_maximal_frontier(cinf_upto):
    words = [w for w in cinf_upto(14) if w]
    by_state: dict[str, set[str]] = {}
    for w in words:
        state = V.run_frontier(V.left_frontier(w))
        ext_front = V.left_frontier(W.extend(w, "left"))
        by_state.setdefault(state, set()).add(ext_front)
    for state, fronts in by_state.items():
        assert len(fronts) == 1, (state, fronts)
    # distinct states also give distinct left-maximal-extension frontiers
    fronts = [next(iter(v)) for v in by_state.values()]
    assert len(fronts) == len(set(fronts))


def test_realized_frontiers_are_right_minimal():
    for n in range(1, 7):
        for front in all_frontiers(n):
            w = V.realize_left(front)
            assert V.left_frontier(w) == front
            assert "0" not in V.right_frontier(w)[1:]
            assert W.classify(w).right_minimal


def test_complement_swaps_first_frontier_symbol(cinf_upto):
    for w in cinf_upto(18):
        if not w:
            continue
        front = V.left_frontier(w)
        swapped = W.complement(front[0]) + front[1:]
        assert V.left_frontier(W.complement(w)) == swapped


def test_frontier_automaton_shape(frontier_aut):
    fa = frontier_aut(6)
    states = fa.states()
    for j in range(7):
        assert sum(1 for u in states if len(u) == j) == 2 ** j
    for u in states:
        if 1 <= len(u) < 6:
            edges = fa.out_edges(u)
            assert len(edges) == 3
            target = fa.weak[u]
            assert target.endswith("2")
            assert len(target) == len(u) + 1
        elif len(u) == 6:
            assert fa.out_edges(u) == []
    assert fa.out_edges("") == [("1", "1"), ("2", "2")]


def test_frontier_automaton_first_symbol_symmetry(frontier_aut):
    fa = frontier_aut(8)

    def swap(s):
        return (W.complement(s[0]) + s[1:]) if s else s

    for u, target in fa.weak.items():
        assert fa.weak[swap(u)] == swap(target)


def test_both_constructions_agree_away_from_the_cut(frontier_aut):
    for k in (3, 4, 5, 6):
        direct = frontier_aut(k)
        derived = V.frontier_automaton_via_compaction(k)
        for u in direct.weak:
            if len(u) <= k - 2:
                assert derived.weak.get(u) == direct.weak[u], (k, u)


def test_via_compaction_merges_exactly_two_minima_per_frontier(compacted):
    ca = compacted(5)
    by_front: dict[str, list] = {}
    for st in ca.states:
        if 1 <= st.height <= 4:
            by_front.setdefault(V.left_frontier(st.minimal_word), []).append(st)
    for front, sts in by_front.items():
        assert len(sts) == 2, front
        roots = sorted(len(st.root) for st in sts)
        assert roots == [1, 2]
        single = min(sts, key=lambda st: len(st.root))
        double = max(sts, key=lambda st: len(st.root))
        assert double.minimal_word.startswith(single.minimal_word)


def test_weak_edges_are_witness_independent(cinf_upto):
    words = [w for w in cinf_upto(20) if w]
    targets: dict[str, set[str]] = {}
    for u in words:
        front = V.left_frontier(u)
        if front.endswith("0") and len(front) <= 4:
            for j in range(1, len(u)):
                if W.is_left_minimal(u[j:]):
                    targets.setdefault(front, set()).add(
                        V.left_frontier(u[j:])
                    )
                    break
    assert targets
    for front, outs in targets.items():
        assert len(outs) == 1, (front, outs)
        assert outs == {V.weak_target(front[:-1])}


def test_run_frontier_matches_automaton(frontier_aut, cinf_upto):
    fa = frontier_aut(6)
    for w in cinf_upto(14):
        if w:
            front = V.left_frontier(w)
            assert V.run_frontier(front) == fa.run(front)


@settings(max_examples=150, deadline=None)
@given(frontier_texts)
def test_every_frontier_has_a_witness(front):
    w = V.realize_left(front)
    assert V.left_frontier(w) == front
    assert W.height(w) == len(front)


@settings(max_examples=150, deadline=None)
@given(frontier_texts)
def test_witness_round_trips_through_its_own_pair(front):
    w = V.realize_left(front)
    rep = V.vertical_repr(w)
    assert rep.left == front
    assert V.reconstruct(rep.left, rep.right) == w
