import pytest

from smoothwords import automata, oracle, vertical


@pytest.fixture(scope="session")
def cinf_upto():
    """Factory over one cached enumeration: all smooth words of length <= n."""
    cache = {"bound": 0, "words": [""]}

    def get(n: int) -> list[str]:
        if n > cache["bound"]:
            cache["bound"] = max(n, 24)
            cache["words"] = oracle.enumerate_cinf(cache["bound"])
        return [w for w in cache["words"] if len(w) <= n]

    return get


@pytest.fixture(scope="session")
def aut():
    """Cached k-differentiable automata."""
    cache: dict[int, automata.Automaton] = {}

    def get(k: int) -> automata.Automaton:
        if k not in cache:
            cache[k] = automata.ck_automaton(k)
        return cache[k]

    return get


@pytest.fixture(scope="session")
def compacted(aut):
    cache: dict[int, automata.CompactAutomaton] = {}

    def get(k: int) -> automata.CompactAutomaton:
        if k not in cache:
            cache[k] = automata.compact(aut(k))
        return cache[k]

    return get


@pytest.fixture(scope="session")
def frontier_aut():
    def get(k: int) -> vertical.FrontierAutomaton:
        return vertical.build_frontier_automaton(k)  # lru-cached in the module

    return get
