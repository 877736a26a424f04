from itertools import combinations, product
from math import comb

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from oracles import all_sequences, alternations, best_family

from hforge.clique import is_clique, max_clique
from hforge.errors import LengthMismatch, MissingEntry, ResourceLimit
from hforge.sequences import (
    Form,
    check_recurrence,
    count_sequences,
    cross_count,
    enumerate_sequences,
    lex_key,
    max_family,
    validate,
)


def test_validate_examples():
    assert validate("+0") is Form.B
    assert validate("00") is Form.A
    assert validate("-0") is Form.B
    assert validate("0*") is Form.B
    assert validate("0") is Form.B
    assert validate("+*") is Form.INVALID
    assert validate("*0+-0**") is Form.A
    assert validate("0+") is Form.INVALID
    assert validate("*0*") is Form.INVALID


def test_enumerate_small():
    assert enumerate_sequences(1) == ["0"]
    assert sorted(enumerate_sequences(2)) == sorted(["+0", "00", "-0", "0*"])
    assert len(enumerate_sequences(3)) == 11


@pytest.mark.parametrize("n", range(1, 8))
def test_enumerate_matches_exhaustive_filter(n):
    brute = ["".join(w) for w in product("+-0*", repeat=n) if validate("".join(w)) is not Form.INVALID]
    got = enumerate_sequences(n)
    assert len(set(got)) == len(got)
    assert set(got) == set(brute)
    assert got == all_sequences(n)
    assert got == sorted(got, key=lex_key)
    assert len(got) == count_sequences(n)


def test_cross_count_examples():
    assert cross_count("+0", "-0") == 0
    assert cross_count("+-0", "-+0") == 1
    assert cross_count("0++--0", "0++--0") == 0
    with pytest.raises(LengthMismatch):
        cross_count("0", "00")


seq_pairs = st.integers(1, 8).flatmap(
    lambda n: st.tuples(st.sampled_from(enumerate_sequences(n)), st.sampled_from(enumerate_sequences(n)))
)


@settings(max_examples=300, deadline=None)
@given(seq_pairs)
def test_cross_count_matches_exhaustive_search(pair):
    a, b = pair
    c = cross_count(a, b)
    assert c == alternations(a, b)
    assert c == cross_count(b, a)
    assert c <= len(a) - 1


def _bitmask_oracle(n, k):
    seqs = enumerate_sequences(n)
    m = len(seqs)
    best = None
    for mask in range(1 << m):
        members = [i for i in range(m) if mask >> i & 1]
        if all(cross_count(seqs[i], seqs[j]) <= k for i, j in combinations(members, 2)):
            if best is None or len(members) > len(best) or (len(members) == len(best) and members < best):
                best = members
    return [seqs[i] for i in best]


@pytest.mark.parametrize("k", [0, 1, 2])
def test_n3_against_all_subsets(k):
    assert max_family(3, k).witness == _bitmask_oracle(3, k)


@pytest.mark.parametrize("n,k", [(n, k) for n in range(1, 5) for k in range(0, 4)])
def test_small_against_subset_recursion(n, k):
    res = max_family(n, k)
    assert res.witness == best_family(n, k)
    assert res.size == len(res.witness)


@pytest.mark.parametrize("k", [0, 1, 2])
def test_n5_against_bron_kerbosch(k):
    seqs = enumerate_sequences(5)
    g = nx.Graph()
    g.add_nodes_from(range(len(seqs)))
    g.add_edges_from(
        (i, j) for i, j in combinations(range(len(seqs)), 2) if cross_count(seqs[i], seqs[j]) <= k
    )
    cliques = [sorted(c) for c in nx.find_cliques(g)]
    omega = max(map(len, cliques))
    lex = min(c for c in cliques if len(c) == omega)
    res = max_family(5, k)
    assert res.size == omega
    assert res.witness == [seqs[i] for i in lex]


def test_base_cases():
    for k in (0, 1, 2, 5):
        assert max_family(1, k).size == 1
        assert max_family(2, k).size == 4
    assert max_family(4, -1).size == 1
    assert max_family(3, 9).size == max_family(3, 2).size


def test_family_witness_is_valid():
    res = max_family(5, 1)
    assert len(set(res.witness)) == res.size
    assert all(validate(s) is not Form.INVALID for s in res.witness)
    assert all(cross_count(a, b) <= 1 for a, b in combinations(res.witness, 2))


def test_monotone_and_bounded():
    table = {(n, k): max_family(n, k).size for n in range(1, 7) for k in range(0, 3)}
    for (n, k), g in table.items():
        if k + 1 < 3:
            assert g <= table[(n, k + 1)]
        if n + 1 < 7:
            assert g <= table[(n + 1, k)]
        if k < n:
            assert g <= 2 * comb(2 * n, k + 1)
    assert check_recurrence(table) == []


def test_recurrence_examples():
    assert check_recurrence({(1, 0): 1, (2, 0): 4}) == []
    assert check_recurrence({(1, 0): 1, (2, 0): 6}) == [(1, 0)]
    with pytest.raises(MissingEntry):
        check_recurrence({(3, 1): 11})


def test_budget_exhaustion_reports_lower_bound():
    with pytest.raises(ResourceLimit) as info:
        max_family(6, 0, budget=10)
    part = info.value.partial
    assert part is not None and not part.exact
    assert part.size <= max_family(6, 0).size


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 14), st.integers(0, 2**31))
def test_max_clique_on_random_graphs(m, seed):
    g = nx.gnp_random_graph(m, 0.5, seed=seed)
    adj = [0] * m
    for u, v in g.edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    res = max_clique(adj)
    cliques = [sorted(c) for c in nx.find_cliques(g)]
    omega = max(map(len, cliques))
    assert len(res.clique) == omega
    assert is_clique(adj, res.clique)
    assert res.clique == min(c for c in cliques if len(c) == omega)
