"""Monotone drawing sequences.

A sequence is stored as a plain string over ``"+-0*"``. Symbols are
partially ordered ``- < 0 < +``; ``*`` is incomparable with everything.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import product

from .clique import CliqueResult, max_clique
from .errors import InvalidParams, LengthMismatch, MissingEntry, ResourceLimit

ALPHABET = "+-0*"
# enumeration order: - < 0 < + < *
LEX_ORDER = "-0+*"
_LEX_KEY = {c: i for i, c in enumerate(LEX_ORDER)}
_RANK = {"-": -1, "0": 0, "+": 1}

DEFAULT_BUDGET = 10**8


class Form(enum.Enum):
    A = "A"  # *..* 0 ±..± 0 *..*
    B = "B"  # ±..± 0 *..*
    INVALID = "invalid"


def validate(seq: str) -> Form:
    if not seq:
        raise ValueError("empty sequence")
    if any(c not in ALPHABET for c in seq):
        return Form.INVALID
    zeros = [i for i, c in enumerate(seq) if c == "0"]
    if len(zeros) == 2:
        i, j = zeros
        if (
            all(c == "*" for c in seq[:i])
            and all(c in "+-" for c in seq[i + 1 : j])
            and all(c == "*" for c in seq[j + 1 :])
        ):
            return Form.A
    elif len(zeros) == 1:
        (i,) = zeros
        if all(c in "+-" for c in seq[:i]) and all(c == "*" for c in seq[i + 1 :]):
            return Form.B
    return Form.INVALID


def is_valid(seq: str) -> bool:
    return validate(seq) is not Form.INVALID


def lex_key(seq: str) -> tuple[int, ...]:
    return tuple(_LEX_KEY[c] for c in seq)


def enumerate_sequences(n: int) -> list[str]:
    """All monotone drawing sequences of length ``n`` in lexicographic order."""
    if n < 1:
        raise InvalidParams("sequence length must be >= 1")
    out = []
    # form B: ±^a 0 *^(n-1-a)
    for a in range(n):
        for signs in product("+-", repeat=a):
            out.append("".join(signs) + "0" + "*" * (n - 1 - a))
    # form A: *^a 0 ±^b 0 *^c
    for b in range(n - 1):
        for a in range(n - 1 - b):
            c = n - 2 - a - b
            for signs in product("+-", repeat=b):
                out.append("*" * a + "0" + "".join(signs) + "0" + "*" * c)
    out.sort(key=lex_key)
    return out


def count_sequences(n: int) -> int:
    """Closed form for ``len(enumerate_sequences(n))``."""
    form_b = 2**n - 1
    form_a = sum((n - 1 - b) * 2**b for b in range(n - 1))
    return form_a + form_b


def cross_count(a: str, b: str) -> int:
    """Largest k such that ``a`` and ``b`` cross k times.

    Counts sign changes along the stream of strict comparisons; any
    alternating witness embeds in that stream, so greedy is optimal.
    """
    if len(a) != len(b):
        raise LengthMismatch(f"lengths {len(a)} and {len(b)} differ")
    changes = 0
    last = 0
    for x, y in zip(a, b):
        if x == "*" or y == "*" or x == y:
            continue
        s = 1 if _RANK[x] > _RANK[y] else -1
        if last and s != last:
            changes += 1
        last = s
    return changes


@dataclass
class FamilyResult:
    n: int
    k: int
    size: int
    witness: list[str]
    exact: bool = True
    nodes: int = 0
    vertices: int = 0
    stats: dict = field(default_factory=dict)


def compatibility_graph(seqs: list[str], k: int) -> list[int]:
    """Bitset adjacency: ``i ~ j`` iff the two sequences cross at most ``k`` times."""
    m = len(seqs)
    adj = [0] * m
    for i in range(m):
        a = seqs[i]
        for j in range(i + 1, m):
            if cross_count(a, seqs[j]) <= k:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return adj


def max_family(n: int, k: int, budget: int = DEFAULT_BUDGET) -> FamilyResult:
    """Exact g(n, k) with the lexicographically least optimal family.

    Raises :class:`ResourceLimit` (``partial`` set, ``exact=False``) if the
    branch-node budget runs out.
    """
    if n < 1:
        raise InvalidParams("n must be >= 1")
    if k < -1:
        raise InvalidParams("k must be >= -1")
    seqs = enumerate_sequences(n)
    if k == -1:
        return FamilyResult(n, k, 1, [seqs[0]], vertices=len(seqs))
    eff = min(k, n - 1)
    adj = compatibility_graph(seqs, eff)
    try:
        res: CliqueResult = max_clique(adj, budget=budget)
    except ResourceLimit as exc:
        part = exc.partial
        partial = FamilyResult(
            n, k, len(part.clique), [seqs[i] for i in part.clique],
            exact=False, nodes=part.nodes, vertices=len(seqs),
        )
        raise ResourceLimit(str(exc), partial) from None
    return FamilyResult(
        n, k, len(res.clique), [seqs[i] for i in res.clique],
        nodes=res.nodes, vertices=len(seqs),
        stats={"phase1_nodes": res.phase1_nodes, "phase2_nodes": res.phase2_nodes},
    )


def check_recurrence(table: dict[tuple[int, int], int]) -> list[tuple[int, int]]:
    """Entries (n, k) with g(n+1, k) > g(n, k) + 2 g(n, k-1) + 2.

    Every (n+1, k) in the table is checked; a missing (n, k) or (n, k-1)
    raises :class:`MissingEntry`. ``g(n, -1) = 1`` is implied when absent.
    """
    bad = []
    for (n1, k) in sorted(table):
        n = n1 - 1
        if n < 1 or k < 0:
            continue
        lower = table.get((n, k - 1), 1 if k - 1 == -1 else None)
        if (n, k) not in table or lower is None:
            raise MissingEntry(f"need g({n},{k}) and g({n},{k - 1}) to check g({n1},{k})")
        if table[(n1, k)] > table[(n, k)] + 2 * lower + 2:
            bad.append((n, k))
    return bad
