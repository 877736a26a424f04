"""Exact maximum clique by branch and bound over Python-int bitsets.

Phase 1 finds the clique number with greedy-colouring bounds on a
degree-sorted relabelling. Phase 2 walks candidates in index order with the
target size fixed, so the first clique it reaches is the lexicographically
least maximum clique.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass

from .errors import ResourceLimit


@dataclass
class CliqueResult:
    clique: list[int]
    nodes: int
    phase1_nodes: int = 0
    phase2_nodes: int = 0


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def is_clique(adj: list[int], vertices) -> bool:
    vs = list(vertices)
    return all(adj[u] >> v & 1 for i, u in enumerate(vs) for v in vs[i + 1 :])


class _Budget:
    def __init__(self, limit):
        self.limit = limit
        self.used = 0

    def tick(self):
        self.used += 1
        if self.limit is not None and self.used > self.limit:
            raise _Exhausted


class _Exhausted(Exception):
    pass


def _clique_number(adj: list[int], budget: _Budget) -> list[int]:
    m = len(adj)
    order = sorted(range(m), key=lambda v: (-bin(adj[v]).count("1"), v))
    pos = {v: i for i, v in enumerate(order)}
    radj = [0] * m
    for v in range(m):
        bits = 0
        for u in _bits(adj[v]):
            bits |= 1 << pos[u]
        radj[pos[v]] = bits

    best: list[int] = []
    current: list[int] = []

    def expand(p: int):
        nonlocal best
        budget.tick()
        # greedy colouring, vertices listed by non-decreasing colour
        verts, colours = [], []
        q = p
        colour = 0
        while q:
            colour += 1
            avail = q
            while avail:
                v = (avail & -avail).bit_length() - 1
                avail &= ~radj[v] & ~(1 << v)
                q &= ~(1 << v)
                verts.append(v)
                colours.append(colour)
        for idx in range(len(verts) - 1, -1, -1):
            if len(current) + colours[idx] <= len(best):
                return
            v = verts[idx]
            current.append(v)
            newp = p & radj[v]
            if newp:
                expand(newp)
            elif len(current) > len(best):
                best = list(current)
            current.pop()
            p &= ~(1 << v)

    expand((1 << m) - 1)
    return sorted(order[v] for v in best)


def _lex_least(adj: list[int], size: int, budget: _Budget):
    current: list[int] = []

    def search(p: int) -> bool:
        budget.tick()
        if len(current) == size:
            return True
        need = size - len(current)
        if bin(p).count("1") < need:
            return False
        # colour from the top index down: after v is placed, the number of
        # classes bounds any clique inside {u in p : u >= v}
        classes: list[int] = []
        suffix = {}
        for v in sorted(_bits(p), reverse=True):
            for ci, cls in enumerate(classes):
                if not cls & adj[v]:
                    classes[ci] = cls | (1 << v)
                    break
            else:
                classes.append(1 << v)
            suffix[v] = len(classes)
        for v in _bits(p):
            if suffix[v] < need:
                return False
            current.append(v)
            if search(p & adj[v] & ~((2 << v) - 1)):
                return True
            current.pop()
        return False

    if search((1 << len(adj)) - 1):
        return list(current)
    return None


def max_clique(adj: list[int], budget: int | None = None) -> CliqueResult:
    """Lexicographically least maximum clique of the bitset graph ``adj``."""
    m = len(adj)
    if m == 0:
        return CliqueResult([], 0)
    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, 4 * m + 100))
    b = _Budget(budget)
    best: list[int] = []
    try:
        best = _clique_number(adj, b)
        phase1 = b.used
        lex = _lex_least(adj, len(best), b)
    except _Exhausted:
        raise ResourceLimit(
            f"node budget {budget} exhausted", CliqueResult(best, b.used)
        ) from None
    finally:
        sys.setrecursionlimit(limit)
    assert lex is not None and len(lex) == len(best)
    return CliqueResult(lex, b.used, phase1, b.used - phase1)
