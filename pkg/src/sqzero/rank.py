"""Rank matrices, their symmetrization and the closure order on patterns."""

from __future__ import annotations

from functools import lru_cache

from .errors import SizeError
from .slp import LinkPattern, SymmetricLinkPattern, enumerate_slp, format_pattern


def to_matrix_index(p: int, n: int) -> int:
    """Signed point to row/column index in 1..2n."""
    return p + n + 1 if p < 0 else p + n


def from_matrix_index(s: int, n: int) -> int:
    return s - n - 1 if s <= n else s - n


class RankMatrix:
    """Strictly upper-triangular 2n x 2n matrix of interval arc counts (1-based)."""

    __slots__ = ("size", "entries")

    def __init__(self, size: int, entries: tuple[tuple[int, ...], ...]):
        self.size = size
        self.entries = entries

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i - 1][j - 1]

    def __le__(self, other: RankMatrix) -> bool:
        if self.size != other.size:
            raise SizeError("rank matrices of different sizes")
        return all(a <= b for r, s in zip(self.entries, other.entries) for a, b in zip(r, s))

    def __eq__(self, other):
        if not isinstance(other, RankMatrix):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def is_antidiagonal_symmetric(self) -> bool:
        N = self.size
        return all(self[s, t] == self[N + 1 - t, N + 1 - s] for s in range(1, N + 1) for t in range(1, N + 1))

    def __repr__(self):
        return "RankMatrix(" + "; ".join(" ".join(map(str, r)) for r in self.entries) + ")"


@lru_cache(maxsize=None)
def rank_matrix(L: LinkPattern) -> RankMatrix:
    """Entry (a, b) counts arcs whose both ends lie in the index interval [a, b]."""
    n = L.n
    N = 2 * n
    ends = [(to_matrix_index(a.left, n), to_matrix_index(a.right, n)) for a in L.arcs]
    rows = []
    for a in range(1, N + 1):
        row = []
        for b in range(1, N + 1):
            row.append(sum(1 for s, t in ends if a <= s and t <= b) if a < b else 0)
        rows.append(tuple(row))
    return RankMatrix(N, tuple(rows))


def symmetrize(R: RankMatrix) -> RankMatrix:
    """(SR)_{s,t} = min(R_{s,t}, R_{N+1-t, N+1-s})."""
    N = R.size
    rows = tuple(
        tuple(min(R[s, t], R[N + 1 - t, N + 1 - s]) for t in range(1, N + 1)) for s in range(1, N + 1)
    )
    return RankMatrix(N, rows)


def leq(L1: LinkPattern, L2: LinkPattern) -> bool:
    """L1 below L2 in the closure order: entrywise comparison of rank matrices."""
    if L1.n != L2.n:
        raise SizeError("patterns of different sizes")
    return rank_matrix(L1) <= rank_matrix(L2)


def lt(L1: LinkPattern, L2: LinkPattern) -> bool:
    return L1 != L2 and leq(L1, L2)


@lru_cache(maxsize=None)
def _universe(n: int) -> tuple[SymmetricLinkPattern, ...]:
    return tuple(enumerate_slp(n))


@lru_cache(maxsize=None)
def closure_set(L: SymmetricLinkPattern) -> frozenset[SymmetricLinkPattern]:
    """All symmetric patterns below L."""
    R = rank_matrix(L)
    return frozenset(P for P in _universe(L.n) if rank_matrix(P) <= R)


def maximal_elements(patterns) -> set:
    ps = list(patterns)
    return {P for P in ps if not any(Q != P and leq(P, Q) for Q in ps)}


@lru_cache(maxsize=None)
def covers(L: SymmetricLinkPattern) -> frozenset[SymmetricLinkPattern]:
    """Maximal elements strictly below L."""
    return frozenset(maximal_elements(closure_set(L) - {L}))


def hasse(n: int, k: int | None = None) -> dict:
    """Cover edges of the poset on all patterns (or those with k arcs).

    Edges are ``[upper, lower]`` pairs of pattern strings; nodes and edges are
    sorted by the pattern key.
    """
    nodes = enumerate_slp(n, k)
    node_set = set(nodes)
    edges = []
    for L in nodes:
        below = [P for P in closure_set(L) if P in node_set and P != L]
        for P in sorted(maximal_elements(below), key=lambda P: P.key):
            edges.append([format_pattern(L), format_pattern(P)])
    return {"n": n, "k": k, "nodes": [format_pattern(L) for L in nodes], "edges": edges}
