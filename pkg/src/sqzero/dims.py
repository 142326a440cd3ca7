"""Orbit dimensions: closed formulas and linear-algebra oracles; partitions."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from sympy.utilities.iterables import partitions as _sympy_partitions

from .errors import DomainError
from .linalg import Matrix, rank
from .roots import positive_roots, root_vector, x_of
from .slp import SymmetricLinkPattern, class_counts, total_bridges, total_crossings


def half_dim(k: int, n: int) -> int:
    """d(k, n) = nk - k(k-1)/2, the dimension of the orbital varieties of (2^k, 1^{2n-2k})."""
    if not 0 <= k <= n:
        raise DomainError(f"need 0 <= k <= n, got k={k}, n={n}")
    return n * k - k * (k - 1) // 2


def orbit_dim_formula(L: SymmetricLinkPattern) -> int:
    return half_dim(len(L.arcs), L.n) - total_crossings(L) - total_bridges(L)


def _flat(X: Matrix) -> list:
    return [v for r in X.rows for v in r]


@lru_cache(maxsize=None)
def orbit_dim_oracle(L: SymmetricLinkPattern) -> int:
    """Torus count p+q+r plus the rank of ``N -> [X_L, N]`` on the nilradical."""
    n = L.n
    X = x_of(L)
    rows = []
    for r in positive_roots(n):
        N = root_vector(r, n)
        rows.append(_flat(X @ N - N @ X))
    p, q, s = class_counts(L)
    return p + q + s + rank(rows)


@lru_cache(maxsize=None)
def orbit_dim_borel(L: SymmetricLinkPattern) -> int:
    """Rank of ``ad X_L`` on the whole Borel subalgebra (Cartan plus nilradical)."""
    n = L.n
    X = x_of(L)
    basis = [root_vector(r, n) for r in positive_roots(n)]
    for i in range(1, n + 1):
        basis.append(
            Matrix.from_entries(2 * n, {(n + 1 - i, n + 1 - i): Fraction(1), (n + i, n + i): Fraction(-1)})
        )
    return rank([_flat(X @ B - B @ X) for B in basis])


# partitions

def normalize_partition(parts: Sequence[int]) -> tuple[int, ...]:
    out = tuple(p for p in parts if p)
    if any(p < 0 for p in out) or list(out) != sorted(out, reverse=True):
        raise DomainError(f"{tuple(parts)} is not a partition")
    return out


def in_p1(parts: Sequence[int], total: int | None = None) -> bool:
    """Odd parts occur with even multiplicity (and parts sum to ``total``)."""
    lam = normalize_partition(parts)
    if total is not None and sum(lam) != total:
        return False
    return all(lam.count(p) % 2 == 0 for p in set(lam) if p % 2)


def nilpotent_orbit_dim(parts: Sequence[int]) -> int:
    """``2n^2 + n - sum(s_i^2)/2 - sum_{i odd} r_i / 2`` for ``lambda`` in P1(2n)."""
    lam = normalize_partition(parts)
    total = sum(lam)
    if total % 2 or not in_p1(lam):
        raise DomainError(f"{lam} is not a symplectic partition")
    n = total // 2
    top = lam[0] if lam else 0
    s = [sum(1 for p in lam if p >= i) for i in range(1, top + 1)]
    r = {i: lam.count(i) for i in range(1, top + 1)}
    val = Fraction(2 * n * n + n) - Fraction(sum(x * x for x in s), 2) - Fraction(
        sum(r[i] for i in r if i % 2), 2
    )
    assert val.denominator == 1
    return int(val)


def spherical_orbit_dim(k: int, l: int) -> int:
    """Dimension of the orbit of type (2^k, 1^{2l})."""
    if k < 0 or l < 0:
        raise DomainError("k and l must be nonnegative")
    return k * (k + 2 * l + 1)


def partition_dominance(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """``lam >= mu``: every partial sum of lam dominates that of mu."""
    a, b = normalize_partition(lam), normalize_partition(mu)
    if sum(a) != sum(b):
        raise DomainError("partitions of different totals")
    sa = sb = 0
    for i in range(min(len(a), len(b))):
        sa += a[i]
        sb += b[i]
        if sa < sb:
            return False
    return True


def all_partitions(total: int) -> list[tuple[int, ...]]:
    out = []
    for d in _sympy_partitions(total):
        out.append(tuple(sorted((k for k, m in d.items() for _ in range(m)), reverse=True)))
    return sorted(out, reverse=True)


def orbit_closure_partitions(lam: Sequence[int]) -> list[tuple[int, ...]]:
    """Symplectic partitions ``mu <= lam``, in decreasing lexicographic order."""
    a = normalize_partition(lam)
    total = sum(a)
    if not in_p1(a, total) or total % 2:
        raise DomainError(f"{a} is not a symplectic partition")
    return [mu for mu in all_partitions(total) if in_p1(mu) and partition_dominance(a, mu)]


def jordan_type(X: Matrix) -> tuple[int, ...]:
    """Jordan block sizes of a nilpotent matrix from ranks of its powers."""
    N = X.nrows
    ranks = [N]
    P = Matrix.identity(N)
    while ranks[-1]:
        P = P @ X
        r = P.rank()
        if r == ranks[-1]:
            raise DomainError("matrix is not nilpotent")
        ranks.append(r)
    at_least = [ranks[i - 1] - ranks[i] for i in range(1, len(ranks))]
    parts = []
    for size in range(len(at_least), 0, -1):
        exact = at_least[size - 1] - (at_least[size] if size < len(at_least) else 0)
        parts.extend([size] * exact)
    return tuple(parts)
