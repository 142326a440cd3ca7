"""Root vectors of the symplectic algebra, Borel generators and their actions.

Matrices are 2n x 2n, indexed 1..2n.  Point ``-i`` sits at index ``n+1-i``
and point ``i`` at ``n+i``, so the Borel subgroup is upper triangular and the
arcs of a pattern sit exactly at the positions of its rank matrix:

* ``X_{e_j-e_i} = E_{n+1-j,n+1-i} - E_{n+i,n+j}``
* ``X_{e_j+e_i} = E_{n+1-i,n+j} + E_{n+1-j,n+i}``
* ``X_{2e_i}    = E_{n+1-i,n+i}``

and negative root vectors are transposes.  The invariant form is the
antidiagonal ``J`` with ``J_{a,2n+1-a} = 1`` for ``a <= n`` and ``-1`` above.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .errors import DomainError, WitnessError
from .laurent import Laurent
from .linalg import ONE, ZERO, Matrix
from .rank import to_matrix_index
from .scalars import GaussQ, format_scalar
from .slp import ArcClass, SymmetricLinkPattern


@dataclass(frozen=True, order=True)
class Root:
    """``e_j - e_i`` (kind "minus"), ``e_j + e_i`` ("plus") or ``2e_i`` ("two").

    Always ``i < j`` for the first two kinds and ``j == i`` for "two";
    ``sign = -1`` gives the negative root.
    """

    kind: str
    i: int
    j: int
    sign: int = 1

    def __post_init__(self):
        if self.kind == "two":
            if self.i != self.j or self.i < 1:
                raise DomainError(f"bad root 2e_{self.i}")
        elif self.kind in ("minus", "plus"):
            if not 1 <= self.i < self.j:
                raise DomainError(f"bad root indices ({self.i},{self.j})")
        else:
            raise DomainError(f"unknown root kind {self.kind!r}")
        if self.sign not in (1, -1):
            raise DomainError("sign must be +1 or -1")

    @classmethod
    def minus(cls, i: int, j: int) -> Root:
        """``e_j - e_i`` with ``i < j``."""
        return cls("minus", i, j)

    @classmethod
    def plus(cls, i: int, j: int) -> Root:
        """``e_i + e_j`` in either argument order."""
        return cls("plus", min(i, j), max(i, j))

    @classmethod
    def two(cls, i: int) -> Root:
        return cls("two", i, i)

    def __neg__(self) -> Root:
        return Root(self.kind, self.i, self.j, -self.sign)

    def is_positive(self) -> bool:
        return self.sign == 1

    def max_index(self) -> int:
        return self.j

    def __str__(self):
        i, j = self.i, self.j
        if self.kind == "two":
            s = f"2e_{i}"
        elif self.kind == "minus":
            s = f"e_{j}-e_{i}"
        else:
            s = f"e_{j}+e_{i}"
        return s if self.sign == 1 else f"-({s})"


def positive_roots(n: int) -> list[Root]:
    out = []
    for j in range(1, n + 1):
        for i in range(1, j):
            out.append(Root.minus(i, j))
            out.append(Root.plus(i, j))
        out.append(Root.two(j))
    return out


def root_of_class(c: ArcClass) -> Root:
    if c.kind == "central":
        return Root.two(c.i)
    if c.kind == "positive":
        return Root.minus(c.i, c.j)
    return Root.plus(c.i, c.j)


def class_of_root(r: Root) -> ArcClass:
    if not r.is_positive():
        raise DomainError("negative roots have no arc class")
    if r.kind == "two":
        return ArcClass.central(r.i)
    if r.kind == "minus":
        return ArcClass.positive(r.i, r.j)
    return ArcClass.mixed(r.i, r.j)


def root_entries(r: Root, n: int) -> dict[tuple[int, int], int]:
    """Nonzero entries of the root vector as ``{(row, col): +-1}``."""
    if r.j > n:
        raise DomainError(f"root {r} needs n >= {r.j}")
    i, j = r.i, r.j
    if r.kind == "minus":
        e = {(n + 1 - j, n + 1 - i): 1, (n + i, n + j): -1}
    elif r.kind == "plus":
        e = {(n + 1 - i, n + j): 1, (n + 1 - j, n + i): 1}
    else:
        e = {(n + 1 - i, n + i): 1}
    if r.sign == -1:
        e = {(b, a): v for (a, b), v in e.items()}
    return e


def root_vector(r: Root, n: int) -> Matrix:
    return Matrix.from_entries(2 * n, {k: Fraction(v) for k, v in root_entries(r, n).items()})


def symplectic_form(n: int) -> Matrix:
    N = 2 * n
    return Matrix.from_entries(N, {(a, N + 1 - a): Fraction(1 if a <= n else -1) for a in range(1, N + 1)})


def in_sp(X: Matrix, n: int) -> bool:
    """``X^T J + J X = 0``."""
    J = symplectic_form(n)
    return (X.T() @ J + J @ X).is_zero()


def is_symplectic(G: Matrix, n: int) -> bool:
    J = symplectic_form(n)
    return G.T() @ J @ G == J


def torus_gen(i: int, a, n: int) -> Matrix:
    """``T_i(a)``: ``a`` at index ``n+1-i``, ``1/a`` at ``n+i``."""
    if isinstance(a, int):
        a = Fraction(a)
    if not a:
        raise DomainError("torus coefficient must be nonzero")
    one = a * 0 + 1
    d = [one] * (2 * n)
    d[n - i] = a
    d[n + i - 1] = one / a
    zero = a * 0
    return Matrix([[d[r] if r == c else zero for c in range(2 * n)] for r in range(2 * n)])


def unipotent_gen(r: Root, a, n: int) -> Matrix:
    """``U_alpha(a) = I + a X_alpha`` for a positive root."""
    if not r.is_positive():
        raise DomainError("unipotent generators use positive roots")
    if isinstance(a, int):
        a = Fraction(a)
    zero = a * 0
    one = zero + 1
    rows = [[one if p == q else zero for q in range(2 * n)] for p in range(2 * n)]
    for (p, q), v in root_entries(r, n).items():
        rows[p - 1][q - 1] = rows[p - 1][q - 1] + a * v
    return Matrix(rows)


def x_of(L: SymmetricLinkPattern) -> Matrix:
    """Sum of the root vectors of the arc classes of L."""
    n = L.n
    entries: dict[tuple[int, int], Fraction] = {}
    for c in L.classes:
        for k, v in root_entries(root_of_class(c), n).items():
            entries[k] = Fraction(v)
    return Matrix.from_entries(2 * n, entries)


def y_embedding(L: SymmetricLinkPattern) -> Matrix:
    """Type-A picture: ``E_{s',t'}`` with the sign of the symplectic root vector.

    Every arc ``<s,t>`` contributes at ``(s', t')``; the only negative sign is
    on the right arc ``<i,j>`` of a positive pair (the ``-Y_{(n+i,n+j)}`` term).
    """
    n = L.n
    entries = {}
    for a in L.arcs:
        sign = -1 if a.left > 0 else 1
        entries[(to_matrix_index(a.left, n), to_matrix_index(a.right, n))] = Fraction(sign)
    return Matrix.from_entries(2 * n, entries)


def decompose(X: Matrix, n: int) -> dict[Root, object]:
    """Coordinates of an element of the nilradical in the positive root basis."""
    out = {}
    for r in positive_roots(n):
        (p, q), v = next(iter(sorted(root_entries(r, n).items())))
        c = X[p, q] * v
        if c:
            out[r] = c
    rebuilt = combination(out, n, zero=X.rows[0][0] * 0 if X.rows else ZERO)
    if rebuilt != X:
        raise DomainError("matrix is not in the nilradical")
    return out


def combination(coeffs: dict[Root, object], n: int, zero=ZERO) -> Matrix:
    rows = [[zero] * (2 * n) for _ in range(2 * n)]
    for r, c in coeffs.items():
        for (p, q), v in root_entries(r, n).items():
            rows[p - 1][q - 1] = rows[p - 1][q - 1] + c * v
    return Matrix(rows)


# generator descriptors (also the factors of boundary witnesses)

@dataclass(frozen=True)
class Torus:
    i: int
    coeff: object  # scalar or Laurent

    def matrix(self, n: int) -> Matrix:
        return torus_gen(self.i, self.coeff, n)

    def inverse(self) -> Torus:
        c = self.coeff
        if isinstance(c, Laurent):
            if not c.is_monomial():
                raise WitnessError(f"torus coefficient {c} is not invertible")
            return Torus(self.i, c.inverse())
        if not c:
            raise WitnessError("zero torus coefficient")
        return Torus(self.i, 1 / c if not isinstance(c, int) else Fraction(1, c))

    def __str__(self):
        return f"T_{self.i}({_fmt(self.coeff)})"


@dataclass(frozen=True)
class Unipotent:
    root: Root
    coeff: object

    def matrix(self, n: int) -> Matrix:
        return unipotent_gen(self.root, self.coeff, n)

    def inverse(self) -> Unipotent:
        return Unipotent(self.root, -self.coeff)

    def __str__(self):
        return f"U_{{{self.root}}}({_fmt(self.coeff)})"


def _fmt(c) -> str:
    if isinstance(c, Laurent):
        return str(c)
    if isinstance(c, (int, Fraction, GaussQ)):
        return format_scalar(c)
    return str(c)  # sympy value from an irrational square root


Generator = Torus | Unipotent


def product(factors, n: int) -> Matrix:
    """Matrix of ``F1 F2 ... Fk``."""
    out = None
    for f in factors:
        m = f.matrix(n)
        out = m if out is None else out @ m
    return out if out is not None else Matrix.identity(2 * n)


def inverse_product(factors, n: int) -> Matrix:
    """``(F1 ... Fk)^{-1} = Fk^{-1} ... F1^{-1}`` without general inversion."""
    return product([f.inverse() for f in reversed(list(factors))], n)


def conjugate(factors, X: Matrix, n: int) -> Matrix:
    """``B X B^{-1}`` for ``B = F1 ... Fk``."""
    return product(factors, n) @ X @ inverse_product(factors, n)


# the action table on positive root vectors

def table_action(g: Generator, beta: Root) -> dict[Root, object]:
    """Right-hand side of the generator action table as ``{root: coefficient}``.

    ``g`` carries a scalar or Laurent coefficient ``a``; ``beta`` is positive.
    """
    a = g.coeff
    one = a * 0 + 1
    X = {beta: one}
    if isinstance(g, Torus):
        i = g.i
        k, l = beta.i, beta.j
        if beta.kind == "minus":
            if i == l:
                return {beta: a}
            if i == k:
                return {beta: one / a}
            return X
        if beta.kind == "plus":
            return {beta: a} if i in (k, l) else X
        return {beta: a * a} if i == k else X
    r = g.root
    i, j = r.i, r.j
    k, l = beta.i, beta.j
    if r.kind == "minus":
        if beta.kind == "minus":
            if i == l:
                return _add(X, Root.minus(k, j), a)
            if j == k:
                return _add(X, Root.minus(i, l), -a)
            return X
        if beta.kind == "plus":
            if (i, j) == (k, l):
                return _add(X, Root.two(l), 2 * a)
            if i == l and j != k:
                return _add(X, Root.plus(j, k), a)
            if i == k and j != l:
                return _add(X, Root.plus(j, l), a)
            return X
        m = k
        if i == m:
            out = _add(X, Root.plus(j, m), a)
            return _add(out, Root.two(j), a * a)
        return X
    if r.kind == "plus":
        if beta.kind == "minus":
            if (i, j) == (k, l):
                return _add(X, Root.two(l), -2 * a)
            if j == k and i != l:
                return _add(X, Root.plus(l, i), -a)
            if i == k and j != l:
                return _add(X, Root.plus(l, j), -a)
            return X
        return X
    m = i
    if beta.kind == "minus" and m == k:
        return _add(X, Root.plus(k, l), -a)
    return X


def _add(d: dict, r: Root, c) -> dict:
    out = dict(d)
    out[r] = out.get(r, 0) + c
    return out


def iter_generators(n: int, a) -> Iterator[Generator]:
    for i in range(1, n + 1):
        yield Torus(i, a)
    for r in positive_roots(n):
        yield Unipotent(r, a)
