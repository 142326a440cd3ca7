"""Classification of square-zero elements of the nilradical up to Borel conjugation.

``classify`` reads the pattern off interval ranks: the rank of the principal
submatrix on an index interval is invariant under upper-triangular
conjugation and equals the rank-matrix entry of the pattern.

``normalize`` follows the induction on n: normalize the middle block, clear
the first row against the arcs already found, then finish with one of four
cases depending on which coordinates of the first row survive.  Every
coefficient is read off the current matrix, so the witness is checked by
construction rather than trusted.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DomainError
from .linalg import Matrix
from .rank import from_matrix_index, to_matrix_index
from .roots import Root, Torus, Unipotent, in_sp, x_of
from .scalars import GaussQ, exact_sqrt
from .slp import Arc, ArcClass, SymmetricLinkPattern


def check_square_zero(X: Matrix) -> int:
    """Validate the domain and return n."""
    N = X.nrows
    if N == 0 or N % 2 or X.ncols != N:
        raise DomainError("expected a 2n x 2n matrix")
    n = N // 2
    if not X.is_upper_triangular(strict=True):
        raise DomainError("matrix is not strictly upper triangular")
    if not in_sp(X, n):
        raise DomainError("matrix is not in the symplectic algebra")
    if not (X @ X).is_zero():
        raise DomainError("matrix does not square to zero")
    return n


def interval_ranks(X: Matrix) -> dict[tuple[int, int], int]:
    N = X.nrows
    return {(a, b): X.submatrix(a, b).rank() for a in range(1, N + 1) for b in range(a + 1, N + 1)}


def classify(X: Matrix) -> SymmetricLinkPattern:
    n = check_square_zero(X)
    N = 2 * n
    R = interval_ranks(X)

    def r(a, b):
        return R.get((a, b), 0) if a < b else 0

    arcs = []
    for a in range(1, N + 1):
        for b in range(a + 1, N + 1):
            if r(a, b) - r(a + 1, b) - r(a, b - 1) + r(a + 1, b - 1) == 1:
                arcs.append(Arc(from_matrix_index(a, n), from_matrix_index(b, n)))
    return SymmetricLinkPattern(n, arcs)


@dataclass(frozen=True)
class NormalizationResult:
    pattern: SymmetricLinkPattern
    witness: Matrix
    steps: tuple = field(default=(), compare=False)


class _State:
    """Current matrix ``W X W^-1`` together with ``W`` and ``W^-1``."""

    def __init__(self, X: Matrix, n: int, W: Matrix, Winv: Matrix):
        self.n = n
        self.X = X
        self.W = W
        self.Winv = Winv
        self.steps: list = []

    def apply(self, g):
        n = self.n
        G = g.matrix(n)
        Gi = g.inverse().matrix(n)
        self.X = G @ self.X @ Gi
        self.W = G @ self.W
        self.Winv = self.Winv @ Gi
        self.steps.append(g)


def _embed(M: Matrix) -> Matrix:
    """Block ``diag(1, M, 1)``."""
    N = M.nrows + 2
    rows = [[Fraction(0)] * N for _ in range(N)]
    rows[0][0] = Fraction(1)
    rows[N - 1][N - 1] = Fraction(1)
    for i, r in enumerate(M.rows):
        for j, v in enumerate(r):
            rows[i + 1][j + 1] = v
    return Matrix(rows)


def _middle(X: Matrix) -> Matrix:
    return X.submatrix(2, X.nrows - 1)


def _sqrt(q, allow_irrational: bool):
    if isinstance(q, GaussQ) and q.is_real():
        q = q.re
    r = exact_sqrt(q) if isinstance(q, Fraction) else None
    if r is not None:
        return r
    if isinstance(q, GaussQ) or not allow_irrational:
        raise DomainError(f"square root of {q} is not a Gaussian rational; pass allow_irrational=True")
    import sympy

    return sympy.sqrt(sympy.nsimplify(q))


def normalize(X: Matrix, allow_irrational: bool = False) -> NormalizationResult:
    """Return ``L`` and an upper-triangular symplectic ``W`` with ``W X W^-1 = X_L``.

    The principal square root is used in the case where only the top corner
    survives; it stays in Q(i) when that corner is plus or minus a rational
    square.  Other inputs need ``allow_irrational=True``, which switches the
    remaining arithmetic to sympy.
    """
    n = check_square_zero(X)
    pattern, W, Winv, steps = _normalize(X, n, allow_irrational)
    return NormalizationResult(pattern, W, tuple(steps))


def _normalize(X: Matrix, n: int, allow_irrational: bool):
    N = 2 * n
    if n == 1:
        sub_pattern = None
        W = Matrix.identity(2)
        Winv = Matrix.identity(2)
        sub_steps: list = []
    else:
        sub_pattern, Wh, Whinv, sub_steps = _normalize(_middle(X), n - 1, allow_irrational)
        W = _embed(Wh)
        Winv = _embed(Whinv)
    st = _State(W @ X @ Winv, n, W, Winv)
    st.steps.extend(sub_steps)
    sub_arcs = sub_pattern.arcs if sub_pattern is not None else frozenset()
    sub_classes = sub_pattern.classes if sub_pattern is not None else ()

    def row1(p: int):
        return st.X[1, to_matrix_index(p, n)]

    # clear the first row at right ends of existing arcs
    for a in sorted(sub_arcs):
        v = row1(a.right)
        if not v:
            continue
        eps = st.X[to_matrix_index(a.left, n), to_matrix_index(a.right, n)]
        s = a.left
        root = Root.minus(-s, n) if s < 0 else Root.plus(s, n)
        st.apply(Unipotent(root, -v / eps))
    for a in sub_arcs:
        for p in (a.left, a.right):
            if row1(p):
                raise AssertionError(f"first row survives at endpoint {p}")

    fixed = [p for p in range(1, n) if all(p not in (a.left, a.right) for a in sub_arcs)]
    f = {i: row1(-i) for i in fixed if row1(-i)}
    g = {i: row1(i) for i in fixed if row1(i)}
    h = st.X[1, N]

    if not f and not g:
        if not h:
            new = None
        else:
            st.apply(Torus(n, 1 / _sqrt(h, allow_irrational)))
            new = ArcClass.central(n)
    elif not f:
        i = min(g)
        st.apply(Torus(i, 1 / g[i]))
        for j in sorted(g):
            if j > i:
                st.apply(Unipotent(Root.minus(i, j), -row1(j)))
        hh = st.X[1, N]
        if hh:
            st.apply(Unipotent(Root.minus(i, n), -hh / 2))
        new = ArcClass.mixed(i, n)
    else:
        j = max(f)
        st.apply(Torus(j, f[j]))
        for i in sorted(f):
            if i < j and row1(-i):
                st.apply(Unipotent(Root.minus(i, j), row1(-i)))
        for i in fixed:
            if i != j and row1(i):
                st.apply(Unipotent(Root.plus(i, j), row1(i)))
        if row1(j):
            st.apply(Unipotent(Root.two(j), row1(j)))
        hh = st.X[1, N]
        if hh:
            st.apply(Unipotent(Root.plus(j, n), hh / 2))
        new = ArcClass.positive(j, n)

    classes = list(sub_classes) + ([new] if new else [])
    pattern = SymmetricLinkPattern.from_classes(n, classes)
    target = x_of(pattern)
    if not _equal(st.X, target):
        raise AssertionError(f"normalization did not reach X_L for {pattern}")
    return pattern, st.W, st.Winv, st.steps


def _equal(A: Matrix, B: Matrix) -> bool:
    if A == B:
        return True
    try:
        import sympy
    except ImportError:  # pragma: no cover
        return False
    return all(sympy.simplify(a - b) == 0 for r, s in zip(A.rows, B.rows) for a, b in zip(r, s))


def verify_normalization(X: Matrix, res: NormalizationResult) -> bool:
    """Check the witness equation ``W X = X_L W`` by exact multiplication."""
    W = res.witness
    n = X.nrows // 2
    if not W.is_upper_triangular():
        return False
    return _equal(W @ X, x_of(res.pattern) @ W)
