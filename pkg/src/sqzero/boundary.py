"""Boundary of a square-zero Borel orbit: N(L), D(L), C(L) and limit-curve witnesses.

Candidates are produced from the minimal elementary moves on the underlying
type-A pattern (move an end to a fixed point; cross two consecutive arcs;
cross two concentric arcs).  Each move is brought to a canonical orientation
by the mirror symmetry, tagged with its case and turned into symmetric
candidates together with a witness ``B_m``.  Membership in D(L) is decided by
the order and the dimension formula; witnesses are checked by exact
computation over Laurent polynomials in ``m``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator

from .dims import orbit_dim_formula
from .laurent import Laurent, limit
from .linalg import Matrix
from .rank import RankMatrix, closure_set, covers, leq, lt, rank_matrix, symmetrize
from .roots import Root, Torus, Unipotent, inverse_product, product, x_of
from .scalars import GaussQ, format_scalar
from .slp import (
    Arc,
    ArcClass,
    LinkPattern,
    SymmetricLinkPattern,
    enumerate_slp,
    fixed_points,
    format_pattern,
    positive_external_arcs,
)

half = Fraction(1, 2)
I = GaussQ(0, 1)


def mono(c, d: int = 0) -> Laurent:
    """The Laurent monomial ``c * m^d``."""
    return Laurent.monomial(c, d)


# witnesses

@dataclass(frozen=True)
class BoundaryWitness:
    """Ordered factors ``F1 F2 ... Fk`` of ``B_m``; ``B_m`` acts by conjugation."""

    factors: tuple

    def matrix(self, n: int) -> Matrix:
        return product(self._laurent_factors(), n)

    def inverse_matrix(self, n: int) -> Matrix:
        return inverse_product(self._laurent_factors(), n)

    def _laurent_factors(self):
        out = []
        for f in self.factors:
            if isinstance(f, Torus):
                out.append(Torus(f.i, Laurent.coerce(f.coeff)))
            else:
                out.append(Unipotent(f.root, Laurent.coerce(f.coeff)))
        return out

    def max_index(self) -> int:
        return max([f.i for f in self.factors if isinstance(f, Torus)]
                   + [f.root.j for f in self.factors if isinstance(f, Unipotent)] + [0])

    def __str__(self):
        return ".".join(str(f) for f in self.factors) if self.factors else "I"

    def to_json(self) -> list:
        out = []
        for f in self.factors:
            if isinstance(f, Torus):
                out.append({"gen": "T", "i": f.i, "coeff": str(Laurent.coerce(f.coeff))})
            else:
                out.append({"gen": "U", "root": str(f.root), "coeff": str(Laurent.coerce(f.coeff))})
        return out


def T(i: int, c=1, d: int = 0) -> Torus:
    return Torus(i, mono(c, d))


def U(root: Root, c=1, d: int = 0) -> Unipotent:
    return Unipotent(root, mono(c, d))


def W(*factors) -> BoundaryWitness:
    return BoundaryWitness(tuple(factors))


def em(i: int, j: int) -> Root:
    """Root ``e_j - e_i`` (``i < j``)."""
    return Root.minus(i, j)


def ep(i: int, j: int) -> Root:
    return Root.plus(i, j)


def e2(i: int) -> Root:
    return Root.two(i)


def limit_of(L: SymmetricLinkPattern, w: BoundaryWitness) -> Matrix | None:
    """``lim B_m X_L B_m^-1`` or None when a positive power of ``m`` survives."""
    n = L.n
    X = x_of(L).map(Laurent.coerce)
    Y = w.matrix(n) @ X @ w.inverse_matrix(n)
    return limit(Y)


def verify_witness(L: SymmetricLinkPattern, Lp: SymmetricLinkPattern, w: BoundaryWitness) -> bool:
    if w.max_index() > L.n:
        return False
    lim = limit_of(L, w)
    return lim is not None and lim == x_of(Lp)


# pattern helpers

def P(i: int, j: int) -> ArcClass:
    return ArcClass.positive(i, j)


def Mx(i: int, j: int) -> ArcClass:
    return ArcClass.mixed(min(i, j), max(i, j))


def C(i: int) -> ArcClass:
    return ArcClass.central(i)


def change(L: SymmetricLinkPattern, remove: Iterable[ArcClass], add: Iterable[ArcClass]) -> SymmetricLinkPattern:
    return L.with_changes(remove, add)


# N(L)

@dataclass(frozen=True)
class BoundaryElement:
    pattern: SymmetricLinkPattern
    case: str
    witness: BoundaryWitness
    points: tuple = ()
    source: LinkPattern | None = field(default=None, compare=False)
    printed_witness: BoundaryWitness | None = field(default=None, compare=False)  # published coefficients when they differ

    def dim_drop(self, L: SymmetricLinkPattern) -> int:
        return orbit_dim_formula(L) - orbit_dim_formula(self.pattern)

    def report(self, L: SymmetricLinkPattern) -> dict:
        d = {
            "pattern": format_pattern(self.pattern),
            "case": self.case,
            "dim_drop": self.dim_drop(L),
            "witness": self.witness.to_json(),
            "witness_text": str(self.witness),
            "verified": verify_witness(L, self.pattern, self.witness),
        }
        if self.printed_witness is not None:
            d["printed_witness"] = str(self.printed_witness)
            d["printed_witness_verified"] = verify_witness(L, self.pattern, self.printed_witness)
        return d


def n_of(L: SymmetricLinkPattern) -> list[BoundaryElement]:
    """One element per external class: drop a central arc, or replace a pair by ``(-j,j)``."""
    out = []
    for c in sorted(positive_external_arcs(L), key=lambda c: (c.i, c.j)):
        i, j = c.i, c.j
        if c.kind == "central":
            Lp = change(L, [c], [])
            w = W(T(i, 1, -1))
            tag = "N-central"
        elif c.kind == "positive":
            Lp = change(L, [c], [C(j)])
            w = W(T(i, 1, 1), U(ep(i, j), -half))
            tag = "N-positive"
        else:
            Lp = change(L, [c], [C(j)])
            w = W(T(i, 1, -1), U(em(i, j), half))
            tag = "N-mixed"
        out.append(BoundaryElement(Lp, tag, w, (("arc", c.label()),)))
    return out


def pair_drop_condition(L: SymmetricLinkPattern, c: ArcClass) -> bool:
    """Unit-drop condition for a removed pair class: mixed, with every fixed point in [-i, i].

    Central classes are not covered by this condition; their drop comes from
    the dimension formula.
    """
    return c.kind == "mixed" and all(-c.i <= f <= c.i for f in fixed_points(L))


def n_codim1(L: SymmetricLinkPattern) -> list[BoundaryElement]:
    return [e for e in n_of(L) if e.dim_drop(L) == 1]


# elementary moves on the underlying type-A pattern

@dataclass(frozen=True)
class Move:
    kind: str  # "M1L", "M1R", "M2", "M3"
    arcs: tuple
    fixed: int | None = None

    def result(self, L: LinkPattern) -> LinkPattern:
        arcs = set(L.arcs)
        if self.kind == "M1L":
            (a,) = self.arcs
            arcs.remove(a)
            arcs.add(Arc(self.fixed, a.right))
        elif self.kind == "M1R":
            (a,) = self.arcs
            arcs.remove(a)
            arcs.add(Arc(a.left, self.fixed))
        elif self.kind == "M2":
            a, b = self.arcs
            arcs -= {a, b}
            arcs |= {Arc(a.left, b.left), Arc(a.right, b.right)}
        else:
            ext, inn = self.arcs
            arcs -= {ext, inn}
            arcs |= {Arc(ext.left, inn.right), Arc(inn.left, ext.right)}
        return LinkPattern(L.n, arcs)


def minimal_moves(L: LinkPattern) -> list[Move]:
    """All elementary moves satisfying the minimality conditions."""
    arcs = sorted(L.arcs)
    fps = sorted(fixed_points(L))
    out = []
    for a in arcs:
        s, t = a.left, a.right
        left = [f for f in fps if f < s]
        if left:
            l = left[-1]
            if not any(l < b.left < s and t < b.right for b in arcs):
                out.append(Move("M1L", (a,), l))
        right = [f for f in fps if f > t]
        if right:
            r = right[0]
            if not any(b.left < s and t < b.right < r for b in arcs):
                out.append(Move("M1R", (a,), r))
    for a in arcs:
        for b in arcs:
            if a.right < b.left:
                i, j, k, l = a.left, a.right, b.left, b.right
                if any(j <= f <= k for f in fps):
                    continue
                if any((s.left < i and j < s.right < k) or (j < s.left < k and l < s.right) for s in arcs):
                    continue
                out.append(Move("M2", (a, b)))
    for a in arcs:
        for b in arcs:
            if a.left < b.left and b.right < a.right:
                if any(a.left < s.left < b.left and b.right < s.right < a.right for s in arcs):
                    continue
                out.append(Move("M3", (a, b)))
    return out


# the case machine

@dataclass(frozen=True)
class Candidate:
    pattern: SymmetricLinkPattern
    case: str
    witness: BoundaryWitness | None
    points: tuple
    move: Move
    excluded: bool = False  # the case analysis rules it out of D(L)
    printed_witness: BoundaryWitness | None = None


def _cand(L, case, Lp, w, pts, move, excluded=False, printed=None):
    return Candidate(Lp, case, w, tuple(pts.items()), move, excluded, printed)


def classify_move(L: SymmetricLinkPattern, mv: Move) -> list[Candidate]:
    """Case tag and symmetric candidates for a move in canonical orientation.

    Moves whose mirror image is the canonical representative give ``[]``.
    """
    if mv.kind == "M1R":
        (a,) = mv.arcs
        s, t, r = a.left, a.right, mv.fixed
        if r < 0:
            return []
        if s == -t:
            return _case_FC(L, t, r, mv)
        if s > 0:
            return _case_FPb(L, s, t, r, mv)
        if t < 0:
            return _case_FN(L, -t, -s, r, mv)
        if -s < t:
            return _case_FMa(L, -s, t, r, mv)
        return _case_FMb(L, t, -s, r, mv)
    if mv.kind == "M1L":
        (a,) = mv.arcs
        if mv.fixed < 0:
            return []
        return _case_FPa(L, a.left, a.right, mv.fixed, mv)
    if mv.kind == "M2":
        a, b = mv.arcs
        if a.right < -b.left:
            return []
        k, l = b.left, b.right
        s, t = a.left, a.right
        if t == -k:
            return _case_LS(L, k, l, mv)
        if s == -t:
            return _case_LC(L, t, k, l, mv)
        if s > 0:
            return _case_LP(L, s, t, k, l, mv)
        if t < 0:
            return _case_LN(L, -t, -s, k, l, mv)
        if -s < t:
            return _case_LMa(L, -s, t, k, l, mv)
        return _case_LMb(L, t, -s, k, l, mv)
    ext, inn = mv.arcs
    b, c = inn.left, inn.right
    if b < -c:
        return []
    a, d = ext.left, ext.right
    if a == -d:
        l = d
        if b == -c:
            return _case_CS(L, c, l, mv)
        if b > 0:
            return _case_CCP(L, b, c, l, mv)
        return _case_CCM(L, -b, c, l, mv)
    if a > 0:
        return _case_CPP(L, a, b, c, d, mv)
    if -a < d:
        i, l = -a, d
        if b == -c:
            return _case_CMC(L, i, c, l, mv)
        if b > 0:
            return _case_CMPa(L, i, b, c, l, mv)
        return _case_CMMa(L, i, -b, c, l, mv)
    l, i = -a, d
    if b == -c:
        return []
    if b > 0:
        return _case_CMPb(L, i, b, c, l, mv)
    return _case_CMMb(L, i, -b, c, l, mv)


def _fp_right(L, p):
    r = [f for f in fixed_points(L) if f > p]
    return min(r) if r else None


def _case_FC(L, i, r, mv):
    Lp = change(L, [C(i)], [C(r)])
    w = W(T(i, 1, -1), U(em(i, r), 1))
    return [_cand(L, "FC", Lp, w, {"i": i, "r_i": r}, mv)]


def _case_FPa(L, i, j, li, mv):
    Lp = change(L, [P(i, j)], [P(li, j)])
    w = W(T(i, 1, 1), U(em(li, i), -1))
    return [_cand(L, "FPa", Lp, w, {"i": i, "j": j, "l_i": li}, mv)]


def _case_FPb(L, i, j, r, mv):
    pts = {"i": i, "j": j, "r_j": r}
    L1 = change(L, [P(i, j)], [P(i, r)])
    L2 = change(L, [P(i, j)], [C(j), C(r)])
    w = W(T(j, 1, -1), U(em(j, r), 1))
    return [_cand(L, "FPb", L1, w, pts, mv), _cand(L, "FPb", L2, None, pts, mv, excluded=True)]


def _fma_second_witness(i, j, r):
    return W(T(j, I), T(i, 1, -1), U(em(i, j), -1), U(em(j, r), 1), U(em(i, j), half))


def _case_FMa(L, i, j, r, mv):
    pts = {"i": i, "j": j, "r_j": r}
    L1 = change(L, [Mx(i, j)], [Mx(i, r)])
    L2 = change(L, [Mx(i, j)], [C(j), C(r)])
    w1 = W(T(j, 1, -1), U(em(j, r), 1))
    return [_cand(L, "FMa", L1, w1, pts, mv), _cand(L, "FMa", L2, _fma_second_witness(i, j, r), pts, mv)]


def _case_FMb(L, i, j, r, mv):
    pts = {"i": i, "j": j, "r_i": r}
    if r == _fp_right(L, j):
        L2 = change(L, [Mx(i, j)], [C(j), C(r)])
        return [_cand(L, "FMb", L2, _fma_second_witness(i, j, r), pts, mv)]
    Lp = change(L, [Mx(i, j)], [Mx(r, j)])
    w = W(T(i, 1, -1), U(em(i, r), 1))
    return [_cand(L, "FMb", Lp, w, pts, mv)]


def _case_FN(L, i, j, r, mv):
    if r < j:
        Lp = change(L, [P(i, j)], [Mx(r, j)])
    else:
        Lp = change(L, [P(i, j)], [C(j), C(r)])
    return [_cand(L, "FN", Lp, None, {"i": i, "j": j, "r": r}, mv, excluded=True)]


def _case_LS(L, k, l, mv):
    Lp = change(L, [P(k, l)], [Mx(k, l)])
    w = W(T(l, 1, -1), U(e2(k), -1, 1))
    return [_cand(L, "LS", Lp, w, {"k": k, "l": l}, mv)]


def _case_LC(L, i, k, l, mv):
    Lp = change(L, [C(i), P(k, l)], [P(i, l), C(k)])
    w = W(T(k, 1, 1), T(i, 1, -1), U(em(i, k), -1, -1))
    return [_cand(L, "LC", Lp, w, {"i": i, "k": k, "l": l}, mv)]


def _case_LP(L, i, j, k, l, mv):
    pts = {"i": i, "j": j, "k": k, "l": l}
    L1 = change(L, [P(i, j), P(k, l)], [P(i, k), P(j, l)])
    L2 = change(L, [P(i, j), P(k, l)], [C(j), C(k), P(i, l)])
    w = W(T(l, -1, -1), T(i, 1, 1), U(em(j, k), 1, 1))
    return [_cand(L, "LP", L1, w, pts, mv), _cand(L, "LP", L2, None, pts, mv, excluded=True)]


def _lma_second_witness(i, j, k, l):
    return W(T(l, -1, -1), T(j, I), T(i, 1, -1), U(em(i, k), 1), U(em(j, k), 1), U(em(i, j), -half))


def _case_LMa(L, i, j, k, l, mv):
    pts = {"i": i, "j": j, "k": k, "l": l}
    L1 = change(L, [Mx(i, j), P(k, l)], [Mx(i, k), P(j, l)])
    L2 = change(L, [Mx(i, j), P(k, l)], [C(j), C(k), P(i, l)])
    w1 = W(T(k, 1, 1), T(j, -1, -1), U(em(j, k), 1, -1))
    return [_cand(L, "LMa", L1, w1, pts, mv), _cand(L, "LMa", L2, _lma_second_witness(i, j, k, l), pts, mv)]


def _case_LMb(L, i, j, k, l, mv):
    pts = {"i": i, "j": j, "k": k, "l": l}
    if j < k:
        # same pattern as the second LMa candidate, and its witness works
        Lp = change(L, [Mx(i, j), P(k, l)], [C(j), C(k), P(i, l)])
        return [_cand(L, "LMb", Lp, _lma_second_witness(i, j, k, l), pts, mv)]
    Lp = change(L, [Mx(i, j), P(k, l)], [Mx(k, j), P(i, l)])
    w = W(T(l, 1, -1), T(j, -1, -1), U(em(i, k), -1, 1))
    return [_cand(L, "LMb", Lp, w, pts, mv)]


def _case_LN(L, i, j, k, l, mv):
    pts = {"i": i, "j": j, "k": k, "l": l}
    if j < k:
        Lp = change(L, [P(i, j), P(k, l)], [C(j), C(k), P(i, l)])
    else:
        Lp = change(L, [P(i, j), P(k, l)], [Mx(k, j), P(i, l)])
    return [_cand(L, "LN", Lp, None, pts, mv, excluded=True)]


def _case_CS(L, j, l, mv):
    Lp = change(L, [C(l), C(j)], [Mx(j, l)])
    w = W(T(l, -I, 1), T(j, 1, -1), U(em(j, l), I))
    return [_cand(L, "CS", Lp, w, {"j": j, "l": l}, mv)]


def _case_CCP(L, j, k, l, mv):
    Lp = change(L, [C(l), P(j, k)], [C(k), P(j, l)])
    w = W(T(l, 1, 1), T(j, 1, 1), U(ep(j, l), half), U(ep(j, k), -half), U(em(k, l), 1))
    return [_cand(L, "CCP", Lp, w, {"j": j, "k": k, "l": l}, mv)]


def _case_CCM(L, j, k, l, mv):
    Lp = change(L, [C(l), Mx(j, k)], [C(k), Mx(j, l)])
    w = W(T(l, 1, 1), T(j, 1, -1), U(em(j, l), -half), U(em(j, k), half), U(em(k, l), 1))
    return [_cand(L, "CCM", Lp, w, {"j": j, "k": k, "l": l}, mv)]


def _case_CPP(L, i, j, k, l, mv):
    Lp = change(L, [P(i, l), P(j, k)], [P(i, k), P(j, l)])
    w = W(T(l, -1, 1), T(j, 1, 1), U(em(i, j), -1), U(em(k, l), -1))
    return [_cand(L, "CPP", Lp, w, {"i": i, "j": j, "k": k, "l": l}, mv)]


def _case_CMC(L, i, j, l, mv):
    Lp = change(L, [Mx(i, l), C(j)], [Mx(j, l), C(i)])
    printed = W(T(l, -1, 1), T(j, 1, -1), U(em(j, i), half), U(em(i, l), -2), U(em(j, i), half))
    w = W(T(l, -1, 1), T(j, 1, -1), U(em(j, i), -1), U(em(i, l), -half), U(em(j, i), 2))
    return [_cand(L, "CMC", Lp, w, {"i": i, "j": j, "l": l}, mv, printed=printed)]


def _m3ii(L, i, j, k, l):
    """Labels for a positive pair (i,j) nested under the mixed pair (k,l), i<j<k<l."""
    Lp = change(L, [P(i, j), Mx(k, l)], [P(i, l), C(j), C(k)])
    w = W(
        T(k, I), T(l, 1, 1), T(i, 1, 1),
        U(em(j, l), 1), U(em(j, k), 1), U(em(k, l), half), U(ep(i, l), half), U(ep(i, k), 1), U(ep(i, j), -half),
    )
    return Lp, w


def _m3iii(L, i, j, k, l):
    Lp = change(L, [P(i, j), Mx(k, l)], [P(i, k), Mx(j, l)])
    w = W(T(k, 1, 1), T(j, -1), T(i, 1, 1), U(em(j, k), 1), U(ep(i, l), 1))
    return Lp, w


def _case_CMPa(L, i, j, k, l, mv):
    pts = {"i": i, "j": j, "k": k, "l": l}
    if k > i:
        Lp = change(L, [Mx(i, l), P(j, k)], [P(j, l), Mx(i, k)])
        w = W(T(k, 1, -1), T(i, -1, 1), U(em(k, l), 1), U(ep(i, j), 1))
        return [_cand(L, "CMPa1", Lp, w, pts, mv)]
    Lp, w = _m3ii(L, j, k, i, l)
    return [_cand(L, "CMPa2", Lp, w, pts, mv)]


def _case_CMPb(L, i, j, k, l, mv):
    pts = {"i": i, "j": j, "k": k, "l": l}
    L3, w3 = _m3iii(L, j, k, i, l)
    L2, w2 = _m3ii(L, j, k, i, l)
    return [_cand(L, "CMPb", L3, w3, pts, mv), _cand(L, "CMPb", L2, w2, pts, mv)]


def _cmma2_unipotents(i, j, k, l):
    return (U(em(k, i), 1), U(em(j, l), -1), U(em(j, i), -1), U(em(k, l), 1), U(em(j, k), half), U(em(i, l), half))


def _cmma2_witness(i, j, k, l):
    return W(T(l, 1, 1), T(j, 1, -1), T(i, I), *_cmma2_unipotents(i, j, k, l))


def _cmma2_printed_witness(i, j, k, l):
    return W(T(l, 1, 1), T(j, 1, 1), *_cmma2_unipotents(i, j, k, l))


def _case_CMMa(L, i, j, k, l, mv):
    pts = {"i": i, "j": j, "k": k, "l": l}
    if k > i:
        Lp = change(L, [Mx(i, l), Mx(j, k)], [Mx(j, l), Mx(i, k)])
        w = W(T(k, 1, -1), T(i, -1, 1), U(em(j, i), -1), U(em(k, l), 1))
        return [_cand(L, "CMMa1", Lp, w, pts, mv)]
    Lp = change(L, [Mx(i, l), Mx(j, k)], [Mx(j, l), C(k), C(i)])
    w, printed = _cmma2_witness(i, j, k, l), _cmma2_printed_witness(i, j, k, l)
    return [_cand(L, "CMMa2", Lp, w, pts, mv, printed=printed)]


def _case_CMMb(L, i, j, k, l, mv):
    pts = {"i": i, "j": j, "k": k, "l": l}
    L1 = change(L, [Mx(i, l), Mx(j, k)], [Mx(j, i), Mx(k, l)])
    w1 = W(T(l, -1, 1), T(k, 1, -1), U(em(j, l), -1), U(em(k, i), 1))
    L2 = change(L, [Mx(i, l), Mx(j, k)], [Mx(j, l), C(k), C(i)])
    w2, printed2 = _cmma2_witness(i, j, k, l), _cmma2_printed_witness(i, j, k, l)
    return [_cand(L, "CMMb", L1, w1, pts, mv), _cand(L, "CMMb", L2, w2, pts, mv, printed=printed2)]


def _nested_mixed(L: SymmetricLinkPattern) -> list[Candidate]:
    """The nested family: positive (i,j) under the mixed pair (k,l), i<j<k<l."""
    out = []
    arcs = L.arcs
    moves = set(minimal_moves(L))
    for pc in L.classes:
        if pc.kind != "positive":
            continue
        for mc in L.classes:
            if mc.kind != "mixed" or mc.i <= pc.j:
                continue
            i, j, k, l = pc.i, pc.j, mc.i, mc.j
            pts = {"i": i, "j": j, "k": k, "l": l}
            m2 = Move("M2", (Arc(-j, -i), Arc(i, j)))
            if m2 in moves:
                Lp = change(L, [P(i, j)], [Mx(i, j)])
                printed = W(T(j, 1, 1), U(e2(j), -1, -1))
                out.append(_cand(L, "M2I", Lp, W(T(i, 1, 1), U(e2(i), -1, -1)), pts, m2, printed=printed))
            m3 = Move("M3", (Arc(-k, l), Arc(i, j)))
            if m3 in moves:
                Lp, w = _m3ii(L, i, j, k, l)
                out.append(_cand(L, "M3II", Lp, w, pts, m3))
            m3b = Move("M3", (Arc(-l, k), Arc(i, j)))
            if m3b in moves:
                Lp, w = _m3iii(L, i, j, k, l)
                out.append(_cand(L, "M3III", Lp, w, pts, m3b))
    return out


@lru_cache(maxsize=None)
def d_candidates(L: SymmetricLinkPattern) -> tuple[Candidate, ...]:
    """Every tagged candidate of the case machine, before filtering."""
    out = []
    for mv in minimal_moves(L):
        out.extend(classify_move(L, mv))
    out.extend(_nested_mixed(L))
    return tuple(out)


@lru_cache(maxsize=None)
def d_of(L: SymmetricLinkPattern) -> tuple[BoundaryElement, ...]:
    """Same-arc-count codimension-one boundary patterns with case tag and witness.

    A candidate is kept when the case analysis does not exclude it, it lies
    strictly below L and the dimension drops by exactly one.  Several cases
    may give the same pattern; the first one whose witness verifies is
    reported.
    """
    dL = orbit_dim_formula(L)
    groups: dict[SymmetricLinkPattern, list[Candidate]] = {}
    for c in d_candidates(L):
        if c.excluded:
            continue
        if c.pattern not in groups:
            if not lt(c.pattern, L) or dL - orbit_dim_formula(c.pattern) != 1:
                continue
            groups[c.pattern] = []
        groups[c.pattern].append(c)
    out = []
    for Lp, cs in groups.items():
        good = [c for c in cs if c.witness is not None and verify_witness(L, Lp, c.witness)]
        c = (good or cs)[0]
        out.append(BoundaryElement(Lp, c.case, c.witness, c.points, c.move.result(L), c.printed_witness))
    return tuple(sorted(out, key=lambda e: e.pattern.key))


def c_of(L: SymmetricLinkPattern) -> frozenset[SymmetricLinkPattern]:
    return frozenset(e.pattern for e in d_of(L)) | frozenset(e.pattern for e in n_codim1(L))


def descend_closure(L: SymmetricLinkPattern) -> frozenset[SymmetricLinkPattern]:
    """Everything reachable from L by repeatedly taking codimension-one boundary components."""
    seen = {L}
    todo = [L]
    while todo:
        P_ = todo.pop()
        for Q in c_of(P_):
            if Q not in seen:
                seen.add(Q)
                todo.append(Q)
    return frozenset(seen)


# generic symmetrization machine, used as an independent check of the cases

@lru_cache(maxsize=None)
def _by_arc_count(n: int, k: int) -> tuple[SymmetricLinkPattern, ...]:
    return tuple(enumerate_slp(n, k))


def maximal_below_matrix(R: RankMatrix, n: int, k: int) -> frozenset[SymmetricLinkPattern]:
    """Maximal symmetric patterns with k arcs whose rank matrix is below R."""
    below = [P_ for P_ in _by_arc_count(n, k) if rank_matrix(P_) <= R]
    return frozenset(P_ for P_ in below if not any(Q != P_ and leq(P_, Q) for Q in below))


def generic_candidates(L: SymmetricLinkPattern) -> dict[Move, frozenset[SymmetricLinkPattern]]:
    """For every minimal move, the maximal symmetric patterns under the symmetrized rank matrix."""
    k = len(L.arcs)
    return {mv: maximal_below_matrix(symmetrize(rank_matrix(mv.result(L))), L.n, k) for mv in minimal_moves(L)}


def report(L: SymmetricLinkPattern) -> dict:
    """Boundary report: N(L), D(L) and C(L) with witnesses and verification flags."""
    return {
        "pattern": format_pattern(L),
        "dim": orbit_dim_formula(L),
        "N": [e.report(L) for e in n_of(L)],
        "D": [e.report(L) for e in d_of(L)],
        "C": sorted(format_pattern(P_) for P_ in c_of(L)),
    }
