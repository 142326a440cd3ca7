"""Two-column standard domino tableaux and the orbital varieties they label.

A tableau stores one placement per label: ``V1`` (vertical, first column),
``V2`` (vertical, second column) or ``H`` (horizontal).  Standardness is
checked by inserting dominoes in label order and keeping the column heights
a Young diagram.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .boundary import n_of
from .dims import half_dim, orbit_dim_formula
from .errors import DomainError, ParseError, PreconditionError
from .linalg import Matrix
from .rank import closure_set, leq, lt
from .roots import Root, positive_roots, x_of
from .slp import (
    Arc,
    ArcClass,
    SymmetricLinkPattern,
    enumerate_slp,
    fixed_points,
    format_pattern,
    is_maximal,
    positive_external_arcs,
    total_bridges,
)

V1, V2, H = "V1", "V2", "H"
PLACEMENTS = (V1, V2, H)


@dataclass(frozen=True)
class TwoColumnSDT:
    n: int
    placements: tuple[str, ...]  # placements[i - 1] is the placement of domino i

    def __post_init__(self):
        if len(self.placements) != self.n:
            raise DomainError(f"expected {self.n} placements, got {len(self.placements)}")
        c1 = c2 = 0
        for label, p in enumerate(self.placements, 1):
            if p == V1:
                c1 += 2
            elif p == V2:
                if c2 + 2 > c1:
                    raise DomainError(f"domino {label} in the second column is not standard")
                c2 += 2
            elif p == H:
                if c1 != c2:
                    raise DomainError(f"horizontal domino {label} is not standard")
                c1 += 1
                c2 += 1
            else:
                raise DomainError(f"unknown placement {p!r}")

    @classmethod
    def from_map(cls, n: int, entries: dict[int, str]) -> TwoColumnSDT:
        return cls(n, tuple(entries.get(i, V1) for i in range(1, n + 1)))

    def placement(self, label: int) -> str:
        return self.placements[label - 1]

    def labels(self, p: str) -> list[int]:
        return [i for i, q in enumerate(self.placements, 1) if q == p]

    @property
    def t2(self) -> list[int]:
        return [i for i, q in enumerate(self.placements, 1) if q != V1]

    @property
    def t1(self) -> list[int]:
        return self.labels(V1)

    @property
    def k(self) -> int:
        return 2 * len(self.labels(V2)) + len(self.labels(H))

    @property
    def shape(self) -> tuple[int, int]:
        """Column heights (first, second)."""
        return 2 * self.n - self.k, self.k

    @property
    def h_p(self) -> int:
        hs = self.labels(H)
        return hs[-1] if hs else 0

    def __str__(self):
        return format_sdt(self)


_SDT = re.compile(r"^\s*n\s*=\s*(\d+)\s*;\s*col2\s*=\s*\[([^\]]*)\]\s*;?\s*$")


def parse_sdt(text: str) -> TwoColumnSDT:
    """Parse ``n=7; col2=[2,3h,4h,7]``; labels not listed are vertical in the first column."""
    m = _SDT.match(text)
    if not m:
        raise ParseError(f"cannot parse tableau {text!r}")
    n = int(m.group(1))
    entries: dict[int, str] = {}
    body = m.group(2).strip()
    for tok in filter(None, (t.strip() for t in body.split(","))):
        tm = re.fullmatch(r"(\d+)(h?)", tok)
        if not tm:
            raise ParseError(f"bad tableau entry {tok!r}")
        label = int(tm.group(1))
        if not 1 <= label <= n or label in entries:
            raise ParseError(f"bad or repeated label {label}")
        entries[label] = H if tm.group(2) else V2
    return TwoColumnSDT.from_map(n, entries)


def format_sdt(T: TwoColumnSDT) -> str:
    body = ",".join(f"{i}h" if T.placement(i) == H else str(i) for i in T.t2)
    return f"n={T.n}; col2=[{body}]"


def sdt_to_json(T: TwoColumnSDT) -> dict:
    return {"n": T.n, "placements": {str(i): p for i, p in enumerate(T.placements, 1)}}


def sdt_from_json(d: dict) -> TwoColumnSDT:
    return TwoColumnSDT.from_map(int(d["n"]), {int(k): v for k, v in d["placements"].items()})


def enumerate_sdt(n: int, k: int | None = None) -> list[TwoColumnSDT]:
    out = []

    def grow(prefix, c1, c2):
        if len(prefix) == n:
            T = TwoColumnSDT(n, tuple(prefix))
            if k is None or T.k == k:
                out.append(T)
            return
        grow(prefix + [V1], c1 + 2, c2)
        if c2 + 2 <= c1:
            grow(prefix + [V2], c1, c2 + 2)
        if c1 == c2:
            grow(prefix + [H], c1 + 1, c2 + 1)

    grow([], 0, 0)
    return out


def render_sdt(T: TwoColumnSDT) -> str:
    """Box picture, one text row per cell row."""
    c1, c2 = T.shape
    col1: list[str] = []
    col2: list[str] = []
    for i, p in enumerate(T.placements, 1):
        if p == V1:
            col1 += [str(i), "|"]
        elif p == V2:
            col2 += [str(i), "|"]
        else:
            col1.append(f"{i}=")
            col2.append(f"={i}")
    w = max([len(s) for s in col1 + col2] + [1])
    rows = []
    for r in range(c1):
        left = col1[r].center(w)
        right = col2[r].center(w) if r < c2 else ""
        rows.append(f"[{left}]" + (f"[{right}]" if r < c2 else ""))
    return "\n".join(rows)


# Steinberg word and subspace

def w_of(T: TwoColumnSDT) -> list[int]:
    return list(reversed(T.t2)) + [-a for a in T.t1]


def steinberg_subspace(T: TwoColumnSDT) -> frozenset[Root]:
    t1, t2 = set(T.t1), set(T.t2)
    out = set()
    for j in t2:
        out.add(Root.two(j))
        for i in t1:
            if i < j:
                out.add(Root.minus(i, j))
        for i in t2:
            if i < j:
                out.add(Root.plus(i, j))
    return frozenset(out)


def word_subspace(w: Sequence[int]) -> frozenset[Root]:
    """Positive roots alpha with ``w^-1(alpha)`` positive, straight from the signed permutation."""
    n = len(w)
    if sorted(abs(a) for a in w) != list(range(1, n + 1)):
        raise DomainError(f"{list(w)} is not a signed permutation")
    # w sends e_p to sign(a_p) e_|a_p|; w^-1 sends e_|a_p| to sign(a_p) e_p
    inv = {abs(a): (p, 1 if a > 0 else -1) for p, a in enumerate(w, 1)}

    def image(vec: dict[int, int]) -> dict[int, int]:
        out: dict[int, int] = {}
        for q, c in vec.items():
            p, s = inv[q]
            out[p] = out.get(p, 0) + s * c
        return {p: c for p, c in out.items() if c}

    def positive(vec: dict[int, int]) -> bool:
        # positive roots in this basis: e_j - e_i, e_j + e_i (i < j), 2e_i
        top = max(vec)
        return vec[top] > 0

    out = set()
    for r in positive_roots(n):
        if r.kind == "two":
            vec = {r.i: 2}
        elif r.kind == "minus":
            vec = {r.j: 1, r.i: -1}
        else:
            vec = {r.j: 1, r.i: 1}
        if positive(image(vec)):
            out.add(r)
    return frozenset(out)


# tableaux and maximal link patterns

def lp_of(T: TwoColumnSDT) -> SymmetricLinkPattern:
    """Connect each entry of the second column, in increasing order, to the closest free vertex on its left."""
    n = T.n
    used: set[int] = set()
    classes = []
    for b in T.t2:
        p = b - 1
        while p >= -n and (p == 0 or p in used):
            p -= 1
        if p < -n:
            raise DomainError(f"no free vertex left of {b}")
        a = Arc(p, b)
        c = ArcClass.of(a)
        classes.append(c)
        for x in c.arcs():
            used.update((x.left, x.right))
    return SymmetricLinkPattern.from_classes(n, classes)


def sdt_of(L: SymmetricLinkPattern) -> TwoColumnSDT:
    if not is_maximal(L):
        raise PreconditionError(f"{format_pattern(L)} is not maximal")
    entries = {}
    for c in L.classes:
        if c.kind == "central":
            entries[c.i] = H
        elif c.kind == "positive":
            entries[c.j] = V2
        else:
            raise PreconditionError("maximal patterns have no mixed pairs")
    return TwoColumnSDT.from_map(L.n, entries)


def dense_orbit_rep(T: TwoColumnSDT) -> Matrix:
    return x_of(lp_of(T))


def external_pairs_formula(T: TwoColumnSDT) -> frozenset[ArcClass]:
    """E'(L_T) read off the tableau: the top horizontal domino plus the qualifying vertical ones."""
    L = lp_of(T)
    hp = T.h_p
    out = set()
    if hp:
        out.add(ArcClass.central(hp))
    bs = T.labels(V2)
    r = len(bs)
    partner = L.partner
    for l in range(1, r + 1):
        bl = bs[l - 1]
        if bl <= hp:
            continue
        if l == r or all(bs[s - 1] - bl >= 2 * (s - l) for s in range(l + 1, r + 1)):
            out.add(ArcClass.positive(partner[bl], bl))
    return frozenset(out)


# closure moves

def closure_move(T: TwoColumnSDT, *labels: int) -> TwoColumnSDT:
    """Put every listed domino vertically into the first column.

    A single vertical label must exceed the top horizontal entry and a single
    horizontal label must be the top horizontal entry.  Several labels are
    moved together; the result must again be standard.
    """
    if not labels:
        raise PreconditionError("no domino to move")
    if len(set(labels)) != len(labels):
        raise PreconditionError("repeated label")
    if len(labels) == 1:
        (b,) = labels
        p = T.placement(b)
        if p == V2 and b <= T.h_p:
            raise PreconditionError(f"vertical domino {b} is not above the top horizontal domino {T.h_p}")
        if p == H and b != T.h_p:
            raise PreconditionError(f"horizontal domino {b} is not the top one")
    entries = dict(enumerate(T.placements, 1))
    for b in labels:
        if not 1 <= b <= T.n or entries[b] == V1:
            raise PreconditionError(f"domino {b} is not in the second column")
        entries[b] = V1
    try:
        return TwoColumnSDT.from_map(T.n, entries)
    except DomainError as e:
        raise PreconditionError(f"moving {labels} breaks standardness: {e}") from None


def move_vertical(T: TwoColumnSDT, b: int) -> TwoColumnSDT:
    if T.placement(b) != V2:
        raise PreconditionError(f"domino {b} is not vertical in the second column")
    return closure_move(T, b)


def move_horizontal(T: TwoColumnSDT) -> TwoColumnSDT:
    if not T.h_p:
        raise PreconditionError("no horizontal domino")
    return closure_move(T, T.h_p)


# closure intersections

@dataclass(frozen=True)
class ClosureComponent:
    kind: str  # "variety" or "closure"
    tableau: TwoColumnSDT | None
    pattern: SymmetricLinkPattern
    k: int  # the ambient orbit is (2^k, 1^{2n-2k})

    @classmethod
    def variety(cls, T: TwoColumnSDT) -> ClosureComponent:
        return cls("variety", T, lp_of(T), T.k)

    @classmethod
    def closure(cls, L: SymmetricLinkPattern) -> ClosureComponent:
        return cls("closure", None, L, len(L.arcs))

    @classmethod
    def of_pattern(cls, L: SymmetricLinkPattern) -> ClosureComponent:
        return cls.variety(sdt_of(L)) if is_maximal(L) else cls.closure(L)

    def __str__(self):
        if self.kind == "variety":
            return f"V[{format_sdt(self.tableau)}]"
        return f"B[{format_pattern(self.pattern)}]"


@dataclass(frozen=True)
class ClosureIntersection:
    components: tuple[ClosureComponent, ...]
    irreducible: bool
    contains_orbital_variety: bool
    is_orbital_variety: bool | None
    is_union_of_orbital_varieties: bool | None


def variety_closure_intersection(T: TwoColumnSDT, drop: int) -> ClosureIntersection:
    """Components of the closure of V_T inside the orbit with ``drop`` fewer arcs, from the tableau."""
    if drop not in (1, 2):
        raise DomainError("drop must be 1 or 2")
    if T.k < drop:
        raise PreconditionError(f"tableau has k={T.k} < {drop}")
    L = lp_of(T)
    E = external_pairs_formula(T)
    pairs = sorted((c for c in E if c.kind == "positive"), key=lambda c: c.j)
    hp = T.h_p
    comps: list[ClosureComponent] = []
    if drop == 1:
        if hp:
            comps.append(ClosureComponent.variety(closure_move(T, hp)))
        for c in pairs:
            comps.append(ClosureComponent.of_pattern(L.with_changes([c], [ArcClass.central(c.j)])))
        bs = T.labels(V2)
        return ClosureIntersection(
            tuple(comps),
            irreducible=len(E) == 1,
            contains_orbital_variety=bool(hp),
            is_orbital_variety=bool(hp) and (not bs or bs[-1] < hp),
            is_union_of_orbital_varieties=None,
        )
    for c in pairs:
        comps.append(ClosureComponent.variety(closure_move(T, c.j)))
    union = not hp
    if hp:
        Th = closure_move(T, hp)
        for comp in variety_closure_intersection(Th, 1).components if Th.k >= 1 else ():
            if comp not in comps:
                comps.append(comp)
        union = E == {ArcClass.central(hp)} and external_pairs_formula(Th) == {ArcClass.central(hp - 1)}
    return ClosureIntersection(
        tuple(comps),
        irreducible=len(comps) == 1,
        contains_orbital_variety=any(c.kind == "variety" for c in comps),
        is_orbital_variety=None,
        is_union_of_orbital_varieties=union,
    )


def closure_decomposition(T: TwoColumnSDT, k: int) -> tuple[ClosureComponent, ...]:
    """Components of the closure of V_T in the orbit with k arcs, from the order on patterns.

    They are the closures of the maximal patterns with k arcs below L_T.
    """
    L = lp_of(T)
    below = [P for P in closure_set(L) if len(P.arcs) == k]
    tops = [P for P in below if not any(Q != P and leq(P, Q) for Q in below)]
    comps = [ClosureComponent.of_pattern(P) for P in tops]
    return tuple(sorted(comps, key=_component_key))


def _component_key(c: ClosureComponent):
    return (0 if c.kind == "variety" else 1, c.pattern.key)


# codimension-one intersections

@dataclass(frozen=True)
class Codim1Analysis:
    case: str  # "i-a", "i-b", "ii", "iii-a", "iii-b"
    core: SymmetricLinkPattern  # the maximal part L0
    maxima: tuple[SymmetricLinkPattern, ...]
    intersection_is_orbit_closure: bool


def codim1_case(L: SymmetricLinkPattern) -> tuple[str, SymmetricLinkPattern, tuple[SymmetricLinkPattern, ...]]:
    """Which configuration L is in, its maximal part, and the predicted maximal patterns above it."""
    if orbit_dim_formula(L) != half_dim(len(L.arcs), L.n) - 1:
        raise PreconditionError(f"{format_pattern(L)} is not of codimension 1 in its orbit")
    fp = sorted(f for f in fixed_points(L) if f > 0)
    C, P = ArcClass.central, ArcClass.positive
    if total_bridges(L) == 1:
        for c in L.classes:
            inside = [f for f in fp if c.kind != "mixed" and _under(c, f)]
            if not inside:
                continue
            (i,) = inside
            if c.kind == "central":
                L0 = L.with_changes([c], [])
                return "i-a", L0, (L0.with_changes([], [C(i)]),)
            j, k = c.i, c.j
            L0 = L.with_changes([c], [])
            return "i-b", L0, (L0.with_changes([], [P(i, k)]), L0.with_changes([], [P(j, i)]))
    for c in L.classes:
        if c.kind == "mixed":
            i, j = c.i, c.j
            L0 = L.with_changes([c], [])
            return "ii", L0, (L0.with_changes([], [P(i, j)]), L0.with_changes([], [C(i), C(j)]))
    classes = L.classes
    for a in classes:
        for b in classes:
            if a == b or not _cross(a, b):
                continue
            L0 = L.with_changes([a, b], [])
            if a.kind == "positive" and b.kind == "positive" and a.i < b.i:
                i, k, j, l = a.i, a.j, b.i, b.j
                return "iii-a", L0, (
                    L0.with_changes([], [P(i, l), P(j, k)]),
                    L0.with_changes([], [P(i, j), P(k, l)]),
                )
            if a.kind == "central" and b.kind == "positive":
                j, i, k = a.i, b.i, b.j
                return "iii-b", L0, (
                    L0.with_changes([], [C(i), P(j, k)]),
                    L0.with_changes([], [P(i, j), C(k)]),
                )
    raise DomainError(f"{format_pattern(L)} matches no codimension-1 configuration")


def _under(c: ArcClass, f: int) -> bool:
    """Positive point f lies under the nonnegative-side arc of the class."""
    if c.kind == "central":
        return f < c.i
    return c.i < f < c.j


def _cross(a: ArcClass, b: ArcClass) -> bool:
    """Some arc of ``a`` crosses some arc of ``b`` on the nonnegative side."""
    for x in a.arcs():
        for y in b.arcs():
            if x.left < y.left < x.right < y.right and y.left >= -x.right:
                return True
    return False


@lru_cache(maxsize=None)
def _layer(n: int, k: int) -> tuple[SymmetricLinkPattern, ...]:
    return tuple(enumerate_slp(n, k))


def maximal_above(L: SymmetricLinkPattern) -> frozenset[SymmetricLinkPattern]:
    """Maximal patterns with the same arc count whose closure contains L."""
    return frozenset(M for M in _layer(L.n, len(L.arcs)) if is_maximal(M) and leq(L, M))


def common_lower_bounds(L1: SymmetricLinkPattern, L2: SymmetricLinkPattern) -> frozenset[SymmetricLinkPattern]:
    k = len(L1.arcs)
    return frozenset(P for P in _layer(L1.n, k) if leq(P, L1) and leq(P, L2))


def maximal_elements(patterns: Iterable[SymmetricLinkPattern]) -> frozenset[SymmetricLinkPattern]:
    ps = list(patterns)
    return frozenset(P for P in ps if not any(Q != P and lt(P, Q) for Q in ps))


def codim1_intersection_analysis(L: SymmetricLinkPattern) -> Codim1Analysis:
    case, L0, maxima = codim1_case(L)
    if len(maxima) == 1:
        ok = True
    else:
        ok = maximal_elements(common_lower_bounds(*maxima)) == {L}
    return Codim1Analysis(case, L0, maxima, ok)


def codim1_pairs(n: int, k: int) -> list[tuple[SymmetricLinkPattern, SymmetricLinkPattern, frozenset]]:
    """Pairs of maximal patterns whose common lower bounds reach codimension 1."""
    tops = [M for M in _layer(n, k) if is_maximal(M)]
    out = []
    target = half_dim(k, n) - 1
    for a in range(len(tops)):
        for b in range(a + 1, len(tops)):
            low = common_lower_bounds(tops[a], tops[b])
            if low and max(orbit_dim_formula(P) for P in low) == target:
                out.append((tops[a], tops[b], maximal_elements(low)))
    return out


# iterated intersections with smaller orbits

def boundary_step(comp: ClosureComponent) -> list[ClosureComponent]:
    """Pieces one arc lower: the tableau rule for varieties, N(L) for closure parts."""
    if comp.kind == "variety":
        return list(variety_closure_intersection(comp.tableau, 1).components)
    return [ClosureComponent.of_pattern(e.pattern) for e in n_of(comp.pattern)]


def closure_chain(T: TwoColumnSDT) -> list[tuple[ClosureComponent, ...]]:
    """Component lists for arc counts k-1, k-2, ..., 1, each obtained from the previous one."""
    lines = []
    current = [ClosureComponent.variety(T)]
    for _ in range(T.k - 1):
        nxt: list[ClosureComponent] = []
        for comp in current:
            for piece in boundary_step(comp):
                if piece not in nxt:
                    nxt.append(piece)
        lines.append(tuple(nxt))
        current = nxt
    return lines


def union_patterns(comps: Iterable[ClosureComponent], k: int) -> frozenset[SymmetricLinkPattern]:
    """Patterns with k arcs lying in the union of the component closures."""
    out: set[SymmetricLinkPattern] = set()
    for c in comps:
        out |= {P for P in closure_set(c.pattern) if len(P.arcs) == k}
    return frozenset(out)
