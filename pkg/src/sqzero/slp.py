"""Link patterns on the signed points -n..-1, 1..n and their statistics.

An arc is stored left to right as ``Arc(left, right)`` with ``left < right``.
The mirror of ``Arc(s, t)`` is ``Arc(-t, -s)``; a pattern is symmetric when
it is closed under mirroring.  Symmetric arcs come in three classes:

* positive pair ``(i,j)(-i,-j)``, i.e. arcs ``<i,j>`` and ``<-j,-i>``;
* mixed pair ``(i,-j)(-i,j)``, i.e. arcs ``<-j,i>`` and ``<-i,j>``;
* central arc ``(-i,i)``;

always with ``1 <= i < j <= n``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

from .errors import (
    AsymmetryError,
    DomainError,
    DuplicateEndpointError,
    MalformedArcError,
    ParseError,
    PreconditionError,
    SizeError,
)


@dataclass(frozen=True, order=True)
class Arc:
    left: int
    right: int

    def __post_init__(self):
        if self.left == 0 or self.right == 0 or self.left >= self.right:
            raise MalformedArcError(f"bad arc ({self.left},{self.right})")

    def mirror(self) -> Arc:
        return Arc(-self.right, -self.left)

    def contains(self, p: int) -> bool:
        """True if the point lies strictly under the arc."""
        return self.left < p < self.right

    def __str__(self):
        return f"({self.left},{self.right})"


@dataclass(frozen=True, order=True)
class ArcClass:
    """Orbit of an arc under mirroring, labelled by positive data ``i <= j``."""

    i: int
    j: int
    kind: str  # "positive", "mixed" or "central"

    def __post_init__(self):
        if self.kind == "central":
            if self.i != self.j or self.i < 1:
                raise DomainError(f"bad central class {self}")
        elif self.kind in ("positive", "mixed"):
            if not 1 <= self.i < self.j:
                raise DomainError(f"bad {self.kind} class ({self.i},{self.j})")
        else:
            raise DomainError(f"unknown arc class kind {self.kind!r}")

    @classmethod
    def positive(cls, i: int, j: int) -> ArcClass:
        return cls(i, j, "positive")

    @classmethod
    def mixed(cls, i: int, j: int) -> ArcClass:
        return cls(i, j, "mixed")

    @classmethod
    def central(cls, i: int) -> ArcClass:
        return cls(i, i, "central")

    @classmethod
    def of(cls, a: Arc) -> ArcClass:
        s, t = a.left, a.right
        if s == -t:
            return cls.central(t)
        if s > 0:
            return cls.positive(s, t)
        if t < 0:
            return cls.positive(-t, -s)
        return cls.mixed(min(-s, t), max(-s, t))

    def arcs(self) -> tuple[Arc, ...]:
        i, j = self.i, self.j
        if self.kind == "central":
            return (Arc(-i, i),)
        if self.kind == "positive":
            return (Arc(i, j), Arc(-j, -i))
        return (Arc(-j, i), Arc(-i, j))

    def label(self) -> str:
        """Short name in signed notation: ``(i,j)``, ``(i,-j)`` or ``(-i,i)``."""
        i, j = self.i, self.j
        if self.kind == "central":
            return f"({-i},{i})"
        if self.kind == "positive":
            return f"({i},{j})"
        return f"({i},{-j})"

    def text(self) -> str:
        i, j = self.i, self.j
        if self.kind == "central":
            return f"({-i},{i})"
        if self.kind == "positive":
            return f"({i},{j})({-i},{-j})"
        return f"({i},{-j})({-i},{j})"

    def __str__(self):
        return self.label()


def _points(n: int) -> list[int]:
    return list(range(-n, 0)) + list(range(1, n + 1))


class LinkPattern:
    """A partial matching of the 2n signed points."""

    __slots__ = ("n", "arcs", "__dict__")

    def __init__(self, n: int, arcs: Iterable[Arc | tuple[int, int]] = ()):
        if n < 1:
            raise SizeError("n must be positive")
        self.n = n
        out = []
        for a in arcs:
            if not isinstance(a, Arc):
                s, t = a
                a = Arc(min(s, t), max(s, t))
            if abs(a.left) > n or abs(a.right) > n:
                raise MalformedArcError(f"arc {a} out of range for n={n}")
            out.append(a)
        seen: set[int] = set()
        for a in out:
            for p in (a.left, a.right):
                if p in seen:
                    raise DuplicateEndpointError(f"point {p} used twice")
                seen.add(p)
        self.arcs = frozenset(out)

    @cached_property
    def key(self) -> tuple:
        return (self.n, tuple(sorted((a.left, a.right) for a in self.arcs)))

    def __eq__(self, other):
        if not isinstance(other, LinkPattern):
            return NotImplemented
        return self.n == other.n and self.arcs == other.arcs

    def __hash__(self):
        return hash((self.n, self.arcs))

    def __lt__(self, other: LinkPattern):
        return self.key < other.key

    def __len__(self):
        return len(self.arcs)

    def __iter__(self) -> Iterator[Arc]:
        return iter(sorted(self.arcs))

    def __contains__(self, a: Arc):
        return a in self.arcs

    @cached_property
    def partner(self) -> dict[int, int]:
        d = {}
        for a in self.arcs:
            d[a.left] = a.right
            d[a.right] = a.left
        return d

    def is_symmetric(self) -> bool:
        return all(a.mirror() in self.arcs for a in self.arcs)

    def __repr__(self):
        return f"{type(self).__name__}({format_pattern(self)!r})"

    def __str__(self):
        return format_pattern(self)


class SymmetricLinkPattern(LinkPattern):
    """A link pattern closed under the mirror ``p -> -p``."""

    __slots__ = ()

    def __init__(self, n: int, arcs: Iterable[Arc | tuple[int, int]] = ()):
        super().__init__(n, arcs)
        for a in self.arcs:
            if a.mirror() not in self.arcs:
                raise AsymmetryError(f"mirror of {a} missing")

    @classmethod
    def from_classes(cls, n: int, classes: Iterable[ArcClass]) -> SymmetricLinkPattern:
        return cls(n, [a for c in classes for a in c.arcs()])

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> SymmetricLinkPattern:
        """Build from arcs given as point pairs, adding missing mirrors."""
        arcs: set[Arc] = set()
        for s, t in pairs:
            a = Arc(min(s, t), max(s, t))
            arcs.add(a)
            arcs.add(a.mirror())
        return cls(n, arcs)

    @cached_property
    def classes(self) -> tuple[ArcClass, ...]:
        """Arc classes sorted by their smallest label."""
        return tuple(sorted({ArcClass.of(a) for a in self.arcs}, key=lambda c: (c.i, c.j)))

    def with_changes(
        self, remove: Iterable[ArcClass] = (), add: Iterable[ArcClass] = ()
    ) -> SymmetricLinkPattern:
        cs = set(self.classes)
        for c in remove:
            if c not in cs:
                raise PreconditionError(f"{c.text()} not in {self}")
            cs.discard(c)
        return SymmetricLinkPattern.from_classes(self.n, list(cs) + list(add))


SLP = SymmetricLinkPattern


# statistics

def arc_count(L: LinkPattern) -> int:
    return len(L.arcs)


def endpoints(L: LinkPattern) -> frozenset[int]:
    return frozenset(p for a in L.arcs for p in (a.left, a.right))


def fixed_points(L: LinkPattern) -> frozenset[int]:
    return frozenset(_points(L.n)) - endpoints(L)


def positive_endpoints(L: LinkPattern) -> frozenset[int]:
    return frozenset(p for p in endpoints(L) if p > 0)


def positive_fixed_points(L: LinkPattern) -> frozenset[int]:
    return frozenset(p for p in fixed_points(L) if p > 0)


def fixed_in_interval(L: LinkPattern, s: int, t: int) -> int:
    """Number of fixed points ``f`` with ``s <= f <= t`` (point 0 does not exist)."""
    return sum(1 for f in fixed_points(L) if s <= f <= t)


def class_counts(L: SymmetricLinkPattern) -> tuple[int, int, int]:
    """Numbers ``(p, q, r)`` of positive pairs, mixed pairs and central arcs."""
    kinds = [c.kind for c in L.classes]
    return kinds.count("positive"), kinds.count("mixed"), kinds.count("central")


def bridge_count(L: LinkPattern, f: int) -> int:
    if f not in fixed_points(L):
        raise PreconditionError(f"{f} is not a fixed point of {L}")
    return sum(1 for a in L.arcs if a.left < f < a.right)


def total_bridges(L: LinkPattern) -> int:
    return sum(bridge_count(L, f) for f in positive_fixed_points(L))


def crossing_count(L: LinkPattern, a: Arc) -> int:
    """Arcs ``<k,l>`` crossed by ``a = <i,j>`` on the right with ``k >= -j``."""
    if a not in L.arcs:
        raise PreconditionError(f"{a} not in {L}")
    i, j = a.left, a.right
    return sum(1 for b in L.arcs if i < b.left < j < b.right and b.left >= -j)


def crossing_count_strict(L: LinkPattern, a: Arc) -> int:
    """Variant with the strict condition ``k > -j``; kept to document the difference."""
    if a not in L.arcs:
        raise PreconditionError(f"{a} not in {L}")
    i, j = a.left, a.right
    return sum(1 for b in L.arcs if i < b.left < j < b.right and b.left > -j)


def crossing_count_by_class(L: SymmetricLinkPattern, a: Arc) -> int:
    """Same number as ``crossing_count`` but evaluated per arc class.

    Positive pair: the negative arc crosses nothing, the positive arc ``<i,j>``
    counts ``i<k<j<l``.  Central arc ``<-i,i>``: ``-i<k<i<l``.  Mixed pair:
    ``<-j,i>`` counts ``-i<=k<i<l`` (its own mirror starts at ``-i``) and
    ``<-i,j>`` counts ``-i<k<j<l``.
    """
    if a not in L.arcs:
        raise PreconditionError(f"{a} not in {L}")
    c = ArcClass.of(a)
    arcs = L.arcs
    if c.kind == "positive":
        if a.left < 0:
            return 0
        return sum(1 for b in arcs if a.left < b.left < a.right < b.right)
    if c.kind == "central":
        i = c.i
        return sum(1 for b in arcs if -i < b.left < i < b.right)
    i, j = c.i, c.j
    if a.left == -j:
        return sum(1 for b in arcs if -i <= b.left < i < b.right)
    return sum(1 for b in arcs if -i < b.left < j < b.right)


def total_crossings(L: LinkPattern) -> int:
    return sum(crossing_count(L, a) for a in L.arcs)


def is_maximal(L: LinkPattern) -> bool:
    """No non-negative crossings and no bridges."""
    return total_crossings(L) == 0 and total_bridges(L) == 0


def external_arcs(L: LinkPattern) -> frozenset[Arc]:
    """Arcs not nested under any other arc."""
    return frozenset(
        a for a in L.arcs if not any(b.left < a.left and a.right < b.right for b in L.arcs)
    )


def positive_external_arcs(L: SymmetricLinkPattern) -> frozenset[ArcClass]:
    """One representative per external class.

    Mirror partners are external together, so this is the set of classes of
    external arcs; at most one central arc can be external.
    """
    return frozenset(ArcClass.of(a) for a in external_arcs(L))


def project(L: SymmetricLinkPattern) -> SymmetricLinkPattern:
    """Delete the arcs touching ``n`` or ``-n`` and view the rest at size ``n-1``."""
    if L.n < 2:
        raise SizeError("projection needs n >= 2")
    n = L.n
    return SymmetricLinkPattern(n - 1, [a for a in L.arcs if abs(a.left) != n and abs(a.right) != n])


# enumeration

def _matchings(values: tuple[int, ...]) -> Iterator[list[ArcClass]]:
    if not values:
        yield []
        return
    v = values[-1]
    rest = values[:-1]
    for tail in _matchings(rest):
        yield tail
        yield tail + [ArcClass.central(v)]
    for u in rest:
        others = tuple(x for x in rest if x != u)
        for tail in _matchings(others):
            yield tail + [ArcClass.positive(u, v)]
            yield tail + [ArcClass.mixed(u, v)]


def enumerate_slp(n: int, k: int | None = None) -> list[SymmetricLinkPattern]:
    """All symmetric link patterns on 2n points, optionally with exactly k arcs.

    Sorted by the lexicographic order of the tuple of arcs ``(left, right)``
    sorted in the same way; this is the ``key`` attribute of a pattern.
    """
    if n < 1:
        raise SizeError("n must be positive")
    if k is not None and not 0 <= k <= n:
        raise PreconditionError(f"arc count {k} outside 0..{n}")
    out = [SymmetricLinkPattern.from_classes(n, cs) for cs in _matchings(tuple(range(1, n + 1)))]
    if k is not None:
        out = [L for L in out if len(L.arcs) == k]
    out.sort(key=lambda L: L.key)
    return out


def involution_count(n: int) -> int:
    """Recurrence a(n) = 2(a(n-1) + (n-1) a(n-2)), a(0)=1, a(1)=2."""
    a, b = 1, 2
    if n == 0:
        return a
    for m in range(2, n + 1):
        a, b = b, 2 * (b + (m - 1) * a)
    return b


# text format

_HEAD = re.compile(r"^\s*n\s*=\s*(\d+)\s*;(.*)$", re.S)
_ARC = re.compile(r"\(\s*([+-]?\d+)\s*,\s*([+-]?\d+)\s*\)")


def parse(text: str, complete: bool = False) -> SymmetricLinkPattern:
    """Read ``"n=INT; (a,b)(c,d)..."``; with ``complete`` missing mirrors are added."""
    m = _HEAD.match(text)
    if not m:
        raise ParseError(f"expected 'n=INT;' prefix in {text!r}")
    n = int(m.group(1))
    if n < 1:
        raise ParseError("n must be positive")
    body = m.group(2)
    pairs = []
    pos = 0
    for am in _ARC.finditer(body):
        if body[pos : am.start()].strip():
            raise MalformedArcError(f"unexpected text {body[pos:am.start()]!r}")
        pos = am.end()
        s, t = int(am.group(1)), int(am.group(2))
        if s == 0 or t == 0 or s == t or abs(s) > n or abs(t) > n:
            raise MalformedArcError(f"bad arc ({s},{t}) for n={n}")
        pairs.append((s, t))
    if body[pos:].strip():
        raise MalformedArcError(f"unexpected text {body[pos:]!r}")
    L = LinkPattern(n, pairs)
    if complete:
        extra = {a.mirror() for a in L.arcs} - L.arcs
        L = LinkPattern(n, set(L.arcs) | extra)
    return SymmetricLinkPattern(n, L.arcs)


def parse_any(text: str) -> LinkPattern:
    """Read the same grammar without requiring symmetry."""
    m = _HEAD.match(text)
    if not m:
        raise ParseError(f"expected 'n=INT;' prefix in {text!r}")
    n = int(m.group(1))
    body = _ARC.sub("", m.group(2))
    if body.strip():
        raise MalformedArcError(f"unexpected text {body!r}")
    pairs = [(int(a), int(b)) for a, b in _ARC.findall(m.group(2))]
    for s, t in pairs:
        if s == 0 or t == 0 or s == t or abs(s) > n or abs(t) > n:
            raise MalformedArcError(f"bad arc ({s},{t}) for n={n}")
    return LinkPattern(n, pairs)


def format_arcs(L: LinkPattern) -> str:
    """Arc list only; symmetric patterns are written class by class."""
    if isinstance(L, SymmetricLinkPattern) or L.is_symmetric():
        classes = sorted({ArcClass.of(a) for a in L.arcs}, key=lambda c: (c.i, c.j))
        return "".join(c.text() for c in classes)
    return "".join(str(a) for a in sorted(L.arcs))


def format_pattern(L: LinkPattern) -> str:
    body = format_arcs(L)
    return f"n={L.n};" + (f" {body}" if body else "")
