"""Univariate Laurent polynomials in a formal parameter with exact coefficients.

Used for limit curves ``B_m``: a family of Borel elements whose conjugates of
``X_L`` tend to ``X_L'`` as ``m`` goes to infinity.  The limit exists iff no
entry has a positive power of ``m``; the limit is then the constant term.
"""

from __future__ import annotations

from fractions import Fraction

from .linalg import Matrix
from .scalars import GaussQ, format_scalar, simplify


def _is_scalar(x) -> bool:
    return isinstance(x, (int, Fraction, GaussQ))


class Laurent:
    __slots__ = ("terms",)

    def __init__(self, terms: dict[int, object] | None = None):
        self.terms = {d: simplify(c) for d, c in (terms or {}).items() if c}

    @classmethod
    def const(cls, c) -> Laurent:
        return cls({0: c})

    @classmethod
    def monomial(cls, c, deg: int) -> Laurent:
        return cls({deg: c})

    @staticmethod
    def coerce(x) -> Laurent:
        if isinstance(x, Laurent):
            return x
        if _is_scalar(x):
            return Laurent({0: x})
        return NotImplemented

    def __add__(self, other):
        o = Laurent.coerce(other)
        if o is NotImplemented:
            return o
        t = dict(self.terms)
        for d, c in o.terms.items():
            t[d] = t.get(d, 0) + c
        return Laurent(t)

    __radd__ = __add__

    def __neg__(self):
        return Laurent({d: -c for d, c in self.terms.items()})

    def __sub__(self, other):
        o = Laurent.coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = Laurent.coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = Laurent.coerce(other)
        if o is NotImplemented:
            return o
        t: dict[int, object] = {}
        for d1, c1 in self.terms.items():
            for d2, c2 in o.terms.items():
                t[d1 + d2] = t.get(d1 + d2, 0) + c1 * c2
        return Laurent(t)

    __rmul__ = __mul__

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def inverse(self) -> Laurent:
        """Inverse of a monomial (the only units of the Laurent ring)."""
        if not self.is_monomial():
            raise ZeroDivisionError(f"{self} is not a unit")
        (d, c), = self.terms.items()
        return Laurent({-d: Fraction(1) / c})

    def __truediv__(self, other):
        o = Laurent.coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = Laurent.coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        out = Laurent.const(1)
        for _ in range(e):
            out = out * self
        return out

    def max_degree(self) -> int | None:
        return max(self.terms) if self.terms else None

    def coeff(self, deg: int):
        return self.terms.get(deg, Fraction(0))

    def constant(self):
        return self.coeff(0)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        o = Laurent.coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        if set(self.terms) <= {0}:
            return hash(self.constant())
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        return f"Laurent({self})"

    def __str__(self):
        return format_laurent(self)


def format_laurent(p: Laurent, var: str = "m") -> str:
    if not p.terms:
        return "0"
    parts = []
    for d in sorted(p.terms, reverse=True):
        c = format_scalar(p.terms[d])
        if d == 0:
            parts.append(c)
            continue
        mono = var if d == 1 else f"{var}^{d}"
        if c == "1":
            parts.append(mono)
        elif c == "-1":
            parts.append("-" + mono)
        else:
            parts.append(f"({c})*{mono}" if ("+" in c[1:] or "-" in c[1:]) else f"{c}*{mono}")
    return " + ".join(parts).replace("+ -", "- ")


M = Laurent.monomial(1, 1)


def laurent_matrix(m: Matrix) -> Matrix:
    return m.map(Laurent.coerce)


def max_degree(m: Matrix) -> int | None:
    """Largest power of the parameter appearing in any entry."""
    degs = [e.max_degree() for r in m.rows for e in r if isinstance(e, Laurent) and e]
    return max(degs) if degs else None


def limit(m: Matrix) -> Matrix | None:
    """Entrywise limit as the parameter tends to infinity, or None if it diverges."""
    d = max_degree(m)
    if d is not None and d > 0:
        return None
    return m.map(lambda e: Laurent.coerce(e).constant() if e else Fraction(0))
