"""Exact scalars: rationals (``fractions.Fraction``) and Gaussian rationals.

Gaussian rationals are needed because several degeneration witnesses use
the imaginary unit, e.g. ``T_k(sqrt(-1))``.  Values with zero imaginary part
compare and hash equal to the corresponding ``Fraction``.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Union

from .errors import ParseError

Rational = Union[int, Fraction]


class GaussQ:
    """Element ``re + im*i`` of Q(i)."""

    __slots__ = ("re", "im")

    def __init__(self, re: Rational = 0, im: Rational = 0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    @staticmethod
    def coerce(x) -> GaussQ:
        if isinstance(x, GaussQ):
            return x
        if isinstance(x, (int, Fraction)):
            return GaussQ(x, 0)
        return NotImplemented

    def __add__(self, other):
        o = GaussQ.coerce(other)
        if o is NotImplemented:
            return o
        return GaussQ(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussQ(-self.re, -self.im)

    def __sub__(self, other):
        o = GaussQ.coerce(other)
        if o is NotImplemented:
            return o
        return GaussQ(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = GaussQ.coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = GaussQ.coerce(other)
        if o is NotImplemented:
            return o
        return GaussQ(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def conjugate(self) -> GaussQ:
        return GaussQ(self.re, -self.im)

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def inverse(self) -> GaussQ:
        d = self.norm()
        if d == 0:
            raise ZeroDivisionError("inverse of zero")
        return GaussQ(self.re / d, -self.im / d)

    def __truediv__(self, other):
        o = GaussQ.coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = GaussQ.coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        out = GaussQ(1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        o = GaussQ.coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def is_real(self) -> bool:
        return self.im == 0

    def __repr__(self):
        return f"GaussQ({self.re}, {self.im})"

    def __str__(self):
        return format_scalar(self)


I = GaussQ(0, 1)


def simplify(x):
    """Return a ``Fraction`` when ``x`` is real, else ``x`` unchanged."""
    if isinstance(x, GaussQ):
        return x.re if x.im == 0 else x
    return Fraction(x)


def format_scalar(x) -> str:
    """Serialize as ``"p/q"`` (or ``"p"``) and Gaussian values as ``"a+b*i"``."""
    if isinstance(x, GaussQ):
        if x.im == 0:
            return format_scalar(x.re)
        im = x.im
        sign = "+" if im > 0 else "-"
        mag = abs(im)
        mag_s = "" if mag == 1 else format_scalar(mag) + "*"
        if x.re == 0:
            return ("" if sign == "+" else "-") + mag_s + "i"
        return f"{format_scalar(x.re)}{sign}{mag_s}i"
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


_RAT = r"[+-]?\d+(?:/\d+)?"
_IMAG = r"(?P<sign>[+-])(?P<mag>\d+(?:/\d+)?)?\*?i"
_GAUSS = re.compile(rf"^(?P<re>{_RAT}){_IMAG}$")
_PURE_IMAG = re.compile(r"^(?P<sign>[+-]?)(?P<mag>\d+(?:/\d+)?)?\*?i$")


def parse_scalar(text: str):
    """Inverse of ``format_scalar``."""
    s = str(text).replace(" ", "")
    if not s:
        raise ParseError("empty scalar")
    if re.fullmatch(_RAT, s):
        return Fraction(s)
    m = _PURE_IMAG.match(s) or _GAUSS.match(s)
    if not m:
        raise ParseError(f"bad scalar {text!r}")
    re_part = Fraction(m.group("re")) if "re" in m.groupdict() else Fraction(0)
    mag = Fraction(m.group("mag")) if m.group("mag") else Fraction(1)
    if m.group("sign") == "-":
        mag = -mag
    return simplify(GaussQ(re_part, mag))


def rational_sqrt(q: Rational) -> Fraction | None:
    """Exact square root of a nonnegative rational, or None if irrational."""
    q = Fraction(q)
    if q < 0:
        return None
    a, b = q.numerator, q.denominator
    ra, rb = math.isqrt(a), math.isqrt(b)
    if ra * ra == a and rb * rb == b:
        return Fraction(ra, rb)
    return None


def exact_sqrt(q: Rational):
    """Principal square root of a rational inside Q(i), or None.

    Positive squares give the positive root, negative ones ``i*sqrt(|q|)``.
    """
    q = Fraction(q)
    if q >= 0:
        return rational_sqrt(q)
    r = rational_sqrt(-q)
    return None if r is None else GaussQ(0, r)
