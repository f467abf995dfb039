"""Gaussian rationals Q(i) on top of :class:`fractions.Fraction`.

Scalars in this package are either ``int``/``Fraction`` (real values) or
:class:`GaussianRational` (values with a nonzero imaginary part).  Arithmetic
on a ``GaussianRational`` collapses back to ``Fraction`` whenever the
imaginary part cancels, so purely real computations never pay for the complex
wrapper.  Every scalar exposes ``.real``, ``.imag`` and ``.conjugate()``.
"""

import re
from fractions import Fraction

from ..errors import ParseError

__all__ = [
    "GaussianRational",
    "I",
    "gauss",
    "as_scalar",
    "inverse",
    "is_real",
    "parse_scalar",
    "format_scalar",
]


class GaussianRational:
    __slots__ = ("_re", "_im")

    def __init__(self, re=0, im=0):
        if isinstance(re, GaussianRational) or isinstance(im, GaussianRational):
            raise TypeError("components must be rational")
        self._re = Fraction(re)
        self._im = Fraction(im)

    @property
    def real(self):
        return self._re

    @property
    def imag(self):
        return self._im

    # spec-facing aliases
    re = real
    im = imag

    def conjugate(self):
        return gauss(self._re, -self._im)

    def norm(self):
        """Field norm ``re**2 + im**2``."""
        return self._re * self._re + self._im * self._im

    def __repr__(self):
        return f"GaussianRational({format_scalar(self._re)}, {format_scalar(self._im)})"

    def __str__(self):
        return format_scalar(self)

    def __hash__(self):
        if self._im == 0:
            return hash(self._re)
        return hash((self._re, self._im))

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self._re == other._re and self._im == other._im
        if isinstance(other, (int, Fraction)):
            return self._im == 0 and self._re == other
        return NotImplemented

    def __bool__(self):
        return bool(self._re) or bool(self._im)

    def __neg__(self):
        return GaussianRational(-self._re, -self._im)

    def __pos__(self):
        return self

    def __add__(self, other):
        if isinstance(other, GaussianRational):
            return gauss(self._re + other._re, self._im + other._im)
        if isinstance(other, (int, Fraction)):
            return gauss(self._re + other, self._im)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, GaussianRational):
            return gauss(self._re - other._re, self._im - other._im)
        if isinstance(other, (int, Fraction)):
            return gauss(self._re - other, self._im)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, (int, Fraction)):
            return gauss(other - self._re, -self._im)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, GaussianRational):
            a, b, c, d = self._re, self._im, other._re, other._im
            return gauss(a * c - b * d, a * d + b * c)
        if isinstance(other, (int, Fraction)):
            return gauss(self._re * other, self._im * other)
        return NotImplemented

    __rmul__ = __mul__

    def _inverse(self):
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("GaussianRational division by zero")
        return gauss(self._re / n, -self._im / n)

    def __truediv__(self, other):
        if isinstance(other, GaussianRational):
            return self * other._inverse()
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("GaussianRational division by zero")
            return gauss(self._re / other, self._im / other)
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self._inverse() * other
        return NotImplemented

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return (self._inverse()) ** (-k)
        result, base = Fraction(1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result


I = GaussianRational(0, 1)


def gauss(re, im=0):
    """Canonical scalar for ``re + im*i``: a Fraction when ``im == 0``."""
    if im == 0:
        return Fraction(re)
    return GaussianRational(re, im)


def as_scalar(x):
    """Coerce ints, Fractions, GaussianRationals and exact complex to a scalar."""
    if isinstance(x, bool):
        return Fraction(int(x))
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return x
    if isinstance(x, GaussianRational):
        return gauss(x.real, x.imag)
    if isinstance(x, str):
        return parse_scalar(x)
    if isinstance(x, complex):
        return gauss(Fraction(x.real), Fraction(x.imag))
    if isinstance(x, float):
        return Fraction(x)
    raise TypeError(f"cannot use {type(x).__name__} as an exact scalar")


def inverse(x):
    if isinstance(x, int):
        return Fraction(1, x)
    return 1 / x


def is_real(x):
    return not isinstance(x, GaussianRational) or x.imag == 0


_RAT = r"[0-9]+(?:/[0-9]+)?"
_IMAG = re.compile(rf"^(?P<sign>[+-]?)(?:(?P<coef>{_RAT})\*?)?i$")
_REAL = re.compile(rf"^[+-]?{_RAT}$")


def _rational(text):
    num, _, den = text.partition("/")
    if den and int(den) == 0:
        raise ParseError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den else 1)


def parse_scalar(text):
    """Parse ``"a/b+c/d*i"`` style literals ("2", "i", "-3/2+1*i", "-i")."""
    s = str(text).replace(" ", "")
    if not s:
        raise ParseError("empty scalar literal")
    if _REAL.match(s):
        return _signed(s)
    m = _IMAG.match(s)
    if m:
        return gauss(0, _imag_part(m))
    # split into real and imaginary halves at the last sign not in front
    for k in range(len(s) - 1, 0, -1):
        if s[k] in "+-":
            head, tail = s[:k], s[k:]
            if _REAL.match(head):
                m = _IMAG.match(tail)
                if m:
                    return gauss(_signed(head), _imag_part(m))
            break
    raise ParseError(f"bad Gaussian rational literal {text!r}")


def _signed(s):
    if s[0] == "-":
        return -_rational(s[1:])
    return _rational(s.lstrip("+"))


def _imag_part(m):
    coef = _rational(m.group("coef")) if m.group("coef") else Fraction(1)
    return -coef if m.group("sign") == "-" else coef


def _format_rational(q):
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def format_scalar(x):
    if not isinstance(x, GaussianRational) or x.imag == 0:
        return _format_rational(x.real if isinstance(x, GaussianRational) else x)
    im = _format_rational(x.imag)
    if x.real == 0:
        return f"{im}*i"
    sign = "" if im.startswith("-") else "+"
    return f"{_format_rational(x.real)}{sign}{im}*i"
