"""Univariate polynomials over Q(i), Sturm chains and root-location tests."""

from fractions import Fraction

from ..errors import NonRealCoefficients, Unsplittable, ZeroPolynomial
from .gaussian import GaussianRational, I, as_scalar, gauss, inverse, is_real, format_scalar

__all__ = [
    "Poly",
    "sturm_chain",
    "sturm_distinct_real_roots",
    "all_roots_real",
    "all_roots_purely_imaginary",
    "gaussian_spectrum",
]


class Poly:
    """Dense polynomial, coefficients stored lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [as_scalar(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def monomial(cls, k, c=1):
        return cls([0] * k + [c])

    @classmethod
    def from_roots(cls, roots):
        p = cls([1])
        for r in roots:
            p = p * cls([-as_scalar(r), 1])
        return p

    @property
    def degree(self):
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self.coeffs == Poly([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly({[format_scalar(c) for c in self.coeffs]})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            cs = format_scalar(c)
            if isinstance(c, GaussianRational):
                cs = f"({cs})"
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            if mono and cs in ("1", "-1"):
                cs = cs[:-1]
            terms.append(f"{cs}{'*' if mono and cs not in ('', '-') else ''}{mono}")
        return " + ".join(terms).replace("+ -", "- ")

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __add__(self, other):
        other = _lift(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Poly([x + (b[k] if k < len(b) else 0) for k, x in enumerate(a)])

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-_lift(other))

    def __rsub__(self, other):
        return _lift(other) - self

    def __mul__(self, other):
        other = _lift(other)
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        result = Poly([1])
        for _ in range(k):
            result = result * self
        return result

    def __divmod__(self, other):
        other = _lift(other)
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Poly(), self
        quo = [0] * (dq + 1)
        inv_lc = inverse(other.lc)
        n = len(other.coeffs)
        for k in range(dq, -1, -1):
            c = rem[k + n - 1] * inv_lc
            quo[k] = c
            if c == 0:
                continue
            for j, b in enumerate(other.coeffs):
                rem[k + j] -= c * b
        return Poly(quo), Poly(rem[: n - 1])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def derivative(self):
        return Poly([k * c for k, c in enumerate(self.coeffs)][1:])

    def monic(self):
        if not self.coeffs:
            raise ZeroPolynomial("zero polynomial has no monic form")
        inv_lc = inverse(self.lc)
        return Poly([c * inv_lc for c in self.coeffs])

    def gcd(self, other):
        """Monic gcd (zero if both are zero)."""
        a, b = self, _lift(other)
        while b:
            a, b = b, a % b
        return a.monic() if a else a

    def squarefree_part(self):
        """``p / gcd(p, p')``, made monic."""
        if not self.coeffs:
            raise ZeroPolynomial("zero polynomial")
        if self.degree == 0:
            return Poly([1])
        g = self.gcd(self.derivative())
        return (self // g).monic()

    def scale_variable(self, s):
        """Return ``q(t) = p(s*t)``."""
        s = as_scalar(s)
        out, power = [], Fraction(1)
        for c in self.coeffs:
            out.append(c * power)
            power = power * s
        return Poly(out)

    def is_real(self):
        return all(is_real(c) for c in self.coeffs)

    def conjugate(self):
        return Poly([c.conjugate() for c in self.coeffs])


def _lift(x):
    return x if isinstance(x, Poly) else Poly([x])


def _sign(x):
    return (x > 0) - (x < 0)


def sturm_chain(p):
    """Sturm sequence p, p', -rem(...) ... over the rationals."""
    chain = [p, p.derivative()]
    while chain[-1]:
        r = chain[-2] % chain[-1]
        if not r:
            break
        chain.append(-r)
    if not chain[-1]:
        chain.pop()
    return chain


def _variations(signs):
    signs = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sturm_distinct_real_roots(p):
    """Number of distinct real roots of a real polynomial on (-inf, inf)."""
    if not p:
        raise ZeroPolynomial("zero polynomial has infinitely many roots")
    if not p.is_real():
        raise NonRealCoefficients(f"{p} has non-real coefficients")
    p = Poly([Fraction(c.real) if isinstance(c, GaussianRational) else c for c in p.coeffs])
    if p.degree == 0:
        return 0
    chain = sturm_chain(p)
    at_pos = [_sign(q.lc) for q in chain]
    at_neg = [_sign(q.lc) * (-1) ** q.degree for q in chain]
    return _variations(at_neg) - _variations(at_pos)


def all_roots_real(p):
    """True iff every complex root of ``p`` is real.

    A polynomial with only real roots is a scalar multiple of a real
    polynomial, so after dividing by the leading coefficient any non-real
    coefficient already settles the question.
    """
    if not p:
        raise ZeroPolynomial("zero polynomial")
    q = p.monic()
    if not q.is_real():
        return False
    q = q.squarefree_part()
    return sturm_distinct_real_roots(q) == q.degree


def all_roots_purely_imaginary(p):
    """True iff every root of ``p`` has zero real part (via ``p(i*s)``)."""
    if not p:
        raise ZeroPolynomial("zero polynomial")
    return all_roots_real(p.scale_variable(I))


def _to_sympy(x):
    import sympy

    x = as_scalar(x)
    if isinstance(x, GaussianRational):
        return sympy.Rational(x.real.numerator, x.real.denominator) + sympy.I * sympy.Rational(
            x.imag.numerator, x.imag.denominator
        )
    x = Fraction(x)
    return sympy.Rational(x.numerator, x.denominator)


def _from_sympy(e):
    import sympy

    re_, im_ = sympy.re(e), sympy.im(e)
    return gauss(Fraction(int(re_.p), int(re_.q)), Fraction(int(im_.p), int(im_.q)))


def gaussian_spectrum(p):
    """Roots of a monic ``p`` with multiplicity, when ``p`` splits over Q(i).

    Returns a list of ``(root, multiplicity)`` sorted by (real, imag); raises
    :class:`Unsplittable` when some irreducible factor over Q(i) has degree
    greater than one.  The factorisation over Q(i) is delegated to sympy.
    """
    import sympy

    if not p:
        raise ZeroPolynomial("zero polynomial")
    if p.lc != 1:
        raise ValueError("gaussian_spectrum expects a monic polynomial")
    if p.degree == 0:
        return []
    t = sympy.Symbol("t")
    expr = sum(_to_sympy(c) * t**k for k, c in enumerate(p.coeffs))
    _, factors = sympy.Poly(expr, t, domain="QQ_I").factor_list()
    roots = []
    for f, mult in factors:
        if f.degree() != 1:
            raise Unsplittable(f"{p} has the irreducible factor {f.as_expr()} over Q(i)")
        a, b = f.all_coeffs()
        roots.append((_from_sympy(sympy.simplify(-b / a)), mult))
    roots.sort(key=lambda rm: (rm[0].real, rm[0].imag))
    return roots
