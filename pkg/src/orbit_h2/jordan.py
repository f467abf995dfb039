"""Complete Jordan decomposition and exactness verdicts for the Kostant-Kirillov form.

The verdicts only look at the characteristic polynomial of ``ad(M)``: the real
part of the form is exact iff every eigenvalue of ``ad(M)`` is real, the
imaginary part iff every eigenvalue is purely imaginary.  Both tests run on
Sturm chains, so they work for any rational input.  The split
``M = X_n + X_k + X_h`` needs the eigenvalues themselves and is attempted
only as a cross-check.
"""

from dataclasses import dataclass
from typing import Optional

from .errors import (
    NonRealCoefficients,
    NonSquare,
    NotInAlgebra,
    NotSemisimple,
    RouteMismatch,
    Unsplittable,
    UnsplittableSpectrum,
)
from .exact import (
    ExactMatrix,
    I,
    Poly,
    all_roots_purely_imaginary,
    all_roots_real,
    gaussian_spectrum,
    inverse,
    minimal_polynomial,
)
from .lie import ad_matrix

__all__ = [
    "CompleteDecomposition",
    "ExactnessVerdict",
    "jordan_chevalley",
    "compact_hyperbolic_split",
    "complete_decomposition",
    "kk_verdict",
    "real_form_verdict",
    "ALL_REAL",
    "ALL_IMAGINARY",
    "MIXED",
    "NILPOTENT",
]

ALL_REAL = "AllReal"
ALL_IMAGINARY = "AllImaginary"
MIXED = "Mixed"
NILPOTENT = "Nilpotent"


@dataclass(frozen=True)
class CompleteDecomposition:
    nilpotent: ExactMatrix
    compact: ExactMatrix
    hyperbolic: ExactMatrix

    @property
    def semisimple(self):
        return self.compact + self.hyperbolic

    def total(self):
        return self.nilpotent + self.compact + self.hyperbolic

    def to_json(self):
        return {
            "nilpotent": self.nilpotent.to_json(),
            "compact": self.compact.to_json(),
            "hyperbolic": self.hyperbolic.to_json(),
        }


@dataclass(frozen=True)
class ExactnessVerdict:
    re_exact: bool
    im_exact: bool
    spectrum_class: str
    decomposition: Optional[CompleteDecomposition] = None

    def to_json(self):
        out = {"re_exact": self.re_exact, "im_exact": self.im_exact, "class": self.spectrum_class}
        if self.decomposition is not None:
            out["decomposition"] = self.decomposition.to_json()
        return out


def _require_square(M):
    if not M.is_square:
        raise NonSquare("expected a square matrix")


def jordan_chevalley(M):
    """Return ``(S, N)`` with ``M = S + N``, S semisimple, N nilpotent, ``SN = NS``.

    Newton iteration ``S <- S - q(S) q'(S)^-1`` on the squarefree part ``q``
    of the characteristic polynomial; it converges after at most
    ``ceil(log2 n) + 1`` steps and every iterate is a polynomial in M.
    """
    _require_square(M)
    n = M.rows
    q = M.charpoly().squarefree_part()
    dq = q.derivative()
    S = M
    for _ in range(n.bit_length() + 2):
        qS = S.evaluate(q)
        if qS.is_zero():
            return S, M - S
        S = S - qS @ S.evaluate(dq).inverse()
    raise AssertionError("Newton iteration did not terminate")  # pragma: no cover


def _is_squarefree(p):
    return p.gcd(p.derivative()).degree == 0


def compact_hyperbolic_split(S):
    """Split a semisimple S into commuting compact and hyperbolic parts.

    With spectral projectors ``P_l`` (Lagrange polynomials in S),
    ``hyperbolic = sum Re(l) P_l`` and ``compact = sum i Im(l) P_l``.
    Raises UnsplittableSpectrum when the eigenvalues are not in Q(i).
    """
    _require_square(S)
    q = minimal_polynomial(S)
    if not _is_squarefree(q):
        raise NotSemisimple("minimal polynomial has a repeated root")
    try:
        roots = [r for r, _ in gaussian_spectrum(q)]
    except Unsplittable as exc:
        raise UnsplittableSpectrum(str(exc)) from None
    hyp = Poly([])
    comp = Poly([])
    for lam in roots:
        lagrange = Poly([1])
        for mu in roots:
            if mu != lam:
                lagrange = lagrange * Poly([-mu, 1]) * inverse(lam - mu)
        hyp = hyp + lagrange * lam.real
        comp = comp + lagrange * (I * lam.imag)
    return S.evaluate(comp), S.evaluate(hyp)


def complete_decomposition(M):
    """``M = X_n + X_k + X_h``; raises UnsplittableSpectrum if the split is out of reach."""
    S, N = jordan_chevalley(M)
    compact, hyperbolic = compact_hyperbolic_split(S)
    return CompleteDecomposition(N, compact, hyperbolic)


def _classify(p, dim, re_exact, im_exact):
    if p == Poly.monomial(dim):
        return NILPOTENT
    if re_exact:
        return ALL_REAL
    if im_exact:
        return ALL_IMAGINARY
    return MIXED


def _try_decomposition(M):
    try:
        return complete_decomposition(M)
    except UnsplittableSpectrum:
        return None


def kk_verdict(spec, M, with_decomposition=False):
    """Exactness of Re(omega) and Im(omega) on the adjoint orbit of M."""
    if not spec.contains(M):
        raise NotInAlgebra(f"matrix is not in {spec}")
    p = ad_matrix(spec, M, check=False).charpoly()
    re_exact = all_roots_real(p)
    im_exact = all_roots_purely_imaginary(p)
    decomposition = None
    if with_decomposition:
        decomposition = _try_decomposition(M)
        if decomposition is not None:
            if re_exact != decomposition.compact.is_zero() or im_exact != decomposition.hyperbolic.is_zero():
                raise RouteMismatch("Sturm verdict disagrees with the compact/hyperbolic split")
    return ExactnessVerdict(re_exact, im_exact, _classify(p, spec.dim, re_exact, im_exact), decomposition)


def real_form_verdict(spec, M):
    """For real M: the form on the real orbit is exact iff ad(M) has real spectrum.

    When the spectrum of M lies in Q(i) the equivalent condition ``X_k = 0``
    is checked as well and a disagreement raises RouteMismatch.

    The criterion presumes the real group has semisimple maximal compact
    subgroups and finite centre.  Those hypotheses concern the group, not the
    matrix, and are not checked here.
    """
    if not M.is_real():
        raise NonRealCoefficients("real_form_verdict needs real entries")
    if not spec.contains(M):
        raise NotInAlgebra(f"matrix is not in {spec}")
    verdict = all_roots_real(ad_matrix(spec, M, check=False).charpoly())
    decomposition = _try_decomposition(M)
    if decomposition is not None and verdict != decomposition.compact.is_zero():
        raise RouteMismatch("eigenvalue criterion disagrees with X_k = 0")
    return verdict
