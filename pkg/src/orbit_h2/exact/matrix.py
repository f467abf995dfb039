"""Dense exact matrices over Q(i) and the elimination kernels built on them."""

from fractions import Fraction

from ..errors import NonSquare, ParseError
from .gaussian import as_scalar, format_scalar, inverse, is_real, parse_scalar
from .poly import Poly

__all__ = [
    "ExactMatrix",
    "rref",
    "kernel_basis",
    "nullspace",
    "rank",
    "charpoly",
    "minimal_polynomial",
    "solve_in_span",
]


class ExactMatrix:
    """Immutable ``rows x cols`` matrix stored row-major in a flat tuple."""

    __slots__ = ("rows", "cols", "entries", "_hash")

    def __init__(self, rows, cols, entries):
        entries = tuple(as_scalar(x) for x in entries)
        if len(entries) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(entries)}")
        self.rows = rows
        self.cols = cols
        self.entries = entries
        self._hash = None

    # construction -------------------------------------------------------

    @classmethod
    def from_rows(cls, rows):
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), ncols, [x for r in rows for x in r])

    @classmethod
    def zeros(cls, rows, cols=None):
        cols = rows if cols is None else cols
        return cls(rows, cols, [0] * (rows * cols))

    @classmethod
    def identity(cls, n):
        return cls.diag([1] * n)

    @classmethod
    def diag(cls, values):
        n = len(values)
        out = [0] * (n * n)
        for k, v in enumerate(values):
            out[k * n + k] = v
        return cls(n, n, out)

    @classmethod
    def unit(cls, n, i, j):
        """Matrix unit E_ij of size n."""
        out = [0] * (n * n)
        out[i * n + j] = 1
        return cls(n, n, out)

    @classmethod
    def block_diag(cls, blocks):
        n = sum(b.rows for b in blocks)
        m = sum(b.cols for b in blocks)
        out = [0] * (n * m)
        r0 = c0 = 0
        for b in blocks:
            for i in range(b.rows):
                for j in range(b.cols):
                    out[(r0 + i) * m + c0 + j] = b.entries[i * b.cols + j]
            r0 += b.rows
            c0 += b.cols
        return cls(n, m, out)

    @classmethod
    def column(cls, values):
        return cls(len(values), 1, values)

    @classmethod
    def from_columns(cls, columns):
        columns = [list(c) for c in columns]
        nrows = len(columns[0])
        return cls(nrows, len(columns), [columns[j][i] for i in range(nrows) for j in range(len(columns))])

    # access -------------------------------------------------------------

    @property
    def shape(self):
        return (self.rows, self.cols)

    @property
    def is_square(self):
        return self.rows == self.cols

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i):
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def column_values(self, j):
        return self.entries[j :: self.cols]

    def tolist(self):
        return [list(self.row(i)) for i in range(self.rows)]

    def __iter__(self):
        return (self.row(i) for i in range(self.rows))

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.rows, self.cols, self.entries))
        return self._hash

    def __repr__(self):
        body = "; ".join(" ".join(format_scalar(x) for x in r) for r in self)
        return f"ExactMatrix({self.rows}x{self.cols}: [{body}])"

    def is_zero(self):
        return not any(self.entries)

    def is_real(self):
        return all(is_real(x) for x in self.entries)

    # arithmetic ---------------------------------------------------------

    def _check_same_shape(self, other):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other):
        self._check_same_shape(other)
        return ExactMatrix(self.rows, self.cols, [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other):
        self._check_same_shape(other)
        return ExactMatrix(self.rows, self.cols, [a - b for a, b in zip(self.entries, other.entries)])

    def __neg__(self):
        return ExactMatrix(self.rows, self.cols, [-a for a in self.entries])

    def scale(self, c):
        c = as_scalar(c)
        return ExactMatrix(self.rows, self.cols, [c * a for a in self.entries])

    def __mul__(self, other):
        if isinstance(other, ExactMatrix):
            return self @ other
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        n, m, p = self.rows, self.cols, other.cols
        a, b = self.entries, other.entries
        b_rows = [
            [(j, x) for j, x in enumerate(b[k * p : (k + 1) * p]) if x != 0] for k in range(m)
        ]
        out = [0] * (n * p)
        for i in range(n):
            base = i * p
            for k in range(m):
                aik = a[i * m + k]
                if aik == 0:
                    continue
                for j, bkj in b_rows[k]:
                    out[base + j] += aik * bkj
        return ExactMatrix(n, p, out)

    def bracket(self, other):
        """Commutator ``[self, other]``."""
        return self @ other - other @ self

    def __pow__(self, k):
        if not self.is_square:
            raise NonSquare("power of a non-square matrix")
        result = ExactMatrix.identity(self.rows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def transpose(self):
        n, m = self.rows, self.cols
        return ExactMatrix(m, n, [self.entries[i * m + j] for j in range(m) for i in range(n)])

    @property
    def T(self):
        return self.transpose()

    def conjugate(self):
        return ExactMatrix(self.rows, self.cols, [x.conjugate() for x in self.entries])

    def trace(self):
        if not self.is_square:
            raise NonSquare("trace of a non-square matrix")
        return sum((self.entries[k * self.cols + k] for k in range(self.rows)), Fraction(0))

    def flat(self):
        return self.entries

    def rank(self):
        return rank(self)

    def kernel(self):
        return kernel_basis(self)

    def inverse(self):
        if not self.is_square:
            raise NonSquare("inverse of a non-square matrix")
        n = self.rows
        aug = [list(self.row(i)) + [1 if j == i else 0 for j in range(n)] for i in range(n)]
        reduced, pivots = _rref_rows(aug, 2 * n, pivot_limit=n)
        if pivots != list(range(n)):
            raise ZeroDivisionError("matrix is singular")
        return ExactMatrix(n, n, [x for r in reduced for x in r[n:]])

    def det(self):
        if not self.is_square:
            raise NonSquare("determinant of a non-square matrix")
        rows = [list(r) for r in self]
        n = self.rows
        det = Fraction(1)
        for c in range(n):
            p = next((r for r in range(c, n) if rows[r][c] != 0), None)
            if p is None:
                return Fraction(0)
            if p != c:
                rows[c], rows[p] = rows[p], rows[c]
                det = -det
            pivot = rows[c][c]
            det = det * pivot
            inv = inverse(pivot)
            for r in range(c + 1, n):
                f = rows[r][c]
                if f == 0:
                    continue
                f = f * inv
                for k in range(c, n):
                    if rows[c][k] != 0:
                        rows[r][k] -= f * rows[c][k]
        return det

    def evaluate(self, p):
        """``p(self)`` by Horner's rule."""
        if not self.is_square:
            raise NonSquare("polynomial of a non-square matrix")
        n = self.rows
        acc = ExactMatrix.zeros(n)
        ident = ExactMatrix.identity(n)
        for c in reversed(p.coeffs):
            acc = acc @ self + ident.scale(c)
        return acc

    def charpoly(self):
        return charpoly(self)

    # I/O ----------------------------------------------------------------

    def to_json(self):
        return {
            "rows": self.rows,
            "cols": self.cols,
            "entries": [[format_scalar(x) for x in r] for r in self],
        }

    @classmethod
    def from_json(cls, obj):
        try:
            rows, cols, entries = obj["rows"], obj["cols"], obj["entries"]
        except (KeyError, TypeError) as exc:
            raise ParseError(f"matrix JSON needs rows, cols, entries: {exc}") from None
        if not isinstance(entries, list) or len(entries) != rows:
            raise ParseError("entries must be a list of `rows` rows")
        flat = []
        for r in entries:
            if not isinstance(r, list) or len(r) != cols:
                raise ParseError("every row must have `cols` entries")
            for x in r:
                if isinstance(x, bool) or not isinstance(x, (int, str)):
                    raise ParseError(f"matrix entry {x!r} is not an exact literal")
                flat.append(parse_scalar(x) if isinstance(x, str) else x)
        return cls(rows, cols, flat)


def _rref_rows(rows, ncols, pivot_limit=None):
    """In-place reduced row echelon form; returns (rows, pivot columns)."""
    pivots = []
    r = 0
    nrows = len(rows)
    limit = ncols if pivot_limit is None else pivot_limit
    for c in range(limit):
        if r == nrows:
            break
        p = None
        for k in range(r, nrows):
            if rows[k][c] != 0:
                p = k
                break
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        prow = rows[r]
        inv = inverse(prow[c])
        if inv != 1:
            prow = [x * inv if x != 0 else x for x in prow]
            rows[r] = prow
        support = [j for j in range(c, ncols) if prow[j] != 0]
        for k in range(nrows):
            if k == r:
                continue
            row = rows[k]
            f = row[c]
            if f == 0:
                continue
            for j in support:
                row[j] -= f * prow[j]
        pivots.append(c)
        r += 1
    return rows[:r], pivots


def rref(m):
    """Reduced row echelon form of an ExactMatrix or list of rows."""
    if isinstance(m, ExactMatrix):
        rows, ncols = [list(r) for r in m], m.cols
    else:
        rows = [list(r) for r in m]
        ncols = len(rows[0]) if rows else 0
    return _rref_rows(rows, ncols)


def nullspace(m, ncols=None):
    """``(basis, free_columns)`` of the right null space ``{v : m v = 0}``.

    ``m`` may be an ExactMatrix or a list of rows (then ``ncols`` is needed
    when the list is empty).  Basis vector ``k`` has a 1 in ``free_columns[k]``
    and 0 in every other free column, so the free entries of any kernel
    vector are its coordinates in this basis.
    """
    if isinstance(m, ExactMatrix):
        ncols = m.cols
    rows = [list(r) for r in m]
    if ncols is None:
        ncols = len(rows[0])
    reduced, pivots = _rref_rows(rows, ncols)
    pivot_set = set(pivots)
    basis, free = [], []
    for f in range(ncols):
        if f in pivot_set:
            continue
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, pc in zip(reduced, pivots):
            if row[f] != 0:
                v[pc] = -row[f]
        basis.append(tuple(v))
        free.append(f)
    return basis, free


def kernel_basis(m, ncols=None):
    """Exact basis of the right null space; size is ``cols - rank``."""
    return nullspace(m, ncols)[0]


def rank(m):
    if isinstance(m, ExactMatrix):
        rows, ncols = [list(r) for r in m], m.cols
    else:
        rows = [list(r) for r in m]
        ncols = len(rows[0]) if rows else 0
    return len(_rref_rows(rows, ncols)[1])


def solve_in_span(vectors, target):
    """Coefficients c with sum c_k vectors[k] == target, or None."""
    k = len(vectors)
    if k == 0:
        return [] if not any(target) else None
    n = len(target)
    rows = [[vectors[j][i] for j in range(k)] + [target[i]] for i in range(n)]
    reduced, pivots = _rref_rows(rows, k + 1)
    if k in pivots:
        return None
    coeffs = [Fraction(0)] * k
    for row, pc in zip(reduced, pivots):
        coeffs[pc] = row[k]
    return coeffs


def charpoly(m):
    """``det(t I - m)``: Hessenberg reduction followed by the standard recurrence."""
    if not m.is_square:
        raise NonSquare(f"charpoly needs a square matrix, got {m.shape}")
    n = m.rows
    h = [list(r) for r in m]
    # similarity transform to upper Hessenberg form
    for j in range(n - 2):
        p = next((i for i in range(j + 1, n) if h[i][j] != 0), None)
        if p is None:
            continue
        if p != j + 1:
            h[p], h[j + 1] = h[j + 1], h[p]
            for row in h:
                row[p], row[j + 1] = row[j + 1], row[p]
        inv = inverse(h[j + 1][j])
        for i in range(j + 2, n):
            u = h[i][j]
            if u == 0:
                continue
            u = u * inv
            hj = h[j + 1]
            hi = h[i]
            for k in range(n):
                if hj[k] != 0:
                    hi[k] -= u * hj[k]
            for row in h:
                if row[i] != 0:
                    row[j + 1] += u * row[i]
    t = Poly([0, 1])
    polys = [Poly([1])]
    for k in range(1, n + 1):
        pk = (t - h[k - 1][k - 1]) * polys[k - 1]
        prod = Fraction(1)
        for i in range(k - 1, 0, -1):
            prod = prod * h[i][i - 1]
            if prod == 0:
                break
            pk = pk - polys[i - 1] * (prod * h[i - 1][k - 1])
        polys.append(pk)
    return polys[n]


def minimal_polynomial(m):
    """Monic minimal polynomial, from the first linear dependency among powers."""
    if not m.is_square:
        raise NonSquare("minimal polynomial of a non-square matrix")
    n = m.rows
    powers = [ExactMatrix.identity(n).entries]
    current = ExactMatrix.identity(n)
    for k in range(1, n + 1):
        current = current @ m
        coeffs = solve_in_span(powers, [-x for x in current.entries])
        if coeffs is not None:
            return Poly(list(coeffs) + [1])
        powers.append(current.entries)
    raise AssertionError("Cayley-Hamilton violated")  # pragma: no cover
