"""Small dense matrices over an exact field, with band-structure predicates."""
from __future__ import annotations

from . import kernels


class DenseMatrix:
    """Row-major square-or-rectangular matrix of field elements.

    Entries are never mutated after construction; arithmetic returns new
    matrices.  ``rows[i][j]`` is row i, column j.
    """

    __slots__ = ("rows",)

    def __init__(self, rows):
        self.rows = [list(r) for r in rows]

    @classmethod
    def zeros(cls, n, m=None, zero=0):
        m = n if m is None else m
        return cls([[zero] * m for _ in range(n)])

    @classmethod
    def identity(cls, n, one=1):
        return cls([[one if i == j else 0 * one for j in range(n)] for i in range(n)])

    @classmethod
    def diag(cls, values):
        values = list(values)
        n = len(values)
        return cls([[values[i] if i == j else 0 * values[i] for j in range(n)] for i in range(n)])

    @classmethod
    def from_function(cls, n, f, m=None):
        m = n if m is None else m
        return cls([[f(i, j) for j in range(m)] for i in range(n)])

    @property
    def shape(self):
        return len(self.rows), (len(self.rows[0]) if self.rows else 0)

    def __len__(self):
        return len(self.rows)

    def __getitem__(self, ij):
        if isinstance(ij, tuple):
            i, j = ij
            return self.rows[i][j]
        return self.rows[ij]

    def __iter__(self):
        return iter(self.rows)

    def __eq__(self, other):
        if not isinstance(other, DenseMatrix):
            return NotImplemented
        return self.shape == other.shape and all(
            a == b for ra, rb in zip(self.rows, other.rows) for a, b in zip(ra, rb)
        )

    __hash__ = None

    def __repr__(self):
        return f"DenseMatrix({self.rows!r})"

    def __matmul__(self, other):
        return DenseMatrix(kernels.matmul(self.rows, other.rows))

    def __add__(self, other):
        return DenseMatrix([[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)])

    def __sub__(self, other):
        return DenseMatrix([[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)])

    def __neg__(self):
        return DenseMatrix([[-a for a in r] for r in self.rows])

    def scale(self, c):
        return DenseMatrix([[c * a for a in r] for r in self.rows])

    __rmul__ = scale

    @property
    def T(self):
        return DenseMatrix([list(c) for c in zip(*self.rows)])

    def shift(self, c):
        """self + c I."""
        return DenseMatrix(
            [[a + c if i == j else a for j, a in enumerate(r)] for i, r in enumerate(self.rows)]
        )

    def reversed(self):
        """Conjugate by the order-reversing permutation (index k -> N - k)."""
        return DenseMatrix([list(reversed(r)) for r in reversed(self.rows)])

    def is_zero(self):
        return all(a == 0 for r in self.rows for a in r)

    def max_abs(self):
        best = 0
        for r in self.rows:
            for a in r:
                if abs(a) > best:
                    best = abs(a)
        return best

    def is_identity(self):
        return all(a == (1 if i == j else 0) for i, r in enumerate(self.rows) for j, a in enumerate(r))

    def rank(self):
        return len(_row_echelon([list(r) for r in self.rows])[1])

    def inverse(self):
        n, m = self.shape
        if n != m:
            raise ValueError("inverse of a non-square matrix")
        one = _one(self.rows)
        aug = [list(r) + [one if i == j else 0 * one for j in range(n)] for i, r in enumerate(self.rows)]
        red, pivots = _row_echelon(aug, ncols=n, reduced=True)
        if len(pivots) != n:
            raise ZeroDivisionError("singular matrix")
        return DenseMatrix([r[n:] for r in red])


def _one(rows):
    for r in rows:
        for a in r:
            return a**0
    return 1


def _row_echelon(rows, ncols=None, reduced=False):
    """Gauss(-Jordan) elimination over an exact field; returns (rows, pivot columns)."""
    nrows = len(rows)
    ncols = len(rows[0]) if ncols is None else ncols
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [a * inv for a in rows[r]]
        for i in range(nrows):
            if i != r and (reduced or i > r) and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return rows, pivots


def band_predicates(M: DenseMatrix) -> dict:
    """Exact structural predicates; "nonzero" means the field element is not 0."""
    n = len(M)
    rows = M.rows
    off = lambda k: all(rows[i][j] == 0 for i in range(n) for j in range(n) if abs(i - j) > k)  # noqa: E731
    diagonal = off(0)
    tridiagonal = off(1)
    sub = all(rows[i + 1][i] != 0 for i in range(n - 1))
    sup = all(rows[i][i + 1] != 0 for i in range(n - 1))
    lower_band = all(rows[i][j] == 0 for i in range(n) for j in range(n) if j > i or i - j > 1)
    upper_band = all(rows[i][j] == 0 for i in range(n) for j in range(n) if i > j or j - i > 1)
    diag_vals = [rows[i][i] for i in range(n)]
    distinct = all(diag_vals[i] != diag_vals[j] for i in range(n) for j in range(i))
    return {
        "diagonal": diagonal,
        "tridiagonal": tridiagonal,
        "irreducible_tridiagonal": tridiagonal and n > 1 and sub and sup,
        "upper_bidiagonal": upper_band,
        "lower_bidiagonal": lower_band,
        "irreducible_upper_bidiagonal": upper_band and n > 1 and sup,
        "irreducible_lower_bidiagonal": lower_band and n > 1 and sub,
        "multiplicity_free_diagonal": diagonal and distinct,
    }


def nullspace(M: DenseMatrix) -> list:
    """Basis of {v : M v = 0}, one vector per free column."""
    n, m = M.shape
    rows, pivots = _row_echelon([list(r) for r in M.rows], ncols=m, reduced=True)
    one = _one(M.rows)
    basis = []
    for free in (c for c in range(m) if c not in pivots):
        v = [0 * one] * m
        v[free] = one
        for r, c in enumerate(pivots):
            v[c] = -rows[r][free]
        basis.append(v)
    return basis
