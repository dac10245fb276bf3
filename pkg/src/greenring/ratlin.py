"""Exact rational scalars and matrices.

Everything downstream (Hopf structure constants, module actions, hom
spaces) runs on this module, so arithmetic is exact: scalars are GMP
rationals (`fractions.Fraction` when gmpy2 is unavailable) and all
elimination uses deterministic pivoting -- first nonzero entry in
row-major scan -- so kernel bases and normal forms are reproducible.

Matrices are stored sparsely (dict of nonzero entries) because module
action matrices are mostly zeros, but the public contract is the dense
one: a rows x cols grid of rationals.
"""

from __future__ import annotations

from .errors import NoSolution

try:
    from gmpy2 import mpq as Rat
except ImportError:  # pragma: no cover - gmpy2 is normally present
    from fractions import Fraction as Rat

ZERO = Rat(0)
ONE = Rat(1)


def rat(p, q=1):
    """Exact rational p/q, always in lowest terms with positive denominator."""
    return Rat(p, q)


def rat_from_str(s):
    """Parse "p/q" or "p"."""
    s = s.strip()
    if "/" in s:
        p, q = s.split("/")
        return Rat(int(p), int(q))
    return Rat(int(s))


def rat_to_str(x):
    """Serialize as "p/q", or "p" when the denominator is 1."""
    x = Rat(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


class RatMatrix:
    """Dense-contract exact rational matrix with a sparse backing store.

    `data` maps (i, j) -> nonzero Rat.  Mutating constructors are kept
    module-internal; treat instances as immutable once built.
    """

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows, cols, data=None):
        self.rows = rows
        self.cols = cols
        self.data = {} if data is None else data

    # -- constructors ------------------------------------------------

    @classmethod
    def from_rows(cls, rows_list):
        nr = len(rows_list)
        nc = len(rows_list[0]) if nr else 0
        data = {}
        for i, row in enumerate(rows_list):
            if len(row) != nc:
                raise ValueError("ragged rows")
            for j, v in enumerate(row):
                v = Rat(v)
                if v:
                    data[(i, j)] = v
        return cls(nr, nc, data)

    @classmethod
    def zeros(cls, rows, cols):
        return cls(rows, cols)

    @classmethod
    def identity(cls, n):
        return cls(n, n, {(i, i): ONE for i in range(n)})

    @classmethod
    def diagonal(cls, entries):
        data = {}
        for i, v in enumerate(entries):
            v = Rat(v)
            if v:
                data[(i, i)] = v
        return cls(len(entries), len(entries), data)

    @classmethod
    def from_columns(cls, columns, rows=None):
        """Matrix whose j-th column is columns[j] (vectors as sequences)."""
        nc = len(columns)
        nr = rows if rows is not None else (len(columns[0]) if nc else 0)
        data = {}
        for j, col in enumerate(columns):
            for i, v in enumerate(col):
                v = Rat(v)
                if v:
                    data[(i, j)] = v
        return cls(nr, nc, data)

    # -- access ------------------------------------------------------

    def __getitem__(self, ij):
        return self.data.get(ij, ZERO)

    def to_rows(self):
        return [[self.data.get((i, j), ZERO) for j in range(self.cols)]
                for i in range(self.rows)]

    def column(self, j):
        return [self.data.get((i, j), ZERO) for i in range(self.rows)]

    def row_dicts(self):
        rows = [dict() for _ in range(self.rows)]
        for (i, j), v in self.data.items():
            rows[i][j] = v
        return rows

    def col_dicts(self):
        cols = [dict() for _ in range(self.cols)]
        for (i, j), v in self.data.items():
            cols[j][i] = v
        return cols

    # -- arithmetic --------------------------------------------------

    def __eq__(self, other):
        return (isinstance(other, RatMatrix) and self.rows == other.rows
                and self.cols == other.cols and self.data == other.data)

    def __hash__(self):
        return hash((self.rows, self.cols, frozenset(self.data.items())))

    def __add__(self, other):
        assert self.rows == other.rows and self.cols == other.cols
        data = dict(self.data)
        for k, v in other.data.items():
            nv = data.get(k, ZERO) + v
            if nv:
                data[k] = nv
            else:
                data.pop(k, None)
        return RatMatrix(self.rows, self.cols, data)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return RatMatrix(self.rows, self.cols,
                         {k: -v for k, v in self.data.items()})

    def scale(self, c):
        c = Rat(c)
        if not c:
            return RatMatrix.zeros(self.rows, self.cols)
        return RatMatrix(self.rows, self.cols,
                         {k: c * v for k, v in self.data.items()})

    def __mul__(self, other):
        """Matrix product (or scalar multiple for non-matrix operands)."""
        if not isinstance(other, RatMatrix):
            return self.scale(other)
        assert self.cols == other.rows, "shape mismatch"
        rows_b = other.row_dicts()
        acc = {}
        for (i, k), v in self.data.items():
            for j, w in rows_b[k].items():
                key = (i, j)
                nv = acc.get(key, ZERO) + v * w
                if nv:
                    acc[key] = nv
                else:
                    del acc[key]
        return RatMatrix(self.rows, other.cols, acc)

    __rmul__ = scale

    def apply(self, vec):
        """Matrix-vector product; vec is a sequence of length cols."""
        out = [ZERO] * self.rows
        for (i, j), v in self.data.items():
            w = vec[j]
            if w:
                out[i] = out[i] + v * w
        return out

    def transpose(self):
        return RatMatrix(self.cols, self.rows,
                         {(j, i): v for (i, j), v in self.data.items()})

    def trace(self):
        return sum((v for (i, j), v in self.data.items() if i == j), ZERO)

    def is_zero(self):
        return not self.data

    def power(self, n):
        assert self.rows == self.cols
        result = RatMatrix.identity(self.rows)
        base = self
        while n:
            if n & 1:
                result = result * base
            base_needed = n >> 1
            if base_needed:
                base = base * base
            n = base_needed
        return result

    def rank(self):
        return len(_echelon(self.row_dicts())[0])

    def kron(self, other):
        return kronecker_product(self, other)

    def hstack(self, other):
        assert self.rows == other.rows
        data = dict(self.data)
        for (i, j), v in other.data.items():
            data[(i, j + self.cols)] = v
        return RatMatrix(self.rows, self.cols + other.cols, data)

    def __repr__(self):
        if self.rows * self.cols <= 64:
            body = "; ".join(
                " ".join(rat_to_str(self.data.get((i, j), ZERO))
                         for j in range(self.cols))
                for i in range(self.rows))
            return f"RatMatrix({self.rows}x{self.cols}: {body})"
        return f"RatMatrix({self.rows}x{self.cols}, nnz={len(self.data)})"


def block_diag(mats):
    """Block-diagonal matrix from a list of RatMatrix."""
    r = c = 0
    data = {}
    for m in mats:
        for (i, j), v in m.data.items():
            data[(r + i, c + j)] = v
        r += m.rows
        c += m.cols
    return RatMatrix(r, c, data)


def kronecker_product(a, b):
    """(A kron B)[(i*rowsB+k), (j*colsB+l)] = A[i,j] * B[k,l]."""
    data = {}
    rb, cb = b.rows, b.cols
    for (i, j), v in a.data.items():
        for (k, l), w in b.data.items():
            data[(i * rb + k, j * cb + l)] = v * w
    return RatMatrix(a.rows * rb, a.cols * cb, data)


# -- elimination core ------------------------------------------------
#
# Rows are dicts col -> nonzero Rat.  Pivot choice: rows are consumed in
# the given order and each pivots on its leftmost surviving column, which
# realizes the "first nonzero entry by row-major scan" rule.


def _echelon(rows):
    """Reduced row echelon form of a list of sparse rows.

    Returns (pivot_cols, pivot_rows): parallel lists, pivot_cols ascending
    after the final sort, each pivot row normalized to pivot entry 1 and
    fully reduced against the others.
    """
    # Process sparsest rows first: cheap and kills e.g. the one-entry
    # rows produced by diagonal group-like constraints immediately.
    order = sorted(range(len(rows)), key=lambda i: (len(rows[i]), i))
    pivots = {}  # col -> row dict
    for idx in order:
        r = dict(rows[idx])
        while r:
            c = min(r)
            p = pivots.get(c)
            if p is None:
                inv = ONE / r[c]
                pivots[c] = {cc: vv * inv for cc, vv in r.items()}
                break
            f = r.pop(c)
            for cc, vv in p.items():
                if cc == c:
                    continue
                nv = r.get(cc, ZERO) - f * vv
                if nv:
                    r[cc] = nv
                else:
                    r.pop(cc, None)
    cols = sorted(pivots)
    # Back-substitute for the reduced form.
    for ci in reversed(range(len(cols))):
        c = cols[ci]
        prow = pivots[c]
        for c2 in cols[:ci]:
            r2 = pivots[c2]
            f = r2.get(c)
            if not f:
                continue
            for cc, vv in prow.items():
                nv = r2.get(cc, ZERO) - f * vv
                if nv:
                    r2[cc] = nv
                else:
                    r2.pop(cc, None)
    return cols, [pivots[c] for c in cols]


def sparse_kernel(rows, ncols):
    """Kernel basis of the linear system given by sparse rows.

    Returns a list of dense vectors (length ncols), one per free column
    in ascending order, each with entry 1 at its free column -- the
    reduced echelon normal form of the kernel.
    """
    pivot_cols, pivot_rows = _echelon(rows)
    pivot_set = set(pivot_cols)
    basis = []
    for f in range(ncols):
        if f in pivot_set:
            continue
        v = [ZERO] * ncols
        v[f] = ONE
        for c, row in zip(pivot_cols, pivot_rows):
            w = row.get(f)
            if w:
                v[c] = -w
        basis.append(v)
    return basis


def kernel_basis(a):
    """Basis of the right null space of a RatMatrix, in normal form."""
    return sparse_kernel(a.row_dicts(), a.cols)


def solve_linear(a, b):
    """One exact solution of A x = b plus a kernel basis.

    Raises NoSolution when b is not in the image of A.
    """
    if len(b) != a.rows:
        raise ValueError("rhs length must equal row count")
    rows = a.row_dicts()
    aug = a.cols  # column index used for the right-hand side
    for i, bi in enumerate(b):
        bi = Rat(bi)
        if bi:
            rows[i][aug] = bi
    pivot_cols, pivot_rows = _echelon(rows)
    if aug in pivot_cols:
        raise NoSolution("rhs not in the image")
    x = [ZERO] * a.cols
    for c, row in zip(pivot_cols, pivot_rows):
        x[c] = row.get(aug, ZERO)
    kernel = sparse_kernel(a.row_dicts(), a.cols)
    return x, kernel


class SpanRREF:
    """Incrementally maintained RREF of a growing set of vectors.

    Supports rank queries, membership, unique coordinates of a vector at
    the pivot positions, and reduction modulo the span.  Used for column
    spaces, submodule bases and quotient constructions.
    """

    def __init__(self, dim):
        self.dim = dim
        self.pivots = {}  # col -> sparse row dict
        self.order = []   # pivot cols in insertion order

    def reduce(self, vec):
        """Residual of vec (dense sequence) modulo the current span."""
        r = {i: Rat(v) for i, v in enumerate(vec) if v}
        return self._reduce_sparse(r)

    def _reduce_sparse(self, r):
        for c in sorted(r):
            f = r.get(c)
            if not f:
                continue
            p = self.pivots.get(c)
            if p is None:
                continue
            del r[c]
            for cc, vv in p.items():
                if cc == c:
                    continue
                nv = r.get(cc, ZERO) - f * vv
                if nv:
                    r[cc] = nv
                else:
                    r.pop(cc, None)
        return r

    def add(self, vec):
        """Add vec to the span; returns True if the rank grew."""
        r = self.reduce(vec)
        if not r:
            return False
        c = min(r)
        inv = ONE / r[c]
        row = {cc: vv * inv for cc, vv in r.items()}
        # Keep reduced form: eliminate the new pivot from old rows.
        for c2, r2 in self.pivots.items():
            f = r2.get(c)
            if f:
                for cc, vv in row.items():
                    if cc == c:
                        r2.pop(c, None)
                        continue
                    nv = r2.get(cc, ZERO) - f * vv
                    if nv:
                        r2[cc] = nv
                    else:
                        r2.pop(cc, None)
        self.pivots[c] = row
        self.order.append(c)
        return True

    @property
    def rank(self):
        return len(self.pivots)

    def contains(self, vec):
        return not self.reduce(vec)

    def basis_vectors(self):
        """Current basis in ascending pivot order, as dense vectors."""
        out = []
        for c in sorted(self.pivots):
            row = self.pivots[c]
            v = [ZERO] * self.dim
            for cc, vv in row.items():
                v[cc] = vv
            out.append(v)
        return out

    def pivot_cols(self):
        return sorted(self.pivots)

    def coordinates(self, vec):
        """Coordinates of vec in basis_vectors(); raises if not in span."""
        piv = sorted(self.pivots)
        res = {i: Rat(v) for i, v in enumerate(vec) if v}
        coords = []
        for c in piv:
            f = res.pop(c, ZERO)
            coords.append(f)
            if f:
                for cc, vv in self.pivots[c].items():
                    if cc == c:
                        continue
                    nv = res.get(cc, ZERO) - f * vv
                    if nv:
                        res[cc] = nv
                    else:
                        res.pop(cc, None)
        if res:
            raise NoSolution("vector not in span")
        return coords


def column_space(a):
    """SpanRREF of the column space of a RatMatrix."""
    span = SpanRREF(a.rows)
    for j, col in enumerate(a.col_dicts()):
        vec = [ZERO] * a.rows
        for i, v in col.items():
            vec[i] = v
        span.add(vec)
    return span
