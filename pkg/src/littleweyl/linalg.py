"""Exact linear algebra over the rationals.

Vectors are tuples of Fraction, matrices are tuples of row tuples.  All
reductions produce a canonical reduced row echelon form, so two subspaces
are equal as sets exactly when their basis matrices are identical.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

Vec = tuple[Fraction, ...]
Mat = tuple[Vec, ...]


def frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def vec(entries: Iterable) -> Vec:
    return tuple(frac(x) for x in entries)


def mat(rows: Iterable[Iterable]) -> Mat:
    return tuple(vec(r) for r in rows)


def zero_vec(n: int) -> Vec:
    return (Fraction(0),) * n


def vec_add(a: Vec, b: Vec) -> Vec:
    return tuple(x + y for x, y in zip(a, b, strict=True))


def vec_sub(a: Vec, b: Vec) -> Vec:
    return tuple(x - y for x, y in zip(a, b, strict=True))


def vec_scale(c, a: Vec) -> Vec:
    c = frac(c)
    return tuple(c * x for x in a)


def dot(a: Vec, b: Vec) -> Fraction:
    return sum((x * y for x, y in zip(a, b, strict=True)), Fraction(0))


def mat_vec(m: Mat, v: Vec) -> Vec:
    return tuple(dot(row, v) for row in m)


def mat_mul(a: Mat, b: Mat) -> Mat:
    bt = tuple(zip(*b)) if b else ()
    return tuple(tuple(dot(row, vec(col)) for col in bt) for row in a)


def identity(n: int) -> Mat:
    return tuple(
        tuple(Fraction(1) if i == j else Fraction(0) for j in range(n)) for i in range(n)
    )


def mat_inverse(m: Mat) -> Mat:
    """Inverse of a square rational matrix; raises on singular input."""
    n = len(m)
    aug = [list(row) + list(identity(n)[i]) for i, row in enumerate(m)]
    red, pivots = rref(aug)
    if pivots != tuple(range(n)):
        raise ValueError("matrix is singular")
    return tuple(tuple(red[i][n:]) for i in range(n))


def row_times_mat(f: Vec, m: Mat) -> Vec:
    """The row vector f·M (composition of the functional f with M)."""
    n = len(m[0]) if m else 0
    return tuple(sum((f[i] * m[i][j] for i in range(len(m))), Fraction(0)) for j in range(n))


def mat_transpose(m: Mat) -> Mat:
    return tuple(zip(*m)) if m else ()


def rref(rows: Sequence[Sequence]) -> tuple[Mat, tuple[int, ...]]:
    """Reduced row echelon form.  Returns (nonzero rows, pivot columns)."""
    work = [list(vec(r)) for r in rows]
    if not work:
        return (), ()
    ncols = len(work[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, len(work)):
            if work[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        work[r], work[pivot_row] = work[pivot_row], work[r]
        pv = work[r][c]
        work[r] = [x / pv for x in work[r]]
        for i in range(len(work)):
            if i != r and work[i][c] != 0:
                f = work[i][c]
                work[i] = [x - f * y for x, y in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    out = tuple(tuple(row) for row in work[:r])
    return out, tuple(pivots)


def rank(rows: Sequence[Sequence]) -> int:
    return len(rref(rows)[0])


def kernel(rows: Sequence[Sequence], ncols: int) -> Mat:
    """Canonical basis of {x : M x = 0} for the matrix with the given rows."""
    red, pivots = rref(rows)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for r, p in enumerate(pivots):
            v[p] = -red[r][f]
        basis.append(tuple(v))
    red_basis, _ = rref(basis)
    return red_basis


def solve(rows: Sequence[Sequence], rhs: Sequence) -> Vec | None:
    """One solution of M x = b, or None if inconsistent."""
    rows = mat(rows)
    b = vec(rhs)
    if not rows:
        return None
    ncols = len(rows[0])
    aug = [list(r) + [bi] for r, bi in zip(rows, b, strict=True)]
    red, pivots = rref(aug)
    for row in red:
        if all(x == 0 for x in row[:-1]) and row[-1] != 0:
            return None
    x = [Fraction(0)] * ncols
    for r, p in enumerate(pivots):
        if p == ncols:
            return None
        x[p] = red[r][-1]
    return tuple(x)


def primitive(v: Sequence) -> Vec:
    """Scale a rational vector to a primitive integer vector, keeping direction."""
    v = vec(v)
    denoms = [x.denominator for x in v]
    l = 1
    for d in denoms:
        l = l * d // gcd(l, d)
    ints = [int(x * l) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    if g == 0:
        return v
    return tuple(Fraction(x // g) for x in ints)


def primitive_signed(v: Sequence) -> Vec:
    """Primitive integer vector with first nonzero entry positive."""
    p = primitive(v)
    for x in p:
        if x != 0:
            return p if x > 0 else vec_scale(-1, p)
    return p


def integer_kernel(rows: Sequence[Sequence[int]], ncols: int) -> list[tuple[int, ...]]:
    """Z-basis of {x in Z^n : M x = 0} for an integer matrix M.

    Column elimination with extended gcd steps; the tracked transformation is
    unimodular, so the result is a basis of the full (saturated) kernel lattice.
    """
    m = [list(map(int, r)) for r in rows]
    u = [[1 if i == j else 0 for j in range(ncols)] for i in range(ncols)]
    active = list(range(ncols))

    def col_combine(ca, cb, a, b, c, d):
        # (col_ca, col_cb) <- (a*col_ca + b*col_cb, c*col_ca + d*col_cb)
        for row in m:
            x, y = row[ca], row[cb]
            row[ca], row[cb] = a * x + b * y, c * x + d * y
        for row in u:
            x, y = row[ca], row[cb]
            row[ca], row[cb] = a * x + b * y, c * x + d * y

    for i in range(len(m)):
        nz = [c for c in active if m[i][c] != 0]
        while len(nz) > 1:
            ca, cb = nz[0], nz[1]
            x, y = m[i][ca], m[i][cb]
            g, s, t = _xgcd(x, y)
            col_combine(ca, cb, s, t, -(y // g), x // g)
            nz = [c for c in active if m[i][c] != 0]
        if nz:
            active.remove(nz[0])
    return [tuple(u[r][c] for r in range(ncols)) for c in active]


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    return old_r, old_s, old_t


@dataclass(frozen=True)
class Subspace:
    """Subspace of Q^n in canonical reduced row echelon form.

    Rows of ``basis_matrix`` are the basis vectors; equality of subspaces is
    equality of matrices.
    """

    ambient_dim: int
    basis_matrix: Mat

    @staticmethod
    def from_spanning(ambient_dim: int, rows: Sequence[Sequence]) -> "Subspace":
        red, _ = rref(rows)
        return Subspace(ambient_dim, red)

    @staticmethod
    def zero(ambient_dim: int) -> "Subspace":
        return Subspace(ambient_dim, ())

    @staticmethod
    def full(ambient_dim: int) -> "Subspace":
        return Subspace(ambient_dim, identity(ambient_dim))

    @staticmethod
    def from_coordinates(ambient_dim: int, indices: Iterable[int]) -> "Subspace":
        rows = []
        for i in sorted(set(indices)):
            v = [Fraction(0)] * ambient_dim
            v[i] = Fraction(1)
            rows.append(tuple(v))
        return Subspace(ambient_dim, tuple(rows))

    @property
    def dim(self) -> int:
        return len(self.basis_matrix)

    def contains_vector(self, v: Sequence) -> bool:
        v = vec(v)
        red, _ = rref(self.basis_matrix + (v,))
        return len(red) == self.dim

    def contains(self, other: "Subspace") -> bool:
        red, _ = rref(self.basis_matrix + other.basis_matrix)
        return len(red) == self.dim

    def add(self, other: "Subspace") -> "Subspace":
        return Subspace.from_spanning(
            self.ambient_dim, self.basis_matrix + other.basis_matrix
        )

    def intersect(self, other: "Subspace") -> "Subspace":
        """U cap V via the kernel of the stacked coefficient system."""
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.ambient_dim)
        k, l = self.dim, other.dim
        # columns of M are the equations sum a_i u_i - sum b_j v_j = 0
        eq_rows = []
        for c in range(self.ambient_dim):
            eq_rows.append(
                tuple(self.basis_matrix[i][c] for i in range(k))
                + tuple(-other.basis_matrix[j][c] for j in range(l))
            )
        ker = kernel(eq_rows, k + l)
        rows = []
        for coeffs in ker:
            v = zero_vec(self.ambient_dim)
            for i in range(k):
                v = vec_add(v, vec_scale(coeffs[i], self.basis_matrix[i]))
            rows.append(v)
        return Subspace.from_spanning(self.ambient_dim, rows)

    def annihilator(self) -> Mat:
        """Canonical basis of functionals vanishing on the subspace."""
        return kernel(self.basis_matrix, self.ambient_dim)

    def restrict_to_coordinates(self, indices: Sequence[int]) -> "Subspace":
        """Vectors of the subspace supported on the given coordinates."""
        comp = [c for c in range(self.ambient_dim) if c not in set(indices)]
        if not comp or self.dim == 0:
            return self
        eq_rows = [tuple(self.basis_matrix[i][c] for i in range(self.dim)) for c in comp]
        ker = kernel(eq_rows, self.dim)
        rows = []
        for coeffs in ker:
            v = zero_vec(self.ambient_dim)
            for i in range(self.dim):
                v = vec_add(v, vec_scale(coeffs[i], self.basis_matrix[i]))
            rows.append(v)
        return Subspace.from_spanning(self.ambient_dim, rows)

    def transform(self, m: Mat) -> "Subspace":
        """Image under the linear map given by the matrix (columns = input coords)."""
        rows = [mat_vec(m, row) for row in self.basis_matrix]
        return Subspace.from_spanning(len(m), rows)

    def reduce_vector(self, v: Sequence) -> Vec:
        """Canonical representative of v modulo the subspace."""
        v = list(vec(v))
        _, pivots = rref(self.basis_matrix)
        for row, p in zip(self.basis_matrix, pivots):
            if v[p] != 0:
                f = v[p]
                for c in range(len(v)):
                    v[c] -= f * row[c]
        return tuple(v)
