"""Exact integer matrix algebra on numpy object-dtype arrays.

All matrices are 2-d ``numpy.ndarray`` with ``dtype=object`` holding Python
ints, so there is no overflow anywhere.  This module supplies the Smith
normal form with transform tracking, the canonical column-style Hermite
normal form used to compare lattices, integer nullspaces and linear solves,
and a small :class:`Lattice` wrapper bundling the common queries.
"""

from dataclasses import dataclass

import numpy as np

from .errors import ShapeError

__all__ = [
    "intmat",
    "zeros",
    "identity",
    "mat_eq",
    "SmithDecomposition",
    "smith",
    "hnf_columns",
    "nullspace",
    "solve",
    "Lattice",
]


def intmat(rows):
    """Build an object-dtype integer matrix from nested lists (or an array).

    Accepts an (r, c) nested list; r = 0 or c = 0 shapes must be passed as
    explicit arrays since nested lists cannot express them.
    """
    if isinstance(rows, np.ndarray):
        if rows.ndim != 2:
            raise ShapeError(f"expected 2-d matrix, got ndim={rows.ndim}")
        out = rows.astype(object, copy=True)
        for idx in np.ndindex(out.shape):
            out[idx] = int(out[idx])
        return out
    a = np.empty((len(rows), len(rows[0]) if rows else 0), dtype=object)
    for i, row in enumerate(rows):
        if len(row) != a.shape[1]:
            raise ShapeError("ragged rows in matrix literal")
        for j, x in enumerate(row):
            a[i, j] = int(x)
    return a


def zeros(r, c):
    return np.zeros((r, c), dtype=object)


def identity(n):
    a = zeros(n, n)
    for i in range(n):
        a[i, i] = 1
    return a


def mat_eq(a, b):
    if a.shape != b.shape:
        return False
    if a.size == 0:
        return True
    return bool((a == b).all())


@dataclass(frozen=True)
class SmithDecomposition:
    """Smith normal form ``D = U @ A @ V`` with unimodular U, V.

    ``diag`` lists the diagonal of D (length min(shape)); the nonzero
    entries are positive, come first, and each divides the next.  ``uinv``
    and ``vinv`` are the exact inverses of U and V.
    """

    u: np.ndarray
    d: np.ndarray
    v: np.ndarray
    uinv: np.ndarray
    vinv: np.ndarray

    @property
    def diag(self):
        return [self.d[i, i] for i in range(min(self.d.shape))]

    @property
    def rank(self):
        return sum(1 for x in self.diag if x != 0)


def smith(a):
    """Smith normal form with all four transforms tracked.

    Pivots are chosen as the smallest nonzero entry of the remaining
    submatrix, which keeps intermediate growth tame at desk scale.
    """
    a = a.astype(object, copy=True)
    r, c = a.shape
    u, uinv = identity(r), identity(r)
    v, vinv = identity(c), identity(c)

    def row_op(i, j, q):
        # R_i -= q R_j  (on a and u); inverse: column op on uinv
        a[i, :] -= q * a[j, :]
        u[i, :] -= q * u[j, :]
        uinv[:, j] += q * uinv[:, i]

    def col_op(i, j, q):
        # C_j -= q C_i  (on a and v); inverse: row op on vinv
        a[:, j] -= q * a[:, i]
        v[:, j] -= q * v[:, i]
        vinv[i, :] += q * vinv[j, :]

    def row_swap(i, j):
        a[[i, j], :] = a[[j, i], :]
        u[[i, j], :] = u[[j, i], :]
        uinv[:, [i, j]] = uinv[:, [j, i]]

    def col_swap(i, j):
        a[:, [i, j]] = a[:, [j, i]]
        v[:, [i, j]] = v[:, [j, i]]
        vinv[[i, j], :] = vinv[[j, i], :]

    def row_neg(i):
        a[i, :] = -a[i, :]
        u[i, :] = -u[i, :]
        uinv[:, i] = -uinv[:, i]

    t = 0
    while t < min(r, c):
        # locate the smallest nonzero entry of a[t:, t:]
        best = None
        for i in range(t, r):
            for j in range(t, c):
                x = a[i, j]
                if x != 0 and (best is None or abs(x) < abs(a[best[0], best[1]])):
                    best = (i, j)
        if best is None:
            break
        if best[0] != t:
            row_swap(t, best[0])
        if best[1] != t:
            col_swap(t, best[1])

        while True:
            # clear column t
            dirty = False
            for i in range(t + 1, r):
                if a[i, t] != 0:
                    q = a[i, t] // a[t, t]
                    row_op(i, t, q)
                    if a[i, t] != 0:
                        row_swap(t, i)
                        dirty = True
            if dirty:
                continue
            # clear row t
            for j in range(t + 1, c):
                if a[t, j] != 0:
                    q = a[t, j] // a[t, t]
                    col_op(t, j, q)
                    if a[t, j] != 0:
                        col_swap(t, j)
                        dirty = True
            if dirty:
                continue
            # pivot must divide the remaining submatrix
            p = a[t, t]
            offender = None
            for i in range(t + 1, r):
                for j in range(t + 1, c):
                    if a[i, j] % p != 0:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            row_op(t, offender, -1)  # R_t += R_offender, restart reduction
        if a[t, t] < 0:
            row_neg(t)
        t += 1

    return SmithDecomposition(u=u, d=a, v=v, uinv=uinv, vinv=vinv)


def hnf_columns(a):
    """Canonical column Hermite normal form of the lattice spanned by the
    columns of ``a``.

    Returns a (d, r) matrix whose columns are the unique basis with: the
    lowest nonzero entry (pivot) of column k sits at row p_k with p_k
    strictly increasing, pivots positive, and every entry to the right of a
    pivot in its row reduced to [0, pivot).  Zero columns are dropped, so
    two column spans are equal iff their forms are identical.
    """
    h = a.astype(object, copy=True)
    d, g = h.shape
    cut = g  # columns >= cut are finalized
    for i in range(d - 1, -1, -1):
        # active columns with a nonzero entry in row i
        while True:
            js = [j for j in range(cut) if h[i, j] != 0]
            if len(js) <= 1:
                break
            jmin = min(js, key=lambda j: abs(h[i, j]))
            for j in js:
                if j == jmin:
                    continue
                q = h[i, j] // h[i, jmin]
                h[:, j] -= q * h[:, jmin]
        js = [j for j in range(cut) if h[i, j] != 0]
        if not js:
            continue
        (j,) = js
        cut -= 1
        if j != cut:
            h[:, [j, cut]] = h[:, [cut, j]]
        if h[i, cut] < 0:
            h[:, cut] = -h[:, cut]
        for k in range(cut + 1, g):
            q = h[i, k] // h[i, cut]
            if q != 0:
                h[:, k] -= q * h[:, cut]
    return h[:, cut:]


def nullspace(a):
    """Basis (as columns) of the integer solutions of ``a @ x = 0``."""
    if a.shape[0] == 0:
        return identity(a.shape[1])
    s = smith(a)
    return s.v[:, s.rank:]


def solve(a, b):
    """One integer solution x of ``a @ x = b``, or None if there is none."""
    s = smith(a)
    w = s.u @ np.asarray(b, dtype=object)
    diag = s.diag
    y = zeros(a.shape[1], 1)[:, 0]
    for i in range(a.shape[0]):
        if i < len(diag) and diag[i] != 0:
            if w[i] % diag[i] != 0:
                return None
            y[i] = w[i] // diag[i]
        elif w[i] != 0:
            return None
    return s.v @ y


class Lattice:
    """A sublattice of Z^d held by its canonical column-HNF basis."""

    def __init__(self, basis):
        self.basis = hnf_columns(basis)
        self.dim = self.basis.shape[0]
        self.rank = self.basis.shape[1]
        self._smith = None

    @classmethod
    def from_columns(cls, dim, cols):
        """Lattice spanned by the given column vectors (list of 1-d arrays)."""
        if not cols:
            return cls(zeros(dim, 0))
        m = np.column_stack([np.asarray(c, dtype=object) for c in cols])
        return cls(m)

    @classmethod
    def full(cls, dim):
        return cls(identity(dim))

    def _decomp(self):
        if self._smith is None:
            self._smith = smith(self.basis)
        return self._smith

    def solve(self, v):
        """Coefficients c with basis @ c = v, or None if v is outside."""
        v = np.asarray(v, dtype=object)
        if self.rank == 0:
            return zeros(0, 1)[:, 0] if not any(x != 0 for x in v) else None
        s = self._decomp()
        w = s.u @ v
        diag = s.diag  # all nonzero: the HNF basis has full column rank
        y = zeros(self.rank, 1)[:, 0]
        for i in range(self.dim):
            if i < self.rank:
                if w[i] % diag[i] != 0:
                    return None
                y[i] = w[i] // diag[i]
            elif w[i] != 0:
                return None
        return s.v @ y

    def contains(self, v):
        return self.solve(v) is not None

    def __eq__(self, other):
        return isinstance(other, Lattice) and mat_eq(self.basis, other.basis)

    def __le__(self, other):
        """Containment self <= other."""
        return all(other.contains(self.basis[:, j]) for j in range(self.rank))

    def sum(self, other):
        if self.dim != other.dim:
            raise ShapeError("lattice dims differ")
        return Lattice(np.hstack([self.basis, other.basis]))

    def intersection(self, other):
        if self.dim != other.dim:
            raise ShapeError("lattice dims differ")
        if self.rank == 0 or other.rank == 0:
            return Lattice(zeros(self.dim, 0))
        stacked = np.hstack([self.basis, -other.basis])
        ns = nullspace(stacked)
        return Lattice(self.basis @ ns[: self.rank, :])

    def preimage(self, m):
        """Lattice {x : m @ x in self} for a matrix m into this space."""
        if m.shape[0] != self.dim:
            raise ShapeError("matrix target dim differs from lattice dim")
        stacked = np.hstack([m, -self.basis]) if self.rank else m
        ns = nullspace(stacked)
        return Lattice(ns[: m.shape[1], :])
