"""Dense exact linear algebra over a FieldSpec.

Pivoting is deterministic: the pivot for a column is the first row (in
current order) with a nonzero entry.  Every basis returned here is in
reduced row echelon form, so two subspaces are equal exactly when their
``rows`` tuples are equal.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import FieldMismatch
from .scalars import MAX_BITS, FieldSpec, Raw

Vector = tuple


@dataclass(frozen=True)
class Matrix:
    field: FieldSpec
    rows: int
    cols: int
    entries: tuple  # tuple of row tuples of raw scalars

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ValueError(f"entries do not match shape {self.rows}x{self.cols}")

    @classmethod
    def from_rows(cls, field: FieldSpec, rows: Sequence[Sequence], cols: int | None = None) -> Matrix:
        rows = [tuple(field.coerce(v) for v in r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        return cls(field, len(rows), cols, tuple(rows))

    @classmethod
    def from_columns(cls, field: FieldSpec, columns: Sequence[Sequence], rows: int | None = None) -> Matrix:
        if rows is None:
            rows = len(columns[0]) if columns else 0
        return cls(field, rows, len(columns), tuple(tuple(c[i] for c in columns) for i in range(rows)))

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> Matrix:
        return cls(field, n, n, tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, field: FieldSpec, rows: int, cols: int) -> Matrix:
        return cls(field, rows, cols, tuple((0,) * cols for _ in range(rows)))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.entries)

    def transpose(self) -> Matrix:
        return Matrix(self.field, self.cols, self.rows, tuple(self.column(j) for j in range(self.cols)))

    def matvec(self, v: Sequence) -> tuple:
        if len(v) != self.cols:
            raise ValueError("vector length does not match column count")
        f = self.field
        out = []
        for r in self.entries:
            acc = 0
            for a, b in zip(r, v):
                if a and b:
                    acc += a * b
            out.append(f.normalize(acc))
        return tuple(out)

    def __matmul__(self, other: Matrix) -> Matrix:
        if self.field != other.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        cols = [other.column(j) for j in range(other.cols)]
        f = self.field
        entries = tuple(
            tuple(f.normalize(sum(a * b for a, b in zip(r, c))) for c in cols) for r in self.entries
        )
        return Matrix(f, self.rows, other.cols, entries)

    def scale(self, s) -> Matrix:
        f = self.field
        s = f.coerce(s)
        return Matrix(f, self.rows, self.cols, tuple(tuple(f.mul(s, a) for a in r) for r in self.entries))


@dataclass(frozen=True)
class Subspace:
    """A subspace of field^dim given by its canonical (RREF) basis rows."""

    field: FieldSpec
    dim: int
    rows: tuple

    @property
    def dimension(self) -> int:
        return len(self.rows)

    def __len__(self) -> int:
        return len(self.rows)

    def __iter__(self):
        return iter(self.rows)

    def contains(self, v: Sequence) -> bool:
        return rank_of_rows(self.field, list(self.rows) + [tuple(v)], self.dim) == len(self.rows)

    def issubspace(self, other: Subspace) -> bool:
        return all(other.contains(r) for r in self.rows)

    def combination(self, coeffs: Sequence) -> tuple:
        """Linear combination sum(c_i * row_i)."""
        f = self.field
        acc = [0] * self.dim
        for c, r in zip(coeffs, self.rows):
            if c:
                for k, a in enumerate(r):
                    if a:
                        acc[k] += c * a
        return tuple(f.normalize(a) for a in acc)


# -- elimination kernels ----------------------------------------------------


def _rref_mod(rows: list, ncols: int, p: int) -> tuple[list, list]:
    m = [list(r) for r in rows if any(r)]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(m)):
            if m[i][c]:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        prow = m[r]
        inv = pow(prow[c], -1, p)
        if inv != 1:
            prow = m[r] = [a * inv % p for a in prow]
        for i in range(len(m)):
            if i != r:
                row = m[i]
                fct = row[c]
                if fct:
                    m[i] = [(a - fct * b) % p for a, b in zip(row, prow)]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return [tuple(row) for row in m[:r]], pivots


def _bounded(v: Fraction) -> Fraction:
    # every intermediate value obeys the same bound as a stored scalar
    if v.numerator.bit_length() > MAX_BITS or v.denominator.bit_length() > MAX_BITS:
        raise OverflowError(f"rational {v} exceeds {MAX_BITS}-bit bound")
    return v


def _rref_q(field: FieldSpec, rows: list, ncols: int) -> tuple[list, list]:
    m = [[Fraction(a) for a in r] for r in rows if any(r)]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(m)):
            if m[i][c]:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        pv = m[r][c]
        if pv != 1:
            m[r] = [_bounded(a / pv) for a in m[r]]
        prow = m[r]
        for i in range(len(m)):
            if i != r:
                fct = m[i][c]
                if fct:
                    m[i] = [_bounded(a - fct * b) if b else a for a, b in zip(m[i], prow)]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return [tuple(field.normalize(a) for a in row) for row in m[:r]], pivots


def rref(field: FieldSpec, rows: Sequence[Sequence], ncols: int) -> tuple[list, list]:
    """Reduced row echelon form. Returns (nonzero rows, pivot columns)."""
    if field.p is None:
        return _rref_q(field, list(rows), ncols)
    return _rref_mod(list(rows), ncols, field.p)


def _rank_int(rows: list, ncols: int) -> int:
    # fraction-free (Bareiss) elimination; every division is exact
    m = [list(r) for r in rows if any(r)]
    rank = 0
    prev = 1
    for c in range(ncols):
        piv = None
        for i in range(rank, len(m)):
            if m[i][c]:
                piv = i
                break
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        prow = m[rank]
        pv = prow[c]
        for i in range(rank + 1, len(m)):
            row = m[i]
            fct = row[c]
            for j in range(c + 1, ncols):
                row[j] = v = (pv * row[j] - fct * prow[j]) // prev
                if v.bit_length() > MAX_BITS:
                    raise OverflowError(f"elimination entry of {v.bit_length()} bits exceeds {MAX_BITS}-bit bound")
            row[c] = 0
        prev = pv
        rank += 1
        if rank == len(m):
            break
    return rank


def _rank_mod(rows: list, ncols: int, p: int) -> int:
    m = [list(r) for r in rows if any(r)]
    rank = 0
    for c in range(ncols):
        piv = None
        for i in range(rank, len(m)):
            if m[i][c]:
                piv = i
                break
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        prow = m[rank]
        inv = pow(prow[c], -1, p)
        for i in range(rank + 1, len(m)):
            row = m[i]
            fct = row[c]
            if fct:
                fct = fct * inv % p
                for j in range(c + 1, ncols):
                    row[j] = (row[j] - fct * prow[j]) % p
                row[c] = 0
        rank += 1
        if rank == len(m):
            break
    return rank


def rank_of_rows(field: FieldSpec, rows: Sequence[Sequence], ncols: int) -> int:
    if field.p is not None:
        return _rank_mod(list(rows), ncols, field.p)
    int_rows = []
    for r in rows:
        dens = [a.denominator for a in r if isinstance(a, Fraction)]
        if dens:
            scale = math.lcm(*dens)
            r = [int(a * scale) for a in r]
        int_rows.append(r)
    return _rank_int(int_rows, ncols)


# -- public operations -------------------------------------------------------


def rank(m: Matrix) -> int:
    return rank_of_rows(m.field, m.entries, m.cols)


def nullspace(m: Matrix) -> Subspace:
    """Canonical basis of {v : m v = 0}."""
    red, pivots = rref(m.field, m.entries, m.cols)
    f = m.field
    pivset = set(pivots)
    basis = []
    for free in range(m.cols):
        if free in pivset:
            continue
        v = [0] * m.cols
        v[free] = 1
        for row, pc in zip(red, pivots):
            if row[free]:
                v[pc] = f.neg(row[free])
        basis.append(tuple(v))
    return span(f, basis, m.cols)


def span(field: FieldSpec, vectors: Sequence[Sequence], dim: int) -> Subspace:
    red, _ = rref(field, vectors, dim)
    return Subspace(field, dim, tuple(red))


def solve(m: Matrix, b: Sequence) -> tuple | None:
    """One solution of m v = b with free variables 0, or None."""
    if len(b) != m.rows:
        raise ValueError("right-hand side length does not match row count")
    f = m.field
    aug = [tuple(r) + (f.coerce(x),) for r, x in zip(m.entries, b)]
    red, pivots = rref(f, aug, m.cols + 1)
    if pivots and pivots[-1] == m.cols:
        return None
    v = [0] * m.cols
    for row, pc in zip(red, pivots):
        v[pc] = row[m.cols]
    return tuple(v)
