"""Structure-constant algebras and their elements.

An algebra of dimension n over a field is fixed by constants c[i][j][k]
with e_i * e_j = sum_k c[i][j][k] e_k.  Nothing here assumes a unit or
associativity; a unit, when present, is optional metadata that is
verified on construction.
"""
from __future__ import annotations

import random
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import AlgebraMismatch, FieldMismatch, InvalidStructure
from .linalg import Matrix, solve
from .scalars import FieldSpec, Raw, Scalar


class StructureConstants:
    """An n-dimensional algebra given by a sparse multiplication table.

    ``entries`` is an iterable of ``(i, j, k, c)`` quadruples; omitted
    entries are zero and repeated ``(i, j, k)`` entries are summed.
    ``unit`` is the coordinate vector of a two-sided identity, if any.
    """

    def __init__(
        self,
        name: str,
        field: FieldSpec,
        dim: int,
        entries: Iterable[tuple],
        basis_names: Sequence[str] | None = None,
        unit: Sequence | int | None = None,
    ):
        if dim < 1:
            raise InvalidStructure("dimension must be at least 1")
        self.name = name
        self.field = field
        self.dim = dim
        self.basis_names = tuple(basis_names) if basis_names is not None else tuple(f"e{i}" for i in range(dim))
        if len(self.basis_names) != dim:
            raise InvalidStructure(f"expected {dim} basis names, got {len(self.basis_names)}")

        dense: dict[tuple[int, int, int], Raw] = {}
        for i, j, k, c in entries:
            if not (0 <= i < dim and 0 <= j < dim and 0 <= k < dim):
                raise InvalidStructure(f"table index ({i}, {j}, {k}) out of range for dim {dim}")
            c = field.coerce(c)
            dense[i, j, k] = field.add(dense.get((i, j, k), 0), c)
        self._terms = [[[] for _ in range(dim)] for _ in range(dim)]
        for (i, j, k), c in sorted(dense.items()):
            if c:
                self._terms[i][j].append((k, c))
        self._terms = tuple(tuple(tuple(t) for t in row) for row in self._terms)

        if isinstance(unit, int) and not isinstance(unit, bool):
            unit = tuple(1 if i == unit else 0 for i in range(dim))
        if unit is not None:
            unit = tuple(field.coerce(u) for u in unit)
            if len(unit) != dim or not any(unit):
                raise InvalidStructure("unit must be a nonzero vector of length dim")
            for i in range(dim):
                e = self._basis_coords(i)
                if self.mul_coords(unit, e) != e or self.mul_coords(e, unit) != e:
                    raise InvalidStructure(f"declared unit is not a two-sided identity on {self.basis_names[i]}")
        self.unit = unit

    # -- table access -------------------------------------------------------

    def _basis_coords(self, i: int) -> tuple:
        return tuple(1 if k == i else 0 for k in range(self.dim))

    def entries(self) -> Iterator[tuple[int, int, int, Raw]]:
        """Nonzero table entries in (i, j, k) order."""
        for i in range(self.dim):
            for j in range(self.dim):
                for k, c in self._terms[i][j]:
                    yield i, j, k, c

    def terms(self, i: int, j: int) -> tuple:
        """Nonzero ``(k, c)`` pairs of e_i * e_j."""
        return self._terms[i][j]

    @cached_property
    def table(self) -> tuple:
        """Dense c[i][j][k] as nested tuples of raw scalars."""
        n = self.dim
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                v = [0] * n
                for k, c in self._terms[i][j]:
                    v[k] = c
                row.append(tuple(v))
            out.append(tuple(row))
        return tuple(out)

    @property
    def unit_index(self) -> int | None:
        if self.unit is None:
            return None
        nz = [i for i, u in enumerate(self.unit) if u]
        if len(nz) == 1 and self.unit[nz[0]] == 1:
            return nz[0]
        return None

    @property
    def has_unit(self) -> bool:
        return self.unit is not None

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, StructureConstants):
            return NotImplemented
        return (
            self.name == other.name
            and self.field == other.field
            and self.dim == other.dim
            and self.basis_names == other.basis_names
            and self.unit == other.unit
            and self._terms == other._terms
        )

    def __hash__(self) -> int:
        return hash((self.name, self.field, self.dim, self._terms))

    def __repr__(self) -> str:
        return f"StructureConstants({self.name!r}, {self.field}, dim={self.dim})"

    def same_table(self, other: StructureConstants) -> bool:
        return self.field == other.field and self.dim == other.dim and self._terms == other._terms

    # -- raw coordinate arithmetic -----------------------------------------

    def mul_coords(self, x: Sequence, y: Sequence) -> tuple:
        n = self.dim
        acc = [0] * n
        ys = [(j, b) for j, b in enumerate(y) if b]
        if ys:
            terms = self._terms
            for i, a in enumerate(x):
                if not a:
                    continue
                ti = terms[i]
                for j, b in ys:
                    t = ti[j]
                    if t:
                        ab = a * b
                        for k, c in t:
                            acc[k] += ab * c
        p = self.field.p
        if p is not None:
            return tuple(a % p for a in acc)
        norm = self.field.normalize
        return tuple(norm(a) for a in acc)

    def add_coords(self, x: Sequence, y: Sequence) -> tuple:
        add = self.field.add
        return tuple(add(a, b) for a, b in zip(x, y))

    def sub_coords(self, x: Sequence, y: Sequence) -> tuple:
        sub = self.field.sub
        return tuple(sub(a, b) for a, b in zip(x, y))

    def scale_coords(self, s: Raw, x: Sequence) -> tuple:
        mul = self.field.mul
        return tuple(mul(s, a) for a in x)

    def assoc_coords(self, x: Sequence, y: Sequence, z: Sequence) -> tuple:
        m = self.mul_coords
        return self.sub_coords(m(m(x, y), z), m(x, m(y, z)))

    def comm_coords(self, x: Sequence, y: Sequence) -> tuple:
        return self.sub_coords(self.mul_coords(x, y), self.mul_coords(y, x))

    # -- elements -----------------------------------------------------------

    def element(self, coords: Sequence) -> AlgebraElement:
        if len(coords) != self.dim:
            raise ValueError(f"expected {self.dim} coordinates, got {len(coords)}")
        return AlgebraElement(self, tuple(self.field.coerce(c) for c in coords))

    def basis(self, i: int | None = None):
        if i is None:
            return [AlgebraElement(self, self._basis_coords(k)) for k in range(self.dim)]
        return AlgebraElement(self, self._basis_coords(i))

    def named(self, name: str) -> AlgebraElement:
        return self.basis(self.basis_names.index(name))

    def zero(self) -> AlgebraElement:
        return AlgebraElement(self, (0,) * self.dim)

    def one(self) -> AlgebraElement:
        if self.unit is None:
            raise InvalidStructure(f"{self.name} has no unit")
        return AlgebraElement(self, self.unit)

    @cached_property
    def basis_associators(self) -> tuple:
        """(e_a, e_b, e_c) coordinates for all basis triples, indexed [a][b][c]."""
        n = self.dim
        prods = [[self.mul_coords(self._basis_coords(a), self._basis_coords(b)) for b in range(n)] for a in range(n)]
        basis = [self._basis_coords(c) for c in range(n)]
        out = []
        for a in range(n):
            plane = []
            for b in range(n):
                ab = prods[a][b]
                plane.append(tuple(
                    self.sub_coords(self.mul_coords(ab, basis[c]), self.mul_coords(basis[a], prods[b][c]))
                    for c in range(n)
                ))
            out.append(tuple(plane))
        return tuple(out)

    # -- finite enumeration -------------------------------------------------

    @property
    def size(self) -> int | None:
        """Number of elements, or None over Q."""
        p = self.field.p
        return None if p is None else p ** self.dim

    def element_at(self, index: int) -> AlgebraElement:
        """Element with little-endian base-p digits ``index``."""
        p = self.field.p
        if p is None:
            raise ValueError("elements are only enumerable over a finite field")
        coords = []
        for _ in range(self.dim):
            index, r = divmod(index, p)
            coords.append(r)
        return AlgebraElement(self, tuple(coords))

    def index_of(self, x: AlgebraElement | Sequence) -> int:
        coords = x.coords if isinstance(x, AlgebraElement) else x
        p = self.field.p
        idx = 0
        for c in reversed(coords):
            idx = idx * p + c
        return idx

    def random_element(self, rng: random.Random, bound: int = 4) -> AlgebraElement:
        """Uniform residues over GF(p); integers in [-bound, bound] over Q."""
        p = self.field.p
        if p is None:
            return AlgebraElement(self, tuple(rng.randint(-bound, bound) for _ in range(self.dim)))
        return AlgebraElement(self, tuple(rng.randrange(p) for _ in range(self.dim)))


class AlgebraElement:
    """A coordinate vector in a fixed algebra."""

    __slots__ = ("algebra", "coords")

    def __init__(self, algebra: StructureConstants, coords: tuple):
        self.algebra = algebra
        self.coords = coords

    def _check(self, other: AlgebraElement) -> None:
        if not isinstance(other, AlgebraElement):
            raise TypeError(f"expected an AlgebraElement, got {type(other).__name__}")
        if other.algebra is not self.algebra and not other.algebra.same_table(self.algebra):
            raise AlgebraMismatch(f"{self.algebra.name} vs {other.algebra.name}")

    @property
    def field(self) -> FieldSpec:
        return self.algebra.field

    @property
    def scalars(self) -> list[Scalar]:
        return [Scalar(self.field, c) for c in self.coords]

    def __getitem__(self, i: int) -> Scalar:
        return Scalar(self.field, self.coords[i])

    def __add__(self, other: AlgebraElement) -> AlgebraElement:
        self._check(other)
        return AlgebraElement(self.algebra, self.algebra.add_coords(self.coords, other.coords))

    def __sub__(self, other: AlgebraElement) -> AlgebraElement:
        self._check(other)
        return AlgebraElement(self.algebra, self.algebra.sub_coords(self.coords, other.coords))

    def __neg__(self) -> AlgebraElement:
        neg = self.field.neg
        return AlgebraElement(self.algebra, tuple(neg(a) for a in self.coords))

    def __mul__(self, other) -> AlgebraElement:
        if isinstance(other, AlgebraElement):
            return multiply(self, other)
        if isinstance(other, FieldSpec):
            raise TypeError("cannot multiply by a field")
        s = self.field.coerce(other)
        return AlgebraElement(self.algebra, self.algebra.scale_coords(s, self.coords))

    def __rmul__(self, other) -> AlgebraElement:
        s = self.field.coerce(other)
        return AlgebraElement(self.algebra, self.algebra.scale_coords(s, self.coords))

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __bool__(self) -> bool:
        return any(self.coords)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.coords == other.coords and (
            self.algebra is other.algebra or self.algebra.same_table(other.algebra)
        )

    def __hash__(self) -> int:
        return hash(self.coords)

    def format(self) -> list[str]:
        fmt = self.field.format
        return [fmt(c) for c in self.coords]

    def __str__(self) -> str:
        fmt = self.field.format
        parts = []
        for c, name in zip(self.coords, self.algebra.basis_names):
            if not c:
                continue
            s = fmt(c)
            if s == "1":
                parts.append(name)
            elif s == "-1":
                parts.append(f"-{name}")
            else:
                parts.append(f"{s}*{name}" if "/" not in s else f"({s})*{name}")
        return " + ".join(parts).replace("+ -", "- ") if parts else "0"

    def __repr__(self) -> str:
        return f"AlgebraElement({self.algebra.name}: {self})"


def _same(*xs: AlgebraElement) -> StructureConstants:
    a = xs[0].algebra
    for x in xs[1:]:
        xs[0]._check(x)
    return a


def multiply(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    a = _same(x, y)
    return AlgebraElement(a, a.mul_coords(x.coords, y.coords))


def associator(x: AlgebraElement, y: AlgebraElement, z: AlgebraElement) -> AlgebraElement:
    """(x, y, z) = (xy)z - x(yz)."""
    a = _same(x, y, z)
    return AlgebraElement(a, a.assoc_coords(x.coords, y.coords, z.coords))


def commutator(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    """(x, y) = xy - yx."""
    a = _same(x, y)
    return AlgebraElement(a, a.comm_coords(x.coords, y.coords))


def direct_sum(a: StructureConstants, b: StructureConstants, name: str | None = None) -> StructureConstants:
    """Block-diagonal product on a (+) b; the unit is (1_a, 1_b) when both exist."""
    if a.field != b.field:
        raise FieldMismatch(f"{a.field} vs {b.field}")
    n = a.dim
    entries = list(a.entries())
    entries += [(i + n, j + n, k + n, c) for i, j, k, c in b.entries()]
    names = [f"{a.name}.{s}" for s in a.basis_names] + [f"{b.name}.{s}" for s in b.basis_names]
    if len(set(names)) != len(names):
        names = [f"L.{s}" for s in a.basis_names] + [f"R.{s}" for s in b.basis_names]
    unit = None
    if a.unit is not None and b.unit is not None:
        unit = a.unit + b.unit
    return StructureConstants(name or f"{a.name}+{b.name}", a.field, n + b.dim, entries, names, unit)


def left_multiplication(x: AlgebraElement) -> Matrix:
    """Matrix of y -> x*y; column j holds the coordinates of x*e_j."""
    a = x.algebra
    return Matrix.from_columns(a.field, [a.mul_coords(x.coords, a._basis_coords(j)) for j in range(a.dim)], a.dim)


def right_multiplication(x: AlgebraElement) -> Matrix:
    """Matrix of y -> y*x; column j holds the coordinates of e_j*x."""
    a = x.algebra
    return Matrix.from_columns(a.field, [a.mul_coords(a._basis_coords(j), x.coords) for j in range(a.dim)], a.dim)


def find_unit(a: StructureConstants) -> tuple | None:
    """Solve u*e_i = e_i = e_i*u for u; returns coordinates or None."""
    if a.unit is not None:
        return a.unit
    n = a.dim
    rows, rhs = [], []
    for i in range(n):
        ei = a._basis_coords(i)
        # coefficient of u_m in (u e_i)_k is c[m][i][k]; in (e_i u)_k it is c[i][m][k]
        for k in range(n):
            rows.append(tuple(a.table[m][i][k] for m in range(n)))
            rhs.append(ei[k])
            rows.append(tuple(a.table[i][m][k] for m in range(n)))
            rhs.append(ei[k])
    return solve(Matrix.from_rows(a.field, rows, n), rhs)
