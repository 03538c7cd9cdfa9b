"""Builders for the standard test algebras.

Cayley-Dickson convention used throughout (conventions differ in the
literature and flip individual table signs)::

    (a, b)(c, d) = (a c + gamma * conj(d) b,  d a + b conj(c))
    conj(a, b)   = (conj(a), -b)

Pairs (a, b) are laid out as the coordinates of a followed by those of b,
so the old basis occupies indices 0..n-1 and the new copy n..2n-1.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core import AlgebraElement, StructureConstants
from .errors import InvalidStructure, NotScalar, ZeroGamma
from .linalg import Matrix
from .scalars import FieldSpec, Q, Raw, Scalar

CD_NAMES = {
    2: "complex",
    4: "quaternions",
    8: "octonions",
    16: "sedenions",
}


@dataclass(frozen=True)
class InvolutiveAlgebra:
    """A unital algebra with a linear involution x -> conj(x)."""

    algebra: StructureConstants
    conjugation: Matrix

    def __post_init__(self):
        a, cm = self.algebra, self.conjugation
        n = a.dim
        if cm.rows != n or cm.cols != n or cm.field != a.field:
            raise InvalidStructure("conjugation matrix does not fit the algebra")
        if a.unit is None:
            raise InvalidStructure("involutive algebras here must be unital")
        if cm @ cm != Matrix.identity(a.field, n):
            raise InvalidStructure("conjugation is not an involution")
        basis = [a._basis_coords(i) for i in range(n)]
        bar = [self.conj_coords(e) for e in basis]
        for i in range(n):
            for j in range(n):
                lhs = self.conj_coords(a.mul_coords(basis[i], basis[j]))
                if lhs != a.mul_coords(bar[j], bar[i]):
                    raise InvalidStructure(f"conjugation is not an anti-automorphism on ({i}, {j})")
        for i in range(n):
            for v in (a.add_coords(basis[i], bar[i]), a.mul_coords(basis[i], bar[i])):
                if _unit_multiple(a, v) is None:
                    raise InvalidStructure(f"e_{i} + conj(e_{i}) or e_{i} conj(e_{i}) is not scalar")

    def conj_coords(self, x: Sequence) -> tuple:
        return self.conjugation.matvec(x)

    def conjugate(self, x: AlgebraElement) -> AlgebraElement:
        return AlgebraElement(self.algebra, self.conj_coords(x.coords))


@dataclass(frozen=True)
class NormForm:
    """The quadratic form N(x) with x conj(x) = N(x) 1.

    ``diagonal[i]`` is N(e_i) and ``polar`` holds N(e_i + e_j) - N(e_i) - N(e_j),
    which is meaningful in every characteristic.
    """

    field: FieldSpec
    diagonal: tuple
    polar: Matrix

    def evaluate(self, coords: Sequence) -> Raw:
        f = self.field
        acc = 0
        n = len(self.diagonal)
        for i in range(n):
            xi = coords[i]
            if not xi:
                continue
            acc += self.diagonal[i] * xi * xi
            for j in range(i + 1, n):
                if coords[j]:
                    acc += self.polar[i, j] * xi * coords[j]
        return f.normalize(acc)

    @property
    def gram(self) -> Matrix:
        """Symmetric Gram matrix with N(x) = x^T G x (characteristic != 2)."""
        f = self.field
        if f.characteristic == 2:
            raise ValueError("the Gram matrix of a quadratic form is undefined in characteristic 2")
        half = f.inv(2)
        n = len(self.diagonal)
        return Matrix(f, n, n, tuple(
            tuple(self.diagonal[i] if i == j else f.mul(half, self.polar[i, j]) for j in range(n))
            for i in range(n)
        ))

    def is_diagonal(self) -> bool:
        n = len(self.diagonal)
        return all(self.polar[i, j] == 0 for i in range(n) for j in range(n) if i != j)


def _unit_multiple(a: StructureConstants, v: Sequence) -> Raw | None:
    """lambda with v = lambda * unit, or None."""
    u = a.unit
    k = next(i for i, c in enumerate(u) if c)
    lam = a.field.div(v[k], u[k])
    return lam if a.scale_coords(lam, u) == tuple(v) else None


def base_field_algebra(field: FieldSpec = Q) -> InvolutiveAlgebra:
    alg = StructureConstants("field", field, 1, [(0, 0, 0, 1)], ("1",), unit=0)
    return InvolutiveAlgebra(alg, Matrix.identity(field, 1))


def _cd_names(n: int) -> tuple:
    if n == 2:
        return ("1", "i")
    if n == 4:
        return ("1", "i", "j", "k")
    return tuple(f"e{k}" for k in range(n))


def cayley_dickson(a: InvolutiveAlgebra, gamma, name: str | None = None) -> InvolutiveAlgebra:
    """Double ``a`` with parameter ``gamma`` (see module docstring for the convention)."""
    base = a.algebra
    f = base.field
    g = f.coerce(gamma)
    if g == 0:
        raise ZeroGamma("Cayley-Dickson parameter must be nonzero")
    n = base.dim
    mul, add, conj = base.mul_coords, base.add_coords, a.conj_coords

    def product(x, y):
        p, q = x[:n], x[n:]
        r, s = y[:n], y[n:]
        first = add(mul(p, r), base.scale_coords(g, mul(conj(s), q)))
        second = add(mul(s, p), mul(q, conj(r)))
        return first + second

    entries = []
    for i in range(2 * n):
        ei = tuple(1 if k == i else 0 for k in range(2 * n))
        for j in range(2 * n):
            ej = tuple(1 if k == j else 0 for k in range(2 * n))
            for k, c in enumerate(product(ei, ej)):
                if c:
                    entries.append((i, j, k, c))
    unit = base.unit + (0,) * n
    dim = 2 * n
    alg = StructureConstants(name or CD_NAMES.get(dim, f"cd{dim}"), f, dim, entries, _cd_names(dim), unit)
    cm = a.conjugation
    neg1 = f.neg(1)
    conj_rows = [tuple(cm[i, j] for j in range(n)) + (0,) * n for i in range(n)]
    conj_rows += [(0,) * n + tuple(neg1 if i == j else 0 for j in range(n)) for i in range(n)]
    return InvolutiveAlgebra(alg, Matrix(f, dim, dim, tuple(conj_rows)))


def cayley_dickson_chain(field: FieldSpec, gammas: Sequence, name: str | None = None) -> InvolutiveAlgebra:
    """Iterate the doubling from the base field, one gamma per step."""
    alg = base_field_algebra(field)
    for step, g in enumerate(gammas):
        last = step == len(gammas) - 1
        alg = cayley_dickson(alg, g, name if last else None)
    return alg


def complex_numbers(field: FieldSpec = Q, gamma=-1) -> InvolutiveAlgebra:
    return cayley_dickson_chain(field, [gamma])


def quaternions(field: FieldSpec = Q, gammas: Sequence = (-1, -1)) -> InvolutiveAlgebra:
    return cayley_dickson_chain(field, gammas)


def octonions(field: FieldSpec = Q, gammas: Sequence = (-1, -1, -1)) -> InvolutiveAlgebra:
    return cayley_dickson_chain(field, gammas)


def sedenions(field: FieldSpec = Q, gammas: Sequence = (-1, -1, -1, -1)) -> InvolutiveAlgebra:
    return cayley_dickson_chain(field, gammas)


def norm_of(a: InvolutiveAlgebra, x: AlgebraElement) -> Scalar:
    """The scalar N(x) with x conj(x) = N(x) 1."""
    alg = a.algebra
    prod = alg.mul_coords(x.coords, a.conj_coords(x.coords))
    lam = _unit_multiple(alg, prod)
    if lam is None:
        raise NotScalar(f"x conj(x) = {AlgebraElement(alg, prod)} is not a multiple of 1")
    return Scalar(alg.field, lam)


def norm_form(a: InvolutiveAlgebra) -> NormForm:
    alg = a.algebra
    f = alg.field
    n = alg.dim
    basis = alg.basis()
    diag = tuple(norm_of(a, e).value for e in basis)
    polar = [[0] * n for _ in range(n)]
    for i in range(n):
        polar[i][i] = f.add(diag[i], diag[i])
        for j in range(i + 1, n):
            v = f.sub(f.sub(norm_of(a, basis[i] + basis[j]).value, diag[i]), diag[j])
            polar[i][j] = polar[j][i] = v
    return NormForm(f, diag, Matrix(f, n, n, tuple(tuple(r) for r in polar)))


def _cross(u, v):
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def _dot(u, v):
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


ZORN_NAMES = ("E11", "E22", "v1", "v2", "v3", "w1", "w2", "w3")


def zorn_product(x: Sequence, y: Sequence) -> tuple:
    """Zorn vector-matrix product on coordinates (alpha, beta, v, w), unreduced.

    [[a, v], [w, b]] [[a', v'], [w', b']] =
    [[a a' + v.w',  a v' + b' v + w x w'], [a' w + b w' - v x v',  b b' + w.v']]
    """
    a, b, v, w = x[0], x[1], x[2:5], x[5:8]
    a2, b2, v2, w2 = y[0], y[1], y[2:5], y[5:8]
    ww = _cross(w, w2)
    vv = _cross(v, v2)
    top_right = tuple(a * v2[k] + b2 * v[k] + ww[k] for k in range(3))
    bottom_left = tuple(a2 * w[k] + b * w2[k] - vv[k] for k in range(3))
    return (a * a2 + _dot(v, w2), b * b2 + _dot(w, v2)) + top_right + bottom_left


def zorn_split_octonions(field: FieldSpec = Q) -> StructureConstants:
    """Split octonions as Zorn vector matrices.

    Basis: the diagonal idempotents E11, E22 and the vector units v1..v3
    (upper right) and w1..w3 (lower left).  The unit E11 + E22 is not a
    basis vector.
    """
    entries = []
    for i in range(8):
        ei = tuple(1 if k == i else 0 for k in range(8))
        for j in range(8):
            ej = tuple(1 if k == j else 0 for k in range(8))
            for k, c in enumerate(zorn_product(ei, ej)):
                if c:
                    entries.append((i, j, k, c))
    return StructureConstants("zorn", field, 8, entries, ZORN_NAMES, unit=(1, 1, 0, 0, 0, 0, 0, 0))


def matrix_algebra_2x2(field: FieldSpec = Q) -> StructureConstants:
    """M2(field) on the matrix units E11, E12, E21, E22."""
    units = [(0, 0), (0, 1), (1, 0), (1, 1)]
    entries = []
    for a, (i, j) in enumerate(units):
        for b, (k, l) in enumerate(units):
            if j == k:
                entries.append((a, b, units.index((i, l)), 1))
    return StructureConstants("m2", field, 4, entries, ("E11", "E12", "E21", "E22"), unit=(1, 0, 0, 1))
