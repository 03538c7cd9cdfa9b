"""Certification of ring-theoretic properties of a structure-constant algebra.

Alternativity and associativity are decided exactly from basis data.
The nucleus and center are computed as nullspaces of stacked linear
systems.  The identity suite for alternative algebras is checked either
exhaustively (small finite algebras, via full element tables) or on a
seeded pseudorandom sample.
"""
from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

import numpy as np

from .core import AlgebraElement, StructureConstants
from .errors import InvalidStructure, NotAlternative
from .finite import ElementTables, _safe_int64
from .linalg import Subspace, rank_of_rows, span


@dataclass
class CheckReport:
    name: str
    passed: bool
    witness: tuple | None = None
    defect: AlgebraElement | None = None
    samples_used: int = 0
    exhaustive: bool = False
    seed: int | None = None
    details: dict = field(default_factory=dict)

    @property
    def verdict(self) -> str:
        return "Pass" if self.passed else "Fail"

    def to_dict(self) -> dict:
        d = {
            "property": self.name,
            "verdict": self.verdict,
            "exhaustive": self.exhaustive,
            "samples_used": self.samples_used,
            "seed": self.seed,
            "witness": None if self.witness is None else [x.format() for x in self.witness],
            "defect": None if self.defect is None else self.defect.format(),
        }
        if self.details:
            d["details"] = self.details
        return d


@dataclass
class SamplingPlan:
    """How element-quantified identities are checked.

    With ``exhaustive=None`` a check over k element variables is exhaustive
    when |field|^(dim*k) <= ``budget``; otherwise ``samples`` seeded
    pseudorandom tuples are drawn.  ``exhaustive=True`` forces enumeration
    (finite fields only); ``False`` forces sampling.
    """

    samples: int = 10_000
    seed: int = 0
    exhaustive: bool | None = None
    budget: int = 1 << 24

    def is_exhaustive(self, a: StructureConstants, arity: int) -> bool:
        if a.field.p is None:
            if self.exhaustive:
                raise ValueError("exhaustive enumeration needs a finite field")
            return False
        if self.exhaustive is not None:
            return self.exhaustive
        return a.size ** arity <= self.budget

    def rng(self, salt: str = "") -> random.Random:
        return random.Random(f"{self.seed}:{salt}")


@dataclass(frozen=True)
class SubspaceBasis:
    """A canonical subspace of an algebra (nucleus, center, ...)."""

    algebra: StructureConstants
    space: Subspace
    label: str = "Other"

    @property
    def vectors(self) -> list[AlgebraElement]:
        return [AlgebraElement(self.algebra, r) for r in self.space.rows]

    @property
    def dimension(self) -> int:
        return self.space.dimension

    def __len__(self) -> int:
        return self.space.dimension

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SubspaceBasis):
            return NotImplemented
        return self.space.rows == other.space.rows and self.space.dim == other.space.dim

    def __hash__(self) -> int:
        return hash(self.space.rows)

    def contains(self, x: AlgebraElement | Sequence) -> bool:
        coords = x.coords if isinstance(x, AlgebraElement) else x
        return self.space.contains(coords)

    def issubspace(self, other: SubspaceBasis) -> bool:
        return self.space.issubspace(other.space)

    def combination(self, coeffs: Sequence) -> AlgebraElement:
        return AlgebraElement(self.algebra, self.space.combination(coeffs))

    def random_element(self, rng: random.Random, bound: int = 4) -> AlgebraElement:
        p = self.algebra.field.p
        if p is None:
            coeffs = [rng.randint(-bound, bound) for _ in range(self.dimension)]
        else:
            coeffs = [rng.randrange(p) for _ in range(self.dimension)]
        return self.combination(coeffs)

    def elements(self):
        """Every element of the span (finite fields only), in coefficient order."""
        p = self.algebra.field.p
        for coeffs in itertools.product(range(p), repeat=self.dimension):
            yield self.combination(coeffs[::-1])


# -- exact basis-level certificates -------------------------------------------


def is_alternative(a: StructureConstants) -> CheckReport:
    """Decide (x,y,y) = 0 = (y,y,x) for all x, y from basis data.

    Diagonal identities on basis pairs plus their linearisations on basis
    triples are equivalent to the full identities in every characteristic,
    since (x,y,y) is a quadratic form in y.
    """
    A = a.basis_associators
    n = a.dim
    e = a.basis()
    checks = 0
    # right alternative: (x, y, y)
    for i in range(n):
        for j in range(n):
            checks += 1
            if any(A[i][j][j]):
                return _alt_fail(a, "right", e[i], e[j], checks)
    for i in range(n):
        for j in range(n):
            for k in range(j + 1, n):
                checks += 1
                if a.add_coords(A[i][j][k], A[i][k][j]) != (0,) * n:
                    return _alt_fail(a, "right", e[i], e[j] + e[k], checks)
    # left alternative: (y, y, x)
    for i in range(n):
        for j in range(n):
            checks += 1
            if any(A[j][j][i]):
                return _alt_fail(a, "left", e[i], e[j], checks)
    for i in range(n):
        for j in range(n):
            for k in range(j + 1, n):
                checks += 1
                if a.add_coords(A[j][k][i], A[k][j][i]) != (0,) * n:
                    return _alt_fail(a, "left", e[i], e[j] + e[k], checks)
    return CheckReport("alternative", True, samples_used=checks, exhaustive=True)


def _alt_fail(a, side, x, y, checks) -> CheckReport:
    from .core import associator
    defect = associator(x, y, y) if side == "right" else associator(y, y, x)
    return CheckReport(
        "alternative", False, witness=(x, y), defect=defect, samples_used=checks,
        exhaustive=True, details={"identity": "(x,y,y)=0" if side == "right" else "(y,y,x)=0"},
    )


def is_associative(a: StructureConstants) -> CheckReport:
    """(e_i, e_j, e_k) = 0 for every basis triple (enough by trilinearity)."""
    A = a.basis_associators
    n = a.dim
    checks = 0
    for i in range(n):
        for j in range(n):
            for k in range(n):
                checks += 1
                if any(A[i][j][k]):
                    e = a.basis()
                    return CheckReport(
                        "associative", False, witness=(e[i], e[j], e[k]),
                        defect=AlgebraElement(a, A[i][j][k]), samples_used=checks, exhaustive=True,
                    )
    return CheckReport("associative", True, samples_used=checks, exhaustive=True)


_PERMS = [((0, 1, 2), 1), ((1, 2, 0), 1), ((2, 0, 1), 1), ((0, 2, 1), -1), ((2, 1, 0), -1), ((1, 0, 2), -1)]


def check_skew_symmetry(a: StructureConstants, plan: SamplingPlan | None = None) -> CheckReport:
    """(x_s(1), x_s(2), x_s(3)) = sign(s) (x1, x2, x3) for all six permutations.

    Exhaustive over basis triples; with a plan, also on random elements.
    """
    A = a.basis_associators
    n = a.dim
    neg = a.field.neg
    e = a.basis()
    checks = 0
    for t in itertools.product(range(n), repeat=3):
        base = A[t[0]][t[1]][t[2]]
        for perm, sign in _PERMS[1:]:
            checks += 1
            s = [t[q] for q in perm]
            want = base if sign == 1 else tuple(neg(c) for c in base)
            got = A[s[0]][s[1]][s[2]]
            if got != want:
                defect = AlgebraElement(a, a.sub_coords(got, want))
                return CheckReport("skew symmetry", False, witness=tuple(e[q] for q in s),
                                   defect=defect, samples_used=checks, exhaustive=True,
                                   details={"permutation": list(perm)})
    if plan is not None:
        rng = plan.rng("skew")
        for _ in range(plan.samples):
            xs = [a.random_element(rng) for _ in range(3)]
            base = a.assoc_coords(*(x.coords for x in xs))
            for perm, sign in _PERMS[1:]:
                checks += 1
                got = a.assoc_coords(*(xs[q].coords for q in perm))
                want = base if sign == 1 else tuple(neg(c) for c in base)
                if got != want:
                    return CheckReport("skew symmetry", False, witness=tuple(xs[q] for q in perm),
                                       defect=AlgebraElement(a, a.sub_coords(got, want)),
                                       samples_used=checks, seed=plan.seed,
                                       details={"permutation": list(perm)})
    return CheckReport("skew symmetry", True, samples_used=checks, exhaustive=plan is None,
                       seed=None if plan is None else plan.seed)


# -- nucleus and center -------------------------------------------------------


def _primitive(field, row: tuple) -> tuple:
    # scale a row so duplicates up to a nonzero factor collapse
    lead = next(c for c in row if c)
    if field.p is not None:
        inv = pow(lead, -1, field.p)
        return tuple(c * inv % field.p for c in row)
    dens = [c.denominator for c in row if isinstance(c, Fraction)]
    scale = math.lcm(*dens) if dens else 1
    ints = [int(c * scale) for c in row]
    g = math.gcd(*ints)
    if ints[next(i for i, c in enumerate(ints) if c)] < 0:
        g = -g
    return tuple(c // g for c in ints)


def _solve_system(a: StructureConstants, rows) -> Subspace:
    """Canonical nullspace of the given coefficient rows over a.dim unknowns."""
    uniq = sorted({_primitive(a.field, r) for r in rows if any(r)})
    from .linalg import Matrix, nullspace
    if not uniq:
        return span(a.field, [a._basis_coords(i) for i in range(a.dim)], a.dim)
    return nullspace(Matrix(a.field, len(uniq), a.dim, tuple(uniq)))


def _slot_rows(a: StructureConstants, slot: int):
    A = a.basis_associators
    n = a.dim
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if slot == 0:
                    yield tuple(A[m][i][j][k] for m in range(n))
                elif slot == 1:
                    yield tuple(A[i][m][j][k] for m in range(n))
                else:
                    yield tuple(A[i][j][m][k] for m in range(n))


def _commutator_rows(a: StructureConstants):
    T = a.table
    n = a.dim
    sub = a.field.sub
    for i in range(n):
        for k in range(n):
            yield tuple(sub(T[m][i][k], T[i][m][k]) for m in range(n))


def slot_nucleus(a: StructureConstants, slot: int) -> SubspaceBasis:
    """{n : (n,R,R) = 0} for slot 0, (R,n,R) for slot 1, (R,R,n) for slot 2."""
    return SubspaceBasis(a, _solve_system(a, _slot_rows(a, slot)), ("Left", "Middle", "Right")[slot] + "Nucleus")


def nucleus(a: StructureConstants, cross_check: bool = True) -> SubspaceBasis:
    """Elements associating with everything in all three slots.

    For alternative algebras the three one-slot nuclei coincide; with
    ``cross_check`` this is verified and a mismatch raises.
    """
    rows = itertools.chain(_slot_rows(a, 0), _slot_rows(a, 1), _slot_rows(a, 2))
    nuc = SubspaceBasis(a, _solve_system(a, rows), "Nucleus")
    if cross_check and is_alternative(a).passed:
        slots = [slot_nucleus(a, s) for s in range(3)]
        if any(s.space.rows != nuc.space.rows for s in slots):
            raise InvalidStructure("one-slot nuclei differ in an alternative algebra")
    return nuc


def center(a: StructureConstants) -> SubspaceBasis:
    """Nuclear elements commuting with every basis element."""
    rows = itertools.chain(_slot_rows(a, 0), _slot_rows(a, 1), _slot_rows(a, 2), _commutator_rows(a))
    return SubspaceBasis(a, _solve_system(a, rows), "Center")


# -- the identity suite ------------------------------------------------------


IDENTITIES = [
    # (key, description)
    ("assoc_times_x", "(x,y,z)x = (x,xy,z)"),
    ("x_slot_right", "(x,xy,z) = (x,y,xz)"),
    ("x_times_assoc", "x(x,y,z) = (x,yx,z)"),
    ("x_slot_left", "(x,yx,z) = (x,y,zx)"),
    ("nuclear_slot_swap", "(xn,y,z) = (nx,y,z)"),
    ("nuclear_pull_right", "(nx,y,z) = (x,y,z)n"),
    ("nuclear_sides", "(x,y,z)n = n(x,y,z)"),
    ("nucleus_commutators", "[N,R] in N"),
    ("nuclear_commute_assoc", "n(x,y,z) = (x,y,z)n"),
    ("commutator_square_kills", "(w,n)((w,n)(x,y,z)) = 0"),
    ("commutator_square_kills_assoc", "((w,n)(w,n))(x,y,z) = 0"),
]


def _identity_evaluators(a: StructureConstants):
    """Per identity: (variables, fn(*coords) -> (lhs, rhs))."""
    m, assoc, comm = a.mul_coords, a.assoc_coords, a.comm_coords
    zero = (0,) * a.dim
    return {
        "assoc_times_x": ("xyz", lambda x, y, z: (m(assoc(x, y, z), x), assoc(x, m(x, y), z))),
        "x_slot_right": ("xyz", lambda x, y, z: (assoc(x, m(x, y), z), assoc(x, y, m(x, z)))),
        "x_times_assoc": ("xyz", lambda x, y, z: (m(x, assoc(x, y, z)), assoc(x, m(y, x), z))),
        "x_slot_left": ("xyz", lambda x, y, z: (assoc(x, m(y, x), z), assoc(x, y, m(z, x)))),
        "nuclear_slot_swap": ("nxyz", lambda n, x, y, z: (assoc(m(x, n), y, z), assoc(m(n, x), y, z))),
        "nuclear_pull_right": ("nxyz", lambda n, x, y, z: (assoc(m(n, x), y, z), m(assoc(x, y, z), n))),
        "nuclear_sides": ("nxyz", lambda n, x, y, z: (m(assoc(x, y, z), n), m(n, assoc(x, y, z)))),
        "nuclear_commute_assoc": ("nxyz", lambda n, x, y, z: (m(n, assoc(x, y, z)), m(assoc(x, y, z), n))),
        "commutator_square_kills": (
            "wnxyz", lambda w, n, x, y, z: (m(comm(w, n), m(comm(w, n), assoc(x, y, z))), zero)),
        "commutator_square_kills_assoc": (
            "wnxyz", lambda w, n, x, y, z: (m(m(comm(w, n), comm(w, n)), assoc(x, y, z)), zero)),
    }


def verify_identities(a: StructureConstants, plan: SamplingPlan | None = None,
                      alternative: CheckReport | None = None) -> list[CheckReport]:
    """Check the standard identities of alternative algebras on ``a``.

    Variables x, y, z, w range over the algebra and n over the nucleus.
    Identities linear in n are checked on the nucleus basis when
    enumerating; the commutator-square identities enumerate the nucleus
    span.  Raises NotAlternative if ``a`` is not alternative.
    """
    plan = plan or SamplingPlan()
    alt = alternative or is_alternative(a)
    if not alt.passed:
        raise NotAlternative(f"{a.name} is not alternative: {alt.details.get('identity')} fails")
    nuc = nucleus(a, cross_check=False)
    reports = []
    if plan.is_exhaustive(a, 3) and _safe_int64(a):
        reports.extend(_identities_exhaustive(a, nuc, plan))
    else:
        reports.extend(_identities_sampled(a, nuc, plan))
    reports.insert(7, _nucleus_commutator_report(a, nuc))
    return reports


def _nucleus_commutator_report(a: StructureConstants, nuc: SubspaceBasis) -> CheckReport:
    checks = 0
    for nv in nuc.vectors:
        for e in a.basis():
            checks += 1
            c = a.comm_coords(nv.coords, e.coords)
            if not nuc.contains(c):
                return CheckReport("[N,R] in N", False, witness=(nv, e), defect=AlgebraElement(a, c),
                                   samples_used=checks, exhaustive=True)
    return CheckReport("[N,R] in N", True, samples_used=checks, exhaustive=True)


def _identities_sampled(a: StructureConstants, nuc: SubspaceBasis, plan: SamplingPlan) -> list[CheckReport]:
    evals = _identity_evaluators(a)
    out = []
    for key, desc in IDENTITIES:
        if key == "nucleus_commutators":
            continue
        vars_, fn = evals[key]
        rng = plan.rng(key)
        report = CheckReport(desc, True, samples_used=0, seed=plan.seed)
        nonzero_comm = 0
        for _ in range(plan.samples):
            vals = {}
            for v in vars_:
                if v == "n":
                    vals[v] = nuc.random_element(rng) if nuc.dimension else a.zero()
                else:
                    vals[v] = a.random_element(rng)
            args = [vals[v].coords for v in vars_]
            if "w" in vars_ and any(a.comm_coords(vals["w"].coords, vals["n"].coords)):
                nonzero_comm += 1
            lhs, rhs = fn(*args)
            report.samples_used += 1
            if lhs != rhs:
                report.passed = False
                report.witness = tuple(vals[v] for v in vars_)
                report.defect = AlgebraElement(a, a.sub_coords(lhs, rhs))
                report.details["variables"] = list(vars_)
                break
        if "w" in vars_:
            report.details["nonzero_commutators"] = nonzero_comm
        out.append(report)
    return out


def _identities_exhaustive(a: StructureConstants, nuc: SubspaceBasis, plan: SamplingPlan) -> list[CheckReport]:
    t = ElementTables(a)
    N = t.size
    mt, sub = t.mul, t.sub
    idx = np.arange(N)
    zero_idx = 0
    out = []

    def elem(i):
        return a.element_at(int(i))

    def scan(desc, vars_, pair_fn, per_x=True):
        """pair_fn(x) -> (lhs, rhs) index arrays over (y, z); lowest failing triple wins."""
        for x in range(N):
            lhs, rhs = pair_fn(x)
            bad = np.nonzero(lhs != rhs)
            if bad[0].size:
                y, z = int(bad[0][0]), int(bad[1][0])
                d = a.sub_coords(elem(lhs[y, z]).coords, elem(rhs[y, z]).coords)
                return CheckReport(desc, False, witness=(elem(x), elem(y), elem(z)),
                                   defect=AlgebraElement(a, d), samples_used=(x + 1) * N * N,
                                   exhaustive=True, details={"variables": list(vars_)})
        return CheckReport(desc, True, samples_used=N ** 3, exhaustive=True)

    Y = idx[:, None]
    Z = idx[None, :]
    xy_col = lambda x: np.broadcast_to(mt[x][:, None], (N, N))

    def assoc_at(xs, ys, zs):
        return sub[mt[mt[xs, ys], zs], mt[xs, mt[ys, zs]]]

    slices = {}

    def aslice(x):
        if x not in slices:
            slices.clear()
            slices[x] = t.assoc_slice(x)
        return slices[x]

    descs = dict(IDENTITIES)
    out.append(scan(descs["assoc_times_x"], "xyz",
                    lambda x: (mt[aslice(x), x], assoc_at(x, np.broadcast_to(mt[x][:, None], (N, N)), Z))))
    out.append(scan(descs["x_slot_right"], "xyz",
                    lambda x: (assoc_at(x, xy_col(x), Z), assoc_at(x, Y, np.broadcast_to(mt[x][None, :], (N, N))))))
    out.append(scan(descs["x_times_assoc"], "xyz",
                    lambda x: (mt[x][aslice(x)], assoc_at(x, np.broadcast_to(mt[:, x][:, None], (N, N)), Z))))
    out.append(scan(descs["x_slot_left"], "xyz",
                    lambda x: (assoc_at(x, np.broadcast_to(mt[:, x][:, None], (N, N)), Z),
                               assoc_at(x, Y, np.broadcast_to(mt[:, x][None, :], (N, N))))))

    # identities linear in n: enumerate n over the nucleus basis
    nbasis = [a.index_of(v) for v in nuc.vectors]
    lin = [
        ("nuclear_slot_swap", lambda n, x: (assoc_at(mt[x, n], Y, Z), assoc_at(mt[n, x], Y, Z))),
        ("nuclear_pull_right", lambda n, x: (assoc_at(mt[n, x], Y, Z), mt[aslice(x), n])),
        ("nuclear_sides", lambda n, x: (mt[aslice(x), n], mt[n][aslice(x)])),
    ]
    for key, fn in lin:
        out.append(_scan_nuclear(a, descs[key], nbasis, N, fn, elem))

    # identities over associator values: reduce to the distinct values
    assoc_vals, first_pos = _distinct_associators(t)
    rep = {int(v): _unravel(int(pos), N) for v, pos in zip(assoc_vals, first_pos)}
    report = CheckReport(descs["nuclear_commute_assoc"], True, samples_used=0, exhaustive=True)
    for n in nbasis:
        lhs = mt[n][assoc_vals]
        rhs = mt[assoc_vals, n]
        report.samples_used += len(assoc_vals)
        bad = np.nonzero(lhs != rhs)[0]
        if bad.size:
            v = int(assoc_vals[bad[0]])
            x, y, z = rep[v]
            report.passed = False
            report.witness = (elem(n), elem(x), elem(y), elem(z))
            report.defect = AlgebraElement(a, a.sub_coords(elem(lhs[bad[0]]).coords, elem(rhs[bad[0]]).coords))
            report.details["variables"] = list("nxyz")
            break
    out.append(report)

    # commutators (w, n) over all w and the whole nucleus span
    span_idx = [a.index_of(v) for v in nuc.elements()] if nuc.dimension else [zero_idx]
    comm = sub[mt[:, span_idx], mt[span_idx, :].T]          # (w, n)
    comm_vals, comm_pos = np.unique(comm.ravel(), return_index=True)
    crep = {int(v): (int(pos) // len(span_idx), span_idx[int(pos) % len(span_idx)]) for v, pos in zip(comm_vals, comm_pos)}
    nonzero_comm = int(np.count_nonzero(comm))
    for key, fn in (
        ("commutator_square_kills", lambda c, av: mt[c][mt[c][av]]),
        ("commutator_square_kills_assoc", lambda c, av: mt[mt[c, c]][av]),
    ):
        report = CheckReport(descs[key], True, samples_used=0, exhaustive=True,
                             details={"nonzero_commutators": nonzero_comm,
                                      "distinct_commutators": int(len(comm_vals)),
                                      "distinct_associators": int(len(assoc_vals))})
        for c in comm_vals:
            c = int(c)
            vals = fn(c, assoc_vals)
            report.samples_used += len(assoc_vals)
            bad = np.nonzero(vals != zero_idx)[0]
            if bad.size:
                w, n = crep[c]
                x, y, z = rep[int(assoc_vals[bad[0]])]
                report.passed = False
                report.witness = (elem(w), elem(n), elem(x), elem(y), elem(z))
                report.defect = elem(vals[bad[0]])
                report.details["variables"] = list("wnxyz")
                break
        out.append(report)
    return out


def _unravel(pos: int, N: int) -> tuple[int, int, int]:
    x, rem = divmod(pos, N * N)
    y, z = divmod(rem, N)
    return x, y, z


def _distinct_associators(t: ElementTables) -> tuple[np.ndarray, np.ndarray]:
    """Distinct associator values and the flat (x, y, z) position of each first occurrence."""
    N = t.size
    seen: dict[int, int] = {}
    for x in range(N):
        vals, pos = np.unique(t.assoc_slice(x).ravel(), return_index=True)
        for v, p in zip(vals.tolist(), pos.tolist()):
            if v not in seen:
                seen[v] = x * N * N + p
    keys = sorted(seen)
    return np.array(keys, dtype=np.int64), np.array([seen[k] for k in keys], dtype=np.int64)


def _scan_nuclear(a, desc, nbasis, N, fn, elem) -> CheckReport:
    checks = 0
    for n in nbasis:
        for x in range(N):
            lhs, rhs = fn(n, x)
            checks += N * N
            bad = np.nonzero(lhs != rhs)
            if bad[0].size:
                y, z = int(bad[0][0]), int(bad[1][0])
                d = a.sub_coords(elem(lhs[y, z]).coords, elem(rhs[y, z]).coords)
                return CheckReport(desc, False, witness=(elem(n), elem(x), elem(y), elem(z)),
                                   defect=AlgebraElement(a, d), samples_used=checks, exhaustive=True,
                                   details={"variables": list("nxyz")})
    return CheckReport(desc, True, samples_used=checks, exhaustive=True)
