"""Zero divisors, the associator/zero-divisor hypothesis, and its consequences.

A nonzero x is a left zero divisor if x*y = 0 for some nonzero y, a right
zero divisor if t*x = 0 for some nonzero t, and a zero divisor if either
holds.  Zero itself is never classified.

The hypothesis under test: no nonzero associator (x, y, z) is a zero
divisor.  For an alternative, non-associative algebra it implies that
there are no zero divisors at all; ``check_main_theorem`` evaluates both
sides on a concrete algebra and flags any inconsistency.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field

import numpy as np

from .analysis import CheckReport, SamplingPlan, center, is_alternative, is_associative, nucleus
from .core import AlgebraElement, StructureConstants, left_multiplication, right_multiplication
from .errors import NotAlternative, PreconditionFailed, ZeroElement
from .finite import (
    ElementTables, _safe_int64, element_coords, first_hit, multiplication_matrices, singular_mask,
)
from .linalg import Matrix, nullspace, rank, rank_of_rows, rref, solve

EXHAUSTIVE_ELEMENTS = 1 << 20
EXHAUSTIVE_PAIRS = 1 << 24


@dataclass(frozen=True)
class MultOperator:
    side: str
    element: AlgebraElement
    matrix: Matrix


def mult_operator(a: StructureConstants, x: AlgebraElement, side: str = "left") -> MultOperator:
    """L_x (y -> x*y) or R_x (y -> y*x) as a matrix; column j is x*e_j or e_j*x."""
    if x.algebra is not a:
        x._check(a.zero())
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    m = left_multiplication(x) if side == "left" else right_multiplication(x)
    return MultOperator(side, x, m)


@dataclass
class ZeroDivisorVerdict:
    element: AlgebraElement
    is_left: bool
    left_witness: AlgebraElement | None
    is_right: bool
    right_witness: AlgebraElement | None

    @property
    def is_zero_divisor(self) -> bool:
        return self.is_left or self.is_right

    def to_dict(self) -> dict:
        return {
            "element": self.element.format(),
            "left": self.is_left,
            "left_witness": None if self.left_witness is None else self.left_witness.format(),
            "right": self.is_right,
            "right_witness": None if self.right_witness is None else self.right_witness.format(),
        }


def _kernel_witness(m: Matrix, a: StructureConstants) -> AlgebraElement | None:
    if rank(m) == a.dim:
        return None
    return AlgebraElement(a, nullspace(m).rows[0])


def zero_divisor_check(a: StructureConstants, x: AlgebraElement) -> ZeroDivisorVerdict:
    """Classify nonzero x as left and/or right zero divisor, with kernel witnesses."""
    if x.algebra is not a:
        x._check(a.zero())
    if x.is_zero():
        raise ZeroElement("zero is not classified as a zero divisor")
    lw = _kernel_witness(left_multiplication(x), a)
    rw = _kernel_witness(right_multiplication(x), a)
    return ZeroDivisorVerdict(x, lw is not None, lw, rw is not None, rw)


def _is_zero_divisor_fast(a: StructureConstants, coords: tuple) -> bool:
    n = a.dim
    cols_l = [a.mul_coords(coords, a._basis_coords(j)) for j in range(n)]
    if rank_of_rows(a.field, cols_l, n) < n:
        return True
    cols_r = [a.mul_coords(a._basis_coords(j), coords) for j in range(n)]
    return rank_of_rows(a.field, cols_r, n) < n


# -- division certificate -----------------------------------------------------


@dataclass
class DivisionCertificate:
    """Positive-definite diagonal multiplicative norm over Q.

    ``norm_weights[i]`` is N(e_i) with N(x) = sum_i weights[i] x_i^2.
    """

    norm_weights: tuple
    composition_points: int
    samples_corroborated: int
    seed: int

    def to_dict(self) -> dict:
        return {
            "norm_weights": [str(w) for w in self.norm_weights],
            "composition_points": self.composition_points,
            "samples_corroborated": self.samples_corroborated,
            "seed": self.seed,
        }


def _diag_norm(f, weights, coords):
    return f.normalize(sum(w * c * c for w, c in zip(weights, coords) if c))


def division_certificate(a: StructureConstants, samples: int = 200, seed: int = 0) -> DivisionCertificate | None:
    """Certify that a Q-algebra has no zero divisors, or return None.

    Requirements, all checked exactly: the unit is a basis vector e_u; every
    other basis vector squares to -a_i * 1 with a_i > 0 and distinct ones
    anticommute (so x conj(x) = N(x) 1 with N(x) = x_u^2 + sum a_i x_i^2,
    conj negating the non-unit basis); and N(xy) = N(x) N(y) identically,
    verified on the points e_i and e_i + e_j in both arguments, which
    determine a form of degree two in each argument.  Then xy = 0 forces
    N(x) N(y) = 0, so x = 0 or y = 0.
    """
    f = a.field
    if f.p is not None or a.unit_index is None:
        return None
    n = a.dim
    u = a.unit_index
    weights = [0] * n
    weights[u] = 1
    basis = [a._basis_coords(i) for i in range(n)]
    for i in range(n):
        if i == u:
            continue
        sq = a.mul_coords(basis[i], basis[i])
        if any(c for k, c in enumerate(sq) if k != u) or not sq[u] < 0:
            return None
        weights[i] = -sq[u]
        for j in range(i + 1, n):
            if j == u:
                continue
            if a.add_coords(a.mul_coords(basis[i], basis[j]), a.mul_coords(basis[j], basis[i])) != (0,) * n:
                return None
    weights = tuple(weights)
    points = basis + [a.add_coords(basis[i], basis[j]) for i in range(n) for j in range(i + 1, n)]
    checks = 0
    for x in points:
        nx = _diag_norm(f, weights, x)
        for y in points:
            checks += 1
            if _diag_norm(f, weights, a.mul_coords(x, y)) != f.mul(nx, _diag_norm(f, weights, y)):
                return None
    rng = random.Random(f"{seed}:composition")
    for _ in range(samples):
        x = a.random_element(rng).coords
        y = a.random_element(rng).coords
        if _diag_norm(f, weights, a.mul_coords(x, y)) != f.mul(_diag_norm(f, weights, x), _diag_norm(f, weights, y)):
            return None
    return DivisionCertificate(weights, checks, samples, seed)


# -- census ---------------------------------------------------------------------


@dataclass
class CensusReport:
    status: str                     # NoZeroDivisors | ZeroDivisorsExist | Unknown
    method: str                     # ExhaustiveSearch | DivisionCertificate | SampledOnly
    witness: ZeroDivisorVerdict | None = None
    examined: int = 0
    seed: int | None = None
    certificate: DivisionCertificate | None = None

    @property
    def has_zero_divisors(self) -> bool:
        return self.status == "ZeroDivisorsExist"

    def to_dict(self) -> dict:
        return {
            "status": self.status,
            "method": self.method,
            "examined": self.examined,
            "seed": self.seed,
            "witness": None if self.witness is None else self.witness.to_dict(),
            "certificate": None if self.certificate is None else self.certificate.to_dict(),
        }


def _census_exhaustive_ok(a: StructureConstants, plan: SamplingPlan) -> bool:
    if a.field.p is None or not _safe_int64(a) or plan.exhaustive is False:
        return False
    return plan.exhaustive is True or a.size <= EXHAUSTIVE_ELEMENTS


def _mask_chunk(a: StructureConstants, start: int, stop: int) -> np.ndarray:
    xs = element_coords(a, start, stop)
    p = a.field.p
    mask = singular_mask(multiplication_matrices(a, xs, "left"), p)
    mask |= singular_mask(multiplication_matrices(a, xs, "right"), p)
    if start == 0:
        mask[0] = False
    return mask


def zero_divisor_mask(a: StructureConstants, threads: int = 1) -> np.ndarray:
    """Boolean array over all element indices: True where the element is a zero divisor."""
    from concurrent.futures import ThreadPoolExecutor
    total = a.size
    chunk = 1 << 14
    starts = list(range(0, total, chunk))
    if threads <= 1:
        parts = [_mask_chunk(a, s, min(s + chunk, total)) for s in starts]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(lambda s: _mask_chunk(a, s, min(s + chunk, total)), starts))
    return np.concatenate(parts)


def candidate_elements(a: StructureConstants, plan: SamplingPlan, salt: str = "census"):
    """Deterministic probe list: basis vectors, e_i + e_j and e_i - e_j, then seeded random elements."""
    n = a.dim
    neg1 = a.field.neg(1)
    for i in range(n):
        yield a.basis(i)
    for i in range(n):
        for j in range(i + 1, n):
            c = [0] * n
            c[i] = 1
            c[j] = 1
            yield AlgebraElement(a, tuple(c))
            c[j] = neg1
            yield AlgebraElement(a, tuple(c))
    rng = plan.rng(salt)
    for _ in range(plan.samples):
        yield a.random_element(rng)


def zero_divisor_census(a: StructureConstants, plan: SamplingPlan | None = None, threads: int = 1) -> CensusReport:
    """Decide, certify, or sample whether ``a`` has zero divisors.

    Exhaustive over all elements for small finite algebras; a division
    certificate over Q where one applies; otherwise a sampled search that
    can only prove existence.
    """
    plan = plan or SamplingPlan()
    if _census_exhaustive_ok(a, plan):
        total = a.size

        def chunk_fn(s, e):
            hits = np.nonzero(_mask_chunk(a, s, e))[0]
            return s + int(hits[0]) if hits.size else None

        hit = first_hit(total, chunk_fn, threads)
        if hit is None:
            return CensusReport("NoZeroDivisors", "ExhaustiveSearch", examined=total - 1)
        return CensusReport("ZeroDivisorsExist", "ExhaustiveSearch", zero_divisor_check(a, a.element_at(hit)),
                            examined=hit)
    if a.field.p is None:
        cert = division_certificate(a, seed=plan.seed)
        if cert is not None:
            return CensusReport("NoZeroDivisors", "DivisionCertificate", certificate=cert, seed=plan.seed)
    cands = [x for x in candidate_elements(a, plan) if not x.is_zero()]

    def probe(s, e):
        for k in range(s, e):
            if _is_zero_divisor_fast(a, cands[k].coords):
                return k
        return None

    hit = first_hit(len(cands), probe, threads, chunk=256)
    if hit is None:
        return CensusReport("Unknown", "SampledOnly", examined=len(cands), seed=plan.seed)
    return CensusReport("ZeroDivisorsExist", "SampledOnly", zero_divisor_check(a, cands[hit]),
                        examined=hit + 1, seed=plan.seed)


# -- hypothesis -----------------------------------------------------------------


@dataclass
class HypothesisWitness:
    x: AlgebraElement
    y: AlgebraElement
    z: AlgebraElement
    associator: AlgebraElement
    partner: AlgebraElement
    side: str   # "left": associator * partner = 0; "right": partner * associator = 0

    def to_dict(self) -> dict:
        return {
            "x": self.x.format(), "y": self.y.format(), "z": self.z.format(),
            "associator": self.associator.format(),
            "partner": self.partner.format(), "side": self.side,
        }


@dataclass
class HypothesisVerdict:
    status: str                     # Holds | Fails | HoldsVacuously | Unknown
    method: str                     # ExhaustiveSearch | DivisionCertificate | SampledOnly
    witness: HypothesisWitness | None = None
    pairs_examined: int = 0
    seed: int | None = None
    census: CensusReport | None = None

    def to_dict(self) -> dict:
        return {
            "status": self.status,
            "method": self.method,
            "pairs_examined": self.pairs_examined,
            "seed": self.seed,
            "witness": None if self.witness is None else self.witness.to_dict(),
        }


def associator_map(a: StructureConstants, x: AlgebraElement, y: AlgebraElement) -> Matrix:
    """Matrix of the linear map z -> (x, y, z); column k is (x, y, e_k)."""
    cols = [a.assoc_coords(x.coords, y.coords, a._basis_coords(k)) for k in range(a.dim)]
    return Matrix.from_columns(a.field, cols, a.dim)


def _witness_from(a, x, y, d_coords) -> HypothesisWitness:
    m = associator_map(a, x, y)
    z = solve(m, d_coords)
    if z is None:
        raise AssertionError("candidate associator is not in the image of z -> (x, y, z)")
    z = AlgebraElement(a, z)
    d = AlgebraElement(a, a.assoc_coords(x.coords, y.coords, z.coords))
    if d.is_zero() or d.coords != tuple(d_coords):
        raise AssertionError("recovered associator does not match the candidate")
    zd = zero_divisor_check(a, d)
    if zd.is_left:
        w = HypothesisWitness(x, y, z, d, zd.left_witness, "left")
    elif zd.is_right:
        w = HypothesisWitness(x, y, z, d, zd.right_witness, "right")
    else:
        raise AssertionError("candidate associator is not a zero divisor")
    prod = d * w.partner if w.side == "left" else w.partner * d
    if not prod.is_zero():
        raise AssertionError("zero-divisor partner does not annihilate the associator")
    return w


def _image_zero_divisor_finite(a, x, y, mask) -> tuple | None:
    """Lowest-index zero divisor in the image of z -> (x, y, z), via the census mask."""
    p = a.field.p
    cols = [a.assoc_coords(x.coords, y.coords, a._basis_coords(k)) for k in range(a.dim)]
    basis, _ = rref(a.field, cols, a.dim)
    if not basis:
        return None
    r = len(basis)
    combos = element_coords_small(p, r)
    img = combos @ np.array(basis, dtype=np.int64) % p
    idx = img @ (p ** np.arange(a.dim, dtype=np.int64))
    hits = idx[mask[idx]]
    if not hits.size:
        return None
    return a.element_at(int(hits.min())).coords


def element_coords_small(p: int, r: int) -> np.ndarray:
    total = p ** r
    idx = np.arange(total, dtype=np.int64)
    out = np.empty((total, r), dtype=np.int64)
    for i in range(r):
        out[:, i] = idx % p
        idx //= p
    return out


def _image_zero_divisor_general(a, x, y, known) -> tuple | None:
    """A zero divisor in the image of z -> (x, y, z): image basis vectors and
    their pairwise sums/differences, then any known zero divisor in the span."""
    cols = [a.assoc_coords(x.coords, y.coords, a._basis_coords(k)) for k in range(a.dim)]
    basis, _ = rref(a.field, cols, a.dim)
    if not basis:
        return None
    cands = list(basis)
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            cands.append(a.add_coords(basis[i], basis[j]))
            cands.append(a.sub_coords(basis[i], basis[j]))
    for c in cands:
        if any(c) and _is_zero_divisor_fast(a, c):
            return c
    for d in known:
        if rank_of_rows(a.field, list(basis) + [d], a.dim) == len(basis):
            return d
    return None


def hypothesis_check(a: StructureConstants, plan: SamplingPlan | None = None, threads: int = 1,
                     use_tables: bool = True) -> HypothesisVerdict:
    """Test whether some nonzero associator is a zero divisor.

    Associative algebras hold vacuously.  If the census proves there are
    no zero divisors the hypothesis holds outright.  Otherwise pairs (x, y)
    are scanned; since z -> (x, y, z) is linear, a pair yields a failing
    witness exactly when its image contains a zero divisor, and z is then
    recovered by a linear solve.
    """
    plan = plan or SamplingPlan()
    alt = is_alternative(a)
    if not alt.passed:
        raise NotAlternative(f"{a.name} is not alternative")
    if is_associative(a).passed:
        return HypothesisVerdict("HoldsVacuously", "ExhaustiveSearch")
    census = zero_divisor_census(a, plan, threads)
    if census.status == "NoZeroDivisors":
        return HypothesisVerdict("Holds", census.method, census=census, seed=census.seed)

    finite = a.field.p is not None and _safe_int64(a)
    exhaustive = finite and plan.exhaustive is not False and (
        plan.exhaustive is True or a.size ** 2 <= EXHAUSTIVE_PAIRS)
    mask = None
    if finite and a.size <= EXHAUSTIVE_ELEMENTS:
        mask = zero_divisor_mask(a, threads)

    if exhaustive and use_tables and a.size ** 3 <= EXHAUSTIVE_PAIRS and mask is not None:
        t = ElementTables(a)
        for xi in range(a.size):
            s = t.assoc_slice(xi)
            hits = np.nonzero(mask[s])
            if hits[0].size:
                yi = int(hits[0][0])
                x, y = a.element_at(xi), a.element_at(yi)
                w = _witness_from(a, x, y, a.element_at(int(s[yi, hits[1][0]])).coords)
                return HypothesisVerdict("Fails", "ExhaustiveSearch", w, xi * a.size + yi + 1, census=census)
        return HypothesisVerdict("Holds", "ExhaustiveSearch", pairs_examined=a.size ** 2, census=census)

    if exhaustive:
        N = a.size
        total = N * N
        pair = lambda k: (a.element_at(k // N), a.element_at(k % N))
    else:
        rng = plan.rng("hypothesis-pairs")
        basis = a.basis()
        pairs = [(x, y) for x in basis for y in basis]
        pairs += [(a.random_element(rng), a.random_element(rng)) for _ in range(plan.samples)]
        total = len(pairs)
        pair = lambda k: pairs[k]
    known = [] if census.witness is None else [census.witness.element.coords]

    def scan(s, e):
        for k in range(s, e):
            x, y = pair(k)
            if mask is not None:
                d = _image_zero_divisor_finite(a, x, y, mask)
            else:
                d = _image_zero_divisor_general(a, x, y, known)
            if d is not None:
                return k
        return None

    hit = first_hit(total, scan, threads, chunk=1024)
    method = "ExhaustiveSearch" if exhaustive else "SampledOnly"
    seed = None if exhaustive else plan.seed
    if hit is None:
        status = "Holds" if exhaustive else "Unknown"
        return HypothesisVerdict(status, method, pairs_examined=total, seed=seed, census=census)
    x, y = pair(hit)
    d = _image_zero_divisor_finite(a, x, y, mask) if mask is not None else _image_zero_divisor_general(a, x, y, known)
    return HypothesisVerdict("Fails", method, _witness_from(a, x, y, d), hit + 1, seed=seed, census=census)


# -- consequences of the hypothesis -----------------------------------------------


def check_consequences(a: StructureConstants, plan: SamplingPlan | None = None, threads: int = 1,
                       hypothesis: HypothesisVerdict | None = None) -> list[CheckReport]:
    """Under the hypothesis: N = C, nonzero nuclear elements and non-nuclear
    elements are not zero divisors.  Raises PreconditionFailed otherwise."""
    plan = plan or SamplingPlan()
    if not is_alternative(a).passed:
        raise PreconditionFailed("alternative", f"{a.name} is not alternative")
    if is_associative(a).passed:
        raise PreconditionFailed("not associative", f"{a.name} is associative")
    hyp = hypothesis or hypothesis_check(a, plan, threads)
    if hyp.status != "Holds":
        raise PreconditionFailed("hypothesis", f"hypothesis status is {hyp.status}")

    nuc = nucleus(a)
    cen = center(a)
    reports = []
    if nuc == cen:
        reports.append(CheckReport("N = C", True, samples_used=nuc.dimension, exhaustive=True,
                                   details={"nucleus_dim": nuc.dimension, "center_dim": cen.dimension}))
    else:
        bad = next(v for v in nuc.vectors if not cen.contains(v))
        reports.append(CheckReport("N = C", False, witness=(bad,), defect=bad, exhaustive=True,
                                   details={"nucleus_dim": nuc.dimension, "center_dim": cen.dimension}))

    def kernel_report(name, elements, exhaustive):
        rep = CheckReport(name, True, exhaustive=exhaustive, seed=None if exhaustive else plan.seed)
        for x in elements:
            rep.samples_used += 1
            if _is_zero_divisor_fast(a, x.coords):
                zd = zero_divisor_check(a, x)
                partner = zd.left_witness if zd.is_left else zd.right_witness
                rep.passed = False
                rep.witness = (x, partner)
                rep.defect = x * partner if zd.is_left else partner * x
                rep.details["side"] = "left" if zd.is_left else "right"
                break
        return rep

    p = a.field.p
    span_exhaustive = p is not None and p ** nuc.dimension <= plan.budget and plan.exhaustive is not False
    if span_exhaustive:
        nuclear = (v for v in nuc.elements() if not v.is_zero())
    else:
        rng = plan.rng("nuclear")
        nuclear = _draw(lambda: nuc.random_element(rng), lambda v: not v.is_zero(), plan.samples) \
            if nuc.dimension else iter(())
    reports.append(kernel_report("nonzero nuclear elements are not zero divisors", nuclear, span_exhaustive))

    all_exhaustive = p is not None and _census_exhaustive_ok(a, plan)
    if all_exhaustive:
        outside = (x for x in (a.element_at(i) for i in range(1, a.size)) if not nuc.contains(x))
    else:
        rng = plan.rng("non-nuclear")
        outside = _draw(lambda: a.random_element(rng), lambda x: not nuc.contains(x), plan.samples)
    reports.append(kernel_report("non-nuclear elements are not zero divisors", outside, all_exhaustive))
    return reports


def _draw(make, keep, count, max_tries_factor=100):
    """Yield ``count`` values of make() that satisfy keep()."""
    got = tries = 0
    while got < count and tries < count * max_tries_factor:
        tries += 1
        v = make()
        if keep(v):
            got += 1
            yield v


# -- overall verdict ----------------------------------------------------------------


@dataclass
class MainTheoremVerdict:
    algebra: str
    applicable: bool
    alternative: CheckReport
    associative: CheckReport
    hypothesis: HypothesisVerdict | None
    census: CensusReport
    consistent: bool

    def to_dict(self) -> dict:
        return {
            "algebra": self.algebra,
            "applicable": self.applicable,
            "alternative": self.alternative.passed,
            "associative": self.associative.passed,
            "hypothesis": None if self.hypothesis is None else self.hypothesis.to_dict(),
            "zero_divisors": self.census.to_dict(),
            "consistent": self.consistent,
        }


def check_main_theorem(a: StructureConstants, plan: SamplingPlan | None = None, threads: int = 1) -> MainTheoremVerdict:
    """For alternative non-associative algebras: if no nonzero associator is
    a zero divisor then there are no zero divisors.  ``consistent`` is False
    only if the hypothesis holds while zero divisors exist."""
    plan = plan or SamplingPlan()
    alt = is_alternative(a)
    assoc = is_associative(a)
    applicable = alt.passed and not assoc.passed
    hyp = hypothesis_check(a, plan, threads) if alt.passed else None
    census = hyp.census if hyp is not None and hyp.census is not None else zero_divisor_census(a, plan, threads)
    if census.status == "Unknown" and hyp is not None and hyp.status == "Fails":
        # the failing associator is itself a zero divisor
        zd = zero_divisor_check(a, hyp.witness.associator)
        census = CensusReport("ZeroDivisorsExist", census.method, zd, census.examined, census.seed)
    consistent = not (applicable and hyp.status == "Holds" and census.has_zero_divisors)
    return MainTheoremVerdict(a.name, applicable, alt, assoc, hyp, census, consistent)
