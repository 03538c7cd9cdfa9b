import itertools

import numpy as np
import pytest

from altalg import GF, Q, direct_sum, matrix_algebra_2x2, octonions, quaternions
from altalg.analysis import SamplingPlan, is_alternative, is_associative
from altalg.core import associator
from altalg.errors import AlgebraMismatch, PreconditionFailed, ZeroElement
from altalg.linalg import Matrix, rank
from altalg.zerodiv import (
    check_consequences, check_main_theorem, division_certificate, hypothesis_check, mult_operator,
    zero_divisor_census, zero_divisor_check, zero_divisor_mask,
)


def brute_force_zero_divisors(a):
    """Set of element indices x != 0 with x*y = 0 or y*x = 0 for some y != 0, by multiplying every pair."""
    p, n = a.field.p, a.dim
    T = np.array([[[int(c) for c in row] for row in plane] for plane in a.table], dtype=np.int64)
    elems = np.array(list(itertools.product(range(p), repeat=n))[::1], dtype=np.int64)
    # little-endian digits: reverse so elems[idx] matches a.element_at(idx)
    elems = elems[:, ::-1]
    prod = np.einsum("xi,yj,ijk->xyk", elems, elems, T) % p
    zero = ~prod.any(axis=2)
    zero[0, :] = zero[:, 0] = False
    return set(np.nonzero(zero.any(axis=1) | zero.any(axis=0))[0].tolist())


def test_mult_operator_basics(zorn_q, oct_q, quat):
    for a in (oct_q, quat):
        one = a.one()
        assert mult_operator(a, one, "left").matrix == Matrix.identity(a.field, a.dim)
        assert mult_operator(a, one, "right").matrix == Matrix.identity(a.field, a.dim)
    u = zorn_q.named("E11")
    assert rank(mult_operator(zorn_q, u, "left").matrix) < 8
    x = oct_q.basis(3) + oct_q.basis(5)
    assert mult_operator(oct_q, 3 * x).matrix == mult_operator(oct_q, x).matrix.scale(3)
    with pytest.raises(AlgebraMismatch):
        mult_operator(oct_q, quat.one())


def test_zorn_idempotent_is_two_sided_zero_divisor(zorn_q):
    u = zorn_q.named("E11")
    v = zero_divisor_check(zorn_q, u)
    assert v.is_left and v.is_right
    assert (u * v.left_witness).is_zero() and not v.left_witness.is_zero()
    assert (v.right_witness * u).is_zero() and not v.right_witness.is_zero()
    comp = zorn_q.one() - u
    assert (u * comp).is_zero() and (comp * u).is_zero()


def test_octonion_one_plus_e1_is_not_zero_divisor(oct_q):
    x = oct_q.one() + oct_q.basis(1)
    assert rank(mult_operator(oct_q, x).matrix) == 8
    v = zero_divisor_check(oct_q, x)
    assert not v.is_zero_divisor and v.left_witness is None and v.right_witness is None


def test_m2_matrix_unit(m2):
    e11, e22 = m2.named("E11"), m2.named("E22")
    v = zero_divisor_check(m2, e11)
    assert v.is_left and (e11 * v.left_witness).is_zero()
    assert (e11 * e22).is_zero()


def test_zero_is_rejected(oct_q):
    with pytest.raises(ZeroElement):
        zero_divisor_check(oct_q, oct_q.zero())


@pytest.mark.parametrize("name", ["octonions/GF(2)", "zorn/GF(2)"])
def test_census_mask_matches_brute_force_and_per_element(corpus, name):
    a = corpus[name]
    mask = zero_divisor_mask(a)
    oracle = brute_force_zero_divisors(a)
    assert set(np.nonzero(mask)[0].tolist()) == oracle
    for idx in range(1, a.size):
        assert zero_divisor_check(a, a.element_at(idx)).is_zero_divisor == bool(mask[idx])


def test_census_zorn_gf2(zorn2):
    c = zero_divisor_census(zorn2)
    assert c.status == "ZeroDivisorsExist" and c.method == "ExhaustiveSearch"
    w = c.witness
    if w.is_left:
        assert (w.element * w.left_witness).is_zero()
    if w.is_right:
        assert (w.right_witness * w.element).is_zero()
    # lowest index wins
    assert c.witness.element == zorn2.element_at(min(brute_force_zero_divisors(zorn2)))


def test_census_octonions_q_certificate(oct_q):
    c = zero_divisor_census(oct_q)
    assert c.status == "NoZeroDivisors" and c.method == "DivisionCertificate"
    assert c.certificate.norm_weights == (1,) * 8


def test_census_octonions_gf3(oct_gf3):
    c = zero_divisor_census(oct_gf3)
    assert c.status == "ZeroDivisorsExist" and c.method == "ExhaustiveSearch"
    # independent: 1 + e1 + e2 has norm 3 = 0, so x * conj(x) = 0
    e = oct_gf3.basis()
    x = e[0] + e[1] + e[2]
    xbar = e[0] - e[1] - e[2]
    assert (x * xbar).is_zero()
    assert zero_divisor_check(oct_gf3, x).is_zero_divisor


def test_certificate_declines_split_or_indefinite():
    assert division_certificate(octonions(Q, (-1, 1, -1)).algebra) is None
    assert division_certificate(matrix_algebra_2x2(Q)) is None
    assert division_certificate(octonions(Q, (-1, -2, -3)).algebra) is not None


def test_census_threads_agree(zorn2, oct_gf3):
    for a in (zorn2, oct_gf3):
        one = zero_divisor_census(a, threads=1)
        four = zero_divisor_census(a, threads=4)
        assert one.to_dict() == four.to_dict()


def test_census_over_q_without_certificate():
    # no certificate for an indefinite norm, so only sampling is available
    c = zero_divisor_census(octonions(Q, (-1, 1, -1)).algebra, SamplingPlan(samples=50))
    assert c.status in ("ZeroDivisorsExist", "Unknown")
    assert c.method == "SampledOnly"
    c = zero_divisor_census(quaternions(Q, (-1, -1)).algebra, SamplingPlan(samples=20))
    assert c.status == "NoZeroDivisors" and c.method == "DivisionCertificate"


def check_hypothesis_witness(h):
    w = h.witness
    assert not w.associator.is_zero() and not w.partner.is_zero()
    assert associator(w.x, w.y, w.z) == w.associator
    prod = w.associator * w.partner if w.side == "left" else w.partner * w.associator
    assert prod.is_zero()


def test_hypothesis_zorn_gf2(zorn2):
    h = hypothesis_check(zorn2)
    assert h.status == "Fails" and h.method == "ExhaustiveSearch"
    check_hypothesis_witness(h)


def test_hypothesis_zorn_gf2_linear_path(zorn2):
    h = hypothesis_check(zorn2, use_tables=False)
    assert h.status == "Fails"
    check_hypothesis_witness(h)


def test_hypothesis_octonions_q(oct_q):
    h = hypothesis_check(oct_q)
    assert h.status == "Holds" and h.method == "DivisionCertificate"


def test_hypothesis_quaternions(quat):
    assert hypothesis_check(quat).status == "HoldsVacuously"


def test_hypothesis_requires_alternative(sed):
    from altalg.errors import NotAlternative
    with pytest.raises(NotAlternative):
        hypothesis_check(sed)


def test_contrapositive_and_artin_zorn(corpus):
    # finite alternative non-associative algebras here all have zero divisors,
    # and the hypothesis must then fail with a verified witness
    for name, a in corpus.items():
        if a.field.p is None:
            continue
        if not is_alternative(a).passed or is_associative(a).passed:
            continue
        h = hypothesis_check(a)
        assert h.status == "Fails", name
        check_hypothesis_witness(h)
        if a.size ** 2 <= 1 << 24:
            assert h.method == "ExhaustiveSearch"


def test_zorn_q_hypothesis_fails(zorn_q):
    h = hypothesis_check(zorn_q, SamplingPlan(samples=200))
    assert h.status == "Fails"
    check_hypothesis_witness(h)


def test_consequences_octonions_q(oct_q):
    reports = check_consequences(oct_q, SamplingPlan(samples=300, seed=4))
    assert [r.passed for r in reports] == [True, True, True]
    assert reports[1].samples_used == 300 and reports[2].samples_used == 300


def test_consequence_preconditions(zorn2, m2, sed):
    with pytest.raises(PreconditionFailed) as exc:
        check_consequences(zorn2)
    assert exc.value.precondition == "hypothesis"
    with pytest.raises(PreconditionFailed) as exc:
        check_consequences(m2)
    assert exc.value.precondition == "not associative"
    with pytest.raises(PreconditionFailed) as exc:
        check_consequences(sed)
    assert exc.value.precondition == "alternative"


def test_main_theorem_examples(oct_q, zorn2, sed):
    v = check_main_theorem(oct_q)
    assert v.applicable and v.hypothesis.status == "Holds" and v.census.status == "NoZeroDivisors" and v.consistent
    v = check_main_theorem(zorn2)
    assert v.applicable and v.hypothesis.status == "Fails" and v.census.has_zero_divisors and v.consistent
    v = check_main_theorem(sed)
    assert not v.applicable and v.hypothesis is None and v.consistent


def test_main_theorem_consistent_on_corpus(corpus):
    for name, a in corpus.items():
        assert check_main_theorem(a, SamplingPlan(samples=500)).consistent, name


def test_main_theorem_on_direct_sum_with_division_summand():
    # O (+) M2 is alternative, not associative, and has zero divisors like (1_O, 0)
    a = direct_sum(octonions(Q).algebra, matrix_algebra_2x2(Q))
    v = check_main_theorem(a, SamplingPlan(samples=200))
    assert v.applicable and v.census.has_zero_divisors
    assert v.hypothesis.status == "Fails" and v.consistent
    check_hypothesis_witness(v.hypothesis)
