import pytest

import oracle
from novikov.algebra import Algebra
from novikov.generators import direct_sum, one_dim_field, truncated_poly_algebra
from novikov.lattice import (
    CapExceededError,
    Method,
    Status,
    baer_radical,
    count_projective_points,
    enumerate_ideals,
    enumerate_subspaces,
    gaussian_binomial,
    is_prime,
    is_semiprime,
    is_simple,
    minimal_ideals,
    oracle_decisions,
    principal_ideal,
    projective_points,
    within_enumeration_caps,
)
from novikov.linalg import GF, Q
from novikov.structure import full_space, is_ideal, quotient, square, subspace_product
from novikov.witness import verify_witness


def oracle_eligible(algs):
    return [a for a in algs if a.field.p in (2, 3) and a.dim <= (4 if a.field.p == 2 else 3)]


def test_gaussian_binomial_values():
    assert [gaussian_binomial(4, k, 2) for k in range(5)] == [1, 15, 35, 15, 1]
    assert gaussian_binomial(3, 1, 3) == 13
    assert gaussian_binomial(2, 3, 2) == 0


@pytest.mark.parametrize("p,n", [(2, 1), (2, 2), (2, 3), (2, 4), (2, 5), (3, 1), (3, 2), (3, 3), (3, 4)])
def test_enumeration_counts(p, n):
    subs = list(enumerate_subspaces(GF(p), n))
    assert len(subs) == len(set(subs)) == sum(gaussian_binomial(n, k, p) for k in range(n + 1))
    for k in range(n + 1):
        assert sum(s.dim == k for s in subs) == gaussian_binomial(n, k, p)


@pytest.mark.parametrize("p,n", [(2, 2), (2, 3), (3, 2)])
def test_enumeration_matches_brute_force(p, n):
    assert {s.basis for s in enumerate_subspaces(GF(p), n)} == oracle.all_subspaces(n, p)


def test_enumeration_caps():
    for f, n in ((GF(2), 6), (GF(3), 5), (GF(5), 2), (Q, 1)):
        assert not within_enumeration_caps(f, n)
        with pytest.raises(CapExceededError):
            list(enumerate_subspaces(f, n))


def test_projective_points():
    pts = list(projective_points(GF(3), 3))
    assert len(pts) == count_projective_points(GF(3), 3) == 13
    assert all(next(x for x in v if x) == 1 for v in pts)
    assert pts == sorted(pts)


def test_enumerate_ideals_examples():
    f = one_dim_field(GF(2))
    assert [h.space.dim for h in enumerate_ideals(f)] == [0, 1]
    z = Algebra.zero(GF(2), 2)
    assert len(enumerate_ideals(z)) == 5


def test_principal_ideal_examples(positives):
    a = truncated_poly_algebra(3, 0)
    assert principal_ideal(a, (0, 0, 0)).space.is_zero()
    for b in oracle_eligible(positives):
        ideals = [h.space for h in enumerate_ideals(b)]
        for v in projective_points(b.field, b.dim):
            got = principal_ideal(b, v).space
            containing = [s for s in ideals if v in s]
            assert got in containing
            assert all(got <= s for s in containing)


def test_semiprime_examples():
    z = Algebra.zero(GF(2), 2)
    d = is_semiprime(z)
    assert d.status is Status.NO and d.witness["ideals"] == [full_space(z)]
    assert is_semiprime(one_dim_field(GF(5))).status is Status.YES
    a = truncated_poly_algebra(3, 0)
    assert is_semiprime(a).status is oracle_decisions(a)["semiprime"].status is Status.YES


def test_prime_examples():
    assert is_prime(one_dim_field(GF(3))).status is Status.YES
    s = direct_sum(one_dim_field(GF(3)), one_dim_field(GF(3)))
    d = is_prime(s)
    assert d.status is Status.NO
    i, j = d.witness["ideals"]
    assert {i.basis, j.basis} == {((1, 0),), ((0, 1),)}
    assert subspace_product(s, i, j).is_zero()


def test_simple_examples():
    assert is_simple(one_dim_field(GF(2))).status is Status.YES
    assert is_simple(Algebra.zero(GF(2), 1)).status is Status.NO
    assert is_simple(Algebra.zero(GF(2), 0)).status is Status.NO
    for lam in range(3):
        a = truncated_poly_algebra(3, lam)
        assert is_simple(a).status is oracle_decisions(a)["simple"].status


def test_minimal_ideal_examples():
    z = Algebra.zero(GF(2), 1)
    assert [h.space for h in minimal_ideals(z)] == [full_space(z)]
    s = direct_sum(one_dim_field(GF(2)), one_dim_field(GF(2)))
    assert {h.space.basis for h in minimal_ideals(s)} == {((1, 0),), ((0, 1),)}


def test_rationals_never_yes(positives):
    for a in positives:
        if a.field.p is None:
            for decide in (is_semiprime, is_prime, is_simple):
                d = decide(a)
                assert d.status is not Status.YES
                assert d.method is Method.RANDOM_SEARCH or a.dim == 0 or a.is_zero_product()
    assert is_semiprime(one_dim_field(Q)).status is Status.UNDETERMINED
    assert is_prime(direct_sum(one_dim_field(Q), one_dim_field(Q))).status is Status.NO


def test_deciders_match_enumeration(positives):
    checked = 0
    for a in oracle_eligible(positives):
        o = oracle_decisions(a)
        for name, decide in (("semiprime", is_semiprime), ("prime", is_prime), ("simple", is_simple)):
            assert decide(a).status is o[name].status, name
        assert {h.space for h in minimal_ideals(a)} == set(o["minimal_ideals"])
        checked += 1
    assert checked >= 20


def test_oracle_decisions_match_brute_force(positives):
    for a in oracle_eligible(positives):
        if a.dim > 2 and a.field.p == 3 or a.dim > 3:
            continue
        p = a.field.p
        subs = [s for s in oracle.all_subspaces(a.dim, p) if oracle.is_ideal(a.table, s, p)]
        assert {h.space.basis for h in enumerate_ideals(a)} == set(subs)
        nonzero = [s for s in subs if s]
        semiprime = not any(not oracle.product_space(a.table, s, s, p) for s in nonzero)
        assert (oracle_decisions(a)["semiprime"].status is Status.YES) == semiprime


def test_no_witnesses_reverify(positives):
    for a in positives:
        for decide in (is_semiprime, is_prime, is_simple):
            d = decide(a)
            if d.status is Status.NO:
                ok, msg = verify_witness(a, d.witness)
                assert ok, msg


def test_prime_implies_semiprime(positives):
    for a in positives:
        if is_prime(a).status is Status.YES:
            assert is_semiprime(a).status is Status.YES


def test_baer_radical_examples():
    s = truncated_poly_algebra(3, 1)
    chain = baer_radical(s)
    assert len(chain.stages) == 1 and chain.radical.space.is_zero()
    z = Algebra.zero(GF(2), 3)
    chain = baer_radical(z)
    assert len(chain.stages) == 2 and chain.radical.space.is_full()


def test_baer_radical_on_corpus(positives):
    for a in positives:
        if not a.field.is_finite:
            continue
        chain = baer_radical(a)
        stages = [h.space for h in chain.stages]
        assert stages[0].is_zero()
        assert all(s.dim < t.dim and s <= t for s, t in zip(stages, stages[1:]))
        assert all(is_ideal(a, s) for s in stages)
        assert is_semiprime(quotient(a, stages[-1]).algebra).status is Status.YES
        if within_enumeration_caps(a.field, a.dim):
            for h in enumerate_ideals(a):
                if square(a, h.space).is_zero():
                    assert h.space <= stages[-1]


def test_scan_cap_is_enforced():
    with pytest.raises(CapExceededError):
        is_semiprime(direct_sum(truncated_poly_algebra(3, 0), Algebra.zero(GF(3), 1)), max_points=10)
