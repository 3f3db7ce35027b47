import random

import pytest

import oracle
from novikov.algebra import Algebra, check_novikov
from novikov.generators import direct_sum, one_dim_field, truncated_poly_algebra, truncated_polynomials
from novikov.linalg import GF, Q, Subspace
from novikov.structure import (
    NotAnIdealError,
    Sidedness,
    ann_left,
    ann_right,
    as_ideal,
    associator_ideal,
    associator_span,
    center,
    commutative_center,
    full_space,
    ideal_closure,
    is_ideal,
    nucleus,
    quotient,
    square,
    subalgebra_as_algebra,
    subspace_product,
    vector_span,
    zero_space,
)


def gd_x2_q():
    return Algebra.from_table(Q, [[(0, 0), (1, 0)], [(0, 0), (0, 1)]])


def random_table(rng, f, n, lo=-1, hi=1):
    return Algebra.from_table(f, [[[rng.randint(lo, hi) for _ in range(n)] for _ in range(n)] for _ in range(n)])


def test_nucleus_examples():
    c = truncated_polynomials(Q, 3)
    assert nucleus(c).is_full()
    assert nucleus(Algebra.zero(GF(2), 3)).is_full()
    a = gd_x2_q()
    assert nucleus(a).basis == oracle.nucleus(a.table, None)


def test_commutative_center_examples():
    assert commutative_center(truncated_polynomials(GF(3), 3)).is_full()
    assert commutative_center(Algebra.zero(Q, 2)).is_full()
    a = Algebra.from_table(Q, [[(0, 0), (1, 0)], [(0, 0), (0, 0)]])  # e1e2 = e1, e2e1 = 0
    assert commutative_center(a).basis == oracle.commutative_center(a.table, None)
    assert commutative_center(a).is_zero()


def test_center_is_commutative_center_on_corpus(positives):
    for a in positives:
        assert center(a) == commutative_center(a)


def test_center_smaller_than_commutative_center_off_novikov():
    rng = random.Random(0)
    for _ in range(500):
        a = random_table(rng, GF(2), 2)
        if check_novikov(a).is_novikov:
            continue
        k, z = commutative_center(a), center(a)
        if not k <= nucleus(a):
            assert z <= k and z != k
            return
    pytest.fail("no non-Novikov table with K not inside N found")


def test_associator_ideal_examples():
    assert associator_ideal(truncated_polynomials(Q, 3)).space.is_zero()
    rng = random.Random(1)
    grew = False
    for _ in range(300):
        a = random_table(rng, GF(2), 3)
        raw = associator_span(a)
        closed = associator_ideal(a).space
        assert raw <= closed and is_ideal(a, closed)
        if raw != closed:
            grew = True
            assert not check_novikov(a).is_novikov
    assert grew


def test_associator_span_is_ideal_on_corpus(positives):
    for a in positives:
        assert associator_span(a) == associator_ideal(a).space


def test_annihilator_examples(positives):
    z = Algebra.zero(GF(3), 2)
    assert ann_left(z, full_space(z)).is_full() and ann_right(z, full_space(z)).is_full()
    a = gd_x2_q()
    assert ann_left(a, zero_space(a)).is_full()
    assert ann_right(a, zero_space(a)).is_full()
    found = 0
    for b in positives:
        for i in range(b.dim):
            v = ideal_closure(b, vector_span(b, b.basis_vector(i))).space
            if not v.is_zero() and square(b, v).is_zero():
                found += 1
                assert v <= ann_left(b, v) and v <= ann_right(b, v)
    assert found


@pytest.mark.parametrize("p", [2, 3])
def test_maps_match_definitional_scans(positives, p):
    for a in positives:
        if a.field.p != p or a.dim > 4:
            continue
        t = a.table
        assert nucleus(a).basis == oracle.scan_nucleus(t, p)
        assert commutative_center(a).basis == oracle.scan_commutative_center(t, p)
        for m in (full_space(a), square(a, full_space(a)), nucleus(a)):
            assert ann_left(a, m).basis == oracle.scan_ann(t, m.basis, p, "left")
            assert ann_right(a, m).basis == oracle.scan_ann(t, m.basis, p, "right")


def test_maps_match_independent_elimination(positives):
    for a in positives:
        p = a.field.p
        assert nucleus(a).basis == oracle.nucleus(a.table, p)
        assert commutative_center(a).basis == oracle.commutative_center(a.table, p)
        d = associator_ideal(a).space
        assert ann_left(a, d).basis == oracle.ann(a.table, d.basis, p, "left")
        assert ann_right(a, d).basis == oracle.ann(a.table, d.basis, p, "right")


def test_structural_identities_on_corpus(positives):
    for a in positives:
        n, d = nucleus(a), associator_ideal(a).space
        assert is_ideal(a, n) and is_ideal(a, center(a))
        assert subspace_product(a, d, n).is_zero() and subspace_product(a, n, d).is_zero()


def test_ideal_closure_examples():
    a = truncated_poly_algebra(3, 0)
    full = full_space(a)
    assert ideal_closure(a, full).space == full
    n = nucleus(a)
    assert ideal_closure(a, n).space == n
    e3 = a.basis_vector(2)
    got = ideal_closure(a, vector_span(a, e3)).space
    ideals = [s for s in oracle.all_subspaces(3, 3)
              if e3 in oracle.members(s, 3, 3) and oracle.is_ideal(a.table, s, 3)]
    smallest = min(ideals, key=len)
    assert all(oracle.members(smallest, 3, 3) <= oracle.members(s, 3, 3) for s in ideals)
    assert got.basis == smallest


def test_left_closure_and_annihilators_on_corpus(positives):
    rng = random.Random(5)
    for a in positives:
        f = a.field
        for _ in range(3):
            x = tuple(f(rng.randrange(f.p) if f.p else rng.randint(-2, 2)) for _ in range(a.dim))
            l = ideal_closure(a, vector_span(a, x), Sidedness.LEFT).space
            assert is_ideal(a, l, Sidedness.LEFT)
            assert is_ideal(a, ann_left(a, l))
        for i in (full_space(a), nucleus(a), associator_ideal(a).space):
            assert is_ideal(a, ann_right(a, i), Sidedness.LEFT)


def test_product_examples(positives):
    a = truncated_polynomials(GF(2), 3)
    full = full_space(a)
    assert subspace_product(a, zero_space(a), full).is_zero()
    rows = oracle.product_space(a.table, full.basis, full.basis, 2)
    assert subspace_product(a, full, full).basis == rows and subspace_product(a, full, full).is_full()
    for b in positives:
        for i in (full_space(b), nucleus(b), associator_ideal(b).space, center(b)):
            for j in (full_space(b), square(b, full_space(b))):
                assert is_ideal(b, subspace_product(b, i, j))


def test_quotient_examples(positives):
    a = truncated_poly_algebra(3, 1)
    q0 = quotient(a, zero_space(a))
    assert q0.algebra.table == a.table
    assert quotient(a, full_space(a)).algebra.dim == 0
    with pytest.raises(NotAnIdealError):
        quotient(gd_x2_q(), Subspace.span(Q, 2, [(0, 1)]))
    rng = random.Random(2)
    for b in positives:
        i = associator_ideal(b).space if not associator_ideal(b).space.is_zero() else square(b, full_space(b))
        q = quotient(b, i)
        assert check_novikov(q.algebra).is_novikov
        f = b.field
        for _ in range(5):
            u = tuple(f(rng.randint(-2, 2)) for _ in range(b.dim))
            v = tuple(f(rng.randint(-2, 2)) for _ in range(b.dim))
            assert q.project(oracle.omul(b.table, u, v, f.p)) == \
                oracle.omul(q.algebra.table, q.project(u), q.project(v), f.p)


def test_subalgebra_examples(positives):
    a = direct_sum(one_dim_field(GF(3)), truncated_poly_algebra(3, 0))
    assert subalgebra_as_algebra(a, full_space(a)).algebra.table == a.table
    assert subalgebra_as_algebra(a, zero_space(a)).algebra.dim == 0
    with pytest.raises(NotAnIdealError):
        subalgebra_as_algebra(truncated_polynomials(Q, 3), Subspace.span(Q, 3, [(0, 1, 0)]))
    for b in positives:
        i = square(b, full_space(b))
        s = subalgebra_as_algebra(b, i)
        assert check_novikov(s.algebra).is_novikov
        for x in range(s.algebra.dim):
            for y in range(s.algebra.dim):
                ex, ey = s.algebra.basis_vector(x), s.algebra.basis_vector(y)
                assert s.embed(oracle.omul(s.algebra.table, ex, ey, b.field.p)) == \
                    oracle.omul(b.table, s.embed(ex), s.embed(ey), b.field.p)


def test_as_ideal_rejects_non_ideal():
    with pytest.raises(NotAnIdealError):
        as_ideal(gd_x2_q(), Subspace.span(Q, 2, [(0, 1)]))
    h = as_ideal(gd_x2_q(), Subspace.span(Q, 2, [(1, 0)]), Sidedness.TWO_SIDED)
    assert h.parent_dim == 2 and h.dim == 1
