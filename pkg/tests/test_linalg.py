import random
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

import oracle
from novikov.lattice import enumerate_subspaces
from novikov.linalg import (
    GF,
    Q,
    Field,
    FieldMismatchError,
    Matrix,
    Subspace,
    contains,
    kernel,
    rank,
    rref,
    subspace_intersect,
    subspace_leq,
    subspace_sum,
)


def test_field_rejects_composite_and_out_of_range():
    for bad in (1, 4, 9, 2**16 + 1, 65536):
        with pytest.raises(ValueError):
            Field(bad)
    assert Field(65521).p == 65521


def test_scalar_canonical_forms():
    assert Q("6/4") == Fraction(3, 2)
    assert Q.format(Fraction(-6, 4)) == "-3/2"
    assert GF(7)("-1") == 6
    assert GF(7)("1/3") == 5  # 3 * 5 = 15 = 1 mod 7
    with pytest.raises(ValueError):
        GF(3)("1/3")
    with pytest.raises(ValueError):
        Q("x")


def test_rref_zero_and_identity():
    z = Matrix.zeros(Q, 3, 3)
    assert rref(z).nrows == 0 and rank(z) == 0
    i4 = Matrix.identity(Q, 4)
    assert rref(i4).rows == i4.rows


def test_rref_gf2_example():
    m = Matrix.from_rows(GF(2), [(1, 1, 0), (0, 1, 1), (1, 0, 1)])
    assert rref(m).rows == ((1, 0, 1), (0, 1, 1))
    # oracle: the row space is every combination of the rows
    combos = {tuple(sum(c * r[k] for c, r in zip(cs, m.rows)) % 2 for k in range(3))
              for cs in product(range(2), repeat=3)}
    assert combos == oracle.members(rref(m).rows, 3, 2)


def test_kernel_examples():
    assert kernel(Matrix.identity(Q, 3)).is_zero()
    assert kernel(Matrix.zeros(Q, 3, 3)).is_full()
    k = kernel(Matrix.from_rows(Q, [(1, 2)]))
    assert k == Subspace.span(Q, 2, [(-2, 1)])


def test_sum_and_intersection_examples():
    e1, e2 = (1, 0, 0), (0, 1, 0)
    a = Subspace.span(Q, 3, [e1])
    assert (a + Subspace.span(Q, 3, [e2])).dim == 2
    assert a & a == a and a + a == a
    f = GF(2)
    u = Subspace.span(f, 3, [(1, 0, 0), (0, 1, 0)])
    w = Subspace.span(f, 3, [(0, 1, 0), (0, 0, 1)])
    meet = subspace_intersect(u, w)
    assert meet.dim == 1
    assert oracle.members(meet.basis, 3, 2) == (oracle.members(u.basis, 3, 2) & oracle.members(w.basis, 3, 2))


def test_mismatch_raises():
    with pytest.raises(FieldMismatchError):
        subspace_sum(Subspace.zero(Q, 2), Subspace.zero(Q, 3))
    with pytest.raises(FieldMismatchError):
        subspace_sum(Subspace.zero(GF(2), 2), Subspace.zero(GF(3), 2))


def test_membership_and_order():
    s = Subspace.span(Q, 3, [(1, 1, 0)])
    assert contains(s, (2, 2, 0)) and (2, 2, 0) in s
    assert not contains(s, (1, 0, 0))
    assert subspace_leq(s, Subspace.full(Q, 3))
    assert not subspace_leq(Subspace.full(Q, 3), s)


def _canonical(basis):
    pivots = []
    for r in basis:
        nz = [k for k, x in enumerate(r) if x]
        if not nz or r[nz[0]] != 1:
            return False
        pivots.append(nz[0])
    if pivots != sorted(set(pivots)):
        return False
    return all(r[c] == 0 for c in pivots for r in basis if r[c] and r is not basis[pivots.index(c)])


fields = st.sampled_from([Q, GF(2), GF(3), GF(5), GF(65521)])


@st.composite
def matrices(draw, max_rows=6, max_cols=6):
    f = draw(fields)
    rows = draw(st.integers(0, max_rows))
    cols = draw(st.integers(1, max_cols))
    ints = st.integers(-5, 5)
    data = [[draw(ints) for _ in range(cols)] for _ in range(rows)]
    if f.p is None and data and draw(st.booleans()):
        data[0][0] = Fraction(draw(ints), draw(st.integers(1, 7)))
    return Matrix.from_rows(f, data, cols)


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_rref_matches_textbook_elimination(m):
    r = rref(m)
    assert r.rows == tuple(oracle.gauss_jordan(m.rows, m.ncols, m.field.p))
    assert rref(r).rows == r.rows
    assert _canonical(r.rows)


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_kernel_vectors_are_solutions(m):
    k = kernel(m)
    assert k.dim == m.ncols - rank(m)
    for v in k.basis:
        assert not any(m.apply(v))
    assert k.basis == oracle.null_space(m.rows, m.ncols, m.field.p)


@settings(max_examples=300, deadline=None)
@given(matrices(max_rows=4, max_cols=5), st.data())
def test_dimension_formula(m, data):
    rows2 = data.draw(st.lists(st.lists(st.integers(-3, 3), min_size=m.ncols, max_size=m.ncols), max_size=4))
    a = Subspace.span(m.field, m.ncols, m.rows)
    b = Subspace.span(m.field, m.ncols, rows2)
    assert a.dim + b.dim == (a + b).dim + (a & b).dim
    assert a & b <= a and a <= a + b


@pytest.mark.parametrize("p,n", [(2, 3), (2, 4), (3, 3)])
def test_intersection_against_membership_oracle(p, n):
    f = GF(p)
    subs = list(enumerate_subspaces(f, n))
    mem = {s: oracle.members(s.basis, n, p) for s in subs}
    step = 1 if len(subs) < 100 else 7
    for s in subs[::step]:
        for t in subs:
            meet = s & t
            assert mem.get(meet, oracle.members(meet.basis, n, p)) == mem[s] & mem[t]


def test_rational_growth_is_exact():
    # Hilbert-like matrix: fixed-width pivoting would lose exactness here
    n = 8
    m = Matrix.from_rows(Q, [[Fraction(1, i + j + 1) for j in range(n)] for i in range(n)])
    assert rank(m) == n
    assert kernel(m).is_zero()
    big = Matrix.from_rows(Q, [[10**30 + i * j for j in range(4)] for i in range(6)])
    assert rref(big).rows == tuple(oracle.gauss_jordan(big.rows, 4, None))


@pytest.mark.parametrize("f", [Q, GF(2), GF(3), GF(5)], ids=str)
def test_dimension_formula_thousand_pairs(f):
    rng = random.Random(11)
    for _ in range(1000):
        n = rng.randint(1, 5)

        def rand_space():
            k = rng.randint(0, n)
            return Subspace.span(f, n, [[rng.randint(-2, 2) for _ in range(n)] for _ in range(k)])

        a, b = rand_space(), rand_space()
        assert a.dim + b.dim == (a + b).dim + (a & b).dim
