import numpy as np
import pytest

import oracle
from novikov.algebra import Algebra, check_novikov
from novikov.generators import (
    SHIPPED_PROFILE,
    GDInputError,
    Profile,
    corpus,
    d_dx,
    derivations,
    direct_sum,
    gd_algebra,
    is_derivation,
    leibniz_defect,
    mutate,
    one_dim_field,
    parse_field,
    truncated_poly_algebra,
    truncated_polynomials,
)
from novikov.io import dumps_algebra
from novikov.lattice import Status, is_prime, within_enumeration_caps
from novikov.linalg import GF, Q, Matrix, Subspace, kernel_of_array
from novikov.structure import is_ideal, subspace_product, vector_span


def test_gd_with_zero_derivation_and_unit_lambda_is_base():
    c = truncated_polynomials(GF(3), 3)
    assert gd_algebra(c, Matrix.zeros(GF(3), 3, 3), 1).table == c.table


def test_gd_x2_table():
    # expand a*d(b) on {1, x}: 1*d(x) = 1, x*d(x) = x, d(1) = 0
    a = gd_algebra(truncated_polynomials(GF(2), 2), d_dx(GF(2), 2), 0)
    assert a.table == (((0, 0), (1, 0)), ((0, 0), (0, 1)))


def test_gd_rejects_non_derivation_over_q():
    # over Q, d/dx does not preserve x^2 = 0 in Q[x]/(x^2)
    with pytest.raises(GDInputError, match=r"Leibniz rule fails at basis pair \(1, 1\)"):
        gd_algebra(truncated_polynomials(Q, 2), d_dx(Q, 2), 0)


def test_gd_rejects_bad_base():
    noncomm = Algebra.from_table(Q, [[(0, 0), (1, 0)], [(0, 0), (0, 0)]])
    with pytest.raises(GDInputError, match="Commutativity"):
        gd_algebra(noncomm, Matrix.zeros(Q, 2, 2), 0)


def test_truncated_gf5_is_novikov():
    a = truncated_poly_algebra(5, 0)
    assert a.dim == 5 and check_novikov(a).is_novikov
    assert oracle.is_novikov(a.table, 5)


def test_truncated_examples():
    assert truncated_poly_algebra(2, 0).dim == 2
    a0, a1 = truncated_poly_algebra(3, 0), truncated_poly_algebra(3, 1)
    assert a0.dim == 3 and check_novikov(a0).is_novikov
    assert a0.table != a1.table


def test_derivation_examples():
    assert all(not any(any(r) for r in m.rows) for m in derivations(one_dim_field(Q)))
    assert derivations(one_dim_field(GF(3))) == []
    z = Algebra.zero(GF(2), 2)
    assert len(derivations(z)) == 4
    c = truncated_polynomials(GF(3), 3)
    assert is_derivation(c, d_dx(GF(3), 3))
    ds = derivations(c)
    # d/dx lies in the span of the returned basis
    flat = [sum(m.rows, ()) for m in ds]
    target = sum(d_dx(GF(3), 3).rows, ())
    assert target in Subspace.span(GF(3), 9, flat)


@pytest.mark.parametrize("f", [Q, GF(2), GF(3)], ids=str)
def test_derivations_leibniz_and_rank(f):
    for c in (truncated_polynomials(f, 3), direct_sum(one_dim_field(f), truncated_polynomials(f, 2))):
        ds = derivations(c)
        for d in ds:
            for i in range(c.dim):
                for j in range(c.dim):
                    assert not any(leibniz_defect(c, d, i, j))
        # cross-check the dimension against an independently built Leibniz system
        n = c.dim
        rows = []
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    row = [0] * (n * n)
                    # d(e_i e_j)_k = sum_l c_ij^l d_kl
                    for l in range(n):
                        row[k * n + l] += c.table[i][j][l]
                    # (d e_i) e_j + e_i (d e_j), component k
                    for l in range(n):
                        row[l * n + i] -= c.table[l][j][k]
                        row[l * n + j] -= c.table[i][l][k]
                    rows.append(row)
        arr = np.array([[int(x) for x in r] for r in rows], dtype=object)
        assert len(ds) == kernel_of_array(f, arr, n * n).dim


def test_direct_sum_examples():
    a, b = truncated_poly_algebra(2, 1), one_dim_field(GF(2))
    s = direct_sum(a, b)
    assert s.dim == 3
    assert check_novikov(s).is_novikov
    left = vector_span(s, s.basis_vector(0), s.basis_vector(1))
    right = vector_span(s, s.basis_vector(2))
    assert is_ideal(s, left) and is_ideal(s, right)
    assert subspace_product(s, left, right).is_zero() and subspace_product(s, right, left).is_zero()
    assert is_prime(s).status is Status.NO


def test_mutate_examples():
    a = truncated_poly_algebra(3, 0)
    assert mutate(a, 0, 1, 2, 0) == a
    b = mutate(a, 0, 1, 2, 2)
    assert mutate(b, 0, 1, 2, -2) == a
    assert mutate(a, 1, 1, 1, None, seed=5) == mutate(a, 1, 1, 1, None, seed=5)


def test_parse_field():
    assert parse_field("Q") == Q
    assert parse_field("GF3") == GF(3) == parse_field("GF(3)") == parse_field(3) == parse_field({"GFp": 3})
    with pytest.raises(ValueError):
        parse_field("GF4")


def test_corpus_is_deterministic_and_counts_honored():
    p = Profile(fields=("GF2", "GF3"), dims=(1, 2, 3, 4), count=25, mutations=10, seed=9)
    c1, c2 = corpus(p), corpus(p)
    assert [dumps_algebra(e.algebra) for e in c1] == [dumps_algebra(e.algebra) for e in c2]
    assert sum(not e.negative for e in c1) == 25
    assert sum(e.negative for e in c1) == 10
    assert all(within_enumeration_caps(e.algebra.field, e.algebra.dim) for e in c1)
    assert corpus(Profile(count=5, seed=10))[0] != c1[0]


def test_corpus_positives_are_novikov(small_corpus):
    for e in small_corpus:
        if not e.negative:
            assert check_novikov(e.algebra).is_novikov, e.name


def test_profile_round_trip():
    assert Profile.from_dict(SHIPPED_PROFILE.to_dict()) == SHIPPED_PROFILE
