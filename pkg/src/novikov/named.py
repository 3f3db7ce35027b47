"""Small hand-picked algebras for the shipped corpus.

Each entry is there to exercise a particular claim non-vacuously: fields and
sums of fields (prime / not prime, idempotent commutative ideals), truncated
derivation algebras (simple and nonassociative over GF(p)), zero algebras and
algebras with nonzero Baer radical.
"""

from __future__ import annotations

from .algebra import Algebra
from .generators import (
    CorpusEntry,
    d_dx,
    direct_sum,
    gd_algebra,
    nilpotent_polynomials,
    one_dim_field,
    truncated_poly_algebra,
    truncated_polynomials,
)
from .linalg import GF, Q, Field, Matrix


def gd_truncated(field: Field, n: int, lam=0) -> Algebra:
    """GD algebra on F[x]/(x^n) with d/dx (a derivation only when char F divides n)."""
    return gd_algebra(truncated_polynomials(field, n), d_dx(field, n), lam)


def x_ddx(field: Field, n: int) -> Matrix:
    """The Euler derivation x d/dx on the basis 1, x, ..., x^{n-1}."""
    rows = [[field.zero] * n for _ in range(n)]
    for j in range(n):
        rows[j][j] = field(j)
    return Matrix(field, n, tuple(tuple(r) for r in rows))


def named_corpus() -> list[CorpusEntry]:
    F2, F3 = GF(2), GF(3)
    out = []

    def add(name, alg, note):
        out.append(CorpusEntry(name, alg, False, {"note": note}))

    add("field-GF2", one_dim_field(F2), "1-dim field e*e=e")
    add("field-GF3", one_dim_field(F3), "1-dim field e*e=e")
    add("zero-GF2-d1", Algebra.zero(F2, 1), "zero multiplication")
    add("zero-GF2-d2", Algebra.zero(F2, 2), "zero multiplication")
    add("zero-GF3-d2", Algebra.zero(F3, 2), "zero multiplication")
    add("field+field-GF2", direct_sum(one_dim_field(F2), one_dim_field(F2)), "not prime, semiprime")
    add("field+field-GF3", direct_sum(one_dim_field(F3), one_dim_field(F3)), "not prime, semiprime")
    add("gd-x2-GF2", gd_truncated(F2, 2), "F[x]/(x^2), d/dx, lam=0")
    add("gd-x2-GF3", gd_algebra(truncated_polynomials(F3, 2), x_ddx(F3, 2), 0), "F[x]/(x^2), x d/dx")
    add("tp-GF2-l0", truncated_poly_algebra(2, 0), "GF(2)[x]/(x^2), d/dx, lam=0")
    add("tp-GF2-l1", truncated_poly_algebra(2, 1), "GF(2)[x]/(x^2), d/dx, lam=1")
    for lam in range(3):
        add(f"tp-GF3-l{lam}", truncated_poly_algebra(3, lam), f"GF(3)[x]/(x^3), d/dx, lam={lam}")
    add("gd-x4-GF2", gd_truncated(F2, 4), "GF(2)[x]/(x^4), d/dx, lam=0")
    add("gd-x4-GF2-l1", gd_truncated(F2, 4, 1), "GF(2)[x]/(x^4), d/dx, lam=1")
    add("field+tp-GF2-l1", direct_sum(one_dim_field(F2), truncated_poly_algebra(2, 1)),
        "idempotent commutative ideal beside a simple summand")
    add("field+gd-x2-GF2", direct_sum(one_dim_field(F2), gd_truncated(F2, 2)), "sum with a nilpotent part")
    add("tp-GF2-l1+zero", direct_sum(truncated_poly_algebra(2, 1), Algebra.zero(F2, 1)),
        "nonzero Baer radical beside a simple summand")
    add("tp-GF3-l0+zero", direct_sum(truncated_poly_algebra(3, 0), Algebra.zero(F3, 1)),
        "nonzero Baer radical beside a simple summand")
    add("euler-nil-GF3", gd_algebra(nilpotent_polynomials(F3, 3), _euler_nil(F3, 3), 1),
        "nilpotent base with Euler derivation")
    add("tp-GF5-l0", truncated_poly_algebra(5, 0), "GF(5)[x]/(x^5): scan-only size")
    add("gd-x2-Q", gd_truncated_q(), "Q[x]/(x^2) with x d/dx")
    add("gd-x3-Q-l1", gd_algebra(truncated_polynomials(Q, 3), x_ddx(Q, 3), 1), "Q[x]/(x^3), x d/dx, lam=1")
    add("field+field-Q", direct_sum(one_dim_field(Q), one_dim_field(Q)), "rational non-prime")
    return out


def _euler_nil(field: Field, n: int) -> Matrix:
    """x d/dx restricted to the span of x, ..., x^n."""
    rows = [[field.zero] * n for _ in range(n)]
    for j in range(n):
        rows[j][j] = field(j + 1)
    return Matrix(field, n, tuple(tuple(r) for r in rows))


def gd_truncated_q() -> Algebra:
    return gd_algebra(truncated_polynomials(Q, 2), x_ddx(Q, 2), 0)
