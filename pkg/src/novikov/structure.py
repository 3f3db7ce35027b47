"""Subspace-valued invariants of an algebra and ideal arithmetic.

Every map here is a kernel or a span of an explicitly built integer system,
so the results are exact canonical subspaces.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Sequence

import numpy as np

from .algebra import Algebra, _diff, associator, mul
from .linalg import (
    FieldMismatchError,
    Matrix,
    Subspace,
    int_tensordot,
    kernel_of_array,
    orthogonal,
    span_of_array,
    subspace_intersect,
    subspace_sum,
    unit_vector,
)


class Sidedness(str, Enum):
    TWO_SIDED = "TwoSided"
    LEFT = "LeftIdeal"
    RIGHT = "RightIdeal"


class NotAnIdealError(ValueError):
    pass


@dataclass(frozen=True)
class IdealHandle:
    """A subspace certified closed under multiplication by the algebra."""

    space: Subspace
    sidedness: Sidedness = Sidedness.TWO_SIDED

    @property
    def parent_dim(self) -> int:
        return self.space.ambient_dim

    @property
    def dim(self) -> int:
        return self.space.dim


def _space(x) -> Subspace:
    return x.space if isinstance(x, IdealHandle) else x


def _check_ambient(a: Algebra, s: Subspace) -> None:
    if s.field != a.field or s.ambient_dim != a.dim:
        raise FieldMismatchError(f"subspace of {s.field}^{s.ambient_dim} used with {a}")


def _stack(*arrays: np.ndarray) -> np.ndarray:
    arrays = [x for x in arrays if x.shape[0]]
    if not arrays:
        return np.zeros((0, 0), dtype=np.int64)
    if any(x.dtype == object for x in arrays):
        arrays = [x.astype(object) for x in arrays]
    return np.vstack(arrays)


def _basis_array(s: Subspace) -> np.ndarray:
    return s.as_int_array()


def left_products(a: Algebra, s: Subspace) -> np.ndarray:
    """Rows ``e_i b`` for every algebra basis vector e_i and basis row b of s."""
    n = a.dim
    b = _basis_array(s)
    if b.shape[0] == 0 or n == 0:
        return np.zeros((0, n), dtype=np.int64)
    return int_tensordot(a.tensor, b, ([1], [1]), a.field.p).transpose(0, 2, 1).reshape(-1, n)


def right_products(a: Algebra, s: Subspace) -> np.ndarray:
    """Rows ``b e_i`` for every basis row b of s."""
    n = a.dim
    b = _basis_array(s)
    if b.shape[0] == 0 or n == 0:
        return np.zeros((0, n), dtype=np.int64)
    return int_tensordot(b, a.tensor, ([1], [0]), a.field.p).reshape(-1, n)


def _grow(a: Algebra, s: Subspace, rows: np.ndarray) -> Subspace:
    if rows.shape[0] == 0 or not rows.any():
        return s
    return span_of_array(a.field, _stack(_basis_array(s), rows))


def is_ideal(a: Algebra, s, sidedness: Sidedness = Sidedness.TWO_SIDED) -> bool:
    s = _space(s)
    _check_ambient(a, s)
    sidedness = Sidedness(sidedness)
    if sidedness in (Sidedness.TWO_SIDED, Sidedness.LEFT):
        if _grow(a, s, left_products(a, s)).dim != s.dim:
            return False
    if sidedness in (Sidedness.TWO_SIDED, Sidedness.RIGHT):
        if _grow(a, s, right_products(a, s)).dim != s.dim:
            return False
    return True


def as_ideal(a: Algebra, s, sidedness: Sidedness = Sidedness.TWO_SIDED) -> IdealHandle:
    """Certify ``s`` as an ideal of the given sidedness or raise NotAnIdealError."""
    s = _space(s)
    if not is_ideal(a, s, sidedness):
        raise NotAnIdealError(f"subspace of dim {s.dim} is not a {Sidedness(sidedness).value} ideal")
    return IdealHandle(s, Sidedness(sidedness))


def is_subalgebra(a: Algebra, s) -> bool:
    s = _space(s)
    return subspace_product(a, s, s) <= s


# --------------------------------------------------------------------------
# nucleus and centers


def nucleus_system(a: Algebra) -> np.ndarray:
    """Stacked equations (n,e_i,e_j) = (e_i,n,e_j) = (e_i,e_j,n) = 0 in the unknown n."""
    n = a.dim
    assoc = a.associator_tensor
    return _stack(
        assoc.transpose(1, 2, 3, 0).reshape(-1, n),
        assoc.transpose(0, 2, 3, 1).reshape(-1, n),
        assoc.transpose(0, 1, 3, 2).reshape(-1, n),
    )


def nucleus(a: Algebra) -> Subspace:
    if a.dim == 0:
        return Subspace.zero(a.field, 0)
    return kernel_of_array(a.field, nucleus_system(a), a.dim)


def commutative_center(a: Algebra) -> Subspace:
    """Elements k with [k, a] = 0 for all a."""
    n = a.dim
    if n == 0:
        return Subspace.zero(a.field, 0)
    t = a.tensor
    c = _diff(t, t.transpose(1, 0, 2), a.field.p)
    return kernel_of_array(a.field, c.transpose(1, 2, 0).reshape(-1, n), n)


def center(a: Algebra) -> Subspace:
    return subspace_intersect(nucleus(a), commutative_center(a))


def associator_span(a: Algebra) -> Subspace:
    """Span of all basis-triple associators."""
    if a.dim == 0:
        return Subspace.zero(a.field, 0)
    return span_of_array(a.field, a.associator_tensor.reshape(-1, a.dim))


def associator_ideal(a: Algebra) -> IdealHandle:
    return ideal_closure(a, associator_span(a), Sidedness.TWO_SIDED)


# --------------------------------------------------------------------------
# annihilators


def ann_left(a: Algebra, m) -> Subspace:
    """``{x : x m = 0}``."""
    m = _space(m)
    _check_ambient(a, m)
    n = a.dim
    if m.is_zero() or n == 0:
        return Subspace.full(a.field, n)
    b = _basis_array(m)
    system = int_tensordot(a.tensor, b, ([1], [1]), a.field.p)  # [k, out, r] = e_k b_r
    return kernel_of_array(a.field, system.transpose(2, 1, 0).reshape(-1, n), n)


def ann_right(a: Algebra, m) -> Subspace:
    """``{x : m x = 0}``."""
    m = _space(m)
    _check_ambient(a, m)
    n = a.dim
    if m.is_zero() or n == 0:
        return Subspace.full(a.field, n)
    b = _basis_array(m)
    system = int_tensordot(b, a.tensor, ([1], [0]), a.field.p)  # [r, k, out] = b_r e_k
    return kernel_of_array(a.field, system.transpose(0, 2, 1).reshape(-1, n), n)


# --------------------------------------------------------------------------
# closures and products


def ideal_closure(a: Algebra, s, sidedness: Sidedness = Sidedness.TWO_SIDED) -> IdealHandle:
    """Least ideal of the given sidedness containing ``s``.

    Each round adds left products, then right products; the loop stops once a
    round adds nothing, which takes at most ``dim`` rounds.
    """
    cur = _space(s)
    _check_ambient(a, cur)
    sidedness = Sidedness(sidedness)
    while True:
        new = cur
        if sidedness in (Sidedness.TWO_SIDED, Sidedness.LEFT):
            new = _grow(a, new, left_products(a, new))
        if sidedness in (Sidedness.TWO_SIDED, Sidedness.RIGHT):
            new = _grow(a, new, right_products(a, new))
        if new.dim == cur.dim:
            return IdealHandle(cur, sidedness)
        cur = new


def product_rows(a: Algebra, u: Subspace, v: Subspace) -> np.ndarray:
    """Rows ``u_r v_s`` over pairs of basis rows."""
    n = a.dim
    ub, vb = _basis_array(u), _basis_array(v)
    if ub.shape[0] == 0 or vb.shape[0] == 0 or n == 0:
        return np.zeros((0, n), dtype=np.int64)
    p = a.field.p
    x = int_tensordot(ub, a.tensor, ([1], [0]), p)  # [r, b, out]
    return int_tensordot(x, vb, ([1], [1]), p).transpose(0, 2, 1).reshape(-1, n)


def subspace_product(a: Algebra, u, v) -> Subspace:
    """Span of all products uv.  Not certified as an ideal."""
    u, v = _space(u), _space(v)
    _check_ambient(a, u)
    _check_ambient(a, v)
    return span_of_array(a.field, product_rows(a, u, v)) if a.dim else Subspace.zero(a.field, 0)


def square(a: Algebra, u) -> Subspace:
    return subspace_product(a, u, u)


def vector_span(a: Algebra, *vectors: Sequence) -> Subspace:
    return Subspace.span(a.field, a.dim, [a.vector(v) for v in vectors])


def full_space(a: Algebra) -> Subspace:
    return Subspace.full(a.field, a.dim)


def zero_space(a: Algebra) -> Subspace:
    return Subspace.zero(a.field, a.dim)


def associator_subspace(a: Algebra, x, y, z) -> Subspace:
    """Span of ``(u, v, w)`` over basis rows of three subspaces."""
    x, y, z = _space(x), _space(y), _space(z)
    vecs = [associator(a, u, v, w) for u in x.basis for v in y.basis for w in z.basis]
    return Subspace.span(a.field, a.dim, [v for v in vecs if any(v)])


# --------------------------------------------------------------------------
# quotients and subalgebras


@dataclass(frozen=True)
class Quotient:
    """A/I with coset representatives e_c for the non-pivot coordinates c of I."""

    algebra: Algebra
    projection: Matrix
    ideal: Subspace
    representatives: tuple[int, ...]

    def project(self, v: Sequence) -> tuple:
        r = self.ideal.reduce(v)
        return tuple(r[c] for c in self.representatives)

    def lift(self, w: Sequence) -> tuple:
        f = self.ideal.field
        v = [f.zero] * self.ideal.ambient_dim
        for c, x in zip(self.representatives, w):
            v[c] = x
        return tuple(v)

    def preimage(self, s: Subspace) -> Subspace:
        n = self.ideal.ambient_dim
        lifted = Subspace.span(self.ideal.field, n, [self.lift(w) for w in s.basis])
        return subspace_sum(self.ideal, lifted)

    def image(self, s: Subspace) -> Subspace:
        q = self.algebra
        return Subspace.span(q.field, q.dim, [self.project(v) for v in s.basis])


def quotient(a: Algebra, i) -> Quotient:
    s = _space(i)
    _check_ambient(a, s)
    if not is_ideal(a, s, Sidedness.TWO_SIDED):
        raise NotAnIdealError("quotient requires a two-sided ideal")
    pivots = set(s.pivots)
    reps = tuple(c for c in range(a.dim) if c not in pivots)
    f = a.field

    def proj(v):
        r = s.reduce(v)
        return tuple(r[c] for c in reps)

    cols = [proj(unit_vector(f, a.dim, j)) for j in range(a.dim)]
    rows = tuple(tuple(cols[j][t] for j in range(a.dim)) for t in range(len(reps)))
    projection = Matrix(f, a.dim, rows)
    table = tuple(tuple(proj(a.table[ci][cj]) for cj in reps) for ci in reps)
    names = None
    if a.basis_names:
        names = tuple(a.basis_names[c] + "+I" for c in reps)
    return Quotient(Algebra(f, len(reps), table, names), projection, s, reps)


@dataclass(frozen=True)
class Subalgebra:
    """A multiplicatively closed subspace as an algebra in its canonical basis."""

    algebra: Algebra
    inclusion: Matrix
    space: Subspace

    def embed(self, w: Sequence) -> tuple:
        return self.inclusion.apply(w)

    def embed_subspace(self, t: Subspace) -> Subspace:
        return Subspace.span(self.space.field, self.space.ambient_dim, [self.embed(w) for w in t.basis])

    def restrict(self, v: Sequence) -> tuple:
        return self.space.coordinates(v)

    def restrict_subspace(self, t: Subspace) -> Subspace:
        return Subspace.span(self.algebra.field, self.algebra.dim, [self.restrict(v) for v in t.basis])


def subalgebra_as_algebra(a: Algebra, i) -> Subalgebra:
    s = _space(i)
    _check_ambient(a, s)
    if not is_subalgebra(a, s):
        raise NotAnIdealError("subspace is not closed under multiplication")
    basis = s.basis
    table = tuple(
        tuple(s.coordinates(mul(a, u, v)) for v in basis) for u in basis
    )
    k = len(basis)
    f = a.field
    if k:
        inclusion = Matrix(f, k, tuple(tuple(b[r] for b in basis) for r in range(a.dim)))
    else:
        inclusion = Matrix(f, 0, tuple(() for _ in range(a.dim)))
    return Subalgebra(Algebra(f, k, table), inclusion, s)



def is_ideal_in(a: Algebra, s, within, sidedness: Sidedness = Sidedness.TWO_SIDED) -> bool:
    """Is ``s`` an ideal of the subalgebra ``within`` (both given in A-coordinates)?"""
    s, w = _space(s), _space(within)
    if not s <= w:
        return False
    sidedness = Sidedness(sidedness)
    if sidedness in (Sidedness.TWO_SIDED, Sidedness.LEFT) and not subspace_product(a, w, s) <= s:
        return False
    if sidedness in (Sidedness.TWO_SIDED, Sidedness.RIGHT) and not subspace_product(a, s, w) <= s:
        return False
    return True


def is_commutative_subspace(a: Algebra, s) -> bool:
    s = _space(s)
    return all(mul(a, u, v) == mul(a, v, u) for i, u in enumerate(s.basis) for v in s.basis[i + 1:])


def right_stabilizer(a: Algebra, l) -> Subspace:
    """``{x in l : x A in l}``."""
    l = _space(l)
    _check_ambient(a, l)
    n = a.dim
    if n == 0 or l.is_zero():
        return l
    perp = orthogonal(l)
    if perp.is_zero():
        return l
    w = perp.as_int_array()
    # <w, e_k e_j> for every perp row w and basis j, as a linear form in k
    forms = int_tensordot(a.tensor, w, ([2], [1]), a.field.p)  # [k, j, r]
    system = _stack(forms.transpose(1, 2, 0).reshape(-1, n), w)
    return kernel_of_array(a.field, system, n)
