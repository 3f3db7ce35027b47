"""Finite-dimensional algebras given by structure constants."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from enum import Enum
from fractions import Fraction
from functools import cached_property, reduce
from math import lcm
from typing import Sequence

import numpy as np

from .linalg import Field, FieldMismatchError, downcast, int_tensordot, unit_vector, zero_vector


@dataclass(frozen=True)
class Algebra:
    """An algebra with basis e_0..e_{n-1} and ``table[i][j]`` = coordinates of e_i e_j."""

    field: Field
    dim: int
    table: tuple
    basis_names: tuple[str, ...] | None = None

    @classmethod
    def from_table(cls, field: Field, table, basis_names=None) -> Algebra:
        n = len(table)
        rows = []
        for i, row in enumerate(table):
            if len(row) != n:
                raise ValueError(f"table row {i} has {len(row)} entries, expected {n}")
            out = []
            for j, v in enumerate(row):
                if len(v) != n:
                    raise ValueError(f"product e{i}*e{j} has {len(v)} coordinates, expected {n}")
                out.append(tuple(field(x) for x in v))
            rows.append(tuple(out))
        if basis_names is not None:
            basis_names = tuple(str(s) for s in basis_names)
            if len(basis_names) != n:
                raise ValueError("basis_names length does not match dimension")
        return cls(field, n, tuple(rows), basis_names)

    @classmethod
    def zero(cls, field: Field, n: int) -> Algebra:
        z = zero_vector(field, n)
        return cls(field, n, tuple(tuple(z for _ in range(n)) for _ in range(n)))

    @classmethod
    def from_tensor(cls, field: Field, t: np.ndarray, scale: int = 1) -> Algebra:
        """Build from an integer (n, n, n) tensor holding ``scale`` times the table."""
        n = t.shape[0]
        if field.p:
            conv = lambda x: int(x) % field.p  # noqa: E731
        else:
            conv = lambda x: Fraction(int(x), scale)  # noqa: E731
        table = tuple(
            tuple(tuple(conv(x) for x in t[i, j]) for j in range(n)) for i in range(n)
        )
        return cls(field, n, table)

    def basis_vector(self, i: int) -> tuple:
        return unit_vector(self.field, self.dim, i)

    def vector(self, xs: Sequence) -> tuple:
        if len(xs) != self.dim:
            raise FieldMismatchError(f"expected {self.dim} coordinates, got {len(xs)}")
        return tuple(self.field(x) for x in xs)

    @cached_property
    def scale(self) -> int:
        """Common denominator of the structure constants (1 over GF(p))."""
        if self.field.p:
            return 1
        return reduce(lcm, (x.denominator for row in self.table for v in row for x in v), 1)

    @cached_property
    def tensor(self) -> np.ndarray:
        """Integer (n, n, n) array equal to ``scale`` times the structure constants."""
        n, s = self.dim, self.scale
        if self.field.p:
            return np.array(self.table, dtype=np.int64).reshape(n, n, n)
        vals = [int(x * s) for row in self.table for v in row for x in v]
        return downcast(np.array(vals, dtype=object).reshape(n, n, n))

    @cached_property
    def associator_tensor(self) -> np.ndarray:
        """``A[a, b, c] = (e_a e_b) e_c - e_a (e_b e_c)``, times ``scale**2``."""
        t, p = self.tensor, self.field.p
        left = int_tensordot(t, t, ([2], [0]), p)
        right = int_tensordot(t, t, ([2], [1]), p).transpose(2, 0, 1, 3)
        return _diff(left, right, p)

    @cached_property
    def left_triple_tensor(self) -> np.ndarray:
        """``(e_a e_b) e_c``, times ``scale**2``."""
        t = self.tensor
        return int_tensordot(t, t, ([2], [0]), self.field.p)

    def is_zero_product(self) -> bool:
        return not any(any(v) for row in self.table for v in row)

    def __str__(self):
        return f"Algebra({self.field}, dim={self.dim})"


def _diff(x: np.ndarray, y: np.ndarray, p: int | None) -> np.ndarray:
    if x.dtype != y.dtype:
        x, y = x.astype(object), y.astype(object)
    d = x - y
    return (d % p).astype(np.int64) if p else downcast(d)


def _check_vec(a: Algebra, u: Sequence) -> None:
    if len(u) != a.dim:
        raise FieldMismatchError(f"expected a vector of length {a.dim}, got {len(u)}")


def mul(a: Algebra, u: Sequence, v: Sequence) -> tuple:
    """Bilinear extension of the multiplication table."""
    _check_vec(a, u)
    _check_vec(a, v)
    n = a.dim
    out = [0] * n
    for i, x in enumerate(u):
        if not x:
            continue
        row = a.table[i]
        for j, y in enumerate(v):
            if not y:
                continue
            c = x * y
            for k, z in enumerate(row[j]):
                if z:
                    out[k] += c * z
    f = a.field
    return tuple(f(x) for x in out)


def associator(a: Algebra, x: Sequence, y: Sequence, z: Sequence) -> tuple:
    f = a.field
    l, r = mul(a, mul(a, x, y), z), mul(a, x, mul(a, y, z))
    return tuple(f.sub(p, q) for p, q in zip(l, r))


def commutator(a: Algebra, x: Sequence, y: Sequence) -> tuple:
    f = a.field
    return tuple(f.sub(p, q) for p, q in zip(mul(a, x, y), mul(a, y, x)))


def _sub(a: Algebra, u, v) -> tuple:
    return tuple(a.field.sub(p, q) for p, q in zip(u, v))


# --------------------------------------------------------------------------
# identity checking


class Identity(str, Enum):
    RIGHT_SYM = "RightSym1"        # (a,b,c) = (b,a,c)
    RIGHT_COMM = "RightComm2"      # (ab)c = (ac)b
    DERIVED3 = "Derived3"          # (ad,b,c) = (a,bd,c) = (a,b,c)d
    LEMMA1_EQ6 = "Lemma1Eq6"       # n(x,y,z) = (nx,y,z) = ... = (x,y,z)n = 0
    ASSOCIATIVITY = "Associativity"
    COMMUTATIVITY = "Commutativity"


ARITY = {
    Identity.RIGHT_SYM: 3,
    Identity.RIGHT_COMM: 3,
    Identity.DERIVED3: 4,
    Identity.LEMMA1_EQ6: 4,
    Identity.ASSOCIATIVITY: 3,
    Identity.COMMUTATIVITY: 2,
}


@dataclass(frozen=True)
class IdentityReport:
    identity: Identity
    holds: bool
    witness: tuple[int, ...] | None = None
    defect: tuple | None = None
    # Lemma1Eq6 witnesses index into this basis instead of the algebra's.
    nucleus_basis: tuple | None = dc_field(default=None, compare=False)


def _eq6_terms(a: Algebra, n, x, y, z) -> list[tuple]:
    m = lambda u, v: mul(a, u, v)  # noqa: E731
    return [
        m(n, associator(a, x, y, z)),
        associator(a, m(n, x), y, z),
        associator(a, m(x, n), y, z),
        associator(a, x, m(y, n), z),
        associator(a, x, m(n, y), z),
        associator(a, x, y, m(n, z)),
        associator(a, x, y, m(z, n)),
        m(associator(a, x, y, z), n),
    ]


def identity_defect(a: Algebra, which: Identity, vectors: Sequence[Sequence]) -> tuple:
    """Exact defect of an identity at the given vectors (zero iff it holds there).

    When an identity compares several expressions, the first nonzero
    difference is returned.
    """
    which = Identity(which)
    if len(vectors) != ARITY[which]:
        raise ValueError(f"{which.value} takes {ARITY[which]} arguments")
    for v in vectors:
        _check_vec(a, v)
    zero = zero_vector(a.field, a.dim)
    if which is Identity.RIGHT_SYM:
        x, y, z = vectors
        parts = [_sub(a, associator(a, x, y, z), associator(a, y, x, z))]
    elif which is Identity.RIGHT_COMM:
        x, y, z = vectors
        parts = [_sub(a, mul(a, mul(a, x, y), z), mul(a, mul(a, x, z), y))]
    elif which is Identity.DERIVED3:
        x, y, z, d = vectors
        first = associator(a, mul(a, x, d), y, z)
        parts = [
            _sub(a, first, associator(a, x, mul(a, y, d), z)),
            _sub(a, first, mul(a, associator(a, x, y, z), d)),
        ]
    elif which is Identity.LEMMA1_EQ6:
        parts = _eq6_terms(a, *vectors)
    elif which is Identity.ASSOCIATIVITY:
        parts = [associator(a, *vectors)]
    else:
        parts = [commutator(a, *vectors)]
    return next((p for p in parts if any(p)), zero)


def _first_failure(masks: list[np.ndarray]) -> tuple[int, ...] | None:
    mask = reduce(np.logical_or, masks)
    hits = np.argwhere(mask)
    if hits.size == 0:
        return None
    return tuple(int(i) for i in hits[0])


def _nonzero(x: np.ndarray) -> np.ndarray:
    return x.astype(bool).any(axis=-1) if x.dtype != object else (x != 0).any(axis=-1)


def _eq6_masks(a: Algebra, nucleus_basis: Sequence[Sequence]) -> list[np.ndarray]:
    from .linalg import as_int_array

    p = a.field.p
    t, assoc = a.tensor, a.associator_tensor
    nb = as_int_array(a.field, nucleus_basis, a.dim)
    nt = int_tensordot(nb, t, ([1], [0]), p)   # [r, k, :] = n e_k
    tn = int_tensordot(nb, t, ([1], [1]), p)   # [r, k, :] = e_k n
    terms = [
        int_tensordot(assoc, nt, ([3], [1]), p).transpose(3, 0, 1, 2, 4),
        int_tensordot(nt, assoc, ([2], [0]), p),
        int_tensordot(tn, assoc, ([2], [0]), p),
        int_tensordot(tn, assoc, ([2], [1]), p).transpose(0, 2, 1, 3, 4),
        int_tensordot(nt, assoc, ([2], [1]), p).transpose(0, 2, 1, 3, 4),
        int_tensordot(nt, assoc, ([2], [2]), p).transpose(0, 2, 3, 1, 4),
        int_tensordot(tn, assoc, ([2], [2]), p).transpose(0, 2, 3, 1, 4),
        int_tensordot(assoc, tn, ([3], [1]), p).transpose(3, 0, 1, 2, 4),
    ]
    return [_nonzero(x) for x in terms]


def _masks(a: Algebra, which: Identity) -> list[np.ndarray]:
    p = a.field.p
    t = a.tensor
    if which is Identity.COMMUTATIVITY:
        return [_nonzero(_diff(t, t.transpose(1, 0, 2), p))]
    if which is Identity.ASSOCIATIVITY:
        return [_nonzero(a.associator_tensor)]
    if which is Identity.RIGHT_SYM:
        assoc = a.associator_tensor
        return [_nonzero(_diff(assoc, assoc.transpose(1, 0, 2, 3), p))]
    if which is Identity.RIGHT_COMM:
        left = a.left_triple_tensor
        return [_nonzero(_diff(left, left.transpose(0, 2, 1, 3), p))]
    if which is Identity.DERIVED3:
        assoc = a.associator_tensor
        x1 = int_tensordot(t, assoc, ([2], [0]), p).transpose(0, 2, 3, 1, 4)
        x2 = int_tensordot(t, assoc, ([2], [1]), p).transpose(2, 0, 3, 1, 4)
        x3 = int_tensordot(assoc, t, ([3], [0]), p)
        return [_nonzero(_diff(x1, x2, p)), _nonzero(_diff(x1, x3, p))]
    raise ValueError(which)


def check_identity(a: Algebra, which: Identity | str, nucleus_basis=None) -> IdentityReport:
    """Check one identity on all basis tuples; multilinearity makes this exact.

    The witness is the lexicographically first failing tuple.  For
    ``Lemma1Eq6`` the first index refers to a row of the nucleus basis, which
    is computed when not supplied.
    """
    which = Identity(which)
    if which is Identity.LEMMA1_EQ6:
        if nucleus_basis is None:
            from .structure import nucleus

            nucleus_basis = nucleus(a).basis
        nucleus_basis = tuple(tuple(v) for v in nucleus_basis)
        if a.dim == 0 or not nucleus_basis:
            return IdentityReport(which, True, nucleus_basis=nucleus_basis)
        w = _first_failure(_eq6_masks(a, nucleus_basis))
        if w is None:
            return IdentityReport(which, True, nucleus_basis=nucleus_basis)
        vecs = [nucleus_basis[w[0]]] + [a.basis_vector(i) for i in w[1:]]
        return IdentityReport(which, False, w, identity_defect(a, which, vecs), nucleus_basis)
    if a.dim == 0:
        return IdentityReport(which, True)
    w = _first_failure(_masks(a, which))
    if w is None:
        return IdentityReport(which, True)
    defect = identity_defect(a, which, [a.basis_vector(i) for i in w])
    return IdentityReport(which, False, w, defect)


@dataclass(frozen=True)
class NovikovCheck:
    is_novikov: bool
    reports: tuple[IdentityReport, ...]

    def __bool__(self):
        return self.is_novikov


def check_novikov(a: Algebra) -> NovikovCheck:
    """Identities (a,b,c)=(b,a,c) and (ab)c=(ac)b, plus the derived one as a cross-check."""
    reports = tuple(
        check_identity(a, w) for w in (Identity.RIGHT_SYM, Identity.RIGHT_COMM, Identity.DERIVED3)
    )
    return NovikovCheck(reports[0].holds and reports[1].holds, reports)


def is_novikov(a: Algebra) -> bool:
    return check_novikov(a).is_novikov
