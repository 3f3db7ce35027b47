"""Exact linear algebra over Q and GF(p).

Scalars are ``fractions.Fraction`` over the rationals and canonical ``int``
residues over GF(p).  Subspaces are stored by their reduced row echelon
basis, so two subspaces are equal exactly when their bases are.

Bulk work (stacked linear systems with thousands of equations) goes through
integer numpy arrays: residues mod p, or rational rows scaled to integers.
Scaling a row never changes a row space or a kernel, which is all the bulk
paths are used for.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import lcm
from typing import Iterable, Sequence

import numpy as np

_INT64_SAFE = 2**62


class FieldMismatchError(ValueError):
    """Operands live over different fields or ambient dimensions."""


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


@dataclass(frozen=True)
class Field:
    """The rationals (``p is None``) or the prime field GF(p), 2 <= p < 2**16."""

    p: int | None = None

    def __post_init__(self):
        if self.p is None:
            return
        if isinstance(self.p, bool) or not isinstance(self.p, int):
            raise TypeError("p must be an integer")
        if not 2 <= self.p < 2**16:
            raise ValueError(f"prime modulus out of range: {self.p}")
        if not _is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    @property
    def is_finite(self) -> bool:
        return self.p is not None

    @property
    def zero(self):
        return 0 if self.p else Fraction(0)

    @property
    def one(self):
        return 1 if self.p else Fraction(1)

    def __call__(self, x):
        """Coerce an int, Fraction or string into a canonical scalar."""
        if isinstance(x, str):
            return self.parse(x)
        if self.p is None:
            return Fraction(x)
        if isinstance(x, Fraction):
            return self.div(x.numerator % self.p, x.denominator % self.p)
        return int(x) % self.p

    def parse(self, s: str):
        s = s.strip()
        try:
            if "/" in s:
                num, den = s.split("/")
                num, den = int(num), int(den)
            else:
                num, den = int(s), 1
        except ValueError:
            raise ValueError(f"malformed scalar {s!r}") from None
        if den == 0:
            raise ValueError(f"zero denominator in {s!r}")
        if self.p is None:
            return Fraction(num, den)
        if den % self.p == 0:
            raise ValueError(f"denominator of {s!r} vanishes mod {self.p}")
        return self.div(num % self.p, den % self.p)

    def format(self, x) -> str:
        if self.p is None:
            x = Fraction(x)
            return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
        return str(int(x) % self.p)

    def add(self, x, y):
        return (x + y) % self.p if self.p else x + y

    def sub(self, x, y):
        return (x - y) % self.p if self.p else x - y

    def mul(self, x, y):
        return (x * y) % self.p if self.p else x * y

    def neg(self, x):
        return (-x) % self.p if self.p else -x

    def inv(self, x):
        if not x:
            raise ZeroDivisionError("inverse of zero")
        return pow(int(x), -1, self.p) if self.p else 1 / Fraction(x)

    def div(self, x, y):
        return self.mul(x, self.inv(y))

    def elements(self):
        """All field elements in increasing residue order (finite fields only)."""
        if self.p is None:
            raise ValueError("the rationals are not enumerable")
        return range(self.p)

    def __str__(self):
        return "Q" if self.p is None else f"GF({self.p})"


Q = Field()


def GF(p: int) -> Field:
    return Field(p)


# --------------------------------------------------------------------------
# vectors (tuples of canonical scalars)


def zero_vector(field: Field, n: int) -> tuple:
    return (field.zero,) * n


def unit_vector(field: Field, n: int, i: int) -> tuple:
    v = [field.zero] * n
    v[i] = field.one
    return tuple(v)


def vec(field: Field, xs: Iterable) -> tuple:
    return tuple(field(x) for x in xs)


def vadd(field: Field, u: Sequence, v: Sequence) -> tuple:
    return tuple(field.add(a, b) for a, b in zip(u, v))


def vsub(field: Field, u: Sequence, v: Sequence) -> tuple:
    return tuple(field.sub(a, b) for a, b in zip(u, v))


def vscale(field: Field, c, u: Sequence) -> tuple:
    return tuple(field.mul(c, a) for a in u)


def is_zero_vector(u: Sequence) -> bool:
    return not any(u)


# --------------------------------------------------------------------------
# matrices


@dataclass(frozen=True)
class Matrix:
    """Row-major matrix of canonical scalars over one field."""

    field: Field
    ncols: int
    rows: tuple

    @classmethod
    def from_rows(cls, field: Field, rows: Iterable[Sequence], ncols: int | None = None) -> Matrix:
        rows = tuple(tuple(field(x) for x in r) for r in rows)
        if ncols is None:
            if not rows:
                raise ValueError("ncols is required for an empty matrix")
            ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged matrix rows")
        return cls(field, ncols, rows)

    @classmethod
    def identity(cls, field: Field, n: int) -> Matrix:
        return cls(field, n, tuple(unit_vector(field, n, i) for i in range(n)))

    @classmethod
    def zeros(cls, field: Field, nrows: int, ncols: int) -> Matrix:
        return cls(field, ncols, (zero_vector(field, ncols),) * nrows)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def apply(self, v: Sequence) -> tuple:
        """Matrix times column vector."""
        if len(v) != self.ncols:
            raise FieldMismatchError("vector length does not match matrix")
        f = self.field
        out = []
        for r in self.rows:
            s = f.zero
            for a, b in zip(r, v):
                if a and b:
                    s = s + a * b
            out.append(f(s) if f.p else s)
        return tuple(out)

    def transpose(self) -> Matrix:
        cols = tuple(zip(*self.rows)) if self.rows else ()
        if not self.rows:
            cols = ((),) * self.ncols
        return Matrix(self.field, self.nrows, tuple(tuple(c) for c in cols))

    def __matmul__(self, other: Matrix) -> Matrix:
        if self.ncols != other.nrows or self.field != other.field:
            raise FieldMismatchError("incompatible matrix product")
        t = other.transpose()
        return Matrix(self.field, other.ncols, tuple(t.apply(r) for r in self.rows))


# --------------------------------------------------------------------------
# integer-array kernels


def as_int_array(field: Field, rows: Iterable[Sequence], ncols: int) -> np.ndarray:
    """Encode scalar rows as an integer array with the same row space.

    Rational rows are multiplied by the lcm of their denominators.
    """
    rows = list(rows)
    if field.p:
        return np.array(rows, dtype=np.int64).reshape(len(rows), ncols)
    out = []
    for r in rows:
        d = reduce(lcm, (Fraction(x).denominator for x in r), 1)
        out.append([int(Fraction(x) * d) for x in r])
    return downcast(np.array(out, dtype=object).reshape(len(out), ncols))


def downcast(a: np.ndarray) -> np.ndarray:
    """Return an int64 copy of an integer array when every entry fits."""
    if a.dtype == np.int64:
        return a
    if a.size == 0:
        return a.astype(np.int64)
    m = max(abs(int(a.max())), abs(int(a.min())))
    if m < 2**62:
        return a.astype(np.int64)
    return a


def _absmax(a: np.ndarray) -> int:
    if a.size == 0:
        return 0
    return max(abs(int(a.max())), abs(int(a.min())))


def int_tensordot(a: np.ndarray, b: np.ndarray, axes, p: int | None = None) -> np.ndarray:
    """Exact tensordot of integer arrays; int64 when no overflow is possible."""
    ax_a, ax_b = axes
    ax_a = [ax_a] if isinstance(ax_a, int) else list(ax_a)
    terms = 1
    for ax in ax_a:
        terms *= a.shape[ax]
    bound = terms * _absmax(a) * _absmax(b)
    if a.dtype == np.int64 and b.dtype == np.int64 and bound < _INT64_SAFE:
        out = np.tensordot(a, b, axes=axes)
    else:
        out = np.tensordot(a.astype(object), b.astype(object), axes=axes)
        if out.dtype != object:
            out = out.astype(object)
    if p:
        return (out % p).astype(np.int64)
    return downcast(out)


def _rref_mod_p(a: np.ndarray, p: int) -> tuple[list[tuple], list[int]]:
    a = (np.asarray(a, dtype=np.int64) % p).copy()
    nrows, ncols = a.shape
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            a[[r, k]] = a[[k, r]]
        a[r] = (a[r] * pow(int(a[r, c]), -1, p)) % p
        col = a[:, c].copy()
        col[r] = 0
        hit = np.nonzero(col)[0]
        if hit.size:
            a[hit] = (a[hit] - np.outer(col[hit], a[r])) % p
        pivots.append(c)
        r += 1
    return [tuple(int(x) for x in row) for row in a[:r]], pivots


def _rref_fractions(rows: list[list[Fraction]], ncols: int) -> tuple[list[tuple], list[int]]:
    rows = [list(r) for r in rows if any(r)]
    pivots = []
    r = 0
    for c in range(ncols):
        k = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if k is None:
            continue
        rows[r], rows[k] = rows[k], rows[r]
        pr = rows[r]
        inv = 1 / pr[c]
        pr = [x * inv for x in pr]
        rows[r] = pr
        nzc = [j for j in range(c, ncols) if pr[j]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                row = rows[i]
                for j in nzc:
                    row[j] -= f * pr[j]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return [tuple(x) for x in rows[:r]], pivots


def _rref_rational(a: np.ndarray) -> tuple[list[tuple], list[int]]:
    nrows, ncols = a.shape
    if nrows > ncols:
        # Over Q the Gram matrix a^T a has the same row space as a.
        a = int_tensordot(a, a, axes=([0], [0]))
    rows = [[Fraction(int(x)) for x in row] for row in a]
    return _rref_fractions(rows, ncols)


def rref_array(field: Field, a: np.ndarray) -> tuple[list[tuple], list[int]]:
    """RREF rows (zero rows dropped) and pivot columns of an integer array."""
    a = np.asarray(a)
    if a.ndim != 2:
        raise ValueError("expected a 2-d array")
    if a.shape[0] == 0:
        return [], []
    if field.p:
        return _rref_mod_p(a, field.p)
    return _rref_rational(a)


# --------------------------------------------------------------------------
# subspaces


@dataclass(frozen=True)
class Subspace:
    """Linear subspace of F^n held by its canonical RREF basis."""

    field: Field
    ambient_dim: int
    basis: tuple = ()

    @classmethod
    def span(cls, field: Field, n: int, vectors: Iterable[Sequence]) -> Subspace:
        vectors = [tuple(field(x) for x in v) for v in vectors]
        if any(len(v) != n for v in vectors):
            raise FieldMismatchError("vector length does not match ambient dimension")
        if not vectors:
            return cls(field, n, ())
        return cls.from_array(field, as_int_array(field, vectors, n))

    @classmethod
    def from_array(cls, field: Field, a: np.ndarray) -> Subspace:
        """Row space of an integer array (see :func:`as_int_array`)."""
        n = a.shape[1]
        rows, _ = rref_array(field, a)
        if field.p is None:
            rows = [tuple(Fraction(x) for x in r) for r in rows]
        return cls(field, n, tuple(rows))

    @classmethod
    def zero(cls, field: Field, n: int) -> Subspace:
        return cls(field, n, ())

    @classmethod
    def full(cls, field: Field, n: int) -> Subspace:
        return cls(field, n, tuple(unit_vector(field, n, i) for i in range(n)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(next(j for j, x in enumerate(r) if x) for r in self.basis)

    def is_zero(self) -> bool:
        return not self.basis

    def is_full(self) -> bool:
        return self.dim == self.ambient_dim

    def reduce(self, v: Sequence) -> tuple:
        """Remainder of ``v`` after clearing this subspace's pivot coordinates."""
        f = self.field
        v = list(v)
        for row, c in zip(self.basis, self.pivots):
            if v[c]:
                k = v[c]
                for j, x in enumerate(row):
                    if x:
                        v[j] = f.sub(v[j], f.mul(k, x))
        return tuple(v)

    def coordinates(self, v: Sequence) -> tuple:
        """Coordinates of ``v`` in the canonical basis; raises if ``v`` is outside."""
        if not is_zero_vector(self.reduce(v)):
            raise ValueError("vector is not in the subspace")
        return tuple(v[c] for c in self.pivots)

    def as_matrix(self) -> Matrix:
        return Matrix(self.field, self.ambient_dim, self.basis)

    def as_int_array(self) -> np.ndarray:
        return as_int_array(self.field, self.basis, self.ambient_dim)

    def __contains__(self, v) -> bool:
        return contains(self, v)

    def __le__(self, other: Subspace) -> bool:
        return subspace_leq(self, other)

    def __add__(self, other: Subspace) -> Subspace:
        return subspace_sum(self, other)

    def __and__(self, other: Subspace) -> Subspace:
        return subspace_intersect(self, other)


def _check_compatible(a: Subspace, b: Subspace) -> None:
    if a.field != b.field or a.ambient_dim != b.ambient_dim:
        raise FieldMismatchError(
            f"subspaces of {a.field}^{a.ambient_dim} and {b.field}^{b.ambient_dim}"
        )


def rref(m: Matrix) -> Matrix:
    """Reduced row echelon form with zero rows removed."""
    if m.nrows == 0:
        return m
    s = Subspace.from_array(m.field, as_int_array(m.field, m.rows, m.ncols))
    return Matrix(m.field, m.ncols, s.basis)


def rank(m: Matrix) -> int:
    return rref(m).nrows


def kernel_of_array(field: Field, a: np.ndarray, ncols: int | None = None) -> Subspace:
    """Right kernel ``{x : a x = 0}`` of an integer array."""
    a = np.asarray(a)
    n = a.shape[1] if ncols is None else ncols
    if a.size == 0:
        return Subspace.full(field, n)
    rows, pivots = rref_array(field, a)
    free = [c for c in range(n) if c not in set(pivots)]
    basis = []
    for fcol in free:
        v = [field.zero] * n
        v[fcol] = field.one
        for row, pc in zip(rows, pivots):
            if row[fcol]:
                v[pc] = field.neg(field(row[fcol]))
        basis.append(tuple(v))
    # The free-variable basis is already reduced; sort it into echelon order.
    return Subspace.span(field, n, basis) if basis else Subspace.zero(field, n)


def kernel(m: Matrix) -> Subspace:
    """The subspace ``{x : m x = 0}``."""
    if m.nrows == 0:
        return Subspace.full(m.field, m.ncols)
    return kernel_of_array(m.field, as_int_array(m.field, m.rows, m.ncols), m.ncols)


def orthogonal(s: Subspace) -> Subspace:
    """``{x : b . x = 0 for every basis row b}``; involutive over any field."""
    if s.is_zero():
        return Subspace.full(s.field, s.ambient_dim)
    return kernel_of_array(s.field, s.as_int_array(), s.ambient_dim)


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    _check_compatible(a, b)
    if a.is_zero():
        return b
    if b.is_zero():
        return a
    return Subspace.span(a.field, a.ambient_dim, a.basis + b.basis)


def subspace_intersect(a: Subspace, b: Subspace) -> Subspace:
    _check_compatible(a, b)
    if a.is_zero() or b.is_zero():
        return Subspace.zero(a.field, a.ambient_dim)
    if a.is_full():
        return b
    if b.is_full():
        return a
    return orthogonal(subspace_sum(orthogonal(a), orthogonal(b)))


def contains(a: Subspace, v: Sequence) -> bool:
    if len(v) != a.ambient_dim:
        raise FieldMismatchError("vector length does not match ambient dimension")
    return is_zero_vector(a.reduce(tuple(a.field(x) for x in v)))


def subspace_leq(a: Subspace, b: Subspace) -> bool:
    _check_compatible(a, b)
    return all(contains(b, v) for v in a.basis)


def span_of_array(field: Field, a: np.ndarray) -> Subspace:
    """Row space of a 2-d integer array, or the zero subspace if it is empty."""
    a = np.asarray(a)
    if a.shape[0] == 0 or not a.any():
        return Subspace.zero(field, a.shape[1])
    return Subspace.from_array(field, a)

