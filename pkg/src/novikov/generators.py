"""Constructors for test corpora.

The main source of Novikov algebras is the Gelfand-Dorfman product on a
commutative associative algebra C with a derivation d::

    a o b = a * d(b) + lam * a * b

Randomness comes from ``random.Random(seed)`` (Mersenne Twister), so a
profile plus a seed fixes a corpus exactly.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from typing import Sequence

import numpy as np

from .algebra import Algebra, Identity, check_identity, check_novikov, mul
from .linalg import GF, Q, Field, Matrix, kernel_of_array, unit_vector, zero_vector


class GDInputError(ValueError):
    pass


# --------------------------------------------------------------------------
# commutative associative building blocks


def polynomial_quotient(field: Field, modulus: Sequence) -> Algebra:
    """F[x]/(f) for monic f = x^n + c_{n-1} x^{n-1} + ... + c_0, basis 1, x, ..., x^{n-1}.

    ``modulus`` lists c_0, ..., c_{n-1}.
    """
    n = len(modulus)
    c = [field(x) for x in modulus]
    # powers[k] = coordinates of x^k reduced mod f, for k < 2n - 1
    powers = [unit_vector(field, n, k) for k in range(n)]
    for _ in range(n, 2 * n - 1):
        prev = powers[-1]
        top = prev[-1]
        shifted = [field.zero] + list(prev[:-1])
        powers.append(tuple(field.sub(s, field.mul(top, ci)) for s, ci in zip(shifted, c)))
    table = tuple(tuple(powers[i + j] for j in range(n)) for i in range(n))
    return Algebra(field, n, table, tuple(_monomial_name(k) for k in range(n)))


def truncated_polynomials(field: Field, n: int) -> Algebra:
    """F[x]/(x^n)."""
    return polynomial_quotient(field, [0] * n)


def nilpotent_polynomials(field: Field, n: int) -> Algebra:
    """The ideal x F[x]/(x^{n+1}) with basis x, ..., x^n (no unit)."""
    z = zero_vector(field, n)
    table = tuple(
        tuple(unit_vector(field, n, i + j + 1) if i + j + 1 < n else z for j in range(n))
        for i in range(n)
    )
    return Algebra(field, n, table, tuple(_monomial_name(k + 1) for k in range(n)))


def one_dim_field(field: Field) -> Algebra:
    """The 1-dimensional algebra e*e = e."""
    return Algebra(field, 1, (((field.one,),),), ("e",))


def _monomial_name(k: int) -> str:
    return "1" if k == 0 else ("x" if k == 1 else f"x^{k}")


def d_dx(field: Field, n: int) -> Matrix:
    """d/dx on the basis 1, x, ..., x^{n-1}; column j is d(x^j)."""
    rows = [[field.zero] * n for _ in range(n)]
    for j in range(1, n):
        rows[j - 1][j] = field(j)
    return Matrix(field, n, tuple(tuple(r) for r in rows))


# --------------------------------------------------------------------------
# derivations and the Gelfand-Dorfman product


def apply_column(d: Matrix, j: int) -> tuple:
    """d(e_j), the j-th column of d."""
    return tuple(r[j] for r in d.rows)


def leibniz_defect(c: Algebra, d: Matrix, i: int, j: int) -> tuple:
    f = c.field
    ei, ej = c.basis_vector(i), c.basis_vector(j)
    lhs = d.apply(c.table[i][j])
    rhs = [f.add(x, y) for x, y in zip(mul(c, d.apply(ei), ej), mul(c, ei, d.apply(ej)))]
    return tuple(f.sub(x, y) for x, y in zip(lhs, rhs))


def is_derivation(c: Algebra, d: Matrix) -> bool:
    return all(not any(leibniz_defect(c, d, i, j)) for i in range(c.dim) for j in range(c.dim))


def derivations(c: Algebra) -> list[Matrix]:
    """Basis of the derivation space: the kernel of d -> d(e_i e_j) - d(e_i) e_j - e_i d(e_j)."""
    n, f = c.dim, c.field
    if n == 0:
        return []
    t = c.tensor
    # unknown D[m][k] at flat index m * n + k, with d(e_k) = sum_m D[m][k] e_m
    rows = []
    for i in range(n):
        for j in range(n):
            for m in range(n):
                row = [0] * (n * n)
                for k in range(n):
                    row[m * n + k] += int(t[i, j, k])
                    row[k * n + i] -= int(t[k, j, m])
                    row[k * n + j] -= int(t[i, k, m])
                rows.append(row)
    system = np.array(rows, dtype=object)
    if f.p:
        system = (system % f.p).astype(np.int64)
    ker = kernel_of_array(f, system, n * n)
    return [
        Matrix(f, n, tuple(tuple(v[m * n + k] for k in range(n)) for m in range(n)))
        for v in ker.basis
    ]


def _validate_gd(c: Algebra, d: Matrix) -> None:
    if d.field != c.field or d.shape != (c.dim, c.dim):
        raise GDInputError("derivation must be a dim x dim matrix over the algebra's field")
    for which in (Identity.COMMUTATIVITY, Identity.ASSOCIATIVITY):
        r = check_identity(c, which)
        if not r.holds:
            raise GDInputError(f"base algebra violates {which.value} at basis tuple {r.witness}")
    for i in range(c.dim):
        for j in range(c.dim):
            if any(leibniz_defect(c, d, i, j)):
                raise GDInputError(f"d is not a derivation: Leibniz rule fails at basis pair {(i, j)}")


def gd_algebra(c: Algebra, d: Matrix, lam=0) -> Algebra:
    """Novikov algebra with product ``a o b = a * d(b) + lam * a * b``."""
    _validate_gd(c, d)
    f, n = c.field, c.dim
    lam = f(lam)
    cols = [apply_column(d, j) for j in range(n)]
    table = tuple(
        tuple(
            tuple(
                f.add(x, f.mul(lam, y))
                for x, y in zip(mul(c, c.basis_vector(i), cols[j]), c.table[i][j])
            )
            for j in range(n)
        )
        for i in range(n)
    )
    out = Algebra(f, n, table, c.basis_names)
    if not check_novikov(out).is_novikov:
        raise AssertionError("Gelfand-Dorfman product failed the Novikov identities")
    return out


def truncated_poly_algebra(p: int, lam=0) -> Algebra:
    """GD algebra on GF(p)[x]/(x^p) with d = d/dx; dimension p."""
    f = GF(p)
    return gd_algebra(truncated_polynomials(f, p), d_dx(f, p), lam)


# --------------------------------------------------------------------------
# sums and mutations


def direct_sum(a: Algebra, b: Algebra) -> Algebra:
    if a.field != b.field:
        raise ValueError("direct summands must share a field")
    f = a.field
    n, m = a.dim, b.dim
    z = zero_vector(f, n + m)
    pad_a = lambda v: tuple(v) + (f.zero,) * m  # noqa: E731
    pad_b = lambda v: (f.zero,) * n + tuple(v)  # noqa: E731
    table = []
    for i in range(n + m):
        row = []
        for j in range(n + m):
            if i < n and j < n:
                row.append(pad_a(a.table[i][j]))
            elif i >= n and j >= n:
                row.append(pad_b(b.table[i - n][j - n]))
            else:
                row.append(z)
        table.append(tuple(row))
    names = None
    if a.basis_names and b.basis_names:
        names = tuple(f"{s}_1" for s in a.basis_names) + tuple(f"{s}_2" for s in b.basis_names)
    return Algebra(f, n + m, tuple(table), names)


def mutate(a: Algebra, i: int, j: int, k: int, delta=None, seed: int = 0) -> Algebra:
    """Copy of ``a`` with ``table[i][j][k] += delta``.

    When ``delta`` is None a nonzero value is drawn from ``Random(seed)``.
    """
    f = a.field
    if delta is None:
        rng = random.Random(seed)
        while True:
            delta = f(rng.randint(1, f.p - 1) if f.p else rng.choice([-2, -1, 1, 2]))
            if delta:
                break
    delta = f(delta)
    table = [list(row) for row in a.table]
    v = list(table[i][j])
    v[k] = f.add(v[k], delta)
    table[i][j] = tuple(v)
    return Algebra(f, a.dim, tuple(tuple(r) for r in table), a.basis_names)


# --------------------------------------------------------------------------
# corpora


def parse_field(value) -> Field:
    """'Q', 'GF3', 'GF(3)', 3 or {'GFp': 3}."""
    if isinstance(value, Field):
        return value
    if isinstance(value, dict):
        return GF(int(value["GFp"]))
    if isinstance(value, int):
        return GF(value)
    s = str(value).strip().upper().replace("(", "").replace(")", "")
    if s == "Q":
        return Q
    if s.startswith("GF"):
        return GF(int(s[2:]))
    raise ValueError(f"unknown field {value!r}")


@dataclass(frozen=True)
class Profile:
    fields: tuple = ("Q", "GF2", "GF3", "GF5")
    dims: tuple = (1, 2, 3, 4, 5, 6)
    count: int = 200
    mutations: int = 0
    seed: int = 0
    named: bool = False

    @classmethod
    def from_dict(cls, d: dict) -> Profile:
        kw = dict(d)
        for key in ("fields", "dims"):
            if key in kw:
                kw[key] = tuple(kw[key])
        return cls(**kw)

    def to_dict(self) -> dict:
        return {
            "fields": [str(parse_field(x)).replace("(", "").replace(")", "") for x in self.fields],
            "dims": list(self.dims),
            "count": self.count,
            "mutations": self.mutations,
            "seed": self.seed,
            "named": self.named,
        }


# profile behind corpus/shipped and ``novikov theorems --corpus shipped``
SHIPPED_PROFILE = Profile(fields=("GF2", "GF3", "Q"), dims=(1, 2, 3), count=30,
                          mutations=6, seed=2026, named=True)


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    algebra: Algebra
    negative: bool = False
    provenance: dict = dc_field(default_factory=dict, compare=False)


def _rand_scalar(rng: random.Random, f: Field, lo: int = -2, hi: int = 2):
    return f(rng.randrange(f.p)) if f.p else f(rng.randint(lo, hi))


def random_base_algebra(rng: random.Random, f: Field, n: int) -> tuple[Algebra, str]:
    """A random commutative associative algebra of dimension n."""
    kinds = ["truncated", "truncated", "nilpotent", "quotient", "zero"]
    if n >= 2:
        kinds += ["sum", "sum"]
    kind = rng.choice(kinds)
    if kind == "truncated":
        return truncated_polynomials(f, n), f"F[x]/(x^{n})"
    if kind == "nilpotent":
        return nilpotent_polynomials(f, n), f"xF[x]/(x^{n + 1})"
    if kind == "zero":
        return Algebra.zero(f, n), "zero"
    if kind == "quotient":
        coeffs = [_rand_scalar(rng, f) for _ in range(n)]
        return polynomial_quotient(f, coeffs), "F[x]/(f), f=" + ",".join(f.format(c) for c in coeffs)
    k = rng.randint(1, n - 1)
    left, ln = random_base_algebra(rng, f, k)
    right, rn = random_base_algebra(rng, f, n - k)
    return direct_sum(left, right), f"({ln})+({rn})"


def random_gd_algebra(rng: random.Random, f: Field, n: int) -> tuple[Algebra, dict]:
    c, cname = random_base_algebra(rng, f, n)
    basis = derivations(c)
    f_zero = Matrix.zeros(f, n, n)
    d = f_zero
    for m in basis:
        coef = _rand_scalar(rng, f)
        if coef:
            d = Matrix(f, n, tuple(
                tuple(f.add(x, f.mul(coef, y)) for x, y in zip(r, s)) for r, s in zip(d.rows, m.rows)
            ))
    lam_kind = rng.choice(["0", "1", "random"])
    lam = f.zero if lam_kind == "0" else (f.one if lam_kind == "1" else _rand_scalar(rng, f))
    return gd_algebra(c, d, lam), {"base": cname, "derivation_space_dim": len(basis),
                                   "lambda": f.format(lam)}


def named_algebras() -> list[CorpusEntry]:
    """Hand-picked small algebras that exercise specific claims."""
    from .named import named_corpus

    return named_corpus()


def corpus(profile: Profile) -> list[CorpusEntry]:
    """Deterministic corpus: named algebras (optional), ``count`` GD algebras, then mutations."""
    rng = random.Random(profile.seed)
    fields = [parse_field(x) for x in profile.fields]
    out: list[CorpusEntry] = named_algebras() if profile.named else []
    gds = []
    for k in range(profile.count):
        f = rng.choice(fields)
        n = rng.choice(list(profile.dims))
        alg, prov = random_gd_algebra(rng, f, n)
        name = f"gd-{k:03d}-{str(f).replace('(', '').replace(')', '')}-d{n}"
        gds.append(CorpusEntry(name, alg, False, prov))
    out.extend(gds)
    for k in range(profile.mutations):
        src = gds[k % len(gds)] if gds else None
        if src is None or src.algebra.dim == 0:
            continue
        n = src.algebra.dim
        i, j, l = rng.randrange(n), rng.randrange(n), rng.randrange(n)
        mseed = rng.randrange(2**31)
        m = mutate(src.algebra, i, j, l, None, mseed)
        out.append(CorpusEntry(f"mut-{k:03d}-{src.name}", m, True,
                               {"source": src.name, "entry": [i, j, l], "seed": mseed}))
    return out
