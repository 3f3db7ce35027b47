"""Decision procedures on the ideal lattice.

Over GF(p) the deciders scan one representative of every line of F_p^n and
work with the principal ideal each one generates.  Any nonzero ideal contains
the principal ideal of each of its nonzero elements, which is what makes the
scan sound for trivial ideals, zero products of ideals and minimal ideals.

Over Q only negative answers with a witness, or ``Undetermined``, come out of
the semiprime / prime / simple deciders.  Full subspace enumeration is kept as
an independent oracle for small finite cases.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field as dc_field
from enum import Enum
from typing import Iterator

from .algebra import Algebra
from .linalg import Field, Subspace, subspace_sum
from .structure import (
    IdealHandle,
    Sidedness,
    associator_span,
    ann_left,
    ann_right,
    full_space,
    ideal_closure,
    is_ideal,
    quotient,
    square,
    subspace_product,
    vector_span,
    zero_space,
)

# Largest dimension per prime for full subspace enumeration.
ENUMERATION_CAPS = {2: 5, 3: 4}
DEFAULT_MAX_POINTS = 200_000
RATIONAL_SEARCH_COUNT = 48


class CapExceededError(ValueError):
    pass


class Status(str, Enum):
    YES = "Yes"
    NO = "No"
    UNDETERMINED = "Undetermined"


class Method(str, Enum):
    PROJECTIVE_SCAN = "ProjectiveScan"
    SUBSPACE_ENUMERATION = "SubspaceEnumeration"
    RANDOM_SEARCH = "RandomSearch"


@dataclass(frozen=True)
class Decision:
    """Answer to a semiprime / prime / simple question.

    ``witness`` holds the objects that prove a ``No``: ``ideals`` (subspaces),
    ``representatives`` (generating vectors) and a ``kind`` tag understood by
    :func:`novikov.witness.verify_witness`.
    """

    question: str
    status: Status
    method: Method
    witness: dict | None = None

    def __bool__(self):
        return self.status is Status.YES


# --------------------------------------------------------------------------
# enumeration helpers


def projective_points(field: Field, n: int) -> Iterator[tuple]:
    """One vector per line of F_p^n (first nonzero coordinate 1), in tuple order."""
    p = field.p
    if not p:
        raise ValueError("projective scan needs a finite field")
    for lead in range(n - 1, -1, -1):
        head = (0,) * lead + (1,)
        for tail in itertools.product(range(p), repeat=n - lead - 1):
            yield head + tail


def count_projective_points(field: Field, n: int) -> int:
    p = field.p
    return (p**n - 1) // (p - 1)


def _check_scan(a: Algebra, max_points: int) -> None:
    if count_projective_points(a.field, a.dim) > max_points:
        raise CapExceededError(
            f"projective scan of {a.field}^{a.dim} exceeds {max_points} points"
        )


def principal_ideal(a: Algebra, x) -> IdealHandle:
    """Two-sided ideal generated by a single vector."""
    return ideal_closure(a, vector_span(a, x), Sidedness.TWO_SIDED)


@dataclass
class PrincipalIdeals:
    """Distinct nonzero principal ideals in order of their first generator."""

    ideals: list[Subspace] = dc_field(default_factory=list)
    representatives: list[tuple] = dc_field(default_factory=list)

    def __iter__(self):
        return iter(zip(self.ideals, self.representatives))

    def __len__(self):
        return len(self.ideals)


def scan_principal_ideals(a: Algebra, max_points: int = DEFAULT_MAX_POINTS) -> PrincipalIdeals:
    _check_scan(a, max_points)
    out = PrincipalIdeals()
    seen: set[Subspace] = set()
    for x in projective_points(a.field, a.dim):
        s = principal_ideal(a, x).space
        if s not in seen:
            seen.add(s)
            out.ideals.append(s)
            out.representatives.append(x)
    return out


def rational_candidates(a: Algebra, seed: int = 0, count: int = RATIONAL_SEARCH_COUNT) -> list[tuple]:
    """Structured and random nonzero vectors used by the semidecisions over Q."""
    f, n = a.field, a.dim
    full = full_space(a)
    structured = [a.basis_vector(i) for i in range(n)]
    for s in (associator_span(a), ann_left(a, full), ann_right(a, full)):
        structured.extend(s.basis)
    rng = random.Random(seed)
    randoms = []
    while len(randoms) < count and n:
        v = tuple(f(rng.randint(-2, 2)) for _ in range(n))
        if any(v):
            randoms.append(v)
    out, seen = [], set()
    for v in structured + randoms:
        if v not in seen:
            seen.add(v)
            out.append(v)
    return out


def candidate_principal_ideals(a: Algebra, seed: int = 0) -> PrincipalIdeals:
    out = PrincipalIdeals()
    seen: set[Subspace] = set()
    for x in rational_candidates(a, seed):
        s = principal_ideal(a, x).space
        if s not in seen:
            seen.add(s)
            out.ideals.append(s)
            out.representatives.append(x)
    return out


def _principals(a: Algebra, seed: int, max_points: int) -> tuple[PrincipalIdeals, Method]:
    if a.field.is_finite:
        return scan_principal_ideals(a, max_points), Method.PROJECTIVE_SCAN
    return candidate_principal_ideals(a, seed), Method.RANDOM_SEARCH


def _undetermined_or_yes(a: Algebra, question: str, method: Method) -> Decision:
    status = Status.YES if a.field.is_finite else Status.UNDETERMINED
    return Decision(question, status, method)


# --------------------------------------------------------------------------
# deciders


def is_semiprime(a: Algebra, seed: int = 0, max_points: int = DEFAULT_MAX_POINTS) -> Decision:
    """Semiprime: no nonzero ideal squares to zero."""
    method = Method.PROJECTIVE_SCAN if a.field.is_finite else Method.RANDOM_SEARCH
    if a.dim and a.is_zero_product():
        return Decision("semiprime", Status.NO, method,
                        {"kind": "trivial_ideal", "ideals": [full_space(a)]})
    principals, method = _principals(a, seed, max_points)
    for s, x in principals:
        if square(a, s).is_zero():
            return Decision("semiprime", Status.NO, method,
                            {"kind": "trivial_ideal", "ideals": [s], "representatives": [x]})
    return _undetermined_or_yes(a, "semiprime", method)


def is_prime(a: Algebra, seed: int = 0, max_points: int = DEFAULT_MAX_POINTS) -> Decision:
    """Prime: a product of two nonzero ideals is never zero."""
    method = Method.PROJECTIVE_SCAN if a.field.is_finite else Method.RANDOM_SEARCH
    if a.dim and a.is_zero_product():
        full = full_space(a)
        return Decision("prime", Status.NO, method,
                        {"kind": "zero_product", "ideals": [full, full]})
    principals, method = _principals(a, seed, max_points)
    items = list(principals)
    for s, x in items:
        for t, y in items:
            if subspace_product(a, s, t).is_zero():
                return Decision("prime", Status.NO, method,
                                {"kind": "zero_product", "ideals": [s, t], "representatives": [x, y]})
    return _undetermined_or_yes(a, "prime", method)


def is_simple(a: Algebra, seed: int = 0, max_points: int = DEFAULT_MAX_POINTS) -> Decision:
    """Simple: nonzero product and no ideals other than 0 and A."""
    method = Method.PROJECTIVE_SCAN if a.field.is_finite else Method.RANDOM_SEARCH
    if a.dim == 0 or a.is_zero_product():
        return Decision("simple", Status.NO, method, {"kind": "zero_square", "ideals": []})
    principals, method = _principals(a, seed, max_points)
    for s, x in principals:
        if not s.is_full():
            return Decision("simple", Status.NO, method,
                            {"kind": "proper_ideal", "ideals": [s], "representatives": [x]})
    return _undetermined_or_yes(a, "simple", method)


@dataclass(frozen=True)
class MinimalIdeals:
    ideals: tuple[IdealHandle, ...]
    exact: bool

    def __iter__(self):
        return iter(self.ideals)

    def __len__(self):
        return len(self.ideals)

    def spaces(self) -> set[Subspace]:
        return {h.space for h in self.ideals}


def _minimal(spaces: list[Subspace]) -> list[Subspace]:
    return [s for s in spaces if not any(t != s and t <= s for t in spaces)]


def minimal_ideals(a: Algebra, seed: int = 0, max_points: int = DEFAULT_MAX_POINTS) -> MinimalIdeals:
    """Minimal nonzero ideals; over Q the list is heuristic (``exact=False``)."""
    principals, method = _principals(a, seed, max_points)
    found = _minimal(principals.ideals)
    return MinimalIdeals(tuple(IdealHandle(s) for s in found), method is Method.PROJECTIVE_SCAN)


# --------------------------------------------------------------------------
# Baer radical


@dataclass(frozen=True)
class BaerChain:
    stages: tuple[IdealHandle, ...]
    exact: bool

    @property
    def radical(self) -> IdealHandle:
        return self.stages[-1]


def trivial_ideal_sum(a: Algebra, seed: int = 0, max_points: int = DEFAULT_MAX_POINTS) -> Subspace:
    """Sum of every trivial principal ideal (equals the sum of all trivial ideals over GF(p))."""
    principals, _ = _principals(a, seed, max_points)
    total = zero_space(a)
    for s, _x in principals:
        if square(a, s).is_zero():
            total = subspace_sum(total, s)
    return total


def baer_radical(a: Algebra, seed: int = 0, max_points: int = DEFAULT_MAX_POINTS) -> BaerChain:
    """Lower radical chain B_0 = 0, B_{k+1}/B_k = sum of trivial ideals of A/B_k."""
    b = zero_space(a)
    stages = [IdealHandle(b)]
    while True:
        q = quotient(a, b)
        s = trivial_ideal_sum(q.algebra, seed, max_points)
        if s.is_zero():
            return BaerChain(tuple(stages), a.field.is_finite)
        b = q.preimage(s)
        stages.append(IdealHandle(b))


# --------------------------------------------------------------------------
# full enumeration (oracle)


def gaussian_binomial(n: int, k: int, q: int) -> int:
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def check_enumeration_caps(field: Field, n: int) -> None:
    p = field.p
    if p is None:
        raise CapExceededError("subspace enumeration needs a finite field")
    cap = ENUMERATION_CAPS.get(p)
    if cap is None:
        raise CapExceededError(f"subspace enumeration is limited to p <= 3 (got p = {p})")
    if n > cap:
        raise CapExceededError(f"subspace enumeration over GF({p}) is limited to dim <= {cap} (got {n})")


def within_enumeration_caps(field: Field, n: int) -> bool:
    try:
        check_enumeration_caps(field, n)
    except CapExceededError:
        return False
    return True


def enumerate_subspaces(field: Field, n: int) -> Iterator[Subspace]:
    """Every subspace of F_p^n, generated directly as RREF matrices."""
    check_enumeration_caps(field, n)
    p = field.p
    for k in range(n + 1):
        for pivots in itertools.combinations(range(n), k):
            pivset = set(pivots)
            free = [(r, c) for r, pc in enumerate(pivots) for c in range(pc + 1, n) if c not in pivset]
            for fill in itertools.product(range(p), repeat=len(free)):
                rows = [[0] * n for _ in range(k)]
                for r, pc in enumerate(pivots):
                    rows[r][pc] = 1
                for (r, c), x in zip(free, fill):
                    rows[r][c] = x
                yield Subspace(field, n, tuple(tuple(r) for r in rows))


def enumerate_ideals(a: Algebra, sidedness: Sidedness = Sidedness.TWO_SIDED) -> list[IdealHandle]:
    return [IdealHandle(s, Sidedness(sidedness))
            for s in enumerate_subspaces(a.field, a.dim) if is_ideal(a, s, sidedness)]


def oracle_decisions(a: Algebra, ideals: list[IdealHandle] | None = None) -> dict:
    """Semiprime / prime / simple / minimal ideals recomputed from the full ideal list."""
    if ideals is None:
        ideals = enumerate_ideals(a)
    nonzero = [h.space for h in ideals if not h.space.is_zero()]
    m = Method.SUBSPACE_ENUMERATION

    def yes_no(flag, q):
        return Decision(q, Status.YES if flag else Status.NO, m)

    semiprime = not any(square(a, s).is_zero() for s in nonzero)
    prime = not any(subspace_product(a, s, t).is_zero() for s in nonzero for t in nonzero)
    simple = (a.dim > 0 and not a.is_zero_product()
              and all(s.is_full() for s in nonzero))
    minimal = [s for s in nonzero if not any(t != s and t <= s for t in nonzero)]
    return {
        "semiprime": yes_no(semiprime, "semiprime"),
        "prime": yes_no(prime, "prime"),
        "simple": yes_no(simple, "simple"),
        "minimal_ideals": minimal,
    }


def is_trivial_ideal(a: Algebra, s: Subspace) -> bool:
    return is_ideal(a, s) and square(a, s).is_zero()
