"""Re-verification of witnesses from scratch.

A witness is a plain dict with a ``kind`` tag, subspaces and vectors in the
algebra's coordinates, and optionally:

* ``within``: an ideal I of A; ideal-ness and products are then taken in I.
* ``*_def``: an expression ``{"op": name, "args": [...]}`` that recomputes a
  recorded subspace (args may themselves be expressions).
* ``hypotheses``: decisions ``{"question", "status", "within"?}`` that are
  re-run before the witness itself is checked.

:func:`verify_witness` returns ``(ok, message)`` and never trusts anything in
the witness except the algebra.
"""

from __future__ import annotations

from .algebra import Algebra, Identity, identity_defect
from .lattice import (
    Status,
    baer_radical,
    enumerate_ideals,
    is_prime,
    is_semiprime,
    is_simple,
    principal_ideal,
    projective_points,
    quotient,
)
from .linalg import Subspace
from .structure import (
    Sidedness,
    ann_left,
    ann_right,
    associator_ideal,
    associator_span,
    associator_subspace,
    center,
    commutative_center,
    full_space,
    ideal_closure,
    is_commutative_subspace,
    is_ideal,
    is_ideal_in,
    nucleus,
    right_stabilizer,
    square,
    subalgebra_as_algebra,
    subspace_product,
    zero_space,
)

DECIDERS = {"semiprime": is_semiprime, "prime": is_prime, "simple": is_simple}

OPS = {
    "full": lambda a: full_space(a),
    "zero": lambda a: zero_space(a),
    "nucleus": nucleus,
    "commutative_center": commutative_center,
    "center": center,
    "associator_span": associator_span,
    "associator_ideal": lambda a: associator_ideal(a).space,
    "ann_left": ann_left,
    "ann_right": ann_right,
    "product": subspace_product,
    "sum": lambda a, u, v: u + v,
    "square": square,
    "associators": associator_subspace,
    "left_closure": lambda a, s: ideal_closure(a, s, Sidedness.LEFT).space,
    "ideal_closure": lambda a, s: ideal_closure(a, s, Sidedness.TWO_SIDED).space,
    "principal_ideal": lambda a, v: principal_ideal(a, v).space,
    "right_stabilizer": right_stabilizer,
}


class WitnessError(ValueError):
    pass


def evaluate(a: Algebra, expr):
    """Evaluate an op expression; subspaces and vectors pass through unchanged."""
    if isinstance(expr, dict) and "op" in expr:
        fn = OPS.get(expr["op"])
        if fn is None:
            raise WitnessError(f"unknown op {expr['op']!r}")
        return fn(a, *(evaluate(a, x) for x in expr.get("args", [])))
    return expr


def _recorded(a: Algebra, w: dict, key: str) -> Subspace:
    """Recorded subspace ``w[key]``, cross-checked against ``w[key + '_def']`` if present."""
    s = w.get(key)
    d = w.get(key + "_def")
    if d is not None:
        value = evaluate(a, d)
        if s is not None and value != s:
            raise WitnessError(f"{key} does not match its definition")
        s = value
    if s is None:
        raise WitnessError(f"witness lacks {key!r}")
    return s


def decide(a: Algebra, question: str, within: Subspace | None = None, seed: int = 0):
    target = a if within is None or within.is_full() else subalgebra_as_algebra(a, within).algebra
    return DECIDERS[question](target, seed)


def _check_hypotheses(a: Algebra, w: dict) -> None:
    for h in w.get("hypotheses", []):
        got = decide(a, h["question"], h.get("within"), h.get("seed", 0))
        if got.status.value != h["status"]:
            raise WitnessError(
                f"hypothesis {h['question']} = {h['status']} not reproduced (got {got.status.value})"
            )


def _within(a: Algebra, w: dict) -> Subspace:
    s = w.get("within")
    if s is None:
        return full_space(a)
    if not is_ideal(a, s):
        raise WitnessError("'within' is not an ideal of the algebra")
    return s


def _ideal_in(a, s, within, sidedness=Sidedness.TWO_SIDED) -> bool:
    if within.is_full():
        return is_ideal(a, s, sidedness)
    return is_ideal_in(a, s, within, sidedness)


def _points_of(s: Subspace):
    """Projective points of a subspace over GF(p), as A-vectors."""
    f = s.field
    for c in projective_points(f, s.dim):
        v = [0] * s.ambient_dim
        for x, row in zip(c, s.basis):
            if x:
                v = [(vi + x * ri) % f.p for vi, ri in zip(v, row)]
        yield tuple(v)


def _verify(a: Algebra, w: dict) -> str:
    kind = w.get("kind")
    _check_hypotheses(a, w)
    within = _within(a, w)

    if kind == "identity_defect":
        which = Identity(w["identity"])
        vectors = [tuple(v) for v in w["vectors"]]
        if which is Identity.LEMMA1_EQ6 and vectors[0] not in nucleus(a):
            raise WitnessError("first vector is not in the nucleus")
        d = identity_defect(a, which, vectors)
        if not any(d):
            raise WitnessError("defect re-evaluates to zero")
        if "defect" in w and tuple(w["defect"]) != d:
            raise WitnessError("recorded defect differs from re-evaluation")
        return f"{which.value} fails: defect reproduced"

    if kind == "trivial_ideal":
        (s,) = w["ideals"]
        if s.is_zero() or not _ideal_in(a, s, within) or not square(a, s).is_zero():
            raise WitnessError("not a nonzero trivial ideal")
        return f"trivial ideal of dim {s.dim} verified"

    if kind == "zero_product":
        s, t = w["ideals"]
        if s.is_zero() or t.is_zero():
            raise WitnessError("zero ideal in product witness")
        if not (_ideal_in(a, s, within) and _ideal_in(a, t, within)):
            raise WitnessError("product witness is not a pair of ideals")
        if not subspace_product(a, s, t).is_zero():
            raise WitnessError("product is nonzero")
        return f"ideals of dim {s.dim}, {t.dim} with zero product verified"

    if kind == "proper_ideal":
        (s,) = w["ideals"]
        if s.is_zero() or s == within or not _ideal_in(a, s, within):
            raise WitnessError("not a proper nonzero ideal")
        return f"proper ideal of dim {s.dim} verified"

    if kind == "zero_square":
        if within.dim and not square(a, within).is_zero():
            raise WitnessError("algebra has nonzero square")
        return "zero square verified"

    if kind == "not_ideal":
        s = _recorded(a, w, "space")
        if _ideal_in(a, s, within, Sidedness(w.get("sidedness", "TwoSided"))):
            raise WitnessError("subspace is in fact an ideal")
        return "non-ideal verified"

    if kind == "not_contained":
        sub, sup = _recorded(a, w, "sub"), _recorded(a, w, "sup")
        if sub <= sup:
            raise WitnessError("containment actually holds")
        return "non-containment verified"

    if kind == "nonzero":
        s = _recorded(a, w, "space")
        if s.is_zero():
            raise WitnessError("subspace is zero")
        return f"nonzero subspace of dim {s.dim} verified"

    if kind == "subspace_mismatch":
        s, t = _recorded(a, w, "left"), _recorded(a, w, "right")
        if s == t:
            raise WitnessError("subspaces coincide")
        return "mismatch verified"

    if kind == "structure_result":
        _recorded(a, w, "result")
        return f"{w['result_def']['op']} reproduced"

    if kind == "decision":
        got = decide(a, w["question"], w.get("within"), w.get("seed", 0))
        if got.status.value != w["status"]:
            raise WitnessError(f"decision {w['question']} not reproduced")
        return f"{w['question']} = {w['status']} reproduced"

    if kind == "baer_chain":
        stages = w["stages"]
        if not stages or not stages[0].is_zero():
            raise WitnessError("chain must start at 0")
        for s in stages:
            if not is_ideal(a, s):
                raise WitnessError("chain stage is not an ideal")
        for s, t in zip(stages, stages[1:]):
            if not (s <= t and s.dim < t.dim):
                raise WitnessError("chain is not strictly increasing")
        if [h.space for h in baer_radical(a, w.get("seed", 0)).stages] != list(stages):
            raise WitnessError("chain differs from recomputation")
        if a.field.is_finite:
            q = quotient(a, stages[-1]).algebra
            if is_semiprime(q).status is not Status.YES:
                raise WitnessError("quotient by the radical is not semiprime")
        return f"Baer chain of length {len(stages)} verified"

    if kind == "idempotent_commutative_ideal":
        (s,) = w["ideals"]
        if s.is_zero() or not is_ideal(a, s) or not is_commutative_subspace(a, s) or square(a, s) != s:
            raise WitnessError("not a nonzero commutative ideal with H^2 = H")
        return "idempotent commutative ideal verified"

    if kind == "minimal_not_simple":
        (s,) = w["ideals"]
        if not (s.is_zero() is False and is_ideal_in(a, s, within) and s != within):
            raise WitnessError("inner ideal is not proper and nonzero")
        if square(a, within).is_zero():
            raise WitnessError("minimal ideal squares to zero")
        if a.field.is_finite and any(principal_ideal(a, v).space != within for v in _points_of(within)):
            raise WitnessError("'within' is not a minimal ideal")
        return "minimal ideal that is neither trivial nor simple verified"

    if kind == "ideal_list":
        listed = set(w["ideals"])
        if any(not is_ideal(a, s) for s in listed):
            raise WitnessError("listed subspace is not an ideal")
        if listed != {h.space for h in enumerate_ideals(a)}:
            raise WitnessError("ideal list differs from re-enumeration")
        return f"{len(listed)} ideals re-enumerated"

    raise WitnessError(f"unknown witness kind {kind!r}")


def verify_witness(a: Algebra, w: dict) -> tuple[bool, str]:
    try:
        return True, _verify(a, w)
    except (WitnessError, KeyError, ValueError) as e:
        return False, f"{w.get('kind')}: {e}"
