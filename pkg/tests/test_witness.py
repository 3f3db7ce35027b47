import pytest

from novikov.algebra import Algebra, Identity, check_identity
from novikov.generators import direct_sum, mutate, one_dim_field, truncated_poly_algebra
from novikov.lattice import baer_radical, enumerate_ideals, is_prime, is_semiprime, is_simple
from novikov.linalg import GF, Q, Subspace
from novikov.structure import full_space, nucleus, square, vector_span, zero_space
from novikov.witness import evaluate, verify_witness

F2, F3 = GF(2), GF(3)


def ok(a, w):
    good, msg = verify_witness(a, w)
    assert good, msg


def bad(a, w):
    good, msg = verify_witness(a, w)
    assert not good, msg


def test_identity_defect():
    a = mutate(truncated_poly_algebra(3, 0), 1, 2, 0, 1)
    e = [a.basis_vector(i) for i in range(3)]
    r = check_identity(a, Identity.RIGHT_SYM)
    w = {"kind": "identity_defect", "identity": "RightSym1",
         "vectors": [e[i] for i in r.witness], "defect": r.defect}
    ok(a, w)
    bad(a, {**w, "defect": (0, 0, 1) if r.defect != (0, 0, 1) else (0, 1, 0)})
    bad(truncated_poly_algebra(3, 0), w)


def test_decision_witnesses():
    z = Algebra.zero(F2, 2)
    ok(z, is_semiprime(z).witness)
    s = direct_sum(one_dim_field(F3), one_dim_field(F3))
    ok(s, is_prime(s).witness)
    ok(s, is_simple(s).witness)
    t = truncated_poly_algebra(3, 0)
    fake = {"kind": "trivial_ideal", "ideals": [full_space(t)]}
    bad(t, fake)
    bad(t, {"kind": "proper_ideal", "ideals": [vector_span(t, t.basis_vector(0))]})
    bad(t, {"kind": "zero_product", "ideals": [full_space(t), full_space(t)]})
    ok(z, {"kind": "zero_square"})
    bad(t, {"kind": "zero_square"})


def test_decision_reproduction():
    t = truncated_poly_algebra(3, 1)
    ok(t, {"kind": "decision", "question": "prime", "status": "Yes"})
    bad(t, {"kind": "decision", "question": "prime", "status": "No"})
    ok(one_dim_field(Q), {"kind": "decision", "question": "semiprime", "status": "Undetermined", "seed": 3})


def test_hypotheses_are_rerun():
    s = direct_sum(one_dim_field(F2), one_dim_field(F2))
    w = {"kind": "nonzero", "space": full_space(s), "hypotheses": [{"question": "prime", "status": "Yes"}]}
    bad(s, w)
    w["hypotheses"][0]["status"] = "No"
    ok(s, w)


def test_definitions_are_recomputed():
    t = truncated_poly_algebra(3, 0)
    n = nucleus(t)
    bad(t, {"kind": "nonzero", "space": full_space(t), "space_def": {"op": "nucleus"}})
    assert evaluate(t, {"op": "square", "args": [{"op": "full"}]}) == square(t, full_space(t))
    bad(t, {"kind": "subspace_mismatch", "left": n, "right": n})
    bad(t, {"kind": "nonzero", "space": zero_space(t), "space_def": {"op": "bogus"}})


def test_not_contained_and_not_ideal():
    t = truncated_poly_algebra(3, 0)
    full, e0 = full_space(t), vector_span(t, t.basis_vector(0))
    ok(t, {"kind": "not_contained", "sub": full, "sup": e0})
    bad(t, {"kind": "not_contained", "sub": e0, "sup": full})
    ok(t, {"kind": "not_ideal", "space": e0})
    bad(t, {"kind": "not_ideal", "space": full})
    # span{1} is a left ideal here: a * d(1) = 0
    bad(t, {"kind": "not_ideal", "space": e0, "sidedness": "LeftIdeal"})


def test_within_must_be_ideal():
    t = truncated_poly_algebra(3, 0)
    e0 = vector_span(t, t.basis_vector(0))
    bad(t, {"kind": "zero_square", "within": e0})


def test_baer_and_lists():
    a = direct_sum(truncated_poly_algebra(2, 1), Algebra.zero(F2, 1))
    stages = [h.space for h in baer_radical(a).stages]
    ok(a, {"kind": "baer_chain", "stages": stages})
    bad(a, {"kind": "baer_chain", "stages": stages[:1]})
    ideals = [h.space for h in enumerate_ideals(a)]
    ok(a, {"kind": "ideal_list", "ideals": ideals})
    bad(a, {"kind": "ideal_list", "ideals": ideals[:-1]})


def test_idempotent_commutative_and_minimal():
    f = one_dim_field(F3)
    ok(f, {"kind": "idempotent_commutative_ideal", "ideals": [full_space(f)]})
    z = Algebra.zero(F3, 1)
    bad(z, {"kind": "idempotent_commutative_ideal", "ideals": [full_space(z)]})
    s = direct_sum(one_dim_field(F2), one_dim_field(F2))
    inner = vector_span(s, (1, 0))
    # the whole algebra is not minimal, so the claim is rejected
    bad(s, {"kind": "minimal_not_simple", "ideals": [inner], "within": full_space(s)})


@pytest.mark.parametrize("kind", ["nonsense", None])
def test_unknown_kind(kind):
    bad(one_dim_field(F2), {"kind": kind})


def test_structure_result():
    t = truncated_poly_algebra(3, 0)
    ok(t, {"kind": "structure_result", "result": nucleus(t), "result_def": {"op": "nucleus"}})
    bad(t, {"kind": "structure_result", "result": Subspace.full(F3, 3), "result_def": {"op": "nucleus"}})
