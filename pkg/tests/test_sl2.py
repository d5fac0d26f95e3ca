"""Matrices, words, relation checks, closures, trace coordinates."""

import random

import pytest

from quintic_garnier.families import (CTX_S, CTX_T, CTX_UV, FAMILY_NAMES,
                                      PRESENTATIONS, builtin_family)
from quintic_garnier.reps import (RepTuple, irreducibility_witness,
                                  trace_coordinates, verify_product_identity)
from quintic_garnier.sl2 import (GroupWord, Mat2, commutator,
                                 projective_closure, verify_relations,
                                 word_evaluate)
from listings import random_monomial_matrix, random_rep_tuple

u, v = CTX_UV.var("u"), CTX_UV.var("v")
J = Mat2.antidiagonal(CTX_UV.one())


def test_word_evaluate_empty_is_identity():
    assert word_evaluate({"a": J}, GroupWord()).is_identity()


def test_word_evaluate_case2_relator():
    # (bc)^2 (cb)^-2 with b diagonal and c the quarter turn
    b, c = GroupWord.gen("b"), GroupWord.gen("c")
    w = (b * c) ** 2 * ((c * b) ** 2).inverse()
    val = word_evaluate({"b": Mat2.diagonal(v), "c": J}, w)
    assert val.is_identity()


def test_word_evaluate_commutator():
    b, c = GroupWord.gen("b"), GroupWord.gen("c")
    val = word_evaluate({"b": Mat2.diagonal(v), "c": J}, commutator(b, c))
    assert val == Mat2.diagonal(v ** 2)


def test_word_evaluate_is_monoid_homomorphism():
    rng = random.Random(23)
    assignment = {"a": random_monomial_matrix(rng),
                  "b": random_monomial_matrix(rng),
                  "c": random_monomial_matrix(rng)}
    syms = list("abc")
    for _ in range(150):
        w1 = GroupWord((rng.choice(syms), rng.choice([1, -1]))
                       for _ in range(rng.randint(0, 4)))
        w2 = GroupWord((rng.choice(syms), rng.choice([1, -1]))
                       for _ in range(rng.randint(0, 4)))
        lhs = word_evaluate(assignment, w1 * w2)
        rhs = word_evaluate(assignment, w1) * word_evaluate(assignment, w2)
        assert lhs == rhs


def test_word_evaluate_requires_assignment():
    with pytest.raises(KeyError):
        word_evaluate({"a": J}, GroupWord.gen("b"))


@pytest.mark.parametrize("name", [
    "plane_case1", "plane_case2", "plane_case3",
    "b3_nonrigid", "b4_family", "gamma3_finite",
    "gamma3p_fam1", "gamma3p_fam2",
])
def test_catalog_families_satisfy_their_relations(name):
    fam = builtin_family(name)
    report = verify_relations(fam.presentation, fam.assignment)
    assert report.projective_pass, report.as_dict()


def test_relation_report_shape():
    fam = builtin_family("b3_nonrigid")
    d = verify_relations(fam.presentation, fam.assignment).as_dict()
    assert d["presentation"] == "b3"
    assert all({"relator", "sl2", "psl2"} <= set(r) for r in d["relators"])


def test_projective_closure_quarter_turn():
    res = projective_closure([J], cutoff=10)
    assert res.status == "finite" and res.order == 2


def test_projective_closure_gamma3_is_order_twelve():
    fam = builtin_family("gamma3_finite")
    res = projective_closure([fam.assignment["a"], fam.assignment["b"]], cutoff=100)
    assert res.status == "finite" and res.order == 12


def test_projective_closure_symbolic_torus_hits_cutoff():
    res = projective_closure([Mat2.diagonal(u)], cutoff=100)
    assert res.status == "cutoff"


def test_trace_coordinates_of_identity():
    t = trace_coordinates(RepTuple.identity(CTX_UV))
    assert all(val == CTX_UV.const(2) for val in t.values)


def test_trace_coordinates_rho1_first_element():
    from listings import rho1_listing
    assert trace_coordinates(builtin_family("rho1").rep) == rho1_listing()[0]


def test_trace_coordinates_rho3_first_element():
    from listings import rho3_listing
    assert trace_coordinates(builtin_family("rho3").rep) == rho3_listing()[0]


def test_trace_coordinates_conjugation_invariant():
    rng = random.Random(31)
    for _ in range(100):
        rho = random_rep_tuple(rng)
        g = random_monomial_matrix(rng)
        assert trace_coordinates(rho.conjugate_by(g)) == trace_coordinates(rho)


def test_rep_tuple_product_and_determinants():
    rng = random.Random(37)
    for _ in range(100):
        rho = random_rep_tuple(rng)
        one = CTX_UV.one()
        assert all(m.det() == one for m in rho.five())
        assert verify_product_identity(rho) == {"sl2": True, "psl2": True}


def test_product_identity_of_line_rows():
    for name, expect in [("line_case1", True), ("line_case2", True),
                         ("line_case3b", True)]:
        fam = builtin_family(name)
        assert verify_product_identity(fam.five)["sl2"] is expect


def test_product_identity_line_case3a_defect_and_correction():
    fam = builtin_family("line_case3a")
    assert verify_product_identity(fam.five) == {"sl2": False, "psl2": False}
    assert verify_product_identity(fam.corrected_five)["sl2"] is True


def test_sign_flip_of_fifth_matrix_is_projective_only():
    rho = builtin_family("rho1").rep
    five = rho.five()
    flipped = five[:4] + (-five[4],)
    assert verify_product_identity(flipped) == {"sl2": False, "psl2": True}


def test_irreducibility_witness_rho2():
    rho = builtin_family("rho2").rep
    wit = irreducibility_witness(rho)
    # pair (d1, d3): quarter turn against diag(u) has defect u^2 + u^-2 - 2
    assert wit[(1, 3)] == u ** 2 + u ** -2 - 2
    # commuting pair (d2, d4): zero defect
    assert wit[(2, 4)].is_zero()


def test_irreducibility_witness_identity_vanishes():
    wit = irreducibility_witness(RepTuple.identity(CTX_UV))
    assert all(val.is_zero() for val in wit.values())


def test_builtin_family_unknown_name():
    with pytest.raises(KeyError):
        builtin_family("rho9")


def test_gamma3_lift_matrices():
    fam = builtin_family("gamma3_finite")
    a, b = fam.assignment["a"], fam.assignment["b"]
    one = a.ctx.one()
    assert a.det() == one and b.det() == one
    assert (a * a * a).is_identity()


def test_gamma4_presentation_declared():
    assert PRESENTATIONS["gamma4"].generators == ("a", "b", "c")
    assert len(PRESENTATIONS["gamma4"].relators) == 3
