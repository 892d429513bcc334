import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from quatcover import lattices as L
from quatcover.quaternion import I, J, K, ONE, Quaternion

small = st.integers(-4, 4)
qint = st.builds(Quaternion, small, small, small, small)
vec = st.builds(L.QuatVector2, qint, qint)


def test_zlattice_basics():
    a = L.ZLattice([[2, 0], [0, 2]])
    b = L.ZLattice([[2, 2], [0, 4]])
    ops = L.lattice_ops(a, b)
    assert ops.index == 2 and not ops.equal
    assert ops.sum == a and ops.intersection == b
    assert L.ZLattice([[1, 1], [1, -1]]) == L.ZLattice([[2, 0], [1, 1]])
    assert L.ZLattice.from_json(a.to_json()) == a
    half = L.ZLattice([[Fraction(1, 2), 0], [0, 1]])
    assert half.index_of(L.ZLattice([[1, 0], [0, 1]])) == 2


@settings(max_examples=40, deadline=None)
@given(st.lists(st.lists(small, min_size=3, max_size=3), min_size=1, max_size=4),
       st.lists(st.lists(small, min_size=3, max_size=3), min_size=1, max_size=4))
def test_intersection_is_contained_in_both(ga, gb):
    a, b = L.ZLattice(ga, 3), L.ZLattice(gb, 3)
    meet = a & b
    assert a.contains_lattice(meet) and b.contains_lattice(meet)
    assert (a + b).contains_lattice(a) and (a + b).contains_lattice(b)


def test_form_rejects_non_skew():
    with pytest.raises(ValueError):
        L.SkewHermitianForm(ONE, Quaternion(), Quaternion(), Quaternion())


@settings(max_examples=100, deadline=None)
@given(vec, vec)
def test_pairing_alternating(u, w):
    for form in (L.PEL_FORM, L.STANDARD_FORM):
        assert L.pairing_eval(form, u, w) == -L.pairing_eval(form, w, u)


@settings(max_examples=50, deadline=None)
@given(vec, vec, qint)
def test_pairing_trace_form_balance(u, w, m):
    # <m u, w> = <u, conj(m) w> since the pairing is Tr of a skew-hermitian expression
    assert L.pairing_eval(L.PEL_FORM, u.lmul(m), w) == L.pairing_eval(L.PEL_FORM, u, w.lmul(m.conj()))


def test_pel_values_by_hand():
    a, b = L.pel_pairing_values()
    assert a == [0, -2, -2, 0]
    assert b == [-1, 1, 0, 0]


def test_change_of_basis():
    minus = L.solve_form_matrix(L.PEL_FORM, L.standard_basis_change(-1))
    assert minus.matrix == ((Quaternion(), ONE), (-ONE, Quaternion()))
    plus = L.solve_form_matrix(L.PEL_FORM, L.standard_basis_change(1))
    assert plus.v11 == 4 * (I + K)
    with pytest.raises(ValueError):
        L.solve_form_matrix(L.PEL_FORM, (L.LAMBDA1, L.LAMBDA1))


def test_solve_form_identity_basis_recovers_form():
    again = L.solve_form_matrix(L.PEL_FORM, (L.LAMBDA1, L.LAMBDA2))
    assert again == L.PEL_FORM


def test_b_alpha_principal_and_normalization():
    b = L.b_alpha_lattice()
    g = L.gram_matrix(L.STANDARD_FORM, b)
    assert g.integral and g.det == 1
    assert L.gram_matrix(L.STANDARD_FORM.with_scale(1), b).det == 256


def test_w2_properties():
    b = L.b_alpha_lattice()
    vecs = [L.QuatVector2.from_coords(v) for v in b.basis]
    assert L.span_lattice(L.w2(v) for v in vecs) == b
    for x, y in itertools.product(vecs, repeat=2):
        assert L.pairing_eval(L.STANDARD_FORM, L.w2(x), L.w2(y)) == L.pairing_eval(L.STANDARD_FORM, x, y)
    assert all(L.w2(L.w2(v)) == v.rmul(-I) for v in vecs)


def test_named_reports():
    for rep in (L.verify_named_lattices(), L.verify_pel_form(), L.lemma_LA_check()):
        assert rep.ok, [c for c in rep.checks if c.status == "fail"]
    flagged = {c.id for c in L.verify_pel_form().checks if c.status == "flagged"}
    assert flagged == {"lattice.standard_basis", "lattice.prym_vs_b_alpha_literal"}


def test_kernel_lemma_pieces():
    z = L.QuatVector2(I + ONE, -J - ONE)
    assert z.c1 * (I - ONE) + z.c2 * (J - ONE) == Quaternion()
    rep = L.lemma_LA_check()
    assert all(c.status == "pass" for c in rep.checks)
