from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from quatcover.quaternion import (
    EPS, I, J, K, ONE, U, OrderName, Quaternion, ideal_p_data, involution_data, mod2_quotient_table,
    mod2_reduce, multiply, order_basis, order_membership, same_lattice, unit_group,
)

coord = st.fractions(min_value=-20, max_value=20, max_denominator=6)
quats = st.builds(Quaternion, coord, coord, coord, coord)


def test_relations():
    assert multiply(I, J) == K
    assert multiply(J, I) == -K
    assert I * I == J * J == K * K == EPS
    q = Quaternion(1, 2, -3, Fraction(1, 2))
    assert ONE * q == q == q * ONE


def test_involution_examples():
    conj, tr, nm = involution_data(Quaternion(1, 2))
    assert tr == 2
    assert involution_data(I)[0] == -I
    assert involution_data(U)[2] == 1


@settings(max_examples=300, deadline=None)
@given(quats, quats, quats)
def test_algebra_axioms(p, q, r):
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert (p * q).trace() == (q * p).trace()
    assert (p * q).conj() == q.conj() * p.conj()
    assert (p * q).norm() == p.norm() * q.norm()
    conj, tr, nm = involution_data(p)
    assert conj == p.conj() and nm == p.norm()


def test_membership():
    assert order_membership(U, OrderName.HURWITZ)
    assert not order_membership(U, OrderName.LIPSCHITZ)
    assert order_membership(ONE, OrderName.LIPSCHITZ)
    assert not order_membership((ONE + I) / 2, OrderName.HURWITZ)


@given(st.lists(st.integers(-5, 5), min_size=4, max_size=4), st.booleans())
def test_hurwitz_membership_rule(coords, half):
    # M = all-integral or all half-odd-integral coordinates
    if half:
        q = Quaternion(*(Fraction(2 * c + 1, 2) for c in coords))
    else:
        q = Quaternion(*coords)
    assert order_membership(q, OrderName.HURWITZ)
    mixed = Quaternion(Fraction(2 * coords[0] + 1, 2), *coords[1:])
    assert not order_membership(mixed, OrderName.HURWITZ)


def test_unit_groups():
    up = unit_group(OrderName.LIPSCHITZ)
    um = unit_group(OrderName.HURWITZ)
    assert len(up) == 8 and len(um) == 24
    assert all(u * u.conj() == ONE for u in um)
    assert all(u.inverse() == u.conj() for u in up)
    assert all(x * y in um for x in um for y in um)
    with pytest.raises(ValueError):
        unit_group(OrderName.IDEAL_P)


def test_ideal_p():
    d = ideal_p_data()
    assert (d.index_in_M, d.index_in_Mprime) == (4, 2)
    assert d.two_sided and d.trace_even
    assert same_lattice((ONE + I, I - ONE, J + K, I + K), d.basis)


def test_bases_closed():
    for o in (OrderName.LIPSCHITZ, OrderName.HURWITZ):
        b = order_basis(o)
        assert all(order_membership(x * y, o) for x in b for y in b)


def test_mod2_table():
    t = mod2_quotient_table()
    assert t.isomorphism and t.commutative
    assert len(t.table) == 16
    assert t.image_of_2u == (0, 0, 0, 1)
    assert mod2_reduce((ONE + I) * (ONE + I)) == (0, 0, 0, 0)
    assert mod2_reduce(I * J) == mod2_reduce(J * I)


def test_json_round_trip():
    assert U.to_json() == ["1/2", "1/2", "1/2", "1/2"]
    assert Quaternion.from_json(U.to_json()) == U
