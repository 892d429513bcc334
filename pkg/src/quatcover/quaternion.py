"""Exact arithmetic in the Hamilton quaternions over Q and its integral orders.

Three lattices are fixed once and for all:

* ``LIPSCHITZ``  M'  with Z-basis 1, i, j, k
* ``HURWITZ``    M   with Z-basis 1, i, j, u   where u = (1+i+j+k)/2
* ``IDEAL_P``    P = (1+i)M with Z-basis (1+i)*{1, i, j, u}
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from . import linalg


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x)
    return Fraction(x)


@dataclass(frozen=True, slots=True, init=False)
class Quaternion:
    """a + b*i + c*j + d*k with rational coordinates."""

    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction

    def __init__(self, a=0, b=0, c=0, d=0):
        object.__setattr__(self, "a", _frac(a))
        object.__setattr__(self, "b", _frac(b))
        object.__setattr__(self, "c", _frac(c))
        object.__setattr__(self, "d", _frac(d))

    @classmethod
    def from_coords(cls, coords: Iterable) -> "Quaternion":
        a, b, c, d = coords
        return cls(a, b, c, d)

    @property
    def coords(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.a, self.b, self.c, self.d)

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return Quaternion(self.a + other.a, self.b + other.b, self.c + other.c, self.d + other.d)

    __radd__ = __add__

    def __neg__(self):
        return Quaternion(-self.a, -self.b, -self.c, -self.d)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Quaternion(self.a * other, self.b * other, self.c * other, self.d * other)
        if not isinstance(other, Quaternion):
            return NotImplemented
        return multiply(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            f = Fraction(1) / other
            return self * f
        return NotImplemented

    def __bool__(self):
        return any(self.coords)

    def conj(self) -> "Quaternion":
        return Quaternion(self.a, -self.b, -self.c, -self.d)

    def trace(self) -> Fraction:
        return 2 * self.a

    def norm(self) -> Fraction:
        return self.a * self.a + self.b * self.b + self.c * self.c + self.d * self.d

    def inverse(self) -> "Quaternion":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("zero quaternion has no inverse")
        return self.conj() / n

    def to_json(self) -> list[str]:
        return [f"{x.numerator}/{x.denominator}" for x in self.coords]

    @classmethod
    def from_json(cls, data) -> "Quaternion":
        return cls(*(Fraction(s) for s in data))

    def __repr__(self):
        names = ("", "i", "j", "k")
        parts = [f"{x}{n}" for x, n in zip(self.coords, names) if x != 0]
        return "Quaternion(" + (" + ".join(parts) if parts else "0") + ")"


def _coerce(x):
    if isinstance(x, Quaternion):
        return x
    if isinstance(x, (int, Fraction)):
        return Quaternion(x)
    return NotImplemented


def multiply(p: Quaternion, q: Quaternion) -> Quaternion:
    a1, b1, c1, d1 = p.coords
    a2, b2, c2, d2 = q.coords
    return Quaternion(
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    )


def involution_data(q: Quaternion) -> tuple[Quaternion, Fraction, Fraction]:
    """Return (conjugate, reduced trace, reduced norm)."""
    conj = Quaternion(q.trace()) - q
    n = q * conj
    assert n.b == n.c == n.d == 0
    return conj, q.trace(), n.a


ONE = Quaternion(1)
I = Quaternion(0, 1)
J = Quaternion(0, 0, 1)
K = Quaternion(0, 0, 0, 1)
U = Quaternion(Fraction(1, 2), Fraction(1, 2), Fraction(1, 2), Fraction(1, 2))
EPS = -ONE  # the central element of order 2 of the quaternion group


class OrderName(enum.Enum):
    LIPSCHITZ = "Mprime"
    HURWITZ = "M"
    IDEAL_P = "P"


def order_basis(o: OrderName) -> tuple[Quaternion, ...]:
    if o is OrderName.LIPSCHITZ:
        return (ONE, I, J, K)
    if o is OrderName.HURWITZ:
        return (ONE, I, J, U)
    return tuple((ONE + I) * b for b in order_basis(OrderName.HURWITZ))


def basis_matrix(elements: Iterable[Quaternion]) -> list[list[Fraction]]:
    return [list(q.coords) for q in elements]


def coordinates_in(q: Quaternion, basis: tuple[Quaternion, ...]) -> list[Fraction] | None:
    """Rational coordinates of ``q`` with respect to ``basis`` (None if not in the span)."""
    return linalg.solve_left(basis_matrix(basis), list(q.coords))


def order_membership(q: Quaternion, o: OrderName) -> bool:
    x = coordinates_in(q, order_basis(o))
    return x is not None and all(c.denominator == 1 for c in x)


def unit_group(o: OrderName) -> list[Quaternion]:
    """All norm-one elements of M' or M, found by exhaustive search."""
    if o is OrderName.IDEAL_P:
        raise ValueError("P is an ideal, not a ring; it has no unit group")
    # doubled coordinates of a norm-one element lie in [-2, 2]
    units = []
    for twice in itertools.product(range(-2, 3), repeat=4):
        if sum(t * t for t in twice) != 4:
            continue
        q = Quaternion(*(Fraction(t, 2) for t in twice))
        if order_membership(q, o):
            units.append(q)
    units.sort(key=lambda q: q.coords)
    return units


def lattice_index(sub: tuple[Quaternion, ...], sup: tuple[Quaternion, ...]) -> Fraction:
    """Index [sup : sub] as a ratio of covolumes."""
    return abs(linalg.det(basis_matrix(sub)) / linalg.det(basis_matrix(sup)))


def same_lattice(a: Iterable[Quaternion], b: Iterable[Quaternion]) -> bool:
    from .lattices import ZLattice

    return ZLattice(basis_matrix(a)) == ZLattice(basis_matrix(b))


@dataclass(frozen=True)
class IdealPData:
    basis: tuple[Quaternion, ...]
    index_in_M: int
    index_in_Mprime: int
    two_sided: bool
    trace_even: bool


def ideal_p_data() -> IdealPData:
    basis = order_basis(OrderName.IDEAL_P)
    m_basis = order_basis(OrderName.HURWITZ)
    idx_m = lattice_index(basis, m_basis)
    idx_mp = lattice_index(basis, order_basis(OrderName.LIPSCHITZ))
    right = tuple(b * (ONE + I) for b in m_basis)
    two_sided = same_lattice(basis, right)
    trace_even = all(b.trace().denominator == 1 and b.trace() % 2 == 0 for b in basis)
    assert idx_m.denominator == 1 and idx_mp.denominator == 1
    return IdealPData(basis, int(idx_m), int(idx_mp), two_sided, trace_even)


# ---------------------------------------------------------------------------
# M'/2M' as a ring

# F_2[e, e']/(e^2, e'^2) elements are 4-bit tuples in the basis (1, e, e', ee')


def _dual_mul(x: tuple[int, ...], y: tuple[int, ...]) -> tuple[int, ...]:
    a0, a1, a2, a3 = x
    b0, b1, b2, b3 = y
    return (
        (a0 * b0) % 2,
        (a0 * b1 + a1 * b0) % 2,
        (a0 * b2 + a2 * b0) % 2,
        (a0 * b3 + a3 * b0 + a1 * b2 + a2 * b1) % 2,
    )


def _dual_add(x, y):
    return tuple((a + b) % 2 for a, b in zip(x, y))


# images of 1, i, j, k under 1+i -> e, 1+j -> e'
_MOD2_IMAGE = {
    0: (1, 0, 0, 0),
    1: (1, 1, 0, 0),
    2: (1, 0, 1, 0),
    3: (1, 1, 1, 1),
}


def mod2_reduce(q: Quaternion) -> tuple[int, ...]:
    """Class of an element of M' in M'/2M' as a bit-vector in (1, i, j, k)."""
    if any(x.denominator != 1 for x in q.coords):
        raise ValueError(f"{q!r} is not in M'")
    return tuple(int(x) % 2 for x in q.coords)


def mod2_to_dual(bits: tuple[int, ...]) -> tuple[int, ...]:
    out = (0, 0, 0, 0)
    for idx, bit in enumerate(bits):
        if bit:
            out = _dual_add(out, _MOD2_IMAGE[idx])
    return out


@dataclass(frozen=True)
class Mod2Table:
    # table[(x, y)] = class of basis_x * basis_y in M'/2M', x,y in {1,i,j,k}
    table: dict
    isomorphism: bool
    commutative: bool
    image_of_2u: tuple[int, ...]


def mod2_quotient_table() -> Mod2Table:
    names = ("1", "i", "j", "k")
    basis = order_basis(OrderName.LIPSCHITZ)
    table = {}
    hom = True
    for (nx, x), (ny, y) in itertools.product(zip(names, basis), repeat=2):
        prod = mod2_reduce(x * y)
        table[(nx, ny)] = prod
        lhs = mod2_to_dual(prod)
        rhs = _dual_mul(mod2_to_dual(mod2_reduce(x)), mod2_to_dual(mod2_reduce(y)))
        hom = hom and lhs == rhs
    # bijectivity of the additive map on all 16 classes
    images = {mod2_to_dual(bits) for bits in itertools.product((0, 1), repeat=4)}
    commutative = all(table[(a, b)] == table[(b, a)] for a in names for b in names)
    return Mod2Table(
        table=table,
        isomorphism=hom and len(images) == 16,
        commutative=commutative,
        image_of_2u=mod2_to_dual(mod2_reduce(2 * U)),
    )
