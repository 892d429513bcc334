"""Quaternionic rank-2 modules, skew-hermitian pairings and their Z-lattices.

Vectors of B^2 live in Q^8 through the fixed coordinates

    (lambda_1 (x) {1, i, j, k},  lambda_2 (x) {1, i, j, k})

and every lattice below is a ``ZLattice`` in that space. B acts on the left.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from . import linalg
from .quaternion import I, J, K, ONE, U, OrderName, Quaternion, order_basis
from .report import VerificationReport

HALF = Fraction(1, 2)
QBASIS = (ONE, I, J, K)


class ZLattice:
    """A finitely generated subgroup of Q^n, kept in Hermite normal form."""

    def __init__(self, generators: Sequence[Sequence], ambient_dim: int | None = None):
        rows = [[Fraction(x) for x in row] for row in generators]
        if ambient_dim is None:
            if not rows:
                raise ValueError("ambient_dim is required for an empty generating set")
            ambient_dim = len(rows[0])
        if any(len(row) != ambient_dim for row in rows):
            raise ValueError("generator length does not match ambient dimension")
        self.ambient_dim = ambient_dim
        den = linalg.common_denominator(rows) if rows else 1
        h = linalg.hnf([[int(x * den) for x in row] for row in rows]) if rows else []
        self.basis = tuple(tuple(Fraction(x, den) for x in row) for row in h)

    @property
    def rank(self) -> int:
        return len(self.basis)

    def __eq__(self, other):
        if not isinstance(other, ZLattice):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.basis == other.basis

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __repr__(self):
        return f"ZLattice(rank={self.rank}, ambient_dim={self.ambient_dim})"

    def __add__(self, other: "ZLattice") -> "ZLattice":
        self._same_space(other)
        return ZLattice(list(self.basis) + list(other.basis), self.ambient_dim)

    def __and__(self, other: "ZLattice") -> "ZLattice":
        self._same_space(other)
        if not self.basis or not other.basis:
            return ZLattice([], self.ambient_dim)
        stacked = [list(r) for r in self.basis] + [[-x for x in r] for r in other.basis]
        den = linalg.common_denominator(stacked)
        ker = linalg.integer_left_kernel([[int(x * den) for x in r] for r in stacked])
        r = len(self.basis)
        return ZLattice([linalg.vec_mat(x[:r], self.basis) for x in ker], self.ambient_dim)

    def _same_space(self, other):
        if self.ambient_dim != other.ambient_dim:
            raise ValueError("lattices live in different ambient spaces")

    def coordinates(self, v: Sequence) -> list[Fraction] | None:
        if not self.basis:
            return [] if all(x == 0 for x in v) else None
        return linalg.solve_left([list(r) for r in self.basis], [Fraction(x) for x in v])

    def contains(self, v: Sequence) -> bool:
        x = self.coordinates(v)
        return x is not None and all(c.denominator == 1 for c in x)

    def contains_lattice(self, other: "ZLattice") -> bool:
        return all(self.contains(v) for v in other.basis)

    def index_of(self, sub: "ZLattice") -> int:
        """[self : sub] for a sublattice of equal rank."""
        if sub.rank != self.rank:
            raise ValueError("index is only defined for lattices of equal rank")
        coords = [self.coordinates(v) for v in sub.basis]
        if any(c is None or any(x.denominator != 1 for x in c) for c in coords):
            raise ValueError("not a sublattice")
        d = abs(linalg.det(coords))
        return int(d)

    def meet_subspace(self, span: Sequence[Sequence]) -> "ZLattice":
        """Intersection with the rational span of ``span`` (rows)."""
        ann = linalg.nullspace(span)  # w lies in span(S) iff w . a == 0 for a in ann
        if not ann:
            return self
        m = linalg.matmul([list(r) for r in self.basis], linalg.transpose(ann))
        den = linalg.common_denominator(m)
        ker = linalg.integer_left_kernel([[int(x * den) for x in row] for row in m])
        return ZLattice([linalg.vec_mat(x, self.basis) for x in ker], self.ambient_dim)

    def image(self, proj: Sequence[Sequence]) -> "ZLattice":
        """Image under the linear map ``w -> w @ proj``."""
        rows = [linalg.vec_mat(v, proj) for v in self.basis]
        return ZLattice(rows, len(proj[0]))

    def to_json(self) -> dict:
        return {
            "ambient_dim": self.ambient_dim,
            "basis": [[f"{x.numerator}/{x.denominator}" for x in row] for row in self.basis],
        }

    @classmethod
    def from_json(cls, data: dict) -> "ZLattice":
        return cls([[Fraction(s) for s in row] for row in data["basis"]], data["ambient_dim"])


@dataclass(frozen=True)
class LatticeOps:
    sum: ZLattice
    intersection: ZLattice
    index: int | None  # None when b is not a finite-index sublattice of a
    equal: bool


def lattice_ops(a: ZLattice, b: ZLattice) -> LatticeOps:
    if a.ambient_dim != b.ambient_dim:
        raise ValueError("lattices live in different ambient spaces")
    index = None
    if a.rank == b.rank and a.contains_lattice(b):
        index = a.index_of(b)
    return LatticeOps(a + b, a & b, index, a == b)


# ---------------------------------------------------------------------------
# B^2 and skew-hermitian forms


@dataclass(frozen=True)
class QuatVector2:
    c1: Quaternion
    c2: Quaternion

    def __add__(self, other):
        return QuatVector2(self.c1 + other.c1, self.c2 + other.c2)

    def __neg__(self):
        return QuatVector2(-self.c1, -self.c2)

    def __sub__(self, other):
        return self + (-other)

    def lmul(self, m: Quaternion) -> "QuatVector2":
        return QuatVector2(m * self.c1, m * self.c2)

    def rmul(self, m: Quaternion) -> "QuatVector2":
        return QuatVector2(self.c1 * m, self.c2 * m)

    def coords(self) -> list[Fraction]:
        return list(self.c1.coords) + list(self.c2.coords)

    @classmethod
    def from_coords(cls, v: Sequence) -> "QuatVector2":
        return cls(Quaternion(*v[:4]), Quaternion(*v[4:8]))


LAMBDA1 = QuatVector2(ONE, Quaternion())
LAMBDA2 = QuatVector2(Quaternion(), ONE)


def q_basis_vectors(basis: tuple[QuatVector2, QuatVector2] = (LAMBDA1, LAMBDA2)) -> list[QuatVector2]:
    """The eight vectors g*b for b in ``basis`` and g in {1, i, j, k}."""
    return [b.lmul(g) for b in basis for g in QBASIS]


@dataclass(frozen=True)
class SkewHermitianForm:
    """<sum m_i l_i, sum n_j l_j> = scale * Tr(sum v_ij conj(m_i) n_j)."""

    v11: Quaternion
    v12: Quaternion
    v21: Quaternion
    v22: Quaternion
    scale: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "scale", Fraction(self.scale))
        m = self.matrix
        for i, j in itertools.product(range(2), repeat=2):
            if m[j][i] != -m[i][j].conj():
                raise ValueError(f"v[{j}][{i}] != -conj(v[{i}][{j}]); form is not skew-hermitian")

    @property
    def matrix(self) -> tuple[tuple[Quaternion, Quaternion], tuple[Quaternion, Quaternion]]:
        return ((self.v11, self.v12), (self.v21, self.v22))

    def with_scale(self, s) -> "SkewHermitianForm":
        return SkewHermitianForm(self.v11, self.v12, self.v21, self.v22, Fraction(s))

    def to_json(self) -> dict:
        return {
            "v": [[q.to_json() for q in row] for row in self.matrix],
            "scale": f"{self.scale.numerator}/{self.scale.denominator}",
        }


def pairing_eval(form: SkewHermitianForm, u: QuatVector2, w: QuatVector2) -> Fraction:
    m = form.matrix
    us, ws = (u.c1, u.c2), (w.c1, w.c2)
    total = Quaternion()
    for i in range(2):
        ci = us[i].conj()
        for j in range(2):
            if m[i][j] and us[i] and ws[j]:
                total = total + m[i][j] * ci * ws[j]
    return form.scale * total.trace()


# the pairing on the Prym lattice in the basis lambda_1, lambda_2
PEL_FORM = SkewHermitianForm(I + J, (-ONE - I) * HALF, (ONE - I) * HALF, Quaternion())
# <m1 e + m2 f, n1 e + n2 f> = (1/2) Tr(conj(m1) n2 - conj(m2) n1)
STANDARD_FORM = SkewHermitianForm(Quaternion(), ONE, -ONE, Quaternion(), HALF)


def solve_form_matrix(form: SkewHermitianForm,
                      newbasis: tuple[QuatVector2, QuatVector2]) -> SkewHermitianForm:
    """Matrix of ``form`` in another B-basis, solved from pairing evaluations.

    The 16 rational unknowns are the coordinates of v'_ij; the equations are
    the 64 values of the form on the Q-basis g*l'_i (g in 1, i, j, k).
    """
    vecs = q_basis_vectors(newbasis)
    if linalg.rank([v.coords() for v in vecs]) != 8:
        raise ValueError("new basis is not a B-basis of B^2")
    rows, rhs = [], []
    for (a, g), (b, h) in itertools.product(
        itertools.product(range(2), QBASIS), repeat=2
    ):
        value = pairing_eval(form, newbasis[a].lmul(g), newbasis[b].lmul(h))
        # scale * Tr(v'_ab * conj(g) * h) is linear in the coordinates of v'_ab
        x = g.conj() * h
        row = [Fraction(0)] * 16
        for t, e in enumerate(QBASIS):
            row[4 * (2 * a + b) + t] = form.scale * (e * x).trace()
        rows.append(row)
        rhs.append(value)
    sol = linalg.solve_left(linalg.transpose(rows), rhs)
    if sol is None:
        raise ValueError("form is not expressible in the new basis")
    if linalg.rank(rows) != 16:
        raise ValueError("form matrix is not uniquely determined")
    q = [Quaternion(*sol[4 * n: 4 * n + 4]) for n in range(4)]
    return SkewHermitianForm(q[0], q[1], q[2], q[3], form.scale)


@dataclass(frozen=True)
class GramData:
    matrix: list[list[Fraction]]
    det: Fraction
    integral: bool


def gram_matrix(form: SkewHermitianForm, lat: ZLattice) -> GramData:
    if lat.rank != 8:
        raise ValueError("Gram matrix requires a rank-8 lattice")
    vecs = [QuatVector2.from_coords(v) for v in lat.basis]
    g = [[pairing_eval(form, x, y) for y in vecs] for x in vecs]
    integral = all(x.denominator == 1 for row in g for x in row)
    return GramData(g, linalg.det(g), integral)


def module_lattice(coeffs1: Iterable[Quaternion], coeffs2: Iterable[Quaternion]) -> ZLattice:
    """The lattice X*l_1 + Y*l_2 for Z-bases X, Y of two Z-modules in B."""
    rows = [QuatVector2(x, Quaternion()).coords() for x in coeffs1]
    rows += [QuatVector2(Quaternion(), y).coords() for y in coeffs2]
    return ZLattice(rows, 8)


def span_lattice(vectors: Iterable[QuatVector2]) -> ZLattice:
    return ZLattice([v.coords() for v in vectors], 8)


M_BASIS = order_basis(OrderName.HURWITZ)
MP_BASIS = order_basis(OrderName.LIPSCHITZ)
P_BASIS = order_basis(OrderName.IDEAL_P)


def a_e_lattice() -> ZLattice:
    return module_lattice(MP_BASIS, MP_BASIS)


def b_alpha_lattice() -> ZLattice:
    return module_lattice(M_BASIS, P_BASIS)


def w2(v: QuatVector2) -> QuatVector2:
    """Right multiplication by (1+i)/2 tensored with [[0, -1], [2, 0]] on (e, f)."""
    r = (ONE + I) * HALF
    return QuatVector2(-(v.c2 * r), 2 * (v.c1 * r))


def _stable(lat: ZLattice, f: Callable[[QuatVector2], QuatVector2]) -> bool:
    img = span_lattice(f(QuatVector2.from_coords(v)) for v in lat.basis)
    return img == lat


def verify_named_lattices() -> VerificationReport:
    rep = VerificationReport("lattice.named")
    b_al = b_alpha_lattice()
    a_e = a_e_lattice()

    def a_e_principal():
        g = gram_matrix(STANDARD_FORM, a_e)
        # up to the basis permutation (1..4 | 5..8) the Gram matrix is [[0, I], [-I, 0]]
        block = [[Fraction(int(i == j)) for j in range(4)] for i in range(4)]
        z = [[Fraction(0)] * 4 for _ in range(4)]
        std = [r1 + r2 for r1, r2 in zip(z, block)] + [
            [-x for x in r1] + r2 for r1, r2 in zip(block, z)
        ]
        return g.det == 1 and g.integral and g.matrix == std, {"det": g.det}

    rep.run("lattice.AE_principal", "product-polarization/A_E", a_e_principal)

    def integral():
        g = gram_matrix(STANDARD_FORM, b_al)
        return g.integral, {"scale": STANDARD_FORM.scale}

    rep.run("lattice.Balpha_integral", "B_alpha/integrality", integral)

    def principal():
        g = gram_matrix(STANDARD_FORM, b_al)
        return g.det == 1, {"det": g.det, "scale": STANDARD_FORM.scale}

    rep.run("lattice.Balpha_principal", "B_alpha/principality", principal)

    def normalization():
        d_half = gram_matrix(STANDARD_FORM, b_al).det
        d_one = gram_matrix(STANDARD_FORM.with_scale(1), b_al).det
        ok = d_half == 1 and d_one == 256
        return ("flagged" if ok else False), {
            "det_at_half_trace": d_half,
            "det_at_full_trace": d_one,
            "note": "unimodular only with the (1/2)Tr normalization",
        }

    rep.run("lattice.trace_normalization", "pairing-normalization", normalization)

    def m_stable():
        bad = [
            (str(m), i)
            for m in M_BASIS
            for i, v in enumerate(b_al.basis)
            if not b_al.contains(QuatVector2.from_coords(v).lmul(m).coords())
        ]
        return not bad, {"violations": bad}

    rep.run("lattice.Balpha_M_stable", "B_alpha/M-action", m_stable)

    def balance():
        # 2M (x) <e/2, f> + P (x) <e, f>
        half_e = [QuatVector2(2 * m * HALF, Quaternion()) for m in M_BASIS]
        two_f = [QuatVector2(Quaternion(), 2 * m) for m in M_BASIS]
        p_e = [QuatVector2(p, Quaternion()) for p in P_BASIS]
        p_f = [QuatVector2(Quaternion(), p) for p in P_BASIS]
        lhs = span_lattice(half_e + two_f + p_e + p_f)
        return lhs == b_al, {"rank": lhs.rank}

    rep.run("lattice.Balpha_balance_identity", "B_alpha/defining-lattice", balance)

    rep.run("lattice.W2_stable", "atkin-lehner/lattice",
            lambda: (_stable(b_al, w2), {}))

    def w2_pairing():
        vecs = [QuatVector2.from_coords(v) for v in b_al.basis]
        bad = [
            (a, b)
            for (a, x), (b, y) in itertools.product(enumerate(vecs), repeat=2)
            if pairing_eval(STANDARD_FORM, w2(x), w2(y)) != pairing_eval(STANDARD_FORM, x, y)
        ]
        return not bad, {"pairs_checked": len(vecs) ** 2, "violations": bad}

    rep.run("lattice.W2_pairing", "atkin-lehner/pairing", w2_pairing)

    def w2_square():
        vecs = q_basis_vectors()
        ok = all(w2(w2(v)) == v.rmul(-I) for v in vecs)
        return ok, {"square": "right multiplication by -i"}

    rep.run("lattice.W2_square", "atkin-lehner/square", w2_square)
    return rep


def pel_pairing_values(form: SkewHermitianForm = PEL_FORM) -> tuple[list[Fraction], list[Fraction]]:
    """<l1, g l1> and <l1, g l2> for g in 1, i, j, k."""
    a = [pairing_eval(form, LAMBDA1, LAMBDA1.lmul(g)) for g in QBASIS]
    b = [pairing_eval(form, LAMBDA1, LAMBDA2.lmul(g)) for g in QBASIS]
    return a, b


def standard_basis_change(sign: int) -> tuple[QuatVector2, QuatVector2]:
    """l'_1 = -(1+i) l_1 + sign*(i+k) l_2 and l'_2 = l_2."""
    l1 = QuatVector2(-(ONE + I), (I + K) * sign)
    return l1, LAMBDA2


def verify_pel_form() -> VerificationReport:
    rep = VerificationReport("lattice.pel")

    def values():
        a, b = pel_pairing_values()
        ok = a == [0, -2, -2, 0] and b == [-1, 1, 0, 0]
        return ok, {"l1_gl1": a, "l1_gl2": b}

    rep.run("lattice.pel_values", "prym-pairing/values", values)

    def skew():
        vecs = q_basis_vectors()
        ok = all(
            pairing_eval(PEL_FORM, x, y) == -pairing_eval(PEL_FORM, y, x)
            for x, y in itertools.product(vecs, repeat=2)
        )
        return ok, {}

    rep.run("lattice.pel_antisymmetric", "prym-pairing/alternating", skew)

    def change_of_basis():
        minus = solve_form_matrix(PEL_FORM, standard_basis_change(-1))
        plus = solve_form_matrix(PEL_FORM, standard_basis_change(+1))
        target = ((Quaternion(), ONE), (-ONE, Quaternion()))
        ok = minus.matrix == target
        details = {"coefficient_minus": minus.to_json(), "coefficient_plus": plus.to_json()}
        if not ok:
            return False, details
        details["note"] = "standard symplectic matrix only for -(i+k); the +(i+k) variant is not"
        return ("flagged" if plus.matrix != target else True), details

    rep.run("lattice.standard_basis", "prym-pairing/standard-basis", change_of_basis)

    def prym_equals_b_alpha_literal():
        l1p, l2p = standard_basis_change(-1)
        lhs = module_lattice(M_BASIS, M_BASIS)
        rhs = span_lattice([l1p.lmul(p) for p in P_BASIS] + [l2p.lmul(m) for m in M_BASIS])
        ops = lattice_ops(lhs, rhs)
        if ops.equal:
            return True, {}
        return "flagged", {
            "reading": "left coefficients: P*l'_1 + M*l'_2",
            "equal": False,
            "index_in_M_lambda": ops.index,
        }

    rep.run("lattice.prym_vs_b_alpha_literal", "prym-lattice/identification",
            prym_equals_b_alpha_literal)
    return rep


# ---------------------------------------------------------------------------
# the kernel / image lemma for chi(x, y) = x(i-1) + y(j-1) and psi(x) = x(i-1, j-1)


def _right_mul_matrix(q: Quaternion) -> list[list[Fraction]]:
    """Matrix of x -> x*q on row coordinates (1, i, j, k)."""
    return [list((e * q).coords) for e in QBASIS]


def chi_matrix() -> list[list[Fraction]]:
    """8 x 4 matrix of chi acting on row vectors."""
    return _right_mul_matrix(I - ONE) + _right_mul_matrix(J - ONE)


def psi_image_span() -> list[list[Fraction]]:
    return [QuatVector2(g * (I - ONE), g * (J - ONE)).coords() for g in QBASIS]


def lemma_LA_check() -> VerificationReport:
    rep = VerificationReport("lattice.kernel_lemma")
    z = QuatVector2(I + ONE, -J - ONE)
    mp2 = module_lattice(MP_BASIS, MP_BASIS)

    def chi(v: QuatVector2) -> Quaternion:
        return v.c1 * (I - ONE) + v.c2 * (J - ONE)

    rep.run("lattice.chi_z_zero", "kernel-lemma/chi(z)=0",
            lambda: (not chi(z), {"chi_z": chi(z).to_json()}))

    def kernel_equality():
        ker = [[Fraction(x) for x in row] for row in linalg.integer_left_kernel(
            [[int(x) for x in row] for row in chi_matrix()])]
        lhs = ZLattice(ker, 8)
        rhs = span_lattice(z.lmul(m) for m in M_BASIS)
        return lhs == rhs and lhs.rank == 4, {"rank": lhs.rank}

    rep.run("lattice.kernel_chi", "kernel-lemma/kernel", kernel_equality)

    def u_z_integral():
        uz = z.lmul(U)
        return mp2.contains(uz.coords()), {"u_times_z": [uz.c1.to_json(), uz.c2.to_json()]}

    rep.run("lattice.u_z_integral", "kernel-lemma/u*z", u_z_integral)

    def psi_intersection():
        lhs = mp2.meet_subspace(psi_image_span())
        rhs = span_lattice(QuatVector2(m * (I - ONE), m * (J - ONE)) for m in M_BASIS)
        return lhs == rhs, {"rank": lhs.rank}

    rep.run("lattice.psi_intersection", "kernel-lemma/psi-intersection", psi_intersection)

    def direct_sum():
        proj = linalg.transpose(linalg.nullspace(psi_image_span()))  # kernel = psi(B)
        m10 = module_lattice(M_BASIS, [])
        lhs = mp2.image(proj)
        rhs = m10.image(proj)
        direct = rhs.rank == 4  # M(1,0) meets psi(B) only in 0
        return lhs == rhs and direct, {"quotient_rank": lhs.rank, "direct": direct}

    rep.run("lattice.psi_sum_direct", "kernel-lemma/direct-sum", direct_sum)
    return rep
