"""Cellular chain complexes of surface covers with group-ring coefficients.

The surface of genus g has one 0-cell v, 2g 1-cells (alpha_k, beta_k) and one
2-cell F attached along r = [alpha_1, beta_1] ... [alpha_g, beta_g]. Chains
with coefficients in a right module M of a finite group are row vectors;
the boundary of a cell is sum_x (c_x acting on M) (x) x with c_x the Fox
derivative of r (or of the 1-cell) pushed through psi.

``ChainComplex`` stores the column-convention matrices d2: C2 -> C1 and
d1: C1 -> C0, so that ``d1 @ d2 == 0``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from . import linalg
from .lattices import ZLattice
from .quaternion import EPS, I, J, K, ONE, U, Quaternion
from .report import VerificationReport


class FiniteGroupSpec:
    """A finite group given by labels and a multiplication table of indices."""

    def __init__(self, name: str, elements: Sequence[str], table: Sequence[Sequence[int]]):
        self.name = name
        self.elements = list(elements)
        self.table = [list(row) for row in table]
        n = len(self.elements)
        if len(self.table) != n or any(len(row) != n for row in self.table):
            raise ValueError("multiplication table has the wrong shape")
        ids = [e for e in range(n) if all(self.table[e][x] == x == self.table[x][e] for x in range(n))]
        if len(ids) != 1:
            raise ValueError("table has no unique identity")
        self.identity = ids[0]
        self._inv = []
        for x in range(n):
            inv = [y for y in range(n) if self.table[x][y] == self.identity]
            if len(inv) != 1 or self.table[inv[0]][x] != self.identity:
                raise ValueError(f"element {self.elements[x]} has no two-sided inverse")
            self._inv.append(inv[0])
        for a, b, c in itertools.product(range(n), repeat=3):
            if self.table[self.table[a][b]][c] != self.table[a][self.table[b][c]]:
                raise ValueError("table is not associative")
        self._index = {lab: i for i, lab in enumerate(self.elements)}

    @property
    def order(self) -> int:
        return len(self.elements)

    def index(self, label: str) -> int:
        return self._index[label]

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self._inv[a]

    def word(self, letters: Sequence[int]) -> int:
        out = self.identity
        for x in letters:
            out = self.mul(out, x)
        return out

    def commutator(self, a: int, b: int) -> int:
        return self.word([a, b, self.inv(a), self.inv(b)])

    def __repr__(self):
        return f"FiniteGroupSpec({self.name!r}, order={self.order})"


Q8_LABELS = ("1", "-1", "ihat", "-ihat", "jhat", "-jhat", "khat", "-khat")
Q8_VALUES = (ONE, EPS, I, -I, J, -J, K, -K)
V4_LABELS = ("1", "ihat", "jhat", "khat")


def quaternion_group() -> FiniteGroupSpec:
    idx = {q: n for n, q in enumerate(Q8_VALUES)}
    table = [[idx[p * q] for q in Q8_VALUES] for p in Q8_VALUES]
    return FiniteGroupSpec("G", Q8_LABELS, table)


def klein_four() -> FiniteGroupSpec:
    # ihat, jhat, khat <-> bit patterns 01, 10, 11
    return FiniteGroupSpec("V4", V4_LABELS, [[a ^ b for b in range(4)] for a in range(4)])


def cyclic2() -> FiniteGroupSpec:
    return FiniteGroupSpec("Z/2", ("1", "s"), [[0, 1], [1, 0]])


def trivial_group() -> FiniteGroupSpec:
    return FiniteGroupSpec("1", ("1",), [[0]])


def to_v4(label: str) -> str:
    """Image of an element of G in V4 = G/{+-1}."""
    return label.lstrip("-")


# ---------------------------------------------------------------------------
# modules


@dataclass
class GroupModule:
    """A right Z[group]-module, free of finite rank over Z.

    ``action[h]`` is the integer matrix whose row s holds the coordinates of
    e_s * h.
    """

    name: str
    group: FiniteGroupSpec
    labels: list[str]
    action: list[list[list[int]]]

    def __post_init__(self):
        g = self.group
        n = self.rank
        if linalg.identity(n) != self.action[g.identity]:
            raise ValueError("identity does not act trivially")
        for a, b in itertools.product(range(g.order), repeat=2):
            # right action: (e * a) * b = e * (ab)
            if linalg.matmul(self.action[a], self.action[b]) != self.action[g.mul(a, b)]:
                raise ValueError("action is not a right action")

    @property
    def rank(self) -> int:
        return len(self.labels)

    def rho(self, element: Mapping[int, int]) -> list[list[int]]:
        """Matrix of a group-ring element sum c_h h."""
        out = linalg.zeros(self.rank, self.rank)
        for h, c in element.items():
            if c:
                m = self.action[h]
                for s in range(self.rank):
                    for t in range(self.rank):
                        out[s][t] += c * m[s][t]
        return out


def regular_module(group: FiniteGroupSpec) -> GroupModule:
    n = group.order
    action = []
    for h in range(n):
        m = linalg.zeros(n, n)
        for g in range(n):
            m[g][group.mul(g, h)] = 1
        action.append(m)
    return GroupModule("Z" + group.name, group, list(group.elements), action)


def trivial_module(group: FiniteGroupSpec) -> GroupModule:
    return GroupModule("Z", group, ["1"], [[[1]] for _ in range(group.order)])


def submodule(name: str, ambient: GroupModule, generators: Sequence[Sequence[int]],
              labels: Sequence[str]) -> GroupModule:
    """The Z-span of ``generators`` (rows in ambient coordinates), which must be stable."""
    gens = [list(v) for v in generators]
    action = []
    for h in range(ambient.group.order):
        m = []
        for v in gens:
            image = linalg.vec_mat(v, ambient.action[h])
            coords = linalg.solve_left(gens, image)
            if coords is None or any(c.denominator != 1 for c in coords):
                raise ValueError("span is not stable under the group")
            m.append([int(c) for c in coords])
        action.append(m)
    return GroupModule(name, ambient.group, list(labels), action)


def lipschitz_module() -> GroupModule:
    """M' realised as (1 - eps) ZG with Z-basis (1 - eps) g, g in 1, i, j, k."""
    g = quaternion_group()
    zg = regular_module(g)
    eps = g.index("-1")
    gens = []
    for lab in ("1", "ihat", "jhat", "khat"):
        v = [0] * g.order
        x = g.index(lab)
        v[x] += 1
        v[g.mul(eps, x)] -= 1
        gens.append(v)
    return submodule("Mprime", zg, gens, ["1", "ihat", "jhat", "khat"])


def quaternion_right_matrix(q: Quaternion) -> list[list[int]]:
    """Matrix of x -> x*q on the Z-basis 1, i, j, k of M'."""
    return [[int(c) for c in (e * q).coords] for e in (ONE, I, J, K)]


# ---------------------------------------------------------------------------
# complexes


@dataclass
class ChainComplex:
    d2: list[list[int]]  # C2 -> C1, columns are 2-cells
    d1: list[list[int]]  # C1 -> C0, columns are 1-cells
    labels2: list[str]
    labels1: list[str]
    labels0: list[str]
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        if len(self.d2) != len(self.labels1) or len(self.d1) != len(self.labels0):
            raise ValueError("boundary matrix shape does not match cell labels")
        if any(len(r) != len(self.labels2) for r in self.d2):
            raise ValueError("d2 has wrong number of columns")
        if any(len(r) != len(self.labels1) for r in self.d1):
            raise ValueError("d1 has wrong number of columns")
        if self.d1 and self.d2 and not linalg.is_zero_matrix(linalg.matmul(self.d1, self.d2)):
            raise ValueError("d1 * d2 != 0")

    @property
    def dims(self) -> tuple[int, int, int]:
        return len(self.labels0), len(self.labels1), len(self.labels2)

    def boundary_rows(self, i: int) -> list[list[int]]:
        """Row-convention boundary of C_i (rows are cells of C_i)."""
        if i == 2:
            return linalg.transpose(self.d2) or [[] for _ in self.labels2]
        if i == 1:
            return linalg.transpose(self.d1) or [[] for _ in self.labels1]
        raise ValueError(i)

    def euler_characteristic(self) -> int:
        c0, c1, c2 = self.dims
        return c0 - c1 + c2

    def to_json(self) -> dict:
        return {
            "cells": {"C2": self.labels2, "C1": self.labels1, "C0": self.labels0},
            "d2": self.d2,
            "d1": self.d1,
            "meta": self.meta,
        }


def generator_names(genus: int) -> list[str]:
    return [f"{x}{k}" for k in range(1, genus + 1) for x in ("alpha", "beta")]


def surface_relation(genus: int) -> list[tuple[int, int]]:
    """[alpha_1, beta_1] ... [alpha_g, beta_g] as (generator index, +-1) letters."""
    word = []
    for k in range(genus):
        a, b = 2 * k, 2 * k + 1
        word += [(a, 1), (b, 1), (a, -1), (b, -1)]
    return word


def normal_form_psi(genus: int) -> dict[str, str]:
    """alpha_1 -> ihat, alpha_2 -> jhat, everything else -> 1."""
    psi = {name: "1" for name in generator_names(genus)}
    psi["alpha1"] = "ihat"
    if genus >= 2:
        psi["alpha2"] = "jhat"
    return psi


def fox_boundary(genus: int, psi: Mapping[str, str], group: FiniteGroupSpec) -> dict[str, dict[int, int]]:
    """psi applied to the Fox derivatives of the surface relation.

    Returns generator name -> group-ring element {element index: coefficient}.
    """
    names = generator_names(genus)
    vals = [group.index(psi[n]) for n in names]
    word = surface_relation(genus)
    prefix = group.identity
    out: dict[str, dict[int, int]] = {n: {} for n in names}
    for gen, sign in word:
        term = out[names[gen]]
        if sign == 1:
            term[prefix] = term.get(prefix, 0) + 1
            prefix = group.mul(prefix, vals[gen])
        else:
            prefix = group.mul(prefix, group.inv(vals[gen]))
            term[prefix] = term.get(prefix, 0) - 1
    if prefix != group.identity:
        raise ValueError("psi does not satisfy the surface relation")
    return {n: {h: c for h, c in sorted(t.items()) if c} for n, t in out.items()}


def build_surface_complex(genus: int, psi: Mapping[str, str], coeffs: GroupModule) -> ChainComplex:
    if genus < 1:
        raise ValueError("genus must be at least 1")
    group = coeffs.group
    names = generator_names(genus)
    missing = set(names) - set(psi)
    if missing:
        raise ValueError(f"psi is missing generators {sorted(missing)}")
    fox = fox_boundary(genus, psi, group)
    n = coeffs.rank
    one = group.identity

    # row convention: D2 is n x (2g n), D1 is (2g n) x n
    D2 = [[0] * (len(names) * n) for _ in range(n)]
    for k, name in enumerate(names):
        block = coeffs.rho(fox[name])
        for s in range(n):
            for t in range(n):
                D2[s][k * n + t] = block[s][t]
    D1 = []
    for name in names:
        block = coeffs.rho({group.index(psi[name]): 1, one: -1} if psi[name] != group.elements[one]
                           else {})
        D1.extend(block)
    lab = coeffs.labels
    return ChainComplex(
        d2=linalg.transpose(D2),
        d1=linalg.transpose(D1),
        labels2=[f"{m}⊗F" for m in lab],
        labels1=[f"{m}⊗{x}" for x in names for m in lab],
        labels0=[f"{m}⊗v" for m in lab],
        meta={"genus": genus, "coefficients": coeffs.name, "psi": dict(sorted(psi.items()))},
    )


@dataclass(frozen=True)
class HomologyResult:
    free_rank: int
    torsion: tuple[int, ...]

    def __post_init__(self):
        t = self.torsion
        if any(x <= 1 for x in t) or any(t[i + 1] % t[i] for i in range(len(t) - 1)):
            raise ValueError("torsion must be elementary divisors > 1 dividing successively")

    def to_json(self) -> dict:
        return {"free_rank": self.free_rank, "torsion": list(self.torsion)}


def _rank_int(m) -> int:
    return linalg.rank(m) if m and m[0] else 0


def homology(c: ChainComplex, i: int) -> HomologyResult:
    dims = c.dims
    if i not in (0, 1, 2):
        raise ValueError("a surface complex has homology in degrees 0, 1, 2 only")
    d_out = {0: None, 1: c.d1, 2: c.d2}[i]
    d_in = {0: c.d1, 1: c.d2, 2: None}[i]
    r_out = _rank_int(d_out) if d_out else 0
    r_in = _rank_int(d_in) if d_in else 0
    free = dims[i] - r_out - r_in
    torsion: tuple[int, ...] = ()
    if d_in and d_in[0]:
        _, diag, _ = linalg.smith_normal_form(d_in)
        torsion = tuple(x for x in diag if x > 1)
    return HomologyResult(free, torsion)


# ---------------------------------------------------------------------------
# the Prym lattice inside H_1 of the M'-complex


def _m_chain(coeffs: Sequence[Quaternion]) -> list:
    """A 1-chain sum m_x x of the genus-2 M'-complex as a rational row vector."""
    return [c for q in coeffs for c in q.coords]


def prym_cycles() -> tuple[list, list]:
    zero = Quaternion()
    lam1 = [ONE + I, zero, -(ONE + J), zero]  # on alpha1, beta1, alpha2 (= gamma), beta2 (= delta)
    lam2 = [zero, ONE, zero, zero]
    return lam1, lam2


def verify_prym_basis() -> VerificationReport:
    rep = VerificationReport("homology.prym")
    mp = lipschitz_module()
    cx = build_surface_complex(2, normal_form_psi(2), mp)
    D1 = cx.boundary_rows(1)
    D2 = cx.boundary_rows(2)
    lam1, lam2 = prym_cycles()

    def is_cycle(lam):
        v = linalg.vec_mat(_m_chain(lam), D1)
        return all(x == 0 for x in v), {"boundary": v}

    rep.run("homology.lambda1_cycle", "prym-lattice/lambda1", lambda: is_cycle(lam1))
    rep.run("homology.lambda2_cycle", "prym-lattice/lambda2", lambda: is_cycle(lam2))

    def h1():
        h = homology(cx, 1)
        return h.free_rank == 8 and h.torsion == (2,), h.to_json()

    rep.run("homology.H1_Mprime", "prym-lattice/torsion", h1)

    def span():
        # w -> w @ proj has kernel exactly the rational span of the boundaries
        proj = linalg.transpose(linalg.nullspace(D2))
        cycles = linalg.integer_left_kernel(D1)
        full = ZLattice(cycles, 16).image(proj)
        m_basis = (ONE, I, J, U)
        gens = []
        for lam in (lam1, lam2):
            for b in m_basis:
                gens.append(linalg.vec_mat(_m_chain([b * q for q in lam]), proj))
        sub = ZLattice(gens, len(proj[0]))
        return full == sub and full.rank == 8, {"rank": full.rank, "generated_rank": sub.rank}

    rep.run("homology.prym_M_free", "prym-lattice/M-basis", span)
    return rep


# ---------------------------------------------------------------------------
# kernel of the push-forward for a double cover, over F_2


def double_cover_complexes(genus: int) -> tuple[ChainComplex, ChainComplex, list[list[int]]]:
    """Complexes of the double cover (alpha_1 -> s) and the base, and the push-forward on C_1."""
    z2 = cyclic2()
    psi = {name: "1" for name in generator_names(genus)}
    psi["alpha1"] = "s"
    cover = build_surface_complex(genus, psi, regular_module(z2))
    base = build_surface_complex(genus, psi, trivial_module(z2))
    # augmentation: x (x) s^e -> x
    push = [[int(j == i // 2) for j in range(2 * genus)] for i in range(4 * genus)]
    return cover, base, push


def norm_kernel_count(genus: int) -> int:
    """|ker(H_1(cover, F_2) -> H_1(base, F_2))| for the double cover alpha_1 -> s."""
    if genus < 1:
        raise ValueError("genus must be at least 1")
    cover, base, push = double_cover_complexes(genus)
    D1c = cover.boundary_rows(1)
    D2c = cover.boundary_rows(2)
    D2b = base.boundary_rows(2)
    nb = 2 * genus
    # pi(z) lies in B_1(base) iff pi(z) is orthogonal to the null space of D2b (mod 2)
    ann = linalg.nullspace_mod2([[x & 1 for x in row] for row in D2b], nb)
    tests = [linalg.vec_mat(row, linalg.transpose(ann)) if ann else [] for row in push]
    cond = [list(a) + list(b) for a, b in zip(D1c, tests)]
    kernel = linalg.nullspace_mod2(linalg.transpose([[x & 1 for x in r] for r in cond]), len(cond))
    dim_k = len(kernel) - linalg.rank_mod2(D2c)
    return 2 ** dim_k
