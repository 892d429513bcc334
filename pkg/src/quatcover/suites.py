"""Verification suites: one function per topic, merged by ``run_suite``."""

from __future__ import annotations

import itertools
import os
import random
from fractions import Fraction

from . import cubic, homology, lattices, tower
from .lattices import ZLattice
from .quaternion import (
    I, J, K, ONE, U, OrderName, Quaternion, basis_matrix, ideal_p_data, mod2_quotient_table,
    order_basis, order_membership, same_lattice, unit_group,
)
from .report import VerificationReport

SUITES = ("quaternion", "lattice", "homology", "tower", "cubic", "all")
DEFAULT_ALPHA = "2"

# every check id a suite can emit, with its topic anchor
CHECK_INDEX = {
    "quaternion.products": "quaternion/relations",
    "quaternion.unit_groups": "orders/unit-groups",
    "quaternion.ideal_P": "orders/ideal-P",
    "quaternion.P_squared": "orders/ideal-P",
    "quaternion.order_closure": "orders/maximal-order",
    "quaternion.mod2_quotient": "orders/mod-2-quotient",
    "quaternion.axioms_sampled": "quaternion/involution",
    "lattice.AE_principal": "product-polarization/A_E",
    "lattice.Balpha_integral": "B_alpha/integrality",
    "lattice.Balpha_principal": "B_alpha/principality",
    "lattice.trace_normalization": "pairing-normalization",
    "lattice.Balpha_M_stable": "B_alpha/M-action",
    "lattice.Balpha_balance_identity": "B_alpha/defining-lattice",
    "lattice.W2_stable": "atkin-lehner/lattice",
    "lattice.W2_pairing": "atkin-lehner/pairing",
    "lattice.W2_square": "atkin-lehner/square",
    "lattice.pel_values": "prym-pairing/values",
    "lattice.pel_antisymmetric": "prym-pairing/alternating",
    "lattice.standard_basis": "prym-pairing/standard-basis",
    "lattice.prym_vs_b_alpha_literal": "prym-lattice/identification",
    "lattice.chi_z_zero": "kernel-lemma/chi(z)=0",
    "lattice.kernel_chi": "kernel-lemma/kernel",
    "lattice.u_z_integral": "kernel-lemma/u*z",
    "lattice.psi_intersection": "kernel-lemma/psi-intersection",
    "lattice.psi_sum_direct": "kernel-lemma/direct-sum",
    "homology.boundary_formula": "chain-complex/boundary",
    "homology.H1_covers": "chain-complex/homology",
    "homology.lambda1_cycle": "prym-lattice/lambda1",
    "homology.lambda2_cycle": "prym-lattice/lambda2",
    "homology.H1_Mprime": "prym-lattice/torsion",
    "homology.prym_M_free": "prym-lattice/M-basis",
    "homology.norm_kernel": "double-cover/norm-kernel",
    "tower.admissible_cases": "tower/five-cases",
    "tower.lemma_types": "tower/dimension-count",
    "tower.exclusions": "tower/parity",
    "tower.invariants": "tower/riemann-hurwitz",
    "tower.quotients_five_point": "tower/quotients-five-point",
    "tower.quotients_three_pair": "tower/quotients-three-pair",
    "tower.lifts_normal_form": "tower/lifts",
    "tower.lifts_non_isotropic": "tower/lifts-obstruction",
    "tower.case2_generator": "tower/lifts-normal-form",
    "tower.lifts_trivial": "tower/lifts-sign-characters",
    "cubic.singular_locus": "cubic/singular-locus",
    "cubic.node_ranks": "cubic/nodes",
    "cubic.fp_oracle": "cubic/singular-locus-completeness",
    "cubic.planes": "cubic/planes-and-nodes",
    "cubic.lines": "cubic/lines-through-nodes",
    "cubic.line_control_point": "cubic/lines-through-nodes",
    "cubic.node_cone_lines": "cubic/tangent-cone-lines",
    "cubic.plane_systems": "cubic/plane-systems",
    "cubic.transversality": "cubic/plane-systems-transversal",
    "cubic.plane_pair_intersection": "cubic/dual-plane-intersection",
    "cubic.segre_coordinates": "cubic/segre-coordinates",
    "cubic.symmetry": "cubic/symmetry",
    "cubic.swap": "cubic/moduli-swap",
    "cubic.moduli_invariant": "cubic/moduli-coordinate",
}


def seed() -> int:
    return int(os.environ.get("QUATCOVER_SEED", "0"))


def random_quaternion(rng: random.Random, bound: int = 9) -> Quaternion:
    return Quaternion(*(Fraction(rng.randint(-bound, bound), rng.randint(1, 4)) for _ in range(4)))


def quaternion_suite() -> VerificationReport:
    rep = VerificationReport("quaternion")

    rep.run("quaternion.products", "quaternion/relations", lambda: (
        I * J == K and J * I == -K and I * I == J * J == K * K == -ONE, {}))

    def units():
        um, up = unit_group(OrderName.HURWITZ), unit_group(OrderName.LIPSCHITZ)
        closed = all(order_membership(x * y, OrderName.HURWITZ) and (x * y) in um for x in um for y in um)
        inv = all(x.inverse() == x.conj() for x in up)
        return len(up) == 8 and len(um) == 24 and closed and inv, {
            "units_Mprime": len(up), "units_M": len(um), "closed": closed}

    rep.run("quaternion.unit_groups", "orders/unit-groups", units)

    def ideal():
        d = ideal_p_data()
        alt = (ONE + I, I - ONE, J + K, I + K)
        ok = (d.index_in_M, d.index_in_Mprime) == (4, 2) and d.two_sided and d.trace_even
        ok = ok and same_lattice(alt, d.basis)
        return ok, {"index_in_M": d.index_in_M, "index_in_Mprime": d.index_in_Mprime,
                    "two_sided": d.two_sided, "trace_even": d.trace_even}

    rep.run("quaternion.ideal_P", "orders/ideal-P", ideal)

    def p_squared():
        p = order_basis(OrderName.IDEAL_P)
        pp = ZLattice(basis_matrix(x * y for x in p for y in p), 4)
        two_m = ZLattice(basis_matrix(2 * m for m in order_basis(OrderName.HURWITZ)), 4)
        return pp == two_m, {}

    rep.run("quaternion.P_squared", "orders/ideal-P", p_squared)

    def closure():
        ok = all(
            order_membership(x * y, o)
            for o in (OrderName.LIPSCHITZ, OrderName.HURWITZ)
            for x, y in itertools.product(order_basis(o), repeat=2)
        )
        return ok and order_membership(U, OrderName.HURWITZ) and not order_membership(
            U, OrderName.LIPSCHITZ), {}

    rep.run("quaternion.order_closure", "orders/maximal-order", closure)

    def mod2():
        t = mod2_quotient_table()
        ok = t.isomorphism and t.commutative and t.image_of_2u == (0, 0, 0, 1)
        return ok, {"entries": len(t.table), "image_of_2u": list(t.image_of_2u)}

    rep.run("quaternion.mod2_quotient", "orders/mod-2-quotient", mod2)

    def axioms():
        rng = random.Random(seed())
        bad = 0
        for _ in range(200):
            p, q, r = (random_quaternion(rng) for _ in range(3))
            if (p * q) * r != p * (q * r) or (p * q).trace() != (q * p).trace() \
                    or (p * q).conj() != q.conj() * p.conj() or (p * q).norm() != p.norm() * q.norm():
                bad += 1
        return bad == 0, {"samples": 200, "seed": seed(), "violations": bad}

    rep.run("quaternion.axioms_sampled", "quaternion/involution", axioms)
    return rep


def lattice_suite() -> VerificationReport:
    rep = VerificationReport("lattice")
    rep.extend(lattices.verify_named_lattices())
    rep.extend(lattices.verify_pel_form())
    rep.extend(lattices.lemma_LA_check())
    return rep


def homology_suite(genus: int = 2) -> VerificationReport:
    rep = VerificationReport("homology", params={"genus": genus})
    G = homology.quaternion_group()
    psi = homology.normal_form_psi(genus)
    if genus < 2:
        raise ValueError("the quaternion cover needs genus >= 2")
    g_pm = 4 * genus - 3
    g_tilde = 8 * genus - 7

    if genus == 2:
        def octagon_boundary():
            fox = homology.fox_boundary(2, psi, G)
            one, i, j = G.index("1"), G.index("ihat"), G.index("jhat")
            want = {"alpha1": {}, "beta1": {one: -1, i: 1}, "alpha2": {}, "beta2": {one: -1, j: 1}}
            return fox == want, {"d2F": {k: {G.elements[h]: c for h, c in v.items()}
                                         for k, v in fox.items()}}

        rep.run("homology.boundary_formula", "chain-complex/boundary", octagon_boundary)

    def complexes():
        zg = homology.build_surface_complex(genus, psi, homology.regular_module(G))
        v4 = homology.build_surface_complex(
            genus, {k: homology.to_v4(v) for k, v in psi.items()},
            homology.regular_module(homology.klein_four()))
        mp = homology.build_surface_complex(genus, psi, homology.lipschitz_module())
        h = {
            "ZG": [homology.homology(zg, i).to_json() for i in range(3)],
            "ZV4": [homology.homology(v4, i).to_json() for i in range(3)],
            "Mprime": [homology.homology(mp, i).to_json() for i in range(3)],
        }
        ok = (
            h["ZG"][1] == {"free_rank": 2 * g_tilde, "torsion": []}
            and h["ZG"][0] == {"free_rank": 1, "torsion": []}
            and h["ZV4"][1] == {"free_rank": 2 * g_pm, "torsion": []}
            and h["Mprime"][1] == {"free_rank": 2 * (g_tilde - g_pm), "torsion": [2]}
        )
        euler = zg.euler_characteristic() == 8 * (2 - 2 * genus) == sum(
            (-1) ** i * h["ZG"][i]["free_rank"] for i in range(3))
        return ok and euler, {"homology": h, "euler_ok": euler}

    rep.run("homology.H1_covers", "chain-complex/homology", complexes)

    if genus == 2:
        rep.extend(homology.verify_prym_basis())

    def norm_kernel():
        got = {g: homology.norm_kernel_count(g) for g in (1, 2, 3)}
        return all(v == 2 ** (2 * g - 1) for g, v in got.items()), {"counts": got}

    rep.run("homology.norm_kernel", "double-cover/norm-kernel", norm_kernel)
    return rep


def run_suite(name: str, params: dict | None = None) -> VerificationReport:
    params = dict(params or {})
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    genus = int(params.get("genus", 2))
    prime = int(params.get("prime", 11))
    if genus < 1 or prime < 2:
        raise ValueError("genus must be >= 1 and prime >= 2")

    alpha_text = params.get("alpha")
    if name == "cubic" and alpha_text is None:
        raise ValueError("the cubic suite needs --alpha (p/q or 'symbolic')")

    def cubic_part():
        alpha = cubic.parse_alpha(str(alpha_text or DEFAULT_ALPHA))
        if alpha == 0:
            raise ValueError("alpha must be nonzero")
        return cubic.verify_cubic(alpha, prime)

    parts = {
        "quaternion": quaternion_suite,
        "lattice": lattice_suite,
        "homology": lambda: homology_suite(genus),
        "tower": lambda: tower.verify_tower(genus),
        "cubic": cubic_part,
    }
    names = [n for n in SUITES if n != "all"] if name == "all" else [name]
    rep = VerificationReport(name, params={
        "alpha": str(alpha_text or DEFAULT_ALPHA) if "cubic" in names else None,
        "genus": genus,
        "prime": prime,
        "seed": seed(),
    })
    rep.params = {k: v for k, v in rep.params.items() if v is not None}
    for n in names:
        rep.extend(parts[n]())
    return rep
