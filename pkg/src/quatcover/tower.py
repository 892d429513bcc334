"""Riemann-Hurwitz bookkeeping for quaternion towers and related finite counts."""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Mapping, Sequence

from .homology import FiniteGroupSpec, generator_names, klein_four, quaternion_group
from .report import VerificationReport

T_LABELS = ("ihat", "jhat", "khat")


@dataclass(frozen=True)
class TowerSpec:
    g: int
    a_prime: int = 0
    a_i: int = 0
    a_j: int = 0
    a_k: int = 0

    def __post_init__(self):
        if min(self.g, self.a_prime, self.a_i, self.a_j, self.a_k) < 0:
            raise ValueError("genus and branch counts must be non-negative")

    @property
    def a(self) -> int:
        return self.a_prime + self.a_i + self.a_j + self.a_k

    @property
    def parity_ok(self) -> bool:
        return self.a_i % 2 == self.a_j % 2 == self.a_k % 2

    @classmethod
    def parse(cls, text: str) -> "TowerSpec":
        """Parse "g:a'.ai.aj.ak", e.g. "2:0.0.0.0"."""
        try:
            g, rest = text.split(":")
            parts = [int(x) for x in rest.split(".")]
            if len(parts) != 4:
                raise ValueError
            return cls(int(g), *parts)
        except ValueError as exc:
            raise ValueError(f"bad tower spec {text!r}; expected g:a'.ai.aj.ak") from exc

    def __str__(self):
        return f"{self.g}:{self.a_prime}.{self.a_i}.{self.a_j}.{self.a_k}"

    def to_json(self) -> str:
        return str(self)


@dataclass(frozen=True)
class TowerInvariants:
    g_pm: int
    g_tilde: int
    dim_P: int
    dim_M: int
    dim_Shim: int

    @property
    def n(self) -> int:
        return self.dim_P // 2

    def to_json(self) -> dict:
        return {"g_pm": self.g_pm, "g_tilde": self.g_tilde, "dim_P": self.dim_P,
                "dim_M": self.dim_M, "dim_Shim": self.dim_Shim}


def tower_invariants(spec: TowerSpec) -> TowerInvariants:
    g, a, ap = spec.g, spec.a, spec.a_prime
    g_pm = 4 * g - 3 + a - ap
    g_tilde = 8 * g - 7 + 3 * a - ap
    dim_p = 4 * (g - 1) + 2 * a
    dim_m = 3 * g - 3 + a
    if g_pm < 0 or g_tilde < 0 or dim_p < 0:
        raise ValueError(f"tower {spec} has negative genus or dimension")
    n = dim_p // 2
    return TowerInvariants(g_pm, g_tilde, dim_p, dim_m, n * (n - 1) // 2)


def lemma_types(max_g: int = 6, max_a: int = 8) -> list[tuple[int, int]]:
    """(g, a) with n = 2g-2+a >= 2 and 3g-3+a >= n(n-1)/2."""
    out = []
    for g, a in itertools.product(range(max_g + 1), range(max_a + 1)):
        n = 2 * g - 2 + a
        if n >= 2 and 3 * g - 3 + a >= n * (n - 1) // 2:
            out.append((g, a))
    return out


def _local_value(group: FiniteGroupSpec, t: str, sign: int) -> int:
    lab = t if sign > 0 else "-" + t
    return group.index(lab)


def tower_exists(spec: TowerSpec) -> bool:
    """Is there a surjection of the orbifold group onto G with the prescribed local monodromy?

    Points of the first type have monodromy -1, points of the second type
    with label t have monodromy +-t. Surjectivity onto G is equivalent to
    surjectivity onto V4.
    """
    if not spec.parity_ok:
        return False
    G = quaternion_group()
    V = klein_four()
    gens = 2 * spec.g
    second = [t for t, cnt in zip(T_LABELS, (spec.a_i, spec.a_j, spec.a_k)) for _ in range(cnt)]
    eps = G.index("-1")
    for vals in itertools.product(range(4), repeat=gens):
        images = set(vals) | {V.index(t) for t in second}
        span = {0}
        for x in images:
            span |= {s ^ x for s in span}
        if len(span) != 4:
            continue
        # commutators of lifts do not depend on the chosen signs
        lifted = [G.index(V.elements[v]) for v in vals]
        rel = G.identity
        for k in range(spec.g):
            rel = G.mul(rel, G.commutator(lifted[2 * k], lifted[2 * k + 1]))
        for _ in range(spec.a_prime):
            rel = G.mul(rel, eps)
        for t in second:
            rel = G.mul(rel, _local_value(G, t, 1))
        # flipping the sign of one second-type loop multiplies by -1
        if rel == G.identity or (second and rel == eps):
            return True
    return False


def enumerate_admissible(max_g: int = 6) -> list[TowerSpec]:
    """Principally polarizable towers with a' = 0 and dim M >= dim Shim > 0.

    Sorted by (dim P, g) with a_i >= a_j >= a_k.
    """
    out = []
    for g, a in lemma_types(max_g):
        for ai in range(a, -1, -1):
            for aj in range(min(ai, a - ai), -1, -1):
                ak = a - ai - aj
                if ak > aj:
                    continue
                spec = TowerSpec(g, 0, ai, aj, ak)
                if tower_exists(spec):
                    out.append(spec)
    out.sort(key=lambda s: (tower_invariants(s).dim_P, s.g, -s.a_i))
    return out


# ---------------------------------------------------------------------------
# (Z/2)^k covers of P^1


@dataclass(frozen=True)
class AbelianCoverSpec:
    k: int
    inertia: tuple[int, ...]  # bitmask of the inertia element per branch point

    def __post_init__(self):
        if any(not 0 < e < 2 ** self.k for e in self.inertia):
            raise ValueError("inertia elements must be nonzero elements of (Z/2)^k")
        total = 0
        for e in self.inertia:
            total ^= e
        if total:
            raise ValueError("inertia elements do not sum to zero")

    @classmethod
    def from_vectors(cls, k: int, vectors: Sequence[Sequence[int]]) -> "AbelianCoverSpec":
        return cls(k, tuple(sum(b << i for i, b in enumerate(v)) for v in vectors))


def five_point_config() -> AbelianCoverSpec:
    """Five points, inertia e1, e2, e3, e4, e1+e2+e3+e4 in (Z/2)^4."""
    return AbelianCoverSpec(4, (1, 2, 4, 8, 15))


def three_pair_config() -> AbelianCoverSpec:
    """Three pairs of points, inertia e1, e1, e2, e2, e3, e3 in (Z/2)^3."""
    return AbelianCoverSpec(3, (1, 1, 2, 2, 4, 4))


def subspaces(k: int) -> list[frozenset[int]]:
    """All subgroups of (Z/2)^k as sets of bitmasks."""
    seen = {frozenset({0})}
    frontier = [frozenset({0})]
    while frontier:
        nxt = []
        for h in frontier:
            for x in range(1, 2 ** k):
                if x in h:
                    continue
                bigger = frozenset(h | {y ^ x for y in h})
                if bigger not in seen:
                    seen.add(bigger)
                    nxt.append(bigger)
        frontier = nxt
    return sorted(seen, key=lambda h: (len(h), sorted(h)))


def quotient_genus(spec: AbelianCoverSpec, h: frozenset[int]) -> int:
    q = 2 ** spec.k // len(h)
    ramified = sum(1 for e in spec.inertia if e not in h)
    twice = -2 * q + ramified * q // 2 + 2  # 2g = 2 - 2|Q| + sum |Q|(1 - 1/e_p)
    return twice // 2


def character_genus(spec: AbelianCoverSpec, h: frozenset[int]) -> int:
    """Same genus, summed over the nontrivial characters of (Z/2)^k killing h."""
    total = 0
    for c in range(1, 2 ** spec.k):
        if any(bin(c & x).count("1") % 2 for x in h):
            continue
        hits = sum(1 for e in spec.inertia if bin(c & e).count("1") % 2)
        total += hits // 2 - 1
    return total


def abelian_quotient_genera(spec: AbelianCoverSpec) -> dict[frozenset[int], int]:
    return {h: quotient_genus(spec, h) for h in subspaces(spec.k)}


def level_table(spec: AbelianCoverSpec) -> dict[int, dict[int, int]]:
    """level m (quotient group of order 2^m) -> {genus: number of quotients}."""
    table: dict[int, Counter] = {}
    for h, g in abelian_quotient_genera(spec).items():
        level = spec.k - (len(h).bit_length() - 1)
        if level == 0:
            continue
        table.setdefault(level, Counter())[g] += 1
    return {lv: dict(sorted(c.items())) for lv, c in sorted(table.items())}


# ---------------------------------------------------------------------------
# lifts of a V4-cover to a quaternion cover (genus 2)


@dataclass(frozen=True)
class LiftCount:
    lifts: int
    distinct_covers: int
    actions_per_cover: int
    single_orbits: bool
    torsor: bool

    def to_json(self) -> dict:
        return dict(self.__dict__)


def _coset_data(genus: int, vals: Sequence[int], V: FiniteGroupSpec):
    """Schreier transversal words and Reidemeister-Schreier generators of ker(psi_pm).

    Cosets of the kernel are the elements of the image of psi_pm.
    """
    ngen = 2 * genus
    reps: dict[int, list[tuple[int, int]]] = {V.identity: []}
    queue = [V.identity]
    while queue:
        c = queue.pop(0)
        for x in range(ngen):
            for sign in (1, -1):
                d = V.mul(c, vals[x] if sign > 0 else V.inv(vals[x]))
                if d not in reps:
                    reps[d] = reps[c] + [(x, sign)]
                    queue.append(d)
    schreier = []
    for c, word in sorted(reps.items()):
        for x in range(ngen):
            d = V.mul(c, vals[x])
            gen = word + [(x, 1)] + [(y, -s) for y, s in reversed(reps[d])]
            schreier.append(gen)
    return reps, schreier


def _eval_word(G: FiniteGroupSpec, images: Sequence[int], word) -> int:
    out = G.identity
    for x, s in word:
        out = G.mul(out, images[x] if s > 0 else G.inv(images[x]))
    return out


def count_quaternion_lifts(psi_pm: Mapping[str, str], genus: int = 2) -> LiftCount:
    G = quaternion_group()
    V = klein_four()
    names = generator_names(genus)
    vals = [V.index(psi_pm.get(n, "1")) for n in names]
    rel = V.identity
    for k in range(genus):
        rel = V.mul(rel, V.commutator(vals[2 * k], vals[2 * k + 1]))
    if rel != V.identity:
        raise ValueError("psi_pm violates the surface relation in V4")

    lifts = []
    for signs in itertools.product(("", "-"), repeat=len(names)):
        images = [G.index(s + V.elements[v]) for s, v in zip(signs, vals)]
        rel = G.identity
        for k in range(genus):
            rel = G.mul(rel, G.commutator(images[2 * k], images[2 * k + 1]))
        if rel == G.identity:
            lifts.append(tuple(images))

    _, schreier = _coset_data(genus, vals, V)
    groups: dict[tuple[int, ...], list[tuple[int, ...]]] = {}
    for lift in lifts:
        key = tuple(_eval_word(G, lift, w) for w in schreier)
        groups.setdefault(key, []).append(lift)

    def conj(lift, h):
        return tuple(G.mul(G.mul(h, x), G.inv(h)) for x in lift)

    single = all(
        {conj(members[0], h) for h in range(G.order)} == set(members) for members in groups.values()
    )
    sizes = {len(m) for m in groups.values()}
    # Hom(pi_1, +-1) acts on lifts by sign changes on the generators
    eps = G.index("-1")
    lift_set = set(lifts)
    torsor = True
    if lifts:
        base = lifts[0]
        orbit = {
            tuple(G.mul(x, eps) if c else x for x, c in zip(base, chi))
            for chi in itertools.product((0, 1), repeat=len(names))
        }
        torsor = orbit == lift_set and len(orbit) == 2 ** len(names)
    per = sizes.pop() if len(sizes) == 1 else 0
    return LiftCount(len(lifts), len(groups), per, single, torsor)


def normal_form_pm(genus: int = 2) -> dict[str, str]:
    psi = {n: "1" for n in generator_names(genus)}
    psi["alpha1"] = "ihat"
    psi["alpha2"] = "jhat"
    return psi


def non_isotropic_pm(genus: int = 2, partner: str = "beta1") -> dict[str, str]:
    psi = {n: "1" for n in generator_names(genus)}
    psi["alpha1"] = "ihat"
    psi[partner] = "jhat"
    return psi


CASE_TABLE = {
    "0:0.2.2.0": (4, 1, 1),
    "1:0.2.0.0": (4, 2, 1),
    "2:0.0.0.0": (4, 3, 1),
    "1:0.1.1.1": (6, 3, 3),
    "3:0.0.0.0": (8, 6, 6),
}


def verify_tower(genus: int = 2) -> VerificationReport:
    rep = VerificationReport("tower", params={"genus": genus})

    def case_table():
        got = {str(s): (tower_invariants(s).dim_P, tower_invariants(s).dim_M,
                        tower_invariants(s).dim_Shim) for s in enumerate_admissible()}
        return got == CASE_TABLE, {"cases": got}

    rep.run("tower.admissible_cases", "tower/five-cases", case_table)

    def types():
        got = lemma_types()
        return got == [(0, 4), (1, 2), (1, 3), (2, 0), (2, 1), (3, 0)], {"types": got}

    rep.run("tower.lemma_types", "tower/dimension-count", types)

    def exclusions():
        bad_parity = TowerSpec(1, 0, 3, 0, 0)
        single_axis = TowerSpec(0, 0, 4, 0, 0)
        ok = not bad_parity.parity_ok and single_axis.parity_ok and not tower_exists(single_axis)
        return ok, {
            "1:0.3.0.0": "parity",
            "0:0.4.0.0": "parity holds but monodromy only generates <ihat>",
        }

    rep.run("tower.exclusions", "tower/parity", exclusions)

    def invariants():
        inv = tower_invariants(TowerSpec(genus))
        want_pm = 4 * genus - 3
        return inv.g_pm == want_pm and inv.g_tilde == 8 * genus - 7, inv.to_json()

    rep.run("tower.invariants", "tower/riemann-hurwitz", invariants)

    for name, cfg, want in (
        ("five_point", five_point_config(),
         {1: {0: 10, 1: 5}, 2: {0: 10, 1: 15, 2: 10}, 3: {1: 5, 3: 10}, 4: {5: 1}}),
        ("three_pair", three_pair_config(),
         {1: {0: 3, 1: 3, 2: 1}, 2: {1: 3, 3: 4}, 3: {5: 1}}),
    ):
        def table(cfg=cfg, want=want):
            got = level_table(cfg)
            cw = all(quotient_genus(cfg, h) == character_genus(cfg, h) for h in subspaces(cfg.k))
            return got == want and cw, {"levels": got, "character_count_agrees": cw}

        rep.run(f"tower.quotients_{name}", f"tower/quotients-{name.replace('_', '-')}", table)

    def lifts_normal():
        r = count_quaternion_lifts(normal_form_pm())
        ok = (r.lifts, r.distinct_covers, r.actions_per_cover) == (16, 4, 4) and r.single_orbits and r.torsor
        return ok, r.to_json()

    rep.run("tower.lifts_normal_form", "tower/lifts", lifts_normal)

    def lifts_noniso():
        r = count_quaternion_lifts(non_isotropic_pm())
        return r.lifts == 0, r.to_json()

    rep.run("tower.lifts_non_isotropic", "tower/lifts-obstruction", lifts_noniso)

    def literal_partner():
        lit = count_quaternion_lifts(non_isotropic_pm(partner="beta2"))
        return "flagged", {
            "reading": "alpha1 -> ihat, beta2 -> jhat",
            "lifts": lit.lifts,
            "note": "literal generator gives an isotropic pair; beta1 is used",
        }

    rep.run("tower.case2_generator", "tower/lifts-normal-form", literal_partner)

    def lifts_trivial():
        r = count_quaternion_lifts({})
        return r.lifts == 16 and r.torsor, r.to_json()

    rep.run("tower.lifts_trivial", "tower/lifts-sign-characters", lifts_trivial)
    return rep
