import itertools

import pytest

from quatcover import homology as H


def _complex(module, genus=2, psi=None):
    return H.build_surface_complex(genus, psi or H.normal_form_psi(genus), module)


def test_group_tables():
    g = H.quaternion_group()
    assert g.order == 8
    i, j, k = g.index("ihat"), g.index("jhat"), g.index("khat")
    assert g.mul(i, j) == k and g.mul(j, i) == g.index("-khat")
    with pytest.raises(ValueError):
        H.FiniteGroupSpec("bad", ["a", "b"], [[0, 0], [0, 1]])
    assert H.klein_four().order == 4 and H.cyclic2().order == 2 and H.trivial_group().order == 1


def _octagon_boundary(G, a, b, c, d):
    """Coefficients of the 2-cell boundary of the octagon, written in the group."""
    inv = G.inv

    def w(*xs):
        return G.word(xs)

    terms = {
        "alpha1": [(G.identity, 1), (w(a, b, inv(a)), -1)],
        "beta1": [(a, 1), (G.commutator(a, b), -1)],
        "alpha2": [(G.commutator(d, c), 1), (d, -1)],
        "beta2": [(w(d, c, inv(d)), 1), (G.identity, -1)],
    }
    out = {}
    for name, ts in terms.items():
        acc = {}
        for h, s in ts:
            acc[h] = acc.get(h, 0) + s
        out[name] = {h: s for h, s in sorted(acc.items()) if s}
    return out


def test_fox_matches_octagon_boundary_for_every_homomorphism():
    G = H.quaternion_group()
    count = 0
    for a, b, c, d in itertools.product(range(8), repeat=4):
        if G.mul(G.commutator(a, b), G.commutator(c, d)) != G.identity:
            continue
        psi = dict(zip(H.generator_names(2), (G.elements[x] for x in (a, b, c, d))))
        assert H.fox_boundary(2, psi, G) == _octagon_boundary(G, a, b, c, d)
        count += 1
    assert count > 0


def test_simplified_boundaries():
    G = H.quaternion_group()
    fox = H.fox_boundary(2, H.normal_form_psi(2), G)
    one = G.identity
    assert fox["beta1"] == {one: -1, G.index("ihat"): 1}
    assert fox["beta2"] == {one: -1, G.index("jhat"): 1}
    assert fox["alpha1"] == {} and fox["alpha2"] == {}
    cx = _complex(H.regular_module(G))
    d1 = cx.boundary_rows(1)
    n = 8
    row_alpha = d1[0 * n + one]
    assert row_alpha[G.index("ihat")] == 1 and row_alpha[one] == -1
    assert not any(d1[1 * n + one])  # beta1 is a cycle


def test_relation_violation_rejected():
    psi = {"alpha1": "ihat", "beta1": "jhat", "alpha2": "1", "beta2": "1"}
    with pytest.raises(ValueError):
        H.fox_boundary(2, psi, H.quaternion_group())


def test_trivial_coefficients_zero_boundaries():
    cx = _complex(H.trivial_module(H.quaternion_group()))
    assert all(x == 0 for row in cx.d2 for x in row)
    assert all(x == 0 for row in cx.d1 for x in row)
    assert H.homology(cx, 1) == H.HomologyResult(4, ())


def test_lipschitz_module_is_right_multiplication():
    mp = H.lipschitz_module()
    for idx, q in enumerate(H.Q8_VALUES):
        assert mp.action[idx] == H.quaternion_right_matrix(q)


@pytest.mark.parametrize("genus", [2, 3])
def test_cover_homology(genus):
    G = H.quaternion_group()
    zg = _complex(H.regular_module(G), genus)
    v4 = _complex(H.regular_module(H.klein_four()), genus,
                  {k: H.to_v4(v) for k, v in H.normal_form_psi(genus).items()})
    mp = _complex(H.lipschitz_module(), genus)
    g_pm, g_tilde = 4 * genus - 3, 8 * genus - 7
    assert H.homology(zg, 0) == H.HomologyResult(1, ())
    assert H.homology(zg, 1) == H.HomologyResult(2 * g_tilde, ())
    assert H.homology(v4, 1) == H.HomologyResult(2 * g_pm, ())
    assert H.homology(mp, 1) == H.HomologyResult(2 * (g_tilde - g_pm), (2,))
    euler = sum((-1) ** i * H.homology(zg, i).free_rank for i in range(3))
    assert euler == zg.euler_characteristic() == 8 * (2 - 2 * genus)


def test_homology_result_validation():
    with pytest.raises(ValueError):
        H.HomologyResult(0, (4, 2))


def test_prym_basis_report():
    rep = H.verify_prym_basis()
    assert [c.status for c in rep.checks] == ["pass"] * 4


def _brute_force_norm_kernel(genus):
    cover, base, push = H.double_cover_complexes(genus)
    d1c, d2c = cover.boundary_rows(1), cover.boundary_rows(2)
    d2b = base.boundary_rows(2)
    n = len(d1c)

    def span_mod2(rows, width):
        out = {tuple([0] * width)}
        for r in rows:
            out |= {tuple((x + y) % 2 for x, y in zip(v, r)) for v in out}
        return out

    boundaries_c = span_mod2(d2c, n)
    boundaries_b = span_mod2(d2b, 2 * genus)
    kernel = 0
    for z in itertools.product((0, 1), repeat=n):
        if any(sum(z[i] * d1c[i][j] for i in range(n)) % 2 for j in range(len(d1c[0]))):
            continue
        image = tuple(sum(z[i] * push[i][j] for i in range(n)) % 2 for j in range(2 * genus))
        if image in boundaries_b:
            kernel += 1
    return kernel // len(boundaries_c)


@pytest.mark.parametrize("genus", [1, 2])
def test_norm_kernel_brute_force(genus):
    assert H.norm_kernel_count(genus) == _brute_force_norm_kernel(genus) == 2 ** (2 * genus - 1)


def test_norm_kernel_genus3():
    assert H.norm_kernel_count(3) == 32


def test_complex_json_labels():
    cx = _complex(H.regular_module(H.quaternion_group()))
    data = cx.to_json()
    assert "ihat⊗beta1" in data["cells"]["C1"]
    assert len(data["d2"]) == len(data["cells"]["C1"])
