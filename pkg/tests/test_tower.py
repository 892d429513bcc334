import pytest
from hypothesis import given, strategies as st

from quatcover import tower as T


def test_invariants_examples():
    inv = T.tower_invariants(T.TowerSpec(2))
    assert (inv.g_pm, inv.g_tilde, inv.dim_P, inv.dim_M, inv.dim_Shim) == (5, 9, 4, 3, 1)
    inv = T.tower_invariants(T.TowerSpec(1, 0, 2, 0, 0))
    assert (inv.dim_P, inv.dim_M) == (4, 2)
    inv = T.tower_invariants(T.TowerSpec(3))
    assert (inv.dim_P, inv.dim_Shim) == (8, 6)
    with pytest.raises(ValueError):
        T.tower_invariants(T.TowerSpec(0))


@given(st.integers(1, 6), st.integers(0, 6), st.integers(0, 6))
def test_invariants_even_and_monotone(g, a, extra):
    s1 = T.TowerSpec(g, 0, a, 0, 0)
    s2 = T.TowerSpec(g, 0, a + extra, 0, 0)
    i1, i2 = T.tower_invariants(s1), T.tower_invariants(s2)
    assert i1.dim_P % 2 == 0
    assert i1.dim_P <= i2.dim_P and i1.g_tilde <= i2.g_tilde and i1.dim_M <= i2.dim_M
    assert i1.dim_Shim == i1.n * (i1.n - 1) // 2


def test_parse():
    assert T.TowerSpec.parse("2:0.0.0.0") == T.TowerSpec(2)
    assert str(T.TowerSpec(1, 0, 1, 1, 1)) == "1:0.1.1.1"
    with pytest.raises(ValueError):
        T.TowerSpec.parse("2:0.0")


def test_admissible_table():
    got = T.enumerate_admissible()
    assert [str(s) for s in got] == ["0:0.2.2.0", "1:0.2.0.0", "2:0.0.0.0", "1:0.1.1.1", "3:0.0.0.0"]
    for s in got:
        inv = T.tower_invariants(s)
        assert (inv.dim_P, inv.dim_M, inv.dim_Shim) == T.CASE_TABLE[str(s)]


def test_exclusions():
    assert T.lemma_types() == [(0, 4), (1, 2), (1, 3), (2, 0), (2, 1), (3, 0)]
    assert not T.TowerSpec(1, 0, 3, 0, 0).parity_ok
    assert not T.tower_exists(T.TowerSpec(2, 0, 1, 0, 0))
    # parity alone would admit this one; the monodromy cannot generate G
    assert T.TowerSpec(0, 0, 4, 0, 0).parity_ok and not T.tower_exists(T.TowerSpec(0, 0, 4, 0, 0))


def test_subspace_count():
    # number of subspaces of F_2^k: 2, 5, 16, 67
    assert [len(T.subspaces(k)) for k in (1, 2, 3, 4)] == [2, 5, 16, 67]


def test_quotient_tables():
    assert T.level_table(T.five_point_config()) == {
        1: {0: 10, 1: 5}, 2: {0: 10, 1: 15, 2: 10}, 3: {1: 5, 3: 10}, 4: {5: 1}}
    assert T.level_table(T.three_pair_config()) == {
        1: {0: 3, 1: 3, 2: 1}, 2: {1: 3, 3: 4}, 3: {5: 1}}


@given(st.integers(1, 4).flatmap(
    lambda k: st.lists(st.integers(1, 2 ** k - 1), min_size=1, max_size=7).map(lambda xs: (k, xs))))
def test_character_count_agrees(data):
    k, xs = data
    total = 0
    for x in xs:
        total ^= x
    inertia = tuple(xs) + ((total,) if total else ())
    spec = T.AbelianCoverSpec(k, inertia)
    for h in T.subspaces(k):
        assert T.quotient_genus(spec, h) == T.character_genus(spec, h)
    level1 = sum(1 for h in T.subspaces(k) if len(h) == 2 ** (k - 1))
    assert level1 == 2 ** k - 1


def test_inertia_must_sum_to_zero():
    with pytest.raises(ValueError):
        T.AbelianCoverSpec(2, (1, 2))


def test_lift_counts():
    r = T.count_quaternion_lifts(T.normal_form_pm())
    assert (r.lifts, r.distinct_covers, r.actions_per_cover) == (16, 4, 4)
    assert r.single_orbits and r.torsor
    assert T.count_quaternion_lifts(T.non_isotropic_pm()).lifts == 0
    triv = T.count_quaternion_lifts({})
    assert triv.lifts == 16 and triv.torsor


def test_tower_report():
    rep = T.verify_tower()
    assert rep.ok
    assert [c.id for c in rep.checks if c.status == "flagged"] == ["tower.case2_generator"]
