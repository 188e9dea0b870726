"""The group-theoretic chirality decision and its supporting machinery."""

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from hypertope.corpus import (
    alternating,
    cyclic,
    symmetric,
    torus_rotation_group,
)
from hypertope.cplus import (
    CHIRAL,
    NOT_HYPERTOPE,
    REGULAR,
    build_cplus,
    check_ic_plus,
    condition_i,
    condition_ii,
    condition_iii,
    condition_iv,
    is_chiral_hypertope,
    is_independent_generating_set,
    normality_diagnostics,
    two_orbit_decomposition,
)
from hypertope.permcore import PermGroup, Permutation, generate_group


def torus_cplus():
    G, (s, t) = torus_rotation_group()
    return build_cplus(G, (s, s * t))


def a4_cplus():
    G = alternating(4)
    return build_cplus(G, (Permutation.from_cycles(4, [(0, 1, 2)]),
                           Permutation.from_cycles(4, [(1, 2, 3)])))


def s5_rank4_cplus():
    """Rank-4 fixture: corank-1 intersections trivial, but the truncation
    dropping type 2 splits into two chamber orbits."""
    G = symmetric(5)
    R = (Permutation([0, 1, 2, 4, 3]),      # (3 4)
         Permutation([0, 2, 3, 1, 4]),      # (1 2 3)
         Permutation([1, 3, 2, 0, 4]))      # (0 1 3)
    return build_cplus(G, R)


# -- construction -----------------------------------------------------------

def test_build_requires_generating_set():
    G = symmetric(4)
    with pytest.raises(ValueError):
        build_cplus(G, (Permutation.from_cycles(4, [(0, 1)]),))


def test_build_requires_membership():
    G = alternating(4)
    with pytest.raises(ValueError):
        build_cplus(G, (Permutation.from_cycles(4, [(0, 1)]),
                        Permutation.from_cycles(4, [(0, 1, 2)])))


@settings(max_examples=20, deadline=None)
@given(st.data())
def test_alpha_telescoping(data):
    S = torus_cplus()
    i = data.draw(st.integers(0, 2))
    j = data.draw(st.integers(0, 2))
    k = data.draw(st.integers(0, 2))
    assert S.alpha(i, j) * S.alpha(j, k) == S.alpha(i, k)
    assert S.alpha(j, i) == S.alpha(i, j).inverse()


def test_parabolic_recipe_matches_single_base_point():
    # <alpha_ij : i,j in J> = <alpha_mj : j in J> for m = min(J)
    S = s5_rank4_cplus()
    for size in (2, 3):
        for J in itertools.combinations(S.type_set, size):
            m = J[0]
            direct = generate_group(S.group.degree,
                                    [S.alpha(m, j) for j in J if j != m])
            assert S.parabolic(J) == direct


def test_parabolic_of_singleton_is_trivial():
    S = torus_cplus()
    assert S.parabolic([1]).is_trivial()
    assert S.parabolic([]).is_trivial()


def test_maximal_parabolics_of_torus():
    S = torus_cplus()
    assert [S.maximal_parabolic(i).order for i in S.type_set] == [4, 2, 4]


# -- independence and IC+ ---------------------------------------------------

def test_independence_examples():
    c6 = cyclic(6)
    g = c6.generators[0]
    assert is_independent_generating_set(build_cplus(c6, (g,)))
    c4 = cyclic(4)
    h = c4.generators[0]
    assert not is_independent_generating_set(build_cplus(c4, (h, h * h)))
    assert is_independent_generating_set(torus_cplus())


def test_ic_plus_examples():
    assert check_ic_plus(torus_cplus())
    c4 = cyclic(4)
    h = c4.generators[0]
    assert not check_ic_plus(build_cplus(c4, (h, h * h)))


# -- the four conditions ----------------------------------------------------

def test_conditions_on_torus():
    S = torus_cplus()
    assert condition_ii(S)
    for k in S.type_set:
        assert condition_i(S, k)
        assert condition_iii(S, k)
    assert condition_iv(S)


def test_condition_iv_fails_on_a4():
    assert not condition_iv(a4_cplus())


def test_condition_i_fails_on_s5_rank4():
    S = s5_rank4_cplus()
    assert condition_ii(S)
    assert condition_i(S, 0) and condition_i(S, 1)
    assert not condition_i(S, 2) and not condition_i(S, 3)


def test_condition_iii_counts_on_c3xc3():
    # |∩ (G_k G_j)| = 9 here, but 2 |G_k| = 6: not thin at the base flag
    G = generate_group(6, [Permutation.from_cycles(6, [(0, 1, 2)]),
                           Permutation.from_cycles(6, [(3, 4, 5)])])
    S = build_cplus(G, tuple(G.generators))
    assert condition_ii(S) and condition_i(S, 0)
    assert not condition_iii(S, 0)


# -- two-orbit decomposition ------------------------------------------------

def test_two_orbit_decomposition_of_torus():
    S = torus_cplus()
    d = two_orbit_decomposition(S, 0)
    assert d.class_count == 2
    assert sum(d.class_sizes) == 8  # |G_0| + |G_0 w B|
    Gk = S.maximal_parabolic(0)
    assert d.witness is not None and d.witness not in Gk


def test_two_orbit_decomposition_requires_condition_i():
    S = s5_rank4_cplus()
    with pytest.raises(ValueError):
        two_orbit_decomposition(S, 2)


def test_normality_diagnostics_on_torus():
    b_normal, gk_normal = normality_diagnostics(torus_cplus(), 0)
    assert b_normal is True       # B is trivial here
    assert gk_normal is False


# -- the verdict ------------------------------------------------------------

def test_torus_is_chiral():
    rep = is_chiral_hypertope(torus_cplus())
    assert rep.verdict == CHIRAL
    assert rep.failing_condition is None
    assert rep.per_condition == {2: True, 1: True, 3: True, 4: True}
    assert rep.orbit_sizes == (20, 20)
    assert rep.witness is not None


def test_a4_is_regular_with_code_4():
    rep = is_chiral_hypertope(a4_cplus())
    assert rep.verdict == REGULAR
    assert rep.failing_condition == 4
    assert rep.orbit_sizes == (12, 12)


def test_c4_fails_with_code_2():
    c4 = cyclic(4)
    h = c4.generators[0]
    rep = is_chiral_hypertope(build_cplus(c4, (h, h * h)))
    assert (rep.verdict, rep.failing_condition) == (NOT_HYPERTOPE, 2)
    assert rep.per_condition == {2: False}  # short-circuit: nothing else ran


def test_c3xc3_fails_with_code_3():
    G = generate_group(6, [Permutation.from_cycles(6, [(0, 1, 2)]),
                           Permutation.from_cycles(6, [(3, 4, 5)])])
    rep = is_chiral_hypertope(build_cplus(G, tuple(G.generators)))
    assert (rep.verdict, rep.failing_condition) == (NOT_HYPERTOPE, 3)


def test_s5_rank4_fails_with_code_1_at_k2():
    rep = is_chiral_hypertope(s5_rank4_cplus(), k=2)
    assert (rep.verdict, rep.failing_condition) == (NOT_HYPERTOPE, 1)


def test_check_all_k_records_disagreement():
    rep = is_chiral_hypertope(s5_rank4_cplus(), check_all_k=True)
    assert rep.failing_condition == 1
    assert rep.cross_k_disagreement == {1: {0: True, 1: True, 2: False, 3: False}}


def test_check_all_k_unanimous_on_torus():
    rep = is_chiral_hypertope(torus_cplus(), check_all_k=True)
    assert rep.verdict == CHIRAL
    assert rep.cross_k_disagreement is None


def test_rank_below_3_rejected():
    c5 = cyclic(5)
    S = build_cplus(c5, (c5.generators[0],))
    with pytest.raises(ValueError):
        is_chiral_hypertope(S)


def test_k_out_of_range_rejected():
    with pytest.raises(ValueError):
        is_chiral_hypertope(torus_cplus(), k=3)


def test_report_round_trips_to_plain_data():
    import json
    rep = is_chiral_hypertope(torus_cplus())
    blob = json.dumps(rep.to_dict())
    assert json.loads(blob)["verdict"] == CHIRAL
