"""Kernel tests: permutations, closure, cosets, double cosets, homomorphisms."""

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from hypertope.permcore import (
    ElementSet,
    GroupTooLargeError,
    Permutation,
    PermGroup,
    compose,
    double_coset_decomposition,
    extends_to_homomorphism,
    generate_group,
    inverting_automorphism_exists,
    product_set,
    right_coset,
    right_coset_decomposition,
    subgroup_intersection,
)


def perm_strategy(degree: int):
    return st.permutations(range(degree)).map(Permutation)


# -- permutations -----------------------------------------------------------

def test_compose_is_right_action():
    # (p * q)(x) = q(p(x)): p acts first
    p = Permutation([1, 2, 0])   # (0 1 2)
    q = Permutation([1, 0, 2])   # (0 1)
    assert (p * q).images == (0, 2, 1)
    assert compose(p, q) == p * q
    assert all((p * q)(x) == q(p(x)) for x in range(3))


@given(perm_strategy(6))
def test_cycles_roundtrip(p):
    assert Permutation.from_cycles(6, p.cycles()) == p


@given(perm_strategy(6), perm_strategy(6))
def test_inverse_and_associativity(p, q):
    e = Permutation.identity(6)
    assert p * p.inverse() == e
    assert (p * q).inverse() == q.inverse() * p.inverse()


@given(perm_strategy(5))
def test_order_matches_iteration(p):
    e = Permutation.identity(5)
    x = p
    n = 1
    while x != e:
        x = x * p
        n += 1
    assert n == p.order()


def test_permutation_rejects_non_bijection():
    with pytest.raises(ValueError):
        Permutation([0, 0, 1])


# -- closure ----------------------------------------------------------------

def test_s4_closure_has_order_24():
    gens = [Permutation([1, 0, 2, 3]), Permutation([1, 2, 3, 0])]
    assert generate_group(4, gens).order == 24


def test_closure_independent_of_generator_order():
    a = Permutation([1, 0, 2, 3])
    b = Permutation([1, 2, 3, 0])
    assert generate_group(4, [a, b]).elements == generate_group(4, [b, a]).elements


def test_closure_cap_enforced():
    gens = [Permutation([1, 0, 2, 3]), Permutation([1, 2, 3, 0])]
    with pytest.raises(GroupTooLargeError):
        generate_group(4, gens, cap=10)


def test_empty_generators_give_trivial_group():
    G = generate_group(3, [])
    assert G.order == 1 and G.identity in G


def test_duplicate_generators_deduplicated():
    g = Permutation([1, 2, 0])
    G = generate_group(3, [g, g])
    assert G.generators == (g,)
    assert G.order == 3


# -- subgroup algebra -------------------------------------------------------

def _s4():
    return generate_group(4, [Permutation([1, 0, 2, 3]), Permutation([1, 2, 3, 0])])


def test_product_formula_on_s4_cyclics():
    G = _s4()
    singles = [generate_group(4, [g]) for g in list(G)[:12]]
    for H, K in itertools.combinations(singles, 2):
        HK = product_set(H, K)
        assert len(HK) * subgroup_intersection(H, K).order == H.order * K.order


def test_right_coset_decomposition_partitions():
    G = _s4()
    H = generate_group(4, [Permutation([1, 0, 2, 3])])
    cosets = right_coset_decomposition(G, H)
    assert len(cosets) == G.order // H.order
    all_members = [x for c in cosets for x in c.elements()]
    assert sorted(all_members) == list(G.elements)
    # canonical representative is the minimal member
    for c in cosets:
        assert c.representative == min(c.elements())


def test_coset_shift_matches_element_translation():
    G = _s4()
    H = generate_group(4, [Permutation([1, 2, 0, 3])])
    g = Permutation([3, 2, 1, 0])
    h = Permutation([0, 2, 1, 3])
    shifted = right_coset(H, g).shift(h)
    assert sorted(shifted.elements()) == sorted(x * h for x in right_coset(H, g).elements())


def test_double_cosets_match_naive_closure():
    G = _s4()
    H = generate_group(4, [Permutation([1, 0, 2, 3])])
    K = generate_group(4, [Permutation([0, 2, 1, 3])])
    S = ElementSet(4, G.elements)
    classes = double_coset_decomposition(H, S, K)
    naive = {frozenset(h * x * k for h in H for k in K) for x in G}
    assert {frozenset(c) for c in classes} == naive
    assert sum(len(c) for c in classes) == G.order


def test_double_coset_rejects_partial_union():
    G = _s4()
    H = generate_group(4, [Permutation([1, 0, 2, 3])])
    S = ElementSet(4, list(G)[:5])
    with pytest.raises(ValueError):
        double_coset_decomposition(H, S, H)


# -- homomorphism extension --------------------------------------------------

def _word_propagation_extends(G, gens, images):
    """Reference oracle: propagate images over a BFS of words in the generators
    and fail on any inconsistency."""
    table = {G.identity: Permutation.identity(images[0].degree) if images else None}
    frontier = [G.identity]
    while frontier:
        new = []
        for x in frontier:
            for g, im in zip(gens, images):
                y = x * g
                fy = table[x] * im
                if y in table:
                    if table[y] != fy:
                        return False
                else:
                    table[y] = fy
                    new.append(y)
        frontier = new
    return True


def test_extension_examples():
    c3 = generate_group(3, [Permutation([1, 2, 0])])
    g = c3.generators[0]
    # inversion is an automorphism of an abelian group
    assert extends_to_homomorphism(c3, [g], [g * g])
    # g -> transposition cannot extend (orders 3 vs 2)
    assert not extends_to_homomorphism(c3, [g], [Permutation([1, 0, 2])])


def test_extension_matches_word_propagation():
    G = _s4()
    gens = list(G.generators)
    candidates = [list(p) for p in itertools.permutations(gens)] + \
                 [[g.inverse() for g in gens], [gens[0], gens[0]]]
    for images in candidates:
        if len(images) != len(gens):
            continue
        assert (extends_to_homomorphism(G, gens, images)
                == _word_propagation_extends(G, gens, images))


def test_inverting_automorphism_cases():
    c3 = generate_group(3, [Permutation([1, 2, 0])])
    assert inverting_automorphism_exists(c3, [c3.generators[0]])
    a4 = generate_group(4, [Permutation.from_cycles(4, [(0, 1, 2)]),
                            Permutation.from_cycles(4, [(1, 2, 3)])])
    assert inverting_automorphism_exists(a4, list(a4.generators))


@settings(max_examples=25)
@given(st.data())
def test_subgroup_intersection_is_lower_bound(data):
    G = _s4()
    els = list(G)
    a = data.draw(st.sampled_from(els))
    b = data.draw(st.sampled_from(els))
    H = generate_group(4, [a])
    K = generate_group(4, [b])
    M = subgroup_intersection(H, K)
    assert M.is_subgroup_of(H) and M.is_subgroup_of(K)
    assert H.order % M.order == 0 and K.order % M.order == 0
