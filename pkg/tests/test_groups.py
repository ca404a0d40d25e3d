"""Finite groups: automorphism counts against a brute-force oracle.

The oracle enumerates every bijection fixing the identity and keeps the
table-preserving ones; no generator logic, no backtracking, nothing shared
with the implementation.  Orders below were computed by the oracle first.
"""

import itertools

import pytest

from artifact.algebra import InputError
from artifact.groups import (CapError, automorphisms, cyclic, dihedral,
                             direct_product, element_order, group_from_json,
                             group_universality_check, holomorph_check,
                             inner_automorphisms, klein4, make_group,
                             make_group_action, quaternion8, symmetric3,
                             trivial)


def brute_aut_order(g):
    """Count bijections preserving the table; identity must map to itself."""
    n = g.order
    others = [x for x in range(n) if x != g.identity]
    count = 0
    for images in itertools.permutations(others):
        p = [None] * n
        p[g.identity] = g.identity
        for src, dst in zip(others, images):
            p[src] = dst
        if all(p[g.table[a][b]] == g.table[p[a]][p[b]]
               for a in range(n) for b in range(n)):
            count += 1
    return count


GROUPS = [
    ("trivial", trivial(), 1),
    ("Z2", cyclic(2), 1),
    ("Z3", cyclic(3), 2),
    ("Z4", cyclic(4), 2),
    ("V4", klein4(), 6),
    ("Z5", cyclic(5), 4),
    ("Z6", cyclic(6), 2),
    ("S3", symmetric3(), 6),
    ("Z7", cyclic(7), 6),
    ("Z8", cyclic(8), 4),
    ("D4", dihedral(4), 8),
    ("Q8", quaternion8(), 24),
]


@pytest.mark.parametrize("name,g,expected", GROUPS, ids=[n for n, _, _ in GROUPS])
def test_automorphism_order_matches_brute_force(name, g, expected):
    assert brute_aut_order(g) == expected
    assert automorphisms(g).order == expected


def test_z2_cubed_exceeds_cap_and_oracle_says_168():
    g = direct_product(cyclic(2), direct_product(cyclic(2), cyclic(2)))
    assert brute_aut_order(g) == 168  # GL(3,2)
    with pytest.raises(CapError):
        automorphisms(g)


def test_group_order_above_cap_is_refused_before_enumeration():
    with pytest.raises(CapError):
        automorphisms(cyclic(25))
    assert automorphisms(cyclic(25), cap=30).order == 20


def test_aut_elements_are_homomorphisms():
    g = dihedral(4)
    aut = automorphisms(g)
    for p in aut.perms:
        assert all(p[g.table[a][b]] == g.table[p[a]][p[b]]
                   for a in range(8) for b in range(8))
    assert len(set(aut.perms)) == aut.order


@pytest.mark.parametrize("g,inn_order,center_size", [
    (symmetric3(), 6, 1),
    (quaternion8(), 4, 2),
    (cyclic(6), 1, 6),
    (dihedral(4), 4, 2),
])
def test_inner_automorphisms_and_center(g, inn_order, center_size):
    inn = inner_automorphisms(g)
    assert len(inn.indices) == inn_order
    assert len(inn.center) == center_size


@pytest.mark.parametrize("name,g,_", GROUPS, ids=[n for n, _, _ in GROUPS])
def test_holomorph_check_passes(name, g, _):
    rep = holomorph_check(g)
    assert rep.passed, rep.label


@pytest.mark.parametrize("g", [trivial(), cyclic(4), klein4(), symmetric3(),
                               cyclic(5), cyclic(6)],
                         ids=["1", "Z4", "V4", "S3", "Z5", "Z6"])
def test_universality_for_small_targets(g):
    rep = group_universality_check(g)
    assert rep.passed, rep.label
    assert all(line["status"] == "pass" for line in rep.details)


def test_universality_counts_identity_action_only_for_trivial_aut():
    rep = group_universality_check(cyclic(2))
    # Aut(Z2) is trivial: exactly one action per acting group
    assert all(line["actions"] == 1 for line in rep.details)


def test_make_group_rejects_non_latin_and_non_associative():
    with pytest.raises(InputError):
        make_group([[0, 1], [1, 1]])
    # smallest nonassociative loop (order 5); identity 0, Latin both ways
    loop = [[0, 1, 2, 3, 4],
            [1, 0, 3, 4, 2],
            [2, 3, 4, 0, 1],
            [3, 4, 1, 2, 0],
            [4, 2, 0, 1, 3]]
    with pytest.raises(InputError):
        make_group(loop)


def test_group_json_round_trip():
    g = symmetric3()
    h = group_from_json(g.to_json())
    assert h.table == g.table and h.names == g.names
    with pytest.raises(InputError):
        group_from_json({"order": 2, "table": [[0, 1], [1, 0]], "nope": 1})


def test_element_orders_in_z6():
    g = cyclic(6)
    assert [element_order(g, a) for a in range(6)] == [1, 6, 3, 2, 3, 6]


def test_quaternion_structure():
    g = quaternion8()
    names = list(g.names)
    minus_one = names.index("-e")
    i = names.index("i")
    assert element_order(g, minus_one) == 2
    assert element_order(g, i) == 4
    assert g.table[i][i] == minus_one


def test_dihedral_matches_s3_at_n3():
    d3, s3 = dihedral(3), symmetric3()
    assert sorted(element_order(d3, a) for a in range(6)) == \
        sorted(element_order(s3, a) for a in range(6))
    assert automorphisms(d3).order == 6


def test_make_group_action_validation():
    g = cyclic(3)
    b = cyclic(2)
    ident = tuple(range(3))
    swap = (0, 2, 1)  # inversion, the nontrivial automorphism
    act = make_group_action(b, g, (ident, swap))
    assert act.dot[1][1] == 2
    with pytest.raises(InputError):
        make_group_action(b, g, (swap, ident))  # identity must act trivially
    with pytest.raises(InputError):
        make_group_action(b, g, (ident, (0, 0, 1)))  # not a bijection
    shift = (1, 2, 0)  # bijective but not an automorphism (moves identity)
    with pytest.raises(InputError):
        make_group_action(b, g, (ident, shift))
