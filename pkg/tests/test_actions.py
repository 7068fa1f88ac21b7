import pytest

import oracles
from ppcover.actions import CosetActionMap, block_action, core, find_block_system, is_primitive, minimal_block_partition
from ppcover.config import Caps
from ppcover.constructions.named import BUILDERS
from ppcover.constructions.wreath import wreath_example
from ppcover.errors import CapExceeded, ValidationError
from ppcover.group import PermGroup, alternating_group, cyclic_group, is_normal, symmetric_group
from ppcover.lattice import subgroup_lattice
from ppcover.perm import parse_cycles


@pytest.fixture(scope="module")
def family3():
    return wreath_example(alternating_group(5), alternating_group(4))


def _check_action(A, U):
    act = CosetActionMap(A, U)
    img = act.image_group()
    assert act.degree == A.order() // U.order()
    assert act.check_homomorphism()
    assert img.is_transitive()
    assert act.coset_of(tuple(range(A.degree))) == 0
    # stabilizer of coset 0 is U: U fixes it and the orders match
    assert all(act.image(u)(0) == 0 for u in U.gen_tuples)
    assert act.kernel().order() * img.order() == A.order()
    return act


def test_natural_action_recovered():
    S3 = symmetric_group(3)
    act = _check_action(S3, PermGroup(3, [parse_cycles("(1 2)", 3)]))
    assert act.degree == 3 and act.image_group().order() == 6
    assert core(S3, PermGroup(3, [parse_cycles("(1 2)", 3)])).is_trivial()


@pytest.mark.parametrize("name", ["sym4", "alt4", "d8", "agl15", "alt5"])
def test_every_subgroup_action(name):
    A = BUILDERS[name]()
    els = list(oracles.closure(A.gen_tuples, A.degree))
    for U in subgroup_lattice(A):
        act = _check_action(A, U)
        K = act.kernel()
        assert set(K.element_tuples()) == oracles.core(els, list(U.element_tuples()))
        assert K.is_subgroup_of(U) and is_normal(A, K)


def test_core_of_normal_subgroup():
    assert core(symmetric_group(4), alternating_group(4)).equals(alternating_group(4))


def test_family3_actions(family3):
    G, U, A = family3.G, family3.U, family3.A
    act = CosetActionMap(G, U)
    assert act.degree == 60
    assert act.kernel().order() == 3600
    assert act.image_group().order() == 3600
    assert is_primitive(act.image_group())
    actA = CosetActionMap(A, U)
    assert actA.degree == 720
    orbits = actA.image_of(G).orbits()
    assert len(orbits) == 12 and {len(o) for o in orbits} == {60}


def test_index_cap():
    with pytest.raises(CapExceeded):
        CosetActionMap(symmetric_group(6), PermGroup.trivial(6), Caps(degree=100))


def test_non_subgroup_rejected():
    with pytest.raises(ValidationError):
        CosetActionMap(alternating_group(4), PermGroup(4, [parse_cycles("(1 2)", 4)]))


def test_block_examples():
    assert is_primitive(alternating_group(5))
    blocks = find_block_system(cyclic_group(4))
    assert blocks == [[0, 2], [1, 3]]
    assert minimal_block_partition(cyclic_group(6), 0, 3) == [[0, 3], [1, 4], [2, 5]]
    assert block_action(cyclic_group(4), blocks).order() == 2
    with pytest.raises(ValidationError):
        find_block_system(PermGroup(4, [parse_cycles("(1 2)", 4)]))


def test_primitivity_matches_exhaustive_search(corpus):
    for name, G in corpus:
        expect = not oracles.has_nontrivial_block(G.gen_tuples, G.degree)
        assert is_primitive(G) == expect, name
        blocks = find_block_system(G)
        if blocks is not None:
            assert all(oracles.is_block(set(b), G.gen_tuples) for b in blocks)
            assert len({len(b) for b in blocks}) == 1
