import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from ppcover.config import Caps
from ppcover.constructions.named import BUILDERS
from ppcover.constructions.wreath import wreath_example
from ppcover.errors import CapExceeded, ValidationError
from ppcover.group import (
    PermGroup,
    alternating_group,
    cyclic_group,
    intersection,
    is_normal,
    normal_closure,
    symmetric_group,
)
from ppcover.perm import Permutation, parse_cycles


@st.composite
def small_groups(draw, max_degree=7):
    n = draw(st.integers(2, max_degree))
    k = draw(st.integers(1, 3))
    gens = [tuple(draw(st.permutations(range(n)))) for _ in range(k)]
    return PermGroup(n, gens)


@settings(max_examples=150, deadline=None)
@given(small_groups())
def test_order_matches_closure(G):
    els = oracles.closure(G.gen_tuples, G.degree)
    assert G.order() == len(els)
    listed = list(G.element_tuples())
    assert listed[0] == tuple(range(G.degree))
    assert set(listed) == els and len(listed) == len(els)


@settings(max_examples=100, deadline=None)
@given(small_groups(max_degree=6), st.randoms(use_true_random=False))
def test_membership(G, rnd):
    els = oracles.closure(G.gen_tuples, G.degree)
    for _ in range(20):
        p = list(range(G.degree))
        rnd.shuffle(p)
        assert G.contains(tuple(p)) == (tuple(p) in els)


@settings(max_examples=60, deadline=None)
@given(small_groups(max_degree=6), small_groups(max_degree=6))
def test_intersection_matches_filter(G, H):
    if G.degree != H.degree:
        H = symmetric_group(G.degree)
    expect = oracles.closure(G.gen_tuples, G.degree) & oracles.closure(H.gen_tuples, H.degree)
    assert set(intersection(G, H).element_tuples()) == expect


def test_intersection_backtrack_path():
    G, H = symmetric_group(6), PermGroup(6, [parse_cycles("(1 2 3 4 5 6)", 6), parse_cycles("(1 2)", 6)])
    tight = Caps(enumeration=10)
    assert intersection(alternating_group(6), H, tight).order() == 360
    K = PermGroup(6, [parse_cycles("(1 2)(3 4)", 6), parse_cycles("(1 3)(2 4)", 6), parse_cycles("(5 6)", 6)])
    expect = oracles.closure(K.gen_tuples, 6) & oracles.closure(alternating_group(6).gen_tuples, 6)
    assert set(intersection(K.with_base([0]), alternating_group(6), tight).element_tuples()) == expect
    assert intersection(G, G).order() == 720


def test_intersection_examples():
    A5 = alternating_group(5)
    assert intersection(A5, A5).equals(A5)
    assert intersection(A5, PermGroup(5, [parse_cycles("(1 2)", 5)])).is_trivial()


def test_corpus_orders_against_closure(corpus):
    checked = 0
    for name, G in corpus:
        if G.order() <= 10_000:
            assert len(oracles.closure(G.gen_tuples, G.degree)) == G.order(), name
            checked += 1
    assert checked > 150


@pytest.mark.parametrize("name,order", [
    ("sym3", 6), ("alt4", 12), ("sym5", 120), ("alt5", 60), ("alt6", 360), ("sym6", 720),
    ("d8", 8), ("q8", 8), ("v4", 4), ("agl15", 20), ("agl17", 42), ("psl25", 60), ("pgl25", 120),
    ("psl27", 168), ("pgl27", 336), ("m11", 7920), ("m12", 95040),
])
def test_builtin_orders(name, order):
    assert BUILDERS[name]().order() == order


def test_point_stabilizers():
    assert alternating_group(5).point_stabilizer(0).order() == 12
    assert cyclic_group(7).point_stabilizer(3).is_trivial()
    st_ = symmetric_group(3).point_stabilizer(2)
    assert set(st_.element_tuples()) == {(0, 1, 2), (1, 0, 2)}


def test_pointwise_stabilizer():
    assert symmetric_group(6).pointwise_stabilizer([0, 1, 2]).order() == 6


def test_normality():
    assert is_normal(symmetric_group(5), alternating_group(5))
    assert not is_normal(symmetric_group(3), PermGroup(3, [parse_cycles("(1 2)", 3)]))
    with pytest.raises(ValidationError):
        is_normal(alternating_group(4), symmetric_group(4))


def test_normal_closure():
    S3 = symmetric_group(3)
    N = normal_closure(S3, [parse_cycles("(1 2 3)", 3)])
    assert N.equals(alternating_group(3))
    N = normal_closure(S3, [parse_cycles("(1 2)", 3)])
    assert N.equals(S3)


def test_normal_closure_matches_oracle():
    rng = random.Random(5)
    S4 = symmetric_group(4)
    els = list(oracles.closure(S4.gen_tuples, 4))
    for _ in range(10):
        s = rng.choice(els)
        assert set(normal_closure(S4, [s]).element_tuples()) == oracles.normal_closure(els, [s], 4)


def test_u_meet_base_group_small_wreath():
    spec = wreath_example(symmetric_group(3), symmetric_group(3))
    UG = intersection(spec.U, spec.G)
    assert UG.order() == 36
    assert set(UG.element_tuples()) == set(spec.U.element_tuples()) & set(spec.G.element_tuples())


def test_enumeration_cap():
    G = PermGroup(6, symmetric_group(6).gen_tuples, caps=Caps(enumeration=100))
    with pytest.raises(CapExceeded) as exc:
        list(G.element_tuples())
    assert "100" in str(exc.value)


def test_degree_cap():
    with pytest.raises(CapExceeded):
        PermGroup(20, [tuple(range(20))], caps=Caps(degree=10))


def test_generator_validation():
    with pytest.raises(Exception):
        PermGroup(3, [(0, 0, 1)])
    G = symmetric_group(4)
    with pytest.raises(ValidationError):
        alternating_group(4).subgroup([parse_cycles("(1 2)", 4)])
    assert G.subgroup([Permutation([1, 0, 2, 3])]).order() == 2
