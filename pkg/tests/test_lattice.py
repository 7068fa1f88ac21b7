import pytest

import oracles
from ppcover.config import Caps
from ppcover.constructions.named import BUILDERS
from ppcover.errors import CapExceeded, ValidationError
from ppcover.group import alternating_group, cyclic_group, symmetric_group
from ppcover.lattice import closure_oracle_count, guralnick_saxl_scan, subgroup_lattice, subgroup_sets


@pytest.mark.parametrize("name,count", [("sym3", 6), ("alt4", 10), ("sym4", 30), ("alt5", 59), ("d8", 10), ("q8", 6)])
def test_lattice_matches_oracle(name, count):
    G = BUILDERS[name]()
    ei, subs = subgroup_sets(G)
    got = {frozenset(ei.elements[i] for i in s) for s, _ in subs}
    assert got == oracles.all_subgroups(oracles.closure(G.gen_tuples, G.degree), G.degree)
    assert len(got) == count


@pytest.mark.parametrize("name,count", [("psl27", 179), ("pgl27", 413), ("sym5", 156)])
def test_lattice_regression_counts(name, count):
    assert len(subgroup_lattice(BUILDERS[name]())) == count


def test_two_generated_oracle():
    # every subgroup of Sym(4) and Alt(5) is generated by two elements
    for name in ("sym4", "alt5"):
        G = BUILDERS[name]()
        assert closure_oracle_count(G) == len(subgroup_lattice(G))


def test_lattice_order_and_groups():
    subs = subgroup_lattice(symmetric_group(4))
    orders = [U.order() for U in subs]
    assert orders == sorted(orders)
    assert orders[0] == 1 and orders[-1] == 24
    assert all(U.is_subgroup_of(symmetric_group(4)) for U in subs)


def test_lattice_cap():
    with pytest.raises(CapExceeded):
        subgroup_lattice(alternating_group(6), Caps(lattice=100))


@pytest.mark.parametrize("an,total,best", [("sym5", 4, 3), ("alt5", 5, 4)])
def test_scan_alt5(an, total, best):
    res = guralnick_saxl_scan(BUILDERS[an](), alternating_group(5))
    assert res.confirmed and res.counterexample is None
    assert res.subgroups == 59 and res.proper_subgroups == 58
    assert res.pp_classes_total == total and res.max_classes_met == best


def test_scan_psl27():
    res = guralnick_saxl_scan(BUILDERS["pgl27"](), BUILDERS["psl27"]())
    assert res.confirmed and res.subgroups == 179


def test_scan_rejects_non_simple():
    with pytest.raises(ValidationError):
        guralnick_saxl_scan(symmetric_group(4), alternating_group(4))
    with pytest.raises(ValidationError):
        guralnick_saxl_scan(cyclic_group(5), cyclic_group(5))
