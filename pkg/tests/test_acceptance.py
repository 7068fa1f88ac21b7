"""Acceptance gate.  One test per criterion; the summary hook in conftest prints
a PASS/FAIL line for each."""

import hashlib
import random
import time

from fixtures import nontrivial_core_fixtures
from ppcover.actions import CosetActionMap, is_primitive
from ppcover.classes import m_invariant
from ppcover.cli import main
from ppcover.constructions import (
    affine_example,
    agl32_sylow_example,
    extraspecial_example,
    gl32_example,
    wreath_example,
)
from ppcover.constructions.extraspecial import exponent
from ppcover.constructions.field import subspaces
from ppcover.constructions.named import BUILDERS
from ppcover.covering import (
    GroupTriple,
    compare_modes,
    core_reduction,
    cross_validate,
    prime_power_derangement,
    verify_covering,
    verify_covering_wreath,
)
from ppcover.group import alternating_group, cyclic_group, symmetric_group
from ppcover.lattice import guralnick_saxl_scan, subgroup_lattice
from ppcover.perm import prime_power_base
from ppcover.structure import analyze, greedy_colouring, max_degree


class Clock:
    def __init__(self, limit):
        self.limit = limit

    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.t0
        if exc[0] is None:
            assert self.elapsed < self.limit, f"took {self.elapsed:.1f}s, limit {self.limit}s"


def test_criterion_01_agl32_sylow():
    verdicts = {}
    for kind in ("d8", "c4"):
        with Clock(5):
            spec = agl32_sylow_example(kind)
            assert spec.U.order() == {"d8": 16, "c4": 8}[kind] and spec.G.order() == 64
            verdicts[kind] = verify_covering(spec.triple).verdict
    assert verdicts == {"d8": "covered", "c4": "covered"}


def test_criterion_02_gl32():
    with Clock(5):
        t = gl32_example().triple
        rep = verify_covering(t)
    assert rep.covered
    assert (t.index_G_U, t.n) == (2, 21)


def test_criterion_03_smallest():
    with Clock(1):
        A4, V4 = alternating_group(4), BUILDERS["v4"]()
        C2 = [U for U in subgroup_lattice(V4) if U.order() == 2][0]
        rep = verify_covering(GroupTriple(A4, V4, C2))
    assert rep.covered


def test_criterion_04_affine_family():
    with Clock(10):
        count = 0
        for d, p in ((2, 2), (3, 2), (2, 3)):
            for basis in subspaces(d, p)[1:-1]:
                t = affine_example(d, p, "full", basis).triple
                assert verify_covering(t).covered, (d, p, basis)
                assert t.index_G_U < t.n
                count += 1
        s = affine_example(2, 3, "singer").triple
        assert verify_covering(s).covered
    # 3 lines of F_2^2, 7 lines and 7 planes of F_2^3, 4 lines of F_3^2
    assert count == 3 + 14 + 4
    assert (s.n, s.index_G_U) == (8, 3)
    assert s.n / 3 < s.index_G_U < s.n


def test_criterion_05_extraspecial():
    with Clock(30):
        spec = extraspecial_example(3)
        G, Z = spec.G, spec.extras["center"]
        between = [U for U in subgroup_lattice(G) if Z.order() < U.order() < G.order() and Z.is_subgroup_of(U)]
        assert len(between) == len(spec.extras["choices"])
        for u in range(len(between)):
            assert verify_covering(extraspecial_example(3, u).triple).covered
    assert spec.A.order() == 648
    assert exponent(spec.extras["table"]) == 3 and Z.order() == 3


def test_criterion_06_structural_wreath():
    with Clock(30):
        T = alternating_group(5)
        rep = verify_covering_wreath(T, alternating_group(4))
        m0 = m_invariant(T, T).m
    assert rep.covered and rep.mode == "structural-wreath"
    assert (rep.n, rep.index_G_U) == (12, 60)
    assert m0 == 3 and alternating_group(4).degree == m0 + 1


def test_criterion_07_cross_validation():
    with Clock(120):
        for tn, H in (("sym3", symmetric_group(3)), ("alt4", cyclic_group(2)), ("c2", symmetric_group(2))):
            assert cross_validate(BUILDERS[tn](), H), tn
        rep = verify_covering_wreath(alternating_group(5), cyclic_group(3))
        generic, structural = compare_modes(BUILDERS["alt4"](), cyclic_group(3))
    assert rep.verdict == "witness" and rep.witness_checked
    assert prime_power_base(rep.witness_order) is not None
    assert generic.verdict == structural.verdict == "witness"
    assert (generic.pp_classes_total, generic.pp_classes_met) == (structural.pp_classes_total, structural.pp_classes_met)


def test_criterion_08_derangements(corpus):
    assert len(corpus) >= 200
    with Clock(120):
        for name, G in corpus:
            g = prime_power_derangement(G)
            assert not g.fixed_points(), name
            assert prime_power_base(g.order) is not None, name


def test_criterion_09_gs_scan():
    with Clock(60):
        for an in ("sym5", "alt5"):
            res = guralnick_saxl_scan(BUILDERS[an](), alternating_group(5))
            assert res.confirmed and res.counterexample is None, an
            assert res.subgroups == 59


def test_criterion_10_core_reduction():
    with Clock(60):
        fixtures = nontrivial_core_fixtures()
        for name, triple in fixtures:
            red = core_reduction(triple)
            assert not red.kernel.is_trivial(), name
            assert red.triple.index_G_U == triple.index_G_U, name
            assert verify_covering(red.triple).verdict == verify_covering(triple).verdict, name
    assert len(fixtures) >= 5


def test_criterion_11_structure():
    with Clock(60):
        spec = wreath_example(alternating_group(5), alternating_group(4))
        G_hat = CosetActionMap(spec.G, spec.U).image_group()
        rep = analyze(G_hat)
        m = m_invariant(symmetric_group(5), alternating_group(5)).m
    assert len(rep.plinths) == 2
    assert [N.order() for N in rep.plinths] == [60, 60] and all(rep.plinth_regular)
    assert rep.primitive and is_primitive(G_hat)
    s, n = 1, spec.triple.n
    assert (m, n) == (2, 12)
    assert max(s, m - 1) <= s * (m - 1) <= n


def test_criterion_12_colouring():
    rng = random.Random(12)
    with Clock(10):
        for _ in range(500):
            n = rng.randint(1, 64)
            p = rng.random()
            edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
            colour = greedy_colouring(n, edges)
            assert len(colour) == n
            assert all(colour[u] != colour[v] for u, v in edges)
            assert max(colour) + 1 <= max_degree(n, edges) + 1


def _payload(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    assert code == 0, argv
    return hashlib.sha256(out.encode()).hexdigest()


def test_criterion_13_determinism(capsys, tmp_path):
    dirs = {}
    builds = {
        "sylow": ["sylow", "--kind", "gl32"],
        "affine": ["affine", "--d", "2", "--p", "3", "--H", "singer"],
        "extra": ["extraspecial", "--r", "3"],
        "wreath": ["wreath", "--T", "alt5", "--H", "alt4"],
    }
    for key, argv in builds.items():
        a = _payload(capsys, ["build-example", *argv, "--outdir", str(tmp_path / f"{key}1")])
        b = _payload(capsys, ["build-example", *argv, "--outdir", str(tmp_path / f"{key}2")])
        assert a == b, key
        for f in ("A", "G", "U", "manifest"):
            assert (tmp_path / f"{key}1" / f"{f}.json").read_bytes() == (tmp_path / f"{key}2" / f"{f}.json").read_bytes()
        dirs[key] = tmp_path / f"{key}1"
    w = dirs["wreath"]
    factors = [str(w / f"factor_{i}.json") for i in range(1, 5)]
    commands = [
        ["verify-cover", *(str(dirs["sylow"] / f"{f}.json") for f in "AGU")],
        ["verify-cover", *(str(dirs["affine"] / f"{f}.json") for f in "AGU")],
        ["verify-cover", *(str(dirs["extra"] / f"{f}.json") for f in "AGU")],
        ["verify-cover-wreath", "alt5", "alt4"],
        ["verify-cover-wreath", "sym3", "sym3", "--cross-validate"],
        ["verify-cover-wreath", "alt5", "c3"],
        ["derangement", "m12"],
        ["derangement", "psl27"],
        ["gs-scan", "sym5", "alt5"],
        ["m-invariant", "alt5", "--A", "sym5"],
        ["analyze", str(w / "G.json"), "--U", str(w / "U.json")],
        ["class-graph", str(w / "A.json"), str(w / "G.json"), "--U", str(w / "U.json"), "--minimal", *factors],
        ["subgroups", "alt5"],
        ["report", str(tmp_path)],
    ]
    for argv in commands:
        assert _payload(capsys, argv) == _payload(capsys, argv), argv
