"""Deterministic generator for the shipped corpus of small transitive groups.

Sources: cyclic, dihedral, alternating and symmetric groups, affine groups
over prime fields, PSL/PGL(2, p) on the projective line, M11 and M12,
imprimitive wreath products, regular representations of the small groups
found, and coset actions read off the subgroup lattices of a few seeds.
Duplicates are removed by a permutation-isomorphism invariant: degree,
order and the multiset of cycle types.
"""

from __future__ import annotations

import json
from collections import Counter
from typing import Iterator

from ..actions import CosetActionMap
from ..group import PermGroup, alternating_group, cyclic_group, dihedral_group, symmetric_group
from ..perm import Permutation, _mul, format_cycles
from .affine import affine_group, singer_matrix
from .field import gl_generators
from .named import BUILDERS, affine_line, mathieu_11, mathieu_12, mobius_group
from .wreath import wreath_product

FINGERPRINT_LIMIT = 50_000


def _regular(K: PermGroup) -> PermGroup:
    els = list(K.chain.elements())
    idx = {e: i for i, e in enumerate(els)}
    return PermGroup(len(els), [tuple(idx[_mul(e, g)] for e in els) for g in K.gen_tuples])


def _direct_product(H: PermGroup, K: PermGroup) -> PermGroup:
    """Intransitive direct product on the disjoint union of the two point sets."""
    n, m = H.degree, K.degree
    gens = [h + tuple(range(n, n + m)) for h in H.gen_tuples]
    gens += [tuple(range(n)) + tuple(n + v for v in k) for k in K.gen_tuples]
    return PermGroup(n + m, gens)


def _lattice_seeds() -> list[tuple[str, PermGroup]]:
    from .affine import linear_group

    sl23 = [m for m in gl_generators(2, 3) if m[0][0] * m[1][1] - m[0][1] * m[1][0] == 1]
    b = BUILDERS
    return [
        ("sym4", b["sym4"]()),
        ("alt4", b["alt4"]()),
        ("d8", b["d8"]()),
        ("q8", b["q8"]()),
        ("sym5", b["sym5"]()),
        ("alt5", b["alt5"]()),
        ("agl15", b["agl15"]()),
        ("agl17", b["agl17"]()),
        ("psl27", b["psl27"]()),
        ("pgl27", b["pgl27"]()),
        ("alt6", b["alt6"]()),
        ("gl23", linear_group(2, 3, gl_generators(2, 3))),
        ("sl23", linear_group(2, 3, sl23)),
        ("agl23", affine_group(2, 3, gl_generators(2, 3))),
        ("sym3xsym3", _direct_product(b["sym3"](), b["sym3"]())),
        ("sym4xc2", _direct_product(b["sym4"](), b["c2"]())),
        ("alt4xc3", _direct_product(b["alt4"](), b["c3"]())),
        ("d8xc2", _direct_product(b["d8"](), b["c2"]())),
        ("q8xc2", _direct_product(b["q8"](), b["c2"]())),
        ("sym3xc4", _direct_product(b["sym3"](), b["c4"]())),
        ("c2 wr c3", wreath_product(b["c2"](), b["c3"]())),
        ("c2 wr sym3", wreath_product(b["c2"](), b["sym3"]())),
        ("c2 wr c4", wreath_product(b["c2"](), b["c4"]())),
        ("c3 wr c2", wreath_product(b["c3"](), b["c2"]())),
        ("c4 wr c2", wreath_product(b["c4"](), b["c2"]())),
        ("sym3 wr c2", wreath_product(b["sym3"](), b["c2"]())),
        ("c3 wr c3", wreath_product(b["c3"](), b["c3"]())),
        ("c2xc2xc2", _direct_product(_direct_product(b["c2"](), b["c2"]()), b["c2"]())),
        ("c4xc4", _direct_product(b["c4"](), b["c4"]())),
        ("c2xc8", _direct_product(b["c2"](), cyclic_group(8))),
        ("c3xc3", _direct_product(b["c3"](), b["c3"]())),
        ("c2xc2xc4", _direct_product(_direct_product(b["c2"](), b["c2"]()), b["c4"]())),
    ]


def _sources(max_degree: int) -> Iterator[tuple[str, PermGroup]]:
    for n in range(2, max_degree + 1):
        yield f"C{n}", cyclic_group(n)
        if n >= 3:
            yield f"D{2 * n}", dihedral_group(n)
        if n >= 4:
            yield f"Alt({n})", alternating_group(n)
        yield f"Sym({n})", symmetric_group(n)
    for p in (5, 7, 11, 13):
        if p <= max_degree:
            for k in range(2, p):
                if (p - 1) % k == 0:
                    yield f"F{p}:{k}", affine_line(p, k)
    for d, p in ((3, 2), (2, 3), (4, 2)):
        if p**d <= max_degree:
            yield f"AGL({d},{p})", affine_group(d, p, gl_generators(d, p))
            yield f"AGammaL1({p}^{d})-Singer", affine_group(d, p, [singer_matrix(d, p)])
    for p in (5, 7, 11, 13):
        if p + 1 <= max_degree:
            yield f"PSL(2,{p})", mobius_group(p)
            yield f"PGL(2,{p})", mobius_group(p, True)
    if max_degree >= 11:
        yield "M11", mathieu_11()
    if max_degree >= 12:
        yield "M12", mathieu_12()
    factors = ["c2", "c3", "c4", "v4", "sym3", "d8", "alt4", "sym4", "c5", "agl15"]
    tops = ["c2", "c3", "sym3", "c4", "v4", "d8", "alt4", "sym4"]
    for tn in factors:
        T = BUILDERS[tn]()
        for hn in tops:
            H = BUILDERS[hn]()
            if T.degree * H.degree <= max_degree:
                yield f"{tn} wr {hn}", wreath_product(T, H)
    for name in ("q8", "d8", "v4", "alt4", "sym3", "c4"):
        K = BUILDERS[name]()
        if K.order() <= max_degree:
            yield f"regular({name})", _regular(K)
    from ..lattice import subgroup_lattice

    for name, K in _lattice_seeds():
        for i, U in enumerate(subgroup_lattice(K)):
            index = K.order() // U.order()
            if 2 <= index <= max_degree:
                yield f"{name}/U{i}", CosetActionMap(K, U).image_group()
        if K.order() <= max_degree:
            yield f"regular({name})", _regular(K)


def fingerprint(G: PermGroup) -> tuple:
    if G.order() > FINGERPRINT_LIMIT:
        return (G.degree, G.order())
    types = Counter(Permutation(e, check=False).cycle_type() for e in G.chain.elements())
    return (G.degree, G.order(), tuple(sorted(types.items())))


def generate_corpus(max_degree: int = 16) -> list[dict]:
    seen = set()
    out = []
    for name, G in _sources(max_degree):
        if G.degree < 2 or G.degree > max_degree or not G.is_transitive():
            continue
        key = fingerprint(G)
        if key in seen:
            continue
        seen.add(key)
        out.append({
            "name": name,
            "degree": G.degree,
            "order": G.order(),
            "generators": [format_cycles(Permutation(g, check=False)) for g in G.gen_tuples],
        })
    out.sort(key=lambda r: (r["degree"], r["order"], r["name"]))
    return out


def write_corpus(path, max_degree: int = 16) -> int:
    groups = generate_corpus(max_degree)
    with open(path, "w") as fh:
        json.dump({"max_degree": max_degree, "groups": groups}, fh, indent=1)
        fh.write("\n")
    return len(groups)


def write_builtins(path) -> int:
    from ..io import group_to_dict

    table = {name: group_to_dict(build()) for name, build in sorted(BUILDERS.items())}
    with open(path, "w") as fh:
        json.dump(table, fh, indent=1)
        fh.write("\n")
    return len(table)


if __name__ == "__main__":
    import argparse

    ap = argparse.ArgumentParser(description="regenerate the shipped group data files")
    ap.add_argument("outdir")
    args = ap.parse_args()
    print(write_builtins(f"{args.outdir}/builtins.json"), "built-ins")
    print(write_corpus(f"{args.outdir}/transitive_corpus.json"), "corpus groups")
