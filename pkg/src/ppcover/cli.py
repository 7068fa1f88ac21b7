"""Command-line front end.

Exit codes: 0 on a completed computation (whatever the verdict), 2 on bad
input or a failed validation, 3 when a configured cap is exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass
from pathlib import Path

from .config import Caps
from .errors import CapExceeded, InputError, PPCoverError, ValidationError

EXIT_OK, EXIT_INPUT, EXIT_CAP = 0, 2, 3


@dataclass(frozen=True)
class RunConfig:
    caps: Caps
    workers: int = 1
    fmt: str = "json"
    seed: int = 0
    timings: bool = False


# -- helpers --------------------------------------------------------------------

def _load(source, cfg):
    from .io import load_group

    return load_group(source, cfg.caps)


def _emit(payload, cfg: RunConfig, out) -> None:
    if isinstance(payload, str):
        text = payload
    else:
        text = json.dumps(payload, indent=2) + "\n"
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _tsv(rows: list[list], header: list[str]) -> str:
    lines = ["\t".join(header)]
    lines += ["\t".join("" if v is None else str(v) for v in r) for r in rows]
    return "\n".join(lines) + "\n"


def _report_tsv(d: dict) -> str:
    w = d["witness"] or {}
    header = ["verdict", "witness", "witness_order", "witness_prime", "pp_classes_total", "pp_classes_met", "n", "index_G_U", "mode"]
    row = [d["verdict"], w.get("cycles"), w.get("order"), w.get("prime"), d["pp_classes_total"], d["pp_classes_met"], d["n"], d["index_G_U"], d["mode"]]
    return _tsv([row], header)


def _parse_vectors(text: str | None):
    if not text:
        return None
    try:
        return [[int(x) for x in part.split(",")] for part in text.split(";") if part.strip()]
    except ValueError:
        raise InputError(f"cannot parse vectors {text!r}; use e.g. '1,0,0;0,1,0'") from None


# -- commands ---------------------------------------------------------------------

def cmd_verify_cover(args, cfg):
    from .covering import GroupTriple, verify_covering

    A, G, U = _load(args.A, cfg), _load(args.G, cfg), _load(args.U, cfg)
    triple = GroupTriple(A, G, U, require_normal=args.mode == "generic")
    rep = verify_covering(triple, caps=cfg.caps, mode=args.mode)
    return rep.to_dict(), rep.elapsed


def cmd_verify_cover_wreath(args, cfg):
    from .covering import compare_modes, verify_covering_wreath

    T, H = _load(args.T, cfg), _load(args.H, cfg)
    if args.k is not None and args.k != H.degree:
        raise InputError(f"--k {args.k} does not match the degree {H.degree} of H")
    if args.cross_validate:
        generic, structural = compare_modes(T, H, cfg.caps)
        keys = ("verdict", "pp_classes_total", "pp_classes_met", "n", "index_G_U")
        g, s = generic.to_dict(), structural.to_dict()
        payload = {"agree": all(g[k] == s[k] for k in keys), "generic": g, "structural": s}
        return payload, generic.elapsed + structural.elapsed
    rep = verify_covering_wreath(T, H, caps=cfg.caps)
    return rep.to_dict(), rep.elapsed


def _build_spec(args, cfg):
    from .constructions import affine_example, agl32_sylow_example, extraspecial_example, gl32_example, wreath_example

    if args.family == "affine":
        H = args.H if args.H in ("full", "singer") else json.loads(args.H)
        return affine_example(args.d, args.p, H, _parse_vectors(args.U), cfg.caps)
    if args.family == "extraspecial":
        return extraspecial_example(args.r, args.u, cfg.caps)
    if args.family == "wreath":
        T, H = _load(args.T, cfg), _load(args.H, cfg)
        if args.k is not None and args.k != H.degree:
            raise InputError(f"--k {args.k} does not match the degree {H.degree} of H")
        return wreath_example(T, H, cfg.caps)
    if args.family == "sylow":
        if args.kind == "gl32":
            return gl32_example(cfg.caps)
        return agl32_sylow_example(args.kind, cfg.caps)
    raise InputError(f"unknown family {args.family!r}")


def cmd_build_example(args, cfg):
    from .io import write_group

    spec = _build_spec(args, cfg)
    manifest = spec.manifest()
    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    write_group(outdir / "A.json", spec.A)
    write_group(outdir / "G.json", spec.G)
    write_group(outdir / "U.json", spec.U)
    if spec.family == "wreath":
        write_group(outdir / "T.json", spec.extras["T"])
        write_group(outdir / "H.json", spec.extras["H"])
        for i, N in enumerate(spec.extras["factors"], start=1):
            write_group(outdir / f"factor_{i}.json", N)
    (outdir / "manifest.json").write_text(json.dumps(manifest, indent=2) + "\n")
    return manifest, 0.0


def cmd_analyze(args, cfg):
    from .actions import CosetActionMap
    from .structure import analyze

    G = _load(args.G, cfg)
    extra = {}
    if args.U:
        U = _load(args.U, cfg)
        target = CosetActionMap(G, U, cfg.caps).image_group()
        extra["action"] = "cosets of U"
    else:
        target = G
        extra["action"] = "given"
    if target.degree < 2 or not target.is_transitive():
        raise ValidationError("analysis requires transitive input")
    t0 = time.perf_counter()
    rep = analyze(target, cfg.caps)
    out = rep.to_dict()
    out.update(extra)
    if args.U:
        out["U_maximal_in_G"] = rep.primitive
        if args.A:
            from .covering import GroupTriple, verify_covering

            triple = GroupTriple(_load(args.A, cfg), G, U, require_normal=False)
            out["covering_verdict"] = verify_covering(triple, caps=cfg.caps).verdict
    return out, time.perf_counter() - t0


def cmd_derangement(args, cfg):
    from .covering import prime_power_derangement
    from .perm import format_cycles, order_prime

    G = _load(args.G, cfg)
    t0 = time.perf_counter()
    x = prime_power_derangement(G, cfg.caps, seed=cfg.seed)
    payload = {"cycles": format_cycles(x), "order": x.order, "prime": order_prime(x)}
    return payload, time.perf_counter() - t0


def cmd_m_invariant(args, cfg):
    from .classes import a_classes, m_invariant

    G = _load(args.G, cfg)
    A = _load(args.A, cfg) if args.A else G
    t0 = time.perf_counter()
    table = a_classes(A, G, cfg.caps)
    if cfg.fmt == "tsv":
        return table.to_tsv(), time.perf_counter() - t0
    rep = m_invariant(A, G, cfg.caps, table=table)
    return rep.to_dict(), time.perf_counter() - t0


def cmd_subgroups(args, cfg):
    from .lattice import subgroup_lattice

    G = _load(args.G, cfg)
    t0 = time.perf_counter()
    subs = subgroup_lattice(G, cfg.caps)
    orders: dict[int, int] = {}
    for U in subs:
        orders[U.order()] = orders.get(U.order(), 0) + 1
    payload = {"group_order": G.order(), "count": len(subs), "by_order": {str(k): v for k, v in sorted(orders.items())}}
    return payload, time.perf_counter() - t0


def cmd_gs_scan(args, cfg):
    from .lattice import guralnick_saxl_scan

    A, T = _load(args.A, cfg), _load(args.T, cfg)
    t0 = time.perf_counter()
    res = guralnick_saxl_scan(A, T, cfg.caps)
    return res.to_dict(), time.perf_counter() - t0


def cmd_class_graph(args, cfg):
    from .structure import class_graph

    A, G = _load(args.A, cfg), _load(args.G, cfg)
    minimal = [_load(m, cfg) for m in args.minimal] if args.minimal else None
    t0 = time.perf_counter()
    if args.U:
        from .actions import CosetActionMap

        act = CosetActionMap(A, _load(args.U, cfg), cfg.caps)
        A, G = act.image_group(), act.image_of(G)
        if minimal:
            minimal = [act.image_of(N) for N in minimal]
    graph = class_graph(A, G, minimal, cfg.caps)
    if args.dot:
        return graph.to_dot(), time.perf_counter() - t0
    return graph.to_dict(), time.perf_counter() - t0


REPORT_HEADER = ["family", "params", "n", "index_G_U", "verdict", "mode", "index_lt_n", "index_over_n", "m0_G", "m0_T"]


def _report_row(mdir: Path, cfg: RunConfig) -> list:
    from .classes import m_invariant
    from .covering import GroupTriple, verify_covering, verify_covering_wreath
    from .io import load_group

    manifest = json.loads((mdir / "manifest.json").read_text())
    family = manifest.get("family", "?")
    params = json.dumps(manifest.get("params", {}), sort_keys=True, separators=(",", ":"))
    try:
        A, G, U = (load_group(str(mdir / f"{x}.json"), cfg.caps) for x in "AGU")
        m0_T = "NA"
        if (mdir / "T.json").is_file() and (mdir / "H.json").is_file():
            T, H = load_group(str(mdir / "T.json"), cfg.caps), load_group(str(mdir / "H.json"), cfg.caps)
            rep = verify_covering_wreath(T, H, caps=cfg.caps)
            m0_T = m_invariant(T, T, cfg.caps).m
        else:
            rep = verify_covering(GroupTriple(A, G, U, require_normal=False), caps=cfg.caps)
        m0_G = m_invariant(G, G, cfg.caps).m if G.order() <= cfg.caps.enumeration else "NA"
        n, idx = rep.n, rep.index_G_U
        return [family, params, n, idx, rep.verdict, rep.mode, "yes" if idx < n else "no", f"{idx / n:.6f}", m0_G, m0_T]
    except (PPCoverError, OSError, ValueError) as exc:
        return [family, params, "", "", f"error: {exc}", "", "", "", "", ""]


def cmd_report(args, cfg):
    root = Path(args.corpus)
    if not root.is_dir():
        raise InputError(f"{args.corpus}: not a directory")
    dirs = sorted(p.parent for p in root.rglob("manifest.json"))
    t0 = time.perf_counter()
    rows = [_report_row(d, cfg) for d in dirs]
    rows.sort(key=lambda r: (str(r[0]), str(r[1])))
    return _tsv(rows, REPORT_HEADER), time.perf_counter() - t0


# -- parser ---------------------------------------------------------------------

def _add_globals(ap: argparse.ArgumentParser, suppress: bool) -> None:
    # subcommand copies default to SUPPRESS so they only override when given
    d = Caps()

    def dflt(v):
        return argparse.SUPPRESS if suppress else v

    ap.add_argument("--enum-cap", type=int, default=dflt(d.enumeration), help="max elements enumerated")
    ap.add_argument("--degree-cap", type=int, default=dflt(d.degree), help="max permutation degree")
    ap.add_argument("--lattice-cap", type=int, default=dflt(d.lattice), help="max group order for subgroup lattices")
    ap.add_argument("--backtrack-cap", type=int, default=dflt(d.backtrack_steps), help="max backtrack steps")
    ap.add_argument("--witness-budget", type=int, default=dflt(d.witness_budget), help="max class size searched to re-check a witness")
    ap.add_argument("--workers", type=int, default=dflt(1), help="accepted for compatibility; computation is sequential")
    ap.add_argument("--format", choices=("json", "tsv"), default=dflt("json"))
    ap.add_argument("--out", default=dflt(None), help="write the result here instead of stdout")
    ap.add_argument("--seed", type=int, default=dflt(0), help="seed for the sampling fallback of the derangement search")
    ap.add_argument("--timings", action="store_true", default=dflt(False), help="print elapsed seconds to stderr")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="ppcover", description="prime-power covering subgroups of permutation groups")
    _add_globals(ap, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _add_globals(common, suppress=True)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser(parents=[common], name="verify-cover", help="decide P_A(U) = P_A(G)")
    p.add_argument("A")
    p.add_argument("G")
    p.add_argument("U")
    p.add_argument("--mode", choices=("auto", "generic", "ambient"), default="auto")
    p.set_defaults(func=cmd_verify_cover)

    p = sub.add_parser(parents=[common], name="verify-cover-wreath", help="class-tuple check for T wr H with the diagonal-pair subgroup")
    p.add_argument("T")
    p.add_argument("H")
    p.add_argument("--k", type=int)
    p.add_argument("--cross-validate", action="store_true", help="also run the generic checker and compare")
    p.set_defaults(func=cmd_verify_cover_wreath)

    p = sub.add_parser(parents=[common], name="build-example", help="write A.json, G.json, U.json and a manifest")
    p.add_argument("family", choices=("affine", "extraspecial", "wreath", "sylow"))
    p.add_argument("--outdir", required=True)
    p.add_argument("--d", type=int, default=2)
    p.add_argument("--p", type=int, default=2)
    p.add_argument("--H", default="full", help="affine: full, singer or a JSON list of matrices; wreath: group")
    p.add_argument("--U", help="affine: spanning vectors, e.g. '1,0,0;0,1,0'")
    p.add_argument("--r", type=int, default=3)
    p.add_argument("--u", type=int, default=0, help="extraspecial: index of the U choice")
    p.add_argument("--T", help="wreath: the factor group")
    p.add_argument("--k", type=int)
    p.add_argument("--kind", choices=("d8", "c4", "gl32"), default="d8", help="sylow: which example")
    p.set_defaults(func=cmd_build_example)

    p = sub.add_parser(parents=[common], name="analyze", help="minimal normal subgroups, plinths, primitivity")
    p.add_argument("G")
    p.add_argument("--U", help="analyze the action of G on the cosets of U instead")
    p.add_argument("--A", help="with --U: also report the covering verdict for (A, G, U)")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser(parents=[common], name="derangement", help="a fixed-point-free element of prime-power order")
    p.add_argument("G")
    p.set_defaults(func=cmd_derangement)

    p = sub.add_parser(parents=[common], name="m-invariant", help="max over p of the number of A-classes of p-elements (tsv: class table)")
    p.add_argument("G")
    p.add_argument("--A", help="fusing overgroup (default: G itself)")
    p.set_defaults(func=cmd_m_invariant)

    p = sub.add_parser(parents=[common], name="subgroups", help="count all subgroups")
    p.add_argument("G")
    p.set_defaults(func=cmd_subgroups)

    p = sub.add_parser(parents=[common], name="gs-scan", help="check that no proper subgroup of simple T covers")
    p.add_argument("A")
    p.add_argument("T")
    p.set_defaults(func=cmd_gs_scan)

    p = sub.add_parser(parents=[common], name="class-graph", help="socle-factor graph on the G-orbits")
    p.add_argument("A")
    p.add_argument("G")
    p.add_argument("--minimal", nargs="+", help="group files of the minimal normal subgroups of G")
    p.add_argument("--U", help="act on the cosets of U in A first")
    p.add_argument("--dot", action="store_true", help="emit DOT instead of JSON")
    p.set_defaults(func=cmd_class_graph)

    p = sub.add_parser(parents=[common], name="report", help="TSV summary of a directory of built examples")
    p.add_argument("corpus")
    p.set_defaults(func=cmd_report)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        caps = Caps(
            enumeration=args.enum_cap,
            degree=args.degree_cap,
            lattice=args.lattice_cap,
            backtrack_steps=args.backtrack_cap,
            witness_budget=args.witness_budget,
        )
        cfg = RunConfig(caps, max(1, args.workers), args.format, args.seed, args.timings)
        payload, elapsed = args.func(args, cfg)
        if cfg.fmt == "tsv" and isinstance(payload, dict) and "verdict" in payload:
            payload = _report_tsv(payload)
        _emit(payload, cfg, args.out)
        if cfg.timings:
            sys.stderr.write(json.dumps({"command": args.command, "elapsed_s": round(elapsed, 6)}) + "\n")
        return EXIT_OK
    except CapExceeded as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_CAP
    except (InputError, ValidationError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    raise SystemExit(main())
