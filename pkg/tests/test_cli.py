import hashlib
import json

import pytest

from ppcover.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def write(path, obj):
    path.write_text(json.dumps(obj))
    return str(path)


def test_verify_cover_witness(capsys, tmp_path):
    U = write(tmp_path / "u.json", {"degree": 3, "generators": ["(1 2)"]})
    code, out, _ = run(capsys, "verify-cover", "sym3", "sym3", U)
    assert code == 0
    d = json.loads(out)
    assert d["verdict"] == "witness" and d["witness"]["order"] == 3


def test_verify_cover_tsv(capsys, tmp_path):
    U = write(tmp_path / "u.json", {"degree": 3, "generators": ["(1 2)"]})
    code, out, _ = run(capsys, "verify-cover", "sym3", "sym3", U, "--format", "tsv")
    header, row = out.splitlines()
    assert header.startswith("verdict\twitness") and row.startswith("witness\t(1 2 3)")


def test_malformed_generator_exit_2(capsys, tmp_path):
    U = write(tmp_path / "u.json", {"degree": 3, "generators": ["(1 2"]})
    code, out, err = run(capsys, "verify-cover", "sym3", "sym3", U)
    assert code == 2 and out == ""
    assert "column" in err


def test_validation_error_exit_2(capsys):
    code, out, err = run(capsys, "verify-cover", "alt4", "sym4", "alt4")
    assert code == 2 and out == ""


def test_cap_exit_3(capsys):
    code, out, err = run(capsys, "--lattice-cap", "100", "subgroups", "alt6")
    assert code == 3 and out == "" and "cap" in err


def test_analyze_intransitive(capsys, tmp_path):
    G = write(tmp_path / "g.json", {"degree": 4, "generators": ["(1 2)"]})
    code, _, err = run(capsys, "analyze", G)
    assert code == 2 and "analysis requires transitive input" in err


def test_analyze_affine_line(capsys):
    code, out, _ = run(capsys, "analyze", "agl15")
    d = json.loads(out)
    assert code == 0 and d["innately_transitive"] and d["primitive"]
    assert d["plinth_abelian"] == [True] and d["plinth_regular"] == [True]


def test_build_family3_and_analyze(capsys, tmp_path):
    out_dir = tmp_path / "w"
    code, out, _ = run(capsys, "build-example", "wreath", "--T", "alt5", "--H", "alt4", "--k", "4", "--outdir", str(out_dir))
    m = json.loads(out)
    assert code == 0 and m["n"] == 12 and m["index_G_U"] == 60
    for f in ("A", "G", "U", "T", "H", "manifest"):
        assert (out_dir / f"{f}.json").is_file()
    code, out, _ = run(capsys, "analyze", str(out_dir / "G.json"), "--U", str(out_dir / "U.json"))
    d = json.loads(out)
    assert d["plinths"] == 2 and d["primitive"] and d["U_maximal_in_G"]


def test_build_k_mismatch(capsys, tmp_path):
    code, _, err = run(capsys, "build-example", "wreath", "--T", "alt5", "--H", "alt4", "--k", "3", "--outdir", str(tmp_path))
    assert code == 2


@pytest.mark.parametrize("argv,key,value", [
    (["affine", "--d", "3", "--p", "2", "--H", "full"], "order_A", 1344),
    (["extraspecial", "--r", "3"], "order_A", 648),
    (["sylow", "--kind", "gl32"], "n", 21),
])
def test_build_examples(capsys, tmp_path, argv, key, value):
    code, out, _ = run(capsys, "build-example", *argv, "--outdir", str(tmp_path))
    m = json.loads(out)
    assert code == 0 and m[key] == value
    if argv[0] == "extraspecial":
        assert len(m["u_choices"]) == 4


def test_report(capsys, tmp_path):
    corpus = tmp_path / "corpus"
    for name, argv in (("a", ["affine", "--d", "2", "--p", "3", "--H", "singer"]), ("w", ["wreath", "--T", "alt5", "--H", "alt4"])):
        assert main(["build-example", *argv, "--outdir", str(corpus / name)]) == 0
    capsys.readouterr()
    (corpus / "broken").mkdir()
    (corpus / "broken" / "manifest.json").write_text('{"family": "zz", "params": {}}')
    code, out, _ = run(capsys, "report", str(corpus))
    assert code == 0
    lines = out.splitlines()
    header = lines[0].split("\t")
    rows = [dict(zip(header, r.split("\t"))) for r in lines[1:]]
    assert [r["family"] for r in rows] == ["affine", "wreath", "zz"]
    assert rows[0]["verdict"] == "covered" and rows[0]["index_lt_n"] == "yes"
    assert rows[1]["index_G_U"] == "60" and rows[1]["n"] == "12" and rows[1]["index_lt_n"] == "no"
    assert rows[1]["m0_T"] == "3"
    assert rows[2]["verdict"].startswith("error:")


def test_empty_report(capsys, tmp_path):
    code, out, _ = run(capsys, "report", str(tmp_path))
    assert code == 0 and len(out.splitlines()) == 1


def test_derangement_and_m_invariant(capsys):
    code, out, _ = run(capsys, "derangement", "m11")
    d = json.loads(out)
    assert code == 0 and d["prime"] is not None
    code, out, _ = run(capsys, "m-invariant", "alt5")
    assert json.loads(out)["m"] == 3
    code, out, _ = run(capsys, "m-invariant", "alt5", "--A", "sym5")
    assert json.loads(out)["m"] == 2
    code, out, _ = run(capsys, "m-invariant", "alt5", "--format", "tsv")
    assert len(out.splitlines()) == 6


def test_subgroups_and_scan(capsys):
    code, out, _ = run(capsys, "subgroups", "alt5")
    assert json.loads(out)["count"] == 59
    code, out, _ = run(capsys, "gs-scan", "sym5", "alt5")
    assert json.loads(out)["confirmed"] is True


def test_class_graph_cli(capsys, tmp_path):
    d = tmp_path / "w"
    assert main(["build-example", "wreath", "--T", "alt5", "--H", "alt4", "--outdir", str(d)]) == 0
    capsys.readouterr()
    factors = [str(d / f"factor_{i}.json") for i in range(1, 5)]
    code, out, _ = run(capsys, "class-graph", str(d / "A.json"), str(d / "G.json"), "--U", str(d / "U.json"), "--minimal", *factors)
    g = json.loads(out)
    assert code == 0 and g["n_orbits"] == 12 and len(g["edges"]) <= 12
    code, out, _ = run(capsys, "class-graph", str(d / "A.json"), str(d / "G.json"), "--U", str(d / "U.json"), "--minimal", *factors, "--dot")
    assert out.startswith("graph socle_factors {")


def test_out_flag_and_timings(capsys, tmp_path):
    target = tmp_path / "r.json"
    code, out, err = run(capsys, "--timings", "verify-cover-wreath", "alt5", "alt4", "--out", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["verdict"] == "covered"
    assert "elapsed_s" in err and "elapsed" not in target.read_text()


def _digest(capsys, argv):
    assert main(argv) == 0
    return hashlib.sha256(capsys.readouterr().out.encode()).hexdigest()


@pytest.mark.parametrize("argv", [
    ["verify-cover-wreath", "alt4", "c3", "--cross-validate"],
    ["derangement", "m12", "--seed", "7"],
    ["m-invariant", "psl27", "--A", "pgl27"],
    ["subgroups", "sym4"],
    ["gs-scan", "alt5", "alt5"],
    ["analyze", "psl27"],
])
def test_repeat_runs_identical(capsys, argv):
    assert _digest(capsys, argv) == _digest(capsys, argv)
