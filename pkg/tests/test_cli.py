import io
import json
from contextlib import redirect_stdout

import pytest

from posetmodels import fixture
from posetmodels.cli import run_cli
from posetmodels.errors import UnknownFixture
from posetmodels.formats import (
    InstanceFile,
    ReportFile,
    parse_instance,
    parse_report,
    print_instance,
    print_report,
)

from test_models import left_printed, right_printed


def run(argv):
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = run_cli(argv)
    return code, buf.getvalue()


def write_fixture(tmp_path, name):
    path = tmp_path / f"{name}.json"
    code, out = run(["fixture", name])
    assert code == 0
    path.write_text(out, encoding="utf-8")
    return str(path)


def write_structure(tmp_path, rel_name, m, filename):
    inst = fixture(rel_name)
    inst.cof = [tuple(p) for p in sorted(m.cof.name_pairs()) if p[0] != p[1]]
    inst.fib = [tuple(p) for p in sorted(m.fib.name_pairs()) if p[0] != p[1]]
    path = tmp_path / filename
    path.write_text(print_instance(inst), encoding="utf-8")
    return str(path)


def test_instance_round_trip():
    inst = fixture("two-structures")
    assert parse_instance(print_instance(inst)) == inst
    full = fixture("forced")
    full.cof = [("U", "C")]
    full.fib = [("C", "D")]
    assert parse_instance(print_instance(full)) == full


def test_report_round_trip():
    rep = ReportFile(
        command=["recognize", "x.json"],
        decision="yes",
        witnesses=[{"check": "s2of3", "witness": ["a", "b", "c"]}],
        structures=[{"we": [["a", "b"]], "cof": [], "fib": []}],
        centers=[[["a", "a"], ["b", "a"]]],
        zigzag={"directions": ["lr", "rl"]},
    )
    assert parse_report(print_report(rep)) == rep


def test_parse_errors_name_line_and_field(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"version": 1,\n  "elements": [1],\n}', encoding="utf-8")
    code, _ = run(["validate", str(bad)])
    assert code == 2
    bad.write_text(json.dumps({"version": 1, "elements": [1]}), encoding="utf-8")
    code, _ = run(["validate", str(bad)])
    assert code == 2
    bad.write_text(json.dumps({"version": 2, "elements": []}), encoding="utf-8")
    code, _ = run(["validate", str(bad)])
    assert code == 2


def test_unknown_fixture():
    with pytest.raises(UnknownFixture):
        fixture("nope")
    code, _ = run(["fixture", "nope"])
    assert code == 2


def test_validate_and_recognize(tmp_path):
    path = write_fixture(tmp_path, "two-structures")
    code, out = run(["validate", path])
    assert code == 0 and parse_report(out).decision == "valid"
    code, out = run(["recognize", path])
    assert code == 0 and parse_report(out).decision == "yes"

    bad = write_fixture(tmp_path, "s2of3-fail")
    code, out = run(["recognize", bad])
    rep = parse_report(out)
    assert code == 1 and rep.decision == "no"
    assert rep.witnesses[0]["check"] == "s2of3"
    assert rep.witnesses[0]["witness"] == ["a", "b", "c"]


def test_add_identities_flag(tmp_path):
    inst = fixture("two-structures")
    inst.add_identities = False
    path = tmp_path / "no-ids.json"
    path.write_text(print_instance(inst), encoding="utf-8")
    code, _ = run(["validate", str(path)])
    assert code == 2  # MissingIdentities
    code, _ = run(["--add-identities", "validate", str(path)])
    assert code == 0


def test_centers_commands(tmp_path):
    path = write_fixture(tmp_path, "two-structures")
    code, out = run(["centers", "find", path])
    rep = parse_report(out)
    assert code == 0 and rep.decision == "found" and len(rep.centers) == 1
    assert ["A", "A"] in rep.centers[0]
    code, out = run(["centers", "enumerate", path])
    assert code == 0 and len(parse_report(out).centers) == 4
    code, out = run(["centers", "enumerate", "--limit", "2", path])
    rep = parse_report(out)
    assert len(rep.centers) == 2
    assert any(w["check"] == "enumeration_truncated" for w in rep.witnesses)
    bad = write_fixture(tmp_path, "s2of3-fail")
    code, out = run(["centers", "find", bad])
    assert code == 1 and parse_report(out).decision == "absent"


def test_synthesize_methods(tmp_path):
    path = write_fixture(tmp_path, "two-structures")
    for method in ("terminal", "centers", "centers-dual"):
        code, out = run(["synthesize", "--method", method, path])
        rep = parse_report(out)
        assert code == 0 and rep.decision == "synthesized"
        assert rep.structures[0]["we"]
    gens = tmp_path / "gens.json"
    inst = fixture("two-structures")
    inst.weq = [("A", "C"), ("B", "C"), ("Bp", "C")]
    gens.write_text(print_instance(inst), encoding="utf-8")
    code, out = run(["synthesize", "--method", "genmc", "--generators", str(gens), path])
    assert code == 0
    bad = write_fixture(tmp_path, "s2of3-fail")
    code, out = run(["synthesize", "--method", "terminal", bad])
    assert code == 1 and parse_report(out).decision == "failed"


def test_verify_and_newcofib(tmp_path, two_structures):
    right = right_printed(two_structures)
    spath = write_structure(tmp_path, "two-structures", right, "right.json")
    code, out = run(["verify", spath])
    assert code == 0 and parse_report(out).decision == "verified"
    code, out = run(["synthesize", "--method", "newcofib", spath])
    assert code == 0

    broken = fixture("two-structures")
    broken.cof = [("A", "B")]
    broken.fib = [("A", "B")]
    bpath = tmp_path / "broken.json"
    bpath.write_text(print_instance(broken), encoding="utf-8")
    code, out = run(["verify", str(bpath)])
    rep = parse_report(out)
    assert code == 1 and rep.decision == "failed" and rep.witnesses


def test_enumerate_command(tmp_path):
    path = write_fixture(tmp_path, "forced")
    code, out = run(["enumerate", path])
    rep = parse_report(out)
    assert code == 0 and rep.decision == "yes" and len(rep.structures) == 1
    bad = write_fixture(tmp_path, "s2of3-fail")
    code, out = run(["enumerate", bad])
    assert code == 1 and parse_report(out).structures == []
    big = write_fixture(tmp_path, "trunc-2")
    code, _ = run(["enumerate", big])
    assert code == 2  # default caps exceeded
    code, out = run(["enumerate", "--max-elements", "24", "--max-generators", "32", big])
    assert code == 0


def test_zigzag_and_reduce_commands(tmp_path, two_structures):
    left = write_structure(tmp_path, "two-structures", left_printed(two_structures), "l.json")
    right = write_structure(tmp_path, "two-structures", right_printed(two_structures), "r.json")
    code, out = run(["zigzag", left, right])
    rep = parse_report(out)
    assert code == 0 and rep.decision == "equivalent"
    assert len(rep.structures) == len(rep.zigzag["directions"]) + 1
    code, out = run(["zigzag", "--contract", left, right])
    assert code == 0

    from posetmodels import enumerate_model_structures, load

    forced_struct = enumerate_model_structures(load("forced"))[0]
    opath = write_structure(tmp_path, "forced", forced_struct, "forced-struct.json")
    code, _ = run(["zigzag", left, opath])
    assert code == 2  # mismatched base

    code, out = run(["reduce", right])
    rep = parse_report(out)
    assert code == 0 and rep.decision == "reduced"
    assert rep.centers[0] == [["bot", "bot"], ["A", "C"], ["B", "C"],
                              ["Bp", "C"], ["C", "C"], ["top", "top"]]


def test_export_dot(tmp_path, two_structures):
    code, out = run(["export-dot", write_fixture(tmp_path, "two-structures")])
    assert code == 0
    assert out.startswith("digraph hasse {")
    assert '"A" -> "B" [label="~"];' in out

    left = write_structure(tmp_path, "two-structures", left_printed(two_structures), "l.json")
    code, out = run(["export-dot", left])
    assert code == 0
    # weak equivalences that are also cofibrations combine attributes
    assert '"A" -> "B" [arrowtail="hook", dir="both", label="~"];' in out
    assert '"A" -> "C" [arrowtail="hook", dir="both", label="~"];' in out
    # trivial 2-chain: one edge carrying both cof and fib attributes
    two = InstanceFile(elements=["bot", "top"], leq=[("bot", "top")], weq=[],
                       add_identities=True, cof=[("bot", "top")], fib=[("bot", "top")])
    tpath = tmp_path / "two.json"
    tpath.write_text(print_instance(two), encoding="utf-8")
    code, out = run(["export-dot", str(tpath)])
    assert code == 0
    assert '"bot" -> "top" [arrowhead="normalnormal", arrowtail="hook", dir="both"];' in out


def test_byte_identical_reports(tmp_path):
    path = write_fixture(tmp_path, "two-structures")
    for argv in (
        ["recognize", path],
        ["enumerate", path],
        ["centers", "enumerate", path],
        ["synthesize", "--method", "terminal", path],
        ["export-dot", path],
    ):
        code1, out1 = run(argv)
        code2, out2 = run(argv)
        assert (code1, out1) == (code2, out2)
        assert out1.encode("utf-8") == out2.encode("utf-8")


def test_timings_flag(tmp_path):
    path = write_fixture(tmp_path, "two-structures")
    code, out = run(["--timings", "recognize", path])
    assert code == 0
    assert parse_report(out).timings is not None
    code, out = run(["recognize", path])
    assert parse_report(out).timings is None


def test_out_flag(tmp_path):
    path = write_fixture(tmp_path, "two-structures")
    target = tmp_path / "report.json"
    code, out = run(["--out", str(target), "recognize", path])
    assert code == 0 and out == ""
    assert parse_report(target.read_text(encoding="utf-8")).decision == "yes"


def test_flags_accepted_after_subcommand(tmp_path):
    path = write_fixture(tmp_path, "two-structures")
    target = tmp_path / "trailing.json"
    code, out = run(["recognize", path, "--out", str(target)])
    assert code == 0 and out == ""
    assert parse_report(target.read_text(encoding="utf-8")).decision == "yes"
    code, out = run(["recognize", path, "--timings"])
    assert code == 0 and parse_report(out).timings is not None


def test_trunc_fixture_recognize(tmp_path):
    path = write_fixture(tmp_path, "trunc-2")
    code, out = run(["recognize", path])
    assert code == 0 and parse_report(out).decision == "yes"
