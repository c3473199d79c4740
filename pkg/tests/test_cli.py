from __future__ import annotations

import json
from pathlib import Path

import pytest

import legaug.verify as verify_mod
from conftest import DIAGRAMS
from legaug.cli import RunConfig, emit_json, run
from legaug.errors import LegaugError
from legaug.verify import CheckResult, thread_count

TREFOIL = str(DIAGRAMS / "trefoil.plat")
UNKNOT = str(DIAGRAMS / "unknot.plat")
UNKNOT_RAW = str(DIAGRAMS / "unknot_raw.json")


def invoke(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_trefoil_has_five_augmentations_over_f2(capsys):
    code, out, _ = invoke(capsys, "--json", "augs", TREFOIL, "--field", "Fp:2")
    assert code == 0
    augs = json.loads(out)
    assert len(augs) == 5
    assert all(set(a) == {"a1", "a2", "a3", "c1", "c2", "t1", "t2"} for a in augs)


def test_unknot_negative_cohomology(capsys):
    code, out, _ = invoke(capsys, "--json", "cohomology", UNKNOT, "--pair", "1,1", "--direction", "minus")
    assert code == 0
    assert json.loads(out) == {"2": 1}
    code, out, _ = invoke(capsys, "cohomology", UNKNOT, "--pair", "1,1", "--direction", "minus")
    assert "H^* Hom-(e1, e1)" in out and "H^2 = 1" in out


def test_trefoil_cohomology_json(capsys):
    code, out, _ = invoke(capsys, "--json", "cohomology", TREFOIL, "--pair", "1,1")
    assert code == 0 and json.loads(out) == {"0": 1, "1": 2}


def test_verify_all_passes_on_the_trefoil(capsys):
    code, out, _ = invoke(capsys, "verify", "all", TREFOIL, "--field", "Fp:2")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines and all(l.startswith(("PASS", "SKIP", "    ")) for l in lines)
    names = [l.split()[1] for l in lines if not l.startswith(" ")]
    assert names == sorted(names)


def test_verification_failure_exits_two(capsys, monkeypatch):
    def broken(ws):
        res = CheckResult("unit")
        res.fail("forced failure")
        return res

    monkeypatch.setitem(verify_mod.CHECKS, "unit", broken)
    code, out, _ = invoke(capsys, "verify", "unit", TREFOIL)
    assert code == 2 and "FAIL unit" in out


@pytest.mark.parametrize(
    "argv",
    [
        ["augs", "missing.plat"],
        ["augs", TREFOIL, "--field", "Fp:4"],
        ["cohomology", TREFOIL, "--pair", "1,9"],
        ["cohomology", TREFOIL, "--pair", "one"],
        ["cohomology", TREFOIL, "--direction", "sideways"],
        ["mtable", TREFOIL, "--max-arity", "9"],
        ["augs", UNKNOT_RAW, "--field", "Z"],
        ["dga", TREFOIL, "--sections", "2..9"],
        ["nonsense"],
        ["--flip-component", "3", "dga", TREFOIL],
    ],
)
def test_domain_and_usage_errors_exit_one(capsys, argv):
    code, _, err = invoke(capsys, *argv)
    assert code == 1
    assert err.strip()


def test_malformed_plat_reports_location(capsys, tmp_path):
    bad = tmp_path / "bad.plat"
    bad.write_text("strands 4\ncross 7\n")
    code, _, err = invoke(capsys, "dga", str(bad))
    assert code == 1 and "line 2" in err


def test_help_exits_zero(capsys):
    code, out, _ = invoke(capsys, "--help")
    assert code == 0 and "verify" in out


def test_json_output_is_byte_identical_across_runs(capsys, monkeypatch):
    outs = []
    for threads in ("1", "4"):
        monkeypatch.setenv("LEGAUG_THREADS", threads)
        for _ in range(2):
            code, out, _ = invoke(capsys, "--json", "verify", "all", TREFOIL, "--field", "Fp:3", "--sample", "10")
            assert code == 0
            outs.append(out)
    assert len(set(outs)) == 1


def test_thread_count_reads_the_environment(monkeypatch):
    monkeypatch.setenv("LEGAUG_THREADS", "3")
    assert thread_count() == 3
    monkeypatch.setenv("LEGAUG_THREADS", "zero")
    assert thread_count() >= 1
    monkeypatch.delenv("LEGAUG_THREADS")
    assert thread_count() >= 1


def test_emit_json_is_sorted_and_newline_terminated():
    raw = emit_json({"b": 1, "a": {"t1": "-1", "a1": "1"}})
    assert raw.endswith(b"\n")
    assert raw == emit_json(json.loads(raw))
    text = raw.decode()
    assert text.index('"a"') < text.index('"b"') and text.index('"a1"') < text.index('"t1"')


def test_dga_output_round_trips(capsys):
    from legaug.dga import Dga

    code, out, _ = invoke(capsys, "dga", TREFOIL)
    assert code == 0
    d = Dga.from_json(out)
    assert str(d.d("c1")) == "a1 + a3 + t1 + a1 a2 a3"


def test_dga_sections(capsys):
    from legaug.dga import Dga

    code, out, _ = invoke(capsys, "dga", TREFOIL, "--sections", "1..2")
    assert code == 0
    names = {g.name for g in Dga.from_json(out).generators}
    assert {"a1", "a2", "p1_2"} <= names and "c1" not in names


def test_flip_component(capsys):
    from legaug.dga import Dga

    code, out, _ = invoke(capsys, "--flip-component", "1", "dga", UNKNOT)
    assert code == 0
    assert str(Dga.from_json(out).d("c1")) == "1 + t1^-1"


def test_mcopy_command(capsys):
    from legaug.dga import Dga

    code, out, _ = invoke(capsys, "--json", "mcopy", UNKNOT_RAW, "-m", "3")
    assert code == 0
    assert str(Dga.from_json(out).d("y^13")) == "y^12 y^23"
    code, out, _ = invoke(capsys, "mcopy", UNKNOT_RAW, "-m", "3")
    assert "d y^13 = y^12 y^23" in out


def test_mtable_on_the_unknot(capsys):
    code, out, _ = invoke(capsys, "--json", "mtable", UNKNOT_RAW, "--field", "Fp:3", "--max-arity", "4")
    assert code == 0
    rows = json.loads(out)
    by = {(r["arity"], tuple(r["inputs"])): r["output"] for r in rows}
    assert by[(2, ("x+", "x+"))] == "a+"
    assert by[(3, ("x+", "x+", "x+"))] == "-a+"
    assert by[(4, ("x+",) * 4)] == "-a+"


def test_iso_command(capsys):
    code, out, _ = invoke(capsys, "--json", "iso", TREFOIL, "--pair", "1,2")
    assert code == 0
    assert json.loads(out) == {"homotopy": False, "cohomology_search": False, "witness": None}
    code, out, _ = invoke(capsys, "--json", "iso", TREFOIL, "--pair", "2,2")
    payload = json.loads(out)
    assert code == 0 and payload["homotopy"] and payload["cohomology_search"]


def test_invariants_command(capsys):
    code, out, _ = invoke(capsys, "--json", "invariants", str(DIAGRAMS / "hopf.plat"))
    assert code == 0
    assert json.loads(out) == {"rotation": [0, 0], "tb": -4, "tb_per_component": [-1, -1], "writhe": -2}


def test_tb_check_is_skipped_for_raw_input(capsys):
    code, out, _ = invoke(capsys, "verify", "tb", UNKNOT_RAW)
    assert code == 0 and out.startswith("SKIP tb")


def test_slice_check_command(capsys):
    code, out, _ = invoke(capsys, "--json", "slice-check", "-n", "4", "--trials", "10")
    payload = json.loads(out)
    assert code == 0 and payload["ok"] and payload["failures"] == []


@pytest.mark.parametrize("field_spec,arity", [("Q", 4), ("Fp:2", 0), ("Fp:2", 9)])
def test_run_config_validates(field_spec, arity):
    with pytest.raises(LegaugError):
        RunConfig(Path("x.plat"), "plat", field_spec, arity)


def test_run_config_rejects_unknown_kind():
    with pytest.raises(LegaugError):
        RunConfig(Path("x.plat"), "svg", "Z", 4)
