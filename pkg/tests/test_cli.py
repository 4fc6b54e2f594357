import json
import subprocess
import sys

import pytest

from sacts.cli import main

from conftest import SAMPLES


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_validate(capsys):
    code, out, _ = run(capsys, "validate", str(SAMPLES / "e7_act.txt"))
    assert code == 0 and out.startswith("ok: act of size 3")
    code, _, err = run(capsys, "validate", str(SAMPLES / "bad_assoc.txt"))
    assert code == 2 and "associativity" in err


def test_parse_error_exit_code(capsys, tmp_path):
    p = tmp_path / "m.txt"
    p.write_text("monoid 2 0\n0 1\n1 ?\n")
    code, _, err = run(capsys, "validate", str(p))
    assert code == 2 and "m.txt:3:3" in err


def test_check_fitting_table(capsys):
    code, out, _ = run(capsys, "check", "fitting", str(SAMPLES / "e7_act.txt"))
    lines = out.splitlines()
    assert code == 0 and lines[0] == "Holds"
    assert any(line.split()[-1] == "1" and line.startswith("0 1 2") for line in lines)


def test_check_json(capsys):
    code, out, _ = run(capsys, "check", "torsion-free", str(SAMPLES / "t2_act.txt"), "--json")
    d = json.loads(out)
    assert code == 1 and d["status"] == "Fails" and d["witness"] == {"a": 0, "b": 1, "s": 1}


def test_stab_chain3(capsys):
    code, out, _ = run(capsys, "stab", str(SAMPLES / "chain3.txt"), "--endo", "2:1 1:0 0:0")
    assert code == 0
    assert "ker_index 2" in out and "im_index 2" in out and "fitting_n 2" in out


def test_symbolic_bicyclic(capsys):
    code, out, _ = run(capsys, "symbolic", "bicyclic", "right-hopfian", "--max-norm", "3", "--json")
    d = json.loads(out)
    assert code == 1 and d["status"] == "Fails"
    assert d["witness"] == {"x": "b", "inverse": "c", "pair": ["cb", "1"]}


def test_symbolic_nat_add(capsys):
    code, out, _ = run(capsys, "symbolic", "nat-add", "right-hopfian")
    assert code == 0 and out.startswith("Holds")
    code, out, _ = run(capsys, "symbolic", "nat-add", "right-cohopfian", "--json")
    assert code == 1 and json.loads(out)["witness"]["x"] == "1"


def test_symbolic_finite_backend(capsys):
    code, out, _ = run(capsys, "symbolic", f"finite:{SAMPLES / 'e7_monoid.txt'}", "strongly-cohopfian")
    assert code == 0 and out.startswith("Holds")


def test_endos_con_quotient(capsys):
    code, out, _ = run(capsys, "endos", str(SAMPLES / "t2_act.txt"), "--json")
    assert code == 0 and json.loads(out)["count"] == 2
    code, out, _ = run(capsys, "con", str(SAMPLES / "e7_act.txt"), "--json")
    assert json.loads(out)["count"] == 5
    code, out, _ = run(capsys, "quotient", str(SAMPLES / "e7_act.txt"), "--cong", "0 1 1", "--json")
    d = json.loads(out)
    assert d["size"] == 2 and d["natural_map"] == [0, 1, 1]
    code, _, err = run(capsys, "quotient", str(SAMPLES / "e7_act.txt"), "--cong", "0 1 0")
    assert code == 0  # {1,b} | {a} happens to be compatible
    code, _, err = run(capsys, "quotient", str(SAMPLES / "e7_act.txt"), "--cong", "0 1")
    assert code == 2


def test_cap_exit_code(capsys):
    code, _, err = run(capsys, "census", "--max-monoid-order", "5")
    assert code == 3 and "--monoid-order-cap" in err
    code, _, err = run(capsys, "endos", str(SAMPLES / "chain3.txt"), "--carrier-cap", "2")
    assert code == 3 and "--carrier-cap" in err


def test_census_json(capsys):
    code, out, _ = run(capsys, "census", "--max-monoid-order", "2", "--max-act-size", "2", "--json")
    d = json.loads(out)
    assert code == 0 and d["schema"] == 1 and len(d["monoids"]) == 3


def test_suite_catalog(capsys):
    code, out, _ = run(capsys, "suite", "--catalog", "--json")
    d = json.loads(out)
    assert code == 0 and d["passed"] and d["schema"] == 1


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "sacts", "stab", str(SAMPLES / "chain3.txt"),
                          "--endo", "0 0 1", "--json"], capture_output=True, text=True)
    assert out.returncode == 0
    assert json.loads(out.stdout)["fitting_n"] == 2
