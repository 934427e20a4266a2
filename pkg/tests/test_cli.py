import json
import subprocess
import sys

import pytest

from milnorfibre.braid import euler_sym
from milnorfibre.cli import main
from milnorfibre.groups import Cyclic
from milnorfibre.rank2 import h1_f0_dihedral, h1_f0_monodromy, spectrum_rank2
from milnorfibre.serialize import from_json, parse_expr, parse_spectrum


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def body_lines(text):
    return [line for line in text.splitlines() if not line.startswith("#")]


def test_euler_s3_text(capsys):
    code, out, _ = run(capsys, "euler", "--group", "sym:3")
    assert code == 0
    assert "# characters gamma_i are indexed relative to mu_6" in out
    assert parse_expr(euler_sym(2).group, body_lines(out)[0]) == euler_sym(2)


def test_euler_json_round_trip(capsys):
    code, out, _ = run(capsys, "euler", "--group", "sym:4", "--format", "json")
    rec = json.loads(out)
    assert code == 0 and rec["ambient_cyclic_order"] == 12
    assert from_json(rec["result"]) == euler_sym(3)


def test_euler_missing_model_falls_back(capsys):
    code, out, _ = run(capsys, "euler", "--group", "table1:G4")
    assert code == 0
    assert "invariant part" in out


def test_unknown_group_is_usage_error(capsys):
    code, _, err = run(capsys, "euler", "--group", "sym:99")
    assert code == 2 and "Unsupported" in err
    code, out, _ = run(capsys, "euler", "--group", "nonsense", "--format", "json")
    assert code == 2 and json.loads(out)["error"] == "ParseError"


def test_rank2_dihedral_h1(capsys):
    code, out, _ = run(capsys, "rank2", "--p", "3", "--what", "h1")
    assert code == 0
    assert body_lines(out) == ["1*g1 + eps*g2 + chi1*g0"]
    code, out, _ = run(capsys, "rank2", "--p", "3", "--what", "h1", "--format", "json")
    assert from_json(json.loads(out)["result"]) == h1_f0_dihedral(3)


def test_rank2_monodromy(capsys):
    code, out, _ = run(capsys, "rank2", "--d", "6", "--what", "monodromy")
    assert code == 0
    assert parse_expr(Cyclic(6), body_lines(out)[0]) == h1_f0_monodromy(6)


def test_rank2_spectrum_and_pd(capsys):
    code, out, _ = run(capsys, "rank2", "--d", "3", "--what", "spectrum")
    assert parse_spectrum(body_lines(out)[0], 3) == spectrum_rank2(3)
    code, out, _ = run(capsys, "rank2", "--d", "3", "--what", "pd")
    assert code == 0 and "u v t: 2 g0" in out


def test_rank2_weight_even_is_usage_error(capsys):
    code, _, err = run(capsys, "rank2", "--p", "4", "--what", "weight")
    assert code == 2 and "EvenNotSupported" in err


def test_rank2_needs_selector(capsys):
    code, _, _ = run(capsys, "rank2", "--what", "h1")
    assert code == 2


def test_spectrum_checks(capsys):
    code, out, _ = run(capsys, "spectrum", "--braid", "4", "--check", "purity,zeta,roundtrip")
    assert code == 0
    assert out.count("PASS") == 3
    code, out, _ = run(capsys, "spectrum", "--rank2", "7", "--check", "purity,zeta,roundtrip", "--format", "json")
    rec = json.loads(out)
    assert code == 0 and all(c["passed"] for c in rec["checks"]) and len(rec["checks"]) == 3


def test_spectrum_bad_inputs(capsys):
    assert run(capsys, "spectrum", "--braid", "5")[0] == 2
    assert run(capsys, "spectrum", "--braid", "3", "--check", "bogus")[0] == 2


def test_text_and_json_agree(capsys):
    _, text, _ = run(capsys, "spectrum", "--braid", "3")
    _, js, _ = run(capsys, "spectrum", "--braid", "3", "--format", "json")
    sp = from_json(json.loads(js)["result"])
    assert parse_spectrum(body_lines(text)[0], sp.d) == sp


def test_validate_group(capsys):
    code, out, _ = run(capsys, "validate", "--group", "sym:5")
    assert code == 0 and "FAIL" not in out


def test_groups_listing(capsys):
    code, out, _ = run(capsys, "groups")
    assert code == 0 and "G(5,5,2)" in out


def test_corrupted_golden_reports_violation(capsys, tmp_path, monkeypatch):
    from importlib import resources
    raw = json.loads(resources.files("milnorfibre").joinpath("data/golden.json").read_text())
    term = next(t for t in raw["records"]["s5.cohomology"]["terms"] if t["mono"] == "t^2")
    term["expr"] = term["expr"].replace("1*g5", "1*g7", 1)
    path = tmp_path / "golden.json"
    path.write_text(json.dumps(raw))
    monkeypatch.setenv("MILNORFIBRE_GOLDEN", str(path))
    code, out, _ = run(capsys, "validate", "--group", "sym:5")
    assert code == 1
    assert "FAIL" in out and "s5.cohomology" in out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "milnorfibre", "rank2", "--d", "4", "--what", "h0"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and "g0" in proc.stdout


@pytest.mark.parametrize("argv", [[], ["frobnicate"], ["euler"]])
def test_argparse_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_missing_catalog_data_is_usage_error(capsys):
    code, _, err = run(capsys, "euler", "--group", "table4:G6")
    assert code == 2 and "MissingCatalogEntry" in err
