import json
import shutil
import subprocess
import sys

import pytest

from horochow.cli import main, to_ascii


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_degrees(capsys):
    code, out, _ = run(capsys, "degrees", "g2")
    assert code == 0
    assert out.strip() == "τ'0:56 τ'1:56 τ'2:38 τ'3:10 τ'4:4 τ'5:1 σ2:18 σ3:18 σ4:6 σ5:3 σ6:1 σ7:1"


def test_table_first_and_dual(capsys):
    _, out, _ = run(capsys, "table", "g2")
    assert "τ'2·σ2 = 2σ4" in out.splitlines()
    _, out, _ = run(capsys, "table", "g2", "--basis", "dual")
    assert "σ'2·σ'2 = 2σ'4 + τ4" in out.splitlines()


def test_table_quantum(capsys):
    _, out, _ = run(capsys, "table", "spin7", "--quantum")
    lines = out.splitlines()
    assert "τ8·τ = q·σ'4" in lines
    assert "τ4·τ = q" in lines


def test_table_json(capsys):
    code, out, _ = run(capsys, "table", "g2", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    row = next(r for r in doc if r["lhs"] == "τ'2·σ2")
    assert row["rhs"] == "2σ4" and row["terms"] == {"s4": "2"}


def test_ascii_mode(capsys):
    _, out, _ = run(capsys, "--ascii", "table", "g2", "--quantum")
    assert "s3*s = 2s5 + q*t'1" in out.splitlines()
    assert to_ascii("h³·σ₂ ⊗ γ") == "h^3*s2 (x) g"


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "spin7")
    assert code == 0
    assert out.splitlines()[-1].endswith("0 failed, 0 errors")


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "g2", "--quantum", "--json")
    checks = json.loads(out)
    assert code == 0 and checks and all(c["status"] == "pass" for c in checks)


def test_verify_spec_file(capsys, tmp_path):
    from horochow.catalog import builtin_text

    path = tmp_path / "mine.json"
    path.write_text(builtin_text("g2"), encoding="utf-8")
    code, _, _ = run(capsys, "verify", "--spec", str(path))
    assert code == 0


def test_verify_failure_exit_code(capsys, tmp_path):
    from horochow.catalog import builtin_text

    doc = json.loads(builtin_text("g2"))
    doc["golden"]["tables"]["first"][0]["rhs"] = "5*s4"
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc), encoding="utf-8")
    code, out, _ = run(capsys, "verify", str(path))
    assert code == 1
    assert "FAIL g2.table.first.01" in out


def test_unknown_variety_exit_2(capsys):
    code, _, err = run(capsys, "verify", "nosuch")
    assert code == 2
    assert "unknown variety 'nosuch'" in err


def test_fundamental_class(capsys):
    code, out, _ = run(capsys, "fundamental-class", "g2")
    assert code == 0 and out.splitlines()[-1] == "2σ[4,1] + 2σ[3,2]"
    assert run(capsys, "fundamental-class", "spin7")[0] == 2


def test_reconstruct(capsys):
    code, out, _ = run(capsys, "reconstruct", "g2")
    assert code == 0
    assert "solution space dimension: 1" in out and "contains_true: yes" in out


def test_semisimple(capsys):
    code, out, _ = run(capsys, "semisimple", "g2")
    assert code == 0
    assert "t^12 - 40*t^8 - 192*t^4 - 64" in out and "semisimple: yes" in out


def test_grass_and_spinor(capsys):
    assert run(capsys, "grass", "prod", "2", "7", "4,1", "2,2")[1].strip() == "0"
    assert run(capsys, "grass", "prod", "2", "5", "3", "3")[1].strip() == "σ[3,3]"
    assert run(capsys, "spinor", "prod", "3", "3")[1].strip() == "2·γ[4,2]"
    assert run(capsys, "spinor", "prod", "5", "1")[0] == 2
    assert run(capsys, "grass", "prod", "3", "2", "1", "1")[0] == 2
    assert run(capsys, "grass", "prod", "2", "4", "3", "1")[0] == 2


def test_malformed_partition_is_usage_error(capsys):
    with pytest.raises(SystemExit) as info:
        main(["grass", "prod", "2", "7", "1,3", "1"])
    assert info.value.code == 2
    with pytest.raises(SystemExit):
        main(["spinor", "prod", "2,2", "1"])


def test_catalog_list(capsys):
    code, out, _ = run(capsys, "catalog", "list")
    assert code == 0
    assert out.splitlines()[0].startswith("g2: group G2, dimension 7, index 4")
    assert "  (F_4, P(w_2), P(w_3))" in out.splitlines()


def test_console_entry_point():
    exe = shutil.which("horochow")
    cmd = [exe] if exe else [sys.executable, "-m", "horochow.cli"]
    res = subprocess.run(cmd + ["--ascii", "spinor", "prod", "3", "3"], capture_output=True, text=True, check=False)
    assert res.returncode == 0
    assert res.stdout.strip() == "2*g[4,2]"
