"""CLI tests: output formats, exit codes, stream separation."""

import json
import subprocess
import sys

from hkgenus.catalog import ManifoldRecord, builtin, save_manifold
from hkgenus.cli import main
from hkgenus.hodge import HodgeDiamond


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_verify_k3_text(capsys):
    code, out, err = run(capsys, "verify", "--manifold", "K3")
    assert code == 0
    assert out.strip() == "PASS  ST(t=y+1/y) = 2y+20+2y^-1 = chi_{-y}/y^1"
    assert err == ""


def test_strace_with_matrix(capsys):
    code, out, _ = run(capsys, "strace", "--manifold", "K3", "--matrix", "0,-1;1,0")
    assert code == 0
    assert out.strip() == "S(t)=2t+20  S(0)=20"


def test_strace_without_matrix(capsys):
    code, out, _ = run(capsys, "strace", "--manifold", "K3[2]")
    assert code == 0
    assert out.strip() == "S(t)=3t^2+42t+228"


def test_rw_determinant_error_exits_1(capsys):
    code, out, err = run(capsys, "rw", "--manifold", "K3", "--matrix", "1,0;0,2")
    assert code == 1
    assert out == ""
    assert "determinant" in err


def test_rw_value(capsys):
    code, out, _ = run(capsys, "rw", "--manifold", "K3", "--matrix", "1,1;0,1")
    assert code == 0
    assert "Z^RW[T_U] = 24" in out
    assert "S(t)=2t+20" in out


def test_verify_all_builtin(capsys):
    code, out, _ = run(capsys, "verify", "--all-builtin")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 6  # five manifolds plus the summary line
    assert all("PASS" in line for line in lines[:5])
    assert lines[0].startswith("K3:")
    assert lines[-1] == "all passed"


def test_verify_requires_a_source(capsys):
    code, _, err = run(capsys, "verify")
    assert code == 1
    assert "manifold" in err


def test_chi_json_matches_text_numbers(capsys):
    code, out, _ = run(capsys, "chi", "--manifold", "K3", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["euler"] == 24
    assert payload["todd"] == 2
    assert payload["signature"] == -16
    assert payload["chi_y"] == "2y^2-20y+2"
    assert payload["chi_minus_y"] == "2y^2+20y+2"

    _, text, _ = run(capsys, "chi", "--manifold", "K3")
    assert "euler      = 24" in text
    assert "chi_y      = 2y^2-20y+2" in text


def test_catalog_csv(capsys):
    code, out, _ = run(capsys, "catalog", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "name,n,euler,todd,signature"
    assert lines[1] == "K3,1,24,2,-16"
    assert len(lines) == 6


def test_decompose_text(capsys):
    code, out, _ = run(capsys, "decompose", "--manifold", "K3[2]")
    assert code == 0
    assert "p=2: 0 0 231 0 0" in out
    assert "dimension 3" in out  # the p=0 row generates 3-dimensional strings


def test_decompose_csv_long_form(capsys):
    code, out, _ = run(capsys, "decompose", "--manifold", "K3", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "p,dimension,q,multiplicity"
    assert "1,1,1,20" in lines  # p=1, dim 1, q=1, multiplicity 20


def test_rr_match_exit_0(capsys):
    code, out, _ = run(capsys, "rr", "--n", "1", "--c2", "24", "--manifold", "K3")
    assert code == 0
    assert "MATCH" in out


def test_rr_wrong_chern_exit_2(capsys):
    # Integral but wrong data: identity-check failure, not an input error.
    code, out, _ = run(capsys, "rr", "--n", "1", "--c2", "36", "--manifold", "K3")
    assert code == 2
    assert "MISMATCH" in out


def test_rr_non_integral_exit_1(capsys):
    code, _, err = run(capsys, "rr", "--n", "1", "--c2", "25")
    assert code == 1
    assert "non-integral" in err


def test_rr_missing_monomial_exit_1(capsys):
    code, _, err = run(capsys, "rr", "--n", "2", "--c4", "324")
    assert code == 1
    assert "c2^2" in err


def test_rr_standalone(capsys):
    code, out, _ = run(capsys, "rr", "--n", "2", "--c2sq", "828", "--c4", "324")
    assert code == 0
    assert "chi_{-y} = 3y^4+42y^3+234y^2+42y+3" in out
    assert "S(t)      = 3t^2+42t+228" in out
    assert "substitution consistency" in out


def test_input_file_flow(tmp_path, capsys):
    record = builtin("K3")
    path = tmp_path / "k3.hodge.json"
    save_manifold(record, path)
    code, out, _ = run(capsys, "chi", "--input", str(path))
    assert code == 0
    assert "euler      = 24" in out


def test_both_sources_rejected(tmp_path, capsys):
    path = tmp_path / "k3.hodge.json"
    save_manifold(builtin("K3"), path)
    code, _, err = run(capsys, "chi", "--manifold", "K3", "--input", str(path))
    assert code == 1
    assert "one manifold source" in err


def test_strict_flag_gates_input(tmp_path, capsys):
    torus = ManifoldRecord(
        name="torus4", diamond=HodgeDiamond(((1, 2, 1), (2, 4, 2), (1, 2, 1))))
    path = tmp_path / "torus.hodge.json"
    save_manifold(torus, path)
    code, out, _ = run(capsys, "chi", "--input", str(path))
    assert code == 0
    assert "euler      = 0" in out
    code, _, err = run(capsys, "chi", "--input", str(path), "--strict")
    assert code == 1
    assert "irreducibility" in err


def test_missing_file_exit_1(capsys):
    code, _, err = run(capsys, "chi", "--input", "/no/such/file.hodge.json")
    assert code == 1
    assert err


def test_usage_errors_exit_1(capsys):
    code, _, err = run(capsys, "frobnicate")
    assert code == 1
    assert err
    code, _, err = run(capsys, "chi", "--manifold", "K3", "--format", "yaml")
    assert code == 1


def test_unknown_builtin_exit_1(capsys):
    code, _, err = run(capsys, "chi", "--manifold", "K3[1]")
    assert code == 1
    assert "unknown built-in" in err


def test_json_output_is_sorted_and_parseable(capsys):
    code, out, _ = run(capsys, "verify", "--all-builtin", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["all_passed"] is True
    assert [r["name"] for r in payload["results"]] == list(
        ("K3", "K3[2]", "K3[3]", "K3[4]", "K3[5]"))


def test_internal_inconsistency_exits_3(capsys, monkeypatch):
    import hkgenus.cli as cli_mod
    from hkgenus.errors import InternalInconsistencyError

    def boom(_diamond):
        raise InternalInconsistencyError("forced for the test")

    monkeypatch.setattr(cli_mod, "supertrace_polynomial", boom)
    code, out, err = run(capsys, "strace", "--manifold", "K3")
    assert code == 3
    assert out == ""
    assert "internal inconsistency" in err


def test_module_entry_point_subprocess():
    completed = subprocess.run(
        [sys.executable, "-m", "hkgenus", "verify", "--manifold", "K3"],
        capture_output=True, text=True)
    assert completed.returncode == 0
    assert completed.stdout.strip() == "PASS  ST(t=y+1/y) = 2y+20+2y^-1 = chi_{-y}/y^1"
    assert completed.stderr == ""


def test_module_entry_point_error_streams():
    completed = subprocess.run(
        [sys.executable, "-m", "hkgenus", "rw", "--manifold", "K3",
         "--matrix", "1,0;0,2"],
        capture_output=True, text=True)
    assert completed.returncode == 1
    assert completed.stdout == ""
    assert "determinant" in completed.stderr
