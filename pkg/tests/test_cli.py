import json

from archzeta.cli import main
from archzeta.exact import ExactScalar


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out.strip(), out.err.strip()


def test_zeta_form1_text(capsys):
    code, out, _ = run(capsys, "zeta", "--sig", "1,1", "--tau", "1",
                       "--nu", "-1", "--k", "2", "--r", "0",
                       "--side", "right", "--route", "form1")
    assert code == 0
    assert out == "1 * pi^(2/2)"


def test_cratio_text(capsys):
    code, out, _ = run(capsys, "cratio", "--n", "2", "--k", "2")
    assert code == 0 and out == "-1"


def test_validation_exit_code(capsys):
    code, _, err = run(capsys, "zeta", "--sig", "1,1", "--tau", "1",
                       "--nu", "-1", "--k", "3", "--r", "0",
                       "--side", "right", "--route", "form1")
    assert code == 1
    assert "k parity violates k ≡ r (mod 2)" in err


def test_computation_error_exit_code(capsys):
    # s + |c| falls on a half-integer: leaves the ring
    code, _, err = run(capsys, "euler", "--sig", "1,1", "--tau", "1",
                       "--nu", "-1", "--k", "2", "--r", "0", "--s", "1")
    assert code == 2 and err


def test_json_roundtrip(capsys):
    code, out, _ = run(capsys, "zeta", "--sig", "2,1", "--tau", "3,2",
                       "--nu", "-1", "--k", "3", "--r", "1",
                       "--side", "right", "--route", "form1", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["schema"] == "arch-zeta/1"
    assert payload["status"] == "ok"
    value = ExactScalar.from_json(payload["value"])
    assert value.to_json() == payload["value"]


def test_route_side_mismatch(capsys):
    code, _, err = run(capsys, "zeta", "--sig", "1,1", "--tau", "1",
                       "--nu", "-1", "--k", "2", "--r", "0",
                       "--side", "left", "--route", "form1")
    assert code == 1 and "side" in err


def test_dims_output(capsys):
    code, out, _ = run(capsys, "dims", "--sig", "2,1", "--tau", "3,2",
                       "--nu", "-1", "--k", "3", "--r", "1")
    assert code == 0
    assert "dim_lambda = 3" in out


def test_oracle_json(capsys):
    code, out, _ = run(capsys, "oracle", "--sig", "1,1", "--tau", "3",
                       "--nu", "-3", "--k", "4", "--r", "0", "--poly", "I",
                       "--samples", "40000", "--batch", "10000",
                       "--seed", "2", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["schema"] == "arch-zeta/1"
    assert payload["z_score"] <= 6
    assert payload["samples"] == 40000


def test_audit_single_context_json(capsys):
    code, out, _ = run(capsys, "audit", "--sig", "1,1", "--tau", "1",
                       "--nu", "-1", "--k", "2", "--r", "0")
    assert code == 0
    payload = json.loads(out)
    assert payload["contexts"] == 1
    ratios = payload["reports"][0]["ratios"]
    assert ratios["form2/form1"]["pow2_halves"] == 4
    assert ratios["form2/form1"]["powpi_halves"] == 0


def test_verify_cratio_suite(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "cratio")
    assert code == 0
    assert out.startswith("[PASS]")
