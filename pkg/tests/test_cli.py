"""
End-to-end tests for the command-line interface
"""

import json
import logging
from pathlib import Path
import sys

import pytest

# Add project root to Python path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

import zeta_cli
from src.transforms.euler_product import partition_numbers


# Configure logging
logging.basicConfig(
    level=logging.INFO,
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
)
logger = logging.getLogger(__name__)

GOLDEN_DIR = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = zeta_cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.mark.parametrize("argv, golden", [
    (["zeta", "mot", "pt", "--order", "3"], "zeta_mot_point.txt"),
    (["zeta", "cat", "pt", "--order", "5"], "zeta_cat_point.txt"),
    (["zeta", "mot", "P^1", "--order", "2"], "zeta_mot_projective_line.txt"),
    (["zeta", "cat", "0"], "zeta_cat_zero.txt"),
    (["zeta", "cat", "pt", "--order", "0"], "zeta_cat_order_zero.txt"),
    (["sym", "2", "P^1"], "sym_projective_line.txt"),
    (["lambda", "2", "pt"], "lambda_point.txt"),
    (["adams", "3", "2*L - L^2"], "adams_virtual_class.txt"),
    (["measure", "P^3"], "measure_projective_space.txt"),
    (["transform", "exp", "--coeffs", "1,1,1,1,1"], "transform_exp.txt"),
    (["transform", "mobius", "--coeffs", "1,1,2,3,5"], "transform_mobius.txt"),
    (["verify", "theorem", "P^2", "--order", "16"], "verify_theorem.txt"),
    (["verify", "lambda-hom", "pt", "--order", "4"], "verify_lambda_hom.txt"),
], ids=lambda value: value if isinstance(value, str) else None)
def test_golden_text_output(capsys, argv, golden):
    """Test byte-exact text output against golden files"""
    _, out, _ = run(capsys, *argv)
    assert out == (GOLDEN_DIR / golden).read_text(encoding="utf-8")


@pytest.mark.parametrize("argv, expected", [
    (["adams", "3", "L"], "L^3\n"),
    (["measure", "A^5"], "1\n"),
    (["measure", "L - 1"], "0\n"),
    (["transform", "mobius", "--coeffs", "1,0,0,0"], "1 + O(t^4)\n"),
    (["zeta", "mot", "2 - pt", "--order", "1"], "1 + t + O(t^2)\n"),
])
def test_text_output(capsys, argv, expected):
    """Test short text outputs"""
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert out == expected


@pytest.mark.parametrize("argv", [
    ["verify", "theorem", "P^2", "--order", "16"],
    ["verify", "mult", "pt", "A^1", "--order", "12"],
    ["verify", "mult-cat", "P^1", "L^3 - L", "--order", "12"],
    ["verify", "ppower", "P^1", "3", "--order", "12"],
    ["verify", "point", "--order", "64"],
    ["verify", "mobius", "(P^1)^2", "--order", "12"],
    ["zeta", "mot", "L^3 - L"],
    ["measure", "pt - A^2"],
])
def test_exit_code_success(capsys, argv):
    """Test exit code 0 for successful commands"""
    code, _, err = run(capsys, *argv)
    assert code == 0, err


def test_exit_code_identity_failed(capsys):
    """Test exit code 1 when an identity fails"""
    code, out, _ = run(capsys, "verify", "lambda-hom", "pt", "--order", "8")
    assert code == 1
    assert out.startswith("FAILED at t^2")


@pytest.mark.parametrize("argv", [
    ["zeta", "mot", "L^"],
    ["zeta", "mot", "(L + 1"],
    ["zeta", "cat", ""],
    ["zeta", "mot", "pt", "--order", "-1"],
    ["zeta", "mot", "pt", "--order", "100000"],
    ["zeta", "mot", "pt", "--order", "three"],
    ["zeta", "both", "pt"],
    ["frobnicate"],
    [],
    ["adams", "0", "L"],
    ["sym", "-1", "L"],
    ["transform", "exp", "--coeffs", "2,1,1"],
    ["transform", "mobius", "--coeffs", "1,x,2"],
    ["transform", "exp"],
    ["transform", "exp", "--coeffs", "1,1", "--from-zeta", "pt"],
    ["verify", "mult", "pt"],
    ["verify", "point", "pt"],
    ["verify", "ppower", "P^1", "two"],
    ["verify", "ppower", "P^1", "-1"],
])
def test_exit_code_usage_error(capsys, argv):
    """Test exit code 2 and empty output on usage errors"""
    code, out, _ = run(capsys, *argv)
    assert code == 2
    assert out == ""


def test_parse_error_message(capsys):
    """Test the parse error message on standard error"""
    code, _, err = run(capsys, "zeta", "mot", "L^-1")
    assert code == 2
    assert "invalid_exponent" in err
    assert "at byte 3" in err


def test_help_exits_zero(capsys):
    """Test the help text"""
    code, out, _ = run(capsys, "--help")
    assert code == 0
    assert "zeta" in out


def test_long_expression(capsys):
    """Test a class expression with 1500 terms"""
    code, out, err = run(capsys, "measure", " + ".join(["P^2"] * 1500))
    assert code == 0, err
    assert out == "4500\n"
    code, out, _ = run(capsys, "adams", "2", " * ".join(["L"] * 1500))
    assert code == 0
    assert out == "L^3000\n"


def test_degree_limit_is_a_parse_error(capsys):
    """Test that a result above the degree limit is rejected before any work"""
    code, out, err = run(capsys, "zeta", "mot", "(P^4096)^4096")
    assert code == 2
    assert out == ""
    assert "invalid_exponent" in err
    assert "at byte 9" in err


def test_categorical_zeta_at_high_order(capsys):
    """Test the categorical zeta-function of the point at the largest order"""
    code, out, _ = run(capsys, "zeta", "cat", "pt", "--order", "4096", "--json")
    assert code == 0
    coeffs = json.loads(out)["result"]["coeffs"]
    assert len(coeffs) == 4097
    assert [int(c) for c in coeffs[:101]] == partition_numbers(100)


def test_transform_from_zeta(capsys):
    """Test transforming a computed zeta-function"""
    code, out, _ = run(capsys, "transform", "exp", "--from-zeta", "pt", "--order", "4")
    assert code == 0
    assert out == "1 + t + 2*t^2 + 3*t^3 + 5*t^4 + O(t^5)\n"


def test_transform_order_truncates_coefficient_list(capsys):
    """Test that --order cuts a coefficient list"""
    _, out, _ = run(capsys, "transform", "exp", "--coeffs", "1,1,1,1,1", "--order", "2")
    assert out == "1 + t + 2*t^2 + O(t^3)\n"


def test_json_integer_series(capsys):
    """Test JSON output of an integer series"""
    code, out, _ = run(capsys, "zeta", "cat", "pt", "--order", "64", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["command"] == "zeta"
    assert payload["order"] == 64
    assert payload["result"]["order"] == 64
    assert [int(c) for c in payload["result"]["coeffs"]] == partition_numbers(64)


def test_json_lefschetz_series(capsys):
    """Test JSON output of a Z[L] series"""
    _, out, _ = run(capsys, "zeta", "mot", "P^1", "--order", "1", "--json")
    payload = json.loads(out)
    assert payload["result"] == {
        "coeffs": [[{"m": 0, "a": "1"}], [{"m": 0, "a": "1"}, {"m": 1, "a": "1"}]],
        "order": 1,
    }


def test_json_polynomial_and_integer(capsys):
    """Test JSON output of polynomials and integers"""
    _, out, _ = run(capsys, "sym", "2", "P^1", "--json")
    assert json.loads(out)["result"] == [{"m": 0, "a": "1"}, {"m": 1, "a": "1"}, {"m": 2, "a": "1"}]
    _, out, _ = run(capsys, "lambda", "2", "pt", "--json")
    assert json.loads(out)["result"] == []
    _, out, _ = run(capsys, "measure", "P^3", "--json")
    assert json.loads(out) == {"command": "measure", "order": 16, "result": "4"}


def test_json_verification_report(capsys):
    """Test JSON output of a failed verification"""
    code, out, _ = run(capsys, "verify", "lambda-hom", "pt", "--order", "8", "--json")
    assert code == 1
    assert json.loads(out) == {
        "command": "verify",
        "order": 8,
        "report": {
            "identity": "LAMBDA_HOMOMORPHISM",
            "verified": False,
            "precision": 8,
            "mismatch": {"index": 2, "lhs": "1", "rhs": "2"},
        },
    }


def test_json_transform_reports_effective_order(capsys):
    """Test that JSON reports the order a coefficient list implies"""
    _, out, _ = run(capsys, "transform", "mobius", "--coeffs", "1,1,2,3,5", "--json")
    payload = json.loads(out)
    assert payload["order"] == 4
    assert payload["result"]["coeffs"] == ["1", "1", "1", "1", "1"]


def test_sweep_command(capsys):
    """Test a quick sweep in text mode"""
    code, out, _ = run(capsys, "sweep", "--profile", "quick", "--seed", "3", "--no-progress")
    assert code == 0
    assert "Checks: 100" in out
    assert "Failed: 0" in out


def test_sweep_command_json(capsys):
    """Test a sweep restricted to one identity in JSON mode"""
    code, out, _ = run(capsys, "sweep", "--profile", "quick", "--identity", "theorem",
                       "--order", "6", "--no-progress", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["order"] == 6
    assert payload["result"]["total_checks"] == 20
    assert payload["result"]["failures"] == []


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
