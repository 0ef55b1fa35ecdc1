import json
import subprocess
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qcenter.algebra import EPS_SO, ISO, SO, So, build_presentation
from qcenter.cli.formatting import (element_from_json, element_to_json, format_element,
                                    format_scalar, scalar_to_json)
from qcenter.cli.main import main
from qcenter.cli.parser import parse_expression, parse_letter
from qcenter.coeffs import EPS, Q, S, S_INV, CoeffDomain, RationalFunction
from qcenter.errors import ParseError, UnknownLetter

from strategies import rich_elements

SO3 = build_presentation(SO, 3)
SO4 = build_presentation(SO, 4)
EPS3 = build_presentation(EPS_SO, 3)
SO3_AT5 = build_presentation(SO, 3, CoeffDomain.root(5))


class TestParser:
    def test_canonical_example(self):
        a = parse_expression("I[3,2]*I[2,1]", SO3)
        assert format_element(a) == "q*I[2,1]*I[3,2] - q^(1/2)*I[3,1]"

    def test_zero(self):
        assert format_element(parse_expression("I[2,1] - I[2,1]", SO3)) == "0"

    def test_half_integer_q_powers(self):
        assert parse_expression("q^(1/2)", SO3) == SO3.scalar(S)
        assert parse_expression("q^(-1/2)", SO3) == SO3.scalar(S_INV)
        assert parse_expression("q^-1 * q", SO3) == SO3.scalar(1)

    def test_rationals_and_division(self):
        a = parse_expression("3/4*I[2,1] / (q + 1)", SO3)
        assert a == RationalFunction(3, 4 * (Q + 1)) * SO3.letter(So(2, 1))

    def test_brackets(self):
        assert parse_expression("qbr(I[2,1], I[3,2])", SO3) == SO3.letter(So(3, 1))
        assert parse_expression("br(I[2,1], I[2,1])", SO3) == SO3.zero()

    def test_precedence(self):
        assert parse_expression("-I[2,1]^2", SO3) == -(SO3.letter(So(2, 1), 2))
        assert parse_expression("2*3+1", SO3) == SO3.scalar(7)

    def test_eps(self):
        assert parse_expression("eps^2*J[2]", EPS3) == EPS * EPS * EPS3.letter(parse_letter("J[2]", EPS3))

    def test_unknown_letter(self):
        with pytest.raises(UnknownLetter) as exc:
            parse_expression("I[1,2]", SO3)
        assert str(exc.value) == "I[1,2]"
        with pytest.raises(UnknownLetter):
            parse_expression("T[1]", SO3)
        with pytest.raises(UnknownLetter):
            parse_expression("I[5,1]", SO4)

    @pytest.mark.parametrize("text,pos", [("I[2,1] +", 8), ("I[2,1", 5), ("2 $ 3", 2),
                                          ("x", 0), ("(I[2,1]", 7), ("I[2,1]^(1/2)", 6)])
    def test_syntax_error_positions(self, text, pos):
        with pytest.raises(SyntaxError) as exc:
            parse_expression(text, SO3)
        assert isinstance(exc.value, ParseError) and exc.value.position == pos

    def test_division_by_element_rejected(self):
        with pytest.raises(ParseError):
            parse_expression("I[2,1]/I[3,2]", SO3)

    def test_eps_needs_eps_domain(self):
        with pytest.raises(ParseError):
            parse_expression("eps", SO3)


class TestFormatting:
    def test_scalar_forms(self):
        assert format_scalar(RationalFunction(Q + 1)) == "1 + q"
        assert format_scalar(RationalFunction(S_INV * -2)) == "-2*q^(-1/2)"
        assert format_scalar(RationalFunction(1, Q + 1)) == "(1)/(1 + q)"

    def test_json_rational(self):
        assert scalar_to_json(3) == {"num": "3", "den": "1"}

    def test_json_laurent(self):
        assert scalar_to_json(RationalFunction(S * 2 + EPS)) == [[1, 0, "2", "1"], [0, 1, "1", "1"]]

    def test_json_cyclotomic(self):
        obj = scalar_to_json(SO3_AT5.domain.s())
        assert obj["conductor"] == 10
        assert obj["coeffs"][1] == {"num": "1", "den": "1"}

    def test_json_element_shape(self):
        a = parse_expression("I[3,2]*I[2,1]", SO3)
        obj = element_to_json(a)
        assert obj["terms"][0]["mono"] == [["I[2,1]", 1], ["I[3,2]", 1]]
        assert obj["terms"][0]["coeff"] == [[2, 0, "1", "1"]]


@pytest.mark.parametrize("pres", [SO4, SO3_AT5, EPS3, build_presentation(ISO, 2),
                                  build_presentation(EPS_SO, 3, CoeffDomain.root(4))],
                         ids=["so4", "so3@5", "eps", "iso2", "eps@4"])
@settings(max_examples=200, deadline=None)
@given(data=st.data())
def test_round_trip(pres, data):
    a = data.draw(rich_elements(pres))
    assert parse_expression(format_element(a), pres) == a
    assert element_from_json(json.loads(json.dumps(element_to_json(a))), pres) == a


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


class TestMain:
    def test_normalize(self, capsys):
        code, out, _ = run(["normalize", "--algebra", "so:3", "I[3,2]*I[2,1]"], capsys)
        assert code == 0 and out.strip() == "q*I[2,1]*I[3,2] - q^(1/2)*I[3,1]"

    def test_normalize_json(self, capsys):
        code, out, _ = run(["normalize", "--algebra", "so:3", "--format", "json", "0"], capsys)
        assert code == 0 and json.loads(out) == {"terms": []}

    def test_commutator(self, capsys):
        code, out, _ = run(["commutator", "--algebra", "so:4", "I[4,3]", "I[2,1]"], capsys)
        assert code == 0 and out.strip() == "0"

    def test_central_true_and_false(self, capsys):
        code, out, _ = run(["cn", "--algebra", "so:3", "--root-of-unity", "4", "I[3,1]"], capsys)
        assert code == 0
        code, _, _ = run(["central", "--algebra", "so:3", "--root-of-unity", "4", out.strip()], capsys)
        assert code == 0
        code, out, _ = run(["central", "--algebra", "so:3", "I[2,1]"], capsys)
        assert code == 1 and "I[3,2]" in out

    def test_casimir(self, capsys):
        code, out, _ = run(["casimir", "--algebra", "iso:2"], capsys)
        assert code == 0 and "T[1]^2" in out
        code, _, err = run(["casimir", "--algebra", "so:4"], capsys)
        assert code == 2 and "error" in err

    def test_tilde_cn_and_contract(self, capsys):
        code, out, _ = run(["tilde-cn", "--algebra", "eps-so:3", "--root-of-unity", "3", "1"], capsys)
        assert code == 0
        code, out, _ = run(["contract", "--algebra", "eps-so:3", "--root-of-unity", "3",
                            out.strip()], capsys)
        assert code == 0 and out.strip() == "T[1]^3"

    def test_parse_errors_exit_2(self, capsys):
        code, _, err = run(["normalize", "--algebra", "so:3", "I[1,2]"], capsys)
        assert code == 2 and "I[1,2]" in err
        code, _, err = run(["normalize", "--algebra", "so:3", "I[2,1"], capsys)
        assert code == 2 and "position 5" in err

    @pytest.mark.parametrize("argv", [["normalize", "--algebra", "so:3", "--bogus"],
                                      ["frobnicate", "--algebra", "so:3"],
                                      ["normalize", "--algebra", "sp:3", "1"],
                                      ["normalize", "I[2,1]"]])
    def test_usage_errors_exit_2(self, argv, capsys):
        with pytest.raises(SystemExit) as exc:
            main(argv)
        assert exc.value.code == 2

    def test_unsupported_rank_exit_2(self, capsys):
        code, _, _ = run(["normalize", "--algebra", "so:2", "1"], capsys)
        assert code == 2

    def test_check_json(self, capsys):
        code, out, _ = run(["check", "--algebra", "so:3", "--root-of-unity", "5"], capsys)
        report = json.loads(out)
        assert code == 0 and isinstance(report, list) and report
        assert all({"claim", "parameters", "verdict", "millis"} <= set(r) for r in report)

    def test_check_failure_exit_1(self, capsys):
        code, out, _ = run(["check", "--algebra", "so:4", "--crossing", "q", "confluence",
                            "--format", "text"], capsys)
        assert code == 1 and "FAIL local confluence" in out and "witness" in out

    def test_check_out_file_and_seed(self, tmp_path, monkeypatch, capsys):
        monkeypatch.setenv("QCENTER_SEED", "42")
        target = tmp_path / "report.json"
        code, out, _ = run(["check", "--algebra", "iso:2", "pbw", "--out", str(target)], capsys)
        report = json.loads(target.read_text())
        assert code == 0 and out == ""
        assert report[0]["parameters"]["seed"] == 42

    def test_check_unknown_target(self, capsys):
        code, _, _ = run(["check", "--algebra", "so:3", "bogus"], capsys)
        assert code == 2


def test_console_script():
    proc = subprocess.run([sys.executable, "-m", "qcenter.cli.main", "check", "--algebra", "so:3",
                           "--root-of-unity", "5"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert all(r["verdict"] for r in json.loads(proc.stdout))
