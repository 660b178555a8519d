import json

import pytest

from homweyl.cli import build_parser, main, request_from_args


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestArguments:
    """Argument parsing into a CommandRequest"""

    def test_request_from_args(self):
        """Shared and command-specific options land in the request"""
        args = build_parser().parse_args(["deform", "--n", "2", "--k", "1,0", "--order", "1", "--mode", "bracket", "x1", "y1"])
        request = request_from_args(args)
        assert request.n == 2
        assert request.k == "1,0"
        assert request.expressions == ["x1", "y1"]
        assert request.options.order == 1
        assert request.options.mode == "bracket"

    def test_suites_split(self):
        """--suites is a comma-separated list"""
        args = build_parser().parse_args(["selftest", "--n", "1", "--suites", "oracle, twist-laws", "--quick"])
        request = request_from_args(args)
        assert request.options.suites == ["oracle", "twist-laws"]
        assert request.options.quick

    def test_n_is_required(self):
        """argparse exits with status 2 without --n"""
        with pytest.raises(SystemExit) as exc:
            build_parser().parse_args(["mul", "x1"])
        assert exc.value.code == 2


class TestCommands:
    """Text output and exit codes"""

    def test_star(self, capsys):
        """x1 ⊛ y1 for k = 1"""
        code, out, _ = run(capsys, "star", "--n", "1", "--k", "1", "x1", "y1")
        assert code == 0
        assert out.strip() == "y1*x1 + x1 + 1"

    def test_mul_folds_left(self, capsys):
        """Associative product of three factors"""
        code, out, _ = run(capsys, "mul", "--n", "1", "x1", "x1", "y1")
        assert code == 0
        assert out.strip() == "y1*x1^2 + 2*x1"

    def test_twist_power(self, capsys):
        """alpha_k^{-1}(y) = y - k"""
        code, out, _ = run(capsys, "twist", "--n", "2", "--k", "1,3", "--power", "-1", "y2")
        assert code == 0
        assert out.strip() == "y2 - 3"

    def test_commutator(self, capsys):
        """[x1, y1]_* = 1"""
        _, out, _ = run(capsys, "commutator", "--n", "1", "--k", "5", "x", "y")
        assert out.strip() == "1"

    def test_associator(self, capsys):
        """(x * 1) * y - x * (1 * y) = -2x for k = 2"""
        _, out, _ = run(capsys, "associator", "--n", "1", "--k", "2", "x", "1", "y")
        assert out.strip() == "-2*x1"

    def test_reduce_trace(self, capsys):
        """y^2 x reduces to 2 in three steps"""
        code, out, _ = run(capsys, "reduce", "--n", "1", "--k", "1", "y1^2*x1")
        assert code == 0
        assert out.splitlines() == [
            "1. [x1, .]* -> 2*y1*x1 + 2*x1",
            "2. [x1, .]* -> 2*x1",
            "3. [., y1]* -> 2",
            "scalar: 2",
        ]

    def test_iso(self, capsys):
        """k = 2 to k' = 3 in one variable"""
        code, out, _ = run(capsys, "iso", "--n", "1", "--k", "2", "--k2", "3")
        assert code == 0
        assert out.splitlines() == ["φ(x1) = 3/2*x1", "φ(y1) = 2/3*y1"]

    def test_homassoc_random(self, capsys):
        """Random triples are always hom-associative"""
        code, out, _ = run(capsys, "homassoc-check", "--n", "2", "--k", "1,1/2", "--count", "5", "--seed", "3")
        assert code == 0
        assert out.strip() == "5/5 triples hom-associative"

    def test_deform(self, capsys):
        """Star series with its parameter legend"""
        code, out, _ = run(capsys, "deform", "--n", "1", "--k", "1", "x1", "y1")
        assert code == 0
        assert out.splitlines() == ["y1*x1 + 1 + t1*x1", "parameters: t1 -> y1"]


class TestExitCodes:
    """Failed checks exit 1, usage errors 2, dimension errors 3"""

    def test_failed_derivation_check(self, capsys):
        """ad_{y^2} is not a derivation for k = 1"""
        code, out, _ = run(capsys, "derivation-check", "--n", "1", "--k", "1", "y1^2")
        assert code == 1
        assert out.splitlines()[0] == "structural: not a derivation"

    def test_shift_invariant_outside_structural_family(self, capsys):
        """(y1 - y2)^2 for k = (1, 1) has zero defects but fails the structural test"""
        code, out, _ = run(capsys, "derivation-check", "--n", "2", "--k", "1,1", "--json", "(y1 - y2)^2")
        record = json.loads(out)
        assert code == 1
        assert record["passed"] is False
        assert record["result"] == "shift-invariant, outside the structural family"
        assert all(d["passed"] for d in record["defects"])

    def test_accepted_derivation(self, capsys):
        """ad_{y1} is a derivation for k = (1, 0)"""
        code, out, _ = run(capsys, "derivation-check", "--n", "2", "--k", "1,0", "--json", "y1")
        assert code == 0
        assert json.loads(out)["result"] == "derivation"

    def test_rejected_morphism(self, capsys):
        """x -> 2x is not a morphism"""
        code, out, _ = run(capsys, "morphism-check", "--n", "1", "--k", "1", "2*x1", "y1")
        assert code == 1
        assert "relations and intertwining: rejected" in out

    def test_syntax_error(self, capsys):
        """Decimal input exits 2 with a message"""
        code, _, err = run(capsys, "star", "--n", "1", "x1", "0.5")
        assert code == 2
        assert "position" in err

    def test_mixed_products(self, capsys):
        """Unparenthesized mixed chains exit 2"""
        code, _, _ = run(capsys, "mul", "--n", "1", "x1*y1 ⊛ x1")
        assert code == 2

    def test_arity(self, capsys):
        """commutator takes two expressions"""
        code, _, err = run(capsys, "commutator", "--n", "1", "x1")
        assert code == 2
        assert "takes 2 expressions" in err

    def test_index_out_of_range(self, capsys):
        """y3 in A_2 exits 3"""
        code, _, _ = run(capsys, "mul", "--n", "2", "y3")
        assert code == 3

    def test_wrong_twist_length(self, capsys):
        """k of length 2 with n = 3 exits 3"""
        code, _, _ = run(capsys, "star", "--n", "3", "--k", "1,2", "x1", "y1")
        assert code == 3

    def test_no_isomorphism(self, capsys):
        """Different nonzero counts exit 1"""
        code, _, err = run(capsys, "iso", "--n", "2", "--k", "1,0", "--k2", "1,1")
        assert code == 1
        assert "not isomorphic" in err

    def test_zero_reduce(self, capsys):
        """The zero element cannot be reduced"""
        code, _, _ = run(capsys, "reduce", "--n", "1", "--k", "1", "0")
        assert code == 2

    def test_zero_denominator_in_twist(self, capsys):
        """--k 1/0 is a usage error, not a crash"""
        code, _, err = run(capsys, "reduce", "--n", "1", "--k", "1/0", "y1")
        assert code == 2
        assert "zero denominator" in err

    def test_zero_denominator_in_second_twist(self, capsys):
        """--k2 goes through the same parsing"""
        code, _, _ = run(capsys, "iso", "--n", "1", "--k", "1", "--k2", "3/0")
        assert code == 2

    def test_repeated_deformation_position(self, capsys):
        """--positions 1,1 exits 2 with a message"""
        code, _, err = run(capsys, "deform", "--n", "2", "--k", "1,1", "--positions", "1,1", "y1*x1", "x2")
        assert code == 2
        assert "repeated" in err

    def test_invalid_count(self, capsys):
        """--count 0 fails request validation"""
        code, _, _ = run(capsys, "homassoc-check", "--n", "1", "--count", "0")
        assert code == 2


class TestJsonOutput:
    """--json prints a CommandRecord"""

    def test_reduce_record(self, capsys):
        """The trace is part of the record"""
        code, out, _ = run(capsys, "reduce", "--n", "1", "--k", "1", "--json", "y1^2*x1")
        assert code == 0
        record = json.loads(out)
        assert record["command"] == "reduce"
        assert record["result"] == "2"
        assert record["passed"] is True
        assert [step["operation"] for step in record["trace"]] == ["[x1, .]*", "[x1, .]*", "[., y1]*"]
        assert record["inputs"]["k"] == "1"

    def test_morphism_record(self, capsys):
        """Defects are prefixed by the checker that produced them"""
        code, out, _ = run(capsys, "morphism-check", "--n", "1", "--k", "1", "--json", "2*x1", "y1")
        record = json.loads(out)
        assert code == 1
        assert record["passed"] is False
        failed = {(d["equation"], d["defect"]) for d in record["defects"] if not d["passed"]}
        assert ("relations/xy", "1") in failed
        assert ("equations/PDE3", "1") in failed

    def test_iso_record(self, capsys):
        """The result maps generator labels to images"""
        _, out, _ = run(capsys, "iso", "--n", "2", "--k", "0,5", "--k2", "7,0", "--json")
        record = json.loads(out)
        assert record["result"] == {
            "φ(x1)": "x2",
            "φ(x2)": "7/5*x1",
            "φ(y1)": "y2",
            "φ(y2)": "5/7*y1",
        }
