import json
from pathlib import Path

import pytest
from _pytest.capture import CaptureFixture
from pytest_mock import MockerFixture

from satopo.cli import main
from satopo.harness.reports import EXIT_DEGENERATE, EXIT_FAILED, EXIT_OK
from satopo.tests.factories import IdentityReportFactory
from satopo.tests.test_utils import BROUGHTON, DISK, MONKEY_SADDLE, PARABOLOID, SADDLE


def output(capsys: CaptureFixture) -> object:
    return json.loads(capsys.readouterr().out)


class TestQueries:
    def test_critical(self, capsys: CaptureFixture) -> None:
        assert main(["critical", SADDLE]) == EXIT_OK

        (point,) = output(capsys)
        assert (point["degree"], point["value"]) == (-1, "0/1")
        assert (point["ind_f"], point["ind_neg_f"]) == (-1, -1)

    def test_critical_with_a_repeated_gradient_factor(self, capsys: CaptureFixture) -> None:
        assert main(["critical", "(x^2 + y^2)^2"]) == EXIT_OK

        (point,) = output(capsys)
        assert (point["degree"], point["value"]) == (1, "0/1")

    def test_degree_at_infinity(self, capsys: CaptureFixture) -> None:
        assert main(["deg-inf", MONKEY_SADDLE]) == EXIT_OK
        assert output(capsys) == {"degree_at_infinity": -2}

    def test_chi(self, capsys: CaptureFixture) -> None:
        assert main(["chi", PARABOLOID, "--alpha", "1", "--flavor", "le"]) == EXIT_OK
        assert output(capsys) == {"chi": 1}

    def test_chi_with_compact_supports(self, capsys: CaptureFixture) -> None:
        assert main(["chi", PARABOLOID, "--alpha", "1", "--flavor", "eq", "--compact"]) == 0
        assert output(capsys) == {"chi": 0}

    def test_link(self, capsys: CaptureFixture) -> None:
        assert main(["link", BROUGHTON, "--alpha", "0", "--flavor", "eq"]) == EXIT_OK
        assert output(capsys) == {"link_chi": 6}

    def test_branches(self, capsys: CaptureFixture) -> None:
        assert main(["branches", BROUGHTON]) == EXIT_OK
        assert output(capsys) == {"half_branches": 6, "r_infinity": 3}

    def test_lambda(self, capsys: CaptureFixture) -> None:
        assert main(["lambda", BROUGHTON, "--seed", "1"]) == EXIT_OK

        data = output(capsys)
        assert data["lambda"] == ["0/1"]
        assert len(data["base_point"]) == 2

    def test_rejects_bad_flavor(self) -> None:
        with pytest.raises(SystemExit):
            main(["chi", PARABOLOID, "--alpha", "1", "--flavor", "lt"])

    def test_bad_expression(self, capsys: CaptureFixture) -> None:
        assert main(["deg-inf", "2x"]) == EXIT_FAILED
        assert capsys.readouterr().err.endswith(
            "satopo: Implicit multiplication is not allowed in '2x'.\n"
        )


class TestVerify:
    def test_passing_identity(self, capsys: CaptureFixture) -> None:
        argv = ["verify", "--identity", "C4.2-FIBER", PARABOLOID, "--alpha", "-1"]

        assert main(argv) == EXIT_OK

        data = output(capsys)
        assert (data["lhs"], data["rhs"], data["pass"]) == ("0/1", "0/1", True)
        assert data["input"] == f"poly: {PARABOLOID} alpha=-1"

    def test_plane_set(self, capsys: CaptureFixture) -> None:
        assert main(["verify", "--identity", "T5.6", "--region", DISK]) == EXIT_OK
        assert output(capsys)["pass"] is True

    def test_degenerate_input(self, capsys: CaptureFixture) -> None:
        assert main(["verify", "--identity", "T3.20", "3"]) == EXIT_DEGENERATE
        assert output(capsys)["skipped_reason"] == "f = 3 is constant."

    def test_needs_an_input(self, capsys: CaptureFixture) -> None:
        assert main(["verify", "--identity", "T3.20"]) == EXIT_DEGENERATE
        assert capsys.readouterr().err.endswith(
            "satopo: Give a polynomial, --region or --curve.\n"
        )


class TestCorpus:
    def test_file(self, corpus_file, capsys: CaptureFixture, mocker: MockerFixture) -> None:
        mocker.patch(
            "satopo.harness.tasks.verify",
            side_effect=lambda identity, item: IdentityReportFactory(identity=identity),
        )
        corpus: Path = corpus_file(f"# one curve\ncurve: {DISK}\n")

        assert main(["corpus", str(corpus)]) == EXIT_OK

        data = output(capsys)
        assert len(data["reports"]) == 10
        assert data["summary"]["pass"] == 10

    def test_failure(self, corpus_file, capsys: CaptureFixture, mocker: MockerFixture) -> None:
        mocker.patch(
            "satopo.harness.tasks.verify",
            side_effect=lambda identity, item: IdentityReportFactory(passed=False),
        )
        corpus: Path = corpus_file(f"region: {DISK}\n")

        assert main(["corpus", str(corpus)]) == EXIT_FAILED
        assert output(capsys)["summary"]["exit_code"] == EXIT_FAILED

    def test_parse_error(self, corpus_file, capsys: CaptureFixture) -> None:
        corpus: Path = corpus_file("poly: x^2\npoly x\n")

        assert main(["corpus", str(corpus)]) == EXIT_FAILED
        assert capsys.readouterr().err.endswith(
            "satopo: line 2: Expected '<kind>: <expression>', got 'poly x'.\n"
        )

    def test_builtin(self, capsys: CaptureFixture, mocker: MockerFixture) -> None:
        mocker.patch(
            "satopo.harness.tasks.verify",
            side_effect=lambda identity, item: IdentityReportFactory(identity=identity),
        )

        assert main(["corpus"]) == EXIT_OK
        assert output(capsys)["summary"]["pass"] == 7 * 32 + 4 * 10


def test_random(capsys: CaptureFixture) -> None:
    assert main(["random", "--count", "2", "--seed", "5"]) == EXIT_OK

    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 2
    assert all(line.startswith("poly: ") for line in lines)


def test_gauss_bonnet(capsys: CaptureFixture) -> None:
    assert main(["gauss-bonnet", "--region", DISK, "--mode", "sampled", "--n", "8"]) == EXIT_OK

    data = output(capsys)
    assert (data["value"], data["mode"], data["chi"]) == ("1/1", "sampled", 1)


def test_plot(tmp_path: Path, capsys: CaptureFixture) -> None:
    target: Path = tmp_path / "saddle.svg"

    assert main(["plot", SADDLE, "-o", str(target)]) == EXIT_OK

    assert "<svg" in target.read_text()
    assert output(capsys) == {"output": str(target)}
