"""Tests for the zipfred command-line front end."""

from fractions import Fraction
import csv
import io
import json
import logging

import pytest

from zipfred.cli import build_parser, main
from zipfred.cli.verify import _exact_at_most
from zipfred.core.codec import MAGIC
from zipfred.core.logger import reset_logging


@pytest.fixture(autouse=True)
def _fresh_state(reset_config):
    """Fresh Config per test; drop handlers bound to captured streams afterwards."""
    yield
    logging.getLogger().handlers.clear()
    logging.getLogger().setLevel(logging.WARNING)
    reset_logging()


@pytest.fixture
def banana_files(tmp_path):
    """Alphabet a, b, n, x and the word banana, read character by character."""
    alphabet = tmp_path / "alphabet.txt"
    alphabet.write_text("a\nb\nn\nx\n", encoding="utf-8")
    word = tmp_path / "banana.txt"
    word.write_text("banana\n", encoding="utf-8")
    return {"alphabet": alphabet, "input": word, "container": tmp_path / "banana.uec"}


def _encode(files, *extra):
    return main(
        [
            "encode",
            "--input", str(files["input"]),
            "--alphabet", str(files["alphabet"]),
            "--unit", "char",
            "--output", str(files["container"]),
            *extra,
        ]
    )


class TestParser:
    """Test argument parsing."""

    def test_subcommand_required(self):
        with pytest.raises(SystemExit) as exc_info:
            build_parser().parse_args([])
        assert exc_info.value.code == 2

    def test_bounds_lists(self):
        args = build_parser().parse_args(["bounds", "--alpha", "1.5", "2", "--k", "100", "--n", "4", "8"])
        assert args.alpha == [1.5, 2.0]
        assert args.n == [4, 8]

    def test_hex_seed(self):
        args = build_parser().parse_args(["verify", "--seed", "0xC0FFEE"])
        assert args.seed == 0xC0FFEE

    def test_unknown_suite(self):
        with pytest.raises(SystemExit):
            build_parser().parse_args(["verify", "--suite", "everything"])

    def test_encode_needs_input(self):
        with pytest.raises(SystemExit):
            build_parser().parse_args(["encode", "--alphabet", "a.txt"])


class TestCodecCommands:
    """Test encode and decode."""

    def test_encode_report(self, banana_files, capsys):
        assert _encode(banana_files, "--n", "6") == 0
        report = json.loads(capsys.readouterr().out)
        assert report["tokens"] == 6
        assert report["k"] == 4
        assert report["payload_bits"] == 14
        assert report["blocks"][0]["layout"]["d"] == 3
        assert banana_files["container"].read_bytes()[:4] == MAGIC

    def test_round_trip(self, banana_files, tmp_path, capsys):
        assert _encode(banana_files) == 0
        decoded = tmp_path / "decoded.txt"
        code = main(
            [
                "decode",
                "--input", str(banana_files["container"]),
                "--alphabet", str(banana_files["alphabet"]),
                "--unit", "char",
                "--output", str(decoded),
            ]
        )
        assert code == 0
        assert decoded.read_text(encoding="utf-8") == "banana\n"

    def test_multiple_blocks(self, banana_files, capsys):
        assert _encode(banana_files, "--n", "4") == 0
        report = json.loads(capsys.readouterr().out)
        assert [block["n"] for block in report["blocks"]] == [4, 2]
        assert banana_files["container"].read_bytes().count(MAGIC) == 2

    def test_empty_alphabet(self, banana_files, capsys):
        banana_files["alphabet"].write_text("", encoding="utf-8")
        assert _encode(banana_files) == 2
        error = json.loads(capsys.readouterr().err.strip().splitlines()[-1])
        assert error["exit_code"] == 2
        assert error["error"]["type"] == "ValidationError"

    def test_token_outside_alphabet(self, banana_files):
        banana_files["input"].write_text("bandana\n", encoding="utf-8")
        assert _encode(banana_files) == 2

    def _decode(self, files, target, *extra):
        return main(
            [
                "decode",
                "--input", str(files["container"]),
                "--alphabet", str(files["alphabet"]),
                "--unit", "char",
                "--output", str(target),
                *extra,
            ]
        )

    def test_decode_block_length_too_short(self, banana_files, tmp_path, capsys):
        """A single six-symbol frame does not fit a block length of 5."""
        assert _encode(banana_files, "--n", "6") == 0
        assert self._decode(banana_files, tmp_path / "out.txt", "--n", "5") == 2
        error = json.loads(capsys.readouterr().err.strip().splitlines()[-1])
        assert error["error"]["type"] == "CorruptStreamError"
        assert error["error"]["details"]["header"] == 6

    def test_multiple_blocks_round_trip_with_n(self, banana_files, tmp_path):
        """The --n used to encode also decodes: frames of 4 and a last frame of 2."""
        assert _encode(banana_files, "--n", "4") == 0
        decoded = tmp_path / "decoded.txt"
        assert self._decode(banana_files, decoded, "--n", "4") == 0
        assert decoded.read_text(encoding="utf-8") == "banana\n"

    def test_decode_block_length_mismatch_in_full_frame(self, banana_files, tmp_path):
        """A full frame of 4 contradicts --n 5 even though the stream has 6 symbols."""
        assert _encode(banana_files, "--n", "4") == 0
        assert self._decode(banana_files, tmp_path / "out.txt", "--n", "5") == 2

    def test_corrupt_container(self, banana_files, tmp_path):
        banana_files["container"].write_bytes(b"XXXX\x06\x04\x00\x00")
        code = main(
            [
                "decode",
                "--input", str(banana_files["container"]),
                "--alphabet", str(banana_files["alphabet"]),
                "--output", str(tmp_path / "out.txt"),
            ]
        )
        assert code == 2


class TestBoundsCommand:
    """Test the bounds grid command."""

    def test_csv_default(self, capsys):
        assert main(["bounds", "--alpha", "2", "--k", "8", "--n", "16"]) == 0
        rows = list(csv.DictReader(io.StringIO(capsys.readouterr().out)))
        assert rows[0].keys() >= {"claim", "alpha", "c", "k", "n", "value", "feasible"}
        assert any(row["feasible"] == "False" for row in rows)

    def test_json_format(self, capsys):
        code = main(["bounds", "--alpha", "2", "--k", "2000", "--n", "16", "--format", "json"])
        assert code == 0
        report = json.loads(capsys.readouterr().out)
        assert report["config"]["k"] == [2000]
        assert all(row["feasible"] for row in report["rows"])

    def test_output_file(self, tmp_path):
        target = tmp_path / "bounds.csv"
        assert main(["bounds", "--alpha", "2", "--k", "2000", "--n", "16", "--output", str(target)]) == 0
        assert target.read_text(encoding="utf-8").startswith("claim,alpha,c,k,n,value,feasible")

    def test_missing_alpha(self):
        assert main(["bounds", "--k", "100", "--n", "4"]) == 2


class TestShtarkovCommand:
    """Test the worst-case redundancy command."""

    def test_zipf_class(self, capsys):
        assert main(["shtarkov", "--alpha", "2", "--k", "8", "--n", "4"]) == 0
        report = json.loads(capsys.readouterr().out)["report"]
        assert set(report) >= {"class", "n", "log2_S", "method", "lower_bound_thm1", "upper_bound_logkfact"}
        assert 0.0 < report["log2_S"] <= report["upper_bound_logkfact"]

    def test_class_file(self, tmp_path, capsys):
        description = tmp_path / "class.json"
        description.write_text(json.dumps({"kind": "permutation", "probs": ["0.5", "0.3", "0.2"]}))
        assert main(["shtarkov", "--class", str(description), "--n", "3"]) == 0
        assert json.loads(capsys.readouterr().out)["report"]["n"] == 3

    def test_envelope_from_scalars(self, capsys):
        """--c turns --alpha/--k into the envelope c i^-alpha."""
        assert main(["shtarkov", "--alpha", "2", "--c", "2", "--k", "8", "--n", "3"]) == 0
        bracket = json.loads(capsys.readouterr().out)["report"]["bracket"]
        assert bracket["lower"] > 0.0
        assert bracket["lower"] <= bracket["upper"]

    def test_bad_class_file(self, tmp_path):
        description = tmp_path / "class.json"
        description.write_text(json.dumps({"kind": "gaussian"}))
        assert main(["shtarkov", "--class", str(description), "--n", "3"]) == 2

    def test_missing_n(self):
        assert main(["shtarkov", "--alpha", "2", "--k", "8"]) == 2


class TestRedundancyCommand:
    """Test the expected-redundancy command."""

    def test_zipf_member(self, capsys):
        assert main(["redundancy", "--alpha", "2", "--k", "4", "--n", "4"]) == 0
        report = json.loads(capsys.readouterr().out)
        (member,) = report["members"]
        assert member["achieved"]["achieved"] >= 0.0
        assert member["achieved"]["achieved"] <= member["distinct_upper_bound"]["value"]
        assert "minimax_permutation_class" not in member

    def test_minimax(self, capsys):
        assert main(["redundancy", "--alpha", "2", "--k", "3", "--n", "3", "--minimax"]) == 0
        (member,) = json.loads(capsys.readouterr().out)["members"]
        assert member["minimax_permutation_class"]["value"] >= 0.0

    def test_instance_too_large(self, capsys):
        assert main(["redundancy", "--alpha", "2", "--k", "200", "--n", "200"]) == 3
        error = json.loads(capsys.readouterr().err.strip().splitlines()[-1])
        assert error["error"]["type"] == "InstanceTooLargeError"


class TestVerifyCommand:
    """Test the verification suites."""

    def test_bounds_suite(self, tmp_path):
        target = tmp_path / "verify.json"
        assert main(["verify", "--suite", "bounds", "--output", str(target)]) == 0
        report = json.loads(target.read_text(encoding="utf-8"))
        assert list(report["suites"]) == ["bounds"]
        assert report["failed"] == []
        assert report["passed"] is True
        assert report["checks"] == len(report["suites"]["bounds"])

    def test_exact_sum_decides_the_check(self):
        """A sum just above 1 fails even where its float rounds to 1.0."""
        above = Fraction(2**60 + 1, 2**60)
        assert float(above) == 1.0
        report = _exact_at_most("codec_kraft", "sum_x 2^-|encode(x)| <= 1", above, 1)
        assert report.passed is False
        assert report.details["exact"] == str(above)
        assert _exact_at_most("codec_kraft", "sum_x 2^-|encode(x)| <= 1", Fraction(1), 1).passed

    def test_identical_runs_identical_bytes(self, tmp_path):
        """Same arguments and seed give a byte-identical report."""
        target = tmp_path / "verify.json"
        args = ["verify", "--suite", "bounds", "--seed", "0xC0FFEE", "--output", str(target)]
        assert main(args) == 0
        first = target.read_bytes()
        assert main(args) == 0
        assert target.read_bytes() == first


class TestConfiguration:
    """Test configuration and logging options."""

    def test_config_file_sets_format(self, tmp_path, capsys):
        config = tmp_path / "zipfred.yaml"
        config.write_text("output:\n  format: csv\n", encoding="utf-8")
        code = main(["shtarkov", "--alpha", "2", "--k", "4", "--n", "2", "--config", str(config)])
        assert code == 0
        assert json.loads(capsys.readouterr().out)["config"]["format"] == "csv"

    def test_bad_config_file(self, tmp_path):
        config = tmp_path / "broken.yaml"
        config.write_text("output: [unclosed\n", encoding="utf-8")
        assert main(["shtarkov", "--alpha", "2", "--k", "4", "--n", "2", "--config", str(config)]) == 2

    def test_log_level(self, capsys):
        assert main(["shtarkov", "--alpha", "2", "--k", "4", "--n", "2", "--log-level", "DEBUG"]) == 0
        assert "Running shtarkov" in capsys.readouterr().err
