#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
test_cli.py

Integration tests for the command line interface in cli.py.
Date: 10/26

This file contains test cases for the functions:
- build_parser
- main
- cmd_analyze
- cmd_sweep
- cmd_tables
- cmd_inspect

The tests cover the exit codes, the output formats and the error messages.
"""

import json
import shutil

import pytest

from dictpin import __version__
from dictpin.cli import build_parser, main
from dictpin.constants import CORPUS_ENV_VAR


@pytest.fixture
def en_args(en_path):
    return ["--dict", en_path, "--dict-format", "subtlex"]


@pytest.fixture(autouse=True)
def no_corpus_dir(monkeypatch):
    monkeypatch.delenv(CORPUS_ENV_VAR, raising=False)


def test_parser_defaults_are_unset(en_path):
    args = build_parser().parse_args(["analyze", "--dict", en_path])
    assert args.dict == [en_path]
    assert args.pin_length is None
    assert args.morph is None
    assert args.output == "table"


def test_version(capsys):
    with pytest.raises(SystemExit) as excinfo:
        main(["--version"])
    assert excinfo.value.code == 0
    assert __version__ in capsys.readouterr().out


def test_no_command(capsys):
    assert main([]) == 2


# analyze


def test_analyze(capsys, en_args):
    assert main(["analyze", *en_args]) == 0
    out = capsys.readouterr().out
    assert out.startswith("Scenario: basic n=4 standard")
    assert "8428" in out


def test_analyze_json(capsys, en_args):
    assert main(["analyze", *en_args, "--output", "json", "--top", "2"]) == 0
    records = json.loads(capsys.readouterr().out)
    assert records[0]["kind"] == "metrics"
    assert [r["pin"] for r in records[1:]] == ["8428", "8447"]


def test_analyze_options(capsys, en_args):
    argv = ["analyze", *en_args, "--strategy", "prefix", "--morph", "--blacklist",
            "2", "--blacklist-mode", "word", "--mapping", "stretched", "--verbose"]
    assert main(argv) == 0
    assert "prefix n=4 stretched morph bl-word=2" in capsys.readouterr().out


def test_analyze_monte_carlo(capsys, en_args):
    assert main(["analyze", *en_args, "--samples", "1000", "--seed", "4"]) == 0
    assert "Monte Carlo (1000 samples, seed 4)" in capsys.readouterr().out


def test_analyze_two_dictionaries(capsys, en_path, nl_path):
    argv = ["analyze", "--dict", en_path, "--dict", nl_path, "--mix-weight", "0.25",
            "--output", "csv"]
    assert main(argv) == 0
    assert "mix=0.25" in capsys.readouterr().out


def test_analyze_separator(capsys, nl_path):
    assert main(["analyze", "--dict", nl_path, "--separator", "tab"]) == 0
    assert "6438" in capsys.readouterr().out


def test_analyze_config_file(capsys, en_path, data_file):
    config = data_file("scenario.toml")

    assert main(["analyze", "--dict", en_path, "--config", config]) == 0
    out = capsys.readouterr().out
    assert "Scenario: prefix n=5 standard" in out
    assert "84373" in out

    argv = ["analyze", "--dict", en_path, "--config", config, "--pin-length", "4"]
    assert main(argv) == 0
    assert "Scenario: prefix n=4 standard" in capsys.readouterr().out


@pytest.mark.parametrize(
    "extra, message",
    [
        ([], "no frequency list"),
        (["--dict", "a", "--dict", "b", "--dict", "c"], "one frequency list"),
        (["--dict", "a", "--alpha", "2"], "alpha"),
        (["--dict", "a", "--pin-length", "12"], "PIN length"),
    ],
)
def test_analyze_config_errors(capsys, extra, message):
    assert main(["analyze", *extra]) == 2
    err = capsys.readouterr().err
    assert "usage:" in err
    assert message in err


def test_analyze_config_file_bad_value(capsys, en_path, data_file):
    argv = ["analyze", "--dict", en_path, "--config", data_file("bad_values.toml")]
    assert main(argv) == 2
    err = capsys.readouterr().err
    assert "usage:" in err
    assert "four" in err


@pytest.mark.parametrize(
    "extra", [["--strategy", "suffix"], ["--output", "xml"], ["--separator", "::"]]
)
def test_analyze_usage_errors(en_args, extra):
    with pytest.raises(SystemExit) as excinfo:
        main(["analyze", *en_args, *extra])
    assert excinfo.value.code == 2


def test_analyze_missing_file(capsys):
    assert main(["analyze", "--dict", "missing.tsv"]) == 1
    err = capsys.readouterr().err
    assert err.startswith("Error: [parse]")
    assert "missing.tsv" in err


def test_analyze_empty_support(capsys, en_args):
    assert main(["analyze", *en_args, "--pin-length", "8"]) == 1
    assert "empty strategy support" in capsys.readouterr().err


def test_analyze_runtime_error(capsys, mocker, en_args):
    mocker.patch("dictpin.cli.run_scenario", side_effect=RuntimeError("boom"))
    assert main(["analyze", *en_args]) == 1
    assert capsys.readouterr().err == "Error: boom\n"


# sweep


def test_sweep_csv(capsys, en_args):
    assert main(["sweep", *en_args, "--sweep-max", "3", "--output", "csv"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 5
    assert lines[0].startswith("k,entropy_bits,lambda_beta,lambda_3")


def test_sweep_workers(capsys, en_args):
    argv = ["sweep", *en_args, "--sweep-max", "4", "--sweep-step", "2", "--workers",
            "2"]
    assert main(argv) == 0
    assert "Blacklist sweep (pin mode)" in capsys.readouterr().out


def test_sweep_exhausts_support(capsys, en_args):
    assert main(["sweep", *en_args]) == 1
    assert capsys.readouterr().err.startswith("Error: [blacklist-pins]")


def test_sweep_invalid_step(capsys, en_args):
    assert main(["sweep", *en_args, "--sweep-step", "0"]) == 2
    assert "sweep step" in capsys.readouterr().err


# tables


def test_tables_without_corpora(capsys):
    assert main(["tables"]) == 1
    captured = capsys.readouterr()
    assert "Ideal values, uniform PINs" in captured.out
    assert "Table 1 skipped" in captured.err
    assert "Error: no frequency list" in captured.err


def test_tables_opensub(capsys, en_path):
    argv = ["tables", "--opensub", en_path, "--dict-format", "subtlex", "--output",
            "csv"]
    assert main(argv) == 0
    out = capsys.readouterr().out
    assert "opensub n=4" in out
    assert "opensub n=5" in out


def test_tables_corpus_dir(capsys, monkeypatch, tmp_path, en_path):
    shutil.copy(en_path, tmp_path / "opensub.tsv")
    monkeypatch.setenv(CORPUS_ENV_VAR, str(tmp_path))

    assert main(["tables", "--output", "json"]) == 0
    records = json.loads(capsys.readouterr().out)
    assert {r["table"] for r in records} == {"ideal", "1"}


def test_tables_unreadable_list(capsys, en_path):
    argv = ["tables", "--subtlexus", en_path, "--subtlexnl", "nope.tsv",
            "--dict-format", "subtlex", "--output", "json"]
    assert main(argv) == 0
    captured = capsys.readouterr()
    records = json.loads(captured.out)
    assert {r["table"] for r in records} == {"ideal", "1", "3"}
    assert "subtlexnl frequency list unavailable" in captured.err
    assert "nope.tsv" in captured.err
    assert "Table 4 skipped: [blacklist-pins]" in captured.err
    assert "Table 5 skipped" in captured.err


def test_tables_unreadable_only_list(capsys):
    assert main(["tables", "--opensub", "nope.tsv"]) == 1
    err = capsys.readouterr().err
    assert "opensub frequency list unavailable" in err
    assert "Error: no frequency list" in err


def test_tables_deterministic(capsys, data_file):
    wide = data_file("wide_en.tsv")
    argv = ["tables", "--subtlexus", wide, "--subtlexnl", wide, "--output", "csv"]

    assert main(argv) == 0
    first = capsys.readouterr().out
    assert main(argv) == 0
    second = capsys.readouterr().out

    assert first == second
    assert {line.split(",")[0] for line in first.splitlines()[1:]} == {
        "ideal", "1", "3", "4", "5"
    }


# inspect


def test_inspect(capsys, en_args):
    assert main(["inspect", *en_args]) == 0
    out = capsys.readouterr().out
    assert "Words: 17\n" in out
    assert "Words with count > 1: 16\n" in out
    assert "Rejected words: 1\n" in out
    assert "Malformed lines: 1\n" in out


def test_inspect_csv(capsys, en_args):
    assert main(["inspect", *en_args, "--output", "csv"]) == 0
    assert capsys.readouterr().out == (
        "length,words,retained\n3,1,1\n4,11,10\n5,5,5\n"
    )


def test_inspect_json(capsys, en_args):
    assert main(["inspect", *en_args, "--output", "json", "--min-count", "100"]) == 0
    stats = json.loads(capsys.readouterr().out)
    assert stats["words"] == 17
    assert stats["retained_words"] == 5
    assert stats["length_histogram"] == {"3": 1, "4": 11, "5": 5}


def test_inspect_missing_file(capsys):
    assert main(["inspect", "--dict", "missing.tsv"]) == 1
    assert "not found" in capsys.readouterr().err


def test_inspect_empty_file(capsys, tmp_path):
    empty = tmp_path / "empty.tsv"
    empty.write_text("", encoding="utf-8")
    assert main(["inspect", "--dict", str(empty)]) == 1
    assert "empty corpus" in capsys.readouterr().err


def test_analyze_morph_single_word(capsys, tmp_path):
    corpus = tmp_path / "one.tsv"
    corpus.write_text("that\t5\n", encoding="utf-8")
    assert main(["analyze", "--dict", str(corpus), "--morph", "--top", "1"]) == 0
    out = capsys.readouterr().out
    top_row = [line for line in out.splitlines() if "8428" in line]
    assert top_row and "0.1000" in top_row[-1]


def test_sweep_single_point(capsys, en_args):
    assert main(["sweep", *en_args, "--sweep-max", "0", "--output", "json"]) == 0
    sweep = json.loads(capsys.readouterr().out)
    assert main(["analyze", *en_args, "--output", "json"]) == 0
    analyze = json.loads(capsys.readouterr().out)

    assert len(sweep) == 1
    assert sweep[0]["entropy_bits"] == analyze[0]["entropy_bits"]
    assert sweep[0]["lambda_beta"] == analyze[0]["marginal_success"]
