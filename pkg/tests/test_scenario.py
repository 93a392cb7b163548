#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
test_scenario.py

Unit tests for the scenario pipeline in scenario.py.
Date: 10/26

This file contains test cases for the functions:
- ScenarioConfig
- pipeline_stage
- config_from_values
- load_config_file
- merge_config
- build_distribution
- run_scenario
- with_blacklist

The tests cover various scenarios including valid inputs, invalid inputs,
and edge cases.
"""

import math

import pytest

from dictpin.corpus import ListFormat, WordFrequencyList
from dictpin.exceptions import ConfigError, ScenarioError
from dictpin.strategy import BlacklistSpec
from dictpin.scenario import (
    ScenarioConfig,
    TopPin,
    pipeline_stage,
    config_from_values,
    load_config_file,
    merge_config,
    build_distribution,
    run_scenario,
    with_blacklist,
)


@pytest.fixture
def en_config(en_path, subtlex_format):
    return ScenarioConfig((en_path,), list_format=subtlex_format)


# ScenarioConfig tests


@pytest.mark.parametrize(
    "kwargs",
    [
        {"corpus_paths": ()},
        {"corpus_paths": ("a", "b", "c")},
        {"pin_length": 0},
        {"pin_length": 10},
        {"strategy": "suffix"},
        {"min_count": -1},
        {"mix_weight": 1.5},
        {"alpha": 0.0},
        {"beta": 0},
        {"top": -1},
        {"samples": -1},
    ],
)
def test_scenario_config_invalid(kwargs):
    values = {"corpus_paths": ("words.tsv",), **kwargs}
    with pytest.raises(ConfigError):
        ScenarioConfig(**values)


def test_scenario_config_label():
    config = ScenarioConfig(
        ("us.tsv", "nl.tsv"),
        strategy="prefix",
        morph=True,
        blacklist=BlacklistSpec("pin", 10),
    )
    assert config.label == "prefix n=4 standard morph bl-pin=10 mix=0.5"


def test_length_pred():
    assert not ScenarioConfig(("a",)).length_pred(5)
    assert ScenarioConfig(("a",), strategy="prefix").length_pred(5)


# Configuration tests


def test_config_from_values():
    config = config_from_values(
        {"dict": "words.csv", "dict_format": "csv", "pin_length": 5, "morph": True}
    )
    assert config.corpus_paths == ("words.csv",)
    assert config.list_format == ListFormat.from_preset("csv")
    assert config.pin_length == 5
    assert config.morph
    assert config.blacklist == BlacklistSpec()


@pytest.mark.parametrize(
    "values, message",
    [
        ({}, "no frequency list"),
        ({"dict": "a", "colour": "blue"}, "unknown configuration keys"),
        ({"dict": "a", "blacklist_mode": "letter"}, "blacklist mode"),
        ({"dict": "a", "blacklist": -2}, "non-negative"),
        ({"dict": "a", "dict_format": "xml"}, "unknown list format"),
        ({"dict": "a", "separator": "::"}, "single character"),
        ({"dict": "a", "pin_length": "four"}, "invalid literal"),
        ({"dict": "a", "alpha": [0.5]}, "float"),
    ],
)
def test_config_from_values_invalid(values, message):
    with pytest.raises(ConfigError, match=message):
        config_from_values(values)


def test_load_config_file(data_file):
    values = load_config_file(data_file("scenario.toml"))
    assert values["strategy"] == "prefix"
    assert values["pin_length"] == 5


def test_load_config_file_unknown_keys(data_file):
    with pytest.raises(ConfigError, match="colour"):
        load_config_file(data_file("bad_keys.toml"))


def test_load_config_file_not_found():
    with pytest.raises(FileNotFoundError):
        load_config_file("missing.toml")


def test_merge_config(data_file, en_path):
    file_values = load_config_file(data_file("scenario.toml"))

    config = merge_config(file_values, {"dict": [en_path], "pin_length": None})
    assert config.pin_length == 5
    assert config.strategy == "prefix"
    assert config.top == 3
    assert config.list_format.has_header

    config = merge_config(file_values, {"dict": [en_path], "pin_length": 4})
    assert config.pin_length == 4


# run_scenario tests


def test_run_scenario(en_config):
    result = run_scenario(en_config)
    record = result.record

    assert record.support_size == 9
    assert record.marginal_success == pytest.approx(920 / 1040)
    assert record.marginal_guesswork == 3
    assert record.marginal_guesswork_bits == pytest.approx(math.log2(3 * 1040 / 620))
    assert result.monte_carlo is None

    assert len(result.top) == 9
    first = result.top[0]
    assert (first.rank, first.pin, first.word) == (1, "8428", "that")
    assert first.probability == pytest.approx(300 / 1040)
    assert result.top[3] == TopPin(4, "4283", pytest.approx(110 / 1040), "have")


def test_run_scenario_parsed_corpora(en_config, en_list):
    from_file = run_scenario(en_config)
    from_list = run_scenario(en_config, [en_list])
    assert from_file.record == from_list.record


def test_run_scenario_top_limit(en_config):
    config = ScenarioConfig(en_config.corpus_paths, en_config.list_format, top=2)
    result = run_scenario(config)
    assert [t.pin for t in result.top] == ["8428", "8447"]


def test_run_scenario_mapping_file(en_config, data_file):
    config = ScenarioConfig(
        en_config.corpus_paths,
        en_config.list_format,
        mapping=data_file("reversed.map"),
    )
    assert run_scenario(config).top[0].pin == "3793"


@pytest.mark.parametrize("mode", ["pin", "word"])
def test_run_scenario_blacklist(en_config, mode):
    result = run_scenario(with_blacklist(en_config, 1, mode))
    assert result.top[0].pin == "8447"
    assert result.top[0].word == "this"
    assert "8428" not in [t.pin for t in result.top]


def test_run_scenario_monte_carlo(en_path, subtlex_format):
    config = ScenarioConfig(
        (en_path,), subtlex_format, samples=5000, seed=11, beta=2
    )
    estimate = run_scenario(config).monte_carlo
    assert estimate.samples == 5000
    assert estimate.seed == 11
    assert estimate.within(n_sigma=5)


def test_run_scenario_two_dictionaries(en_path, nl_path, en_list, nl_list):
    config = ScenarioConfig((en_path, nl_path))
    result = run_scenario(config, [en_list, nl_list])
    assert result.record.support_size == 14

    words = {t.pin: t.word for t in result.top}
    assert words["8428"] == "that"
    assert words["6438"] == "niet"


def test_run_scenario_full_weight_mixture(en_path, nl_path, en_list, nl_list):
    single = run_scenario(ScenarioConfig((en_path,)), [en_list]).record
    mixed = run_scenario(
        ScenarioConfig((en_path, nl_path), mix_weight=1.0), [en_list, nl_list]
    ).record
    assert mixed.entropy_bits == pytest.approx(single.entropy_bits, abs=1e-12)
    assert mixed.support_size == single.support_size


def test_morph_precedes_blacklist():
    freq_list = WordFrequencyList.from_entries([("that", 3), ("what", 1)])
    config = ScenarioConfig(
        ("toy",), min_count=0, morph=True, blacklist=BlacklistSpec("pin", 1)
    )
    dist = build_distribution(config, [freq_list])

    # Blacklisting first would leave 8428 reachable by morphing 9428
    assert dist.probability("8428") == 0.0
    assert dist.probability("9428") > 0.0


# Stage failures


@pytest.mark.parametrize(
    "kwargs, stage, message",
    [
        ({"pin_length": 7}, "strategy", "empty strategy support"),
        ({"min_count": 1000}, "filter", "empty corpus"),
        ({"blacklist": BlacklistSpec("pin", 9)}, "blacklist-pins", "exhausts"),
        ({"blacklist": BlacklistSpec("word", 10)}, "blacklist-words", "exhausts"),
        ({"mapping": "missing.map"}, "strategy", "not found"),
    ],
)
def test_run_scenario_stage_errors(en_path, subtlex_format, kwargs, stage, message):
    config = ScenarioConfig((en_path,), subtlex_format, **kwargs)
    with pytest.raises(ScenarioError, match=message) as excinfo:
        run_scenario(config)
    assert excinfo.value.stage == stage
    assert str(excinfo.value).startswith(f"[{stage}]")


def test_run_scenario_missing_file():
    with pytest.raises(ScenarioError, match="not found") as excinfo:
        run_scenario(ScenarioConfig(("missing.tsv",)))
    assert excinfo.value.stage == "parse"


def test_pipeline_stage():
    with pytest.raises(ScenarioError, match=r"\[mix\] boom") as excinfo:
        with pipeline_stage("mix"):
            raise ValueError("boom")
    assert isinstance(excinfo.value.__cause__, ValueError)


def test_with_blacklist(en_config):
    config = with_blacklist(en_config, 5, "word")
    assert config.blacklist == BlacklistSpec("word", 5)
    assert with_blacklist(config, 2).blacklist.mode == "word"
    assert en_config.blacklist.k == 0
