#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
scenario.py

Scenario configuration and the pipeline turning frequency lists into
PIN distributions and metric records
Date: 10/26
"""

import logging

from contextlib import contextmanager
from dataclasses import dataclass, field, replace

from dictpin import constants
from dictpin.corpus import (
    ListFormat,
    any_length,
    filter_list,
    length_at_least,
    length_equals,
    read_frequency_list,
)
from dictpin.exceptions import ConfigError, ScenarioError
from dictpin.mapping import resolve_mapping
from dictpin.metrics import full_metrics, monte_carlo_check
from dictpin.strategy import (
    BlacklistSpec,
    basic_distribution,
    blacklist_pins,
    blacklist_words,
    exemplar_words,
    mix,
    morph_distribution,
    prefix_distribution,
)
from dictpin.utils import load_toml, resolve_corpus_path

logger = logging.getLogger(__name__)

CONFIG_KEYS = (
    "dict",
    "dict_format",
    "separator",
    "word_col",
    "count_col",
    "header",
    "strict",
    "min_count",
    "pin_length",
    "mapping",
    "strategy",
    "morph",
    "blacklist",
    "blacklist_mode",
    "mix_weight",
    "alpha",
    "beta",
    "top",
    "seed",
    "samples",
)
DEFAULT_VALUES = {
    "dict_format": "tsv",
    "min_count": constants.MIN_COUNT,
    "pin_length": constants.PIN_LENGTH,
    "mapping": "standard",
    "strategy": "basic",
    "morph": False,
    "blacklist": 0,
    "blacklist_mode": "pin",
    "mix_weight": constants.MIX_WEIGHT,
    "alpha": constants.ALPHA,
    "beta": constants.BETA,
    "top": constants.TOP_M,
    "seed": constants.MC_SEED,
    "samples": constants.MC_SAMPLES,
}


@dataclass(frozen=True)
class ScenarioConfig:
    """Declarative description of one scenario

    Arguments:
    corpus_paths -- tuple[str], one frequency list, or two when mixing.
    list_format -- ListFormat, column layout of the frequency lists.
    min_count -- float, words need a count strictly above this value.
    pin_length -- int, number of digits n.
    mapping -- str, standard, stretched or path to a mapping file.
    strategy -- str, construction strategy {basic, prefix}.
    morph -- bool, True to morph the constructed PINs.
    blacklist -- BlacklistSpec, blacklist mode and size.
    mix_weight -- float, probability of choosing the first dictionary.
    alpha -- float, target probability of the marginal guesswork.
    beta -- int, number of guesses of the marginal success rate.
    top -- int, number of PINs in the top listing.
    seed -- int, seed of the Monte Carlo check.
    samples -- int, Monte Carlo samples, 0 to skip the check.

    Raises:
    ConfigError -- if a value is out of range.

    """

    corpus_paths: tuple
    list_format: ListFormat = field(default_factory=ListFormat)
    min_count: float = constants.MIN_COUNT
    pin_length: int = constants.PIN_LENGTH
    mapping: str = "standard"
    strategy: str = "basic"
    morph: bool = False
    blacklist: BlacklistSpec = field(default_factory=BlacklistSpec)
    mix_weight: float = constants.MIX_WEIGHT
    alpha: float = constants.ALPHA
    beta: int = constants.BETA
    top: int = constants.TOP_M
    seed: int = constants.MC_SEED
    samples: int = constants.MC_SAMPLES

    def __post_init__(self):
        object.__setattr__(self, "corpus_paths", tuple(self.corpus_paths))

        if not 1 <= len(self.corpus_paths) <= 2:
            raise ConfigError("one frequency list, or two when mixing, is required")
        if not 1 <= self.pin_length <= constants.MAX_PIN_LENGTH:
            raise ConfigError(
                f"the PIN length should be in 1..{constants.MAX_PIN_LENGTH}"
            )
        if self.strategy not in constants.STRATEGIES:
            raise ConfigError(f"invalid strategy {self.strategy}")
        if self.min_count < 0:
            raise ConfigError("the minimum count should be non-negative")
        if not 0 <= self.mix_weight <= 1:
            raise ConfigError("the mixture weight should be in [0, 1]")
        if not 0 < self.alpha <= 1:
            raise ConfigError("alpha should be in (0, 1]")
        if self.beta < 1:
            raise ConfigError("beta should be a positive integer")
        if self.top < 0:
            raise ConfigError("the top listing size should be non-negative")
        if self.samples < 0:
            raise ConfigError("the number of samples should be non-negative")

    @property
    def length_pred(self):
        """Word lengths usable by the strategy"""
        if self.strategy == "prefix":
            return length_at_least(self.pin_length)
        return length_equals(self.pin_length)

    @property
    def label(self):
        parts = [self.strategy, f"n={self.pin_length}", self.mapping]
        if self.morph:
            parts.append("morph")
        if self.blacklist.k:
            parts.append(f"bl-{self.blacklist.mode}={self.blacklist.k}")
        if len(self.corpus_paths) == 2:
            parts.append(f"mix={self.mix_weight:g}")
        return " ".join(parts)


@dataclass(frozen=True)
class TopPin:
    """Entry of the top PIN listing"""

    rank: int
    pin: str
    probability: float
    word: str = ""


@dataclass(frozen=True)
class ScenarioResult:
    """Outcome of run_scenario"""

    config: ScenarioConfig
    record: object
    top: tuple
    monte_carlo: object = None


@contextmanager
def pipeline_stage(name):
    """Wraps any failure inside the block into a ScenarioError"""
    try:
        yield
    except ScenarioError:
        raise
    except (OSError, ValueError, RuntimeError) as e:
        raise ScenarioError(name, str(e)) from e


def config_from_values(values):
    """Creates a ScenarioConfig from flat key/value settings

    Arguments:
    values -- dict, settings named like CONFIG_KEYS, missing keys take
    their default value.

    Return:
    config -- ScenarioConfig, the validated configuration.

    Raises:
    ConfigError -- if a key is unknown or a value invalid.

    """
    unknown = sorted(set(values) - set(CONFIG_KEYS))
    if unknown:
        raise ConfigError(f"unknown configuration keys: {', '.join(unknown)}")

    merged = dict(DEFAULT_VALUES)
    merged.update({k: v for k, v in values.items() if v is not None})

    paths = merged.get("dict")
    if paths is None:
        raise ConfigError("no frequency list given")
    if isinstance(paths, str):
        paths = [paths]

    try:
        list_format = ListFormat.from_preset(
            merged["dict_format"],
            separator=merged.get("separator"),
            word_column=merged.get("word_col"),
            count_column=merged.get("count_col"),
            has_header=merged.get("header"),
            strict=merged.get("strict"),
        )
        blacklist = BlacklistSpec(merged["blacklist_mode"], int(merged["blacklist"]))
        typed = {
            "min_count": float(merged["min_count"]),
            "pin_length": int(merged["pin_length"]),
            "mix_weight": float(merged["mix_weight"]),
            "alpha": float(merged["alpha"]),
            "beta": int(merged["beta"]),
            "top": int(merged["top"]),
            "seed": int(merged["seed"]),
            "samples": int(merged["samples"]),
        }
    except (TypeError, ValueError) as e:
        raise ConfigError(str(e)) from e

    return ScenarioConfig(
        corpus_paths=tuple(paths),
        list_format=list_format,
        mapping=str(merged["mapping"]),
        strategy=merged["strategy"],
        morph=bool(merged["morph"]),
        blacklist=blacklist,
        **typed,
    )


def load_config_file(config_path):
    """Reads scenario settings from a TOML file

    Arguments:
    config_path -- str, path to the TOML file.

    Return:
    values -- dict, settings found in the file.

    Raises:
    FileNotFoundError -- if the file is not found.
    ConfigError -- if the file is invalid or has unknown keys.

    """
    values = load_toml(config_path)
    unknown = sorted(set(values) - set(CONFIG_KEYS))
    if unknown:
        raise ConfigError(
            f"unknown keys in {config_path}: {', '.join(unknown)}"
        )

    return values


def merge_config(file_values, cli_values):
    """Merges config file and command line settings

    Command line values that are None were not given and do not override
    the file.

    Arguments:
    file_values -- dict, settings from the config file.
    cli_values -- dict, settings from the command line.

    Return:
    config -- ScenarioConfig, the merged configuration.

    Raises:
    ConfigError -- if the merged settings are invalid.

    """
    values = dict(file_values or {})
    values.update({k: v for k, v in cli_values.items() if v is not None})

    return config_from_values(values)


def load_corpora(config):
    """Reads and filters the frequency lists of a scenario

    Arguments:
    config -- ScenarioConfig, the scenario.

    Return:
    corpora -- list[WordFrequencyList], lists filtered on min_count.

    Raises:
    ScenarioError -- if a list cannot be read or is empty after filtering.

    """
    corpora = []
    for path in config.corpus_paths:
        with pipeline_stage("parse"):
            freq_list = read_frequency_list(
                resolve_corpus_path(path), config.list_format
            )
        corpora.append(freq_list)

    return filter_corpora(config, corpora)


def filter_corpora(config, corpora):
    """Applies the count threshold of the scenario to parsed lists"""
    filtered = []
    for freq_list in corpora:
        with pipeline_stage("filter"):
            filtered.append(filter_list(freq_list, config.min_count, any_length()))

    return filtered


def blacklist_corpora(config, corpora, k=None):
    """Removes the most frequent words of each list in word mode

    Arguments:
    config -- ScenarioConfig, the scenario.
    corpora -- list[WordFrequencyList], filtered lists.
    k -- int, blacklist size overriding the configured one.

    Return:
    corpora -- list[WordFrequencyList], lists without blacklisted words.

    Raises:
    ScenarioError -- if the blacklist removes every eligible word.

    """
    if k is None:
        k = config.blacklist.k
    if config.blacklist.mode != "word" or k == 0:
        return list(corpora)

    with pipeline_stage("blacklist-words"):
        return [
            blacklist_words(freq_list, k, config.pin_length, config.length_pred)
            for freq_list in corpora
        ]


def distribution_from_corpora(config, corpora, k=None):
    """Builds the scenario distribution from prepared lists

    Runs strategy, mixture, morphing and PIN blacklisting in this order.

    Arguments:
    config -- ScenarioConfig, the scenario.
    corpora -- list[WordFrequencyList], filtered and blacklisted lists.
    k -- int, PIN blacklist size overriding the configured one.

    Return:
    dist -- PinDistribution, final distribution.

    Raises:
    ScenarioError -- if a stage fails.

    """
    if k is None:
        k = config.blacklist.k

    with pipeline_stage("strategy"):
        mapping = resolve_mapping(config.mapping)
        build = (
            prefix_distribution if config.strategy == "prefix" else basic_distribution
        )
        dists = [
            build(freq_list, config.pin_length, mapping) for freq_list in corpora
        ]

    dist = dists[0]
    if len(dists) == 2:
        with pipeline_stage("mix"):
            dist = mix(dists[0], dists[1], config.mix_weight)

    if config.morph:
        with pipeline_stage("morph"):
            dist = morph_distribution(dist)

    if config.blacklist.mode == "pin" and k > 0:
        with pipeline_stage("blacklist-pins"):
            dist = blacklist_pins(dist, k)

    return dist


def build_distribution(config, corpora=None):
    """Runs the pipeline of a scenario up to its final distribution

    Arguments:
    config -- ScenarioConfig, the scenario.
    corpora -- list[WordFrequencyList], parsed lists replacing the files
    named in the config, default None.

    Return:
    dist -- PinDistribution, final distribution.

    Raises:
    ScenarioError -- if a stage fails.

    """
    if corpora is None:
        corpora = load_corpora(config)
    else:
        corpora = filter_corpora(config, corpora)

    corpora = blacklist_corpora(config, corpora)
    return distribution_from_corpora(config, corpora)


def _top_listing(config, corpora, dist):
    """Lists the most likely PINs with a word producing each of them"""
    mapping = resolve_mapping(config.mapping)
    exemplars = {}
    for freq_list in reversed(corpora):
        exemplars.update(
            exemplar_words(
                freq_list,
                config.pin_length,
                mapping,
                prefix=config.strategy == "prefix",
            )
        )

    return tuple(
        TopPin(rank, pin, prob, exemplars.get(pin, ""))
        for rank, (pin, prob) in enumerate(dist.top(config.top), start=1)
    )


def run_scenario(config, corpora=None):
    """Evaluates a scenario

    Arguments:
    config -- ScenarioConfig, the scenario.
    corpora -- list[WordFrequencyList], parsed lists replacing the files
    named in the config, default None.

    Return:
    result -- ScenarioResult, metrics, top PINs and the optional Monte
    Carlo estimate.

    Raises:
    ScenarioError -- if a stage fails.

    """
    if corpora is None:
        corpora = load_corpora(config)
    else:
        corpora = filter_corpora(config, corpora)

    corpora = blacklist_corpora(config, corpora)
    dist = distribution_from_corpora(config, corpora)

    with pipeline_stage("metrics"):
        record = full_metrics(dist, config.alpha, config.beta)
        estimate = None
        if config.samples > 0:
            estimate = monte_carlo_check(
                dist, config.samples, config.seed, config.beta
            )

    logger.info(
        "%s: H1 %.4f bits, lambda_%d %.4f",
        config.label,
        record.entropy_bits,
        config.beta,
        record.marginal_success,
    )

    return ScenarioResult(
        config=config,
        record=record,
        top=_top_listing(config, corpora, dist),
        monte_carlo=estimate,
    )


def with_blacklist(config, k, mode=None):
    """Returns a copy of config with another blacklist"""
    return replace(config, blacklist=BlacklistSpec(mode or config.blacklist.mode, k))
