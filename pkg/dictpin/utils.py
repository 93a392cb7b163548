#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
utils.py

Utility functions used across the dictpin package
Date: 10/26
"""

import os
import math
import logging

import numpy as np

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib

from dictpin.constants import CORPUS_ENV_VAR
from dictpin.exceptions import ConfigError

logger = logging.getLogger(__name__)


def get_corpus_dir():
    """Returns the directory where the frequency lists are stored

    Arguments:

    Return:
    corpus_dir -- str or None, value of the CORPUS_ENV_VAR variable.

    """
    corpus_dir = os.getenv(CORPUS_ENV_VAR)
    if not corpus_dir:
        return None

    return corpus_dir


def resolve_corpus_path(path):
    """Resolves a corpus path against the corpus directory

    Paths that exist as given are returned unchanged. Otherwise relative
    paths are looked up in the directory named by CORPUS_ENV_VAR.

    Arguments:
    path -- str, path given by the user.

    Return:
    resolved -- str, path to use for reading.

    """
    if os.path.exists(path) or os.path.isabs(path):
        return path

    corpus_dir = get_corpus_dir()
    if corpus_dir is None:
        return path

    candidate = os.path.join(corpus_dir, path)
    if os.path.exists(candidate):
        logger.debug("resolved %s to %s", path, candidate)
        return candidate

    return path


def find_default_corpus(file_name):
    """Looks for a corpus file in the corpus directory

    Arguments:
    file_name -- str, name of the file in the corpus directory.

    Return:
    path -- str or None, path to the file if it exists.

    """
    corpus_dir = get_corpus_dir()
    if corpus_dir is None:
        return None

    path = os.path.join(corpus_dir, file_name)
    if os.path.isfile(path):
        return path

    return None


def load_toml(config_path):
    """Reads a TOML configuration file

    Arguments:
    config_path -- str, path to the configuration file.

    Return:
    values -- dict, parsed content of the file.

    Raises:
    FileNotFoundError -- if the configuration file is not found.
    ConfigError -- if the file is not valid TOML.

    """
    try:
        with open(config_path, "rb") as f:
            return tomllib.load(f)
    except FileNotFoundError as e:
        raise FileNotFoundError(
            f"configuration file at {config_path} not found."
        ) from e
    except tomllib.TOMLDecodeError as e:
        raise ConfigError(f"could not parse {config_path}: {e}") from e


def compensated_sum(values):
    """Sums floating point values without accumulating rounding errors

    Arguments:
    values -- iterable[float], values to add.

    Return:
    total -- float, correctly rounded sum.

    """
    return math.fsum(values)


def compensated_cumsum(values):
    """Cumulative sum using Neumaier compensation

    Arguments:
    values -- np.array[float], values to accumulate.

    Return:
    cumulative -- np.array[float], running totals.

    """
    cumulative = np.empty(len(values), dtype=np.float64)
    total = 0.0
    compensation = 0.0

    for i, value in enumerate(np.asarray(values, dtype=np.float64).tolist()):
        t = total + value
        if abs(total) >= abs(value):
            compensation += (total - t) + value
        else:
            compensation += (value - t) + total
        total = t
        cumulative[i] = total + compensation

    return cumulative


def format_count(count):
    """Formats a word count so that parsing it back gives the same float

    Arguments:
    count -- float, occurrence count.

    Return:
    text -- str, integral counts without decimals, others at full precision.

    """
    if float(count).is_integer():
        return str(int(count))

    return repr(float(count))
