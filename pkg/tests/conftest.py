#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
conftest.py

Shared fixtures for the dictpin tests
Date: 10/26
"""

import os

import pytest

from dictpin.corpus import ListFormat, WordFrequencyList, read_frequency_list
from dictpin.strategy import PinDistribution

DATA_DIR = os.path.join(os.path.dirname(__file__), "data")


@pytest.fixture
def data_file():
    def _path(file_name):
        return os.path.join(DATA_DIR, file_name)

    return _path


@pytest.fixture
def en_path(data_file):
    return data_file("mini_en.tsv")


@pytest.fixture
def nl_path(data_file):
    return data_file("mini_nl.tsv")


@pytest.fixture
def subtlex_format():
    return ListFormat.from_preset("subtlex")


@pytest.fixture
def en_list(en_path, subtlex_format):
    return read_frequency_list(en_path, subtlex_format)


@pytest.fixture
def nl_list(nl_path):
    return read_frequency_list(nl_path)


@pytest.fixture
def three_pins():
    return PinDistribution.from_mass(4, {"1111": 0.5, "2222": 0.3, "3333": 0.2})


@pytest.fixture
def small_list():
    return WordFrequencyList.from_entries(
        [("that", 3), ("what", 1), ("there", 2), ("the", 1)]
    )


@pytest.fixture
def wide_list(data_file):
    return read_frequency_list(data_file("wide_en.tsv"))
