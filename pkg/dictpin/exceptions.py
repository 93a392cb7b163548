#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
exceptions.py

Exceptions raised by the dictpin package
Date: 10/26
"""


class CorpusParseError(ValueError):
    """Raised when a frequency list line cannot be parsed in strict mode"""

    def __init__(self, message, line_number=None):
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)


class EmptyCorpusError(ValueError):
    """Raised when a frequency list has no usable entry"""


class MappingError(ValueError):
    """Raised when a keypad mapping is not a total letter to digit table"""


class DistributionError(ValueError):
    """Raised when a PIN distribution breaks one of its invariants"""


class EmptySupportError(DistributionError):
    """Raised when a construction strategy has no word to draw from"""


class BlacklistError(ValueError):
    """Raised when a blacklist would remove every remaining choice"""


class ConfigError(ValueError):
    """Raised for invalid scenario configurations"""


class ScenarioError(RuntimeError):
    """Wraps a failure of one pipeline stage

    Arguments:
    stage -- str, name of the stage that failed.
    message -- str, description of the failure.

    """

    def __init__(self, stage, message):
        self.stage = stage
        super().__init__(f"[{stage}] {message}")
