#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
mapping.py

Keypad letter to digit mappings and word to PIN translation
Date: 10/26
"""

import os
import string
import logging

from types import MappingProxyType

import pandas as pd

from dictpin.constants import DIGITS, STANDARD_KEYPAD, STRETCHED_KEYPAD
from dictpin.exceptions import MappingError

logger = logging.getLogger(__name__)

LETTERS = string.ascii_lowercase


class KeypadMapping:
    """Total mapping from the letters a-z to digits

    Arguments:
    table -- dict, letter to digit (both single character strings).
    name -- str, name of the mapping.

    Raises:
    MappingError -- if a letter is missing or mapped to a non-digit.

    """

    def __init__(self, table, name="custom"):
        missing = [c for c in LETTERS if c not in table]
        if missing:
            raise MappingError(
                f"mapping {name} is missing letters {''.join(missing)}"
            )

        extra = [c for c in table if c not in LETTERS]
        if extra:
            raise MappingError(f"mapping {name} has invalid keys {extra}")

        for letter, digit in table.items():
            if len(digit) != 1 or digit not in DIGITS:
                raise MappingError(
                    f"letter {letter} is mapped to {digit!r}, not a digit"
                )

        self.name = name
        self.table = MappingProxyType({c: table[c] for c in LETTERS})
        self.digit_range = frozenset(self.table.values())
        self._translation = str.maketrans(dict(self.table))

    @classmethod
    def from_keypad(cls, keypad, name):
        """Creates a mapping from a digit -> letters layout"""
        table = {}
        for digit, letters in keypad.items():
            for letter in letters:
                if letter in table:
                    raise MappingError(f"letter {letter} is mapped twice")
                table[letter] = digit

        return cls(table, name)

    def __getitem__(self, letter):
        return self.table[letter]

    def __eq__(self, other):
        if not isinstance(other, KeypadMapping):
            return NotImplemented
        return dict(self.table) == dict(other.table)

    def __hash__(self):
        return hash(tuple(self.table.values()))

    def __repr__(self):
        return f"KeypadMapping({self.name!r})"

    def translate(self, word):
        return word.translate(self._translation)


def standard_mapping():
    """Returns the phone keypad mapping, digits 0 and 1 carry no letter"""
    return KeypadMapping.from_keypad(STANDARD_KEYPAD, "standard")


def stretched_mapping():
    """Returns the mapping spreading the letters over all ten digits"""
    return KeypadMapping.from_keypad(STRETCHED_KEYPAD, "stretched")


def map_word(word, mapping):
    """Translates a normalised word to a PIN

    Arguments:
    word -- str, lowercase word over a-z.
    mapping -- KeypadMapping, letter to digit mapping.

    Return:
    pin -- str, digits of the same length as the word.

    """
    return mapping.translate(word)


def map_words(words, mapping):
    """Translates a Series of normalised words to PINs

    Arguments:
    words -- pd.Series or pd.Index, lowercase words.
    mapping -- KeypadMapping, letter to digit mapping.

    Return:
    pins -- pd.Series, PIN strings aligned with the words.

    """
    words = pd.Series(words)
    return words.str.translate(mapping._translation)


def load_mapping(file_path):
    """Loads a custom mapping from a file of letter=digit lines

    Blank lines and lines starting with # are ignored.

    Arguments:
    file_path -- str, path to the mapping file.

    Return:
    mapping -- KeypadMapping, validated mapping named after the file.

    Raises:
    FileNotFoundError -- if the file is not found.
    MappingError -- if a line is invalid, a letter is repeated or missing.

    """
    table = {}
    try:
        with open(file_path, "r", encoding="utf-8") as f:
            for line_number, line in enumerate(f, start=1):
                line = line.strip()
                if not line or line.startswith("#"):
                    continue

                if "=" not in line:
                    raise MappingError(
                        f"line {line_number}: expected letter=digit, got {line!r}"
                    )
                letter, digit = (part.strip() for part in line.split("=", 1))
                letter = letter.lower()

                if letter in table:
                    raise MappingError(
                        f"line {line_number}: letter {letter} is mapped twice"
                    )
                table[letter] = digit
    except FileNotFoundError as e:
        raise FileNotFoundError(f"mapping file at {file_path} not found.") from e

    name = os.path.splitext(os.path.basename(file_path))[0]
    mapping = KeypadMapping(table, name)
    logger.debug("loaded mapping %s onto digits %s", name, sorted(mapping.digit_range))

    return mapping


def resolve_mapping(name):
    """Returns a built-in mapping by name or loads it from a file

    Arguments:
    name -- str, standard, stretched or a path to a mapping file.

    Return:
    mapping -- KeypadMapping, the requested mapping.

    Raises:
    FileNotFoundError -- if the mapping file is not found.
    MappingError -- if the mapping file is invalid.

    """
    match name:
        case "standard":
            return standard_mapping()
        case "stretched":
            return stretched_mapping()
        case _:
            return load_mapping(name)
