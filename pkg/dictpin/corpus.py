#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
corpus.py

Reading, normalising and filtering word frequency lists
Date: 10/26
"""

import re
import logging
import unicodedata

from dataclasses import dataclass, field

import numpy as np
import pandas as pd

from dictpin.constants import LIST_FORMATS, TOTAL_REL_TOLERANCE
from dictpin.exceptions import CorpusParseError, EmptyCorpusError
from dictpin.utils import compensated_sum, format_count

logger = logging.getLogger(__name__)

WORD_PATTERN = re.compile(r"[a-z]+")
COUNT_PATTERN = re.compile(r"\+?(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?")


@dataclass(frozen=True)
class WordEntry:
    """A normalised word and its occurrence count"""

    word: str
    count: float

    def __post_init__(self):
        if not WORD_PATTERN.fullmatch(self.word):
            raise ValueError(f"invalid word {self.word!r}")
        if not self.count > 0:
            raise ValueError(f"count of {self.word!r} should be positive")


@dataclass(frozen=True)
class ListFormat:
    """Column layout of a frequency list file

    Arguments:
    separator -- str, single character separating the columns.
    word_column -- int, index of the word column.
    count_column -- int, index of the count column.
    has_header -- bool, True if the first line is a header row.
    strict -- bool, True to fail on malformed lines instead of skipping.

    """

    separator: str = "\t"
    word_column: int = 0
    count_column: int = 1
    has_header: bool = False
    strict: bool = False

    def __post_init__(self):
        if len(self.separator) != 1:
            raise ValueError("the separator should be a single character")
        if self.word_column < 0 or self.count_column < 0:
            raise ValueError("column indices should be non-negative")
        if self.word_column == self.count_column:
            raise ValueError("word and count columns should be different")

    @classmethod
    def from_preset(cls, name, **overrides):
        """Creates a format from one of the LIST_FORMATS presets

        Arguments:
        name -- str, preset name {tsv, csv, subtlex}.
        overrides -- dict, fields replacing the preset values, None values
        are ignored.

        Return:
        fmt -- ListFormat, the resulting format.

        Raises:
        ValueError -- if the preset does not exist.

        """
        try:
            separator, word_col, count_col, header = LIST_FORMATS[name]
        except KeyError as e:
            raise ValueError(f"unknown list format {name}") from e

        values = {
            "separator": separator,
            "word_column": word_col,
            "count_column": count_col,
            "has_header": header,
        }
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)

    @property
    def min_fields(self):
        return max(self.word_column, self.count_column) + 1


class WordFrequencyList:
    """Normalised words with their merged occurrence counts

    The counts are held in a pandas Series indexed by word and sorted by
    word, so that two lists with the same content compare equal.

    Arguments:
    counts -- pd.Series, occurrence counts indexed by word.
    source_label -- str, name of the source of the list.
    rejected -- int, number of words rejected by normalisation.
    malformed -- int, number of malformed lines skipped.

    Raises:
    ValueError -- if the counts contain duplicates or non-positive values.

    """

    def __init__(self, counts, source_label="<stream>", rejected=0, malformed=0):
        counts = counts.astype(np.float64).sort_index()
        counts.index.name = "word"
        counts.name = "count"

        if not counts.index.is_unique:
            raise ValueError("duplicate words in frequency list")
        if (counts <= 0).any():
            raise ValueError("counts should be positive")

        self._counts = counts
        self.source_label = source_label
        self.rejected = rejected
        self.malformed = malformed
        self.total_count = compensated_sum(counts.to_numpy())

    @classmethod
    def from_entries(cls, entries, source_label="<entries>"):
        """Builds a list from (word, count) pairs, merging duplicates"""
        entries = [
            e if isinstance(e, WordEntry) else WordEntry(*e) for e in entries
        ]
        frame = pd.DataFrame(
            {
                "word": [e.word for e in entries],
                "count": [e.count for e in entries],
            }
        )
        counts = frame.groupby("word")["count"].sum()
        return cls(counts, source_label)

    @property
    def counts(self):
        return self._counts.copy()

    @property
    def entries(self):
        return tuple(
            WordEntry(word, float(count)) for word, count in self._counts.items()
        )

    @property
    def skipped(self):
        return self.rejected + self.malformed

    def count(self, word):
        return float(self._counts.get(word, 0.0))

    def __len__(self):
        return len(self._counts)

    def __contains__(self, word):
        return word in self._counts.index

    def __eq__(self, other):
        if not isinstance(other, WordFrequencyList):
            return NotImplemented
        return self._counts.equals(other._counts)

    __hash__ = None

    def __repr__(self):
        return (
            f"WordFrequencyList({self.source_label!r}, words={len(self)}, "
            f"total_count={self.total_count:g})"
        )

    def check_total(self):
        """Checks that total_count matches the entries within tolerance"""
        expected = compensated_sum(self._counts.to_numpy())
        return abs(expected - self.total_count) <= TOTAL_REL_TOLERANCE * expected


@dataclass(frozen=True)
class LengthPredicate:
    """Word length constraint, maximum None means unbounded"""

    minimum: int = 1
    maximum: int = None

    def __call__(self, length):
        if length < self.minimum:
            return False
        return self.maximum is None or length <= self.maximum


def length_equals(n):
    return LengthPredicate(n, n)


def length_at_least(n):
    return LengthPredicate(n, None)


def any_length():
    return LengthPredicate(1, None)


@dataclass(frozen=True)
class CorpusStats:
    """Summary statistics of a frequency list"""

    source_label: str
    words: int
    total_count: float
    min_count: float
    retained_words: int
    retained_count: float
    rejected: int
    malformed: int
    length_histogram: dict = field(default_factory=dict)
    retained_histogram: dict = field(default_factory=dict)


def normalize_word(raw):
    """Normalises a raw word to lowercase letters a-z

    The word is decomposed, its combining marks are removed and it is
    lowercased. Words with any other character left are rejected.

    Arguments:
    raw -- str, word as found in the frequency list.

    Return:
    word -- str or None, normalised word or None if rejected.

    """
    decomposed = unicodedata.normalize("NFD", raw)
    stripped = "".join(c for c in decomposed if not unicodedata.combining(c))
    word = stripped.lower()

    if not WORD_PATTERN.fullmatch(word):
        return None

    return word


def _parse_count(text):
    """Returns the count in text or None if it is not a positive number

    Only plain decimal and exponent forms are counts, Python literals such
    as 1_000, inf or nan are not.

    """
    text = text.strip()
    if not COUNT_PATTERN.fullmatch(text):
        return None
    count = float(text)

    if not np.isfinite(count) or count <= 0:
        return None

    return count


def parse_frequency_list(stream, fmt=None, source_label="<stream>"):
    """Parses a word frequency list

    Lines with words rejected by normalize_word are skipped in both modes.
    Malformed lines (missing columns, invalid counts, invalid UTF-8) are
    skipped unless the format is strict.

    Arguments:
    stream -- iterable[bytes] or iterable[str], lines of the list.
    fmt -- ListFormat, column layout, default tab separated word and count.
    source_label -- str, name attached to the resulting list.

    Return:
    freq_list -- WordFrequencyList, merged and normalised entries.

    Raises:
    CorpusParseError -- if a line is malformed in strict mode.
    EmptyCorpusError -- if no entry was found.

    """
    if fmt is None:
        fmt = ListFormat()

    words = []
    counts = []
    rejected = 0
    malformed = 0
    header_seen = not fmt.has_header

    for line_number, raw_line in enumerate(stream, start=1):
        if isinstance(raw_line, bytes):
            try:
                raw_line = raw_line.decode("utf-8")
            except UnicodeDecodeError as e:
                if fmt.strict:
                    raise CorpusParseError("invalid UTF-8", line_number) from e
                malformed += 1
                header_seen = True
                continue

        line = raw_line.rstrip("\r\n")
        if line_number == 1:
            line = line.lstrip("\ufeff")
        if not line.strip():
            continue

        if not header_seen:
            header_seen = True
            continue

        fields = line.split(fmt.separator)
        if len(fields) < fmt.min_fields:
            if fmt.strict:
                raise CorpusParseError(
                    f"expected at least {fmt.min_fields} columns, "
                    f"found {len(fields)}",
                    line_number,
                )
            malformed += 1
            continue

        count = _parse_count(fields[fmt.count_column])
        if count is None:
            if fmt.strict:
                raise CorpusParseError(
                    f"count {fields[fmt.count_column]!r} is not a positive number",
                    line_number,
                )
            malformed += 1
            continue

        word = normalize_word(fields[fmt.word_column].strip())
        if word is None:
            rejected += 1
            continue

        words.append(word)
        counts.append(count)

    if not words:
        raise EmptyCorpusError(f"empty corpus: no words found in {source_label}")

    merged = pd.DataFrame({"word": words, "count": counts})
    merged = merged.groupby("word")["count"].sum()

    logger.info(
        "parsed %d words from %s (%d rejected, %d malformed lines)",
        len(merged),
        source_label,
        rejected,
        malformed,
    )

    return WordFrequencyList(merged, source_label, rejected, malformed)


def read_frequency_list(file_path, fmt=None):
    """Reads a word frequency list from a file

    Arguments:
    file_path -- str, path to the frequency list.
    fmt -- ListFormat, column layout.

    Return:
    freq_list -- WordFrequencyList, parsed list labelled with the path.

    Raises:
    FileNotFoundError -- if the file is not found.
    CorpusParseError -- if a line is malformed in strict mode.
    EmptyCorpusError -- if no entry was found.

    """
    try:
        with open(file_path, "rb") as f:
            return parse_frequency_list(f, fmt, source_label=str(file_path))
    except FileNotFoundError as e:
        raise FileNotFoundError(
            f"frequency list at {file_path} not found."
        ) from e


def write_frequency_list(freq_list, stream, fmt=None):
    """Writes a frequency list in the given format

    Arguments:
    freq_list -- WordFrequencyList, list to write.
    stream -- binary stream, destination.
    fmt -- ListFormat, column layout.

    Return:

    """
    if fmt is None:
        fmt = ListFormat()

    def _row(word, count):
        fields = [""] * fmt.min_fields
        fields[fmt.word_column] = word
        fields[fmt.count_column] = count
        return (fmt.separator.join(fields) + "\n").encode("utf-8")

    if fmt.has_header:
        stream.write(_row("Word", "Count"))

    for word, count in freq_list.counts.items():
        stream.write(_row(word, format_count(count)))


def filter_list(freq_list, min_count, length_pred):
    """Keeps the words above a count threshold and of a given length

    Arguments:
    freq_list -- WordFrequencyList, list to filter.
    min_count -- float, words need a count strictly above this value.
    length_pred -- callable, word length predicate.

    Return:
    filtered -- WordFrequencyList, the retained entries.

    Raises:
    ValueError -- if min_count is negative.
    EmptyCorpusError -- if no word is retained.

    """
    if min_count < 0:
        raise ValueError("min_count should be non-negative")

    counts = freq_list.counts
    lengths = pd.Series(counts.index.str.len(), index=counts.index)
    mask = (counts > min_count) & lengths.map(length_pred).astype(bool)
    retained = counts[mask]

    if retained.empty:
        raise EmptyCorpusError(
            f"empty corpus after filtering {freq_list.source_label}"
        )

    logger.debug(
        "filter on %s kept %d of %d words",
        freq_list.source_label,
        len(retained),
        len(counts),
    )

    return WordFrequencyList(
        retained,
        freq_list.source_label,
        freq_list.rejected,
        freq_list.malformed,
    )


def corpus_statistics(freq_list, min_count):
    """Computes the statistics reported by the inspect command

    Arguments:
    freq_list -- WordFrequencyList, list to describe.
    min_count -- float, threshold for the retained words.

    Return:
    stats -- CorpusStats, word counts and length histograms.

    """
    counts = freq_list.counts
    lengths = pd.Series(counts.index.str.len(), index=counts.index)
    retained = counts > min_count

    def _histogram(values):
        hist = values.value_counts().sort_index()
        return {int(k): int(v) for k, v in hist.items()}

    return CorpusStats(
        source_label=freq_list.source_label,
        words=len(counts),
        total_count=freq_list.total_count,
        min_count=min_count,
        retained_words=int(retained.sum()),
        retained_count=compensated_sum(counts[retained].to_numpy()),
        rejected=freq_list.rejected,
        malformed=freq_list.malformed,
        length_histogram=_histogram(lengths),
        retained_histogram=_histogram(lengths[retained]),
    )
