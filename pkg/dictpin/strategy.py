#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
strategy.py

PIN distributions built from frequency lists and their transformations:
blacklisting, morphing and two-dictionary mixtures
Date: 10/26
"""

import logging
import itertools

from dataclasses import dataclass
from functools import cached_property

import numpy as np
import pandas as pd

from dictpin.constants import BLACKLIST_MODES, SUM_TOLERANCE
from dictpin.corpus import WordFrequencyList, length_at_least, length_equals
from dictpin.exceptions import (
    BlacklistError,
    DistributionError,
    EmptySupportError,
)
from dictpin.mapping import map_words
from dictpin.utils import compensated_cumsum, compensated_sum

logger = logging.getLogger(__name__)


class PinDistribution:
    """Probability mass function over PINs of a fixed length

    PINs are held as integer codes, the PIN string being the code padded
    with zeros to pin_length digits. Entries are kept in the order of
    sorted_view: descending probability, ties broken by ascending PIN.

    Arguments:
    pin_length -- int, number of digits n.
    codes -- array-like[int], PIN codes, each one appearing once.
    probs -- array-like[float], probability of each code.
    normalize -- bool, True to rescale the probabilities to sum to 1.

    Raises:
    EmptySupportError -- if no PIN has a positive probability.
    DistributionError -- if the invariants do not hold.

    """

    def __init__(self, pin_length, codes, probs, normalize=False):
        if pin_length < 1:
            raise DistributionError("the PIN length should be positive")

        codes = np.asarray(codes, dtype=np.int64)
        probs = np.asarray(probs, dtype=np.float64)

        if codes.shape != probs.shape or codes.ndim != 1:
            raise DistributionError("codes and probabilities should be 1D and aligned")
        if (probs < 0).any() or not np.isfinite(probs).all():
            raise DistributionError("probabilities should be finite and non-negative")

        # Zero mass PINs are not part of the support
        keep = probs > 0
        codes, probs = codes[keep], probs[keep]

        if codes.size == 0:
            raise EmptySupportError("empty strategy support")
        if ((codes < 0) | (codes >= 10**pin_length)).any():
            raise DistributionError(f"PIN codes outside the {pin_length}-digit space")
        if np.unique(codes).size != codes.size:
            raise DistributionError("duplicate PINs in distribution")

        total = compensated_sum(probs)
        if normalize:
            probs = probs / total
            total = compensated_sum(probs)

        if abs(total - 1.0) > SUM_TOLERANCE:
            raise DistributionError(f"probabilities sum to {total!r}, not 1")

        order = np.lexsort((codes, -probs))
        self._pin_length = int(pin_length)
        self._codes = codes[order]
        self._probs = probs[order]
        self._codes.flags.writeable = False
        self._probs.flags.writeable = False

    @classmethod
    def from_mass(cls, pin_length, mass, normalize=False):
        """Creates a distribution from a PIN string -> probability mapping

        Raises:
        DistributionError -- if a PIN does not have pin_length digits.

        """
        for pin in mass:
            if len(pin) != pin_length or not pin.isdigit():
                raise DistributionError(f"{pin!r} is not a {pin_length}-digit PIN")

        codes = [int(pin) for pin in mass]
        return cls(pin_length, codes, list(mass.values()), normalize)

    @property
    def pin_length(self):
        return self._pin_length

    @property
    def pin_space(self):
        return 10**self._pin_length

    @property
    def support_size(self):
        return int(self._codes.size)

    @property
    def codes(self):
        return self._codes

    @property
    def probabilities(self):
        return self._probs

    @cached_property
    def cumulative(self):
        """Compensated running total of the sorted probabilities"""
        cumulative = compensated_cumsum(self._probs)
        cumulative.flags.writeable = False
        return cumulative

    @property
    def pins(self):
        return [self.format_pin(code) for code in self._codes.tolist()]

    @property
    def mass(self):
        return dict(zip(self.pins, self._probs.tolist()))

    @property
    def sorted_view(self):
        return tuple(zip(self.pins, self._probs.tolist()))

    def format_pin(self, code):
        return f"{code:0{self._pin_length}d}"

    def probability(self, pin):
        """Returns the probability of a PIN string, 0 outside the support"""
        matches = np.flatnonzero(self._codes == int(pin))
        if len(pin) != self._pin_length or matches.size == 0:
            return 0.0
        return float(self._probs[matches[0]])

    def top(self, m):
        """Returns the m most likely (pin, probability) pairs"""
        return [
            (self.format_pin(code), prob)
            for code, prob in zip(self._codes[:m].tolist(), self._probs[:m].tolist())
        ]

    def to_frame(self):
        """Returns the sorted view as a DataFrame"""
        return pd.DataFrame(
            {
                "rank": np.arange(1, self.support_size + 1),
                "pin": self.pins,
                "probability": self._probs,
                "cumulative": self.cumulative,
            }
        )

    def __len__(self):
        return self.support_size

    def __repr__(self):
        return (
            f"PinDistribution(pin_length={self._pin_length}, "
            f"support_size={self.support_size})"
        )


@dataclass(frozen=True)
class BlacklistSpec:
    """Blacklist of the k most frequent PINs or words"""

    mode: str = "pin"
    k: int = 0

    def __post_init__(self):
        if self.mode not in BLACKLIST_MODES:
            raise ValueError(f"invalid blacklist mode {self.mode}")
        if self.k < 0:
            raise ValueError("the blacklist size should be non-negative")


def _aggregate(codes, weights):
    """Sums the weights of identical codes with compensated sums"""
    unique, inverse = np.unique(codes.ravel(), return_inverse=True)
    inverse = inverse.ravel()
    order = np.argsort(inverse, kind="stable")
    bounds = np.cumsum(np.bincount(inverse, minlength=unique.size))[:-1]
    groups = np.split(weights.ravel()[order], bounds)

    return unique, np.array([compensated_sum(group) for group in groups])


def _word_distribution(freq_list, n, mapping, length_pred, truncate):
    """Builds the PIN distribution of the words satisfying length_pred

    Arguments:
    freq_list -- WordFrequencyList, source words.
    n -- int, PIN length.
    mapping -- KeypadMapping, letter to digit mapping.
    length_pred -- callable, word length predicate.
    truncate -- bool, True to map the n first letters of each word.

    Return:
    dist -- PinDistribution, normalised over the selected words.

    Raises:
    EmptySupportError -- if no word satisfies the predicate.

    """
    counts = freq_list.counts
    lengths = pd.Series(counts.index.str.len(), index=counts.index)
    selected = counts[lengths.map(length_pred).astype(bool)]

    if selected.empty:
        raise EmptySupportError(
            f"empty strategy support: no word of {freq_list.source_label} "
            f"usable for PIN length {n}"
        )

    words = selected.index.to_series()
    if truncate:
        words = words.str[:n]

    pins = map_words(words, mapping)
    codes = pins.astype(np.int64).to_numpy()
    unique, weights = _aggregate(codes, selected.to_numpy())

    logger.debug(
        "%d words of %s map to %d PINs of length %d",
        len(selected),
        freq_list.source_label,
        unique.size,
        n,
    )

    return PinDistribution(n, unique, weights, normalize=True)


def basic_distribution(freq_list, n, mapping):
    """Distribution of PINs mapped from the words of length n

    Arguments:
    freq_list -- WordFrequencyList, source words.
    n -- int, PIN length.
    mapping -- KeypadMapping, letter to digit mapping.

    Return:
    dist -- PinDistribution, word counts normalised over length n words.

    Raises:
    EmptySupportError -- if there is no word of length n.

    """
    return _word_distribution(freq_list, n, mapping, length_equals(n), False)


def prefix_distribution(freq_list, n, mapping):
    """Distribution of PINs mapped from the n-letter prefix of longer words

    Arguments:
    freq_list -- WordFrequencyList, source words.
    n -- int, PIN length.
    mapping -- KeypadMapping, letter to digit mapping.

    Return:
    dist -- PinDistribution, word counts normalised over words of length
    at least n.

    Raises:
    EmptySupportError -- if there is no word of length n or more.

    """
    return _word_distribution(freq_list, n, mapping, length_at_least(n), True)


def uniform_distribution(n, mapping):
    """Uniform distribution over every PIN reachable with the mapping

    Arguments:
    n -- int, PIN length.
    mapping -- KeypadMapping, defines the reachable digits.

    Return:
    dist -- PinDistribution, uniform over len(digit_range)**n PINs.

    """
    digits = sorted(mapping.digit_range)
    codes = [int("".join(pin)) for pin in itertools.product(digits, repeat=n)]
    probs = np.full(len(codes), 1.0 / len(codes))

    return PinDistribution(n, codes, probs, normalize=True)


def exemplar_words(freq_list, n, mapping, prefix=False):
    """Finds the most frequent word producing each PIN

    Arguments:
    freq_list -- WordFrequencyList, source words.
    n -- int, PIN length.
    mapping -- KeypadMapping, letter to digit mapping.
    prefix -- bool, True for the prefix method.

    Return:
    exemplars -- dict, PIN string -> word, ties broken by the smaller word.

    """
    counts = freq_list.counts
    lengths = counts.index.str.len()
    mask = lengths >= n if prefix else lengths == n
    selected = counts[mask]

    words = selected.index.to_series()
    frame = pd.DataFrame(
        {
            "word": words.to_numpy(),
            "count": selected.to_numpy(),
            "pin": map_words(words.str[:n], mapping).to_numpy(),
        }
    )
    frame = frame.sort_values(["count", "word"], ascending=[False, True])
    frame = frame.drop_duplicates("pin", keep="first")

    return dict(zip(frame["pin"], frame["word"]))


def morph_distribution(base):
    """Replaces one uniformly chosen position by a uniformly chosen digit

    Each of the n * 10 (position, digit) outcomes receives 1 / (10 n) of the
    mass of the base PIN, including the outcomes keeping the PIN unchanged.

    Arguments:
    base -- PinDistribution, distribution before morphing.

    Return:
    morphed -- PinDistribution, distribution of the morphed PINs.

    """
    n = base.pin_length
    codes = base.codes
    share = base.probabilities / (10 * n)

    places = 10 ** np.arange(n - 1, -1, -1, dtype=np.int64)
    digits = np.arange(10, dtype=np.int64)

    # Shape (n, support, 10): position, base PIN, replacement digit
    current = (codes[None, :] // places[:, None]) % 10
    cleared = codes[None, :] - current * places[:, None]
    morphed = cleared[:, :, None] + digits[None, None, :] * places[:, None, None]
    weights = np.broadcast_to(share[None, :, None], morphed.shape)

    unique, mass = _aggregate(morphed, np.ascontiguousarray(weights))

    logger.debug(
        "morphing spread %d PINs over %d PINs", base.support_size, unique.size
    )

    return PinDistribution(n, unique, mass, normalize=True)


def blacklist_pins(dist, k):
    """Removes the k most likely PINs and renormalises the rest

    Arguments:
    dist -- PinDistribution, distribution to blacklist.
    k -- int, number of PINs to forbid.

    Return:
    remaining -- PinDistribution, distribution over the allowed PINs.

    Raises:
    ValueError -- if k is negative.
    BlacklistError -- if k is not smaller than the support size.

    """
    if k < 0:
        raise ValueError("the blacklist size should be non-negative")
    if k >= dist.support_size:
        raise BlacklistError(
            f"blacklist exhausts support: {k} PINs blacklisted out of "
            f"{dist.support_size}"
        )
    if k == 0:
        return dist

    removed = compensated_sum(dist.probabilities[:k])
    logger.debug("blacklisting %d PINs removes mass %.6g", k, removed)

    return PinDistribution(
        dist.pin_length,
        dist.codes[k:],
        dist.probabilities[k:],
        normalize=True,
    )


def blacklist_words(freq_list, k, n, length_pred=None):
    """Removes the k most frequent words among the eligible ones

    Arguments:
    freq_list -- WordFrequencyList, source words.
    k -- int, number of words to forbid.
    n -- int, PIN length.
    length_pred -- callable, eligible word lengths, default length n.

    Return:
    remaining -- WordFrequencyList, list without the blacklisted words.

    Raises:
    ValueError -- if k is negative.
    BlacklistError -- if k is not smaller than the number of eligible words.

    """
    if k < 0:
        raise ValueError("the blacklist size should be non-negative")
    if length_pred is None:
        length_pred = length_equals(n)

    counts = freq_list.counts
    lengths = pd.Series(counts.index.str.len(), index=counts.index)
    eligible = counts[lengths.map(length_pred).astype(bool)]

    if k >= len(eligible):
        raise BlacklistError(
            f"blacklist exhausts support: {k} words blacklisted out of "
            f"{len(eligible)} eligible for PIN length {n}"
        )
    if k == 0:
        return freq_list

    frame = eligible.reset_index()
    frame = frame.sort_values(["count", "word"], ascending=[False, True])
    removed = frame["word"].iloc[:k]

    logger.debug(
        "blacklisting %d words of %s removes count %.6g",
        k,
        freq_list.source_label,
        compensated_sum(frame["count"].iloc[:k].to_numpy()),
    )

    return WordFrequencyList(
        counts.drop(removed),
        freq_list.source_label,
        freq_list.rejected,
        freq_list.malformed,
    )


def mix(a, b, weight):
    """Mixture drawing from a with probability weight and from b otherwise

    Arguments:
    a -- PinDistribution, first distribution.
    b -- PinDistribution, second distribution.
    weight -- float, probability of drawing from a.

    Return:
    mixture -- PinDistribution, over the union of the supports.

    Raises:
    DistributionError -- if the PIN lengths differ.
    ValueError -- if weight is not in [0, 1].

    """
    if a.pin_length != b.pin_length:
        raise DistributionError(
            f"cannot mix PIN lengths {a.pin_length} and {b.pin_length}"
        )
    if not 0 <= weight <= 1:
        raise ValueError("the mixture weight should be in [0, 1]")

    codes = np.concatenate([a.codes, b.codes])
    weights = np.concatenate(
        [weight * a.probabilities, (1 - weight) * b.probabilities]
    )
    unique, mass = _aggregate(codes, weights)

    logger.debug(
        "mixture of %d and %d PINs has %d PINs",
        a.support_size,
        b.support_size,
        unique.size,
    )

    return PinDistribution(a.pin_length, unique, mass, normalize=True)
