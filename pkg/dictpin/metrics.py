#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
metrics.py

Guessing metrics of PIN distributions: entropy, guesswork, marginal
guesswork and marginal success rate
Date: 10/26
"""

import math
import logging

from dataclasses import asdict, dataclass

import numpy as np

from dictpin.constants import ALPHA, BETA, SUM_TOLERANCE
from dictpin.utils import compensated_sum

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MetricsRecord:
    """Security metrics of one PIN distribution

    Bit values use log base 2. marginal_success is a probability, not a
    percentage.

    """

    entropy_bits: float
    guesswork: float
    guesswork_bits: float
    marginal_guesswork: int
    marginal_guesswork_bits: float
    marginal_success: float
    alpha: float
    beta: int
    support_size: int
    pin_length: int
    pin_space: int

    def as_dict(self):
        return asdict(self)


@dataclass(frozen=True)
class MonteCarloEstimate:
    """Empirical guessing statistics from sampled PINs"""

    samples: int
    seed: int
    beta: int
    success_rate: float
    mean_rank: float
    standard_error: float
    analytic_success: float

    def within(self, n_sigma=3.0):
        """True if the sampled success rate is within n_sigma of the analytic one"""
        return abs(self.success_rate - self.analytic_success) <= (
            n_sigma * self.standard_error
        )

    def as_dict(self):
        return asdict(self)


def _check_alpha(alpha):
    if not 0 < alpha <= 1:
        raise ValueError(f"alpha should be in (0, 1], got {alpha}")


def _check_beta(beta):
    if int(beta) != beta or beta < 1:
        raise ValueError(f"beta should be a positive integer, got {beta}")


def entropy(dist):
    """Computes the Shannon entropy of a distribution

    Arguments:
    dist -- PinDistribution, distribution of the PINs.

    Return:
    entropy -- float, entropy in bits.

    """
    probs = dist.probabilities
    h = -compensated_sum(probs * np.log2(probs))

    return h if h > 0 else 0.0


def guesswork(dist):
    """Computes the expected number of guesses in descending order

    Arguments:
    dist -- PinDistribution, distribution of the PINs.

    Return:
    guesswork -- float, sum of rank times probability.

    """
    ranks = np.arange(1, dist.support_size + 1, dtype=np.float64)
    return compensated_sum(ranks * dist.probabilities)


def guesswork_bits(g):
    """Converts a guesswork value into bits

    Arguments:
    g -- float, expected number of guesses.

    Return:
    bits -- float, log2(2g - 1).

    Raises:
    ValueError -- if g is smaller than 1.

    """
    if g < 1:
        if g < 1 - SUM_TOLERANCE:
            raise ValueError(f"guesswork should be at least 1, got {g}")
        g = 1.0

    return math.log2(2 * g - 1)


def marginal_guesswork(dist, alpha=ALPHA):
    """Computes the number of guesses needed to succeed with probability alpha

    Arguments:
    dist -- PinDistribution, distribution of the PINs.
    alpha -- float, target success probability in (0, 1].

    Return:
    mu -- int, smallest k whose k most likely PINs have mass >= alpha.

    Raises:
    ValueError -- if alpha is not in (0, 1].

    """
    _check_alpha(alpha)
    index = int(np.searchsorted(dist.cumulative, alpha, side="left"))

    # Rounding can leave the last cumulative value just below alpha = 1
    return min(index + 1, dist.support_size)


def marginal_success_rate(dist, beta=BETA):
    """Computes the probability of success within beta guesses

    Arguments:
    dist -- PinDistribution, distribution of the PINs.
    beta -- int, number of allowed guesses.

    Return:
    lam -- float, mass of the beta most likely PINs.

    Raises:
    ValueError -- if beta is not a positive integer.

    """
    _check_beta(beta)
    if beta >= dist.support_size:
        return 1.0

    return float(dist.cumulative[int(beta) - 1])


def marginal_guesswork_bits(dist, alpha=ALPHA):
    """Converts the marginal guesswork into bits

    The marginal guesswork is divided by the mass reached at that number
    of guesses before taking log2.

    Arguments:
    dist -- PinDistribution, distribution of the PINs.
    alpha -- float, target success probability in (0, 1].

    Return:
    bits -- float, log2(mu / lambda_mu).

    Raises:
    ValueError -- if alpha is not in (0, 1].

    """
    mu = marginal_guesswork(dist, alpha)
    return math.log2(mu / marginal_success_rate(dist, mu))


def full_metrics(dist, alpha=ALPHA, beta=BETA):
    """Computes every metric of a distribution

    Arguments:
    dist -- PinDistribution, distribution of the PINs.
    alpha -- float, target success probability for the marginal guesswork.
    beta -- int, number of guesses for the marginal success rate.

    Return:
    record -- MetricsRecord, the metrics.

    Raises:
    ValueError -- if alpha or beta are out of range.

    """
    _check_alpha(alpha)
    _check_beta(beta)

    g = guesswork(dist)
    mu = marginal_guesswork(dist, alpha)

    return MetricsRecord(
        entropy_bits=entropy(dist),
        guesswork=g,
        guesswork_bits=guesswork_bits(g),
        marginal_guesswork=mu,
        marginal_guesswork_bits=math.log2(mu / marginal_success_rate(dist, mu)),
        marginal_success=marginal_success_rate(dist, beta),
        alpha=float(alpha),
        beta=int(beta),
        support_size=dist.support_size,
        pin_length=dist.pin_length,
        pin_space=dist.pin_space,
    )


def monte_carlo_check(dist, samples, seed=0, beta=BETA):
    """Estimates the success rate and guesswork by sampling PINs

    Arguments:
    dist -- PinDistribution, distribution of the PINs.
    samples -- int, number of sampled PINs.
    seed -- int, seed of the generator.
    beta -- int, number of allowed guesses.

    Return:
    estimate -- MonteCarloEstimate, empirical values and the binomial
    standard error of the success rate.

    Raises:
    ValueError -- if samples or beta are not positive.

    """
    if samples < 1:
        raise ValueError("the number of samples should be positive")
    _check_beta(beta)

    rng = np.random.default_rng(seed)
    # Rank 0 is the most likely PIN of the sorted view
    ranks = rng.choice(dist.support_size, size=samples, p=dist.probabilities)

    analytic = marginal_success_rate(dist, beta)
    estimate = MonteCarloEstimate(
        samples=int(samples),
        seed=int(seed),
        beta=int(beta),
        success_rate=float(np.mean(ranks < beta)),
        mean_rank=float(np.mean(ranks)) + 1.0,
        standard_error=math.sqrt(analytic * (1 - analytic) / samples),
        analytic_success=analytic,
    )
    logger.debug("monte carlo estimate %s", estimate)

    return estimate
