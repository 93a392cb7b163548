#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
sweeps.py

Evaluates a scenario over a range of blacklist sizes
Date: 10/26
"""

import logging

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import pandas as pd

from dictpin.constants import SECONDARY_BETA, SWEEP_STEP
from dictpin.exceptions import ScenarioError
from dictpin.metrics import full_metrics, marginal_success_rate
from dictpin.scenario import (
    pipeline_stage,
    blacklist_corpora,
    distribution_from_corpora,
    filter_corpora,
    load_corpora,
    with_blacklist,
)
from dictpin.strategy import blacklist_pins

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SweepPoint:
    """Metrics of the scenario for one blacklist size"""

    k: int
    record: object
    secondary_success: float


@dataclass(frozen=True)
class SweepSeries:
    """Metrics of a scenario for increasing blacklist sizes"""

    mode: str
    points: tuple

    @property
    def k_values(self):
        return [point.k for point in self.points]

    @property
    def entropy_series(self):
        return [point.record.entropy_bits for point in self.points]

    @property
    def success_series(self):
        return [point.record.marginal_success for point in self.points]

    def to_frame(self):
        """Returns one row per blacklist size, the first columns being
        k, entropy_bits, lambda_beta and the secondary success rate"""
        rows = []
        for point in self.points:
            record = point.record.as_dict()
            row = {
                "k": point.k,
                "entropy_bits": record.pop("entropy_bits"),
                "lambda_beta": record.pop("marginal_success"),
                f"lambda_{SECONDARY_BETA}": point.secondary_success,
            }
            row.update(record)
            rows.append(row)

        return pd.DataFrame(rows)


def get_k_values(k_max, step=SWEEP_STEP):
    """Returns the blacklist sizes 0, step, 2 step, ... up to k_max

    Raises:
    ValueError -- if k_max is negative or step is not positive.

    """
    if k_max < 0:
        raise ValueError("the maximum blacklist size should be non-negative")
    if step < 1:
        raise ValueError("the sweep step should be a positive integer")

    return list(range(0, k_max + 1, step))


def _point(config, dist, k):
    record = full_metrics(dist, config.alpha, config.beta)
    return SweepPoint(k, record, marginal_success_rate(dist, SECONDARY_BETA))


def sweep_blacklist(config, k_max, step=SWEEP_STEP, corpora=None, workers=1):
    """Evaluates a scenario for blacklist sizes 0, step, ... up to k_max

    The configured blacklist mode is kept and its size replaced by each
    swept value. In PIN mode the final distribution of the scenario is
    built once and blacklisted for each k. In word mode the distribution
    is rebuilt for each k.

    Arguments:
    config -- ScenarioConfig, the scenario.
    k_max -- int, largest blacklist size.
    step -- int, increase of the blacklist size between two points.
    corpora -- list[WordFrequencyList], parsed lists replacing the files
    named in the config, default None.
    workers -- int, number of threads evaluating the points.

    Return:
    series -- SweepSeries, one point per blacklist size in increasing order.

    Raises:
    ValueError -- if k_max or step are out of range.
    ScenarioError -- if a stage fails or k_max exhausts the support, before
    any point is evaluated.

    """
    k_values = get_k_values(k_max, step)
    base = with_blacklist(config, 0)

    if corpora is None:
        corpora = load_corpora(base)
    else:
        corpora = filter_corpora(base, corpora)

    if base.blacklist.mode == "pin":
        dist = distribution_from_corpora(base, corpora)
        if k_max >= dist.support_size:
            raise ScenarioError(
                "blacklist-pins",
                f"blacklist exhausts support: {k_max} PINs out of "
                f"{dist.support_size}",
            )

        def evaluate(k):
            with pipeline_stage("blacklist-pins"):
                return _point(base, blacklist_pins(dist, k), k)

    else:
        # Fails early if k_max removes every eligible word
        blacklist_corpora(base, corpora, k_max)

        def evaluate(k):
            lists = blacklist_corpora(base, corpora, k)
            return _point(base, distribution_from_corpora(base, lists), k)

    logger.info(
        "sweeping %d %s blacklist sizes up to %d",
        len(k_values),
        base.blacklist.mode,
        k_max,
    )

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            points = list(executor.map(evaluate, k_values))
    else:
        points = [evaluate(k) for k in k_values]

    return SweepSeries(base.blacklist.mode, tuple(points))
