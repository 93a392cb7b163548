#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
report.py

Rendering of metric records, sweeps and reproduced tables as human
readable tables, CSV or JSON
Date: 10/26
"""

import json
import logging

from dataclasses import dataclass

import pandas as pd

from dictpin import constants
from dictpin.exceptions import ScenarioError
from dictpin.mapping import standard_mapping
from dictpin.metrics import full_metrics
from dictpin.scenario import ScenarioConfig, run_scenario
from dictpin.strategy import BlacklistSpec, uniform_distribution
from dictpin.sweeps import sweep_blacklist

logger = logging.getLogger(__name__)

METRIC_LABELS = {
    "entropy_bits": "H1 (bits)",
    "guesswork_bits": "G~ (bits)",
    "marginal_guesswork_bits": "mu~ (bits)",
    "marginal_success": "lambda (%)",
}


@dataclass(frozen=True)
class TableCell:
    """Computed value of a published table cell

    Bit metrics are in bits and the marginal success rate in percent, as
    in the published tables.

    """

    table: str
    scenario: str
    metric: str
    computed: float
    published: float

    @property
    def delta(self):
        if self.published is None:
            return None
        return self.computed - self.published

    def as_dict(self):
        return {
            "table": self.table,
            "scenario": self.scenario,
            "metric": self.metric,
            "computed": self.computed,
            "published": self.published,
            "delta": self.delta,
        }


@dataclass(frozen=True)
class TableSection:
    """Cells of one reproduced table"""

    name: str
    title: str
    cells: tuple


def _bits(value):
    return f"{value:.2f}"


def _percent(probability):
    return f"{100 * probability:.2f}"


def _to_csv(frame):
    return frame.to_csv(index=False, lineterminator="\n")


def _to_json(records):
    return json.dumps(records, indent=2, sort_keys=True) + "\n"


def display_value(record, metric):
    """Returns a record value in the unit of the published tables"""
    value = record.as_dict()[metric]
    if metric == "marginal_success":
        return 100 * value
    return value


def summary_line(record):
    """Returns the H1 / G~ / mu~ / lambda row of a record"""
    return " / ".join(
        _percent(record.marginal_success) if metric == "marginal_success"
        else _bits(getattr(record, metric))
        for metric in constants.TABLE_METRICS
    )


def render_result(result, output="table"):
    """Renders the outcome of run_scenario

    Arguments:
    result -- ScenarioResult, scenario outcome.
    output -- str, output format {table, csv, json}.

    Return:
    text -- str, rendered output.

    Raises:
    ValueError -- if the output format is invalid.

    """
    record = result.record
    scenario = result.config.label

    match output:
        case "table":
            lines = [f"Scenario: {scenario}", ""]
            metrics = pd.DataFrame(
                {
                    "metric": [
                        "H1 (bits)",
                        "G (guesses)",
                        "G~ (bits)",
                        f"mu_{record.alpha:g} (guesses)",
                        f"mu~_{record.alpha:g} (bits)",
                        f"lambda_{record.beta} (%)",
                        "support size",
                    ],
                    "value": [
                        _bits(record.entropy_bits),
                        _bits(record.guesswork),
                        _bits(record.guesswork_bits),
                        str(record.marginal_guesswork),
                        _bits(record.marginal_guesswork_bits),
                        _percent(record.marginal_success),
                        str(record.support_size),
                    ],
                }
            )
            lines.append(metrics.to_string(index=False))
            lines.append("")
            lines.append(f"H1 / G~ / mu~ / lambda: {summary_line(record)}")

            if result.top:
                top = pd.DataFrame(
                    {
                        "rank": [t.rank for t in result.top],
                        "pin": [t.pin for t in result.top],
                        "probability": [f"{t.probability:.4f}" for t in result.top],
                        "percent": [_percent(t.probability) for t in result.top],
                        "word": [t.word for t in result.top],
                    }
                )
                lines.append("")
                lines.append(top.to_string(index=False))

            if result.monte_carlo is not None:
                mc = result.monte_carlo
                lines.append("")
                lines.append(
                    f"Monte Carlo ({mc.samples} samples, seed {mc.seed}): "
                    f"lambda_{mc.beta} {_percent(mc.success_rate)} % "
                    f"(analytic {_percent(mc.analytic_success)} %, "
                    f"sigma {_percent(mc.standard_error)} %), "
                    f"mean rank {mc.mean_rank:.2f} "
                    f"(analytic {record.guesswork:.2f})"
                )
            return "\n".join(lines) + "\n"

        case "csv":
            row = {"scenario": scenario, **record.as_dict()}
            if result.monte_carlo is not None:
                row.update(
                    {f"mc_{k}": v for k, v in result.monte_carlo.as_dict().items()}
                )
            return _to_csv(pd.DataFrame([row]))

        case "json":
            records = [{"kind": "metrics", "scenario": scenario, **record.as_dict()}]
            records.extend(
                {
                    "kind": "top",
                    "rank": t.rank,
                    "pin": t.pin,
                    "probability": t.probability,
                    "word": t.word,
                }
                for t in result.top
            )
            if result.monte_carlo is not None:
                records.append(
                    {"kind": "monte_carlo", **result.monte_carlo.as_dict()}
                )
            return _to_json(records)

        case _:
            raise ValueError(f"invalid output format {output}")


def render_sweep(series, output="table"):
    """Renders a blacklist sweep

    Arguments:
    series -- SweepSeries, sweep points.
    output -- str, output format {table, csv, json}.

    Return:
    text -- str, rendered output with one row per blacklist size.

    Raises:
    ValueError -- if the output format is invalid.

    """
    frame = series.to_frame()
    lambda_secondary = f"lambda_{constants.SECONDARY_BETA}"

    match output:
        case "table":
            beta = series.points[0].record.beta
            table = pd.DataFrame(
                {
                    "k": frame["k"],
                    "H1 (bits)": frame["entropy_bits"].map(_bits),
                    f"lambda_{beta} (%)": frame["lambda_beta"].map(_percent),
                    f"{lambda_secondary} (%)": frame[lambda_secondary].map(_percent),
                    "G~ (bits)": frame["guesswork_bits"].map(_bits),
                    "mu~ (bits)": frame["marginal_guesswork_bits"].map(_bits),
                    "support": frame["support_size"],
                }
            )
            return (
                f"Blacklist sweep ({series.mode} mode)\n"
                + table.to_string(index=False)
                + "\n"
            )

        case "csv":
            return _to_csv(frame)

        case "json":
            records = []
            for point in series.points:
                record = point.record.as_dict()
                records.append(
                    {
                        "k": point.k,
                        "entropy_bits": record.pop("entropy_bits"),
                        "lambda_beta": record.pop("marginal_success"),
                        lambda_secondary: point.secondary_success,
                        **record,
                    }
                )
            return _to_json(records)

        case _:
            raise ValueError(f"invalid output format {output}")


def _cells(table, scenario, record, published, metrics=constants.TABLE_METRICS):
    """Pairs the record values with the published ones"""
    return [
        TableCell(table, scenario, metric, display_value(record, metric), value)
        for metric, value in zip(metrics, published)
        if value is not None
    ]


def ideal_section():
    """Uniform distributions over the standard mapping PIN space"""
    cells = []
    for n in (4, 5):
        dist = uniform_distribution(n, standard_mapping())
        record = full_metrics(dist, constants.ALPHA, constants.BETA)
        published = constants.PUBLISHED_IDEAL[n]
        cells.extend(
            _cells(
                "ideal",
                f"uniform n={n}",
                record,
                [published[m] for m in constants.TABLE_METRICS],
            )
        )

    return TableSection("ideal", "Ideal values, uniform PINs", tuple(cells))


def table1_section(corpora, min_count):
    """Straightforward construction for the English lists"""
    cells = []
    for name in ("subtlexus", "opensub"):
        if corpora.get(name) is None:
            continue
        # The opensub list keeps the words of frequency 1
        threshold = 0.0 if name == "opensub" else min_count
        for n in (4, 5):
            config = ScenarioConfig((name,), pin_length=n, min_count=threshold)
            record = run_scenario(config, [corpora[name]]).record
            cells.extend(
                _cells("1", f"{name} n={n}", record,
                       constants.PUBLISHED_TABLE1[(name, n)])
            )

    return TableSection(
        "1", "Comparison of metrics for straightforward construction", tuple(cells)
    )


def table3_section(corpora, min_count):
    """Stretched mapping, prefix and morphing methods on SUBTLEXus"""
    methods = {
        "stretched": {"mapping": "stretched"},
        "prefix": {"strategy": "prefix"},
        "morphing": {"morph": True},
    }
    cells = []
    for method, kwargs in methods.items():
        for n in (4, 5):
            config = ScenarioConfig(
                ("subtlexus",), pin_length=n, min_count=min_count, **kwargs
            )
            record = run_scenario(config, [corpora["subtlexus"]]).record
            cells.extend(
                _cells("3", f"{method} n={n}", record,
                       constants.PUBLISHED_TABLE3[(method, n)])
            )

    return TableSection("3", "Modifications of PIN constructions", tuple(cells))


def table4_section(corpora, min_count):
    """PIN blacklists of 0, 10 and 20 PINs on the prefix and morphing methods"""
    methods = {
        "prefix": {"strategy": "prefix"},
        "morphing": {"morph": True},
    }
    cells = []
    for method, kwargs in methods.items():
        for n in (4, 5):
            config = ScenarioConfig(
                ("subtlexus",), pin_length=n, min_count=min_count, **kwargs
            )
            series = sweep_blacklist(config, 20, 10, corpora=[corpora["subtlexus"]])
            for point in series.points:
                cells.extend(
                    _cells(
                        "4",
                        f"{method} n={n} blacklist={point.k}",
                        point.record,
                        constants.PUBLISHED_TABLE4[(method, n, point.k)],
                        metrics=("entropy_bits", "marginal_success"),
                    )
                )

    return TableSection(
        "4", "Combination of PIN blacklist and the prefix/morphing method",
        tuple(cells),
    )


def table5_section(corpora, min_count):
    """Two-dictionary scenario, SUBTLEXus and SUBTLEXnl chosen with p = 1/2"""
    methods = {
        "basic": {},
        "prefix": {"strategy": "prefix"},
        "prefix-bl10": {"strategy": "prefix", "blacklist": BlacklistSpec("pin", 10)},
    }
    lists = [corpora["subtlexus"], corpora["subtlexnl"]]
    cells = []
    for method, kwargs in methods.items():
        for n in (4, 5):
            config = ScenarioConfig(
                ("subtlexus", "subtlexnl"),
                pin_length=n,
                min_count=min_count,
                **kwargs,
            )
            record = run_scenario(config, lists).record
            cells.extend(
                _cells("5", f"{method} n={n}", record,
                       constants.PUBLISHED_TABLE5[(method, n)])
            )

    return TableSection(
        "5", "Security metrics for two-dictionary scenario", tuple(cells)
    )


def _try_section(build, label, corpora, min_count, notices):
    """Runs one table builder, a failing scenario becomes a notice"""
    try:
        return build(corpora, min_count)
    except ScenarioError as e:
        logger.info("%s failed: %s", label, e)
        notices.append(f"{label} skipped: {e}")
        return None


def reproduce_tables(corpora, min_count=constants.MIN_COUNT):
    """Runs the scenario battery of the published tables

    Tables whose frequency lists are missing, or whose scenarios fail on
    the given lists, are skipped with a notice and the others are still
    produced.

    Arguments:
    corpora -- dict, list name {subtlexus, subtlexnl, opensub} ->
    WordFrequencyList or None.
    min_count -- float, threshold of the SUBTLEX lists.

    Return:
    sections -- list[TableSection], the reproduced tables.
    notices -- list[str], reasons for the skipped tables.

    """
    has_us = corpora.get("subtlexus") is not None
    has_nl = corpora.get("subtlexnl") is not None
    battery = [
        (
            table1_section,
            "Table 1",
            has_us or corpora.get("opensub") is not None,
            "no SUBTLEXus or opensub frequency list",
        ),
        (table3_section, "Table 3", has_us, "no SUBTLEXus frequency list"),
        (table4_section, "Table 4", has_us, "no SUBTLEXus frequency list"),
        (
            table5_section,
            "Table 5",
            has_us and has_nl,
            "SUBTLEXus and SUBTLEXnl frequency lists are required",
        ),
    ]

    sections = [ideal_section()]
    notices = []
    for build, label, available, reason in battery:
        if not available:
            notices.append(f"{label} skipped: {reason}")
            continue

        section = _try_section(build, label, corpora, min_count, notices)
        if section is not None:
            sections.append(section)

    return sections, notices


def render_tables(sections, output="table"):
    """Renders reproduced tables next to the published values

    Arguments:
    sections -- list[TableSection], reproduced tables.
    output -- str, output format {table, csv, json}.

    Return:
    text -- str, rendered output.

    Raises:
    ValueError -- if the output format is invalid.

    """
    records = [cell.as_dict() for section in sections for cell in section.cells]

    match output:
        case "table":
            blocks = []
            for section in sections:
                frame = pd.DataFrame(
                    {
                        "scenario": [c.scenario for c in section.cells],
                        "metric": [METRIC_LABELS[c.metric] for c in section.cells],
                        "computed": [f"{c.computed:.2f}" for c in section.cells],
                        "published": [f"{c.published:.2f}" for c in section.cells],
                        "delta": [f"{c.delta:+.2f}" for c in section.cells],
                    }
                )
                title = (
                    f"Table {section.name}: {section.title}"
                    if section.name != "ideal" else section.title
                )
                blocks.append(f"{title}\n{frame.to_string(index=False)}\n")
            return "\n".join(blocks)

        case "csv":
            columns = ["table", "scenario", "metric", "computed", "published", "delta"]
            return _to_csv(pd.DataFrame(records, columns=columns))

        case "json":
            return _to_json(records)

        case _:
            raise ValueError(f"invalid output format {output}")
