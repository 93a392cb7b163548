#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
cli.py

Command line interface of dictpin: analyze, sweep, tables and inspect
Date: 10/26
"""

import sys
import json
import logging
import argparse

import pandas as pd

from dictpin import __version__, constants
from dictpin.corpus import ListFormat, corpus_statistics, read_frequency_list
from dictpin.exceptions import ConfigError
from dictpin.report import (
    render_result,
    render_sweep,
    render_tables,
    reproduce_tables,
)
from dictpin.scenario import (
    CONFIG_KEYS,
    load_config_file,
    merge_config,
    run_scenario,
)
from dictpin.sweeps import sweep_blacklist
from dictpin.utils import find_default_corpus, resolve_corpus_path

logger = logging.getLogger(__name__)


def _separator(value):
    """Accepts tab spelled as 'tab' or '\\t' on the command line"""
    if value in ("tab", "\\t"):
        return "\t"
    if len(value) != 1:
        raise argparse.ArgumentTypeError("the separator should be one character")
    return value


def add_format_arguments(parser):
    parser.add_argument(
        "--dict-format",
        type=str,
        choices=sorted(constants.LIST_FORMATS),
        help="frequency list layout preset, default: tsv",
    )
    parser.add_argument(
        "--separator",
        type=_separator,
        help="column separator overriding the preset",
    )
    parser.add_argument(
        "--word-col",
        type=int,
        help="index of the word column",
    )
    parser.add_argument(
        "--count-col",
        type=int,
        help="index of the count column",
    )
    parser.add_argument(
        "--header",
        action=argparse.BooleanOptionalAction,
        help="the first line of the list is a header row",
    )
    parser.add_argument(
        "--strict",
        action=argparse.BooleanOptionalAction,
        help="fail on malformed lines instead of skipping them",
    )
    parser.add_argument(
        "--min-count",
        type=float,
        help=f"keep words with a count above this value, default: "
        f"{constants.MIN_COUNT:g}",
    )


def add_common_arguments(parser):
    parser.add_argument(
        "--output",
        type=str,
        default="table",
        choices=constants.OUTPUT_FORMATS,
        help="output format, default: table",
    )
    parser.add_argument(
        "-v",
        "--verbose",
        action="store_true",
        help="log the pipeline stages on stderr",
    )


def add_scenario_arguments(parser):
    parser.add_argument(
        "--dict",
        action="append",
        metavar="PATH",
        help="frequency list, give it twice for the two-dictionary scenario",
    )
    parser.add_argument(
        "--config",
        type=str,
        help="TOML scenario file, command line flags take precedence",
    )
    add_format_arguments(parser)
    parser.add_argument(
        "--pin-length",
        type=int,
        help=f"PIN length n, default: {constants.PIN_LENGTH}",
    )
    parser.add_argument(
        "--mapping",
        type=str,
        help="standard, stretched or a letter=digit mapping file, "
        "default: standard",
    )
    parser.add_argument(
        "--strategy",
        type=str,
        choices=constants.STRATEGIES,
        help="PIN construction strategy, default: basic",
    )
    parser.add_argument(
        "--morph",
        action=argparse.BooleanOptionalAction,
        help="replace one random position by a random digit",
    )
    parser.add_argument(
        "--blacklist",
        type=int,
        metavar="K",
        help="number of blacklisted PINs or words, default: 0",
    )
    parser.add_argument(
        "--blacklist-mode",
        type=str,
        choices=constants.BLACKLIST_MODES,
        help="blacklist the most frequent PINs or words, default: pin",
    )
    parser.add_argument(
        "--mix-weight",
        type=float,
        help=f"probability of choosing the first dictionary, default: "
        f"{constants.MIX_WEIGHT}",
    )
    parser.add_argument(
        "--alpha",
        type=float,
        help=f"success probability of the marginal guesswork, default: "
        f"{constants.ALPHA}",
    )
    parser.add_argument(
        "--beta",
        type=int,
        help=f"guesses of the marginal success rate, default: {constants.BETA}",
    )
    parser.add_argument(
        "--top",
        type=int,
        metavar="M",
        help=f"number of listed PINs, default: {constants.TOP_M}",
    )
    parser.add_argument(
        "--seed",
        type=int,
        help=f"seed of the Monte Carlo check, default: {constants.MC_SEED}",
    )
    parser.add_argument(
        "--samples",
        type=int,
        help="Monte Carlo samples, default: 0 (no check)",
    )
    add_common_arguments(parser)


def _scenario_config(args):
    """Merges the config file and the command line flags"""
    file_values = load_config_file(args.config) if args.config else {}
    cli_values = {k: v for k, v in vars(args).items() if k in CONFIG_KEYS}
    return merge_config(file_values, cli_values)


def _list_format(args):
    try:
        return ListFormat.from_preset(
            args.dict_format or "tsv",
            separator=args.separator,
            word_column=args.word_col,
            count_column=args.count_col,
            has_header=args.header,
            strict=args.strict,
        )
    except ValueError as e:
        raise ConfigError(str(e)) from e


def cmd_analyze(args):
    """Evaluates one scenario and prints its metrics and top PINs"""
    config = _scenario_config(args)
    result = run_scenario(config)
    sys.stdout.write(render_result(result, args.output))

    return 0


def cmd_sweep(args):
    """Evaluates a scenario for increasing blacklist sizes"""
    config = _scenario_config(args)
    try:
        series = sweep_blacklist(
            config, args.sweep_max, args.sweep_step, workers=args.workers
        )
    except ValueError as e:
        if isinstance(e, ConfigError):
            raise
        raise ConfigError(str(e)) from e
    sys.stdout.write(render_sweep(series, args.output))

    return 0


def cmd_tables(args):
    """Reproduces the published tables from the available frequency lists"""
    fmt = _list_format(args)
    min_count = constants.MIN_COUNT if args.min_count is None else args.min_count

    corpora = {}
    read_notices = []
    for name, file_name in constants.DEFAULT_CORPORA.items():
        path = getattr(args, name)
        if path is not None:
            path = resolve_corpus_path(path)
        else:
            path = find_default_corpus(file_name)

        corpora[name] = None
        if path is None:
            continue
        try:
            corpora[name] = read_frequency_list(path, fmt)
        except (OSError, ValueError) as e:
            logger.info("could not read the %s list: %s", name, e)
            read_notices.append(f"{name} frequency list unavailable: {e}")

    sections, notices = reproduce_tables(corpora, min_count)
    for notice in read_notices + notices:
        sys.stderr.write(f"{notice}\n")

    sys.stdout.write(render_tables(sections, args.output))

    if len(sections) == 1:
        sys.stderr.write("Error: no frequency list available for the tables\n")
        return 1

    return 0


def cmd_inspect(args):
    """Prints the statistics of a frequency list"""
    fmt = _list_format(args)
    min_count = constants.MIN_COUNT if args.min_count is None else args.min_count
    freq_list = read_frequency_list(resolve_corpus_path(args.dict), fmt)
    stats = corpus_statistics(freq_list, min_count)

    lengths = sorted(stats.length_histogram)
    histogram = pd.DataFrame(
        {
            "length": lengths,
            "words": [stats.length_histogram[n] for n in lengths],
            "retained": [stats.retained_histogram.get(n, 0) for n in lengths],
        }
    )

    match args.output:
        case "table":
            sys.stdout.write(
                f"Source: {stats.source_label}\n"
                f"Words: {stats.words}\n"
                f"Total count: {stats.total_count:g}\n"
                f"Words with count > {min_count:g}: {stats.retained_words}\n"
                f"Rejected words: {stats.rejected}\n"
                f"Malformed lines: {stats.malformed}\n\n"
                f"{histogram.to_string(index=False)}\n"
            )
        case "csv":
            sys.stdout.write(histogram.to_csv(index=False, lineterminator="\n"))
        case "json":
            sys.stdout.write(
                json.dumps(
                    {
                        "source": stats.source_label,
                        "words": stats.words,
                        "total_count": stats.total_count,
                        "min_count": min_count,
                        "retained_words": stats.retained_words,
                        "rejected": stats.rejected,
                        "malformed": stats.malformed,
                        "length_histogram": {
                            str(k): v for k, v in stats.length_histogram.items()
                        },
                        "retained_histogram": {
                            str(k): v for k, v in stats.retained_histogram.items()
                        },
                    },
                    indent=2,
                    sort_keys=True,
                )
                + "\n"
            )

    return 0


def build_parser():
    """Creates the argument parser with its subcommands"""
    parser = argparse.ArgumentParser(
        prog="dictpin",
        description="Security metrics of PINs derived from dictionary words",
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {__version__}"
    )
    subparsers = parser.add_subparsers(
        title="subcommands", description="Available commands", dest="command"
    )

    # Subcommand: analyze
    analyze_parser = subparsers.add_parser(
        "analyze", help="Compute the metrics of one scenario"
    )
    add_scenario_arguments(analyze_parser)
    analyze_parser.set_defaults(func=cmd_analyze)

    # Subcommand: sweep
    sweep_parser = subparsers.add_parser(
        "sweep", help="Compute the metrics for increasing blacklist sizes"
    )
    add_scenario_arguments(sweep_parser)
    sweep_parser.add_argument(
        "--sweep-max",
        type=int,
        default=constants.SWEEP_MAX,
        help=f"largest blacklist size, default: {constants.SWEEP_MAX}",
    )
    sweep_parser.add_argument(
        "--sweep-step",
        type=int,
        default=constants.SWEEP_STEP,
        help=f"blacklist size step, default: {constants.SWEEP_STEP}",
    )
    sweep_parser.add_argument(
        "--workers",
        type=int,
        default=1,
        help="number of threads evaluating the sweep points",
    )
    sweep_parser.set_defaults(func=cmd_sweep)

    # Subcommand: tables
    tables_parser = subparsers.add_parser(
        "tables", help="Reproduce the published tables"
    )
    for name, file_name in constants.DEFAULT_CORPORA.items():
        tables_parser.add_argument(
            f"--{name}",
            type=str,
            metavar="PATH",
            help=f"{name} frequency list, default: {file_name} in "
            f"${constants.CORPUS_ENV_VAR}",
        )
    add_format_arguments(tables_parser)
    add_common_arguments(tables_parser)
    tables_parser.set_defaults(func=cmd_tables)

    # Subcommand: inspect
    inspect_parser = subparsers.add_parser(
        "inspect", help="Print the statistics of a frequency list"
    )
    inspect_parser.add_argument(
        "--dict", required=True, metavar="PATH", help="frequency list"
    )
    add_format_arguments(inspect_parser)
    add_common_arguments(inspect_parser)
    inspect_parser.set_defaults(func=cmd_inspect)

    return parser


def main(argv=None):
    """Runs the command line interface

    Arguments:
    argv -- list[str], arguments, default sys.argv[1:].

    Return:
    code -- int, 0 on success, 1 on failure, 2 on usage errors.

    """
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.command is None:
        parser.print_help()
        return 2

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    logger.debug("running the %s command", args.command)

    try:
        return args.func(args)
    except ConfigError as e:
        parser.print_usage(sys.stderr)
        sys.stderr.write("Error: {}\n".format(e))
        return 2
    except (OSError, ValueError, RuntimeError) as e:
        sys.stderr.write("Error: {}\n".format(e))
        return 1


if __name__ == "__main__":
    sys.exit(main())
