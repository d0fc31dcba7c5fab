#
# Copyright 2016-2026 The iterexpand authors
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as
# published by the Free Software Foundation, either version 3 of the
# License, or (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program.
# If not, see <http://www.gnu.org/licenses/gpl.html>
#
# This module is part of iterexpand, an asymptotics tool for iterated maps
"""Main iterexpand module for command line usage.

This module is used by the only "executable" of the project:
the iterexpand console script.

runs in command line and outputs the requested document
also initiate log files
"""
import logging
import os
import sys
from concurrent.futures import ProcessPoolExecutor

import mpmath
import pkg_resources

# local imports
from iterexpand import settings
from iterexpand.engine.derivation import derive_all
from iterexpand.engine.engine_exceptions import DepthExceeded
from iterexpand.engine.polynomials import contribution_trace
from iterexpand.estimator import estimate_c
from iterexpand.estimator import iterate
from iterexpand.estimator import ResourceCapExceeded
from iterexpand.estimator import working_digits
from iterexpand.expansion import assemble
from iterexpand.expansion import evaluate_at
from iterexpand.expansion import from_normalized_c
from iterexpand.golden import verify_golden_corpus
from iterexpand.iterexpand_exception import IterexpandException
from iterexpand.kindred import kindred_check
from iterexpand.parse_cli_args import IterexpandCliArguments
from iterexpand import render
from iterexpand.series.catalog import CATALOG
from iterexpand.series.catalog import get_entry
from iterexpand.tools import format_real
from iterexpand.tools import parse_real

LOGGER = logging.getLogger("iterexpand")

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_MISMATCH = 2

_FORMATTER = "%(asctime)s - %(levelname)s - %(name)s - %(message)s"


def activate_debug(log_file=None):
    """Setup the default debug parameters.

    A console handler at WARNING is installed once, and a file handler at
    DEBUG for each new log_file. A level chosen before (the test suite
    silences the logger) is kept.

    :param str log_file: path of the debug log, or None
    """
    if LOGGER.level == logging.NOTSET:
        LOGGER.setLevel(logging.DEBUG)
    formatter = logging.Formatter(_FORMATTER)
    if not any(type(handler) is logging.StreamHandler
               for handler in LOGGER.handlers):
        # create console handler with a higher log level
        stream_handler = logging.StreamHandler()
        stream_handler.setLevel(logging.WARNING)
        stream_handler.setFormatter(formatter)
        LOGGER.addHandler(stream_handler)
    if log_file:
        path = os.path.abspath(log_file)
        if not any(isinstance(handler, logging.FileHandler) and
                   handler.baseFilename == path
                   for handler in LOGGER.handlers):
            # create file handler which logs even debug messages
            file_handler = logging.FileHandler(path)
            file_handler.setLevel(logging.DEBUG)
            file_handler.setFormatter(formatter)
            LOGGER.addHandler(file_handler)


def activate_debug_for_tests():
    """Setup the default debug parameters.

    it's mainly used for test cases who needs also logging to be set
    """
    LOGGER.setLevel(logging.CRITICAL)
    if not LOGGER.handlers:
        stream_handler = logging.StreamHandler()
        stream_handler.setLevel(logging.INFO)
        stream_handler.setFormatter(logging.Formatter(_FORMATTER))
        LOGGER.addHandler(stream_handler)


def load_version():
    """Populate settings.__VERSION__."""
    try:
        settings.__VERSION__ = pkg_resources.get_distribution(
            'iterexpand').version
    except pkg_resources.DistributionNotFound:
        try:
            with open("RELEASE-VERSION", "r") as version_file:
                settings.__VERSION__ = version_file.readlines()[0].strip()
        except (IOError, IndexError):
            settings.__VERSION__ = "unknown"


def target_spec(arguments, order=None):
    """SeriesSpec of the --function or --spec target, at order J.

    :param IterexpandCliArguments arguments: parsed arguments
    :param int order: J, the target's full depth when None
    :raises DepthExceeded: when a custom spec is too short for J
    """
    if arguments.spec is not None:
        spec = arguments.spec
        if order is None:
            return spec
        if order > spec.depth:
            raise DepthExceeded(order, spec.depth)
        return spec.truncated(order + 1)
    entry = get_entry(arguments.function)
    return entry.spec(None if order is None else order + 1)


def _settings_snapshot():
    """Settings a worker process needs to reproduce the parent's run."""
    return {name: getattr(settings, name)
            for name in ('GUARD_DIGITS', 'N_SCHEDULE', 'NEWTON_MAX_STEPS',
                         'KINDRED_SERIES_MIN_ORDER',
                         'KINDRED_SERIES_MAX_ORDER')}


def estimate_worker(job):
    """Estimate one initial value; never raises.

    :param tuple job: (name, spec, x0, digits, order, settings snapshot)
    :returns: (EstimateResult or None, error message or None,
               best EstimateResult or None)
    """
    name, spec, x0, digits, order, snapshot = job
    for key, value in snapshot.items():
        setattr(settings, key, value)
    try:
        return estimate_c(name, x0, digits, order, spec), None, None
    except ResourceCapExceeded as exc:
        return None, str(exc), exc.best
    except (IterexpandException, ValueError) as exc:
        return None, str(exc), None


def command_estimate(arguments, output_format):
    """estimate-c: one estimate per --x0, in input order."""
    args = arguments.args
    digits = settings.DEFAULT_DIGITS
    spec = None
    order = args.order
    if arguments.spec is not None:
        spec = target_spec(arguments, order)
        order = None
    initial_values = args.x0 or [None]
    snapshot = _settings_snapshot()
    jobs = [(arguments.function, spec, x0, digits, order, snapshot)
            for x0 in initial_values]
    if settings.JOBS > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=settings.JOBS) as executor:
            outcomes = list(executor.map(estimate_worker, jobs))
    else:
        outcomes = [estimate_worker(job) for job in jobs]
    results = []
    failures = []
    for x0, (result, error, best) in zip(initial_values, outcomes):
        if result is not None:
            results.append(result)
        else:
            failures.append((x0 or "default", error, best))
    text = render.render_estimates(results, failures, digits, output_format)
    return (EXIT_ERROR if failures else EXIT_OK), text


def command_eval(arguments, output_format):
    """eval: the expansion at (n, C), optionally against the true x_n."""
    args = arguments.args
    spec = target_spec(arguments, args.order)
    coeffs, polys = derive_all(spec)
    expansion = assemble(coeffs, polys)
    digits = settings.DEFAULT_DIGITS
    table_sign = 1
    if arguments.spec is None:
        table_sign = get_entry(arguments.function).table_sign
    with mpmath.workdps(digits + 5):
        # --c is the tabulated constant
        c_value = table_sign * parse_real(args.constant)
        k_value = from_normalized_c(c_value, spec.convention)
    value = evaluate_at(expansion, args.n, k_value, digits)
    document = {
        'function': spec.name,
        'order': expansion.order,
        'n': args.n,
        'C': args.constant,
        'K': format_real(k_value, digits),
        'value': format_real(value, digits),
    }
    if args.x0 is not None:
        true_value = iterate(arguments.function, args.x0, args.n,
                             working_digits(digits, args.n),
                             spec=arguments.spec)
        with mpmath.workdps(digits):
            document['x0'] = args.x0
            document['iterate'] = format_real(true_value, digits)
            document['difference'] = format_real(abs(true_value - value), 5)
    return EXIT_OK, render.render_evaluation(document, output_format)


def run_command(arguments):
    """Run the parsed command.

    :param IterexpandCliArguments arguments: parsed arguments
    :returns: (exit status, document)
    :rtype: tuple
    :raises IterexpandException: on validation errors
    :raises ValueError: on invalid numeric arguments
    """
    args = arguments.args
    command = arguments.command
    output_format = settings.DEFAULT_FORMAT
    LOGGER.debug("running %s (format %s)", command, output_format)

    if command == 'list-functions':
        return EXIT_OK, render.render_functions(CATALOG.values(),
                                                output_format)
    if command == 'verify':
        report = verify_golden_corpus(args.function, args.corpus,
                                      settings.JOBS)
        return (EXIT_OK if report.passed else EXIT_MISMATCH,
                render.render_verify(report, output_format))
    if command == 'estimate-c':
        return command_estimate(arguments, output_format)
    if command == 'eval':
        return command_eval(arguments, output_format)
    if command == 'kindred':
        if arguments.spec is not None:
            check = kindred_check(spec=target_spec(arguments, args.order))
        else:
            check = kindred_check(
                arguments.function,
                order=None if args.order is None else args.order + 1)
        return (EXIT_OK if check.passed else EXIT_MISMATCH,
                render.render_kindred(check, output_format))

    spec = target_spec(arguments, args.order)
    coeffs, polys = derive_all(spec)
    if command == 'coeffs':
        return EXIT_OK, render.render_coefficients(coeffs, output_format)
    if command == 'polys':
        trace = None
        if args.trace is not None:
            trace = contribution_trace(spec, polys, args.trace)
        return EXIT_OK, render.render_polynomials(spec, polys, output_format,
                                                  trace, args.trace)
    # expand
    return EXIT_OK, render.render_expansion(assemble(coeffs, polys),
                                            output_format)


def main(cli_arguments=None):
    """Main entry point.

    main parses the command line (and the config files it names), runs
    the subcommand and writes the document on stdout or in --output.

    :param list cli_arguments: list of arguments, like sys.argv
    :returns: exit status, 0 on success, 1 on validation errors and 2 on
              verification failures
    :rtype: int
    """
    if sys.version_info < (3, 4):
        raise SystemExit("ERROR: This programm needs python 3.4 or greater")

    if cli_arguments is None:
        cli_arguments = sys.argv

    activate_debug()
    load_version()

    try:
        arguments = IterexpandCliArguments(cli_arguments)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_ERROR
    activate_debug(settings.LOG_FILE)

    try:
        status, text = run_command(arguments)
    except (IterexpandException, ValueError) as exc:
        print("iterexpand: error: %s" % exc, file=sys.stderr)
        return EXIT_ERROR

    if arguments.args.output:
        with open(arguments.args.output, 'w') as output_file:
            output_file.write(text + "\n")
    else:
        print(text)
    return status
