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
"""Use argparse to parse Command Line Arguments."""
import argparse
import sys

import mpmath

# local imports
from iterexpand import settings
from iterexpand.iterexpand_exception import IterexpandException
from iterexpand.parse_config_files import apply_environment
from iterexpand.parse_config_files import IterexpandConfigFiles
from iterexpand.parse_series_files import load_series
from iterexpand.tools import safe_eval_real

#: subcommands working on one map, given by --function or --spec
TARGET_COMMANDS = ('coeffs', 'polys', 'expand', 'eval', 'estimate-c',
                   'kindred')

#: output formats accepted by each subcommand
COMMAND_FORMATS = {
    'coeffs': ("text", "json", "latex"),
    'polys': ("text", "json", "latex"),
    'expand': ("text", "json", "latex"),
    'eval': ("text", "json"),
    'estimate-c': ("text", "json"),
    'kindred': ("text", "json"),
    'list-functions': ("text", "json"),
    'verify': ("text", "json"),
}


class IterexpandArgumentParser(argparse.ArgumentParser):
    """ArgumentParser exiting with status 1 on usage errors."""

    def error(self, message):
        """Print the usage and the message on stderr, then exit 1."""
        self.print_usage(sys.stderr)
        self.exit(1, "%s: error: %s\n" % (self.prog, message))


def positive_int(text):
    """argparse type: integer >= 1."""
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError("integer expected, got %r" % text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1, got %s" % value)
    return value


class IterexpandCliArguments():
    """Parse the cli arguments of iterexpand.

    *Attributes:*

    * parser: argparse object
    * args: args is the result of argparse
    * command: the subcommand
    * function: catalog name of the target map, or None
    * spec: SeriesSpec read from --spec, or None
    """

    def __init__(self, cli_arguments):
        """init of IterexpandCliArguments object.

        :param list cli_arguments: list of arguments, like sys.argv
                                   (list of str)
        """
        description = """%(prog)s derives the coefficients, polynomials and
      asymptotic expansion of the iterates x_n -> 0 of
      f(x) = x + sum a_m x^(m tau + 1) (a_1 < 0), and estimates the
      constant C of a given initial value.
      """

        epilog = """examples:
      %(prog)s coeffs --function sin --format json
      %(prog)s estimate-c --function logistic --x0 1/2 --digits 18
      %(prog)s kindred --function arctan
      """

        self.parser = IterexpandArgumentParser(
            description=description,
            epilog=epilog,
            formatter_class=argparse.RawTextHelpFormatter)

        self.parser.add_argument('--version',
                                 action='version',
                                 version=str(settings.__VERSION__))

        self.common = self.common_arguments()
        self.subparsers = self.parser.add_subparsers(
            dest="command", metavar="COMMAND")
        self.subparsers.required = True
        self.derivation_commands()
        self.numeric_commands()
        self.catalog_commands()

        self.args = None
        self.command = None
        self.function = None
        self.spec = None

        # parse the options
        args = self.parser.parse_args(cli_arguments[1:])

        self.check_arguments(args)

    def common_arguments(self):
        """Options shared by every subcommand."""
        common = argparse.ArgumentParser(add_help=False)
        group = common.add_argument_group("Common Options")
        group.add_argument(
            "-c", "--config", dest="config_files",
            action="append", type=str, metavar="STRING",
            help="""path for config file.
      see manual for more infos on config file""")
        group.add_argument(
            "--format", metavar="text|json|latex", type=str,
            choices=("text", "json", "latex"),
            help="""output format (default: text)""")
        group.add_argument(
            "--output", metavar="PATH", type=str,
            help="""write the document in PATH instead of stdout""")
        group.add_argument(
            "--logfile", metavar="PATH", type=str,
            help="""also write the debug log in PATH""")
        group.add_argument(
            "--digits", metavar="VAL", type=positive_int,
            help="""decimal digits for numeric results
      (default: 20, or $ITEREXPAND_DIGITS)""")
        group.add_argument(
            "--jobs", metavar="VAL", type=positive_int,
            help="""worker processes for verify and estimate-c""")
        return common

    def _target_parser(self, name, help_text):
        """Subcommand acting on --function NAME or --spec FILE."""
        subparser = self.subparsers.add_parser(
            name, parents=[self.common], help=help_text,
            formatter_class=argparse.RawTextHelpFormatter)
        group = subparser.add_argument_group("Target")
        group.add_argument(
            "--function", metavar="NAME", type=str,
            help="""catalog function (see list-functions)""")
        group.add_argument(
            "--spec", metavar="FILE", type=str,
            help="""custom series file (JSON or [series] config)
      Example JSON: {"tau": 1, "a": ["-1", "3/2", "-8/3"]}""")
        group.add_argument(
            "--order", metavar="J", type=positive_int,
            help="""order J of the tables and of the expansion""")
        return subparser

    def derivation_commands(self):
        """Exact subcommands."""
        self._target_parser("coeffs", "coefficient tables b, a(0,j), "
                            "a(i,j), c")
        polys = self._target_parser("polys", "polynomials T_m and P_m")
        polys.add_argument(
            "--trace", metavar="M", type=positive_int,
            help="""also list every contribution to P_M""")
        self._target_parser("expand", "asymptotic expansion of x_n")
        self._target_parser("kindred", "kindred partner and relations")

    def numeric_commands(self):
        """High precision subcommands."""
        evaluation = self._target_parser(
            "eval", "value of the expansion at (n, C)")
        evaluation.add_argument(
            "--n", dest="n", metavar="N", type=int, required=True,
            help="""index of the iterate, N >= 2""")
        evaluation.add_argument(
            "--constant", metavar="C", type=str, required=True,
            help="""the constant C, e.g. 1.7679 or -pi/4""")
        evaluation.add_argument(
            "--x0", metavar="X0", type=str,
            help="""also iterate the map from X0 and compare""")

        estimate = self._target_parser(
            "estimate-c", "estimate C for initial values x0")
        estimate.add_argument(
            "--x0", metavar="X0", type=str, action="append",
            help="""initial value, e.g. 1/2 or pi/2.
      Several --x0 give one estimate each""")

    def catalog_commands(self):
        """Subcommands on the catalog and the golden corpus."""
        self.subparsers.add_parser(
            "list-functions", parents=[self.common],
            help="list the catalog functions")
        verify = self.subparsers.add_parser(
            "verify", parents=[self.common],
            help="compare derived tables with the golden corpus")
        verify.add_argument(
            "--corpus", metavar="DIR", type=str,
            help="""corpus directory (default: the packaged corpus)""")
        verify.add_argument(
            "--function", metavar="NAME", type=str,
            help="""check this function only""")

    def _check_real(self, text, option):
        """Error out unless text is a real expression."""
        try:
            with mpmath.workdps(settings.DEFAULT_DIGITS):
                safe_eval_real(text)
        except ValueError as exc:
            self.parser.error("Error while parsing option %s : %s" %
                              (option, exc))

    def check_arguments(self, args):
        """Parse all command lines options.

        could also exit from program because of wrong arguments
        """
        try:
            IterexpandConfigFiles(args.config_files)
            apply_environment()
        except ValueError as exc:
            self.parser.error("Error in configuration: %s" % exc)

        if args.digits:
            settings.DEFAULT_DIGITS = args.digits
        if args.format:
            settings.DEFAULT_FORMAT = args.format
        if args.jobs:
            settings.JOBS = args.jobs
        if args.logfile:
            settings.LOG_FILE = args.logfile

        if settings.DEFAULT_FORMAT not in COMMAND_FORMATS[args.command]:
            self.parser.error("format %s is not available for %s" %
                              (settings.DEFAULT_FORMAT, args.command))

        if args.command in TARGET_COMMANDS:
            if (args.function is None) == (args.spec is None):
                self.parser.error("exactly one of --function or --spec is "
                                  "needed")
            if args.spec is not None:
                try:
                    self.spec = load_series(args.spec)
                except IterexpandException as exc:
                    self.parser.error("Error in %s: %s" % (args.spec, exc))
            self.function = args.function

        if args.command == 'eval':
            if args.n < 2:
                self.parser.error("--n must be >= 2, got %s" % args.n)
            self._check_real(args.constant, 'constant')
            if args.x0 is not None:
                self._check_real(args.x0, 'x0')

        if args.command == 'estimate-c':
            for x0 in args.x0 or ():
                self._check_real(x0, 'x0')

        self.command = args.command
        self.args = args
