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
# pylint: disable=too-many-public-methods, protected-access, no-self-use
# pylint: disable=too-few-public-methods, duplicate-code, invalid-name
# pylint: disable=too-many-ancestors, attribute-defined-outside-init, no-member
"""Common methods for tests."""
import contextlib
import io
import json
import os
import random
import unittest
from fractions import Fraction

import pkg_resources

# import here the module / classes to be tested
from iterexpand.main import activate_debug_for_tests
from iterexpand.main import main
from iterexpand.engine.series_spec import SeriesSpec
from iterexpand.ratpoly import RatPoly
from iterexpand import settings

#: settings touched by the cli and config tests, restored after each test
SAVED_SETTINGS = ('DEFAULT_DIGITS', 'DEFAULT_FORMAT', 'JOBS', 'LOG_FILE',
                  'GUARD_DIGITS', 'N_SCHEDULE', 'NEWTON_MAX_STEPS',
                  'KINDRED_SERIES_MIN_ORDER', 'KINDRED_SERIES_MAX_ORDER',
                  'TEMPLATE_COEFFS')


def golden(name):
    """Golden corpus document of a catalog function."""
    return json.loads(pkg_resources.resource_string(
        'iterexpand', 'golden/%s.json' % name).decode('utf-8'))


def fractions(strings):
    """List of Fraction from "p/q" strings."""
    return [Fraction(value) for value in strings]


def poly(strings):
    """RatPoly from ascending "p/q" strings."""
    return RatPoly.from_strings(strings)


def random_spec(rng, tau=None, order=None):
    """Random SeriesSpec with a_1 < 0, small numerators and denominators.

    :param random.Random rng: seeded generator
    """
    if tau is None:
        tau = rng.randint(1, 4)
    if order is None:
        order = rng.randint(3, 7)
    coefficients = [-Fraction(rng.randint(1, 9), rng.randint(1, 9))]
    for _ in range(order - 1):
        coefficients.append(Fraction(rng.randint(-9, 9), rng.randint(1, 9)))
    return SeriesSpec("random", tau, coefficients)


def seeded_specs(count, seed=20160101, **kwargs):
    """The same `count` random specs on every run."""
    rng = random.Random(seed)
    return [random_spec(rng, **kwargs) for _ in range(count)]


def run_cli(*arguments):
    """Run main() on the arguments, return (status, stdout text)."""
    output = io.StringIO()
    with contextlib.redirect_stdout(output):
        status = main(["iterexpand"] + list(arguments))
    return status, output.getvalue()


class TestIterexpand(unittest.TestCase):
    """Generic iterexpand test class."""

    def setUp(self):
        """Init of the tests."""
        super().setUp()
        # temporary hack (tests):
        activate_debug_for_tests()
        self._saved = {name: getattr(settings, name)
                       for name in SAVED_SETTINGS}

    def tearDown(self):
        """Restore the settings changed by a test."""
        for name, value in self._saved.items():
            setattr(settings, name, value)
        super().tearDown()

    def assertPolyEqual(self, got, expected_strings, label="polynomial"):
        """Compare a RatPoly with ascending "p/q" strings."""
        self.assertEqual(got, poly(expected_strings),
                         "Wrong %s: %r" % (label, got))


def fixture(name):
    """Path of a file of iterexpand/tests/configs."""
    return os.path.join(os.path.dirname(__file__), 'configs', name)
