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
# pylint: disable=too-many-ancestors, attribute-defined-outside-init
# pylint: disable=missing-docstring
"""Test for the function catalog."""
from fractions import Fraction

import mpmath

# import here the module / classes to be tested
from iterexpand.tests.common import fractions
from iterexpand.tests.common import golden
from iterexpand.tests.common import TestIterexpand

from iterexpand import settings
from iterexpand.series.catalog import catalog_names
from iterexpand.series.catalog import catalog_series
from iterexpand.series.catalog import consistency_defect
from iterexpand.series.catalog import evaluate
from iterexpand.series.catalog import get_entry
from iterexpand.series.catalog import identify
from iterexpand.series.power_series import PowerSeries
from iterexpand.series.series_exceptions import DomainViolation
from iterexpand.series.series_exceptions import PrecisionLoss
from iterexpand.series.series_exceptions import UnknownFunction


class TestCatalogSeries(TestIterexpand):

    def test_names(self):
        self.assertEqual(len(catalog_names()), 12)
        self.assertEqual(catalog_names()[0], "logistic")

    def test_logistic(self):
        self.assertEqual(list(catalog_series("logistic").coeffs),
                         [-1, 0, 0, 0, 0, 0, 0])

    def test_arcsinh(self):
        self.assertEqual(list(catalog_series("arcsinh").coeffs), fractions(
            ["-1/6", "3/40", "-5/112", "35/1152", "-63/2816", "231/13312",
             "-143/10240"]))

    def test_fresnel_reduced(self):
        self.assertEqual(list(catalog_series("fresnel", 6).coeffs),
                         fractions(["-1/40", "1/3456", "-1/599040",
                                    "1/175472640", "-1/78033715200",
                                    "1/49049763840000"]))

    def test_golden_a(self):
        for name in catalog_names():
            expected = fractions(golden(name)['a'])
            series = catalog_series(name, len(expected))
            self.assertEqual(list(series.coeffs), expected,
                             "Wrong series for %s: %r" % (name, series))

    def test_default_orders(self):
        self.assertEqual(get_entry("lambertw").default_order, 8)
        self.assertEqual(get_entry("sin").default_order, 7)

    def test_unknown(self):
        self.assertRaises(UnknownFunction, catalog_series, "cos")

    def test_identify(self):
        self.assertEqual(identify(catalog_series("tanh", 4)), "tanh")
        self.assertEqual(identify(PowerSeries(1, ["-1", "1"])), None)

    def test_conventions(self):
        self.assertEqual(get_entry("log").convention.scale, 2)
        self.assertEqual(get_entry("exp").convention.sigma, -1)
        self.assertEqual(get_entry("fresnel").convention.formula, 'B')
        self.assertEqual(get_entry("z").convention.formula, 'A')


class TestEvaluators(TestIterexpand):

    def test_sin(self):
        value = evaluate("sin", "pi/2", 30)
        self.assertTrue(abs(value - 1) < mpmath.mpf(10) ** -29,
                        "Wrong sin: %s" % value)

    def test_omega(self):
        value = evaluate("lambertw", 1, 30)
        with mpmath.workdps(30):
            omega = mpmath.mpf("0.567143290409783872999968662210")
            self.assertTrue(abs(value - omega) < mpmath.mpf(10) ** -28,
                            "Wrong omega: %s" % value)

    def test_logistic_exact(self):
        self.assertEqual(evaluate("logistic", Fraction(1, 2), 20),
                         mpmath.mpf(1) / 4)

    def test_radical(self):
        # (sqrt(1 + 4 * 2) - 1) / 2 = 1
        self.assertEqual(evaluate("radical", 2, 25), 1)

    def test_exp_small(self):
        with mpmath.workdps(40):
            argument = mpmath.mpf(10) ** -30
            value = evaluate("exp", argument, 40)
            self.assertTrue(abs(value / argument - 1) < mpmath.mpf(10) **
                            -29, "Wrong 1 - exp(-x): %s" % value)

    def test_fresnel(self):
        with mpmath.workdps(30):
            expected = mpmath.fresnelc(mpmath.mpf(1) / 2)
        self.assertEqual(mpmath.nstr(evaluate("fresnel", "1/2", 25), 20),
                         mpmath.nstr(expected, 20))

    def test_above_domain(self):
        self.assertRaises(DomainViolation, evaluate, "sin", "4", 20)

    def test_negative_argument(self):
        self.assertRaises(DomainViolation, evaluate, "log", "-1/2", 20)

    def test_kindred_domain(self):
        self.assertRaises(DomainViolation, evaluate, "fresnel-kindred",
                          "3/4", 20)

    def test_kindred_precision_loss(self):
        settings.KINDRED_SERIES_MIN_ORDER = 16
        settings.KINDRED_SERIES_MAX_ORDER = 16
        self.assertRaises(PrecisionLoss, evaluate, "fresnel-kindred",
                          "1/2", 1000)

    def test_consistency(self):
        for name in catalog_names():
            difference, bound = consistency_defect(
                name, settings.CHECK_RADIUS, 60)
            self.assertTrue(difference <= bound,
                            "Wrong evaluator for %s: %s > %s" %
                            (name, mpmath.nstr(difference, 5),
                             mpmath.nstr(bound, 5)))

    def test_kindred_evaluator_series(self):
        with mpmath.workdps(40):
            argument = mpmath.mpf(1) / 10
            series = catalog_series("fresnel-kindred", 30)
            expected = series(argument, mpmath.pi ** 2)
        value = evaluate("fresnel-kindred", "1/10", 30)
        self.assertTrue(abs(value - expected) < mpmath.mpf(10) ** -29,
                        "Wrong kindred evaluator: %s" % value)
