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
"""Test for the series lab: formal series, reversion, oracles."""
from fractions import Fraction

# import here the module / classes to be tested
from iterexpand.tests.common import fractions
from iterexpand.tests.common import golden
from iterexpand.tests.common import seeded_specs
from iterexpand.tests.common import TestIterexpand

from iterexpand.engine.coefficients import compute_coefficients
from iterexpand.series import formal
from iterexpand.series.catalog import catalog_series
from iterexpand.series.catalog import CATALOG
from iterexpand.series.catalog import identify
from iterexpand.series.catalog import KINDRED_PAIRS
from iterexpand.series.oracles import oracle_log_ratio
from iterexpand.series.oracles import oracle_power_difference
from iterexpand.series.oracles import oracle_y_difference
from iterexpand.series.power_series import compose_series
from iterexpand.series.power_series import identity_series
from iterexpand.series.power_series import kindred_of
from iterexpand.series.power_series import PowerSeries
from iterexpand.series.power_series import revert_series


class TestFormal(TestIterexpand):

    def test_truncate(self):
        self.assertEqual(formal.truncate([1, 2, 3], 2), [1, 2])
        self.assertEqual(formal.truncate([1], 3), [1, 0, 0])

    def test_geometric(self):
        self.assertEqual(formal.power([1, 1], -1, 5), [1, -1, 1, -1, 1])

    def test_square_root(self):
        # sqrt(1 + 4t) = 1 + 2t - 2t^2 + 4t^3 - ...
        self.assertEqual(formal.power([1, 4], Fraction(1, 2), 4),
                         [1, 2, -2, 4])

    def test_power_unit(self):
        self.assertRaises(ValueError, formal.power, [2, 1], 2, 3)

    def test_log(self):
        self.assertEqual(formal.log([1, 1], 5),
                         [0, 1, Fraction(-1, 2), Fraction(1, 3),
                          Fraction(-1, 4)])

    def test_divide(self):
        quotient = formal.divide([1], [1, -1], 4)
        self.assertEqual(quotient, [1, 1, 1, 1])

    def test_multiply(self):
        self.assertEqual(formal.multiply([1, 1], [1, -1], 3), [1, 0, -1])

    def test_compose(self):
        # (1 + s)^2 with s = t + t^2
        self.assertEqual(formal.compose([1, 2, 1], [0, 1, 1], 4),
                         [1, 2, 3, 2])

    def test_compose_constant(self):
        self.assertRaises(ValueError, formal.compose, [1, 1], [1, 1], 3)


class TestPowerSeries(TestIterexpand):

    def test_evaluate_exact(self):
        logistic = catalog_series("logistic")
        value = logistic(Fraction(1, 2))
        self.assertEqual(value, Fraction(1, 4))
        self.assertEqual(logistic(value), Fraction(3, 16))

    def test_truncated(self):
        series = catalog_series("arctan", 3).truncated(5)
        self.assertEqual(series.coeffs, tuple(fractions(
            ["-1/3", "1/5", "-1/7", "0", "0"])))

    def test_compose_identity(self):
        for name in CATALOG:
            series = catalog_series(name, 5)
            identity = identity_series(series.tau, 5)
            self.assertEqual(compose_series(series, identity), series)
            self.assertEqual(compose_series(identity, series), series)

    def test_compose_gap(self):
        self.assertRaises(ValueError, compose_series,
                          catalog_series("sin"), catalog_series("log"))

    def test_revert_logistic(self):
        reverted = revert_series(catalog_series("logistic"))
        self.assertEqual(list(reverted.coeffs),
                         [1, 2, 5, 14, 42, 132, 429],
                         "Wrong reverted logistic: %r" % reverted)

    def test_revert_log(self):
        reverted = revert_series(catalog_series("log", 5))
        self.assertEqual(list(reverted.coeffs),
                         fractions(["1/2", "1/6", "1/24", "1/120", "1/720"]))

    def test_revert_golden(self):
        for name in ("logistic", "log", "fresnel"):
            expected = fractions(golden(name)['reverted'])
            reverted = revert_series(catalog_series(name, len(expected)))
            self.assertEqual(list(reverted.coeffs), expected,
                             "Wrong reverted %s: %r" % (name, reverted))

    def test_revert_compose_catalog(self):
        for name in CATALOG:
            series = catalog_series(name, 8)
            reverted = revert_series(series)
            identity = identity_series(series.tau, 8)
            self.assertEqual(compose_series(series, reverted), identity,
                             "Wrong reversion of %s" % name)
            self.assertEqual(compose_series(reverted, series), identity)

    def test_revert_compose_random(self):
        for spec in seeded_specs(50):
            series = PowerSeries.from_spec(spec)
            identity = identity_series(series.tau, series.order)
            self.assertEqual(
                compose_series(series, revert_series(series)), identity,
                "Wrong reversion of %r" % series)

    def test_kindred_logistic(self):
        partner = kindred_of(catalog_series("logistic"))
        self.assertEqual(list(partner.coeffs),
                         [-1, 2, -5, 14, -42, 132, -429])
        self.assertEqual(partner.origin, "kindred-of(logistic)")

    def test_kindred_log(self):
        partner = kindred_of(catalog_series("log", 5))
        self.assertEqual(list(partner.coeffs), fractions(
            ["-1/2", "1/6", "-1/24", "1/120", "-1/720"]))

    def test_kindred_pairs(self):
        for first, second in KINDRED_PAIRS:
            order = CATALOG[second].default_order
            partner = kindred_of(catalog_series(first, order))
            self.assertEqual(identify(partner), second,
                             "Wrong partner of %s: %r" % (first, partner))
            back = kindred_of(catalog_series(second, order))
            self.assertEqual(identify(back), first)

    def test_kindred_involution(self):
        for name in CATALOG:
            series = catalog_series(name, 6)
            self.assertEqual(kindred_of(kindred_of(series)), series,
                             "Wrong involution for %s" % name)

    def test_spec_round_trip(self):
        series = catalog_series("tanh")
        spec = series.to_spec()
        self.assertEqual(PowerSeries.from_spec(spec), series)


class TestOracles(TestIterexpand):

    def test_y_difference_logistic(self):
        self.assertEqual(oracle_y_difference(catalog_series("logistic")),
                         [1] * 7)

    def test_y_difference_exp(self):
        self.assertEqual(oracle_y_difference(catalog_series("exp")),
                         fractions(["1", "1/3", "0", "-1/45", "0", "2/945",
                                    "0"]))

    def test_y_difference_sin(self):
        self.assertEqual(oracle_y_difference(catalog_series("sin"))[:4],
                         fractions(["1", "3/5", "2/7", "3/25"]))

    def test_log_ratio_logistic(self):
        self.assertEqual(oracle_log_ratio(catalog_series("logistic")),
                         fractions(["1", "1/2", "1/3", "1/4", "1/5",
                                    "1/6"]))

    def test_log_ratio_z(self):
        self.assertEqual(oracle_log_ratio(catalog_series("z", 6)),
                         fractions(["1", "0", "0", "0", "0"]))

    def test_power_difference_leading(self):
        series = catalog_series("sin")
        for i in range(1, 5):
            self.assertEqual(oracle_power_difference(series, i)[0], -i)

    def test_power_difference_logistic(self):
        values = oracle_power_difference(catalog_series("logistic"), 1)
        self.assertEqual(values, [-1, 0, 0, 0, 0])

    def test_power_difference_bad_index(self):
        self.assertRaises(ValueError, oracle_power_difference,
                          catalog_series("sin"), 0)

    def test_equivalence(self):
        specs = []
        for tau in (1, 2, 3, 4):
            specs.extend(seeded_specs(25, seed=tau, tau=tau))
        for spec in specs:
            series = PowerSeries.from_spec(spec)
            coeffs = compute_coefficients(spec)
            self.assertEqual(oracle_y_difference(series),
                             [1] + list(coeffs.b),
                             "Wrong b for %r" % spec)
            self.assertEqual(oracle_log_ratio(series), list(coeffs.a0),
                             "Wrong a0 for %r" % spec)
            for i, row in coeffs.aij_rows():
                self.assertEqual(oracle_power_difference(series, i), row,
                                 "Wrong a(%s,j) for %r" % (i, spec))
