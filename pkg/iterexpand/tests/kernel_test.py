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
"""Test for the exact kernel."""
import unittest
from fractions import Fraction

# import here the module / classes to be tested
from iterexpand.main import activate_debug_for_tests

from iterexpand.kernel import constrained_sum
from iterexpand.kernel import falling_factorial
from iterexpand.kernel import format_rational
from iterexpand.kernel import multinomial
from iterexpand.kernel import partitions
from iterexpand.kernel import to_rational


class TestKernel(unittest.TestCase):

    def setUp(self):
        # temporary hack (tests):
        activate_debug_for_tests()


class TestToRational(TestKernel):

    def test_fraction_text(self):
        self.assertEqual(to_rational("3/4"), Fraction(3, 4),
                         "Wrong rational: %s" % to_rational("3/4"))

    def test_negative_text(self):
        self.assertEqual(to_rational("-16384/315"), Fraction(-16384, 315))

    def test_integer_text(self):
        self.assertEqual(to_rational("7"), Fraction(7))

    def test_int(self):
        self.assertEqual(to_rational(-2), Fraction(-2))

    def test_not_reduced(self):
        self.assertRaises(ValueError, to_rational, "2/4")

    def test_zero_denominator(self):
        self.assertRaises(ValueError, to_rational, "1/0")

    def test_negative_denominator(self):
        self.assertRaises(ValueError, to_rational, "1/-2")

    def test_malformed(self):
        self.assertRaises(ValueError, to_rational, "one/2")

    def test_float(self):
        self.assertRaises(ValueError, to_rational, 0.5)

    def test_bool(self):
        self.assertRaises(ValueError, to_rational, True)

    def test_format(self):
        self.assertEqual(format_rational(Fraction(-13, 36)), "-13/36")
        self.assertEqual(format_rational(Fraction(4, 2)), "2")


class TestFallingFactorial(TestKernel):

    def test_half(self):
        value = falling_factorial(Fraction(-1, 2), 3)
        self.assertEqual(value, Fraction(-15, 8),
                         "Wrong falling factorial: %s" % value)

    def test_integer(self):
        self.assertEqual(falling_factorial(5, 2), 20)

    def test_one_factor(self):
        self.assertEqual(falling_factorial(Fraction(2, 3), 1),
                         Fraction(2, 3))

    def test_zero_factors(self):
        self.assertRaises(ValueError, falling_factorial, 1, 0)


class TestMultinomial(TestKernel):

    def test_value(self):
        self.assertEqual(multinomial(4, (2, 1, 1)), 12)

    def test_zero_parts(self):
        self.assertEqual(multinomial(2, (0, 2, 0, 0)), 1)

    def test_bad_sum(self):
        self.assertRaises(ValueError, multinomial, 4, (1, 2))


class TestPartitions(TestKernel):

    def test_single(self):
        self.assertEqual(partitions(3, 3, 1), [(1, 1, 0)])

    def test_all_ones(self):
        self.assertEqual(partitions(3, 3, 0), [(3, 0, 0)])

    def test_top_index(self):
        self.assertEqual(partitions(3, 3, 2), [(0, 0, 1)])

    def test_empty(self):
        self.assertEqual(partitions(2, 3, 2), [])

    def test_order(self):
        self.assertEqual(partitions(4, 4, 2), [(0, 2, 0, 0), (1, 0, 1, 0)],
                         "Wrong partitions: %s" % partitions(4, 4, 2))

    def test_constraints(self):
        for k, m, s in ((5, 5, 2), (6, 6, 3), (4, 7, 3)):
            for solution in partitions(k, m, s):
                self.assertEqual(sum((index + 1) * value for index, value
                                     in enumerate(solution)), m)
                self.assertEqual(sum(solution), m - s)

    def test_bad_k(self):
        self.assertRaises(ValueError, partitions, 0, 1, 0)


class TestConstrainedSum(TestKernel):

    def test_value(self):
        # b^2 + 2 a c with (a, b, c, d) = (2, 3, 5, 7)
        self.assertEqual(constrained_sum(4, 4, 2, [2, 3, 5, 7]), 29)

    def test_empty_sum(self):
        self.assertEqual(constrained_sum(2, 3, 2, [1, 1]), 0)

    def test_missing_factor(self):
        self.assertRaises(ValueError, constrained_sum, 3, 3, 2, [1, 1])
