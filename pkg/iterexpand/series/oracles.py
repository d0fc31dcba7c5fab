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
"""Independent oracles for the engine coefficients.

With y = lambda / x^tau and w = 1/y, one step of the map gives

    y_(n+1) / y_n = (1 + u)^-tau,   u = sum_m a_m lambda^m w^m

so y_(n+1) - y_n, ln(y_(n+1)/y_n) and y_(n+1)^-i - y_n^-i are plain
formal series in w. None of this goes through the partition sums of the
engine.
"""
from fractions import Fraction

from iterexpand.series import formal


def _lambda(series):
    """-1 / (tau a_1) of a PowerSeries."""
    first = series.coeffs[0]
    if first >= 0:
        raise ValueError("a_1 must be negative, got %s" % first)
    return Fraction(-1) / (series.tau * first)


def _one_plus_u(series, length):
    """1 + sum_m a_m lambda^m w^m modulo w^length."""
    lam = _lambda(series)
    values = [Fraction(1)] + [value * lam ** m
                              for m, value in enumerate(series.coeffs, 1)]
    return formal.truncate(values, length)


def oracle_y_difference(series):
    """Coefficients of y_(n+1) - y_n in powers of 1/y.

    :param PowerSeries series: the map
    :returns: [1, b_1, ..., b_(K-1)]
    :rtype: list of Fraction
    """
    order = series.order
    ratio = formal.power(_one_plus_u(series, order + 1), -series.tau,
                         order + 1)
    return ratio[1:order + 1]


def oracle_log_ratio(series):
    """Coefficients of ln(y_(n+1)/y_n) in powers of 1/y.

    :param PowerSeries series: the map
    :returns: [a_(0,1), ..., a_(0,K-1)]
    :rtype: list of Fraction
    """
    order = series.order
    logarithm = formal.log(_one_plus_u(series, order), order)
    return [-series.tau * value for value in logarithm[1:]]


def oracle_power_difference(series, i):
    """Coefficients of y_(n+1)^-i - y_n^-i in powers of 1/y.

    :param PowerSeries series: the map
    :param int i: i >= 1
    :returns: [a_(i,i+1), ..., a_(i,K-1)]
    :rtype: list of Fraction
    :raises ValueError: when i < 1
    """
    if i < 1:
        raise ValueError("power difference needs i >= 1, got %s" % i)
    depth = series.order - 1
    if depth <= i:
        return []
    length = depth - i + 1
    ratio = formal.power(_one_plus_u(series, length), series.tau * i, length)
    return ratio[1:]
