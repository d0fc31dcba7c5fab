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
"""Coefficient families of the transformed sequence y_n = lambda / x_n^tau.

b_j, a_(0,j) and a_(i,j) are the coefficients, in powers of 1/y, of
y_(n+1) - y_n, ln(y_(n+1)/y_n) and y_(n+1)^-i - y_n^-i. The c_i are
the constants feeding the T polynomials.

Every value is an exact Fraction.
"""
import logging
from fractions import Fraction
from math import factorial

from iterexpand.engine.engine_exceptions import InvalidSeriesSpec
from iterexpand.kernel import constrained_sum
from iterexpand.kernel import falling_factorial
from iterexpand.kernel import format_rational

LOGGER = logging.getLogger("iterexpand.engine.coefficients")


class CoeffSet():
    """Derived coefficient tables of one SeriesSpec.

    *Attributes:*

    * spec: the SeriesSpec they were derived from
    * lam: lambda = -1 / (tau a_1), of the reduced coefficients when the
      spec carries a scale marker
    * b: tuple b_1..b_J (b[0] is b_1)
    * a0: tuple a_(0,1)..a_(0,J) (a0[0] is a_(0,1))
    * aij: dict {(i, j): a_(i,j)} for 1 <= i < j <= J
    * c: tuple c_0..c_(J-1) (c[0] is c_0)
    """

    def __init__(self, spec, lam, b, a0, aij, c):
        """Init of CoeffSet."""
        self.spec = spec
        self.lam = lam
        self.b = tuple(b)
        self.a0 = tuple(a0)
        self.aij = dict(aij)
        self.c = tuple(c)

    def __repr__(self):
        """Returns a string representing the tables."""
        return "CoeffSet(%s, lambda=%s, b=%s, a0=%s, c=%s)" % (
            self.spec.name, self.lam, self.b_strings(), self.a0_strings(),
            self.c_strings())

    @property
    def depth(self):
        """J, the number of b_j."""
        return len(self.b)

    def a_value(self, i, j):
        """a_(i,j) with the convention that i = 0 reads the a0 table."""
        if i == 0:
            return self.a0[j - 1]
        return self.aij[(i, j)]

    def b_strings(self):
        """b_1..b_J as "p/q" strings."""
        return [format_rational(value) for value in self.b]

    def a0_strings(self):
        """a_(0,1)..a_(0,J) as "p/q" strings."""
        return [format_rational(value) for value in self.a0]

    def c_strings(self):
        """c_0..c_(J-1) as "p/q" strings."""
        return [format_rational(value) for value in self.c]

    def aij_rows(self):
        """Rows of the a_(i,j) triangle, [(i, [a_(i,i+1), ...]), ...]."""
        return [(i, [self.aij[(i, j)] for j in range(i + 1, self.depth + 1)])
                for i in range(1, self.depth)]


def compute_lambda(spec):
    """lambda = -1 / (tau a_1).

    :param SeriesSpec spec: the series
    :rtype: Fraction
    :raises InvalidSeriesSpec: when a_1 >= 0
    """
    first = spec.a[0]
    if first >= 0:
        raise InvalidSeriesSpec("a_1 must be negative, got %s" % first)
    return Fraction(-1) / (spec.tau * first)


def compute_b(spec):
    """b_1..b_(K-1).

    b_j = lambda^(j+1) sum_(s=0..j) (-tau)_(j+1-s) / (j+1-s)!
    sum_(K, j+1, s) multinomial(j+1-s; n) a_1^n_1 ... a_K^n_K

    :param SeriesSpec spec: the series
    :returns: b[0] = b_1, ...
    :rtype: list of Fraction
    """
    lam = compute_lambda(spec)
    order = spec.order
    tau = spec.tau
    b = []
    for j in range(1, order):
        total = Fraction(0)
        for s in range(j + 1):
            count = j + 1 - s
            weight = falling_factorial(-tau, count) / factorial(count)
            total += weight * constrained_sum(order, j + 1, s, spec.a)
        b.append(lam ** (j + 1) * total)
    LOGGER.debug("b for %s: %s", spec.name, b)
    return b


def _beta(b):
    """(1, b_1, ..., b_(J-1)): the coefficients of y_(n+1)/y_n."""
    return [Fraction(1)] + list(b[:-1])


def compute_a0(spec, b):
    """a_(0,1)..a_(0,J).

    a_(0,j) = sum_(s=0..j-1) (-1)^(j-1-s) / (j-s)
    sum_(J, j, s) multinomial(j-s; n) beta_1^n_1 ... beta_J^n_J
    with beta = (1, b_1, ..., b_(J-1)).

    :param SeriesSpec spec: the series (used for logging only)
    :param list b: b_1..b_J
    :rtype: list of Fraction
    """
    depth = len(b)
    beta = _beta(b)
    a0 = []
    for j in range(1, depth + 1):
        total = Fraction(0)
        for s in range(j):
            weight = Fraction((-1) ** (j - 1 - s), j - s)
            total += weight * constrained_sum(depth, j, s, beta)
        a0.append(total)
    LOGGER.debug("a0 for %s: %s", spec.name, a0)
    return a0


def compute_aij(spec, b):
    """Triangle a_(i,j), 1 <= i < j <= J.

    a_(i,j) = sum_(s=0..j-i-1) (-i)_(j-i-s) / (j-i-s)!
    sum_(J, j-i, s) multinomial(j-i-s; n) beta_1^n_1 ... beta_J^n_J

    The falling factorial index is j-i-s: it is the only reading giving
    a_(i,i+1) = -i together with the closed forms of a_(i,i+2..i+4).

    :param SeriesSpec spec: the series (used for logging only)
    :param list b: b_1..b_J
    :rtype: dict {(i, j): Fraction}
    """
    depth = len(b)
    beta = _beta(b)
    aij = {}
    for i in range(1, depth):
        for j in range(i + 1, depth + 1):
            total = Fraction(0)
            for s in range(j - i):
                count = j - i - s
                weight = falling_factorial(-i, count) / factorial(count)
                total += weight * constrained_sum(depth, j - i, s, beta)
            aij[(i, j)] = total
    LOGGER.debug("aij for %s: %s", spec.name, aij)
    return aij


def compute_c(spec, b, a0, aij):
    """c_0..c_(J-1).

    c_0 = -b_1 and c_i = (b_(i+1) + sum_(h=0..i-1) a_(h,i+1) c_h) / i.

    :param SeriesSpec spec: the series (used for logging only)
    :param list b: b_1..b_J
    :param list a0: a_(0,1)..a_(0,J)
    :param dict aij: the a_(i,j) triangle
    :rtype: list of Fraction
    """
    depth = len(b)
    c = [-b[0]]
    for i in range(1, depth):
        total = b[i]
        for h in range(i):
            a_value = a0[i] if h == 0 else aij[(h, i + 1)]
            total += a_value * c[h]
        c.append(total / i)
    LOGGER.debug("c for %s: %s", spec.name, c)
    return c


def compute_coefficients(spec):
    """Derive the full CoeffSet of a spec in dependency order.

    :param SeriesSpec spec: the series
    :rtype: CoeffSet
    """
    lam = compute_lambda(spec)
    b = compute_b(spec)
    a0 = compute_a0(spec, b)
    aij = compute_aij(spec, b)
    c = compute_c(spec, b, a0, aij)
    return CoeffSet(spec, lam, b, a0, aij, c)
