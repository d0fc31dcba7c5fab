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
"""The polynomial tower T_m, T~_m and P_m.

P_m evaluated at X = -(b_1 ln(n) + K) / tau gives the 1/n^m correction
of x_n / (lambda / n)^(1/tau).
"""
import logging
from fractions import Fraction
from math import factorial

from iterexpand.kernel import constrained_sum
from iterexpand.kernel import falling_factorial
from iterexpand.kernel import multinomial
from iterexpand.kernel import partitions
from iterexpand.ratpoly import RatPoly

LOGGER = logging.getLogger("iterexpand.engine.polynomials")


class PolySet():
    """Polynomial tower of one SeriesSpec.

    *Attributes:*

    * T: tuple T_1..T_J (T[0] is T_1)
    * Ttilde: tuple with Ttilde[m-1](X) = T_m(-tau X)
    * P: tuple P_0..P_J (P[0] is P_0 = 1)
    """

    def __init__(self, T, Ttilde, P):
        """Init of PolySet."""
        # pylint: disable=invalid-name
        self.T = tuple(T)
        self.Ttilde = tuple(Ttilde)
        self.P = tuple(P)

    def __repr__(self):
        """Returns a string representing the tower."""
        return "PolySet(T=%s, P=%s)" % ([str(t) for t in self.T],
                                        [str(p) for p in self.P])

    @property
    def depth(self):
        """J, the index of the last P."""
        return len(self.P) - 1


def compute_t(spec, b, c):
    """T_1..T_J.

    T_1 = X and, for m = 1..J-1,

    T_(m+1) = b_1 sum_(s=0..m-1) (-1)^(m-1-s) / (m-s)
              sum_(m, m, s) multinomial(m-s; n) T_1^n_1 ... T_m^n_m
            - c_m
            - sum_(p=1..m-1) c_p sum_(q=1..m-p) (-p)_q / q!
              sum_(m, m-p, m-p-q) multinomial(q; n) T_1^n_1 ... T_m^n_m

    :param SeriesSpec spec: the series (used for logging only)
    :param list b: b_1..b_J
    :param list c: c_0..c_(J-1)
    :rtype: list of RatPoly
    """
    depth = len(b)
    tower = [RatPoly.x()]
    for m in range(1, depth):
        known = tower[:m]
        logarithmic = 0
        for s in range(m):
            weight = Fraction((-1) ** (m - 1 - s), m - s)
            logarithmic = logarithmic + \
                weight * constrained_sum(m, m, s, known)
        poly = RatPoly.coerce(b[0] * logarithmic) - c[m]
        for p in range(1, m):
            for q in range(1, m - p + 1):
                weight = falling_factorial(-p, q) / factorial(q)
                inner = constrained_sum(m, m - p, m - p - q, known)
                poly = poly - c[p] * weight * inner
        tower.append(RatPoly.coerce(poly))
    LOGGER.debug("T for %s: %s", spec.name, [str(t) for t in tower])
    return tower


def compute_ttilde(spec, tower):
    """T~_m(X) = T_m(-tau X)."""
    return [poly.scale_argument(-spec.tau) for poly in tower]


def compute_p(spec, ttilde):
    """P_0..P_J.

    P_0 = 1 and, for m = 1..J,

    P_m = sum_(s=0..m-1) (-1/tau)_(m-s) / (m-s)!
          sum_(J, m, s) multinomial(m-s; n) T~_1^n_1 ... T~_J^n_J

    :param SeriesSpec spec: the series
    :param list ttilde: T~_1..T~_J
    :rtype: list of RatPoly
    """
    depth = len(ttilde)
    exponent = Fraction(-1, spec.tau)
    tower = [RatPoly((1, ))]
    for m in range(1, depth + 1):
        poly = RatPoly()
        for s in range(m):
            count = m - s
            weight = falling_factorial(exponent, count) / factorial(count)
            poly = poly + weight * constrained_sum(depth, m, s, ttilde)
        tower.append(poly)
    LOGGER.debug("P for %s: %s", spec.name, [str(p) for p in tower])
    return tower


def compute_polynomials(spec, coeffs):
    """Derive the full PolySet from a CoeffSet."""
    tower = compute_t(spec, coeffs.b, coeffs.c)
    ttilde = compute_ttilde(spec, tower)
    return PolySet(tower, ttilde, compute_p(spec, ttilde))


def contribution_trace(spec, polys, m):
    """List every nonzero contribution to P_m.

    Each contribution is the term of the (J, m, s) sum for one index
    vector n: weight (-1/tau)_(m-s)/(m-s)! * multinomial(m-s; n) times the
    product T~_1^n_1 ... T~_J^n_J.

    :param SeriesSpec spec: the series
    :param PolySet polys: the derived tower
    :param int m: 1 <= m <= J
    :returns: list of dicts with keys s, n, weight, product
    :rtype: list
    :raises ValueError: when m is outside 1..J
    """
    depth = polys.depth
    if not 1 <= m <= depth:
        raise ValueError("trace needs 1 <= m <= %s, got %s" % (depth, m))
    exponent = Fraction(-1, spec.tau)
    trace = []
    for s in range(m):
        count = m - s
        base = falling_factorial(exponent, count) / factorial(count)
        for solution in partitions(depth, m, s):
            weight = base * multinomial(count, solution)
            product = RatPoly((1, ))
            for factor, power in zip(polys.Ttilde, solution):
                if power:
                    product = product * factor ** power
            if weight == 0 or product.is_zero():
                continue
            trace.append({'s': s, 'n': solution, 'weight': weight,
                          'product': product})
    return trace
