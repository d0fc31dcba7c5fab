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
"""SeriesSpec: the identity of a map for the coefficient engine."""
import logging
from collections import namedtuple
from fractions import Fraction

from iterexpand.engine.engine_exceptions import InvalidSeriesSpec
from iterexpand.kernel import format_rational
from iterexpand.kernel import to_rational

#: symbolic scale marker: coefficients are stored reduced, a_m = r_m pi^(2m)
SCALE_PI_SQUARED = "pi^2"

#: rationale quoted whenever a_1 >= 0 is rejected
CONVERGENCE_RATIONALE = ("lim (f(x) - x) / x^(tau+1) = a_1 < 0 is required "
                         "for the iterates to decrease monotonically to 0")


class Convention(namedtuple('Convention', ('sigma', 'scale'))):
    """Map between the engine constant K and the reported constant C.

    C = sigma * K / scale. Formula (A) is sigma = +1, formula (B) is
    sigma = -1, and scale 2 covers the "2C" presentations.
    """

    __slots__ = ()

    def __new__(cls, sigma=1, scale=1):
        """Validate and build a Convention.

        :param int sigma: +1 or -1
        :param scale: positive rational
        """
        if sigma not in (1, -1):
            raise InvalidSeriesSpec("convention sigma must be +1 or -1, "
                                    "got %s" % sigma)
        scale = to_rational(scale)
        if scale <= 0:
            raise InvalidSeriesSpec("convention scale must be positive, "
                                    "got %s" % scale)
        return super().__new__(cls, sigma, scale)

    @property
    def formula(self):
        """'A' or 'B'."""
        return 'A' if self.sigma == 1 else 'B'

    @classmethod
    def from_formula(cls, formula='A', scale=1):
        """Build a Convention from a formula tag A|B."""
        if formula not in ('A', 'B'):
            raise InvalidSeriesSpec("formula tag must be A or B, got %r" %
                                    (formula, ))
        return cls(1 if formula == 'A' else -1, scale)

    def to_normalized_c(self, k_value):
        """sigma * K / scale, for an mpmath or rational K."""
        return self.sigma * k_value / self._scale_as(k_value)

    def from_normalized_c(self, c_value):
        """Inverse of :meth:`to_normalized_c`."""
        return self.sigma * c_value * self._scale_as(c_value)

    def _scale_as(self, value):
        """Scale in a type compatible with value."""
        if isinstance(value, (int, Fraction)):
            return self.scale
        return type(value)(self.scale.numerator) / self.scale.denominator


class SeriesSpec():
    """Identity of x + sum_m a_m x^(m tau + 1) for the engine.

    *Attributes:*

    * name: identifier of the map
    * tau: the gap between successive powers
    * a: tuple of exact a_1..a_K. When scale is SCALE_PI_SQUARED these
      are the reduced r_m with a_m = r_m pi^(2m).
    * scale: None or SCALE_PI_SQUARED
    * convention: Convention reporting K as the published C
    """

    def __init__(self, name, tau, a, scale=None, convention=None):
        """Init of SeriesSpec.

        :param str name: identifier
        :param int tau: gap, tau >= 1
        :param list a: coefficients a_1..a_K (K >= 2) as rationals or
                       "p/q" strings
        :param str scale: None or "pi^2"
        :param Convention convention: defaults to formula A, scale 1

        :raises InvalidSeriesSpec: when the series can not drive the engine
        """
        self.logger = logging.getLogger("iterexpand.engine.SeriesSpec")
        if not isinstance(tau, int) or isinstance(tau, bool) or tau < 1:
            raise InvalidSeriesSpec("tau must be an integer >= 1, got %r" %
                                    (tau, ))
        try:
            coefficients = tuple(to_rational(value) for value in a)
        except ValueError as exc:
            raise InvalidSeriesSpec("bad coefficient for %s: %s" % (name,
                                                                    exc))
        if len(coefficients) < 2:
            raise InvalidSeriesSpec("at least two coefficients a_1, a_2 are "
                                    "needed, got %s" % len(coefficients))
        if coefficients[0] >= 0:
            raise InvalidSeriesSpec("a_1 = %s rejected: %s" %
                                    (coefficients[0], CONVERGENCE_RATIONALE))
        if scale not in (None, SCALE_PI_SQUARED):
            raise InvalidSeriesSpec("unknown scale marker %r" % (scale, ))
        self.name = name
        self.tau = tau
        self.a = coefficients
        self.scale = scale
        self.convention = convention if convention is not None \
            else Convention()

    def __repr__(self):
        """Returns a string representing the spec."""
        return "SeriesSpec(%r, tau=%s, a=%s, scale=%r, convention=%r)" % (
            self.name, self.tau, [format_rational(v) for v in self.a],
            self.scale, tuple(self.convention))

    def __eq__(self, other):
        """Two specs are equal when every field is equal."""
        if not isinstance(other, SeriesSpec):
            return NotImplemented
        return (self.name, self.key, self.scale, self.convention) == \
            (other.name, other.key, other.scale, other.convention)

    def __hash__(self):
        """Hash of the identifying fields."""
        return hash((self.name, self.key, self.scale, self.convention))

    @property
    def key(self):
        """Memoization key (tau, a)."""
        return (self.tau, self.a)

    @property
    def order(self):
        """K, the number of supplied coefficients."""
        return len(self.a)

    @property
    def depth(self):
        """J = K - 1, the depth of every derived table."""
        return len(self.a) - 1

    def truncated(self, order):
        """Same spec restricted to a_1..a_order."""
        return SeriesSpec(self.name, self.tau, self.a[:order], self.scale,
                          self.convention)
