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
"""PowerSeries of the form x + sum_m a_m x^(m tau + 1).

Such a series is x phi(x^tau) with phi(t) = 1 + a_1 t + a_2 t^2 + ...
so composition and reversion are done on the block series phi.
"""
import logging
from fractions import Fraction

import mpmath

from iterexpand.engine.series_spec import SeriesSpec
from iterexpand.kernel import format_rational
from iterexpand.kernel import to_rational
from iterexpand.series import formal

ORIGIN_CLOSED_FORM = "closed-form"
ORIGIN_REVERTED = "reverted"
ORIGIN_KINDRED = "kindred-of(%s)"

LOGGER = logging.getLogger("iterexpand.series.power_series")


class PowerSeries():
    """Truncated series x + a_1 x^(tau+1) + ... + a_K x^(K tau+1).

    The unit linear term is implicit and never stored.

    *Attributes:*

    * tau: the gap
    * coeffs: tuple of Fraction a_1..a_K
    * origin: closed-form, reverted or kindred-of(name)
    * name: optional identifier
    """

    def __init__(self, tau, coeffs, origin=ORIGIN_CLOSED_FORM, name=None):
        """Init of PowerSeries.

        :param int tau: the gap, tau >= 1
        :param list coeffs: a_1..a_K
        :param str origin: how the coefficients were obtained
        :param str name: identifier
        """
        if tau < 1:
            raise ValueError("tau must be >= 1, got %s" % tau)
        self.tau = tau
        self.coeffs = tuple(to_rational(value) for value in coeffs)
        self.origin = origin
        self.name = name

    def __repr__(self):
        """Returns a string representing the series."""
        return "PowerSeries(tau=%s, %s, origin=%r)" % (
            self.tau, [format_rational(value) for value in self.coeffs],
            self.origin)

    def __eq__(self, other):
        """Series are equal when tau and coefficients are."""
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return (self.tau, self.coeffs) == (other.tau, other.coeffs)

    def __hash__(self):
        """Hash of (tau, coeffs)."""
        return hash((self.tau, self.coeffs))

    @property
    def order(self):
        """K, the number of stored coefficients."""
        return len(self.coeffs)

    def block(self, length=None):
        """phi as a formal series [1, a_1, ..., a_K] of the given length."""
        if length is None:
            length = self.order + 1
        return formal.truncate([Fraction(1)] + list(self.coeffs), length)

    def truncated(self, order):
        """Same series keeping a_1..a_order (zero padded)."""
        return PowerSeries(self.tau, self.block(order + 1)[1:], self.origin,
                           self.name)

    def __call__(self, x, theta=None):
        """Evaluate the truncated series at x.

        :param x: Fraction or mpmath number
        :param theta: when given, a_m is multiplied by theta^m
        """
        if isinstance(x, (int, Fraction)) and theta is None:
            block = sum(value * Fraction(x) ** (self.tau * m)
                        for m, value in enumerate(self.coeffs, 1))
            return Fraction(x) * (1 + block)
        t_value = x ** self.tau
        if theta is not None:
            t_value = t_value * theta
        block = mpmath.mpf(0)
        for value in reversed(self.coeffs):
            block = (block + mpmath.mpf(value.numerator) /
                     value.denominator) * t_value
        return x * (1 + block)

    def to_spec(self, name=None, scale=None, convention=None):
        """SeriesSpec driving the engine with these coefficients."""
        return SeriesSpec(name or self.name or "series", self.tau,
                          self.coeffs, scale, convention)

    @classmethod
    def from_spec(cls, spec):
        """PowerSeries carrying the coefficients of a SeriesSpec."""
        return cls(spec.tau, spec.a, ORIGIN_CLOSED_FORM, spec.name)


def identity_series(tau, order):
    """The identity x as a PowerSeries of the given order."""
    return PowerSeries(tau, [0] * order, ORIGIN_CLOSED_FORM, "identity")


def compose_series(outer, inner, order=None):
    """outer(inner(x)) truncated to order K.

    With inner = x phi_i(t), t = x^tau:
    outer(inner) = x phi_i(t) phi_o(t phi_i(t)^tau).

    :param PowerSeries outer: applied last
    :param PowerSeries inner: applied first
    :param int order: K, defaults to the smallest order of the two
    :rtype: PowerSeries
    :raises ValueError: when the gaps differ
    """
    if outer.tau != inner.tau:
        raise ValueError("cannot compose series with gaps %s and %s" %
                         (outer.tau, inner.tau))
    if order is None:
        order = min(outer.order, inner.order)
    length = order + 1
    phi_inner = inner.block(length)
    argument = [Fraction(0)] + formal.power(phi_inner, inner.tau,
                                            length)[:order]
    phi_outer = formal.compose(outer.block(length), argument, length)
    result = formal.multiply(phi_inner, phi_outer, length)
    return PowerSeries(outer.tau, result[1:], ORIGIN_CLOSED_FORM)


def revert_series(series, order=None):
    """Compositional inverse by Lagrange inversion.

    The inverse of x phi(x^tau) is y psi(y^tau) with
    psi_m = [t^m] phi(t)^-(m tau + 1) / (m tau + 1).

    :param PowerSeries series: the series to invert
    :param int order: K, defaults to the series order
    :rtype: PowerSeries
    """
    if order is None:
        order = series.order
    tau = series.tau
    phi = series.block(order + 1)
    coeffs = []
    for m in range(1, order + 1):
        exponent = m * tau + 1
        coeffs.append(formal.power(phi, -exponent, m + 1)[m] / exponent)
    LOGGER.debug("reverted %s to order %s", series.name, order)
    return PowerSeries(tau, coeffs, ORIGIN_REVERTED, series.name)


def kindred_of(series, order=None, name=None):
    """Kindred partner: revert, then flip the sign of every odd block.

    g_m = (-1)^m revert(series)_m

    :param PowerSeries series: the series
    :param int order: K, defaults to the series order
    :param str name: name given to the partner
    :rtype: PowerSeries
    """
    reverted = revert_series(series, order)
    coeffs = [value if m % 2 == 0 else -value
              for m, value in enumerate(reverted.coeffs, 1)]
    return PowerSeries(series.tau, coeffs,
                       ORIGIN_KINDRED % (series.name or "series"), name)
