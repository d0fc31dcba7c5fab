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
"""RatPoly: dense univariate polynomials over the rationals.

Houses the T, T~ and P towers and the K-polynomials of an expansion.
"""
from fractions import Fraction
from numbers import Rational as _RationalABC

import mpmath

from iterexpand.kernel import format_rational
from iterexpand.kernel import to_rational


class RatPoly():
    """Dense polynomial with exact rational coefficients.

    *Attributes:*

    * coeffs: tuple of Fraction, coeffs[i] is the coefficient of X^i.
      Trailing zeros are stripped, so the zero polynomial has no
      coefficient at all and the leading coefficient is never 0.
    """

    __slots__ = ('coeffs', )

    def __init__(self, coeffs=()):
        """Init of RatPoly.

        :param coeffs: iterable of rationals (or "p/q" strings), lowest
                       degree first
        """
        values = [to_rational(value) for value in coeffs]
        while values and values[-1] == 0:
            values.pop()
        self.coeffs = tuple(values)

    @classmethod
    def x(cls):
        """The polynomial X."""
        return cls((0, 1))

    @classmethod
    def coerce(cls, value):
        """Return value as a RatPoly (rationals become constants)."""
        if isinstance(value, RatPoly):
            return value
        return cls((value, ))

    @classmethod
    def from_strings(cls, strings):
        """Build a polynomial from a list of "p/q" strings."""
        return cls(strings)

    def to_strings(self):
        """Serialize the coefficients as "p/q" strings, lowest degree first.

        The zero polynomial serializes as ["0"].
        """
        if not self.coeffs:
            return ["0"]
        return [format_rational(value) for value in self.coeffs]

    @property
    def degree(self):
        """Degree of the polynomial, -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self):
        """Leading coefficient (0 for the zero polynomial)."""
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    def is_zero(self):
        """True for the zero polynomial."""
        return not self.coeffs

    def coefficient(self, degree):
        """Coefficient of X^degree (0 above the degree)."""
        if 0 <= degree < len(self.coeffs):
            return self.coeffs[degree]
        return Fraction(0)

    def __repr__(self):
        """Returns a string representing the polynomial."""
        return "RatPoly(%s)" % self.to_strings()

    def __str__(self):
        """Human readable form, highest degree first, e.g. X^2 + X + 1/2."""
        return self.format('X')

    def format(self, variable='X', multiply='*'):
        """Human readable form using the given variable name.

        :param str variable: name printed for the indeterminate
        :param str multiply: separator between coefficient and variable
        :rtype: str
        """
        if not self.coeffs:
            return "0"
        pieces = []
        for degree in range(self.degree, -1, -1):
            value = self.coeffs[degree]
            if value == 0:
                continue
            sign = '-' if value < 0 else '+'
            magnitude = abs(value)
            if degree == 0:
                body = format_rational(magnitude)
            else:
                power = variable if degree == 1 else "%s^%s" % (variable,
                                                               degree)
                if magnitude == 1:
                    body = power
                else:
                    body = "%s%s%s" % (format_rational(magnitude), multiply,
                                       power)
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        text = first_body if first_sign == '+' else '-' + first_body
        for sign, body in pieces[1:]:
            text += " %s %s" % (sign, body)
        return text

    def __eq__(self, other):
        """Exact equality, rationals compare as constant polynomials."""
        if isinstance(other, (int, _RationalABC)):
            other = RatPoly.coerce(other)
        if not isinstance(other, RatPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        """Hash of the coefficient tuple."""
        return hash(self.coeffs)

    def __neg__(self):
        """Returns -P."""
        return RatPoly(-value for value in self.coeffs)

    def __add__(self, other):
        """Returns P + Q, Q being a RatPoly or a rational."""
        if not isinstance(other, RatPoly):
            try:
                other = RatPoly.coerce(to_rational(other))
            except ValueError:
                return NotImplemented
        size = max(len(self.coeffs), len(other.coeffs))
        return RatPoly(self.coefficient(i) + other.coefficient(i)
                       for i in range(size))

    __radd__ = __add__

    def __sub__(self, other):
        """Returns P - Q."""
        if not isinstance(other, RatPoly):
            try:
                other = RatPoly.coerce(to_rational(other))
            except ValueError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        """Returns Q - P."""
        return (-self) + other

    def __mul__(self, other):
        """Returns P * Q, Q being a RatPoly or a rational."""
        if not isinstance(other, RatPoly):
            try:
                scalar = to_rational(other)
            except ValueError:
                return NotImplemented
            return RatPoly(value * scalar for value in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return RatPoly()
        product = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, left in enumerate(self.coeffs):
            if left == 0:
                continue
            for j, right in enumerate(other.coeffs):
                product[i + j] += left * right
        return RatPoly(product)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        """Returns P ** exponent for a nonnegative integer exponent."""
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        result = RatPoly((1, ))
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def __call__(self, value):
        """Evaluate by Horner's rule at an exact value.

        :param value: int, Fraction or RatPoly (composition)
        """
        result = 0
        for coefficient in reversed(self.coeffs):
            result = result * value + coefficient
        return result

    def evaluate_mpf(self, value):
        """Evaluate by Horner's rule at an mpmath number.

        Coefficients are converted at the current mpmath precision.

        :param mpmath.mpf value: the argument
        :rtype: mpmath.mpf
        """
        result = mpmath.mpf(0)
        for coefficient in reversed(self.coeffs):
            result = result * value + (mpmath.mpf(coefficient.numerator) /
                                       coefficient.denominator)
        return result

    def scale_argument(self, factor):
        """Returns P(factor * X)."""
        factor = to_rational(factor)
        return RatPoly(value * factor ** degree
                       for degree, value in enumerate(self.coeffs))

    def derivative(self):
        """Returns dP/dX."""
        return RatPoly(degree * value
                       for degree, value in enumerate(self.coeffs)
                       if degree > 0)
