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
"""Tools module.

This modules contains some utility functions: safe parsing of real
arguments like "pi/2" and conversions between exact and mpmath values.
"""
import re
from fractions import Fraction

import mpmath

_ALLOWED = re.compile(r"^([0-9]|\+|\*|\/|\-|\.|\ |\(|\)|pi)+$")
_NUMBER = re.compile(r"[0-9]+(\.[0-9]*)?|\.[0-9]+")


def safe_eval_real(text_to_eval):
    """Small and safe eval function usable only for simple calculation.

    Only numbers, the basic operators, parenthesis and the symbol pi are
    accepted. Every number literal is read as an mpmath value, so "1/3"
    is computed at the current mpmath precision and never as a binary
    float.

    :param str text_to_eval: the text (formula) that should be evaluated

    :returns: the result of the calculation.
    :rtype: mpmath.mpf

    :raises ValueError: when given expression is not constitued of only
                        numbers and operators, or is incorrect
    """
    re_result = _ALLOWED.match(text_to_eval.strip())
    if re_result is None:
        raise ValueError("Only numbers, pi and simple operators (*+-/) "
                         "are allowed: %r" % text_to_eval)
    expression = _NUMBER.sub(lambda match: "mpf('%s')" % match.group(0),
                             re_result.group(0))
    try:
        # pylint: disable=eval-used
        value = eval(expression, {'__builtins__': None},
                     {'mpf': mpmath.mpf, 'pi': mpmath.pi})
    except (SyntaxError, TypeError, ZeroDivisionError) as exc:
        raise ValueError("cannot evaluate %r: %s" % (text_to_eval, exc))
    return mpmath.mpf(value)


def parse_real(value):
    """Convert a text, int, Fraction or mpf into an mpf.

    :rtype: mpmath.mpf
    :raises ValueError: for an unparsable text
    """
    if isinstance(value, str):
        return safe_eval_real(value)
    return to_mpf(value)


def to_mpf(value):
    """Exact conversion of an int or Fraction into an mpf.

    Values already in mpmath are rounded to the current precision.
    """
    if isinstance(value, Fraction):
        return mpmath.mpf(value.numerator) / value.denominator
    return mpmath.mpf(value)


def format_real(value, digits):
    """Decimal text of an mpf with `digits` significant digits."""
    return mpmath.nstr(value, digits, strip_zeros=False)


def agreeing_digits(first, second):
    """Number of leading decimal digits on which two values agree.

    The count is relative to the magnitude of the values: 1.2345 and
    1.2347 agree on 4 digits.

    :param mpmath.mpf first: a value
    :param mpmath.mpf second: another value
    :rtype: int
    """
    difference = abs(first - second)
    scale = max(abs(first), abs(second))
    if scale == 0:
        return mpmath.mp.dps
    if difference == 0:
        return mpmath.mp.dps
    exponent = mpmath.floor(mpmath.log10(scale)) + 1
    agreement = int(mpmath.floor(exponent - mpmath.log10(difference)))
    return max(0, min(agreement, mpmath.mp.dps))
