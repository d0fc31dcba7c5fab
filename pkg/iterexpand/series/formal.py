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
"""Truncated formal power series over the rationals.

A series is a list of Fractions, index = power, truncated to a length
given by the caller.
"""
from fractions import Fraction


def truncate(series, length):
    """Pad with zeros or cut so that len(result) == length."""
    values = [Fraction(value) for value in series[:length]]
    return values + [Fraction(0)] * (length - len(values))


def add(left, right, length):
    """left + right modulo t^length."""
    left = truncate(left, length)
    right = truncate(right, length)
    return [x + y for x, y in zip(left, right)]


def multiply(left, right, length):
    """left * right modulo t^length."""
    left = truncate(left, length)
    right = truncate(right, length)
    product = [Fraction(0)] * length
    for i, x in enumerate(left):
        if x == 0:
            continue
        for j in range(length - i):
            product[i + j] += x * right[j]
    return product


def power(series, exponent, length):
    """series^exponent modulo t^length, for series[0] == 1.

    Uses the recurrence g_k = (1/k) sum_(j=1..k) ((e+1) j - k) h_j g_(k-j)
    valid for any rational exponent e.

    :raises ValueError: when the constant term is not 1
    """
    h = truncate(series, length)
    if length and h[0] != 1:
        raise ValueError("power needs a unit constant term, got %s" % h[0])
    exponent = Fraction(exponent)
    g = [Fraction(0)] * length
    if length:
        g[0] = Fraction(1)
    for k in range(1, length):
        total = Fraction(0)
        for j in range(1, k + 1):
            if h[j]:
                total += ((exponent + 1) * j - k) * h[j] * g[k - j]
        g[k] = total / k
    return g


def log(series, length):
    """log(series) modulo t^length, for series[0] == 1.

    k L_k = k h_k - sum_(j=1..k-1) j L_j h_(k-j)

    :raises ValueError: when the constant term is not 1
    """
    h = truncate(series, length)
    if length and h[0] != 1:
        raise ValueError("log needs a unit constant term, got %s" % h[0])
    result = [Fraction(0)] * length
    for k in range(1, length):
        total = k * h[k]
        for j in range(1, k):
            total -= j * result[j] * h[k - j]
        result[k] = total / k
    return result


def divide(numerator, denominator, length):
    """numerator / denominator modulo t^length.

    :raises ZeroDivisionError: when the denominator has no constant term
    """
    num = truncate(numerator, length)
    den = truncate(denominator, length)
    if den[0] == 0:
        raise ZeroDivisionError("series division by a series without "
                                "constant term")
    quotient = [Fraction(0)] * length
    for k in range(length):
        total = num[k]
        for j in range(1, k + 1):
            total -= den[j] * quotient[k - j]
        quotient[k] = total / den[0]
    return quotient


def compose(outer, inner, length):
    """outer(inner(t)) modulo t^length, for inner[0] == 0.

    :raises ValueError: when inner has a constant term
    """
    if not length:
        return []
    inner = truncate(inner, length)
    if inner[0] != 0:
        raise ValueError("composition needs inner(0) = 0")
    outer = truncate(outer, length)
    result = [Fraction(0)] * length
    for coefficient in reversed(outer):
        result = multiply(result, inner, length)
        result[0] += coefficient
    return result
