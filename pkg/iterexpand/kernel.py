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
"""Exact kernel.

Rational arithmetic and the combinatorial primitives consumed by every
coefficient formula of the engine:

* falling factorials t(t-1)...(t-k+1)
* multinomial coefficients
* the constrained index sets (k, m, s): all nonnegative (n_1, ..., n_k)
  with n_1 + 2 n_2 + ... + k n_k = m and n_1 + ... + n_k = m - s
"""
from fractions import Fraction
from functools import lru_cache
from math import factorial

#: exact scalar of the whole symbolic layer
Rational = Fraction


def to_rational(value):
    """Convert a value into an exact Rational.

    Strings must be of the form "p" or "p/q" with q > 0 and the fraction
    given in lowest terms: "2/4" is rejected, not silently reduced.

    :param value: int, Fraction or str
    :returns: the exact value
    :rtype: Fraction
    :raises ValueError: for floats, zero or negative denominators and
                        non-reduced fractions
    """
    if isinstance(value, bool):
        raise ValueError("booleans are not rationals: %r" % value)
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        numerator, slash, denominator = text.partition('/')
        try:
            num = int(numerator)
            den = int(denominator) if slash else 1
        except ValueError:
            raise ValueError("malformed rational: %r" % value)
        if den <= 0:
            raise ValueError("denominator must be positive: %r" % value)
        result = Fraction(num, den)
        if result.denominator != den:
            raise ValueError("rational not in lowest terms: %r" % value)
        return result
    raise ValueError("cannot convert %r to an exact rational" % (value, ))


def format_rational(value):
    """Serialize a Rational as "p/q" (or "p" for integers).

    :param Fraction value: the value
    :rtype: str
    """
    return str(Fraction(value))


def falling_factorial(t, k):
    """Falling factorial t (t-1) ... (t-k+1).

    Callers wanting (-t)_k pass -t.

    :param Fraction t: base value
    :param int k: number of factors, k >= 1
    :returns: the exact product
    :rtype: Fraction
    :raises ValueError: when k < 1
    """
    if k < 1:
        raise ValueError("falling factorial needs k >= 1, got %s" % k)
    base = Fraction(t)
    result = Fraction(1)
    for i in range(k):
        result *= base - i
    return result


def multinomial(top, parts):
    """Multinomial coefficient top! / (parts_1! ... parts_k!).

    :param int top: total
    :param parts: iterable of nonnegative ints summing to top
    :rtype: Fraction
    :raises ValueError: when the parts do not sum to top or are negative
    """
    parts = tuple(parts)
    if any(part < 0 for part in parts) or sum(parts) != top:
        raise ValueError("multinomial parts %s do not sum to %s" %
                         (parts, top))
    result = factorial(top)
    for part in parts:
        result //= factorial(part)
    return Fraction(result)


def _fill(index, k, weight, count):
    """Yield (n_index, ..., n_k) with weighted sum `weight` and `count` parts.

    Values are produced in lexicographic order.
    """
    if index == k:
        if k * count == weight:
            yield (count, )
        return
    for value in range(min(count, weight // index) + 1):
        for rest in _fill(index + 1, k, weight - index * value,
                          count - value):
            yield (value, ) + rest


@lru_cache(maxsize=None)
def _partitions(k, m, s):
    """Cached tuple form of :func:`partitions`."""
    count = m - s
    if count < 0 or m < 0:
        return ()
    return tuple(_fill(1, k, m, count))


def partitions(k, m, s):
    """All solutions of the constrained index set (k, m, s).

    :param int k: number of unknowns n_1..n_k, k >= 1
    :param int m: weighted sum n_1 + 2 n_2 + ... + k n_k
    :param int s: m minus the plain sum n_1 + ... + n_k
    :returns: solutions in lexicographic order, possibly empty
    :rtype: list of tuple
    :raises ValueError: when k < 1
    """
    if k < 1:
        raise ValueError("partitions need k >= 1, got %s" % k)
    return list(_partitions(k, m, s))


def constrained_sum(k, m, s, factors):
    """Sum over (k, m, s) of multinomial(m - s; n) * prod factors_i^n_i.

    factors may be Rationals or any ring element supporting * , ** and +
    with Rationals (RatPoly for instance). The empty sum is 0.

    :param int k: index range of the constrained set
    :param int m: weighted sum
    :param int s: defect of the plain sum
    :param list factors: factors[i - 1] is raised to n_i
    :returns: the sum (int 0 when the set is empty)
    :raises ValueError: when a solution uses an index with no factor
    """
    total = 0
    for solution in _partitions(k, m, s):
        if any(solution[len(factors):]):
            raise ValueError("index set (%s, %s, %s) needs %s factors, "
                             "only %s given" % (k, m, s, k, len(factors)))
        term = multinomial(m - s, solution)
        for factor, power in zip(factors, solution):
            if power:
                term = term * factor ** power
        total = total + term
    return total
