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
"""End-to-end derivation of the coefficient tables and their audits."""
import logging
import threading
from fractions import Fraction
from math import factorial

from iterexpand.engine.coefficients import CoeffSet
from iterexpand.engine.coefficients import compute_coefficients
from iterexpand.engine.polynomials import compute_polynomials

LOGGER = logging.getLogger("iterexpand.engine.derivation")

_MEMO = {}
_MEMO_LOCK = threading.Lock()


def derive_all(spec):
    """Derive (CoeffSet, PolySet) for a spec.

    Results are memoized on (tau, a). Two threads racing on the same key
    both compute, the first insert wins and both get the same tables.

    :param SeriesSpec spec: the series
    :rtype: tuple
    :raises InvalidSeriesSpec: propagated from validation
    """
    key = spec.key
    with _MEMO_LOCK:
        cached = _MEMO.get(key)
    if cached is None:
        LOGGER.debug("deriving tables for %s (tau=%s, K=%s)", spec.name,
                     spec.tau, spec.order)
        coeffs = compute_coefficients(spec)
        polys = compute_polynomials(spec, coeffs)
        with _MEMO_LOCK:
            cached = _MEMO.setdefault(key, (coeffs, polys))
    coeffs, polys = cached
    if coeffs.spec is not spec:
        # same tables, reported under the caller's identity
        coeffs = CoeffSet(spec, coeffs.lam, coeffs.b, coeffs.a0, coeffs.aij,
                          coeffs.c)
    return coeffs, polys


def clear_memo():
    """Forget every memoized derivation."""
    with _MEMO_LOCK:
        _MEMO.clear()


def differential_difference_defects(polys, b_1, tau):
    """Check P_(m+1)' = b_1 P_m' + (m tau + 1) P_m for 1 <= m <= J-1.

    :param PolySet polys: the tower
    :param Fraction b_1: first b coefficient
    :param int tau: the gap
    :returns: the m at which the identity fails (empty when it holds)
    :rtype: list of int
    """
    defects = []
    for m in range(1, polys.depth):
        left = polys.P[m + 1].derivative()
        right = b_1 * polys.P[m].derivative() + (m * tau + 1) * polys.P[m]
        if left != right:
            defects.append(m)
    return defects


def expected_leading(m, tau):
    """Leading coefficient of P_m: prod_(j=1..m-1) (j tau + 1) / m!."""
    product = Fraction(1)
    for j in range(1, m):
        product *= j * tau + 1
    return product / factorial(m)
