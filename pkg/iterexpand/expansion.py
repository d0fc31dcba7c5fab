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
"""Asymptotic expansion of the iterates x_n of a map.

    x_n ~ (lambda / n)^(1/tau) (1 + sum_(m>=1) P_m(X_n) / n^m)
    X_n = -(b_1 ln(n) + K) / tau

Substituting X_n in every P_m and collecting the powers of ln(n) gives a
table of exact polynomials in the constant K, one per (m, p):

    x_n ~ (lambda / theta)^(1/tau) sum_(m, p) poly_(m,p)(K) ln(n)^p
          / n^(m + 1/tau)

theta is pi^2 for the scaled (Fresnel) families, 1 otherwise.
"""
import logging
from fractions import Fraction
from math import ceil
from math import comb
from math import inf

import mpmath

from iterexpand import settings
from iterexpand.engine.engine_exceptions import DepthExceeded
from iterexpand.engine.series_spec import Convention
from iterexpand.engine.series_spec import SCALE_PI_SQUARED
from iterexpand.kernel import format_rational
from iterexpand.kernel import to_rational
from iterexpand.ratpoly import RatPoly
from iterexpand.series.series_exceptions import PrecisionLoss
from iterexpand.tools import to_mpf

LOGGER = logging.getLogger("iterexpand.expansion")


class AsymptoticExpansion():
    """Exact term table of the expansion of x_n.

    *Attributes:*

    * name: the map's name
    * tau: the gap
    * lam: lambda of the (reduced) coefficients
    * scale: None or "pi^2" (prefactor divided by theta^(1/tau))
    * convention: Convention reporting K as the published C
    * b_1: first b coefficient (kept for the first order seed)
    * terms: dict {(m, p): RatPoly in K} for 0 <= p <= m <= J
    """

    # pylint: disable=too-many-arguments
    def __init__(self, name, tau, lam, terms, scale=None, convention=None,
                 b_1=None):
        """Init of AsymptoticExpansion."""
        self.name = name
        self.tau = tau
        self.lam = to_rational(lam)
        self.scale = scale
        self.convention = convention if convention is not None \
            else Convention()
        self.terms = dict(terms)
        if b_1 is None:
            # the (1, 1) term is -b_1 / tau
            b_1 = -self.tau * self.term(1, 1).coefficient(0)
        self.b_1 = to_rational(b_1)

    def __repr__(self):
        """Returns a string representing the expansion."""
        return "AsymptoticExpansion(%r, tau=%s, J=%s)" % (self.name,
                                                          self.tau,
                                                          self.order)

    def __eq__(self, other):
        """Same map parameters and same term table."""
        if not isinstance(other, AsymptoticExpansion):
            return NotImplemented
        return (self.tau, self.lam, self.scale, tuple(self.convention),
                self.terms) == (other.tau, other.lam, other.scale,
                                tuple(other.convention), other.terms)

    @property
    def order(self):
        """J, the largest m of the table."""
        return max(m for m, _ in self.terms)

    def term(self, m, p):
        """Polynomial in K of ln(n)^p / n^(m + 1/tau) (0 when absent)."""
        return self.terms.get((m, p), RatPoly())

    def ordered_terms(self):
        """[(m, p, poly)] with m ascending and p descending."""
        return [(m, p, self.terms[(m, p)])
                for m in range(self.order + 1)
                for p in range(m, -1, -1) if (m, p) in self.terms]

    def exponent(self, m):
        """Exponent m + 1/tau of n in the m-th block."""
        return m + Fraction(1, self.tau)

    def prefactor(self):
        """(lambda / theta)^(1/tau) at the current mpmath precision."""
        value = to_mpf(self.lam)
        if self.scale == SCALE_PI_SQUARED:
            value = value / mpmath.pi ** 2
        return mpmath.root(value, self.tau)

    def in_normalized_c(self, m, p):
        """Polynomial of the (m, p) term in the published constant C.

        With K = sigma scale C, poly_C(C) = poly_K(sigma scale C).
        """
        factor = self.convention.sigma * self.convention.scale
        return self.term(m, p).scale_argument(factor)


def folds_prefactor(expansion):
    """True when (lambda/theta)^(1/tau) is rational and goes in the terms."""
    return expansion.tau == 1 and expansion.scale is None


def displayed_terms(expansion):
    """{(m, p): polynomial in C} as printed.

    The prefactor lambda is multiplied in when tau = 1 and the map is not
    scaled; otherwise it stays in front of the sum.
    """
    factor = expansion.lam if folds_prefactor(expansion) else 1
    return {(m, p): expansion.in_normalized_c(m, p) * factor
            for m, p, _ in expansion.ordered_terms()}


def assemble(coeffs, polys, order=None):
    """Build the expansion from derived tables.

    :param CoeffSet coeffs: the coefficients (carries the spec)
    :param PolySet polys: the polynomial tower
    :param int order: J, defaults to the full depth
    :rtype: AsymptoticExpansion
    :raises DepthExceeded: when order is beyond the tower
    """
    spec = coeffs.spec
    available = polys.depth
    if order is None:
        order = available
    if order < 0 or order > available:
        raise DepthExceeded(order, available)
    tau = spec.tau
    b_1 = coeffs.b[0]
    alpha = -b_1 / tau
    beta = Fraction(-1, tau)
    terms = {}
    for m in range(order + 1):
        poly = polys.P[m]
        for p in range(m + 1):
            k_coeffs = [Fraction(0)] * (m - p + 1)
            for degree in range(p, poly.degree + 1):
                value = poly.coefficient(degree)
                if value == 0:
                    continue
                d = degree - p
                k_coeffs[d] += value * comb(degree, p) * alpha ** p * \
                    beta ** d
            terms[(m, p)] = RatPoly(k_coeffs)
    LOGGER.debug("assembled %s to order %s", spec.name, order)
    return AsymptoticExpansion(spec.name, tau, coeffs.lam, terms, spec.scale,
                               spec.convention, b_1)


def _series_value(expansion, n, k_value, derivative=False, absolute=False):
    """sum_(m, p) poly(K) ln(n)^p / n^m, or its K derivative.

    With absolute, the sum of the magnitudes of the terms.
    """
    log_n = mpmath.log(n)
    inverse_n = mpmath.mpf(1) / n
    total = mpmath.mpf(0)
    for m in range(expansion.order, -1, -1):
        block = mpmath.mpf(0)
        for p in range(m, -1, -1):
            poly = expansion.term(m, p)
            if derivative:
                poly = poly.derivative()
            value = poly.evaluate_mpf(k_value)
            if absolute:
                value = abs(value)
            block = block * log_n + value
        total = total * inverse_n + block
    return total


def _lost_digits(expansion, n, k_value):
    """Digits lost to cancellation in the expansion sum at (n, K)."""
    total = abs(_series_value(expansion, n, k_value))
    size = _series_value(expansion, n, k_value, absolute=True)
    if size == 0:
        return 0
    if total == 0:
        return inf
    return max(0, int(ceil(mpmath.log10(size / total))))


def evaluate_at(expansion, n, k_value, digits):
    """Numeric value of the truncated expansion at (n, K).

    :param AsymptoticExpansion expansion: the table
    :param int n: index, n >= 2
    :param k_value: the constant K (mpf, Fraction or int)
    :param int digits: decimal digits of the result
    :rtype: mpmath.mpf
    :raises ValueError: when n < 2
    :raises PrecisionLoss: when the terms cancel on more than
                           settings.EVALUATION_MAX_LOST_DIGITS digits
    """
    if n < 2:
        raise ValueError("the expansion is evaluated for n >= 2, got %s" %
                         n)
    guard = settings.EVALUATION_GUARD_DIGITS
    with mpmath.workdps(digits + guard):
        lost = _lost_digits(expansion, n, to_mpf(k_value))
    if lost > settings.EVALUATION_MAX_LOST_DIGITS:
        raise PrecisionLoss("the expansion terms cancel on %s digits at "
                            "n=%s" % (lost, n))
    with mpmath.workdps(digits + guard + (lost if lost > guard else 0)):
        value = expansion.prefactor() * mpmath.root(n, expansion.tau) ** -1 \
            * _series_value(expansion, n, to_mpf(k_value))
    with mpmath.workdps(digits):
        return +value


def evaluate_derivative(expansion, n, k_value):
    """d/dK of the truncated expansion, at the current precision."""
    return expansion.prefactor() / mpmath.root(n, expansion.tau) * \
        _series_value(expansion, n, to_mpf(k_value), derivative=True)


def to_normalized_c(k_value, convention):
    """sigma K / scale."""
    return convention.to_normalized_c(k_value)


def from_normalized_c(c_value, convention):
    """Engine constant K of a published constant C."""
    return convention.from_normalized_c(c_value)


def fresnel_kappa():
    """kappa = sqrt(5/8) / pi, the Fresnel normalization x_n / sqrt(kappa).

    2 sqrt(kappa) = (10 / pi^2)^(1/4), the prefactor of the Fresnel
    expansion.
    """
    return mpmath.sqrt(mpmath.mpf(5) / 8) / mpmath.pi


def block_sign(poly):
    """Sign of the highest-degree nonzero coefficient (0 for 0)."""
    if poly.is_zero():
        return 0
    return 1 if poly.leading > 0 else -1


class KindredReport():
    """Outcome of the comparison of two kindred expansions.

    *Attributes:*

    * mismatches: list of (m, p, degree, f coefficient, g coefficient)
    * signs_f, signs_g: {(m, p): sign of the block in the published C}
    """

    def __init__(self, mismatches, signs_f, signs_g):
        """Init of KindredReport."""
        self.mismatches = mismatches
        self.signs_f = signs_f
        self.signs_g = signs_g

    @property
    def matched(self):
        """True when every magnitude matched."""
        return not self.mismatches

    @staticmethod
    def describe(signs):
        """'all positive', 'alternating by m' or 'mixed'."""
        nonzero = {key: sign for key, sign in signs.items() if sign}
        if all(sign > 0 for sign in nonzero.values()):
            return "all positive"
        if all(sign == (-1) ** m for (m, _), sign in nonzero.items()):
            return "alternating by m"
        return "mixed"


def kindred_compare(ef, eg):
    """Compare two expansions term by term under K -> -K.

    Magnitudes of every coefficient of every (m, p, K-degree) must be
    equal. Block signs are reported in each map's published convention.

    :param AsymptoticExpansion ef: expansion of f
    :param AsymptoticExpansion eg: expansion of the kindred partner
    :rtype: KindredReport
    :raises ValueError: when tau or J differ
    """
    if ef.tau != eg.tau or ef.order != eg.order:
        raise ValueError("kindred comparison needs the same tau and order "
                         "(%s, %s) vs (%s, %s)" % (ef.tau, ef.order, eg.tau,
                                                   eg.order))
    mismatches = []
    signs_f = {}
    signs_g = {}
    for m, p, poly_f in ef.ordered_terms():
        poly_g = eg.term(m, p).scale_argument(-1)
        for degree in range(max(poly_f.degree, poly_g.degree) + 1):
            left = poly_f.coefficient(degree)
            right = poly_g.coefficient(degree)
            if abs(left) != abs(right):
                mismatches.append((m, p, degree, left, right))
        signs_f[(m, p)] = block_sign(ef.in_normalized_c(m, p))
        signs_g[(m, p)] = block_sign(eg.in_normalized_c(m, p))
    return KindredReport(mismatches, signs_f, signs_g)


def scale_tag(expansion):
    """Scale field: "none", or the power of pi in theta^(-1/tau).

    The Fresnel family (theta = pi^2, tau = 4) reads "pi^-1/2".
    """
    if expansion.scale != SCALE_PI_SQUARED:
        return "none"
    return "pi^-%s" % format_rational(Fraction(2, expansion.tau))


def _scale_from_tag(tag, tau):
    """Inverse of :func:`scale_tag`."""
    if tag == "none":
        return None
    if tag == "pi^-%s" % format_rational(Fraction(2, tau)):
        return SCALE_PI_SQUARED
    raise ValueError("unknown scale %r for tau = %s" % (tag, tau))


def expansion_to_dict(expansion):
    """JSON-ready term table.

    Rationals are "p/q" strings; terms are in (m ascending, p descending)
    order.
    """
    return {
        'function': expansion.name,
        'tau': expansion.tau,
        'lambda': format_rational(expansion.lam),
        'scale': scale_tag(expansion),
        'sigma': expansion.convention.sigma,
        'c_scale': format_rational(expansion.convention.scale),
        'b_1': format_rational(expansion.b_1),
        'order': expansion.order,
        'terms': [{'m': m, 'p': p, 'poly': poly.to_strings()}
                  for m, p, poly in expansion.ordered_terms()],
    }


def expansion_from_dict(document):
    """Inverse of :func:`expansion_to_dict`.

    :raises ValueError: on a malformed document
    """
    try:
        tau = int(document['tau'])
        terms = {(int(term['m']), int(term['p'])):
                 RatPoly.from_strings(term['poly'])
                 for term in document['terms']}
        return AsymptoticExpansion(
            document['function'], tau,
            to_rational(document['lambda']), terms,
            _scale_from_tag(document['scale'], tau),
            Convention(int(document['sigma']),
                       to_rational(document.get('c_scale', "1"))),
            to_rational(document['b_1']) if 'b_1' in document else None)
    except (KeyError, TypeError) as exc:
        raise ValueError("malformed expansion document: %s" % exc)
