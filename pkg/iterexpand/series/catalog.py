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
"""Catalog of the twelve maps with an attracting fixed point at 0.

Each entry carries an exact Taylor generator, a high precision evaluator
of the true function and the convention used to report its constant.

The six kindred pairs are (logistic, radical), (log, exp), (sin,
arcsinh), (arctan, tanh), (fresnel, fresnel-kindred) and (lambertw, z).
"""
import logging
from collections import OrderedDict
from fractions import Fraction
from math import comb
from math import factorial

import mpmath

from iterexpand import settings
from iterexpand.engine.series_spec import Convention
from iterexpand.engine.series_spec import SCALE_PI_SQUARED
from iterexpand.series import formal
from iterexpand.series.power_series import kindred_of
from iterexpand.series.power_series import PowerSeries
from iterexpand.series.series_exceptions import DomainViolation
from iterexpand.series.series_exceptions import PrecisionLoss
from iterexpand.series.series_exceptions import UnknownFunction
from iterexpand.tools import parse_real
from iterexpand.tools import to_mpf

LOGGER = logging.getLogger("iterexpand.series.catalog")


# ======== exact generators: order K -> [a_1, ..., a_K] ========
def _logistic(order):
    """x (1 - x)."""
    return [Fraction(-1)] + [Fraction(0)] * (order - 1)


def _radical(order):
    """(sqrt(1 + 4x) - 1) / 2, signed Catalan numbers."""
    return [Fraction((-1) ** m * comb(2 * m, m), m + 1)
            for m in range(1, order + 1)]


def _log(order):
    """ln(1 + x)."""
    return [Fraction((-1) ** m, m + 1) for m in range(1, order + 1)]


def _exp(order):
    """1 - exp(-x)."""
    return [Fraction((-1) ** m, factorial(m + 1))
            for m in range(1, order + 1)]


def _sin(order):
    """sin(x)."""
    return [Fraction((-1) ** m, factorial(2 * m + 1))
            for m in range(1, order + 1)]


def _arcsinh(order):
    """arcsinh(x)."""
    return [Fraction((-1) ** m * factorial(2 * m),
                     4 ** m * factorial(m) ** 2 * (2 * m + 1))
            for m in range(1, order + 1)]


def _arctan(order):
    """arctan(x)."""
    return [Fraction((-1) ** m, 2 * m + 1) for m in range(1, order + 1)]


def _tanh(order):
    """tanh(x) as the series quotient (sinh(x) / x) / cosh(x) in x^2."""
    length = order + 1
    sinh_over_x = [Fraction(1, factorial(2 * k + 1)) for k in range(length)]
    cosh = [Fraction(1, factorial(2 * k)) for k in range(length)]
    return formal.divide(sinh_over_x, cosh, length)[1:]


def _fresnel(order):
    """Fresnel C(x) = int_0^x cos(pi t^2 / 2) dt, reduced by pi^(2m)."""
    return [Fraction((-1) ** m, 4 ** m * factorial(2 * m) * (4 * m + 1))
            for m in range(1, order + 1)]


def _fresnel_kindred(order):
    """Kindred partner of the Fresnel integral, reduced by pi^(2m)."""
    return list(kindred_of(PowerSeries(4, _fresnel(order), name="fresnel"),
                           order).coeffs)


def _lambertw(order):
    """Lambert W: sum (-n)^(n-1) x^n / n!."""
    return [Fraction((-(m + 1)) ** m, factorial(m + 1))
            for m in range(1, order + 1)]


def _z(order):
    """x exp(-x)."""
    return [Fraction((-1) ** m, factorial(m)) for m in range(1, order + 1)]


# ======== evaluators: mpf -> mpf at the current mpmath precision ========
def _evaluate_radical(x):
    """2x / (1 + sqrt(1 + 4x)), free of cancellation near 0."""
    return 2 * x / (1 + mpmath.sqrt(1 + 4 * x))


def _evaluate_exp(x):
    """1 - exp(-x) through expm1."""
    return -mpmath.expm1(-x)


def _evaluate_lambertw(x):
    """Principal branch of W on the positive axis."""
    return mpmath.re(mpmath.lambertw(x))


class ReversedSeriesEvaluator():
    """Evaluate a series known only through its exact coefficients.

    The order is extended until the last term at the current argument is
    below the working precision and smaller than the one before. Used
    for the Fresnel kindred map, which has no closed form.
    """

    def __init__(self, generator, tau, scaled):
        """Init of ReversedSeriesEvaluator.

        :param generator: order K -> exact reduced coefficients
        :param int tau: the gap
        :param bool scaled: True when a_m = r_m pi^(2m)
        """
        self.logger = logging.getLogger(
            "iterexpand.series.catalog.ReversedSeriesEvaluator")
        self.generator = generator
        self.tau = tau
        self.scaled = scaled
        self._exact = {}
        self._numeric = {}

    def _coefficients(self, order):
        """a_1..a_order as mpf at the current precision."""
        key = (order, mpmath.mp.dps)
        if key not in self._numeric:
            if order not in self._exact:
                self.logger.debug("generating %s reverted coefficients",
                                  order)
                self._exact[order] = self.generator(order)
            theta = mpmath.pi ** 2 if self.scaled else mpmath.mpf(1)
            self._numeric[key] = [to_mpf(value) * theta ** m for m, value
                                  in enumerate(self._exact[order], 1)]
        return self._numeric[key]

    def __call__(self, x):
        """Evaluate at x.

        :raises PrecisionLoss: when the cap order is not enough
        """
        epsilon = mpmath.mpf(10) ** (-mpmath.mp.dps)
        t_value = x ** self.tau
        order = settings.KINDRED_SERIES_MIN_ORDER
        while True:
            coeffs = self._coefficients(order)
            last = abs(coeffs[-1] * t_value ** order)
            before = abs(coeffs[-2] * t_value ** (order - 1))
            if last < epsilon and last < before:
                block = mpmath.mpf(0)
                for value in reversed(coeffs):
                    block = (block + value) * t_value
                return x * (1 + block)
            if order >= settings.KINDRED_SERIES_MAX_ORDER:
                raise PrecisionLoss(
                    "reverted series does not converge fast enough at "
                    "x=%s with %s terms" % (mpmath.nstr(x, 10), order))
            order = min(2 * order, settings.KINDRED_SERIES_MAX_ORDER)


class CatalogEntry():
    """One catalog function.

    *Attributes:*

    * name: identifier used on the command line
    * title: human readable formula
    * tau: the gap
    * generator: order K -> exact [a_1..a_K] (reduced when scaled)
    * default_order: K used unless told otherwise
    * evaluator: mpf -> mpf true function at the current precision
    * convention: Convention turning K into the published C
    * scale: None or SCALE_PI_SQUARED
    * default_x0: text of the default initial value (e.g. "pi/2")
    * upper: text of the largest accepted argument, or None
    * kindred: name of the kindred partner
    * table_sign: sign between the C of the expansion and the tabulated
      constant (-1 when the table prints -C)
    * note: remark shown next to estimates, or None
    """

    # pylint: disable=too-many-instance-attributes, too-many-arguments
    def __init__(self, name, title, tau, generator, evaluator, convention,
                 default_x0, kindred, default_order=7, scale=None,
                 upper=None, table_sign=1, note=None):
        """Init of CatalogEntry."""
        self.name = name
        self.title = title
        self.tau = tau
        self.generator = generator
        self.evaluator = evaluator
        self.convention = convention
        self.default_x0 = default_x0
        self.kindred = kindred
        self.default_order = default_order
        self.scale = scale
        self.upper = upper
        self.table_sign = table_sign
        self.note = note

    def __repr__(self):
        """Returns a string representing the entry."""
        return "CatalogEntry(%r, tau=%s, formula=%s)" % (
            self.name, self.tau, self.convention.formula)

    def series(self, order=None):
        """Exact PowerSeries of order K (default order when None)."""
        if order is None:
            order = self.default_order
        return PowerSeries(self.tau, self.generator(order), name=self.name)

    def spec(self, order=None):
        """SeriesSpec driving the engine."""
        return self.series(order).to_spec(self.name, self.scale,
                                          self.convention)

    def check_argument(self, x):
        """Check 0 < x <= upper.

        :raises DomainViolation: outside the declared domain
        """
        if not x > 0:
            raise DomainViolation("%s needs a positive argument, got %s" %
                                  (self.name, mpmath.nstr(x, 15)))
        if self.upper is not None and x > parse_real(self.upper):
            raise DomainViolation("%s needs an argument <= %s, got %s" %
                                  (self.name, self.upper,
                                   mpmath.nstr(x, 15)))

    def evaluate(self, x):
        """True function at x, at the current mpmath precision."""
        return self.evaluator(x)


_FORMULA_A = Convention(1, 1)
_FORMULA_B = Convention(-1, 1)

CATALOG = OrderedDict((entry.name, entry) for entry in (
    CatalogEntry("logistic", "x (1 - x)", 1, _logistic,
                 lambda x: x * (1 - x), _FORMULA_A, "1/2", "radical",
                 upper="1"),
    CatalogEntry("radical", "(sqrt(1 + 4x) - 1) / 2", 1, _radical,
                 _evaluate_radical, _FORMULA_B, "1/2", "logistic"),
    CatalogEntry("log", "ln(1 + x)", 1, _log, mpmath.log1p,
                 Convention(1, 2), "1/2", "exp"),
    CatalogEntry("exp", "1 - exp(-x)", 1, _exp, _evaluate_exp,
                 Convention(-1, 2), "1/2", "log"),
    CatalogEntry("sin", "sin(x)", 2, _sin, mpmath.sin, _FORMULA_A, "pi/2",
                 "arcsinh", upper="pi"),
    CatalogEntry("arcsinh", "arcsinh(x)", 2, _arcsinh, mpmath.asinh,
                 _FORMULA_B, "1", "sin"),
    CatalogEntry("arctan", "arctan(x)", 2, _arctan, mpmath.atan,
                 _FORMULA_B, "1", "tanh"),
    CatalogEntry("tanh", "tanh(x)", 2, _tanh, mpmath.tanh, _FORMULA_A,
                 "1/2", "arctan"),
    CatalogEntry("fresnel", "C(x) = int_0^x cos(pi t^2 / 2) dt", 4,
                 _fresnel, mpmath.fresnelc, _FORMULA_B, "1/2",
                 "fresnel-kindred", scale=SCALE_PI_SQUARED, upper="1"),
    CatalogEntry("fresnel-kindred", "kindred partner of C(x)", 4,
                 _fresnel_kindred,
                 ReversedSeriesEvaluator(_fresnel_kindred, 4, True),
                 _FORMULA_A, "1/2", "fresnel", scale=SCALE_PI_SQUARED,
                 upper="1/2"),
    CatalogEntry("lambertw", "W(x), w exp(w) = x", 1, _lambertw,
                 _evaluate_lambertw, _FORMULA_B, "1", "z",
                 default_order=8),
    CatalogEntry("z", "x exp(-x)", 1, _z,
                 lambda x: x * mpmath.exp(-x), _FORMULA_A, "1", "lambertw",
                 default_order=8, table_sign=-1,
                 note="tabulated constant is -C of the formula (A) "
                 "expansion"),
))

#: the six kindred pairs, first member is the one reverted
KINDRED_PAIRS = (("logistic", "radical"), ("log", "exp"),
                 ("sin", "arcsinh"), ("arctan", "tanh"),
                 ("fresnel", "fresnel-kindred"), ("lambertw", "z"))


def catalog_names():
    """Names of the catalog entries, in catalog order."""
    return list(CATALOG.keys())


def get_entry(name):
    """Catalog entry by name.

    :raises UnknownFunction: when name is not in the catalog
    """
    try:
        return CATALOG[name]
    except KeyError:
        raise UnknownFunction(name, catalog_names())


def catalog_series(name, order=None):
    """Exact PowerSeries of a catalog function.

    :param str name: catalog name
    :param int order: K, the entry's default order when None
    :rtype: PowerSeries
    :raises UnknownFunction: when name is not in the catalog
    """
    return get_entry(name).series(order)


def identify(series):
    """Name of the catalog entry whose coefficients start with series'.

    :param PowerSeries series: the series to look up
    :returns: the name, or None when no entry matches
    """
    for entry in CATALOG.values():
        if entry.tau != series.tau:
            continue
        if tuple(entry.generator(series.order)) == series.coeffs:
            return entry.name
    return None


def evaluate(name, x, digits):
    """Evaluate a catalog function at x with `digits` decimal digits.

    :param str name: catalog name
    :param x: argument (mpf, Fraction, int or text such as "pi/2")
    :param int digits: decimal digits of the result
    :rtype: mpmath.mpf
    :raises UnknownFunction: when name is not in the catalog
    :raises DomainViolation: for an argument outside the entry's domain
    """
    entry = get_entry(name)
    with mpmath.workdps(digits + 5):
        argument = parse_real(x) if isinstance(x, str) else to_mpf(x)
        entry.check_argument(argument)
        value = entry.evaluate(argument)
    with mpmath.workdps(digits):
        return +value


def consistency_defect(name, x, digits, order=None):
    """Compare the evaluator with the truncated series at x.

    :returns: (|evaluate(x) - series(x)|, allowed bound) where the bound
              is 2 max(|a_K|, |a_(K+1)|) |x|^((K+1) tau + 1) plus a few
              units in the last place
    :rtype: tuple of mpf
    """
    entry = get_entry(name)
    if order is None:
        order = entry.default_order
    extended = entry.generator(order + 1)
    series = PowerSeries(entry.tau, extended[:order], name=name)
    with mpmath.workdps(digits):
        argument = parse_real(x) if isinstance(x, str) else to_mpf(x)
        theta = mpmath.pi ** 2 if entry.scale else None
        difference = abs(entry.evaluate(argument) -
                         series(argument, theta))
        margin = max(abs(to_mpf(extended[order - 1])),
                     abs(to_mpf(extended[order])))
        if entry.scale:
            margin *= (mpmath.pi ** 2) ** (order + 1)
        bound = 2 * margin * argument ** ((order + 1) * entry.tau + 1) + \
            abs(argument) * mpmath.mpf(10) ** (2 - digits)
    return difference, bound
