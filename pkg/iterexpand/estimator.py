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
"""Constant estimator.

Iterates the true map at high precision, then solves the truncated
expansion for the constant K at two depths N and 2N. The number of
digits on which both solutions agree is the number of trusted digits.
"""
import logging
import math

import mpmath

from iterexpand import settings
from iterexpand.engine.derivation import derive_all
from iterexpand.engine.series_spec import SCALE_PI_SQUARED
from iterexpand.expansion import assemble
from iterexpand.expansion import evaluate_at
from iterexpand.expansion import evaluate_derivative
from iterexpand.expansion import to_normalized_c
from iterexpand.iterexpand_exception import IterexpandException
from iterexpand.series.catalog import get_entry
from iterexpand.series.power_series import PowerSeries
from iterexpand.tools import agreeing_digits
from iterexpand.tools import format_real
from iterexpand.tools import parse_real
from iterexpand.tools import to_mpf

LOGGER = logging.getLogger("iterexpand.estimator")


class EstimatorException(IterexpandException):
    """Generic Estimator Exception."""


class MonotonicityViolation(EstimatorException):
    """Raised when an iterate fails 0 < x_(n+1) < x_n."""

    def __init__(self, name, step):
        """Init of MonotonicityViolation.

        :param str name: the map
        :param int step: index n of the offending iterate
        """
        super().__init__("%s: iterate %s is not in (0, x_%s): precision "
                         "exhausted or invalid x0" % (name, step, step - 1))
        self.step = step


class NewtonNonConvergence(EstimatorException):
    """Raised when the Newton solve for K fails."""


class ResourceCapExceeded(EstimatorException):
    """Raised when the N schedule ends before the target is reached.

    *Attributes:*

    * best: the EstimateResult with the most trusted digits
    """

    def __init__(self, best, target):
        """Init of ResourceCapExceeded.

        :param EstimateResult best: best result achieved
        :param int target: digits that were requested
        """
        super().__init__("only %s trusted digits reached (target %s) at "
                         "N=%s" % (best.trusted_digits, target, best.n_used))
        self.best = best
        self.target = target

    def __reduce__(self):
        """Pickle support for worker pools."""
        return (ResourceCapExceeded, (self.best, self.target))


class EstimateResult():
    """Outcome of a constant estimation.

    *Attributes:*

    * name: the map
    * x0: text of the initial value
    * k_value: engine constant K (mpf)
    * normalized_c: the C of the expansion, sigma K / scale (mpf)
    * trusted_digits: digits on which the N and 2N solutions agree, minus 1
    * n_used: the deepest iterate used (2N)
    * precision_used: working decimal digits
    * residual: |x_N - expansion(N, K)| (mpf)
    * truncated_map: True when the truncated series was iterated
    * table_c: the constant as tabulated, normalized_c unless the map
      tabulates -C
    * note: remark on the tabulated constant, or None
    """

    # pylint: disable=too-many-arguments, too-many-instance-attributes
    def __init__(self, name, x0, k_value, normalized_c, trusted_digits, n_used,
                 precision_used, residual, truncated_map=False, table_c=None,
                 note=None):
        """Init of EstimateResult."""
        self.name = name
        self.x0 = x0
        self.k_value = k_value
        self.normalized_c = normalized_c
        self.trusted_digits = trusted_digits
        self.n_used = n_used
        self.precision_used = precision_used
        self.residual = residual
        self.truncated_map = truncated_map
        self.table_c = normalized_c if table_c is None else table_c
        self.note = note

    def __repr__(self):
        """Returns a string representing the result."""
        return "EstimateResult(%s, x0=%s, C=%s, trusted=%s, N=%s)" % (
            self.name, self.x0, format_real(self.table_c, 25),
            self.trusted_digits, self.n_used)

    def to_dict(self, digits=None):
        """JSON-ready form, reals as decimal strings."""
        if digits is None:
            digits = max(self.trusted_digits, 1)
        document = {
            'function': self.name,
            'x0': self.x0,
            'K': format_real(self.k_value, digits),
            'C': format_real(self.table_c, digits),
            'digits': digits,
            'trusted_digits': self.trusted_digits,
            'N': self.n_used,
            'precision': self.precision_used,
            'residual': format_real(self.residual, 5),
            'truncated_map': self.truncated_map,
        }
        if self.note is not None:
            document['expansion_C'] = format_real(self.normalized_c, digits)
            document['note'] = self.note
        return document


def working_digits(target, count, guard=None):
    """Target digits + guard digits + 2 ceil(log10 N).

    Rounding errors accumulate over N iterations, and solving for K
    amplifies the error on x_N by about tau N.
    """
    if guard is None:
        guard = settings.GUARD_DIGITS
    return target + guard + 2 * int(math.ceil(math.log10(max(count, 10))))


def map_for(name=None, spec=None):
    """Step function, argument check and label of the map to iterate.

    Catalog names iterate the true function. A custom spec iterates its
    truncated series.

    :returns: (step, check, label, truncated)
    """
    if spec is None:
        entry = get_entry(name)
        return entry.evaluate, entry.check_argument, entry.name, False
    series = PowerSeries.from_spec(spec)
    scaled = spec.scale == SCALE_PI_SQUARED

    def step(x):
        """One step of the truncated map."""
        return series(x, mpmath.pi ** 2 if scaled else None)

    def check(x):
        """Iterates must start positive."""
        if not x > 0:
            raise ValueError("x0 must be positive")

    return step, check, spec.name, True


def iterate_checkpoints(step, x0, checkpoints, digits, label="map",
                        check=None):
    """Iterate x_n = f(x_(n-1)) and record x_n at the checkpoints.

    :param step: mpf -> mpf map
    :param x0: initial value (text, Fraction or mpf)
    :param checkpoints: iterable of indices n >= 1
    :param int digits: working decimal digits
    :param str label: name used in errors and logs
    :param check: optional callable validating x0
    :returns: {n: x_n}
    :rtype: dict
    :raises MonotonicityViolation: when 0 < x_(n+1) < x_n fails
    """
    wanted = set(checkpoints)
    last = max(wanted)
    recorded = {}
    with mpmath.workdps(digits):
        x_value = parse_real(x0)
        if check is not None:
            check(x_value)
        LOGGER.debug("iterating %s from %s for %s steps at %s digits",
                     label, x0, last, digits)
        for index in range(1, last + 1):
            following = step(x_value)
            if not 0 < following < x_value:
                raise MonotonicityViolation(label, index)
            x_value = following
            if index in wanted:
                recorded[index] = x_value
    return recorded


def iterate(name, x0, count, digits, spec=None):
    """x_N of a catalog map (or of a custom spec's truncated series).

    :param str name: catalog name
    :param x0: initial value, text such as "pi/2" or a number
    :param int count: N >= 0
    :param int digits: working decimal digits
    :rtype: mpmath.mpf
    """
    step, check, label, _ = map_for(name, spec)
    if count == 0:
        with mpmath.workdps(digits):
            value = parse_real(x0)
            check(value)
            return value
    return iterate_checkpoints(step, x0, (count, ), digits, label,
                               check)[count]


def solve_k(expansion, n, x_n, digits, max_steps=None):
    """Solve evaluate_at(expansion, n, K) = x_n for K by Newton.

    The seed is the first order solution
    K_0 = -tau (x_n (n/lambda)^(1/tau) - 1) n - b_1 ln(n).

    :param AsymptoticExpansion expansion: the table, J >= 1
    :param int n: index of the iterate
    :param x_n: the iterate (mpf)
    :param int digits: decimal digits of the solution
    :rtype: mpmath.mpf
    :raises NewtonNonConvergence: on a vanishing derivative or when the
                                  step count is exhausted
    """
    if max_steps is None:
        max_steps = settings.NEWTON_MAX_STEPS
    tau = expansion.tau
    with mpmath.workdps(digits + 5):
        x_n = to_mpf(x_n)
        leading = expansion.prefactor() / mpmath.root(n, tau)
        k_value = -tau * (x_n / leading - 1) * n - \
            to_mpf(expansion.b_1) * mpmath.log(n)
        tolerance = mpmath.mpf(10) ** (-digits)
        for _ in range(max_steps):
            residual = evaluate_at(expansion, n, k_value, digits + 5) - x_n
            slope = evaluate_derivative(expansion, n, k_value)
            if slope == 0:
                raise NewtonNonConvergence("derivative vanished at K=%s" %
                                           mpmath.nstr(k_value, 15))
            delta = residual / slope
            k_value -= delta
            if abs(delta) <= tolerance * max(1, abs(k_value)):
                break
        else:
            raise NewtonNonConvergence("no convergence in %s Newton steps "
                                       "for n=%s" % (max_steps, n))
    with mpmath.workdps(digits):
        return +k_value


def estimate_c(name, x0=None, target_digits=None, order=None, spec=None,
               schedule=None):
    """Estimate the constant of a map started at x0.

    :param str name: catalog name (ignored when spec is given)
    :param str x0: initial value text, the entry's default when None
    :param int target_digits: digits wanted, settings.DEFAULT_DIGITS when
                              None
    :param int order: expansion order J, the full depth when None
    :param SeriesSpec spec: custom series, iterated through its
                            truncated series
    :param schedule: N values to try, settings.N_SCHEDULE when None
    :rtype: EstimateResult
    :raises ResourceCapExceeded: when no N reaches the target
    """
    if target_digits is None:
        target_digits = settings.DEFAULT_DIGITS
    if schedule is None:
        schedule = settings.N_SCHEDULE
    table_sign, note = 1, None
    if spec is None:
        entry = get_entry(name)
        spec = entry.spec()
        if x0 is None:
            x0 = entry.default_x0
        table_sign, note = entry.table_sign, entry.note
        step, check, label, truncated = map_for(name)
    else:
        if x0 is None:
            raise ValueError("an initial value is needed for a custom spec")
        step, check, label, truncated = map_for(spec=spec)
    coeffs, polys = derive_all(spec)
    expansion = assemble(coeffs, polys, order)

    best = None
    for count in schedule:
        deepest = 2 * count
        digits = working_digits(target_digits, deepest)
        iterates = iterate_checkpoints(step, x0, (count, deepest), digits,
                                       label, check)
        with mpmath.workdps(digits):
            k_first = solve_k(expansion, count, iterates[count], digits)
            k_second = solve_k(expansion, deepest, iterates[deepest],
                               digits)
            trusted = max(0, agreeing_digits(k_first, k_second) - 1)
            residual = abs(iterates[count] -
                           evaluate_at(expansion, count, k_second, digits))
            normalized_c = to_normalized_c(k_second, spec.convention)
            result = EstimateResult(
                label, str(x0), k_second, normalized_c, trusted, deepest,
                digits, residual, truncated, table_sign * normalized_c, note)
        LOGGER.info("%s from %s: N=%s, %s trusted digits", label, x0,
                    deepest, trusted)
        if best is None or trusted > best.trusted_digits:
            best = result
        if trusted >= target_digits:
            return result
    raise ResourceCapExceeded(best, target_digits)


def shifted_constant(result, steps):
    """K of the sequence re-indexed by `steps`: y_n = x_(n+steps).

    Shifting the index by s changes X_n by -s/tau, that is K by +s.

    :param EstimateResult result: estimate for the original sequence
    :param int steps: the index shift
    :rtype: mpmath.mpf
    """
    return result.k_value + steps
