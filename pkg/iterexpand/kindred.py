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
"""Kindred check.

The kindred partner g of a map f is the reverted series of f with the
sign of every odd block flipped. Both expansions are then tied by

    c_i(g) = (-1)^(i+1) c_i(f)
    T_m(g)(X) = (-1)^m T_m(f)(-X)
    P_m(g)(X) = (-1)^m P_m(f)(-X)

and their term tables have equal magnitudes once K is replaced by -K.
"""
import logging

from iterexpand.engine.derivation import derive_all
from iterexpand.engine.series_spec import Convention
from iterexpand.expansion import assemble
from iterexpand.expansion import kindred_compare
from iterexpand.series.catalog import get_entry
from iterexpand.series.catalog import identify
from iterexpand.series.power_series import kindred_of
from iterexpand.series.power_series import PowerSeries

LOGGER = logging.getLogger("iterexpand.kindred")


class KindredCheck():
    """Outcome of the kindred check of one map.

    *Attributes:*

    * name: the map f
    * partner: catalog name of g, or "kindred-of(f)"
    * partner_series: PowerSeries of g
    * c_defects: indices i where the c relation fails
    * t_defects: indices m where the T relation fails
    * p_defects: indices m where the P relation fails
    * report: KindredReport of the two expansions
    """

    # pylint: disable=too-many-arguments
    def __init__(self, name, partner, partner_series, c_defects, t_defects,
                 p_defects, report):
        """Init of KindredCheck."""
        self.name = name
        self.partner = partner
        self.partner_series = partner_series
        self.c_defects = c_defects
        self.t_defects = t_defects
        self.p_defects = p_defects
        self.report = report

    @property
    def passed(self):
        """True when every relation holds."""
        return not (self.c_defects or self.t_defects or self.p_defects or
                    self.report.mismatches)


def _sign(index):
    """(-1)^index."""
    return -1 if index % 2 else 1


def kindred_check(name=None, spec=None, order=None):
    """Derive f and its kindred partner g and check the relations.

    :param str name: catalog name of f (ignored when spec is given)
    :param SeriesSpec spec: a custom f
    :param int order: K, the entry's default when None
    :rtype: KindredCheck
    """
    if spec is None:
        entry = get_entry(name)
        spec = entry.spec(order)
    series = PowerSeries.from_spec(spec)
    partner_series = kindred_of(series)
    partner = identify(partner_series)
    if partner is not None:
        convention = get_entry(partner).convention
    else:
        partner = "kindred-of(%s)" % spec.name
        convention = Convention(-spec.convention.sigma,
                                spec.convention.scale)
    partner_spec = partner_series.to_spec(partner, spec.scale, convention)
    LOGGER.info("kindred check of %s against %s", spec.name, partner)

    coeffs_f, polys_f = derive_all(spec)
    coeffs_g, polys_g = derive_all(partner_spec)
    c_defects = [i for i, (value_f, value_g)
                 in enumerate(zip(coeffs_f.c, coeffs_g.c))
                 if value_g != _sign(i + 1) * value_f]
    t_defects = [m for m, (poly_f, poly_g)
                 in enumerate(zip(polys_f.T, polys_g.T), 1)
                 if poly_g != _sign(m) * poly_f.scale_argument(-1)]
    p_defects = [m for m, (poly_f, poly_g)
                 in enumerate(zip(polys_f.P, polys_g.P))
                 if poly_g != _sign(m) * poly_f.scale_argument(-1)]
    report = kindred_compare(assemble(coeffs_f, polys_f),
                             assemble(coeffs_g, polys_g))
    return KindredCheck(spec.name, partner, partner_series, c_defects,
                        t_defects, p_defects, report)
