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
"""Define Exceptions for the coefficient engine."""
from iterexpand.iterexpand_exception import IterexpandException


class EngineException(IterexpandException):
    """Generic Engine Exception."""


class InvalidSeriesSpec(EngineException):
    """Raised when a series cannot drive the engine.

    Happens for a_1 >= 0, tau < 1 or fewer than two coefficients.
    """


class DepthExceeded(EngineException):
    """Raised when an order J beyond the derived depth is requested."""

    def __init__(self, requested, available):
        """Init of DepthExceeded.

        :param int requested: order asked for
        :param int available: deepest order the coefficients support
        """
        super().__init__("order %s requested but only %s available" %
                         (requested, available))
        self.requested = requested
        self.available = available
