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
"""Define Exceptions for the series lab."""
from iterexpand.iterexpand_exception import IterexpandException


class SeriesException(IterexpandException):
    """Generic Series Exception."""


class UnknownFunction(SeriesException):
    """Raised when a name is not in the catalog."""

    def __init__(self, name, known):
        """Init of UnknownFunction.

        :param str name: the requested name
        :param list known: the catalog names
        """
        super().__init__("unknown function %r (known: %s)" %
                         (name, ', '.join(known)))
        self.name = name


class DomainViolation(SeriesException):
    """Raised when an argument lies outside an evaluator's domain."""


class PrecisionLoss(SeriesException):
    """Raised when an evaluator can not reach the requested precision."""


class SeriesParseError(SeriesException):
    """Raised by the custom series reader.

    *Attributes:*

    * field: name of the offending field (or None)
    * line: line number in the document (or None)
    """

    def __init__(self, description, field=None, line=None):
        """Init of SeriesParseError.

        :param str description: text describing the error
        :param str field: offending field
        :param int line: offending line
        """
        location = []
        if line is not None:
            location.append("line %s" % line)
        if field is not None:
            location.append("field %r" % field)
        if location:
            description = "%s: %s" % (', '.join(location), description)
        super().__init__(description)
        self.field = field
        self.line = line
