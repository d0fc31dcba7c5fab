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
"""Read custom series documents.

Two layouts are accepted. A JSON object:

.. code-block:: json

    {"name": "lambertw", "tau": 1,
     "a": ["-1", "3/2", "-8/3", "125/24"], "formula": "B"}

or a config file with a ``[series]`` section:

.. code-block:: ini

    [series]
    name = fresnel
    tau = 4
    a = -1/40, 1/3456, -1/599040
    formula = B
    scale = pi^2

Fields: tau (integer), a (list of "p/q"), and the optional name, formula
(A or B), scale ("pi^2" or "none") and c_scale (positive "p/q"). Any other
field is ignored, so the JSON written by ``coeffs --format json`` reads
back as a series.
"""
import json
import logging
import os
import re
from configparser import ConfigParser
from configparser import Error as ConfigError

from iterexpand.engine.coefficients import CoeffSet
from iterexpand.engine.series_spec import Convention
from iterexpand.engine.series_spec import SCALE_PI_SQUARED
from iterexpand.engine.series_spec import SeriesSpec
from iterexpand.kernel import to_rational
from iterexpand.series.series_exceptions import SeriesParseError

LOGGER = logging.getLogger("iterexpand.parse_series_files")

SERIES_SECTION = 'series'


def _line_of(text, field):
    """First line (1-based) naming `field`, or None."""
    pattern = re.compile(r'^\s*("%s"\s*:|%s\s*[=:])' % (re.escape(field),
                                                        re.escape(field)))
    for number, line in enumerate(text.splitlines(), 1):
        if pattern.search(line):
            return number
    return None


class SeriesFile():
    """Parse one custom series document into a SeriesSpec.

    *Attributes:*

    * source: file name (or "<text>")
    * text: the raw document
    * fields: dict of the raw fields read
    * spec: the validated SeriesSpec
    """

    def __init__(self, filename=None, text=None):
        """Init of SeriesFile.

        :param str filename: path of the document
        :param str text: the document itself, when no filename is given

        :raises SeriesParseError: when the document can not be read or a
                                  field is malformed
        :raises InvalidSeriesSpec: when the series is well formed but can
                                   not drive the engine (a_1 >= 0, ...)
        """
        self.logger = logging.getLogger(
            "iterexpand.parse_series_files.SeriesFile")
        if text is None:
            if filename is None:
                raise SeriesParseError("no series document given")
            try:
                with open(filename, 'r') as series_file:
                    text = series_file.read()
            except IOError as exc:
                raise SeriesParseError("cannot read %s: %s" % (filename,
                                                               exc))
        self.source = filename or "<text>"
        self.text = text
        if text.lstrip().startswith('{'):
            self.fields = self.read_json()
        else:
            self.fields = self.read_config()
        self.logger.debug("series document %s: fields %s", self.source,
                          sorted(self.fields))
        self.spec = self.build_spec()

    def read_json(self):
        """Fields of a JSON document."""
        try:
            document = json.loads(self.text)
        except ValueError as exc:
            raise SeriesParseError("invalid JSON: %s" % exc.msg,
                                   line=getattr(exc, 'lineno', None))
        if not isinstance(document, dict):
            raise SeriesParseError("a JSON object is expected", line=1)
        return document

    def read_config(self):
        """Fields of the [series] section of a config document."""
        config = ConfigParser()
        try:
            config.read_string(self.text, source=self.source)
        except ConfigError as exc:
            line = getattr(exc, 'lineno', None)
            if line is None and getattr(exc, 'errors', None):
                line = exc.errors[0][0]
            raise SeriesParseError("invalid series document: %s" %
                                   exc.message.splitlines()[0], line=line)
        if not config.has_section(SERIES_SECTION):
            raise SeriesParseError("no [%s] section" % SERIES_SECTION)
        fields = dict(config.items(SERIES_SECTION))
        if 'a' in fields:
            fields['a'] = [value.strip() for value in fields['a'].split(',')
                           if value.strip()]
        return fields

    def error(self, description, field):
        """SeriesParseError located on `field`."""
        return SeriesParseError(description, field=field,
                                line=_line_of(self.text, field))

    def build_spec(self):
        """Validate the fields and build the SeriesSpec."""
        fields = self.fields
        if 'tau' not in fields:
            raise SeriesParseError("missing field", field='tau')
        tau = fields['tau']
        if isinstance(tau, str) and re.match(r'^\s*[0-9]+\s*$', tau):
            tau = int(tau)
        if not isinstance(tau, int) or isinstance(tau, bool) or tau < 1:
            raise self.error("tau must be an integer >= 1, got %r" % (tau, ),
                             'tau')

        if 'a' not in fields:
            raise SeriesParseError("missing field", field='a')
        if not isinstance(fields['a'], list):
            raise self.error("a must be a list of \"p/q\" strings", 'a')
        coefficients = []
        for index, value in enumerate(fields['a'], 1):
            if not isinstance(value, str):
                raise self.error("a_%s must be a \"p/q\" string, got %r" %
                                 (index, value), 'a')
            try:
                coefficients.append(to_rational(value))
            except ValueError as exc:
                raise SeriesParseError(str(exc), field='a_%s' % index,
                                       line=_line_of(self.text, 'a'))

        scale = fields.get('scale', "none")
        if scale in (None, "none", "1"):
            scale = None
        elif scale != SCALE_PI_SQUARED:
            raise self.error("scale must be \"%s\" or \"none\", got %r" %
                             (SCALE_PI_SQUARED, scale), 'scale')

        formula = fields.get('formula', 'A')
        if formula not in ('A', 'B'):
            raise self.error("formula must be A or B, got %r" % (formula, ),
                             'formula')
        try:
            c_scale = to_rational(str(fields.get('c_scale', "1")))
        except ValueError as exc:
            raise self.error(str(exc), 'c_scale')
        if c_scale <= 0:
            raise self.error("c_scale must be positive", 'c_scale')

        name = fields.get('name') or fields.get('function')
        if not name:
            name = os.path.splitext(os.path.basename(self.source))[0]
        return SeriesSpec(name, tau, coefficients, scale,
                          Convention.from_formula(formula, c_scale))


def load_series(filename):
    """SeriesSpec of a custom series file.

    :param str filename: path of the document
    :rtype: SeriesSpec
    """
    return SeriesFile(filename).spec


def parse_series_text(text, source=None):
    """SeriesSpec of a custom series document given as text."""
    return SeriesFile(source, text=text).spec


def load_coefficients_json(text):
    """Read back the JSON document of ``coeffs --format json``.

    :param str text: the document
    :returns: the tables, exact
    :rtype: CoeffSet
    :raises SeriesParseError: on a malformed document
    """
    parsed = SeriesFile(text=text)
    document = parsed.fields
    try:
        lam = to_rational(document['lambda'])
        b = [to_rational(value) for value in document['b']]
        a0 = [to_rational(value) for value in document['a0']]
        aij = {}
        for row in document['aij']:
            i = int(row['i'])
            for offset, value in enumerate(row['values'], 1):
                aij[(i, i + offset)] = to_rational(value)
        c = [to_rational(value) for value in document['c']]
    except KeyError as exc:
        raise SeriesParseError("missing table", field=exc.args[0])
    except (ValueError, TypeError) as exc:
        raise SeriesParseError("malformed table: %s" % exc)
    return CoeffSet(parsed.spec, lam, b, a0, aij, c)
