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
# pylint: disable=too-many-public-methods, protected-access, no-self-use
# pylint: disable=too-few-public-methods, duplicate-code, invalid-name
# pylint: disable=too-many-ancestors, attribute-defined-outside-init
# pylint: disable=missing-docstring
"""Test for the config files and the environment."""

# import here the module / classes to be tested
from iterexpand.tests.common import fixture
from iterexpand.tests.common import TestIterexpand

from iterexpand import settings
from iterexpand.parse_config_files import apply_environment
from iterexpand.parse_config_files import IterexpandConfigFiles
from iterexpand.parse_config_files import parse_schedule


class TestConfigFiles(TestIterexpand):

    def test_read(self):
        config = IterexpandConfigFiles([fixture("test_config.cfg")])
        self.assertEqual(len(config.files_read), 1)
        self.assertEqual(settings.DEFAULT_DIGITS, 25)
        self.assertEqual(settings.DEFAULT_FORMAT, "json")
        self.assertEqual(settings.JOBS, 2)
        self.assertEqual(settings.GUARD_DIGITS, 12)
        self.assertEqual(settings.N_SCHEDULE, (1000, 4000, 16000))
        self.assertEqual(settings.NEWTON_MAX_STEPS, 32)
        self.assertEqual(settings.KINDRED_SERIES_MIN_ORDER, 8)
        self.assertEqual(settings.KINDRED_SERIES_MAX_ORDER, 32)
        self.assertEqual(settings.LOG_FILE, None)
        self.assertEqual(settings.TEMPLATE_COEFFS, "coeffs.txt.tpl")

    def test_restore(self):
        IterexpandConfigFiles([fixture("test_config.cfg"),
                               fixture("restore_default_config.cfg")])
        self.assertEqual(settings.DEFAULT_DIGITS, 20)
        self.assertEqual(settings.DEFAULT_FORMAT, "text")
        self.assertEqual(settings.N_SCHEDULE, (10000, 100000, 1000000))

    def test_missing_file(self):
        config = IterexpandConfigFiles([fixture("no_such_config.cfg")])
        self.assertEqual(config.files_read, [])
        self.assertEqual(settings.DEFAULT_DIGITS,
                         self._saved['DEFAULT_DIGITS'])

    def test_no_file(self):
        self.assertEqual(IterexpandConfigFiles(None).config, None)

    def test_series_section_ignored(self):
        # [series] belongs to custom series files
        config = IterexpandConfigFiles([fixture("fresnel_series.cfg")])
        self.assertEqual(len(config.files_read), 1)
        self.assertEqual(settings.KINDRED_SERIES_MIN_ORDER,
                         self._saved['KINDRED_SERIES_MIN_ORDER'])
        self.assertEqual(settings.KINDRED_SERIES_MAX_ORDER,
                         self._saved['KINDRED_SERIES_MAX_ORDER'])

    def test_bad_format(self):
        self.assertRaises(ValueError, IterexpandConfigFiles,
                          [fixture("bad_config.cfg")])


class TestSchedule(TestIterexpand):

    def test_parse(self):
        self.assertEqual(parse_schedule("10, 20,30"), (10, 20, 30))

    def test_invalid(self):
        for text in ("", "10, x", "0", "10, -5"):
            self.assertRaises(ValueError, parse_schedule, text)


class TestEnvironment(TestIterexpand):

    def test_digits(self):
        apply_environment({'ITEREXPAND_DIGITS': "33"})
        self.assertEqual(settings.DEFAULT_DIGITS, 33)

    def test_unset(self):
        apply_environment({})
        self.assertEqual(settings.DEFAULT_DIGITS,
                         self._saved['DEFAULT_DIGITS'])

    def test_invalid(self):
        self.assertRaises(ValueError, apply_environment,
                          {'ITEREXPAND_DIGITS': "many"})
