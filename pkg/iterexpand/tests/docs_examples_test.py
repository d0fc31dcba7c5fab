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
"""Run the console examples of the command line documentation."""
import os
import shlex
import unittest

# import here the module / classes to be tested
from iterexpand.tests.common import run_cli
from iterexpand.tests.common import TestIterexpand

DOCUMENT = os.path.join(os.path.dirname(__file__), '..', '..', 'docs',
                        'command_line.rst')


def console_examples(text):
    """[(argument list, expected output lines)] of the console blocks."""
    examples = []
    in_block = False
    for line in text.splitlines():
        if line.startswith(".. code-block:: console"):
            in_block = True
            continue
        if in_block and line and not line.startswith("    "):
            in_block = False
        if not in_block:
            continue
        content = line[4:]
        if content.startswith("$ iterexpand "):
            examples.append((shlex.split(content[2:])[1:], []))
        elif examples:
            examples[-1][1].append(content)
    return [(arguments, _strip_blank(lines)) for arguments, lines in examples]


def _strip_blank(lines):
    while lines and not lines[-1]:
        lines.pop()
    return lines


@unittest.skipUnless(os.path.exists(DOCUMENT),
                     "documentation not shipped with this install")
class TestCommandLineDocument(TestIterexpand):

    def setUp(self):
        super().setUp()
        with open(DOCUMENT, 'r') as document:
            self.examples = console_examples(document.read())

    def test_examples_found(self):
        self.assertTrue(len(self.examples) >= 5)

    def test_examples(self):
        for arguments, expected in self.examples:
            status, text = run_cli(*arguments)
            self.assertEqual(status, 0, "Wrong status for %s" % arguments)
            self.assertEqual(text.rstrip("\n").splitlines(), expected,
                             "Wrong output for %s" % arguments)
