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
"""Golden corpus verification.

The corpus (iterexpand/golden/*.json) holds, for each catalog function,
the published coefficient tables: a_m, lambda, b_j, a_(0,j), c_i (from
c_1), T_m and P_m (ascending coefficients), the reverted series where
printed, and blocks of the expansion in the published constant C.

Every table is compared exactly with a fresh derivation. The
differential-difference identity of the P tower is audited on the way.
"""
import json
import logging
import os
from collections import OrderedDict
from concurrent.futures import ProcessPoolExecutor

import pkg_resources

from iterexpand.engine.derivation import derive_all
from iterexpand.engine.derivation import differential_difference_defects
from iterexpand.expansion import assemble
from iterexpand.expansion import displayed_terms
from iterexpand.kernel import format_rational
from iterexpand.kernel import to_rational
from iterexpand.ratpoly import RatPoly
from iterexpand.series.catalog import get_entry
from iterexpand.series.power_series import revert_series
from iterexpand.series.series_exceptions import UnknownFunction

LOGGER = logging.getLogger("iterexpand.golden")

CORPUS_PACKAGE = 'iterexpand'
CORPUS_DIRECTORY = 'golden'

#: "got" field of a mismatch on an unreadable corpus entry
MALFORMED = "malformed"


class GoldenReport():
    """Outcome of a corpus verification.

    *Attributes:*

    * functions: names checked, in corpus order
    * tables: number of tables compared
    * mismatches: list of (function, table, expected, got)
    """

    def __init__(self, functions, tables, mismatches):
        """Init of GoldenReport."""
        self.functions = functions
        self.tables = tables
        self.mismatches = mismatches

    @property
    def passed(self):
        """True without any mismatch."""
        return not self.mismatches

    @property
    def failed_functions(self):
        """Names with at least one mismatch."""
        return sorted(set(mismatch[0] for mismatch in self.mismatches))


def load_corpus(directory=None):
    """Read the corpus documents.

    :param str directory: a directory of *.json files, the packaged
                          corpus when None
    :returns: {function name: document} sorted by file name
    :rtype: OrderedDict
    """
    documents = OrderedDict()
    if directory is None:
        names = sorted(name for name in pkg_resources.resource_listdir(
            CORPUS_PACKAGE, CORPUS_DIRECTORY) if name.endswith('.json'))
        for name in names:
            text = pkg_resources.resource_string(
                CORPUS_PACKAGE, "%s/%s" % (CORPUS_DIRECTORY, name))
            document = json.loads(text.decode('utf-8'))
            documents[document['function']] = document
        return documents
    for name in sorted(os.listdir(directory)):
        if not name.endswith('.json'):
            continue
        with open(os.path.join(directory, name), 'r') as corpus_file:
            document = json.load(corpus_file)
        documents[document['function']] = document
    return documents


def golden_constants(name):
    """[(x0 text, C text)] printed for a catalog function."""
    document = load_corpus()[name]
    return [(item['x0'], item['C']) for item in document.get('constants',
                                                              ())]


def _compare_values(mismatches, function, prefix, expected, got, first=1):
    """Compare a list of "p/q" strings with derived Fractions as a prefix.

    :returns: 1 (one table compared)
    """
    for index, text in enumerate(expected, first):
        label = "%s_%s" % (prefix, index)
        position = index - first
        try:
            wanted = to_rational(text)
        except ValueError:
            mismatches.append((function, label, str(text), MALFORMED))
            continue
        if position >= len(got):
            mismatches.append((function, label, text, "missing"))
        elif wanted != got[position]:
            mismatches.append((function, label, text,
                               format_rational(got[position])))
    return 1


def _compare_poly(mismatches, function, label, expected, got):
    """Compare one polynomial, ascending "p/q" coefficients."""
    try:
        wanted = RatPoly.from_strings(expected)
    except ValueError:
        mismatches.append((function, label, ", ".join(map(str, expected)),
                           MALFORMED))
        return 1
    if got is None:
        mismatches.append((function, label, str(wanted), "missing"))
    elif wanted != got:
        mismatches.append((function, label, str(wanted), str(got)))
    return 1


def check_document(document):
    """Compare one corpus document with a fresh derivation.

    :param dict document: a corpus document
    :returns: (tables compared, mismatches)
    :rtype: tuple
    :raises UnknownFunction: when the function is not in the catalog
    """
    function = document['function']
    entry = get_entry(function)
    spec = entry.spec(document.get('order'))
    coeffs, polys = derive_all(spec)
    mismatches = []
    tables = 0

    tables += _compare_values(mismatches, function, "a", document['a'],
                              spec.a)
    try:
        if to_rational(document['lambda']) != coeffs.lam:
            mismatches.append((function, "lambda", document['lambda'],
                               format_rational(coeffs.lam)))
    except ValueError:
        mismatches.append((function, "lambda", str(document['lambda']),
                           MALFORMED))
    tables += 1
    tables += _compare_values(mismatches, function, "b", document['b'],
                              coeffs.b)
    tables += _compare_values(mismatches, function, "a(0)",
                              document['a0'], coeffs.a0)
    # c_0 = -b_1 is not printed, the corpus starts at c_1
    tables += _compare_values(mismatches, function, "c", document['c'],
                              coeffs.c[1:])
    for family, tower, offset in (("T", polys.T, 1), ("P", polys.P, 0)):
        for index, expected in sorted(document.get(family, {}).items(),
                                      key=lambda item: int(item[0])):
            position = int(index) - offset
            got = tower[position] if position < len(tower) else None
            tables += _compare_poly(mismatches, function,
                                    "%s_%s" % (family, index), expected, got)
    if 'reverted' in document:
        reverted = revert_series(entry.series(len(document['reverted'])))
        tables += _compare_values(mismatches, function, "reverted",
                                  document['reverted'], reverted.coeffs)
    if 'expansion' in document:
        terms = displayed_terms(assemble(coeffs, polys))
        for term in document['expansion']:
            key = (term['m'], term['p'])
            tables += _compare_poly(mismatches, function,
                                    "term_(%s,%s)" % key, term['poly'],
                                    terms.get(key))
    for m in differential_difference_defects(polys, coeffs.b[0], spec.tau):
        mismatches.append((function, "identity_%s" % m,
                           "P_(m+1)' = b_1 P_m' + (m tau + 1) P_m",
                           "violated"))
    tables += 1
    LOGGER.info("%s: %s tables, %s mismatches", function, tables,
                len(mismatches))
    return tables, mismatches


def verify_golden_corpus(function=None, corpus_dir=None, jobs=1):
    """Check the whole corpus, or one function of it.

    :param str function: restrict to this name
    :param str corpus_dir: corpus directory, the packaged one when None
    :param int jobs: worker processes
    :rtype: GoldenReport
    :raises UnknownFunction: when function is not in the corpus
    """
    corpus = load_corpus(corpus_dir)
    if function is not None:
        if function not in corpus:
            raise UnknownFunction(function, list(corpus.keys()))
        corpus = OrderedDict(((function, corpus[function]), ))
    documents = list(corpus.values())
    if jobs > 1 and len(documents) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            outcomes = list(executor.map(check_document, documents))
    else:
        outcomes = [check_document(document) for document in documents]
    tables = sum(outcome[0] for outcome in outcomes)
    mismatches = [mismatch for outcome in outcomes
                  for mismatch in outcome[1]]
    return GoldenReport(list(corpus.keys()), tables, mismatches)
