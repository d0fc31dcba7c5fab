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
"""Global settings for iterexpand and their default values.

All the settings can be changed by :ref:`iterexpand_cmdline`
and/or :ref:`iterexpand_configfile`
"""

# ======= "Internal" Settings ========
# software version, populated automatically
__VERSION__ = None

#: unless knowing what you're doing, this prefs should not be changed
#: by the user

#: extra decimal digits carried on top of the requested precision
GUARD_DIGITS = 10

#: iteration depths tried in turn by the constant estimator; each N is
#: paired with 2N to measure the number of trusted digits
N_SCHEDULE = (10 ** 4, 10 ** 5, 10 ** 6)

NEWTON_MAX_STEPS = 64  #: Newton steps allowed when solving for K

#: reverted series order used first by the kindred-of-Fresnel evaluator
KINDRED_SERIES_MIN_ORDER = 16
#: hard cap for the same evaluator, beyond which PrecisionLoss is raised
KINDRED_SERIES_MAX_ORDER = 64

#: digits the expansion sum may lose to cancellation before it is
#: recomputed with that many more digits
EVALUATION_GUARD_DIGITS = 5
#: largest such loss accepted by evaluate_at, beyond it PrecisionLoss
EVALUATION_MAX_LOST_DIGITS = 60

#: argument used for the evaluator / truncated series consistency check
CHECK_RADIUS = "1/1000"

#: environment variable overriding DEFAULT_DIGITS
DIGITS_ENVIRONMENT_VARIABLE = "ITEREXPAND_DIGITS"

# ========= User settings ========
DEFAULT_DIGITS = 20  #: decimal digits requested from the estimator

DEFAULT_FORMAT = "text"  #: text, json or latex

JOBS = 1  #: worker processes used by verify and estimate-c

LOG_FILE = None  #: when set, debug log is also written in this file

#: templates should be in templates/ directory
TEMPLATE_COEFFS = "coeffs.txt.tpl"
TEMPLATE_COEFFS_LATEX = "coeffs.tex.tpl"
TEMPLATE_POLYS = "polys.txt.tpl"
TEMPLATE_POLYS_LATEX = "polys.tex.tpl"
TEMPLATE_EXPANSION = "expansion.txt.tpl"
TEMPLATE_EXPANSION_LATEX = "expansion.tex.tpl"
TEMPLATE_ESTIMATE = "estimate.txt.tpl"
TEMPLATE_KINDRED = "kindred.txt.tpl"
TEMPLATE_FUNCTIONS = "functions.txt.tpl"
TEMPLATE_VERIFY = "verify.txt.tpl"
TEMPLATE_EVAL = "eval.txt.tpl"
