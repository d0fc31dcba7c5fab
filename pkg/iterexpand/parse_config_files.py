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
"""Use config parser to parse config files."""
import logging
import os
from configparser import ConfigParser

# local imports
from iterexpand import settings

LOGGER = logging.getLogger("iterexpand")


def _positive_int(text, option):
    """int(text) >= 1, or ValueError naming the option."""
    try:
        value = int(text)
    except ValueError:
        raise ValueError("option %s: integer expected, got %r" % (option,
                                                                  text))
    if value < 1:
        raise ValueError("option %s must be >= 1, got %s" % (option, value))
    return value


def parse_schedule(text):
    """Comma separated N values, e.g. "10000, 100000"."""
    values = tuple(_positive_int(value.strip(), 'n_schedule')
                   for value in text.split(',') if value.strip())
    if not values:
        raise ValueError("option n_schedule: at least one value is needed")
    return values


def apply_environment(environ=None):
    """Apply ITEREXPAND_DIGITS on top of the current settings.

    :param dict environ: the environment, os.environ when None
    :raises ValueError: when the variable is not a positive integer
    """
    if environ is None:
        environ = os.environ
    value = environ.get(settings.DIGITS_ENVIRONMENT_VARIABLE)
    if value:
        settings.DEFAULT_DIGITS = _positive_int(
            value, settings.DIGITS_ENVIRONMENT_VARIABLE)
        LOGGER.debug("digits set to %s from the environment",
                      settings.DEFAULT_DIGITS)


class IterexpandConfigFiles():
    """Methods and elements to parse the config files of iterexpand.

    *Attributes:*

    * config: ConfigParser object, None when no file was given
    * files_read: names of the files actually read
    """

    def __init__(self, filenames):
        """Init of IterexpandConfigFiles object.

        :param list filenames: list of filenames to be parsed

        :raises ValueError: when an option holds an invalid value
        """
        self.config = None
        self.files_read = []

        if filenames is None:
            LOGGER.info("No config file found: skip config from files")
        else:
            self.config = ConfigParser()
            self.files_read = self.config.read(filenames)

            missing = set(filenames) - set(self.files_read)
            if len(self.files_read) == 0:
                LOGGER.info("No config file found: skip config from files")

            if len(missing) > 0:
                if len(missing) == 1:
                    LOGGER.warning("Config file : %s not found, skip it",
                                   list(missing)[0])
                else:
                    LOGGER.warning("Config files : %s not found, skip them",
                                   ', '.join(str(n) for n in
                                             sorted(missing)))

        if self.config is not None:
            self.check_configs_general_section()
            self.check_configs_estimator_section()
            self.check_configs_reversion_section()
            self.check_configs_output_section()

    def check_configs_general_section(self):
        """Check configs and change default settings values."""
        config = self.config
        if config.has_section('general'):
            section = 'general'
            if config.has_option(section, 'digits'):
                settings.DEFAULT_DIGITS = _positive_int(
                    config.get(section, 'digits'), 'digits')

            if config.has_option(section, 'format'):
                output_format = config.get(section, 'format').strip()
                if output_format not in ("text", "json", "latex"):
                    raise ValueError("option format: text, json or latex "
                                     "expected, got %r" % output_format)
                settings.DEFAULT_FORMAT = output_format

            if config.has_option(section, 'jobs'):
                settings.JOBS = _positive_int(config.get(section, 'jobs'),
                                              'jobs')

    def check_configs_estimator_section(self):
        """Check configs and change default settings values."""
        config = self.config
        if config.has_section('estimator'):
            section = 'estimator'
            if config.has_option(section, 'guard_digits'):
                settings.GUARD_DIGITS = _positive_int(
                    config.get(section, 'guard_digits'), 'guard_digits')
            if config.has_option(section, 'n_schedule'):
                settings.N_SCHEDULE = parse_schedule(
                    config.get(section, 'n_schedule'))
            if config.has_option(section, 'newton_max_steps'):
                settings.NEWTON_MAX_STEPS = _positive_int(
                    config.get(section, 'newton_max_steps'),
                    'newton_max_steps')

    def check_configs_reversion_section(self):
        """Check configs and change default settings values."""
        config = self.config
        if config.has_section('reversion'):
            section = 'reversion'
            if config.has_option(section, 'kindred_min_order'):
                settings.KINDRED_SERIES_MIN_ORDER = _positive_int(
                    config.get(section, 'kindred_min_order'),
                    'kindred_min_order')
            if config.has_option(section, 'kindred_max_order'):
                settings.KINDRED_SERIES_MAX_ORDER = _positive_int(
                    config.get(section, 'kindred_max_order'),
                    'kindred_max_order')
            if settings.KINDRED_SERIES_MAX_ORDER < \
                    settings.KINDRED_SERIES_MIN_ORDER:
                raise ValueError("kindred_max_order must not be below "
                                 "kindred_min_order")

    def check_configs_output_section(self):
        """Check configs and change default settings values."""
        config = self.config
        if config.has_section('output'):
            section = 'output'
            if config.has_option(section, 'log_file'):
                settings.LOG_FILE = config.get(section, 'log_file') or None
            for option in ('coeffs', 'coeffs_latex', 'polys', 'polys_latex',
                           'expansion', 'expansion_latex', 'estimate',
                           'kindred', 'functions', 'verify', 'eval'):
                if config.has_option(section, 'template_%s' % option):
                    setattr(settings, 'TEMPLATE_%s' % option.upper(),
                            config.get(section, 'template_%s' % option))
