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
"""global setup file."""

from setuptools import setup, find_packages
from setuptools.command.build_py import build_py
from io import open
import os

# local imports
from build_scripts.version import get_git_version

__authors__ = [
    # alphabetical order by last name
    'The iterexpand authors', ]


with open("README.rst", encoding='utf-8') as f:
    README = f.read()

with open("NEWS.rst", encoding='utf-8') as f:
    NEWS = f.read()


VERSION = get_git_version(filename="iterexpand/RELEASE-VERSION")
if VERSION is None:
    VERSION = "0.0.0"


class iterexpand_build_py(build_py):
    """build_py also writing RELEASE-VERSION next to the package."""

    def run(self):
        # honor the --dry-run flag
        if not self.dry_run:
            for directory in (os.path.join(self.build_lib, 'iterexpand'),
                              'iterexpand'):
                self.mkpath(directory)
                with open(os.path.join(directory, 'RELEASE-VERSION'), 'w',
                          encoding='utf-8') as fobj:
                    fobj.write(VERSION + "\n")
        build_py.run(self)


install_requires = [
    'jinja2',
    'mpmath', ]


setup(name='iterexpand',
      version=VERSION,
      description="Exact asymptotic expansions of the iterates of "
                  "x + a_1 x^(tau+1) + ... maps",
      long_description=README + '\n\n' + NEWS,
      cmdclass={'build_py': iterexpand_build_py},
      classifiers=[
          # Get strings from
          # http://pypi.python.org/pypi?%3Aaction=list_classifiers
          "Programming Language :: Python :: 3",
          "Topic :: Scientific/Engineering :: Mathematics"],
      keywords='asymptotics iteration power series reversion',
      author='The iterexpand authors',
      author_email='',
      url='',
      license='GPLv3',
      entry_points={
          'console_scripts': ['iterexpand = iterexpand.main:main', ],
      },
      packages=find_packages(exclude=('build_scripts', )),
      package_data={'iterexpand': ['RELEASE-VERSION', 'templates/*',
                                   'golden/*.json',
                                   'tests/configs/*'], },
      include_package_data=True,
      zip_safe=False,
      provides=('iterexpand', ),
      install_requires=install_requires,
      tests_require=['nose', 'coverage', ],
      test_suite='nose.collector',
      extras_require={
          'doc': ["sphinx", ],
          'devel_tools': ["ipython", "pylint", "pep8", ],
      },)
