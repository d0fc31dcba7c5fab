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
"""Engine module.

Contains:
    * series_spec: the identity of a map for the engine
    * coefficients: lambda, b_j, a_(0,j), a_(i,j) and c_i
    * polynomials: the T, T~ and P towers
    * derivation: memoized end-to-end derivation and identity audits
"""
