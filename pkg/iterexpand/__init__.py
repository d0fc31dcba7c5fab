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
"""Iterexpand module.

Asymptotic expansions of the iterates of analytic maps
f(x) = x + a_1 x^(tau+1) + a_2 x^(2 tau+1) + ... with a_1 < 0, and high
precision estimation of their initial-condition constant.
"""
