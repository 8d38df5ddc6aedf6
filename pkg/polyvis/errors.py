# -*- coding: utf-8 -*-
# polyvis
# Copyright (C) 2025 The polyvis authors
#
# polyvis is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# polyvis is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <http://www.gnu.org/licenses/>.

"""Exceptions raised by the polyvis library.

The CLI maps them to exit codes: ParseError -> 2, DomainError -> 3,
InconclusiveProbe -> 4.
"""


class PolyvisError(Exception):
    """Base class of all polyvis errors."""


class ParseError(PolyvisError, ValueError):
    """A polynomial expression could not be parsed.

    Args:
        message (string): what went wrong
        position (int): 0-based offset into the input text
    """
    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} at position {position}"
        super().__init__(message)


class DomainError(PolyvisError, ValueError):
    """An operation was called outside its mathematical domain."""


class InconclusiveProbe(PolyvisError):
    """A numerical probe could not separate accepting from rejecting
    residuals at the requested working precision."""
