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

"""Visibility of lattice points along a polynomial line of sight

A point (a, h) with a, h >= 1 is visible along F when, for t = h / F(a),
no positive integer u < a makes t * F(u) a positive integer. A point (b, k)
with b < a and k = t * F(b) a positive integer blocks (a, h).

Two readings fix what the definition leaves open:

- F(a) = 0 admits no t with h = t * F(a) > 0, so every (a, h) is invisible.
- t may be negative (F(a) < 0); a blocker still needs t * F(u) > 0.

Both live in ``visible_along`` only.

The sieve works column by column. Above the threshold n_F every F(a) is
positive, and (b, k) blocks (a, h) exactly when F(b) > 0 and
s = F(a) / gcd(F(a), F(b)) divides h, so the invisible ordinates of column
a are the multiples of those s in [1, N]. Columns at or below the threshold
go through the oracle point by point. Columns are independent and can be
farmed out to a process pool; results are merged in column order.
"""

from __future__ import annotations

import logging
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional

import numpy as np

from polyvis.errors import DomainError
from polyvis.poly import IntPoly

log = logging.getLogger(__name__)

# F values below this bound let numpy's int64 gcd stand in for Python ints.
FAST_PATH_BOUND = 2 ** 62

# Pools are not worth their startup cost below this many columns.
MIN_PARALLEL_COLUMNS = 256


@dataclass(frozen=True)
class LatticePoint:
    a: int
    h: int

    def __post_init__(self):
        if self.a < 1 or self.h < 1:
            raise DomainError("lattice points need positive coordinates")


class ColumnResult(NamedTuple):
    a: int
    invisible: int
    eF: int
    ordinates: Optional[tuple]


@dataclass
class VisibilityGrid:
    """Classification of [1, N]^2 along a line of sight.

    ``columns`` maps each column a to its sorted invisible ordinates when
    the sieve was asked to keep points, and is None otherwise. ``eF`` counts
    the invisible points whose blockers all sit at or below ``threshold``.
    """
    sightline: object
    N: int
    visible: int
    invisible: int
    eF: int
    threshold: int
    columns: Optional[dict] = None

    def is_visible(self, a, h):
        if self.columns is None:
            raise DomainError("grid was computed without point listings")
        return h not in set(self.columns.get(a, ()))

    def invisible_points(self):
        if self.columns is None:
            raise DomainError("grid was computed without point listings")
        for a in sorted(self.columns):
            for h in self.columns[a]:
                yield LatticePoint(a, h)


class VisibilityCounts(NamedTuple):
    visible: int
    invisible: int


def _line_poly(line):
    return line if isinstance(line, IntPoly) else line.F


def visible_along(F, a, h):
    """Oracle for visibility along a bare polynomial F (nonzero).

    Literal reading of the definition with exact rationals; works for any
    nonzero multiple of a line of sight, including negative ones.
    """
    if a < 1 or h < 1:
        raise DomainError("lattice points need positive coordinates")
    Fa = F(a)
    if Fa == 0:
        return False
    t = Fraction(h, Fa)
    for u in range(1, a):
        k = t * F(u)
        if k > 0 and k.denominator == 1:
            return False
    return True


def visible_oracle(line, a, h):
    """Is (a, h) visible along the line of sight?

    Args:
        line (SightLine): the line of sight
        a (int): abscissa, >= 1
        h (int): ordinate, >= 1

    Returns:
        bool
    """
    return visible_along(line.F, a, h)


def blockers(line, a, h, limit=None):
    """All (b, k) with b < a blocking (a, h), ascending in b.

    Args:
        line (SightLine): the line of sight
        a (int): abscissa, >= 2
        h (int): ordinate, >= 1
        limit (int, optional): stop after this many blockers

    Returns:
        list: (b, k) tuples; empty iff (a, h) is visible or F(a) = 0
    """
    if a < 2:
        raise DomainError("blockers need a >= 2")
    if h < 1:
        raise DomainError("lattice points need positive coordinates")
    F = line.F
    Fa = F(a)
    if Fa == 0:
        return []
    t = Fraction(h, Fa)
    found = []
    for b in range(1, a):
        k = t * F(b)
        if k > 0 and k.denominator == 1:
            found.append((b, int(k)))
            if limit is not None and len(found) >= limit:
                break
    return found


def block_count(line, a, b, N):
    """Number of h in [1, N] such that some (b, k) blocks (a, h).

    Equals floor(N * gcd(F(a), F(b)) / |F(a)|) whenever F(b) is nonzero and
    has the sign of F(a), and 0 otherwise.

    Raises:
        DomainError: unless 1 <= b < a.
    """
    if b >= a:
        raise DomainError("blocker abscissa must be smaller")
    if b < 1:
        raise DomainError("lattice points need positive coordinates")
    F = line.F
    Fa, Fb = F(a), F(b)
    if Fa == 0 or Fb == 0 or (Fa > 0) != (Fb > 0):
        return 0
    return N // (abs(Fa) // math.gcd(Fa, Fb))


def _mark(svalues, N):
    mask = np.zeros(N + 1, dtype=bool)
    for s in svalues:
        mask[s::s] = True
    return mask[1:]


def _step_values(values, a, N, threshold, fast):
    """Distinct s-values of column a > threshold, split at the threshold.
    """
    Fa = int(values[a - 1])
    if fast:
        earlier = values[:a - 1]
        svals = Fa // np.gcd(earlier, Fa)
        usable = (earlier > 0) & (svals <= N)
        index = np.arange(1, a)
        low = np.unique(svals[usable & (index <= threshold)])
        high = np.unique(svals[usable & (index > threshold)])
        return [int(s) for s in low], [int(s) for s in high]
    low, high = set(), set()
    for b in range(1, a):
        Fb = values[b - 1]
        if Fb <= 0:
            continue
        s = Fa // math.gcd(Fa, Fb)
        if s <= N:
            (low if b <= threshold else high).add(s)
    return sorted(low), sorted(high)


def _sieve_columns(coeffs, N, threshold, columns, keep):
    """Sieve one batch of columns; runs inside worker processes.

    Returns:
        list: one ColumnResult per requested column, in the given order
    """
    F = IntPoly(coeffs)
    top = max(columns)
    values = [F(u) for u in range(1, top + 1)]
    fast = max(abs(v) for v in values) < FAST_PATH_BOUND
    if fast:
        values = np.array(values, dtype=np.int64)
    results = []
    for a in columns:
        if a <= threshold:
            invisible = np.array(
                [not visible_along(F, a, h) for h in range(1, N + 1)],
                dtype=bool)
            eF = int(invisible.sum())
        else:
            low, high = _step_values(values, a, N, threshold, fast)
            low_mask, high_mask = _mark(low, N), _mark(high, N)
            invisible = low_mask | high_mask
            eF = int((low_mask & ~high_mask).sum())
        ordinates = None
        if keep:
            ordinates = tuple(int(h) + 1 for h in np.flatnonzero(invisible))
        results.append(ColumnResult(a, int(invisible.sum()), eF, ordinates))
    return results


def _batches(N, workers):
    """Round-robin column batches so each worker gets a share of the
    expensive high columns."""
    count = max(1, min(N, workers * 4))
    return [list(range(1 + i, N + 1, count)) for i in range(count)]


def default_workers():
    return os.cpu_count() or 1


def sieve_invisible(line, N, keep_points=True, workers=1, threshold=None):
    """Classify every point of [1, N]^2 along ``line``.

    Args:
        line (SightLine): the line of sight
        N (int): box size, >= 1
        keep_points (bool): retain the per-column invisible ordinates
        workers (int): number of worker processes; 1 runs inline
        threshold (int, optional): columns at or below it use the oracle and
            count towards E_F; defaults to n_F, any larger value is valid

    Returns:
        VisibilityGrid: counts are identical for every worker count
    """
    if N < 1:
        raise DomainError("N must be positive")
    if threshold is None:
        threshold = line.nF
    elif threshold < line.nF:
        raise DomainError("threshold below n_F")
    coeffs = line.F.coeffs
    if workers > 1 and N >= MIN_PARALLEL_COLUMNS:
        batches = _batches(N, workers)
        log.debug("Sieving %d columns of %s in %d batches on %d workers",
                  N, line, len(batches), workers)
        with ProcessPoolExecutor(max_workers=workers) as executor:
            parts = executor.map(
                _sieve_columns,
                [coeffs] * len(batches), [N] * len(batches),
                [threshold] * len(batches), batches,
                [keep_points] * len(batches))
            results = [result for part in parts for result in part]
    else:
        log.debug("Sieving %d columns of %s inline", N, line)
        results = _sieve_columns(coeffs, N, threshold, range(1, N + 1),
                                 keep_points)
    results = sorted(results, key=lambda column: column.a)
    invisible = sum(column.invisible for column in results)
    eF = sum(column.eF for column in results)
    columns = None
    if keep_points:
        columns = {column.a: column.ordinates for column in results}
    log.info("%s, N=%d: %d invisible of %d", line, N, invisible, N * N)
    return VisibilityGrid(line, N, N * N - invisible, invisible, eF,
                          threshold, columns)


def count_visibility(line, N, workers=1):
    """Visible and invisible counts over [1, N]^2; they sum to N^2."""
    grid = sieve_invisible(line, N, keep_points=False, workers=workers)
    return VisibilityCounts(grid.visible, grid.invisible)


def eF_count(line, N, threshold=None, workers=1):
    """Invisible points of [1, N]^2 all of whose blockers have b <= n_F.
    """
    return sieve_invisible(line, N, keep_points=False, workers=workers,
                           threshold=threshold).eF


class EFBreakdown(NamedTuple):
    low_columns: int
    high_columns: int
    bound: int


def eF_breakdown(line, N, workers=1):
    """Split E_F(N) into points in columns a <= n_F and points above n_F
    that are blocked only from below n_F; each part is under n_F * N and
    ``bound`` is 2 * n_F * N."""
    grid = sieve_invisible(line, N, keep_points=True, workers=workers)
    low = sum(len(grid.columns[a]) for a in range(1, min(line.nF, N) + 1))
    return EFBreakdown(low, grid.eF - low, 2 * line.nF * N)
