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

"""The gcd sum S_F(N) and its pair counting functions

For F = f^m and a pair n < b < a the gcd ratio collapses to

    gcd(F(a), F(b)) / F(a) = 1 / s(a, b)^m,   s(a, b) = f(a) / gcd(f(a), f(b))

so S_F(N) is a sum of unit fractions over pairs. Everything here is exact
(``fractions.Fraction``); the direct sum and the sum regrouped by (s, r)
must agree to the last bit.

The pair threshold n is max(n_F, n_f): above it F is positive and
dominating, and f(a) > f(b) > 0 as well.
"""

from __future__ import annotations

import logging
import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from polyvis.errors import DomainError
from polyvis.poly import compute_nF
from polyvis.visibility import sieve_invisible

log = logging.getLogger(__name__)


class GcdTriple(NamedTuple):
    g: int
    s: int
    r: int


@dataclass(frozen=True)
class GcdSumReport:
    """Witnesses of #Invisible_F(N) <= N * S_F(N) + 2 * n * N."""
    N: int
    threshold: int
    S_direct: Fraction
    S_rearranged: Fraction
    invisible_count: int
    eF: int
    bound_rhs: Fraction

    @property
    def identity_ok(self):
        return self.S_direct == self.S_rearranged

    @property
    def bound_ok(self):
        return self.invisible_count <= self.bound_rhs

    @property
    def eF_ok(self):
        return self.eF < 2 * self.threshold * self.N or self.eF == 0


def pair_threshold(f, m=1):
    """max(n_F, n_f) for F = f^m."""
    return max(compute_nF(f ** m), compute_nF(f))


def gsr(f, a, b):
    """The decomposition f(a) = g*s, f(b) = g*r with gcd(s, r) = 1.

    Raises:
        DomainError: unless n_f < b < a.
    """
    if not compute_nF(f) < b < a:
        raise DomainError("pair outside threshold domain")
    fa, fb = f(a), f(b)
    g = math.gcd(fa, fb)
    return GcdTriple(g, fa // g, fb // g)


def gcd_power_identity_check(f, m, a, b):
    """gcd(f(a)^m, f(b)^m) == gcd(f(a), f(b))^m, checked directly."""
    g = gsr(f, a, b).g
    return math.gcd(f(a) ** m, f(b) ** m) == g ** m


def _values(f, N):
    return [None] + [f(x) for x in range(1, N + 1)]


def _pairs(f, N, threshold):
    """Yield (a, s, r) for threshold < b < a <= N."""
    values = _values(f, N)
    for a in range(threshold + 2, N + 1):
        fa = values[a]
        for b in range(threshold + 1, a):
            fb = values[b]
            g = math.gcd(fa, fb)
            yield a, fa // g, fb // g


def s_sum_direct(f, m, N):
    """S_F(N) as the plain double sum of 1/s(a, b)^m.

    Column sums are formed first; their denominators divide f(a)^m, which
    keeps the running Fraction small.
    """
    threshold = pair_threshold(f, m)
    total = Fraction(0)
    column, current = Fraction(0), None
    for a, s, _ in _pairs(f, N, threshold):
        if a != current:
            total += column
            column, current = Fraction(0), a
        column += Fraction(1, s ** m)
    return total + column


def msr_spectrum(f, N, threshold=None):
    """Counter mapping (s, r) to M_{s,r}(N), built in one pass."""
    if threshold is None:
        threshold = compute_nF(f)
    return Counter((s, r) for _, s, r in _pairs(f, N, threshold))


def msr_pairs(f, N, s, r, threshold=None):
    """The pairs (a, b) in [n+1, N]^2 with s(a, b) = s and r(a, b) = r.

    f is injective above the threshold, so each a with s | f(a) has at most
    one partner b, found by value lookup.
    """
    if s <= r:
        raise DomainError("require s > r")
    if r < 1:
        raise DomainError("require r >= 1")
    if threshold is None:
        threshold = compute_nF(f)
    if math.gcd(s, r) > 1 or N <= threshold or s > f(N):
        return []
    by_value = {f(b): b for b in range(threshold + 1, N + 1)}
    found = []
    for a in range(threshold + 1, N + 1):
        fa = f(a)
        if fa % s:
            continue
        b = by_value.get(fa // s * r)
        if b is not None:
            found.append((a, b))
    return found


def m_sr(f, N, s, r, threshold=None):
    """M_{s,r}(N): the number of pairs realizing (s, r)."""
    return len(msr_pairs(f, N, s, r, threshold))


def s_sum_rearranged(f, m, N):
    """S_F(N) grouped by s: the sum over s of (sum_r M_{s,r}(N)) / s^m."""
    threshold = pair_threshold(f, m)
    per_s = Counter()
    for (s, _), count in msr_spectrum(f, N, threshold).items():
        per_s[s] += count
    return sum((Fraction(count, s ** m) for s, count in sorted(per_s.items())),
               Fraction(0))


def verify_inequality_chain(line, N, workers=1):
    """Check #Invisible_F(N) <= N * S_F(N) + 2 * n * N exactly.

    The E_F term uses the same threshold n as the sum, so the chain holds
    term by term.

    Raises:
        DomainError: if N does not exceed the threshold.
    """
    threshold = line.pair_threshold
    if N <= threshold:
        raise DomainError("threshold exceeds range")
    direct = s_sum_direct(line.f, line.m, N)
    rearranged = s_sum_rearranged(line.f, line.m, N)
    grid = sieve_invisible(line, N, keep_points=False, workers=workers,
                           threshold=threshold)
    report = GcdSumReport(
        N=N, threshold=threshold, S_direct=direct, S_rearranged=rearranged,
        invisible_count=grid.invisible, eF=grid.eF,
        bound_rhs=N * direct + 2 * threshold * N)
    if not (report.identity_ok and report.bound_ok):
        log.warning("Inequality chain failed for %s at N=%d", line, N)
    return report


class SublinearityRow(NamedTuple):
    N: int
    S: Fraction
    ratio: float


def sublinearity_profile(f, m, N_list):
    """Rows (N, S_F(N), S_F(N)/N) for the o(N) criterion."""
    rows = []
    for N in N_list:
        S = s_sum_direct(f, m, N)
        rows.append(SublinearityRow(N, S, float(S / N)))
    return rows

