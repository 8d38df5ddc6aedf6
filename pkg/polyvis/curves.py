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

"""The curve family G_{s,r}(x, y) = s*f(y) - r*f(x)

Every pair counted by M_{s,r}(N) is an integer point of G_{s,r} = 0 in the
box [1, N]^2, so point counts on these curves bound the gcd sum. The
probe below certifies that G_{s,r} has no linear factor over the complex
numbers, which is what puts the invisible-count exponent at 1 + 1/2.
"""

from __future__ import annotations

import bisect
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional

import mpmath

from polyvis.errors import DomainError, InconclusiveProbe
from polyvis.gcd_sums import msr_pairs, pair_threshold
from polyvis.poly import compute_nF

log = logging.getLogger(__name__)

DEFAULT_PRECISION = 60


@dataclass(frozen=True)
class CurveSpec:
    """G_{s,r} stored as (f, s, r); the expansion is derived on demand."""
    f: object
    s: int
    r: int

    def __post_init__(self):
        if self.s <= self.r:
            raise DomainError("require s > r")
        if self.r < 1:
            raise DomainError("require r >= 1")
        if math.gcd(self.s, self.r) != 1:
            raise DomainError("require gcd(s, r) = 1")
        if self.f.is_constant:
            raise DomainError("constant polynomial")

    def __call__(self, x, y):
        return self.s * self.f(y) - self.r * self.f(x)

    @property
    def total_degree(self):
        return self.f.degree

    def terms(self):
        """Expanded coefficients as {(i, j): c} for c * x^i * y^j."""
        out = {}
        for power, c in enumerate(self.f.coeffs):
            if not c:
                continue
            if power == 0:
                out[(0, 0)] = (self.s - self.r) * c
            else:
                out[(power, 0)] = -self.r * c
                out[(0, power)] = self.s * c
        return {key: value for key, value in out.items() if value}

    def __str__(self):
        return f"{self.s}*f(y)-{self.r}*f(x), f = {self.f}"


def integer_points(curve, N):
    """All (x, y) in [1, N]^2 with s*f(y) = r*f(x), ascending.

    Below the increase threshold of f the y-values are tabulated; above it f
    is strictly increasing and each column is a bisection. f and -f cut out
    the same curve, so f is searched with positive leading coefficient.
    """
    f, s, r = curve.f, curve.s, curve.r
    if f.leading < 0:
        f = -f
    nf = compute_nF(f)
    low = {}
    for y in range(1, min(nf, N) + 1):
        low.setdefault(f(y), []).append(y)
    tail = range(nf + 1, N + 1)
    points = []
    for x in range(1, N + 1):
        target, rem = divmod(r * f(x), s)
        if rem:
            continue
        ys = list(low.get(target, ()))
        if tail:
            i = bisect.bisect_left(tail, target, key=f)
            if i < len(tail) and f(tail[i]) == target:
                ys.append(tail[i])
        points.extend((x, y) for y in ys)
    return points


class MsrRow(NamedTuple):
    s: int
    r: int
    msr: int
    points: int
    restricted_match: bool
    weight: Fraction

    @property
    def ok(self):
        return self.msr <= self.points and self.restricted_match


@dataclass
class MsrBoundReport:
    f: object
    m: int
    N: int
    threshold: int
    rows: list

    @property
    def ok(self):
        return all(row.ok for row in self.rows)


def verify_msr_bound(f, m, N, s_max):
    """Compare M_{s,r}(N) with the point count of G_{s,r} on [1, N]^2.

    For every coprime s > r with s <= s_max: M_{s,r}(N) never exceeds the
    point count, and the points in (n, N]^2 with f(a), f(b) > 0 are exactly
    the pairs M_{s,r} counts. ``weight`` is the row's share M/s^m of S_F(N).
    """
    if s_max < 2:
        raise DomainError("s_max must be at least 2")
    threshold = pair_threshold(f, m)
    rows = []
    for s in range(2, s_max + 1):
        for r in range(1, s):
            if math.gcd(s, r) != 1:
                continue
            pairs = msr_pairs(f, N, s, r, threshold)
            points = integer_points(CurveSpec(f, s, r), N)
            restricted = [(a, b) for a, b in points
                          if a > threshold and b > threshold
                          and f(a) > 0 and f(b) > 0]
            rows.append(MsrRow(s, r, len(pairs), len(points),
                               sorted(restricted) == sorted(pairs),
                               Fraction(len(pairs), s ** m)))
    return MsrBoundReport(f, m, N, threshold, rows)


class ProbeReport(NamedTuple):
    """Outcome of the linear-factor search on one curve.

    ``factor_coefficients`` is (alpha, beta, gamma) of a factor
    alpha*x + beta*y + gamma, as mpmath complex numbers.
    """
    linear_factor_found: bool
    factor_coefficients: Optional[tuple]
    residual: object
    residual_bound: object
    delta_lower_bound: int


def _compose(coeffs, lam, mu):
    """Coefficients (in y) of f(lam*y + mu) by Horner's rule."""
    result = [mpmath.mpc(0)]
    for c in reversed(coeffs):
        shifted = [mpmath.mpc(0)] * (len(result) + 1)
        for i, value in enumerate(result):
            shifted[i + 1] += value * lam
            shifted[i] += value * mu
        shifted[0] += c
        result = shifted
    return result[:len(coeffs)]


def linear_factor_probe(curve, precision=DEFAULT_PRECISION):
    """Search G_{s,r} for a linear factor alpha*x + beta*y + gamma.

    Factors with alpha = 0 or beta = 0 would force f to be constant, so only
    alpha*beta != 0 is searched: that needs s*f(y) == r*f(lam*y + mu)
    identically. Comparing leading coefficients gives lam^d = s/r; the y^(d-1)
    coefficient then fixes mu, and the remaining coefficients are checked.

    A candidate is accepted when every coefficient residual is below
    ``scale * 10^(-2*precision/3)`` and rejected above
    ``scale * 10^(-precision/3)``; anything in between is inconclusive.

    Args:
        curve (CurveSpec): the curve, deg f >= 2
        precision (int): working precision in decimal digits

    Returns:
        ProbeReport

    Raises:
        InconclusiveProbe: a residual falls between the two bounds.
    """
    f, s, r = curve.f, curve.s, curve.r
    d = f.degree
    if d < 2:
        raise DomainError("linear-factor probe needs deg(f) >= 2")
    with mpmath.workdps(precision):
        coeffs = [mpmath.mpf(c) for c in f.coeffs]
        ratio = mpmath.mpf(s) / r
        accept_exp = -(2 * precision) // 3
        reject_exp = -precision // 3
        worst = None
        for k in range(d):
            lam = mpmath.root(ratio, d, k)
            lead = d * coeffs[d] * lam ** (d - 1)
            mu = (s * coeffs[d - 1] / r - coeffs[d - 1] * lam ** (d - 1)) / lead
            composed = _compose(coeffs, lam, mu)
            residual = max(abs(r * e - s * c) for e, c in zip(composed, coeffs))
            size = 1 + abs(lam) + abs(mu)
            scale = max(abs(c) for c in coeffs) * (s + r) * size ** d
            accept = scale * mpmath.mpf(10) ** accept_exp
            reject = scale * mpmath.mpf(10) ** reject_exp
            log.debug("probe %s: root %d lam=%s mu=%s residual=%s",
                      curve, k, mpmath.nstr(lam, 8), mpmath.nstr(mu, 8),
                      mpmath.nstr(residual, 5))
            if residual <= accept:
                return ProbeReport(True, (mpmath.mpc(1), -lam, -mu),
                                   residual, accept, 1)
            if residual < reject:
                raise InconclusiveProbe("inconclusive at requested precision")
            if worst is None or reject < worst:
                worst = reject
        return ProbeReport(False, None, None, worst, 2)


class FamilyProbe(NamedTuple):
    delta_lower_bound: int
    members: int
    factored: list


def probe_family(f, s_max, precision=DEFAULT_PRECISION):
    """Probe every coprime 1 <= r < s <= s_max; the family bound is 2 only
    when no member has a linear factor."""
    factored = []
    members = 0
    for s in range(2, s_max + 1):
        for r in range(1, s):
            if math.gcd(s, r) != 1:
                continue
            members += 1
            report = linear_factor_probe(CurveSpec(f, s, r), precision)
            if report.linear_factor_found:
                factored.append((s, r))
    return FamilyProbe(1 if factored else 2, members, factored)
