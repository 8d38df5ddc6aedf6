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

"""Reference and empirical densities of visible points

Known values: D(x) = 1/zeta(2), D(alpha*x^b) = 1/zeta(1+b), and for the
excluded forms a(ux+v)^b the Euler product over primes not dividing u,

    D = 1/zeta(1+b) * prod_{p | u} (1 - p^-(1+b))^-1.

Polynomials with two or more distinct roots are expected to have density 1;
that is proven for F = f^m with deg f >= 2 and m >= 2, and only conjectured
otherwise. A polynomial typed out in full, such as (x^2-1)^2, is recognised as
such a power.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import NamedTuple, Optional

import numpy as np
from sympy import primefactors

from polyvis.curves import DEFAULT_PRECISION, probe_family
from polyvis.errors import DomainError
from polyvis.poly import (
    is_excluded_form, perfect_power, squarefree_part, to_text,
)
from polyvis.visibility import count_visibility

log = logging.getLogger(__name__)

DENSITY_ZETA_TOL = 1e-12


class CertifiedReal(NamedTuple):
    """A float together with a bound on its absolute error."""
    value: float
    error: float


@lru_cache(maxsize=32)
def zeta(k, tol=DENSITY_ZETA_TOL):
    """zeta(k) with certified absolute error at most ``tol``.

    The partial sum up to M is completed by the midpoint of the integral
    bracket for the tail,

        (M+1)^(1-k)/(k-1) <= sum_{n>M} n^-k <= M^(1-k)/(k-1),

    whose half-width is below M^-k / 2; M is the least integer with
    M^-k <= tol. ``math.fsum`` keeps rounding to a few ulps.

    Raises:
        DomainError: k < 2 ("divergent") or tol <= 0.
    """
    if k < 2:
        raise DomainError("divergent")
    if tol <= 0:
        raise DomainError("tolerance must be positive")
    M = max(1, math.ceil(tol ** (-1.0 / k)))
    partial = math.fsum(n ** -k for n in range(1, M + 1))
    upper = M ** (1 - k) / (k - 1)
    lower = (M + 1) ** (1 - k) / (k - 1)
    value = partial + (upper + lower) / 2
    error = (upper - lower) / 2 + 8 * math.ulp(value)
    log.debug("zeta(%d) ~ %.15f with %d terms, error <= %.3g",
              k, value, M, error)
    return CertifiedReal(value, error)


@dataclass(frozen=True)
class ReferenceDensity:
    value: float
    error: float
    conjectural: bool
    source: str

    def as_dict(self):
        return {"value": self.value, "error": self.error,
                "conjectural": self.conjectural, "source": self.source}


def excluded_density(a, u, v, b, tol=DENSITY_ZETA_TOL):
    """Density of the excluded form a(ux+v)^b (independent of a and v)."""
    z = zeta(1 + b, tol)
    value = 1 / z.value
    error = z.error / (z.value * (z.value - z.error))
    for p in primefactors(u):
        value /= 1 - p ** -(1 + b)
        error /= 1 - p ** -(1 + b)
    return ReferenceDensity(value, error + 4 * math.ulp(value), False,
                            f"euler-product u={u} b={b}")


def known_density(F, m=1, tol=DENSITY_ZETA_TOL):
    """Reference density of F (given as f with outer exponent m).

    Args:
        F (IntPoly): nonconstant, positive leading coefficient
        m (int): outer exponent; F^m is the line of sight

    Returns:
        ReferenceDensity: Euler product for excluded forms, otherwise 1,
            flagged conjectural unless F^m is a power g^k with k >= 2 and
            g has at least two distinct roots

    Raises:
        DomainError: constant F or nonpositive leading coefficient.
    """
    if F.is_constant:
        raise DomainError("constant polynomial")
    if F.leading <= 0:
        raise DomainError("nonpositive leading coefficient")
    form = is_excluded_form(F)
    if form is not None:
        return excluded_density(form.a, form.u, form.v, form.b * m, tol)
    # F = c * g^k counts as the power g^(k*m)
    k = perfect_power(F).k
    proven = m * k >= 2 and squarefree_part(F).degree >= 2
    return ReferenceDensity(1.0, 0.0, not proven,
                            "theorem" if proven else "conjecture")


def reference_for(line, tol=DENSITY_ZETA_TOL):
    return known_density(line.f, line.m, tol)


def empirical_density(line, N, workers=1):
    """Visible share of [1, N]^2."""
    counts = count_visibility(line, N, workers=workers)
    return counts.visible / (N * N)


class DensityRow(NamedTuple):
    N: int
    visible: int
    invisible: int
    density: float
    invisible_fraction: float


@dataclass
class DensityReport:
    F: str
    rows: list = field(default_factory=list)
    reference: Optional[ReferenceDensity] = None
    fitted_exponent: Optional[float] = None
    exponent_target: Optional[float] = None

    @property
    def reference_density(self):
        return None if self.reference is None else self.reference.value


def fit_exponent(rows):
    """Least-squares slope of log(invisible) against log(N).

    Rows without invisible points are dropped; fewer than two remaining
    rows give None.
    """
    usable = [(row.N, row.invisible) for row in rows if row.invisible > 0]
    if len({n for n, _ in usable}) < 2:
        return None
    logs = np.log(np.array(usable, dtype=float))
    slope, _ = np.polyfit(logs[:, 0], logs[:, 1], 1)
    return float(slope)


def exponent_target(line, probe_s_max=6, precision=DEFAULT_PRECISION):
    """1 + 1/2 when the probe finds no linear factor on any G_{s,r} with
    s <= probe_s_max, else None."""
    if line.f.degree < 2:
        return None
    family = probe_family(line.f, probe_s_max, precision)
    if family.delta_lower_bound >= 2:
        return 1 + 1 / family.delta_lower_bound
    return None


def density_report(line, N_list, workers=1, probe_s_max=6,
                   precision=DEFAULT_PRECISION, tol=DENSITY_ZETA_TOL):
    """Rows for every N in ``N_list`` plus reference and exponent fit."""
    if not N_list:
        raise DomainError("need at least one N")
    if any(n < 1 for n in N_list) or list(N_list) != sorted(set(N_list)):
        raise DomainError("N values must be positive and ascending")
    rows = []
    for N in N_list:
        counts = count_visibility(line, N, workers=workers)
        rows.append(DensityRow(N, counts.visible, counts.invisible,
                               counts.visible / (N * N),
                               counts.invisible / (N * N)))
    return DensityReport(
        F=to_text(line.F), rows=rows, reference=reference_for(line, tol),
        fitted_exponent=fit_exponent(rows),
        exponent_target=exponent_target(line, probe_s_max, precision))


def convergence_report(line, N_list, workers=1, probe_s_max=6,
                       precision=DEFAULT_PRECISION, tol=DENSITY_ZETA_TOL):
    """Density report over at least two box sizes.

    Raises:
        DomainError: fewer than two N values.
    """
    if len(N_list) < 2:
        raise DomainError("convergence needs at least two N values")
    return density_report(line, N_list, workers, probe_s_max, precision,
                          tol)
