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

""" Curve-related CLI commands: s*f(y) - r*f(x) = 0
"""

import click
import mpmath

from polyvis import cli, curves
from polyvis.cli import _common
from polyvis.poly import to_text


@cli.root.command(name="curve")
@_common.base_poly_opt
@click.option("--s", "s", type=int, required=True, help="The larger ratio.")
@click.option("--r", "r", type=int, required=True, help="The smaller ratio.")
@_common.box_opt(default=100)
@_common.format_opt
@click.pass_obj
def curve_cmd(helper, f_text, s, r, n):
    """ List the integer points of s*f(y) = r*f(x) in [1, N]^2.
    """
    f = helper.base_poly(f_text)

    def compute():
        points = curves.integer_points(curves.CurveSpec(f, s, r), n)
        return {
            "f": to_text(f),
            "s": s,
            "r": r,
            "N": n,
            "count": len(points),
            "rows": [{"x": x, "y": y} for x, y in points],
        }

    helper.output(helper.compute("curve", to_text(f),
                                 {"N": n, "s": s, "r": r}, compute))


@cli.root.command(name="msr")
@_common.base_poly_opt
@click.option(
    "--m", "m", type=click.IntRange(min=1), default=1, show_default=True,
    help="Outer exponent of F = f^m; weights the rows by 1/s^m.")
@_common.box_opt()
@click.option(
    "--s-max", "s_max", type=click.IntRange(min=2), default=10,
    show_default=True, help="Check every coprime r < s <= s-max.")
@_common.format_opt
@click.pass_obj
def msr_cmd(helper, f_text, m, n, s_max):
    """ Compare the pair counts M_{s,r}(N) with curve point counts.

    Every pair counted by M_{s,r}(N) is a point of s*f(y) = r*f(x), so the
    pair count never exceeds the point count. Exits with 1 if a row fails.
    """
    f = helper.base_poly(f_text)

    def compute():
        report = curves.verify_msr_bound(f, m, n, s_max)
        return {
            "f": to_text(f),
            "m": m,
            "N": n,
            "threshold": report.threshold,
            "ok": report.ok,
            "rows": [dict(row._asdict(), ok=row.ok) for row in report.rows],
        }

    payload = helper.compute("msr", to_text(f),
                             {"N": n, "m": m, "s_max": s_max}, compute)
    helper.output(payload)
    if not payload["ok"]:
        raise SystemExit(1)


def _complex_text(value):
    return mpmath.nstr(mpmath.chop(value, tol=mpmath.mpf(10) ** -20), 15)


@cli.root.command(name="probe")
@_common.base_poly_opt
@click.option("--s", "s", type=int, help="Probe this s only (needs --r).")
@click.option("--r", "r", type=int, help="Probe this r only (needs --s).")
@click.option(
    "--s-max", "s_max", type=click.IntRange(min=2), default=None,
    help="""Probe every coprime r < s <= s-max. Defaults to the configured
    probe_s_max.""")
@click.option(
    "--dps", type=click.IntRange(min=15), default=None,
    help="Working precision in decimal digits, default from configuration.")
@_common.format_opt
@click.pass_obj
def probe_cmd(helper, f_text, s, r, s_max, dps):
    """ Search the curves s*f(y) - r*f(x) for linear factors.

    With --s/--r a single curve is probed; otherwise the whole family up to
    --s-max. A family without linear factors certifies the invisible-count
    exponent target 1 + 1/2. Exits with 4 when the residual of a candidate
    is neither clearly zero nor clearly nonzero; raise --dps then.
    """
    f = helper.base_poly(f_text)
    if (s is None) != (r is None):
        click.echo("Error: --s and --r go together.", err=True)
        raise SystemExit(2)
    precision = dps or int(helper.config["probe_dps"])

    if s is not None:
        def compute():
            report = curves.linear_factor_probe(curves.CurveSpec(f, s, r),
                                                precision)
            factor = None
            if report.factor_coefficients is not None:
                factor = [_complex_text(c)
                          for c in report.factor_coefficients]
            return {
                "f": to_text(f),
                "s": s,
                "r": r,
                "linear_factor_found": report.linear_factor_found,
                "factor": factor,
                "residual": (None if report.residual is None
                             else mpmath.nstr(report.residual, 5)),
                "residual_bound": mpmath.nstr(report.residual_bound, 5),
                "delta_lower_bound": report.delta_lower_bound,
            }
        params = {"s": s, "r": r, "dps": precision}
    else:
        s_max = s_max or int(helper.config["probe_s_max"])

        def compute():
            family = curves.probe_family(f, s_max, precision)
            return {
                "f": to_text(f),
                "s_max": s_max,
                "members": family.members,
                "delta_lower_bound": family.delta_lower_bound,
                "linear_factor_found": bool(family.factored),
                "rows": [{"s": fs, "r": fr} for fs, fr in family.factored],
            }
        params = {"s_max": s_max, "dps": precision}

    helper.output(helper.compute("probe", to_text(f), params, compute))
