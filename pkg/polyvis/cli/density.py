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

""" Empirical densities against their reference values
"""

import click

from polyvis import cli, densities
from polyvis.cli import _common
from polyvis.poly import to_text


def csv_rows(payload):
    """ Flatten a density payload to the documented CSV columns. """
    reference = payload["reference"]
    return [{
        "N": row["N"],
        "visible": row["visible"],
        "invisible": row["invisible"],
        "density": row["density"],
        "reference": None if reference is None else reference["value"],
        "fitted_exponent": payload["fitted_exponent"],
    } for row in payload["rows"]]


@cli.root.command(name="density")
@_common.sightline_opts
@_common.box_list_opt
@_common.format_opt
@click.pass_obj
def density_cmd(helper, poly_text, f_text, m, ns):
    """ Empirical density of visible points for each N in --Ns.

    Each row classifies the box [1, N]^2. The reference density is exact
    for x^b and the forms a(ux+v)^b, and 1 (marked conjectural unless
    proven) for polynomials with at least two distinct roots. With two or
    more rows the growth exponent of the invisible count is fitted and,
    when the curve probe certifies it, compared with its target 1 + 1/2.
    """
    line = helper.sightline(poly_text, f_text, m)
    if list(ns) != sorted(set(ns)):
        click.echo("Error: --Ns must be strictly ascending.", err=True)
        raise SystemExit(2)

    def compute():
        report_func = (densities.convergence_report if len(ns) > 1
                       else densities.density_report)
        report = report_func(
            line, list(ns), workers=helper.workers,
            probe_s_max=int(helper.config["probe_s_max"]),
            precision=int(helper.config["probe_dps"]),
            tol=float(helper.config["zeta_tol"]))
        return {
            "F": report.F,
            "reference": (None if report.reference is None
                          else report.reference.as_dict()),
            "fitted_exponent": report.fitted_exponent,
            "exponent_target": report.exponent_target,
            "rows": [row._asdict() for row in report.rows],
        }

    payload = helper.compute(
        "density", line.key,
        {"Ns": ",".join(str(n) for n in ns),
         "f": to_text(line.f), "m": line.m,
         "probe_s_max": helper.config["probe_s_max"],
         "dps": helper.config["probe_dps"],
         "zeta_tol": helper.config["zeta_tol"]},
        compute)
    if helper.output_format == "csv":
        helper.output(csv_rows(payload))
    else:
        helper.output(payload)
