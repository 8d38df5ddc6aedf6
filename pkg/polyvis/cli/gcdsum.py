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

""" The gcd sum S_F(N) and the invisible-count bound it gives
"""

import click

from polyvis import cli, gcd_sums
from polyvis.cli import _common
from polyvis.poly import to_text
from polyvis.visibility import count_visibility


@cli.root.command(name="gcdsum")
@_common.sightline_opts
@_common.box_opt()
@_common.format_opt
@click.pass_obj
def gcdsum_cmd(helper, poly_text, f_text, m, n):
    """ Compute S_F(N) exactly and check the invisible-count bound.

    S_F(N) is summed twice, pair by pair and grouped by s, and both results
    must agree exactly. When N exceeds the pair threshold the bound
    #invisible <= N*S_F(N) + 2*n*N is checked as well; below it the sum is
    empty and only the counts are reported.
    """
    line = helper.sightline(poly_text, f_text, m)

    def compute():
        payload = {
            "F": line.key,
            "f": to_text(line.f),
            "m": line.m,
            "N": n,
            "threshold": line.pair_threshold,
        }
        if n > line.pair_threshold:
            report = gcd_sums.verify_inequality_chain(
                line, n, workers=helper.workers)
            payload.update({
                "S": report.S_direct,
                "S_direct": report.S_direct,
                "S_rearranged": report.S_rearranged,
                "identity_ok": report.identity_ok,
                "invisible": report.invisible_count,
                "eF": report.eF,
                "bound_rhs": report.bound_rhs,
                "bound_ok": report.bound_ok,
            })
        else:
            direct = gcd_sums.s_sum_direct(line.f, line.m, n)
            rearranged = gcd_sums.s_sum_rearranged(line.f, line.m, n)
            counts = count_visibility(line, n, workers=helper.workers)
            payload.update({
                "S": direct,
                "S_direct": direct,
                "S_rearranged": rearranged,
                "identity_ok": direct == rearranged,
                "invisible": counts.invisible,
                "eF": None,
                "bound_rhs": None,
                "bound_ok": None,
            })
        return payload

    payload = helper.compute("gcdsum", line.key,
                             {"N": n, "f": to_text(line.f), "m": line.m},
                             compute)
    helper.output(payload)
    if payload["identity_ok"] is False or payload["bound_ok"] is False:
        click.echo("Inequality chain violated.", err=True)
        raise SystemExit(1)
