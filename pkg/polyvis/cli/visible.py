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

""" Visible and invisible lattice points along a line of sight
"""

import click

from polyvis import visibility
from polyvis.errors import DomainError
from polyvis import cli
from polyvis.cli import _common


@cli.root.command(name="visible")
@_common.sightline_opts
@_common.box_opt()
@click.option(
    "--points", "list_points", is_flag=True, default=False,
    help="""Also list every invisible point (a, h) of the box. Only sensible
    for small N.""")
@_common.format_opt
@click.pass_obj
def visible_cmd(helper, poly_text, f_text, m, n, list_points):
    """ Count visible and invisible points of [1, N]^2.

    A point (a, h) is visible along F if no point (b, k) with b < a lies on
    the same curve y = t*F(x). Points in columns with F(a) = 0 are
    invisible.
    """
    line = helper.sightline(poly_text, f_text, m)

    def compute():
        grid = visibility.sieve_invisible(
            line, n, keep_points=list_points, workers=helper.workers)
        payload = {
            "F": line.key,
            "N": n,
            "visible": grid.visible,
            "invisible": grid.invisible,
            "density": grid.visible / (n * n),
        }
        if list_points:
            payload["rows"] = [{"a": point.a, "h": point.h}
                               for point in grid.invisible_points()]
        return payload

    helper.output(helper.compute(
        "visible", line.key, {"N": n, "points": list_points}, compute))


@cli.root.command(name="blockers")
@_common.sightline_opts
@click.argument("a", type=click.IntRange(min=2))
@click.argument("h", type=click.IntRange(min=1))
@click.option(
    "--limit", "-l", type=click.IntRange(min=1), default=None,
    help="Stop after this many blockers.")
@_common.format_opt
@click.pass_obj
def blockers_cmd(helper, poly_text, f_text, m, a, h, limit):
    """ List the points (b, k), b < A, blocking the point (A, H).
    """
    line = helper.sightline(poly_text, f_text, m)
    try:
        found = visibility.blockers(line, a, h, limit)
        is_visible = visibility.visible_oracle(line, a, h)
    except DomainError as error:
        helper.fail(error)
    helper.output({
        "F": line.key,
        "a": a,
        "h": h,
        "visible": is_visible,
        "rows": [{"b": b, "k": k} for b, k in found],
    })
