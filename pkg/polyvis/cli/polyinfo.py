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

""" Structural facts about a line of sight
"""

import click

from polyvis import cli
from polyvis.cli import _common
from polyvis.densities import known_density
from polyvis.poly import is_excluded_form, squarefree_part, to_text


@cli.root.command(name="inspect")
@_common.sightline_opts
@_common.format_opt
@click.pass_obj
def inspect_cmd(helper, poly_text, f_text, m):
    """ Show canonical form, thresholds and reference density of F.
    """
    line = helper.sightline(poly_text, f_text, m)
    form = is_excluded_form(line.F)
    reference = known_density(line.f, line.m,
                              float(helper.config["zeta_tol"]))
    helper.output({
        "F": line.key,
        "f": to_text(line.f),
        "m": line.m,
        "degree": line.F.degree,
        "squarefree_part": to_text(squarefree_part(line.F)),
        "distinct_roots": line.distinct_roots,
        "excluded_form": None if form is None else form._asdict(),
        "nF": line.nF,
        "nf": line.nf,
        "pair_threshold": line.pair_threshold,
        "reference": reference.as_dict(),
    })
