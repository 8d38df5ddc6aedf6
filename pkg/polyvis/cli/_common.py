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
"Common CLI options, option groups, helpers and utilities."

import click

from click_option_group import optgroup, RequiredMutuallyExclusiveOptionGroup

FORMAT_CHOICES = ["table", "csv", "json", "yaml", "t", "c", "j", "y"]


def sightline_opts(function):
    """ --poly or --f, plus the outer exponent --m. """
    function = click.option(
        "--m", "m", type=click.IntRange(min=1), default=1, show_default=True,
        help="""Outer exponent: the line of sight is F = f^m. Applies to
        --poly as well.""")(function)
    function = optgroup.option(
        "--f", "f_text", type=str,
        help="""The base polynomial f, e.g. 'x^2-1'. Use together with --m
        when F is a power.""")(function)
    function = optgroup.option(
        "--poly", "-p", "poly_text", type=str,
        help="""The polynomial F in x, e.g. '(x^2-1)^2' or '2*x+1'. Integer
        coefficients, + - * ^ and parentheses.""")(function)
    return optgroup.group(
        "Line of sight",
        cls=RequiredMutuallyExclusiveOptionGroup,
        help="The polynomial the lattice is looked at along.")(function)


def base_poly_opt(function):
    return click.option(
        "--f", "f_text", type=str, required=True,
        help="The base polynomial f of the curves s*f(y) - r*f(x).")(function)


def box_opt(default=None):
    """ --N, the box [1, N]^2 under consideration. """
    def decorator(function):
        return click.option(
            "--N", "-N", "n", type=click.IntRange(min=1),
            default=default, required=default is None,
            show_default=default is not None,
            help="Size of the box [1, N]^2.")(function)
    return decorator


def _split_ns(ctx, param, value):
    if value is None:
        return None
    try:
        values = tuple(int(item) for item in value.split(",") if item.strip())
    except ValueError:
        raise click.BadParameter("expected a comma separated list of "
                                 "integers, e.g. 500,1000,2000")
    if not values or any(n < 1 for n in values):
        raise click.BadParameter("box sizes must be positive")
    return values


def box_list_opt(function):
    """ --Ns, ascending comma separated box sizes. """
    return click.option(
        "--Ns", "ns", type=str, required=True, callback=_split_ns,
        help="Comma separated ascending box sizes, e.g. 500,1000,2000."
    )(function)


def _override_format(ctx, param, value):
    if value:
        ctx.obj._set_formatter(value)
    return value


def format_opt(function):
    """ Per-command --format, overriding the global --output/-o. """
    return click.option(
        "--format", type=click.Choice(FORMAT_CHOICES),
        expose_value=False, callback=_override_format,
        help="Output format for this command: table, csv, json or yaml."
    )(function)
