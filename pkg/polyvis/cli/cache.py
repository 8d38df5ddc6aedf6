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

""" Result cache-related CLI commands
"""

import click

from polyvis import cli


@cli.root.group()
def cache():
    """ Inspect or clear the result cache.
    """


@cache.command(name="list")
@click.pass_obj
def cache_list_cmd(helper):
    """ List cached results by key.
    """
    entries = helper.cache.entries()
    if helper.output_format == "table" and not entries:
        click.echo(f"No cached results in {helper.cache.cache_dir}.")
        return
    helper.output([{"key": key, "hash": digest}
                   for key, digest in sorted(entries.items())])


@cache.command(name="clear")
@click.pass_obj
def cache_clear_cmd(helper):
    """ Remove all cached results.
    """
    if not helper.no_confirm:
        click.confirm(f"Remove all cached results in "
                      f"{helper.cache.cache_dir}?", abort=True)
    removed = helper.cache.clear()
    click.echo(f"Removed {removed} cached results.")
