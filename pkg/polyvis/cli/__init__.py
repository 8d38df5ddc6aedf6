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

""" CLI root-level commands; Subcommands are imported at the bottom of file
"""

import click

output_format_help = """'table' gives a tabular view and is the default on
fresh installations. 'csv' writes a header line and one line per row,
suitable for spreadsheets and plotting tools. 'json' returns formatted json
carrying a "version" field. 'yaml' is a compromise between human- and
machine-readable output. Exact rationals are always printed as 'p/q'."""


@click.group(
    invoke_without_command=False,
    context_settings=dict(help_option_names=["-h", "--help"]))
@click.version_option()
@click.option(
    "--verbose", "-v", count=True, default=False,
    help="Enable INFO (-v) or DEBUG (-vv) logging on console.")
@click.option(
    "--no-confirm", "--batch", "--yes", "--non-interactive",
    default=False, is_flag=True,
    help="""Enable non-interactive mode. Disables all interactive prompts,
    e.g. in 'config' and 'cache clear'.""")
@click.option(
    "--output", "-o", default="",
    type=click.Choice(["table", "csv", "json", "yaml",
                       "t", "c", "j", "y", ""]),
    show_choices=True,
    help=f"Override default output format. {output_format_help}")
@click.option(
    "--config-file", "-c", type=click.Path(),
    default="~/.config/polyvis.yaml",
    help="Configuration file path.", show_default=True)
@click.option(
    "--threads", "-j", type=click.IntRange(min=0), default=None,
    help="""Worker processes for the visibility sieve. 0 uses all available
    CPUs. Results do not depend on this setting.""")
@click.option(
    "--no-cache", is_flag=True, default=False,
    help="Neither read nor write the result cache for this run.")
@click.pass_context
def root(ctx, verbose, no_confirm, output, config_file, threads, no_cache):
    """ Visible lattice points along polynomial lines of sight
    """
    from polyvis.cli._helper import CLIHelper
    ctx.obj = CLIHelper(config_file, verbose, no_confirm, output, threads,
                        no_cache)
    if not ctx.obj.load() and ctx.invoked_subcommand != "config":
        click.echo("Configuration file unusable, running with defaults. "
                   "Fix it with: polyvis config", err=True)


@root.command(name="config")
@click.option(
    "--cache-dir", "-d", type=str,
    help="""Directory of the result cache. The POLYVIS_CACHE environment
    variable takes precedence.""")
@click.option(
    "--output", "-o", type=click.Choice(["table", "csv", "json", "yaml"]),
    help=f"""How polyvis displays data by default. {output_format_help} The
    default output format can always be overridden by using the global
    --output/-o switch (eg 'polyvis -o json visible -p x -N 10').""")
@click.option(
    "--threads", "-j", type=click.IntRange(min=0),
    help="Default number of sieve worker processes, 0 for all CPUs.")
@click.option(
    "--zeta-tol", type=click.FloatRange(min=0, min_open=True),
    help="Certified error bound for zeta values in reference densities.")
@click.option(
    "--probe-dps", type=click.IntRange(min=15),
    help="Working precision (decimal digits) of the linear-factor probe.")
@click.option(
    "--probe-s-max", type=click.IntRange(min=2),
    help="""Largest s probed when deciding the exponent target of density
    reports.""")
@click.pass_obj
def config_cmd(helper, cache_dir, output, threads, zeta_tol, probe_dps,
               probe_s_max):
    """ Modify polyvis' configuration.

    Settings are asked interactively; command line options override the
    suggested defaults in the prompts. With --batch only the given options
    change and everything else keeps its current value.
    """
    given = {
        "cache_dir": cache_dir,
        "format": output,
        "threads": threads,
        "zeta_tol": zeta_tol,
        "probe_dps": probe_dps,
        "probe_s_max": probe_s_max,
    }
    current = {key: helper.config[key] for key in given}

    if helper.no_confirm:
        new = {key: value if value is not None else current[key]
               for key, value in given.items()}
        if helper.write_config(new):
            click.echo(f"Saved configuration to {helper.config_path}.")
            raise SystemExit(0)
        click.echo("Writing the configuration failed.", err=True)
        raise SystemExit(1)

    def default(key):
        return given[key] if given[key] is not None else current[key]

    click.echo("Running configurator...")
    written = helper.write_config({
        "cache_dir": click.prompt(
            "Result cache directory", default=default("cache_dir")),
        "format": click.prompt(
            "Default output format", default=default("format"),
            type=click.Choice(["table", "csv", "json", "yaml"])),
        "threads": click.prompt(
            "Sieve worker processes (0 = all CPUs)",
            default=default("threads"), type=click.IntRange(min=0)),
        "zeta_tol": click.prompt(
            "Zeta tolerance", default=default("zeta_tol"),
            type=click.FloatRange(min=0, min_open=True)),
        "probe_dps": click.prompt(
            "Probe precision in decimal digits",
            default=default("probe_dps"), type=click.IntRange(min=15)),
        "probe_s_max": click.prompt(
            "Largest s for the exponent target probe",
            default=default("probe_s_max"), type=click.IntRange(min=2)),
    })
    if not written:
        click.echo("Writing the configuration failed.", err=True)
        raise SystemExit(1)


# Import additional commands
from polyvis.cli import visible, gcdsum, curve, density, polyinfo, cache  # noqa: F401, E402, E501
