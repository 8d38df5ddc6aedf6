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

""" CLI helpers and utilities"""

import csv
import io
import json
import logging
import os
import sys
from fractions import Fraction

import click
import tabulate
import yaml

from polyvis.cache import ResultCache
from polyvis.errors import DomainError, InconclusiveProbe, ParseError
from polyvis.poly import SightLine, parse_poly
from polyvis.visibility import default_workers

PAYLOAD_VERSION = 1

EXIT_PARSE = 2
EXIT_DOMAIN = 3
EXIT_INCONCLUSIVE = 4


def humanize(data):
    """ Try to display data in a human-readable form:
    - Lists of dicts are displayed as tables.
    - Scalar entries of dicts are displayed as pivoted tables, nested lists of
      dicts follow as tables of their own.
    - Lists are displayed as a simple list.
    """
    if isinstance(data, list) and len(data):
        if isinstance(data[0], dict):
            headers = {header: header for header in data[0]}
            return tabulate.tabulate(data, tablefmt="simple", headers=headers)
    if isinstance(data, list):
        return "\n".join(str(item) for item in data)
    if isinstance(data, dict):
        scalars = [(key, value) for key, value in data.items()
                   if not isinstance(value, (list, dict))]
        parts = [tabulate.tabulate(scalars, tablefmt="plain")]
        for key, value in data.items():
            if isinstance(value, dict):
                parts.append(f"\n{key}:\n" + tabulate.tabulate(
                    value.items(), tablefmt="plain"))
            elif isinstance(value, list):
                parts.append(f"\n{key}:\n" + humanize(value))
        return "\n".join(parts)
    return str(data)


def to_csv(data):
    """ A header line plus one line per row. Dicts with a "rows" list are
    written as those rows, any other dict as a single row of its scalars.
    """
    if isinstance(data, dict):
        rows = data.get("rows")
        if not isinstance(rows, list):
            rows = [{key: value for key, value in data.items()
                     if not isinstance(value, (list, dict))}]
    else:
        rows = data
    if not rows:
        return ""
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=list(rows[0]),
                            lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buffer.getvalue().rstrip("\n")


def jsonable(value):
    """ Exact rationals become "p/q" strings; containers are rebuilt. """
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, dict):
        return {str(key): jsonable(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(item) for item in value]
    return value


class CLIHelper:
    """ Computation front end enriched with CLI-level functions: logging,
    configuration, output formatting, result caching and the mapping of
    library errors to exit codes.
    """

    FORMATTERS = {
        "table": humanize,
        "csv": to_csv,
        "json": lambda data: json.dumps(data, indent=4),
        "yaml": lambda data: yaml.dump(data, sort_keys=False,
                                       allow_unicode=True).rstrip("\n"),
    }

    CONFIG = {
        "cache_dir": "~/.cache/polyvis",
        "format": "table",
        "threads": 0,
        "zeta_tol": 1e-12,
        "probe_dps": 60,
        "probe_s_max": 6,
    }

    def __init__(self, config_path, verbose, no_confirm, output_format_cli,
                 threads_cli=None, no_cache=False):
        self.config = CLIHelper.CONFIG.copy()
        self.config_path = os.path.expanduser(config_path)
        self.no_confirm = no_confirm
        self.no_cache = no_cache
        self.threads_cli = threads_cli
        self.init_logger(verbose)
        self.output_format_cli = output_format_cli  # override from cli
        self.cache = None
        self._set_formatter(output_format_cli or self.config["format"])

    def init_logger(self, verbose):
        """ Log both to console (defaults to WARNING) and file (DEBUG).

        Handlers are attached once; later calls only adjust the console
        level.
        """
        log = logging.getLogger("polyvis")
        log.setLevel(logging.DEBUG)
        console_level = (
            logging.DEBUG if verbose > 1 else
            logging.INFO if verbose == 1 else
            logging.WARNING
        )
        console = [handler for handler in log.handlers
                   if getattr(handler, "polyvis_console", False)]
        if console:
            console[0].setStream(sys.stderr)
            console[0].setLevel(console_level)
            self.log = log
            return
        console_handler = logging.StreamHandler()
        console_handler.polyvis_console = True
        console_handler.setLevel(console_level)
        console_handler.setFormatter(
            logging.Formatter("%(levelname)-5s %(message)s"))
        log.addHandler(console_handler)
        log_path = os.path.expanduser("~/.local/share/polyvis/debug.log")
        try:
            os.makedirs(os.path.dirname(log_path), exist_ok=True)
            file_handler = logging.FileHandler(log_path, encoding="utf-8")
        except OSError as error:
            log.warning("%s, not logging to file", error)
        else:
            file_handler.setLevel(logging.DEBUG)
            file_handler.setFormatter(logging.Formatter(
                "%(asctime)s %(name)-8s %(levelname)-7s %(message)s",
                datefmt="%Y-%m-%d %H:%M:%S"
            ))
            log.addHandler(file_handler)
        self.log = log

    def _set_formatter(self, _output_format):
        for name, formatter in CLIHelper.FORMATTERS.items():
            if name.startswith(_output_format):
                self.output_format = name
                self.formatter = formatter
                break
        else:
            self.log.error("Unknown output format %s, using table",
                           _output_format)
            self.output_format = "table"
            self.formatter = humanize
        self.log.debug("Formatter in use: %s", self.output_format)
        return True

    def load(self):
        """ Load the configuration and set up formatter and cache.

        A missing configuration file means defaults; an unreadable one is
        logged and defaults are kept.

        Returns:
            bool: False if the file existed but could not be used.
        """
        loaded = True
        try:
            with open(self.config_path) as handle:
                content = yaml.load(handle, Loader=yaml.SafeLoader) or {}
            if not isinstance(content, dict):
                raise ValueError("top level is not a mapping")
            self.config.update(content)
        except FileNotFoundError:
            self.log.debug("No configuration file at %s, using defaults",
                           self.config_path)
        except Exception as error:
            self.log.error("%s while reading configuration file", error)
            loaded = False
        for key, value in self.config.items():
            self.log.debug("Config entry read. %s: %s", key, value)
        if self.output_format_cli:  # we have a cli output format override
            self._set_formatter(self.output_format_cli)
        else:  # we use the configured default output format
            self._set_formatter(self.config["format"])
        cache_dir = os.environ.get("POLYVIS_CACHE") or self.config["cache_dir"]
        self.cache = ResultCache(self.log, cache_dir)
        return loaded

    def write_config(self, config):
        """ Write a new version of the configuration to file.
        """
        try:
            os.makedirs(os.path.dirname(self.config_path), exist_ok=True)
            with open(self.config_path, "w") as handle:
                yaml.dump(config, handle, default_flow_style=False,
                          allow_unicode=True)
            if os.name == "posix":
                os.chmod(self.config_path, 0o600)
            self.config.update(config)
            return True
        except Exception as error:
            self.log.error("%s trying to write configuration", error)
            return False

    @property
    def workers(self):
        """ Worker processes for the sieve; 0 means all available CPUs. """
        threads = self.threads_cli
        if threads is None:
            threads = int(self.config["threads"])
        return threads if threads > 0 else default_workers()

    def output(self, data):
        """ Output data object using the configured formatter.
        """
        click.echo(self.formatter(data))

    def fail(self, error):
        """ Report a library error and exit with its code. """
        if isinstance(error, ParseError):
            code = EXIT_PARSE
        elif isinstance(error, InconclusiveProbe):
            code = EXIT_INCONCLUSIVE
        else:
            code = EXIT_DOMAIN
        self.log.debug("%s: %s", type(error).__name__, error)
        click.echo(f"Error: {error}", err=True)
        raise SystemExit(code)

    def sightline(self, poly_text, f_text, m):
        """ Build the line of sight from --poly or --f/--m, exiting on
        invalid input.
        """
        try:
            return SightLine(parse_poly(poly_text or f_text), m)
        except (ParseError, DomainError) as error:
            self.fail(error)

    def base_poly(self, f_text):
        """ Parse a bare f for the curve commands. """
        try:
            return parse_poly(f_text)
        except ParseError as error:
            self.fail(error)

    def compute(self, command, canonical, params, func):
        """ Return the payload of a computation, from the cache if possible.

        The payload is normalized through JSON either way, so cached and
        fresh results render byte-identically.

        Args:
            command (string): command name, part of the cache key
            canonical (string): canonical polynomial string
            params (dict): remaining parameters of the computation
            func (callable): produces the payload dict; may raise library
                errors, which end the program with their exit code

        Returns:
            dict: the payload, carrying "version"
        """
        key = ResultCache.make_key(command, canonical, params)
        use_cache = not self.no_cache and self.cache is not None
        if use_cache:
            payload = self.cache.get(key)
            if payload is not None:
                return payload
        try:
            payload = {"version": PAYLOAD_VERSION, **func()}
        except (ParseError, DomainError, InconclusiveProbe) as error:
            self.fail(error)
        payload = json.loads(json.dumps(jsonable(payload)))
        if use_cache:
            self.cache.put(key, payload)
        return payload
