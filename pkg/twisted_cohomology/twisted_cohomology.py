# -*- coding: utf-8 -*-

"""The command-line driver: options, configuration, reports and exit codes.

The problem comes from a JSON file given with --problem and from flags, the
flags taking precedence. Options not given either way come from the user's
configuration file, which is created from the packaged default the first time
it is needed.
"""

import argparse
import configparser
import importlib.resources
import json
import logging
import os
from pathlib import Path
import sys

import seamm_util

from .commands import COMMANDS
from .errors import TwistedCohomologyError
from .metadata import metadata
from .problem_parameters import ProblemSpec, convert, parameters, read_problem_file

logger = logging.getLogger(__name__)

SECTION = "twisted-cohomology"
CONFIG_ENV = "TWISTED_COHOMOLOGY_CONFIG"
THREADS_ENV = "TWISTED_COHOMOLOGY_THREADS"
DEFAULT_CONFIG = "~/.config/twisted_cohomology.ini"

# Configuration keys that supply problem parameters
CONFIG_PARAMETERS = {
    "max-degree": "max degree",
    "seed": "seed",
    "samples": "samples",
    "threads": "threads",
}


class TwistedCohomology:
    """The twisted-cohomology command-line tool.

    Parameters
    ----------
    stdout, stderr : file, optional
        Where the report and the diagnostics are written.
    """

    def __init__(self, stdout=None, stderr=None):
        self.stdout = sys.stdout if stdout is None else stdout
        self.stderr = sys.stderr if stderr is None else stderr
        self.config = {}
        self.command = None

    def create_parser(self):
        """The argument parser, with one option per problem parameter."""
        parser = argparse.ArgumentParser(
            prog="twisted-cohomology",
            description=(
                "Exact computations of the cohomology of the twisted "
                "differentials d_f^(p) for quasi-homogeneous polynomials f."
            ),
        )
        parser.add_argument(
            "command",
            choices=list(COMMANDS),
            help="; ".join(f"{k}: {v}" for k, v in metadata["commands"].items()),
        )
        parser.add_argument("--problem", help="A JSON problem file.")
        for key, data in parameters.items():
            parser.add_argument(
                data["flag"],
                dest=key.replace(" ", "_"),
                default=None,
                help=data["help_text"],
            )
        output = parser.add_mutually_exclusive_group()
        output.add_argument(
            "--json",
            dest="format",
            action="store_const",
            const="json",
            help="Write the report as a JSON document.",
        )
        output.add_argument(
            "--text",
            dest="format",
            action="store_const",
            const="text",
            help="Write the report as text with tables.",
        )
        parser.add_argument(
            "--csv", help="Also write the per-degree table to a CSV file."
        )
        parser.add_argument(
            "--config",
            help=f"The configuration file, by default {DEFAULT_CONFIG}.",
        )
        parser.add_argument(
            "--log-level",
            choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
            type=str.upper,
            help="The level of the log messages on standard error.",
        )
        return parser

    def config_path(self, args):
        path = args.config or os.environ.get(CONFIG_ENV) or DEFAULT_CONFIG
        return Path(path).expanduser()

    def get_config(self, path):
        """Read the configuration file, creating it if necessary."""
        resources = importlib.resources.files("twisted_cohomology") / "data"
        ini_text = (resources / "twisted_cohomology.ini").read_text()
        full_config = configparser.ConfigParser()

        if not path.exists():
            try:
                path.parent.mkdir(parents=True, exist_ok=True)
                txt_config = seamm_util.Configuration(path)
                txt_config.from_string(ini_text)
                txt_config.save()
            except OSError as e:
                logger.warning(f"Could not create the configuration file {path}: {e}")

        if path.exists():
            full_config.read(path)
        else:
            full_config.read_string(ini_text)

        if SECTION not in full_config:
            logger.warning(f"No section [{SECTION}] in {path}; using the defaults")
            full_config.read_string(ini_text)

        self.config = {k: v.strip() for k, v in full_config.items(SECTION)}
        return self.config

    def gather_values(self, args):
        """The problem parameters by precedence: flags, file, configuration."""
        values = {}
        for option, key in CONFIG_PARAMETERS.items():
            value = self.config.get(option, "")
            if value != "":
                values[key] = convert(key, value)

        if args.problem is not None:
            values.update(read_problem_file(args.problem))

        threads = os.environ.get(THREADS_ENV, "")
        if threads != "":
            values["threads"] = convert("threads", threads)

        for key in parameters:
            value = getattr(args, key.replace(" ", "_"))
            if value is not None:
                values[key] = convert(key, value)
        return values

    def document(self, command, spec, results):
        return {
            "schema_version": metadata["schema_version"],
            "command": command,
            "inputs": spec.to_dict(),
            "results": results,
            "seed": spec.seed,
        }

    def write_error(self, command, error, mode):
        if mode == "json":
            data = {
                "schema_version": metadata["schema_version"],
                "command": command,
                "error": error.to_dict(),
            }
            print(json.dumps(data, indent=2, ensure_ascii=False), file=self.stdout)
        else:
            print(f"{error.code}: {error}", file=self.stderr)

    def run(self, argv=None):
        """Run the tool, returning the exit status."""
        parser = self.create_parser()
        try:
            args = parser.parse_args(argv)
        except SystemExit as e:
            return e.code

        path = self.config_path(args)
        self.get_config(path)
        level = args.log_level or self.config.get("log-level", "") or "WARNING"
        logging.basicConfig(
            level=level.upper(),
            stream=self.stderr,
            format="%(levelname)s %(name)s: %(message)s",
        )
        mode = args.format or self.config.get("format", "") or "text"
        if mode not in ("json", "text"):
            logger.warning(f"Unknown format '{mode}' in {path}; using text")
            mode = "text"

        cls = COMMANDS[args.command]
        try:
            values = self.gather_values(args)
            spec = ProblemSpec.from_values(values, require_poly=cls.requires_poly)
            self.command = cls(spec, self.config)
            results = self.command.run()
        except TwistedCohomologyError as e:
            logger.debug(f"{args.command} failed", exc_info=True)
            self.write_error(args.command, e, mode)
            return e.exit_status

        if mode == "json":
            text = json.dumps(
                self.document(args.command, spec, results),
                indent=2,
                ensure_ascii=False,
                default=str,
            )
        else:
            text = self.command.analyze()
        print(text, file=self.stdout)

        if args.csv is not None:
            frame = self.command.dataframe()
            if frame is None:
                logger.warning(f"The {args.command} command has no table for --csv")
            else:
                frame.to_csv(args.csv, index=False)
                logger.info(f"Wrote {args.csv}")

        return 0 if self.command.passed else 1

