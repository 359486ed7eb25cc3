"""Driver for the tropical curve counter"""

from typing import Any, Dict, List, Optional

import argparse
import sys
from pathlib import Path

from tropcount.cli import COMMANDS, FORMATS, RunConfig
from tropcount.defaults import merge_config
from tropcount.errors import TropcountError
from tropcount.io import load_yaml, logger
from tropcount.tropical.enumerate import METHODS
from tropcount.tropical.zeta import CLOSED_FORMS, VARIANTS


class Manager:
    """Manager holds the parsed command line and the configuration of a single run

    Options are read from the command-line interface; a YAML configuration file given with
    `-C/--config-file` replaces the defaults of `tropcount.defaults` and command-line flags
    replace both.

    Parameters
    ----------
    argv : `list`
        Command-line arguments, `sys.argv[1:]` when not given
    """

    def __init__(self, argv: Optional[List[str]] = None) -> None:

        # command line arguments
        self.args = self.parse_args(argv)

        # always use pathlib
        if isinstance(self.args.config_fname, str):
            if len(self.args.config_fname) == 0:
                logger.critical("empty configuration file name")
                sys.exit(1)

            self.args.config_fname = Path(self.args.config_fname)

        # load configuration
        self.config = self.load_config_file()

    def init_args(self) -> argparse.ArgumentParser:
        """Initialize parser of command line arguments

        Returns
        -------
        `argparse.ArgumentParser`
        """

        parser = argparse.ArgumentParser(
            prog="tropcount",
            formatter_class=argparse.ArgumentDefaultsHelpFormatter,
            description="enumerate plane tropical curves and compute their refined counts",
        )

        parser.add_argument(
            "-d",
            "--debug",
            action="store_true",
            default=False,
            dest="debug",
            help="enable debug mode",
        )

        parser.add_argument(
            "-C",
            "--config-file",
            dest="config_fname",
            help="name of configuration file",
        )

        parser.add_argument(
            "--show-log-name",
            action="store_true",
            default=False,
            dest="log_fname",
            help="display log filename and exit",
        )

        parser.add_argument(
            "--show-config",
            action="store_true",
            default=False,
            dest="show_config",
            help="display config info and exit",
        )

        # options shared by every command
        common = argparse.ArgumentParser(add_help=False)
        common.add_argument("-o", "--output", dest="output", help="output file or directory")

        # options of the commands that work on curves
        curves = argparse.ArgumentParser(add_help=False)
        curves.add_argument("--polygon", dest="polygon", help="polygon JSON file")
        curves.add_argument("--delta", dest="delta", type=int, default=0, help="number of nodes")
        curves.add_argument(
            "--points", dest="points", help="explicit point configuration JSON file"
        )
        curves.add_argument(
            "--curves", dest="curves", help="enumeration result or curve list JSON file"
        )
        curves.add_argument("--method", dest="method", choices=METHODS, help="enumeration method")
        curves.add_argument("--jobs", dest="jobs", type=int, help="number of worker processes")
        curves.add_argument("--cache-dir", dest="cache_dir", help="result cache directory")
        curves.add_argument(
            "--no-cache",
            action="store_false",
            default=None,
            dest="use_cache",
            help="neither read nor write the result cache",
        )
        curves.add_argument(
            "--progress",
            action="store_true",
            default=False,
            dest="progress",
            help="show a progress bar on standard error",
        )

        sub = parser.add_subparsers(dest="command", metavar="command")

        stats = sub.add_parser("stats", parents=[common], help="lattice-point report of a polygon")
        stats.add_argument("--polygon", dest="polygon", help="polygon JSON file")

        sub.add_parser("enumerate", parents=[common, curves], help="list the curves")

        count = sub.add_parser("count", parents=[common, curves], help="multiplicity table")
        count.add_argument(
            "--format", dest="fmt", choices=FORMATS, default="json", help="table format"
        )

        verify = sub.add_parser(
            "verify", parents=[common, curves], help="compare N(Gamma) with the family invariant"
        )
        verify.add_argument(
            "--strict",
            action="store_true",
            default=False,
            dest="strict",
            help="fail when some curve does not match",
        )

        sub.add_parser("render", parents=[common, curves], help="one SVG picture per curve")

        zeta = sub.add_parser("zeta", parents=[common], help="refined coefficients N_r")
        zeta.add_argument("--input", dest="input", help="Hilbert series JSON file")
        zeta.add_argument(
            "--variant", dest="variant", choices=VARIANTS, default="chi_y", help="specialization"
        )
        zeta.add_argument(
            "--closed-form", dest="closed_form", choices=CLOSED_FORMS, help="reference family"
        )
        zeta.add_argument("--genus", dest="genus", type=int, help="genus of the closed form")

        volume = sub.add_parser("volume", parents=[common], help="motivic volume of a cell list")
        volume.add_argument("--input", dest="input", help="cell-list JSON file")

        return parser

    def parse_args(self, argv: Optional[List[str]] = None) -> argparse.Namespace:
        """Parse command line arguments

        Returns
        -------
        `argparse.Namespace`
        """

        # parse initial arguments via cli
        parser = self.init_args()
        argv = sys.argv[1:] if argv is None else argv

        # print help msg if no arguments were given
        if len(argv) == 0:
            parser.print_help()
            sys.exit(1)

        # get parsed arguments
        args = parser.parse_args(argv)

        # if debug is True
        if args.debug:
            from logging import DEBUG

            logger.setLevel(DEBUG)

        # print cli arguments to log file
        msg = "command line arguments are: "
        for k, v in sorted(vars(args).items()):
            msg += f"{k}: {v} "
        logger.debug(msg[:-1])

        return args

    def load_config_file(self) -> Dict[str, Dict[str, Any]]:
        """Load configuration file with options for the manager

        Returns
        -------
        config : `dict`
            Every configuration section, defaults filled in
        """

        if self.args.config_fname is None:
            logger.info("no configuration file given, using defaults")
            return merge_config(None)

        logger.info("load configuration options from file")

        if not self.args.config_fname.exists():
            logger.critical(
                f"error while trying to load configuration file. No such file found: "
                f"`{self.args.config_fname}`"
            )
            sys.exit(1)

        try:
            return merge_config(load_yaml(self.args.config_fname))
        except TropcountError as exc:
            logger.critical(f"invalid configuration file `{self.args.config_fname}`: {exc}")
            sys.exit(exc.exit_code)

    def run_config(self) -> RunConfig:
        """Translate the parsed command line into a `RunConfig`"""

        if self.args.command is None:
            logger.critical("no command given")
            sys.exit(1)

        fields = {
            name: getattr(self.args, name)
            for name in RunConfig.__dataclass_fields__
            if name not in ("command", "settings") and getattr(self.args, name, None) is not None
        }

        return RunConfig(command=self.args.command, settings=self.config, **fields)
