# PYTHON_ARGCOMPLETE_OK

import sys
import argparse
import collections

from . import uis
from . import config
from . import commands
from . import manifest  # noqa: registers the manifest writer
from .__init__ import __version__
from .completion import autocomplete


CORE_CMDS = collections.OrderedDict([
    ('zeros', commands.zeros_cmd),
    ('trace', commands.trace_cmd),
    ('scan', commands.scan_cmd),
    ('fdcheck', commands.fdcheck_cmd),

    ('invert', commands.invert_cmd),
    ('tables', commands.tables_cmd),

    ('alias', commands.alias_cmd),
    ('collide', commands.collide_cmd),
])


def execute(raw_args=sys.argv):

    uis.init_ui(None)
    try:
        desc = ('Degen: locate the degeneracy point of a degenerate diffusion '
                'from its boundary flux.')
        parser = argparse.ArgumentParser(prog="degen", add_help=False, description=desc)
        parser.add_argument("-c", "--config", help="path to an alternate configuration file",
                            type=str, metavar="FILE")
        top_args, remaining_args = parser.parse_known_args(raw_args[1:])

        if top_args.config:
            conf_path = top_args.config
        else:
            conf_path = config.get_confpath()

        conf = config.load_conf(path=conf_path)

        uis.init_ui(conf)

        parser.add_argument('-v', '--version', action='version', version=__version__)
        parser.add_argument('-h', '--help', action='help', default=argparse.SUPPRESS,
                            help='Show this help message and exit.')
        subparsers = parser.add_subparsers(title="commands", dest="command")

        for cmd_name, cmd_mod in CORE_CMDS.items():
            cmd_parser = cmd_mod.parser(subparsers, conf)
            cmd_parser.set_defaults(func=cmd_mod.command)

        autocomplete(parser)

        # if no command, print help and exit with the usage status
        args = parser.parse_args(remaining_args)
        if not args.command:
            parser.print_help(file=sys.stderr)
            sys.exit(2)

        args.prog = "degen"
        args.argv = list(raw_args[1:])
        args.func(conf, args)

    except Exception as e:
        if not uis.get_ui().handle_exception(e):
            raise
