"""Contains code that is reused over commands, like argument definition,
value parsing or output handling.
"""
import argparse
import math
import time

from . import bessel
from . import config
from .completion import ProfileCompletion
from .content import output_path, read_text_file, write_file
from .endecoder import EnDecoder
from .errors import DegenError
from .events import OutputWrittenEvent
from .initial_data import PROFILE_HELP, parse_profile
from .manifest import build_manifest
from .uis import get_ui


# value parsers, used as argparse types

def finite_float(text):
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError("malformed number '{}'".format(text))
    if not math.isfinite(value):
        raise argparse.ArgumentTypeError("'{}' is not a finite number".format(text))
    return value


def positive_float(text):
    value = finite_float(text)
    if value <= 0:
        raise argparse.ArgumentTypeError("'{}' must be positive".format(text))
    return value


def nonnegative_float(text):
    value = finite_float(text)
    if value < 0:
        raise argparse.ArgumentTypeError("'{}' must be nonnegative".format(text))
    return value


def positive_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError("malformed integer '{}'".format(text))
    if value < 1:
        raise argparse.ArgumentTypeError("'{}' must be a positive integer".format(text))
    return value


def nonnegative_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError("malformed integer '{}'".format(text))
    if value < 0:
        raise argparse.ArgumentTypeError("'{}' must be a nonnegative integer".format(text))
    return value


def degeneracy_point(text):
    """a in [0, 1)."""
    value = finite_float(text)
    if not 0. <= value < 1.:
        raise argparse.ArgumentTypeError("range error: {} is not in [0, 1)".format(text))
    return value


def interior_point(text):
    """a in (0, 1)."""
    value = finite_float(text)
    if not 0. < value < 1.:
        raise argparse.ArgumentTypeError("range error: {} is not in (0, 1)".format(text))
    return value


def grid(text):
    """``lo:hi:n`` as a (lo, hi, n) triple, or a single value as (v, v, 1)."""
    parts = text.split(':')
    if len(parts) == 1:
        value = finite_float(parts[0])
        return value, value, 1
    if len(parts) != 3:
        raise argparse.ArgumentTypeError("expected a value or lo:hi:n, got '{}'".format(text))
    lo, hi, n = finite_float(parts[0]), finite_float(parts[1]), positive_int(parts[2])
    if n > 1 and not lo < hi:
        raise argparse.ArgumentTypeError("empty range '{}'".format(text))
    return lo, hi, n


def grid_values(spec):
    lo, hi, n = spec
    if n == 1:
        return [lo]
    return [lo + (hi - lo) * i / (n - 1.) for i in range(n)]


def load_samples(path):
    return EnDecoder().decode_samples(read_text_file(path))


def profile(text):
    try:
        return parse_profile(text, load_samples=load_samples)
    except (DegenError, IOError, EnDecoder.DecodingError) as e:
        raise argparse.ArgumentTypeError(str(e))


# shared arguments

def add_profile_argument(parser, required=True):
    parser.add_argument('--u0', type=profile, required=required, metavar='SPEC',
                        help=PROFILE_HELP).completer = ProfileCompletion()


def add_output_arguments(parser, conf, formats=True):
    parser.add_argument('-o', '--output', default=None, metavar='PATH',
                        help='write the data to PATH (a manifest is written next to '
                             'it) instead of standard output')
    if formats:
        parser.add_argument('--format', choices=['csv', 'json'],
                            default=conf['main']['format'],
                            help='output format (default: %(default)s)')


def context(conf):
    """(table, policy) for the numerical modules, as configured."""
    table = bessel.shared_table(conf['series']['capacity'])
    return table, config.truncation_policy(conf)


class Timer(object):

    def __enter__(self):
        self.start = time.time()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.time() - self.start


# output

def encode_rows(header, rows, fmt):
    if fmt == 'json':
        return EnDecoder().encode_record([dict(zip(header, row)) for row in rows])
    return EnDecoder().encode_table(header, rows)


def write_output(conf, args, data, manifest, path=None):
    """Send data to stdout, or to a file followed by its manifest."""
    path = path if path is not None else getattr(args, 'output', None)
    if path is None:
        get_ui().write(data)
        return None
    path = output_path(path, config.get_output_dir(conf))
    write_file(path, data)
    OutputWrittenEvent(path, manifest).send()
    get_ui().info('wrote {}'.format(path))
    return path


def emit_rows(conf, args, command, header, rows, parameters, seeds=(), wall_time=None,
              path=None, artifact=None):
    fmt = getattr(args, 'format', 'csv')
    manifest = build_manifest(command, parameters, seeds=seeds, artifact=artifact,
                              wall_time=wall_time, argv=getattr(args, 'argv', None))
    return write_output(conf, args, encode_rows(header, rows, fmt), manifest, path=path)


def parameters_of(args, *names):
    """Parameter echo of the parsed arguments, profiles as their text form."""
    out = {}
    for name in names:
        value = getattr(args, name)
        if hasattr(value, 'describe'):
            value = value.describe()
        out[name] = value
    return out
