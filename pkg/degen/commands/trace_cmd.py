from .. import spectral
from ..command_utils import (add_output_arguments, add_profile_argument, context,
                             degeneracy_point, emit_rows, grid, grid_values,
                             parameters_of, Timer)


def parser(subparsers, conf):
    parser = subparsers.add_parser('trace', help='boundary flux mu(a, t) from the series')
    add_profile_argument(parser)
    parser.add_argument('--a', type=degeneracy_point, required=True,
                        help='degeneracy point, in [0, 1)')
    parser.add_argument('--t', type=grid, required=True, metavar='T|LO:HI:N',
                        help='a time or a uniform grid of times')
    add_output_arguments(parser, conf)
    return parser


def command(conf, args):
    table, policy = context(conf)
    cache = spectral.WeightCache()
    rows = []
    with Timer() as timer:
        for t in grid_values(args.t):
            q = spectral.TraceQuery(args.u0, args.a, t, table, policy)
            value = spectral.boundary_trace(q, cache)
            rows.append((args.a, t, value.value, value.terms_used, value.tail_bound))
    emit_rows(conf, args, 'trace', ('a', 't', 'mu', 'terms', 'tail_bound'), rows,
              parameters_of(args, 'u0', 'a', 't'), wall_time=timer.elapsed)
