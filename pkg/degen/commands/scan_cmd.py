from .. import inverse
from .. import spectral
from ..command_utils import (add_output_arguments, add_profile_argument, context,
                             emit_rows, grid, parameters_of, positive_float, Timer)
from ..uis import get_ui


def parser(subparsers, conf):
    parser = subparsers.add_parser('scan', help='sign of dmu/da over a grid of a')
    add_profile_argument(parser)
    parser.add_argument('--t', type=positive_float, required=True, help='observation time')
    parser.add_argument('--a-grid', type=grid, default=(.05, .9, 64), metavar='LO:HI:N',
                        help='grid of degeneracy points (default: 0.05:0.9:64)')
    add_output_arguments(parser, conf)
    return parser


def command(conf, args):
    table, policy = context(conf)
    lo, hi, n = args.a_grid
    with Timer() as timer:
        report = inverse.monotonicity_scan(args.u0, args.t, lo, hi, n, table, policy)
        mu = spectral.trace_values(args.u0, report.grid, args.t, table, policy)
    rows = list(zip(report.grid.tolist(), mu.tolist(), report.dmu_da.tolist()))
    emit_rows(conf, args, 'scan', ('a', 'mu', 'dmu_da'), rows,
              parameters_of(args, 'u0', 't', 'a_grid'), wall_time=timer.elapsed)
    if report.monotone:
        get_ui().info('mu is {} in a'.format(report.direction))
    else:
        get_ui().info('dmu/da changes sign in {}'.format(
            ', '.join('[{:.6g}, {:.6g}]'.format(*c) for c in report.sign_changes)))
