from .. import inverse
from .. import spectral
from ..command_utils import (add_output_arguments, add_profile_argument, context,
                             emit_rows, finite_float, parameters_of, positive_float,
                             positive_int, Timer)
from ..uis import get_ui


def parser(subparsers, conf):
    parser = subparsers.add_parser(
        'collide', help='degeneracy points sharing one observed value at a single time')
    add_profile_argument(parser)
    parser.add_argument('--t0', type=positive_float, default=.3,
                        help='observation time (default: %(default)s)')
    parser.add_argument('--beta', type=finite_float, default=None,
                        help='observed level (default: a level crossed twice, if any)')
    parser.add_argument('--delta', type=positive_float, default=None,
                        help='search (delta, 1 - delta) (default: {})'.format(
                            conf['inversion']['delta']))
    parser.add_argument('--n-grid', type=positive_int, default=None,
                        help='sampling grid of the sign search (default: {})'.format(
                            conf['inversion']['collision_grid']))
    add_output_arguments(parser, conf)
    return parser


def command(conf, args):
    ui = get_ui()
    table, policy = context(conf)
    delta = args.delta if args.delta is not None else conf['inversion']['delta']
    n_grid = args.n_grid if args.n_grid is not None else conf['inversion']['collision_grid']
    with Timer() as timer:
        beta = args.beta
        if beta is None:
            beta = inverse.collision_level(args.u0, args.t0, delta, n_grid, table, policy)
            if beta is None:
                ui.info('mu(., {}) is monotone: every level has at most one root'.format(
                    args.t0))
                beta = spectral.trace_values(args.u0, [.5], args.t0, table, policy)[0]
        roots = inverse.observation_collision(args.u0, args.t0, beta, delta, n_grid,
                                              table, policy)
    rows = [(args.t0, beta, a) for a in roots]
    parameters = parameters_of(args, 'u0', 't0')
    parameters.update(beta=beta, delta=delta, n_grid=n_grid)
    emit_rows(conf, args, 'collide', ('t0', 'beta', 'a'), rows, parameters,
              wall_time=timer.elapsed)
    ui.info('{} degeneracy point(s) give mu = {!r}'.format(len(roots), beta))
