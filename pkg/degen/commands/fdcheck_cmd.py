from .. import config
from .. import fd_oracle
from .. import spectral
from ..command_utils import (add_output_arguments, add_profile_argument, context,
                             degeneracy_point, emit_rows, grid, grid_values,
                             parameters_of, positive_int, Timer)
from ..errors import DomainError


def parser(subparsers, conf):
    parser = subparsers.add_parser('fdcheck',
                                   help='compare the series with the finite volume solver')
    add_profile_argument(parser)
    parser.add_argument('--a', type=degeneracy_point, required=True,
                        help='degeneracy point, in [0, {}]'.format(fd_oracle.MAX_A))
    parser.add_argument('--t', type=grid, required=True, metavar='T|LO:HI:N',
                        help='a time or a uniform grid of times')
    parser.add_argument('--nx', type=positive_int, default=None,
                        help='number of cells (default: {})'.format(conf['fd']['nx']))
    parser.add_argument('--nt', type=positive_int, default=None,
                        help='number of time steps (default: {})'.format(conf['fd']['nt']))
    parser.add_argument('--scheme', choices=fd_oracle.SCHEMES, default=None,
                        help='time stepping (default: {})'.format(conf['fd']['scheme']))
    add_output_arguments(parser, conf)
    return parser


def command(conf, args):
    table, policy = context(conf)
    times = grid_values(args.t)
    if min(times) <= 0:
        raise DomainError(name='t', value=min(times), domain='(0, inf)')
    cfg = config.fd_config(conf, T_end=max(times))
    cfg = cfg._replace(**{k: getattr(args, k) for k in ('nx', 'nt', 'scheme')
                          if getattr(args, k) is not None})
    with Timer() as timer:
        sol = fd_oracle.solve_fd(args.u0, args.a, cfg)
        rows = []
        for t in times:
            mu = spectral.boundary_trace(
                spectral.TraceQuery(args.u0, args.a, t, table, policy)).value
            flux = fd_oracle.flux_fd(sol, t)
            gap = abs(flux - mu) / abs(mu) if mu != 0 else abs(flux)
            rows.append((args.a, t, mu, flux, fd_oracle.trace_fd(sol, t), gap))
    parameters = parameters_of(args, 'u0', 'a', 't')
    parameters.update(nx=cfg.nx, nt=cfg.nt, scheme=cfg.scheme)
    emit_rows(conf, args, 'fdcheck', ('a', 't', 'mu_series', 'flux_fd', 'du_dx_fd', 'rel_gap'),
              rows, parameters, wall_time=timer.elapsed)
