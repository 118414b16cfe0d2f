from .. import config
from .. import inverse
from ..command_utils import (add_output_arguments, add_profile_argument, context,
                             degeneracy_point, interior_point,
                             nonnegative_float, nonnegative_int, parameters_of,
                             positive_float, positive_int, write_output, Timer)
from ..content import read_text_file
from ..endecoder import EnDecoder
from ..manifest import build_manifest
from ..uis import get_ui


def parser(subparsers, conf):
    parser = subparsers.add_parser('invert',
                                   help='recover the degeneracy point from boundary data')
    add_profile_argument(parser)
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument('--a-true', type=interior_point, default=None,
                        help='generate synthetic data with this degeneracy point')
    source.add_argument('--obs', default=None, metavar='PATH',
                        help='observation CSV with columns t,beta')
    parser.add_argument('--t0', type=positive_float, nargs='+', default=None,
                        help='observation time(s) of the synthetic data')
    parser.add_argument('--noise', type=nonnegative_float, default=0.,
                        help='multiplicative noise level (default: %(default)s)')
    parser.add_argument('--seed', type=int, default=0,
                        help='seed of the noise generator (default: %(default)s)')
    parser.add_argument('--distribution', choices=inverse.DISTRIBUTIONS,
                        default=conf['inversion']['noise_distribution'],
                        help='noise distribution (default: %(default)s)')
    parser.add_argument('--a-init', type=degeneracy_point, default=.1,
                        help='initial guess (default: %(default)s)')
    parser.add_argument('--delta', type=positive_float, default=None,
                        help='admissible set is [delta, 1 - delta] (default: {})'.format(
                            conf['inversion']['delta']))
    parser.add_argument('--multistart', type=nonnegative_int, default=None,
                        help='number of extra equispaced starts (default: {})'.format(
                            conf['inversion']['multistart']))
    parser.add_argument('--max-iters', type=positive_int, default=None,
                        help='iteration cap per cell')
    parser.add_argument('--use-derivative', action='store_true', default=None,
                        help='bracket the roots of dJ/da instead of a bounded search')
    add_output_arguments(parser, conf, formats=False)
    return parser


def usage_error(message):
    ui = get_ui()
    ui.error(message)
    ui.exit(2)


def observations(args, table, policy):
    if args.obs is not None:
        if args.t0 is not None:
            usage_error("argument --t0: only applies to synthetic data (--a-true)")
        times, values = EnDecoder().decode_observations(read_text_file(args.obs))
        obs = inverse.ObservationSet(times, values, provenance='file: {}'.format(args.obs))
    else:
        if args.t0 is None:
            usage_error("argument --a-true: needs at least one observation time --t0")
        obs = inverse.synthetic_observations(args.u0, args.a_true, sorted(args.t0),
                                             table, policy)
    if args.noise > 0:
        obs = inverse.add_noise(obs, inverse.NoiseSpec(args.noise, args.distribution,
                                                       args.seed))
    return obs


def inversion_config(conf, args):
    cfg = config.inversion_config(conf, a_init=args.a_init, delta=args.delta)
    overrides = {'multistart': args.multistart, 'max_iters': args.max_iters,
                 'use_derivative': args.use_derivative}
    return cfg._replace(**{k: v for k, v in overrides.items() if v is not None})


def command(conf, args):
    table, policy = context(conf)
    cfg = inversion_config(conf, args)
    with Timer() as timer:
        obs = observations(args, table, policy)
        result = inverse.minimize(obs, args.u0, cfg, table, policy)
    record = {
        'a_hat': result.a_hat,
        'cost': result.cost,
        'iterations': result.iterations,
        'converged': result.converged,
        'history': [list(h) for h in result.history],
        'all_minima': [list(m) for m in result.all_minima],
        'config': dict(cfg._asdict()),
        'seed': args.seed,
        'noise': {'level': args.noise, 'distribution': args.distribution},
        'observations': [list(r) for r in obs.rows()],
        'provenance': obs.provenance,
    }
    if args.a_true is not None:
        record['a_true'] = args.a_true
        record['error'] = abs(result.a_hat - args.a_true)
    parameters = parameters_of(args, 'u0', 'a_true', 'obs', 't0', 'noise', 'distribution')
    parameters.update(dict(cfg._asdict()))
    manifest = build_manifest('invert', parameters, seeds=[args.seed],
                              wall_time=timer.elapsed, argv=getattr(args, 'argv', None))
    write_output(conf, args, EnDecoder().encode_record(record), manifest)
    if not result.converged:
        get_ui().warning('no start converged within {} iterations; a_hat is the best '
                         'iterate'.format(cfg.max_iters))
    if len(result.all_minima) > 1:
        get_ui().warning('{} distinct minima: the data do not determine a uniquely'.format(
            len(result.all_minima)))
