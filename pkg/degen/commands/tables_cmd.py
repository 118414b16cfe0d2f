"""Regenerate the reference data sets, one CSV file (and manifest) each.

Files are produced in a fixed order, each with its own manifest:

    multistart.csv          recovery of a = 0.35 from u0 = 1, starts 0.1 and 0.6
    noise_one.csv           median recovery error against noise level, u0 = 1
    noise_one_minus_x.csv   the same for u0 = 1 - x
    scan_regimes.csv        dmu/da on [0.05, 0.9] for the four named data, t = 1 and 2.2
    collision.csv           mu(., 0.3) for u0 = x with the roots of a level crossed twice
    audit.csv               empirical and closed-form Lipschitz constants
"""
import collections
import os

from .. import config
from .. import inverse
from .. import spectral
from ..command_utils import context, emit_rows, positive_int, Timer
from ..content import check_directory, output_path
from ..initial_data import InitialProfile, parse_profile
from ..manifest import ARTIFACTS
from ..uis import get_ui


A_TRUE = .35
T0 = .05
STARTS = (.1, .6)
NOISE_LEVELS = (1e-2, 1e-3, 1e-4, 1e-5, 0.)
SCAN_TIMES = (1., 2.2)
SCAN_GRID = (.05, .9, 64)
COLLISION_T0 = .3
AUDIT_WINDOW = (.1, .5, .05, 1.)
AUDIT_PAIRS = 200


def _multistart(conf, args, table, policy):
    profile = InitialProfile.const_one()
    obs = inverse.synthetic_observations(profile, A_TRUE, [T0], table, policy)
    rows = []
    for a_init in STARTS:
        cfg = config.inversion_config(conf, a_init=a_init)._replace(multistart=0)
        result = inverse.minimize(obs, profile, cfg, table, policy)
        rows.append((a_init, result.a_hat, abs(result.a_hat - A_TRUE), result.cost,
                     result.iterations))
    header = ('a_init', 'a_hat', 'error', 'cost', 'iterations')
    parameters = {'u0': profile.describe(), 'a_true': A_TRUE, 't0': T0,
                  'starts': list(STARTS)}
    return header, rows, parameters, ()


def _noise(profile):
    def table_rows(conf, args, table, policy):
        seeds = list(range(args.seeds))
        cfg = config.inversion_config(conf, a_init=STARTS[0])
        sweep = inverse.noise_sweep(profile, A_TRUE, T0, NOISE_LEVELS, seeds, cfg,
                                    conf['inversion']['noise_distribution'], table, policy)
        keys = ('level', 'median_error', 'mean_error', 'max_error', 'median_a_hat', 'runs')
        rows = [tuple(row[k] for k in keys) for row in sweep]
        parameters = {'u0': profile.describe(), 'a_true': A_TRUE, 't0': T0,
                      'levels': list(NOISE_LEVELS),
                      'distribution': conf['inversion']['noise_distribution']}
        return keys, rows, parameters, seeds
    return table_rows


def _scan_regimes(conf, args, table, policy):
    lo, hi, n = SCAN_GRID
    rows = []
    for kind in InitialProfile.NAMED:
        profile = parse_profile(kind)
        for t in SCAN_TIMES:
            report = inverse.monotonicity_scan(profile, t, lo, hi, n, table, policy)
            mu = spectral.trace_values(profile, report.grid, t, table, policy)
            rows.extend((kind, t, a, m, d) for a, m, d in
                        zip(report.grid.tolist(), mu.tolist(), report.dmu_da.tolist()))
    parameters = {'profiles': list(InitialProfile.NAMED), 'times': list(SCAN_TIMES),
                  'a_grid': list(SCAN_GRID)}
    return ('u0', 't', 'a', 'mu', 'dmu_da'), rows, parameters, ()


def _collision(conf, args, table, policy):
    profile = InitialProfile.identity()
    delta = conf['inversion']['delta']
    n_grid = conf['inversion']['collision_grid']
    beta = inverse.collision_level(profile, COLLISION_T0, delta, n_grid, table, policy)
    roots = []
    if beta is not None:
        roots = inverse.observation_collision(profile, COLLISION_T0, beta, delta, n_grid,
                                              table, policy)
    lo, hi, n = SCAN_GRID
    grid = [lo + (hi - lo) * i / (n - 1.) for i in range(n)]
    mu = spectral.trace_values(profile, grid, COLLISION_T0, table, policy)
    # curve rows first, then one row per root with is_root set
    rows = [(a, m, beta, False) for a, m in zip(grid, mu.tolist())]
    rows.extend((a, beta, beta, True) for a in roots)
    parameters = {'u0': profile.describe(), 't0': COLLISION_T0, 'delta': delta,
                  'n_grid': n_grid, 'beta': beta}
    return ('a', 'mu', 'beta', 'is_root'), rows, parameters, ()


def _audit(conf, args, table, policy):
    alpha, beta, t0, t1 = AUDIT_WINDOW
    rows = []
    for profile in (InitialProfile.const_one(), InitialProfile.one_minus_x()):
        report = inverse.lipschitz_audit(profile, alpha, beta, t0, t1, AUDIT_PAIRS, 0,
                                         table, policy)
        rows.append((profile.describe(), report.constant_formula, report.constant_empirical,
                     report.pairs_tested, report.pairs_skipped, report.satisfied))
    header = ('u0', 'constant_formula', 'constant_empirical', 'pairs_tested',
              'pairs_skipped', 'satisfied')
    parameters = {'window': list(AUDIT_WINDOW), 'pairs': AUDIT_PAIRS}
    return header, rows, parameters, (0,)


TABLES = collections.OrderedDict([
    ('multistart', _multistart),
    ('noise-one', _noise(InitialProfile.const_one())),
    ('noise-one-minus-x', _noise(InitialProfile.one_minus_x())),
    ('scan-regimes', _scan_regimes),
    ('collision', _collision),
    ('audit', _audit),
])


def file_name(name):
    return name.replace('-', '_') + '.csv'


def parser(subparsers, conf):
    parser = subparsers.add_parser('tables', help='regenerate the reference data sets')
    parser.add_argument('--output-dir', default='.', metavar='DIR',
                        help='directory receiving the CSV files (default: %(default)s)')
    parser.add_argument('--seeds', type=positive_int, default=20,
                        help='noise draws per level (default: %(default)s)')
    parser.add_argument('--only', choices=list(TABLES), nargs='+', default=None,
                        help='restrict to some of the data sets')
    return parser


def command(conf, args):
    ui = get_ui()
    table, policy = context(conf)
    target = output_path(args.output_dir, config.get_output_dir(conf))
    check_directory(target)
    args.format = 'csv'
    for name, build in TABLES.items():
        if args.only is not None and name not in args.only:
            continue
        with Timer() as timer:
            header, rows, parameters, seeds = build(conf, args, table, policy)
        emit_rows(conf, args, 'tables', header, rows, parameters, seeds=seeds,
                  wall_time=timer.elapsed, path=os.path.join(target, file_name(name)),
                  artifact=ARTIFACTS[name])
        ui.info('{}: {} rows'.format(name, len(rows)))
