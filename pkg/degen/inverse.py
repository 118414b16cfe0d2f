"""Recovery of the degeneracy point from boundary flux observations.

The cost is J(a) = 1/2 sum_k (beta_k - mu(a, t_k))^2 over the observation
times, minimized over the admissible interval [delta, 1 - delta]. The
trace a -> mu(a, t) need not be monotone, so the search runs one bounded
1-d minimization per cell around each start and reports every minimum
whose cost is negligible; two of them mean the data cannot tell the
corresponding points apart.
"""
import collections
import logging

import numpy as np
from scipy import optimize

from . import bessel
from . import spectral
from .events import IterateEvent
from .initial_data import InitialProfile, check_a
from .errors import (ConfigError, DegenerateAuditError, DomainError,
                     UnsupportedProfileError)


logger = logging.getLogger(__name__)

COST_FLOOR = 1e-24
MINIMA_RATIO = 1e-6
POLISH_STEPS = 6
COLLISION_XTOL = 1e-10

UNIFORM = 'uniform'
GAUSSIAN = 'gaussian'
DISTRIBUTIONS = (UNIFORM, GAUSSIAN)


# types

class NoiseSpec(collections.namedtuple('NoiseSpec', ['level', 'distribution', 'seed'])):
    """Multiplicative noise: beta <- beta (1 + level xi)."""

    __slots__ = ()

    def __new__(cls, level=0., distribution=UNIFORM, seed=0):
        return super(NoiseSpec, cls).__new__(cls, float(level), distribution, int(seed))

    def validate(self):
        if not (np.isfinite(self.level) and self.level >= 0):
            raise DomainError(name='noise level', value=self.level, domain='[0, inf)')
        if self.distribution not in DISTRIBUTIONS:
            raise DomainError(name='distribution', value=self.distribution,
                              domain=DISTRIBUTIONS)


class ObservationSet(collections.namedtuple(
        'ObservationSet', ['times', 'values', 'noise', 'provenance'])):
    """Observed boundary fluxes beta(t_k) at strictly increasing times."""

    __slots__ = ()

    def __new__(cls, times, values, noise=NoiseSpec(), provenance=''):
        times = np.array(times, dtype=float, ndmin=1)
        values = np.array(values, dtype=float, ndmin=1)
        times.setflags(write=False)
        values.setflags(write=False)
        return super(ObservationSet, cls).__new__(cls, times, values, noise, provenance)

    def validate(self, t_min=0.):
        if len(self.times) == 0:
            raise DomainError(message='The observation set is empty.')
        if self.times.shape != self.values.shape:
            raise DomainError(name='observations', value=(len(self.times), len(self.values)),
                              domain='equal numbers of times and values')
        if np.any(np.diff(self.times) <= 0):
            raise DomainError(message='Observation times must be strictly increasing.')
        if self.times[0] < t_min:
            raise DomainError(name='t', value=float(self.times[0]),
                              domain='[{}, inf)'.format(t_min))
        if not np.all(np.isfinite(self.values)):
            raise DomainError(message='Observed values must be finite.')

    def __len__(self):
        return len(self.times)

    def rows(self):
        return [(float(t), float(b)) for t, b in zip(self.times, self.values)]


class InversionConfig(collections.namedtuple(
        'InversionConfig',
        ['delta', 'a_init', 'multistart', 'tol_a', 'max_iters', 'use_derivative'])):

    __slots__ = ()

    def __new__(cls, delta=.01, a_init=.1, multistart=9, tol_a=1e-10, max_iters=200,
                use_derivative=False):
        return super(InversionConfig, cls).__new__(
            cls, float(delta), float(a_init), int(multistart), float(tol_a),
            int(max_iters), bool(use_derivative))

    def validate(self):
        if not 0 < self.delta < .5:
            raise ConfigError(reason='delta = {!r} is outside (0, 0.5)'.format(self.delta))
        if not self.delta < self.a_init < 1. - self.delta:
            raise ConfigError(reason='no admissible start: a_init = {!r} is outside '
                                     '({!r}, {!r})'.format(self.a_init, self.delta,
                                                           1. - self.delta))
        if self.multistart < 0:
            raise ConfigError(reason='multistart must be nonnegative')
        if not self.tol_a > 0 or self.max_iters < 1:
            raise ConfigError(reason='tol_a and max_iters must be positive')

    @property
    def bounds(self):
        return self.delta, 1. - self.delta

    def starts(self):
        """a_init followed by the equispaced interior starts."""
        lo, hi = self.bounds
        grid = np.linspace(lo, hi, self.multistart + 2)[1:-1]
        return [self.a_init] + [float(a) for a in grid]


InversionResult = collections.namedtuple(
    'InversionResult',
    ['a_hat', 'cost', 'iterations', 'history', 'converged', 'all_minima'])

StabilityReport = collections.namedtuple(
    'StabilityReport',
    ['interval', 'time_window', 'constant_formula', 'constant_empirical',
     'pairs_tested', 'pairs_skipped', 'satisfied'])

MonotonicityReport = collections.namedtuple(
    'MonotonicityReport', ['t', 'grid', 'dmu_da', 'sign_changes', 'monotone', 'direction'])


# trace evaluation

def resolve(table=None, policy=None):
    """Fill in the default truncation policy and the shared table of zeros."""
    if policy is None:
        policy = spectral.TruncationPolicy()
    if table is None:
        table = bessel.shared_table(max(bessel.DEFAULT_CAPACITY, policy.max_terms))
    return table, policy


def _trace(profile, a, t, table, policy, cache):
    q = spectral.TraceQuery(profile, a, t, table, policy)
    return spectral.boundary_trace(q, cache).value


def _trace_da(profile, a, t, table, policy, cache):
    q = spectral.TraceQuery(profile, a, t, table, policy)
    return spectral.boundary_trace_da(q, cache).value


def _residuals(a, obs, profile, table, policy, cache):
    return np.array([b - _trace(profile, a, t, table, policy, cache)
                     for t, b in zip(obs.times, obs.values)])


def _slopes(a, obs, profile, table, policy, cache):
    return np.array([_trace_da(profile, a, t, table, policy, cache) for t in obs.times])


def cost(a, obs, profile, table=None, policy=None, cache=None):
    """J(a) = 1/2 sum_k (beta_k - mu(a, t_k))^2."""
    table, policy = resolve(table, policy)
    check_a(a)
    obs.validate(policy.t_min)
    r = _residuals(a, obs, profile, table, policy, cache)
    return .5 * float(np.dot(r, r))


def cost_derivative(a, obs, profile, table=None, policy=None, cache=None):
    """dJ/da = -sum_k (beta_k - mu(a, t_k)) dmu/da(a, t_k)."""
    table, policy = resolve(table, policy)
    check_a(a)
    obs.validate(policy.t_min)
    r = _residuals(a, obs, profile, table, policy, cache)
    return -float(np.dot(r, _slopes(a, obs, profile, table, policy, cache)))


# minimization

class _CostFloor(Exception):

    def __init__(self, a, cost):
        self.a = a
        self.cost = cost


class _Search(object):
    """State shared by the cells of one minimization."""

    def __init__(self, obs, profile, cfg, table, policy):
        self.obs = obs
        self.profile = profile
        self.cfg = cfg
        self.table = table
        self.policy = policy
        self.cache = spectral.WeightCache()
        self.history = []

    def cost(self, a):
        a = float(a)
        value = cost(a, self.obs, self.profile, self.table, self.policy, self.cache)
        self.history.append((a, value))
        IterateEvent(a, value).send()
        return value

    def stopping_cost(self, a):
        value = self.cost(a)
        if value <= COST_FLOOR:
            raise _CostFloor(float(a), value)
        return value

    def derivative(self, a):
        return cost_derivative(float(a), self.obs, self.profile, self.table, self.policy,
                               self.cache)

    def bounded(self, lo, hi):
        """Bounded Brent search on [lo, hi]; returns ((a, cost), converged)."""
        try:
            res = optimize.minimize_scalar(
                self.stopping_cost, bounds=(lo, hi), method='bounded',
                options={'xatol': self.cfg.tol_a, 'maxiter': self.cfg.max_iters})
        except _CostFloor as floor:
            return (floor.a, floor.cost), True
        return (float(res.x), float(res.fun)), bool(res.success)

    def bracketed(self, lo, hi):
        """Root of dJ/da on [lo, hi] when it brackets a minimum, else the better end."""
        g_lo, g_hi = self.derivative(lo), self.derivative(hi)
        if g_lo < 0 < g_hi:
            a, info = optimize.brentq(self.derivative, lo, hi, xtol=self.cfg.tol_a,
                                      maxiter=self.cfg.max_iters, full_output=True,
                                      disp=False)
            return (float(a), self.cost(a)), bool(info.converged)
        ends = sorted([(self.cost(lo), lo), (self.cost(hi), hi)])
        return (ends[0][1], ends[0][0]), True

    def polish(self, a, value, lo, hi):
        """Gauss-Newton steps on the residuals, kept while the cost drops."""
        for _ in range(POLISH_STEPS):
            if value <= COST_FLOOR:
                break
            r = _residuals(a, self.obs, self.profile, self.table, self.policy, self.cache)
            s = _slopes(a, self.obs, self.profile, self.table, self.policy, self.cache)
            norm = float(np.dot(s, s))
            if norm == 0:
                break
            candidate = a + float(np.dot(r, s)) / norm
            if not lo <= candidate <= hi:
                break
            candidate_value = self.cost(candidate)
            if candidate_value >= value:
                break
            a, value = candidate, candidate_value
        return a, value

    def is_artifact(self, a, lo, hi):
        """True for a minimum pinned to an inner cell edge with lower cost outside."""
        admissible_lo, admissible_hi = self.cfg.bounds
        edge = max(1e3 * self.cfg.tol_a, 1e-7)
        for boundary, outward in ((lo, -1.), (hi, 1.)):
            if boundary in (admissible_lo, admissible_hi) or abs(a - boundary) > edge:
                continue
            outside = boundary + outward * 10. * edge
            if admissible_lo <= outside <= admissible_hi and self.cost(outside) < self.cost(a):
                return True
        return False


def cells(cfg):
    """Cells [lo, hi] of the admissible interval, one around each distinct start."""
    lo, hi = cfg.bounds
    starts = sorted(set(cfg.starts()))
    edges = [lo] + [.5 * (u + v) for u, v in zip(starts[:-1], starts[1:])] + [hi]
    return list(zip(edges[:-1], edges[1:]))


def _distinct_minima(candidates, tol):
    if not candidates:
        return []
    worst = max(c for _, c in candidates)
    kept = sorted((a, c) for a, c in candidates if c < MINIMA_RATIO * (1. + worst))
    out = []
    for a, c in kept:
        if out and abs(a - out[-1][0]) <= tol:
            if c < out[-1][1]:
                out[-1] = (a, c)
            continue
        out.append((a, c))
    return out


def minimize(obs, profile, cfg, table=None, policy=None):
    """Minimize J over [delta, 1 - delta] from a_init and the multistart grid.

    ``iterations`` counts cost evaluations. ``all_minima`` lists the distinct
    local minima with negligible cost, sorted by a.
    """
    table, policy = resolve(table, policy)
    cfg.validate()
    obs.validate(policy.t_min)
    search = _Search(obs, profile, cfg, table, policy)

    first = search.cost(cfg.a_init)
    candidates = []
    if first <= COST_FLOOR:
        logger.debug('initial guess %r already fits the data', cfg.a_init)
        candidates.append((cfg.a_init, first))
    converged = first <= COST_FLOOR
    for lo, hi in cells(cfg):
        if cfg.use_derivative:
            (a, value), ok = search.bracketed(lo, hi)
        else:
            (a, value), ok = search.bounded(lo, hi)
        a, value = search.polish(a, value, lo, hi)
        converged = converged or ok
        if search.is_artifact(a, lo, hi):
            logger.debug('dropped cell edge minimum at a=%r', a)
            continue
        candidates.append((a, value))
    if not candidates:
        candidates = [(cfg.a_init, first)]

    a_hat, _ = min(candidates, key=lambda c: (c[1], c[0]))
    a_hat = float(np.clip(a_hat, *cfg.bounds))
    final = cost(a_hat, obs, profile, table, policy, search.cache)
    minima = _distinct_minima(candidates, max(1e-6, 100. * cfg.tol_a))
    logger.debug('minimize: a_hat=%r cost=%r after %d evaluations',
                 a_hat, final, len(search.history))
    return InversionResult(a_hat, final, len(search.history), list(search.history),
                           converged, minima)


# data

def synthetic_observations(profile, a_true, times, table=None, policy=None, noise=None):
    """Noiseless traces mu(a_true, t) at the given times, optionally perturbed."""
    table, policy = resolve(table, policy)
    times = np.array(times, dtype=float, ndmin=1)
    values = [_trace(profile, a_true, t, table, policy, None) for t in times]
    provenance = 'synthetic: u0={}, a={!r}, times=[{}]'.format(
        profile.describe(), a_true, ', '.join('{!r}'.format(float(t)) for t in times))
    obs = ObservationSet(times, values, NoiseSpec(), provenance)
    obs.validate(policy.t_min)
    if noise is not None:
        obs = add_noise(obs, noise)
    return obs


def add_noise(obs, spec):
    """Multiply each value by 1 + level xi; xi is drawn from a generator seeded by spec."""
    spec.validate()
    rng = np.random.default_rng(spec.seed)
    if spec.distribution == UNIFORM:
        xi = rng.uniform(-1., 1., size=len(obs))
    else:
        xi = rng.standard_normal(size=len(obs))
    values = obs.values * (1. + spec.level * xi)
    provenance = '{}; noise {} level={!r} seed={}'.format(
        obs.provenance, spec.distribution, spec.level, spec.seed)
    return ObservationSet(obs.times, values, spec, provenance)


# stability

def _check_window(alpha, beta, t0, t1):
    if not 0. <= alpha < beta < 1.:
        raise DomainError(name='[alpha, beta]', value=(alpha, beta),
                          domain='0 <= alpha < beta < 1')
    if not 0. < t0 < t1:
        raise DomainError(name='[t0, t1]', value=(t0, t1), domain='0 < t0 < t1')


def stability_constant(profile, alpha, beta, t0, t1, table=None):
    """Published Lipschitz constant of a -> mu(a, t) on [alpha, beta] x [t0, t1].

    Only u0 = 1, u0 = 1 - x and u0 = x have one; other profiles get an
    UnsupportedProfileError (use lipschitz_audit for an empirical constant).
    """
    table, _ = resolve(table)
    _check_window(alpha, beta, t0, t1)
    j1 = table.zero(1)
    growth = np.exp((j1 / 2.) ** 2 * t1 / (1. - beta))
    if profile.kind == InitialProfile.CONST_ONE:
        return growth / t0
    elif profile.kind == InitialProfile.ONE_MINUS_X:
        return np.pi ** 2 / 16. * growth
    elif profile.kind == InitialProfile.X:
        return j1 ** 2 * growth
    raise UnsupportedProfileError(kind=profile.describe())


def lipschitz_audit(profile, alpha, beta, t0, t1, n_pairs, seed, table=None, policy=None):
    """Sample (a1, a2, t) triples and compare |a2 - a1| / |mu gap| with the constant."""
    table, policy = resolve(table, policy)
    if n_pairs < 1:
        raise DomainError(name='n_pairs', value=n_pairs, domain='[1, inf)')
    _check_window(alpha, beta, t0, t1)
    try:
        formula = stability_constant(profile, alpha, beta, t0, t1, table)
    except UnsupportedProfileError:
        formula = None
    rng = np.random.default_rng(seed)
    threshold = 10. * policy.tail_tol
    empirical, tested, skipped = 0., 0, 0
    for _ in range(n_pairs):
        a1, a2 = rng.uniform(alpha, beta, size=2)
        while a1 == a2:
            a2 = rng.uniform(alpha, beta)
        t = rng.uniform(t0, t1)
        gap = abs(_trace(profile, a2, t, table, policy, None)
                  - _trace(profile, a1, t, table, policy, None))
        if gap < threshold:
            skipped += 1
            continue
        tested += 1
        empirical = max(empirical, abs(a2 - a1) / gap)
    if tested == 0:
        raise DegenerateAuditError(pairs=n_pairs, threshold=threshold)
    satisfied = None if formula is None else bool(empirical <= formula)
    logger.debug('audit of %s: empirical %g, formula %s, %d skipped',
                 profile.describe(), empirical, formula, skipped)
    return StabilityReport((alpha, beta), (t0, t1), formula, empirical, tested, skipped,
                           satisfied)


def monotonicity_scan(profile, t, a_lo, a_hi, n_grid, table=None, policy=None):
    """Signs of dmu/da on a uniform grid of [a_lo, a_hi]."""
    table, policy = resolve(table, policy)
    if not 0. <= a_lo < a_hi < 1.:
        raise DomainError(name='[a_lo, a_hi]', value=(a_lo, a_hi),
                          domain='0 <= a_lo < a_hi < 1')
    if n_grid < 8:
        raise DomainError(name='n_grid', value=n_grid, domain='[8, inf)')
    grid = np.linspace(a_lo, a_hi, n_grid)
    cache = spectral.WeightCache()
    slopes = np.array([_trace_da(profile, a, t, table, policy, cache) for a in grid])
    signs = np.sign(slopes)
    changes = [(float(grid[i]), float(grid[i + 1])) for i in range(n_grid - 1)
               if signs[i] * signs[i + 1] < 0]
    monotone = not changes and np.all(signs != 0)
    direction = None
    if monotone:
        direction = 'increasing' if signs[0] > 0 else 'decreasing'
    return MonotonicityReport(t, grid, slopes, changes, bool(monotone), direction)


# non-uniqueness

def alias_pair(a1, m1, m2, table=None):
    """a2 with lambda_m1(a1) = lambda_m2(a2), or None when it falls outside (0, 1)."""
    table, _ = resolve(table)
    if not 0. < a1 < 1.:
        raise DomainError(name='a1', value=a1, domain='(0, 1)')
    table.check(m1)
    table.check(m2)
    if m1 == m2:
        return a1
    a2 = 1. - (1. - a1) * (table.zero(m2) / table.zero(m1)) ** 2
    if 0. < a2 < 1.:
        return a2
    return None


def _trace_grid(profile, t0, delta, n_grid, table, policy):
    grid = np.linspace(delta, 1. - delta, n_grid)
    cache = spectral.WeightCache()
    return grid, np.array([_trace(profile, a, t0, table, policy, cache) for a in grid]), cache


def observation_collision(profile, t0, beta, delta=.01, n_grid=512, table=None,
                          policy=None):
    """All a in (delta, 1 - delta) with mu(a, t0) = beta, sorted."""
    table, policy = resolve(table, policy)
    if not 0 < delta < .5:
        raise DomainError(name='delta', value=delta, domain='(0, 0.5)')
    if n_grid < 2:
        raise DomainError(name='n_grid', value=n_grid, domain='[2, inf)')
    grid, values, cache = _trace_grid(profile, t0, delta, n_grid, table, policy)
    gaps = values - beta

    def f(a):
        return _trace(profile, a, t0, table, policy, cache) - beta

    roots = []
    for i in range(n_grid - 1):
        if gaps[i] == 0:
            roots.append(float(grid[i]))
        elif gaps[i] * gaps[i + 1] < 0:
            roots.append(float(optimize.bisect(f, grid[i], grid[i + 1], xtol=COLLISION_XTOL)))
    if gaps[-1] == 0:
        roots.append(float(grid[-1]))
    return roots


def collision_level(profile, t0, delta=.01, n_grid=512, table=None, policy=None):
    """A level beta hit at two or more points of (delta, 1 - delta), or None.

    The level sits halfway between an interior extremum of mu(., t0) and
    the nearer endpoint value, so it is crossed on both sides of it.
    """
    table, policy = resolve(table, policy)
    grid, values, _ = _trace_grid(profile, t0, delta, n_grid, table, policy)
    last = n_grid - 1
    i_min, i_max = int(np.argmin(values)), int(np.argmax(values))
    if 0 < i_min < last:
        ceiling = min(values[0], values[-1])
        return float(values[i_min] + .5 * (ceiling - values[i_min]))
    if 0 < i_max < last:
        floor = max(values[0], values[-1])
        return float(values[i_max] - .5 * (values[i_max] - floor))
    return None


def trace_distance(profile_1, a_1, profile_2, a_2, times, table=None, policy=None):
    """max over times of |mu_1(a_1, t) - mu_2(a_2, t)|."""
    table, policy = resolve(table, policy)
    return max(abs(_trace(profile_1, a_1, t, table, policy, None)
                   - _trace(profile_2, a_2, t, table, policy, None))
               for t in np.atleast_1d(times))


# studies

def noise_sweep(profile, a_true, t0, levels, seeds, cfg, distribution=UNIFORM,
                table=None, policy=None):
    """Median recovery error per noise level, levels in decreasing order.

    Returns one dict per level with keys level, median_error, mean_error,
    max_error, median_a_hat and runs.
    """
    table, policy = resolve(table, policy)
    clean = synthetic_observations(profile, a_true, [t0], table, policy)
    rows = []
    for level in sorted(set(float(l) for l in levels), reverse=True):
        a_hats = []
        for seed in seeds:
            noisy = add_noise(clean, NoiseSpec(level, distribution, seed))
            a_hats.append(minimize(noisy, profile, cfg, table, policy).a_hat)
        errors = np.abs(np.array(a_hats) - a_true)
        rows.append({'level': level,
                     'median_error': float(np.median(errors)),
                     'mean_error': float(np.mean(errors)),
                     'max_error': float(np.max(errors)),
                     'median_a_hat': float(np.median(a_hats)),
                     'runs': len(a_hats)})
        logger.debug('noise level %g: median error %g', level, rows[-1]['median_error'])
    return rows
