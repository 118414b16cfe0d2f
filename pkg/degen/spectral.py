"""Bessel series for the right sub-problem on (a, 1).

With f_n(t, a) = exp(-(j_n / 2)^2 t / (1 - a)) = exp(-lambda_n t):

    u(x, t)   = sum_n 2 / (j_n^2 J0'(j_n)^2) f_n U_n(a) J0(j_n sqrt((x - a) / (1 - a)))
    mu(a, t)  = sum_n f_n / (j_n J0'(j_n)) U_n(a)
    dmu/da    = sum_n f_n / (j_n J0'(j_n)) [U_n'(a) - j_n^2 t / (4 (1 - a)^2) U_n(a)]

``mu`` is the boundary flux (x - a) du/dx at x = 1, that is (1 - a) times
the normal derivative of ``u`` there.

Every series is cut at the smallest n whose certified tail falls below the
policy tolerance. Term n is majorized by b_n, built from
|U_n| <= ||u0|| j_n^2 / 2 and |J0| <= 1; the majorants are log-concave in n
so the discarded tail is at most b_{n+1} / (1 - b_{n+2} / b_{n+1}).
"""
import collections
import logging
import threading

import numpy as np

from . import bessel
from . import initial_data
from .errors import DomainError, TruncationError


logger = logging.getLogger(__name__)

EXP_FLOOR = -745.


class TruncationPolicy(collections.namedtuple(
        'TruncationPolicy', ['max_terms', 'tail_tol', 't_min', 'quad_tol'])):
    """Series truncation control.

    :param max_terms: hard cap on the number of modes summed.
    :param tail_tol: bound required on the discarded tail.
    :param t_min: smallest admissible evaluation time.
    :param quad_tol: absolute tolerance of the weight quadratures.
    """

    __slots__ = ()

    def __new__(cls, max_terms=2000, tail_tol=1e-12, t_min=1e-4,
                quad_tol=initial_data.DEFAULT_QUAD_TOL):
        return super(TruncationPolicy, cls).__new__(
            cls, int(max_terms), float(tail_tol), float(t_min), float(quad_tol))

    def validate(self, table=None):
        if self.max_terms < 1:
            raise DomainError(name='max_terms', value=self.max_terms, domain='[1, inf)')
        for name in ('tail_tol', 't_min', 'quad_tol'):
            if not getattr(self, name) > 0:
                raise DomainError(name=name, value=getattr(self, name), domain='(0, inf)')
        if table is not None and self.max_terms > table.capacity:
            raise DomainError(name='max_terms', value=self.max_terms,
                              domain='[1, {}] (table capacity)'.format(table.capacity))

    def with_tail_tol(self, tail_tol):
        return self._replace(tail_tol=float(tail_tol))


TraceQuery = collections.namedtuple('TraceQuery', ['profile', 'a', 't', 'table', 'policy'])
TraceQuery.__new__.__defaults__ = (TruncationPolicy(),)

SeriesValue = collections.namedtuple('SeriesValue', ['value', 'terms_used', 'tail_bound'])


class WeightCache(object):
    """Memo of U_n(a) and U_n'(a) shared by the evaluations of one batch.

    Keys are (profile key, a, n, kind). Lookups and inserts hold a lock;
    the computation itself runs outside it, so two threads may compute the
    same entry and the first insert wins.
    """

    WEIGHT = 'weight'
    DERIVATIVE = 'derivative'

    def __init__(self):
        self._lock = threading.Lock()
        self._values = {}

    def get(self, key, compute):
        with self._lock:
            if key in self._values:
                return self._values[key]
        value = compute()
        with self._lock:
            return self._values.setdefault(key, value)

    def clear(self):
        with self._lock:
            self._values.clear()

    def __len__(self):
        with self._lock:
            return len(self._values)


def profile_weights(profile, a, table, count, quad_tol=initial_data.DEFAULT_QUAD_TOL,
                    cache=None, derivative=False):
    """Array of U_1(a)..U_count(a), or of their a-derivatives."""
    zeros = table.zeros[:count]
    deriv = table.deriv_at_zero[:count]
    if profile.is_named:
        if derivative:
            return initial_data.closed_form_weight_derivatives(profile.kind, a, zeros, deriv)
        return initial_data.closed_form_weights(profile.kind, a, zeros, deriv)
    if cache is None:
        cache = WeightCache()
    compute = initial_data.weight_derivative if derivative else initial_data.weight
    kind = WeightCache.DERIVATIVE if derivative else WeightCache.WEIGHT
    out = np.empty(count)
    for i in range(count):
        req = initial_data.WeightRequest(profile, a, i + 1, table, quad_tol)
        out[i] = cache.get((profile.key, a, i + 1, kind),
                           lambda req=req: compute(req))
    return out


# eigenpairs

def eigenvalue(n, a, table=None):
    """lambda_n = j_n^2 / (4 (1 - a))."""
    initial_data.check_a(a)
    jn = _zero(n, table)
    return jn * jn / (4. * (1. - a))


def eigenfunction_value(n, a, x, table=None):
    """phi_n(x) = J0(j_n sqrt((x - a) / (1 - a))) / |J0'(j_n)| for x in [a, 1]."""
    initial_data.check_a(a)
    _check_x(a, x)
    jn = _zero(n, table)
    dn = table.deriv(n) if table is not None else -bessel.eval_j1(jn)
    return bessel.eval_j0(jn * np.sqrt((x - a) / (1. - a))) / abs(dn)


def _zero(n, table):
    if table is None:
        return bessel.zero_j0(n)
    table.check(n)
    return table.zero(n)


def _check_x(a, x):
    x = np.asarray(x, dtype=float)
    if np.any(x < a) or np.any(x > 1.) or not np.all(np.isfinite(x)):
        raise DomainError(name='x', value=x.tolist(), domain='[{}, 1]'.format(a))


def _check_query(q):
    initial_data.check_a(q.a)
    q.policy.validate(q.table)
    if not np.isfinite(q.t) or q.t < q.policy.t_min:
        raise DomainError(name='t', value=q.t,
                          domain='[{}, inf) (t_min)'.format(q.policy.t_min))
    q.profile.require_nonzero()


# series machinery

def _decay(zeros, a, t):
    """f_n(t, a), flushed to 0 below the double precision floor."""
    exponent = -zeros * zeros * t / (4. * (1. - a))
    return np.where(exponent < EXP_FLOOR, 0., np.exp(np.maximum(exponent, EXP_FLOOR)))


def _bound_count(q):
    return min(q.policy.max_terms + 2, q.table.capacity)


def _tail_bounds(majorants):
    """Certified tails after n = 1..len - 2 terms."""
    first = majorants[1:-1]
    second = majorants[2:]
    with np.errstate(divide='ignore', invalid='ignore'):
        ratio = np.where(first > 0, second / first, 0.)
        tails = np.where(first > 0,
                         np.where(ratio < 1., first / (1. - ratio), np.inf), 0.)
    return tails


def _choose_terms(majorants, tail_tol):
    """Smallest n with a certified tail below tol, or (None, n_max, tail)."""
    tails = _tail_bounds(majorants)
    if len(tails) == 0:
        return None, 0, np.inf
    ok = tails <= tail_tol
    if np.any(ok):
        i = int(np.argmax(ok))
        return i + 1, i + 1, float(tails[i])
    return None, len(tails), float(tails[-1])


def _sum_series(q, majorants, terms):
    """Truncate by the majorants and sum ``terms(n)``, an array of n terms."""
    n, n_max, tail = _choose_terms(majorants, q.policy.tail_tol)
    if n is None:
        partial = float(np.sum(terms(n_max))) if n_max > 0 else 0.
        logger.debug('series at a=%g t=%g not certified after %d terms', q.a, q.t, n_max)
        raise TruncationError(terms=n_max, partial=partial, bound=tail)
    value = float(np.sum(terms(n)))
    logger.debug('series at a=%g t=%g certified with %d terms, tail %g',
                 q.a, q.t, n, tail)
    return SeriesValue(value, n, tail)


def solution_value(q, x, cache=None):
    """u(x, t) for the query, as a SeriesValue."""
    _check_query(q)
    _check_x(q.a, x)
    a, t, table = q.a, q.t, q.table
    m = _bound_count(q)
    zeros, deriv = table.zeros[:m], table.deriv_at_zero[:m]
    f = _decay(zeros, a, t)
    majorants = q.profile.sup_norm * f / deriv ** 2
    y = np.sqrt((x - a) / (1. - a))

    def terms(n):
        u = profile_weights(q.profile, a, table, n, q.policy.quad_tol, cache)
        shape = bessel.eval_j0(zeros[:n] * y)
        return 2. / (zeros[:n] ** 2 * deriv[:n] ** 2) * f[:n] * u * shape

    return _sum_series(q, majorants, terms)


def boundary_trace(q, cache=None):
    """mu(a, t), the boundary flux at x = 1, as a SeriesValue.

    The flux carries the coefficient: mu = (1 - a) du/dx(1, t). Divide by
    1 - a for the plain normal derivative.
    """
    _check_query(q)
    a, t, table = q.a, q.t, q.table
    m = _bound_count(q)
    zeros, deriv = table.zeros[:m], table.deriv_at_zero[:m]
    f = _decay(zeros, a, t)
    majorants = q.profile.sup_norm * zeros * f / (2. * np.abs(deriv))

    def terms(n):
        u = profile_weights(q.profile, a, table, n, q.policy.quad_tol, cache)
        return f[:n] / (zeros[:n] * deriv[:n]) * u

    return _sum_series(q, majorants, terms)


def boundary_trace_da(q, cache=None):
    """d mu / da at (a, t), as a SeriesValue."""
    _check_query(q)
    a, t, table = q.a, q.t, q.table
    m = _bound_count(q)
    zeros, deriv = table.zeros[:m], table.deriv_at_zero[:m]
    f = _decay(zeros, a, t)
    stiffness = zeros ** 2 * t / (4. * (1. - a) ** 2)
    majorants = (zeros / (2. * np.abs(deriv))
                 * (q.profile.deriv_sup_norm + stiffness * q.profile.sup_norm) * f)

    def terms(n):
        u = profile_weights(q.profile, a, table, n, q.policy.quad_tol, cache)
        du = profile_weights(q.profile, a, table, n, q.policy.quad_tol, cache,
                             derivative=True)
        return f[:n] / (zeros[:n] * deriv[:n]) * (du - stiffness[:n] * u)

    return _sum_series(q, majorants, terms)


def trace_values(profile, a_values, t, table, policy, cache=None):
    """mu(a, t) over an array of a, as a float array."""
    return np.array([boundary_trace(TraceQuery(profile, a, t, table, policy), cache).value
                     for a in np.atleast_1d(a_values)])


# diagnostics

def leading_mode_bound(profile, a, t, table, quad_tol=initial_data.DEFAULT_QUAD_TOL):
    """Large time envelope 2 |U_1(a) / (j_1 J0'(j_1))| exp(-lambda_1 t) of mu."""
    u1 = initial_data.weight(initial_data.WeightRequest(profile, a, 1, table, quad_tol))
    j1, d1 = table.zero(1), table.deriv(1)
    return 2. * abs(u1 / (j1 * d1)) * np.exp(-eigenvalue(1, a, table) * t)


def stability_time(profile, beta, lower_bound, L, table):
    """Time after which the leading bracket of dmu/da stays below -L on [0, beta].

    ``lower_bound`` is a positive lower bound of U_1(a) on [0, beta]. The
    threshold is 4 (1 - beta)^2 / (j_1^2 delta) (L - j_1 J0'(j_1) ||u0'||),
    clamped at 0. It is an existence grade estimate, not a sharp one.
    """
    if not 0. <= beta < 1.:
        raise DomainError(name='beta', value=beta, domain='[0, 1)')
    if not lower_bound > 0:
        raise DomainError(name='lower_bound', value=lower_bound, domain='(0, inf)')
    if not L > 0:
        raise DomainError(name='L', value=L, domain='(0, inf)')
    j1, d1 = table.zero(1), table.deriv(1)
    t_bar = (4. * (1. - beta) ** 2 / (j1 ** 2 * lower_bound)
             * (L - j1 * d1 * profile.deriv_sup_norm))
    return max(t_bar, 0.)
