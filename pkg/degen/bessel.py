"""Bessel functions of the first kind and the positive zeros of J0.

Small arguments are summed from the power series with a term recurrence.
Past ``SERIES_CUTOFF`` the series loses digits to cancellation, so the
Hankel-type rational approximations of :mod:`scipy.special` take over.

Every evaluation function accepts a scalar or an array and returns the
same shape back (a python float for scalar input).
"""
import collections
import functools
import logging
import math

import numpy as np
from scipy import special

from .errors import DomainError, InternalError, UnsupportedOrderError


logger = logging.getLogger(__name__)

SERIES_CUTOFF = 8.0
SERIES_EPS = 1e-18
SERIES_MAX_TERMS = 200
MAX_ORDER = 8
MAX_CAPACITY = 10 ** 4
DEFAULT_CAPACITY = 2048

BISECTION_STEPS = 60
NEWTON_STEPS = 5
ZERO_TOL = 1e-12

_LARGE_ARGUMENT = {0: special.j0, 1: special.j1}


def _check_argument(z):
    z = np.asarray(z, dtype=float)
    if not np.all(np.isfinite(z)):
        raise DomainError(name='z', value=z.tolist(), domain='finite reals')
    if np.any(z < 0):
        raise DomainError(name='z', value=z.tolist(), domain='[0, inf)')
    return z


def _power_series(order, z):
    """Sum (z/2)^n sum_k (-z^2/4)^k / (k! (n+k)!) for a 1-d array z."""
    half = 0.5 * z
    term = half ** order / math.factorial(order)
    total = term.copy()
    q = -half * half
    for k in range(1, SERIES_MAX_TERMS):
        term = term * q / (k * (k + order))
        if np.all(np.abs(term) < SERIES_EPS * (np.abs(total) + 1.0)):
            return total
        total = total + term
    raise InternalError(reason='power series of J_{} did not terminate'.format(order))


def _evaluate(order, z):
    z = _check_argument(z)
    scalar = z.ndim == 0
    z = np.atleast_1d(z)
    out = np.empty_like(z)
    small = z <= SERIES_CUTOFF
    if np.any(small):
        out[small] = _power_series(order, z[small])
    if not np.all(small):
        large = _LARGE_ARGUMENT.get(order, functools.partial(special.jv, order))
        out[~small] = large(z[~small])
    if scalar:
        return float(out[0])
    return out


def eval_j0(z):
    """Return J0(z) for z >= 0."""
    return _evaluate(0, z)


def eval_j1(z):
    """Return J1(z) = -J0'(z) for z >= 0."""
    return _evaluate(1, z)


def eval_jn(n, z):
    """Return Jn(z) for an integer order 0 <= n <= MAX_ORDER.

    Upward recurrence is unstable and only J0..J3 are ever needed, so
    orders past MAX_ORDER are refused.
    """
    if int(n) != n or n < 0:
        raise DomainError(name='n', value=n, domain='nonnegative integers')
    if n > MAX_ORDER:
        raise UnsupportedOrderError(order=n, max_order=MAX_ORDER)
    return _evaluate(int(n), z)


def zero_bracket(n):
    """Interval [pi(n - 1/4), pi(n - 1/8)] known to contain the n-th zero of J0."""
    n = np.asarray(n, dtype=float)
    return np.pi * (n - 0.25), np.pi * (n - 0.125)


def _refine_zeros(ns):
    lo, hi = zero_bracket(ns)
    f_lo = eval_j0(lo)
    if np.any(f_lo * eval_j0(hi) > 0):
        bad = ns[f_lo * eval_j0(hi) > 0]
        raise InternalError(reason='J0 does not change sign on the bracket '
                                   'of zeros {}'.format(bad.tolist()))
    for _ in range(BISECTION_STEPS):
        mid = 0.5 * (lo + hi)
        f_mid = eval_j0(mid)
        same = f_mid * f_lo > 0
        lo = np.where(same, mid, lo)
        f_lo = np.where(same, f_mid, f_lo)
        hi = np.where(same, hi, mid)
    bracket_lo, bracket_hi = zero_bracket(ns)
    x = 0.5 * (lo + hi)
    for _ in range(NEWTON_STEPS):
        step = eval_j0(x) / eval_j1(x)  # J0' = -J1
        x = np.clip(x + step, bracket_lo, bracket_hi)
        if np.all(np.abs(step) <= 4 * np.finfo(float).eps * x):
            break
    residual = np.abs(eval_j0(x))
    if np.any(residual > ZERO_TOL):
        raise InternalError(reason='zero refinement stalled, |J0| = {:g}'.format(
            residual.max()))
    return x


def zero_j0(n):
    """Return j_n, the n-th positive zero of J0 (n >= 1)."""
    if int(n) != n or n < 1:
        raise DomainError(name='n', value=n, domain='positive integers')
    return float(_refine_zeros(np.array([n], dtype=float))[0])


class BesselTable(collections.namedtuple('BesselTable',
                                         ['zeros', 'deriv_at_zero', 'capacity'])):
    """Zeros j_1..j_N of J0 with the values J0'(j_n) = -J1(j_n).

    Arrays are 0-based: ``zeros[n - 1]`` is j_n. They are read-only.
    """

    __slots__ = ()

    def zero(self, n):
        return float(self.zeros[n - 1])

    def deriv(self, n):
        return float(self.deriv_at_zero[n - 1])

    def max_abs_deriv(self):
        """Computed sup of |J0'(j_n)| over the table."""
        return float(np.max(np.abs(self.deriv_at_zero)))

    def check(self, n):
        """Raise DomainError if n is not an index of the table."""
        if n < 1 or n > self.capacity:
            raise DomainError(name='n', value=n,
                              domain='[1, {}]'.format(self.capacity))


def build_table(N):
    """Compute the first N zeros of J0 and the derivative J0' there."""
    if int(N) != N or N < 1 or N > MAX_CAPACITY:
        raise DomainError(name='N', value=N, domain='[1, {}]'.format(MAX_CAPACITY))
    N = int(N)
    zeros = _refine_zeros(np.arange(1, N + 1, dtype=float))
    deriv = -eval_j1(zeros)
    if np.any(deriv == 0) or np.any(np.diff(zeros) <= 0):
        raise InternalError(reason='degenerate table of zeros')
    zeros.setflags(write=False)
    deriv.setflags(write=False)
    logger.debug('built table of %d zeros of J0', N)
    return BesselTable(zeros, deriv, N)


@functools.lru_cache(maxsize=8)
def shared_table(N):
    """Process-wide cached table; tables are immutable so sharing is safe."""
    return build_table(N)
