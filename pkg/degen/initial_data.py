"""Initial data u0 on [0, 1] and the spectral weights U_n(a).

The weight of mode n is

    U_n(a) = int_0^{j_n} u0(a + (1 - a) s^2 / j_n^2) s J0(s) ds

and its derivative in a is

    U_n'(a) = int_0^{j_n} u0'(a + (1 - a) s^2 / j_n^2) (1 - s^2 / j_n^2) s J0(s) ds.

The four named profiles have closed forms; polynomial and sampled data go
through adaptive quadrature.
"""
import collections
import logging

import numpy as np
from numpy.polynomial import polynomial as P
from scipy import integrate as sp_integrate

from . import bessel
from .errors import AccuracyError, DomainError


logger = logging.getLogger(__name__)

DEFAULT_QUAD_TOL = 1e-11
QUAD_LIMIT = 2 ** 14
MAX_DEGREE = 12
SUP_NORM_SAMPLES = 4097
MAX_QUAD_POINTS = 2 ** 12


class InitialProfile(object):
    """An initial datum u0 on [0, 1].

    Use the class methods to build one; the constructor does no checking
    beyond what every variant shares.
    """

    CONST_ONE = 'one'
    ONE_MINUS_X = 'one-minus-x'
    X_ONE_MINUS_X = 'x-one-minus-x'
    X = 'x'
    POLYNOMIAL = 'poly'
    SAMPLED = 'samples'

    NAMED = (CONST_ONE, ONE_MINUS_X, X_ONE_MINUS_X, X)
    KINDS = NAMED + (POLYNOMIAL, SAMPLED)

    def __init__(self, kind, sup_norm, deriv_sup_norm, coefficients=(),
                 samples=None):
        if kind not in self.KINDS:
            raise DomainError(name='kind', value=kind, domain=self.KINDS)
        self.kind = kind
        self.coefficients = tuple(float(c) for c in coefficients)
        self.samples = samples
        self.sup_norm = float(sup_norm)
        self.deriv_sup_norm = float(deriv_sup_norm)
        if samples is not None:
            self._slopes = np.diff(samples[1]) / np.diff(samples[0])
        if kind == self.POLYNOMIAL:
            self._deriv_coefficients = P.polyder(np.array(self.coefficients))

    # constructors

    @classmethod
    def const_one(cls):
        return cls(cls.CONST_ONE, 1., 0.)

    @classmethod
    def one_minus_x(cls):
        return cls(cls.ONE_MINUS_X, 1., 1.)

    @classmethod
    def x_one_minus_x(cls):
        return cls(cls.X_ONE_MINUS_X, .25, 1.)

    @classmethod
    def identity(cls):
        return cls(cls.X, 1., 1.)

    @classmethod
    def polynomial(cls, coefficients, sup_norm=None, deriv_sup_norm=None):
        """u0(x) = sum_k c_k x^k, degree at most MAX_DEGREE.

        Missing norms are estimated on a uniform grid of SUP_NORM_SAMPLES points.
        """
        coefficients = [float(c) for c in coefficients]
        if len(coefficients) == 0 or len(coefficients) > MAX_DEGREE + 1:
            raise DomainError(name='degree', value=len(coefficients) - 1,
                              domain='[0, {}]'.format(MAX_DEGREE))
        grid = np.linspace(0., 1., SUP_NORM_SAMPLES)
        if sup_norm is None:
            sup_norm = np.max(np.abs(P.polyval(grid, coefficients)))
        if deriv_sup_norm is None:
            deriv_sup_norm = np.max(np.abs(P.polyval(grid, P.polyder(coefficients))))
        return cls(cls.POLYNOMIAL, sup_norm, deriv_sup_norm,
                   coefficients=coefficients)

    @classmethod
    def sampled(cls, xs, values):
        """Piecewise linear interpolant of (x, value) pairs spanning [0, 1].

        The derivative is the slope of the interpolant, constant on each
        panel, which makes the profile only approximately C1.
        """
        xs = np.array(xs, dtype=float)
        values = np.array(values, dtype=float)
        if xs.shape != values.shape or xs.ndim != 1 or len(xs) < 3:
            raise DomainError(name='samples', value=len(xs),
                              domain='at least 3 (x, value) pairs')
        if np.any(np.diff(xs) <= 0):
            raise DomainError(message='Sample abscissae must be strictly increasing.')
        if xs[0] != 0. or xs[-1] != 1.:
            raise DomainError(name='samples', value=(xs[0], xs[-1]),
                              domain='abscissae spanning [0, 1]')
        if not np.all(np.isfinite(values)):
            raise DomainError(message='Sample values must be finite.')
        xs.setflags(write=False)
        values.setflags(write=False)
        slopes = np.diff(values) / np.diff(xs)
        return cls(cls.SAMPLED, np.max(np.abs(values)), np.max(np.abs(slopes)),
                   samples=(xs, values))

    # evaluation

    def value(self, x):
        x = np.asarray(x, dtype=float)
        if self.kind == self.CONST_ONE:
            return np.ones_like(x)
        elif self.kind == self.ONE_MINUS_X:
            return 1. - x
        elif self.kind == self.X_ONE_MINUS_X:
            return x * (1. - x)
        elif self.kind == self.X:
            return x.copy()
        elif self.kind == self.POLYNOMIAL:
            return P.polyval(x, self.coefficients)
        else:
            return np.interp(x, *self.samples)

    def derivative(self, x):
        x = np.asarray(x, dtype=float)
        if self.kind == self.CONST_ONE:
            return np.zeros_like(x)
        elif self.kind == self.ONE_MINUS_X:
            return -np.ones_like(x)
        elif self.kind == self.X_ONE_MINUS_X:
            return 1. - 2. * x
        elif self.kind == self.X:
            return np.ones_like(x)
        elif self.kind == self.POLYNOMIAL:
            return P.polyval(x, self._deriv_coefficients)
        else:
            xs = self.samples[0]
            panel = np.clip(np.searchsorted(xs, x, side='right') - 1, 0, len(xs) - 2)
            return self._slopes[panel]

    @property
    def is_named(self):
        return self.kind in self.NAMED

    @property
    def key(self):
        """Hashable identity, used to memoize weights."""
        if self.samples is None:
            return (self.kind, self.coefficients)
        return (self.kind, self.samples[0].tobytes(), self.samples[1].tobytes())

    def require_nonzero(self):
        if not self.sup_norm > 0:
            raise DomainError(message='The initial datum must not vanish identically.')

    def describe(self):
        """Text form of the profile, in the grammar accepted by parse_profile."""
        if self.kind == self.POLYNOMIAL:
            return 'poly:' + ','.join('{!r}'.format(c) for c in self.coefficients)
        elif self.kind == self.SAMPLED:
            return 'samples:<{} points>'.format(len(self.samples[0]))
        return self.kind

    def __eq__(self, other):
        return isinstance(other, InitialProfile) and self.key == other.key

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return 'InitialProfile({})'.format(self.describe())


_NAMED_CONSTRUCTORS = {
    InitialProfile.CONST_ONE: InitialProfile.const_one,
    InitialProfile.ONE_MINUS_X: InitialProfile.one_minus_x,
    InitialProfile.X_ONE_MINUS_X: InitialProfile.x_one_minus_x,
    InitialProfile.X: InitialProfile.identity,
}

PROFILE_HELP = ("initial datum: one | one-minus-x | x-one-minus-x | x | "
                "poly:c0,c1,... | samples:<path.csv> (columns x,value)")


def parse_profile(text, load_samples=None):
    """Parse the profile grammar of the command line.

    :param load_samples: callable path -> (xs, values), required for the
                         ``samples:`` form.
    """
    text = text.strip()
    if text in _NAMED_CONSTRUCTORS:
        return _NAMED_CONSTRUCTORS[text]()
    head, sep, tail = text.partition(':')
    if sep and head == InitialProfile.POLYNOMIAL:
        try:
            coefficients = [float(c) for c in tail.split(',')]
        except ValueError:
            raise DomainError(message="Malformed polynomial coefficients '{}'.".format(tail))
        return InitialProfile.polynomial(coefficients)
    if sep and head == InitialProfile.SAMPLED and load_samples is not None:
        return InitialProfile.sampled(*load_samples(tail))
    raise DomainError(message="Unknown initial datum '{}'; expected {}.".format(
        text, PROFILE_HELP))


# weights

WeightRequest = collections.namedtuple(
    'WeightRequest', ['profile', 'a', 'n', 'table', 'quad_tol'])
WeightRequest.__new__.__defaults__ = (DEFAULT_QUAD_TOL,)


def check_a(a):
    if not 0. <= a < 1.:
        raise DomainError(name='a', value=a, domain='[0, 1)')


def _check_request(req):
    check_a(req.a)
    req.table.check(req.n)
    req.profile.require_nonzero()
    if not req.quad_tol > 0:
        raise DomainError(name='quad_tol', value=req.quad_tol, domain='(0, inf)')


def k_factor(a, jn):
    """K(a, j_n) with U_n(a) = J0'(j_n) K(a, j_n) for u0 = x(1 - x)."""
    return -4. * a * (1. - a) / jn + (1. - a) ** 2 * (4. / jn) * (16. / jn ** 2 - 3.)


def k_factor_da(a, jn):
    return -(4. / jn) * (1. - 2. * a) + 2. * (a - 1.) * (4. / jn) * (16. / jn ** 2 - 3.)


def closed_form_weights(kind, a, zeros, deriv):
    """Vectorized U_n(a) of a named profile, for arrays of j_n and J0'(j_n)."""
    if kind == InitialProfile.CONST_ONE:
        return -zeros * deriv
    elif kind == InitialProfile.ONE_MINUS_X:
        return -4. * (1. - a) * deriv / zeros
    elif kind == InitialProfile.X_ONE_MINUS_X:
        return deriv * k_factor(a, zeros)
    elif kind == InitialProfile.X:
        # x = 1 - (1 - x)
        return (closed_form_weights(InitialProfile.CONST_ONE, a, zeros, deriv)
                - closed_form_weights(InitialProfile.ONE_MINUS_X, a, zeros, deriv))
    raise DomainError(name='kind', value=kind, domain=InitialProfile.NAMED)


def closed_form_weight_derivatives(kind, a, zeros, deriv):
    """Vectorized U_n'(a) of a named profile."""
    if kind == InitialProfile.CONST_ONE:
        return np.zeros_like(zeros)
    elif kind == InitialProfile.ONE_MINUS_X:
        return 4. * deriv / zeros
    elif kind == InitialProfile.X_ONE_MINUS_X:
        return deriv * k_factor_da(a, zeros)
    elif kind == InitialProfile.X:
        return -4. * deriv / zeros
    raise DomainError(name='kind', value=kind, domain=InitialProfile.NAMED)


def _breakpoints(profile, a, jn):
    """Kinks of a sampled integrand, mapped to the s variable."""
    if profile.kind != InitialProfile.SAMPLED:
        return None
    xs = profile.samples[0]
    inner = xs[(xs > a) & (xs < 1.)]
    if len(inner) == 0 or len(inner) > MAX_QUAD_POINTS:
        return None
    return jn * np.sqrt((inner - a) / (1. - a))


def weight_integrand(profile, a, jn):
    def f(s):
        return float(profile.value(a + (1. - a) * s * s / (jn * jn)) * s * bessel.eval_j0(s))
    return f


def weight_derivative_integrand(profile, a, jn):
    def f(s):
        r = s * s / (jn * jn)
        return float(profile.derivative(a + (1. - a) * r) * (1. - r) * s * bessel.eval_j0(s))
    return f


def weight(req):
    """U_n(a) for the profile, degeneracy point and mode of the request."""
    _check_request(req)
    jn, dn = req.table.zero(req.n), req.table.deriv(req.n)
    if req.profile.is_named:
        return float(closed_form_weights(req.profile.kind, req.a,
                                         np.array([jn]), np.array([dn]))[0])
    return integrate(weight_integrand(req.profile, req.a, jn), 0., jn, req.quad_tol,
                     points=_breakpoints(req.profile, req.a, jn))


def weight_derivative(req):
    """dU_n/da for the profile, degeneracy point and mode of the request."""
    _check_request(req)
    jn, dn = req.table.zero(req.n), req.table.deriv(req.n)
    if req.profile.is_named:
        return float(closed_form_weight_derivatives(req.profile.kind, req.a,
                                                    np.array([jn]), np.array([dn]))[0])
    return integrate(weight_derivative_integrand(req.profile, req.a, jn), 0., jn,
                     req.quad_tol, points=_breakpoints(req.profile, req.a, jn))


def integrate(f, lo, hi, tol, points=None):
    """Adaptive Gauss-Kronrod quadrature of f on [lo, hi] to absolute error tol.

    Raises AccuracyError when QUADPACK reports trouble or its error estimate
    exceeds tol within QUAD_LIMIT subdivisions.
    """
    if not lo < hi:
        raise DomainError(name='(lo, hi)', value=(lo, hi), domain='lo < hi')
    if not tol > 0:
        raise DomainError(name='tol', value=tol, domain='(0, inf)')
    limit = QUAD_LIMIT
    if points is not None:
        limit = max(limit, 2 * len(points) + 2)
    result = sp_integrate.quad(f, lo, hi, epsabs=tol, epsrel=0., limit=limit,
                               points=points, full_output=1)
    estimate, error = result[0], result[1]
    if len(result) > 3 or error > tol:
        logger.debug('quadrature on [%g, %g] failed: %s', lo, hi,
                     result[3] if len(result) > 3 else 'error above tolerance')
        raise AccuracyError(tol=tol, estimate=estimate, error=error)
    return estimate
