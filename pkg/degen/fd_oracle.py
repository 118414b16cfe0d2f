"""Finite volume solver of the degenerate problem, used to cross-check the series.

The right sub-problem lives on (a, 1): cells of width h = (1 - a) / nx
centred at x_i = a + (i + 1/2) h, flux (x - a) du/dx on the faces. The
coefficient is zero on the face x = a so no boundary condition is imposed
there; u = 0 at x = 1 enters through a one-sided quadratic flux, which
keeps the boundary derivative second order. The left sub-problem
on (0, a) is the mirror image, degenerate at a and Dirichlet at 0.

Time stepping is implicit (tridiagonal solves with
:func:`scipy.linalg.solve_banded`). Crank-Nicolson starts with two backward
Euler half steps to damp the initial incompatibility at the Dirichlet end.
"""
import collections
import logging

import numpy as np
from scipy import linalg

from .errors import DomainError, InternalError


logger = logging.getLogger(__name__)

BACKWARD_EULER = 'backward-euler'
CRANK_NICOLSON = 'crank-nicolson'
SCHEMES = (BACKWARD_EULER, CRANK_NICOLSON)

MIN_CELLS = 16
MIN_STEPS = 16
MAX_A = 1. - 1e-3

RIGHT = 'right'
LEFT = 'left'


class FdConfig(collections.namedtuple('FdConfig', ['nx', 'nt', 'scheme', 'T_end'])):

    __slots__ = ()

    def __new__(cls, nx=800, nt=2000, scheme=CRANK_NICOLSON, T_end=1.):
        return super(FdConfig, cls).__new__(cls, int(nx), int(nt), scheme, float(T_end))

    def validate(self):
        if self.nx < MIN_CELLS:
            raise DomainError(name='nx', value=self.nx, domain='[{}, inf)'.format(MIN_CELLS))
        if self.nt < MIN_STEPS:
            raise DomainError(name='nt', value=self.nt, domain='[{}, inf)'.format(MIN_STEPS))
        if self.scheme not in SCHEMES:
            raise DomainError(name='scheme', value=self.scheme, domain=SCHEMES)
        if not (np.isfinite(self.T_end) and self.T_end > 0):
            raise DomainError(name='T_end', value=self.T_end, domain='(0, inf)')


class FdSolution(collections.namedtuple(
        'FdSolution', ['grid', 'times', 'values', 'trace_series', 'a', 'side'])):
    """Solution of one sub-problem.

    ``grid`` holds the cell centres plus the Dirichlet end (x = 1 for the
    right problem, x = 0 for the left one), where ``values`` is exactly 0.
    ``values[k]`` is the solution at ``times[k]``; ``trace_series[k]`` the
    one-sided derivative du/dx at the Dirichlet end.
    """

    __slots__ = ()

    @property
    def flux_series(self):
        """Boundary flux (x - a) du/dx at the Dirichlet end."""
        if self.side == RIGHT:
            return (1. - self.a) * self.trace_series
        return self.a * self.trace_series

    @property
    def h(self):
        return abs(self.grid[2] - self.grid[1])

    def l2_norms(self):
        """Discrete L2 norm of every stored time level."""
        return np.sqrt(self.h * np.sum(self.values ** 2, axis=1))


def _check_a(a):
    if not 0. <= a <= MAX_A:
        raise DomainError(name='a', value=a, domain='[0, {}]'.format(MAX_A))


def _operator(face_coeff, h, dirichlet):
    """Banded form (3, n) of the finite volume operator.

    ``face_coeff`` has one entry per face; a zero entry closes the cell. The
    flux through the Dirichlet face (``dirichlet`` is LEFT or RIGHT) is the
    derivative of the quadratic through u = 0 on the face and the two
    nearest cell values, the same stencil that gives the trace.
    """
    n = len(face_coeff) - 1
    inner = face_coeff[1:-1] / h ** 2
    ab = np.zeros((3, n))
    ab[0, 1:] = inner
    ab[1, :] = -(face_coeff[:-1] + face_coeff[1:]) / h ** 2
    ab[2, :-1] = inner
    if dirichlet == RIGHT:
        k = face_coeff[-1] / h ** 2
        ab[1, -1] -= 2. * k
        ab[2, -2] += k / 3.
    else:
        k = face_coeff[0] / h ** 2
        ab[1, 0] -= 2. * k
        ab[0, 1] += k / 3.
    return ab


def _apply(ab, u):
    out = ab[1] * u
    out[:-1] += ab[0, 1:] * u[1:]
    out[1:] += ab[2, :-1] * u[:-1]
    return out


def _shifted(ab, c):
    """Banded I - c A."""
    m = -c * ab
    m[1] += 1.
    return m


def _solve(matrix, rhs):
    try:
        return linalg.solve_banded((1, 1), matrix, rhs, check_finite=False)
    except (linalg.LinAlgError, ValueError) as e:
        raise InternalError(reason='tridiagonal solve failed: {}'.format(e))


def _march(ab, u0, cfg):
    """Time levels 0..nt of du/dt = A u."""
    dt = cfg.T_end / cfg.nt
    values = np.empty((cfg.nt + 1, len(u0)))
    values[0] = u0
    if cfg.scheme == BACKWARD_EULER:
        step = _shifted(ab, dt)
        for k in range(cfg.nt):
            values[k + 1] = _solve(step, values[k])
    else:
        half = _shifted(ab, dt / 2.)
        u = _solve(half, _solve(half, values[0]))
        values[1] = u
        for k in range(1, cfg.nt):
            values[k + 1] = _solve(half, values[k] + dt / 2. * _apply(ab, values[k]))
    if not np.all(np.isfinite(values)):
        raise InternalError(reason='non-finite values in the finite volume solution')
    return values


def _freeze(*arrays):
    for array in arrays:
        array.setflags(write=False)


def solve_fd(profile, a, cfg):
    """Solve the right sub-problem on (a, 1) with initial datum ``profile``."""
    _check_a(a)
    cfg.validate()
    nx = cfg.nx
    h = (1. - a) / nx
    faces = a + h * np.arange(nx + 1)
    face_coeff = faces - a
    face_coeff[0] = 0.
    centres = a + h * (np.arange(nx) + .5)
    values = _march(_operator(face_coeff, h, RIGHT), profile.value(centres), cfg)
    # u1 at 1 - h/2, u2 at 1 - 3h/2, u = 0 at 1
    trace = (values[:, -2] - 9. * values[:, -1]) / (3. * h)
    grid = np.append(centres, 1.)
    values = np.hstack([values, np.zeros((cfg.nt + 1, 1))])
    times = np.linspace(0., cfg.T_end, cfg.nt + 1)
    _freeze(grid, times, values, trace)
    logger.debug('solved right problem a=%g nx=%d nt=%d %s', a, nx, cfg.nt, cfg.scheme)
    return FdSolution(grid, times, values, trace, a, RIGHT)


def solve_left(profile, a, cfg):
    """Solve the left sub-problem on (0, a): degenerate at a, u = 0 at 0."""
    cfg.validate()
    if not 0. < a <= MAX_A:
        raise DomainError(name='a', value=a, domain='(0, {}]'.format(MAX_A))
    nx = cfg.nx
    h = a / nx
    faces = h * np.arange(nx + 1)
    face_coeff = a - faces
    face_coeff[-1] = 0.
    centres = h * (np.arange(nx) + .5)
    values = _march(_operator(face_coeff, h, LEFT), profile.value(centres), cfg)
    trace = (9. * values[:, 0] - values[:, 1]) / (3. * h)
    grid = np.insert(centres, 0, 0.)
    values = np.hstack([np.zeros((cfg.nt + 1, 1)), values])
    times = np.linspace(0., cfg.T_end, cfg.nt + 1)
    _freeze(grid, times, values, trace)
    logger.debug('solved left problem a=%g nx=%d nt=%d %s', a, nx, cfg.nt, cfg.scheme)
    return FdSolution(grid, times, values, trace, a, LEFT)


def solve_full(profile_left, profile_right, a, cfg):
    """Solve both lateral problems of the full problem on (0, 1).

    The degenerate point decouples them. Returns (left, right); left is None
    when a = 0 and the left interval is empty.
    """
    _check_a(a)
    right = solve_fd(profile_right, a, cfg)
    left = solve_left(profile_left, a, cfg) if a > 0 else None
    return left, right


def _interpolate(sol, series, t):
    if not sol.times[0] <= t <= sol.times[-1]:
        raise DomainError(name='t', value=t,
                          domain='[0, {}] (solved horizon)'.format(sol.times[-1]))
    return float(np.interp(t, sol.times, series))


def trace_fd(sol, t):
    """du/dx at the Dirichlet end, linearly interpolated in time."""
    return _interpolate(sol, sol.trace_series, t)


def flux_fd(sol, t):
    """Boundary flux at the Dirichlet end; comparable with the series trace mu."""
    return _interpolate(sol, sol.flux_series, t)
