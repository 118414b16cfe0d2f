import unittest

import ddt
import numpy as np

import dotdot
import fixtures
from degen import bessel, fd_oracle, spectral
from degen.errors import DomainError
from degen.fd_oracle import FdConfig
from degen.initial_data import InitialProfile


@ddt.ddt
class TestAgainstSeries(unittest.TestCase):

    cfg = FdConfig(nx=1600, nt=4000, T_end=1.)

    @ddt.idata((p, a) for p in fixtures.named_profiles for a in (.2, .35, .6))
    @ddt.unpack
    def test_flux_matches_trace(self, profile, a):
        sol = fd_oracle.solve_fd(profile, a, self.cfg)
        for t in (.2, .5, 1.):
            mu = fixtures.trace(profile, a, t).value
            self.assertLessEqual(abs(fd_oracle.flux_fd(sol, t) - mu), 1e-3 * abs(mu))

    def test_first_mode(self):
        xs = np.linspace(0., 1., 2001)
        j1 = fixtures.table.zero(1)
        phi = InitialProfile.sampled(xs, bessel.eval_j0(j1 * np.sqrt(xs)))
        sol = fd_oracle.solve_fd(phi, 0., FdConfig(nx=800, nt=2000, T_end=.5))
        decay = np.exp(-spectral.eigenvalue(1, 0., fixtures.table) * .5)
        expected = decay * bessel.eval_j0(j1 * np.sqrt(sol.grid))
        np.testing.assert_allclose(sol.values[-1], expected, atol=1e-4)

    def test_second_order_in_space(self):
        traces = []
        for nx in (100, 200, 400):
            sol = fd_oracle.solve_fd(fixtures.const_one, .35, FdConfig(nx=nx, nt=2000))
            traces.append(fd_oracle.trace_fd(sol, 1.))
        coarse, fine = abs(traces[0] - traces[1]), abs(traces[1] - traces[2])
        self.assertGreaterEqual(coarse, 3. * fine)

    def test_converges_under_joint_refinement(self):
        mu = fixtures.trace(fixtures.const_one, .35, 1.).value
        errors = []
        for nx, nt in ((100, 500), (200, 1000), (400, 2000), (800, 4000)):
            sol = fd_oracle.solve_fd(fixtures.const_one, .35, FdConfig(nx=nx, nt=nt))
            errors.append(abs(fd_oracle.flux_fd(sol, 1.) - mu))
        self.assertTrue(all(e1 > e2 for e1, e2 in zip(errors, errors[1:])), msg=errors)

    def test_backward_euler_is_close(self):
        cfg = FdConfig(nx=400, nt=2000, scheme=fd_oracle.BACKWARD_EULER, T_end=.5)
        sol = fd_oracle.solve_fd(fixtures.one_minus_x, .35, cfg)
        mu = fixtures.trace(fixtures.one_minus_x, .35, .5).value
        self.assertLessEqual(abs(fd_oracle.flux_fd(sol, .5) - mu), 1e-2 * abs(mu))


@ddt.ddt
class TestSolution(unittest.TestCase):

    cfg = FdConfig(nx=200, nt=400, T_end=.5)

    def test_layout(self):
        sol = fd_oracle.solve_fd(fixtures.identity, .3, self.cfg)
        self.assertEqual(sol.grid.shape, (201,))
        self.assertEqual(sol.values.shape, (401, 201))
        self.assertEqual(sol.grid[-1], 1.)
        self.assertTrue(np.all(sol.values[:, -1] == 0.))
        self.assertAlmostEqual(sol.h, .7 / 200)
        self.assertEqual(sol.times[-1], .5)
        np.testing.assert_allclose(sol.flux_series, .7 * sol.trace_series)

    @ddt.data(fd_oracle.CRANK_NICOLSON, fd_oracle.BACKWARD_EULER)
    def test_norm_does_not_grow(self, scheme):
        sol = fd_oracle.solve_fd(fixtures.const_one, .2, self.cfg._replace(scheme=scheme))
        norms = sol.l2_norms()
        self.assertTrue(np.all(np.diff(norms) <= 1e-12))

    def test_solution_stays_nonnegative(self):
        sol = fd_oracle.solve_fd(fixtures.x_one_minus_x, .4,
                                 self.cfg._replace(scheme=fd_oracle.BACKWARD_EULER))
        self.assertTrue(np.all(sol.values >= -1e-14))

    @ddt.data(fixtures.const_one, fixtures.one_minus_x, fixtures.x_one_minus_x)
    def test_maximum_principle(self, profile):
        cfg = self.cfg._replace(scheme=fd_oracle.BACKWARD_EULER)
        top = profile.sup_norm
        for a in (0., .35, .8):
            sol = fd_oracle.solve_fd(profile, a, cfg)
            self.assertTrue(np.all(sol.values >= -1e-12))
            self.assertTrue(np.all(sol.values <= top + 1e-12))

    def test_positive_datum_gives_negative_trace(self):
        sol = fd_oracle.solve_fd(fixtures.const_one, .35, FdConfig(nx=200, nt=2000, T_end=2.))
        window = (sol.times >= .1) & (sol.times <= 2.)
        self.assertTrue(np.all(sol.trace_series[window] < 0.))

    def test_values_are_read_only(self):
        sol = fd_oracle.solve_fd(fixtures.identity, .3, self.cfg)
        with self.assertRaises(ValueError):
            sol.values[0, 0] = 1.

    def test_left_layout(self):
        a = .4
        profile = fixtures.one_minus_x2
        left = fd_oracle.solve_left(profile, a, self.cfg)
        centres = a * (np.arange(self.cfg.nx) + .5) / self.cfg.nx
        self.assertEqual(left.grid[0], 0.)
        self.assertEqual(left.side, fd_oracle.LEFT)
        np.testing.assert_allclose(left.grid[1:], centres)
        np.testing.assert_allclose(left.values[0, 1:], profile.value(centres))
        self.assertTrue(np.all(left.values[:, 0] == 0.))
        np.testing.assert_allclose(left.flux_series, a * left.trace_series)

    def test_left_problem_is_a_reflection(self):
        a = .4
        u0 = fixtures.one_minus_x
        # v0(y) = u0(a (1 - y)) = 1 - a + a y
        v0 = InitialProfile.polynomial([1. - a, a])
        left = fd_oracle.solve_left(u0, a, self.cfg)
        right = fd_oracle.solve_fd(v0, 0., self.cfg._replace(T_end=self.cfg.T_end / a))
        np.testing.assert_allclose(left.values[:, 1:], right.values[:, -2::-1],
                                   rtol=1e-10, atol=1e-13)
        np.testing.assert_allclose(left.flux_series, -right.flux_series,
                                   rtol=1e-9, atol=1e-12)

    def test_solve_full(self):
        left, right = fd_oracle.solve_full(fixtures.const_one, fixtures.const_one, 0.,
                                           self.cfg)
        self.assertIsNone(left)
        self.assertEqual(right.a, 0.)
        left, right = fd_oracle.solve_full(fixtures.const_one, fixtures.identity, .5,
                                           self.cfg)
        self.assertEqual(left.side, fd_oracle.LEFT)
        # the two sides do not talk to each other
        alone = fd_oracle.solve_fd(fixtures.identity, .5, self.cfg)
        np.testing.assert_array_equal(right.values, alone.values)

    def test_interpolation_horizon(self):
        sol = fd_oracle.solve_fd(fixtures.identity, .3, self.cfg)
        self.assertEqual(fd_oracle.trace_fd(sol, 0.), sol.trace_series[0])
        with self.assertRaises(DomainError):
            fd_oracle.trace_fd(sol, .6)
        with self.assertRaises(DomainError):
            fd_oracle.flux_fd(sol, -.1)


@ddt.ddt
class TestConfig(unittest.TestCase):

    @ddt.data({'nx': 4}, {'nt': 1}, {'scheme': 'leapfrog'}, {'T_end': 0.},
              {'T_end': float('inf')})
    def test_bad_config(self, change):
        with self.assertRaises(DomainError):
            fd_oracle.solve_fd(fixtures.identity, .3, FdConfig()._replace(**change))

    @ddt.data(-.1, fd_oracle.MAX_A + 1e-4, 1.)
    def test_bad_a(self, a):
        with self.assertRaises(DomainError):
            fd_oracle.solve_fd(fixtures.identity, a, FdConfig(nx=32, nt=32))

    def test_left_needs_positive_a(self):
        with self.assertRaises(DomainError):
            fd_oracle.solve_left(fixtures.identity, 0., FdConfig(nx=32, nt=32))


if __name__ == '__main__':
    unittest.main()
