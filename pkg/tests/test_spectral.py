import unittest

import ddt
import numpy as np
from scipy import integrate, special

import dotdot
import fixtures
from degen import bessel, spectral
from degen.errors import DomainError, TruncationError
from degen.initial_data import InitialProfile
from degen.spectral import TraceQuery, TruncationPolicy


table = fixtures.table
policy = fixtures.policy


def query(profile, a, t, pol=policy):
    return TraceQuery(profile, a, t, table, pol)


class TestEigenpairs(unittest.TestCase):

    def test_eigenvalue(self):
        j1 = table.zero(1)
        self.assertAlmostEqual(spectral.eigenvalue(1, 0., table), j1 ** 2 / 4.)
        self.assertAlmostEqual(spectral.eigenvalue(2, .5, table), table.zero(2) ** 2 / 2.)
        self.assertAlmostEqual(spectral.eigenvalue(1, .2), spectral.eigenvalue(1, .2, table),
                               places=12)

    def test_eigenfunction_boundary_values(self):
        for n in (1, 2, 7):
            self.assertAlmostEqual(spectral.eigenfunction_value(n, .3, 1., table), 0.,
                                   delta=1e-12)
            self.assertAlmostEqual(spectral.eigenfunction_value(n, .3, .3, table),
                                   1. / abs(table.deriv(n)))

    def test_eigenfunction_solves_the_operator(self):
        # ((x - a) phi')' = -lambda phi, by central differences
        a, n, h = .25, 3, 1e-4
        lam = spectral.eigenvalue(n, a, table)
        phi = lambda x: spectral.eigenfunction_value(n, a, x, table)
        for x in (.4, .6, .9):
            flux = lambda y: (y - a) * (phi(y + h / 2) - phi(y - h / 2)) / h
            lhs = (flux(x + h / 2) - flux(x - h / 2)) / h
            self.assertAlmostEqual(lhs, -lam * phi(x), delta=1e-4 * lam)

    def test_eigenfunctions_are_orthogonal(self):
        a = .35

        def inner(n, m):
            f = lambda x: (spectral.eigenfunction_value(n, a, x, table)
                           * spectral.eigenfunction_value(m, a, x, table))
            return integrate.quad(f, a, 1., epsabs=1e-12, limit=200)[0]

        for n in range(1, 5):
            self.assertAlmostEqual(np.sqrt(inner(n, n)), np.sqrt(1. - a), delta=1e-8)
            for m in range(n + 1, 5):
                self.assertAlmostEqual(inner(n, m), 0., delta=1e-6)

    def test_decay_factor_falls_with_a(self):
        grid = np.linspace(.1, .9, 9)
        for n in (1, 2, 5):
            for t in (.05, .5, 2.):
                f = [np.exp(-spectral.eigenvalue(n, a, table) * t) for a in grid]
                self.assertTrue(np.all(np.diff(f) < 0.), msg=(n, t))

    def test_eigenfunction_domain(self):
        with self.assertRaises(DomainError):
            spectral.eigenfunction_value(1, .3, .2, table)
        with self.assertRaises(DomainError):
            spectral.eigenvalue(1, 1., table)
        with self.assertRaises(DomainError):
            spectral.eigenvalue(table.capacity + 1, .1, table)


@ddt.ddt
class TestTrace(unittest.TestCase):

    def test_const_one_closed_sum(self):
        # a = 0, u0 = 1: mu(t) = -sum exp(-j_n^2 t / 4)
        zeros = special.jn_zeros(0, 40)
        for t in (.05, .5, 2.):
            expected = -np.sum(np.exp(-zeros ** 2 * t / 4.))
            self.assertAlmostEqual(fixtures.trace(fixtures.const_one, 0., t).value, expected,
                                   delta=1e-11)

    @ddt.data(*fixtures.named_profiles)
    def test_trace_is_the_boundary_flux(self, profile):
        a, t, h = .35, .2, 1e-4
        q = query(profile, a, t)
        u = lambda x: spectral.solution_value(q, x).value
        derivative = (u(1. - 2 * h) - 4. * u(1. - h)) / (2 * h)
        self.assertAlmostEqual(spectral.boundary_trace(q).value, (1. - a) * derivative,
                               delta=1e-6)

    @ddt.data(*fixtures.named_profiles)
    def test_trace_da_is_a_derivative(self, profile):
        t, h = .3, 1e-5
        mu = lambda a: spectral.boundary_trace(query(profile, a, t)).value
        fd = (mu(.4 + h) - mu(.4 - h)) / (2 * h)
        self.assertAlmostEqual(spectral.boundary_trace_da(query(profile, .4, t)).value, fd,
                               delta=1e-6)

    def test_polynomial_trace_matches_named(self):
        poly = InitialProfile.polynomial([0., 1., -1.])
        for a in (0., .5):
            self.assertAlmostEqual(fixtures.trace(poly, a, .1).value,
                                   fixtures.trace(fixtures.x_one_minus_x, a, .1).value,
                                   delta=1e-9)

    def test_const_one_signs(self):
        for a in (.1, .5, .8):
            self.assertLess(fixtures.trace(fixtures.const_one, a, .5).value, 0.)
            self.assertGreater(
                spectral.boundary_trace_da(query(fixtures.const_one, a, .5)).value, 0.)

    def test_halving_tolerance_stays_within_certificate(self):
        rng = np.random.default_rng(7)
        for _ in range(20):
            profile = fixtures.named_profiles[rng.integers(4)]
            a, t = rng.uniform(0., .9), rng.uniform(.01, 2.)
            coarse = fixtures.trace(profile, a, t)
            fine = fixtures.trace(profile, a, t, policy.with_tail_tol(policy.tail_tol / 2))
            self.assertGreaterEqual(fine.terms_used, coarse.terms_used)
            self.assertLessEqual(abs(fine.value - coarse.value), coarse.tail_bound)
            self.assertLessEqual(coarse.tail_bound, policy.tail_tol)

    def test_solution_vanishes_at_the_boundary(self):
        rng = np.random.default_rng(11)
        for _ in range(50):
            profile = fixtures.named_profiles[rng.integers(4)]
            q = query(profile, rng.uniform(0., .9), rng.uniform(.02, 2.))
            self.assertLessEqual(abs(spectral.solution_value(q, 1.).value), policy.tail_tol)

    def test_first_mode_decays_alone(self):
        xs = np.linspace(0., 1., 401)
        j1 = table.zero(1)
        phi = InitialProfile.sampled(xs, bessel.eval_j0(j1 * np.sqrt(xs)))
        t = .5
        q = query(phi, 0., t, policy.with_tail_tol(1e-9))
        for x in (.1, .3, .7):
            expected = np.exp(-spectral.eigenvalue(1, 0., table) * t) * bessel.eval_j0(
                j1 * np.sqrt(x))
            self.assertAlmostEqual(spectral.solution_value(q, x).value, expected, delta=1e-5)

    @ddt.data(*fixtures.named_profiles)
    def test_leading_mode_envelope(self, profile):
        for a in (.1, .35, .6):
            bound = spectral.leading_mode_bound(profile, a, 2., table)
            self.assertLessEqual(abs(fixtures.trace(profile, a, 2.).value), bound)

    def test_trace_values(self):
        values = spectral.trace_values(fixtures.identity, [.1, .2, .3], .4, table, policy)
        self.assertEqual(values.shape, (3,))
        self.assertEqual(values[1], fixtures.trace(fixtures.identity, .2, .4).value)


class TestTruncation(unittest.TestCase):

    def test_not_certified(self):
        tight = TruncationPolicy(max_terms=2, tail_tol=1e-12)
        with self.assertRaises(TruncationError) as cm:
            spectral.boundary_trace(query(fixtures.const_one, .2, 1e-3, tight))
        self.assertEqual(cm.exception.terms, 2)
        self.assertGreater(cm.exception.bound, 1e-12)

    def test_time_below_t_min(self):
        with self.assertRaises(DomainError):
            spectral.boundary_trace(query(fixtures.const_one, .2, policy.t_min / 2))

    def test_bad_policy(self):
        with self.assertRaises(DomainError):
            spectral.boundary_trace(query(fixtures.const_one, .2, .1,
                                          TruncationPolicy(max_terms=table.capacity + 1)))
        with self.assertRaises(DomainError):
            TruncationPolicy(tail_tol=0.).validate()

    def test_zero_profile(self):
        with self.assertRaises(DomainError):
            spectral.boundary_trace(query(InitialProfile.polynomial([0.]), .2, .1))

    def test_more_terms_at_small_times(self):
        early = fixtures.trace(fixtures.const_one, .2, .01)
        late = fixtures.trace(fixtures.const_one, .2, 1.)
        self.assertGreater(early.terms_used, late.terms_used)


class TestWeightCache(unittest.TestCase):

    def test_cache_reuses_quadratures(self):
        cache = spectral.WeightCache()
        profile = fixtures.one_minus_x2
        first = spectral.profile_weights(profile, .3, table, 4, cache=cache)
        self.assertEqual(len(cache), 4)
        again = spectral.profile_weights(profile, .3, table, 4, cache=cache)
        np.testing.assert_array_equal(first, again)
        spectral.profile_weights(profile, .3, table, 4, cache=cache, derivative=True)
        self.assertEqual(len(cache), 8)
        cache.clear()
        self.assertEqual(len(cache), 0)

    def test_named_profiles_bypass_the_cache(self):
        cache = spectral.WeightCache()
        spectral.profile_weights(fixtures.identity, .3, table, 4, cache=cache)
        self.assertEqual(len(cache), 0)


class TestStabilityTime(unittest.TestCase):

    def test_formula(self):
        j1, d1 = table.zero(1), table.deriv(1)
        profile = fixtures.one_minus_x
        t_bar = spectral.stability_time(profile, .5, .2, 3., table)
        self.assertAlmostEqual(t_bar, 4. * .25 / (j1 ** 2 * .2) * (3. - j1 * d1))

    def test_domain(self):
        with self.assertRaises(DomainError):
            spectral.stability_time(fixtures.const_one, 1., .2, 1., table)
        with self.assertRaises(DomainError):
            spectral.stability_time(fixtures.const_one, .5, 0., 1., table)
        with self.assertRaises(DomainError):
            spectral.stability_time(fixtures.const_one, .5, .2, -1., table)


if __name__ == '__main__':
    unittest.main()
