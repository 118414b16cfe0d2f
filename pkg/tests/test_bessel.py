import unittest

import ddt
import numpy as np
from scipy import integrate, special

import dotdot
from degen import bessel
from degen.errors import DomainError, UnsupportedOrderError


@ddt.ddt
class TestEvaluation(unittest.TestCase):

    grid = np.linspace(0., 40., 801)

    def test_j0_matches_scipy(self):
        np.testing.assert_allclose(bessel.eval_j0(self.grid), special.j0(self.grid),
                                   rtol=0, atol=1e-13)

    def test_j1_matches_scipy(self):
        np.testing.assert_allclose(bessel.eval_j1(self.grid), special.j1(self.grid),
                                   rtol=0, atol=1e-13)

    @ddt.data(0, 1, 2, 3, 8)
    def test_jn_matches_scipy(self, n):
        np.testing.assert_allclose(bessel.eval_jn(n, self.grid), special.jv(n, self.grid),
                                   rtol=0, atol=1e-13)

    def test_scalar_in_scalar_out(self):
        self.assertIsInstance(bessel.eval_j0(2.), float)
        self.assertEqual(bessel.eval_j0(0.), 1.)
        self.assertEqual(bessel.eval_j1(0.), 0.)

    def test_bounded_by_one(self):
        self.assertTrue(np.all(np.abs(bessel.eval_j0(self.grid)) <= 1.))
        self.assertTrue(np.all(np.abs(bessel.eval_j1(self.grid)) <= 1.))

    def test_derivative_identity(self):
        # J0' = -J1, checked by central differences
        z = np.linspace(.5, 30., 60)
        h = 1e-6
        fd = (bessel.eval_j0(z + h) - bessel.eval_j0(z - h)) / (2 * h)
        np.testing.assert_allclose(fd, -bessel.eval_j1(z), atol=1e-8)

    def test_recurrence(self):
        # J0 + J2 = 2 J1 / z
        z = np.linspace(.1, 30., 300)
        np.testing.assert_allclose(bessel.eval_j0(z) + bessel.eval_jn(2, z),
                                   2. * bessel.eval_j1(z) / z, atol=1e-12)

    def test_integral_identity(self):
        # (z J1)' = z J0
        z = np.linspace(.5, 30., 60)
        h = 1e-5
        f = lambda s: s * bessel.eval_j1(s)
        fd = (f(z + h) - f(z - h)) / (2 * h)
        np.testing.assert_allclose(fd, z * bessel.eval_j0(z), atol=1e-7)

    @ddt.data(-1., float('nan'), float('inf'))
    def test_bad_argument(self, z):
        with self.assertRaises(DomainError):
            bessel.eval_j0(z)

    def test_bad_order(self):
        with self.assertRaises(DomainError):
            bessel.eval_jn(-1, 1.)
        with self.assertRaises(UnsupportedOrderError):
            bessel.eval_jn(bessel.MAX_ORDER + 1, 1.)


class TestZeros(unittest.TestCase):

    def test_zeros_inside_brackets(self):
        table = bessel.build_table(100)
        n = np.arange(1, 101)
        lo, hi = bessel.zero_bracket(n)
        self.assertTrue(np.all(lo <= table.zeros))
        self.assertTrue(np.all(table.zeros <= hi))
        self.assertTrue(np.all(np.abs(bessel.eval_j0(table.zeros)) <= 1e-12))

    def test_zeros_match_scipy(self):
        table = bessel.build_table(50)
        np.testing.assert_allclose(table.zeros, special.jn_zeros(0, 50), rtol=1e-13)

    def test_first_zero(self):
        self.assertAlmostEqual(bessel.zero_j0(1), 2.404825557695773, places=14)

    def test_derivative_at_zeros(self):
        table = bessel.build_table(20)
        np.testing.assert_allclose(table.deriv_at_zero, -special.j1(table.zeros),
                                   atol=1e-14)
        # signs alternate, starting negative
        self.assertTrue(np.all(np.sign(table.deriv_at_zero[::2]) == -1))
        self.assertTrue(np.all(np.sign(table.deriv_at_zero[1::2]) == 1))

    def test_derivative_envelope(self):
        # |J0'(j_n)| sqrt(j_n) tends to sqrt(2 / pi)
        table = bessel.build_table(500)
        scaled = np.abs(table.deriv_at_zero) * np.sqrt(table.zeros)
        self.assertAlmostEqual(scaled[-1], np.sqrt(2. / np.pi), places=5)
        self.assertTrue(table.max_abs_deriv() <= 1.)

    def test_derivatives_shrink_along_the_table(self):
        table = bessel.build_table(500)
        slopes = np.abs(table.deriv_at_zero)
        self.assertTrue(np.all(np.diff(slopes) < 0.))
        self.assertEqual(table.max_abs_deriv(), slopes[0])

    def test_normalization_integral(self):
        # int_0^{j_n} s J0(s)^2 ds = j_n^2 J0'(j_n)^2 / 2
        table = bessel.build_table(10)
        for n in range(1, 11):
            jn = table.zero(n)
            value, _ = integrate.quad(lambda s: s * bessel.eval_j0(s) ** 2, 0., jn,
                                      epsabs=1e-13, epsrel=1e-13, limit=200)
            self.assertAlmostEqual(value, jn ** 2 * table.deriv(n) ** 2 / 2., delta=1e-8)

    def test_table_is_read_only(self):
        table = bessel.build_table(5)
        with self.assertRaises(ValueError):
            table.zeros[0] = 1.

    def test_table_accessors(self):
        table = bessel.build_table(5)
        self.assertEqual(table.zero(1), table.zeros[0])
        self.assertEqual(table.deriv(5), table.deriv_at_zero[4])
        with self.assertRaises(DomainError):
            table.check(6)
        with self.assertRaises(DomainError):
            table.check(0)

    def test_bad_capacity(self):
        with self.assertRaises(DomainError):
            bessel.build_table(0)
        with self.assertRaises(DomainError):
            bessel.build_table(bessel.MAX_CAPACITY + 1)
        with self.assertRaises(DomainError):
            bessel.zero_j0(0)

    def test_shared_table_is_cached(self):
        self.assertIs(bessel.shared_table(16), bessel.shared_table(16))


if __name__ == '__main__':
    unittest.main()
