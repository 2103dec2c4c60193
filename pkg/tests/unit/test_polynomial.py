"""Unit tests for polynomial arithmetic and power sums."""

import random
import unittest

from src.lib.polynomial_text import parse_polynomial
from src.models.errors import ContextMismatch, ExponentOverflow, NotLinear
from src.models.field import make_field
from src.models.polynomial import Polynomial, power_sum, power_sums
from src.models.ring import Monomial, RingContext


class TestPolynomialArithmetic(unittest.TestCase):
    """Tests for ring operations on polynomials."""

    def setUp(self):
        self.field = make_field(13, extend=True)
        self.ring = RingContext(self.field, ('x', 'y', 'z'))
        self.x, self.y, self.z = (Polynomial.variable(self.ring, v) for v in 'xyz')
        self.rng = random.Random(2024)

    def _random_poly(self, terms=4, top=3):
        return Polynomial.from_terms(self.ring, [
            (tuple(self.rng.randrange(top) for _ in range(3)),
             self.field.element(self.rng.randrange(13), self.rng.randrange(13)))
            for _ in range(terms)
        ])

    def test_monic_with_tau_leading_coefficient(self):
        tau = self.field.tau()
        f = self.x.scale(tau) + self.y
        monic = f.monic()
        self.assertEqual(monic.leading_coefficient, 1)
        self.assertEqual(monic, self.x + self.y.scale(tau ** -1))

    def test_monic_with_mixed_leading_coefficient(self):
        c = self.field.element(2, 1)
        f = self.x.scale(c) + self.y
        monic = f.monic()
        self.assertEqual(monic.leading_coefficient, 1)
        self.assertEqual(monic.scale(c), f)

    def test_monic_of_random_polynomials(self):
        for _ in range(50):
            f = self._random_poly()
            if f.is_zero():
                continue
            lc = f.leading_term[1]
            self.assertEqual(f.monic().leading_coefficient, 1)
            self.assertEqual(f.monic().scale(lc), f)

    def test_scale_by_extension_element(self):
        tau = self.field.tau()
        self.assertEqual(self.x.scale(tau).scale(tau), self.x.scale(tau + 1))
        self.assertEqual(self.x.scale_code(tau.code), self.x.scale(tau))
        self.assertEqual(self.x.scale(14), self.x)

    def test_ring_axioms(self):
        for _ in range(100):
            f, g, h = self._random_poly(), self._random_poly(), self._random_poly()
            self.assertEqual(f * g, g * f)
            self.assertEqual(f * (g + h), f * g + f * h)
            self.assertEqual((f * g) * h, f * (g * h))
            self.assertEqual(f - f, 0)

    def test_binomial_square(self):
        self.assertEqual((self.x + self.y) ** 2, self.x * self.x + 2 * self.x * self.y + self.y * self.y)

    def test_frobenius_in_characteristic_13(self):
        self.assertEqual((self.x + self.y) ** 13, self.x ** 13 + self.y ** 13)

    def test_leading_term_under_grevlex(self):
        f = self.x * self.z + self.y ** 2
        self.assertEqual(f.leading_term, (Monomial((0, 2, 0)), self.field.one()))

    def test_degree_and_homogeneity(self):
        self.assertEqual(Polynomial.zero(self.ring).degree, -1)
        self.assertTrue((self.x * self.y + self.z ** 2).is_homogeneous())
        self.assertFalse((self.x * self.y + self.z).is_homogeneous())

    def test_monic(self):
        f = (self.x + self.y).scale(self.field.tau())
        self.assertEqual(f.monic(), self.x + self.y)

    def test_linear_form_coefficients(self):
        form = Polynomial.linear_form(self.ring, [1, 0, self.field.tau()])
        self.assertEqual(form.coefficients(), [self.field.one(), self.field.zero(), self.field.tau()])
        with self.assertRaises(NotLinear):
            (self.x * self.y).coefficients()

    def test_exponent_overflow(self):
        with self.assertRaises(ExponentOverflow):
            self.x ** 100 * self.x ** 28
        self.assertEqual((self.x ** 100 * self.x ** 27).degree, 127)

    def test_context_mismatch(self):
        other = RingContext(self.field, ('x', 'y', 'w'))
        with self.assertRaises(ContextMismatch):
            self.x + Polynomial.variable(other, 'x')


class TestPowerSums(unittest.TestCase):
    """Tests for power_sum(s) against repeated multiplication."""

    def setUp(self):
        self.field = make_field(13, extend=True)
        self.ring = RingContext(self.field, ('x1', 'x2', 'x3', 'x4'))
        rng = random.Random(5)
        self.forms = [
            Polynomial.linear_form(self.ring, [
                self.field.element(rng.randrange(13), rng.randrange(13)) for _ in range(4)
            ])
            for _ in range(6)
        ]

    def _naive(self, e):
        total = Polynomial.zero(self.ring)
        for f in self.forms:
            total = total + f ** e
        return total

    def test_matches_repeated_multiplication(self):
        exponents = (1, 2, 5, 12)
        for e, result in zip(exponents, power_sums(self.forms, exponents)):
            self.assertEqual(result, self._naive(e))

    def test_single_exponent(self):
        self.assertEqual(power_sum(self.forms, 7), self._naive(7))

    def test_sparse_forms(self):
        forms = [parse_polynomial(t, self.ring) for t in ("x1", "x2 - x3", "tau*x4 + x1")]
        expected = sum((f ** 4 for f in forms[1:]), forms[0] ** 4)
        self.assertEqual(power_sum(forms, 4), expected)

    def test_rejects_nonlinear(self):
        with self.assertRaises(NotLinear):
            power_sums([self.forms[0] * self.forms[1]], [2])

    def test_result_is_homogeneous(self):
        for result in power_sums(self.forms, (2, 12)):
            self.assertTrue(result.is_homogeneous())


if __name__ == '__main__':
    unittest.main()
