"""Unit tests for finite field arithmetic."""

import random
import unittest

from src.models.errors import (
    DivisionByZero,
    ExtensionRequired,
    FieldMismatch,
    NotPrime,
    ParseError,
    Reducible,
)
from src.models.field import FieldSpec, make_field, tau_polynomial_root


class TestMakeField(unittest.TestCase):
    """Tests for field construction and validation."""

    def test_extension_over_13(self):
        field = make_field(13, extend=True)
        self.assertEqual(field.order, 169)
        self.assertEqual(field.describe(), "GF(13^2) tau^2-tau-1")

    def test_extension_over_5_is_reducible(self):
        # tau = 3: 9 - 3 - 1 = 5 = 0 mod 5
        with self.assertRaises(Reducible):
            make_field(5, extend=True)

    def test_extension_over_11_is_reducible(self):
        with self.assertRaises(Reducible):
            make_field(11, extend=True)

    def test_prime_field_two(self):
        field = make_field(2)
        self.assertEqual(field.order, 2)
        self.assertEqual(field.describe(), "GF(2)")

    def test_composite_characteristic(self):
        for n in (1, 4, 9, 15, 169):
            with self.assertRaises(NotPrime):
                make_field(n)

    def test_tau_root_search_matches_exhaustive_search(self):
        for p in (2, 3, 5, 7, 11, 13, 17, 19, 29, 31):
            exhaustive = [t for t in range(p) if (t * t - t - 1) % p == 0]
            root = tau_polynomial_root(p)
            if exhaustive:
                self.assertIn(root, exhaustive)
            else:
                self.assertIsNone(root)

    def test_tau_over_split_prime_fields(self):
        for p in (5, 11, 19, 61):
            field = make_field(p)
            tau = field.tau()
            self.assertEqual(tau.b, 0)
            self.assertEqual(tau * tau - tau - 1, field.zero(), p)
            self.assertEqual(field.tau_code, tau_polynomial_root(p))

    def test_parse_inverts_describe(self):
        for field in (make_field(13, True), make_field(7), make_field(2, True)):
            self.assertEqual(FieldSpec.parse(field.describe()), field)

    def test_parse_rejects_garbage(self):
        with self.assertRaises(ParseError):
            FieldSpec.parse("QQ")


class TestFieldArithmetic(unittest.TestCase):
    """Tests for element arithmetic in GF(13) and GF(13^2)."""

    def setUp(self):
        self.field = make_field(13, extend=True)
        self.prime = make_field(13)
        self.tau = self.field.tau()
        self.rng = random.Random(1729)

    def _random(self):
        return self.field.element(self.rng.randrange(13), self.rng.randrange(13))

    def test_defining_relation(self):
        self.assertEqual(self.tau * self.tau, self.tau + 1)

    def test_inverse_of_tau(self):
        self.assertEqual(self.tau.inv(), self.tau - 1)

    def test_inverse_of_one(self):
        one = self.field.one()
        self.assertEqual(one.inv(), one)

    def test_inverse_of_zero(self):
        with self.assertRaises(DivisionByZero):
            self.field.zero().inv()
        with self.assertRaises(ZeroDivisionError):
            self.prime.zero().inv()

    def test_prime_field_product(self):
        self.assertEqual(self.prime.element(7) * 2, self.prime.one())

    def test_every_nonzero_element_has_an_inverse(self):
        for x in self.field.elements()[1:]:
            self.assertEqual(x * x.inv(), self.field.one())

    def test_additive_inverse(self):
        for _ in range(200):
            a = self._random()
            self.assertEqual(a + (-a), self.field.zero())

    def test_field_axioms_on_random_triples(self):
        for _ in range(1000):
            a, b, c = self._random(), self._random(), self._random()
            self.assertEqual(a + b, b + a)
            self.assertEqual(a * b, b * a)
            self.assertEqual((a + b) + c, a + (b + c))
            self.assertEqual((a * b) * c, a * (b * c))
            self.assertEqual(a * (b + c), a * b + a * c)

    def test_frobenius_fixes_everything_after_two_steps(self):
        for _ in range(100):
            a = self._random()
            self.assertEqual(a ** (13 * 13), a)

    def test_conjugate_of_tau_is_the_other_root(self):
        conjugate = self.tau.conjugate()
        self.assertNotEqual(conjugate, self.tau)
        self.assertEqual(conjugate, 1 - self.tau)
        self.assertEqual(conjugate * conjugate - conjugate - 1, self.field.zero())

    def test_negative_powers(self):
        self.assertEqual(self.tau ** -1, self.tau - 1)
        self.assertEqual(self.tau ** -2 * self.tau ** 2, self.field.one())

    def test_mixed_fields(self):
        with self.assertRaises(FieldMismatch):
            self.field.one() + make_field(7, True).one()

    def test_tau_needs_extension(self):
        with self.assertRaises(ExtensionRequired):
            self.prime.tau()
        with self.assertRaises(ExtensionRequired):
            self.prime.element(1, 1)

    def test_text_uses_symmetric_residues(self):
        self.assertEqual(str(self.tau), "tau")
        self.assertEqual(str(-self.tau), "-tau")
        self.assertEqual(str(self.tau * 3), "3*tau")
        self.assertEqual(str(self.tau + 1), "1 + tau")
        self.assertEqual(str(2 - self.tau), "2 - tau")
        self.assertEqual(str(self.prime.element(12)), "-1")


if __name__ == '__main__':
    unittest.main()
