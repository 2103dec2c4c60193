"""Unit tests for reading and writing ideal files."""

import tempfile
import unittest
from pathlib import Path

from src.models.errors import ExtensionRequired, NonHomogeneousInput, ParseError, Reducible
from src.models.field import make_field
from src.models.ideal_file import IdealFile

FIXTURES = Path(__file__).parent.parent / 'fixtures'


class TestIdealFile(unittest.TestCase):
    """Tests for the line-oriented ideal format."""

    def test_read_fixture(self):
        ideal = IdealFile.read(FIXTURES / 'ci33.ideal')
        self.assertEqual(ideal.ring.field, make_field(13))
        self.assertEqual(ideal.ring.variables, ('x', 'y'))
        self.assertEqual([str(g) for g in ideal.generators], ["x^3", "y^3"])
        self.assertEqual(str(ideal.candidate), "x + y")

    def test_comments_and_blank_lines_are_dropped(self):
        ideal = IdealFile.read(FIXTURES / 'ci22.ideal')
        self.assertEqual(ideal.to_text(), "field: GF(13)\nvars: x > y\norder: grevlex\nx^2\ny^2\n")

    def test_canonical_text_round_trip(self):
        ideal = IdealFile.read(FIXTURES / 'tau.ideal')
        self.assertEqual(ideal.ring.variables, ('x', 'y', 'z'))
        again = IdealFile.from_text(ideal.to_text())
        self.assertEqual(again, ideal)
        self.assertEqual(again.input_hash(), ideal.input_hash())

    def test_write(self):
        ideal = IdealFile.read(FIXTURES / 'ci33.ideal')
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / 'out' / 'copy.ideal'
            ideal.write(path)
            self.assertEqual(IdealFile.read(path), ideal)

    def test_prime_override_keeps_the_extension_flag(self):
        ideal = IdealFile.read(FIXTURES / 'tau.ideal', prime=17)
        self.assertEqual(ideal.ring.field, make_field(17, extend=True))
        plain = IdealFile.read(FIXTURES / 'ci22.ideal', prime=7)
        self.assertEqual(plain.ring.field, make_field(7))

    def test_prime_override_needs_the_extension_to_exist(self):
        with self.assertRaises(Reducible):
            IdealFile.read(FIXTURES / 'tau.ideal', prime=11)

    def test_to_spec(self):
        spec = IdealFile.read(FIXTURES / 'ci33.ideal').to_spec()
        self.assertEqual(spec.candidate.text, "x + y")
        spec = IdealFile.read(FIXTURES / 'ci22.ideal').to_spec()
        self.assertEqual(spec.candidate.text, "y")

    def test_errors_carry_line_numbers(self):
        cases = [
            ("field: GF(7)\nvars: x > y\nx^2\nx + z\n", ParseError, 4),
            ("field: GF(7)\nvars: x > y\nx^2 + y\n", NonHomogeneousInput, 3),
            ("field: GF(7)\nvars: x > y\ntau*x\n", ExtensionRequired, 3),
            ("field: GF(7)\nvars: x > y\nx^2\nvars: x > z\n", ParseError, 4),
            ("field: GF(7)\nvars: x > x\nx^2\n", ParseError, 3),
            ("field: GF(7)\nvars: x > y\norder: deglex\nx^2\n", ParseError, 3),
        ]
        for text, error, line in cases:
            with self.assertRaises(error, msg=text) as cm:
                IdealFile.from_text(text)
            self.assertEqual(cm.exception.line, line, text)

    def test_missing_headers(self):
        with self.assertRaises(ParseError):
            IdealFile.from_text("x^2\n")
        with self.assertRaises(ParseError):
            IdealFile.from_text("field: GF(7)\n")

    def test_header_without_generators(self):
        with self.assertRaises(ParseError):
            IdealFile.from_text("field: GF(7)\nvars: x > y\n")
        with self.assertRaises(ParseError):
            IdealFile.from_text("field: GF(7)\nvars: x > y\nlefschetz: x + y\n")

    def test_empty_variable_list(self):
        with self.assertRaises(ParseError) as cm:
            IdealFile.from_text("field: GF(7)\nvars:\nx^2\n")
        self.assertEqual(cm.exception.line, 2)

    def test_non_utf8_file(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / 'latin1.ideal'
            path.write_bytes(b"# caf\xe9\nfield: GF(7)\nvars: x > y\nx^2\ny^2\n")
            with self.assertRaises(ParseError):
                IdealFile.read(path)

    def test_tau_over_split_prime_field(self):
        ideal = IdealFile.from_text("field: GF(11)\nvars: x > y\ntau*x - y\n")
        tau = ideal.ring.field.tau()
        self.assertEqual(tau * tau - tau - 1, ideal.ring.field.zero())
        self.assertEqual(ideal.generators[0].coefficients()[0], tau)


if __name__ == '__main__':
    unittest.main()
