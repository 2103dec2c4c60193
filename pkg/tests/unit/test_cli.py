"""Unit tests for the slpcheck command line."""

import json
import tempfile
import unittest
from pathlib import Path

from click.testing import CliRunner

from src.cli.main import Context, cli
from src.models.ideal_file import IdealFile
from src.services.persistence import TableStore

FIXTURES = Path(__file__).parent.parent / 'fixtures'


class TestCheckCommand(unittest.TestCase):
    """Tests for `slpcheck check`."""

    def setUp(self):
        self.runner = CliRunner()

    def _run(self, *args):
        result = self.runner.invoke(cli, ['-q', *args])
        return result, result.stdout

    def test_passing_ideal(self):
        result, out = self._run('check', '--ideal', str(FIXTURES / 'ci33.ideal'))
        self.assertEqual(result.exit_code, 0, out)
        data = json.loads(out)
        self.assertTrue(data['verdict'])
        self.assertEqual(data['candidate'], "x + y")
        self.assertEqual(data['hilbert'], [1, 2, 3, 2, 1])
        self.assertIn('construction', data['timings'])

    def test_failing_ideal(self):
        result, out = self._run('check', '--ideal', str(FIXTURES / 'ci22.ideal'))
        self.assertEqual(result.exit_code, 1)
        self.assertEqual(json.loads(out)['first_failure'], {'i': 0, 's': 2})

    def test_candidate_last_variable_witness(self):
        result, out = self._run('check', '--ideal', str(FIXTURES / 'ci22.ideal'), '--candidate', 'y')
        self.assertEqual(result.exit_code, 1)
        data = json.loads(out)
        self.assertEqual(data['first_failure'], {'i': 0, 's': 2})
        self.assertEqual(data['checks'][0]['witness'], "1")

    def test_repeated_coordinate_candidate_fails(self):
        result, out = self._run('check', '--type', 'a3', '--candidate', 'x3', '--prime', '7', '--confirm')
        self.assertEqual(result.exit_code, 1)
        self.assertFalse(json.loads(out)['oracle'])

    def test_weak(self):
        result, out = self._run('check', '--ideal', str(FIXTURES / 'ci22.ideal'), '--weak')
        self.assertEqual(result.exit_code, 0)
        self.assertEqual(json.loads(out)['mode'], 'weak')

    def test_candidate_with_oracle(self):
        result, out = self._run('check', '--type', 'a3', '--candidate', 'x1 + 2*x2 + 3*x3', '--confirm')
        self.assertEqual(result.exit_code, 0, out)
        data = json.loads(out)
        self.assertTrue(data['oracle'])
        self.assertIn('oracle', data['timings'])

    def test_several_primes(self):
        result, out = self._run('check', '--type', 'a3', '-p', '7', '-p', '13')
        self.assertEqual(result.exit_code, 1)
        runs = json.loads(out)['runs']
        self.assertEqual([run['prime'] for run in runs], [7, 13])
        self.assertFalse(any(run['verdict'] for run in runs))

    def test_prime_override_on_file(self):
        result, out = self._run('check', '--ideal', str(FIXTURES / 'ci33.ideal'), '-p', '7')
        self.assertEqual(result.exit_code, 0, out)
        self.assertEqual(json.loads(out)['field'], "GF(7)")

    def test_algebra_error(self):
        result, out = self._run('check', '--type', 'ci:2,2', '-p', '4')
        self.assertEqual(result.exit_code, 2)
        self.assertEqual(json.loads(out)['error']['code'], 'NotPrime')

    def test_parse_error_reports_the_line(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / 'bad.ideal'
            path.write_text("field: GF(7)\nvars: x > y\nx^2\nx*w\n")
            result, out = self._run('check', '--ideal', str(path))
        self.assertEqual(result.exit_code, 2)
        error = json.loads(out)['error']
        self.assertEqual(error['code'], 'ParseError')
        self.assertEqual(error['line'], 4)

    def test_not_artinian(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / 'line.ideal'
            path.write_text("field: GF(7)\nvars: x > y\nx^2\n")
            result, out = self._run('check', '--ideal', str(path))
        self.assertEqual(result.exit_code, 2)
        self.assertEqual(json.loads(out)['error']['code'], 'NotArtinian')

    def test_non_utf8_file(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / 'latin1.ideal'
            path.write_bytes(b"# \xe9t\xe9\nfield: GF(7)\nvars: x > y\nx^2\ny^2\n")
            result, out = self._run('check', '--ideal', str(path))
        self.assertEqual(result.exit_code, 2)
        self.assertEqual(json.loads(out)['error']['code'], 'ParseError')

    def test_file_without_generators(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / 'empty.ideal'
            path.write_text("field: GF(7)\nvars: x > y\n")
            result, out = self._run('check', '--ideal', str(path))
        self.assertEqual(result.exit_code, 2)
        self.assertEqual(json.loads(out)['error']['code'], 'ParseError')

    def test_report_outside_schema(self):
        with tempfile.TemporaryDirectory() as tmp:
            schema = Path(tmp) / 'schema.yaml'
            schema.write_text("type: object\nrequired: [prime]\nproperties:\n  prime: {type: integer, maximum: 5}\n")
            context = Context()
            context.store = TableStore(schema_file=str(schema))
            result = self.runner.invoke(cli, ['-q', 'check', '--ideal', str(FIXTURES / 'ci33.ideal')],
                                        obj=context)
        self.assertEqual(result.exit_code, 2)
        error = json.loads(result.stdout)['error']
        self.assertEqual(error['code'], 'ParseError')
        self.assertIn('prime', error['message'])

    def test_source_is_required(self):
        result = self.runner.invoke(cli, ['check'])
        self.assertEqual(result.exit_code, 2)

    def test_emit_gb(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / 'gb.ideal'
            result, _ = self._run('check', '--type', 'ci:2,3', '--emit-gb', str(path))
            # x2^3 = 0, so the pair (0, 3) fails
            self.assertEqual(result.exit_code, 1)
            self.assertEqual([str(g) for g in IdealFile.read(path).generators], ["x1^2", "x2^3"])


class TestGbAndHilbertCommands(unittest.TestCase):
    """Tests for `slpcheck gb` and `slpcheck hilbert`."""

    def setUp(self):
        self.runner = CliRunner()

    def test_gb_to_stdout(self):
        result = self.runner.invoke(cli, ['-q', 'gb', '--ideal', str(FIXTURES / 'small.ideal')])
        self.assertEqual(result.exit_code, 0)
        self.assertEqual(result.stdout, "field: GF(13)\nvars: x > y\norder: grevlex\nx + y\ny^2\n")

    def test_gb_to_file(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / 'a3.ideal'
            result = self.runner.invoke(cli, ['-q', 'gb', '--type', 'a3', '-p', '7', '-o', str(path)])
            self.assertEqual(result.exit_code, 0)
            self.assertEqual(len(IdealFile.read(path).generators), 3)

    def test_hilbert_text(self):
        result = self.runner.invoke(cli, ['-q', 'hilbert', '--type', 'ci:2,2,2'])
        self.assertEqual(result.exit_code, 0)
        self.assertEqual(result.stdout, "1 3 3 1\nsymmetric: yes\n")

    def test_hilbert_ci33(self):
        result = self.runner.invoke(cli, ['-q', 'hilbert', '--type', 'ci:3,3'])
        self.assertEqual(result.stdout, "1 2 3 2 1\nsymmetric: yes\n")

    def test_hilbert_json(self):
        result = self.runner.invoke(cli, ['-q', '-j', 'hilbert', '--ideal', str(FIXTURES / 'ci33.ideal')])
        self.assertEqual(json.loads(result.stdout), {'hilbert': [1, 2, 3, 2, 1], 'symmetric': True, 'socle': 4})

    def test_version(self):
        result = self.runner.invoke(cli, ['--version'])
        self.assertEqual(result.exit_code, 0)
        self.assertIn("slpcheck", result.output)


if __name__ == '__main__':
    unittest.main()
