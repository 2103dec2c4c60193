"""Unit tests for report documents, schema validation and exports."""

import json
import tempfile
import unittest
from pathlib import Path

from src.models.errors import NotLinear, ParseError, ZeroCandidate
from src.models.groebner import HilbertFunction
from src.models.ideal_file import IdealFile
from src.models.polynomial import Polynomial
from src.models.report import CandidateElement, validate_report_dict
from src.services import exporter
from src.services.groebner import buchberger
from src.services.lefschetz import check_spec
from src.services.persistence import TableStore

FIXTURES = Path(__file__).parent.parent / 'fixtures'


class TestReportDocument(unittest.TestCase):
    """Tests for ReportDocument serialization and validation."""

    def setUp(self):
        self.store = TableStore()
        self.schema = self.store.load_report_schema()
        self.ideal = IdealFile.read(FIXTURES / 'ci22.ideal')
        self.spec = self.ideal.to_spec()

    def _document(self, weak=False):
        report = check_spec(self.spec, weak=weak)
        return exporter.build_document(report, self.spec.ring, self.ideal.input_hash(), "0.1.0")

    def test_document_fields(self):
        data = self._document().to_dict()
        self.assertEqual(data['version'], "1.0")
        self.assertEqual(data['prime'], 13)
        self.assertEqual(data['field'], "GF(13)")
        self.assertEqual(data['mode'], 'strong')
        self.assertFalse(data['verdict'])
        self.assertEqual(data['hilbert'], [1, 2, 1])
        self.assertEqual(data['first_failure'], {'i': 0, 's': 2})
        self.assertEqual(data['checks'][0]['witness'], "1")
        self.assertEqual(data['gb_stats']['size'], 2)
        self.assertIsNone(data['oracle'])
        self.assertEqual(len(data['input_hash']), 64)

    def test_documents_match_the_schema(self):
        for weak in (False, True):
            validate_report_dict(self._document(weak).to_dict(), self.schema)

    def _assert_violation(self, data, fragment):
        with self.assertRaises(ParseError) as cm:
            validate_report_dict(data, self.schema)
        self.assertIn(fragment, cm.exception.message)

    def test_schema_violations(self):
        data = self._document().to_dict()
        del data['verdict']
        self._assert_violation(data, "verdict")

        data = self._document().to_dict()
        data['verdict'] = "yes"
        self._assert_violation(data, "verdict")

        data = self._document().to_dict()
        data['checks'][0]['rank'] = True
        self._assert_violation(data, "checks/0/rank")

        data = self._document().to_dict()
        data['version'] = "0.9"
        self._assert_violation(data, "version")

        data = self._document().to_dict()
        data['timings']['warmup'] = 1.0
        self._assert_violation(data, "warmup")

        data = self._document().to_dict()
        data['mode'] = 'medium'
        self._assert_violation(data, "mode")

    def test_null_sections_are_allowed(self):
        data = self._document().to_dict()
        data['gb_stats'] = None
        data['oracle'] = True
        validate_report_dict(data, self.schema)

    def test_reruns_are_identical_except_timings(self):
        self.assertEqual(self._document().non_timing_dict(), self._document().non_timing_dict())

    def test_candidate_validation(self):
        ring = self.spec.ring
        with self.assertRaises(ZeroCandidate):
            CandidateElement(Polynomial.zero(ring))
        with self.assertRaises(NotLinear):
            CandidateElement(Polynomial.variable(ring, 'x') ** 2)
        self.assertTrue(CandidateElement(Polynomial.variable(ring, 'y')).is_last_variable)
        self.assertFalse(CandidateElement(Polynomial.variable(ring, 'x')).is_last_variable)


class TestExporter(unittest.TestCase):
    """Tests for JSON rendering, GB dumps and Hilbert text."""

    def setUp(self):
        ideal = IdealFile.read(FIXTURES / 'ci33.ideal')
        self.spec = ideal.to_spec()
        report = check_spec(self.spec)
        self.document = exporter.build_document(report, self.spec.ring, ideal.input_hash(), "0.1.0")

    def test_render_single_and_multiple_runs(self):
        single = json.loads(exporter.render_json([self.document]))
        self.assertTrue(single['verdict'])
        several = json.loads(exporter.render_json([self.document, self.document]))
        self.assertEqual(len(several['runs']), 2)

    def test_exit_code(self):
        self.assertEqual(exporter.exit_code([self.document]), 0)

    def test_summary(self):
        summary = exporter.render_summary(self.document)
        self.assertIn("PASS", summary)
        self.assertIn("1 2 3 2 1", summary)

    def test_validate_documents(self):
        exporter.validate_documents([self.document], TableStore())

    def test_validate_documents_against_a_stricter_schema(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / 'schema.yaml'
            path.write_text("type: object\nproperties:\n  socle: {maximum: 2}\n")
            with self.assertRaises(ParseError):
                exporter.validate_documents([self.document], TableStore(schema_file=str(path)))

    def test_gb_dump(self):
        ideal = IdealFile.read(FIXTURES / 'small.ideal')
        basis = buchberger(ideal.generators, ideal.ring)
        self.assertEqual(
            exporter.gb_dump_text(basis),
            "field: GF(13)\nvars: x > y\norder: grevlex\nx + y\ny^2\n",
        )
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / 'gb.ideal'
            exporter.write_gb_dump(basis, path)
            self.assertEqual(list(IdealFile.read(path).generators), basis.polynomials)

    def test_hilbert_text(self):
        self.assertEqual(exporter.hilbert_text(HilbertFunction((1, 2, 3, 2, 1))), "1 2 3 2 1\nsymmetric: yes")
        self.assertEqual(exporter.hilbert_text(HilbertFunction((1, 2, 1, 1))), "1 2 1 1\nsymmetric: no")
        self.assertEqual(exporter.hilbert_dict(HilbertFunction((1, 2, 1))),
                         {'hilbert': [1, 2, 1], 'symmetric': True, 'socle': 2})


if __name__ == '__main__':
    unittest.main()
