import json

import numpy as np
import pytest

from liereach import ParseError, ValidationError, parse_document, serialize_document
from liereach.document import AnalysisDocument, DocumentOptions
from support import five_level_ladder


def ladder_document_text():
    system = five_level_ladder()
    body = {
        "system": {
            "h0": [[v.real for v in row] for row in system.h0],
            "controls": [[[v.real for v in row] for row in system.controls[0]]],
        },
        "states": {
            "ground": [[1.0 if i == j == 0 else 0.0 for j in range(5)] for i in range(5)],
        },
        "options": {"seed": 5, "budget": 50},
    }
    return json.dumps(body)


class TestParse:
    def test_system_document(self):
        doc = parse_document(ladder_document_text())
        assert doc.system is not None and doc.system.dim == 5
        assert set(doc.states) == {"ground"}
        assert doc.options.seed == 5 and doc.options.budget == 50

    def test_states_only_document(self):
        doc = parse_document('{"states": {"mixed": [[0.5, 0], [0, 0.5]]}}')
        assert doc.system is None
        assert np.allclose(doc.states["mixed"], np.eye(2) / 2)

    def test_complex_entries(self):
        text = '{"states": {"rho": [[[0.5, 0], [0, -0.5]], [[0, 0.5], [0.5, 0]]]}}'
        doc = parse_document(text)
        assert doc.states["rho"][0, 1] == -0.5j

    def test_malformed_json_reports_line(self):
        with pytest.raises(ParseError, match="line"):
            parse_document('{"states": \n  oops}')

    def test_non_hermitian_hamiltonian_named(self):
        text = '{"system": {"h0": [[0, 1], [0, 0]]}}'
        with pytest.raises(ValidationError, match="h0"):
            parse_document(text)

    def test_invalid_state_named(self):
        text = '{"states": {"bad": [[0.9, 0], [0, 0.9]]}}'
        with pytest.raises(ValidationError, match="bad"):
            parse_document(text)

    def test_duplicate_names_rejected(self):
        text = '{"states": {"a": [[1, 0], [0, 0]], "a": [[0, 0], [0, 1]]}}'
        with pytest.raises(ParseError, match="duplicate"):
            parse_document(text)

    def test_mixed_dimensions_rejected(self):
        text = ('{"states": {"a": [[1, 0], [0, 0]], '
                '"b": [[1, 0, 0], [0, 0, 0], [0, 0, 0]]}}')
        with pytest.raises(ValidationError, match="dimension"):
            parse_document(text)

    def test_non_square_rejected(self):
        with pytest.raises(ParseError, match="square"):
            parse_document('{"states": {"a": [[1, 0]]}}')

    def test_unknown_tolerance_rejected(self):
        with pytest.raises(ParseError, match="tolerance"):
            parse_document('{"options": {"tolerances": {"bogus": 1}}}')

    def test_tolerance_override(self):
        doc = parse_document('{"options": {"tolerances": {"rank": 1e-7}}}')
        assert doc.options.tolerances.rank == 1e-7


class TestRoundTrip:
    def test_round_trip_values(self):
        doc = parse_document(ladder_document_text())
        again = parse_document(serialize_document(doc))
        assert np.array_equal(again.system.h0, doc.system.h0)
        assert np.array_equal(again.system.controls[0], doc.system.controls[0])
        assert np.array_equal(again.states["ground"], doc.states["ground"])
        assert again.options == doc.options

    def test_round_trip_complex(self, rng):
        z = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
        rho = z @ z.conj().T
        rho = rho / np.trace(rho)
        doc = AnalysisDocument(states={"rho": rho}, options=DocumentOptions())
        again = parse_document(serialize_document(doc))
        assert np.array_equal(again.states["rho"], rho)
