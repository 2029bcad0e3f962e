"""JSON document round trips, determinism, and text rendering."""

from fractions import Fraction

import pytest

from tropvertex.document import (
    SCHEMA_VERSION,
    diagram_to_document,
    diagram_to_text,
    document_to_diagram,
    document_to_json_bytes,
    json_bytes_to_document,
)
from tropvertex.scatter import commutator, factorize
from tropvertex.vertexgroup import Direction, generators


def diagram(ell1, ell2, order):
    S, T = generators(ell1, ell2, order)
    return factorize(commutator(S, T))


def test_round_trip_exact():
    d = diagram(2, 2, 12)
    doc = diagram_to_document(d, 2, 2)
    data = document_to_json_bytes(doc)
    back = document_to_diagram(json_bytes_to_document(data))
    assert back == d


def test_deterministic_bytes():
    d = diagram(2, 3, 8)
    assert document_to_json_bytes(diagram_to_document(d, 2, 3)) == \
        document_to_json_bytes(diagram_to_document(diagram(2, 3, 8), 2, 3))


def test_walls_sorted_by_decreasing_slope():
    doc = diagram_to_document(diagram(2, 2, 12), 2, 2)
    slopes = [Fraction(w["b"], w["a"]) for w in doc["walls"]]
    assert slopes == sorted(slopes, reverse=True)
    assert doc["schema_version"] == SCHEMA_VERSION
    assert doc["order"] == 12


def test_classification_field():
    doc = diagram_to_document(diagram(2, 2, 12), 2, 2)
    by_dir = {(w["a"], w["b"]): w["classification"] for w in doc["walls"]}
    assert by_dir[(1, 1)] == "ConeBoundary"
    assert by_dir[(1, 2)] == "DiscreteA"
    assert by_dir[(2, 1)] == "DiscreteB"


def test_rationals_as_strings():
    doc = diagram_to_document(diagram(2, 2, 12), 2, 2)
    for w in doc["walls"]:
        for k, num, den in w["f"]:
            assert isinstance(k, int)
            assert isinstance(num, str) and isinstance(den, str)
            int(num), int(den)


def test_unsupported_schema_rejected():
    doc = diagram_to_document(diagram(1, 1, 6), 1, 1)
    doc["schema_version"] = "999"
    with pytest.raises(ValueError):
        document_to_diagram(doc)


def test_text_table():
    text = diagram_to_text(diagram(1, 1, 6))
    assert "(1,1): 1 + z" in text
    assert "(tx)(ty)" in text


def test_polynomial_coefficients_recorded():
    d = diagram(1, 1, 6)
    doc = diagram_to_document(d, 1, 1, [Fraction(1), Fraction(1)], [Fraction(1), Fraction(1)])
    assert doc["p1"] == [["1", "1"], ["1", "1"]]
    assert document_to_diagram(doc).walls == {
        Direction(1, 1): d.walls[Direction(1, 1)]}
