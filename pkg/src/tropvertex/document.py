"""Serialization of scattering diagrams to a versioned JSON document.

Rationals are serialized as decimal strings (numerator, denominator) because
wall-function coefficients overflow 64-bit integers quickly.  Walls appear in
decreasing slope order, matching the ordered product read left to right, and
the byte output is deterministic for fixed input.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .permissible import Classification, classify
from .scatter import ScatteringDiagram
from .series import UniSeries
from .vertexgroup import Direction

__all__ = [
    "SCHEMA_VERSION",
    "diagram_to_document",
    "document_to_diagram",
    "document_to_json_bytes",
    "json_bytes_to_document",
    "diagram_to_text",
]

SCHEMA_VERSION = "1"

_CLASSIFICATION_NAMES = {
    Classification.DISCRETE_A: "DiscreteA",
    Classification.DISCRETE_B: "DiscreteB",
    Classification.CONE_INTERIOR: "ConeInterior",
    Classification.CONE_BOUNDARY: "ConeBoundary",
    Classification.NOT_PERMISSIBLE: "NotPermissible",
}


def _function_entries(f: UniSeries) -> List[Tuple[int, str, str]]:
    return [
        (k, str(f.coeffs[k].numerator), str(f.coeffs[k].denominator))
        for k in sorted(f.coeffs)
    ]


def diagram_to_document(
    diagram: ScatteringDiagram,
    ell1: int,
    ell2: int,
    p1_coeffs: Optional[Sequence[Fraction]] = None,
    p2_coeffs: Optional[Sequence[Fraction]] = None,
) -> dict:
    """Build the JSON-ready document.  ell1, ell2 are the generator degrees,
    used for per-wall classification; coefficient lists are recorded when the
    generators are not the standard binomial powers."""
    doc: dict = {
        "schema_version": SCHEMA_VERSION,
        "ell1": ell1,
        "ell2": ell2,
        "order": diagram.order,
    }
    if p1_coeffs is not None:
        doc["p1"] = [[str(Fraction(c).numerator), str(Fraction(c).denominator)] for c in p1_coeffs]
    if p2_coeffs is not None:
        doc["p2"] = [[str(Fraction(c).numerator), str(Fraction(c).denominator)] for c in p2_coeffs]
    walls = []
    for d, f in diagram.walls.items():
        walls.append({
            "a": d.a,
            "b": d.b,
            "classification": _CLASSIFICATION_NAMES[classify(ell1, ell2, d.a, d.b)],
            "f": [[k, num, den] for (k, num, den) in _function_entries(f)],
        })
    doc["walls"] = walls
    return doc


def document_to_diagram(doc: dict) -> ScatteringDiagram:
    """Exact inverse of diagram_to_document on the wall data."""
    if doc.get("schema_version") != SCHEMA_VERSION:
        raise ValueError(f"unsupported schema version {doc.get('schema_version')!r}")
    order = doc["order"]
    walls: Dict[Direction, UniSeries] = {}
    for w in doc["walls"]:
        d = Direction(w["a"], w["b"])
        coeffs = {k: Fraction(int(num), int(den)) for k, num, den in w["f"]}
        walls[d] = UniSeries(order // (d.a + d.b), coeffs)
    return ScatteringDiagram(order, walls)


def document_to_json_bytes(doc: dict) -> bytes:
    return (json.dumps(doc, indent=2, sort_keys=False) + "\n").encode("ascii")


def json_bytes_to_document(data: bytes) -> dict:
    return json.loads(data.decode("ascii"))


def _ray_label(a: int, b: int, k: int = 1) -> str:
    """The monomial (tx)^{ak}(ty)^{bk} that z^k stands for on the ray (a,b)."""
    def power(base: str, e: int) -> str:
        return f"({base})^{e}" if e != 1 else f"({base})"
    return power("tx", a * k) + power("ty", b * k)


def diagram_to_text(diagram: ScatteringDiagram) -> str:
    """Aligned table of direction -> wall function, largest slope first."""
    rows = [
        (str(d), f.format(), f"z = {_ray_label(d.a, d.b)}")
        for d, f in diagram.walls.items()
    ]
    if not rows:
        return f"# order N = {diagram.order}\n(no nontrivial walls)\n"
    w0 = max(len(r[0]) for r in rows)
    w1 = max(len(r[1]) for r in rows)
    lines = [f"# order N = {diagram.order}; on each ray (a,b), z stands for (tx)^a(ty)^b"]
    for r in rows:
        lines.append(f"{r[0]:<{w0}}: {r[1]:<{w1}}  [{r[2]}]")
    return "\n".join(lines) + "\n"
