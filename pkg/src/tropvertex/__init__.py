"""Exact scattering-diagram computations in the tropical vertex group.

Truncated bivariate power series over the rationals, formal symplectomorphism
arithmetic, ordered-product factorization of commutators into walls, analysis
of the resulting wall functions (log-coefficients, quiver Euler
characteristics, slope-1 closed forms), and an exact classification of the
permissible directions.
"""

from .series import Series, UniSeries, rational_binomial
from .vertexgroup import (
    Direction,
    VertexAutomorphism,
    Wall,
    generators,
    ordered_product,
    polynomial_generators,
    symplectic_check,
    wall_to_automorphism,
)
from .scatter import (
    FactorizationError,
    ScatteringDiagram,
    commutator,
    factorize,
    verify_factorization,
)
from .analysis import (
    EulerSeries,
    Framing,
    GWCoefficients,
    euler_form,
    euler_series,
    fuss_catalan_series,
    gw_coefficients,
    semistable_exists,
    slope_one_series,
)
from .permissible import (
    Classification,
    OrderedPartitionPair,
    QuadraticData,
    R_eval,
    classify,
    discrete_series,
    permissibility_oracle,
    permissible_set,
    quadratic_data,
    reflection_r,
    t1,
    t2,
    witness_k_bound,
)
from .document import (
    SCHEMA_VERSION,
    diagram_to_document,
    diagram_to_text,
    document_to_diagram,
    document_to_json_bytes,
    json_bytes_to_document,
)

__version__ = "1.0.0"

__all__ = [
    "Series", "UniSeries", "rational_binomial",
    "Direction", "VertexAutomorphism", "Wall", "generators", "ordered_product",
    "polynomial_generators", "symplectic_check", "wall_to_automorphism",
    "FactorizationError", "ScatteringDiagram", "commutator", "factorize",
    "verify_factorization",
    "EulerSeries", "Framing", "GWCoefficients", "euler_form", "euler_series",
    "fuss_catalan_series", "gw_coefficients", "semistable_exists", "slope_one_series",
    "Classification", "OrderedPartitionPair", "QuadraticData", "R_eval", "classify",
    "discrete_series", "permissibility_oracle", "permissible_set", "quadratic_data",
    "reflection_r", "t1", "t2", "witness_k_bound",
    "SCHEMA_VERSION", "diagram_to_document", "diagram_to_text", "document_to_diagram",
    "document_to_json_bytes", "json_bytes_to_document",
    "__version__",
]
