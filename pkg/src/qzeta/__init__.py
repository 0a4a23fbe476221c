"""Quaternionic second weighted zeta functions of graphs."""

__version__ = "0.1.0"

from .errors import (CapacityError, DomainError, EmptyWordError, GuardWarning,
                     MissingWeightError, NumericalError, ParseError, QZetaError,
                     ShapeError, SizeError, StructureError, ValidationError)
from .quaternion import Quaternion
from .qmatrix import QMatrix, psi, qmatmul, sdet, sdet_triangular
from .graph import (Graph, WeightAssignment, complete_graph, cycle_graph, parse_graph,
                    parse_weights, path_graph)
from .zeta import check_identity, reciprocal_bass, reciprocal_hashimoto
from .euler import euler_reciprocal_truncated, lyndon_factorize, lyndon_generate

__all__ = [
    "CapacityError", "DomainError", "EmptyWordError", "GuardWarning", "MissingWeightError",
    "NumericalError", "ParseError", "QZetaError", "ShapeError", "SizeError",
    "StructureError", "ValidationError",
    "Quaternion", "QMatrix", "psi", "qmatmul", "sdet", "sdet_triangular",
    "Graph", "WeightAssignment", "complete_graph", "cycle_graph", "path_graph",
    "parse_graph", "parse_weights",
    "check_identity", "reciprocal_bass", "reciprocal_hashimoto",
    "euler_reciprocal_truncated", "lyndon_factorize", "lyndon_generate",
]
